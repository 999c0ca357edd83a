#include "prefixgroup/corpus.hpp"

#include <chrono>
#include <exception>
#include <optional>
#include <tuple>

#include "prefixgroup/compression.hpp"
#include "prefixgroup/random.hpp"
#include "prefixgroup/witnesses.hpp"

namespace prefixgroup {

namespace {

// A case body returns an empty string on success, or a description of the
// first violated check.
using CaseFn = std::function<std::string(Rng &, std::size_t)>;

SuiteResult run_suite(const std::string &name, const CorpusOptions &opt, std::uint64_t stream,
                      std::size_t cases, const CaseFn &body) {
  SuiteResult r;
  r.name = name;
  Rng rng(opt.seed * 0x9E3779B97F4A7C15ULL + stream);
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < cases; ++i) {
    std::string failure;
    try {
      failure = body(rng, i);
    } catch (const std::exception &e) {
      failure = std::string("exception: ") + e.what();
    }
    ++r.cases;
    if (!failure.empty()) {
      if (r.failures++ == 0) r.first_failure = "case " + std::to_string(i) + ": " + failure;
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

#define CHECK_OR_RETURN(cond, msg) \
  do {                             \
    if (!(cond)) return (msg);     \
  } while (0)


}  // namespace

SuiteResult suite_group_laws(const CorpusOptions &opt, std::size_t cases) {
  return run_suite("group-laws", opt, 1, cases, [&](Rng &rng, std::size_t) -> std::string {
    const int k = opt.arity;
    const PrefixMap f = random_element(rng, k, opt.depth);
    const PrefixMap g = random_element(rng, k, opt.depth);
    const PrefixMap h = random_element(rng, k, opt.depth);
    CHECK_OR_RETURN(compose(compose(f, g), h) == compose(f, compose(g, h)),
                    "associativity fails for " + f.str() + ", " + g.str() + ", " + h.str());
    CHECK_OR_RETURN(compose(g, invert(g)).is_identity(), "g g^-1 != 1 for " + g.str());
    CHECK_OR_RETURN(compose(invert(g), g).is_identity(), "g^-1 g != 1 for " + g.str());
    const auto refined = random_refinement(rng, g, 1 + static_cast<int>(rng.below(4)));
    CHECK_OR_RETURN(PrefixMap::reduce(refined, k) == g, "refinement does not reduce to " + g.str());
    return {};
  });
}

SuiteResult suite_decompose2(const CorpusOptions &opt, std::size_t cases) {
  return run_suite("decompose2", opt, 2, cases, [&](Rng &rng, std::size_t) -> std::string {
    const PrefixMap g = random_nonidentity(rng, opt.arity, opt.depth);
    const ClopenSet z = moved_cylinder(g);
    CHECK_OR_RETURN(are_disjoint(z, image_clopen(g, z)), "moved cylinder not moved: " + g.str());
    const PrefixMap s = sigma_swap(g, z);
    CHECK_OR_RETURN(compose(s, s).is_identity(), "sigma not an involution: " + g.str());
    CHECK_OR_RETURN(in_rist(s, set_union(z, image_clopen(g, z))), "sigma support: " + g.str());
    const auto d = decompose2(g);
    CHECK_OR_RETURN(compose(d.s1, d.s2) == g, "s1 s2 != g for " + g.str());
    CHECK_OR_RETURN(d.w1.is_proper() && d.w2.is_proper(), "improper support: " + g.str());
    CHECK_OR_RETURN(in_rist(d.s1, d.w1) && in_rist(d.s2, d.w2), "rist membership: " + g.str());
    return {};
  });
}

SuiteResult suite_transporter(const CorpusOptions &opt, std::size_t cases) {
  return run_suite("transporter", opt, 3, cases, [&](Rng &rng, std::size_t) -> std::string {
    const ClopenSet y = random_proper_clopen(rng, opt.arity, opt.depth);
    ClopenSet o = random_clopen(rng, opt.arity, opt.depth);
    if (o.is_empty()) o = ClopenSet::full(opt.arity);
    const PrefixMap h = transporter(y, o);
    CHECK_OR_RETURN(is_subset(image_clopen(h, y), o), "h(Y) not in O for " + y.str() + ", " + o.str());
    return {};
  });
}

SuiteResult suite_wandering(const CorpusOptions &opt, std::size_t cases) {
  return run_suite("wandering", opt, 4, cases, [&](Rng &rng, std::size_t i) -> std::string {
    const ClopenSet y = random_proper_clopen(rng, opt.arity, opt.depth);
    const auto w = wandering_witness(y);
    CHECK_OR_RETURN(orbit_pairwise_disjoint(w.g, y, opt.orbit_window),
                    "orbit of " + y.str() + " not pairwise disjoint");
    if (i % 10 == 0) {
      // Conjugates of a rist(Y) element by distinct powers commute.
      const PrefixMap a = random_rist_element(rng, y, opt.depth);
      for (int m = -3; m <= 3; ++m) {
        for (int n = m + 1; n <= 3; ++n) {
          const PrefixMap am = conjugate(power(w.g, m), a);
          const PrefixMap an = conjugate(power(w.g, n), a);
          CHECK_OR_RETURN(commutator(am, an).is_identity(),
                          "conjugates do not commute for " + y.str());
        }
      }
    }
    return {};
  });
}

SuiteResult suite_join_compression(const CorpusOptions &opt, std::size_t cases) {
  return run_suite("join-compression", opt, 5, cases, [&](Rng &rng, std::size_t) -> std::string {
    const auto [y, z] = random_disjoint_pair(rng, opt.arity, opt.depth);
    const PrefixMap g = join_compression(y, z);
    CHECK_OR_RETURN(is_subset(image_clopen(g, set_union(y, z)), y),
                    "g(Y u Z) not in Y for " + y.str() + ", " + z.str());
    return {};
  });
}

SuiteResult suite_shift_identity(const CorpusOptions &opt, std::size_t cases) {
  return run_suite("shift-identity", opt, 6, cases, [&](Rng &rng, std::size_t) -> std::string {
    const ClopenSet y = random_proper_clopen(rng, opt.arity, opt.depth);
    const PrefixMap a = random_rist_element(rng, y, opt.depth);
    const PrefixMap b = random_rist_element(rng, y, opt.depth);
    const auto r = shift_identity_check(a, b, y);
    CHECK_OR_RETURN(r.holds, "[a,b] != [[a,g],[b,g^2]] on " + y.str());
    return {};
  });
}

namespace {

struct WitnessInput {
  PrefixMap a, b;
  ClopenSet ya, yb;
};

// Alternates between Ya ∪ Yb ≠ X (even cases) and Ya ∪ Yb = X (odd cases).
WitnessInput random_witness_input(Rng &rng, const CorpusOptions &opt, bool union_full) {
  const int k = opt.arity;
  ClopenSet ya = random_proper_clopen(rng, k, opt.depth);
  ClopenSet yb(k);
  if (union_full) {
    yb = set_union(complement(ya), random_clopen(rng, k, opt.depth));
    if (yb.is_full()) yb = complement(ya);
  } else {
    do {
      yb = random_proper_clopen(rng, k, opt.depth);
    } while (set_union(ya, yb).is_full());
  }
  WitnessInput in{random_rist_element(rng, ya, opt.depth), random_rist_element(rng, yb, opt.depth),
                  ya, yb};
  return in;
}

std::string check_normal_word(const NormalWord &w, const PrefixMap &n, const PrefixMap &target,
                              std::size_t max_letters) {
  CHECK_OR_RETURN(w.base() == n, "base is not n");
  CHECK_OR_RETURN(w.size() <= max_letters, "too many letters: " + std::to_string(w.size()));
  for (const auto &l : w.letters()) {
    CHECK_OR_RETURN(l.exponent == 1 || l.exponent == -1, "bad exponent");
  }
  CHECK_OR_RETURN(eval_normal_word(w) == target, "normal word does not evaluate to [a,b]");
  return {};
}

}  // namespace

SuiteResult suite_monolith(const CorpusOptions &opt, std::size_t cases) {
  return run_suite("monolith-witness", opt, 7, cases, [&](Rng &rng, std::size_t i) -> std::string {
    const auto in = random_witness_input(rng, opt, i % 2 == 1);
    const PrefixMap n = random_nonidentity(rng, opt.arity, opt.depth);
    const NormalWord w = monolith_witness(in.a, in.ya, in.b, in.yb, n);
    return check_normal_word(w, n, commutator(in.a, in.b), 8);
  });
}

SuiteResult suite_simple_witness(const CorpusOptions &opt, std::size_t cases) {
  return run_suite("simple-witness", opt, 8, cases, [&](Rng &rng, std::size_t i) -> std::string {
    const auto in = random_witness_input(rng, opt, i % 2 == 1);
    PrefixMap x(opt.arity), y(opt.arity), n(opt.arity);
    do {
      x = random_element(rng, opt.arity, opt.depth);
      y = random_element(rng, opt.arity, opt.depth);
      n = commutator(x, y);
    } while (n.is_identity());
    const CommutatorWord n_cert{opt.arity, {{x, y}}};
    const auto sw = simple_witness(in.a, in.ya, in.b, in.yb, n, n_cert);
    const std::size_t bound = support_upper(n).is_proper() ? 8 : 16;
    if (auto f = check_normal_word(sw.word, n, commutator(in.a, in.b), bound); !f.empty()) return f;
    CHECK_OR_RETURN(sw.conj_certs.size() == sw.word.size(), "one certificate per letter");
    for (std::size_t j = 0; j < sw.word.size(); ++j) {
      CHECK_OR_RETURN(eval_commutator_word(sw.conj_certs[j]) == sw.word.letters()[j].conjugator,
                      "conjugator certificate " + std::to_string(j) + " is wrong");
    }
    return {};
  });
}

SuiteResult suite_derived_conjugator(const CorpusOptions &opt, std::size_t cases) {
  return run_suite("derived-conjugator", opt, 9, cases, [&](Rng &rng, std::size_t) -> std::string {
    const PrefixMap g = random_element(rng, opt.arity, opt.depth);
    const ClopenSet w = random_proper_clopen(rng, opt.arity, opt.depth);
    const auto dc = derived_conjugator(g, w);
    CHECK_OR_RETURN(dc.cert.factors.size() <= 2, "more than two factors");
    CHECK_OR_RETURN(eval_commutator_word(dc.cert) == dc.d, "certificate does not evaluate to d");
    CHECK_OR_RETURN(image_clopen(dc.d, w) == image_clopen(g, w),
                    "d(W) != g(W) for " + g.str() + ", " + w.str());
    return {};
  });
}

SuiteResult suite_cover3(const CorpusOptions &opt) {
  return run_suite("cover3", opt, 10, 1, [&](Rng &, std::size_t) -> std::string {
    const auto fam = min_cover_3(opt.arity);
    const auto m = fam.members();
    CHECK_OR_RETURN(set_union(set_union(fam.j[0], fam.j[1]), fam.j[2]).is_full(), "not a cover");
    for (int i = 0; i < 3; ++i) {
      const ClopenSet &other1 = fam.j[(i + 1) % 3], &other2 = fam.j[(i + 2) % 3];
      CHECK_OR_RETURN(fam.j[i].is_proper(), "member not proper");
      CHECK_OR_RETURN(!set_union(other1, other2).is_full(), "member not essential");
      CHECK_OR_RETURN(!fam.u[i].is_empty() && is_subset(fam.u[i], fam.j[i]), "U_i not in J_i");
      CHECK_OR_RETURN(are_disjoint(fam.u[i], set_union(other1, other2)), "U_i meets J_j");
    }
    for (const auto &p : m) {
      for (const auto &q : m) {
        bool found = false;
        for (const auto &u : fam.u) found = found || (are_disjoint(u, p) && are_disjoint(u, q));
        CHECK_OR_RETURN(found, "no private set avoids " + p.str() + " and " + q.str());
      }
    }
    return {};
  });
}

SuiteResult suite_claim1(const CorpusOptions &opt, std::size_t cases) {
  return run_suite("claim1", opt, 11, cases, [&](Rng &rng, std::size_t) -> std::string {
    auto [ia, ib, ic] = random_disjoint_triple(rng, opt.arity, opt.depth);
    const std::size_t m = static_cast<std::size_t>(opt.arity - 1);
    // For k > 2 only sets with congruent code sizes lie in one orbit.
    while (ia.code_size() % m != ib.code_size() % m) {
      std::tie(ia, ib, ic) = std::tuple_cat(random_disjoint_triple(rng, opt.arity, opt.depth));
    }
    const auto w = claim1_transporter(ia, ib, ic);
    CHECK_OR_RETURN(eval_commutator_word(w.cert) == w.e, "certificate does not evaluate to e");
    CHECK_OR_RETURN(w.cert.factors.size() == 1, "expected a single commutator");
    CHECK_OR_RETURN(in_rist(w.cert.factors[0].x, complement(ic)), "c moves IC");
    CHECK_OR_RETURN(eval_commutator_word(w.d_cert) == w.cert.factors[0].y, "d certificate");
    CHECK_OR_RETURN(fixes_pointwise(w.e, ic), "e moves IC");
    CHECK_OR_RETURN(image_clopen(w.e, ia) == ib,
                    "e(IA) != IB for " + ia.str() + ", " + ib.str() + ", " + ic.str());
    return {};
  });
}

SuiteResult suite_claim2(const CorpusOptions &opt, std::size_t cases) {
  const auto fam = min_cover_3(opt.arity);
  const auto members = fam.members();
  return run_suite("claim2", opt, 12, cases, [&](Rng &rng, std::size_t i) -> std::string {
    PrefixMap g(opt.arity);
    std::optional<CommutatorWord> g_cert;
    if (i % 2 == 0) {
      g = random_element(rng, opt.arity, opt.depth);
    } else {
      const PrefixMap x = random_element(rng, opt.arity, opt.depth);
      const PrefixMap y = random_element(rng, opt.arity, opt.depth);
      g_cert = CommutatorWord{opt.arity, {{x, y}}};
      g = eval_commutator_word(*g_cert);
    }
    const auto f = claim2_factorization(g, fam, g_cert);
    CHECK_OR_RETURN(compose(f.s[0], compose(f.s[1], f.s[2])) == g, "s1 s2 s3 != " + g.str());
    for (int j = 0; j < 3; ++j) {
      const int idx = f.fixed_member[j];
      CHECK_OR_RETURN(idx >= 0 && idx < 6, "bad member index");
      CHECK_OR_RETURN(fixes_pointwise(f.s[j], members[idx]),
                      "s" + std::to_string(j + 1) + " moves " + members[idx].str() + " for " + g.str());
    }
    if (g_cert) {
      CHECK_OR_RETURN(f.certs.has_value(), "missing factor certificates");
      for (int j = 0; j < 3; ++j) {
        CHECK_OR_RETURN(eval_commutator_word((*f.certs)[j]) == f.s[j], "factor certificate");
      }
    }
    return {};
  });
}

SuiteResult suite_claim3(const CorpusOptions &opt, std::size_t cases) {
  const auto fam = min_cover_3(opt.arity);
  const auto members = fam.members();
  return run_suite("claim3", opt, 13, cases, [&](Rng &rng, std::size_t) -> std::string {
    const PrefixMap g = random_element(rng, opt.arity, opt.depth);
    const PrefixMap h = random_element(rng, opt.arity, opt.depth);
    const auto w = claim3_witness(g, h, fam);
    const ClopenSet abc = set_union(set_union(w.ia, w.ib), w.ic);
    CHECK_OR_RETURN(!w.ia.is_empty() && !w.ib.is_empty() && !w.ic.is_empty(), "empty set");
    CHECK_OR_RETURN(are_disjoint(w.ia, w.ib) && are_disjoint(w.ia, w.ic) && are_disjoint(w.ib, w.ic),
                    "sets not disjoint");
    CHECK_OR_RETURN(!abc.is_full(), "IA u IB u IC = X");
    CHECK_OR_RETURN(fixes_pointwise(compose(w.c, g), w.ia), "cg moves IA");
    CHECK_OR_RETURN(fixes_pointwise(compose(w.c, h), w.ib), "ch moves IB");
    CHECK_OR_RETURN(fixes_pointwise(w.c, w.ic), "c moves IC");
    CHECK_OR_RETURN(w.f_table.size() == 6, "f_table needs 6 entries");
    for (const auto &e : w.f_table) {
      CHECK_OR_RETURN(are_disjoint(image_clopen(e.f, complement(members[e.member])), abc),
                      "f_table entry " + std::to_string(e.member));
    }
    return {};
  });
}

SuiteResult suite_commuting_chain(const CorpusOptions &opt, std::size_t cases) {
  return run_suite("commuting-chain", opt, 14, cases, [&](Rng &rng, std::size_t) -> std::string {
    const ClopenSet ya = random_proper_clopen(rng, opt.arity, opt.depth);
    const ClopenSet yb = random_proper_clopen(rng, opt.arity, opt.depth);
    const auto c = commuting_chain(ya, yb);
    const ClopenSet gya = image_clopen(c.g, ya), hya = image_clopen(c.h, ya);
    CHECK_OR_RETURN(are_disjoint(gya, ya), "g(Ya) meets Ya");
    CHECK_OR_RETURN(are_disjoint(hya, gya), "h(Ya) meets g(Ya)");
    CHECK_OR_RETURN(are_disjoint(hya, yb), "h(Ya) meets Yb");
    const PrefixMap a = random_rist_element(rng, ya, opt.depth);
    const PrefixMap b = random_rist_element(rng, yb, opt.depth);
    const PrefixMap ga = conjugate(c.g, a), ha = conjugate(c.h, a);
    CHECK_OR_RETURN(commutator(a, ga).is_identity() && commutator(ga, ha).is_identity() &&
                        commutator(ha, b).is_identity(),
                    "chain elements do not commute");
    return {};
  });
}

std::vector<SuiteResult> run_corpus(const CorpusOptions &opt) {
  return {suite_group_laws(opt),        suite_decompose2(opt),     suite_transporter(opt),
          suite_wandering(opt),         suite_join_compression(opt), suite_shift_identity(opt),
          suite_monolith(opt),          suite_simple_witness(opt), suite_derived_conjugator(opt),
          suite_cover3(opt),            suite_claim1(opt),         suite_claim2(opt),
          suite_claim3(opt),            suite_commuting_chain(opt)};
}

}  // namespace prefixgroup
