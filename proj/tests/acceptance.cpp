// Acceptance run: one line per criterion, non-zero exit if any fails.
// Each criterion runs the library's seeded suite (exact reduced-form checks)
// and then re-checks an independent sample by brute-force point evaluation.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracle.hpp"
#include "prefixgroup/certificate.hpp"
#include "prefixgroup/compression.hpp"
#include "prefixgroup/corpus.hpp"
#include "prefixgroup/literal.hpp"
#include "prefixgroup/random.hpp"
#include "prefixgroup/witnesses.hpp"

using namespace prefixgroup;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr std::size_t kDepth = 6;
// Pointwise checks enumerate k^len words; skip samples whose evaluation
// length would exceed this.
constexpr std::size_t kOracleMaxLen = 16;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string &why) {
    if (ok) detail = why;
    ok = false;
  }
  void add(const SuiteResult &r) {
    detail += (detail.empty() ? "" : ", ") + r.name + " " + std::to_string(r.cases - r.failures) +
              "/" + std::to_string(r.cases);
    if (!r.passed()) fail(r.name + ": " + r.first_failure);
  }
};

CorpusOptions options() { return {kSeed, 2, kDepth, 8}; }

bool small(std::size_t len) { return len <= kOracleMaxLen; }

std::size_t depth_sum(std::initializer_list<const PrefixMap *> gs) {
  std::size_t d = 0;
  for (const auto *g : gs) d += oracle::depth(*g);
  return d;
}

Outcome criterion_group_laws() {
  Outcome o;
  o.add(suite_group_laws(options(), 500));
  Rng rng(kSeed + 1);
  for (int i = 0; i < 60 && o.ok; ++i) {
    const PrefixMap f = random_element(rng, 2, kDepth), g = random_element(rng, 2, kDepth),
                    h = random_element(rng, 2, kDepth);
    const PrefixMap fg_h = compose(compose(f, g), h);
    if (small(depth_sum({&fg_h, &f, &g, &h})) && !oracle::equals_product(fg_h, {&f, &g, &h})) {
      o.fail("oracle: (fg)h differs pointwise from f(g(h))");
    }
    if (!oracle::is_identity(compose(g, invert(g)))) o.fail("oracle: g g^-1 not identity");
    if (!oracle::same_map(PrefixMap::reduce(random_refinement(rng, g, 4), 2), g)) {
      o.fail("oracle: refinement changes the map");
    }
  }
  return o;
}

Outcome criterion_decompose2() {
  Outcome o;
  o.add(suite_decompose2(options(), 500));
  Rng rng(kSeed + 2);
  for (int i = 0; i < 100 && o.ok; ++i) {
    const PrefixMap g = random_nonidentity(rng, 2, kDepth);
    const auto d = decompose2(g);
    if (!oracle::equals_product(g, {&d.s1, &d.s2})) o.fail("oracle: s1 s2 != g");
    if (!oracle::fixes_pointwise(d.s1, complement(d.w1)) ||
        !oracle::fixes_pointwise(d.s2, complement(d.w2))) {
      o.fail("oracle: rist membership");
    }
    const ClopenSet z = moved_cylinder(g);
    const PrefixMap s = sigma_swap(g, z);
    if (!oracle::equals_product(PrefixMap(2), {&s, &s})) o.fail("oracle: sigma^2 != 1");
  }
  return o;
}

Outcome criterion_compression() {
  Outcome o;
  o.add(suite_transporter(options(), 1000));
  o.add(suite_wandering(options(), 200));
  o.add(suite_join_compression(options(), 200));
  Rng rng(kSeed + 3);
  for (int i = 0; i < 100 && o.ok; ++i) {
    const ClopenSet y = random_proper_clopen(rng, 2, kDepth);
    const ClopenSet t = random_proper_clopen(rng, 2, kDepth);
    const PrefixMap h = transporter(y, t);
    if (small(oracle::depth(h) + oracle::depth(y) + oracle::depth(t)) &&
        !oracle::image_within(h, y, t)) {
      o.fail("oracle: transporter image escapes O");
    }
    const auto [a, b] = random_disjoint_pair(rng, 2, kDepth);
    const PrefixMap j = join_compression(a, b);
    if (small(oracle::depth(j) + 2 * kDepth) && !oracle::image_within(j, set_union(a, b), a)) {
      o.fail("oracle: join compression image escapes Y");
    }
  }
  // Structural orbit of the base wanderer, by point evaluation.
  const PrefixMap g0 = base_wanderer(2);
  std::vector<ClopenSet> orbit;
  for (int n = -8; n <= 8; ++n) orbit.push_back(image_clopen(power(g0, n), base_wandering_cylinder(2)));
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (std::size_t j = i + 1; j < orbit.size(); ++j) {
      if (!oracle::disjoint(orbit[i], orbit[j])) o.fail("oracle: base orbit overlaps");
    }
  }
  return o;
}

Outcome criterion_shift_identity() {
  Outcome o;
  o.add(suite_shift_identity(options(), 200));
  Rng rng(kSeed + 4);
  for (int i = 0; i < 40 && o.ok; ++i) {
    const ClopenSet y = random_proper_clopen(rng, 2, 4);
    const PrefixMap a = random_rist_element(rng, y, 4), b = random_rist_element(rng, y, 4);
    const auto r = shift_identity_check(a, b, y);
    const PrefixMap lhs = commutator(a, b);
    const PrefixMap rhs = commutator(commutator(a, r.g), commutator(b, power(r.g, 2)));
    if (small(oracle::depth(lhs) + oracle::depth(rhs)) && !oracle::same_map(lhs, rhs)) {
      o.fail("oracle: [a,b] and [[a,g],[b,g^2]] differ pointwise");
    }
  }
  return o;
}

Outcome criterion_monolith() {
  Outcome o;
  o.add(suite_monolith(options(), 200));
  Rng rng(kSeed + 5);
  std::size_t proper = 0, full = 0;
  for (int i = 0; i < 60 && o.ok; ++i) {
    const ClopenSet ya = random_proper_clopen(rng, 2, 4);
    ClopenSet yb = i % 2 == 0 ? random_proper_clopen(rng, 2, 4) : complement(ya);
    if (i % 2 == 0 && set_union(ya, yb).is_full()) continue;
    (set_union(ya, yb).is_full() ? full : proper) += 1;
    const PrefixMap a = random_rist_element(rng, ya, 4), b = random_rist_element(rng, yb, 4);
    const PrefixMap n = random_nonidentity(rng, 2, 4);
    const NormalWord w = monolith_witness(a, ya, b, yb, n);
    if (w.size() > 8) o.fail("more than 8 letters");
    const PrefixMap value = eval_normal_word(w);
    const PrefixMap ai = invert(a), bi = invert(b);
    if (small(oracle::depth(value) + depth_sum({&a, &b}) * 2) &&
        !oracle::equals_product(value, {&a, &b, &ai, &bi})) {
      o.fail("oracle: certificate value differs from [a,b]");
    }
    const PrefixMap ni = invert(n);
    for (std::size_t j = 0; j < w.size(); ++j) {
      const auto &l = w.letters()[j];
      const PrefixMap ci = invert(l.conjugator);
      const PrefixMap &nn = l.exponent > 0 ? n : ni;
      const PrefixMap lv = w.letter_value(j);
      if (small(oracle::depth(lv) + depth_sum({&l.conjugator, &nn, &ci})) &&
          !oracle::equals_product(lv, {&l.conjugator, &nn, &ci})) {
        o.fail("oracle: letter is not a conjugate of n^{+-1}");
      }
    }
  }
  if (proper == 0 || full == 0) o.fail("oracle sample missed a branch");
  return o;
}

Outcome criterion_derived_conjugator() {
  Outcome o;
  o.add(suite_derived_conjugator(options(), 300));
  Rng rng(kSeed + 6);
  for (int i = 0; i < 100 && o.ok; ++i) {
    const PrefixMap g = random_element(rng, 2, kDepth);
    const ClopenSet w = random_proper_clopen(rng, 2, kDepth);
    const auto dc = derived_conjugator(g, w);
    if (dc.cert.factors.size() > 2) o.fail("more than 2 factors");
    if (!oracle::image_equals(dc.d, w, image_clopen(g, w)) ||
        !oracle::image_equals(g, w, image_clopen(dc.d, w))) {
      o.fail("oracle: d(W) != g(W)");
    }
  }
  return o;
}

Outcome criterion_claims() {
  Outcome o;
  o.add(suite_cover3(options()));
  o.add(suite_claim1(options(), 100));
  o.add(suite_claim2(options(), 200));
  o.add(suite_claim3(options(), 100));
  const auto fam = min_cover_3(2);
  const auto members = fam.members();
  if (!oracle::same_set(set_union(set_union(fam.j[0], fam.j[1]), fam.j[2]), ClopenSet::full(2))) {
    o.fail("oracle: J1, J2, J3 do not cover");
  }
  Rng rng(kSeed + 7);
  for (int i = 0; i < 40 && o.ok; ++i) {
    const auto [ia, ib, ic] = random_disjoint_triple(rng, 2, kDepth);
    const auto c1 = claim1_transporter(ia, ib, ic);
    if (!oracle::image_equals(c1.e, ia, ib) || !oracle::fixes_pointwise(c1.e, ic)) {
      o.fail("oracle: claim1 postconditions");
    }
    const PrefixMap g = random_element(rng, 2, kDepth), h = random_element(rng, 2, kDepth);
    const auto f = claim2_factorization(g, fam);
    if (!oracle::equals_product(g, {&f.s[0], &f.s[1], &f.s[2]})) o.fail("oracle: s1 s2 s3 != g");
    for (int j = 0; j < 3; ++j) {
      if (!oracle::fixes_pointwise(f.s[j], members[f.fixed_member[j]])) {
        o.fail("oracle: claim2 membership");
      }
    }
    const auto c3 = claim3_witness(g, h, fam);
    const PrefixMap cg = compose(c3.c, g), ch = compose(c3.c, h);
    if (!oracle::fixes_pointwise(cg, c3.ia) || !oracle::fixes_pointwise(ch, c3.ib) ||
        !oracle::fixes_pointwise(c3.c, c3.ic) || c3.f_table.size() != 6) {
      o.fail("oracle: claim3 memberships");
    }
  }
  return o;
}

struct CliResult {
  int code;
  std::string out;
};

CliResult cli(const std::vector<std::string> &args, const std::string &in_text = "") {
  std::istringstream in(in_text);
  std::ostringstream out, err;
  const int code = pgw::run(args, in, out, err);
  return {code, out.str() + err.str()};
}

Outcome criterion_certificates() {
  Outcome o;
  Rng rng(kSeed + 8);
  std::vector<Certificate> emitted;
  auto emit = [&](std::vector<std::string> args) {
    args.insert(args.begin(), "--json");
    const auto r = cli(args);
    if (r.code != 0) {
      o.fail(args[1] + " failed: " + r.out);
      return;
    }
    const auto v = cli({"verify", "-"}, r.out);
    if (v.code != 0) o.fail(args[1] + " certificate does not verify: " + v.out);
    for (auto &c : parse_certificates(r.out)) emitted.push_back(std::move(c));
  };
  for (int i = 0; i < 15 && o.ok; ++i) {
    const PrefixMap g = random_nonidentity(rng, 2, 5);
    PrefixMap h = random_element(rng, 2, 5);
    while (commutator(g, h).is_identity()) h = random_element(rng, 2, 5);
    const ClopenSet w = random_proper_clopen(rng, 2, 5);
    emit({"decompose2", format(g)});
    emit({"derived-conj", format(g), format(w)});
    emit({"claim2", format(g)});
    emit({"claim3", format(g), format(h)});
    const auto [ia, ib, ic] = random_disjoint_triple(rng, 2, 5);
    emit({"claim1", format(ia), format(ib), format(ic)});
    const ClopenSet ya = random_proper_clopen(rng, 2, 4);
    const ClopenSet yb = i % 2 ? complement(ya) : random_proper_clopen(rng, 2, 4);
    const PrefixMap a = random_rist_element(rng, ya, 4), b = random_rist_element(rng, yb, 4);
    if (!set_union(ya, yb).is_full() || i % 2) {
      emit({"monolith-witness", format(a), format(ya), format(b), format(yb), format(g)});
      emit({"simple-witness", format(a), format(ya), format(b), format(yb), format(g), format(h)});
    }
  }
  // One mutation per kind; each must be rejected with exit 4.
  bool seen[3] = {false, false, false};
  for (const auto &c : emitted) {
    Certificate bad = c;
    int kind = -1;
    if (auto *w = std::get_if<NormalWord>(&bad.body);
        w && w->size() > 0 && !power(w->base(), 2).is_identity()) {
      auto letters = w->letters();
      letters[0].exponent = -letters[0].exponent;
      bad.body = NormalWord(w->base(), letters);
      kind = 0;
    } else if (auto *cw = std::get_if<CommutatorWord>(&bad.body); cw && !cw->empty()) {
      cw->factors.push_back({base_wanderer(2), cylinder_swap(Word("0"), Word("10"), 2)});
      kind = 1;
    } else if (auto *f = std::get_if<Factorization>(&bad.body); f && !f->factors.empty()) {
      f->factors[0].element = compose(f->factors[0].element, base_wanderer(2));
      kind = 2;
    }
    if (kind < 0 || seen[kind]) continue;
    seen[kind] = true;
    const auto v = cli({"verify", "-"}, to_json(bad));
    if (v.code != pgw::kVerificationFailure) {
      o.fail("mutated " + c.kind() + " certificate exited " + std::to_string(v.code));
    }
  }
  if (!(seen[0] && seen[1] && seen[2])) o.fail("not every certificate kind was mutated");
  if (o.ok) {
    o.detail = std::to_string(emitted.size()) + " certificates verified, 3 mutations rejected";
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char *name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "group laws", 5, criterion_group_laws},
      {2, "sigma and decompose2", 5, criterion_decompose2},
      {3, "compression", 10, criterion_compression},
      {4, "commutator shift identity", 5, criterion_shift_identity},
      {5, "monolith witnesses", 20, criterion_monolith},
      {6, "derived conjugators", 10, criterion_derived_conjugator},
      {7, "cover and claims 1-3", 20, criterion_claims},
      {8, "certificate round trip", 5, criterion_certificates},
  };
  int failures = 0;
  for (const auto &c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception &e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      out.fail("took " + std::to_string(secs) + "s, limit " + std::to_string(c.limit_seconds) + "s");
    }
    failures += out.ok ? 0 : 1;
    std::printf("[%s] criterion %d: %s (%.2fs) %s\n", out.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                out.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
