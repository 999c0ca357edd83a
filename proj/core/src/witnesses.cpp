#include "prefixgroup/witnesses.hpp"

#include <algorithm>
#include <stdexcept>

#include "prefixgroup/error.hpp"

namespace prefixgroup {

namespace {

void require(bool ok, ErrorKind kind, const std::string &what) {
  if (!ok) throw Error(kind, what);
}

void require_arity(int expected, int got) {
  require(expected == got, ErrorKind::ArityMismatch, "operands have different arities");
}

// Internal consistency: a construction produced something its proof says it cannot.
void ensure(bool ok, const char *what) {
  if (!ok) throw std::logic_error(std::string("witness construction invariant: ") + what);
}

}  // namespace

// ---------------------------------------------------------------------------
// Certificates

NormalWord::NormalWord(PrefixMap base, std::vector<NormalLetter> letters)
    : base_(std::move(base)), letters_(std::move(letters)) {
  require(!base_.is_identity(), ErrorKind::Precondition,
          "a normal word needs a non-trivial base");
  for (const auto &l : letters_) {
    require(l.exponent == 1 || l.exponent == -1, ErrorKind::Precondition,
            "normal word exponents are +1 or -1");
    require_arity(base_.arity(), l.conjugator.arity());
  }
}

PrefixMap NormalWord::letter_value(std::size_t i) const {
  const auto &l = letters_.at(i);
  return conjugate(l.conjugator, l.exponent > 0 ? base_ : invert(base_));
}

PrefixMap eval_normal_word(const NormalWord &w) {
  const PrefixMap inv = invert(w.base());
  PrefixMap acc(w.base().arity());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    acc = compose(conjugate(it->conjugator, it->exponent > 0 ? w.base() : inv), acc);
  }
  return acc;
}

PrefixMap eval_commutator_word(const CommutatorWord &w) {
  PrefixMap acc(w.arity);
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) {
    acc = compose(commutator(it->x, it->y), acc);
  }
  return acc;
}

CommutatorWord inverse(const CommutatorWord &w) {
  CommutatorWord out{w.arity, {}};
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) {
    out.factors.push_back({it->y, it->x});
  }
  return out;
}

CommutatorWord concat(const CommutatorWord &a, const CommutatorWord &b) {
  require_arity(a.arity, b.arity);
  CommutatorWord out = a;
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  return out;
}

// ---------------------------------------------------------------------------
// G = SS

Decomposition2 decompose2(const PrefixMap &g) {
  const int k = g.arity();
  ClopenSet y = moved_cylinder(g);
  if (set_union(y, image_clopen(g, y)).is_full()) {
    // A child of a moved cylinder is still moved, and leaves room outside.
    y = ClopenSet::cylinder(y.code().front().child(0), k);
  }
  const ClopenSet gy = image_clopen(g, y);
  const PrefixMap s2 = sigma_swap(g, y);
  const PrefixMap s1 = compose(g, s2);  // s2 is an involution
  return {s1, complement(gy), s2, set_union(y, gy)};
}

// ---------------------------------------------------------------------------
// Derived conjugators

DerivedConjugator derived_conjugator(const PrefixMap &g, const ClopenSet &w) {
  require_arity(g.arity(), w.arity());
  require(w.is_proper(), ErrorKind::DegenerateRegion,
          "derived_conjugator needs a proper non-empty region, got " + w.str());
  const int k = g.arity();
  if (fixes_pointwise(g, w)) return {PrefixMap(k), CommutatorWord{k, {}}};

  const auto dec = decompose2(g);
  // Innermost factor first: [s2,h2] acts as s2 on w, then [s1,h1] as s1 on s2(w).
  const PrefixMap h2 = transporter(dec.w2, complement(w));
  const ClopenSet mid = image_clopen(dec.s2, w);
  const PrefixMap h1 = transporter(dec.w1, complement(mid));
  CommutatorWord cert{k, {{dec.s1, h1}, {dec.s2, h2}}};
  PrefixMap d = eval_commutator_word(cert);
  ensure(image_clopen(d, w) == image_clopen(g, w), "derived conjugator image");
  return {std::move(d), std::move(cert)};
}

// ---------------------------------------------------------------------------
// [a,b] = [[a,g],[b,g^2]]

ShiftCheck shift_identity_check(const PrefixMap &a, const PrefixMap &b, const ClopenSet &y) {
  require_arity(a.arity(), y.arity());
  require_arity(b.arity(), y.arity());
  require(y.is_proper(), ErrorKind::Precondition, "Y must be proper and non-empty");
  require(in_rist(a, y) && in_rist(b, y), ErrorKind::Precondition,
          "a and b must fix the complement of Y pointwise");
  PrefixMap g = wandering_witness(y).g;
  const PrefixMap lhs = commutator(a, b);
  const PrefixMap rhs = commutator(commutator(a, g), commutator(b, power(g, 2)));
  return {std::move(g), lhs == rhs};
}

// ---------------------------------------------------------------------------
// Monolith witnesses

namespace {

void check_witness_inputs(const PrefixMap &a, const ClopenSet &ya, const PrefixMap &b,
                          const ClopenSet &yb, const PrefixMap &n) {
  const int k = n.arity();
  require_arity(k, a.arity());
  require_arity(k, b.arity());
  require_arity(k, ya.arity());
  require_arity(k, yb.arity());
  require(ya.is_proper() && yb.is_proper(), ErrorKind::Precondition,
          "Ya and Yb must be proper and non-empty");
  require(in_rist(a, ya), ErrorKind::Precondition, "a must fix the complement of Ya");
  require(in_rist(b, yb), ErrorKind::Precondition, "b must fix the complement of Yb");
  require(!n.is_identity(), ErrorKind::Precondition, "n must be non-trivial");
}

std::vector<NormalLetter> conjugated(const PrefixMap &by, std::vector<NormalLetter> letters) {
  for (auto &l : letters) l.conjugator = compose(by, l.conjugator);
  return letters;
}

// Ya ∪ Yb ≠ X. With u(Ya ∪ Yb) inside a cylinder moved off itself by n, the
// conjugate n' = u^-1 n u moves Ya ∪ Yb off itself, so [a,b] = [[a,n'],b]:
//   (a n' a^-1) n'^-1 (b n' b^-1) (ba n'^-1 (ba)^-1).
std::vector<NormalLetter> letters_union_proper(const PrefixMap &a, const ClopenSet &ya,
                                               const PrefixMap &b, const ClopenSet &yb,
                                               const PrefixMap &n) {
  const ClopenSet w = set_union(ya, yb);
  const ClopenSet z = moved_cylinder(n);
  const PrefixMap ui = invert(transporter(w, z));
  return {{compose(a, ui), 1},
          {ui, -1},
          {compose(b, ui), 1},
          {compose(compose(b, a), ui), -1}};
}

}  // namespace

NormalWord monolith_witness(const PrefixMap &a, const ClopenSet &ya, const PrefixMap &b,
                            const ClopenSet &yb, const PrefixMap &n) {
  check_witness_inputs(a, ya, b, yb, n);
  const int k = n.arity();
  const PrefixMap target = commutator(a, b);
  if (target.is_identity()) return NormalWord(n);

  if (!set_union(ya, yb).is_full()) {
    return NormalWord(n, letters_union_proper(a, ya, b, yb, n));
  }

  // Ya ∪ Yb = X. Find h = u^-1 n u pushing Ya into R ⊆ Ya^c, so that
  // a' = h a h^-1 lives in R ⊆ Yb and the pair (a', b) has a proper union.
  const ClopenSet outside = complement(ya);
  const auto outside_words = split_to_size(outside, reachable_size(outside, 2));
  const ClopenSet r = ClopenSet::cylinder(outside_words.front(), k);
  const ClopenSet z = moved_cylinder(n);
  const ClopenSet z_half = ClopenSet::cylinder(z.code().front().child(0), k);
  const ClopenSet nz = image_clopen(n, z);
  const PrefixMap u = patch({{ya, transporter(ya, z_half)}, {r, carry(r, nz)}});
  const PrefixMap ui = invert(u);
  const PrefixMap h = compose(ui, compose(n, u));
  const ClopenSet hya = image_clopen(h, ya);
  ensure(is_subset(hya, r), "h(Ya) ⊆ R");
  const PrefixMap a2 = conjugate(h, a);

  // [a,b] = (a h^-1)[h,b](a h^-1)^-1 · h^-1 [a',b] h · [h^-1,b]
  const PrefixMap b_ui = compose(b, ui);
  std::vector<NormalLetter> letters;
  auto push = [&letters](std::vector<NormalLetter> part) {
    letters.insert(letters.end(), part.begin(), part.end());
  };
  push(conjugated(compose(a, invert(h)), {{ui, 1}, {b_ui, -1}}));
  push(conjugated(invert(h), letters_union_proper(a2, hya, b, yb, n)));
  push({{ui, -1}, {b_ui, 1}});
  return NormalWord(n, std::move(letters));
}

PrefixMap cylinder_swap(const Word &u, const Word &v, int arity) {
  const ClopenSet cu = ClopenSet::cylinder(u, arity);
  return sigma_swap(carry(cu, ClopenSet::cylinder(v, arity)), cu);
}

SimpleWitness simple_witness(const PrefixMap &a, const ClopenSet &ya, const PrefixMap &b,
                             const ClopenSet &yb, const PrefixMap &n,
                             const CommutatorWord &n_cert) {
  check_witness_inputs(a, ya, b, yb, n);
  const int k = n.arity();
  require_arity(k, n_cert.arity);
  require(eval_commutator_word(n_cert) == n, ErrorKind::Precondition,
          "n_cert does not evaluate to n");
  if (commutator(a, b).is_identity()) return {NormalWord(n), {}};

  // The conjugation trick needs a core element with proper support: either n
  // itself or the localisation n' = [n, t] = n · t n^-1 t^-1 with t a 3-cycle
  // of cylinders inside a set T moved off itself by n.
  PrefixMap core = n;
  std::optional<CommutatorFactor> t_factor;
  if (!support_upper(n).is_proper()) {
    ClopenSet t_region = moved_cylinder(n);
    if (set_union(t_region, image_clopen(n, t_region)).is_full()) {
      t_region = ClopenSet::cylinder(t_region.code().front().child(0), k);
    }
    const Word &w = t_region.code().front();
    const Word w00 = w.child(0).child(0), w01 = w.child(0).child(1), w10 = w.child(1).child(0);
    t_factor = CommutatorFactor{cylinder_swap(w00, w01, k), cylinder_swap(w01, w10, k)};
    core = commutator(n, commutator(t_factor->x, t_factor->y));
  }
  const ClopenSet core_support = support_upper(core);
  ensure(core_support.is_proper(), "core support is proper");

  const NormalWord over_core = monolith_witness(a, ya, b, yb, core);
  std::vector<NormalLetter> letters;
  std::vector<CommutatorWord> certs;
  for (const auto &l : over_core.letters()) {
    // x n x^-1 depends only on x restricted to the support of n.
    auto dc = derived_conjugator(l.conjugator, core_support);
    if (!t_factor) {
      letters.push_back({dc.d, l.exponent});
      certs.push_back(dc.cert);
      continue;
    }
    const PrefixMap t = commutator(t_factor->x, t_factor->y);
    const PrefixMap dt = compose(dc.d, t);
    const CommutatorWord dt_cert = concat(dc.cert, CommutatorWord{k, {*t_factor}});
    if (l.exponent > 0) {
      letters.push_back({dc.d, 1});
      letters.push_back({dt, -1});
      certs.push_back(dc.cert);
      certs.push_back(dt_cert);
    } else {
      letters.push_back({dt, 1});
      letters.push_back({dc.d, -1});
      certs.push_back(dt_cert);
      certs.push_back(dc.cert);
    }
  }
  return {NormalWord(n, std::move(letters)), std::move(certs)};
}

// ---------------------------------------------------------------------------
// Claims behind the three-factor and chain properties

Claim1Witness claim1_transporter(const ClopenSet &ia, const ClopenSet &ib,
                                 const ClopenSet &ic) {
  const int k = ia.arity();
  require_arity(k, ib.arity());
  require_arity(k, ic.arity());
  if (ia == ib && !ia.is_empty()) return {PrefixMap(k), {k, {}}, {k, {}}};
  require(!ia.is_empty() && !ib.is_empty() && !ic.is_empty(), ErrorKind::Precondition,
          "claim1 needs non-empty sets");
  require(are_disjoint(ia, ib) && are_disjoint(ia, ic) && are_disjoint(ib, ic),
          ErrorKind::Overlap, "claim1 needs pairwise disjoint sets");
  const ClopenSet abc = set_union(set_union(ia, ib), ic);
  require(!abc.is_full(), ErrorKind::DegenerateRegion, "claim1 needs IA ∪ IB ∪ IC ≠ X");
  require(k == 2 || ia.code_size() % (k - 1) == ib.code_size() % (k - 1),
          ErrorKind::InfeasibleSize, "claim1 needs |code(IA)| = |code(IB)| mod (k-1)");

  // c swaps IA with IB; d carries IC^c off IA ∪ IC, so d c^-1 d^-1 fixes
  // IA ∪ IC pointwise and [c,d] agrees with c there.
  const PrefixMap c = sigma_swap(carry(ia, ib), ia);
  const ClopenSet ic_c = complement(ic);
  const auto dc = derived_conjugator(transporter(ic_c, complement(set_union(ia, ic))), ic_c);
  CommutatorWord cert{k, {{c, dc.d}}};
  PrefixMap e = eval_commutator_word(cert);
  return {std::move(e), std::move(cert), dc.cert};
}

Claim2Factorization claim2_factorization(const PrefixMap &g, const CoverFamily &family,
                                         const std::optional<CommutatorWord> &g_cert) {
  const int k = g.arity();
  const auto members = family.members();
  for (const auto &m : members) require_arity(k, m.arity());
  if (g_cert) {
    require_arity(k, g_cert->arity);
    require(eval_commutator_word(*g_cert) == g, ErrorKind::Precondition,
            "g_cert does not evaluate to g");
  }
  const PrefixMap id(k);
  const CommutatorWord none{k, {}};
  auto certs_of = [&](CommutatorWord s1) -> std::optional<std::array<CommutatorWord, 3>> {
    if (!g_cert) return std::nullopt;
    return std::array<CommutatorWord, 3>{std::move(s1), none, none};
  };
  if (g.is_identity()) return {{id, id, id}, {0, 0, 0}, certs_of(none)};
  for (int i = 0; i < 6; ++i) {
    if (fixes_pointwise(g, members[i])) {
      return {{g, id, id}, {i, 0, 0}, g_cert ? certs_of(*g_cert) : std::nullopt};
    }
  }

  const auto &u = family.u;
  require(are_disjoint(u[0], u[1]) && are_disjoint(u[0], u[2]) && are_disjoint(u[1], u[2]) &&
              !set_union(set_union(u[0], u[1]), u[2]).is_full(),
          ErrorKind::Precondition, "cover family needs disjoint private sets with room");

  static constexpr std::array<std::array<int, 3>, 6> kOrders{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (const auto &[ia, ib, ic] : kOrders) {
    const ClopenSet &ua = u[ia], &ub = u[ib], &uc = u[ic];
    const ClopenSet gq = image_clopen(g, complement(set_union(ua, ub)));
    // s1 fixes Uc and moves Ub into g(Q), after which h = s1^-1 g pulls Ub
    // back to Y = h^-1(Ub) outside Ua ∪ Ub.
    PrefixMap s1 = id;
    CommutatorWord s1_cert = none;
    if (!is_subset(ub, gq)) {
      const ClopenSet room = set_difference(gq, set_union(ub, uc));
      if (room.is_empty()) continue;
      const PrefixMap c1 = sigma_swap(transporter(ub, room), ub);
      const ClopenSet moved = set_union(ub, image_clopen(c1, ub));
      const PrefixMap d1 = transporter(moved, complement(set_union(ub, uc)));
      s1_cert = CommutatorWord{k, {{c1, d1}}};
      s1 = eval_commutator_word(s1_cert);
    }
    const PrefixMap h = compose(invert(s1), g);
    const ClopenSet y = image_clopen(invert(h), ub);
    ensure(are_disjoint(y, set_union(ua, ub)), "Y avoids Ua ∪ Ub");
    // s3 = [σ(h,Y), d3] agrees with h on Y and fixes Ua.
    const PrefixMap c3 = sigma_swap(h, y);
    const PrefixMap d3 = transporter(set_union(y, ub), complement(set_union(y, ua)));
    const CommutatorWord s3_cert{k, {{c3, d3}}};
    const PrefixMap s3 = eval_commutator_word(s3_cert);
    const PrefixMap s2 = compose(h, invert(s3));
    Claim2Factorization out{{s1, s2, s3}, {3 + ic, 3 + ib, 3 + ia}, std::nullopt};
    if (g_cert) {
      out.certs = std::array<CommutatorWord, 3>{
          s1_cert, concat(concat(inverse(s1_cert), *g_cert), inverse(s3_cert)), s3_cert};
    }
    return out;
  }
  throw std::logic_error("witness construction invariant: no ordering of the private sets leaves room");
}

namespace {

std::vector<Word> words_of_length(std::size_t len, int arity, std::size_t limit) {
  std::vector<Word> out;
  std::vector<int> letters(len, 0);
  while (out.size() < limit) {
    out.push_back(Word::from_letters(letters));
    std::size_t i = len;
    while (i > 0 && letters[i - 1] == arity - 1) letters[--i] = 0;
    if (i == 0) break;
    ++letters[i - 1];
  }
  return out;
}

}  // namespace

Claim3Witness claim3_witness(const PrefixMap &g, const PrefixMap &h,
                             const CoverFamily &family) {
  const int k = g.arity();
  require_arity(k, h.arity());
  const PrefixMap gi = invert(g), hi = invert(h);
  // Search small cylinders at increasing depth for IA, IB, IC with
  // g(IA), h(IB), IC pairwise disjoint and neither triple covering X.
  constexpr std::size_t kCandidates = 48;
  const std::size_t max_depth = std::max(g.depth(), h.depth()) + 6;
  for (std::size_t depth = 2; depth <= max_depth; ++depth) {
    const auto cands = words_of_length(depth, k, kCandidates);
    for (const auto &wc : cands) {
      const ClopenSet ic = ClopenSet::cylinder(wc, k);
      for (const auto &wa : cands) {
        if (wa == wc) continue;
        const ClopenSet ia = ClopenSet::cylinder(wa, k);
        const ClopenSet gia = image_clopen(g, ia);
        if (!are_disjoint(gia, ic)) continue;
        for (const auto &wb : cands) {
          if (wb == wa || wb == wc) continue;
          const ClopenSet ib = ClopenSet::cylinder(wb, k);
          const ClopenSet hib = image_clopen(h, ib);
          if (!are_disjoint(hib, ic) || !are_disjoint(hib, gia)) continue;
          const ClopenSet abc = set_union(set_union(ia, ib), ic);
          if (abc.is_full() || set_union(set_union(gia, hib), ic).is_full()) continue;
          PrefixMap c(k);
          try {
            c = patch({{gia, gi}, {hib, hi}, {ic, PrefixMap(k)}});
          } catch (const Error &e) {
            if (e.kind() == ErrorKind::InfeasibleSize) continue;
            throw;
          }
          Claim3Witness out{c, ia, ib, ic, {}};
          const ClopenSet room = complement(abc);
          const auto members = family.members();
          for (int i = 0; i < 6; ++i) {
            out.f_table.push_back({i, transporter(complement(members[i]), room)});
          }
          return out;
        }
      }
    }
  }
  throw Error(ErrorKind::InfeasibleSize, "no admissible triple found for claim3");
}

CommutingChain commuting_chain(const ClopenSet &ya, const ClopenSet &yb) {
  const int k = ya.arity();
  require_arity(k, yb.arity());
  require(ya.is_proper() && yb.is_proper(), ErrorKind::Precondition,
          "commuting_chain needs proper non-empty sets");
  // Disjoint targets: P ⊆ Ya^c for g(Ya) and Q ⊆ Yb^c for h(Ya).
  Word p = complement(ya).code().front();
  Word q = complement(yb).code().front();
  if (p.is_prefix_of(q)) {
    p = q.child(1);
    q = q.child(0);
  } else if (q.is_prefix_of(p)) {
    q = p.child(1);
    p = p.child(0);
  }
  return {transporter(ya, ClopenSet::cylinder(p, k)),
          transporter(ya, ClopenSet::cylinder(q, k))};
}

}  // namespace prefixgroup
