#pragma once

#include <array>
#include <optional>
#include <vector>

#include "prefixgroup/clopen.hpp"
#include "prefixgroup/compression.hpp"
#include "prefixgroup/prefix_map.hpp"

namespace prefixgroup {

// ---------------------------------------------------------------------------
// Certificates

struct NormalLetter {
  PrefixMap conjugator;
  int exponent;  // +1 or -1
  bool operator==(const NormalLetter &) const = default;
};

/// A product of conjugates c·n^{±1}·c^-1 of a fixed non-trivial base n:
/// a certificate that its value lies in the normal closure of n.
class NormalWord {
 public:
  explicit NormalWord(PrefixMap base, std::vector<NormalLetter> letters = {});

  const PrefixMap &base() const noexcept { return base_; }
  const std::vector<NormalLetter> &letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }

  /// The letter's value c·n^e·c^-1.
  PrefixMap letter_value(std::size_t i) const;

  bool operator==(const NormalWord &) const = default;

 private:
  PrefixMap base_;
  std::vector<NormalLetter> letters_;
};

struct CommutatorFactor {
  PrefixMap x;
  PrefixMap y;
  bool operator==(const CommutatorFactor &) const = default;
};

/// A product of commutators [x1,y1][x2,y2]...: a certificate of membership
/// in the derived subgroup.
struct CommutatorWord {
  int arity = 2;
  std::vector<CommutatorFactor> factors;

  bool empty() const noexcept { return factors.empty(); }
  bool operator==(const CommutatorWord &) const = default;
};

PrefixMap eval_normal_word(const NormalWord &w);
PrefixMap eval_commutator_word(const CommutatorWord &w);

/// Certificate of the inverse: [x,y]^-1 = [y,x], in reverse order.
CommutatorWord inverse(const CommutatorWord &w);
/// Certificate of the product eval(a)·eval(b).
CommutatorWord concat(const CommutatorWord &a, const CommutatorWord &b);

// ---------------------------------------------------------------------------
// Witness constructions

/// g = s1·s2 with s1 fixing the complement of w1 and s2 fixing the
/// complement of w2 pointwise; w1, w2 proper.
struct Decomposition2 {
  PrefixMap s1;
  ClopenSet w1;
  PrefixMap s2;
  ClopenSet w2;
};
Decomposition2 decompose2(const PrefixMap &g);

struct DerivedConjugator {
  PrefixMap d;
  CommutatorWord cert;
};
/// d in the derived subgroup agreeing with g pointwise on w, hence
/// d(w) = g(w); at most two commutator factors.
DerivedConjugator derived_conjugator(const PrefixMap &g, const ClopenSet &w);

struct ShiftCheck {
  PrefixMap g;
  bool holds;
};
/// Verifies [a,b] = [[a,g],[b,g^2]] for a wandering g of y.
ShiftCheck shift_identity_check(const PrefixMap &a, const PrefixMap &b, const ClopenSet &y);

/// A normal word over base n evaluating to [a,b]; at most 8 letters.
NormalWord monolith_witness(const PrefixMap &a, const ClopenSet &ya, const PrefixMap &b,
                            const ClopenSet &yb, const PrefixMap &n);

struct SimpleWitness {
  NormalWord word;
  std::vector<CommutatorWord> conj_certs;  // one per letter, evaluating to its conjugator
};
/// As monolith_witness, with every conjugator certified to lie in the
/// derived subgroup. At most 8 letters when n has proper support, 16 otherwise.
SimpleWitness simple_witness(const PrefixMap &a, const ClopenSet &ya, const PrefixMap &b,
                             const ClopenSet &yb, const PrefixMap &n,
                             const CommutatorWord &n_cert);

struct Claim1Witness {
  PrefixMap e;          // e = [c, d]
  CommutatorWord cert;  // the single factor (c, d)
  CommutatorWord d_cert;
};
/// e fixing ic pointwise with e(ia) = ib.
Claim1Witness claim1_transporter(const ClopenSet &ia, const ClopenSet &ib,
                                 const ClopenSet &ic);

struct Claim2Factorization {
  std::array<PrefixMap, 3> s;
  std::array<int, 3> fixed_member;  // index into CoverFamily::members()
  std::optional<std::array<CommutatorWord, 3>> certs;
};
/// g = s1·s2·s3 with s_i fixing members()[fixed_member[i]] pointwise.
/// With g_cert supplied, every s_i carries a commutator certificate too.
Claim2Factorization claim2_factorization(const PrefixMap &g, const CoverFamily &family,
                                         const std::optional<CommutatorWord> &g_cert = {});

struct FTableEntry {
  int member;  // index into CoverFamily::members()
  PrefixMap f;
};

struct Claim3Witness {
  PrefixMap c;
  ClopenSet ia, ib, ic;
  std::vector<FTableEntry> f_table;
};
/// c with c·g fixing ia, c·h fixing ib and c fixing ic pointwise; every f
/// carries the complement of its cover member off ia ∪ ib ∪ ic.
Claim3Witness claim3_witness(const PrefixMap &g, const PrefixMap &h,
                             const CoverFamily &family);

struct CommutingChain {
  PrefixMap g;
  PrefixMap h;
};
/// g(ya) ∩ ya = h(ya) ∩ g(ya) = h(ya) ∩ yb = ∅.
CommutingChain commuting_chain(const ClopenSet &ya, const ClopenSet &yb);

/// The involution exchanging the cylinders [u] and [v] (incomparable words).
PrefixMap cylinder_swap(const Word &u, const Word &v, int arity);

}  // namespace prefixgroup
