#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "prefixgroup/clopen.hpp"
#include "prefixgroup/word.hpp"

namespace prefixgroup {

struct WordPair {
  Word domain;
  Word range;
  bool operator==(const WordPair &) const = default;
};

/// A prefix-exchange homeomorphism of the Cantor space: each pair (d, r)
/// sends d·w to r·w. Domain and range words form complete prefix codes.
///
/// Values are always reduced (no sibling family d·a -> r·a with a common r)
/// and pairs are sorted by domain word in leaf (plain lexicographic) order,
/// so equality of PrefixMaps is equality of the bijections.
class PrefixMap {
 public:
  explicit PrefixMap(int arity = 2);  // identity

  /// Validates and reduces an arbitrary pair list.
  /// Throws IncompleteCode if either side is not a complete prefix code.
  static PrefixMap reduce(std::vector<WordPair> pairs, int arity);
  static PrefixMap identity(int arity) { return PrefixMap(arity); }

  int arity() const noexcept { return arity_; }
  const std::vector<WordPair> &pairs() const noexcept { return pairs_; }
  bool is_identity() const noexcept {
    return pairs_.size() == 1 && pairs_.front().domain.empty() &&
           pairs_.front().range.empty();
  }

  /// Image of the finite word `w`, defined when `w` extends a domain word.
  /// Returns false when `w` is too short to determine a unique image prefix.
  bool apply(const Word &w, Word &out) const;

  /// Longest domain word; every word at least this long has a defined image.
  std::size_t depth() const noexcept;

  /// Literal form `{d1->r1,d2->r2,...}`.
  std::string str() const;

  bool operator==(const PrefixMap &) const = default;

 private:
  PrefixMap(int arity, std::vector<WordPair> reduced)
      : arity_(arity), pairs_(std::move(reduced)) {}

  int arity_;
  std::vector<WordPair> pairs_;
};

/// x -> g(h(x)).
PrefixMap compose(const PrefixMap &g, const PrefixMap &h);
/// Product left to right: factors[0] ∘ factors[1] ∘ ...
PrefixMap product(std::span<const PrefixMap> factors, int arity);
PrefixMap invert(const PrefixMap &g);
/// g h g^-1 h^-1.
PrefixMap commutator(const PrefixMap &g, const PrefixMap &h);
/// c g c^-1.
PrefixMap conjugate(const PrefixMap &c, const PrefixMap &g);
PrefixMap power(const PrefixMap &g, int n);

ClopenSet image_clopen(const PrefixMap &g, const ClopenSet &c);

/// The pairs of g refined so that their domain words partition `c` exactly.
std::vector<WordPair> restrict_to(const PrefixMap &g, const ClopenSet &c);

bool fixes_pointwise(const PrefixMap &g, const ClopenSet &c);
/// g lies in the rigid stabiliser of w: it fixes the complement of w pointwise.
bool in_rist(const PrefixMap &g, const ClopenSet &w);

/// Closure of the support: the union of the cylinders [d] with d != r.
/// Diagnostic only; the exact support need not be clopen.
ClopenSet support_upper(const PrefixMap &g);

/// A cylinder Z with g(Z) ∩ Z = ∅. Throws NoMovedPoint for the identity.
ClopenSet moved_cylinder(const PrefixMap &g);

/// The involution equal to g on y, to g^-1 on g(y) and to the identity
/// elsewhere. Throws Overlap unless y ∩ g(y) = ∅.
PrefixMap sigma_swap(const PrefixMap &g, const ClopenSet &y);

struct PatchConstraint {
  ClopenSet region;
  PrefixMap map;
};

/// A prefix map agreeing with each constraint's map on its region. Off the
/// regions it is the deterministic length-lex matching of the leftover codes.
PrefixMap patch(std::span<const PatchConstraint> constraints);
PrefixMap patch(std::initializer_list<PatchConstraint> constraints);

/// Pairs carrying the clopen set `from` bijectively onto `to`: both codes are
/// refined to a common size and matched in length-lex order.
/// Throws InfeasibleSize if exactly one side is empty or the sizes are
/// incongruent mod (k-1).
std::vector<WordPair> matching_pairs(const ClopenSet &from, const ClopenSet &to);

/// Builds a map from explicit pairs covering a region plus the canonical
/// completion of the complements. Pairs must have disjoint domains and ranges.
PrefixMap complete_pairs(std::vector<WordPair> pairs, int arity);

}  // namespace prefixgroup
