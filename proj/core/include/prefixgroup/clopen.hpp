#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "prefixgroup/word.hpp"

namespace prefixgroup {

/// A clopen subset of the k-ary Cantor space, held as its canonical code:
/// an antichain of words with no complete sibling family, sorted
/// length-lexicographically. Two ClopenSets denote the same set iff their
/// codes are identical.
class ClopenSet {
 public:
  explicit ClopenSet(int arity = 2);

  /// Canonical form of the union of the cylinders named by `words`.
  static ClopenSet canonicalize(std::span<const Word> words, int arity);
  static ClopenSet canonicalize(std::initializer_list<Word> words, int arity) {
    return canonicalize(std::span<const Word>(words.begin(), words.size()), arity);
  }
  static ClopenSet full(int arity);
  static ClopenSet cylinder(const Word &w, int arity);

  int arity() const noexcept { return arity_; }
  const std::vector<Word> &code() const noexcept { return code_; }
  std::size_t code_size() const noexcept { return code_.size(); }

  bool is_empty() const noexcept { return code_.empty(); }
  bool is_full() const noexcept { return code_.size() == 1 && code_.front().empty(); }
  bool is_proper() const noexcept { return !is_empty() && !is_full(); }

  /// True iff the infinite sequences extending `w` all lie in the set.
  bool contains_cylinder(const Word &w) const;

  /// Code words in plain lexicographic order (leaf order).
  std::vector<Word> lex_code() const;

  /// Literal form `[w1,w2,...]`, `[]` for the empty set and `[e]` for the space.
  std::string str() const;

  bool operator==(const ClopenSet &) const = default;

 private:
  ClopenSet(int arity, std::vector<Word> canonical_code)
      : arity_(arity), code_(std::move(canonical_code)) {}

  int arity_;
  std::vector<Word> code_;
};

ClopenSet set_union(const ClopenSet &a, const ClopenSet &b);
ClopenSet set_intersect(const ClopenSet &a, const ClopenSet &b);
ClopenSet set_difference(const ClopenSet &a, const ClopenSet &b);
ClopenSet complement(const ClopenSet &a);
bool is_subset(const ClopenSet &a, const ClopenSet &b);
bool are_disjoint(const ClopenSet &a, const ClopenSet &b);

/// Refines the code of `c` into exactly `m` words by repeatedly replacing a
/// word by its k children. The shortest word is split first, ties going to
/// the lexicographically greatest. Result is sorted length-lexicographically.
///
/// Throws InfeasibleSize unless m >= |code(c)| and m = |code(c)| mod (k-1).
std::vector<Word> split_to_size(const ClopenSet &c, std::size_t m);

/// Smallest m >= lower_bound with m = |code(c)| mod (k-1).
std::size_t reachable_size(const ClopenSet &c, std::size_t lower_bound);

namespace detail {
// Antichain helpers over lexicographically sorted antichains.
// Index of the element that is a prefix of `w`, or npos.
std::size_t find_prefix_of(const std::vector<Word> &lex_sorted, const Word &w);
// Half-open index range of the elements that extend `w` (have `w` as prefix).
std::pair<std::size_t, std::size_t> extensions_of(const std::vector<Word> &lex_sorted,
                                                  const Word &w);
// Canonical code (length-lex) of an arbitrary word collection.
std::vector<Word> canonical_code(std::vector<Word> words, int arity);
bool is_antichain(const std::vector<Word> &lex_sorted);
}  // namespace detail

}  // namespace prefixgroup
