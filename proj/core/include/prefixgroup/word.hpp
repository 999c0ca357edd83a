#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace prefixgroup {

constexpr int kMinArity = 2;
constexpr int kMaxArity = 10;  // letters are written as single digits

void check_arity(int arity);

/// A finite word over {0,...,k-1}, naming the cylinder of all infinite
/// sequences that extend it. The empty word names the whole space.
///
/// Letters are stored as the digit characters '0'..'9'; the arity is carried
/// by the containers (ClopenSet, PrefixMap) that hold words.
class Word {
 public:
  Word() = default;
  explicit Word(std::string digits) : letters_(std::move(digits)) {}

  static Word from_letters(const std::vector<int> &letters);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int letter(std::size_t i) const { return letters_[i] - '0'; }
  int max_letter() const noexcept;

  const std::string &digits() const noexcept { return letters_; }

  Word child(int a) const;
  Word concat(const Word &suffix) const { return Word(letters_ + suffix.letters_); }
  Word prefix(std::size_t n) const { return Word(letters_.substr(0, n)); }
  Word suffix_from(std::size_t n) const { return Word(letters_.substr(n)); }

  bool is_prefix_of(const Word &other) const noexcept;
  bool comparable(const Word &other) const noexcept {
    return is_prefix_of(other) || other.is_prefix_of(*this);
  }

  /// Literal form: digits, with "e" for the empty word.
  std::string str() const { return letters_.empty() ? "e" : letters_; }

  // Plain lexicographic order: the left-to-right order of tree leaves.
  auto operator<=>(const Word &) const = default;
  bool operator==(const Word &) const = default;

 private:
  std::string letters_;
};

/// Shorter words first, then lexicographic. The canonical order for clopen codes.
struct LengthLexLess {
  bool operator()(const Word &a, const Word &b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.digits() < b.digits();
  }
};

}  // namespace prefixgroup
