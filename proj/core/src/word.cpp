#include "prefixgroup/word.hpp"

#include <algorithm>

#include "prefixgroup/error.hpp"

namespace prefixgroup {

void check_arity(int arity) {
  if (arity < kMinArity || arity > kMaxArity) {
    throw Error(ErrorKind::ArityMismatch,
                "arity must lie in [2, 10], got " + std::to_string(arity));
  }
}

Word Word::from_letters(const std::vector<int> &letters) {
  std::string s;
  s.reserve(letters.size());
  for (int a : letters) s.push_back(static_cast<char>('0' + a));
  return Word(std::move(s));
}

int Word::max_letter() const noexcept {
  int m = -1;
  for (char c : letters_) m = std::max(m, c - '0');
  return m;
}

Word Word::child(int a) const {
  std::string s = letters_;
  s.push_back(static_cast<char>('0' + a));
  return Word(std::move(s));
}

bool Word::is_prefix_of(const Word &other) const noexcept {
  return letters_.size() <= other.letters_.size() &&
         std::equal(letters_.begin(), letters_.end(), other.letters_.begin());
}

}  // namespace prefixgroup
