#include "prefixgroup/clopen.hpp"

#include <algorithm>

#include "prefixgroup/error.hpp"

namespace prefixgroup {

namespace detail {

std::size_t find_prefix_of(const std::vector<Word> &lex_sorted, const Word &w) {
  // In a lex-sorted antichain the only candidate is the greatest element <= w.
  auto it = std::upper_bound(lex_sorted.begin(), lex_sorted.end(), w);
  if (it == lex_sorted.begin()) return std::string::npos;
  --it;
  if (it->is_prefix_of(w)) return static_cast<std::size_t>(it - lex_sorted.begin());
  return std::string::npos;
}

std::pair<std::size_t, std::size_t> extensions_of(const std::vector<Word> &lex_sorted,
                                                  const Word &w) {
  auto lo = std::lower_bound(lex_sorted.begin(), lex_sorted.end(), w);
  auto hi = lo;
  while (hi != lex_sorted.end() && w.is_prefix_of(*hi)) ++hi;
  return {static_cast<std::size_t>(lo - lex_sorted.begin()),
          static_cast<std::size_t>(hi - lex_sorted.begin())};
}

bool is_antichain(const std::vector<Word> &lex_sorted) {
  for (std::size_t i = 1; i < lex_sorted.size(); ++i) {
    if (lex_sorted[i - 1].is_prefix_of(lex_sorted[i])) return false;
  }
  return true;
}

std::vector<Word> canonical_code(std::vector<Word> words, int arity) {
  check_arity(arity);
  for (const auto &w : words) {
    if (w.max_letter() >= arity) {
      throw Error(ErrorKind::ArityMismatch,
                  "word " + w.str() + " is not over a " + std::to_string(arity) +
                      "-letter alphabet");
    }
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());

  std::vector<Word> stack;
  stack.reserve(words.size());
  for (auto &w : words) {
    if (!stack.empty() && stack.back().is_prefix_of(w)) continue;  // absorbed
    stack.push_back(std::move(w));
    // Collapse complete sibling families; they sit contiguously on the stack.
    const auto k = static_cast<std::size_t>(arity);
    while (stack.size() >= k && !stack.back().empty() &&
           stack.back().letter(stack.back().size() - 1) == arity - 1) {
      const Word parent = stack.back().prefix(stack.back().size() - 1);
      bool family = true;
      for (std::size_t a = 0; a < k && family; ++a) {
        family = stack[stack.size() - k + a] == parent.child(static_cast<int>(a));
      }
      if (!family) break;
      stack.resize(stack.size() - k);
      // A merged parent can never be absorbed by the previous entry: that
      // entry would also have been a prefix of the children.
      stack.push_back(parent);
    }
  }
  std::sort(stack.begin(), stack.end(), LengthLexLess{});
  return stack;
}

}  // namespace detail

ClopenSet::ClopenSet(int arity) : arity_(arity) { check_arity(arity); }

ClopenSet ClopenSet::canonicalize(std::span<const Word> words, int arity) {
  return ClopenSet(arity,
                   detail::canonical_code(std::vector<Word>(words.begin(), words.end()),
                                          arity));
}

ClopenSet ClopenSet::full(int arity) {
  check_arity(arity);
  return ClopenSet(arity, {Word()});
}

ClopenSet ClopenSet::cylinder(const Word &w, int arity) {
  return canonicalize({w}, arity);
}

bool ClopenSet::contains_cylinder(const Word &w) const {
  for (const auto &c : code_) {
    if (c.is_prefix_of(w)) return true;
  }
  return false;
}

std::vector<Word> ClopenSet::lex_code() const {
  std::vector<Word> v = code_;
  std::sort(v.begin(), v.end());
  return v;
}

std::string ClopenSet::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < code_.size(); ++i) {
    if (i) s += ",";
    s += code_[i].str();
  }
  return s + "]";
}

namespace {

void require_same_arity(const ClopenSet &a, const ClopenSet &b) {
  if (a.arity() != b.arity()) {
    throw Error(ErrorKind::ArityMismatch, "clopen sets have different arities");
  }
}

void complement_rec(const std::vector<Word> &lex, const Word &prefix, std::size_t lo,
                    std::size_t hi, int arity, std::vector<Word> &out) {
  if (lo == hi) {
    out.push_back(prefix);
    return;
  }
  if (hi - lo == 1 && lex[lo] == prefix) return;
  std::size_t pos = lo;
  for (int a = 0; a < arity; ++a) {
    const Word c = prefix.child(a);
    std::size_t end = pos;
    while (end < hi && c.is_prefix_of(lex[end])) ++end;
    complement_rec(lex, c, pos, end, arity, out);
    pos = end;
  }
}

}  // namespace

ClopenSet set_union(const ClopenSet &a, const ClopenSet &b) {
  require_same_arity(a, b);
  std::vector<Word> words = a.code();
  words.insert(words.end(), b.code().begin(), b.code().end());
  return ClopenSet::canonicalize(words, a.arity());
}

ClopenSet set_intersect(const ClopenSet &a, const ClopenSet &b) {
  require_same_arity(a, b);
  const auto lex_b = b.lex_code();
  std::vector<Word> out;
  for (const auto &w : a.code()) {
    if (detail::find_prefix_of(lex_b, w) != std::string::npos) {
      out.push_back(w);
      continue;
    }
    auto [lo, hi] = detail::extensions_of(lex_b, w);
    out.insert(out.end(), lex_b.begin() + static_cast<std::ptrdiff_t>(lo),
               lex_b.begin() + static_cast<std::ptrdiff_t>(hi));
  }
  return ClopenSet::canonicalize(out, a.arity());
}

ClopenSet complement(const ClopenSet &a) {
  const auto lex = a.lex_code();
  std::vector<Word> out;
  complement_rec(lex, Word(), 0, lex.size(), a.arity(), out);
  return ClopenSet::canonicalize(out, a.arity());
}

ClopenSet set_difference(const ClopenSet &a, const ClopenSet &b) {
  return set_intersect(a, complement(b));
}

bool is_subset(const ClopenSet &a, const ClopenSet &b) {
  require_same_arity(a, b);
  for (const auto &w : a.code()) {
    if (!b.contains_cylinder(w)) return false;
  }
  return true;
}

bool are_disjoint(const ClopenSet &a, const ClopenSet &b) {
  return set_intersect(a, b).is_empty();
}

std::size_t reachable_size(const ClopenSet &c, std::size_t lower_bound) {
  const std::size_t s = c.code_size();
  if (lower_bound <= s) return s;
  const auto step = static_cast<std::size_t>(c.arity() - 1);
  return s + (lower_bound - s + step - 1) / step * step;
}

std::vector<Word> split_to_size(const ClopenSet &c, std::size_t m) {
  std::vector<Word> words = c.code();
  const auto step = static_cast<std::size_t>(c.arity() - 1);
  if (m < words.size() || (m - words.size()) % step != 0 ||
      (words.empty() && m != 0)) {
    throw Error(ErrorKind::InfeasibleSize,
                "cannot refine a code of size " + std::to_string(words.size()) +
                    " to size " + std::to_string(m) + " with arity " +
                    std::to_string(c.arity()));
  }
  while (words.size() < m) {
    // words is length-lex sorted: the shortest block comes first.
    std::size_t last_shortest = 0;
    while (last_shortest + 1 < words.size() &&
           words[last_shortest + 1].size() == words[0].size()) {
      ++last_shortest;
    }
    const Word victim = words[last_shortest];
    words.erase(words.begin() + static_cast<std::ptrdiff_t>(last_shortest));
    for (int a = 0; a < c.arity(); ++a) words.push_back(victim.child(a));
    std::sort(words.begin(), words.end(), LengthLexLess{});
  }
  return words;
}

}  // namespace prefixgroup
