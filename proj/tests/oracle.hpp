#pragma once

// Brute-force reference semantics, independent of the library algorithms:
// elements and clopen sets are compared by evaluating every word of a fixed
// length (sampled when that length is large). Only the raw pair and code
// lists of the library values are read.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prefixgroup/clopen.hpp"
#include "prefixgroup/prefix_map.hpp"

namespace oracle {

using prefixgroup::ClopenSet;
using prefixgroup::PrefixMap;

inline std::vector<std::string> all_words(int arity, std::size_t length) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<std::string> next;
    for (const auto &w : out) {
      for (int a = 0; a < arity; ++a) next.push_back(w + static_cast<char>('0' + a));
    }
    out = std::move(next);
  }
  return out;
}

/// Every word of the given length when there are at most 2^16 of them,
/// otherwise a fixed pseudo-random sample of 4096 such words.
inline std::vector<std::string> words_for(int arity, std::size_t length) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < length && count <= (1U << 16); ++i) count *= static_cast<std::size_t>(arity);
  if (count <= (1U << 16)) return all_words(arity, length);
  std::vector<std::string> out;
  std::uint64_t x = 0x2545F4914F6CDD1DULL ^ length;
  for (int i = 0; i < 4096; ++i) {
    std::string w;
    for (std::size_t j = 0; j < length; ++j) {
      x ^= x << 13;
      x ^= x >> 7;
      x ^= x << 17;
      w += static_cast<char>('0' + x % static_cast<std::uint64_t>(arity));
    }
    out.push_back(std::move(w));
  }
  return out;
}

inline bool starts_with(const std::string &w, const std::string &p) {
  return w.size() >= p.size() && w.compare(0, p.size(), p) == 0;
}

/// Image of a word under explicit pairs; nullopt if no domain word is a prefix.
inline std::optional<std::string> apply(const std::vector<prefixgroup::WordPair> &pairs,
                                        const std::string &w) {
  for (const auto &p : pairs) {
    if (starts_with(w, p.domain.digits())) return p.range.digits() + w.substr(p.domain.size());
  }
  return std::nullopt;
}

inline std::optional<std::string> apply(const PrefixMap &g, const std::string &w) {
  return oracle::apply(g.pairs(), w);
}

inline std::size_t depth(const PrefixMap &g) {
  std::size_t d = 0;
  for (const auto &p : g.pairs()) d = std::max({d, p.domain.size(), p.range.size()});
  return d;
}

inline std::size_t depth(const ClopenSet &c) {
  std::size_t d = 0;
  for (const auto &w : c.code()) d = std::max(d, w.size());
  return d;
}

inline bool contains(const ClopenSet &c, const std::string &w) {
  for (const auto &p : c.code()) {
    if (starts_with(w, p.digits())) return true;
  }
  return false;
}

/// g(h(w)) evaluated pointwise.
inline std::optional<std::string> apply_product(const std::vector<const PrefixMap *> &left_to_right,
                                                std::string w) {
  for (auto it = left_to_right.rbegin(); it != left_to_right.rend(); ++it) {
    auto r = oracle::apply(**it, w);
    if (!r) return std::nullopt;
    w = *r;
  }
  return w;
}

/// f agrees with the product of `factors` (left to right) on every word of
/// a length long enough to determine both.
inline bool equals_product(const PrefixMap &f, const std::vector<const PrefixMap *> &factors) {
  std::size_t len = depth(f);
  for (const auto *g : factors) len += depth(*g);
  len = std::max<std::size_t>(len, 1);
  for (const auto &w : words_for(f.arity(), len)) {
    const auto a = oracle::apply(f, w);
    const auto b = apply_product(factors, w);
    if (!a || !b || *a != *b) return false;
  }
  return true;
}

inline bool same_map(const PrefixMap &f, const PrefixMap &g) { return equals_product(f, {&g}); }

inline bool is_identity(const PrefixMap &g) {
  for (const auto &w : words_for(g.arity(), std::max<std::size_t>(depth(g), 1))) {
    const auto r = oracle::apply(g, w);
    if (!r || *r != w) return false;
  }
  return true;
}

inline bool same_set(const ClopenSet &a, const ClopenSet &b) {
  const std::size_t len = std::max<std::size_t>({depth(a), depth(b), 1});
  for (const auto &w : words_for(a.arity(), len)) {
    if (contains(a, w) != contains(b, w)) return false;
  }
  return true;
}

/// g fixes every point of c: each word of c, long enough, maps to itself.
inline bool fixes_pointwise(const PrefixMap &g, const ClopenSet &c) {
  const std::size_t len = std::max<std::size_t>(depth(g) + depth(c), 1);
  for (const auto &w : words_for(g.arity(), len)) {
    if (!contains(c, w)) continue;
    const auto r = oracle::apply(g, w);
    if (!r || *r != w) return false;
  }
  return true;
}

/// g(c) ⊆ d, and when `exact` also g(c) ⊇ d, by point evaluation.
inline std::vector<prefixgroup::WordPair> swapped(const PrefixMap &g) {
  std::vector<prefixgroup::WordPair> out;
  for (const auto &p : g.pairs()) out.push_back({p.range, p.domain});
  return out;
}

inline bool image_within(const std::vector<prefixgroup::WordPair> &pairs, int arity,
                         std::size_t map_depth, const ClopenSet &c, const ClopenSet &d) {
  const std::size_t len = std::max<std::size_t>(map_depth + depth(c) + depth(d), 1);
  for (const auto &w : words_for(arity, len)) {
    if (!contains(c, w)) continue;
    const auto r = oracle::apply(pairs, w);
    if (!r || !contains(d, *r)) return false;
  }
  return true;
}

inline bool image_within(const PrefixMap &g, const ClopenSet &c, const ClopenSet &d) {
  return image_within(g.pairs(), g.arity(), depth(g), c, d);
}

inline bool image_equals(const PrefixMap &g, const ClopenSet &c, const ClopenSet &d) {
  return image_within(g, c, d) && image_within(swapped(g), g.arity(), depth(g), d, c);
}

inline bool disjoint(const ClopenSet &a, const ClopenSet &b) {
  const std::size_t len = std::max<std::size_t>({depth(a), depth(b), 1});
  for (const auto &w : words_for(a.arity(), len)) {
    if (contains(a, w) && contains(b, w)) return false;
  }
  return true;
}

}  // namespace oracle
