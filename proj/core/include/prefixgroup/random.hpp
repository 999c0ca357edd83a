#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "prefixgroup/clopen.hpp"
#include "prefixgroup/prefix_map.hpp"

namespace prefixgroup {

/// Seeded generator shared by the corpus suites, tests and benchmarks.
/// Draws are taken modulo the range so that outputs are identical across
/// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish in [0, n).
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool coin() { return (engine_() & 1U) != 0; }

  template <class T>
  void shuffle(std::vector<T> &v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Refines `code` to exactly `size` words by splitting randomly chosen words
/// shorter than max_depth. Returns false (leaving a partial refinement) when
/// no word can be split any more.
bool random_refine(Rng &rng, std::vector<Word> &code, std::size_t size, int arity,
                   std::size_t max_depth);

/// A random complete prefix code with words of length <= max_depth.
std::vector<Word> random_complete_code(Rng &rng, int arity, std::size_t max_depth);

/// Random complete codes of a common size, paired uniformly at random, reduced.
PrefixMap random_element(Rng &rng, int arity, std::size_t max_depth);
PrefixMap random_nonidentity(Rng &rng, int arity, std::size_t max_depth);

/// The same bijection with randomly chosen pairs split into their children.
std::vector<WordPair> random_refinement(Rng &rng, const PrefixMap &g, int splits);

ClopenSet random_clopen(Rng &rng, int arity, std::size_t max_depth);
ClopenSet random_proper_clopen(Rng &rng, int arity, std::size_t max_depth);

/// A random element fixing the complement of y pointwise.
PrefixMap random_rist_element(Rng &rng, const ClopenSet &y, std::size_t max_depth);

/// Pairwise disjoint non-empty sets whose union is not the whole space.
std::array<ClopenSet, 3> random_disjoint_triple(Rng &rng, int arity, std::size_t max_depth);
/// Disjoint non-empty sets whose union is not the whole space.
std::array<ClopenSet, 2> random_disjoint_pair(Rng &rng, int arity, std::size_t max_depth);

}  // namespace prefixgroup
