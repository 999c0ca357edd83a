#include "prefixgroup/random.hpp"

#include <algorithm>

namespace prefixgroup {

namespace {

void split_at(std::vector<Word> &code, std::size_t i, int arity) {
  const Word w = code[i];
  code.erase(code.begin() + static_cast<std::ptrdiff_t>(i));
  for (int a = 0; a < arity; ++a) code.push_back(w.child(a));
}

// `parts` sets partitioning a level of the tree, each possibly empty.
std::vector<ClopenSet> random_partition(Rng &rng, int arity, std::size_t max_depth,
                                        std::size_t parts, std::vector<std::size_t> &owner) {
  const std::size_t depth = 2 + rng.below(std::max<std::size_t>(1, max_depth - 1));
  std::vector<Word> code = random_complete_code(rng, arity, std::max<std::size_t>(depth, 2));
  while (code.size() < parts + 1) split_at(code, rng.below(code.size()), arity);
  owner.assign(code.size(), 0);
  for (auto &o : owner) o = rng.below(parts + 1);
  // Guarantee every part (and the leftover, index parts) gets a word.
  std::vector<std::size_t> idx(code.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  rng.shuffle(idx);
  for (std::size_t p = 0; p <= parts; ++p) owner[idx[p]] = p;
  std::vector<std::vector<Word>> words(parts);
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (owner[i] < parts) words[owner[i]].push_back(code[i]);
  }
  std::vector<ClopenSet> out;
  for (const auto &w : words) out.push_back(ClopenSet::canonicalize(w, arity));
  return out;
}

}  // namespace

bool random_refine(Rng &rng, std::vector<Word> &code, std::size_t size, int arity,
                   std::size_t max_depth) {
  while (code.size() < size) {
    std::vector<std::size_t> splittable;
    for (std::size_t i = 0; i < code.size(); ++i) {
      if (code[i].size() < max_depth) splittable.push_back(i);
    }
    if (splittable.empty()) return false;
    split_at(code, splittable[rng.below(splittable.size())], arity);
  }
  return code.size() == size;
}

std::vector<Word> random_complete_code(Rng &rng, int arity, std::size_t max_depth) {
  std::vector<Word> code{Word()};
  std::size_t max_splits = 1;
  for (std::size_t d = 0; d < max_depth && max_splits < 64; ++d) max_splits *= 2;
  const std::size_t splits = rng.below(std::min<std::size_t>(max_splits, 12) + 1);
  random_refine(rng, code, 1 + splits * static_cast<std::size_t>(arity - 1), arity, max_depth);
  return code;
}

PrefixMap random_element(Rng &rng, int arity, std::size_t max_depth) {
  std::vector<Word> domain = random_complete_code(rng, arity, max_depth);
  std::vector<Word> range{Word()};
  if (!random_refine(rng, range, domain.size(), arity, max_depth)) {
    // Range ran out of room: trim the domain back to a matching shape.
    domain = range;
    rng.shuffle(domain);
  }
  rng.shuffle(range);
  std::vector<WordPair> pairs;
  for (std::size_t i = 0; i < domain.size(); ++i) pairs.push_back({domain[i], range[i]});
  return PrefixMap::reduce(std::move(pairs), arity);
}

PrefixMap random_nonidentity(Rng &rng, int arity, std::size_t max_depth) {
  for (;;) {
    PrefixMap g = random_element(rng, arity, max_depth);
    if (!g.is_identity()) return g;
  }
}

std::vector<WordPair> random_refinement(Rng &rng, const PrefixMap &g, int splits) {
  std::vector<WordPair> pairs = g.pairs();
  for (int s = 0; s < splits; ++s) {
    const std::size_t i = rng.below(pairs.size());
    const WordPair p = pairs[i];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(i));
    for (int a = 0; a < g.arity(); ++a) pairs.push_back({p.domain.child(a), p.range.child(a)});
  }
  rng.shuffle(pairs);
  return pairs;
}

ClopenSet random_clopen(Rng &rng, int arity, std::size_t max_depth) {
  std::vector<Word> code = random_complete_code(rng, arity, max_depth);
  std::vector<Word> chosen;
  for (const auto &w : code) {
    if (rng.coin()) chosen.push_back(w);
  }
  return ClopenSet::canonicalize(chosen, arity);
}

ClopenSet random_proper_clopen(Rng &rng, int arity, std::size_t max_depth) {
  for (;;) {
    ClopenSet c = random_clopen(rng, arity, max_depth);
    if (c.is_proper()) return c;
  }
}

PrefixMap random_rist_element(Rng &rng, const ClopenSet &y, std::size_t max_depth) {
  const int k = y.arity();
  std::size_t longest = 0;
  for (const auto &w : y.code()) longest = std::max(longest, w.size());
  const std::size_t depth = std::max(max_depth, longest + 2);
  std::vector<Word> domain = y.code();
  std::vector<Word> range = y.code();
  const std::size_t size = domain.size() + rng.below(5) * static_cast<std::size_t>(k - 1);
  if (!random_refine(rng, domain, size, k, depth) || !random_refine(rng, range, size, k, depth)) {
    return PrefixMap(k);
  }
  rng.shuffle(range);
  std::vector<WordPair> pairs;
  for (std::size_t i = 0; i < domain.size(); ++i) pairs.push_back({domain[i], range[i]});
  const ClopenSet rest = complement(y);
  for (const auto &w : rest.code()) pairs.push_back({w, w});
  return PrefixMap::reduce(std::move(pairs), k);
}

std::array<ClopenSet, 3> random_disjoint_triple(Rng &rng, int arity, std::size_t max_depth) {
  std::vector<std::size_t> owner;
  auto parts = random_partition(rng, arity, max_depth, 3, owner);
  return {parts[0], parts[1], parts[2]};
}

std::array<ClopenSet, 2> random_disjoint_pair(Rng &rng, int arity, std::size_t max_depth) {
  std::vector<std::size_t> owner;
  auto parts = random_partition(rng, arity, max_depth, 2, owner);
  return {parts[0], parts[1]};
}

}  // namespace prefixgroup
