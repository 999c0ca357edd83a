#include "prefixgroup/prefix_map.hpp"

#include <algorithm>

#include "prefixgroup/error.hpp"

namespace prefixgroup {

namespace {

bool domain_less(const WordPair &a, const WordPair &b) { return a.domain < b.domain; }

// Index of the pair whose domain word is a prefix of w (pairs sorted by domain).
std::size_t find_domain_prefix(const std::vector<WordPair> &pairs, const Word &w) {
  auto it = std::upper_bound(pairs.begin(), pairs.end(), w,
                             [](const Word &x, const WordPair &p) { return x < p.domain; });
  if (it == pairs.begin()) return std::string::npos;
  --it;
  if (it->domain.is_prefix_of(w)) return static_cast<std::size_t>(it - pairs.begin());
  return std::string::npos;
}

std::pair<std::size_t, std::size_t> domain_extensions(const std::vector<WordPair> &pairs,
                                                      const Word &w) {
  auto lo = std::lower_bound(pairs.begin(), pairs.end(), w,
                             [](const WordPair &p, const Word &x) { return p.domain < x; });
  auto hi = lo;
  while (hi != pairs.end() && w.is_prefix_of(hi->domain)) ++hi;
  return {static_cast<std::size_t>(lo - pairs.begin()),
          static_cast<std::size_t>(hi - pairs.begin())};
}

// Sorts and merges sibling families. Assumes both sides are complete codes.
std::vector<WordPair> merge_siblings(std::vector<WordPair> pairs, int arity) {
  std::sort(pairs.begin(), pairs.end(), domain_less);
  const auto k = static_cast<std::size_t>(arity);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<WordPair> next;
    next.reserve(pairs.size());
    std::size_t i = 0;
    while (i < pairs.size()) {
      const auto &first = pairs[i];
      bool merge = i + k <= pairs.size() && !first.domain.empty() &&
                   !first.range.empty() &&
                   first.domain.letter(first.domain.size() - 1) == 0 &&
                   first.range.letter(first.range.size() - 1) == 0;
      Word dparent, rparent;
      if (merge) {
        dparent = first.domain.prefix(first.domain.size() - 1);
        rparent = first.range.prefix(first.range.size() - 1);
        for (std::size_t a = 0; a < k && merge; ++a) {
          merge = pairs[i + a].domain == dparent.child(static_cast<int>(a)) &&
                  pairs[i + a].range == rparent.child(static_cast<int>(a));
        }
      }
      if (merge) {
        next.push_back({std::move(dparent), std::move(rparent)});
        i += k;
        changed = true;
      } else {
        next.push_back(pairs[i]);
        ++i;
      }
    }
    pairs = std::move(next);
  }
  return pairs;
}

void require_complete_code(std::vector<Word> words, int arity, const char *side) {
  std::sort(words.begin(), words.end());
  const bool distinct = std::adjacent_find(words.begin(), words.end()) == words.end();
  if (!distinct || !detail::is_antichain(words)) {
    throw Error(ErrorKind::IncompleteCode,
                std::string(side) + " words do not form a prefix code");
  }
  const auto canon = detail::canonical_code(words, arity);
  if (!(canon.size() == 1 && canon.front().empty())) {
    throw Error(ErrorKind::IncompleteCode,
                std::string(side) + " words do not cover the whole space");
  }
}

void require_same_arity(int a, int b) {
  if (a != b) throw Error(ErrorKind::ArityMismatch, "operands have different arities");
}

}  // namespace

PrefixMap::PrefixMap(int arity) : arity_(arity), pairs_{{Word(), Word()}} {
  check_arity(arity);
}

PrefixMap PrefixMap::reduce(std::vector<WordPair> pairs, int arity) {
  check_arity(arity);
  std::vector<Word> domains, ranges;
  domains.reserve(pairs.size());
  ranges.reserve(pairs.size());
  for (const auto &p : pairs) {
    domains.push_back(p.domain);
    ranges.push_back(p.range);
  }
  require_complete_code(std::move(domains), arity, "domain");
  require_complete_code(std::move(ranges), arity, "range");
  return PrefixMap(arity, merge_siblings(std::move(pairs), arity));
}

bool PrefixMap::apply(const Word &w, Word &out) const {
  const auto i = find_domain_prefix(pairs_, w);
  if (i == std::string::npos) return false;
  out = pairs_[i].range.concat(w.suffix_from(pairs_[i].domain.size()));
  return true;
}

std::size_t PrefixMap::depth() const noexcept {
  std::size_t d = 0;
  for (const auto &p : pairs_) d = std::max(d, p.domain.size());
  return d;
}

std::string PrefixMap::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i) s += ",";
    s += pairs_[i].domain.str() + "->" + pairs_[i].range.str();
  }
  return s + "}";
}

PrefixMap compose(const PrefixMap &g, const PrefixMap &h) {
  require_same_arity(g.arity(), h.arity());
  if (g.is_identity()) return h;
  if (h.is_identity()) return g;
  const auto &gp = g.pairs();
  std::vector<WordPair> out;
  for (const auto &[d, r] : h.pairs()) {
    const auto i = find_domain_prefix(gp, r);
    if (i != std::string::npos) {
      out.push_back({d, gp[i].range.concat(r.suffix_from(gp[i].domain.size()))});
      continue;
    }
    auto [lo, hi] = domain_extensions(gp, r);
    for (auto j = lo; j < hi; ++j) {
      out.push_back({d.concat(gp[j].domain.suffix_from(r.size())), gp[j].range});
    }
  }
  return PrefixMap::reduce(std::move(out), g.arity());
}

PrefixMap product(std::span<const PrefixMap> factors, int arity) {
  PrefixMap acc(arity);
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) acc = compose(*it, acc);
  return acc;
}

PrefixMap invert(const PrefixMap &g) {
  std::vector<WordPair> out;
  out.reserve(g.pairs().size());
  for (const auto &[d, r] : g.pairs()) out.push_back({r, d});
  std::sort(out.begin(), out.end(), domain_less);
  return PrefixMap::reduce(std::move(out), g.arity());
}

PrefixMap commutator(const PrefixMap &g, const PrefixMap &h) {
  return compose(compose(g, h), compose(invert(g), invert(h)));
}

PrefixMap conjugate(const PrefixMap &c, const PrefixMap &g) {
  return compose(c, compose(g, invert(c)));
}

PrefixMap power(const PrefixMap &g, int n) {
  PrefixMap base = n < 0 ? invert(g) : g;
  PrefixMap acc(g.arity());
  for (int i = 0; i < (n < 0 ? -n : n); ++i) acc = compose(base, acc);
  return acc;
}

ClopenSet image_clopen(const PrefixMap &g, const ClopenSet &c) {
  require_same_arity(g.arity(), c.arity());
  const auto &gp = g.pairs();
  std::vector<Word> out;
  for (const auto &w : c.code()) {
    const auto i = find_domain_prefix(gp, w);
    if (i != std::string::npos) {
      out.push_back(gp[i].range.concat(w.suffix_from(gp[i].domain.size())));
      continue;
    }
    auto [lo, hi] = domain_extensions(gp, w);
    for (auto j = lo; j < hi; ++j) out.push_back(gp[j].range);
  }
  return ClopenSet::canonicalize(out, g.arity());
}

std::vector<WordPair> restrict_to(const PrefixMap &g, const ClopenSet &c) {
  require_same_arity(g.arity(), c.arity());
  const auto &gp = g.pairs();
  std::vector<WordPair> out;
  for (const auto &w : c.code()) {
    const auto i = find_domain_prefix(gp, w);
    if (i != std::string::npos) {
      out.push_back({w, gp[i].range.concat(w.suffix_from(gp[i].domain.size()))});
      continue;
    }
    auto [lo, hi] = domain_extensions(gp, w);
    out.insert(out.end(), gp.begin() + static_cast<std::ptrdiff_t>(lo),
               gp.begin() + static_cast<std::ptrdiff_t>(hi));
  }
  return out;
}

bool fixes_pointwise(const PrefixMap &g, const ClopenSet &c) {
  // A pair with d != r moves every point of [d] except possibly one.
  for (const auto &p : restrict_to(g, c)) {
    if (p.domain != p.range) return false;
  }
  return true;
}

bool in_rist(const PrefixMap &g, const ClopenSet &w) {
  return fixes_pointwise(g, complement(w));
}

ClopenSet support_upper(const PrefixMap &g) {
  std::vector<Word> moved;
  for (const auto &p : g.pairs()) {
    if (p.domain != p.range) moved.push_back(p.domain);
  }
  return ClopenSet::canonicalize(moved, g.arity());
}

ClopenSet moved_cylinder(const PrefixMap &g) {
  if (g.is_identity()) {
    throw Error(ErrorKind::NoMovedPoint, "the identity moves no point");
  }
  for (const auto &p : g.pairs()) {
    if (p.domain != p.range && !p.domain.comparable(p.range)) {
      return ClopenSet::cylinder(p.domain, g.arity());
    }
  }
  for (const auto &p : g.pairs()) {
    if (p.domain == p.range) continue;
    // Comparable and distinct: one side is a proper extension of the other.
    const bool expanding = p.domain.is_prefix_of(p.range);
    const Word &shorter = expanding ? p.domain : p.range;
    const Word &longer = expanding ? p.range : p.domain;
    const int first = longer.letter(shorter.size());
    const int other = first == 0 ? 1 : 0;
    // g([d w]) = [d u w] when r = d u; for d = r u the same holds for g^-1.
    return ClopenSet::cylinder(shorter.child(other), g.arity());
  }
  throw Error(ErrorKind::NoMovedPoint, "reduced map has only fixed pairs");
}

PrefixMap sigma_swap(const PrefixMap &g, const ClopenSet &y) {
  require_same_arity(g.arity(), y.arity());
  const ClopenSet gy = image_clopen(g, y);
  if (!are_disjoint(y, gy)) {
    throw Error(ErrorKind::Overlap, "sigma_swap needs Y and g(Y) disjoint; Y = " +
                                        y.str() + ", g(Y) = " + gy.str());
  }
  if (y.is_empty()) return PrefixMap(g.arity());
  std::vector<WordPair> pairs = restrict_to(g, y);
  auto back = restrict_to(invert(g), gy);
  pairs.insert(pairs.end(), back.begin(), back.end());
  const ClopenSet rest = complement(set_union(y, gy));
  for (const auto &w : rest.code()) pairs.push_back({w, w});
  return PrefixMap::reduce(std::move(pairs), g.arity());
}

std::vector<WordPair> matching_pairs(const ClopenSet &from, const ClopenSet &to) {
  require_same_arity(from.arity(), to.arity());
  if (from.is_empty() && to.is_empty()) return {};
  if (from.is_empty() || to.is_empty()) {
    throw Error(ErrorKind::InfeasibleSize,
                "cannot match " + from.str() + " with " + to.str() +
                    ": exactly one side is empty");
  }
  const std::size_t m = std::max(from.code_size(), to.code_size());
  const auto a = split_to_size(from, m);
  const auto b = split_to_size(to, m);
  std::vector<WordPair> out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) out.push_back({a[i], b[i]});
  return out;
}

PrefixMap complete_pairs(std::vector<WordPair> pairs, int arity) {
  std::vector<Word> domains, ranges;
  for (const auto &p : pairs) {
    domains.push_back(p.domain);
    ranges.push_back(p.range);
  }
  const auto dom = ClopenSet::canonicalize(domains, arity);
  const auto ran = ClopenSet::canonicalize(ranges, arity);
  auto rest = matching_pairs(complement(dom), complement(ran));
  pairs.insert(pairs.end(), rest.begin(), rest.end());
  return PrefixMap::reduce(std::move(pairs), arity);
}

PrefixMap patch(std::span<const PatchConstraint> constraints) {
  if (constraints.empty()) return PrefixMap(2);
  const int arity = constraints.front().map.arity();
  std::vector<ClopenSet> images;
  for (const auto &c : constraints) {
    require_same_arity(arity, c.map.arity());
    require_same_arity(arity, c.region.arity());
    images.push_back(image_clopen(c.map, c.region));
  }
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    for (std::size_t j = i + 1; j < constraints.size(); ++j) {
      if (!are_disjoint(constraints[i].region, constraints[j].region)) {
        throw Error(ErrorKind::Overlap, "patch regions " + constraints[i].region.str() +
                                            " and " + constraints[j].region.str() +
                                            " overlap");
      }
      if (!are_disjoint(images[i], images[j])) {
        throw Error(ErrorKind::Overlap, "patch images " + images[i].str() + " and " +
                                            images[j].str() + " overlap");
      }
    }
  }
  std::vector<WordPair> pairs;
  for (const auto &c : constraints) {
    auto part = restrict_to(c.map, c.region);
    pairs.insert(pairs.end(), part.begin(), part.end());
  }
  return complete_pairs(std::move(pairs), arity);
}

PrefixMap patch(std::initializer_list<PatchConstraint> constraints) {
  return patch(std::span<const PatchConstraint>(constraints.begin(), constraints.size()));
}

}  // namespace prefixgroup
