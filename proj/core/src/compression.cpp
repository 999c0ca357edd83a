#include "prefixgroup/compression.hpp"

#include <vector>

#include "prefixgroup/error.hpp"

namespace prefixgroup {

PrefixMap transporter(const ClopenSet &y, const ClopenSet &o) {
  if (y.arity() != o.arity()) {
    throw Error(ErrorKind::ArityMismatch, "transporter operands have different arities");
  }
  if (y.is_empty() || o.is_empty()) {
    throw Error(ErrorKind::Precondition, "transporter needs non-empty Y and O");
  }
  if (is_subset(y, o)) return PrefixMap(y.arity());
  if (y.is_full()) {
    throw Error(ErrorKind::Precondition, "the whole space only maps into itself");
  }
  // o is proper here, since y ⊄ o.
  const std::size_t n = y.code_size();
  const auto refined = split_to_size(o, reachable_size(o, n));
  std::vector<WordPair> pairs;
  for (std::size_t i = 0; i < n; ++i) pairs.push_back({y.code()[i], refined[i]});
  return complete_pairs(std::move(pairs), y.arity());
}

PrefixMap carry(const ClopenSet &from, const ClopenSet &to) {
  auto pairs = matching_pairs(from, to);
  auto rest = matching_pairs(complement(from), complement(to));
  pairs.insert(pairs.end(), rest.begin(), rest.end());
  return PrefixMap::reduce(std::move(pairs), from.arity());
}

PrefixMap base_wanderer(int arity) {
  check_arity(arity);
  const int top = arity - 1;
  auto w = [](std::vector<int> letters) { return Word::from_letters(letters); };
  std::vector<WordPair> pairs;
  pairs.push_back({w({0}), w({0, 0})});
  for (int a = 1; a <= arity - 2; ++a) pairs.push_back({w({a}), w({a})});
  for (int b = 0; b <= arity - 2; ++b) pairs.push_back({w({top, b}), w({0, b + 1})});
  pairs.push_back({w({top, top}), w({top})});
  return PrefixMap::reduce(std::move(pairs), arity);
}

ClopenSet base_wandering_cylinder(int arity) {
  return ClopenSet::cylinder(Word("01"), arity);
}

WanderingWitness wandering_witness(const ClopenSet &y) {
  if (!y.is_proper()) {
    throw Error(ErrorKind::Precondition,
                "wandering_witness needs a non-empty proper clopen set, got " + y.str());
  }
  const int k = y.arity();
  const ClopenSet z = base_wandering_cylinder(k);
  const PrefixMap f = transporter(y, z);
  return {conjugate(invert(f), base_wanderer(k)), z, f};
}

bool orbit_pairwise_disjoint(const PrefixMap &g, const ClopenSet &y, int window) {
  std::vector<ClopenSet> orbit;
  const PrefixMap gi = invert(g);
  ClopenSet cur = y;
  for (int n = 0; n < window; ++n) cur = image_clopen(gi, cur);
  for (int n = -window; n <= window; ++n) {
    orbit.push_back(cur);
    cur = image_clopen(g, cur);
  }
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (std::size_t j = i + 1; j < orbit.size(); ++j) {
      if (!are_disjoint(orbit[i], orbit[j])) return false;
    }
  }
  return true;
}

PrefixMap join_compression(const ClopenSet &y, const ClopenSet &z) {
  if (y.is_empty() || z.is_empty()) {
    throw Error(ErrorKind::Precondition, "join_compression needs non-empty Y and Z");
  }
  if (!are_disjoint(y, z)) {
    throw Error(ErrorKind::Overlap, "join_compression needs disjoint Y and Z");
  }
  const ClopenSet w = complement(set_union(y, z));
  if (w.is_empty()) {
    throw Error(ErrorKind::DegenerateRegion, "Y and Z cover the whole space");
  }
  const int k = y.arity();
  const PrefixMap g1 = transporter(y, w);
  const ClopenSet landing = image_clopen(g1, y);
  // Two disjoint non-empty parts of g1(Y).
  const auto words = split_to_size(landing, reachable_size(landing, 2));
  const ClopenSet part_y = ClopenSet::cylinder(words.front(), k);
  const ClopenSet part_z = set_difference(landing, part_y);
  const PrefixMap g2 = transporter(y, part_y);
  const PrefixMap g3 = transporter(z, part_z);
  const PrefixMap h = compose(sigma_swap(g2, y), sigma_swap(g3, z));
  return compose(invert(g1), h);
}

CoverFamily min_cover_3(int arity) {
  check_arity(arity);
  auto set = [arity](std::initializer_list<const char *> ws) {
    std::vector<Word> v;
    for (const char *s : ws) v.emplace_back(s);
    return ClopenSet::canonicalize(v, arity);
  };
  if (arity == 2) {
    return {{set({"00", "110"}), set({"01", "111"}), set({"10", "11"})},
            {set({"00"}), set({"01"}), set({"10"})}};
  }
  // J_i misses exactly the two private cylinders of the other members; the
  // cylinders [i0] leave room outside U1 ∪ U2 ∪ U3.
  CoverFamily fam{{ClopenSet(arity), ClopenSet(arity), ClopenSet(arity)},
                  {ClopenSet(arity), ClopenSet(arity), ClopenSet(arity)}};
  for (int i = 0; i < 3; ++i) {
    fam.u[i] = ClopenSet::cylinder(Word::from_letters({i, 0}), arity);
  }
  for (int i = 0; i < 3; ++i) {
    fam.j[i] = complement(set_union(fam.u[(i + 1) % 3], fam.u[(i + 2) % 3]));
  }
  return fam;
}

}  // namespace prefixgroup
