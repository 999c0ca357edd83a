#pragma once

#include <array>

#include "prefixgroup/clopen.hpp"
#include "prefixgroup/prefix_map.hpp"

namespace prefixgroup {

/// An element h with h(y) ⊆ o. Returns the identity when y ⊆ o already.
/// Otherwise code(y) is sent word-for-word onto the shortest words of a
/// refinement of code(o), and the complements are matched canonically.
PrefixMap transporter(const ClopenSet &y, const ClopenSet &o);

/// An element carrying `from` exactly onto `to`.
PrefixMap carry(const ClopenSet &from, const ClopenSet &to);

/// The fixed contracting/expanding element 0->00, 10->01, 11->1 (for k = 2;
/// the analogue 0->00, a->a, (k-1)b->0(b+1), (k-1)(k-1)->(k-1) in general).
PrefixMap base_wanderer(int arity);
/// The cylinder [01], whose orbit under base_wanderer is pairwise disjoint.
ClopenSet base_wandering_cylinder(int arity);

struct WanderingWitness {
  PrefixMap g;      // f^-1 g0 f
  ClopenSet z;      // the wandering cylinder of g0
  PrefixMap f;      // transporter with f(y) ⊆ z
};

/// An element whose integer powers carry y to pairwise disjoint sets.
WanderingWitness wandering_witness(const ClopenSet &y);

/// True iff g^n(y), |n| <= window, are pairwise disjoint.
bool orbit_pairwise_disjoint(const PrefixMap &g, const ClopenSet &y, int window);

/// g with g(y ∪ z) ⊆ y, built as g1^-1 σ(g2, y) σ(g3, z) where g1 sends y into
/// the complement w of y ∪ z and g2, g3 send y, z into disjoint parts of g1(y).
PrefixMap join_compression(const ClopenSet &y, const ClopenSet &z);

/// A minimal three-element cover J1, J2, J3 together with private cylinders
/// U_i ⊆ J_i disjoint from the other two members.
struct CoverFamily {
  std::array<ClopenSet, 3> j;
  std::array<ClopenSet, 3> u;

  /// J1, J2, J3, U1, U2, U3.
  std::array<ClopenSet, 6> members() const { return {j[0], j[1], j[2], u[0], u[1], u[2]}; }
};

CoverFamily min_cover_3(int arity = 2);

}  // namespace prefixgroup
