#pragma once

#include <vector>

#include "ihg/curve.hpp"

namespace ihg {

/// Geometric intersection number. Rejects a genus mismatch.
Weight intersection_number(const CurveClass& first, const CurveClass& second);

/// T_about^power(curve). A positive twist turns right onto `about`, so that
/// homology(T(x)) = homology(x) + power * <x, about> * homology(about) up to sign.
CurveClass dehn_twist(const CurveClass& curve, const CurveClass& about, int power);

/// One region of the complement of a multicurve.
struct ComplementComponent {
  int genus;
  std::vector<int> boundary;  // indices into the input list, sorted, with repeats
  /// Per boundary entry: +1 if the region lies left of the curve oriented by
  /// its homology class, -1 if right, 0 for a separating curve.
  std::vector<int> boundary_sides;
  int region_id;              // least cell of the region in the summed realization
  int boundary_region_id;     // region_id of the same region when only its own distinct
                              // boundary curves are realized
  int euler_characteristic() const { return 2 - 2 * genus - static_cast<int>(boundary.size()); }
  friend bool operator==(const ComplementComponent&, const ComplementComponent&) = default;
};

/// Cuts the surface along pairwise disjoint curves. Components are ordered by
/// region_id. Rejects intersecting inputs.
std::vector<ComplementComponent> complement_components(const std::vector<CurveClass>& curves);

}  // namespace ihg
