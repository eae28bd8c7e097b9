#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ihg/curve.hpp"

namespace ihg {

/// Named curves on the genus-g surface.
///
/// a1..ag, b1..bg: the standard generators pushed off the loop edges.
/// c1..c(2g+1): the chain a1, b1, d1, b2, d2, ..., bg, ag where d_i runs once
/// through handles i and i+1.
/// fig1_1..: a pants decomposition by non-separating non-meridian curves (g >= 3).
/// fig2_1..: a pants decomposition whose first curve b1 is the only meridian (g >= 3).
class ReferenceCurveSet {
 public:
  explicit ReferenceCurveSet(int genus);

  int genus() const { return genus_; }
  const std::vector<std::pair<std::string, CurveClass>>& entries() const { return entries_; }
  bool contains(const std::string& label) const;
  /// Rejects unknown labels. Accepts "c_1" as well as "c1".
  const CurveClass& at(const std::string& label) const;

  std::vector<CurveClass> chain() const;
  std::vector<CurveClass> fig1() const;
  std::vector<CurveClass> fig2() const;

 private:
  std::vector<CurveClass> prefixed(const std::string& prefix) const;
  int genus_;
  std::vector<std::pair<std::string, CurveClass>> entries_;
};

/// Shared instance per genus (built once).
const ReferenceCurveSet& reference_curves(int genus);

}  // namespace ihg
