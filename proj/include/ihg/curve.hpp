#pragma once

#include <compare>
#include <vector>

#include "ihg/normal.hpp"
#include "ihg/words.hpp"

namespace ihg {

using HomologyClass = std::vector<long>;  // ([a_1],[b_1],...,[a_g],[b_g])

/// True iff the weights trace to a single component other than the vertex link.
bool is_single_essential_curve(const TriangulatedSurface& surface, std::span<const Weight> weights);

/// Letters read along a traced component (cyclic, unreduced).
std::vector<Pi1Letter> crossing_word(const TriangulatedSurface& surface,
                                     const TracedComponent& component);

/// Signed crossings of the loop edges, arranged as a homology class.
HomologyClass crossing_homology(const TriangulatedSurface& surface,
                                const TracedComponent& component);

/// Flips the sign so that the first nonzero entry is positive.
HomologyClass normalize_sign(HomologyClass h);

/// Symplectic pairing with <a_i, b_i> = +1.
long symplectic(const HomologyClass& x, const HomologyClass& y);

/// Isotopy class of an essential simple closed curve, identified by its
/// canonical normal coordinates.
class CurveClass {
 public:
  /// Checks admissibility and essentiality, then canonicalizes.
  static CurveClass from_coords(const Weights& weights);
  static CurveClass from_coords(int genus, const Weights& weights);

  int genus() const { return genus_; }
  const Weights& coords() const { return coords_; }
  Weight total_weight() const;

  /// Homology with the sign chosen so the first nonzero entry is positive.
  const HomologyClass& homology() const { return homology_; }
  const Pi1Word& pi1_word() const { return word_; }
  const HandlebodyWord& handlebody_word() const { return handlebody_; }
  bool is_meridian() const { return handlebody_.empty(); }
  bool is_separating() const;

  friend bool operator==(const CurveClass& x, const CurveClass& y) { return x.coords_ == y.coords_; }
  friend std::strong_ordering operator<=>(const CurveClass& x, const CurveClass& y);

 private:
  CurveClass() = default;
  int genus_ = 0;
  Weights coords_;
  HomologyClass homology_;
  Pi1Word word_;
  HandlebodyWord handlebody_;
};

inline const HomologyClass& homology(const CurveClass& c) { return c.homology(); }
inline const Pi1Word& pi1_word(const CurveClass& c) { return c.pi1_word(); }
inline const HandlebodyWord& handlebody_word(const CurveClass& c) { return c.handlebody_word(); }
inline bool is_meridian(const CurveClass& c) { return c.is_meridian(); }
inline bool is_separating(const CurveClass& c) { return c.is_separating(); }

/// Canonical order: total weight, then coordinates.
bool weight_order(const CurveClass& x, const CurveClass& y);

}  // namespace ihg
