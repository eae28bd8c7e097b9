#pragma once

#include <vector>

#include "ihg/normal.hpp"

namespace ihg {

/// A point in the interior of a polygon side, at position/1000 along the side
/// in counter-clockwise direction.
struct ChordEnd {
  int side;
  int position;  // 1..999
};

/// Straight segment across the polygon between two side points.
struct Chord {
  ChordEnd from;
  ChordEnd to;
};

/// Normal coordinates of a curve drawn as straight chords in the 4g-gon.
///
/// Endpoints must match under the side gluing (position p on one side is
/// position 1000 - p on its partner) and chords must not cross. Straight
/// chords meet each fan triangle in corner arcs, so the result is normal.
Weights coords_from_chords(const TriangulatedSurface& surface, const std::vector<Chord>& chords);

}  // namespace ihg
