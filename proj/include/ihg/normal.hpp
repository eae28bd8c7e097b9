#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "ihg/surface.hpp"

namespace ihg {

using Weight = std::int64_t;
using Weights = std::vector<Weight>;
using CornerCounts = std::vector<std::array<Weight, 3>>;

/// Shared immutable surface for genus g (built once per genus).
const TriangulatedSurface& surface_of_genus(int genus);

/// Genus implied by a weight vector of length 6g-3; rejects other lengths.
int genus_of_length(std::size_t length);

/// Per-triangle admissibility: even sums and triangle inequalities, not zero.
/// Throws InvalidInput on a wrong length.
bool validate(const TriangulatedSurface& surface, std::span<const Weight> weights);

/// Corner counts: entry [t][k] counts arcs cutting corner k of triangle t.
CornerCounts corner_counts(const TriangulatedSurface& surface, std::span<const Weight> weights);
Weights weights_from_corners(const TriangulatedSurface& surface, const CornerCounts& corners);

/// Weight vector of the loop encircling the vertex.
Weights vertex_link(const TriangulatedSurface& surface);

/// One arc of a traced curve inside a triangle.
struct ArcStep {
  int triangle;
  int in_side;
  int out_side;
};

struct TracedComponent {
  Weights weights;
  std::vector<ArcStep> itinerary;  // cyclic
};

/// Global strand slot on an edge, counted along the edge orientation.
/// Corner arcs of corner k occupy the local slots nearest k on both sides.
Weight global_slot(const Side& side, Weight local, Weight width);

/// Splits a normal multicurve into connected components. Components appear in
/// order of their first strand (lowest edge, lowest slot).
std::vector<TracedComponent> trace(const TriangulatedSurface& surface,
                                   std::span<const Weight> weights);

/// Upper bound on strands handled by explicit tracing.
inline constexpr Weight kMaxStrands = 20'000'000;

/// Results of pushing each innermost strand around the vertex across it.
std::vector<Weights> vertex_push_neighbours(const TriangulatedSurface& surface, const Weights& weights);

/// Canonical normal representative of an essential single curve: isotopies
/// across the vertex are applied while they lower the total weight, and the
/// lexicographically least vector of the minimal-weight orbit is returned.

Weights canonicalize(const TriangulatedSurface& surface, const Weights& weights);

Weight total_weight(std::span<const Weight> weights);

}  // namespace ihg
