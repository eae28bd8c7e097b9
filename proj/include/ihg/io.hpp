#pragma once

#include <string>

#include "json.hpp"

#include "ihg/metric.hpp"

namespace ihg {

/// JSON with keys kept in insertion order.
using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "ihg 1.0.0";

/// {"genus": g, "coords": [...]}
Json to_json(const CurveClass& curve);
/// Accepts {"genus", "coords"} or {"coords"}; validates and canonicalizes.
CurveClass curve_from_json(const Json& j);

/// Coordinates plus homology, words and classification flags.
Json curve_report(const CurveClass& curve);

/// {"kind": "disk|annulus|pants", "curves": [...], "region": id (pants only)}
Json to_json(const Vertex& vertex);
/// Checks the vertex invariants, including that a pants region exists.
Vertex vertex_from_json(const Json& j);

Json to_json(const PoolRecipe& recipe);
PoolRecipe recipe_from_json(const Json& j);

/// {"recipe": {...}, "curves": [...]}
Json to_json(const CurvePool& pool);
CurvePool pool_from_json(const Json& j);

/// {"genus", "vertices": [...], "edges": [[i, j], ...]}
Json to_json(const ComplexGraph& graph);
/// Recomputes adjacency and rejects a document whose edge list disagrees.
ComplexGraph graph_from_json(const Json& j);

/// Undirected DOT graph; vertices are labelled by kind and index.
std::string to_dot(const ComplexGraph& graph);

/// Counts, Euler characteristic, edge table and triangles.
Json surface_json(const TriangulatedSurface& surface);

}  // namespace ihg
