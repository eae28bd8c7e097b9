#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ihg/complex.hpp"
#include "ihg/pool.hpp"

namespace ihg {

/// Curve vertices of the pool, plus (if asked) every incompressible pants
/// bounded by two or three pairwise disjoint pool curves. Vertices are in
/// canonical order.
ComplexGraph build_graph(const std::vector<CurveClass>& pool, bool include_pants);

/// Neighbour lists of an abstract graph.
using Adjacency = std::vector<std::vector<int>>;

/// Adjacency from an edge list; rejects out-of-range endpoints and loops.
Adjacency adjacency_from_edges(int num_vertices, const std::vector<std::pair<int, int>>& edges);

/// BFS distances from a vertex; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Adjacency& graph, int source);
std::vector<int> bfs_distances(const ComplexGraph& graph, int source);

/// Shortest path length in the finite graph, or nullopt when unreachable.
/// This is an upper bound for the distance in the full complex.
std::optional<int> bfs_distance(const ComplexGraph& graph, int u, int v);

/// Replaces each pants vertex by the vertex over its first boundary curve and
/// collapses repeats. Rejects paths with non-adjacent steps or pants endpoints.
std::vector<Vertex> project_path(const std::vector<Vertex>& path);

/// True iff consecutive vertices are curve vertices with disjoint curves.
bool is_curve_path(const std::vector<Vertex>& path);

/// Random walks of `length` steps between curve vertices.
std::vector<std::vector<int>> sample_paths(const ComplexGraph& graph, int count, int length,
                                           std::uint64_t seed);

struct CoboundedReport {
  int pants = 0;
  std::vector<int> violations;  // pants vertices without a curve-vertex neighbour
  int max_distance = 0;         // to the nearest curve vertex; -1 if some pants has none
};

CoboundedReport cobounded_check(const ComplexGraph& graph);

struct DeltaReport {
  long twice_delta = 0;  // the estimate is twice_delta / 2
  long quadruples = 0;
  bool exhaustive = false;
  int component_size = 0;
  std::string value() const;  // "0", "1/2", "1", ...
};

/// Largest four-point defect over sampled quadruples of the largest
/// connected component. Rejects components with fewer than four vertices.
DeltaReport delta_estimate(const Adjacency& graph, long sample_count, std::uint64_t seed);
DeltaReport delta_estimate(const ComplexGraph& graph, long sample_count, std::uint64_t seed);

/// Image of a homology class under the mapping class of the word.
HomologyClass act_on_homology(const TwistWord& word, int genus, HomologyClass h);

/// Image of a vertex. Pants images are located by their boundary curves and,
/// when two pants share them, by the side of a boundary curve.
Vertex apply_mapping_class(const TwistWord& word, const Vertex& vertex);
std::vector<Vertex> apply_mapping_class(const TwistWord& word, const std::vector<Vertex>& vertices);

struct R5Witness {
  CurveClass alpha, beta, gamma;
  Vertex first, second;  // the two pants bounded by alpha, beta, gamma
  std::string gamma_source;
  std::string annotation;
};

/// Recipe whose pool supplies the third curve of the witness.
PoolRecipe r5_recipe();

/// alpha = T_a1^2(b1), beta = T_a2^2(b2) and a pool curve gamma (or its image
/// under T_a1^2 T_a2^2) cutting the genus-2 surface into two incompressible
/// pants with the same boundary. Throws SearchFailure if the pool has none.
R5Witness r5_witness(const std::vector<CurveClass>& pool);

struct InvolutionCandidate {
  std::string name;
  std::string word;
  int curves_checked = 0;
  int curves_fixed = 0;
  int vertices_checked = 0;
  int squares_identity = 0;
  int meridians_preserved = 0;
  std::string pants_pair;  // "fixed", "swapped" or "moved"
  bool passed = false;
};

struct InvolutionReport {
  std::vector<InvolutionCandidate> candidates;
  std::string accepted;  // empty if none passed
  bool verdict = false;
  std::string diagnostic;
};

/// The two hyperelliptic candidates at genus 2, checked on up to `samples`
/// pool curves and the r5 pants pair.
InvolutionReport involution_check(const std::vector<CurveClass>& pool, const R5Witness& r5,
                                  int samples, std::uint64_t seed);

}  // namespace ihg
