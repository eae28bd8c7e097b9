#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ihg/kernel.hpp"

namespace ihg {

enum class VertexKind { Disk, Annulus, Pants };

/// "disk", "annulus" or "pants".
const char* kind_name(VertexKind kind);
VertexKind parse_kind(const std::string& name);

/// Vertex of the incompressible-surface complex.
struct Vertex {
  VertexKind kind = VertexKind::Annulus;
  std::vector<CurveClass> curves;  // boundary curves in weight order; three for pants
  int region = -1;                 // pants only: region id among its own boundary curves

  int genus() const { return curves.front().genus(); }
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Canonical vertex order: kind, then boundary curves, then region.
bool vertex_order(const Vertex& x, const Vertex& y);

/// Disk over a meridian, annulus over any other essential curve.
Vertex classify_curve_vertex(const CurveClass& curve);

/// Pants vertex from its boundary curves and region id. Checks the invariants.
Vertex make_pants(std::vector<CurveClass> boundary, int region);

struct PantsScan {
  std::vector<Vertex> incompressible;
  std::vector<ComplementComponent> compressible;  // pants with a meridian boundary
};

/// Classifies the pants among the complementary regions of disjoint curves.
PantsScan scan_pants(const std::vector<CurveClass>& curves);

/// The incompressible pants of the complement. Rejects intersecting inputs.
std::vector<Vertex> pants_vertices(const std::vector<CurveClass>& curves);

/// Distinct vertices whose boundary curves are pairwise disjoint (shared
/// curves allowed).
bool adjacent(const Vertex& u, const Vertex& v);

struct SimplexReport {
  std::vector<Vertex> vertices;
  std::vector<std::vector<char>> adjacency;
  bool verdict = false;
  int disks = 0;
  int annuli = 0;
  int pants = 0;
  std::string diagnostic;
};

/// Pairwise adjacency of the vertices.
SimplexReport is_simplex(const std::vector<Vertex>& vertices);

/// Annuli over a non-meridian decomposition plus its pants; the verdict needs
/// exactly 3g-3 annuli, 2g-2 pants and a simplex.
SimplexReport verify_max_simplex(int genus, const std::vector<CurveClass>& decomposition);

struct MeridianLinkReport {
  SimplexReport simplex;
  int compressible_pants = 0;
  int expected_vertices = 0;  // 5g-7
  bool verdict = false;
};

/// Disk over the single meridian of the decomposition, annuli over the other
/// curves and the incompressible pants.
MeridianLinkReport verify_meridian_link(int genus, const std::vector<CurveClass>& decomposition);

/// Finite subgraph of the complex on a vertex pool.
struct ComplexGraph {
  int genus = 0;
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;   // (i, j) with i < j, sorted
  std::vector<std::vector<int>> neighbors;  // sorted

  int size() const { return static_cast<int>(vertices.size()); }
  bool has_edge(int u, int v) const;
  /// Index of the vertex, or -1.
  int find(const Vertex& v) const;
};

/// Graph on the vertices with edges by adjacent(). Duplicates are rejected.
ComplexGraph induced_graph(std::vector<Vertex> vertices);

/// Induced graph on the pool vertices adjacent to v.
ComplexGraph link_in_pool(const Vertex& v, const std::vector<Vertex>& pool);

/// Members of one maximum clique, by exact branch and bound. Refuses graphs
/// with more than vertex_limit vertices.
std::vector<int> maximum_clique(const ComplexGraph& graph, int vertex_limit = 2000);
int max_clique(const ComplexGraph& graph, int vertex_limit = 2000);

struct ConeReport {
  bool verdict = false;
  std::optional<Vertex> apex;  // annulus over a boundary curve joined to the whole link
  int link_size = 0;
};

ConeReport cone_vertex_check(const Vertex& pants, const std::vector<Vertex>& pool);

struct StarReport {
  int link_size = 0;
  int covered = 0;
  double coverage = 0.0;
  bool insufficient = true;                     // some link member has no witness
  std::vector<std::pair<int, int>> witnesses;  // (Q, R) indices into the pool
};

/// For each Q in the pooled link of v, looks for R in the link meeting Q.
StarReport star_property_check(const Vertex& v, const std::vector<Vertex>& pool);

}  // namespace ihg
