#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ihg {

/// Letter of the boundary word a_1 b_1 a_1^-1 b_1^-1 ... a_g b_g a_g^-1 b_g^-1.
struct SignedLetter {
  char symbol;  // 'a' or 'b'
  int handle;   // 0-based
  int sign;     // +1 or -1

  friend bool operator==(const SignedLetter&, const SignedLetter&) = default;
};

/// The standard 4g-gon: side k runs from polygon vertex V_k to V_{k+1}.
struct PolygonScheme {
  int genus = 0;
  std::vector<SignedLetter> boundary_word;  // 4g letters
  std::vector<int> side_pairing;            // fixed-point-free involution on sides

  static PolygonScheme standard(int genus);
};

enum class EdgeKind { LoopA, LoopB, Chord };

struct Edge {
  EdgeKind kind;
  int index;  // handle for loop edges, polygon vertex j for chord V_0 V_j
};

/// One side of a triangle: the edge it lies on and whether the triangle's
/// counter-clockwise boundary traverses the edge along its orientation.
struct Side {
  int edge;
  bool forward;
  int polygon_side;  // -1 for chords
};

struct Triangle {
  std::array<Side, 3> sides;          // side k runs from local vertex k to k+1
  std::array<int, 3> polygon_vertex;  // V_0, V_{t+1}, V_{t+2}
};

/// A triangle corner. All corners sit at the single vertex of the surface.
struct Corner {
  int triangle;
  int local;  // local vertex index 0..2
  friend bool operator==(const Corner&, const Corner&) = default;
};

struct SideRef {
  int triangle;
  int side;
};

/// Fan triangulation of the 4g-gon from V_0, with one vertex after gluing.
///
/// Edge numbering: loop edge of a_i is 2i, loop edge of b_i is 2i+1, the chord
/// V_0 V_j (j = 2..4g-2) is 2g + j - 2. Loop edges are oriented along polygon
/// sides 4i and 4i+1, chords from V_0 to V_j. Triangle t has vertices
/// (V_0, V_{t+1}, V_{t+2}).
class TriangulatedSurface {
 public:
  explicit TriangulatedSurface(int genus);

  int genus() const { return genus_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_triangles() const { return static_cast<int>(triangles_.size()); }
  int euler_characteristic() const { return 1 - num_edges() + num_triangles(); }

  const Edge& edge(int e) const { return edges_[e]; }
  const Triangle& triangle(int t) const { return triangles_[t]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const PolygonScheme& scheme() const { return scheme_; }

  /// The two triangle sides carrying edge e.
  const std::array<SideRef, 2>& incidences(int e) const { return incidences_[e]; }
  /// The triangle side glued to (t, s).
  SideRef across(int t, int s) const;

  /// Corners in counter-clockwise order around the vertex.
  const std::vector<Corner>& rotation() const { return rotation_; }
  int num_corners() const { return static_cast<int>(rotation_.size()); }

  std::string edge_label(int e) const;

 private:
  int genus_;
  PolygonScheme scheme_;
  std::vector<Edge> edges_;
  std::vector<Triangle> triangles_;
  std::vector<std::array<SideRef, 2>> incidences_;
  std::vector<Corner> rotation_;
};

/// Rejects g < 2.
TriangulatedSurface build_surface(int genus);

/// Letters of pi_1(surface) read by a transverse curve.
///
/// Generator 2i is the class of the curve a_i (it crosses the b_i edge once),
/// generator 2i+1 the class of b_i (it crosses the a_i edge once).
struct Pi1Letter {
  int generator;
  int sign;
  friend bool operator==(const Pi1Letter&, const Pi1Letter&) = default;
  friend auto operator<=>(const Pi1Letter&, const Pi1Letter&) = default;
};

/// Letter emitted when a curve leaves the polygon through each side.
/// Leaving through side 4i+1 emits a_i, through 4i+3 emits a_i^-1,
/// through 4i emits b_i, through 4i+2 emits b_i^-1.
std::vector<Pi1Letter> side_pairing_table(const TriangulatedSurface& surface);

std::string generator_name(int generator);

}  // namespace ihg
