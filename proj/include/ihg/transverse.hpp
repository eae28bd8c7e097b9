#pragma once

#include <span>
#include <vector>

#include "ihg/normal.hpp"

namespace ihg {

/// A curve (or multicurve) transverse to the triangulation but not
/// necessarily normal: an ordered list of crossing points per edge and, in
/// every triangle, a non-crossing matching of the points on its sides.
class TransverseCurve {
 public:
  explicit TransverseCurve(const TriangulatedSurface& surface);

  static TransverseCurve from_normal(const TriangulatedSurface& surface,
                                     std::span<const Weight> weights);

  /// Appends points to edge e in edge-orientation order; returns their ids.
  std::vector<int> add_points(int edge, int count);
  /// Inserts one point at the tail or head end of edge e.
  int insert_point(int edge, bool at_tail);
  /// Joins p and q by an arc inside triangle t (both must lie on sides of t).
  void connect(int triangle, int p, int q);

  int edge_of(int p) const { return points_[p].edge; }
  /// Partner of p across its arc in triangle t.
  int partner(int p, int triangle) const;
  /// Point on edge e nearest its tail (from_tail) or head; -1 if none.
  int end_point(int edge, bool from_tail) const;
  /// Drops a point; arcs touching it must be rewired or dropped by the caller.
  void erase(int p);
  void set_partner(int p, int triangle, int q);

  /// Removes arcs entering and leaving a triangle through the same side by
  /// pushing them across that side. Returns the number of closed loops that
  /// collapsed completely (each bounded a disk).
  int normalize();

  Weights weights() const;
  bool is_normal() const;

 private:
  struct Point {
    int edge;
    int arc[2];  // partner in incidences(edge)[0 / 1].triangle
    int prev = -1;
    int next = -1;
    bool alive = true;
  };
  int slot_for(int p, int triangle) const;
  bool adjacent(int p, int q) const { return points_[p].next == q || points_[p].prev == q; }

  const TriangulatedSurface* surface_;
  std::vector<Point> points_;
  std::vector<int> first_;  // point nearest the tail of each edge
  std::vector<int> last_;   // point nearest the head
};

}  // namespace ihg
