#include "ihg/transverse.hpp"

#include <deque>

#include "ihg/error.hpp"

namespace ihg {

TransverseCurve::TransverseCurve(const TriangulatedSurface& surface)
    : surface_(&surface), first_(surface.num_edges(), -1), last_(surface.num_edges(), -1) {}

TransverseCurve TransverseCurve::from_normal(const TriangulatedSurface& surface,
                                             std::span<const Weight> weights) {
  TransverseCurve curve(surface);
  std::vector<std::vector<int>> ids(surface.num_edges());
  for (int e = 0; e < surface.num_edges(); ++e) {
    ids[e] = curve.add_points(e, static_cast<int>(weights[e]));
  }
  const CornerCounts corners = corner_counts(surface, weights);
  for (int t = 0; t < surface.num_triangles(); ++t) {
    const Triangle& tri = surface.triangle(t);
    for (int k = 0; k < 3; ++k) {
      const Side& out = tri.sides[k];
      const Side& in = tri.sides[(k + 2) % 3];
      const Weight w_out = weights[out.edge];
      const Weight w_in = weights[in.edge];
      for (Weight j = 0; j < corners[t][k]; ++j) {
        const int p = ids[out.edge][global_slot(out, j, w_out)];
        const int q = ids[in.edge][global_slot(in, w_in - 1 - j, w_in)];
        curve.connect(t, p, q);
      }
    }
  }
  return curve;
}

std::vector<int> TransverseCurve::add_points(int edge, int count) {
  std::vector<int> ids;
  ids.reserve(count);
  for (int i = 0; i < count; ++i) {
    const int id = static_cast<int>(points_.size());
    Point p{edge, {-1, -1}};
    p.prev = last_[edge];
    points_.push_back(p);
    if (last_[edge] >= 0) points_[last_[edge]].next = id;
    else first_[edge] = id;
    last_[edge] = id;
    ids.push_back(id);
  }
  return ids;
}

int TransverseCurve::insert_point(int edge, bool at_tail) {
  if (!at_tail || first_[edge] < 0) return add_points(edge, 1).front();
  const int id = static_cast<int>(points_.size());
  Point p{edge, {-1, -1}};
  p.next = first_[edge];
  points_.push_back(p);
  points_[first_[edge]].prev = id;
  first_[edge] = id;
  return id;
}

int TransverseCurve::slot_for(int p, int triangle) const {
  const auto& inc = surface_->incidences(points_[p].edge);
  if (inc[0].triangle == triangle) return 0;
  if (inc[1].triangle == triangle) return 1;
  throw InternalError("point does not lie on a side of the triangle");
}

void TransverseCurve::connect(int triangle, int p, int q) {
  points_[p].arc[slot_for(p, triangle)] = q;
  points_[q].arc[slot_for(q, triangle)] = p;
}

int TransverseCurve::partner(int p, int triangle) const {
  return points_[p].arc[slot_for(p, triangle)];
}

void TransverseCurve::set_partner(int p, int triangle, int q) {
  points_[p].arc[slot_for(p, triangle)] = q;
}

int TransverseCurve::end_point(int edge, bool from_tail) const {
  return from_tail ? first_[edge] : last_[edge];
}

void TransverseCurve::erase(int p) {
  Point& pt = points_[p];
  if (!pt.alive) return;
  if (pt.prev >= 0) points_[pt.prev].next = pt.next;
  else first_[pt.edge] = pt.next;
  if (pt.next >= 0) points_[pt.next].prev = pt.prev;
  else last_[pt.edge] = pt.prev;
  pt.alive = false;
}

int TransverseCurve::normalize() {
  int collapsed = 0;
  std::deque<int> work;
  for (int p = 0; p < static_cast<int>(points_.size()); ++p) {
    if (points_[p].alive) work.push_back(p);
  }
  while (!work.empty()) {
    const int p = work.front();
    work.pop_front();
    if (!points_[p].alive) continue;
    const auto& inc = surface_->incidences(points_[p].edge);
    for (int i = 0; i < 2; ++i) {
      const int q = points_[p].arc[i];
      if (q < 0 || points_[q].edge != points_[p].edge || !adjacent(p, q)) continue;
      // Arc p-q in inc[i] returns to its own side: push it across the edge.
      const int other = inc[1 - i].triangle;
      const int x = points_[p].arc[1 - i];
      const int y = points_[q].arc[1 - i];
      const int before = points_[p].prev == q ? points_[q].prev : points_[p].prev;
      const int after = points_[p].next == q ? points_[q].next : points_[p].next;
      if (x == q) {
        ++collapsed;
      } else {
        set_partner(x, other, y);
        set_partner(y, other, x);
        work.push_back(x);
        work.push_back(y);
      }
      erase(p);
      erase(q);
      if (before >= 0) work.push_back(before);
      if (after >= 0) work.push_back(after);
      break;
    }
  }
  return collapsed;
}

Weights TransverseCurve::weights() const {
  Weights w(surface_->num_edges(), 0);
  for (const Point& p : points_) {
    if (p.alive) ++w[p.edge];
  }
  return w;
}

bool TransverseCurve::is_normal() const {
  for (const Point& p : points_) {
    if (!p.alive) continue;
    for (int q : p.arc) {
      if (q < 0 || points_[q].edge == p.edge) return false;
    }
  }
  return true;
}

}  // namespace ihg
