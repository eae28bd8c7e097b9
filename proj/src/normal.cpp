#include "ihg/normal.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>

#include "ihg/error.hpp"
#include "ihg/transverse.hpp"

namespace ihg {

const TriangulatedSurface& surface_of_genus(int genus) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<TriangulatedSurface>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[genus];
  if (!slot) slot = std::make_unique<TriangulatedSurface>(genus);
  return *slot;
}

int genus_of_length(std::size_t length) {
  if (length < 9 || (length + 3) % 6 != 0) {
    throw InvalidInput("weight vector length " + std::to_string(length) +
                       " is not 6g-3 for any genus g >= 2");
  }
  return static_cast<int>((length + 3) / 6);
}

Weight total_weight(std::span<const Weight> weights) {
  return std::accumulate(weights.begin(), weights.end(), Weight{0});
}

bool validate(const TriangulatedSurface& surface, std::span<const Weight> weights) {
  if (static_cast<int>(weights.size()) != surface.num_edges()) {
    throw InvalidInput("expected " + std::to_string(surface.num_edges()) + " weights, got " +
                       std::to_string(weights.size()));
  }
  bool nonzero = false;
  for (Weight w : weights) {
    if (w < 0) return false;
    nonzero = nonzero || w > 0;
  }
  if (!nonzero) return false;
  for (const Triangle& tri : surface.triangles()) {
    const Weight x = weights[tri.sides[0].edge];
    const Weight y = weights[tri.sides[1].edge];
    const Weight z = weights[tri.sides[2].edge];
    if ((x + y + z) % 2 != 0) return false;
    if (x > y + z || y > x + z || z > x + y) return false;
  }
  return true;
}

CornerCounts corner_counts(const TriangulatedSurface& surface, std::span<const Weight> weights) {
  CornerCounts out(surface.num_triangles());
  for (int t = 0; t < surface.num_triangles(); ++t) {
    const Triangle& tri = surface.triangle(t);
    for (int k = 0; k < 3; ++k) {
      const Weight before = weights[tri.sides[(k + 2) % 3].edge];
      const Weight after = weights[tri.sides[k].edge];
      const Weight opposite = weights[tri.sides[(k + 1) % 3].edge];
      out[t][k] = (before + after - opposite) / 2;
    }
  }
  return out;
}

Weights weights_from_corners(const TriangulatedSurface& surface, const CornerCounts& corners) {
  Weights w(surface.num_edges(), -1);
  for (int t = 0; t < surface.num_triangles(); ++t) {
    for (int k = 0; k < 3; ++k) {
      const int e = surface.triangle(t).sides[k].edge;
      const Weight v = corners[t][k] + corners[t][(k + 1) % 3];
      if (w[e] >= 0 && w[e] != v) throw InternalError("inconsistent corner counts");
      w[e] = v;
    }
  }
  return w;
}

Weights vertex_link(const TriangulatedSurface& surface) {
  return Weights(surface.num_edges(), 2);
}

Weight global_slot(const Side& side, Weight local, Weight width) {
  return side.forward ? local : width - 1 - local;
}

std::vector<TracedComponent> trace(const TriangulatedSurface& surface,
                                   std::span<const Weight> weights) {
  if (!validate(surface, weights)) throw InvalidInput("weights are not an admissible normal curve");
  if (total_weight(weights) > kMaxStrands) throw InvalidInput("curve too large to trace");

  const int num_edges = surface.num_edges();
  std::vector<Weight> offset(num_edges + 1, 0);
  for (int e = 0; e < num_edges; ++e) offset[e + 1] = offset[e] + weights[e];
  const Weight total = offset[num_edges];

  // link[2p + i]: partner of point p inside the triangle incidences(edge)[i].
  std::vector<Weight> link(2 * total, -1);
  std::vector<int> edge_of(total);
  for (int e = 0; e < num_edges; ++e) {
    std::fill(edge_of.begin() + offset[e], edge_of.begin() + offset[e + 1], e);
  }
  auto slot = [&](int e, int t) { return surface.incidences(e)[0].triangle == t ? 0 : 1; };

  const CornerCounts corners = corner_counts(surface, weights);
  for (int t = 0; t < surface.num_triangles(); ++t) {
    const Triangle& tri = surface.triangle(t);
    for (int k = 0; k < 3; ++k) {
      const Side& out = tri.sides[k];
      const Side& in = tri.sides[(k + 2) % 3];
      for (Weight j = 0; j < corners[t][k]; ++j) {
        const Weight p = offset[out.edge] + global_slot(out, j, weights[out.edge]);
        const Weight q =
            offset[in.edge] + global_slot(in, weights[in.edge] - 1 - j, weights[in.edge]);
        link[2 * p + slot(out.edge, t)] = q;
        link[2 * q + slot(in.edge, t)] = p;
      }
    }
  }

  auto side_in = [&](int t, int e) {
    const Triangle& tri = surface.triangle(t);
    for (int s = 0; s < 3; ++s) {
      if (tri.sides[s].edge == e) return s;
    }
    throw InternalError("edge not on triangle");
  };

  std::vector<TracedComponent> components;
  std::vector<char> visited(total, 0);
  for (Weight start = 0; start < total; ++start) {
    if (visited[start]) continue;
    TracedComponent comp;
    comp.weights.assign(num_edges, 0);
    Weight cur = start;
    int i = 0;
    do {
      visited[cur] = 1;
      const int e = edge_of[cur];
      ++comp.weights[e];
      const int t = surface.incidences(e)[i].triangle;
      const Weight nxt = link[2 * cur + i];
      if (nxt < 0) throw InternalError("dangling strand while tracing");
      const int ne = edge_of[nxt];
      comp.itinerary.push_back({t, side_in(t, e), side_in(t, ne)});
      i = 1 - slot(ne, t);
      cur = nxt;
    } while (cur != start);
    if (i != 0) throw InternalError("traced component closed with a flipped orientation");
    components.push_back(std::move(comp));
  }
  return components;
}

namespace {

struct Run {
  int start;  // index into the rotation of the first corner
  int length;
};

std::vector<Run> innermost_runs(const TriangulatedSurface& surface, const CornerCounts& corners) {
  const auto& rot = surface.rotation();
  const int m = static_cast<int>(rot.size());
  auto value = [&](int i) {
    const Corner& c = rot[((i % m) + m) % m];
    return corners[c.triangle][c.local];
  };
  int zero = -1;
  for (int i = 0; i < m; ++i) {
    if (value(i) == 0) {
      zero = i;
      break;
    }
  }
  if (zero < 0) throw InvalidInput("curve contains the vertex-link component");
  std::vector<Run> runs;
  int i = zero + 1;
  while (i < zero + m) {
    if (value(i) == 0) {
      ++i;
      continue;
    }
    int j = i;
    while (j < zero + m && value(j) > 0) ++j;
    runs.push_back({i % m, j - i});
    i = j;
  }
  return runs;
}

// The point of the innermost strand where it crosses from corner rot[i] to
// rot[i + 1], i.e. the point of side (local - 1) of rot[i]'s triangle nearest
// that corner.
struct EdgeEnd {
  int edge;
  bool at_tail;
};

EdgeEnd edge_end_after(const TriangulatedSurface& surface, const Corner& c) {
  const Side& side = surface.triangle(c.triangle).sides[(c.local + 2) % 3];
  // The corner is the head of that side in the triangle's orientation.
  return {side.edge, !side.forward};
}

// Pushes the innermost strand hugging the run across the vertex, so that it
// hugs the complementary corners instead.
Weights push_across_vertex(const TriangulatedSurface& surface, const Weights& weights,
                           const Run& run) {
  const auto& rot = surface.rotation();
  const int m = static_cast<int>(rot.size());
  auto corner = [&](int i) { return rot[((i % m) + m) % m]; };
  const int s = run.start;
  const int k = run.length;

  TransverseCurve curve = TransverseCurve::from_normal(surface, weights);
  std::vector<int> strand;
  for (int i = 0; i <= k; ++i) {
    const EdgeEnd end = edge_end_after(surface, corner(s - 1 + i));
    strand.push_back(curve.end_point(end.edge, end.at_tail));
  }
  const Corner before = corner(s - 1);
  const Corner after = corner(s + k);
  const int x = curve.partner(strand.front(), before.triangle);
  const int y = curve.partner(strand.back(), after.triangle);
  // The strand may close up through a single arc of the triangle holding
  // both neighbouring corners.
  const bool closed = x == strand.back();
  if (closed != (y == strand.front())) throw InternalError("strand around the vertex is malformed");
  for (int p : strand) curve.erase(p);

  // New points on the edge-ends between consecutive complementary corners,
  // walked clockwise from `before` to `after`.
  int first = -1;
  int prev = closed ? -1 : x;
  int prev_triangle = before.triangle;
  for (int i = s - 2; i >= s + k - m; --i) {
    const EdgeEnd end = edge_end_after(surface, corner(i));
    const int q = curve.insert_point(end.edge, end.at_tail);
    if (prev >= 0) curve.connect(prev_triangle, prev, q);
    else first = q;
    prev = q;
    prev_triangle = corner(i).triangle;
  }
  if (prev_triangle != after.triangle) throw InternalError("vertex push lost its way");
  if (closed) {
    curve.connect(after.triangle, prev, first);
  } else {
    curve.set_partner(prev, after.triangle, y);
    curve.set_partner(y, after.triangle, prev);
  }
  if (curve.normalize() != 0) throw InternalError("vertex push produced a trivial loop");
  return curve.weights();
}

// Lowers the total weight by vertex pushes until no push lowers it.
Weights reduce(const TriangulatedSurface& surface, Weights w) {
  for (;;) {
    std::optional<Weights> best;
    for (const Run& r : innermost_runs(surface, corner_counts(surface, w))) {
      Weights moved = push_across_vertex(surface, w, r);
      const Weight t = total_weight(moved);
      if (t < total_weight(w) && (!best || t < total_weight(*best) || (t == total_weight(*best) && moved < *best))) {
        best = std::move(moved);
      }
    }
    if (!best) return w;
    w = std::move(*best);
  }
}

}  // namespace

std::vector<Weights> vertex_push_neighbours(const TriangulatedSurface& surface, const Weights& weights) {
  std::vector<Weights> out;
  for (const Run& r : innermost_runs(surface, corner_counts(surface, weights))) {
    out.push_back(push_across_vertex(surface, weights, r));
  }
  return out;
}

Weights canonicalize(const TriangulatedSurface& surface, const Weights& weights) {
  Weights current = reduce(surface, weights);
  for (;;) {
    const Weight level = total_weight(current);
    std::set<Weights> seen{current};
    std::vector<Weights> frontier{current};
    std::optional<Weights> lower;
    while (!frontier.empty() && !lower) {
      std::vector<Weights> next;
      for (const Weights& w : frontier) {
        for (const Run& r : innermost_runs(surface, corner_counts(surface, w))) {
          Weights moved = push_across_vertex(surface, w, r);
          const Weight t = total_weight(moved);
          if (t < level) {
            lower = reduce(surface, std::move(moved));
            break;
          }
          if (t == level && seen.insert(moved).second) next.push_back(std::move(moved));
        }
        if (lower) break;
      }
      if (seen.size() > 4096) throw InternalError("tie orbit under vertex pushes too large");
      frontier = std::move(next);
    }
    if (!lower) return *seen.begin();
    current = std::move(*lower);
  }
}

}  // namespace ihg
