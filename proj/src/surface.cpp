#include "ihg/surface.hpp"

#include <algorithm>

#include "ihg/error.hpp"

namespace ihg {

PolygonScheme PolygonScheme::standard(int genus) {
  PolygonScheme s;
  s.genus = genus;
  for (int i = 0; i < genus; ++i) {
    s.boundary_word.push_back({'a', i, +1});
    s.boundary_word.push_back({'b', i, +1});
    s.boundary_word.push_back({'a', i, -1});
    s.boundary_word.push_back({'b', i, -1});
  }
  s.side_pairing.resize(4 * genus);
  for (int k = 0; k < 4 * genus; ++k) {
    s.side_pairing[k] = (k % 4 < 2) ? k + 2 : k - 2;
  }
  return s;
}

namespace {

Side polygon_side(int genus, int k) {
  (void)genus;
  const int handle = k / 4;
  switch (k % 4) {
    case 0: return {2 * handle, true, k};
    case 1: return {2 * handle + 1, true, k};
    case 2: return {2 * handle, false, k};
    default: return {2 * handle + 1, false, k};
  }
}

}  // namespace

TriangulatedSurface::TriangulatedSurface(int genus)
    : genus_(genus), scheme_(PolygonScheme::standard(genus)) {
  if (genus < 2) {
    throw InvalidInput("genus must be at least 2, got " + std::to_string(genus));
  }
  const int n = 4 * genus;
  for (int i = 0; i < genus; ++i) {
    edges_.push_back({EdgeKind::LoopA, i});
    edges_.push_back({EdgeKind::LoopB, i});
  }
  for (int j = 2; j <= n - 2; ++j) edges_.push_back({EdgeKind::Chord, j});
  auto chord = [&](int j) { return 2 * genus + j - 2; };

  for (int t = 0; t <= n - 3; ++t) {
    Triangle tri;
    tri.polygon_vertex = {0, t + 1, t + 2};
    tri.sides[0] = (t == 0) ? polygon_side(genus, 0) : Side{chord(t + 1), true, -1};
    tri.sides[1] = polygon_side(genus, t + 1);
    tri.sides[2] = (t == n - 3) ? polygon_side(genus, n - 1) : Side{chord(t + 2), false, -1};
    triangles_.push_back(tri);
  }

  incidences_.assign(edges_.size(), {SideRef{-1, -1}, SideRef{-1, -1}});
  std::vector<int> seen(edges_.size(), 0);
  for (int t = 0; t < num_triangles(); ++t) {
    for (int s = 0; s < 3; ++s) {
      const int e = triangles_[t].sides[s].edge;
      if (seen[e] >= 2) throw InternalError("edge used more than twice");
      incidences_[e][seen[e]++] = {t, s};
    }
  }
  for (int e = 0; e < num_edges(); ++e) {
    const auto& inc = incidences_[e];
    if (seen[e] != 2 || inc[0].triangle == inc[1].triangle) {
      throw InternalError("edge " + std::to_string(e) + " not shared by two triangles");
    }
    if (triangles_[inc[0].triangle].sides[inc[0].side].forward ==
        triangles_[inc[1].triangle].sides[inc[1].side].forward) {
      throw InternalError("non-orientable gluing on edge " + std::to_string(e));
    }
  }

  // Counter-clockwise around the vertex, corner (t, k) is followed by the
  // corner across side k-1 of t, at the tail of that side in the neighbour.
  Corner c{0, 0};
  do {
    rotation_.push_back(c);
    const SideRef nb = across(c.triangle, (c.local + 2) % 3);
    c = Corner{nb.triangle, nb.side};
  } while (!(c == Corner{0, 0}) && rotation_.size() <= 3u * triangles_.size());
  if (static_cast<int>(rotation_.size()) != 3 * num_triangles()) {
    throw InternalError("vertex link does not visit every corner once");
  }
}

SideRef TriangulatedSurface::across(int t, int s) const {
  const auto& inc = incidences_[triangles_[t].sides[s].edge];
  return (inc[0].triangle == t && inc[0].side == s) ? inc[1] : inc[0];
}

std::string TriangulatedSurface::edge_label(int e) const {
  const Edge& ed = edges_[e];
  switch (ed.kind) {
    case EdgeKind::LoopA: return "a" + std::to_string(ed.index + 1);
    case EdgeKind::LoopB: return "b" + std::to_string(ed.index + 1);
    default: return "d" + std::to_string(ed.index);
  }
}

TriangulatedSurface build_surface(int genus) { return TriangulatedSurface(genus); }

std::vector<Pi1Letter> side_pairing_table(const TriangulatedSurface& surface) {
  const int n = 4 * surface.genus();
  std::vector<Pi1Letter> table(n);
  for (int k = 0; k < n; ++k) {
    const int handle = k / 4;
    switch (k % 4) {
      case 0: table[k] = {2 * handle + 1, +1}; break;
      case 1: table[k] = {2 * handle, +1}; break;
      case 2: table[k] = {2 * handle + 1, -1}; break;
      default: table[k] = {2 * handle, -1}; break;
    }
  }
  return table;
}

std::string generator_name(int generator) {
  return std::string(1, generator % 2 == 0 ? 'a' : 'b') + std::to_string(generator / 2 + 1);
}

}  // namespace ihg
