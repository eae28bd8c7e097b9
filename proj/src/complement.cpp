#include <algorithm>
#include <map>
#include <numeric>

#include "ihg/error.hpp"
#include "ihg/kernel.hpp"
#include "ihg/overlay.hpp"

namespace ihg {

namespace {

struct Components {
  std::vector<int> of_chord;
  std::vector<Weights> weights;
};

Components chord_components(const TriangulatedSurface& surface, const Arrangement& arr) {
  const auto& chords = arr.chords();
  std::vector<int> parent(chords.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t c = 0; c < chords.size(); ++c) {
    for (const SlotRef& end : chords[c].ends) {
      const auto& inc = surface.incidences(end.edge);
      const int other = inc[0].triangle == chords[c].triangle ? inc[1].triangle : inc[0].triangle;
      const int a = find(static_cast<int>(c)), b = find(arr.chord_at(other, end));
      parent[std::max(a, b)] = std::min(a, b);
    }
  }
  Components out;
  std::map<int, int> index;
  out.of_chord.resize(chords.size());
  for (std::size_t c = 0; c < chords.size(); ++c) {
    const int root = find(static_cast<int>(c));
    auto [it, fresh] = index.try_emplace(root, static_cast<int>(out.weights.size()));
    if (fresh) out.weights.emplace_back(surface.num_edges(), 0);
    out.of_chord[c] = it->second;
    // Every strand point is an end of exactly two chords.
    for (const SlotRef& end : chords[c].ends) ++out.weights[it->second][end.edge];
  }
  for (Weights& w : out.weights) {
    for (Weight& x : w) x /= 2;
  }
  return out;
}

// +1 if walking the chord from ends[0] to ends[1] follows the curve's
// canonical homology orientation, -1 if against it, 0 if the curve separates.
int chord_orientation(const TriangulatedSurface& surface, const Arrangement& arr, int chord) {
  const auto& chords = arr.chords();
  HomologyClass h(2 * surface.genus(), 0);
  int c = chord;
  int exit = 1;
  do {
    const auto& info = chords[c];
    const SlotRef out = info.ends[exit];
    const Triangle& tri = surface.triangle(info.triangle);
    for (const Side& side : tri.sides) {
      if (side.edge != out.edge) continue;
      const Edge& e = surface.edge(side.edge);
      const int sign = side.forward ? 1 : -1;
      if (e.kind == EdgeKind::LoopB) h[2 * e.index] += sign;
      if (e.kind == EdgeKind::LoopA) h[2 * e.index + 1] += sign;
    }
    const auto& inc = surface.incidences(out.edge);
    const int other = inc[0].triangle == info.triangle ? inc[1].triangle : inc[0].triangle;
    c = arr.chord_at(other, out);
    exit = chords[c].ends[0] == out ? 1 : 0;
  } while (c != chord || exit != 1);
  if (std::all_of(h.begin(), h.end(), [](long x) { return x == 0; })) return 0;
  return normalize_sign(h) == h ? 1 : -1;
}

}  // namespace

std::vector<ComplementComponent> complement_components(const std::vector<CurveClass>& curves) {
  if (curves.empty()) throw InvalidInput("no curves to cut along");
  const int g = curves.front().genus();
  for (std::size_t i = 0; i < curves.size(); ++i) {
    for (std::size_t j = i + 1; j < curves.size(); ++j) {
      if (intersection_number(curves[i], curves[j]) != 0) {
        throw InvalidInput("curves " + std::to_string(i) + " and " + std::to_string(j) +
                           " intersect");
      }
    }
  }
  const TriangulatedSurface& surface = surface_of_genus(g);
  Weights sum(surface.num_edges(), 0);
  for (const CurveClass& c : curves) {
    for (int e = 0; e < surface.num_edges(); ++e) sum[e] += c.coords()[e];
  }
  const Arrangement arr(surface, {sum});
  const Components comps = chord_components(surface, arr);
  if (comps.weights.size() != curves.size()) {
    throw InternalError("summed realization has the wrong number of components");
  }

  // Match traced components to input curves.
  std::vector<int> input_of(comps.weights.size(), -1);
  std::vector<char> used(curves.size(), 0);
  for (std::size_t k = 0; k < comps.weights.size(); ++k) {
    const CurveClass cls = CurveClass::from_coords(g, comps.weights[k]);
    for (std::size_t i = 0; i < curves.size(); ++i) {
      if (!used[i] && curves[i] == cls) {
        used[i] = 1;
        input_of[k] = static_cast<int>(i);
        break;
      }
    }
    if (input_of[k] < 0) throw InternalError("summed realization changed a curve class");
  }

  std::vector<std::vector<std::pair<int, int>>> sided(arr.num_regions());
  std::vector<char> seen(comps.weights.size(), 0);
  for (std::size_t c = 0; c < arr.chords().size(); ++c) {
    const int k = comps.of_chord[c];
    if (seen[k]) continue;
    seen[k] = 1;
    const int orient = chord_orientation(surface, arr, static_cast<int>(c));
    const auto& cells = arr.chords()[c].side_cells;
    sided[arr.region_of_cell(cells[0])].push_back({input_of[k], orient});
    sided[arr.region_of_cell(cells[1])].push_back({input_of[k], -orient});
  }
  std::vector<std::vector<int>> boundary(arr.num_regions()), sides(arr.num_regions());
  for (int r = 0; r < arr.num_regions(); ++r) {
    std::sort(sided[r].begin(), sided[r].end());
    for (const auto& [i, side] : sided[r]) {
      boundary[r].push_back(i);
      sides[r].push_back(side);
    }
  }

  // Input curve owning each strand point, and one gap inside each region.
  std::vector<std::vector<int>> owner(surface.num_edges());
  std::vector<SlotRef> witness(arr.num_regions(), SlotRef{-1, 0});
  for (int e = 0; e < surface.num_edges(); ++e) {
    const int t = surface.incidences(e)[0].triangle;
    for (Weight p = 0; p < sum[e]; ++p) {
      owner[e].push_back(input_of[comps.of_chord[arr.chord_at(t, {e, p})]]);
    }
    for (Weight gap = 0; gap <= sum[e]; ++gap) {
      SlotRef& w = witness[arr.region_of_gap(e, gap)];
      if (w.edge < 0) w = {e, gap};
    }
  }

  // Locates a region in the realization of a subset of the inputs, keeping
  // one strand family per distinct class.
  std::map<std::vector<int>, Arrangement> partial;
  auto region_in_subset = [&](int region, const std::vector<int>& subset) {
    auto it = partial.find(subset);
    if (it == partial.end()) {
      Weights part(surface.num_edges(), 0);
      for (int i : subset) {
        for (int e = 0; e < surface.num_edges(); ++e) part[e] += curves[i].coords()[e];
      }
      it = partial.emplace(subset, Arrangement(surface, {part})).first;
    }
    const SlotRef w = witness[region];
    Weight gap = 0;
    for (Weight p = 0; p < w.slot; ++p) {
      if (std::binary_search(subset.begin(), subset.end(), owner[w.edge][p])) ++gap;
    }
    return it->second.region_least_cell(it->second.region_of_gap(w.edge, gap));
  };

  std::vector<ComplementComponent> out;
  int euler = 0;
  for (int r = 0; r < arr.num_regions(); ++r) {
    if (witness[r].edge < 0) throw InternalError("complementary region touches no edge");
    const int chi = arr.region_euler(r);
    euler += chi;
    const int twice_genus = 2 - chi - static_cast<int>(boundary[r].size());
    if (twice_genus < 0 || twice_genus % 2 != 0) {
      throw InternalError("complementary region with impossible topology");
    }
    // One representative input per distinct boundary class.
    std::vector<int> subset;
    for (int i : boundary[r]) {
      bool fresh = true;
      for (int j : subset) fresh = fresh && !(curves[j] == curves[i]);
      if (fresh) subset.push_back(i);
    }
    std::sort(subset.begin(), subset.end());
    const bool all = subset.size() == curves.size();
    out.push_back({twice_genus / 2, boundary[r], sides[r], arr.region_least_cell(r),
                   all ? arr.region_least_cell(r) : region_in_subset(r, subset)});
  }
  if (euler != 2 - 2 * g) throw InternalError("complementary regions do not add up to the surface");
  return out;
}

}  // namespace ihg
