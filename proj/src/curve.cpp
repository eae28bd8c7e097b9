#include "ihg/curve.hpp"

#include <algorithm>

#include "ihg/error.hpp"

namespace ihg {

bool is_single_essential_curve(const TriangulatedSurface& surface, std::span<const Weight> weights) {
  if (!validate(surface, weights)) return false;
  if (std::all_of(weights.begin(), weights.end(), [](Weight w) { return w == 2; })) return false;
  return trace(surface, weights).size() == 1;
}

std::vector<Pi1Letter> crossing_word(const TriangulatedSurface& surface,
                                     const TracedComponent& component) {
  const auto table = side_pairing_table(surface);
  std::vector<Pi1Letter> word;
  for (const ArcStep& step : component.itinerary) {
    const int side = surface.triangle(step.triangle).sides[step.out_side].polygon_side;
    if (side >= 0) word.push_back(table[side]);
  }
  return word;
}

HomologyClass crossing_homology(const TriangulatedSurface& surface,
                                const TracedComponent& component) {
  const int g = surface.genus();
  HomologyClass h(2 * g, 0);
  for (const ArcStep& step : component.itinerary) {
    const Side& out = surface.triangle(step.triangle).sides[step.out_side];
    const Edge& e = surface.edge(out.edge);
    const int sign = out.forward ? 1 : -1;
    if (e.kind == EdgeKind::LoopB) h[2 * e.index] += sign;
    if (e.kind == EdgeKind::LoopA) h[2 * e.index + 1] += sign;
  }
  return h;
}

HomologyClass normalize_sign(HomologyClass h) {
  for (long x : h) {
    if (x == 0) continue;
    if (x < 0) {
      for (long& y : h) y = -y;
    }
    break;
  }
  return h;
}

long symplectic(const HomologyClass& x, const HomologyClass& y) {
  long s = 0;
  for (std::size_t i = 0; i + 1 < x.size(); i += 2) s += x[i] * y[i + 1] - x[i + 1] * y[i];
  return s;
}

CurveClass CurveClass::from_coords(const Weights& weights) {
  return from_coords(genus_of_length(weights.size()), weights);
}

CurveClass CurveClass::from_coords(int genus, const Weights& weights) {
  const TriangulatedSurface& surface = surface_of_genus(genus);
  if (!validate(surface, weights)) throw InvalidInput("weights are not an admissible normal curve");
  if (!is_single_essential_curve(surface, weights)) {
    throw InvalidInput("weights do not describe a single essential curve");
  }
  CurveClass c;
  c.genus_ = genus;
  c.coords_ = canonicalize(surface, weights);
  const auto comps = trace(surface, c.coords_);
  if (comps.size() != 1) throw InternalError("canonical form split into several components");
  c.homology_ = normalize_sign(crossing_homology(surface, comps[0]));
  const auto reduced = cyclically_reduce(crossing_word(surface, comps[0]));
  c.word_ = {canonical_cyclic(reduced)};
  c.handlebody_ = to_handlebody(reduced);
  return c;
}

Weight CurveClass::total_weight() const { return ihg::total_weight(coords_); }

bool CurveClass::is_separating() const {
  return std::all_of(homology_.begin(), homology_.end(), [](long x) { return x == 0; });
}

std::strong_ordering operator<=>(const CurveClass& x, const CurveClass& y) {
  if (auto c = x.genus_ <=> y.genus_; c != 0) return c;
  return x.coords_ <=> y.coords_;
}

bool weight_order(const CurveClass& x, const CurveClass& y) {
  const Weight wx = x.total_weight(), wy = y.total_weight();
  if (wx != wy) return wx < wy;
  return x < y;
}

}  // namespace ihg
