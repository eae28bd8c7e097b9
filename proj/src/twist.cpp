#include <cstdlib>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

#include "ihg/error.hpp"
#include "ihg/kernel.hpp"
#include "ihg/overlay.hpp"
#include "ihg/transverse.hpp"

namespace ihg {

namespace {

void require_same_genus(const CurveClass& x, const CurveClass& y) {
  if (x.genus() != y.genus()) {
    throw InvalidInput("curves live on surfaces of genus " + std::to_string(x.genus()) + " and " +
                       std::to_string(y.genus()));
  }
}

// One twist: overlay the curve with as many parallel copies of `about` as
// there are crossings, so every crossing becomes a band the curve passes
// through, then resolve all crossings in the same direction.
Weights twist_once(const TriangulatedSurface& surface, const Weights& curve, const Weights& about,
                   int sign) {
  const int crossings = Arrangement(surface, {curve, about}).num_crossings();
  if (crossings == 0) return curve;
  Weights copies(about);
  for (Weight& w : copies) w *= crossings;
  const Arrangement arr(surface, {curve, copies});

  TransverseCurve result(surface);
  std::vector<std::vector<int>> points;
  for (int e = 0; e < surface.num_edges(); ++e) {
    points.push_back(result.add_points(e, static_cast<int>(arr.widths()[e])));
  }
  const auto matching = arr.smoothing(sign);
  for (int t = 0; t < surface.num_triangles(); ++t) {
    for (const auto& [p, q] : matching[t]) {
      result.connect(t, points[p.edge][p.slot], points[q.edge][q.slot]);
    }
  }
  if (result.normalize() != 0) throw InternalError("twisted curve has a trivial component");
  if (!result.is_normal()) throw InternalError("twisted curve failed to normalize");
  Weights w = result.weights();
  if (!is_single_essential_curve(surface, w)) {
    throw InternalError("twisted curve is not a single essential curve");
  }
  return w;
}

// Write-once memo of intersection numbers, keyed by the ordered coordinate pair.
class IntersectionMemo {
 public:
  std::optional<Weight> find(const Weights& x, const Weights& y) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find({x, y});
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  void store(const Weights& x, const Weights& y, Weight value) {
    std::unique_lock lock(mutex_);
    if (table_.size() < kCapacity) table_.emplace(std::pair{x, y}, value);
  }

 private:
  static constexpr std::size_t kCapacity = 4'000'000;
  mutable std::shared_mutex mutex_;
  std::map<std::pair<Weights, Weights>, Weight> table_;
};

IntersectionMemo& memo() {
  static IntersectionMemo instance;
  return instance;
}

}  // namespace

Weight intersection_number(const CurveClass& first, const CurveClass& second) {
  require_same_genus(first, second);
  if (first == second) return 0;
  const bool swap = second.coords() < first.coords();
  const Weights& x = swap ? second.coords() : first.coords();
  const Weights& y = swap ? first.coords() : second.coords();
  if (auto hit = memo().find(x, y)) return *hit;
  const Weight value = geometric_intersection(surface_of_genus(first.genus()), x, y);
  memo().store(x, y, value);
  return value;
}

CurveClass dehn_twist(const CurveClass& curve, const CurveClass& about, int power) {
  require_same_genus(curve, about);
  const TriangulatedSurface& surface = surface_of_genus(curve.genus());
  Weights w = curve.coords();
  for (int i = 0; i < std::abs(power); ++i) {
    w = canonicalize(surface, twist_once(surface, w, about.coords(), power > 0 ? -1 : 1));
  }
  return CurveClass::from_coords(curve.genus(), w);
}

}  // namespace ihg
