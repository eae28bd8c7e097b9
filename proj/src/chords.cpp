#include "ihg/chords.hpp"

#include <algorithm>
#include <map>

#include "ihg/error.hpp"

namespace ihg {

namespace {

long perimeter_key(const ChordEnd& e) { return static_cast<long>(e.side) * 1000 + e.position; }

bool interleaved(const Chord& c, const Chord& d) {
  long a = perimeter_key(c.from), b = perimeter_key(c.to);
  if (a > b) std::swap(a, b);
  const long x = perimeter_key(d.from), y = perimeter_key(d.to);
  return (a < x && x < b) != (a < y && y < b);
}

}  // namespace

Weights coords_from_chords(const TriangulatedSurface& surface, const std::vector<Chord>& chords) {
  const int n = 4 * surface.genus();
  const auto& pairing = surface.scheme().side_pairing;
  std::map<int, std::vector<int>> on_side;
  for (const Chord& c : chords) {
    for (const ChordEnd& e : {c.from, c.to}) {
      if (e.side < 0 || e.side >= n || e.position <= 0 || e.position >= 1000) {
        throw InvalidInput("chord endpoint outside the polygon sides");
      }
      on_side[e.side].push_back(e.position);
    }
    if (c.from.side == c.to.side) throw InvalidInput("chord with both ends on one side");
  }
  for (auto& [side, positions] : on_side) {
    std::vector<int> mirrored;
    for (int p : on_side[pairing[side]]) mirrored.push_back(1000 - p);
    std::sort(positions.begin(), positions.end());
    std::sort(mirrored.begin(), mirrored.end());
    if (positions != mirrored) throw InvalidInput("chord endpoints do not match across sides");
    if (std::adjacent_find(positions.begin(), positions.end()) != positions.end()) {
      throw InvalidInput("two chords share an endpoint");
    }
  }
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      if (interleaved(chords[i], chords[j])) throw InvalidInput("chords cross");
    }
  }

  Weights w(surface.num_edges(), 0);
  for (const Chord& c : chords) {
    const int lo = std::min(c.from.side, c.to.side);
    const int hi = std::max(c.from.side, c.to.side);
    for (int j = 2; j <= n - 2; ++j) {
      if (lo < j && j <= hi) ++w[2 * surface.genus() + j - 2];
    }
  }
  for (int k = 0; k < n; ++k) {
    if (k % 4 >= 2) continue;
    const int edge = 2 * (k / 4) + (k % 4);
    w[edge] = static_cast<Weight>(on_side.count(k) ? on_side[k].size() : 0);
  }
  if (!validate(surface, w)) throw InternalError("chord diagram produced inadmissible weights");
  return w;
}

}  // namespace ihg
