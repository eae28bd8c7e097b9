#include "ihg/overlay.hpp"

#include <algorithm>
#include <numeric>

#include "ihg/error.hpp"

namespace ihg {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  int unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return x;
    if (y < x) std::swap(x, y);
    parent[y] = x;
    return x;
  }
};

}  // namespace

struct Arrangement::Local {
  int perimeter = 0;
  std::array<int, 3> base{};     // perimeter node of corner k
  std::vector<int> origin;       // per dart
  std::vector<int> cell;         // per dart: cell on its left, -1 outside
  std::vector<int> chord;        // per dart
  std::vector<int> position;     // per dart leaving a crossing: index in its rotation
  std::vector<int> point_dart;   // per perimeter node: chord dart leaving it
  int crossing_offset = 0;

  int gap_cell(int side, Weight j) const { return cell[2 * (base[side] + j)]; }
};

Arrangement::~Arrangement() = default;
Arrangement::Arrangement(Arrangement&&) noexcept = default;

Arrangement::Arrangement(const TriangulatedSurface& surface, const std::vector<Weights>& families)
    : surface_(&surface), width_(surface.num_edges(), 0), locals_(surface.num_triangles()) {
  std::vector<std::vector<Weight>> offsets;
  for (const Weights& w : families) {
    if (!validate(surface, w)) throw InvalidInput("weights are not an admissible normal curve");
    offsets.push_back(width_);
    for (int e = 0; e < surface.num_edges(); ++e) width_[e] += w[e];
  }
  if (total_weight(width_) > kMaxStrands) throw InvalidInput("curves too large to overlay");
  for (int t = 0; t < surface.num_triangles(); ++t) build_triangle(t, families, offsets);
  link_crossings();
  build_regions();
}

void Arrangement::build_triangle(int t, const std::vector<Weights>& families,
                                 const std::vector<std::vector<Weight>>& offsets) {
  const Triangle& tri = surface_->triangle(t);
  Local& L = locals_[t];
  std::array<Weight, 3> w{};
  for (int k = 0; k < 3; ++k) w[k] = width_[tri.sides[k].edge];
  L.base = {0, static_cast<int>(1 + w[0]), static_cast<int>(2 + w[0] + w[1])};
  L.perimeter = static_cast<int>(3 + w[0] + w[1] + w[2]);
  const int P = L.perimeter;
  auto perim_of = [&](int k, Weight slot) {
    const Weight local = tri.sides[k].forward ? slot : w[k] - 1 - slot;
    return static_cast<int>(L.base[k] + 1 + local);
  };

  struct LocalChord {
    int u, v, global;
    std::vector<std::pair<int, int>> crossings;  // (distance key, crossing node)
  };
  std::vector<LocalChord> local_chords;
  for (std::size_t f = 0; f < families.size(); ++f) {
    const Weights& fw = families[f];
    const CornerCounts corners = corner_counts(*surface_, fw);
    for (int k = 0; k < 3; ++k) {
      const int km = (k + 2) % 3;
      const Side& out = tri.sides[k];
      const Side& in = tri.sides[km];
      for (Weight j = 0; j < corners[t][k]; ++j) {
        const Weight s_out = offsets[f][out.edge] + global_slot(out, j, fw[out.edge]);
        const Weight s_in =
            offsets[f][in.edge] + global_slot(in, fw[in.edge] - 1 - j, fw[in.edge]);
        ChordInfo info{static_cast<int>(f), t, {{{in.edge, s_in}, {out.edge, s_out}}}, {-1, -1}, 0};
        local_chords.push_back(
            {perim_of(km, s_in), perim_of(k, s_out), static_cast<int>(chords_.size()), {}});
        chords_.push_back(info);
      }
    }
  }

  // Crossings between chords of different families.
  int num_nodes = P;
  for (std::size_t a = 0; a < local_chords.size(); ++a) {
    for (std::size_t b = a + 1; b < local_chords.size(); ++b) {
      LocalChord& ca = local_chords[a];
      LocalChord& cb = local_chords[b];
      if (chords_[ca.global].family == chords_[cb.global].family) continue;
      const int lo = std::min(ca.u, ca.v), hi = std::max(ca.u, ca.v);
      if ((lo < cb.u && cb.u < hi) == (lo < cb.v && cb.v < hi)) continue;
      const int node = num_nodes++;
      for (auto [self, other] : {std::pair{&ca, &cb}, std::pair{&cb, &ca}}) {
        const int span = (self->v - self->u + P) % P;
        int key = (other->u - self->u + P) % P;
        if (key >= span) key = (other->v - self->u + P) % P;
        self->crossings.push_back({key, node});
      }
    }
  }

  std::vector<int> target;  // perimeter node a dart heads for (crossing rotation order)
  auto add_pair = [&](int a, int b, int chord, int target_ab, int target_ba) {
    const int d = static_cast<int>(L.origin.size());
    L.origin.push_back(a);
    L.origin.push_back(b);
    L.chord.push_back(chord);
    L.chord.push_back(chord);
    target.push_back(target_ab);
    target.push_back(target_ba);
    return d;
  };
  for (int i = 0; i < P; ++i) add_pair(i, (i + 1) % P, -1, -1, -1);
  L.point_dart.assign(P, -1);
  std::vector<std::vector<int>> leaving(num_nodes - P);
  for (LocalChord& c : local_chords) {
    std::sort(c.crossings.begin(), c.crossings.end());
    std::vector<int> seq{c.u};
    for (auto [key, node] : c.crossings) seq.push_back(node);
    seq.push_back(c.v);
    chords_[c.global].num_crossings = static_cast<int>(c.crossings.size());
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      const int d = add_pair(seq[i], seq[i + 1], c.global, c.v, c.u);
      if (i == 0) L.point_dart[c.u] = d;
      else leaving[seq[i] - P].push_back(d);
      if (i + 2 == seq.size()) L.point_dart[c.v] = d + 1;
      else leaving[seq[i + 1] - P].push_back(d + 1);
    }
  }

  const int num_darts = static_cast<int>(L.origin.size());
  std::vector<int> sigma(num_darts, -1), sigma_inv(num_darts, -1);
  L.position.assign(num_darts, -1);
  auto set_rotation = [&](const std::vector<int>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      sigma[r[i]] = r[(i + 1) % r.size()];
      sigma_inv[r[(i + 1) % r.size()]] = r[i];
    }
  };
  for (int n = 0; n < P; ++n) {
    const int next = 2 * n;
    const int prev = 2 * ((n + P - 1) % P) + 1;
    if (L.point_dart[n] < 0) set_rotation({next, prev});
    else set_rotation({next, L.point_dart[n], prev});
  }
  for (auto& r : leaving) {
    if (r.size() != 4) throw InternalError("crossing without four arcs");
    std::sort(r.begin(), r.end(), [&](int x, int y) { return target[x] < target[y]; });
    for (int i = 0; i < 4; ++i) L.position[r[i]] = i;
    set_rotation(r);
  }

  // Faces: next(h) = sigma^-1(twin(h)) keeps the face on the left.
  std::vector<int> face(num_darts, -1);
  int num_faces = 0;
  for (int d = 0; d < num_darts; ++d) {
    if (face[d] >= 0) continue;
    int h = d;
    do {
      face[h] = num_faces;
      h = sigma_inv[h ^ 1];
    } while (h != d);
    ++num_faces;
  }
  const int exterior = face[2 * (P - 1) + 1];
  std::vector<int> cell_of_face(num_faces, -1);
  for (int f = 0; f < num_faces; ++f) {
    if (f != exterior) cell_of_face[f] = num_cells_++;
  }
  L.cell.resize(num_darts);
  for (int d = 0; d < num_darts; ++d) L.cell[d] = cell_of_face[face[d]];

  for (const LocalChord& c : local_chords) {
    const int first = L.point_dart[c.u];
    const int last = L.point_dart[c.v];
    chords_[c.global].side_cells = {L.cell[first], L.cell[last]};
  }

  L.crossing_offset = static_cast<int>(dart_twin_.size() / 4);
  const int num_crossings = num_nodes - P;
  dart_twin_.resize(dart_twin_.size() + 4 * num_crossings, -1);
  dart_cell_.resize(dart_cell_.size() + 4 * num_crossings, -1);
  dart_family_.resize(dart_family_.size() + 4 * num_crossings, -1);
  for (int x = 0; x < num_crossings; ++x) {
    for (int d : leaving[x]) {
      const int g = 4 * (L.crossing_offset + x) + L.position[d];
      dart_cell_[g] = L.cell[d];
      dart_family_[g] = chords_[L.chord[d]].family;
    }
  }
}

int Arrangement::chord_at(int triangle, const SlotRef& slot) const {
  const Local& L = locals_[triangle];
  const Triangle& tri = surface_->triangle(triangle);
  for (int k = 0; k < 3; ++k) {
    const Side& side = tri.sides[k];
    if (side.edge != slot.edge) continue;
    const Weight w = width_[side.edge];
    const Weight local = side.forward ? slot.slot : w - 1 - slot.slot;
    return L.chord[L.point_dart[L.base[k] + 1 + local]];
  }
  throw InternalError("edge not on triangle");
}

void Arrangement::link_crossings() {
  // Walk along the curve from each crossing dart to the next crossing.
  for (int t = 0; t < surface_->num_triangles(); ++t) {
    const Local& start = locals_[t];
    for (int d = 0; d < static_cast<int>(start.origin.size()); ++d) {
      if (start.position[d] < 0) continue;
      const int g = 4 * (start.crossing_offset + start.origin[d] - start.perimeter) + start.position[d];
      int tri = t;
      int dart = d;
      for (;;) {
        const Local& L = locals_[tri];
        const int end = L.origin[dart ^ 1];
        if (end >= L.perimeter) {
          dart_twin_[g] = 4 * (L.crossing_offset + end - L.perimeter) + L.position[dart ^ 1];
          break;
        }
        int k = 2;
        while (end <= L.base[k]) --k;
        const Side& side = surface_->triangle(tri).sides[k];
        const Weight w = width_[side.edge];
        const Weight local = end - L.base[k] - 1;
        const Weight slot = side.forward ? local : w - 1 - local;
        const auto& inc = surface_->incidences(side.edge);
        const SideRef next = inc[0].triangle == tri ? inc[1] : inc[0];
        const Side& nside = surface_->triangle(next.triangle).sides[next.side];
        const Local& N = locals_[next.triangle];
        const Weight nlocal = nside.forward ? slot : w - 1 - slot;
        tri = next.triangle;
        dart = N.point_dart[N.base[next.side] + 1 + nlocal];
      }
    }
  }
}

void Arrangement::build_regions() {
  UnionFind uf(num_cells_);
  std::vector<std::pair<int, int>> gaps;
  for (int e = 0; e < surface_->num_edges(); ++e) {
    const auto& inc = surface_->incidences(e);
    const Weight w = width_[e];
    for (Weight g = 0; g <= w; ++g) {
      std::array<int, 2> cells{};
      for (int i = 0; i < 2; ++i) {
        const Side& side = surface_->triangle(inc[i].triangle).sides[inc[i].side];
        cells[i] = locals_[inc[i].triangle].gap_cell(inc[i].side, side.forward ? g : w - g);
      }
      uf.unite(cells[0], cells[1]);
      gaps.push_back({cells[0], cells[1]});
    }
  }
  int vertex_cell = -1;
  for (int t = 0; t < surface_->num_triangles(); ++t) {
    for (int k = 0; k < 3; ++k) {
      const int c = locals_[t].gap_cell(k, 0);
      vertex_cell = vertex_cell < 0 ? c : uf.unite(vertex_cell, c);
    }
  }

  region_of_cell_.assign(num_cells_, -1);
  std::vector<int> region_of_root(num_cells_, -1);
  for (int c = 0; c < num_cells_; ++c) {
    const int r = uf.find(c);
    if (region_of_root[r] < 0) {
      region_of_root[r] = static_cast<int>(region_euler_.size());
      region_euler_.push_back(0);
      region_least_cell_.push_back(c);
    }
    region_of_cell_[c] = region_of_root[r];
    ++region_euler_[region_of_cell_[c]];
  }
  for (const auto& [a, b] : gaps) --region_euler_[region_of_cell_[a]];
  vertex_region_ = region_of_cell_[vertex_cell];
  ++region_euler_[vertex_region_];
}

int Arrangement::region_of_gap(int edge, Weight gap) const {
  if (gap < 0 || gap > width_[edge]) throw InvalidInput("gap outside the edge");
  const SideRef& inc = surface_->incidences(edge)[0];
  const Side& side = surface_->triangle(inc.triangle).sides[inc.side];
  return region_of_cell_[locals_[inc.triangle].gap_cell(inc.side, side.forward ? gap : width_[edge] - gap)];
}

std::vector<std::vector<std::array<SlotRef, 2>>> Arrangement::smoothing(int sign) const {
  std::vector<std::vector<std::array<SlotRef, 2>>> out(surface_->num_triangles());
  for (int t = 0; t < surface_->num_triangles(); ++t) {
    const Local& L = locals_[t];
    const Triangle& tri = surface_->triangle(t);
    const int num_darts = static_cast<int>(L.origin.size());
    std::vector<int> at_crossing;
    for (int d = 0; d < num_darts; ++d) {
      if (L.position[d] < 0) continue;
      const std::size_t i = 4 * (L.origin[d] - L.perimeter) + L.position[d];
      if (at_crossing.size() <= i) at_crossing.resize(i + 1, -1);
      at_crossing[i] = d;
    }
    auto slot_of = [&](int node) {
      int k = 2;
      while (node <= L.base[k]) --k;
      const Side& side = tri.sides[k];
      const Weight w = width_[side.edge];
      const Weight local = node - L.base[k] - 1;
      return SlotRef{side.edge, side.forward ? local : w - 1 - local};
    };
    std::vector<char> used(L.perimeter, 0);
    for (int n = 0; n < L.perimeter; ++n) {
      if (L.point_dart[n] < 0 || used[n]) continue;
      int dart = L.point_dart[n];
      int end = L.origin[dart ^ 1];
      while (end >= L.perimeter) {
        const int back = dart ^ 1;
        const int pos = L.position[back];
        const bool first = chords_[L.chord[back]].family == 0;
        const int turn = (first == (sign > 0)) ? 3 : 1;
        dart = at_crossing[4 * (end - L.perimeter) + (pos + turn) % 4];
        end = L.origin[dart ^ 1];
      }
      used[n] = used[end] = 1;
      out[t].push_back({slot_of(n), slot_of(end)});
    }
  }
  return out;
}

Weight geometric_intersection(const TriangulatedSurface& surface, const Weights& first,
                              const Weights& second) {
  if (first == second) return 0;
  const Arrangement arr(surface, {first, second});
  const int n = arr.num_crossings();
  if (n == 0) return 0;

  const int num_regions = arr.num_regions();
  std::vector<int> chi(num_regions);
  for (int r = 0; r < num_regions; ++r) chi[r] = arr.region_euler(r);
  UnionFind regions(num_regions);
  std::vector<int> twin(4 * n), label(4 * n);
  for (int d = 0; d < 4 * n; ++d) {
    twin[d] = arr.dart_twin(d);
    label[d] = arr.region_of_cell(arr.dart_cell(d));
  }
  std::vector<char> alive(n, 1);
  int remaining = n;

  auto next = [&](int h) {
    const int o = twin[h];
    return 4 * (o / 4) + (o % 4 + 3) % 4;
  };
  auto check_euler = [&] {
    std::vector<char> seen(num_regions, 0);
    long sum = 0;
    for (int d = 0; d < 4 * n; ++d) {
      if (!alive[d / 4]) continue;
      const int r = regions.find(label[d]);
      if (!seen[r]) sum += chi[r];
      seen[r] = 1;
    }
    if (sum != 2 - 2 * surface.genus() + remaining) {
      throw InternalError("overlay regions have the wrong Euler characteristic");
    }
  };

  for (;;) {
    check_euler();
    int bigon = -1;
    for (int h = 0; h < 4 * n && bigon < 0; ++h) {
      if (!alive[h / 4]) continue;
      const int h2 = next(h);
      if (h2 / 4 != h / 4 && next(h2) == h && chi[regions.find(label[h])] == 1) bigon = h;
    }
    if (bigon < 0) return remaining;
    if (remaining == 2) return 0;

    const int h1 = bigon;
    const int h2 = next(h1);
    const int p = h1 / 4, q = h2 / 4;
    if (4 * p + (h1 % 4 + 1) % 4 != twin[h2]) throw InternalError("malformed bigon");
    const int th1 = twin[h1];
    const int xp = 4 * p + (h1 % 4 + 2) % 4;
    const int yp = 4 * p + (h1 % 4 + 3) % 4;
    const int xq = 4 * q + (th1 % 4 + 2) % 4;
    const int yq = 4 * q + (h2 % 4 + 2) % 4;

    const int fp = regions.find(label[xp]);
    const int fq = regions.find(label[yq]);
    const int b = regions.find(label[h1]);
    const int d = regions.find(label[th1]);

    const int a1 = twin[xp], a2 = twin[xq], b1 = twin[yp], b2 = twin[yq];
    if (a1 / 4 == p || a1 / 4 == q || b1 / 4 == p || b1 / 4 == q) {
      throw InternalError("bigon surgery on a curve with two crossings");
    }
    twin[a1] = a2;
    twin[a2] = a1;
    twin[b1] = b2;
    twin[b2] = b1;

    const int merged_chi = (fp == fq ? chi[fp] : chi[fp] + chi[fq]) - 1;
    chi[regions.unite(fp, fq)] = merged_chi;
    const int dr = regions.find(d);
    const int kept = chi[dr];
    chi[regions.unite(b, dr)] = kept;

    alive[p] = alive[q] = 0;
    remaining -= 2;
  }
}

}  // namespace ihg
