#include "ihg/metric.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <set>

#include "ihg/error.hpp"
#include "ihg/parallel.hpp"

namespace ihg {

ComplexGraph build_graph(const std::vector<CurveClass>& pool, bool include_pants) {
  if (pool.empty()) throw InvalidInput("empty pool");
  std::vector<CurveClass> curves;
  for (const CurveClass& c : pool) {
    if (std::find(curves.begin(), curves.end(), c) == curves.end()) curves.push_back(c);
  }
  std::vector<Vertex> vertices;
  for (const CurveClass& c : curves) vertices.push_back(classify_curve_vertex(c));

  if (include_pants) {
    const std::size_t n = curves.size();
    std::vector<std::vector<char>> disjoint(n, std::vector<char>(n, 0));
    parallel_for(n, [&](std::size_t i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        disjoint[i][j] = intersection_number(curves[i], curves[j]) == 0;
      }
    });
    // Multicurves of two or three pool curves; only pants using every member count.
    std::vector<std::vector<int>> groups;
    for (std::size_t i = 0; i < n; ++i) {
      if (curves[i].is_meridian()) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!disjoint[i][j] || curves[j].is_meridian()) continue;
        groups.push_back({static_cast<int>(i), static_cast<int>(j)});
        for (std::size_t k = j + 1; k < n; ++k) {
          if (disjoint[i][k] && disjoint[j][k] && !curves[k].is_meridian()) {
            groups.push_back({static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)});
          }
        }
      }
    }
    std::vector<std::vector<Vertex>> found(groups.size());
    parallel_for(groups.size(), [&](std::size_t g) {
      std::vector<CurveClass> multicurve;
      for (int i : groups[g]) multicurve.push_back(curves[i]);
      for (Vertex& p : pants_vertices(multicurve)) {
        bool uses_all = true;
        for (const CurveClass& c : multicurve) {
          uses_all = uses_all && std::find(p.curves.begin(), p.curves.end(), c) != p.curves.end();
        }
        if (uses_all) found[g].push_back(std::move(p));
      }
    });
    for (auto& list : found) {
      for (Vertex& p : list) vertices.push_back(std::move(p));
    }
  }
  std::sort(vertices.begin(), vertices.end(), vertex_order);
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return induced_graph(std::move(vertices));
}

Adjacency adjacency_from_edges(int num_vertices, const std::vector<std::pair<int, int>>& edges) {
  Adjacency adj(num_vertices);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices || u == v) {
      throw InvalidInput("bad edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nb : adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return adj;
}

std::vector<int> bfs_distances(const ComplexGraph& graph, int source) {
  return bfs_distances(graph.neighbors, source);
}

std::vector<int> bfs_distances(const Adjacency& graph, int source) {
  std::vector<int> dist(graph.size(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : graph[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::optional<int> bfs_distance(const ComplexGraph& graph, int u, int v) {
  if (u < 0 || v < 0 || u >= graph.size() || v >= graph.size()) {
    throw InvalidInput("vertex not in graph");
  }
  const int d = bfs_distances(graph, u)[v];
  if (d < 0) return std::nullopt;
  return d;
}

namespace {

bool is_curve_vertex(const Vertex& v) { return v.kind != VertexKind::Pants; }

}  // namespace

std::vector<Vertex> project_path(const std::vector<Vertex>& path) {
  if (path.empty()) throw InvalidInput("empty path");
  if (!is_curve_vertex(path.front()) || !is_curve_vertex(path.back())) {
    throw InvalidInput("path endpoints must be disk or annulus vertices");
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!adjacent(path[i], path[i + 1])) {
      throw InvalidInput("path steps " + std::to_string(i) + " and " + std::to_string(i + 1) +
                         " are not adjacent");
    }
  }
  std::vector<Vertex> out;
  for (const Vertex& v : path) {
    Vertex image = is_curve_vertex(v) ? v : classify_curve_vertex(v.curves.front());
    if (out.empty() || !(out.back() == image)) out.push_back(std::move(image));
  }
  return out;
}

bool is_curve_path(const std::vector<Vertex>& path) {
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!is_curve_vertex(path[i])) return false;
    if (i + 1 < path.size() &&
        intersection_number(path[i].curves.front(), path[i + 1].curves.front()) != 0) {
      return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> sample_paths(const ComplexGraph& graph, int count, int length,
                                           std::uint64_t seed) {
  std::vector<int> starts;
  for (int i = 0; i < graph.size(); ++i) {
    if (is_curve_vertex(graph.vertices[i]) && !graph.neighbors[i].empty()) starts.push_back(i);
  }
  std::vector<std::vector<int>> paths;
  if (starts.empty()) return paths;
  std::mt19937_64 rng(seed);
  long attempts = 0;
  while (static_cast<int>(paths.size()) < count && attempts++ < 1000L * count) {
    std::vector<int> path{starts[rng() % starts.size()]};
    for (int step = 0; step < length; ++step) {
      const auto& nb = graph.neighbors[path.back()];
      path.push_back(nb[rng() % nb.size()]);
    }
    if (is_curve_vertex(graph.vertices[path.back()])) paths.push_back(std::move(path));
  }
  return paths;
}

CoboundedReport cobounded_check(const ComplexGraph& graph) {
  CoboundedReport report;
  for (int i = 0; i < graph.size(); ++i) {
    if (graph.vertices[i].kind != VertexKind::Pants) continue;
    ++report.pants;
    int nearest = -1;
    const auto dist = bfs_distances(graph, i);
    for (int j = 0; j < graph.size(); ++j) {
      if (is_curve_vertex(graph.vertices[j]) && dist[j] >= 0 && (nearest < 0 || dist[j] < nearest)) {
        nearest = dist[j];
      }
    }
    if (nearest != 1) report.violations.push_back(i);
    if (report.max_distance >= 0) report.max_distance = nearest < 0 ? -1 : std::max(report.max_distance, nearest);
  }
  return report;
}

std::string DeltaReport::value() const {
  if (twice_delta % 2 == 0) return std::to_string(twice_delta / 2);
  return std::to_string(twice_delta) + "/2";
}

DeltaReport delta_estimate(const ComplexGraph& graph, long sample_count, std::uint64_t seed) {
  return delta_estimate(graph.neighbors, sample_count, seed);
}

DeltaReport delta_estimate(const Adjacency& graph, long sample_count, std::uint64_t seed) {
  if (sample_count < 1) throw InvalidInput("sample count must be positive");
  const int size = static_cast<int>(graph.size());
  // Largest component; ties go to the one holding the smallest vertex.
  std::vector<int> component(size, -1);
  std::vector<int> best;
  for (int s = 0; s < size; ++s) {
    if (component[s] >= 0) continue;
    std::vector<int> members;
    const auto dist = bfs_distances(graph, s);
    for (int v = 0; v < size; ++v) {
      if (dist[v] >= 0) {
        component[v] = s;
        members.push_back(v);
      }
    }
    if (members.size() > best.size()) best = std::move(members);
  }
  DeltaReport report;
  report.component_size = static_cast<int>(best.size());
  if (best.size() < 4) throw InvalidInput("graph has no component with four vertices");

  const std::size_t n = best.size();
  std::vector<std::vector<int>> d(n);
  parallel_for(n, [&](std::size_t i) {
    const auto all = bfs_distances(graph, best[i]);
    for (int v : best) d[i].push_back(all[v]);
  });
  auto defect = [&](std::size_t x, std::size_t y, std::size_t z, std::size_t w) {
    std::array<long, 3> s{d[x][y] + d[z][w], d[x][z] + d[y][w], d[x][w] + d[y][z]};
    std::sort(s.begin(), s.end());
    return s[2] - s[1];
  };

  const long double combos = static_cast<long double>(n) * (n - 1) * (n - 2) * (n - 3) / 24;
  if (combos <= sample_count) {
    report.exhaustive = true;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        for (std::size_t z = y + 1; z < n; ++z)
          for (std::size_t w = z + 1; w < n; ++w) {
            report.twice_delta = std::max(report.twice_delta, defect(x, y, z, w));
            ++report.quadruples;
          }
    return report;
  }
  std::mt19937_64 rng(seed);
  for (long k = 0; k < sample_count; ++k) {
    std::array<std::size_t, 4> q{};
    for (auto& v : q) v = rng() % n;
    report.twice_delta = std::max(report.twice_delta, defect(q[0], q[1], q[2], q[3]));
    ++report.quadruples;
  }
  return report;
}

HomologyClass act_on_homology(const TwistWord& word, int genus, HomologyClass h) {
  const ReferenceCurveSet& refs = reference_curves(genus);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const HomologyClass& c = refs.at(it->label).homology();
    const long k = it->power * symplectic(h, c);
    for (std::size_t i = 0; i < h.size(); ++i) h[i] += k * c[i];
  }
  return h;
}

namespace {

// The complement component of the boundary curves that a pants vertex names.
ComplementComponent locate_pants(const Vertex& p, std::vector<CurveClass>& distinct) {
  distinct.clear();
  for (const CurveClass& c : p.curves) {
    if (std::find(distinct.begin(), distinct.end(), c) == distinct.end()) distinct.push_back(c);
  }
  for (const ComplementComponent& comp : complement_components(distinct)) {
    if (comp.boundary_region_id == p.region && comp.genus == 0 && comp.boundary.size() == 3) {
      return comp;
    }
  }
  throw InvalidInput("pants vertex names no region of its boundary curves");
}

}  // namespace

Vertex apply_mapping_class(const TwistWord& word, const Vertex& vertex) {
  if (vertex.kind != VertexKind::Pants) {
    return classify_curve_vertex(apply_twist_word(word, vertex.curves.front()));
  }
  std::vector<CurveClass> source;
  const ComplementComponent comp = locate_pants(vertex, source);
  std::vector<CurveClass> image;
  for (const CurveClass& c : source) image.push_back(apply_twist_word(word, c));

  std::vector<const ComplementComponent*> matches;
  const auto image_comps = complement_components(image);
  for (const ComplementComponent& ic : image_comps) {
    if (ic.genus == 0 && ic.boundary == comp.boundary) matches.push_back(&ic);
  }
  if (matches.empty()) throw InternalError("mapping class lost a pants region");
  const ComplementComponent* chosen = matches.front();
  if (matches.size() > 1) {
    // Two pants share the boundary: follow the side of an oriented boundary curve.
    std::size_t k = 0;
    while (k < comp.boundary.size() && comp.boundary_sides[k] == 0) ++k;
    if (k == comp.boundary.size()) throw InternalError("ambiguous pants with separating boundary");
    const int i = comp.boundary[k];
    const HomologyClass pushed = act_on_homology(word, vertex.genus(), source[i].homology());
    const int agree = pushed == image[i].homology() ? 1 : -1;
    const int want = comp.boundary_sides[k] * agree;
    chosen = nullptr;
    for (const ComplementComponent* m : matches) {
      for (std::size_t j = 0; j < m->boundary.size(); ++j) {
        if (m->boundary[j] == i && m->boundary_sides[j] == want) chosen = m;
      }
    }
    if (!chosen) throw InternalError("no image pants on the expected side");
  }
  std::vector<CurveClass> boundary;
  for (int i : chosen->boundary) boundary.push_back(image[i]);
  return make_pants(std::move(boundary), chosen->boundary_region_id);
}

std::vector<Vertex> apply_mapping_class(const TwistWord& word,
                                        const std::vector<Vertex>& vertices) {
  std::vector<std::optional<Vertex>> out(vertices.size());
  parallel_for(vertices.size(), [&](std::size_t i) { out[i] = apply_mapping_class(word, vertices[i]); });
  std::vector<Vertex> result;
  for (auto& v : out) result.push_back(std::move(*v));
  return result;
}

PoolRecipe r5_recipe() {
  PoolRecipe r;
  r.genus = 2;
  r.seeds = {"c3"};
  r.alphabet = {"c1", "c2", "c4", "c5"};
  r.max_word_length = 4;
  r.weight_cap = 4;
  return r;
}

namespace {

HandlebodyWord square_of(int handle) {
  return {canonical_cyclic({{handle, 1}, {handle, 1}})};
}

// Two incompressible pants, both bounded by all three curves.
bool splits_into_twin_pants(const CurveClass& x, const CurveClass& y, const CurveClass& z) {
  if (x == z || y == z || z.is_meridian()) return false;
  if (intersection_number(x, z) != 0 || intersection_number(y, z) != 0) return false;
  const auto comps = complement_components({x, y, z});
  if (comps.size() != 2) return false;
  return std::all_of(comps.begin(), comps.end(), [](const ComplementComponent& c) {
    return c.genus == 0 && c.boundary == std::vector<int>{0, 1, 2};
  });
}

}  // namespace

R5Witness r5_witness(const std::vector<CurveClass>& pool) {
  const ReferenceCurveSet& refs = reference_curves(2);
  const TwistWord squares = parse_twist_word("a1^2 a2^2");
  const CurveClass alpha = apply_twist_word(squares, refs.at("b1"));
  const CurveClass beta = apply_twist_word(squares, refs.at("b2"));
  if (!(alpha.handlebody_word() == square_of(0)) || !(beta.handlebody_word() == square_of(1))) {
    throw InternalError("squared twists do not give the words x1^2 and x2^2");
  }
  const CurveClass& b1 = refs.at("b1");
  const CurveClass& b2 = refs.at("b2");

  std::optional<CurveClass> gamma;
  std::string source;
  int direct = 0, transported = 0;
  for (const CurveClass& c : pool) {
    if (c.genus() != 2) throw InvalidInput("r5 witness lives at genus 2");
    if (splits_into_twin_pants(alpha, beta, c)) {
      ++direct;
      if (!gamma) {
        gamma = c;
        source = "pool curve";
      }
    } else if (intersection_number(c, b1) == 0 && intersection_number(c, b2) == 0) {
      const auto comps = c == b1 || c == b2 ? std::vector<ComplementComponent>{}
                                            : complement_components({b1, b2, c});
      const bool twin = comps.size() == 2 && std::all_of(comps.begin(), comps.end(), [](const auto& k) {
        return k.genus == 0 && k.boundary == std::vector<int>{0, 1, 2};
      });
      if (!twin) continue;
      const CurveClass image = apply_twist_word(squares, c);
      if (!splits_into_twin_pants(alpha, beta, image)) continue;
      ++transported;
      if (!gamma) {
        gamma = image;
        source = "image under T_a1^2 T_a2^2 of a pool curve completing b1, b2";
      }
    }
  }
  if (!gamma) {
    throw SearchFailure("no third curve in a pool of " + std::to_string(pool.size()) +
                        " curves completes alpha, beta to twin pants");
  }
  const auto pants = pants_vertices({alpha, beta, *gamma});
  if (pants.size() != 2 || pants[0].curves != pants[1].curves || pants[0] == pants[1]) {
    throw InternalError("twin pants did not come out as two vertices");
  }
  R5Witness w{alpha, beta, *gamma, pants[0], pants[1], source, {}};
  w.annotation = "alpha and beta have handlebody words x1^2 and x2^2; " +
                 std::string(is_proper_power(alpha.handlebody_word().letters) &&
                                     is_proper_power(beta.handlebody_word().letters)
                                 ? "both are proper powers, so neither is a free basis element"
                                 : "unexpected: a word is not a proper power") +
                 "; candidates found directly " + std::to_string(direct) + ", by transport " +
                 std::to_string(transported);
  return w;
}

InvolutionReport involution_check(const std::vector<CurveClass>& pool, const R5Witness& r5,
                                  int samples, std::uint64_t seed) {
  if (pool.empty() || pool.front().genus() != 2) {
    throw InvalidInput("the involution check runs at genus 2 only");
  }
  std::vector<CurveClass> sample = pool;
  if (static_cast<int>(sample.size()) > samples) {
    std::mt19937_64 rng(seed);
    std::shuffle(sample.begin(), sample.end(), rng);
    sample.erase(sample.begin() + samples, sample.end());
    std::sort(sample.begin(), sample.end(), weight_order);
  }
  std::vector<Vertex> vertices;
  for (const CurveClass& c : sample) vertices.push_back(classify_curve_vertex(c));
  vertices.push_back(r5.first);
  vertices.push_back(r5.second);

  InvolutionReport report;
  const std::vector<std::pair<std::string, std::string>> words{
      {"iota1", "c1 c2 c3 c4 c5^2 c4 c3 c2 c1"},
      {"iota2", "c1 c2 c3 c4 c5 c1 c2 c3 c4 c5 c1 c2 c3 c4 c5"}};
  for (const auto& [name, text] : words) {
    InvolutionCandidate cand;
    cand.name = name;
    cand.word = text;
    const TwistWord word = parse_twist_word(text);
    std::vector<char> fixed(sample.size()), meridian(sample.size());
    parallel_for(sample.size(), [&](std::size_t i) {
      const CurveClass image = apply_twist_word(word, sample[i]);
      fixed[i] = image == sample[i];
      meridian[i] = image.is_meridian() == sample[i].is_meridian();
    });
    cand.curves_checked = static_cast<int>(sample.size());
    cand.curves_fixed = static_cast<int>(std::count(fixed.begin(), fixed.end(), 1));
    cand.meridians_preserved = static_cast<int>(std::count(meridian.begin(), meridian.end(), 1));

    const std::vector<Vertex> once = apply_mapping_class(word, vertices);
    const std::vector<Vertex> twice = apply_mapping_class(word, once);
    cand.vertices_checked = static_cast<int>(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) cand.squares_identity += twice[i] == vertices[i];
    const Vertex& p = once[once.size() - 2];
    const Vertex& q = once.back();
    cand.pants_pair = p == r5.first && q == r5.second    ? "fixed"
                      : p == r5.second && q == r5.first ? "swapped"
                                                        : "moved";
    cand.passed = cand.curves_fixed == cand.curves_checked &&
                  cand.squares_identity == cand.vertices_checked &&
                  cand.meridians_preserved == cand.curves_checked && cand.pants_pair != "moved";
    if (cand.passed && report.accepted.empty()) report.accepted = name;
    report.candidates.push_back(cand);
  }
  report.verdict = !report.accepted.empty();
  if (!report.verdict) report.diagnostic = "neither iota1 nor iota2 passed verification";
  return report;
}

}  // namespace ihg
