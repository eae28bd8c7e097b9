#include "ihg/complex.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>

#include "ihg/error.hpp"
#include "ihg/parallel.hpp"
#include "ihg/search.hpp"

namespace ihg {

const char* kind_name(VertexKind kind) {
  switch (kind) {
    case VertexKind::Disk:
      return "disk";
    case VertexKind::Annulus:
      return "annulus";
    case VertexKind::Pants:
      return "pants";
  }
  return "?";
}

VertexKind parse_kind(const std::string& name) {
  if (name == "disk") return VertexKind::Disk;
  if (name == "annulus") return VertexKind::Annulus;
  if (name == "pants") return VertexKind::Pants;
  throw InvalidInput("unknown vertex kind '" + name + "'");
}

bool vertex_order(const Vertex& x, const Vertex& y) {
  if (x.kind != y.kind) return x.kind < y.kind;
  if (x.curves.size() != y.curves.size()) return x.curves.size() < y.curves.size();
  for (std::size_t i = 0; i < x.curves.size(); ++i) {
    if (x.curves[i] == y.curves[i]) continue;
    return weight_order(x.curves[i], y.curves[i]);
  }
  return x.region < y.region;
}

Vertex classify_curve_vertex(const CurveClass& curve) {
  return {curve.is_meridian() ? VertexKind::Disk : VertexKind::Annulus, {curve}, -1};
}

Vertex make_pants(std::vector<CurveClass> boundary, int region) {
  if (boundary.size() != 3) throw InvalidInput("a pants vertex has three boundary curves");
  for (const CurveClass& c : boundary) {
    if (c.is_meridian()) throw InvalidInput("pants boundary contains a meridian");
  }
  std::sort(boundary.begin(), boundary.end(), weight_order);
  return {VertexKind::Pants, std::move(boundary), region};
}

PantsScan scan_pants(const std::vector<CurveClass>& curves) {
  PantsScan out;
  for (const ComplementComponent& comp : complement_components(curves)) {
    if (comp.genus != 0 || comp.boundary.size() != 3) continue;
    std::vector<CurveClass> boundary;
    bool compressible = false;
    for (int i : comp.boundary) {
      boundary.push_back(curves[i]);
      compressible = compressible || curves[i].is_meridian();
    }
    if (compressible) {
      out.compressible.push_back(comp);
    } else {
      out.incompressible.push_back(make_pants(std::move(boundary), comp.boundary_region_id));
    }
  }
  std::sort(out.incompressible.begin(), out.incompressible.end(), vertex_order);
  return out;
}

std::vector<Vertex> pants_vertices(const std::vector<CurveClass>& curves) {
  return scan_pants(curves).incompressible;
}

bool adjacent(const Vertex& u, const Vertex& v) {
  if (u == v) return false;
  for (const CurveClass& x : u.curves) {
    for (const CurveClass& y : v.curves) {
      if (intersection_number(x, y) != 0) return false;
    }
  }
  return true;
}

SimplexReport is_simplex(const std::vector<Vertex>& vertices) {
  SimplexReport report;
  report.vertices = vertices;
  const std::size_t n = vertices.size();
  report.adjacency.assign(n, std::vector<char>(n, 0));
  report.verdict = true;
  for (std::size_t i = 0; i < n; ++i) {
    switch (vertices[i].kind) {
      case VertexKind::Disk:
        ++report.disks;
        break;
      case VertexKind::Annulus:
        ++report.annuli;
        break;
      case VertexKind::Pants:
        ++report.pants;
        break;
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adj = adjacent(vertices[i], vertices[j]);
      report.adjacency[i][j] = report.adjacency[j][i] = adj;
      if (!adj && report.verdict) {
        report.verdict = false;
        report.diagnostic = vertices[i] == vertices[j]
                                ? "vertices " + std::to_string(i) + " and " + std::to_string(j) +
                                      " coincide"
                                : "vertices " + std::to_string(i) + " and " + std::to_string(j) +
                                      " are not adjacent";
      }
    }
  }
  return report;
}

namespace {

void require_decomposition(int genus, const std::vector<CurveClass>& curves) {
  if (static_cast<int>(curves.size()) != 3 * genus - 3) {
    throw InvalidInput("a decomposition at genus " + std::to_string(genus) + " has " +
                       std::to_string(3 * genus - 3) + " curves, got " +
                       std::to_string(curves.size()));
  }
  for (std::size_t i = 0; i < curves.size(); ++i) {
    if (curves[i].genus() != genus) {
      throw InvalidInput("curve " + std::to_string(i) + " has the wrong genus");
    }
  }
  if (!is_pants_decomposition(curves)) {
    throw InvalidInput("curves do not cut the surface into pairs of pants");
  }
}

}  // namespace

SimplexReport verify_max_simplex(int genus, const std::vector<CurveClass>& decomposition) {
  for (std::size_t i = 0; i < decomposition.size(); ++i) {
    if (decomposition[i].is_meridian()) {
      throw InvalidInput("decomposition contains a meridian: curve " + std::to_string(i));
    }
  }
  require_decomposition(genus, decomposition);
  std::vector<Vertex> vertices;
  for (const CurveClass& c : decomposition) vertices.push_back(classify_curve_vertex(c));
  for (Vertex& p : pants_vertices(decomposition)) vertices.push_back(std::move(p));
  SimplexReport report = is_simplex(vertices);
  const bool counts = report.annuli == 3 * genus - 3 && report.pants == 2 * genus - 2 &&
                      static_cast<int>(vertices.size()) == 5 * genus - 5;
  if (report.verdict && !counts) report.diagnostic = "vertex counts differ from 3g-3 annuli and 2g-2 pants";
  report.verdict = report.verdict && counts;
  return report;
}

MeridianLinkReport verify_meridian_link(int genus, const std::vector<CurveClass>& decomposition) {
  const auto meridians = std::count_if(decomposition.begin(), decomposition.end(),
                                       [](const CurveClass& c) { return c.is_meridian(); });
  if (meridians != 1) {
    throw InvalidInput("expected exactly one meridian, found " + std::to_string(meridians));
  }
  require_decomposition(genus, decomposition);
  std::vector<Vertex> vertices;
  for (const CurveClass& c : decomposition) {
    if (c.is_meridian()) vertices.insert(vertices.begin(), classify_curve_vertex(c));
    else vertices.push_back(classify_curve_vertex(c));
  }
  const PantsScan scan = scan_pants(decomposition);
  for (const Vertex& p : scan.incompressible) vertices.push_back(p);

  MeridianLinkReport report;
  report.simplex = is_simplex(vertices);
  report.compressible_pants = static_cast<int>(scan.compressible.size());
  report.expected_vertices = 5 * genus - 7;
  report.verdict = report.simplex.verdict && report.simplex.disks == 1 &&
                   report.compressible_pants == 2 &&
                   static_cast<int>(vertices.size()) == report.expected_vertices;
  if (report.simplex.verdict && !report.verdict) {
    report.simplex.diagnostic = "expected " + std::to_string(report.expected_vertices) +
                                " vertices and two compressible pants";
  }
  return report;
}

bool ComplexGraph::has_edge(int u, int v) const {
  const auto& n = neighbors[u];
  return std::binary_search(n.begin(), n.end(), v);
}

int ComplexGraph::find(const Vertex& v) const {
  for (int i = 0; i < size(); ++i) {
    if (vertices[i] == v) return i;
  }
  return -1;
}

ComplexGraph induced_graph(std::vector<Vertex> vertices) {
  ComplexGraph graph;
  if (!vertices.empty()) graph.genus = vertices.front().genus();
  const std::size_t n = vertices.size();

  // Distinct boundary curves and their pairwise disjointness.
  std::vector<CurveClass> curves;
  std::map<Weights, int> curve_index;
  std::vector<std::vector<int>> members(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (vertices[i].genus() != graph.genus) throw InvalidInput("vertices of different genus");
    for (const CurveClass& c : vertices[i].curves) {
      auto [it, fresh] = curve_index.try_emplace(c.coords(), static_cast<int>(curves.size()));
      if (fresh) curves.push_back(c);
      members[i].push_back(it->second);
    }
  }
  const std::size_t m = curves.size();
  std::vector<std::vector<char>> disjoint(m, std::vector<char>(m, 1));
  parallel_for(m, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      disjoint[i][j] = intersection_number(curves[i], curves[j]) == 0;
    }
  });
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) disjoint[j][i] = disjoint[i][j];
  }

  std::vector<std::vector<int>> rows(n);
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (vertices[i] == vertices[j]) throw InvalidInput("duplicate vertex in pool");
      bool adj = true;
      for (int x : members[i]) {
        for (int y : members[j]) adj = adj && disjoint[x][y];
      }
      if (adj) rows[i].push_back(static_cast<int>(j));
    }
  });
  graph.neighbors.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (int j : rows[i]) {
      graph.edges.push_back({static_cast<int>(i), j});
      graph.neighbors[i].push_back(j);
      graph.neighbors[j].push_back(static_cast<int>(i));
    }
  }
  for (auto& nb : graph.neighbors) std::sort(nb.begin(), nb.end());
  graph.vertices = std::move(vertices);
  return graph;
}

ComplexGraph link_in_pool(const Vertex& v, const std::vector<Vertex>& pool) {
  std::vector<Vertex> link;
  for (const Vertex& u : pool) {
    if (u.genus() != v.genus()) throw InvalidInput("pool vertex of different genus");
    if (adjacent(u, v)) link.push_back(u);
  }
  ComplexGraph graph = induced_graph(std::move(link));
  graph.genus = v.genus();
  return graph;
}

namespace {

using Bits = std::vector<std::uint64_t>;

class CliqueSearch {
 public:
  explicit CliqueSearch(const ComplexGraph& graph) : n_(graph.size()), words_((n_ + 63) / 64) {
    adj_.assign(n_, Bits(words_, 0));
    for (const auto& [i, j] : graph.edges) {
      set(adj_[i], j);
      set(adj_[j], i);
    }
  }

  std::vector<int> run() {
    Bits all(words_, 0);
    for (int i = 0; i < n_; ++i) set(all, i);
    std::vector<int> current;
    expand(current, all);
    return best_;
  }

 private:
  static void set(Bits& b, int i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
  static void clear(Bits& b, int i) { b[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  static bool empty(const Bits& b) {
    return std::all_of(b.begin(), b.end(), [](std::uint64_t w) { return w == 0; });
  }

  // Greedy colouring: vertices in colour order with their colour numbers.
  void colour(const Bits& candidates, std::vector<int>& order, std::vector<int>& bound) const {
    Bits uncoloured = candidates;
    int k = 0;
    while (!empty(uncoloured)) {
      ++k;
      Bits available = uncoloured;
      while (!empty(available)) {
        int v = -1;
        for (int w = 0; w < words_; ++w) {
          if (available[w]) {
            v = w * 64 + std::countr_zero(available[w]);
            break;
          }
        }
        clear(available, v);
        clear(uncoloured, v);
        for (int w = 0; w < words_; ++w) available[w] &= ~adj_[v][w];
        order.push_back(v);
        bound.push_back(k);
      }
    }
  }

  void expand(std::vector<int>& current, Bits candidates) {
    std::vector<int> order, bound;
    colour(candidates, order, bound);
    for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
      if (current.size() + bound[idx] <= best_.size()) return;
      const int v = order[idx];
      current.push_back(v);
      Bits next(words_);
      for (int w = 0; w < words_; ++w) next[w] = candidates[w] & adj_[v][w];
      if (empty(next)) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
      }
      current.pop_back();
      clear(candidates, v);
    }
  }

  int n_;
  int words_;
  std::vector<Bits> adj_;
  std::vector<int> best_;
};

}  // namespace

std::vector<int> maximum_clique(const ComplexGraph& graph, int vertex_limit) {
  if (graph.size() > vertex_limit) {
    throw SearchFailure("clique search refused: " + std::to_string(graph.size()) +
                        " vertices exceed the limit of " + std::to_string(vertex_limit));
  }
  std::vector<int> members = CliqueSearch(graph).run();
  std::sort(members.begin(), members.end());
  return members;
}

int max_clique(const ComplexGraph& graph, int vertex_limit) {
  return static_cast<int>(maximum_clique(graph, vertex_limit).size());
}

ConeReport cone_vertex_check(const Vertex& pants, const std::vector<Vertex>& pool) {
  if (pants.kind != VertexKind::Pants) throw InvalidInput("cone check needs a pants vertex");
  std::vector<const Vertex*> link;
  for (const Vertex& u : pool) {
    if (adjacent(u, pants)) link.push_back(&u);
  }
  ConeReport report;
  report.link_size = static_cast<int>(link.size());
  for (const CurveClass& c : pants.curves) {
    const Vertex apex = classify_curve_vertex(c);
    bool joined = true;
    for (const Vertex* u : link) joined = joined && (*u == apex || adjacent(*u, apex));
    if (joined) {
      report.verdict = true;
      report.apex = apex;
      break;
    }
  }
  return report;
}

StarReport star_property_check(const Vertex& v, const std::vector<Vertex>& pool) {
  if (v.kind == VertexKind::Pants) throw InvalidInput("star check needs a disk or annulus vertex");
  std::vector<int> link;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (adjacent(pool[i], v)) link.push_back(static_cast<int>(i));
  }
  StarReport report;
  report.link_size = static_cast<int>(link.size());
  std::vector<int> witness(link.size(), -1);
  parallel_for(link.size(), [&](std::size_t q) {
    for (int r : link) {
      if (!(pool[r] == pool[link[q]]) && !adjacent(pool[link[q]], pool[r])) {
        witness[q] = r;
        return;
      }
    }
  });
  for (std::size_t q = 0; q < link.size(); ++q) {
    if (witness[q] < 0) continue;
    ++report.covered;
    report.witnesses.push_back({link[q], witness[q]});
  }
  report.coverage = link.empty() ? 0.0 : static_cast<double>(report.covered) / link.size();
  report.insufficient = link.empty() || report.covered < report.link_size;
  return report;
}

}  // namespace ihg
