#include "ihg/io.hpp"

#include <algorithm>
#include <sstream>

#include "ihg/error.hpp"

namespace ihg {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename T>
T read(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("field '") + key + "': " + e.what());
  }
}

const char* edge_kind_name(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::LoopA:
      return "loop_a";
    case EdgeKind::LoopB:
      return "loop_b";
    case EdgeKind::Chord:
      return "chord";
  }
  return "?";
}

}  // namespace

Json to_json(const CurveClass& curve) {
  return Json{{"genus", curve.genus()}, {"coords", curve.coords()}};
}

CurveClass curve_from_json(const Json& j) {
  const auto coords = read<Weights>(j, "coords");
  if (j.contains("genus")) return CurveClass::from_coords(read<int>(j, "genus"), coords);
  return CurveClass::from_coords(coords);
}

Json curve_report(const CurveClass& curve) {
  Json j = to_json(curve);
  j["total_weight"] = curve.total_weight();
  j["homology"] = curve.homology();
  j["pi1_word"] = surface_letters(curve.pi1_word().letters);
  j["handlebody_word"] = handlebody_letters(curve.handlebody_word());
  j["meridian"] = curve.is_meridian();
  j["separating"] = curve.is_separating();
  j["vertex"] = kind_name(classify_curve_vertex(curve).kind);
  return j;
}

Json to_json(const Vertex& vertex) {
  Json j{{"kind", kind_name(vertex.kind)}, {"curves", Json::array()}};
  for (const CurveClass& c : vertex.curves) j["curves"].push_back(to_json(c));
  if (vertex.kind == VertexKind::Pants) j["region"] = vertex.region;
  return j;
}

Vertex vertex_from_json(const Json& j) {
  const VertexKind kind = parse_kind(read<std::string>(j, "kind"));
  std::vector<CurveClass> curves;
  for (const Json& c : field(j, "curves")) curves.push_back(curve_from_json(c));
  if (curves.empty()) throw InvalidInput("vertex without curves");
  for (const CurveClass& c : curves) {
    if (c.genus() != curves.front().genus()) throw InvalidInput("vertex curves of different genus");
  }
  if (kind != VertexKind::Pants) {
    if (curves.size() != 1) throw InvalidInput("disk and annulus vertices carry one curve");
    const Vertex v = classify_curve_vertex(curves.front());
    if (v.kind != kind) throw InvalidInput(std::string("curve is not a ") + kind_name(kind) + " curve");
    return v;
  }
  const Vertex v = make_pants(curves, read<int>(j, "region"));
  std::vector<CurveClass> distinct;
  for (const CurveClass& c : v.curves) {
    if (std::find(distinct.begin(), distinct.end(), c) == distinct.end()) distinct.push_back(c);
  }
  for (const Vertex& p : pants_vertices(distinct)) {
    if (p == v) return v;
  }
  throw InvalidInput("no incompressible pants with these boundary curves and region");
}

Json to_json(const PoolRecipe& recipe) {
  return Json{{"genus", recipe.genus},
              {"seeds", recipe.seeds},
              {"alphabet", recipe.alphabet},
              {"max_word_length", recipe.max_word_length},
              {"weight_cap", recipe.weight_cap},
              {"prng_seed", recipe.prng_seed}};
}

PoolRecipe recipe_from_json(const Json& j) {
  PoolRecipe r;
  r.genus = read<int>(j, "genus");
  r.seeds = read<std::vector<std::string>>(j, "seeds");
  r.alphabet = read<std::vector<std::string>>(j, "alphabet");
  r.max_word_length = read<int>(j, "max_word_length");
  r.weight_cap = read<Weight>(j, "weight_cap");
  if (j.contains("prng_seed")) r.prng_seed = read<std::uint64_t>(j, "prng_seed");
  return r;
}

Json to_json(const CurvePool& pool) {
  Json j{{"recipe", to_json(pool.recipe)}, {"curves", Json::array()}};
  for (const CurveClass& c : pool.curves) j["curves"].push_back(to_json(c));
  return j;
}

CurvePool pool_from_json(const Json& j) {
  CurvePool pool{recipe_from_json(field(j, "recipe")), {}};
  for (const Json& c : field(j, "curves")) {
    CurveClass curve = curve_from_json(c);
    if (curve.genus() != pool.recipe.genus) throw InvalidInput("pool curve of the wrong genus");
    if (std::find(pool.curves.begin(), pool.curves.end(), curve) != pool.curves.end()) {
      throw InvalidInput("duplicate curve in pool");
    }
    pool.curves.push_back(std::move(curve));
  }
  return pool;
}

Json to_json(const ComplexGraph& graph) {
  Json j{{"genus", graph.genus}, {"vertices", Json::array()}, {"edges", Json::array()}};
  for (const Vertex& v : graph.vertices) j["vertices"].push_back(to_json(v));
  for (const auto& [u, v] : graph.edges) j["edges"].push_back({u, v});
  return j;
}

ComplexGraph graph_from_json(const Json& j) {
  std::vector<Vertex> vertices;
  for (const Json& v : field(j, "vertices")) vertices.push_back(vertex_from_json(v));
  if (vertices.empty()) throw InvalidInput("graph without vertices");
  ComplexGraph graph = induced_graph(std::move(vertices));
  std::vector<std::pair<int, int>> edges;
  for (const Json& e : field(j, "edges")) {
    if (!e.is_array() || e.size() != 2) throw InvalidInput("edge must be a pair of indices");
    int u = e[0].get<int>(), v = e[1].get<int>();
    if (u > v) std::swap(u, v);
    edges.push_back({u, v});
  }
  std::sort(edges.begin(), edges.end());
  if (edges != graph.edges) throw InvalidInput("edge list disagrees with the adjacency rule");
  if (j.contains("genus") && read<int>(j, "genus") != graph.genus) {
    throw InvalidInput("graph genus disagrees with its vertices");
  }
  return graph;
}

std::string to_dot(const ComplexGraph& graph) {
  std::ostringstream out;
  out << "graph complex {\n";
  for (int i = 0; i < graph.size(); ++i) {
    const Vertex& v = graph.vertices[i];
    const char* shape = v.kind == VertexKind::Disk      ? "box"
                        : v.kind == VertexKind::Annulus ? "ellipse"
                                                        : "triangle";
    out << "  v" << i << " [label=\"" << kind_name(v.kind) << " " << i << "\", shape=" << shape
        << "];\n";
  }
  for (const auto& [u, v] : graph.edges) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

Json surface_json(const TriangulatedSurface& surface) {
  Json j{{"genus", surface.genus()},
         {"edges", surface.num_edges()},
         {"triangles", surface.num_triangles()},
         {"vertices", 1},
         {"euler_characteristic", surface.euler_characteristic()},
         {"boundary_word", Json::array()},
         {"edge_table", Json::array()},
         {"triangle_table", Json::array()}};
  for (const SignedLetter& l : surface.scheme().boundary_word) {
    j["boundary_word"].push_back(std::string(l.sign < 0 ? "-" : "") + l.symbol +
                                 std::to_string(l.handle + 1));
  }
  for (int e = 0; e < surface.num_edges(); ++e) {
    j["edge_table"].push_back({{"id", e},
                               {"kind", edge_kind_name(surface.edge(e).kind)},
                               {"index", surface.edge(e).index},
                               {"label", surface.edge_label(e)}});
  }
  for (const Triangle& t : surface.triangles()) {
    Json sides = Json::array();
    for (const Side& s : t.sides) sides.push_back({{"edge", s.edge}, {"forward", s.forward}});
    j["triangle_table"].push_back({{"polygon_vertices", t.polygon_vertex}, {"sides", sides}});
  }
  return j;
}

}  // namespace ihg
