// Command-line front end: surface data, curve queries, pools, graphs,
// metrics and the verification suites.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ihg/error.hpp"
#include "ihg/suites.hpp"

namespace {

using ihg::Json;

constexpr int kPass = 0;
constexpr int kVerdictFailed = 1;
constexpr int kUsage = 2;

struct Options {
  int genus = 2;
  std::uint64_t seed = 0;
  std::optional<int> max_word_length;
  std::optional<ihg::Weight> weight_cap;
  std::optional<int> samples;
  std::string out;
  std::string format = "json";
  bool allow_large_genus = false;
  bool timing = false;
  bool verbose = false;
};

/// Thrown for usage errors detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_genus(const Options& o) {
  if (o.genus < 2) throw UsageError("genus must be at least 2");
  if (o.genus > 5 && !o.allow_large_genus) {
    throw UsageError("genus above 5 needs --allow-large-genus");
  }
}

ihg::SuiteConfig suite_config(const Options& o) {
  return ihg::SuiteConfig{o.genus, o.seed, o.samples, o.max_word_length, o.weight_cap};
}

// Echo of everything that determines the run.
Json run_config(const Options& o, const std::string& command, const Json& inputs) {
  Json j{{"genus", o.genus}, {"subcommand", command}, {"seed", o.seed}};
  j["max_word_length"] = o.max_word_length ? Json(*o.max_word_length) : Json();
  j["weight_cap"] = o.weight_cap ? Json(*o.weight_cap) : Json();
  j["samples"] = o.samples ? Json(*o.samples) : Json();
  j["out"] = o.out;
  j["format"] = o.format;
  j["allow_large_genus"] = o.allow_large_genus;
  j["verbose"] = o.verbose;
  j["inputs"] = inputs;
  return j;
}

Json envelope(const Options& o, const std::string& command, const Json& inputs) {
  return Json{{"tool", ihg::kToolVersion}, {"config", run_config(o, command, inputs)}};
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw UsageError("cannot write " + o.out);
  file << text;
}

void emit_json(const Options& o, const Json& j) { emit(o, j.dump(2) + "\n"); }

Json read_json_file(const std::string& path) {
  if (!std::filesystem::exists(path)) throw UsageError("no such file: " + path);
  std::ifstream in(path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Curve specs: a reference label, coordinate JSON, or "word@spec".

ihg::CurveClass parse_curve(const std::string& spec, int genus) {
  if (const auto at = spec.rfind('@'); at != std::string::npos) {
    std::string word = spec.substr(0, at);
    std::replace(word.begin(), word.end(), ',', ' ');
    const ihg::CurveClass seed = parse_curve(spec.substr(at + 1), genus);
    return ihg::apply_twist_word(ihg::parse_twist_word(word), seed);
  }
  if (!spec.empty() && (spec.front() == '[' || spec.front() == '{')) {
    Json j;
    try {
      j = Json::parse(spec);
    } catch (const nlohmann::json::exception& e) {
      throw ihg::InvalidInput(std::string("curve JSON: ") + e.what());
    }
    if (j.is_array()) j = Json{{"coords", j}};
    const ihg::CurveClass c = ihg::curve_from_json(j);
    if (c.genus() != genus) throw ihg::InvalidInput("curve genus differs from --genus");
    return c;
  }
  return ihg::reference_curves(genus).at(spec);
}

std::string classification(const ihg::CurveClass& c) {
  if (c.is_meridian()) return "disk (meridian)";
  return c.is_separating() ? "annulus (separating, non-meridian)" : "annulus (non-meridian)";
}

int cmd_surface_info(const Options& o) {
  check_genus(o);
  const ihg::TriangulatedSurface& s = ihg::surface_of_genus(o.genus);
  Json j = envelope(o, "surface info", Json::array());
  j["surface"] = ihg::surface_json(s);
  if (o.format == "text") {
    std::ostringstream t;
    t << "genus " << o.genus << ": " << s.num_edges() << " edges, " << s.num_triangles()
      << " triangles, 1 vertex, euler characteristic " << s.euler_characteristic() << "\n";
    emit(o, t.str());
  } else {
    emit_json(o, j);
  }
  return kPass;
}

std::string trimmed(std::string s) {
  s.erase(0, s.find_first_not_of(' '));
  return s;
}

int cmd_curve(const Options& o, const std::string& op, std::vector<std::string> specs, std::string about,
              int power) {
  check_genus(o);
  for (std::string& s : specs) s = trimmed(s);
  about = trimmed(about);
  Json inputs = specs;
  if (op == "twist") inputs = Json{{"curve", specs}, {"about", about}, {"power", power}};
  Json j = envelope(o, "curve " + op, inputs);
  std::ostringstream t;
  if (op == "classify" || op == "word") {
    if (specs.size() != 1) throw UsageError(op + " takes one curve");
    const ihg::CurveClass c = parse_curve(specs[0], o.genus);
    j["curve"] = ihg::curve_report(c);
    j["classification"] = classification(c);
    if (op == "classify") {
      t << classification(c) << "\n";
    } else {
      t << "pi1: " << ihg::format_surface_word(c.pi1_word().letters) << "\n"
        << "handlebody: " << ihg::format_handlebody_word(c.handlebody_word()) << "\n";
    }
  } else if (op == "intersect") {
    if (specs.size() != 2) throw UsageError("intersect takes two curves");
    const ihg::CurveClass x = parse_curve(specs[0], o.genus);
    const ihg::CurveClass y = parse_curve(specs[1], o.genus);
    const ihg::Weight n = ihg::intersection_number(x, y);
    j["first"] = ihg::to_json(x);
    j["second"] = ihg::to_json(y);
    j["intersection_number"] = n;
    t << n << "\n";
  } else if (op == "twist") {
    if (specs.size() != 1) throw UsageError("twist takes one curve");
    if (about.empty()) throw UsageError("twist needs --about");
    const ihg::CurveClass c = parse_curve(specs[0], o.genus);
    const ihg::CurveClass image = ihg::dehn_twist(c, parse_curve(about, o.genus), power);
    j["image"] = ihg::curve_report(image);
    j["classification"] = classification(image);
    j["unchanged"] = image == c;
    t << ihg::to_json(image)["coords"].dump() << "\n" << classification(image) << "\n";
  } else {
    throw UsageError("unknown curve operation '" + op + "'");
  }
  if (o.format == "text") {
    emit(o, t.str());
  } else {
    emit_json(o, j);
  }
  return kPass;
}

int cmd_verify(const Options& o, const std::string& check) {
  check_genus(o);
  if (const std::string why = ihg::suite_refusal(check, o.genus); !why.empty()) throw UsageError(why);
  Json j = envelope(o, "verify " + check, Json::array());
  const ihg::SuiteConfig config = suite_config(o);
  std::vector<std::string> names;
  if (check == "all") {
    for (const auto& n : ihg::suite_names()) {
      if (ihg::suite_refusal(n, o.genus).empty()) names.push_back(n);
    }
  } else {
    names.push_back(check);
  }
  bool all = true;
  Json results = Json::array();
  std::ostringstream t;
  for (const auto& name : names) {
    const auto start = std::chrono::steady_clock::now();
    const ihg::SuiteResult r = ihg::run_suite(name, config);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Json item{{"check", r.check}, {"verdict", r.verdict ? "pass" : "fail"}};
    if (o.timing) item["seconds"] = seconds;
    item["details"] = r.details;
    results.push_back(item);
    all = all && r.verdict;
    t << r.check << ": " << (r.verdict ? "PASS" : "FAIL") << "\n";
    if (o.verbose) std::cerr << r.check << ": " << (r.verdict ? "pass" : "fail") << "\n";
  }
  j["checks"] = results;
  j["verdict"] = all ? "pass" : "fail";
  if (o.format == "text") {
    emit(o, t.str());
  } else {
    emit_json(o, j);
  }
  return all ? kPass : kVerdictFailed;
}

ihg::PoolRecipe recipe_from_options(const Options& o, const std::string& recipe_file,
                                    const std::vector<std::string>& seeds,
                                    const std::vector<std::string>& alphabet) {
  ihg::PoolRecipe r = recipe_file.empty() ? ihg::default_recipe(o.genus)
                                          : ihg::recipe_from_json(read_json_file(recipe_file));
  if (!recipe_file.empty() && r.genus != o.genus) throw UsageError("recipe genus differs from --genus");
  if (!seeds.empty()) r.seeds = seeds;
  if (!alphabet.empty()) r.alphabet = alphabet;
  if (o.max_word_length) r.max_word_length = *o.max_word_length;
  if (o.weight_cap) r.weight_cap = *o.weight_cap;
  r.prng_seed = o.seed;
  return r;
}

int cmd_pool_gen(const Options& o, const std::string& recipe_file, const std::vector<std::string>& seeds,
                 const std::vector<std::string>& alphabet) {
  check_genus(o);
  const ihg::PoolRecipe recipe = recipe_from_options(o, recipe_file, seeds, alphabet);
  const ihg::CurvePool pool = ihg::generate_pool(recipe);
  Json j = envelope(o, "pool gen", Json{{"recipe_file", recipe_file}});
  j["pool"] = ihg::to_json(pool);
  j["count"] = pool.curves.size();
  if (o.format == "text") {
    emit(o, std::to_string(pool.curves.size()) + " curves\n");
  } else {
    emit_json(o, j);
  }
  return kPass;
}

// A pool file is either a bare pool or a report holding one under "pool".
ihg::CurvePool load_pool(const std::string& path) {
  const Json j = read_json_file(path);
  return ihg::pool_from_json(j.contains("pool") ? j.at("pool") : j);
}

int cmd_complex_build(const Options& o, const std::string& pool_file, bool no_pants) {
  if (pool_file.empty()) throw UsageError("complex build needs --pool");
  const ihg::CurvePool pool = load_pool(pool_file);
  Options effective = o;
  effective.genus = pool.recipe.genus;
  check_genus(effective);
  const ihg::ComplexGraph graph = ihg::build_graph(pool.curves, !no_pants);
  if (o.format == "dot") {
    emit(o, ihg::to_dot(graph));
    return kPass;
  }
  Json j = envelope(effective, "complex build", Json{{"pool", pool_file}, {"pants", !no_pants}});
  j["graph"] = ihg::to_json(graph);
  if (o.format == "text") {
    emit(o, std::to_string(graph.size()) + " vertices, " + std::to_string(graph.edges.size()) + " edges\n");
  } else {
    emit_json(o, j);
  }
  return kPass;
}

// Graph files hold complex graphs, or abstract fixtures whose "vertices" is a count.
ihg::Adjacency load_adjacency(const std::string& path) {
  Json j = read_json_file(path);
  if (j.contains("graph")) j = j.at("graph");
  if (!j.contains("vertices")) throw ihg::InvalidInput("graph file without vertices");
  if (j.at("vertices").is_number_integer()) {
    std::vector<std::pair<int, int>> edges;
    for (const Json& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ihg::InvalidInput("edge must be a pair of indices");
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    const int n = j.at("vertices").get<int>();
    if (n < 1) throw ihg::InvalidInput("fixture needs at least one vertex");
    return ihg::adjacency_from_edges(n, edges);
  }
  return ihg::graph_from_json(j).neighbors;
}

void check_vertex(const ihg::Adjacency& g, int v) {
  if (v < 0 || v >= static_cast<int>(g.size())) {
    throw ihg::InvalidInput("vertex index " + std::to_string(v) + " out of range");
  }
}

int cmd_metric(const Options& o, const std::string& op, const std::string& graph_file,
               const std::vector<int>& args, int radius) {
  if (graph_file.empty()) throw UsageError("metric needs --graph");
  const ihg::Adjacency g = load_adjacency(graph_file);
  Json inputs{{"graph", graph_file}, {"vertices", args}};
  if (op == "ball") inputs["radius"] = radius;
  Json j = envelope(o, "metric " + op, inputs);
  j["config"].erase("genus");
  std::ostringstream t;
  if (op == "dist") {
    if (args.size() != 2) throw UsageError("dist takes two vertex indices");
    check_vertex(g, args[0]);
    check_vertex(g, args[1]);
    const int d = ihg::bfs_distances(g, args[0])[args[1]];
    j["distance"] = d < 0 ? Json() : Json(d);
    j["upper_bound"] = true;
    t << (d < 0 ? "unreachable" : std::to_string(d)) << "\n";
  } else if (op == "delta") {
    const long quadruples = o.samples.value_or(200000);
    if (quadruples < 1) throw UsageError("--samples must be positive");
    const ihg::DeltaReport r = ihg::delta_estimate(g, quadruples, o.seed);
    j["delta"] = r.value();
    j["twice_delta"] = r.twice_delta;
    j["quadruples"] = r.quadruples;
    j["exhaustive"] = r.exhaustive;
    j["component_size"] = r.component_size;
    t << r.value() << "\n";
  } else if (op == "ball") {
    if (args.size() != 1) throw UsageError("ball takes one center index");
    if (radius < 0) throw UsageError("--radius must be non-negative");
    check_vertex(g, args[0]);
    const auto dist = ihg::bfs_distances(g, args[0]);
    Json members = Json::array();
    for (int v = 0; v < static_cast<int>(g.size()); ++v) {
      if (dist[v] >= 0 && dist[v] <= radius) members.push_back({{"vertex", v}, {"distance", dist[v]}});
    }
    j["size"] = members.size();
    j["members"] = members;
    t << members.size() << " vertices\n";
  } else {
    throw UsageError("unknown metric operation '" + op + "'");
  }
  if (o.format == "text") {
    emit(o, t.str());
  } else {
    emit_json(o, j);
  }
  return kPass;
}

void add_common(CLI::App* app, Options& o) {
  app->add_option("--genus,-g", o.genus, "Genus of the surface");
  app->add_option("--seed", o.seed, "PRNG seed");
  app->add_option("--max-word-len", o.max_word_length, "Twist word length bound for pools");
  app->add_option("--weight-cap", o.weight_cap, "Largest edge weight kept in pools");
  app->add_option("--samples", o.samples, "Sample count (suite default when omitted)");
  app->add_option("--out,-o", o.out, "Write the report here instead of stdout");
  app->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "dot", "text"}));
  app->add_flag("--allow-large-genus", o.allow_large_genus, "Permit genus above 5");
  app->add_flag("--timing", o.timing, "Include wall-clock seconds in verify reports");
  app->add_flag("--verbose,-v", o.verbose, "Progress on stderr");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Incompressible-surface complex toolkit"};
  app.name("ihg");
  app.set_version_flag("--version", ihg::kToolVersion);
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto* surface = app.add_subcommand("surface", "Triangulated surface data");
  surface->require_subcommand(1);
  auto* surface_info = surface->add_subcommand("info", "Counts, Euler characteristic and edge table");
  add_common(surface_info, o);
  surface_info->callback([&] { action = [&] { return cmd_surface_info(o); }; });

  auto* curve = app.add_subcommand("curve", "Curve queries");
  curve->require_subcommand(1);
  std::vector<std::string> specs;
  std::string about;
  int power = 1;
  for (const char* op : {"classify", "intersect", "twist", "word"}) {
    auto* sub = curve->add_subcommand(op, std::string("curve ") + op);
    add_common(sub, o);
    sub->add_option("curves", specs, "Curve specs: label, coordinate JSON, or word@spec")->required();
    if (std::string(op) == "twist") {
      sub->add_option("--about", about, "Twist curve spec")->required();
      sub->add_option("--power", power, "Twist power");
    }
    const std::string name = op;
    sub->callback([&, name] { action = [&, name] { return cmd_curve(o, name, specs, about, power); }; });
  }

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  add_common(verify, o);
  std::string check;
  verify->add_option("check", check, "all or one of: dims links clique kernel projection cobounded cone star r5 involution delta")
      ->required();
  verify->callback([&] { action = [&] { return cmd_verify(o, check); }; });

  auto* pool = app.add_subcommand("pool", "Curve pools");
  pool->require_subcommand(1);
  auto* pool_gen = pool->add_subcommand("gen", "Generate a curve pool");
  add_common(pool_gen, o);
  std::string recipe_file;
  std::vector<std::string> seeds, alphabet;
  pool_gen->add_option("--recipe", recipe_file, "Recipe JSON file");
  pool_gen->add_option("--seeds", seeds, "Seed curve labels");
  pool_gen->add_option("--alphabet", alphabet, "Twist curve labels");
  pool_gen->callback([&] { action = [&] { return cmd_pool_gen(o, recipe_file, seeds, alphabet); }; });

  auto* complex = app.add_subcommand("complex", "Complex graphs");
  complex->require_subcommand(1);
  auto* complex_build = complex->add_subcommand("build", "Graph on a pool's curve and pants vertices");
  add_common(complex_build, o);
  std::string pool_file;
  bool no_pants = false;
  complex_build->add_option("--pool", pool_file, "Pool JSON file")->required();
  complex_build->add_flag("--no-pants", no_pants, "Curve vertices only");
  complex_build->callback([&] { action = [&] { return cmd_complex_build(o, pool_file, no_pants); }; });

  auto* metric = app.add_subcommand("metric", "Graph distances and hyperbolicity");
  metric->require_subcommand(1);
  std::string graph_file;
  std::vector<int> vertex_args;
  int radius = 1;
  for (const char* op : {"dist", "delta", "ball"}) {
    auto* sub = metric->add_subcommand(op, std::string("metric ") + op);
    add_common(sub, o);
    sub->add_option("--graph", graph_file, "Graph JSON file")->required();
    if (std::string(op) != "delta") sub->add_option("vertices", vertex_args, "Vertex indices")->required();
    if (std::string(op) == "ball") sub->add_option("--radius", radius, "Ball radius");
    const std::string name = op;
    sub->callback([&, name] {
      action = [&, name] { return cmd_metric(o, name, graph_file, vertex_args, radius); };
    });
  }

  try {
    // A leading space keeps CLI11 from splitting "[...]" values on commas.
    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) {
      std::string a = argv[i];
      if (a.size() >= 2 && a.front() == '[' && a.back() == ']') a.insert(0, " ");
      args.push_back(std::move(a));
    }
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ihg::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ihg::SearchFailure& e) {
    std::cerr << "verdict failed: " << e.what() << "\n";
    return kVerdictFailed;
  } catch (const std::exception& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kVerdictFailed;
  }
}
