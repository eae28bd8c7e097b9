#include "ihg/suites.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <map>
#include <mutex>
#include <optional>
#include <random>

#include "ihg/error.hpp"
#include "ihg/parallel.hpp"
#include "ihg/search.hpp"

namespace ihg {

namespace {

int samples_or(const SuiteConfig& config, int fallback) {
  const int n = config.samples.value_or(fallback);
  if (n < 1) throw InvalidInput("sample count must be positive");
  return n;
}

// First k indices of a seeded shuffle of [0, n), in increasing order.
std::vector<int> sample_indices(int n, int k, std::uint64_t seed) {
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  if (k < n) {
    std::mt19937_64 rng(seed);
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
  }
  return idx;
}

Json curves_json(const std::vector<CurveClass>& curves) {
  Json out = Json::array();
  for (const CurveClass& c : curves) out.push_back(to_json(c));
  return out;
}

Json vertices_json(const std::vector<Vertex>& vertices) {
  Json out = Json::array();
  for (const Vertex& v : vertices) out.push_back(to_json(v));
  return out;
}

Json simplex_json(const SimplexReport& r) {
  return Json{{"vertices", r.vertices.size()},
              {"disks", r.disks},
              {"annuli", r.annuli},
              {"pants", r.pants},
              {"simplex", r.verdict},
              {"diagnostic", r.diagnostic},
              {"members", vertices_json(r.vertices)}};
}

bool is_complete(const ComplexGraph& g) {
  const long n = g.size();
  return static_cast<long>(g.edges.size()) == n * (n - 1) / 2;
}

Json graph_summary(const ComplexGraph& g) {
  int disks = 0, annuli = 0, pants = 0;
  for (const Vertex& v : g.vertices) {
    disks += v.kind == VertexKind::Disk;
    annuli += v.kind == VertexKind::Annulus;
    pants += v.kind == VertexKind::Pants;
  }
  return Json{{"vertices", g.size()},
              {"curve_vertices", disks + annuli},
              {"disks", disks},
              {"annuli", annuli},
              {"pants", pants},
              {"edges", g.edges.size()}};
}

void require_genus2(const SuiteConfig& config, const char* check) {
  if (config.genus != 2) throw InvalidInput(std::string(check) + " runs at genus 2 only");
}

const R5Witness& cached_r5() {
  static std::once_flag once;
  static std::optional<R5Witness> witness;
  std::call_once(once, [] { witness = r5_witness(cached_pool(r5_recipe()).curves); });
  return *witness;
}

Json r5_json(const R5Witness& w) {
  return Json{{"alpha", curve_report(w.alpha)},
              {"beta", curve_report(w.beta)},
              {"gamma", curve_report(w.gamma)},
              {"gamma_source", w.gamma_source},
              {"first", to_json(w.first)},
              {"second", to_json(w.second)},
              {"annotation", w.annotation}};
}

// ---------------------------------------------------------------------------

SuiteResult suite_dims(const SuiteConfig& config) {
  const int g = config.genus;
  std::vector<CurveClass> decomposition;
  std::string source;
  if (g == 2) {
    const R5Witness& w = cached_r5();
    decomposition = {w.alpha, w.beta, w.gamma};
    source = "r5 witness curves";
  } else {
    decomposition = reference_curves(g).fig1();
    source = "fig1";
  }
  const SimplexReport r = verify_max_simplex(g, decomposition);
  const int expected = 5 * g - 5;
  SuiteResult out{"dims", r.verdict && static_cast<int>(r.vertices.size()) == expected, {}};
  out.details = Json{{"decomposition_source", source},
                     {"decomposition", curves_json(decomposition)},
                     {"expected_vertices", expected},
                     {"expected_annuli", 3 * g - 3},
                     {"expected_pants", 2 * g - 2}};
  out.details["simplex"] = simplex_json(r);
  return out;
}

SuiteResult suite_links(const SuiteConfig& config) {
  const int g = config.genus;
  const auto& refs = reference_curves(g);
  const MeridianLinkReport r = verify_meridian_link(g, refs.fig2());

  // Link of the disk inside the meridian simplex.
  const Vertex& disk = r.simplex.vertices.front();
  const ComplexGraph disk_link = link_in_pool(disk, r.simplex.vertices);
  const int disk_clique = max_clique(disk_link);

  // Link of an annulus inside the fig1 maximal simplex.
  const SimplexReport full = verify_max_simplex(g, refs.fig1());
  const Vertex& annulus = full.vertices.front();
  const ComplexGraph annulus_link = link_in_pool(annulus, full.vertices);

  const bool disk_ok = disk_link.size() == 5 * g - 8 && is_complete(disk_link) && disk_clique == 5 * g - 8;
  const bool annulus_ok = annulus_link.size() == 5 * g - 6 && is_complete(annulus_link);
  SuiteResult out{"links", r.verdict && r.compressible_pants == 2 && disk_ok && annulus_ok, {}};
  out.details = Json{{"decomposition_source", "fig2"},
                     {"decomposition", curves_json(refs.fig2())},
                     {"expected_vertices", r.expected_vertices},
                     {"compressible_pants", r.compressible_pants},
                     {"simplex", simplex_json(r.simplex)},
                     {"disk_link", {{"vertices", disk_link.size()},
                                    {"complete", is_complete(disk_link)},
                                    {"max_clique", disk_clique},
                                    {"expected_vertices", 5 * g - 8}}},
                     {"annulus_link", {{"vertices", annulus_link.size()},
                                       {"complete", is_complete(annulus_link)},
                                       {"expected_vertices", 5 * g - 6}}}};
  return out;
}

SuiteResult suite_clique(const SuiteConfig& config) {
  const int g = config.genus;
  const PoolRecipe recipe = suite_recipe(config);
  const ComplexGraph& graph = cached_graph(recipe, true);
  const std::vector<int> members = maximum_clique(graph);
  const Json summary = graph_summary(graph);
  const int bound = 5 * g - 5;
  const int curve_vertices = summary["curve_vertices"].get<int>();
  SuiteResult out{"clique",
                  static_cast<int>(members.size()) == bound && curve_vertices >= 60, {}};
  std::vector<Vertex> clique;
  for (int i : members) clique.push_back(graph.vertices[i]);
  out.details = Json{{"recipe", to_json(recipe)},
                     {"graph", summary},
                     {"bound", bound},
                     {"max_clique", members.size()},
                     {"minimum_curve_vertices", 60},
                     {"clique_members", vertices_json(clique)}};
  return out;
}

SuiteResult suite_kernel(const SuiteConfig& config) {
  const int g = config.genus;
  const auto chain = reference_curves(g).chain();

  // Twist-intersection identity on every ordered pair of distinct chain curves.
  struct FlpCase {
    int alpha, beta, power;
  };
  std::vector<FlpCase> cases;
  for (int a = 0; a < static_cast<int>(chain.size()); ++a) {
    for (int b = 0; b < static_cast<int>(chain.size()); ++b) {
      if (a == b) continue;
      for (int n = -3; n <= 3; ++n) cases.push_back({a, b, n});
    }
  }
  std::vector<char> flp_ok(cases.size());
  parallel_for(cases.size(), [&](std::size_t k) {
    const auto& [a, b, n] = cases[k];
    const Weight i_ab = intersection_number(chain[a], chain[b]);
    const CurveClass image = dehn_twist(chain[a], chain[b], n);
    flp_ok[k] = intersection_number(image, chain[a]) == std::abs(n) * i_ab * i_ab;
  });
  Json flp_failures = Json::array();
  for (std::size_t k = 0; k < cases.size(); ++k) {
    if (!flp_ok[k]) {
      flp_failures.push_back({{"alpha", "c" + std::to_string(cases[k].alpha + 1)},
                              {"beta", "c" + std::to_string(cases[k].beta + 1)},
                              {"power", cases[k].power}});
    }
  }

  // Homology formula, inverse twist and abelianization on random pool pairs.
  const int pairs = samples_or(config, 100);
  const CurvePool& pool = cached_pool(suite_recipe(config));
  if (pool.curves.size() < 2) throw InvalidInput("pool too small for pair sampling");
  std::mt19937_64 rng(config.seed);
  struct PairCase {
    int alpha, beta, power;
  };
  std::vector<PairCase> picks;
  const int powers[] = {-2, -1, 1, 2};
  while (static_cast<int>(picks.size()) < pairs) {
    const int a = static_cast<int>(rng() % pool.curves.size());
    const int b = static_cast<int>(rng() % pool.curves.size());
    const int n = powers[rng() % 4];
    if (a != b) picks.push_back({a, b, n});
  }
  auto abelianization_ok = [g](const CurveClass& c) {
    return normalize_sign(exponent_sums(c.pi1_word().letters, 2 * g)) == c.homology();
  };
  std::vector<char> homology_ok(picks.size()), inverse_ok(picks.size()), abel_ok(picks.size());
  parallel_for(picks.size(), [&](std::size_t k) {
    const CurveClass& alpha = pool.curves[picks[k].alpha];
    const CurveClass& beta = pool.curves[picks[k].beta];
    const int n = picks[k].power;
    const CurveClass image = dehn_twist(alpha, beta, n);
    HomologyClass expected = alpha.homology();
    const long pairing = symplectic(alpha.homology(), beta.homology());
    for (std::size_t i = 0; i < expected.size(); ++i) expected[i] += n * pairing * beta.homology()[i];
    homology_ok[k] = normalize_sign(expected) == image.homology();
    inverse_ok[k] = dehn_twist(image, beta, -n) == alpha;
    abel_ok[k] = abelianization_ok(alpha) && abelianization_ok(beta) && abelianization_ok(image);
  });
  Json pair_failures = Json::array();
  for (std::size_t k = 0; k < picks.size(); ++k) {
    if (homology_ok[k] && inverse_ok[k] && abel_ok[k]) continue;
    pair_failures.push_back({{"alpha", to_json(pool.curves[picks[k].alpha])},
                             {"beta", to_json(pool.curves[picks[k].beta])},
                             {"power", picks[k].power},
                             {"homology", static_cast<bool>(homology_ok[k])},
                             {"inverse", static_cast<bool>(inverse_ok[k])},
                             {"abelianization", static_cast<bool>(abel_ok[k])}});
  }
  auto count = [](const std::vector<char>& v) { return std::count(v.begin(), v.end(), 1); };
  SuiteResult out{"kernel", flp_failures.empty() && pair_failures.empty(), {}};
  out.details = Json{{"twist_intersection", {{"cases", cases.size()},
                                             {"passed", count(flp_ok)},
                                             {"failures", flp_failures}}},
                     {"pool_pairs", {{"pairs", picks.size()},
                                     {"homology_formula", count(homology_ok)},
                                     {"inverse_twist", count(inverse_ok)},
                                     {"abelianization", count(abel_ok)},
                                     {"failures", pair_failures}}},
                     {"pool_curves", pool.curves.size()}};
  return out;
}

SuiteResult suite_projection(const SuiteConfig& config) {
  const ComplexGraph& graph = cached_graph(suite_recipe(config), true);
  const int count = samples_or(config, 100);
  const int length = 6;
  const auto paths = sample_paths(graph, count, length, config.seed);
  int valid = 0, through_pants = 0;
  long original_steps = 0, projected_steps = 0;
  Json failures = Json::array();
  for (const auto& idx : paths) {
    std::vector<Vertex> path;
    for (int i : idx) path.push_back(graph.vertices[i]);
    through_pants += std::any_of(path.begin(), path.end(),
                                 [](const Vertex& v) { return v.kind == VertexKind::Pants; });
    const std::vector<Vertex> projected = project_path(path);
    const bool ok = is_curve_path(projected) && projected.front() == path.front() &&
                    projected.back() == path.back() && projected.size() <= path.size();
    original_steps += static_cast<long>(path.size()) - 1;
    projected_steps += static_cast<long>(projected.size()) - 1;
    if (ok) {
      ++valid;
    } else if (failures.size() < 5) {
      failures.push_back(idx);
    }
  }
  const bool enough = static_cast<int>(paths.size()) >= count;
  SuiteResult out{"projection", enough && valid == static_cast<int>(paths.size()), {}};
  out.details = Json{{"graph", graph_summary(graph)},
                     {"paths_requested", count},
                     {"paths", paths.size()},
                     {"path_length", length},
                     {"paths_through_pants", through_pants},
                     {"valid_projections", valid},
                     {"original_steps", original_steps},
                     {"projected_steps", projected_steps},
                     {"failing_paths", failures}};
  return out;
}

SuiteResult suite_cobounded(const SuiteConfig& config) {
  const ComplexGraph& graph = cached_graph(suite_recipe(config), true);
  const CoboundedReport r = cobounded_check(graph);

  // A pants vertex paired with a curve meeting its boundary must be flagged.
  bool control_flagged = false;
  for (const Vertex& p : graph.vertices) {
    if (p.kind != VertexKind::Pants) continue;
    for (const Vertex& q : graph.vertices) {
      if (q.kind == VertexKind::Pants || adjacent(p, q)) continue;
      control_flagged = !cobounded_check(induced_graph({q, p})).violations.empty();
      break;
    }
    break;
  }
  SuiteResult out{"cobounded", r.pants > 0 && r.violations.empty() && r.max_distance == 1 && control_flagged,
                  {}};
  out.details = Json{{"graph", graph_summary(graph)},
                     {"pants_checked", r.pants},
                     {"violations", r.violations},
                     {"max_distance", r.max_distance},
                     {"negative_control_flagged", control_flagged}};
  return out;
}

SuiteResult suite_cone(const SuiteConfig& config) {
  const ComplexGraph& graph = cached_graph(suite_recipe(config), true);
  std::vector<int> pants;
  for (int i = 0; i < graph.size(); ++i) {
    if (graph.vertices[i].kind == VertexKind::Pants) pants.push_back(i);
  }
  const int want = samples_or(config, 20);
  const auto pick = sample_indices(static_cast<int>(pants.size()), want, config.seed);
  std::vector<std::optional<ConeReport>> reports(pick.size());
  parallel_for(pick.size(), [&](std::size_t k) {
    reports[k] = cone_vertex_check(graph.vertices[pants[pick[k]]], graph.vertices);
  });
  Json checked = Json::array();
  int passed = 0;
  for (std::size_t k = 0; k < pick.size(); ++k) {
    const ConeReport& r = *reports[k];
    passed += r.verdict;
    Json item{{"vertex", pants[pick[k]]}, {"link_size", r.link_size}, {"cone", r.verdict}};
    item["apex"] = r.apex ? to_json(*r.apex) : Json();
    checked.push_back(item);
  }
  SuiteResult out{"cone", static_cast<int>(pick.size()) >= want && passed == static_cast<int>(pick.size()),
                  {}};
  out.details = Json{{"graph", graph_summary(graph)},
                     {"samples_requested", want},
                     {"checked", pick.size()},
                     {"passed", passed},
                     {"vertices", checked}};
  return out;
}

SuiteResult suite_star(const SuiteConfig& config) {
  const ComplexGraph& graph = cached_graph(suite_recipe(config), true);
  std::vector<int> disks, annuli;
  for (int i = 0; i < graph.size(); ++i) {
    if (graph.vertices[i].kind == VertexKind::Disk) disks.push_back(i);
    if (graph.vertices[i].kind == VertexKind::Annulus) annuli.push_back(i);
  }
  const int want = samples_or(config, 10);
  // Up to half the sample from disks, the rest from annuli.
  const int from_disks = std::min<int>(disks.size(), (want + 1) / 2);
  std::vector<int> chosen;
  for (int k : sample_indices(static_cast<int>(disks.size()), from_disks, config.seed)) {
    chosen.push_back(disks[k]);
  }
  for (int k : sample_indices(static_cast<int>(annuli.size()), want - from_disks, config.seed + 1)) {
    chosen.push_back(annuli[k]);
  }
  Json checked = Json::array();
  int full = 0;
  for (int v : chosen) {
    const StarReport r = star_property_check(graph.vertices[v], graph.vertices);
    const bool ok = !r.insufficient && r.covered == r.link_size;
    full += ok;
    checked.push_back({{"vertex", v},
                       {"kind", kind_name(graph.vertices[v].kind)},
                       {"link_size", r.link_size},
                       {"covered", r.covered},
                       {"coverage", r.coverage}});
  }
  const Json summary = graph_summary(graph);
  const bool pool_ok = summary["curve_vertices"].get<int>() >= 80;
  SuiteResult out{"star",
                  pool_ok && static_cast<int>(chosen.size()) >= want && full == static_cast<int>(chosen.size()),
                  {}};
  out.details = Json{{"graph", summary},
                     {"minimum_curve_vertices", 80},
                     {"samples_requested", want},
                     {"checked", chosen.size()},
                     {"full_coverage", full},
                     {"vertices", checked}};
  return out;
}

SuiteResult suite_r5(const SuiteConfig& config) {
  require_genus2(config, "r5");
  const R5Witness& w = cached_r5();
  auto square = [](int handle) { return canonical_cyclic({{handle, 1}, {handle, 1}}); };
  const bool words = w.alpha.handlebody_word().letters == square(0) &&
                     w.beta.handlebody_word().letters == square(1);
  const bool distinct = !(w.first == w.second);
  const bool same_boundary = w.first.curves == w.second.curves;
  const bool joined = adjacent(w.first, w.second);
  SuiteResult out{"r5", words && distinct && same_boundary && joined, {}};
  out.details = r5_json(w);
  out.details["checks"] = {{"square_words", words},
                           {"distinct_pants", distinct},
                           {"same_boundary", same_boundary},
                           {"adjacent", joined}};
  out.details["pool_recipe"] = to_json(r5_recipe());
  return out;
}

PoolRecipe involution_recipe(const SuiteConfig& config) {
  PoolRecipe r = default_recipe(2);
  r.max_word_length = config.max_word_length.value_or(4);
  r.weight_cap = config.weight_cap.value_or(8);
  r.prng_seed = config.seed;
  return r;
}

SuiteResult suite_involution(const SuiteConfig& config) {
  require_genus2(config, "involution");
  const PoolRecipe recipe = involution_recipe(config);
  const CurvePool& pool = cached_pool(recipe);
  const int want = samples_or(config, 200);
  const InvolutionReport r = involution_check(pool.curves, cached_r5(), want, config.seed);
  Json candidates = Json::array();
  for (const InvolutionCandidate& c : r.candidates) {
    candidates.push_back({{"name", c.name},
                          {"word", c.word},
                          {"curves_checked", c.curves_checked},
                          {"curves_fixed", c.curves_fixed},
                          {"meridians_preserved", c.meridians_preserved},
                          {"vertices_checked", c.vertices_checked},
                          {"squares_identity", c.squares_identity},
                          {"pants_pair", c.pants_pair},
                          {"passed", c.passed}});
  }
  const bool enough = !r.candidates.empty() && r.candidates.front().curves_checked >= want;
  SuiteResult out{"involution", r.verdict && enough, {}};
  out.details = Json{{"recipe", to_json(recipe)},
                     {"pool_curves", pool.curves.size()},
                     {"samples_requested", want},
                     {"candidates", candidates},
                     {"accepted", r.accepted},
                     {"diagnostic", r.diagnostic}};
  return out;
}

SuiteResult suite_delta(const SuiteConfig& config) {
  // Binary tree on 15 vertices and the 6-cycle.
  std::vector<std::pair<int, int>> tree_edges, cycle_edges;
  for (int v = 1; v < 15; ++v) tree_edges.push_back({(v - 1) / 2, v});
  for (int v = 0; v < 6; ++v) cycle_edges.push_back({v, (v + 1) % 6});
  const DeltaReport tree = delta_estimate(adjacency_from_edges(15, tree_edges), 1L << 20, config.seed);
  const DeltaReport cycle = delta_estimate(adjacency_from_edges(6, cycle_edges), 1L << 20, config.seed);

  const ComplexGraph& graph = cached_graph(suite_recipe(config), true);
  const long quadruples = samples_or(config, 200000);
  const DeltaReport pool = delta_estimate(graph, quadruples, config.seed);
  auto json = [](const DeltaReport& r) {
    return Json{{"delta", r.value()},
                {"twice_delta", r.twice_delta},
                {"quadruples", r.quadruples},
                {"exhaustive", r.exhaustive},
                {"component_size", r.component_size}};
  };
  SuiteResult out{"delta", tree.twice_delta == 0 && tree.exhaustive && cycle.twice_delta == 2 &&
                               cycle.exhaustive && pool.quadruples > 0,
                  {}};
  out.details = Json{{"tree_fixture", json(tree)},
                     {"cycle_fixture", json(cycle)},
                     {"cycle_expected", "1"},
                     {"pool_graph", json(pool)},
                     {"graph", graph_summary(graph)},
                     {"distances_are_upper_bounds", true}};
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"dims",      "links", "clique", "kernel",
                                              "projection", "cobounded", "cone", "star",
                                              "r5",        "involution", "delta"};
  return names;
}

std::string suite_refusal(const std::string& check, int genus) {
  if (check == "all") return {};
  if (std::find(suite_names().begin(), suite_names().end(), check) == suite_names().end()) {
    return "unknown check '" + check + "'";
  }
  if ((check == "r5" || check == "involution") && genus != 2) return check + " runs at genus 2 only";
  if (check == "links" && genus < 3) return "links needs genus at least 3";
  return {};
}

PoolRecipe suite_recipe(const SuiteConfig& config) {
  PoolRecipe r = default_recipe(config.genus);
  if (config.max_word_length) r.max_word_length = *config.max_word_length;
  if (config.weight_cap) r.weight_cap = *config.weight_cap;
  r.prng_seed = config.seed;
  return r;
}

const CurvePool& cached_pool(const PoolRecipe& recipe) {
  static std::mutex mutex;
  static std::map<std::string, std::unique_ptr<CurvePool>> cache;
  const std::string key = to_json(recipe).dump();
  std::lock_guard lock(mutex);
  auto& slot = cache[key];
  if (!slot) slot = std::make_unique<CurvePool>(generate_pool(recipe));
  return *slot;
}

const ComplexGraph& cached_graph(const PoolRecipe& recipe, bool include_pants) {
  static std::mutex mutex;
  static std::map<std::string, std::unique_ptr<ComplexGraph>> cache;
  const std::string key = to_json(recipe).dump() + (include_pants ? "+pants" : "");
  const CurvePool& pool = cached_pool(recipe);
  std::lock_guard lock(mutex);
  auto& slot = cache[key];
  if (!slot) slot = std::make_unique<ComplexGraph>(build_graph(pool.curves, include_pants));
  return *slot;
}

SuiteResult run_suite(const std::string& check, const SuiteConfig& config) {
  if (const std::string why = suite_refusal(check, config.genus); !why.empty()) throw InvalidInput(why);
  if (check == "dims") return suite_dims(config);
  if (check == "links") return suite_links(config);
  if (check == "clique") return suite_clique(config);
  if (check == "kernel") return suite_kernel(config);
  if (check == "projection") return suite_projection(config);
  if (check == "cobounded") return suite_cobounded(config);
  if (check == "cone") return suite_cone(config);
  if (check == "star") return suite_star(config);
  if (check == "r5") return suite_r5(config);
  if (check == "involution") return suite_involution(config);
  if (check == "delta") return suite_delta(config);
  throw InvalidInput("use run_all_suites for 'all'");
}

std::vector<SuiteResult> run_all_suites(const SuiteConfig& config) {
  std::vector<SuiteResult> out;
  for (const std::string& name : suite_names()) {
    if (suite_refusal(name, config.genus).empty()) out.push_back(run_suite(name, config));
  }
  return out;
}

}  // namespace ihg
