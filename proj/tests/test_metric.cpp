#include "doctest.h"
#include "ihg/error.hpp"
#include "ihg/suites.hpp"
#include "oracles.hpp"

using namespace ihg;

namespace {

std::vector<std::pair<int, int>> cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v) e.push_back({v, (v + 1) % n});
  return e;
}

}  // namespace

TEST_SUITE("metric") {
  TEST_CASE("pool generation") {
    PoolRecipe r = default_recipe(2);
    r.seeds = {"a1"};
    r.alphabet = {};
    CHECK(generate_pool(r).curves == std::vector<CurveClass>{reference_curves(2).at("a1")});
    PoolRecipe chain = default_recipe(2);
    CHECK(generate_pool(chain).curves.size() > 5);
    CHECK(generate_pool(chain).curves == generate_pool(chain).curves);
    for (const CurveClass& c : generate_pool(chain).curves) {
      CHECK(*std::max_element(c.coords().begin(), c.coords().end()) <= chain.weight_cap);
    }
  }

  TEST_CASE("graph construction") {
    const auto& refs = reference_curves(2);
    const ComplexGraph pair = build_graph({refs.at("a1"), refs.at("b1")}, true);
    CHECK(pair.size() == 2);
    CHECK(pair.edges.empty());
    const ComplexGraph fig1 = build_graph(reference_curves(3).fig1(), true);
    CHECK(fig1.size() == 10);
    CHECK(max_clique(fig1) == 10);
    for (const Vertex& v : build_graph(generate_pool(default_recipe(2)).curves, false).vertices) {
      CHECK(v.kind != VertexKind::Pants);
    }
  }

  TEST_CASE("distances") {
    const ComplexGraph& g = cached_graph(default_recipe(2), true);
    CHECK(bfs_distance(g, 3, 3) == 0);
    const auto [u, v] = g.edges.front();
    CHECK(bfs_distance(g, u, v) == 1);
    const auto& refs = reference_curves(2);
    const ComplexGraph pair = build_graph({refs.at("a1"), refs.at("b1")}, false);
    CHECK_FALSE(bfs_distance(pair, 0, 1));
    CHECK_THROWS_AS(bfs_distance(pair, 0, 7), InvalidInput);
  }

  TEST_CASE("path projection") {
    const ComplexGraph& g = cached_graph(default_recipe(2), true);
    const auto paths = sample_paths(g, 50, 6, 3);
    CHECK(paths.size() == 50);
    for (const auto& idx : paths) {
      std::vector<Vertex> path;
      for (int i : idx) path.push_back(g.vertices[i]);
      const auto projected = project_path(path);
      CHECK(is_curve_path(projected));
      CHECK(projected.size() <= path.size());
      CHECK(projected.front() == path.front());
      CHECK(projected.back() == path.back());
    }
    // A path with no pants is unchanged.
    const auto& refs = reference_curves(2);
    const std::vector<Vertex> plain{classify_curve_vertex(refs.at("a1")), classify_curve_vertex(refs.at("a2"))};
    CHECK(project_path(plain) == plain);
    // Through a pants vertex between two of its boundary curves.
    const Vertex p = pants_vertices(reference_curves(3).fig1()).front();
    const std::vector<Vertex> through{classify_curve_vertex(p.curves[0]), p, classify_curve_vertex(p.curves[2])};
    const auto projected = project_path(through);
    CHECK(projected.size() <= 3);
    CHECK(is_curve_path(projected));
  }

  TEST_CASE("coboundedness") {
    const ComplexGraph& g = cached_graph(default_recipe(2), true);
    const CoboundedReport r = cobounded_check(g);
    CHECK(r.pants > 0);
    CHECK(r.violations.empty());
    CHECK(r.max_distance == 1);
    CHECK(cobounded_check(cached_graph(default_recipe(2), false)).pants == 0);
    // Negative control: a pants vertex with only an intersecting curve vertex.
    const auto& refs = reference_curves(3);
    const Vertex p = pants_vertices(refs.fig1()).front();
    std::optional<Vertex> far;
    for (const CurveClass& c : generate_pool(default_recipe(3)).curves) {
      const Vertex v = classify_curve_vertex(c);
      if (!adjacent(v, p)) {
        far = v;
        break;
      }
    }
    REQUIRE(far);
    CHECK(cobounded_check(induced_graph({*far, p})).violations.size() == 1);
  }

  TEST_CASE("four-point delta against exhaustive search") {
    std::vector<std::pair<int, int>> tree;
    for (int v = 1; v < 12; ++v) tree.push_back({(v - 1) / 3, v});
    const DeltaReport t = delta_estimate(adjacency_from_edges(12, tree), 1'000'000, 0);
    CHECK(t.twice_delta == 0);
    CHECK(t.twice_delta == oracle::exhaustive_twice_delta(12, tree));
    CHECK(t.value() == "0");
    for (int n : {4, 5, 6, 7, 8}) {
      const DeltaReport c = delta_estimate(adjacency_from_edges(n, cycle(n)), 1'000'000, 0);
      CHECK(c.exhaustive);
      CHECK(c.twice_delta == oracle::exhaustive_twice_delta(n, cycle(n)));
    }
    CHECK(delta_estimate(adjacency_from_edges(6, cycle(6)), 1'000'000, 0).value() == "1");
    CHECK_THROWS_AS(delta_estimate(adjacency_from_edges(3, cycle(3)), 100, 0), InvalidInput);
    const DeltaReport pool = delta_estimate(cached_graph(default_recipe(2), true), 5000, 1);
    CHECK_FALSE(pool.exhaustive);
    CHECK(pool.quadruples == 5000);
  }

  TEST_CASE("mapping class action on vertices") {
    const auto& refs = reference_curves(2);
    const Vertex disk = classify_curve_vertex(refs.at("b1"));
    CHECK(apply_mapping_class(parse_twist_word("b1"), disk) == disk);
    CHECK(apply_mapping_class({}, disk) == disk);
    const ComplexGraph& g = cached_graph(default_recipe(2), true);
    const TwistWord w = parse_twist_word("b1 b2^-1 b1");
    for (std::size_t k = 0; k < 40; ++k) {
      const auto [u, v] = g.edges[k * 37 % g.edges.size()];
      CHECK(adjacent(apply_mapping_class(w, g.vertices[u]), apply_mapping_class(w, g.vertices[v])));
    }
    const HomologyClass h = act_on_homology(parse_twist_word("a1"), 2, refs.at("b1").homology());
    CHECK(oracle::sign_normalized(h) == dehn_twist(refs.at("b1"), refs.at("a1"), 1).homology());
  }

  TEST_CASE("r5 witness") {
    const R5Witness w = r5_witness(cached_pool(r5_recipe()).curves);
    const std::vector<Pi1Letter> x1 = canonical_cyclic({{0, 1}, {0, 1}});
    const std::vector<Pi1Letter> x2 = canonical_cyclic({{1, 1}, {1, 1}});
    CHECK(w.alpha.handlebody_word().letters == x1);
    CHECK(w.beta.handlebody_word().letters == x2);
    CHECK(w.first.curves == w.second.curves);
    CHECK(w.first.region != w.second.region);
    CHECK(adjacent(w.first, w.second));
    CHECK(intersection_number(w.alpha, w.gamma) == 0);
    CHECK(intersection_number(w.beta, w.gamma) == 0);
    CHECK_THROWS_AS(r5_witness({reference_curves(2).at("a1")}), SearchFailure);
  }

  TEST_CASE("hyperelliptic candidates") {
    const auto& refs = reference_curves(2);
    const TwistWord iota = parse_twist_word("c1 c2 c3 c4 c5^2 c4 c3 c2 c1");
    for (const CurveClass& c : refs.chain()) CHECK(apply_twist_word(iota, c) == c);
    const R5Witness w = r5_witness(cached_pool(r5_recipe()).curves);
    const InvolutionReport r = involution_check(generate_pool(default_recipe(2)).curves, w, 60, 5);
    CHECK(r.verdict);
    CHECK(r.accepted == "iota1");
    REQUIRE(r.candidates.size() == 2);
    CHECK(r.candidates[0].curves_fixed == r.candidates[0].curves_checked);
    CHECK_THROWS_AS(involution_check(generate_pool(default_recipe(3)).curves, w, 10, 0), InvalidInput);
  }
}
