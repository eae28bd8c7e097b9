#include "doctest.h"
#include "ihg/error.hpp"
#include "ihg/metric.hpp"
#include "ihg/suites.hpp"
#include "oracles.hpp"

using namespace ihg;

namespace {

ComplexGraph complete_fixture(int n) {
  // Annuli over the fig1 curves at genus 4 are pairwise disjoint; take n of
  // the 5g-5 simplex members.
  const SimplexReport r = verify_max_simplex(4, reference_curves(4).fig1());
  std::vector<Vertex> v(r.vertices.begin(), r.vertices.begin() + n);
  return induced_graph(v);
}

}  // namespace

TEST_SUITE("complex") {
  TEST_CASE("curve vertex classification") {
    const auto& refs = reference_curves(2);
    CHECK(classify_curve_vertex(refs.at("b1")).kind == VertexKind::Disk);
    CHECK(classify_curve_vertex(refs.at("a1")).kind == VertexKind::Annulus);
    for (const CurveClass& c : refs.chain()) {
      CHECK((classify_curve_vertex(c).kind == VertexKind::Disk) == c.is_meridian());
    }
  }

  TEST_CASE("adjacency") {
    const auto& refs = reference_curves(2);
    CHECK_FALSE(adjacent(classify_curve_vertex(refs.at("b1")), classify_curve_vertex(refs.at("a1"))));
    CHECK(adjacent(classify_curve_vertex(refs.at("a1")), classify_curve_vertex(refs.at("a2"))));
    CHECK_FALSE(adjacent(classify_curve_vertex(refs.at("a1")), classify_curve_vertex(refs.at("a1"))));
  }

  TEST_CASE("pants of fig1 and fig2 at genus 3") {
    const auto& refs = reference_curves(3);
    CHECK(pants_vertices(refs.fig1()).size() == 4);
    const PantsScan scan = scan_pants(refs.fig2());
    CHECK(scan.compressible.size() == 2);
    CHECK(scan.incompressible.size() == 2);
    for (const Vertex& p : pants_vertices(refs.fig1())) {
      for (const CurveClass& c : p.curves) {
        CHECK(adjacent(classify_curve_vertex(c), p));
      }
    }
  }

  TEST_CASE("maximal simplex counts") {
    for (int g = 3; g <= 5; ++g) {
      const SimplexReport r = verify_max_simplex(g, reference_curves(g).fig1());
      CHECK(r.verdict);
      CHECK(r.vertices.size() == static_cast<std::size_t>(5 * g - 5));
      CHECK(r.annuli == 3 * g - 3);
      CHECK(r.pants == 2 * g - 2);
    }
    CHECK_THROWS_AS(verify_max_simplex(3, reference_curves(3).fig2()), InvalidInput);
  }

  TEST_CASE("meridian link simplex") {
    for (int g = 3; g <= 4; ++g) {
      const MeridianLinkReport r = verify_meridian_link(g, reference_curves(g).fig2());
      CHECK(r.verdict);
      CHECK(r.simplex.vertices.size() == static_cast<std::size_t>(5 * g - 7));
      CHECK(r.simplex.disks == 1);
      CHECK(r.compressible_pants == 2);
    }
    const auto& refs = reference_curves(3);
    auto two = refs.fig2();
    two[1] = refs.at("b2");
    CHECK_THROWS(verify_meridian_link(3, two));
  }

  TEST_CASE("simplex checks") {
    const auto& refs = reference_curves(2);
    CHECK(is_simplex({classify_curve_vertex(refs.at("a1"))}).verdict);
    CHECK_FALSE(is_simplex({classify_curve_vertex(refs.at("c1")), classify_curve_vertex(refs.at("c2"))}).verdict);
  }

  TEST_CASE("links inside a simplex") {
    const SimplexReport full = verify_max_simplex(3, reference_curves(3).fig1());
    const ComplexGraph link = link_in_pool(full.vertices.front(), full.vertices);
    CHECK(link.size() == 9);
    CHECK(link.edges.size() == 36);
    CHECK(link_in_pool(full.vertices.front(), {}).size() == 0);
  }

  TEST_CASE("max clique against exhaustive search") {
    const ComplexGraph k10 = complete_fixture(10);
    CHECK(max_clique(k10) == 10);
    CHECK(max_clique(k10) == oracle::brute_force_clique(k10.size(), k10.edges));
    const ComplexGraph g = cached_graph(default_recipe(2), false);
    std::vector<Vertex> small(g.vertices.begin(), g.vertices.begin() + 18);
    const ComplexGraph sub = induced_graph(small);
    CHECK(max_clique(sub) == oracle::brute_force_clique(sub.size(), sub.edges));
    CHECK_THROWS_AS(max_clique(g, 10), SearchFailure);
  }

  TEST_CASE("cone and star checks") {
    const auto& refs = reference_curves(3);
    const SimplexReport full = verify_max_simplex(3, refs.fig1());
    for (const Vertex& p : pants_vertices(refs.fig1())) {
      const ConeReport r = cone_vertex_check(p, full.vertices);
      CHECK(r.verdict);
      REQUIRE(r.apex);
      CHECK(std::find(p.curves.begin(), p.curves.end(), r.apex->curves.front()) != p.curves.end());
    }
    const StarReport degenerate = star_property_check(full.vertices.front(), full.vertices);
    CHECK(degenerate.coverage == 0.0);
    CHECK(degenerate.insufficient);

    const auto& g2 = reference_curves(2);
    const ComplexGraph& graph = cached_graph(default_recipe(2), true);
    const StarReport disk = star_property_check(classify_curve_vertex(g2.at("b1")), graph.vertices);
    CHECK(disk.coverage == 1.0);
    const Vertex q = classify_curve_vertex(g2.at("a2"));
    const int qi = graph.find(q);
    REQUIRE(qi >= 0);
    bool witnessed = false;
    for (auto [qq, r] : disk.witnesses) {
      if (qq != qi) continue;
      witnessed = true;
      const Vertex& rv = graph.vertices[r];
      CHECK_FALSE(adjacent(rv, q));
      CHECK(adjacent(rv, classify_curve_vertex(g2.at("b1"))));
    }
    CHECK(witnessed);
  }

  TEST_CASE("graph edges re-evaluate adjacency") {
    const ComplexGraph& graph = cached_graph(default_recipe(2), true);
    for (auto [u, v] : graph.edges) CHECK(adjacent(graph.vertices[u], graph.vertices[v]));
  }
}
