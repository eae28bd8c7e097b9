#include <set>

#include "doctest.h"
#include "ihg/error.hpp"
#include "ihg/normal.hpp"

using namespace ihg;

TEST_SUITE("surface") {
  TEST_CASE("edge and triangle counts") {
    for (int g = 2; g <= 7; ++g) {
      const TriangulatedSurface s = build_surface(g);
      CHECK(s.num_edges() == 6 * g - 3);
      CHECK(s.num_triangles() == 4 * g - 2);
      CHECK(s.euler_characteristic() == 2 - 2 * g);
      CHECK(s.num_corners() == 3 * s.num_triangles());
    }
    CHECK(build_surface(2).num_edges() == 9);
    CHECK(build_surface(3).num_triangles() == 10);
  }

  TEST_CASE("genus below two is rejected") {
    CHECK_THROWS_AS(build_surface(1), InvalidInput);
    CHECK_THROWS_AS(build_surface(0), InvalidInput);
  }

  TEST_CASE("every edge borders exactly two triangle sides") {
    const TriangulatedSurface s = build_surface(3);
    std::vector<int> uses(s.num_edges(), 0);
    for (const Triangle& t : s.triangles()) {
      for (const Side& side : t.sides) ++uses[side.edge];
    }
    for (int u : uses) CHECK(u == 2);
    for (int e = 0; e < s.num_edges(); ++e) {
      const auto& inc = s.incidences(e);
      const SideRef other = s.across(inc[0].triangle, inc[0].side);
      CHECK(other.triangle == inc[1].triangle);
      CHECK(other.side == inc[1].side);
    }
  }

  TEST_CASE("boundary word and side pairing") {
    const PolygonScheme p = PolygonScheme::standard(2);
    REQUIRE(p.boundary_word.size() == 8);
    for (std::size_t k = 0; k < p.side_pairing.size(); ++k) {
      const int j = p.side_pairing[k];
      CHECK(j != static_cast<int>(k));
      CHECK(p.side_pairing[j] == static_cast<int>(k));
      CHECK(p.boundary_word[j].symbol == p.boundary_word[k].symbol);
      CHECK(p.boundary_word[j].handle == p.boundary_word[k].handle);
      CHECK(p.boundary_word[j].sign == -p.boundary_word[k].sign);
    }
  }

  TEST_CASE("rotation visits every corner once") {
    const TriangulatedSurface s = build_surface(4);
    std::set<std::pair<int, int>> seen;
    for (const Corner& c : s.rotation()) seen.insert({c.triangle, c.local});
    CHECK(static_cast<int>(seen.size()) == s.num_corners());
  }
}

TEST_SUITE("normal") {
  TEST_CASE("validate") {
    const TriangulatedSurface& s = surface_of_genus(2);
    CHECK_FALSE(validate(s, Weights(9, 0)));
    CHECK(validate(s, Weights(9, 2)));
    Weights odd(9, 2);
    odd[0] = 1;
    CHECK_FALSE(validate(s, odd));
    CHECK_THROWS_AS(validate(s, Weights(8, 2)), InvalidInput);
  }

  TEST_CASE("vertex link traces to one component") {
    const TriangulatedSurface& s = surface_of_genus(3);
    const Weights link = vertex_link(s);
    CHECK(link == Weights(s.num_edges(), 2));
    const auto comps = trace(s, link);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].weights == link);
  }

  TEST_CASE("corner counts round trip") {
    const TriangulatedSurface& s = surface_of_genus(2);
    const Weights w{1, 2, 1, 2, 3, 4, 2, 1, 1};
    REQUIRE(validate(s, w));
    CHECK(weights_from_corners(s, corner_counts(s, w)) == w);
  }
}
