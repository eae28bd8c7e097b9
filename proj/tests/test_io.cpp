#include "doctest.h"
#include "ihg/error.hpp"
#include "ihg/suites.hpp"

using namespace ihg;

TEST_SUITE("io") {
  TEST_CASE("curve round trip") {
    for (const CurveClass& c : reference_curves(3).chain()) {
      CHECK(curve_from_json(to_json(c)) == c);
      CHECK(curve_from_json(Json::parse(to_json(c).dump())) == c);
    }
    CHECK_THROWS_AS(curve_from_json(Json{{"genus", 2}}), InvalidInput);
    CHECK_THROWS_AS(curve_from_json(Json{{"coords", "x"}}), InvalidInput);
    const Json report = curve_report(reference_curves(2).at("b1"));
    CHECK(report["meridian"] == true);
    CHECK(report["vertex"] == "disk");
  }

  TEST_CASE("vertex round trip") {
    for (const Vertex& p : pants_vertices(reference_curves(3).fig1())) {
      CHECK(vertex_from_json(to_json(p)) == p);
    }
    Json bad = to_json(pants_vertices(reference_curves(3).fig1()).front());
    bad["region"] = 100000;
    CHECK_THROWS_AS(vertex_from_json(bad), InvalidInput);
    Json wrong_kind = to_json(classify_curve_vertex(reference_curves(2).at("a1")));
    wrong_kind["kind"] = "disk";
    CHECK_THROWS_AS(vertex_from_json(wrong_kind), InvalidInput);
  }

  TEST_CASE("pool and graph round trip") {
    const CurvePool pool = generate_pool(default_recipe(2));
    const CurvePool back = pool_from_json(Json::parse(to_json(pool).dump()));
    CHECK(back.curves == pool.curves);
    CHECK(to_json(back).dump() == to_json(pool).dump());
    Json dup = to_json(pool);
    dup["curves"].push_back(dup["curves"][0]);
    CHECK_THROWS_AS(pool_from_json(dup), InvalidInput);

    const ComplexGraph& g = cached_graph(default_recipe(2), true);
    const ComplexGraph g2 = graph_from_json(Json::parse(to_json(g).dump()));
    CHECK(g2.vertices == g.vertices);
    CHECK(g2.edges == g.edges);
    Json tampered = to_json(g);
    tampered["edges"].erase(tampered["edges"].begin());
    CHECK_THROWS_AS(graph_from_json(tampered), InvalidInput);
  }

  TEST_CASE("dot export and surface table") {
    const auto& refs = reference_curves(2);
    const std::string dot = to_dot(build_graph({refs.at("a1"), refs.at("a2")}, false));
    CHECK(dot.find("graph complex {") == 0);
    CHECK(dot.find("v0 -- v1") != std::string::npos);
    const Json s = surface_json(surface_of_genus(2));
    CHECK(s["edges"] == 9);
    CHECK(s["triangles"] == 6);
    CHECK(s["euler_characteristic"] == -2);
    CHECK(s["edge_table"].size() == 9);
  }

  TEST_CASE("recipe round trip") {
    const PoolRecipe r = default_recipe(3);
    const PoolRecipe back = recipe_from_json(to_json(r));
    CHECK(back.seeds == r.seeds);
    CHECK(back.alphabet == r.alphabet);
    CHECK(back.max_word_length == r.max_word_length);
    CHECK(back.weight_cap == r.weight_cap);
  }
}
