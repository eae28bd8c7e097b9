#include <optional>

#include "doctest.h"
#include "ihg/error.hpp"
#include "ihg/kernel.hpp"
#include "ihg/pool.hpp"
#include "oracles.hpp"

using namespace ihg;

namespace {

Weights sum(const Weights& x, const Weights& y) {
  Weights s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
  return s;
}

std::vector<long> unit(int genus, int index) {
  std::vector<long> h(2 * genus, 0);
  h[index] = 1;
  return h;
}

}  // namespace

TEST_SUITE("curve") {
  TEST_CASE("reference curves are valid single essential curves") {
    for (int g = 2; g <= 5; ++g) {
      const ReferenceCurveSet& refs = reference_curves(g);
      for (const auto& [label, c] : refs.entries()) {
        CAPTURE(label);
        CHECK(validate(surface_of_genus(g), c.coords()));
        CHECK(is_single_essential_curve(surface_of_genus(g), c.coords()));
        CHECK(c.genus() == g);
      }
      CHECK(refs.chain().size() == static_cast<std::size_t>(2 * g + 1));
    }
    CHECK_THROWS_AS(reference_curves(2).at("zz9"), InvalidInput);
    CHECK(reference_curves(2).at("c_1") == reference_curves(2).at("c1"));
  }

  TEST_CASE("tracing a disjoint pair gives both curves") {
    const auto& refs = reference_curves(2);
    const CurveClass& c1 = refs.at("c1");
    const CurveClass& c3 = refs.at("c3");
    const auto comps = trace(surface_of_genus(2), sum(c1.coords(), c3.coords()));
    REQUIRE(comps.size() == 2);
    std::vector<Weights> got{comps[0].weights, comps[1].weights};
    std::sort(got.begin(), got.end());
    std::vector<Weights> want{c1.coords(), c3.coords()};
    std::sort(want.begin(), want.end());
    CHECK(got == want);
    CHECK(trace(surface_of_genus(2), c1.coords()).size() == 1);
  }

  TEST_CASE("homology of the generators") {
    for (int g = 2; g <= 4; ++g) {
      const auto& refs = reference_curves(g);
      for (int i = 0; i < g; ++i) {
        CHECK(refs.at("a" + std::to_string(i + 1)).homology() == unit(g, 2 * i));
        CHECK(refs.at("b" + std::to_string(i + 1)).homology() == unit(g, 2 * i + 1));
      }
    }
  }

  TEST_CASE("homology agrees with the abelianized word") {
    const CurvePool pool = generate_pool(default_recipe(2));
    for (const CurveClass& c : pool.curves) {
      CHECK(oracle::sign_normalized(oracle::abelianize(c.pi1_word().letters, 2)) == c.homology());
    }
  }

  TEST_CASE("handlebody words against free reduction") {
    const CurvePool pool = generate_pool(default_recipe(3));
    for (const CurveClass& c : pool.curves) {
      const oracle::FreeImage img = oracle::handlebody_image(c.pi1_word().letters, 3);
      CHECK(img.length == c.handlebody_word().letters.size());
      CHECK(c.is_meridian() == (img.length == 0));
    }
  }

  TEST_CASE("meridians and words of the generators") {
    const auto& refs = reference_curves(2);
    CHECK(refs.at("b1").is_meridian());
    CHECK(refs.at("b2").is_meridian());
    CHECK(refs.at("b1").handlebody_word().empty());
    const CurveClass& a1 = refs.at("a1");
    CHECK_FALSE(a1.is_meridian());
    CHECK_FALSE(a1.is_separating());
    REQUIRE(a1.handlebody_word().letters.size() == 1);
    CHECK(a1.handlebody_word().letters[0].generator == 0);
    REQUIRE(a1.pi1_word().letters.size() == 1);
    CHECK(a1.pi1_word().letters[0].generator == 0);
  }

  TEST_CASE("squared twist of b1 has word x1 x1") {
    const auto& refs = reference_curves(2);
    const CurveClass c = dehn_twist(refs.at("b1"), refs.at("a1"), 2);
    const std::vector<Pi1Letter> square = canonical_cyclic({{0, 1}, {0, 1}});
    CHECK(c.handlebody_word().letters == square);
    CHECK(is_proper_power(c.handlebody_word().letters));
    // 2[a1] - [b1] up to sign under the library's twist orientation.
    const std::vector<long> h = c.homology();
    CHECK(std::abs(h[0]) == 2);
    CHECK(std::abs(h[1]) == 1);
    CHECK(h[2] == 0);
    CHECK(h[3] == 0);
  }

  TEST_CASE("separating curve around a1 and b1") {
    const auto& refs = reference_curves(2);
    const std::optional<CurveClass> found = CurveClass::from_coords(2, {0, 0, 2, 2, 0, 0, 0, 2, 2});
    REQUIRE(found->is_separating());
    CHECK(intersection_number(*found, refs.at("a1")) == 0);
    CHECK(intersection_number(*found, refs.at("b1")) == 0);
    CHECK(intersection_number(*found, refs.at("a2")) == 0);
    CHECK(intersection_number(*found, refs.at("c3")) > 0);
    CHECK(found->homology() == std::vector<long>(4, 0));
    const auto comps = complement_components({*found});
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].genus == 1);
    CHECK(comps[1].genus == 1);
    // The word is conjugate to a1 b1 a1^-1 b1^-1, whose image x1 x1^-1 reduces away.
    CHECK(oracle::handlebody_image(found->pi1_word().letters, 2).length == 0);
    CHECK(found->is_meridian());
  }

  TEST_CASE("canonical form identifies vertex-pushed representatives") {
    // Two normal representatives of one class at genus 3.
    const CurveClass x = CurveClass::from_coords(3, {0, 0, 1, 1, 2, 2, 0, 0, 0, 1, 0, 1, 2, 2, 2});
    const CurveClass y = CurveClass::from_coords(3, {2, 2, 1, 1, 0, 0, 2, 2, 2, 1, 0, 1, 0, 0, 0});
    CHECK(x == y);
    CHECK(x.pi1_word() == y.pi1_word());
  }

  TEST_CASE("invalid coordinates are rejected") {
    CHECK_THROWS_AS(CurveClass::from_coords(Weights(9, 0)), InvalidInput);
    CHECK_THROWS_AS(CurveClass::from_coords(Weights(9, 2)), InvalidInput);  // vertex link
    CHECK_THROWS_AS(CurveClass::from_coords(Weights(10, 2)), InvalidInput);
    CHECK_THROWS_AS(CurveClass::from_coords(3, Weights(9, 2)), InvalidInput);
  }
}
