#include <cstdlib>
#include <random>

#include "doctest.h"
#include "ihg/error.hpp"
#include "ihg/kernel.hpp"
#include "ihg/pool.hpp"
#include "ihg/search.hpp"
#include "oracles.hpp"

using namespace ihg;

TEST_SUITE("intersection") {
  TEST_CASE("generator and chain values") {
    const auto& refs = reference_curves(2);
    CHECK(intersection_number(refs.at("a1"), refs.at("b1")) == 1);
    CHECK(intersection_number(refs.at("a1"), refs.at("b2")) == 0);
    CHECK(intersection_number(refs.at("c1"), refs.at("c2")) == 1);
    CHECK(intersection_number(refs.at("c1"), refs.at("c1")) == 0);
  }

  TEST_CASE("chain intersection pattern") {
    for (int g = 2; g <= 5; ++g) {
      const auto chain = reference_curves(g).chain();
      for (std::size_t i = 0; i < chain.size(); ++i) {
        for (std::size_t j = 0; j < chain.size(); ++j) {
          const Weight want = (i + 1 == j || j + 1 == i) ? 1 : 0;
          CHECK(intersection_number(chain[i], chain[j]) == want);
        }
      }
    }
  }

  TEST_CASE("symmetry, parity and the algebraic lower bound on pool pairs") {
    const CurvePool pool = generate_pool(default_recipe(2));
    std::mt19937_64 rng(7);
    for (int k = 0; k < 300; ++k) {
      const CurveClass& x = pool.curves[rng() % pool.curves.size()];
      const CurveClass& y = pool.curves[rng() % pool.curves.size()];
      const Weight i = intersection_number(x, y);
      CHECK(i == intersection_number(y, x));
      const long alg = oracle::pairing(x.homology(), y.homology());
      CHECK(i >= std::labs(alg));
      CHECK((i - alg) % 2 == 0);
    }
  }

  TEST_CASE("genus mismatch is rejected") {
    CHECK_THROWS_AS(intersection_number(reference_curves(2).at("a1"), reference_curves(3).at("a1")),
                    InvalidInput);
  }
}

TEST_SUITE("twist") {
  TEST_CASE("twist-intersection identity on the first chain pair") {
    const auto& refs = reference_curves(2);
    const CurveClass& c1 = refs.at("c1");
    const CurveClass& c2 = refs.at("c2");
    for (int n = -3; n <= 3; ++n) {
      CHECK(intersection_number(dehn_twist(c1, c2, n), c1) == std::abs(n));
    }
    CHECK(dehn_twist(c1, c2, 0) == c1);
  }

  TEST_CASE("twist about a disjoint curve is trivial") {
    const auto& refs = reference_curves(3);
    CHECK(dehn_twist(refs.at("c1"), refs.at("c3"), 1) == refs.at("c1"));
    CHECK(dehn_twist(refs.at("b1"), refs.at("b1"), 2) == refs.at("b1"));
  }

  TEST_CASE("homology formula, inverse and intersection identity on pool pairs") {
    for (int g : {2, 3}) {
      const CurvePool pool = generate_pool(default_recipe(g));
      std::mt19937_64 rng(11 + g);
      for (int k = 0; k < 60; ++k) {
        const CurveClass& x = pool.curves[rng() % pool.curves.size()];
        const CurveClass& y = pool.curves[rng() % pool.curves.size()];
        const int n = static_cast<int>(rng() % 5) - 2;
        const CurveClass image = dehn_twist(x, y, n);
        std::vector<long> want = x.homology();
        const long p = oracle::pairing(x.homology(), y.homology());
        for (std::size_t i = 0; i < want.size(); ++i) want[i] += n * p * y.homology()[i];
        CHECK(oracle::sign_normalized(want) == image.homology());
        CHECK(dehn_twist(image, y, -n) == x);
        const Weight i_xy = intersection_number(x, y);
        CHECK(intersection_number(image, x) == std::abs(n) * i_xy * i_xy);
      }
    }
  }

  TEST_CASE("twist words act right to left") {
    const auto& refs = reference_curves(2);
    const CurveClass direct = dehn_twist(dehn_twist(refs.at("c1"), refs.at("c2"), 1), refs.at("c3"), -1);
    CHECK(apply_twist_word(parse_twist_word("c3^-1 c2"), refs.at("c1")) == direct);
    CHECK(apply_twist_word({}, refs.at("c1")) == refs.at("c1"));
    CHECK_THROWS_AS(parse_twist_word("c1^x"), InvalidInput);
    CHECK(format_twist_word(parse_twist_word("T_c1 c2^-2")) == "c1 c2^-2");
  }
}

TEST_SUITE("complement") {
  TEST_CASE("euler characteristics add up") {
    for (int g = 3; g <= 4; ++g) {
      const auto comps = complement_components(reference_curves(g).fig1());
      long chi = 0;
      for (const auto& c : comps) chi += c.euler_characteristic();
      CHECK(chi == 2 - 2 * g);
      CHECK(comps.size() == static_cast<std::size_t>(2 * g - 2));
      for (const auto& c : comps) {
        CHECK(c.genus == 0);
        CHECK(c.boundary.size() == 3);
      }
    }
  }

  TEST_CASE("one non-separating curve") {
    const auto comps = complement_components({reference_curves(3).at("a1")});
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].genus == 2);
    CHECK(comps[0].boundary == std::vector<int>{0, 0});
  }

  TEST_CASE("one separating curve") {
    for (const CurveClass& c : generate_pool(default_recipe(3)).curves) {
      if (!c.is_separating()) continue;
      const auto comps = complement_components({c});
      REQUIRE(comps.size() == 2);
      CHECK(comps[0].genus + comps[1].genus == 3);
      CHECK(comps[0].boundary.size() == 1);
      CHECK(comps[1].boundary.size() == 1);
    }
  }

  TEST_CASE("intersecting curves are rejected") {
    const auto& refs = reference_curves(2);
    CHECK_THROWS_AS(complement_components({refs.at("a1"), refs.at("b1")}), InvalidInput);
  }

  TEST_CASE("pants decompositions") {
    const auto& refs = reference_curves(3);
    CHECK(is_pants_decomposition(refs.fig1()));
    CHECK(is_pants_decomposition(refs.fig2()));
    CHECK_FALSE(is_pants_decomposition({refs.at("a1"), refs.at("a2")}));
    for (const CurveClass& c : refs.fig1()) {
      CHECK_FALSE(c.is_meridian());
      CHECK_FALSE(c.is_separating());
    }
    int meridians = 0;
    for (const CurveClass& c : refs.fig2()) meridians += c.is_meridian();
    CHECK(meridians == 1);
    CHECK(refs.fig2().front() == refs.at("b1"));
  }

  TEST_CASE("decomposition search") {
    const auto& refs = reference_curves(3);
    const auto fig1 = refs.fig1();
    const DecompositionResult r = extend_decomposition(fig1.front(), fig1);
    REQUIRE(r.curves);
    CHECK(is_pants_decomposition(*r.curves));
    CHECK_FALSE(extend_decomposition(refs.at("a1"), {refs.at("a1")}).curves);
    CHECK_THROWS_AS(extend_decomposition(refs.at("b1"), fig1), InvalidInput);
    const CurvePool pool = generate_pool(default_recipe(2));
    const DecompositionResult g2 = extend_decomposition(reference_curves(2).at("a1"), pool.curves);
    REQUIRE(g2.curves);
    CHECK(g2.curves->size() == 3);
    CHECK(is_pants_decomposition(*g2.curves));
  }
}
