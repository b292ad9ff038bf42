#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gmc/seifert.hpp"

using gmc::SeifertData;

TEST_CASE("handle count doubles orientable genus and negates the rest") {
  CHECK(gmc::handle_count({0, {}, 0}) == 0);
  CHECK(gmc::handle_count({2, {}, 0}) == 4);
  CHECK(gmc::handle_count({-3, {}, 0}) == 3);
}

TEST_CASE("class-S examples") {
  SUBCASE("twisted pair piece with one boundary torus is admitted") {
    CHECK(gmc::validate_class_s({0, {{2, 1}, {2, 1}}, 0}, 1).empty());
  }
  SUBCASE("thickened torus is excluded") {
    auto v = gmc::validate_class_s({0, {}, 0}, 2);
    REQUIRE(v.size() == 1);
    CHECK(v[0].find("thickened torus") != std::string::npos);
  }
  SUBCASE("fibred solid torus is excluded whatever b is") {
    auto v = gmc::validate_class_s({0, {{3, 1}}, 5}, 1);
    REQUIRE(v.size() == 1);
    CHECK(v[0].find("fibred solid torus") != std::string::npos);
    CHECK_FALSE(gmc::validate_class_s({0, {}, 0}, 1).empty());
  }
  SUBCASE("closed pieces are rejected") {
    CHECK_FALSE(gmc::validate_class_s({1, {}, 0}, 0).empty());
  }
}

TEST_CASE("class-S membership is exactly d + r + 2h >= 3 with d >= 1") {
  for (std::int64_t g = -3; g <= 3; ++g)
    for (std::int64_t d = 0; d <= 4; ++d)
      for (std::size_t r = 0; r <= 4; ++r) {
        SeifertData s{g, std::vector<gmc::Fibre>(r, gmc::Fibre{3, 1}), 0};
        const std::int64_t h = g >= 0 ? 2 * g : -g;
        const bool expected = d >= 1 && d + static_cast<std::int64_t>(r) + 2 * h >= 3;
        CAPTURE(g);
        CAPTURE(d);
        CAPTURE(r);
        CHECK(gmc::validate_class_s(s, d).empty() == expected);
      }
}

TEST_CASE("fibre checks") {
  CHECK(gmc::check_fibres({0, {{2, 1}, {3, 1}, {3, 2}}, 0}).empty());
  CHECK(gmc::check_fibres({0, {{3, 3}}, 0}).size() == 1);
  CHECK(gmc::check_fibres({0, {{4, 2}}, 0}).size() == 1);
  CHECK(gmc::check_fibres({0, {{2, 0}}, 0}).size() == 1);
  CHECK(gmc::check_fibres({0, {{3, 1}, {2, 1}}, 0}).size() == 1);
}
