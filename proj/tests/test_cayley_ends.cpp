#include <doctest.h>

#include "ends/cayley_ends.hpp"
#include "ends/groupspec.hpp"
#include "oracles.hpp"

using namespace ends;

TEST_CASE("complement components match brute-force BFS") {
  SUBCASE("Z, r=1, R=6: two components, both unbounded") {
    auto c = complement_components(free_abelian_group(1), 1, 6);
    CHECK(c.components.size() == 2);
    CHECK(c.touching_outer() == 2);
    CHECK(oracle::lattice_annulus_components(1, 1, 6) == std::pair<std::size_t, std::size_t>{2, 2});
  }
  SUBCASE("Z^2, r=2, R=8: one component") {
    auto c = complement_components(free_abelian_group(2), 2, 8);
    CHECK(c.components.size() == 1);
    CHECK(c.touching_outer() == 1);
    CHECK(oracle::lattice_annulus_components(2, 2, 8) == std::pair<std::size_t, std::size_t>{1, 1});
  }
  SUBCASE("F2, r=1, R=5: twelve components") {
    auto c = complement_components(free_group(2), 1, 5);
    CHECK(c.components.size() == 12);
    CHECK(c.touching_outer() == 12);
    CHECK(oracle::free_annulus_components(2, 1, 5) == std::pair<std::size_t, std::size_t>{12, 12});
  }
  SUBCASE("components partition the annulus") {
    Ball ball(free_product({cyclic_group(2), cyclic_group(3)}), 6);
    auto c = complement_components(ball, 2);
    std::size_t n = 0;
    ElementSet seen;
    for (const auto& comp : c.components) {
      for (const auto& e : comp.elements) {
        CHECK(seen.insert(e).second);
        ++n;
      }
    }
    CHECK(n == ball.size() - ball.within(2).size());
  }
  CHECK_THROWS_AS(complement_components(free_group(2), 3, 3), DomainError);
}

TEST_CASE("F2 component count is 4*3^r") {
  std::size_t expect = 4;
  for (int r = 1; r <= 6; ++r) {
    expect *= 3;
    CHECK(complement_components(free_group(2), r, r + 2).touching_outer() == expect);
    if (r <= 3) CHECK(oracle::free_annulus_components(2, r, r + 2).second == expect);
  }
}

TEST_CASE("end count estimates") {
  CHECK(estimate_end_count(free_abelian_group(1), 8).verdict == EndVerdict::Two);
  CHECK(estimate_end_count(free_group(1), 8).verdict == EndVerdict::Two);
  CHECK(estimate_end_count(free_abelian_group(2), 8).verdict == EndVerdict::One);
  CHECK(estimate_end_count(free_abelian_group(3), 6).verdict == EndVerdict::One);
  CHECK(estimate_end_count(cyclic_group(5), 6).verdict == EndVerdict::Zero);
  CHECK(estimate_end_count(symmetric_group(4), 10).verdict == EndVerdict::Zero);

  auto dihedral = estimate_end_count(parse_group_spec("free_product([cyclic(2), cyclic(2)])"), 9);
  CHECK(dihedral.verdict == EndVerdict::Two);
  for (const auto& row : dihedral.rows) CHECK(row.unbounded == 2);

  auto modular = estimate_end_count(parse_group_spec("free_product([cyclic(2), cyclic(3)])"), 12);
  CHECK(modular.verdict == EndVerdict::Many);
  for (std::size_t i = 1; i < modular.rows.size(); ++i) CHECK(modular.rows[i].unbounded >= modular.rows[i - 1].unbounded);

  auto f2 = estimate_end_count(free_group(2), 6);
  CHECK(f2.verdict == EndVerdict::Many);
  REQUIRE(f2.rows.size() == 4);
  CHECK(f2.rows[0].unbounded == 12);
  CHECK(f2.rows[3].unbounded == 324);

  CHECK_THROWS_AS(estimate_end_count(free_group(2), 2), DomainError);
}

TEST_CASE("separates") {
  auto z = free_abelian_group(1);
  ElementSet origin{z->identity()};
  CHECK(separates(z, origin, z->parse("t^2"), z->parse("t^-2"), 4));
  CHECK_FALSE(separates(z, origin, z->parse("t^2"), z->parse("t^3"), 4));

  auto z2 = free_abelian_group(2);
  ElementSet origin2{z2->identity()};
  Ball b2(z2, 4);
  for (std::size_t i = 1; i < b2.size(); i += 3) {
    for (std::size_t j = i + 1; j < b2.size(); j += 5) CHECK_FALSE(separates(b2, origin2, b2[i], b2[j]));
  }

  auto f2 = free_group(2);
  ElementSet origin3{f2->identity()};
  CHECK(separates(f2, origin3, f2->parse("a"), f2->parse("b"), 3));

  SUBCASE("symmetric and monotone in F") {
    Ball ball(f2, 5);
    ElementSet small{f2->parse("a")};
    ElementSet big{f2->parse("a"), f2->identity(), f2->parse("b^-1")};
    for (std::size_t i = 1; i < ball.size(); i += 11) {
      for (std::size_t j = 1; j < ball.size(); j += 13) {
        const auto& x = ball[i];
        const auto& y = ball[j];
        if (small.contains(x) || small.contains(y)) continue;
        CHECK(separates(ball, small, x, y) == separates(ball, small, y, x));
        if (!big.contains(x) && !big.contains(y) && separates(ball, small, x, y)) CHECK(separates(ball, big, x, y));
      }
    }
  }
  CHECK_THROWS_AS(separates(z, origin, z->identity(), z->parse("t"), 3), DomainError);
}
