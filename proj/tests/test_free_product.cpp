#include <doctest.h>

#include "ends/free_product.hpp"
#include "ends/groupspec.hpp"

using namespace ends;

TEST_CASE("last letter type") {
  auto g = parse_group_spec("free_product([cyclic(2), cyclic(3)])");
  CHECK(last_letter_type(*g, g->identity()) == 0);
  CHECK(last_letter_type(*g, g->parse("a*b")) == 2);
  CHECK(last_letter_type(*g, g->parse("a")) == 1);
  CHECK(last_letter_type(*g, g->parse("b*a*b^2*a")) == 1);
  CHECK_THROWS_AS(last_letter_type(*free_group(2), free_group(2)->identity()), DomainError);
}

TEST_CASE("coupme difference sets") {
  auto g = parse_group_spec("free_product([cyclic(2), cyclic(3)])");
  SUBCASE("single syllables move only 1 and g^-1") {
    for (const auto& s : g->ball_generators()) {
      const auto d = coupme_difference_set(g, s, 7);
      for (const auto& h : d) CHECK((g->is_identity(h) || h == g->invert(s)));
      CHECK(!d.empty());
    }
  }
  SUBCASE("identity") { CHECK(coupme_difference_set(g, g->identity(), 6).empty()); }
  SUBCASE("multi-syllable elements stabilize") {
    const Element x = g->parse("a*b*a*b^2");
    const int len = g->word_length(x);
    const auto base = coupme_difference_set(g, x, len + 1).size();
    for (int r = len + 2; r <= 9; ++r) CHECK(coupme_difference_set(g, x, r).size() == base);
  }
  SUBCASE("difference bounded by twice the length, stable from |g|+2") {
    for (const auto& grp : {g, parse_group_spec("free_product([free_abelian(1), cyclic(2)])")}) {
      CAPTURE(grp->spec());
      const Ball b(grp, 3);
      for (const auto& x : b.elements()) {
        const int len = grp->word_length(x);
        const auto full = coupme_difference_set(grp, x, 8).size();
        CHECK(full <= static_cast<std::size_t>(2 * len));
        CHECK(coupme_difference_set(grp, x, len + 2).size() == full);
      }
    }
  }
}

TEST_CASE("H-suffix") {
  auto g = parse_group_spec("free_product([free_abelian(1), cyclic(3)])");  // H = <a>, L = <b>
  const auto& h = as<FreeProductGroup>(*g).factor(0);
  CHECK(h_suffix(*g, g->parse("b*a^2"), 0) == h.parse("t^2"));
  CHECK(h.is_identity(h_suffix(*g, g->parse("a*b"), 0)));
  CHECK(h.is_identity(h_suffix(*g, g->identity(), 0)));

  const Ball ball(g, 5);
  SUBCASE("left-L-invariance") {
    for (const auto& l : {g->parse("b"), g->parse("b^2")}) {
      for (const auto& x : ball.elements()) CHECK(h_suffix(*g, g->multiply(l, x), 0) == h_suffix(*g, x, 0));
    }
  }
  SUBCASE("H acts trivially off H") {
    const Subgroup sub = Subgroup::factor(g, 0);
    for (const auto& y : {g->parse("a"), g->parse("a^-2"), g->parse("a^3")}) {
      for (const auto& x : ball.elements()) {
        if (!sub.contains(x)) CHECK(h_suffix(*g, g->multiply(y, x), 0) == h_suffix(*g, x, 0));
      }
    }
  }
}

TEST_CASE("lifting commensurated subsets of a factor") {
  auto g = parse_group_spec("free_product([free_abelian(1), free_abelian(1)])");
  const auto& fp = as<FreeProductGroup>(*g);
  const GroupPtr h = fp.factors()[0];
  const Subgroup sub = Subgroup::factor(g, 0);
  const Ball ball(g, 6);

  SUBCASE("M = H") {
    const auto lift = lift_commensurated(g, 0, whole_set(h), 5);
    REQUIRE(lift.lifted);
    for (const auto& x : ball.elements()) {
      if (sub.contains(x)) CHECK(lift.lifted->contains(x));
    }
  }
  SUBCASE("M = empty") {
    const auto lift = lift_commensurated(g, 0, empty_set(h), 5);
    REQUIRE(lift.lifted);
    for (const auto& x : ball.elements()) CHECK_FALSE(lift.lifted->contains(x));
  }
  SUBCASE("positive ray: differences match those of M") {
    const auto m = half_space(h, {1}, 1);
    const auto lift = lift_commensurated(g, 0, m, 6);
    CHECK(lift.verdict.status == VerdictStatus::VerifiedExact);
    const auto& mp = *lift.lifted;
    for (const auto& hx : {h->parse("t"), h->parse("t^-1"), h->parse("t^2")}) {
      const Element hg = fp.embed(0, hx);
      // M' ∖ h⁻¹M' against M ∖ h⁻¹M, inside H.
      for (const auto& x : ball.elements()) {
        const bool lhs = mp.contains(x) && !mp.contains(g->multiply(hg, x));
        bool rhs = false;
        if (sub.contains(x)) {
          const Element y = h_suffix(*g, x, 0);
          rhs = m->contains(y) && !m->contains(h->multiply(hx, y));
        }
        CHECK(lhs == rhs);
      }
    }
    // M' ∩ H = M and M' is left-L-invariant.
    for (const auto& x : ball.elements()) {
      if (sub.contains(x)) CHECK(mp.contains(x) == m->contains(h_suffix(*g, x, 0)));
    }
    for (const auto& l : Subgroup::factor(g, 1).generators()) {
      CHECK(translate_difference(mp, l, 6).empty());
    }
    CHECK(is_left_commensurated_up_to(mp, 6).status == VerdictStatus::VerifiedExact);
  }
  SUBCASE("a refuted M is not lifted") {
    auto z2 = parse_group_spec("free_product([free_abelian(2), cyclic(2)])");
    const GroupPtr hz2 = as<FreeProductGroup>(*z2).factors()[0];
    const auto lift = lift_commensurated(z2, 0, half_space(hz2, {1, 0}, 0), 5);
    CHECK(lift.verdict.status == VerdictStatus::Refuted);
    CHECK(lift.lifted == nullptr);
  }
  SUBCASE("quotient classes lift when the edit avoids 1") {
    const auto m1 = half_space(h, {1}, 1);
    const auto m2 = edited(m1, {h->parse("t^-3")}, {h->parse("t^2")});
    REQUIRE(quotient_eq(*m1, *m2, 5).status == VerdictStatus::VerifiedExact);
    const auto l1 = lift_commensurated(g, 0, m1, 5).lifted;
    const auto l2 = lift_commensurated(g, 0, m2, 5).lifted;
    CHECK(quotient_eq(*l1, *l2, 6).status == VerdictStatus::VerifiedExact);
    // Toggling 1_H changes M' on the whole fibre of suf_H over 1.
    const auto m3 = edited(m1, {h->identity()}, {});
    REQUIRE(quotient_eq(*m1, *m3, 5).status == VerdictStatus::VerifiedExact);
    const auto l3 = lift_commensurated(g, 0, m3, 5).lifted;
    CHECK(quotient_eq(*l1, *l3, 6).status == VerdictStatus::Refuted);
  }
}
