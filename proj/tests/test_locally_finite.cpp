#include <doctest.h>

#include <map>

#include "ends/locally_finite.hpp"

using namespace ends;

TEST_CASE("level function") {
  auto z2 = sum_z2_chain(6);
  auto sym = symmetric_chain(6);
  CHECK(level(*z2, z2->parse("e3")) == 3);
  CHECK(level(*z2, z2->identity()) == 1);
  CHECK(level(*sym, sym->parse("(4 5)")) == 5);
  CHECK(level(*sym, sym->identity()) == 1);
  CHECK_THROWS_AS(level(*free_group(2), free_group(2)->identity()), DomainError);

  SUBCASE("fibres") {
    for (const auto& g : {z2, sym}) {
      const LevelFunction ell(g);
      std::map<int, std::uint64_t> counts;
      for (const auto& x : as<AscendingUnionGroup>(*g).elements()) {
        ++counts[ell(x)];
        CHECK(ell(g->invert(x)) == ell(x));
      }
      for (int n = 1; n <= ell.depth(); ++n) CHECK(counts[n] == ell.fibre_size(n));
    }
  }
  SUBCASE("levels against a membership scan") {
    // Independent scan: the smallest n such that the permutation moves no
    // point beyond n (symmetric chain) or 2n (sum chain).
    const auto& su = as<AscendingUnionGroup>(*sym);
    for (const auto& x : su.elements()) {
      const auto& p = su.permutation(x);
      int n = 1;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] != i) n = std::max(n, static_cast<int>(i) + 1);
      }
      CHECK(su.level(x) == n);
    }
    const auto& zu = as<AscendingUnionGroup>(*z2);
    for (const auto& x : zu.elements()) {
      const auto& p = zu.permutation(x);
      int n = 1;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] != i) n = std::max(n, static_cast<int>(i) / 2 + 1);
      }
      CHECK(zu.level(x) == n);
    }
  }
}

TEST_CASE("bi-invariance of the level function") {
  auto z2 = sum_z2_chain(8);
  auto sym = symmetric_chain(6);
  SUBCASE("e2 in the sum chain, R = 6") {
    const auto v = verify_bi_invariance(z2, z2->parse("e2"), 6);
    CHECK(v.holds);
    CHECK(v.checked > 0);
    CHECK(v.depth == 8);
  }
  SUBCASE("identity") {
    const auto v = verify_bi_invariance(z2, z2->identity());
    CHECK(v.holds);
    CHECK(v.checked == *z2->order() - 2);  // every h of level ≥ 2
  }
  SUBCASE("(1 2) in the symmetric chain, R = 4") {
    const auto v = verify_bi_invariance(sym, sym->parse("(1 2)"), 4);
    CHECK(v.holds);
    CHECK_FALSE(v.witness.has_value());
  }
  SUBCASE("exhaustive on the symmetric chain to S5") {
    const auto v = verify_bi_invariance_exhaustive(symmetric_chain(5));
    CHECK(v.holds);
    // Pairs with ℓ(h) > ℓ(g), counted from the fibre sizes.
    const LevelFunction ell(symmetric_chain(5));
    std::uint64_t pairs = 0;
    for (int a = 1; a <= 5; ++a) {
      for (int b = a + 1; b <= 5; ++b) pairs += ell.fibre_size(a) * ell.fibre_size(b);
    }
    CHECK(v.checked == pairs);
  }
}

TEST_CASE("level sets") {
  auto g = sum_z2_chain(8);
  const LevelFunction ell(g);
  const auto all = as<AscendingUnionGroup>(*g).elements();
  const NatSet even = NatSet::residues(2, {0});
  const NatSet odd = NatSet::residues(2, {1});

  SUBCASE("2N is bi-commensurated") {
    const auto a = levelset(g, even);
    CHECK(is_bicommensurated_up_to(*a, 4).status == VerdictStatus::VerifiedExact);
    for (const auto& x : all) CHECK(a->contains(x) == (ell(x) % 2 == 0));
  }
  SUBCASE("empty") {
    const auto a = levelset(g, NatSet::none());
    for (const auto& x : all) CHECK_FALSE(a->contains(x));
  }
  SUBCASE("disjoint infinite sets embed disjointly") {
    const auto a = levelset(g, even);
    const auto b = levelset(g, odd);
    const auto both = set_intersection({a, b});
    std::size_t na = 0, nb = 0;
    for (const auto& x : all) {
      CHECK_FALSE(both->contains(x));
      na += a->contains(x) ? 1 : 0;
      nb += b->contains(x) ? 1 : 0;
    }
    // Both meet every level of their parity, so they grow without bound.
    CHECK(na == ell.fibre_size(2) + ell.fibre_size(4) + ell.fibre_size(6) + ell.fibre_size(8));
    CHECK(nb == all.size() - na);
  }
  SUBCASE("Boolean homomorphism") {
    const std::vector<NatSet> sets = {even, odd, NatSet::at_least(3), NatSet::finite({1, 4, 5}),
                                      NatSet::residues(3, {0, 2}), NatSet::all()};
    for (const auto& p : sets) {
      for (const auto& q : sets) {
        const auto lp = levelset(g, p);
        const auto lq = levelset(g, q);
        const auto u = levelset(g, p | q);
        const auto n = levelset(g, p & q);
        const auto x = levelset(g, p ^ q);
        const auto c = levelset(g, p.complement());
        for (const auto& y : all) {
          CHECK(u->contains(y) == set_union({lp, lq})->contains(y));
          CHECK(n->contains(y) == set_intersection({lp, lq})->contains(y));
          CHECK(x->contains(y) == set_xor(lp, lq)->contains(y));
          CHECK(c->contains(y) == set_complement(lp)->contains(y));
        }
        CHECK(quotient_eq(*u, *set_union({lp, lq}), 3).status == VerdictStatus::VerifiedExact);
      }
    }
  }
}
