#include <doctest.h>

#include <random>
#include <set>

#include "ends/ball.hpp"
#include "ends/group.hpp"
#include "ends/groupspec.hpp"
#include "oracles.hpp"

using namespace ends;

namespace {

std::vector<GroupPtr> sample_groups() {
  return {free_group(2),
          free_group(1),
          cyclic_group(5),
          symmetric_group(4),
          free_abelian_group(2),
          free_product({cyclic_group(2), cyclic_group(3)}),
          free_product({free_abelian_group(2), free_abelian_group(1)}),
          sum_z2_chain(5),
          symmetric_chain(5)};
}

Word random_word(const Group& g, std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(0, static_cast<int>(g.generators().size()) - 1);
  std::bernoulli_distribution sign(0.5);
  Word w(static_cast<std::size_t>(len(rng)));
  for (auto& x : w) x = (gen(rng) + 1) * (sign(rng) ? 1 : -1);
  return w;
}

}  // namespace

TEST_CASE("reduce examples") {
  auto f2 = free_group(2);
  SUBCASE("free cancellation") {
    const Word w{1, -1, 2};
    CHECK(f2->reduce(w) == f2->reduce(Word{2}));
    CHECK(f2->format(f2->reduce(w)) == "b");
  }
  SUBCASE("empty word is the identity in every kind") {
    for (const auto& g : sample_groups()) CHECK(g->is_identity(g->reduce(Word{})));
  }
  SUBCASE("syllables merge across a cancelled middle") {
    auto g = free_product({cyclic_group(3), cyclic_group(2)});
    const auto& fp = as<FreeProductGroup>(*g);
    // a b b^-1 a with a of order 3: a single syllable a^2 in the first factor.
    const Element e = g->reduce(Word{1, 2, -2, 1});
    const auto syl = fp.syllables(e);
    REQUIRE(syl.size() == 1);
    CHECK(syl[0].factor == 0);
    CHECK(syl[0].element == fp.factor(0).power(fp.factor(0).generators()[0], 2));
  }
  SUBCASE("invalid generator index") {
    CHECK_THROWS_AS(f2->reduce(Word{3}), DomainError);
    CHECK_THROWS_AS(f2->reduce(Word{0}), DomainError);
    auto z2 = free_abelian_group(2);
    CHECK_THROWS_AS(z2->reduce(Word{-3}), DomainError);
  }
}

TEST_CASE("multiply, invert, word length") {
  auto f2 = free_group(2);
  const Element a = f2->parse("a");
  CHECK(f2->is_identity(f2->multiply(a, f2->invert(a))));
  CHECK(f2->format(f2->invert(f2->parse("ab"))) == "b^-1*a^-1");

  auto z = free_abelian_group(1);
  CHECK(z->word_length(z->parse("t^5")) == 5);
  CHECK(z->word_length(z->identity()) == 0);

  SUBCASE("cross-group operands") {
    auto other = free_group(2);
    CHECK_THROWS_AS(f2->multiply(a, other->parse("a")), DomainError);
    CHECK_THROWS_AS(f2->invert(z->parse("t")), DomainError);
  }
}

TEST_CASE("ball sizes against brute-force word enumeration") {
  SUBCASE("F2 radius 2 has 17 elements") {
    Ball b(free_group(2), 2);
    CHECK(b.size() == 17);
    CHECK(oracle::free_ball_size(2, 2) == 17);
    CHECK(b.size() == 2 * 9 - 1);
  }
  SUBCASE("Z^2 radius 2 has 13 elements") {
    Ball b(free_abelian_group(2), 2);
    CHECK(b.size() == 13);
    CHECK(oracle::lattice_ball_size(2, 2) == 13);
  }
  SUBCASE("radius 0 is the identity") {
    for (const auto& g : sample_groups()) {
      Ball b(g, 0);
      REQUIRE(b.size() == 1);
      CHECK(g->is_identity(b[0]));
    }
  }
  SUBCASE("free sphere sizes 2k(2k-1)^(r-1)") {
    for (int k = 1; k <= 3; ++k) {
      Ball b(free_group(k), 5);
      for (int r = 1; r <= 5; ++r) {
        std::size_t expect = 2 * static_cast<std::size_t>(k);
        for (int i = 1; i < r; ++i) expect *= static_cast<std::size_t>(2 * k - 1);
        CHECK(b.sphere(r).size() == expect);
        if (r <= 4) CHECK(oracle::free_ball_size(k, r) - oracle::free_ball_size(k, r - 1) == expect);
      }
    }
  }
  SUBCASE("ball lengths agree with word_length and ball is monotone") {
    for (const auto& g : sample_groups()) {
      Ball small(g, 3);
      Ball big(g, 4);
      for (std::size_t i = 0; i < small.size(); ++i) {
        CHECK(g->word_length(small[i]) == small.length(i));
        CHECK(big.contains(small[i]));
      }
      for (std::size_t i = 0; i < big.size(); ++i) CHECK(g->word_length(big[i]) == big.length(i));
    }
  }
  SUBCASE("resource cap fails loudly") {
    CHECK_THROWS_AS(Ball(free_group(2), 10, 1000), ResourceError);
  }
}

TEST_CASE("group axioms and normal forms on random words") {
  std::mt19937_64 rng(7);
  for (const auto& g : sample_groups()) {
    CAPTURE(g->spec());
    for (int trial = 0; trial < 1000; ++trial) {
      const Word w = random_word(*g, rng, 10);
      const Element e = g->reduce(w);
      // reduce∘reduce = reduce: re-reducing the normal form's word is a no-op.
      CHECK(g->reduce(g->to_word(e)) == e);
      if (trial % 10 == 0) {
        const Element x = g->reduce(random_word(*g, rng, 6));
        const Element y = g->reduce(random_word(*g, rng, 6));
        CHECK(g->multiply(g->multiply(e, x), y) == g->multiply(e, g->multiply(x, y)));
        CHECK(g->is_identity(g->multiply(e, g->invert(e))));
        CHECK(g->word_length(e) == g->word_length(g->invert(e)));
        CHECK(g->parse(g->format(e)) == e);
      }
    }
  }
}

TEST_CASE("free reduction matches an independent reducer") {
  auto f3 = free_group(3);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const Word w = random_word(*f3, rng, 14);
    const Word expected = oracle::free_reduce(w);
    CHECK(as<FreeGroup>(*f3).to_word(f3->reduce(w)) == expected);
  }
}

TEST_CASE("free product normal form invariants") {
  auto g = free_product({cyclic_group(2), cyclic_group(3), free_abelian_group(1)});
  const auto& fp = as<FreeProductGroup>(*g);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Element e = g->reduce(random_word(*g, rng, 12));
    const auto syl = fp.syllables(e);
    for (std::size_t i = 0; i < syl.size(); ++i) {
      CHECK_FALSE(fp.factor(syl[i].factor).is_identity(syl[i].element));
      if (i + 1 < syl.size()) CHECK(syl[i].factor != syl[i + 1].factor);
    }
  }
  CHECK_THROWS_AS(free_product({cyclic_group(1), cyclic_group(2)}), DomainError);
  // Finite factors contribute every non-identity element to the ball list.
  CHECK(free_product({cyclic_group(2), cyclic_group(3)})->ball_generators().size() == 3);
}

TEST_CASE("ascending union levels") {
  auto chain = sum_z2_chain(6);
  const auto& au = as<AscendingUnionGroup>(*chain);
  CHECK(au.level(chain->identity()) == 1);
  CHECK(au.level(chain->parse("e3")) == 3);
  CHECK(au.level(chain->parse("e1*e5")) == 5);
  for (int n = 1; n <= 6; ++n) CHECK(au.level_size(n) == (1ULL << n));

  auto sym = symmetric_chain(6);
  const auto& su = as<AscendingUnionGroup>(*sym);
  CHECK(su.level(sym->parse("(4 5)")) == 5);
  CHECK(su.level(sym->parse("s4")) == 5);
  CHECK(su.level_size(6) == 720);
  CHECK(su.level_size(1) == 1);

  SUBCASE("level(gh) ≤ max(level g, level h)") {
    const auto elems = su.elements();
    for (std::size_t i = 0; i < elems.size(); i += 7) {
      for (std::size_t j = 0; j < elems.size(); j += 5) {
        const Element gh = sym->multiply(elems[i], elems[j]);
        CHECK(su.level(gh) <= std::max(su.level(elems[i]), su.level(elems[j])));
      }
    }
  }
}

TEST_CASE("group spec parsing") {
  CHECK(parse_group_spec("free(2)")->spec() == "free(2)");
  CHECK(parse_group_spec(" free_product( [cyclic(2),cyclic(3)] ) ")->spec() ==
        "free_product([cyclic(2), cyclic(3)])");
  CHECK(parse_group_spec("free_product(cyclic(2), cyclic(2))")->kind() == GroupKind::FreeProduct);
  CHECK(parse_group_spec("ascending_union(sum_z2, 4)")->order() == 16U);
  CHECK(parse_group_spec("ascending_union(sym, 4)")->order() == 24U);
  CHECK(parse_group_spec("sym(3)")->order() == 6U);
  auto explicit_chain = parse_group_spec("ascending_union([[(1 2)], [(3 4)], [(1 3)(2 4)]])");
  CHECK(explicit_chain->order() == 8U);
  CHECK(as<AscendingUnionGroup>(*explicit_chain).level(explicit_chain->parse("g3")) == 3);
  try {
    parse_group_spec("heisenberg(3)");
    FAIL("expected an error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("heisenberg") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_group_spec("free(2"), DomainError);
}
