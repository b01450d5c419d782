#include <doctest.h>

#include <random>
#include <set>

#include "charmat/fields.hpp"
#include "oracles.hpp"

using charmat::FieldCtx;
using charmat::FieldElement;
using charmat::PolyFp;

namespace {

// every odd prime power in [3, hi]
std::vector<std::pair<uint64_t, uint32_t>> small_fields(uint64_t hi) {
  std::vector<std::pair<uint64_t, uint32_t>> out;
  for (uint64_t q = 3; q <= hi; q += 2) {
    uint64_t p = q;
    for (uint64_t d = 3; d * d <= q; d += 2)
      if (q % d == 0) { p = d; break; }
    uint32_t s = 0;
    uint64_t m = q;
    while (m % p == 0) { m /= p; ++s; }
    if (m == 1) out.emplace_back(p, s);
  }
  return out;
}

}  // namespace

TEST_CASE("irreducible modulus is the lex-least one") {
  CHECK(charmat::find_irreducible(7, 1) == PolyFp{0, 1});
  CHECK(charmat::find_irreducible(3, 2) == PolyFp{1, 0, 1});  // x^2 + 1
  const std::pair<uint64_t, uint32_t> cases[] = {
      {3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}, {11, 2}, {13, 2}};
  for (auto [p, s] : cases) {
    CAPTURE(p);
    CAPTURE(s);
    const PolyFp got = charmat::find_irreducible(p, s);
    CHECK(got == oracles::lex_least_irreducible(p, s));
    CHECK(oracles::naive_irreducible(got, p));
  }
  CHECK_THROWS_AS(charmat::find_irreducible(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(charmat::find_irreducible(7, 0), std::invalid_argument);
}

TEST_CASE("canonical generator is the first generator in rank order") {
  {
    const FieldCtx f7(7, 1);
    CHECK(f7.rank_of(f7.generator()) == 3);
    CHECK(f7.order_check(f7.generator()));
    CHECK_FALSE(f7.order_check(f7.from_int(2)));  // 2^3 = 1 mod 7
    CHECK_FALSE(f7.order_check(f7.one()));
    CHECK(f7.rank_of(f7.next_generator_after(f7.generator())) == 5);
  }
  {
    const FieldCtx f3(3, 1);
    CHECK(f3.rank_of(f3.generator()) == 2);
  }
  for (auto [p, s] : {std::pair<uint64_t, uint32_t>{3, 2},
                      {5, 2}, {3, 3}, {7, 2}, {13, 1}, {3, 4}}) {
    CAPTURE(p);
    CAPTURE(s);
    const FieldCtx ctx(p, s);
    CHECK(ctx.generator() == oracles::brute_generator(ctx));
  }
}

TEST_CASE("extension arithmetic on the worked example") {
  const FieldCtx f9(3, 2);
  // modulus x^2 + 1; the adjoined root sits at rank 1
  const FieldElement x = f9.element_at(1);
  CHECK(f9.to_string(x) == "[0,1]");
  const FieldElement xp1 = f9.add(x, f9.one());
  const FieldElement xp2 = f9.add(x, f9.from_int(2));
  CHECK(f9.mul(xp1, xp2) == f9.one());  // (x+1)(x+2) = x^2+2 = 1 mod x^2+1
  CHECK(f9.mul(x, x) == f9.from_int(-1));
  CHECK(f9.inv(f9.one()) == f9.one());
  CHECK(f9.neg(f9.zero()) == f9.zero());
}

TEST_CASE("rank enumeration round-trips and from_int reduces") {
  for (auto [p, s] : small_fields(130)) {
    const FieldCtx ctx(p, s);
    for (uint64_t r = 0; r < ctx.q(); ++r)
      CHECK(ctx.rank_of(ctx.element_at(r)) == r);
    CHECK(ctx.from_int(static_cast<int64_t>(p)) == ctx.zero());
    CHECK(ctx.from_int(-1) == ctx.neg(ctx.one()));
  }
}

TEST_CASE("field axioms hold on random triples") {
  std::mt19937_64 rng(20240817);
  for (auto [p, s] : {std::pair<uint64_t, uint32_t>{3, 1},
                      {7, 1}, {3, 2}, {5, 2}, {3, 3}, {13, 1}}) {
    const FieldCtx ctx(p, s);
    const uint64_t q = ctx.q();
    for (int it = 0; it < 1000; ++it) {
      const FieldElement a = ctx.element_at(rng() % q);
      const FieldElement b = ctx.element_at(rng() % q);
      const FieldElement c = ctx.element_at(rng() % q);
      CHECK(ctx.add(a, b) == ctx.add(b, a));
      CHECK(ctx.mul(a, b) == ctx.mul(b, a));
      CHECK(ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c)));
      CHECK(ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c)));
      CHECK(ctx.mul(a, ctx.add(b, c)) ==
            ctx.add(ctx.mul(a, b), ctx.mul(a, c)));
      CHECK(ctx.add(a, ctx.neg(a)) == ctx.zero());
      if (!ctx.is_zero(a)) {
        CHECK(ctx.mul(a, ctx.inv(a)) == ctx.one());
        CHECK(ctx.pow(a, q - 1) == ctx.one());
        CHECK(ctx.pow(a, 5) == oracles::naive_pow(ctx, a, 5));
      }
    }
  }
}

TEST_CASE("dlog is the inverse of exponentiation and a homomorphism") {
  std::mt19937_64 rng(77);
  for (auto [p, s] : small_fields(100)) {
    const FieldCtx ctx(p, s);
    const uint64_t d = ctx.q() - 1;
    for (uint64_t e = 0; e < d; ++e) CHECK(ctx.dlog(ctx.pow_g(e)) == e);
    for (int it = 0; it < 50; ++it) {
      const uint64_t e1 = rng() % d, e2 = rng() % d;
      CHECK(ctx.dlog(ctx.mul(ctx.pow_g(e1), ctx.pow_g(e2))) ==
            (e1 + e2) % d);
    }
    CHECK_THROWS_AS(ctx.dlog(ctx.zero()), std::invalid_argument);
    CHECK_THROWS_AS(ctx.inv(ctx.zero()), std::invalid_argument);
  }
}

TEST_CASE("subgroup of k-th powers matches brute enumeration") {
  {
    const FieldCtx f7(7, 1);
    const auto d2 = f7.subgroup_Dk(2);
    REQUIRE(d2.size() == 3);
    CHECK(f7.rank_of(d2[0]) == 1);
    CHECK(f7.rank_of(d2[1]) == 2);
    CHECK(f7.rank_of(d2[2]) == 4);
    const auto d6 = f7.subgroup_Dk(6);
    REQUIRE(d6.size() == 1);
    CHECK(d6[0] == f7.one());
    CHECK_THROWS_AS(f7.subgroup_Dk(4), std::invalid_argument);
  }
  for (auto [p, s] : small_fields(200)) {
    const FieldCtx ctx(p, s);
    const uint64_t qm1 = ctx.q() - 1;
    for (uint64_t k = 1; k <= qm1; ++k) {
      if (qm1 % k != 0) continue;
      const auto dk = ctx.subgroup_Dk(k);
      CHECK(dk.size() == qm1 / k);
      std::set<uint64_t> got;
      for (const auto& e : dk) got.insert(ctx.rank_of(e));
      CHECK(got.size() == dk.size());
      CHECK(got == oracles::brute_kth_power_ranks(ctx, k));
      // -1 lands in D_k exactly when q = 1 (mod 2k)
      const bool has_minus_one =
          got.count(ctx.rank_of(ctx.neg(ctx.one()))) > 0;
      CHECK(has_minus_one == (qm1 % (2 * k) == 0));
    }
  }
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(FieldCtx(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(FieldCtx(9, 1), std::invalid_argument);
  CHECK_THROWS_AS(FieldCtx(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(FieldCtx(3, 20), std::invalid_argument);  // 3^20 > 2^24
  CHECK_THROWS_AS(FieldCtx(5, 4, 600), std::invalid_argument);  // 625 > 600
  CHECK_NOTHROW(FieldCtx(5, 4, 625));
}
