#include <doctest.h>

#include "charmat/characters.hpp"
#include "charmat/cyclotomic.hpp"
#include "charmat/fields.hpp"
#include "oracles.hpp"

using charmat::CharValue;
using charmat::chi_pow;
using charmat::CycInt;
using charmat::FieldCtx;

namespace {

std::vector<std::pair<uint64_t, uint32_t>> fields_up_to(uint64_t hi) {
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

TEST_CASE("quadratic character agrees with the square-set definition") {
  {
    const FieldCtx f7(7, 1);
    CHECK(charmat::phi(f7, f7.from_int(2)) == 1);
    CHECK(charmat::phi(f7, f7.from_int(3)) == -1);
    CHECK(charmat::phi(f7, f7.zero()) == 0);
  }
  for (auto [p, s] : fields_up_to(200)) {
    const FieldCtx ctx(p, s);
    const auto sq = oracles::square_table(ctx);
    for (uint64_t r = 0; r < ctx.q(); ++r) {
      const auto x = ctx.element_at(r);
      CHECK(charmat::phi(ctx, x) == oracles::phi_brute(ctx, sq, x));
    }
    // Euler criterion at -1, both congruence classes
    const int expect = ctx.q() % 4 == 1 ? 1 : -1;
    CHECK(charmat::phi(ctx, ctx.neg(ctx.one())) == expect);
  }
}

TEST_CASE("quadratic character is multiplicative") {
  for (auto [p, s] : fields_up_to(81)) {
    const FieldCtx ctx(p, s);
    for (uint64_t rx = 0; rx < ctx.q(); ++rx)
      for (uint64_t ry = 0; ry < ctx.q(); ++ry) {
        const auto x = ctx.element_at(rx), y = ctx.element_at(ry);
        CHECK(charmat::phi(ctx, ctx.mul(x, y)) ==
              charmat::phi(ctx, x) * charmat::phi(ctx, y));
      }
  }
}

TEST_CASE("generator character values") {
  const FieldCtx f7(7, 1);
  // trivial character: every nonzero input maps to Root(0)
  for (uint64_t r = 1; r < 7; ++r)
    CHECK(chi_pow(f7, 0, f7.element_at(r), 1) == CharValue{1, 0});
  // chi(g) = zeta_{q-1} by definition
  CHECK(chi_pow(f7, 1, f7.generator(), 6) == CharValue{6, 1});
  // on D_2 with N = n = 3: chi(a_j) = zeta_3^j
  const auto d2 = f7.subgroup_Dk(2);
  for (uint64_t j = 0; j < d2.size(); ++j)
    CHECK(chi_pow(f7, 1, d2[j], 3) == CharValue{3, j});
  // zero maps to zero
  CHECK(chi_pow(f7, 1, f7.zero(), 6).is_zero());
  // values of chi^1 on all of F_7^* do not fit inside mu_3
  CHECK_THROWS_AS(chi_pow(f7, 1, f7.generator(), 3), std::invalid_argument);
  // negative exponents reduce mod q-1
  CHECK(chi_pow(f7, -1, f7.generator(), 6) == CharValue{6, 5});
}

TEST_CASE("phi equals chi at the half-exponent") {
  for (auto [p, s] : fields_up_to(81)) {
    const FieldCtx ctx(p, s);
    const int64_t half = static_cast<int64_t>((ctx.q() - 1) / 2);
    for (uint64_t r = 1; r < ctx.q(); ++r) {
      const auto x = ctx.element_at(r);
      const CharValue v = chi_pow(ctx, half, x, 2);
      REQUIRE_FALSE(v.is_zero());
      CHECK((*v.exponent == 0 ? 1 : -1) == charmat::phi(ctx, x));
    }
  }
}

TEST_CASE("character sums over the group vanish unless trivial") {
  for (auto [p, s] : fields_up_to(81)) {
    const FieldCtx ctx(p, s);
    const uint64_t d = ctx.q() - 1;
    for (uint64_t m = 0; m < d; ++m) {
      CycInt acc(static_cast<uint32_t>(d));
      for (uint64_t e = 0; e < d; ++e) {
        const CharValue v =
            chi_pow(ctx, static_cast<int64_t>(m), ctx.pow_g(e), d);
        acc.coeff(*v.exponent) += 1;
      }
      if (m == 0) {
        CHECK(charmat::as_integer(acc) == mpz_class(d));
      } else {
        CHECK(charmat::canonical_zero(acc));
      }
    }
  }
}
