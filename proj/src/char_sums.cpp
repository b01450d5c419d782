#include "charmat/char_sums.hpp"

#include <stdexcept>

#include "charmat/characters.hpp"

namespace charmat {

namespace {

struct SignedRoot {
  int sign;    // +1 or -1
  uint64_t e;  // exponent in [0, N)
};

// chi^m(x) for nonzero x written as sign * zeta_N^e.  With d = q-1 and
// v = m*dlog(x) mod d the value is zeta_d^v; for even N it must itself
// be an N-th root (d | vN), while for odd N a factor -1 = -zeta_N^0 can
// be split off, which works exactly when d | 2vN:
//   2e + aN == 2vN/d (mod 2N),  sign = (-1)^a.
SignedRoot signed_root_value(uint64_t v, uint64_t d, uint64_t n_root) {
  using u128 = unsigned __int128;
  if (n_root % 2 == 0) {
    if (u128(v) * n_root % d != 0)
      throw std::invalid_argument("character value is not in mu_N");
    return {1, static_cast<uint64_t>(u128(v) * n_root / d % n_root)};
  }
  if (u128(v) * n_root * 2 % d != 0)
    throw std::invalid_argument("character value is not in +-mu_N");
  const uint64_t e2 =
      static_cast<uint64_t>(u128(v) * n_root * 2 / d % (2 * n_root));
  if (e2 % 2 == 0) return {1, e2 / 2};
  return {-1, ((e2 + n_root) % (2 * n_root)) / 2};
}

uint64_t reduce_exponent(int64_t m, uint64_t d) {
  int64_t r = m % static_cast<int64_t>(d);
  if (r < 0) r += static_cast<int64_t>(d);
  return static_cast<uint64_t>(r);
}

}  // namespace

CycInt jacobi_sum(const FieldCtx& ctx, int64_t i, int64_t j,
                  uint64_t root_order) {
  if (root_order == 0) throw std::invalid_argument("root order must be positive");
  if (root_order > UINT32_MAX) throw std::invalid_argument("root order too large");
  const uint64_t d = ctx.q() - 1;
  const uint64_t mi = reduce_exponent(i, d);
  const uint64_t mj = reduce_exponent(j, d);
  CycInt r(static_cast<uint32_t>(root_order));
  const FieldElement one = ctx.one();
  // x runs over F_q^* \ {1}: the terms at x = 0 and x = 1 vanish because
  // the characters are zero-extended
  for (uint64_t a = 0; a < d; ++a) {
    const FieldElement x = ctx.pow_g(a);
    const FieldElement y = ctx.sub(one, x);
    if (ctx.is_zero(y)) continue;
    const SignedRoot s1 = signed_root_value(mi * a % d, d, root_order);
    const SignedRoot s2 =
        signed_root_value(mj * ctx.dlog(y) % d, d, root_order);
    const uint64_t e = (s1.e + s2.e) % root_order;
    if (s1.sign * s2.sign > 0)
      r.coeff(e) += 1;
    else
      r.coeff(e) -= 1;
  }
  return r;
}

CycInt lambda_m(const FieldCtx& ctx, uint64_t k, uint64_t m) {
  if (k == 0 || (ctx.q() - 1) % k != 0)
    throw std::invalid_argument("k must divide q-1");
  const uint64_t n = (ctx.q() - 1) / k;
  CycInt r(static_cast<uint32_t>(n));
  const FieldElement one = ctx.one();
  const auto dk = ctx.subgroup_Dk(k);
  for (uint64_t j = 0; j < n; ++j) {
    const int c = phi(ctx, ctx.add(one, dk[j])) + phi(ctx, ctx.sub(one, dk[j]));
    if (c == 0) continue;
    // chi^m(a_j) = zeta_n^{m j}, always a plain n-th root here
    const CharValue z = chi_pow(ctx, static_cast<int64_t>(m), dk[j], n);
    r.coeff(*z.exponent) += c;
  }
  return r;
}

CurveCount curve_count(const FieldCtx& ctx, uint64_t k, int sign) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("sign must be +1 or -1");
  const uint64_t q = ctx.q();
  const uint64_t d = q - 1;
  const FieldElement c = ctx.from_int(sign);
  int64_t points = 1;  // the point at infinity
  for (uint64_t r = 0; r < q; ++r) {
    const FieldElement x = ctx.element_at(r);
    // x^k through the exponent table; x = 0 gives 0 since k >= 1
    const FieldElement xk =
        ctx.is_zero(x) ? x : ctx.pow_g((k % d) * ctx.dlog(x) % d);
    points += 1 + phi(ctx, ctx.add(xk, c));
  }
  CurveCount out;
  out.k = k;
  out.sign = sign;
  out.points = points;
  out.trace = static_cast<int64_t>(q) + 1 - points;
  return out;
}

int64_t char_sum_power(const FieldCtx& ctx, uint64_t k, int sign) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("sign must be +1 or -1");
  const uint64_t d = ctx.q() - 1;
  const FieldElement c = ctx.from_int(sign);
  int64_t sum = 0;
  for (uint64_t a = 0; a < d; ++a)
    sum += phi(ctx, ctx.add(ctx.pow_g((k % d) * a % d), c));
  return sum;
}

}  // namespace charmat
