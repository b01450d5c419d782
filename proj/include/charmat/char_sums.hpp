#pragma once

// Complete character sums over F_q, kept exact in Z[zeta_N]: Jacobi sums
// of chi^i and chi^j, the circulant eigenvalue sums lambda_m attached to
// the subgroup D_k, and point counts of the curves y^2 = x^k +- 1 both
// by quadratic-character summation and via the trace term they define.
// Characters are zero-extended (value 0 at the zero argument), so the
// sums below run over the full field without special-casing.

#include <cstdint>

#include "charmat/cyclotomic.hpp"
#include "charmat/fields.hpp"

namespace charmat {

// J(chi^i, chi^j) = sum_{x in F_q} chi^i(x) chi^j(1-x) as an element of
// Z[zeta_N].  Character values are evaluated as signed roots s*zeta_N^e
// (s = +-1), which exists for odd N whenever (q-1) | 2*m*dlog(x)*N; for
// even N mu_N already contains -1 and plain divisibility is required.
// Throws std::invalid_argument if a value cannot be expressed this way.
CycInt jacobi_sum(const FieldCtx& ctx, int64_t i, int64_t j, uint64_t root_order);

// lambda_m = sum_{j=0}^{n-1} (phi(1 + a_j) + phi(1 - a_j)) zeta_n^{m j}
// for D_k = {a_j}, n = (q-1)/k: the eigenvalues of the circulant core of
// the character matrix when k is even (all a_j are squares).  Exercises
// chi_pow for the root zeta_n^{m j} = chi^m(a_j).
CycInt lambda_m(const FieldCtx& ctx, uint64_t k, uint64_t m);

struct CurveCount {
  uint64_t k = 0;
  int sign = 1;          // the constant term: y^2 = x^k + sign
  int64_t points = 0;    // affine points plus exactly one point at infinity
  int64_t trace = 0;     // q + 1 - points
};

// Counts via points = 1 + sum_{x in F_q} (1 + phi(x^k + sign)).
CurveCount curve_count(const FieldCtx& ctx, uint64_t k, int sign);

// sum_{x in F_q^*} phi(x^k + sign), the raw complete sum (x = 0 excluded
// so the identities relating it to curve traces stay exact).
int64_t char_sum_power(const FieldCtx& ctx, uint64_t k, int sign);

}  // namespace charmat
