#pragma once

// Exact integer linear algebra: square matrices over Z with GMP entries,
// fraction-free (Bareiss) determinants, and the degree-1 determinant of a
// pencil M_0 + t*J (J all-ones) recovered from two evaluations with a
// third-point consistency guard.  Intermediate Bareiss entries are minors
// of the input, so every division is exact; nothing here rounds.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace charmat {

class BigIntMatrix {
 public:
  explicit BigIntMatrix(size_t n);
  size_t size() const { return n_; }
  mpz_class& at(size_t i, size_t j) { return e_[i * n_ + j]; }
  const mpz_class& at(size_t i, size_t j) const { return e_[i * n_ + j]; }
  bool operator==(const BigIntMatrix&) const = default;

  static BigIntMatrix identity(size_t n);
  BigIntMatrix plus_constant(const mpz_class& t) const;  // M + t*J

 private:
  size_t n_;
  std::vector<mpz_class> e_;
};

// Determinant by Bareiss elimination with column pivoting: a zero pivot
// is repaired by swapping in a nonzero column (sign tracked); if the
// pivot row has no nonzero entry left the matrix is singular and the
// result is exactly 0.  Takes its argument by value and destroys it.
mpz_class bareiss_det(BigIntMatrix m);

// a + b*t with exact integer coefficients.
struct LinearPoly {
  mpz_class a;
  mpz_class b;
  bool operator==(const LinearPoly&) const = default;
  mpz_class eval(const mpz_class& t) const { return a + b * t; }
  std::string to_string() const;
};

// det(M0 + t*J) for the all-ones J.  A rank-one update keeps the degree
// in t at most 1 (matrix determinant lemma), so two evaluations pin the
// line; det at t = 2 is recomputed as a guard and a std::logic_error is
// thrown if it misses, which would mean the degree assumption broke.
LinearPoly det_linear(const BigIntMatrix& m0);

// C[i][j] = b[(i - j) mod n].
BigIntMatrix circulant(const std::vector<mpz_class>& b);

// Exact square root: nullopt unless x is a perfect square (x >= 0).
std::optional<mpz_class> integer_sqrt_exact(const mpz_class& x);

}  // namespace charmat
