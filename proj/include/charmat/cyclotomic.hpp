#pragma once

// Exact arithmetic in Z[zeta_n], represented as the group ring
// Z[x]/(x^n - 1): a value is a length-n integer coefficient vector with
// index arithmetic cyclic mod n.  The representation is redundant (x^n-1
// is not irreducible); equality and integer extraction are therefore
// only decided after reduction modulo the n-th cyclotomic polynomial,
// which is monic, so the division stays over Z.  Coefficients are
// arbitrary-precision: products of many Jacobi-sum factors grow fast.

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace charmat {

class CycInt {
 public:
  explicit CycInt(uint32_t n);  // zero of order n
  static CycInt root(uint32_t n, uint64_t e);         // zeta_n^e
  static CycInt constant(uint32_t n, const mpz_class& c);

  uint32_t order() const { return n_; }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  mpz_class& coeff(size_t i) { return c_[i]; }
  const mpz_class& coeff(size_t i) const { return c_[i]; }

  // coefficient-wise; operands must share n (throws otherwise)
  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator-() const;
  // cyclic convolution, schoolbook; exactness beats speed here
  CycInt operator*(const CycInt& o) const;
  CycInt& operator+=(const CycInt& o);
  CycInt& operator*=(const CycInt& o);

  bool raw_equal(const CycInt& o) const { return n_ == o.n_ && c_ == o.c_; }

 private:
  uint32_t n_;
  std::vector<mpz_class> c_;
};

// Phi_n over Z, ascending coefficients, monic of degree totient(n).
// Computed by exact division of x^n - 1 by the product of lower Phi_d;
// cached (thread-safe) since reduction calls it constantly.
const std::vector<mpz_class>& cyclotomic_poly(uint32_t n);

uint64_t totient(uint64_t n);

// Canonical coordinates: the residue of the representative mod Phi_n,
// length totient(n) (shorter representations are zero-padded).
std::vector<mpz_class> reduce_mod_phi(const CycInt& a);

// a as a rational integer if its canonical form is constant.
std::optional<mpz_class> as_integer(const CycInt& a);

bool canonical_zero(const CycInt& a);
bool canonical_equal(const CycInt& a, const CycInt& b);

// Complex conjugation zeta -> zeta^{-1}: index map i -> n - i.
CycInt conj(const CycInt& a);

// Galois action zeta -> zeta^t for gcd(t, n) = 1 (throws otherwise).
CycInt galois(const CycInt& a, int64_t t);

}  // namespace charmat
