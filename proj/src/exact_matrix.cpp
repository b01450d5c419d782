#include "charmat/exact_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace charmat {

BigIntMatrix::BigIntMatrix(size_t n) : n_(n), e_(n * n, mpz_class(0)) {
  if (n == 0) throw std::invalid_argument("matrix must have positive size");
}

BigIntMatrix BigIntMatrix::identity(size_t n) {
  BigIntMatrix m(n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

BigIntMatrix BigIntMatrix::plus_constant(const mpz_class& t) const {
  BigIntMatrix m = *this;
  for (auto& e : m.e_) e += t;
  return m;
}

mpz_class bareiss_det(BigIntMatrix m) {
  const size_t n = m.size();
  int sign = 1;
  mpz_class prev(1);
  mpz_t tmp;
  mpz_init(tmp);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      size_t c = k + 1;
      while (c < n && m.at(k, c) == 0) ++c;
      if (c == n) {
        // pivot row of the remaining block is zero: all higher minors
        // vanish, the determinant is exactly 0
        mpz_clear(tmp);
        return mpz_class(0);
      }
      for (size_t r = 0; r < n; ++r) std::swap(m.at(r, k), m.at(r, c));
      sign = -sign;
    }
    const mpz_srcptr pivot = m.at(k, k).get_mpz_t();
    const mpz_srcptr denom = prev.get_mpz_t();
    for (size_t i = k + 1; i < n; ++i) {
      const mpz_srcptr mik = m.at(i, k).get_mpz_t();
      for (size_t j = k + 1; j < n; ++j) {
        // entry becomes a (k+2)-minor of the input: (pivot*m_ij -
        // m_ik*m_kj) / prev divides exactly (Sylvester identity)
        mpz_ptr mij = m.at(i, j).get_mpz_t();
        mpz_mul(tmp, pivot, mij);
        mpz_submul(tmp, mik, m.at(k, j).get_mpz_t());
        mpz_divexact(mij, tmp, denom);
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  mpz_clear(tmp);
  mpz_class det = m.at(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

std::string LinearPoly::to_string() const {
  return b.get_str() + "*t + " + a.get_str();
}

LinearPoly det_linear(const BigIntMatrix& m0) {
  const mpz_class d0 = bareiss_det(m0);
  const mpz_class d1 = bareiss_det(m0.plus_constant(1));
  LinearPoly out{d0, d1 - d0};
  const mpz_class d2 = bareiss_det(m0.plus_constant(2));
  if (d2 != out.eval(2))
    throw std::logic_error("pencil determinant is not linear in t");
  return out;
}

BigIntMatrix circulant(const std::vector<mpz_class>& b) {
  const size_t n = b.size();
  BigIntMatrix m(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m.at(i, j) = b[(i + n - j) % n];
  return m;
}

std::optional<mpz_class> integer_sqrt_exact(const mpz_class& x) {
  if (x < 0) return std::nullopt;
  mpz_class root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t());
  if (rem != 0) return std::nullopt;
  return root;
}

}  // namespace charmat
