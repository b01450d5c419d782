#include "charmat/cyclotomic.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace charmat {

namespace {

void require_same_order(const CycInt& a, const CycInt& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("cyclotomic orders differ");
}

std::vector<uint64_t> distinct_prime_divisors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<mpz_class> poly_mul_z(const std::vector<mpz_class>& a,
                                  const std::vector<mpz_class>& b) {
  std::vector<mpz_class> out(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  return out;
}

// exact quotient of num by the monic den; throws if a remainder survives
std::vector<mpz_class> exact_div_monic(std::vector<mpz_class> num,
                                       const std::vector<mpz_class>& den) {
  const size_t dn = den.size() - 1;
  if (num.size() <= dn) throw std::logic_error("bad cyclotomic division");
  std::vector<mpz_class> quo(num.size() - dn);
  for (size_t d = num.size() - 1;; --d) {
    const mpz_class c = num[d];
    quo[d - dn] = c;
    if (c != 0)
      for (size_t j = 0; j <= dn; ++j)
        num[d - dn + j] -= c * den[j];
    if (d == dn) break;
  }
  for (size_t j = 0; j < dn; ++j)
    if (num[j] != 0) throw std::logic_error("cyclotomic division not exact");
  return quo;
}

}  // namespace

CycInt::CycInt(uint32_t n) : n_(n), c_(n, mpz_class(0)) {
  if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
}

CycInt CycInt::root(uint32_t n, uint64_t e) {
  CycInt r(n);
  r.c_[e % n] = 1;
  return r;
}

CycInt CycInt::constant(uint32_t n, const mpz_class& c) {
  CycInt r(n);
  r.c_[0] = c;
  return r;
}

CycInt CycInt::operator+(const CycInt& o) const {
  require_same_order(*this, o);
  CycInt r = *this;
  for (uint32_t i = 0; i < n_; ++i) r.c_[i] += o.c_[i];
  return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  require_same_order(*this, o);
  for (uint32_t i = 0; i < n_; ++i) c_[i] += o.c_[i];
  return *this;
}

CycInt CycInt::operator-(const CycInt& o) const {
  require_same_order(*this, o);
  CycInt r = *this;
  for (uint32_t i = 0; i < n_; ++i) r.c_[i] -= o.c_[i];
  return r;
}

CycInt CycInt::operator-() const {
  CycInt r = *this;
  for (uint32_t i = 0; i < n_; ++i) r.c_[i] = -r.c_[i];
  return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
  require_same_order(*this, o);
  CycInt r(n_);
  for (uint32_t i = 0; i < n_; ++i) {
    if (c_[i] == 0) continue;
    const mpz_srcptr ai = c_[i].get_mpz_t();
    for (uint32_t j = 0; j < n_; ++j) {
      if (o.c_[j] == 0) continue;
      uint32_t idx = i + j;
      if (idx >= n_) idx -= n_;
      mpz_addmul(r.c_[idx].get_mpz_t(), ai, o.c_[j].get_mpz_t());
    }
  }
  return r;
}

CycInt& CycInt::operator*=(const CycInt& o) {
  *this = *this * o;
  return *this;
}

uint64_t totient(uint64_t n) {
  uint64_t r = n;
  for (uint64_t f : distinct_prime_divisors(n)) r -= r / f;
  return r;
}

const std::vector<mpz_class>& cyclotomic_poly(uint32_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
  static std::map<uint32_t, std::vector<mpz_class>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);

  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d; recursion bottoms out
  // at Phi_1 = x - 1.  Map entries are stable, so returning refs is safe.
  std::function<const std::vector<mpz_class>&(uint32_t)> get =
      [&](uint32_t m) -> const std::vector<mpz_class>& {
    auto found = cache.find(m);
    if (found != cache.end()) return found->second;
    std::vector<mpz_class> num(m + 1, mpz_class(0));
    num[0] = -1;
    num[m] = 1;
    std::vector<mpz_class> den{mpz_class(1)};
    for (uint32_t d = 1; d < m; ++d)
      if (m % d == 0) den = poly_mul_z(den, get(d));
    auto phi = exact_div_monic(std::move(num), den);
    return cache.emplace(m, std::move(phi)).first->second;
  };
  return get(n);
}

std::vector<mpz_class> reduce_mod_phi(const CycInt& a) {
  const uint32_t n = a.order();
  const auto& phi = cyclotomic_poly(n);
  const size_t dp = phi.size() - 1;  // totient(n)
  std::vector<mpz_class> r(a.coeffs());
  if (r.size() < dp) r.resize(dp, mpz_class(0));
  for (size_t d = r.size(); d-- > dp;) {
    if (r[d] == 0) continue;
    const mpz_class c = r[d];
    r[d] = 0;
    // subtract c * x^{d-dp} * Phi_n; Phi_n monic, so position d clears
    const size_t off = d - dp;
    for (size_t j = 0; j < dp; ++j)
      if (phi[j] != 0)
        mpz_submul(r[off + j].get_mpz_t(), c.get_mpz_t(), phi[j].get_mpz_t());
  }
  r.resize(dp);
  return r;
}

std::optional<mpz_class> as_integer(const CycInt& a) {
  auto r = reduce_mod_phi(a);
  for (size_t i = 1; i < r.size(); ++i)
    if (r[i] != 0) return std::nullopt;
  return r.empty() ? mpz_class(0) : r[0];
}

bool canonical_zero(const CycInt& a) {
  for (const auto& c : reduce_mod_phi(a))
    if (c != 0) return false;
  return true;
}

bool canonical_equal(const CycInt& a, const CycInt& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("cyclotomic orders differ");
  if (a.raw_equal(b)) return true;  // fast path, no reduction needed
  return canonical_zero(a - b);
}

CycInt conj(const CycInt& a) {
  const uint32_t n = a.order();
  CycInt r(n);
  for (uint32_t i = 0; i < n; ++i) r.coeff((n - i) % n) = a.coeff(i);
  return r;
}

CycInt galois(const CycInt& a, int64_t t) {
  const uint32_t n = a.order();
  int64_t tm = t % static_cast<int64_t>(n);
  if (tm < 0) tm += n;
  if (std::gcd(static_cast<uint64_t>(tm), static_cast<uint64_t>(n)) != 1)
    throw std::invalid_argument("galois exponent must be coprime to the order");
  CycInt r(n);
  for (uint32_t i = 0; i < n; ++i)
    r.coeff(static_cast<uint64_t>(tm) * i % n) = a.coeff(i);
  return r;
}

}  // namespace charmat
