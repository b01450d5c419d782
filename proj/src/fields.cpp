#include "charmat/fields.hpp"

#include <algorithm>
#include <stdexcept>

namespace charmat {

namespace {

// ---- polynomial arithmetic over F_p (coeffs ascending, trimmed) ----

void trim(PolyFp& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const PolyFp& f) { return static_cast<int>(f.size()) - 1; }

PolyFp poly_mul(const PolyFp& a, const PolyFp& b, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint64_t> acc(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      acc[i + j] = (acc[i + j] + uint64_t{a[i]} * b[j]) % p;
  }
  PolyFp out(acc.size());
  for (size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<uint32_t>(acc[i]);
  trim(out);
  return out;
}

// a mod f, f monic
PolyFp poly_mod(PolyFp a, const PolyFp& f, uint64_t p) {
  trim(a);
  const int df = deg(f);
  while (deg(a) >= df) {
    const int da = deg(a);
    const uint64_t c = a[da];
    a.pop_back();
    if (c != 0) {
      const int off = da - df;
      for (int i = 0; i < df; ++i)
        a[off + i] = static_cast<uint32_t>((a[off + i] + (p - f[i]) * c) % p);
    }
    trim(a);
  }
  return a;
}

uint64_t mod_pow_u64(uint64_t b, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

PolyFp poly_powmod(PolyFp base, uint64_t e, const PolyFp& f, uint64_t p) {
  PolyFp r = {1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = poly_mod(poly_mul(r, base, p), f, p);
    base = poly_mod(poly_mul(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}

PolyFp poly_sub(PolyFp a, const PolyFp& b, uint64_t p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i)
    a[i] = static_cast<uint32_t>((a[i] + p - b[i]) % p);
  trim(a);
  return a;
}

PolyFp poly_gcd(PolyFp a, PolyFp b, uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // reduce a mod b after making b monic
    const uint64_t lead_inv = mod_pow_u64(b.back(), p - 2, p);
    PolyFp bm(b.size());
    for (size_t i = 0; i < b.size(); ++i)
      bm[i] = static_cast<uint32_t>(b[i] * lead_inv % p);
    a = poly_mod(std::move(a), bm, p);
    std::swap(a, b);
  }
  return a;
}

uint64_t checked_pow_u64(uint64_t p, uint32_t s) {
  uint64_t q = 1;
  for (uint32_t i = 0; i < s; ++i) {
    if (q > UINT64_MAX / p) throw std::invalid_argument("p^s overflows");
    q *= p;
  }
  return q;
}

bool rabin_irreducible(uint64_t p, uint32_t s, const PolyFp& f) {
  const PolyFp x = {0, 1};
  // x^{p^s} == x (mod f)
  PolyFp xp = x;
  for (uint32_t i = 0; i < s; ++i) xp = poly_powmod(std::move(xp), p, f, p);
  if (poly_sub(xp, x, p) != PolyFp{}) return false;
  for (uint64_t l : prime_factors(s)) {
    PolyFp xe = x;
    for (uint32_t i = 0; i < s / l; ++i) xe = poly_powmod(std::move(xe), p, f, p);
    PolyFp g = poly_gcd(poly_sub(std::move(xe), x, p), f, p);
    if (deg(g) != 0) return false;
  }
  return true;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

PolyFp find_irreducible(uint64_t p, uint32_t s) {
  if (!is_prime_u64(p) || p == 2)
    throw std::invalid_argument("characteristic must be an odd prime");
  if (s == 0) throw std::invalid_argument("extension degree must be positive");
  if (s == 1) return PolyFp{0, 1};  // x itself
  checked_pow_u64(p, s);
  // enumerate monic f = x^s + c_{s-1} x^{s-1} + ... + c_0 by lex order on
  // (c_0, ..., c_{s-1}) with c_0 most significant
  std::vector<uint32_t> c(s, 0);
  for (;;) {
    PolyFp f(c.begin(), c.end());
    f.push_back(1);
    if (rabin_irreducible(p, s, f)) return f;
    // increment least significant digit c_{s-1}
    uint32_t i = s;
    while (i > 0) {
      --i;
      if (++c[i] < p) break;
      c[i] = 0;
      if (i == 0) throw std::logic_error("no irreducible found");  // cannot happen
    }
  }
}

FieldCtx::FieldCtx(uint64_t p, uint32_t s, uint64_t table_limit) {
  if (!is_prime_u64(p) || p == 2)
    throw std::invalid_argument("characteristic must be an odd prime");
  if (s == 0) throw std::invalid_argument("extension degree must be positive");
  const uint64_t q = checked_pow_u64(p, s);
  if (q > table_limit)
    throw std::invalid_argument("field size exceeds the table limit");
  params_ = {p, s, q, find_irreducible(p, s)};
  factors_qm1_ = prime_factors(q - 1);

  FieldElement x;
  uint64_t r = 1;
  for (; r < q; ++r) {
    x = element_at(r);
    if (order_check(x)) break;
  }
  g_ = std::move(x);

  dlog_.assign(q, UINT32_MAX);
  exp_rank_.assign(q - 1, 0);
  FieldElement cur = one();
  for (uint64_t e = 0; e + 1 < q; ++e) {
    const uint64_t rank = rank_of(cur);
    if (dlog_[rank] != UINT32_MAX)
      throw std::logic_error("generator order defect while building tables");
    dlog_[rank] = static_cast<uint32_t>(e);
    exp_rank_[e] = static_cast<uint32_t>(rank);
    cur = mul(cur, g_);
  }
  if (!(cur == one())) throw std::logic_error("g^(q-1) != 1");
}

FieldElement FieldCtx::zero() const {
  return FieldElement{std::vector<uint32_t>(params_.s, 0)};
}

FieldElement FieldCtx::one() const {
  FieldElement e = zero();
  e.coeffs[0] = 1;
  return e;
}

FieldElement FieldCtx::element_at(uint64_t rank) const {
  if (rank >= params_.q) throw std::invalid_argument("rank out of range");
  FieldElement e = zero();
  for (uint32_t i = params_.s; i > 0; --i) {
    e.coeffs[i - 1] = static_cast<uint32_t>(rank % params_.p);
    rank /= params_.p;
  }
  return e;
}

uint64_t FieldCtx::rank_of(const FieldElement& x) const {
  check_element(x);
  uint64_t r = 0;
  for (uint32_t i = 0; i < params_.s; ++i) r = r * params_.p + x.coeffs[i];
  return r;
}

void FieldCtx::check_element(const FieldElement& x) const {
  if (x.coeffs.size() != params_.s)
    throw std::invalid_argument("element has wrong degree");
}

bool FieldCtx::is_zero(const FieldElement& x) const {
  check_element(x);
  return std::all_of(x.coeffs.begin(), x.coeffs.end(),
                     [](uint32_t c) { return c == 0; });
}

FieldElement FieldCtx::add(const FieldElement& a, const FieldElement& b) const {
  check_element(a);
  check_element(b);
  FieldElement r = a;
  for (uint32_t i = 0; i < params_.s; ++i) {
    r.coeffs[i] += b.coeffs[i];
    if (r.coeffs[i] >= params_.p) r.coeffs[i] -= static_cast<uint32_t>(params_.p);
  }
  return r;
}

FieldElement FieldCtx::neg(const FieldElement& a) const {
  check_element(a);
  FieldElement r = a;
  for (uint32_t i = 0; i < params_.s; ++i)
    if (r.coeffs[i] != 0) r.coeffs[i] = static_cast<uint32_t>(params_.p) - r.coeffs[i];
  return r;
}

FieldElement FieldCtx::sub(const FieldElement& a, const FieldElement& b) const {
  return add(a, neg(b));
}

FieldElement FieldCtx::mul(const FieldElement& a, const FieldElement& b) const {
  check_element(a);
  check_element(b);
  const uint64_t p = params_.p;
  const uint32_t s = params_.s;
  if (s == 1)
    return FieldElement{{static_cast<uint32_t>(uint64_t{a.coeffs[0]} * b.coeffs[0] % p)}};
  std::vector<uint64_t> acc(2 * s - 1, 0);
  for (uint32_t i = 0; i < s; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (uint32_t j = 0; j < s; ++j)
      acc[i + j] = (acc[i + j] + uint64_t{a.coeffs[i]} * b.coeffs[j]) % p;
  }
  // reduce by the monic modulus: x^s == -(m_{s-1} x^{s-1} + ... + m_0)
  const PolyFp& m = params_.modulus;
  for (uint32_t d = 2 * s - 2; d >= s; --d) {
    const uint64_t c = acc[d];
    if (c == 0) continue;
    acc[d] = 0;
    for (uint32_t i = 0; i < s; ++i)
      acc[d - s + i] = (acc[d - s + i] + (p - m[i]) * c) % p;
  }
  FieldElement r = zero();
  for (uint32_t i = 0; i < s; ++i) r.coeffs[i] = static_cast<uint32_t>(acc[i]);
  return r;
}

FieldElement FieldCtx::pow(const FieldElement& a, uint64_t e) const {
  FieldElement r = one();
  FieldElement b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

FieldElement FieldCtx::inv(const FieldElement& a) const {
  if (is_zero(a)) throw std::invalid_argument("zero has no inverse");
  return pow(a, params_.q - 2);
}

FieldElement FieldCtx::from_int(int64_t v) const {
  const int64_t p = static_cast<int64_t>(params_.p);
  int64_t r = v % p;
  if (r < 0) r += p;
  FieldElement e = zero();
  e.coeffs[0] = static_cast<uint32_t>(r);
  return e;
}

uint64_t FieldCtx::dlog(const FieldElement& x) const {
  if (is_zero(x)) throw std::invalid_argument("dlog of zero");
  return dlog_[rank_of(x)];
}

FieldElement FieldCtx::pow_g(uint64_t e) const {
  return element_at(exp_rank_[e % (params_.q - 1)]);
}

bool FieldCtx::order_check(const FieldElement& x) const {
  if (is_zero(x)) return false;
  for (uint64_t l : factors_qm1_)
    if (pow(x, (params_.q - 1) / l) == one()) return false;
  return true;
}

FieldElement FieldCtx::next_generator_after(const FieldElement& x) const {
  for (uint64_t r = rank_of(x) + 1; r < params_.q; ++r) {
    FieldElement cand = element_at(r);
    if (order_check(cand)) return cand;
  }
  throw std::invalid_argument("no further generator in enumeration order");
}

std::vector<FieldElement> FieldCtx::subgroup_Dk(uint64_t k) const {
  if (k == 0 || (params_.q - 1) % k != 0)
    throw std::invalid_argument("subgroup index must divide q-1");
  const uint64_t n = (params_.q - 1) / k;
  std::vector<FieldElement> out;
  out.reserve(n);
  for (uint64_t i = 0; i < n; ++i) out.push_back(pow_g(k * i));
  return out;
}

std::string FieldCtx::to_string(const FieldElement& x) const {
  check_element(x);
  std::string s = "[";
  for (uint32_t i = 0; i < params_.s; ++i) {
    if (i) s += ',';
    s += std::to_string(x.coeffs[i]);
  }
  s += ']';
  return s;
}

}  // namespace charmat
