#pragma once

// Finite fields F_{p^s} of odd characteristic with a fixed canonical
// construction: lexicographically least monic irreducible modulus,
// lexicographically least generator of the multiplicative group, and a
// full discrete-log table so that every later character evaluation is a
// table lookup.  All arithmetic is exact over machine integers; the
// table sizes are guarded, not assumed.

#include <cstdint>
#include <string>
#include <vector>

namespace charmat {

// Dense polynomial over F_p, coeffs[i] is the x^i coefficient.
using PolyFp = std::vector<uint32_t>;

// Residue-class polynomial of degree < s, fully reduced mod p.
struct FieldElement {
  std::vector<uint32_t> coeffs;
  bool operator==(const FieldElement&) const = default;
};

struct FieldParams {
  uint64_t p = 0;   // odd prime characteristic
  uint32_t s = 0;   // extension degree
  uint64_t q = 0;   // p^s
  PolyFp modulus;   // monic of degree s; equals x when s == 1
};

bool is_prime_u64(uint64_t n);

// Prime factors of n, ascending, without multiplicity.
std::vector<uint64_t> prime_factors(uint64_t n);

// First monic irreducible of degree s over F_p in lexicographic order on
// the coefficient tuple (c_0, ..., c_{s-1}), c_0 most significant.
// Certified by the Rabin test: x^{p^s} == x (mod f) and
// gcd(x^{p^{s/l}} - x, f) = 1 for every prime l | s.
PolyFp find_irreducible(uint64_t p, uint32_t s);

class FieldCtx {
 public:
  static constexpr uint64_t kDefaultTableLimit = uint64_t{1} << 24;

  // Throws std::invalid_argument if p is not an odd prime, s == 0, or
  // p^s exceeds table_limit (dlog table of size q must stay affordable).
  FieldCtx(uint64_t p, uint32_t s, uint64_t table_limit = kDefaultTableLimit);

  const FieldParams& params() const { return params_; }
  uint64_t p() const { return params_.p; }
  uint32_t s() const { return params_.s; }
  uint64_t q() const { return params_.q; }
  const FieldElement& generator() const { return g_; }

  FieldElement zero() const;
  FieldElement one() const;

  // Canonical enumeration: rank r in [0, q) decodes via base-p digits of
  // r with c_0 as the most significant digit.  rank 0 is the zero element.
  FieldElement element_at(uint64_t rank) const;
  uint64_t rank_of(const FieldElement& x) const;

  bool is_zero(const FieldElement& x) const;
  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement pow(const FieldElement& a, uint64_t e) const;
  FieldElement inv(const FieldElement& a) const;  // throws on zero
  FieldElement from_int(int64_t v) const;         // v mod p as a constant

  // Discrete log base g, in [0, q-2].  Throws on zero.
  uint64_t dlog(const FieldElement& x) const;
  FieldElement pow_g(uint64_t e) const;  // g^e, table lookup

  // True iff x has multiplicative order exactly q-1.
  bool order_check(const FieldElement& x) const;

  // Next generator after x in enumeration order (wraps never; throws if
  // none, which cannot happen for q > 3 since generators pair up).
  FieldElement next_generator_after(const FieldElement& x) const;

  // D_k = { x^k : x in F_q^* } for k | q-1, enumerated as a_i = g^{k i},
  // i = 0, ..., (q-1)/k - 1.  Throws unless k >= 1 and k | q-1.
  std::vector<FieldElement> subgroup_Dk(uint64_t k) const;

  std::string to_string(const FieldElement& x) const;  // "[c0,c1,...]"

 private:
  FieldParams params_;
  std::vector<uint64_t> factors_qm1_;  // prime factors of q-1
  FieldElement g_;
  std::vector<uint32_t> dlog_;      // rank -> exponent, UINT32_MAX at rank 0
  std::vector<uint32_t> exp_rank_;  // exponent -> rank of g^e, size q-1

  void check_element(const FieldElement& x) const;
};

}  // namespace charmat
