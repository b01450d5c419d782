#pragma once

// Multiplicative characters of F_q^*, zero-extended by chi(0) = 0.
// Values are never floats: a character value is either Zero or a root of
// unity recorded as an exponent residue modulo a caller-supplied order N.
// phi is the quadratic character; chi is the canonical generator of the
// character group, pinned by chi(g) = zeta_{q-1}.

#include <cstdint>
#include <optional>

#include "charmat/fields.hpp"

namespace charmat {

// Quadratic character: 0 at zero, +1 on squares, -1 on non-squares.
// Equals the parity of dlog; for s = 1 this is the Legendre symbol.
int phi(const FieldCtx& ctx, const FieldElement& x);

struct CharValue {
  uint64_t order = 1;                     // N
  std::optional<uint64_t> exponent;       // e in [0, N); nullopt means 0
  bool is_zero() const { return !exponent.has_value(); }
  bool operator==(const CharValue&) const = default;
};

// chi^m(x) as an element of {0} union mu_N: chi(g) = zeta_{q-1}, so
// chi^m(g^v) = zeta_N^{m v N / (q-1)}.  Throws std::invalid_argument if
// the value is not an N-th root of unity, i.e. (q-1) does not divide
// m * dlog(x) * N.
CharValue chi_pow(const FieldCtx& ctx, int64_t m, const FieldElement& x,
                  uint64_t root_order);

}  // namespace charmat
