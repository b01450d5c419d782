#include "charmat/characters.hpp"

#include <stdexcept>

namespace charmat {

int phi(const FieldCtx& ctx, const FieldElement& x) {
  if (ctx.is_zero(x)) return 0;
  return (ctx.dlog(x) & 1) ? -1 : 1;
}

CharValue chi_pow(const FieldCtx& ctx, int64_t m, const FieldElement& x,
                  uint64_t root_order) {
  if (root_order == 0) throw std::invalid_argument("root order must be positive");
  const uint64_t d = ctx.q() - 1;
  if (ctx.is_zero(x)) return CharValue{root_order, std::nullopt};
  int64_t mm = m % static_cast<int64_t>(d);
  if (mm < 0) mm += static_cast<int64_t>(d);
  const uint64_t v = static_cast<uint64_t>(mm) * ctx.dlog(x) % d;
  // e solves zeta_{q-1}^v = zeta_N^e, i.e. e = v N / d; requires d | v N.
  // v < 2^24 but N is unbounded, so the product needs 128 bits.
  if (static_cast<unsigned __int128>(v) * root_order % d != 0)
    throw std::invalid_argument("character value is not in mu_N");
  const uint64_t e = static_cast<uint64_t>(
      static_cast<unsigned __int128>(v) * root_order / d % root_order);
  return CharValue{root_order, e};
}

}  // namespace charmat
