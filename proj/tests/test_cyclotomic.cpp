#include <doctest.h>

#include <numeric>
#include <random>

#include "charmat/cyclotomic.hpp"

using charmat::as_integer;
using charmat::canonical_equal;
using charmat::canonical_zero;
using charmat::CycInt;
using charmat::cyclotomic_poly;

namespace {

CycInt random_cyc(std::mt19937_64& rng, uint32_t n, int span) {
  CycInt a(n);
  for (uint32_t i = 0; i < n; ++i)
    a.coeff(i) = static_cast<long>(rng() % (2 * span + 1)) - span;
  return a;
}

}  // namespace

TEST_CASE("root multiplication is exponent addition") {
  CHECK((CycInt::root(3, 1) * CycInt::root(3, 2)).raw_equal(CycInt::root(3, 0)));
  const CycInt zero(5);
  CHECK((CycInt::root(5, 3) * zero).raw_equal(zero));
  // (1 + zeta_4)(1 - zeta_4) = 1 - zeta_4^2 = 2 mod Phi_4
  const CycInt one = CycInt::constant(4, 1);
  const CycInt z = CycInt::root(4, 1);
  CHECK(as_integer((one + z) * (one - z)) == mpz_class(2));
}

TEST_CASE("known cyclotomic polynomials") {
  using V = std::vector<mpz_class>;
  CHECK(cyclotomic_poly(1) == V{-1, 1});
  CHECK(cyclotomic_poly(2) == V{1, 1});
  CHECK(cyclotomic_poly(3) == V{1, 1, 1});
  CHECK(cyclotomic_poly(4) == V{1, 0, 1});
  CHECK(cyclotomic_poly(6) == V{1, -1, 1});
  CHECK(cyclotomic_poly(12) == V{1, 0, -1, 0, 1});
  // 105 is the first order with a coefficient outside {-1, 0, 1}
  const auto& c105 = cyclotomic_poly(105);
  CHECK(c105.size() == charmat::totient(105) + 1);
  CHECK(c105[7] == -2);
}

TEST_CASE("cyclotomic polynomials multiply back to x^n - 1") {
  for (uint32_t n = 1; n <= 512; ++n) {
    std::vector<mpz_class> prod{1};
    for (uint32_t d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      const auto& phi_d = cyclotomic_poly(d);
      std::vector<mpz_class> next(prod.size() + phi_d.size() - 1, 0);
      for (size_t i = 0; i < prod.size(); ++i) {
        if (prod[i] == 0) continue;
        for (size_t j = 0; j < phi_d.size(); ++j)
          next[i + j] += prod[i] * phi_d[j];
      }
      prod = std::move(next);
    }
    REQUIRE(prod.size() == n + 1);
    CHECK(prod[0] == -1);
    CHECK(prod[n] == 1);
    bool middle_zero = true;
    for (size_t i = 1; i < n; ++i) middle_zero = middle_zero && prod[i] == 0;
    CHECK(middle_zero);
  }
}

TEST_CASE("integer extraction goes through canonical reduction") {
  CHECK(as_integer(CycInt::constant(7, 42)) == mpz_class(42));
  // 1 + zeta_3 + zeta_3^2 = 0
  CycInt a(3);
  a.coeff(0) = 1;
  a.coeff(1) = 1;
  a.coeff(2) = 1;
  CHECK(as_integer(a) == mpz_class(0));
  CHECK(canonical_zero(a));
  CHECK_FALSE(as_integer(CycInt::root(4, 1)).has_value());
  // representation independence: adding a multiple of Phi_n changes nothing
  std::mt19937_64 rng(4242);
  for (int it = 0; it < 1000; ++it) {
    const uint32_t n = 2 + static_cast<uint32_t>(rng() % 20);
    const CycInt x = random_cyc(rng, n, 9);
    const auto& phi = cyclotomic_poly(n);
    CycInt noise(n);
    const uint64_t shift = rng() % n;
    const long scale = static_cast<long>(rng() % 7) - 3;
    for (size_t i = 0; i < phi.size(); ++i)
      noise.coeff((i + shift) % n) += phi[i] * scale;
    const CycInt y = x + noise;
    CHECK(canonical_equal(x, y));
    CHECK(as_integer(x) == as_integer(y));
  }
}

TEST_CASE("conjugation and Galois action") {
  std::mt19937_64 rng(99);
  CHECK(charmat::conj(CycInt::constant(6, 5)).raw_equal(CycInt::constant(6, 5)));
  CHECK(charmat::conj(CycInt::root(6, 1)).raw_equal(CycInt::root(6, 5)));
  for (int it = 0; it < 200; ++it) {
    const uint32_t n = 3 + static_cast<uint32_t>(rng() % 24);
    const CycInt a = random_cyc(rng, n, 8);
    const CycInt b = random_cyc(rng, n, 8);
    CHECK(charmat::conj(charmat::conj(a)).raw_equal(a));
    CHECK(charmat::conj(a * b).raw_equal(charmat::conj(a) * charmat::conj(b)));
    CHECK(charmat::galois(a, 1).raw_equal(a));
    CHECK(charmat::galois(a, n - 1).raw_equal(charmat::conj(a)));
    uint64_t t = 1 + rng() % (n - 1);
    while (std::gcd(t, static_cast<uint64_t>(n)) != 1) t = 1 + rng() % (n - 1);
    uint64_t t2 = 1 + rng() % (n - 1);
    while (std::gcd(t2, static_cast<uint64_t>(n)) != 1)
      t2 = 1 + rng() % (n - 1);
    CHECK(charmat::galois(charmat::galois(a, t), t2)
              .raw_equal(charmat::galois(a, t * t2 % n)));
    CHECK(charmat::galois(a * b, t)
              .raw_equal(charmat::galois(a, t) * charmat::galois(b, t)));
  }
  CHECK_THROWS_AS(charmat::galois(CycInt::root(6, 1), 2),
                  std::invalid_argument);
}

TEST_CASE("ring operations are commutative and associative") {
  std::mt19937_64 rng(2718);
  for (int it = 0; it < 200; ++it) {
    const uint32_t n = 1 + static_cast<uint32_t>(rng() % 16);
    const CycInt a = random_cyc(rng, n, 10);
    const CycInt b = random_cyc(rng, n, 10);
    const CycInt c = random_cyc(rng, n, 10);
    CHECK((a * b).raw_equal(b * a));
    CHECK((a * (b * c)).raw_equal((a * b) * c));
    CHECK((a * (b + c)).raw_equal(a * b + a * c));
  }
  CHECK_THROWS_AS(CycInt(3) + CycInt(4), std::invalid_argument);
  CHECK_THROWS_AS(CycInt(3) * CycInt(4), std::invalid_argument);
}
