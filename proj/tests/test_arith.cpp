#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "oracles.hpp"
#include "rieszl/arith.hpp"
#include "rieszl/errors.hpp"

using namespace rieszl;
using arith::Complex;
using arith::DirichletCharacter;

TEST_CASE("mobius sieve basics") {
  auto t = arith::mobius_sieve(1);
  CHECK(t.mu[1] == 1);

  auto t12 = arith::mobius_sieve(12);
  CHECK(t12.mu[6] == 1);    // (-1)^2
  CHECK(t12.mu[12] == 0);   // 4 | 12
  CHECK(t12.mu[2] == -1);
  CHECK(t12.mu[7] == -1);
  CHECK(t12.mu[10] == 1);

  CHECK_THROWS_AS(arith::mobius_sieve(0), std::invalid_argument);
}

TEST_CASE("mobius divisor-sum identity at 720720") {
  auto t = arith::mobius_sieve(1000000);
  long n = 720720;
  long sum = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    sum += t.mu[d];
    if (d != n / d) sum += t.mu[n / d];
  }
  CHECK(sum == 0);
}

TEST_CASE("mobius convolution sum_{d|n} mu(d) = [n == 1] up to 1e4") {
  auto t = arith::mobius_sieve(10000);
  std::vector<int> conv(10001, 0);
  for (long d = 1; d <= 10000; ++d)
    for (long m = d; m <= 10000; m += d) conv[m] += t.mu[d];
  CHECK(conv[1] == 1);
  for (long n = 2; n <= 10000; ++n) REQUIRE(conv[n] == 0);
}

TEST_CASE("characters mod 4") {
  auto chars = arith::characters_mod(4);
  REQUIRE(chars.size() == 2);
  const auto& odd = chars[0].is_principal() ? chars[1] : chars[0];
  CHECK(odd.conrey_index() == 3);
  CHECK(odd.value(3) == Complex(-1.0, 0.0));
  CHECK(odd.parity() == 1);
  CHECK(odd.is_primitive());
  CHECK(odd.conductor() == 4);
}

TEST_CASE("character mod 1 is all ones") {
  auto chars = arith::characters_mod(1);
  REQUIRE(chars.size() == 1);
  CHECK(chars[0].value(0) == Complex(1.0, 0.0));
  CHECK(chars[0].value(7) == Complex(1.0, 0.0));
  CHECK(chars[0].parity() == 0);
  CHECK(chars[0].is_primitive());
}

TEST_CASE("characters mod 8: four characters, two primitive") {
  auto chars = arith::characters_mod(8);
  REQUIRE(chars.size() == 4);
  int primitive = 0;
  for (const auto& c : chars) primitive += c.is_primitive() ? 1 : 0;
  CHECK(primitive == 2);
}

TEST_CASE("character counts, multiplicativity, orthogonality, parity up to q = 200") {
  std::uniform_int_distribution<long> pick(0, 1 << 30);
  for (uint32_t q = 1; q <= 200; ++q) {
    auto chars = arith::characters_mod(q);
    REQUIRE(chars.size() == arith::euler_phi(q));
    for (const auto& chi : chars) {
      // parity matches chi(-1), exactly
      REQUIRE(chi.value(-1) == Complex(chi.parity() == 0 ? 1.0 : -1.0, 0.0));
      // orthogonality
      if (!chi.is_principal()) {
        Complex sum = 0.0;
        for (uint32_t n = 1; n <= q; ++n) sum += chi.value(n);
        REQUIRE(std::abs(sum) <= 1e-12 * q);
      }
      // multiplicativity on random pairs
      int pairs = q <= 20 ? 10000 : 2000;
      for (int i = 0; i < pairs; ++i) {
        long m = pick(oracles::rng()), n = pick(oracles::rng());
        Complex lhs = chi.value(m * n % q);
        Complex rhs = chi.value(m) * chi.value(n);
        REQUIRE(std::abs(lhs - rhs) <= 1e-12);
      }
    }
  }
}

TEST_CASE("conductor against brute force for q <= 60") {
  for (uint32_t q = 1; q <= 60; ++q) {
    for (const auto& chi : arith::characters_mod(q)) {
      uint32_t brute = 0;
      for (uint32_t f = 1; f <= q; ++f) {
        if (q % f) continue;
        bool trivial_on_kernel = true;
        for (uint32_t n = 1; n <= q && trivial_on_kernel; ++n) {
          if (n % f != 1 % f) continue;
          if (arith::gcd_u64(n, q) != 1) continue;
          if (std::abs(chi.value(n) - Complex(1.0, 0.0)) > 1e-9)
            trivial_on_kernel = false;
        }
        if (trivial_on_kernel) {
          brute = f;
          break;
        }
      }
      REQUIRE(chi.conductor() == brute);
    }
  }
}

TEST_CASE("gauss sums") {
  DirichletCharacter chi4(4, 3);
  Complex g = arith::gauss_sum(chi4);
  CHECK(std::abs(g - Complex(0.0, 2.0)) <= 1e-12);

  DirichletCharacter triv(1, 1);
  CHECK(std::abs(arith::gauss_sum(triv) - Complex(1.0, 0.0)) <= 1e-12);

  for (uint32_t q = 1; q <= 200; ++q) {
    for (const auto& chi : arith::characters_mod(q)) {
      if (!chi.is_primitive()) continue;
      Complex gs = arith::gauss_sum(chi);
      REQUIRE(std::abs(std::norm(gs) - double(q)) <= 1e-10 * q);
    }
  }
}

TEST_CASE("epsilon factors") {
  DirichletCharacter chi4(4, 3);
  CHECK(std::abs(arith::epsilon_factor(chi4) - Complex(1.0, 0.0)) <= 1e-12);
  CHECK(std::abs(arith::epsilon_factor(DirichletCharacter(1, 1)) - Complex(1.0, 0.0)) <=
        1e-12);
  for (const auto& chi : arith::characters_mod(7)) {
    if (!chi.is_primitive()) continue;
    CHECK(std::abs(std::abs(arith::epsilon_factor(chi)) - 1.0) <= 1e-10);
  }
  DirichletCharacter induced(8, 7);  // conductor 4 inside modulus 8
  REQUIRE(!induced.is_primitive());
  CHECK_THROWS_AS(arith::epsilon_factor(induced), std::domain_error);
}

TEST_CASE("conjugate and primitive part") {
  DirichletCharacter chi5(5, 2);
  auto bar = chi5.conjugate();
  CHECK(bar.conrey_index() == 3);  // 2 * 3 = 6 = 1 mod 5
  for (int n = 0; n < 5; ++n)
    CHECK(std::abs(bar.value(n) - std::conj(chi5.value(n))) <= 1e-15);

  for (const auto& chi : arith::characters_mod(24)) {
    if (chi.is_primitive()) continue;
    auto prim = chi.primitive_part();  // internally verified
    CHECK(prim.modulus() == chi.conductor());
    CHECK(prim.is_primitive());
  }
}

TEST_CASE("values are exact roots of unity with consistent angles") {
  for (uint32_t q : {3u, 5u, 7u, 9u, 16u, 40u}) {
    for (const auto& chi : arith::characters_mod(q)) {
      for (uint32_t n = 0; n < q; ++n) {
        auto ang = chi.angle(n);
        if (!ang) {
          CHECK(chi.value(n) == Complex(0.0, 0.0));
          continue;
        }
        auto [num, den] = *ang;
        double theta = 2.0 * std::numbers::pi * double(num) / double(den);
        CHECK(std::abs(chi.value(n) - std::polar(1.0, theta)) <= 1e-13);
        CHECK(std::abs(std::abs(chi.value(n)) - 1.0) <= 1e-13);
      }
    }
  }
}

TEST_CASE("invalid conrey index") {
  CHECK_THROWS_AS(DirichletCharacter(8, 2), std::invalid_argument);
  CHECK_THROWS_AS(DirichletCharacter(8, 4), std::invalid_argument);
  CHECK_THROWS_AS(arith::characters_mod(0), std::invalid_argument);
}
