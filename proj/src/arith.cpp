#include "rieszl/arith.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "rieszl/errors.hpp"

namespace rieszl::arith {

namespace {
constexpr uint32_t kSieveGuard = 100'000'000;
}

MobiusTable mobius_sieve(uint32_t limit) {
  if (limit == 0) throw std::invalid_argument("mobius_sieve: limit must be >= 1");
  if (limit > kSieveGuard) throw resource_error("mobius_sieve: limit exceeds 1e8 guard");

  MobiusTable t;
  t.limit = limit;
  t.mu.assign(static_cast<size_t>(limit) + 1, 0);
  t.mu[1] = 1;

  std::vector<uint32_t> primes;
  std::vector<uint8_t> composite(static_cast<size_t>(limit) + 1, 0);
  for (uint32_t i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      t.mu[i] = -1;
    }
    for (uint32_t p : primes) {
      uint64_t ip = static_cast<uint64_t>(i) * p;
      if (ip > limit) break;
      composite[ip] = 1;
      if (i % p == 0) {
        t.mu[ip] = 0;  // squared factor
        break;
      }
      t.mu[ip] = static_cast<int8_t>(-t.mu[i]);
    }
  }
  return t;
}

std::shared_ptr<const MobiusTable> shared_mobius(uint32_t at_least) {
  static std::mutex mtx;
  static std::shared_ptr<const MobiusTable> table;
  std::lock_guard<std::mutex> lock(mtx);
  if (!table || table->limit < at_least) {
    uint32_t prev = table ? table->limit : 0;
    uint32_t want = std::max(at_least, std::max(prev, 1u << 15) * 2u);
    table = std::make_shared<const MobiusTable>(mobius_sieve(std::min(want, 100'000'000u)));
  }
  return table;
}

uint64_t gcd_u64(uint64_t a, uint64_t b) { return std::gcd(a, b); }

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t mod) {
  if (mod == 1) return 0;
  uint64_t r = 1;
  base %= mod;
  while (exp) {
    if (exp & 1) r = (__uint128_t)r * base % mod;
    base = (__uint128_t)base * base % mod;
    exp >>= 1;
  }
  return r;
}

uint64_t mod_inverse(uint64_t a, uint64_t mod) {
  int64_t t = 0, newt = 1;
  int64_t r = static_cast<int64_t>(mod), newr = static_cast<int64_t>(a % mod);
  while (newr != 0) {
    int64_t quot = r / newr;
    std::swap(t -= quot * newt, newt);
    std::swap(r -= quot * newr, newr);
  }
  if (r != 1) throw std::invalid_argument("mod_inverse: not invertible");
  return static_cast<uint64_t>(t < 0 ? t + static_cast<int64_t>(mod) : t);
}

std::vector<std::pair<uint32_t, uint32_t>> factorize(uint32_t n) {
  std::vector<std::pair<uint32_t, uint32_t>> f;
  for (uint32_t p = 2; static_cast<uint64_t>(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      uint32_t e = 0;
      while (n % p == 0) n /= p, ++e;
      f.emplace_back(p, e);
    }
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

uint32_t euler_phi(uint32_t n) {
  uint32_t phi = 1;
  for (auto [p, e] : factorize(n)) {
    uint32_t pe = 1;
    for (uint32_t i = 1; i < e; ++i) pe *= p;
    phi *= pe * (p - 1);
  }
  return phi;
}

namespace detail {

// One prime-power factor of q with its discrete-log tables.
// Odd p and 2^e with e <= 2 are cyclic; 2^e with e >= 3 uses the
// generators -1 and 5.
struct Component {
  uint32_t p = 0, e = 0, pe = 1;
  uint32_t phi = 1;
  bool two_adic = false;       // p == 2 && e >= 3
  uint32_t generator = 0;      // cyclic case
  std::vector<int32_t> dlog;   // cyclic: index of u in <g>, -1 for non-units
  std::vector<int32_t> dlog0;  // two-adic: exponent of -1 (0/1)
  std::vector<int32_t> dlog1;  // two-adic: exponent of 5 in [0, 2^{e-2})
};

struct CharacterGroup {
  uint32_t q = 1;
  std::vector<Component> components;
  int64_t angle_den = 1;  // lcm of component orders
};

namespace {

bool is_primitive_root(uint64_t g, uint32_t p) {
  // order of g mod p divides p-1; primitive iff g^((p-1)/r) != 1 for all
  // prime factors r of p-1
  uint32_t m = p - 1;
  for (auto [r, e] : factorize(m)) {
    (void)e;
    if (mod_pow(g, m / r, p) == 1) return false;
  }
  return true;
}

// Conrey generator: smallest g that is a primitive root mod p and mod p^2.
uint32_t conrey_generator(uint32_t p) {
  for (uint32_t g = 2;; ++g) {
    if (!is_primitive_root(g, p)) continue;
    uint64_t p2 = static_cast<uint64_t>(p) * p;
    if (mod_pow(g, p - 1, p2) == 1) continue;
    return g;
  }
}

Component make_component(uint32_t p, uint32_t e) {
  Component c;
  c.p = p;
  c.e = e;
  c.pe = 1;
  for (uint32_t i = 0; i < e; ++i) c.pe *= p;
  c.phi = (p == 2) ? (e == 1 ? 1 : c.pe / 2) : c.pe / p * (p - 1);

  if (p == 2 && e >= 3) {
    c.two_adic = true;
    uint32_t half = c.pe / 4;  // order of 5 mod 2^e
    c.dlog0.assign(c.pe, -1);
    c.dlog1.assign(c.pe, -1);
    for (uint32_t s = 0; s < 2; ++s) {
      uint64_t u = (s == 0) ? 1 : c.pe - 1;
      for (uint32_t b = 0; b < half; ++b) {
        c.dlog0[u] = static_cast<int32_t>(s);
        c.dlog1[u] = static_cast<int32_t>(b);
        u = u * 5 % c.pe;
      }
    }
    return c;
  }

  c.dlog.assign(c.pe, -1);
  if (c.phi == 1) {
    c.dlog[c.pe == 1 ? 0 : 1] = 0;  // pe = 1 or 2
    c.generator = 1;
    return c;
  }
  c.generator = (p == 2) ? 3 /* pe == 4 */ : conrey_generator(p);
  uint64_t u = 1;
  for (uint32_t b = 0; b < c.phi; ++b) {
    c.dlog[u] = static_cast<int32_t>(b);
    u = u * c.generator % c.pe;
  }
  return c;
}

std::shared_ptr<const CharacterGroup> make_group(uint32_t q) {
  auto g = std::make_shared<CharacterGroup>();
  g->q = q;
  int64_t den = 1;
  for (auto [p, e] : factorize(q)) {
    Component c = make_component(p, e);
    if (c.two_adic) {
      den = std::lcm(den, int64_t{2});
      den = std::lcm(den, static_cast<int64_t>(c.pe / 4));
    } else if (c.phi > 1) {
      den = std::lcm(den, static_cast<int64_t>(c.phi));
    }
    g->components.push_back(std::move(c));
  }
  g->angle_den = den;
  return g;
}

int64_t v2(int64_t n) {
  int64_t v = 0;
  while (n % 2 == 0) n /= 2, ++v;
  return v;
}

}  // namespace
}  // namespace detail

DirichletCharacter::DirichletCharacter(uint32_t q, uint32_t conrey_index) {
  if (q == 0) throw std::invalid_argument("DirichletCharacter: q must be >= 1");
  if (q > 1) {
    conrey_index %= q;
    if (conrey_index == 0 || gcd_u64(conrey_index, q) != 1)
      throw std::invalid_argument("DirichletCharacter: conrey index not coprime to modulus");
  }

  q_ = q;
  conrey_ = q == 1 ? 1 : conrey_index;
  group_ = detail::make_group(q);
  angle_den_ = group_->angle_den;
  angle_num_.assign(q_, -1);
  values_.assign(q_, Complex(0.0, 0.0));

  if (q_ == 1) {
    angle_num_[0] = 0;
    values_[0] = 1.0;
    parity_ = 0;
    conductor_ = 1;
    order_ = 1;
    return;
  }

  // Conrey exponents of the index in each component, and the conductor
  // as a product of component conductors.
  struct Exps {
    int64_t t = 0;            // cyclic
    int64_t t0 = 0, t1 = 0;   // two-adic
  };
  std::vector<Exps> exps;
  uint64_t conductor = 1;
  uint32_t order = 1;
  for (const auto& c : group_->components) {
    Exps ex;
    uint32_t m = conrey_ % c.pe;
    if (c.two_adic) {
      ex.t0 = c.dlog0[m];
      ex.t1 = c.dlog1[m];
      int64_t half = c.pe / 4;
      if (ex.t1 == 0) {
        conductor *= (ex.t0 == 0) ? 1 : 4;
        order = std::lcm(order, ex.t0 == 0 ? 1u : 2u);
      } else {
        conductor *= c.pe >> detail::v2(ex.t1);
        uint32_t ord1 = static_cast<uint32_t>(half / std::gcd(ex.t1, half));
        order = std::lcm(order, std::lcm(ord1, ex.t0 ? 2u : 1u));
      }
    } else {
      ex.t = c.phi == 1 ? 0 : c.dlog[m];
      int64_t d = c.phi / std::gcd<int64_t>(ex.t, c.phi);  // character order
      order = std::lcm(order, static_cast<uint32_t>(d));
      if (d == 1) {
        // principal component
      } else if (c.p == 2) {
        conductor *= 4;  // pe == 4, d == 2
      } else {
        // d = p^j * d' with d' | (p-1); conductor exponent is j+1
        int64_t j = 0, dd = d;
        while (dd % c.p == 0) dd /= c.p, ++j;
        uint64_t f = c.p;
        for (int64_t i = 0; i < j; ++i) f *= c.p;
        conductor *= f;
      }
    }
    exps.push_back(ex);
  }
  conductor_ = static_cast<uint32_t>(conductor);
  order_ = order;

  // Angle table: chi(n) = exp(2 pi i * num/den), summed over components.
  for (uint32_t n = 0; n < q_; ++n) {
    if (gcd_u64(n, q_) != 1) continue;
    int64_t num = 0;
    for (size_t i = 0; i < group_->components.size(); ++i) {
      const auto& c = group_->components[i];
      const auto& ex = exps[i];
      uint32_t r = n % c.pe;
      if (c.two_adic) {
        int64_t b0 = c.dlog0[r], b1 = c.dlog1[r];
        int64_t half = c.pe / 4;
        num += ex.t0 * b0 % 2 * (angle_den_ / 2);
        num += ex.t1 * b1 % half * (angle_den_ / half);
      } else if (c.phi > 1) {
        int64_t b = c.dlog[r];
        num += ex.t * b % c.phi * (angle_den_ / c.phi);
      }
      num %= angle_den_;
    }
    num = ((num % angle_den_) + angle_den_) % angle_den_;
    angle_num_[n] = num;
    double theta = 2.0 * std::numbers::pi * static_cast<double>(num) /
                   static_cast<double>(angle_den_);
    values_[n] = Complex(std::cos(theta), std::sin(theta));
    // exact values for the 4th roots of unity that dominate small moduli
    if (num == 0) values_[n] = 1.0;
    if (2 * num == angle_den_) values_[n] = -1.0;
    if (4 * num == angle_den_) values_[n] = Complex(0.0, 1.0);
    if (4 * num == 3 * angle_den_) values_[n] = Complex(0.0, -1.0);
  }

  parity_ = (q_ <= 2) ? 0 : (2 * angle_num_[q_ - 1] == angle_den_ ? 1 : 0);
}

Complex DirichletCharacter::value(int64_t n) const {
  int64_t r = n % static_cast<int64_t>(q_);
  if (r < 0) r += q_;
  return values_[static_cast<size_t>(r)];
}

std::optional<std::pair<int64_t, int64_t>> DirichletCharacter::angle(int64_t n) const {
  int64_t r = n % static_cast<int64_t>(q_);
  if (r < 0) r += q_;
  int64_t num = angle_num_[static_cast<size_t>(r)];
  if (num < 0) return std::nullopt;
  int64_t g = std::gcd(num, angle_den_);
  if (num == 0) return std::make_pair(int64_t{0}, int64_t{1});
  return std::make_pair(num / g, angle_den_ / g);
}

DirichletCharacter DirichletCharacter::conjugate() const {
  if (q_ == 1) return *this;
  return DirichletCharacter(q_, static_cast<uint32_t>(mod_inverse(conrey_, q_)));
}

DirichletCharacter DirichletCharacter::primitive_part() const {
  if (is_primitive()) return *this;
  DirichletCharacter prim(conductor_, conrey_ % conductor_);
  // Conrey labels are reduction-compatible; verify on the coprime classes.
  for (uint32_t n = 1; n < q_; ++n) {
    if (gcd_u64(n, q_) != 1) continue;
    if (std::abs(prim.value(n) - values_[n]) > 1e-12)
      throw std::logic_error("primitive_part: induced values disagree");
  }
  return prim;
}

std::vector<DirichletCharacter> characters_mod(uint32_t q) {
  if (q == 0) throw std::invalid_argument("characters_mod: q must be >= 1");
  std::vector<DirichletCharacter> out;
  if (q == 1) {
    out.emplace_back(1, 1);
    return out;
  }
  for (uint32_t m = 1; m < q; ++m)
    if (gcd_u64(m, q) == 1) out.emplace_back(q, m);
  return out;
}

Complex gauss_sum(const DirichletCharacter& chi) {
  const uint32_t q = chi.modulus();
  Complex s = 0.0;
  for (uint32_t n = 1; n <= q; ++n) {
    Complex v = chi.value(n);
    if (v == Complex(0.0, 0.0)) continue;
    double theta = 2.0 * std::numbers::pi * static_cast<double>(n) / q;
    s += v * Complex(std::cos(theta), std::sin(theta));
  }
  return s;
}

Complex epsilon_factor(const DirichletCharacter& chi) {
  if (!chi.is_primitive())
    throw std::domain_error("epsilon_factor: character must be primitive");
  Complex ipow_a = chi.parity() == 0 ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
  return gauss_sum(chi) / (ipow_a * std::sqrt(static_cast<double>(chi.modulus())));
}

}  // namespace rieszl::arith
