#ifndef RIESZL_ARITH_HPP
#define RIESZL_ARITH_HPP

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace rieszl::arith {

using Complex = std::complex<double>;

// mu[n] for 1 <= n <= limit; mu[0] is unused and set to 0.
struct MobiusTable {
  uint32_t limit = 0;
  std::vector<int8_t> mu;

  int operator()(uint64_t n) const { return n <= limit ? mu[n] : 0; }
};

// Linear sieve; throws std::invalid_argument for limit == 0 and
// resource_error above the 1e8 memory guard.
MobiusTable mobius_sieve(uint32_t limit);

// Process-wide table, grown on demand (guarded by a mutex).  Holders of
// the returned pointer keep their snapshot alive across later growth.
std::shared_ptr<const MobiusTable> shared_mobius(uint32_t at_least);

uint64_t gcd_u64(uint64_t a, uint64_t b);
uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t mod);
uint64_t mod_inverse(uint64_t a, uint64_t mod);
std::vector<std::pair<uint32_t, uint32_t>> factorize(uint32_t n);
uint32_t euler_phi(uint32_t n);

namespace detail {
struct CharacterGroup;  // per-modulus discrete-log tables, shared
}

// A Dirichlet character mod q identified by its Conrey index.
// Values are stored as exact exponents num/den of exp(2*pi*i*num/den)
// plus a rendered complex table; both immutable after construction.
class DirichletCharacter {
 public:
  DirichletCharacter(uint32_t q, uint32_t conrey_index);

  static DirichletCharacter principal(uint32_t q) {
    return DirichletCharacter(q, 1);
  }

  uint32_t modulus() const { return q_; }
  uint32_t conrey_index() const { return conrey_; }
  int parity() const { return parity_; }  // a: 0 even, 1 odd
  uint32_t conductor() const { return conductor_; }
  bool is_primitive() const { return conductor_ == q_; }
  bool is_principal() const { return order_ == 1; }
  bool is_real() const { return order_ <= 2; }
  uint32_t order() const { return order_; }

  Complex value(int64_t n) const;
  const std::vector<Complex>& values() const { return values_; }

  // Exact angle of chi(n) as a reduced fraction of a full turn;
  // nullopt when gcd(n, q) > 1.
  std::optional<std::pair<int64_t, int64_t>> angle(int64_t n) const;

  DirichletCharacter conjugate() const;

  // The primitive character mod conductor() inducing this one.
  DirichletCharacter primitive_part() const;

 private:
  DirichletCharacter() = default;

  uint32_t q_ = 1;
  uint32_t conrey_ = 1;
  int parity_ = 0;
  uint32_t conductor_ = 1;
  uint32_t order_ = 1;
  std::shared_ptr<const detail::CharacterGroup> group_;
  std::vector<int64_t> angle_num_;  // angle numerator per residue, -1 marks chi=0
  int64_t angle_den_ = 1;
  std::vector<Complex> values_;
};

// All phi(q) characters mod q, ordered by Conrey index.
std::vector<DirichletCharacter> characters_mod(uint32_t q);

// G(chi) = sum_{n=1..q} chi(n) exp(2*pi*i*n/q), direct summation.
Complex gauss_sum(const DirichletCharacter& chi);

// epsilon(chi) = G(chi) / (i^a sqrt(q)); requires chi primitive.
Complex epsilon_factor(const DirichletCharacter& chi);

}  // namespace rieszl::arith

#endif  // RIESZL_ARITH_HPP
