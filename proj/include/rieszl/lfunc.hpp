#ifndef RIESZL_LFUNC_HPP
#define RIESZL_LFUNC_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "rieszl/arith.hpp"

namespace rieszl::lfunc {

using arith::Complex;
using arith::DirichletCharacter;

// Ordered critical-line ordinates for one character.  rho = 1/2 + i*gamma.
struct ZeroList {
  uint32_t q = 1;
  uint32_t conrey = 1;
  std::vector<double> gammas;  // strictly increasing, signed
  double height = 0.0;         // T: the band |gamma| <= T this list covers
  enum class Provenance { computed, ingested } provenance = Provenance::computed;
  bool completeness_flag = false;
  std::vector<std::string> warnings;

  // zeros of L(s, conj chi) are the negated ordinates
  ZeroList conjugated() const;
};

// L(s, chi) by the Hurwitz decomposition q^{-s} sum_r chi(r) zeta(s, r/q);
// routed through the functional equation for Re s < 0 and near s = 1,
// and through the digamma formula at s = 1 exactly.
Complex l_value(const DirichletCharacter& chi, Complex s);

// L'(s, chi) = -log q L(s, chi) + q^{-s} sum_r chi(r) zeta'(s, r/q),
// supported for Re s >= -5.
Complex l_derivative(const DirichletCharacter& chi, Complex s);

// L'(-a, chi) for primitive chi of conductor q > 1 by the closed form
// a! q^a G(chi) / (2^{a+1} pi^a i^a) * L(1+a, conj chi).
Complex l_prime_trivial_zero(const DirichletCharacter& chi);

// Lambda(s, chi) = (q/pi)^{(s+a)/2} Gamma((s+a)/2) L(s, chi), primitive chi.
Complex completed_lambda(const DirichletCharacter& chi, Complex s);

// | Lambda(s,chi) - eps(chi) (q/pi)^{(1-s+a)/2} Gamma((1-s+a)/2) L(1-s,conj chi) |
// relative to |Lambda(s,chi)|.
double functional_equation_residual(const DirichletCharacter& chi, Complex s);

// Real-valued rotated completed function on the critical line:
// eps(chi)^{-1/2} Lambda(1/2 + it, chi) * exp(pi |t| / 4).
// Real for every primitive chi; sign changes locate zeros.
double hardy_z(const DirichletCharacter& chi, double t);

// Sign-change scan (step 0.05) plus bisection; zeros validated by
// |L(1/2 + i gamma)| <= 1e-8 and certified against the argument
// principle.  For real chi the scan covers [0,T] and mirrors.
ZeroList find_zeros(const DirichletCharacter& chi, double T);

// Winding number of the completed function around the rectangle
// [-1/2, 3/2] x [-T, T]; T is perturbed by up to 0.01 if a zero sits on
// the contour.  For q = 1 the pole-free xi(s) is used.
int zero_count_argument_principle(const DirichletCharacter& chi, double T);

}  // namespace rieszl::lfunc

#endif  // RIESZL_LFUNC_HPP
