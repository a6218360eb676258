#ifndef RIESZL_SPECIAL_HPP
#define RIESZL_SPECIAL_HPP

#include <complex>
#include <vector>

namespace rieszl::special {

using Complex = std::complex<double>;

struct PrecisionPolicy {
  double target_abs_tol = 1e-13;
  double target_rel_tol = 1e-12;
  long max_terms = 1'000'000;
};

// Complex gamma via Stirling asymptotics with upward recurrence, and the
// reflection formula for Re s < 1/2.  Throws pole_error at non-positive
// integers and precision_error outside the guarded region.
Complex gamma_complex(Complex s);
Complex log_gamma_complex(Complex s);  // a branch of log Gamma; exp of it is Gamma

// Kummer's confluent hypergeometric 1F1(a; b; z).  Ascending series with
// term-ratio stopping; for Re z < 0 the Kummer transformation
// 1F1(a;b;z) = e^z 1F1(b-a;b;-z) avoids cancellation.
Complex kummer_1f1(Complex a, Complex b, Complex z,
                   const PrecisionPolicy& policy = {});

// Hurwitz zeta(s, alpha) for alpha in (0,1], Euler-Maclaurin with
// N = max(15, ceil|Im s|) summed terms and 12 Bernoulli corrections.
Complex hurwitz_zeta(Complex s, double alpha,
                     const PrecisionPolicy& policy = {});

// d/ds of hurwitz_zeta, every Euler-Maclaurin term differentiated in s.
Complex hurwitz_zeta_ds(Complex s, double alpha,
                        const PrecisionPolicy& policy = {});

// Same Euler-Maclaurin evaluation without the (0,1] restriction on
// alpha; used for analytic tails sum_{n>N} (n+alpha)^{-s}.
Complex hurwitz_zeta_general(Complex s, double alpha);

// psi(x) for real x > 0 (recurrence + Stirling).
double digamma_real(double x);

// B_0..B_count by the exact rational recurrence, rendered to double.
// count <= 60.
std::vector<double> bernoulli_numbers(int count);

}  // namespace rieszl::special

#endif  // RIESZL_SPECIAL_HPP
