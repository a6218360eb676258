#ifndef RIESZL_RIESZ_HPP
#define RIESZL_RIESZ_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "rieszl/arith.hpp"

namespace rieszl::riesz {

using arith::Complex;
using arith::DirichletCharacter;

// Configuration of P_{k,l,chi}(x) = sum chi(n) mu(n) n^{-k} exp(-x/n^l).
struct RieszParams {
  double k = 2.0;    // >= 1
  double ell = 2.0;  // > 0
  double x = 1.0;    // > 0
};

struct EvalPolicy {
  // override the truncation target for quadrature-grade evaluations
  double tail_target = 1e-16;
  bool force_raw = false;  // skip the exponential-remainder subtraction
  long n_override = 0;     // fixed N for the raw sum (0 = automatic)
};

struct SeriesValue {
  Complex value{};
  double tail_bound = 0.0;    // truncation bound; heuristic for k = 1 raw sums
  long terms = 0;             // N actually summed
  int powers_subtracted = 0;  // M analytic powers peeled off (0 = raw sum)
};

// Direct evaluation of P.  For small x the truncated exponential
// remainder R_M(y) = e^{-y} - sum_{m<M} (-y)^m / m! is summed against
// the sieve while the first M power terms go through 1/L(k + l m, chi);
// for large x the damped sum is taken raw with N = max(1e4, 100 x^{1/l}).
SeriesValue p_series_direct(const DirichletCharacter& chi, const RieszParams& params,
                            const EvalPolicy& policy = {});

// Power-series route P = sum_m (-x)^m / (m! L(k + l m, chi)), x <= 30.
Complex p_series_power(const DirichletCharacter& chi, const RieszParams& params);

// | sum_{n} chi(n) n^{-k} P(x/n^l) - e^{-x} | with the n > 1e4 tail
// carried analytically.  0 < x <= 30.
double exp_reconstruction_residual(const DirichletCharacter& chi, double k,
                                   double ell, double x);

struct DecayFit {
  RieszParams params;
  uint32_t q = 1;
  uint32_t conrey = 1;
  std::vector<double> x_grid;
  std::vector<double> p_abs;     // |P| at each grid point
  std::vector<double> envelope;  // running maximum from the right
  double slope = 0.0;
  double intercept = 0.0;
  double residual_norm = 0.0;
  double predicted_slope = 0.0;  // -k/l + 1/(2l)
};

// Least-squares slope of log envelope(|P|) against log x.
DecayFit decay_fit(const DirichletCharacter& chi, double k, double ell,
                   const std::vector<double>& x_grid);

}  // namespace rieszl::riesz

#endif  // RIESZL_RIESZ_HPP
