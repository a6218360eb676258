#include "rieszl/riesz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rieszl/errors.hpp"
#include "rieszl/lfunc.hpp"
#include "rieszl/special.hpp"

namespace rieszl::riesz {

namespace {

constexpr long kRawCap = 5'000'000;
constexpr long kSubtractCap = 3'000'000;
constexpr double kSubtractionMaxX = 40.0;

void validate(const RieszParams& p) {
  if (!(p.k >= 1.0))
    throw std::domain_error("riesz: k >= 1 required by the series hypotheses");
  if (!(p.ell > 0.0)) throw std::invalid_argument("riesz: ell must be > 0");
  if (!(p.x > 0.0)) throw std::invalid_argument("riesz: x must be > 0");
}

// sum_{n > N} n^{-s} <= N^{1-s}/(s-1) for s > 1
double zeta_tail(double s, double n) {
  if (s <= 1.0) return std::numeric_limits<double>::infinity();
  return std::pow(n, 1.0 - s) / (s - 1.0);
}

// 1/L with the principal pole at s = 1 mapped to 0 (the reciprocal
// series sum mu(n) chi(n) n^{-1} converges to 0 there).
Complex inv_l(const DirichletCharacter& chi, double s) {
  try {
    return 1.0 / lfunc::l_value(chi, Complex(s, 0.0));
  } catch (const pole_error&) {
    return Complex(0.0, 0.0);
  }
}

// R_M(y) = e^{-y} - sum_{m<M} (-y)^m/m!
double exp_remainder(double y, int m_sub) {
  if (m_sub == 0) return std::exp(-y);
  if (y < 0.5 * (m_sub + 1)) {
    // ascending series from the first kept power
    double term = 1.0;
    for (int m = 1; m <= m_sub; ++m) term *= -y / m;
    double sum = 0.0;
    for (int m = m_sub; m < m_sub + 80; ++m) {
      sum += term;
      term *= -y / (m + 1);
      if (std::abs(term) < 1e-20 * (std::abs(sum) + 1e-300)) break;
    }
    return sum;
  }
  double partial = 0.0, t = 1.0;
  for (int m = 0; m < m_sub; ++m) {
    partial += t;
    t *= -y / (m + 1);
  }
  return std::exp(-y) - partial;
}

struct Plan {
  int m_sub = 0;
  long n_terms = 0;
  double bound = 0.0;
};

// Smallest M whose zeta tail reaches the target within the term cap,
// then grow M while that stays cheap and the peeled powers stay small
// enough not to eat the mantissa.
Plan plan_subtraction(const RieszParams& p, double target) {
  Plan best;
  best.m_sub = -1;
  double xm = 1.0;  // x^M / M!
  for (int m = 0; m <= 40; ++m) {
    double s = p.k + p.ell * m;
    if (s > 1.0) {
      // minimal N with xm * zeta_tail(s, N) <= target
      double need = xm / (target * (s - 1.0));
      double n = need <= 1.0 ? 1.0 : std::pow(need, 1.0 / (s - 1.0));
      if (n <= double(kSubtractCap)) {
        long nn = std::max<long>(16, static_cast<long>(std::ceil(n)));
        if (best.m_sub < 0) {
          best = {m, nn, xm * zeta_tail(s, double(nn))};
        } else if (nn < best.n_terms / 8 && xm <= 1e3) {
          best = {m, nn, xm * zeta_tail(s, double(nn))};
        }
      }
    }
    xm *= p.x / (m + 1);
    if (best.m_sub >= 0 && (xm > 1e3 || best.n_terms <= 100000)) break;
  }
  return best;
}

SeriesValue eval_raw(const DirichletCharacter& chi, const RieszParams& p,
                     long n_override) {
  long n_terms = n_override > 0
                     ? n_override
                     : std::max<long>(10000, 100 * static_cast<long>(std::ceil(std::pow(
                                                 p.x, 1.0 / p.ell))));
  n_terms = std::min(n_terms, kRawCap);
  auto mob = arith::shared_mobius(static_cast<uint32_t>(n_terms));

  Complex sum = 0.0;
  for (long n = 1; n <= n_terms; ++n) {
    int mu = mob->mu[n];
    if (mu == 0) continue;
    Complex cv = chi.value(n);
    if (cv == Complex(0.0, 0.0)) continue;
    double damp = p.x / std::pow(double(n), p.ell);
    if (damp > 745.0) continue;  // exp underflows to an exact 0
    sum += double(mu) * cv * std::pow(double(n), -p.k) * std::exp(-damp);
  }

  SeriesValue out;
  out.value = sum;
  out.terms = n_terms;
  out.powers_subtracted = 0;
  if (p.k > 1.0) {
    out.tail_bound = zeta_tail(p.k, double(n_terms));
  } else {
    // k = 1: the tail is only conditionally convergent; report the
    // partial-summation estimate under the desk-scale |S(t)| <= 3 sqrt(t)
    // envelope (heuristic, labeled as such)
    double f = std::pow(double(n_terms), 0.5 - p.k);
    double deriv = (p.k + p.x * p.ell * std::pow(double(n_terms), -p.ell)) /
                   (p.k - 0.5);
    out.tail_bound = 3.0 * f * (1.0 + deriv);
  }
  return out;
}

SeriesValue eval_subtracted(const DirichletCharacter& chi, const RieszParams& p,
                            const Plan& plan) {
  auto mob = arith::shared_mobius(static_cast<uint32_t>(plan.n_terms));

  // analytic part: sum_{m<M} (-x)^m / (m! L(k + l m))
  Complex analytic = 0.0;
  double coef = 1.0;
  for (int m = 0; m < plan.m_sub; ++m) {
    analytic += coef * inv_l(chi, p.k + p.ell * m);
    coef *= -p.x / (m + 1);
  }

  Complex rem = 0.0;
  for (long n = 1; n <= plan.n_terms; ++n) {
    int mu = mob->mu[n];
    if (mu == 0) continue;
    Complex cv = chi.value(n);
    if (cv == Complex(0.0, 0.0)) continue;
    double y = p.x / std::pow(double(n), p.ell);
    rem += double(mu) * cv * std::pow(double(n), -p.k) * exp_remainder(y, plan.m_sub);
  }

  SeriesValue out;
  out.value = analytic + rem;
  out.terms = plan.n_terms;
  out.powers_subtracted = plan.m_sub;
  out.tail_bound = plan.bound;
  return out;
}

}  // namespace

SeriesValue p_series_direct(const DirichletCharacter& chi, const RieszParams& params,
                            const EvalPolicy& policy) {
  validate(params);
  if (policy.force_raw || params.x > kSubtractionMaxX)
    return eval_raw(chi, params, policy.n_override);
  Plan plan = plan_subtraction(params, policy.tail_target);
  if (plan.m_sub < 0) return eval_raw(chi, params, policy.n_override);
  return eval_subtracted(chi, params, plan);
}

Complex p_series_power(const DirichletCharacter& chi, const RieszParams& params) {
  validate(params);
  if (params.x > 30.0)
    throw precision_error(
        "p_series_power: x > 30 loses the alternating sum to cancellation");
  Complex sum = 0.0;
  double max_mag = 0.0;
  double coef = 1.0;  // (-x)^m / m!
  for (int m = 0; m <= 400; ++m) {
    Complex term = coef * inv_l(chi, params.k + params.ell * m);
    sum += term;
    max_mag = std::max(max_mag, std::abs(sum));
    if (std::abs(coef) < 1e-16 * (max_mag + 1e-300) && m > params.x) return sum;
    coef *= -params.x / (m + 1);
  }
  return sum;
}

double exp_reconstruction_residual(const DirichletCharacter& chi, double k,
                                   double ell, double x) {
  validate({k, ell, x});
  if (x > 30.0)
    throw precision_error("exp_reconstruction_residual: 0 < x <= 30 required");

  const long N = 10000;
  const uint32_t q = chi.modulus();
  auto mob = arith::shared_mobius(N);

  // cached 1/L(k + l m) for every power that matters at this x
  std::vector<Complex> invl;
  double coef = 1.0;
  for (int m = 0; m <= 400; ++m) {
    invl.push_back(inv_l(chi, k + ell * m));
    coef *= x / (m + 1);
    if (coef < 1e-20 && m > x) break;
  }
  const int m_max = static_cast<int>(invl.size());

  // head: sum_{n<=N} chi(n) n^{-k} P(x/n^l), P by the cached power series
  Complex head = 0.0;
  for (long n = 1; n <= N; ++n) {
    Complex cv = chi.value(n);
    if (cv == Complex(0.0, 0.0)) continue;
    double xn = x * std::pow(double(n), -ell);
    Complex p = 0.0;
    double c = 1.0;
    for (int m = 0; m < m_max; ++m) {
      p += c * invl[m];
      c *= -xn / (m + 1);
      if (std::abs(c) < 1e-18 && m > xn) break;
    }
    head += cv * std::pow(double(n), -k) * p;
  }

  // analytic tail: sum_m (-x)^m/m! invl[m] * sum_{n>N} chi(n) n^{-(k+lm)}
  Complex tail = 0.0;
  coef = 1.0;
  for (int m = 0; m < m_max; ++m) {
    double s = k + ell * m;
    Complex t = 0.0;
    for (uint32_t r = 1; r <= q; ++r) {
      Complex cv = chi.value(r);
      if (cv == Complex(0.0, 0.0)) continue;
      long m0 = (N - long(r)) / long(q) + 1;
      t += cv * special::hurwitz_zeta_general(Complex(s, 0.0), double(m0) + double(r) / q);
    }
    t *= std::pow(double(q), -s);
    tail += coef * invl[m] * t;
    coef *= -x / (m + 1);
  }

  return std::abs(head + tail - std::exp(-x));
}

DecayFit decay_fit(const DirichletCharacter& chi, double k, double ell,
                   const std::vector<double>& x_grid) {
  if (x_grid.size() < 8)
    throw std::invalid_argument("decay_fit: need at least 8 grid points");
  for (size_t i = 0; i < x_grid.size(); ++i) {
    if (x_grid[i] < 10.0)
      throw std::invalid_argument("decay_fit: grid points must be >= 10");
    if (i && x_grid[i] <= x_grid[i - 1])
      throw std::invalid_argument("decay_fit: grid must be strictly increasing");
  }
  if (x_grid.back() / x_grid.front() < 999.0)
    throw std::invalid_argument("decay_fit: grid must span at least 3 decades");

  DecayFit fit;
  fit.params = {k, ell, x_grid.front()};
  fit.q = chi.modulus();
  fit.conrey = chi.conrey_index();
  fit.x_grid = x_grid;
  fit.predicted_slope = -k / ell + 1.0 / (2.0 * ell);

  fit.p_abs.reserve(x_grid.size());
  for (double x : x_grid)
    fit.p_abs.push_back(std::abs(p_series_direct(chi, {k, ell, x}).value));

  fit.envelope.assign(x_grid.size(), 0.0);
  double running = 0.0;
  for (size_t i = x_grid.size(); i-- > 0;) {
    running = std::max(running, fit.p_abs[i]);
    fit.envelope[i] = running;
  }
  if (fit.envelope.front() <= 0.0)
    throw precision_error("decay_fit: |P| underflowed on the whole grid");

  // least squares of log envelope against log x over the nonzero part
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  long n = 0;
  for (size_t i = 0; i < x_grid.size(); ++i) {
    if (fit.envelope[i] <= 0.0) break;
    double lx = std::log(x_grid[i]), ly = std::log(fit.envelope[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  double denom = n * sxx - sx * sx;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  double rss = 0.0;
  for (long i = 0; i < n; ++i) {
    double r = std::log(fit.envelope[i]) -
               (fit.intercept + fit.slope * std::log(x_grid[i]));
    rss += r * r;
  }
  fit.residual_norm = std::sqrt(rss);
  return fit;
}

}  // namespace rieszl::riesz
