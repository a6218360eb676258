#include "rieszl/special.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rieszl/errors.hpp"

namespace rieszl::special {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogSqrt2Pi = 0.91893853320467274178032973640562;

// Region guards.  The spec's accuracy contracts are stated on smaller
// boxes; these rails mark where the schemes themselves stay sound
// (find_zeros needs |Im| up to 200, power-series L-values need large
// real s).
constexpr double kGammaImMax = 260.0;
constexpr double kGammaReMin = -80.0;
constexpr double kGammaReMax = 180.0;
constexpr double kHurwitzImMax = 260.0;
constexpr double kHurwitzReMin = -30.0;
constexpr double kHurwitzReMax = 1e5;
constexpr double k1F1AbsMax = 500.0;

bool near_nonpositive_integer(Complex z, double tol, long* which) {
  if (z.real() > 0.5) return false;
  double r = std::round(z.real());
  if (r > 0.5) return false;
  if (std::abs(z.real() - r) <= tol && std::abs(z.imag()) <= tol) {
    if (which) *which = static_cast<long>(r);
    return true;
  }
  return false;
}

// Stirling series for log Gamma, valid after shifting |w| up; the
// Bernoulli coefficients B_{2k}/(2k(2k-1)) are fixed at 15 terms.
Complex log_gamma_stirling(Complex w) {
  static const std::vector<double> b = bernoulli_numbers(30);
  Complex lg = (w - 0.5) * std::log(w) - w + kLogSqrt2Pi;
  Complex w2 = w * w;
  Complex wp = w;
  for (int k = 1; k <= 15; ++k) {
    lg += b[2 * k] / (2.0 * k * (2.0 * k - 1.0)) / wp;
    wp *= w2;
  }
  return lg;
}

Complex log_gamma_main(Complex z) {
  // shift until the Stirling series is accurate
  Complex acc = 0.0;
  while (std::abs(z) < 14.0) {
    acc -= std::log(z);
    z += 1.0;
  }
  return log_gamma_stirling(z) + acc;
}

}  // namespace

Complex log_gamma_complex(Complex s) {
  long n = 0;
  if (near_nonpositive_integer(s, 1e-12, &n))
    throw pole_error("log_gamma: pole at non-positive integer", Complex(double(n), 0));
  if (std::abs(s.imag()) > kGammaImMax || s.real() < kGammaReMin ||
      s.real() > kGammaReMax)
    throw precision_error("log_gamma: argument outside guarded region");
  if (s.real() >= 0.5) return log_gamma_main(s);
  // reflection: Gamma(s) Gamma(1-s) = pi / sin(pi s); the branch of the
  // complex log is irrelevant to exp(log_gamma)
  return std::log(kPi) - std::log(std::sin(kPi * s)) - log_gamma_main(1.0 - s);
}

Complex gamma_complex(Complex s) {
  return std::exp(log_gamma_complex(s));
}

Complex kummer_1f1(Complex a, Complex b, Complex z, const PrecisionPolicy& policy) {
  long n = 0;
  if (near_nonpositive_integer(b, 1e-12, &n))
    throw std::domain_error("kummer_1f1: b is a non-positive integer");
  if (std::abs(z) > k1F1AbsMax)
    throw precision_error("kummer_1f1: |z| outside guarded region");

  Complex prefactor = 1.0;
  if (z.real() < 0.0) {  // Kummer transformation
    prefactor = std::exp(z);
    a = b - a;
    z = -z;
  }

  Complex sum = 1.0, term = 1.0;
  int small_streak = 0;
  for (long m = 0; m < policy.max_terms; ++m) {
    term *= (a + double(m)) / (b + double(m)) * z / (m + 1.0);
    sum += term;
    if (std::abs(term) < policy.target_abs_tol * (std::abs(sum) + 1e-300)) {
      if (++small_streak >= 3) return prefactor * sum;
    } else {
      small_streak = 0;
    }
  }
  throw precision_error("kummer_1f1: series did not converge within max_terms");
}

namespace {

// Euler-Maclaurin core shared by hurwitz_zeta and its derivative.
// For alpha > 1 the leading sum shrinks so that the expansion point
// N + alpha stays large enough.
struct EmSetup {
  int lead_terms;
  double expansion_point_offset;  // N in the formulas
};

int em_lead_terms(Complex s, double alpha) {
  int n = std::max(15, static_cast<int>(std::ceil(std::abs(s.imag()))));
  double have = alpha - 1.0;  // alpha already this far along
  int lead = static_cast<int>(std::ceil(std::max(0.0, n - have)));
  return lead;
}

void check_hurwitz_args(Complex s, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("hurwitz_zeta: alpha must be > 0");
  if (std::abs(s - Complex(1.0, 0.0)) < 1e-10)
    throw pole_error("hurwitz_zeta: pole at s = 1", Complex(1.0, 0.0));
  if (std::abs(s.imag()) > kHurwitzImMax || s.real() < kHurwitzReMin ||
      s.real() > kHurwitzReMax)
    throw precision_error("hurwitz_zeta: s outside guarded region");
}

Complex hurwitz_em(Complex s, double alpha) {
  const int lead = em_lead_terms(s, alpha);
  static const std::vector<double> bern = bernoulli_numbers(24);

  Complex sum = 0.0;
  for (int k = 0; k < lead; ++k) sum += std::exp(-s * std::log(k + alpha));

  const double big = lead + alpha;
  const Complex logbig = std::log(Complex(big, 0.0));
  sum += std::exp((1.0 - s) * logbig) / (s - 1.0);
  sum += 0.5 * std::exp(-s * logbig);

  // correction terms B_{2k}/(2k)! * (s)_{2k-1} * big^{-s-2k+1}
  Complex poch = s;  // (s)_1
  double fact = 1.0;
  for (int k = 1; k <= 12; ++k) {
    fact *= (2.0 * k) * (2.0 * k - 1.0);
    sum += bern[2 * k] / fact * poch * std::exp((-s - (2.0 * k - 1.0)) * logbig);
    poch *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);  // -> (s)_{2k+1}
  }
  return sum;
}

Complex hurwitz_em_ds(Complex s, double alpha) {
  const int lead = em_lead_terms(s, alpha);
  static const std::vector<double> bern = bernoulli_numbers(24);

  Complex sum = 0.0;
  for (int k = 0; k < lead; ++k) {
    double lg = std::log(k + alpha);
    sum += -lg * std::exp(-s * lg);
  }

  const double big = lead + alpha;
  const Complex lb = std::log(Complex(big, 0.0));
  // d/ds [ big^{1-s}/(s-1) ]
  sum += std::exp((1.0 - s) * lb) * (-lb / (s - 1.0) - 1.0 / ((s - 1.0) * (s - 1.0)));
  // d/ds [ big^{-s}/2 ]
  sum += -0.5 * lb * std::exp(-s * lb);

  // d/ds [ c_k (s)_{2k-1} big^{-s-2k+1} ]; the Pochhammer derivative is
  // accumulated by the product rule to stay finite at negative integers
  double fact = 1.0;
  for (int k = 1; k <= 12; ++k) {
    fact *= (2.0 * k) * (2.0 * k - 1.0);
    const int m = 2 * k - 1;
    Complex poch = 1.0, dpoch = 0.0;
    for (int j = 0; j < m; ++j) {
      dpoch = dpoch * (s + double(j)) + poch;
      poch *= s + double(j);
    }
    const Complex pw = std::exp((-s - double(m)) * lb);
    sum += bern[2 * k] / fact * (dpoch * pw - poch * lb * pw);
  }
  return sum;
}

}  // namespace

Complex hurwitz_zeta(Complex s, double alpha, const PrecisionPolicy&) {
  check_hurwitz_args(s, alpha);
  if (alpha > 1.0)
    throw std::invalid_argument("hurwitz_zeta: alpha must be in (0,1]");
  return hurwitz_em(s, alpha);
}

Complex hurwitz_zeta_ds(Complex s, double alpha, const PrecisionPolicy&) {
  check_hurwitz_args(s, alpha);
  if (alpha > 1.0)
    throw std::invalid_argument("hurwitz_zeta_ds: alpha must be in (0,1]");
  return hurwitz_em_ds(s, alpha);
}

Complex hurwitz_zeta_general(Complex s, double alpha) {
  check_hurwitz_args(s, alpha);
  return hurwitz_em(s, alpha);
}

double digamma_real(double x) {
  if (!(x > 0.0)) throw std::domain_error("digamma_real: x must be > 0");
  static const std::vector<double> bern = bernoulli_numbers(16);
  double acc = 0.0;
  while (x < 12.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  double r = std::log(x) - 0.5 / x;
  double x2 = x * x, xp = x2;
  for (int k = 1; k <= 8; ++k) {
    r -= bern[2 * k] / (2.0 * k) / xp;
    xp *= x2;
  }
  return r + acc;
}

std::vector<double> bernoulli_numbers(int count) {
  if (count < 0 || count > 60)
    throw std::invalid_argument("bernoulli_numbers: count must be in [0, 60]");
  using boost::multiprecision::cpp_int;
  struct Rat {
    cpp_int num, den;  // den > 0, reduced
    void reduce() {
      cpp_int g = gcd(num, den);
      if (g != 0) num /= g, den /= g;
      if (den < 0) num = -num, den = -den;
    }
  };
  const int n = count;
  std::vector<Rat> b(n + 1);
  b[0] = {1, 1};
  std::vector<cpp_int> binom(n + 2);
  for (int m = 1; m <= n; ++m) {
    // binomials C(m+1, j)
    binom[0] = 1;
    for (int j = 1; j <= m + 1; ++j)
      binom[j] = binom[j - 1] * (m + 2 - j) / j;
    Rat acc{0, 1};
    for (int j = 0; j < m; ++j) {
      // acc += C(m+1, j) * B_j
      cpp_int num = acc.num * b[j].den + binom[j] * b[j].num * acc.den;
      cpp_int den = acc.den * b[j].den;
      acc = {num, den};
      acc.reduce();
    }
    b[m] = {-acc.num, acc.den * (m + 1)};
    b[m].reduce();
  }
  std::vector<double> out(n + 1);
  for (int m = 0; m <= n; ++m)
    out[m] = b[m].num.convert_to<double>() / b[m].den.convert_to<double>();
  return out;
}

}  // namespace rieszl::special
