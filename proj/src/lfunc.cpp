#include "rieszl/lfunc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rieszl/errors.hpp"
#include "rieszl/special.hpp"

namespace rieszl::lfunc {

namespace {

constexpr double kPi = std::numbers::pi;

Complex ipow(int a) { return a == 0 ? Complex(1, 0) : Complex(0, 1); }

bool near(Complex s, Complex w, double tol = 1e-12) {
  return std::abs(s - w) <= tol;
}

// L at s = 1 for non-principal chi: -(1/q) sum_r chi(r) psi(r/q).
Complex l_at_one(const DirichletCharacter& chi) {
  const uint32_t q = chi.modulus();
  Complex sum = 0.0;
  for (uint32_t r = 1; r < q; ++r) {
    Complex v = chi.value(r);
    if (v == Complex(0.0, 0.0)) continue;
    sum += v * special::digamma_real(double(r) / q);
  }
  return -sum / double(q);
}

Complex hurwitz_route(const DirichletCharacter& chi, Complex s) {
  const uint32_t q = chi.modulus();
  Complex sum = 0.0;
  for (uint32_t r = 1; r <= q; ++r) {
    Complex v = chi.value(r);
    if (v == Complex(0.0, 0.0)) continue;
    sum += v * special::hurwitz_zeta(s, double(r) / q);
  }
  return std::exp(-s * std::log(double(q))) * sum;
}

// Principal chi: L(s, chi) = zeta(s) * prod_{p | q} (1 - p^{-s}).
Complex principal_route(const DirichletCharacter& chi, Complex s) {
  Complex l = special::hurwitz_zeta(s, 1.0);
  for (auto [p, e] : arith::factorize(chi.modulus())) {
    (void)e;
    l *= 1.0 - std::exp(-s * std::log(double(p)));
  }
  return l;
}

// Functional-equation route for primitive chi:
// L(s,chi) = eps(chi) (q/pi)^{(1-2s)/2} Gamma((1+a-s)/2)/Gamma((s+a)/2) L(1-s, conj chi)
Complex fe_route_primitive(const DirichletCharacter& chi, Complex s) {
  const double q = chi.modulus();
  const int a = chi.parity();
  // (s+a)/2 at a non-positive integer is a trivial zero of L
  Complex g2arg = (s + double(a)) / 2.0;
  if (g2arg.real() < 0.25 && near(g2arg, std::round(g2arg.real())) &&
      std::round(g2arg.real()) <= 0.0)
    return Complex(0.0, 0.0);
  Complex lgr = special::log_gamma_complex((1.0 + double(a) - s) / 2.0) -
                special::log_gamma_complex(g2arg);
  Complex pref = std::exp((0.5 - s) * std::log(q / kPi) + lgr);
  return arith::epsilon_factor(chi) * pref * hurwitz_route(chi.conjugate(), 1.0 - s);
}

Complex l_value_primitive_special(const DirichletCharacter& chi, Complex s) {
  // dispatch for the regions where the plain Hurwitz route is not used
  return fe_route_primitive(chi, s);
}

}  // namespace

ZeroList ZeroList::conjugated() const {
  ZeroList out = *this;
  uint32_t qq = q;
  out.conrey = (q <= 2) ? 1 : static_cast<uint32_t>(arith::mod_inverse(conrey, qq));
  out.gammas.clear();
  out.gammas.reserve(gammas.size());
  for (auto it = gammas.rbegin(); it != gammas.rend(); ++it) out.gammas.push_back(-*it);
  return out;
}

Complex l_value(const DirichletCharacter& chi, Complex s) {
  if (chi.is_principal()) {
    if (near(s, Complex(1.0, 0.0), 1e-10))
      throw pole_error("l_value: pole of principal L at s = 1", Complex(1, 0));
    return principal_route(chi, s);
  }
  // within 1e-9 of s = 1 the value at 1 is returned (error <= 1e-9 |L'|);
  // between that and 5e-3 the functional equation avoids the cancellation
  // of the Hurwitz pole terms
  if (near(s, Complex(1.0, 0.0), 1e-9)) return l_at_one(chi);
  const bool awkward = s.real() < 0.0 || std::abs(s - Complex(1.0, 0.0)) < 5e-3;
  if (!awkward) return hurwitz_route(chi, s);

  // route through the functional equation of the primitive part
  DirichletCharacter prim = chi.is_primitive() ? chi : chi.primitive_part();
  Complex l = l_value_primitive_special(prim, s);
  if (chi.is_primitive()) return l;
  for (auto [p, e] : arith::factorize(chi.modulus())) {
    (void)e;
    if (chi.conductor() % p == 0) continue;
    l *= 1.0 - prim.value(p) * std::exp(-s * std::log(double(p)));
  }
  return l;
}

Complex l_derivative(const DirichletCharacter& chi, Complex s) {
  if (s.real() < -5.0)
    throw precision_error("l_derivative: supported for Re s >= -5");
  if (chi.is_principal()) {
    if (near(s, Complex(1.0, 0.0), 1e-10))
      throw pole_error("l_derivative: pole of principal L at s = 1", Complex(1, 0));
    // product rule over L = zeta(s) prod (1 - p^{-s})
    Complex z = special::hurwitz_zeta(s, 1.0);
    Complex dz = special::hurwitz_zeta_ds(s, 1.0);
    Complex prod = 1.0;
    Complex logsum = 0.0;  // sum of d/ds log(1 - p^{-s})
    for (auto [p, e] : arith::factorize(chi.modulus())) {
      (void)e;
      double lp = std::log(double(p));
      Complex ps = std::exp(-s * lp);
      prod *= 1.0 - ps;
      logsum += lp * ps / (1.0 - ps);
    }
    return dz * prod + z * prod * logsum;
  }
  if (std::abs(s - Complex(1.0, 0.0)) < 1e-6)
    throw precision_error("l_derivative: not supported within 1e-6 of s = 1");
  const uint32_t q = chi.modulus();
  const double lq = std::log(double(q));
  Complex sum = 0.0, dsum = 0.0;
  for (uint32_t r = 1; r <= q; ++r) {
    Complex v = chi.value(r);
    if (v == Complex(0.0, 0.0)) continue;
    sum += v * special::hurwitz_zeta(s, double(r) / q);
    dsum += v * special::hurwitz_zeta_ds(s, double(r) / q);
  }
  Complex qs = std::exp(-s * lq);
  return qs * (dsum - lq * sum);
}

Complex l_prime_trivial_zero(const DirichletCharacter& chi) {
  if (!chi.is_primitive())
    throw std::domain_error("l_prime_trivial_zero: character must be primitive");
  if (chi.modulus() == 1)
    throw std::domain_error(
        "l_prime_trivial_zero: q = 1 excluded (L(1) pole in the closed form)");
  const int a = chi.parity();
  const double q = chi.modulus();
  const double fact_a = (a == 0) ? 1.0 : 1.0;  // a! for a in {0,1}
  Complex coeff = fact_a * std::pow(q, a) * arith::gauss_sum(chi) /
                  (std::pow(2.0, a + 1) * std::pow(kPi, a) * ipow(a));
  return coeff * l_value(chi.conjugate(), Complex(1.0 + a, 0.0));
}

Complex completed_lambda(const DirichletCharacter& chi, Complex s) {
  if (!chi.is_primitive())
    throw std::domain_error("completed_lambda: character must be primitive");
  const double q = chi.modulus();
  const int a = chi.parity();
  Complex half = (s + double(a)) / 2.0;
  return std::exp(half * std::log(q / kPi) + special::log_gamma_complex(half)) *
         l_value(chi, s);
}

double functional_equation_residual(const DirichletCharacter& chi, Complex s) {
  const double q = chi.modulus();
  const int a = chi.parity();
  Complex lambda = completed_lambda(chi, s);
  Complex mirror = (0.5 + double(a) / 2.0 - s / 2.0) * std::log(q / kPi);
  Complex rhs = arith::epsilon_factor(chi) *
                std::exp(mirror + special::log_gamma_complex((1.0 - s + double(a)) / 2.0)) *
                l_value(chi.conjugate(), 1.0 - s);
  return std::abs(lambda - rhs) / std::abs(lambda);
}

double hardy_z(const DirichletCharacter& chi, double t) {
  if (!chi.is_primitive())
    throw std::domain_error("hardy_z: character must be primitive");
  const double q = chi.modulus();
  const int a = chi.parity();
  const Complex s(0.5, t);
  const Complex half = (s + double(a)) / 2.0;
  Complex omega = std::pow(arith::epsilon_factor(chi), -0.5);
  Complex z = omega *
              std::exp(half * std::log(q / kPi) + special::log_gamma_complex(half) +
                       kPi * std::abs(t) / 4.0) *
              l_value(chi, s);
  return z.real();
}

namespace {

// Completed function used for winding counts: pole-free xi for q = 1.
Complex winding_function(const DirichletCharacter& chi, Complex s) {
  if (chi.modulus() == 1) {
    return 0.5 * s * (s - 1.0) *
           std::exp(-s / 2.0 * std::log(kPi) + special::log_gamma_complex(s / 2.0)) *
           special::hurwitz_zeta(s, 1.0);
  }
  return completed_lambda(chi, s);
}

// Accumulate the phase variation of f along the segment [s0, s1].
// Subdivides until each step turns by less than pi/2.
double phase_variation(const DirichletCharacter& chi, Complex s0, Complex s1,
                       Complex f0, Complex f1, int depth) {
  if (f0 == Complex(0.0, 0.0) || f1 == Complex(0.0, 0.0))
    throw contour_error("argument principle: zero on contour");
  double dphi = std::arg(f1 / f0);
  if (std::abs(dphi) <= kPi / 2.0 && depth > 0) return dphi;
  if (depth > 28) throw contour_error("argument principle: phase step will not settle");
  Complex mid = 0.5 * (s0 + s1);
  Complex fm = winding_function(chi, mid);
  return phase_variation(chi, s0, mid, f0, fm, depth + 1) +
         phase_variation(chi, mid, s1, fm, f1, depth + 1);
}

double walk_edge(const DirichletCharacter& chi, Complex s0, Complex s1,
                 double max_step) {
  double len = std::abs(s1 - s0);
  int n = std::max(1, static_cast<int>(std::ceil(len / max_step)));
  double total = 0.0;
  Complex prev = s0, fprev = winding_function(chi, s0);
  for (int i = 1; i <= n; ++i) {
    Complex next = s0 + (s1 - s0) * (double(i) / n);
    Complex fnext = winding_function(chi, next);
    total += phase_variation(chi, prev, next, fprev, fnext, 0);
    prev = next;
    fprev = fnext;
  }
  return total;
}

int winding_count(const DirichletCharacter& chi, double T) {
  const Complex a(1.5, -T), b(1.5, T), c(-0.5, T), d(-0.5, -T);
  double step_v = std::clamp(2.0 / (1.0 + std::log1p(T)), 0.05, 0.5);
  double total = walk_edge(chi, a, b, step_v) + walk_edge(chi, b, c, 0.1) +
                 walk_edge(chi, c, d, step_v) + walk_edge(chi, d, a, 0.1);
  double w = total / (2.0 * kPi);
  double r = std::round(w);
  if (std::abs(w - r) > 0.01)
    throw contour_error("argument principle: winding number not integral");
  return static_cast<int>(r);
}

}  // namespace

int zero_count_argument_principle(const DirichletCharacter& chi, double T) {
  if (!chi.is_primitive())
    throw std::domain_error("argument principle: character must be primitive");
  if (!(T > 0.0)) return 0;
  // perturb T by up to 0.01 if a zero sits too close to the contour
  static constexpr double kOffsets[] = {0.0, -0.004, 0.004, -0.008, 0.008, -0.01, 0.01};
  for (double off : kOffsets) {
    try {
      return winding_count(chi, T + off);
    } catch (const contour_error&) {
      continue;
    }
  }
  throw contour_error("argument principle: zero on contour after perturbation attempts");
}

namespace {

double bisect_zero(const DirichletCharacter& chi, double lo, double hi, double flo) {
  for (int it = 0; it < 64 && hi - lo > 1e-12 * std::max(1.0, std::abs(lo)); ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = hardy_z(chi, mid);
    if (fm == 0.0) return mid;
    if ((flo < 0) != (fm < 0)) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

// Nudge T down until no sign change of Z sits within 0.03 of the band
// edge, so that the scan and the winding count see the same zero set.
double settle_height(const DirichletCharacter& chi, double T, bool two_sided) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    bool clean = true;
    for (int side = 0; side < (two_sided ? 2 : 1) && clean; ++side) {
      double edge = side == 0 ? T : -T;
      double prev = hardy_z(chi, edge - 0.03);
      for (double t = edge - 0.024; t <= edge + 0.0301; t += 0.006) {
        double v = hardy_z(chi, t);
        if ((prev < 0) != (v < 0)) {
          clean = false;
          break;
        }
        prev = v;
      }
    }
    if (clean) return T;
    T -= 0.06;
  }
  throw contour_error("find_zeros: could not settle a zero-free band edge");
}

}  // namespace

ZeroList find_zeros(const DirichletCharacter& chi, double T) {
  if (!chi.is_primitive())
    throw std::domain_error("find_zeros: character must be primitive");
  if (chi.modulus() > 100) throw std::invalid_argument("find_zeros: q <= 100 required");
  if (T > 200.0) throw std::invalid_argument("find_zeros: T <= 200 required");

  ZeroList list;
  list.q = chi.modulus();
  list.conrey = chi.conrey_index();
  list.provenance = ZeroList::Provenance::computed;

  if (!(T > 0.0)) {
    list.height = std::max(T, 0.0);
    list.completeness_flag = true;
    return list;
  }

  const bool real_chi = chi.is_real();
  const double T_eff = settle_height(chi, T, !real_chi);
  list.height = T_eff;

  const double step = 0.05;
  const double start = real_chi ? 0.0 : -T_eff;
  std::vector<double> found;

  double prev_t = start;
  double prev_z = hardy_z(chi, prev_t);
  if (real_chi && std::abs(prev_z) < 1e-13) {
    found.push_back(0.0);
    list.warnings.push_back("zero detected at gamma = 0");
  }
  for (double t = start + step; t <= T_eff + 1e-12; t += step) {
    double z = hardy_z(chi, t);
    if ((prev_z < 0) != (z < 0)) found.push_back(bisect_zero(chi, prev_t, t, prev_z));
    prev_t = t;
    prev_z = z;
  }

  // validation: |L(1/2 + i gamma)| <= 1e-8 and the simplicity heuristic
  std::vector<double> kept;
  for (double g : found) {
    Complex rho(0.5, g);
    double lv = std::abs(l_value(chi, rho));
    if (lv > 1e-8) {
      list.warnings.push_back("rejected ordinate " + std::to_string(g) +
                              ": |L(rho)| = " + std::to_string(lv));
      continue;
    }
    double ld = std::abs(l_derivative(chi, rho));
    if (ld < 1e-6) {
      list.warnings.push_back("suspicious zero at gamma = " + std::to_string(g) +
                              ": |L'(rho)| = " + std::to_string(ld) +
                              " below simplicity threshold");
      continue;
    }
    kept.push_back(g);
  }

  if (real_chi) {
    std::vector<double> sym;
    for (auto it = kept.rbegin(); it != kept.rend(); ++it)
      if (*it > 0.0) sym.push_back(-*it);
    sym.insert(sym.end(), kept.begin(), kept.end());
    list.gammas = std::move(sym);
  } else {
    list.gammas = std::move(kept);
  }

  const int expected = zero_count_argument_principle(chi, T_eff);
  list.completeness_flag = (expected == static_cast<int>(list.gammas.size()));
  if (!list.completeness_flag)
    list.warnings.push_back("count mismatch: argument principle expects " +
                            std::to_string(expected) + ", scan found " +
                            std::to_string(list.gammas.size()));
  return list;
}

}  // namespace rieszl::lfunc
