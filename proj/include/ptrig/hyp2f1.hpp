#pragma once
// Gauss hypergeometric series 2F1(a, b; c; z) by direct forward summation
// inside the unit disc, plus the two closed forms built on it: the series
// routes to sigma and tau.  These are the independent oracles for the
// quadrature engines near the origin, and the cheap residual inside Newton
// loops.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <type_traits>

#include "constants.hpp"
#include "quadrature.hpp"

namespace ptrig {
namespace hyp2f1 {

inline constexpr int series_term_cap = 500;

template <class Z>
struct Hyp2f1Result {
  Z value{};
  int terms = 0;
  double tail_bound = 0;
  bool converged = false;
};

// Forward series with compensated accumulation.  The tail bound after
// truncation uses the term ratio |z|, valid whenever
// (a+m)(b+m) <= (c+m)(1+m) for all m past the stopping index; that holds
// for every parameter triple used in this library (a + b <= 1 + c and
// ab <= c).  Stops once the bounded tail is below 1e-15, or reports
// converged = false at the term cap.
template <class Z>
Hyp2f1Result<Z> gauss_2f1_full(double a, double b, double c, Z z) {
  const double rho = std::abs(z);
  if (!(rho < 1.0)) throw std::domain_error("gauss_2f1: requires |z| < 1");
  if (c <= 0.0 && c == std::floor(c))
    throw std::domain_error("gauss_2f1: c must not be a non-positive integer");
  Hyp2f1Result<Z> out;
  Z sum = Z(1);
  Z comp = Z(0);
  Z term = Z(1);
  const double tail_factor = rho / (1.0 - rho);
  for (int n = 0; n < series_term_cap; ++n) {
    term *= ((a + n) * (b + n) / ((c + n) * (n + 1.0))) * z;
    const Z y = term - comp;
    const Z t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    out.terms = n + 1;
    out.tail_bound = std::abs(term) * tail_factor;
    if (out.tail_bound < 1e-15) {
      out.converged = true;
      break;
    }
  }
  out.value = sum;
  return out;
}

inline std::complex<double> gauss_2f1(double a, double b, double c, std::complex<double> z) {
  return gauss_2f1_full(a, b, c, z).value;
}

inline double gauss_2f1(double a, double b, double c, double z) {
  return gauss_2f1_full(a, b, c, z).value;
}

// sigma(w) = w 2F1(1/p, 1-1/p; 1+1/p; w^p).  Valid on both sides of the
// origin for either parity: for odd p a negative real w makes the argument
// w^p negative, which is exactly the sign the integral representation
// carries there.
template <class Z>
Hyp2f1Result<Z> sigma_hyp_full(const PParam& pp, Z w) {
  const double ip = 1.0 / pp.p;
  Z arg;
  if constexpr (std::is_same_v<Z, double>) {
    arg = quadrature::detail::ipow(w, pp.p);
  } else {
    arg = quadrature::detail::cpow_int(w, pp.p);
  }
  auto r = gauss_2f1_full(ip, 1.0 - ip, 1.0 + ip, arg);
  r.value *= w;
  r.tail_bound *= std::abs(w);
  return r;
}

inline std::complex<double> sigma_hyp(const PParam& pp, std::complex<double> w) {
  return sigma_hyp_full(pp, w).value;
}

inline double sigma_hyp(const PParam& pp, double w) { return sigma_hyp_full(pp, w).value; }

// tau(w) = w 2F1(1/p, 2/p; 1+1/p; -w^p), the series form of the polygon
// map; arctan when p = 2.
template <class Z>
Hyp2f1Result<Z> tau_hyp_full(const PParam& pp, Z w) {
  const double ip = 1.0 / pp.p;
  Z arg;
  if constexpr (std::is_same_v<Z, double>) {
    arg = -quadrature::detail::ipow(w, pp.p);
  } else {
    arg = -quadrature::detail::cpow_int(w, pp.p);
  }
  auto r = gauss_2f1_full(ip, 2.0 * ip, 1.0 + ip, arg);
  r.value *= w;
  r.tail_bound *= std::abs(w);
  return r;
}

inline std::complex<double> tau_hyp(const PParam& pp, std::complex<double> w) {
  return tau_hyp_full(pp, w).value;
}

inline double tau_hyp(const PParam& pp, double w) { return tau_hyp_full(pp, w).value; }

}  // namespace hyp2f1
}  // namespace ptrig
