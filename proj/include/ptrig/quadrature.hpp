#pragma once
// Double-exponential (tanh-sinh / exp-sinh) quadrature and the named
// integrals built on it: the incomplete arc-length integrals sigma and
// gamma_plus, their half-line extensions, and the complex segment integral
// tau behind the conformal polygon map.
//
// Integrands receive (x, da, db) where da and db are the distances to the
// interval ends, computed without cancellation; singular factors must be
// evaluated from those distances, never from x alone.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "constants.hpp"

namespace ptrig {
namespace quadrature {

struct QuadResult {
  double value = 0;
  double error_estimate = 0;
  int levels = 0;
  bool converged = false;
};

struct QuadResultC {
  std::complex<double> value{0, 0};
  double error_estimate = 0;
  int levels = 0;
  bool converged = false;
};

namespace detail {

inline constexpr int de_max_level = 12;
inline constexpr double half_pi = 1.5707963267948966192313216916397514;

// x^n for integer n >= 0 by binary powering.
inline double ipow(double x, int n) {
  double acc = 1.0, base = x;
  for (; n > 0; n >>= 1) {
    if (n & 1) acc *= base;
    base *= base;
  }
  return acc;
}

inline std::complex<double> cpow_int(std::complex<double> x, int n) {
  std::complex<double> acc{1.0, 0.0}, base = x;
  for (; n > 0; n >>= 1) {
    if (n & 1) acc *= base;
    base *= base;
  }
  return acc;
}

// 1 + x + ... + x^(p-1); with an exact distance 1-x this gives a stable
// 1 - x^p = (1 - x) * geom_sum(x, p) near x = 1.
inline double geom_sum(double x, int p) {
  double s = 1.0, xp = 1.0;
  for (int j = 1; j < p; ++j) {
    xp *= x;
    s += xp;
  }
  return s;
}

struct DeNode {
  double d;  // distance of the abscissa from the interval end, in (0, 1]
  double w;  // weight
};

// tanh-sinh abscissas on (-1, 1): x = tanh((pi/2) sinh t).  Level 0 holds
// t = 0, 1, 2, ...; level L > 0 the odd multiples of 2^-L.  Nodes stop once
// the endpoint distance underflows the usable range.
inline const std::vector<std::vector<DeNode>>& tanh_sinh_table() {
  static const auto table = [] {
    std::vector<std::vector<DeNode>> tbl(de_max_level + 1);
    for (int lev = 0; lev <= de_max_level; ++lev) {
      const double h = std::ldexp(1.0, -lev);
      const int step = (lev == 0) ? 1 : 2;
      for (int k = (lev == 0) ? 0 : 1;; k += step) {
        const double t = k * h;
        if (t > 7.0) break;
        const double u = half_pi * std::sinh(t);
        const double d = 2.0 / (1.0 + std::exp(2.0 * u));
        if (d < 1e-280) break;
        const double sech = 1.0 / std::cosh(u);
        tbl[lev].push_back({d, half_pi * std::cosh(t) * sech * sech});
      }
    }
    return tbl;
  }();
  return table;
}

// exp-sinh abscissas for (a, infinity): x = a + exp((pi/2) sinh t).  One
// stored entry serves the pair t = +-k*h via e and 1/e.
struct EsNode {
  double e;     // exp(u) at the positive node
  double wfac;  // (pi/2) cosh t; weight is wfac * e on one side, wfac / e on the other
};

inline const std::vector<std::vector<EsNode>>& exp_sinh_table() {
  static const auto table = [] {
    std::vector<std::vector<EsNode>> tbl(de_max_level + 1);
    for (int lev = 0; lev <= de_max_level; ++lev) {
      const double h = std::ldexp(1.0, -lev);
      const int step = (lev == 0) ? 1 : 2;
      for (int k = (lev == 0) ? 0 : 1;; k += step) {
        const double t = k * h;
        if (t > 7.0) break;
        const double u = half_pi * std::sinh(t);
        if (u > 575.0) break;  // keep exp(u) and 1/exp(u) in range
        tbl[lev].push_back({std::exp(u), half_pi * std::cosh(t)});
      }
    }
    return tbl;
  }();
  return table;
}

template <class F>
inline auto call_integrand(F&& f, double x, double da, double db) {
  if constexpr (std::is_invocable_v<F&, double, double, double>) {
    return f(x, da, db);
  } else {
    (void)da;
    (void)db;
    return f(x);
  }
}

template <class T>
struct DeOutcome {
  T value{};
  double error_estimate = 0;
  int levels = 0;
  bool converged = false;
};

// Core trapezoid-with-doubling loop over a node table.  `eval_pair` is
// called with (level entry, h) and must return the summed contribution of
// the node pair along with its magnitude.
template <class T, class F>
DeOutcome<T> de_finite(F&& f, double a, double b) {
  const auto& tbl = tanh_sinh_table();
  const double r = 0.5 * (b - a);
  if (r == 0.0) return {T{}, 0.0, 0, true};
  T raw{};          // running sum of w * f over all retained nodes
  double absraw = 0;
  T value{};
  T prev{};
  DeOutcome<T> out;
  for (int lev = 0; lev <= de_max_level; ++lev) {
    const double h = std::ldexp(1.0, -lev);
    int quiet = 0;
    for (std::size_t i = 0; i < tbl[lev].size(); ++i) {
      const auto& nd = tbl[lev][i];
      T term{};
      if (lev == 0 && i == 0) {
        term = call_integrand(f, a + r, r, r);  // center node, d = 1
      } else {
        const double dd = r * nd.d;
        const double dfar = r * (2.0 - nd.d);
        term = call_integrand(f, b - dd, dfar, dd) + call_integrand(f, a + dd, dd, dfar);
      }
      term *= nd.w;
      raw += term;
      const double mag = std::abs(term);
      absraw += mag;
      if (mag * h < 1e-17 * (1.0 + std::abs(raw) * h)) {
        if (++quiet >= 3) break;
      } else {
        quiet = 0;
      }
    }
    value = raw * (h * r);
    out.levels = lev;
    if (lev >= 1) {
      const double diff = std::abs(value - prev);
      const double floor = 8.0 * std::numeric_limits<double>::epsilon() * absraw * h * std::abs(r);
      const double target = 0.3e-13 * (1.0 + std::abs(value));
      out.error_estimate = std::max(diff, floor);
      if (diff <= std::max(target, floor)) {
        out.converged = true;
        out.value = value;
        return out;
      }
    }
    prev = value;
  }
  out.value = value;
  return out;
}

template <class T, class F>
DeOutcome<T> de_half_line(F&& f, double a) {
  const auto& tbl = exp_sinh_table();
  const double inf = std::numeric_limits<double>::infinity();
  T raw{};
  double absraw = 0;
  T value{};
  T prev{};
  DeOutcome<T> out;
  for (int lev = 0; lev <= de_max_level; ++lev) {
    const double h = std::ldexp(1.0, -lev);
    int quiet = 0;
    for (std::size_t i = 0; i < tbl[lev].size(); ++i) {
      const auto& nd = tbl[lev][i];
      T term{};
      if (lev == 0 && i == 0) {
        term = call_integrand(f, a + 1.0, 1.0, inf) * nd.wfac;
      } else {
        const double einv = 1.0 / nd.e;
        term = call_integrand(f, a + nd.e, nd.e, inf) * (nd.wfac * nd.e) +
               call_integrand(f, a + einv, einv, inf) * (nd.wfac * einv);
      }
      raw += term;
      const double mag = std::abs(term);
      absraw += mag;
      if (mag * h < 1e-17 * (1.0 + std::abs(raw) * h)) {
        if (++quiet >= 3) break;
      } else {
        quiet = 0;
      }
    }
    value = raw * h;
    out.levels = lev;
    if (lev >= 1) {
      const double diff = std::abs(value - prev);
      const double floor = 8.0 * std::numeric_limits<double>::epsilon() * absraw * h;
      const double target = 0.3e-13 * (1.0 + std::abs(value));
      out.error_estimate = std::max(diff, floor);
      if (diff <= std::max(target, floor)) {
        out.converged = true;
        out.value = value;
        return out;
      }
    }
    prev = value;
  }
  out.value = value;
  return out;
}

inline QuadResult to_result(const DeOutcome<double>& o) {
  return {o.value, o.error_estimate, o.levels, o.converged};
}

inline QuadResultC to_result(const DeOutcome<std::complex<double>>& o) {
  return {o.value, o.error_estimate, o.levels, o.converged};
}

}  // namespace detail

// Integrate f over (a, b); b may be +infinity.  f is either f(x) or
// f(x, da, db) with da, db the cancellation-free distances to the ends.
// Non-convergence at the deepest refinement is reported through the result,
// keeping the last estimate and its error bound.
template <class F>
QuadResult integrate_de(F&& f, double a, double b) {
  if (!(a <= b)) throw std::domain_error("integrate_de: requires a <= b");
  if (std::isinf(b)) return detail::to_result(detail::de_half_line<double>(f, a));
  return detail::to_result(detail::de_finite<double>(f, a, b));
}

namespace detail {

// integral_0^x (1 - xi^p)^(-(1-1/p)) dxi for x in [0, 1].  one_minus_x is
// the exactly known distance 1 - x when the caller has it; the integrand
// rebuilds 1 - xi = (1 - x) + db stably from it.
inline DeOutcome<double> sigma01_quad(const PParam& pp, double x, double one_minus_x) {
  if (x == 0.0) return {0.0, 0.0, 0, true};
  const int p = pp.p;
  const double expo = -(1.0 - 1.0 / p);
  auto f = [&](double xi, double, double db) {
    const double one_minus_xi = one_minus_x + db;
    return std::pow(one_minus_xi * geom_sum(xi, p), expo);
  };
  return de_finite<double>(f, 0.0, x);
}

// integral_0^X (1 + eta^p)^(-(1-1/p)) deta for X in [0, 1].
inline DeOutcome<double> psi_quad(const PParam& pp, double X) {
  if (X == 0.0) return {0.0, 0.0, 0, true};
  const int p = pp.p;
  const double expo = -(1.0 - 1.0 / p);
  auto f = [&](double eta) { return std::pow(1.0 + ipow(eta, p), expo); };
  return de_finite<double>(f, 0.0, X);
}

// integral_lo^hi u^(p-3) (1 + u^p)^(-(1-1/p)) du, the image of the far tail
// integral_{1/hi}^{1/lo} (1 + eta^p)^(-(1-1/p)) deta under eta = 1/u.
inline DeOutcome<double> psi_tail_quad(const PParam& pp, double lo, double hi) {
  const int p = pp.p;
  const double expo = -(1.0 - 1.0 / p);
  auto f = [&](double u) { return ipow(u, p - 3) * std::pow(1.0 + ipow(u, p), expo); };
  return de_finite<double>(f, lo, hi);
}

// integral_x^1 (1 - xi^p)^(-(1-1/p)) dxi for x in [-1, 1]; singular at the
// upper end always, and at the lower end when p is even and x = -1.
inline DeOutcome<double> gamma_seg_quad(const PParam& pp, double x, double one_plus_x) {
  const int p = pp.p;
  const double expo = -(1.0 - 1.0 / p);
  auto f = [&](double xi, double da, double db) {
    double base;
    if (xi >= 0.0) {
      base = db * geom_sum(xi, p);  // upper limit is 1, so 1 - xi == db
    } else if (pp.even) {
      base = (one_plus_x + da) * geom_sum(-xi, p);
    } else {
      base = 1.0 + ipow(-xi, p);
    }
    return std::pow(base, expo);
  };
  return de_finite<double>(f, x, 1.0);
}

}  // namespace detail

// sigma(x) = integral_0^x (1 - xi^p)^(-(1-1/p)) dxi on [-1, 1].  Odd around
// zero for even p by construction; for odd p the negative side integrand is
// (1 + eta^p)^(-(1-1/p)).
inline QuadResult sigma0_full(const PParam& pp, double x) {
  if (!(std::abs(x) <= 1.0 + 1e-12))
    throw std::domain_error("sigma0: requires |x| <= 1");
  x = std::clamp(x, -1.0, 1.0);
  if (x >= 0.0) return detail::to_result(detail::sigma01_quad(pp, x, 1.0 - x));
  if (pp.even) {
    auto r = detail::to_result(detail::sigma01_quad(pp, -x, 1.0 + x));
    r.value = -r.value;
    return r;
  }
  auto r = detail::to_result(detail::psi_quad(pp, -x));
  r.value = -r.value;
  return r;
}

inline double sigma0(const PParam& pp, double x) { return sigma0_full(pp, x).value; }

// Odd-p extension of sigma to the whole half line x <= 1; tails below -1 go
// through the eta = 1/u substitution so the integrand stays bounded.
inline QuadResult sigma_odd_full(const PParam& pp, double x) {
  if (pp.even) throw std::domain_error("sigma_odd: requires odd p");
  if (!(x <= 1.0 + 1e-12)) throw std::domain_error("sigma_odd: requires x <= 1");
  if (x >= -1.0) return sigma0_full(pp, std::min(x, 1.0));
  auto head = detail::psi_quad(pp, 1.0);
  auto tail = detail::psi_tail_quad(pp, 1.0 / (-x), 1.0);
  QuadResult r;
  r.value = -(head.value + tail.value);
  r.error_estimate = head.error_estimate + tail.error_estimate;
  r.levels = std::max(head.levels, tail.levels);
  r.converged = head.converged && tail.converged;
  return r;
}

inline double sigma_odd(const PParam& pp, double x) { return sigma_odd_full(pp, x).value; }

// gamma_plus(x) = integral_x^1 (1 - xi^p)^(-(1-1/p)) dxi, evaluated as its
// own quadrature rather than as a - sigma(x) so the two routes stay
// independent cross-checks of one another.
inline QuadResult gamma_plus_full(const PParam& pp, double x) {
  if (!(x <= 1.0 + 1e-12)) throw std::domain_error("gamma_plus: requires x <= 1");
  x = std::min(x, 1.0);
  if (pp.even && x < -1.0) throw std::domain_error("gamma_plus: requires x >= -1 for even p");
  if (x >= -1.0) return detail::to_result(detail::gamma_seg_quad(pp, x, 1.0 + x));
  auto head = detail::gamma_seg_quad(pp, -1.0, 0.0);
  auto tail = detail::psi_tail_quad(pp, 1.0 / (-x), 1.0);
  QuadResult r;
  r.value = head.value + tail.value;
  r.error_estimate = head.error_estimate + tail.error_estimate;
  r.levels = std::max(head.levels, tail.levels);
  r.converged = head.converged && tail.converged;
  return r;
}

inline double gamma_plus(const PParam& pp, double x) { return gamma_plus_full(pp, x).value; }

// tau(w) = integral_0^w (1 + zeta^p)^(-2/p) dzeta along the straight
// segment, principal branch.  With w^p near -1 (vertex directions) the base
// is rebuilt as (1 + w^p) - w^p (1 - u^p) to keep the endpoint singularity
// resolved.
inline QuadResultC tau_quad_full(const PParam& pp, std::complex<double> w) {
  if (!(std::abs(w) <= 1.0 + 1e-9)) throw std::domain_error("tau_quad: requires |w| <= 1");
  if (w == std::complex<double>(0.0, 0.0)) return {{0.0, 0.0}, 0.0, 0, true};
  const int p = pp.p;
  const std::complex<double> W = detail::cpow_int(w, p);
  std::complex<double> one_plus_W = 1.0 + W;
  // w within rounding of a vertex direction: treat the endpoint as the exact
  // vertex, else the residual ulps of w^p + 1 cap the resolvable singularity
  // and cost O(ulp^(1-2/p)) of integral mass
  if (std::abs(one_plus_W) <= 1e-12) one_plus_W = 0.0;
  const double expo = -2.0 / p;
  auto f = [&](double u, double, double db) {
    const std::complex<double> base = one_plus_W - W * (db * detail::geom_sum(u, p));
    return std::pow(base, expo);
  };
  auto o = detail::de_finite<std::complex<double>>(f, 0.0, 1.0);
  QuadResultC r = detail::to_result(o);
  r.value *= w;
  return r;
}

inline std::complex<double> tau_quad(const PParam& pp, std::complex<double> w) {
  return tau_quad_full(pp, w).value;
}

// sigma along the straight segment [0, w] in the plane, |w| <= 1; the same
// endpoint treatment with the sign of w^p flipped.
inline QuadResultC sigma_segment_full(const PParam& pp, std::complex<double> w) {
  if (!(std::abs(w) <= 1.0 + 1e-9)) throw std::domain_error("sigma_segment: requires |w| <= 1");
  if (w == std::complex<double>(0.0, 0.0)) return {{0.0, 0.0}, 0.0, 0, true};
  const int p = pp.p;
  const std::complex<double> W = detail::cpow_int(w, p);
  std::complex<double> one_minus_W = 1.0 - W;
  if (std::abs(one_minus_W) <= 1e-12) one_minus_W = 0.0;  // endpoint is a root of unity
  const double expo = -(1.0 - 1.0 / p);
  auto f = [&](double u, double, double db) {
    const std::complex<double> base = one_minus_W + W * (db * detail::geom_sum(u, p));
    return std::pow(base, expo);
  };
  auto o = detail::de_finite<std::complex<double>>(f, 0.0, 1.0);
  QuadResultC r = detail::to_result(o);
  r.value *= w;
  return r;
}

inline std::complex<double> sigma_segment(const PParam& pp, std::complex<double> w) {
  return sigma_segment_full(pp, w).value;
}

// The defining integrals of the constant set, by quadrature.  These are the
// independent counterparts of the gamma-function formulas.
inline QuadResult a_integral_quad(const PParam& pp) {
  return detail::to_result(detail::sigma01_quad(pp, 1.0, 0.0));
}

inline QuadResult b_integral_quad(const PParam& pp) {
  if (pp.p == 2) throw std::domain_error("b_integral_quad: divergent at p = 2");
  auto head = detail::psi_quad(pp, 1.0);
  auto tail = detail::psi_tail_quad(pp, 0.0, 1.0);
  QuadResult r;
  r.value = head.value + tail.value;
  r.error_estimate = head.error_estimate + tail.error_estimate;
  r.levels = std::max(head.levels, tail.levels);
  r.converged = head.converged && tail.converged;
  return r;
}

inline QuadResult k_integral_quad(const PParam& pp) {
  const int p = pp.p;
  const double expo = -2.0 / p;
  auto f = [&](double z) { return std::pow(1.0 + detail::ipow(z, p), expo); };
  return detail::to_result(detail::de_finite<double>(f, 0.0, 1.0));
}

// Same integrand over the whole half line, via exp-sinh; used to probe the
// half-integral identity against k_integral_quad by a distinct route.
inline QuadResult k_half_line_quad(const PParam& pp) {
  const int p = pp.p;
  const double expo = -2.0 / p;
  auto f = [&](double eta) { return std::pow(1.0 + detail::ipow(eta, p), expo); };
  return detail::to_result(detail::de_half_line<double>(f, 0.0));
}

}  // namespace quadrature
}  // namespace ptrig
