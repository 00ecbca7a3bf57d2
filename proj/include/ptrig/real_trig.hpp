#pragma once
// Real-line evaluation of the pair (s, c) solving s' = c^{p-1},
// c' = -s^{p-1}, s(0) = 0, c(0) = 1, by inverting the arc-length integral
// sigma.  Even p: periodic over the whole line with period 4a, reduced to
// the base interval [0, a] by parity and quarter-shift relations.  Odd p:
// maximal open interval (-b, a+b) with s -> -inf / c -> +inf at the left
// end and s -> +inf / c -> -inf at the right end.
//
// Inversion works in three regimes keyed by the target value y:
//   middle    safeguarded Newton on sigma(x) = y for x in [-1, ~0.95],
//             residuals from the series route where it converges;
//   endpoint  y near a: substitute x = 1 - v^p/p, which turns the
//             singular integral into a smooth one with F'(v) ~ 1, and
//             carries 1 - x exactly (as v^p/p) for the c recovery;
//   far tail  odd p, y near -b: substitute x = -1/m and solve the bounded
//             tail integral for m.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "constants.hpp"
#include "hyp2f1.hpp"
#include "quadrature.hpp"

namespace ptrig {
namespace real_trig {

enum class RealStatus { ok, at_pole_of_t, out_of_domain };

struct RealEval {
  double x = 0;
  double s = 0;
  double c = 0;
  double t = 0;
  RealStatus status = RealStatus::ok;
};

enum class DomainKind { whole_line_periodic, open_interval };

struct RealDomain {
  DomainKind kind;
  double lower;
  double upper;
  double period;  // NaN when not periodic
};

inline RealDomain real_domain(const PParam& pp) {
  const auto& cs = constants_for(pp);
  if (pp.even) {
    const double inf = std::numeric_limits<double>::infinity();
    return {DomainKind::whole_line_periodic, -inf, inf, 4.0 * cs.a};
  }
  return {DomainKind::open_interval, -cs.b, cs.a + cs.b,
          std::numeric_limits<double>::quiet_NaN()};
}

namespace detail {

using quadrature::detail::geom_sum;
using quadrature::detail::ipow;

struct Inverted {
  double x = 0;
  double one_minus_x = 0;  // meaningful only when endpoint_regime
  bool endpoint_regime = false;
};

// sigma(x) for Newton residuals on [-1, 1): series while the argument is
// comfortably inside the disc, quadrature beyond.
inline double sigma_resid(const PParam& pp, double x) {
  if (std::abs(x) <= 0.95) return hyp2f1::sigma_hyp(pp, x);
  if (x >= 0.0) return quadrature::sigma0(pp, x);
  if (pp.even) return -quadrature::sigma0(pp, -x);
  return quadrature::sigma_odd(pp, x);
}

inline double sigma_deriv(const PParam& pp, double x) {
  return std::pow(1.0 - ipow(x, pp.p), -(1.0 - 1.0 / pp.p));
}

// F(v) = sigma(1) - sigma(1 - v^p/p) rewritten as an integral of the
// smooth density p^{1-1/p} geom(xi)^{-(1-1/p)}, xi = 1 - u^p/p.
inline double endpoint_arc(const PParam& pp, double v) {
  if (v == 0.0) return 0.0;
  const int p = pp.p;
  const double expo = -(1.0 - 1.0 / p);
  const double scale = std::pow(double(p), 1.0 - 1.0 / p);
  auto f = [&](double u) {
    const double xi = 1.0 - ipow(u, p) / p;
    return scale * std::pow(geom_sum(xi, p), expo);
  };
  return quadrature::detail::de_finite<double>(f, 0.0, v).value;
}

inline double endpoint_arc_deriv(const PParam& pp, double v) {
  const int p = pp.p;
  const double xi = 1.0 - ipow(v, p) / p;
  return std::pow(double(p), 1.0 - 1.0 / p) *
         std::pow(geom_sum(xi, p), -(1.0 - 1.0 / p));
}

// Tail integral H(m) = integral_0^m u^{p-3} (1 + u^p)^{-(1-1/p)} du; the
// image of sigma's far tail under x = -1/m.
inline double tail_arc(const PParam& pp, double m) {
  if (m == 0.0) return 0.0;
  const int p = pp.p;
  const double expo = -(1.0 - 1.0 / p);
  auto f = [&](double u) { return ipow(u, p - 3) * std::pow(1.0 + ipow(u, p), expo); };
  return quadrature::detail::de_finite<double>(f, 0.0, m).value;
}

inline double tail_arc_deriv(const PParam& pp, double m) {
  const int p = pp.p;
  return ipow(m, p - 3) * std::pow(1.0 + ipow(m, p), -(1.0 - 1.0 / p));
}

// Safeguarded Newton on an increasing function with a maintained bracket
// [lo, hi]; fun(hi) >= target >= fun(lo) must hold on entry.
template <class Fun, class Der>
double newton_bracketed(Fun&& fun, Der&& der, double target, double x0, double lo,
                        double hi, double tol) {
  double x = std::clamp(x0, lo, hi);
  for (int it = 0; it < 60; ++it) {
    const double r = fun(x) - target;
    if (std::abs(r) <= tol) return x;
    if (r > 0.0) hi = x; else lo = x;
    const double d = der(x);
    double xn = (d > 0.0 && std::isfinite(d)) ? x - r / d : x;
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    if (xn == x) return x;
    x = xn;
  }
  return x;
}

inline Inverted invert_sigma_ext(const PParam& pp, double y) {
  const auto& cs = constants_for(pp);
  const double tol = 1e-13 * (1.0 + std::abs(y));
  if (y > cs.a + 1e-9 * (1.0 + cs.a))
    throw std::domain_error("invert_sigma: y above the range of sigma");
  if (pp.even && y < 0.0) {
    Inverted r = invert_sigma_ext(pp, -y);
    r.x = -r.x;
    return r;
  }

  const double sig09 = hyp2f1::sigma_hyp(pp, 0.9);
  if (y > sig09) {
    // endpoint regime: x = 1 - v^p/p
    const double g = std::max(cs.a - y, 0.0);
    const double vmax = 1.1 * std::pow(0.1 * pp.p, 1.0 / pp.p);
    const double v = newton_bracketed([&](double vv) { return endpoint_arc(pp, vv); },
                                      [&](double vv) { return endpoint_arc_deriv(pp, vv); },
                                      g, g, 0.0, vmax, tol);
    Inverted r;
    r.one_minus_x = ipow(v, pp.p) / pp.p;
    r.x = 1.0 - r.one_minus_x;
    r.endpoint_regime = true;
    return r;
  }

  if (!pp.even && y < hyp2f1::sigma_hyp(pp, -0.9) && y < quadrature::sigma0(pp, -1.0)) {
    // far tail: x = -1/m, m in (0, 1]
    const double gb = y + cs.b;
    if (!(gb > 0.0))
      throw std::domain_error("invert_sigma: y below the range of sigma");
    const double m0 = std::pow((pp.p - 2) * gb, 1.0 / (pp.p - 2));
    const double m = newton_bracketed([&](double mm) { return tail_arc(pp, mm); },
                                      [&](double mm) { return tail_arc_deriv(pp, mm); },
                                      gb, m0, 0.0, 1.0, tol);
    Inverted r;
    r.x = -1.0 / m;
    return r;
  }

  Inverted r;
  r.x = newton_bracketed([&](double xx) { return sigma_resid(pp, xx); },
                         [&](double xx) { return sigma_deriv(pp, xx); }, y,
                         y, -1.0, 0.96, tol);
  return r;
}

// (1 - v^p)^{1/p} without cancellation: from the exactly carried 1 - |v|
// near |v| = 1, directly in the middle, and through |v| (1 + |v|^{-p})^{1/p}
// in the odd-p tails.
inline double complement_root(const PParam& pp, double v, double one_minus_absv,
                              bool near_one) {
  const int p = pp.p;
  const double av = std::abs(v);
  if (near_one) {
    return std::pow(one_minus_absv * geom_sum(av, p), 1.0 / p);
  }
  if (av <= 1.0) {
    return std::pow(1.0 - ipow(v, p), 1.0 / p);
  }
  const double inv = std::pow(av, -double(p));
  return av * std::exp(std::log1p(inv) / p);
}

}  // namespace detail

// Solves sigma(x) = y for the parity-appropriate sigma.  Even p: y in
// [-a, a].  Odd p: y in (-b, a].
inline double invert_sigma(const PParam& pp, double y) {
  return detail::invert_sigma_ext(pp, y).x;
}

inline RealEval eval_real(const PParam& pp, double x) {
  const auto& cs = constants_for(pp);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  RealEval out;
  out.x = x;
  double s, c;
  if (pp.even) {
    const double a = cs.a;
    double u = std::remainder(x, 4.0 * a);
    // an argument within a few ulp of a pole of t (odd multiples of a)
    // evaluates to the pole itself: the computed c there is rounding noise
    if (std::abs(std::abs(u) - a) <= 8.0 * std::numeric_limits<double>::epsilon() * a)
      u = std::copysign(a, u);
    double base;
    int sign_s, sign_c;
    bool swap;
    if (u >= 0.0) {
      if (u <= a) { base = u; swap = false; sign_s = +1; sign_c = +1; }
      else        { base = u - a; swap = true; sign_s = +1; sign_c = -1; }
    } else {
      if (u >= -a) { base = -u; swap = false; sign_s = -1; sign_c = +1; }
      else         { base = -u - a; swap = true; sign_s = -1; sign_c = -1; }
    }
    const auto inv = detail::invert_sigma_ext(pp, base);
    const double s0 = inv.x;
    const double c0 = detail::complement_root(pp, s0, inv.one_minus_x, inv.endpoint_regime);
    s = sign_s * (swap ? c0 : s0);
    c = sign_c * (swap ? s0 : c0);
  } else {
    const double a = cs.a, b = cs.b;
    if (!(x > -b && x < a + b)) {
      out.s = out.c = out.t = nan;
      out.status = RealStatus::out_of_domain;
      return out;
    }
    if (std::abs(x - a) <= 8.0 * std::numeric_limits<double>::epsilon() * a) x = a;
    if (x <= a) {
      const auto inv = detail::invert_sigma_ext(pp, x);
      s = inv.x;
      c = detail::complement_root(pp, s, inv.one_minus_x, inv.endpoint_regime);
    } else {
      const auto inv = detail::invert_sigma_ext(pp, a - x);
      c = inv.x;  // negative past the pole
      s = detail::complement_root(pp, c, inv.one_minus_x, inv.endpoint_regime);
    }
  }
  out.s = s;
  out.c = c;
  if (c == 0.0) {
    out.status = RealStatus::at_pole_of_t;
    out.t = std::copysign(std::numeric_limits<double>::infinity(), s);
  } else {
    out.t = s / c;
  }
  return out;
}

// s/c as a plain value: signed infinity at the zeros of c, NaN outside the
// odd-p maximal interval.
inline double t_real(const PParam& pp, double x) { return eval_real(pp, x).t; }

}  // namespace real_trig

using real_trig::RealStatus;
using real_trig::RealEval;
using real_trig::DomainKind;
using real_trig::RealDomain;
using real_trig::real_domain;
using real_trig::invert_sigma;
using real_trig::eval_real;
using real_trig::t_real;

}  // namespace ptrig
