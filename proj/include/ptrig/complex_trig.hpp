#pragma once
// Complex-plane evaluation of (s, c) and t = s/c on the domains where the
// pair is provably holomorphic: the Picard disc at the origin (Taylor
// series), the open regular p-gon and its doubling across the right edge
// (adaptive path marching of the ODE, odd p), and the inscribed straight
// band around the real axis (even p, with 2k-translation reduction).  Also
// the polygon geometry itself and the Newton inverse of the conformal map
// tau, which recovers t and then (s, c) directly from a polygon point.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "constants.hpp"
#include "hyp2f1.hpp"
#include "quadrature.hpp"

namespace ptrig {
namespace complex_trig {

using cplx = std::complex<double>;

enum class ComplexStatus { ok, rejected_outside_domain };

struct ComplexEval {
  cplx z{0, 0};
  cplx s{0, 0};
  cplx c{1, 0};
  ComplexStatus status = ComplexStatus::ok;
};

// Taylor coefficients of s (array a) and c (array b) at the origin,
// degrees 0..length-1.  The values are real for every p; nonzero entries
// sit only on degrees = 1 mod p in a and = 0 mod p in b, and the
// convolution recurrence preserves those exact zeros in floating point.
struct SeriesPair {
  std::vector<double> a;
  std::vector<double> b;
  int length = 0;
};

inline SeriesPair taylor_coeffs(const PParam& pp, int n) {
  if (n < 2) throw std::domain_error("taylor_coeffs: requires n >= 2");
  const int p = pp.p;
  SeriesPair sp;
  sp.length = n;
  sp.a.assign(n, 0.0);
  sp.b.assign(n, 0.0);
  sp.a[1] = 1.0;
  sp.b[0] = 1.0;
  // apow[j] / bpow[j] hold s^{j+1} / c^{j+1} up to the degree processed
  std::vector<std::vector<double>> apow(p - 1), bpow(p - 1);
  for (int j = 0; j < p - 1; ++j) {
    apow[j].assign(n, 0.0);
    bpow[j].assign(n, 0.0);
  }
  for (int d = 0; d < n; ++d) {
    for (int j = 0; j < p - 1; ++j) {
      if (j == 0) {
        apow[0][d] = sp.a[d];
        bpow[0][d] = sp.b[d];
      } else {
        double sa = 0.0, sb = 0.0;
        for (int i = 0; i <= d; ++i) {
          sa += apow[j - 1][i] * sp.a[d - i];
          sb += bpow[j - 1][i] * sp.b[d - i];
        }
        apow[j][d] = sa;
        bpow[j][d] = sb;
      }
    }
    if (d + 1 < n) {
      sp.a[d + 1] = bpow[p - 2][d] / (d + 1);
      sp.b[d + 1] = -apow[p - 2][d] / (d + 1);
    }
  }
  return sp;
}

struct ComplexDomainSpec {
  int p = 0;
  double picard_r = 0;
  std::vector<cplx> polygon_vertices;  // beta^{2k+1} l, k = 0..p-1
  std::vector<cplx> doubled_vertices;  // boundary of the doubled polygon, 2p-2 points
  double incircle_k = 0;
  double circumcircle_l = 0;
  double band_halfwidth = 0;  // k tan(pi/p); equals the shared-edge half-length l sin(pi/p)
};

inline ComplexDomainSpec polygon_geometry(const PParam& pp) {
  if (pp.p < 3) throw std::domain_error("polygon_geometry: requires p >= 3");
  const auto& cs = constants_for(pp);
  ComplexDomainSpec g;
  g.p = pp.p;
  g.picard_r = cs.picard_r;
  g.incircle_k = cs.k;
  g.circumcircle_l = cs.l;
  g.band_halfwidth = cs.band_halfwidth;
  for (int k = 0; k < pp.p; ++k)
    g.polygon_vertices.push_back(std::polar(cs.l, (2.0 * k + 1.0) * constants::pi / pp.p));
  g.doubled_vertices = g.polygon_vertices;
  for (int k = pp.p - 2; k >= 1; --k)
    g.doubled_vertices.push_back(2.0 * cs.k - std::conj(g.polygon_vertices[k]));
  return g;
}

namespace detail {

using quadrature::detail::cpow_int;

// Open regular p-gon with incircle radius k and an edge midpoint on the
// positive real axis: intersection of the half-planes Re(z conj(alpha^m)) < k.
inline bool in_open_polygon(const PParam& pp, cplx z) {
  const auto& cs = constants_for(pp);
  for (int m = 0; m < pp.p; ++m) {
    const cplx nrm = std::polar(1.0, 2.0 * constants::pi * m / pp.p);
    if (!((z * std::conj(nrm)).real() < cs.k)) return false;
  }
  return true;
}

inline cplx reflect_right_edge(const PParam& pp, cplx z) {
  return 2.0 * constants_for(pp).k - std::conj(z);
}

inline bool on_shared_edge(const PParam& pp, cplx z) {
  const auto& cs = constants_for(pp);
  return std::abs(z.real() - cs.k) <= 64.0 * std::numeric_limits<double>::epsilon() * cs.k &&
         std::abs(z.imag()) < cs.band_halfwidth;
}

inline bool in_doubled_polygon(const PParam& pp, cplx z) {
  return in_open_polygon(pp, z) || in_open_polygon(pp, reflect_right_edge(pp, z)) ||
         on_shared_edge(pp, z);
}

inline const SeriesPair& series_for(const PParam& pp) {
  static std::mutex mu;
  static std::unordered_map<int, std::unique_ptr<const SeriesPair>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(pp.p);
  if (it == cache.end())
    it = cache.emplace(pp.p, std::make_unique<const SeriesPair>(taylor_coeffs(pp, 60))).first;
  return *it->second;
}

}  // namespace detail

// Taylor-series evaluation inside the trusted part of the Picard disc.
inline ComplexEval eval_disc(const PParam& pp, cplx z) {
  const auto& cs = constants_for(pp);
  ComplexEval out;
  out.z = z;
  if (!(std::abs(z) < 0.9 * cs.picard_r)) {
    out.s = out.c = {std::numeric_limits<double>::quiet_NaN(), 0};
    out.status = ComplexStatus::rejected_outside_domain;
    return out;
  }
  const SeriesPair& sp = detail::series_for(pp);
  cplx s{0, 0}, c{0, 0};
  for (int k = sp.length - 1; k >= 0; --k) {
    s = s * z + sp.a[k];
    c = c * z + sp.b[k];
  }
  out.s = s;
  out.c = c;
  return out;
}

namespace detail {

struct MarchResult {
  ComplexEval eval;
  long steps = 0;
  double drift = 0;  // |s^p + c^p - 1| at the endpoint
  bool step_underflow = false;
};

inline void ode_rhs(const PParam& pp, cplx delta, cplx s, cplx c, cplx& ds, cplx& dc) {
  ds = delta * cpow_int(c, pp.p - 1);
  dc = -delta * cpow_int(s, pp.p - 1);
}

// Adaptive fifth-order marching (Dormand-Prince 5(4)) of the system along
// the polyline 0 -> targets[0] -> targets[1] -> ..., started from the
// origin series a little way along the first leg.  Local error is held to
// 1e-12 per unit of path length; a step below 1e-10 of the current segment
// aborts with the underflow flag (only reachable at a singular boundary).
inline MarchResult march_path(const PParam& pp, const std::vector<cplx>& targets,
                              double seed_radius = -1.0) {
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  const auto& cs = constants_for(pp);
  MarchResult out;
  cplx zcur{0, 0}, s{0, 0}, c{1, 0};
  bool seeded = false;
  for (cplx target : targets) {
    cplx delta = target - zcur;
    double seglen = std::abs(delta);
    if (seglen == 0.0) continue;
    if (!seeded) {
      double sr = (seed_radius > 0.0) ? seed_radius : 0.5 * cs.picard_r;
      sr = std::min({sr, 0.5 * seglen, 0.8 * 0.9 * cs.picard_r});
      if (sr > 0.0) {
        zcur += delta * (sr / seglen);
        const auto e0 = eval_disc(pp, zcur);
        s = e0.s;
        c = e0.c;
        delta = target - zcur;
        seglen = std::abs(delta);
      }
      seeded = true;
    }
    double sig = 0.0;
    double h = std::min(1.0, 0.5 / std::max(1.0, seglen));
    cplx k1s, k1c;
    ode_rhs(pp, delta, s, c, k1s, k1c);
    while (1.0 - sig > 1e-14) {
      if (h > 1.0 - sig) h = 1.0 - sig;
      if (h < 1e-10) {
        out.step_underflow = true;
        break;
      }
      cplx k2s, k2c, k3s, k3c, k4s, k4c, k5s, k5c, k6s, k6c, k7s, k7c;
      ode_rhs(pp, delta, s + h * (a21 * k1s), c + h * (a21 * k1c), k2s, k2c);
      ode_rhs(pp, delta, s + h * (a31 * k1s + a32 * k2s), c + h * (a31 * k1c + a32 * k2c),
              k3s, k3c);
      ode_rhs(pp, delta, s + h * (a41 * k1s + a42 * k2s + a43 * k3s),
              c + h * (a41 * k1c + a42 * k2c + a43 * k3c), k4s, k4c);
      ode_rhs(pp, delta, s + h * (a51 * k1s + a52 * k2s + a53 * k3s + a54 * k4s),
              c + h * (a51 * k1c + a52 * k2c + a53 * k3c + a54 * k4c), k5s, k5c);
      ode_rhs(pp, delta, s + h * (a61 * k1s + a62 * k2s + a63 * k3s + a64 * k4s + a65 * k5s),
              c + h * (a61 * k1c + a62 * k2c + a63 * k3c + a64 * k4c + a65 * k5c), k6s, k6c);
      const cplx y5s = s + h * (b1 * k1s + b3 * k3s + b4 * k4s + b5 * k5s + b6 * k6s);
      const cplx y5c = c + h * (b1 * k1c + b3 * k3c + b4 * k4c + b5 * k5c + b6 * k6c);
      ode_rhs(pp, delta, y5s, y5c, k7s, k7c);
      const double err = std::max(
          std::abs(h * (e1 * k1s + e3 * k3s + e4 * k4s + e5 * k5s + e6 * k6s + e7 * k7s)),
          std::abs(h * (e1 * k1c + e3 * k3c + e4 * k4c + e5 * k5c + e6 * k6c + e7 * k7c)));
      const double tol = 1e-12 * h * seglen * std::max({1.0, std::abs(s), std::abs(c)});
      if (err <= tol) {
        s = y5s;
        c = y5c;
        sig += h;
        k1s = k7s;
        k1c = k7c;
        ++out.steps;
      }
      const double fac = 0.9 * std::pow(tol / std::max(err, 5e-324), 0.2);
      h *= std::clamp(fac, 0.2, 5.0);
      if (out.steps > 2000000) {
        out.step_underflow = true;
        break;
      }
    }
    if (out.step_underflow) break;
    zcur = target;
  }
  out.eval.z = zcur;
  out.eval.s = s;
  out.eval.c = c;
  out.drift = std::abs(cpow_int(s, pp.p) + cpow_int(c, pp.p) - 1.0);
  // near the common poles of s and c the invariant residual scales like
  // ulp(|s|^p), so the acceptance gate is relative
  const double drift_scale = std::abs(cpow_int(s, pp.p)) + std::abs(cpow_int(c, pp.p)) + 1.0;
  out.eval.status = (out.step_underflow || out.drift > 1e-9 * drift_scale)
                        ? ComplexStatus::rejected_outside_domain
                        : ComplexStatus::ok;
  return out;
}

}  // namespace detail

inline detail::MarchResult march_full(const PParam& pp, cplx z, double seed_radius = -1.0) {
  return detail::march_path(pp, {z}, seed_radius);
}

// ODE marching along the straight segment from 0 to z.  The caller is
// responsible for keeping the segment inside a holomorphy domain; marching
// outside shows up as Pythagorean drift or step underflow, both of which
// reject the evaluation.
inline ComplexEval march(const PParam& pp, cplx z) { return march_full(pp, z).eval; }

// Full-domain evaluation: band reduction for even p, doubled-polygon
// routing (with conjugation pull-back) for odd p.
inline ComplexEval eval_complex(const PParam& pp, cplx z) {
  const auto& cs = constants_for(pp);
  ComplexEval out;
  out.z = z;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (pp.even) {
    if (!(std::abs(z.imag()) < cs.band_halfwidth)) {
      out.s = out.c = {nan, nan};
      out.status = ComplexStatus::rejected_outside_domain;
      return out;
    }
    const double twok = 2.0 * cs.k;
    const double shift = std::nearbyint(z.real() / twok);
    const cplx zred(z.real() - twok * shift, z.imag());
    const auto mr = detail::march_path(pp, {zred});
    if (mr.eval.status != ComplexStatus::ok) {
      out.s = out.c = {nan, nan};
      out.status = mr.eval.status;
      return out;
    }
    const int quarter = int(((static_cast<long long>(shift) % 4) + 4) % 4);
    const cplx ms = mr.eval.s, mc = mr.eval.c;
    switch (quarter) {
      case 0: out.s = ms; out.c = mc; break;
      case 1: out.s = mc; out.c = -ms; break;
      case 2: out.s = -ms; out.c = -mc; break;
      default: out.s = -mc; out.c = ms; break;
    }
    return out;
  }
  if (!detail::in_doubled_polygon(pp, z)) {
    out.s = out.c = {nan, nan};
    out.status = ComplexStatus::rejected_outside_domain;
    return out;
  }
  const bool conj_back = z.imag() < 0.0;
  const cplx zz = conj_back ? std::conj(z) : z;
  detail::MarchResult mr;
  if (detail::in_open_polygon(pp, zz)) {
    mr = detail::march_path(pp, {zz});
  } else {
    mr = detail::march_path(pp, {cplx(cs.k, 0.0), zz});
  }
  if (mr.eval.status != ComplexStatus::ok) {
    out.s = out.c = {nan, nan};
    out.status = mr.eval.status;
    return out;
  }
  out.s = conj_back ? std::conj(mr.eval.s) : mr.eval.s;
  out.c = conj_back ? std::conj(mr.eval.c) : mr.eval.c;
  return out;
}

// s/c with a pole marker (inf, nan) at the zeros of c and (nan, nan) for
// rejected points.
inline cplx t_complex(const PParam& pp, cplx z) {
  const auto e = eval_complex(pp, z);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (e.status != ComplexStatus::ok) return {nan, nan};
  if (std::abs(e.c) < 1e-9 * std::max(1.0, std::abs(e.s)))
    return {std::numeric_limits<double>::infinity(), nan};
  return e.s / e.c;
}

// Inverse-map route: solve tau(t) = w by Newton with homotopy along the
// ray from 0 (tau' = (1 + t^p)^{-2/p} is known in closed form), then
// c = (1 + t^p)^{-1/p} and s = t c with the principal branch, which is the
// continuous continuation from c(0) = 1 on the whole polygon.
inline ComplexEval sc_from_t(const PParam& pp, cplx w) {
  ComplexEval out;
  out.z = w;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (pp.p < 3 || !detail::in_open_polygon(pp, w)) {
    out.s = out.c = {nan, nan};
    out.status = ComplexStatus::rejected_outside_domain;
    return out;
  }
  if (w == cplx(0, 0)) return out;  // (0, 1) at the origin
  const auto& cs = constants_for(pp);
  const int p = pp.p;
  const int stages = 1 + int(std::ceil(std::abs(w) / (0.35 * cs.k)));
  cplx t{0, 0};
  for (int j = 1; j <= stages; ++j) {
    const cplx wj = w * (double(j) / stages);
    if (j == 1)
      t = wj * (1.0 + 2.0 * detail::cpow_int(wj, p) / (p * (p + 1.0)));
    bool converged = false;
    for (int it = 0; it < 40; ++it) {
      const cplx tp = detail::cpow_int(t, p);
      const cplx tau = (std::abs(tp) <= 0.9) ? hyp2f1::tau_hyp(pp, t)
                                             : quadrature::tau_quad(pp, t);
      const cplx resid = tau - wj;
      if (std::abs(resid) <= 1e-13 * (1.0 + std::abs(wj))) {
        converged = true;
        break;
      }
      t -= resid * std::pow(1.0 + tp, 2.0 / p);
      const double at = std::abs(t);
      if (at > 0.999999) t *= 0.999999 / at;
    }
    if (!converged) {
      out.s = out.c = {nan, nan};
      out.status = ComplexStatus::rejected_outside_domain;
      return out;
    }
  }
  const cplx tp = detail::cpow_int(t, p);
  out.c = std::pow(1.0 + tp, -1.0 / p);
  out.s = t * out.c;
  return out;
}

}  // namespace complex_trig

using complex_trig::cplx;
using complex_trig::ComplexStatus;
using complex_trig::ComplexEval;
using complex_trig::SeriesPair;
using complex_trig::ComplexDomainSpec;
using complex_trig::taylor_coeffs;
using complex_trig::polygon_geometry;
using complex_trig::eval_disc;
using complex_trig::march;
using complex_trig::eval_complex;
using complex_trig::t_complex;
using complex_trig::sc_from_t;

}  // namespace ptrig
