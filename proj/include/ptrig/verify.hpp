#pragma once
// Runnable invariant suites over all modules: per-p checks of the constant
// identities, quadrature identities, series-vs-quadrature oracle agreement,
// real and complex evaluator properties, and the fixed acceptance list the
// CLI exposes under `verify --acceptance`.  Checks compare independent
// computation routes wherever a relation could otherwise be satisfied by
// construction; sampling is deterministic (fixed seeds) so runs are
// reproducible bit for bit.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "complex_trig.hpp"
#include "constants.hpp"
#include "hyp2f1.hpp"
#include "quadrature.hpp"
#include "real_trig.hpp"

namespace ptrig {
namespace verify {

using cplx = std::complex<double>;

struct CheckResult {
  int p = 0;  // 0 for checks that are not parameterized by p
  std::string name;
  bool pass = false;
  double worst = 0;   // measured worst residual; negative when not residual-based
  double tol = 0;     // effective tolerance the check was judged against
  std::string detail;
};

namespace detail {

inline double urand(std::mt19937_64& g) {
  return std::ldexp(double(g() >> 11), -53);
}

inline double urange(std::mt19937_64& g, double lo, double hi) {
  return lo + (hi - lo) * urand(g);
}

inline std::uint64_t seed_for(int p, std::uint64_t salt) {
  return 0x9E3779B97F4A7C15ull * (salt + 1) + 0xD1B54A32D192ED03ull * (p + 1);
}

inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// Records residual-style checks: pass when worst <= max(default_tol, override).
struct Suite {
  std::vector<CheckResult>* out;
  int p;
  double tol_override;

  void residual(const std::string& name, double worst, double default_tol,
                std::string detail = "") {
    const double eff = std::max(default_tol, tol_override);
    out->push_back({p, name, worst <= eff, worst, eff, std::move(detail)});
  }
  void flag(const std::string& name, bool pass, std::string detail = "") {
    out->push_back({p, name, pass, -1.0, 0.0, std::move(detail)});
  }
};

inline cplx sample_open_polygon(const PParam& pp, std::mt19937_64& g,
                                double margin_frac = 0.05) {
  const auto& cs = constants_for(pp);
  for (;;) {
    cplx z(urange(g, -cs.l, cs.l), urange(g, -cs.l, cs.l));
    bool inside = true;
    for (int m = 0; m < pp.p && inside; ++m) {
      const cplx nrm = std::polar(1.0, 2.0 * constants::pi * m / pp.p);
      if (!((z * std::conj(nrm)).real() < cs.k * (1.0 - margin_frac))) inside = false;
    }
    if (inside) return z;
  }
}

inline cplx sample_doubled_polygon(const PParam& pp, std::mt19937_64& g,
                                   double margin_frac = 0.05) {
  const cplx u = sample_open_polygon(pp, g, margin_frac);
  if (g() & 1) return complex_trig::detail::reflect_right_edge(pp, u);
  return u;
}

inline cplx sample_band(const PParam& pp, std::mt19937_64& g, double re_halfspan_in_k,
                        double im_frac) {
  const auto& cs = constants_for(pp);
  const double im_half =
      std::isinf(cs.band_halfwidth) ? 1.0 : im_frac * cs.band_halfwidth;
  return {urange(g, -re_halfspan_in_k * cs.k, re_halfspan_in_k * cs.k),
          urange(g, -im_half, im_half)};
}

}  // namespace detail

// ---- global (p-independent) checks ----

inline std::vector<CheckResult> run_global_checks(double tol_override = 0.0) {
  std::vector<CheckResult> out;
  detail::Suite su{&out, 0, tol_override};

  {
    double worst = 0.0;
    for (double x : {0.1, 0.25, 1.0 / 3.0, 0.45}) {
      const double r = std::abs(gamma_fn(x) * gamma_fn(1.0 - x) *
                                    std::sin(constants::pi * x) / constants::pi -
                                1.0);
      worst = std::max(worst, r);
    }
    su.residual("gamma_reflection", worst, 1e-12);
  }
  {
    const double w1 = std::abs(gamma_fn(1.0) - 1.0);
    const double w2 = std::abs(gamma_fn(0.5) - std::sqrt(constants::pi));
    su.residual("gamma_classical_values", std::max(w1, w2), 1e-14);
  }
  {
    const double v1 = hyp2f1::gauss_2f1(0.5, 0.5, 1.5, 0.25);
    const double v2 = hyp2f1::gauss_2f1(0.5, 1.0, 1.5, -0.25);
    const double w = std::max(std::abs(0.5 * v1 - std::asin(0.5)),
                              std::abs(0.5 * v2 - std::atan(0.5)));
    su.residual("hyp_classical_arcsin_arctan", w, 1e-14);
  }
  {
    auto r = hyp2f1::gauss_2f1_full(0.5, 0.5, 1.5, 0.9);
    su.flag("hyp_term_cap_at_0p9",
            r.converged && r.terms <= hyp2f1::series_term_cap,
            "terms=" + std::to_string(r.terms));
  }
  return out;
}

// ---- per-p checks ----

namespace detail {

inline void constants_checks(const PParam& pp, Suite& su) {
  const auto& cs = constants_for(pp);
  const int p = pp.p;

  su.residual("constants_a_vs_quadrature",
              std::abs(cs.a - quadrature::a_integral_quad(pp).value), 1e-11);
  su.residual("constants_k_vs_quadrature",
              std::abs(cs.k - quadrature::k_integral_quad(pp).value), 1e-11);
  if (p >= 3) {
    const double ratio = 2.0 * std::cos(constants::pi / p);
    su.residual("constants_a_over_b_ratio", std::abs(cs.a / cs.b - ratio) / ratio,
                1e-12);
    su.residual("constants_l_equals_b", std::abs(cs.l - cs.b) / cs.b, 1e-12);
    su.residual("constants_b_vs_quadrature",
                std::abs(cs.b - quadrature::b_integral_quad(pp).value), 1e-11);
  }
  su.residual("constants_a_equals_2k", std::abs(cs.a - 2.0 * cs.k) / cs.a, 1e-12);
  {
    double want;
    if (p == 2) {
      want = 1.0;
    } else {
      long double acc = 1.0L;
      for (int i = 0; i < p - 2; ++i) acc *= (long double)(p - 2) / (p - 1);
      want = double(acc / (p - 1));
    }
    su.residual("constants_picard_formula", std::abs(cs.picard_r - want) / want, 1e-14);
  }
  if (p == 3) {
    su.residual("constants_a_equals_b_dixon", std::abs(cs.a - cs.b) / cs.a, 1e-12);
  } else if (p > 3) {
    su.flag("constants_b_below_a_below_2b", cs.b < cs.a && cs.a < 2.0 * cs.b);
  }
}

inline void quadrature_checks(const PParam& pp, Suite& su) {
  const auto& cs = constants_for(pp);
  const double kq = quadrature::k_integral_quad(pp).value;
  const double kh = quadrature::k_half_line_quad(pp).value;
  su.residual("quad_half_integral_identity", std::abs(kq - 0.5 * kh), 1e-11);
  su.residual("quad_substitution_identity",
              std::abs(quadrature::a_integral_quad(pp).value - kh), 1e-11);
  su.residual("quad_sigma_at_one", std::abs(quadrature::sigma0(pp, 1.0) - cs.a), 1e-12);
  {
    double worst = 0.0;
    bool monotone = true;
    double prev = -std::numeric_limits<double>::infinity();
    for (double x : {0.1, 0.35, 0.6, 0.85, 0.95}) {
      if (pp.even) {
        worst = std::max(worst, std::abs(quadrature::sigma0(pp, -x) +
                                         quadrature::sigma0(pp, x)));
      }
      const double v = quadrature::sigma0(pp, x);
      monotone = monotone && v > prev;
      prev = v;
    }
    if (pp.even) su.residual("quad_sigma_oddness", worst, 1e-15);
    su.flag("quad_sigma_monotone", monotone);
  }
  if (!pp.even) {
    // distance to the limit -b decays like X^(2-p)/(p-2); at X = 1e6 that is
    // 1e-6 for p = 3 and below rounding for p >= 5
    const double want = std::pow(1e6, 2 - pp.p) / (pp.p - 2);
    su.residual("quad_sigma_odd_far_limit",
                std::abs(quadrature::sigma_odd(pp, -1e6) + cs.b - want), 1e-11);
  }
  {
    double worst = 0.0;
    for (double x : {-0.75, -0.2, 0.4, 0.9}) {
      const double lhs = quadrature::gamma_plus(pp, x);
      const double sig = pp.even ? quadrature::sigma0(pp, x) : quadrature::sigma_odd(pp, x);
      worst = std::max(worst, std::abs(lhs - (cs.a - sig)));
    }
    if (!pp.even) {
      const double lhs = quadrature::gamma_plus(pp, -3.0);
      worst = std::max(worst,
                       std::abs(lhs - (cs.a - quadrature::sigma_odd(pp, -3.0))));
    }
    su.residual("quad_gamma_plus_vs_sigma", worst, 1e-11);
  }
  su.residual("quad_tau_edge_midpoint",
              std::abs(quadrature::tau_quad(pp, {1.0, 0.0}) - cplx(cs.k, 0.0)), 1e-12);
  if (pp.p >= 3) {
    su.residual("quad_tau_vertex",
                std::abs(quadrature::tau_quad(pp, pp.beta) - pp.beta * cs.l), 1e-10);
  }
}

inline void hyp_oracle_checks(const PParam& pp, Suite& su) {
  std::mt19937_64 g(seed_for(pp.p, 17));
  double wsig = 0.0, wtau = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double x = urange(g, -0.9, 0.9);
    const double sq = pp.even ? quadrature::sigma0(pp, x) : quadrature::sigma_odd(pp, x);
    wsig = std::max(wsig, std::abs(hyp2f1::sigma_hyp(pp, x) - sq));
    const cplx tq = quadrature::tau_quad(pp, {x, 0.0});
    wtau = std::max(wtau, std::abs(hyp2f1::tau_hyp(pp, cplx(x, 0.0)) - tq));
  }
  for (int i = 0; i < 20; ++i) {
    const cplx w = std::polar(0.6, urange(g, 0.0, 2.0 * constants::pi));
    wsig = std::max(wsig,
                    std::abs(hyp2f1::sigma_hyp(pp, w) - quadrature::sigma_segment(pp, w)));
    wtau = std::max(wtau, std::abs(hyp2f1::tau_hyp(pp, w) - quadrature::tau_quad(pp, w)));
  }
  su.residual("hyp_sigma_oracle_agreement", wsig, 1e-11);
  su.residual("hyp_tau_oracle_agreement", wtau, 1e-11);
}

inline void real_checks(const PParam& pp, Suite& su) {
  using real_trig::RealStatus;
  const auto& cs = constants_for(pp);
  const int p = pp.p;
  std::mt19937_64 g(seed_for(p, 31));

  {  // round trip through the parity-appropriate sigma; recovering x from s
    // costs eps/|c|^{p-1}, so samples keep a conditioning margin away from
    // the flat endpoints and odd p switches to the c route past the quarter
    const double margin = std::pow(1.1e-5, 1.0 / (p - 1.0));
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      if (pp.even) {
        const double u = urange(g, -cs.a + margin, cs.a - margin);
        const auto e = real_trig::eval_real(pp, u);
        worst = std::max(worst, std::abs(quadrature::sigma0(pp, e.s) - u));
      } else {
        const double x = urange(g, -cs.b + 0.02, cs.a + cs.b - 0.02);
        const auto e = real_trig::eval_real(pp, x);
        if (x <= cs.k)
          worst = std::max(worst, std::abs(quadrature::sigma_odd(pp, e.s) - x));
        else
          worst = std::max(worst, std::abs(quadrature::sigma_odd(pp, e.c) - (cs.a - x)));
      }
    }
    su.residual("real_sigma_round_trip", worst, 1e-10);
  }
  {  // Pythagorean residual in the moderate zone
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double x = pp.even ? urange(g, -2.0 * cs.a, 2.0 * cs.a)
                               : urange(g, -cs.b + 0.05, cs.a + cs.b - 0.05);
      const auto e = real_trig::eval_real(pp, x);
      worst = std::max(worst, std::abs(quadrature::detail::ipow(e.s, p) +
                                       quadrature::detail::ipow(e.c, p) - 1.0));
    }
    su.residual("real_pythagorean", worst, 1e-10);
  }
  {  // central finite differences against the defining system
    double worst = 0.0;
    const double h = 1e-5;
    for (int i = 0; i < 50; ++i) {
      const double x = pp.even ? urange(g, -2.0 * cs.a, 2.0 * cs.a)
                               : urange(g, -cs.b + 0.2, cs.a + cs.b - 0.2);
      const auto em = real_trig::eval_real(pp, x - h);
      const auto e0 = real_trig::eval_real(pp, x);
      const auto ep = real_trig::eval_real(pp, x + h);
      const double ds = (ep.s - em.s) / (2.0 * h);
      const double dc = (ep.c - em.c) / (2.0 * h);
      worst = std::max(worst, std::abs(ds - quadrature::detail::ipow(e0.c, p - 1)));
      worst = std::max(worst, std::abs(dc + quadrature::detail::ipow(e0.s, p - 1)));
    }
    su.residual("real_ode_residual_fd", worst, 1e-6);
  }
  if (pp.even) {
    double wpar = 0.0, wper = 0.0, whalf = 0.0;
    for (int i = 0; i < 40; ++i) {
      const double x = urange(g, -2.0 * cs.a, 2.0 * cs.a);
      const auto e = real_trig::eval_real(pp, x);
      const auto en = real_trig::eval_real(pp, -x);
      wpar = std::max({wpar, std::abs(en.s + e.s), std::abs(en.c - e.c)});
      const auto ep = real_trig::eval_real(pp, x + 4.0 * cs.a);
      wper = std::max({wper, std::abs(ep.s - e.s), std::abs(ep.c - e.c)});
      const auto eh = real_trig::eval_real(pp, x + 2.0 * cs.a);
      whalf = std::max({whalf, std::abs(eh.s + e.s), std::abs(eh.c + e.c)});
    }
    su.residual("real_parity", wpar, 1e-12);
    su.residual("real_periodicity", wper, 1e-10);
    su.residual("real_half_period", whalf, 1e-10);
  }
  {  // complementarity c(a - x) = s(x) on [0, a]; two independent inversions
    double worst = 0.0;
    for (int i = 0; i < 30; ++i) {
      const double x = urange(g, 0.0, cs.a);
      const auto e1 = real_trig::eval_real(pp, cs.a - x);
      const auto e2 = real_trig::eval_real(pp, x);
      worst = std::max(worst, std::abs(e1.c - e2.s));
    }
    su.residual("real_complementarity", worst, 1e-10);
  }
  if (!pp.even) {
    double prev = 0.0;
    bool increasing = true;
    double last = 0.0;
    for (int k = 1; k <= 6; ++k) {
      const double x = cs.a + cs.b - std::pow(10.0, -k);
      const auto e = real_trig::eval_real(pp, x);
      increasing = increasing && e.status == RealStatus::ok && e.s > prev;
      prev = e.s;
      last = e.s;
    }
    su.flag("real_blowup_monotone_approach", increasing,
            "s(upper-1e-6)=" + fmt(last));
    if (p == 3) {
      su.flag("real_blowup_reach_p3", last > 1e3, "s=" + fmt(last));
    }
    bool rej = true;
    for (double x : {-cs.b, cs.a + cs.b, -cs.b - 1e-6, cs.a + cs.b + 1e-6, -1e3, 1e3}) {
      rej = rej && real_trig::eval_real(pp, x).status == RealStatus::out_of_domain;
    }
    bool acc = true;
    for (double x : {-cs.b + 1e-6, cs.a + cs.b - 1e-6, 0.0, cs.a}) {
      acc = acc && real_trig::eval_real(pp, x).status != RealStatus::out_of_domain;
    }
    su.flag("real_domain_rejection", rej && acc);
  }
  if (p == 2) {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double x = 2.0 * constants::pi * i / 999.0;
      const auto e = real_trig::eval_real(pp, x);
      worst = std::max({worst, std::abs(e.s - std::sin(x)), std::abs(e.c - std::cos(x))});
    }
    su.residual("real_classical_sine", worst, 1e-10);
    su.residual("real_a_is_half_pi", std::abs(cs.a - 0.5 * constants::pi), 1e-13);
  }
  {
    const auto e = real_trig::eval_real(pp, cs.k);
    const double v = std::pow(2.0, -1.0 / p);
    su.residual("real_edge_midpoint_value",
                std::max(std::abs(e.s - v), std::abs(e.c - v)), 1e-10);
    su.residual("real_t_at_edge_midpoint", std::abs(real_trig::t_real(pp, cs.k) - 1.0),
                1e-10);
  }
  {
    const auto ea = real_trig::eval_real(pp, cs.a);
    bool ok = ea.status == RealStatus::at_pole_of_t && std::isinf(ea.t) && ea.t > 0;
    if (pp.even) {
      const auto en = real_trig::eval_real(pp, -cs.a);
      ok = ok && en.status == RealStatus::at_pole_of_t && std::isinf(en.t) && en.t < 0;
      const auto e3 = real_trig::eval_real(pp, 3.0 * cs.a);
      ok = ok && e3.status == RealStatus::at_pole_of_t;
    }
    su.flag("real_t_pole_at_c_zeros", ok);
  }
}

inline void complex_checks(const PParam& pp, Suite& su) {
  namespace ct = complex_trig;
  const auto& cs = constants_for(pp);
  const int p = pp.p;
  std::mt19937_64 g(seed_for(p, 47));
  auto cpow = [&](cplx v) { return quadrature::detail::cpow_int(v, p); };

  {  // Pythagorean at full-domain points through the public evaluator
    double worst = 0.0;
    int rejected = 0;
    for (int i = 0; i < 200; ++i) {
      const cplx z = pp.even ? sample_band(pp, g, 4.5, 0.9)
                             : sample_doubled_polygon(pp, g);
      const auto e = ct::eval_complex(pp, z);
      if (e.status != ct::ComplexStatus::ok) {
        ++rejected;
        continue;
      }
      worst = std::max(worst, std::abs(cpow(e.s) + cpow(e.c) - 1.0));
    }
    su.residual("cplx_pythagorean", worst, 1e-9,
                rejected ? "rejected=" + std::to_string(rejected) : "");
  }
  {  // conjugation symmetry, raw marching on both sides
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const cplx z = pp.even ? sample_band(pp, g, 0.9, 0.8)
                             : sample_open_polygon(pp, g);
      const auto e1 = ct::march(pp, std::conj(z));
      const auto e2 = ct::march(pp, z);
      worst = std::max({worst, std::abs(e1.s - std::conj(e2.s)),
                        std::abs(e1.c - std::conj(e2.c))});
    }
    su.residual("cplx_conjugation", worst, 1e-9);
  }
  {  // rotation equivariance inside the Picard disc
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const cplx z =
          std::polar(0.8 * 0.9 * cs.picard_r * (0.3 + 0.7 * urand(g)),
                     urange(g, 0.0, 2.0 * constants::pi));
      const auto e1 = ct::march(pp, pp.alpha * z);
      const auto e2 = ct::march(pp, z);
      worst = std::max({worst, std::abs(e1.s - pp.alpha * e2.s),
                        std::abs(e1.c - e2.c)});
    }
    su.residual("cplx_rotation", worst, 1e-10);
  }
  if (pp.even) {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const cplx z = sample_band(pp, g, 0.9, 0.8);
      const auto e1 = ct::march(pp, -z);
      const auto e2 = ct::march(pp, z);
      worst = std::max({worst, std::abs(e1.s + e2.s), std::abs(e1.c - e2.c)});
    }
    su.residual("cplx_parity", worst, 1e-9);
  } else {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const cplx z =
          std::polar(0.8 * 0.9 * cs.picard_r * (0.3 + 0.7 * urand(g)),
                     urange(g, 0.0, 2.0 * constants::pi));
      const auto e1 = ct::march(pp, -pp.beta * z);
      const auto e2 = ct::march(pp, z);
      worst = std::max({worst, std::abs(e1.s + pp.beta * e2.s),
                        std::abs(e1.c - e2.c)});
    }
    su.residual("cplx_beta_symmetry", worst, 1e-10);
  }
  {  // complementarity c(2k - z) = s(z); reflected side marched via the midpoint
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      cplx z;
      if (pp.even) {
        z = sample_band(pp, g, 0.8, 0.7);
      } else {
        z = sample_open_polygon(pp, g, 0.12);
        if (z.imag() < 0) z = std::conj(z);
      }
      const cplx zr = 2.0 * cs.k - z;
      const auto er = pp.even ? ct::march(pp, zr)
                              : ct::detail::march_path(pp, {cplx(cs.k, 0.0), zr}).eval;
      const auto e = ct::march(pp, z);
      worst = std::max(worst, std::abs(er.c - e.s));
    }
    su.residual("cplx_complementarity", worst, 1e-9);
  }
  if (pp.even) {
    double wper = 0.0, wtper = 0.0, wzero = 0.0;
    for (int i = 0; i < 12; ++i) {
      const cplx z = sample_band(pp, g, 0.8, 0.7);
      const auto e1 = ct::march(pp, z + 8.0 * cs.k);
      const auto e2 = ct::march(pp, z);
      wper = std::max({wper, std::abs(e1.s - e2.s), std::abs(e1.c - e2.c)});
      const cplx zt(urange(g, -0.6 * cs.k, 0.6 * cs.k),
                    std::isinf(cs.band_halfwidth)
                        ? urange(g, -0.5, 0.5)
                        : urange(g, -0.6, 0.6) * cs.band_halfwidth);
      const auto f1 = ct::march(pp, zt + 4.0 * cs.k);
      const auto f2 = ct::march(pp, zt);
      wtper = std::max(wtper, std::abs(f1.s / f1.c - f2.s / f2.c));
    }
    su.residual("cplx_period_8k", wper, 1e-9);
    su.residual("cplx_t_period_4k", wtper, 1e-8);
    for (int n = -2; n <= 2; ++n) {
      const auto es = ct::eval_complex(pp, cplx(4.0 * n * cs.k, 0.0));
      const auto ec = ct::eval_complex(pp, cplx((4.0 * n + 2.0) * cs.k, 0.0));
      wzero = std::max({wzero, std::abs(es.s), std::abs(ec.c)});
    }
    su.residual("cplx_zero_sets", wzero, 1e-9);
    if (!std::isinf(cs.band_halfwidth)) {
      double wseam = 0.0;
      for (double f : {-0.8, -0.5, -0.2, 0.2, 0.5, 0.8}) {
        const cplx t = ct::t_complex(pp, cplx(cs.k, f * cs.band_halfwidth));
        wseam = std::max(wseam, std::abs(std::abs(t) - 1.0));
      }
      su.residual("cplx_unit_modulus_on_shared_edge", wseam, 1e-6);
    }
  }
  {  // reflection t(2k - z) t(z) = 1 at points with t away from 0 and inf
    double worst = 0.0;
    for (int i = 0; i < 12; ++i) {
      const double imh = std::isinf(cs.band_halfwidth) ? 0.4 : 0.4 * cs.band_halfwidth;
      const cplx z(urange(g, 0.3 * cs.k, 0.7 * cs.k), urange(g, -imh, imh));
      const auto e = ct::march(pp, z);
      const cplx zr = 2.0 * cs.k - z;
      const auto er = (pp.even || ct::detail::in_open_polygon(pp, zr))
                          ? ct::march(pp, zr)
                          : ct::detail::march_path(pp, {cplx(cs.k, 0.0), zr}).eval;
      worst = std::max(worst, std::abs((er.s / er.c) * (e.s / e.c) - 1.0));
    }
    su.residual("cplx_t_reflection", worst, 1e-9);
  }
  if (p >= 3) {  // radial approach of t to the vertex root of t^p = -1
    double prev = std::numeric_limits<double>::infinity();
    bool monotone = true;
    double last = 0.0;
    for (double r : {0.9, 0.99, 0.999}) {
      const cplx t = ct::t_complex(pp, r * pp.beta * cs.l);
      last = std::abs(cpow(t) + 1.0);
      monotone = monotone && last < prev;
      prev = last;
    }
    su.flag("cplx_vertex_t_approach", monotone && last < 1e-2,
            "final=" + fmt(last));
  }
  {
    const auto e = ct::eval_complex(pp, cplx(cs.k, 0.0));
    const double v = std::pow(2.0, -1.0 / p);
    su.residual("cplx_edge_midpoint_value",
                std::max(std::abs(e.s - v), std::abs(e.c - v)), 1e-10);
    const cplx t = ct::t_complex(pp, cplx(cs.k, 0.0));
    su.residual("cplx_t_edge_midpoint", std::abs(t - 1.0), 1e-10);
    const auto e2 = ct::eval_complex(pp, cplx(2.0 * cs.k, 0.0));
    su.residual("cplx_c_zero_at_2k", std::abs(e2.c), 1e-9);
  }
  if (p >= 3) {  // the three engines against each other near the origin
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const cplx z = std::polar(0.9 * cs.picard_r * urange(g, 0.55, 0.85),
                                urange(g, 0.0, 2.0 * constants::pi));
      const auto e1 = ct::eval_disc(pp, z);
      const auto e2 = ct::march_full(pp, z, 0.25 * std::abs(z)).eval;
      const auto e3 = ct::sc_from_t(pp, z);
      worst = std::max({worst, std::abs(e1.s - e2.s), std::abs(e1.c - e2.c),
                        std::abs(e2.s - e3.s), std::abs(e2.c - e3.c),
                        std::abs(e1.s - e3.s), std::abs(e1.c - e3.c)});
    }
    su.residual("cplx_engine_agreement", worst, 1e-9);
  }
  {  // quotient system residuals under finite differences on the real line
    double wode = 0.0, wcsq = 0.0;
    const double h = 1e-5;
    int found = 0;
    while (found < 50) {
      const double x = urange(g, -0.55 * cs.a, 0.55 * cs.a);
      const auto e0 = real_trig::eval_real(pp, x);
      if (!(std::abs(e0.c) >= 0.6)) continue;
      ++found;
      const double tm = real_trig::t_real(pp, x - h);
      const double tp = real_trig::t_real(pp, x + h);
      const double td = (tp - tm) / (2.0 * h);
      const double t0 = e0.t;
      const double lhs = std::pow(td, p);
      const double tpow = quadrature::detail::ipow(t0, p);
      wode = std::max(wode, std::abs(lhs - (1.0 + tpow) * (1.0 + tpow)));
      wcsq = std::max(wcsq, std::abs(td - 1.0 / (e0.c * e0.c)));
    }
    su.residual("cplx_quotient_ode_fd", wode, 1e-4);
    su.residual("cplx_t_derivative_vs_c", wcsq, 1e-5);
  }
  {  // series sparsity and low-order values
    const auto sp = ct::taylor_coeffs(pp, 60);
    bool sparsity = true;
    for (int nIdx = 0; nIdx < sp.length; ++nIdx) {
      if (nIdx % p != 1 && sp.a[nIdx] != 0.0) sparsity = false;
      if (nIdx % p != 0 && sp.b[nIdx] != 0.0) sparsity = false;
    }
    su.flag("series_exact_sparsity", sparsity);
    if (p == 2) {
      const double w = std::max({std::abs(sp.a[3] + 1.0 / 6.0),
                                 std::abs(sp.b[2] + 0.5),
                                 std::abs(sp.a[5] - 1.0 / 120.0)});
      su.residual("series_classical_sine_cosine", w, 1e-16);
    }
    if (p == 4) {
      const double w = std::max({std::abs(sp.a[5] + 3.0 / 20.0),
                                 std::abs(sp.b[4] + 0.25),
                                 std::abs(sp.a[9] - 19.0 / 480.0)});
      su.residual("series_low_order_values", w, 1e-16);
    }
  }
  if (p == 2) {  // entire classical oracle in the plane
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const cplx z(urange(g, -3.0, 3.0), urange(g, -1.0, 1.0));
      const auto e = ct::eval_complex(pp, z);
      worst = std::max({worst, std::abs(e.s - std::sin(z)), std::abs(e.c - std::cos(z))});
    }
    su.residual("cplx_classical_sin_cos", worst, 1e-10);
  }
}

}  // namespace detail

inline std::vector<CheckResult> run_checks(int p, double tol_override = 0.0) {
  const PParam pp = PParam::make(p);
  std::vector<CheckResult> out;
  detail::Suite su{&out, p, tol_override};
  detail::constants_checks(pp, su);
  detail::quadrature_checks(pp, su);
  detail::hyp_oracle_checks(pp, su);
  detail::real_checks(pp, su);
  detail::complex_checks(pp, su);
  return out;
}

// ---- fixed acceptance list ----

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace detail {

inline std::string worst_str(double worst, double tol) {
  return "worst=" + fmt(worst) + " tol=" + fmt(tol);
}

}  // namespace detail

inline std::vector<CriterionResult> run_acceptance() {
  using detail::fmt;
  namespace ct = complex_trig;
  std::vector<CriterionResult> out;

  {  // 1: constants cross-validation
    double wq = 0.0, wr = 0.0, wk = 0.0, wl = 0.0;
    for (int p = 2; p <= 10; ++p) {
      const PParam pp = PParam::make(p);
      const auto& cs = constants_for(pp);
      wq = std::max(wq, std::abs(cs.a - quadrature::a_integral_quad(pp).value));
      if (p >= 3) {
        const double ratio = 2.0 * std::cos(constants::pi / p);
        wr = std::max(wr, std::abs(cs.a / cs.b - ratio) / ratio);
        wl = std::max(wl, std::abs(cs.l - cs.b) / cs.b);
      }
      wk = std::max(wk, std::abs(cs.a - 2.0 * cs.k) / cs.a);
    }
    const bool pass = wq < 1e-11 && wr < 1e-12 && wk < 1e-12 && wl < 1e-12;
    out.push_back({1, "constants_cross_validation", pass,
                   "quad=" + fmt(wq) + " ratio=" + fmt(wr) + " a2k=" + fmt(wk) +
                       " lb=" + fmt(wl)});
  }
  {  // 2: classical reduction at p = 2
    const PParam pp = PParam::make(2);
    const auto& cs = constants_for(pp);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double x = 2.0 * constants::pi * i / 999.0;
      const auto e = real_trig::eval_real(pp, x);
      worst = std::max({worst, std::abs(e.s - std::sin(x)), std::abs(e.c - std::cos(x))});
    }
    const double wa = std::abs(cs.a - 0.5 * constants::pi);
    const bool pass = worst < 1e-10 && wa < 1e-13;
    out.push_back({2, "classical_reduction_p2", pass,
                   "max_err=" + fmt(worst) + " a_residual=" + fmt(wa)});
  }
  {  // 3: Pythagorean identity, real and complex
    double wreal = 0.0, wcplx = 0.0;
    for (int p : {3, 4, 5, 6, 8}) {
      const PParam pp = PParam::make(p);
      const auto& cs = constants_for(pp);
      std::mt19937_64 g(detail::seed_for(p, 301));
      for (int i = 0; i < 200; ++i) {
        const double x = pp.even ? detail::urange(g, -2.0 * cs.a, 2.0 * cs.a)
                                 : detail::urange(g, -cs.b + 0.05, cs.a + cs.b - 0.05);
        const auto e = real_trig::eval_real(pp, x);
        wreal = std::max(wreal, std::abs(quadrature::detail::ipow(e.s, p) +
                                         quadrature::detail::ipow(e.c, p) - 1.0));
      }
      int got = 0;
      while (got < 200) {
        const cplx z = pp.even ? detail::sample_band(pp, g, 4.5, 0.9)
                               : detail::sample_doubled_polygon(pp, g);
        const auto e = ct::eval_complex(pp, z);
        if (e.status != ct::ComplexStatus::ok) continue;
        ++got;
        wcplx = std::max(wcplx, std::abs(quadrature::detail::cpow_int(e.s, p) +
                                         quadrature::detail::cpow_int(e.c, p) - 1.0));
      }
    }
    const bool pass = wreal < 1e-10 && wcplx < 1e-9;
    out.push_back({3, "pythagorean_identity", pass,
                   "real=" + fmt(wreal) + " complex=" + fmt(wcplx)});
  }
  {  // 4: real periodicity for even p
    double worst = 0.0;
    for (int p : {4, 6, 8}) {
      const PParam pp = PParam::make(p);
      const auto& cs = constants_for(pp);
      for (int i = 0; i < 200; ++i) {
        const double x = 4.0 * cs.a * i / 199.0;
        const auto e1 = real_trig::eval_real(pp, x + 4.0 * cs.a);
        const auto e2 = real_trig::eval_real(pp, x);
        worst = std::max(worst, std::abs(e1.s - e2.s));
      }
    }
    out.push_back({4, "real_periodicity_even_p", worst < 1e-10,
                   "worst=" + fmt(worst)});
  }
  {  // 5: odd-p maximal domain with |s| > 100 at 1e-6 inside both ends
    bool pass = true;
    std::string detail;
    for (int p : {3, 5, 7}) {
      const PParam pp = PParam::make(p);
      const auto& cs = constants_for(pp);
      const double d = 1e-6;
      const auto elo = real_trig::eval_real(pp, -cs.b + d);
      const auto ehi = real_trig::eval_real(pp, cs.a + cs.b - d);
      const bool inside_ok = elo.status == real_trig::RealStatus::ok &&
                             ehi.status == real_trig::RealStatus::ok &&
                             std::abs(elo.s) > 1e2 && std::abs(ehi.s) > 1e2;
      const bool outside_rejected =
          real_trig::eval_real(pp, -cs.b - d).status ==
              real_trig::RealStatus::out_of_domain &&
          real_trig::eval_real(pp, cs.a + cs.b + d).status ==
              real_trig::RealStatus::out_of_domain;
      pass = pass && inside_ok && outside_rejected;
      detail += "p" + std::to_string(p) + ":|s|=" + fmt(std::abs(ehi.s)) + " ";
    }
    out.push_back({5, "odd_p_maximal_domain", pass, detail + "(required > 100)"});
  }
  {  // 6: hypergeometric oracle vs quadrature
    double worst = 0.0;
    for (int p = 2; p <= 8; ++p) {
      const PParam pp = PParam::make(p);
      std::mt19937_64 g(detail::seed_for(p, 601));
      for (int i = 0; i < 20; ++i) {
        const double x = detail::urange(g, -0.9, 0.9);
        const double sq =
            pp.even ? quadrature::sigma0(pp, x) : quadrature::sigma_odd(pp, x);
        worst = std::max(worst, std::abs(hyp2f1::sigma_hyp(pp, x) - sq));
        worst = std::max(worst, std::abs(hyp2f1::tau_hyp(pp, cplx(x, 0.0)) -
                                         quadrature::tau_quad(pp, {x, 0.0})));
      }
      for (int i = 0; i < 20; ++i) {
        const cplx w = std::polar(0.6, detail::urange(g, 0.0, 2.0 * constants::pi));
        worst = std::max(worst, std::abs(hyp2f1::sigma_hyp(pp, w) -
                                         quadrature::sigma_segment(pp, w)));
        worst = std::max(worst,
                         std::abs(hyp2f1::tau_hyp(pp, w) - quadrature::tau_quad(pp, w)));
      }
    }
    out.push_back({6, "hypergeometric_oracle", worst < 1e-11, "worst=" + fmt(worst)});
  }
  {  // 7: complex symmetry family at 1e-9
    double worst = 0.0;
    std::string wname;
    auto upd = [&](const char* nm, double v) {
      if (v > worst) {
        worst = v;
        wname = nm;
      }
    };
    for (int p : {3, 4, 5, 6}) {
      const PParam pp = PParam::make(p);
      const auto& cs = constants_for(pp);
      std::mt19937_64 g(detail::seed_for(p, 701));
      for (int i = 0; i < 10; ++i) {
        const cplx z = pp.even ? detail::sample_band(pp, g, 0.9, 0.8)
                               : detail::sample_open_polygon(pp, g);
        const auto e = ct::march(pp, z);
        const auto ec = ct::march(pp, std::conj(z));
        upd("conj", std::abs(ec.s - std::conj(e.s)));
        upd("conj", std::abs(ec.c - std::conj(e.c)));
        const cplx zd =
            std::polar(0.8 * 0.9 * cs.picard_r * (0.3 + 0.7 * detail::urand(g)),
                       detail::urange(g, 0.0, 2.0 * constants::pi));
        const auto d1 = ct::march(pp, pp.alpha * zd);
        const auto d2 = ct::march(pp, zd);
        upd("rotation", std::abs(d1.s - pp.alpha * d2.s));
        upd("rotation", std::abs(d1.c - d2.c));
        if (pp.even) {
          const auto en = ct::march(pp, -z);
          upd("parity", std::abs(en.s + e.s));
          upd("parity", std::abs(en.c - e.c));
          const auto e8 = ct::march(pp, z + 8.0 * cs.k);
          upd("period_8k", std::abs(e8.s - e.s));
          upd("period_8k", std::abs(e8.c - e.c));
        } else {
          const auto eb = ct::march(pp, -pp.beta * zd);
          upd("beta_symmetry", std::abs(eb.s + pp.beta * d2.s));
          upd("beta_symmetry", std::abs(eb.c - d2.c));
        }
        cplx zc = z;
        if (!pp.even && zc.imag() < 0) zc = std::conj(zc);
        const cplx zr = 2.0 * cs.k - zc;
        const auto er = pp.even ? ct::march(pp, zr)
                                : ct::detail::march_path(pp, {cplx(cs.k, 0.0), zr}).eval;
        const auto ez = ct::march(pp, zc);
        upd("complementarity", std::abs(er.c - ez.s));
        const double imh =
            std::isinf(cs.band_halfwidth) ? 0.4 : 0.35 * cs.band_halfwidth;
        const cplx zt(detail::urange(g, 0.3 * cs.k, 0.7 * cs.k),
                      detail::urange(g, -imh, imh));
        const auto t0 = ct::march(pp, zt);
        const cplx ztr = 2.0 * cs.k - zt;
        const auto tr = (pp.even || ct::detail::in_open_polygon(pp, ztr))
                            ? ct::march(pp, ztr)
                            : ct::detail::march_path(pp, {cplx(cs.k, 0.0), ztr}).eval;
        upd("t_reflection", std::abs((tr.s / tr.c) * (t0.s / t0.c) - 1.0));
        if (pp.even) {
          const auto t4 = ct::march(pp, zt + 4.0 * cs.k);
          upd("t_period_4k", std::abs(t4.s / t4.c - t0.s / t0.c));
        }
      }
    }
    out.push_back({7, "complex_symmetries", worst < 1e-9,
                   "worst=" + fmt(worst) + " (" + wname + ")"});
  }
  {  // 8: quotient ODE residual under finite differences
    double worst = 0.0;
    for (int p : {3, 4, 5}) {
      const PParam pp = PParam::make(p);
      const auto& cs = constants_for(pp);
      std::mt19937_64 g(detail::seed_for(p, 801));
      const double h = 1e-5;
      int found = 0;
      while (found < 50) {
        const double x = detail::urange(g, -0.55 * cs.a, 0.55 * cs.a);
        const auto e0 = real_trig::eval_real(pp, x);
        if (!(std::abs(e0.c) >= 0.6)) continue;
        ++found;
        const double td =
            (real_trig::t_real(pp, x + h) - real_trig::t_real(pp, x - h)) / (2.0 * h);
        const double tpw = quadrature::detail::ipow(e0.t, p);
        worst = std::max(worst, std::abs(std::pow(td, p) - (1.0 + tpw) * (1.0 + tpw)));
      }
    }
    out.push_back({8, "quotient_ode_residual", worst < 1e-4, "worst=" + fmt(worst)});
  }
  {  // 9: special values and the vertex limit
    double wmid = 0.0, wzero = 0.0, wvert = 0.0;
    for (int p : {3, 4, 5, 6}) {
      const PParam pp = PParam::make(p);
      const auto& cs = constants_for(pp);
      const auto e = real_trig::eval_real(pp, cs.k);
      const double v = std::pow(2.0, -1.0 / p);
      wmid = std::max({wmid, std::abs(e.s - v), std::abs(e.c - v),
                       std::abs(real_trig::t_real(pp, cs.k) - 1.0)});
      wzero = std::max(wzero, std::abs(ct::eval_complex(pp, cplx(2.0 * cs.k, 0.0)).c));
      const cplx t = ct::t_complex(pp, 0.999 * pp.beta * cs.l);
      wvert = std::max(wvert, std::abs(quadrature::detail::cpow_int(t, p) + 1.0));
    }
    const bool pass = wmid < 1e-10 && wzero < 1e-9 && wvert < 1e-2;
    out.push_back({9, "special_values", pass,
                   "midpoint=" + fmt(wmid) + " c2k=" + fmt(wzero) +
                       " vertex=" + fmt(wvert)});
  }
  {  // 10: three-engine agreement near the origin
    double worst = 0.0;
    for (int p : {3, 4, 5, 6}) {
      const PParam pp = PParam::make(p);
      const auto& cs = constants_for(pp);
      std::mt19937_64 g(detail::seed_for(p, 1001));
      for (int i = 0; i < 50; ++i) {
        const cplx z = std::polar(0.9 * cs.picard_r * detail::urange(g, 0.55, 0.85),
                                  detail::urange(g, 0.0, 2.0 * constants::pi));
        const auto e1 = ct::eval_disc(pp, z);
        const auto e2 = ct::march_full(pp, z, 0.25 * std::abs(z)).eval;
        const auto e3 = ct::sc_from_t(pp, z);
        worst = std::max({worst, std::abs(e1.s - e2.s), std::abs(e1.c - e2.c),
                          std::abs(e2.s - e3.s), std::abs(e2.c - e3.c),
                          std::abs(e1.s - e3.s), std::abs(e1.c - e3.c)});
      }
    }
    out.push_back({10, "engine_agreement", worst < 1e-9, "worst=" + fmt(worst)});
  }
  {  // 11: exact Taylor sparsity
    bool pass = true;
    for (int p = 3; p <= 8; ++p) {
      const auto sp = ct::taylor_coeffs(PParam::make(p), 60);
      for (int nIdx = 0; nIdx < sp.length; ++nIdx) {
        if (nIdx % p != 1 && sp.a[nIdx] != 0.0) pass = false;
        if (nIdx % p != 0 && sp.b[nIdx] != 0.0) pass = false;
      }
    }
    out.push_back({11, "taylor_sparsity", pass, pass ? "all off-pattern zero" : "nonzero off-pattern entry"});
  }
  return out;
}

}  // namespace verify
}  // namespace ptrig
