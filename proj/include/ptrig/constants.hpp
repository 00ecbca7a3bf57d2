#pragma once
// Parameter bundle, gamma function, and the constant set attached to each
// exponent p of the system s' = c^(p-1), c' = -s^(p-1), s(0)=0, c(0)=1.

#include <cmath>
#include <complex>
#include <limits>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace ptrig {
namespace constants {

inline constexpr double pi = 3.141592653589793238462643383279502884;

// Lanczos approximation, g = 7 with 9 coefficients, Euler reflection below
// one half.  Relative error stays under 1e-14 on (0, 3], the range the
// constant formulas draw from.
inline double gamma_fn(double x) {
  static constexpr double coef[9] = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,     -176.61502916214059,    12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  if (!(x > 0.0)) throw std::domain_error("gamma_fn: argument must be positive");
  if (x < 0.5) return pi / (std::sin(pi * x) * gamma_fn(1.0 - x));
  const double z = x - 1.0;
  double acc = coef[0];
  for (int i = 1; i < 9; ++i) acc += coef[i] / (z + i);
  const double t = z + 7.5;
  return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

struct PParam {
  int p = 2;
  bool even = true;
  std::complex<double> alpha;  // e^{2 pi i/p}
  std::complex<double> beta;   // e^{pi i/p}; beta^2 == alpha, beta^p == -1

  static PParam make(int p) {
    if (p < 2) throw std::domain_error("PParam: p must be an integer >= 2");
    PParam pp;
    pp.p = p;
    pp.even = (p % 2 == 0);
    pp.alpha = std::polar(1.0, 2.0 * pi / p);
    pp.beta = std::polar(1.0, pi / p);
    return pp;
  }
};

// Constants for one p.  b, l, and band_halfwidth degenerate to +infinity at
// p = 2 (b_infinite is set); the two period fields are meaningful for even p
// only and are NaN otherwise.
struct ConstantSet {
  int p = 0;
  double a = 0;               // (1/p) G(1/p)^2 / G(2/p); half the real period of t
  double b = 0;               // (1/p) G(1-2/p) G(1/p) / G(1-1/p)
  double k = 0;               // a / 2
  double l = 0;               // k * sec(pi/p); equals b for p >= 3
  double picard_r = 0;        // (p-2)^(p-2) / (p-1)^(p-1); 1 at p = 2 via 0^0 = 1
  double band_halfwidth = 0;  // k * tan(pi/p)
  double real_period = 0;     // 4a (even p), NaN for odd p
  double complex_period = 0;  // 8k (even p), NaN for odd p
  bool b_infinite = false;
};

namespace detail {

inline ConstantSet build_constants(const PParam& pp) {
  const int p = pp.p;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  ConstantSet cs;
  cs.p = p;
  cs.a = gamma_fn(1.0 / p) * gamma_fn(1.0 / p) / gamma_fn(2.0 / p) / p;
  cs.k = 0.5 * cs.a;
  if (p == 2) {
    cs.b = inf;
    cs.l = inf;
    cs.band_halfwidth = inf;
    cs.b_infinite = true;
  } else {
    cs.b = gamma_fn(1.0 - 2.0 / p) * gamma_fn(1.0 / p) / gamma_fn(1.0 - 1.0 / p) / p;
    cs.l = cs.k / std::cos(pi / p);
    cs.band_halfwidth = cs.k * std::tan(pi / p);
  }
  if (p == 2) {
    cs.picard_r = 1.0;
  } else if (p <= 34) {
    cs.picard_r = std::pow(double(p - 2), p - 2) / std::pow(double(p - 1), p - 1);
  } else {
    cs.picard_r = std::exp((p - 2) * std::log(double(p - 2)) - (p - 1) * std::log(double(p - 1)));
  }
  if (pp.even) {
    cs.real_period = 4.0 * cs.a;
    cs.complex_period = 8.0 * cs.k;
  } else {
    cs.real_period = nan;
    cs.complex_period = nan;
  }
  return cs;
}

}  // namespace detail

// Computed once per p, then shared immutably.
inline const ConstantSet& constants_for(const PParam& pp) {
  static std::mutex mx;
  static std::unordered_map<int, std::unique_ptr<const ConstantSet>> cache;
  std::scoped_lock lock(mx);
  auto& slot = cache[pp.p];
  if (!slot) slot = std::make_unique<const ConstantSet>(detail::build_constants(pp));
  return *slot;
}

}  // namespace constants

using constants::pi;
using constants::gamma_fn;
using constants::PParam;
using constants::ConstantSet;
using constants::constants_for;

}  // namespace ptrig
