#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "ptrig/quadrature.hpp"
#include "ptrig/real_trig.hpp"

using namespace ptrig;

TEST_CASE("p = 2 reproduces sine and cosine") {
  const auto pp = PParam::make(2);
  for (int i = 0; i <= 500; ++i) {
    const double x = -7.0 + 14.0 * i / 500.0;
    const auto e = eval_real(pp, x);
    CHECK(std::abs(e.s - std::sin(x)) < 1e-12);
    CHECK(std::abs(e.c - std::cos(x)) < 1e-12);
  }
}

TEST_CASE("real_domain reports the two shapes") {
  const auto d4 = real_domain(PParam::make(4));
  CHECK(d4.kind == DomainKind::whole_line_periodic);
  const auto& c4 = constants_for(PParam::make(4));
  CHECK(std::abs(d4.period - 4.0 * c4.a) < 1e-15);

  const auto d3 = real_domain(PParam::make(3));
  const auto& c3 = constants_for(PParam::make(3));
  CHECK(d3.kind == DomainKind::open_interval);
  CHECK(std::abs(d3.lower + c3.b) < 1e-15);
  CHECK(std::abs(d3.upper - (c3.a + c3.b)) < 1e-15);
}

TEST_CASE("round trip through the arc-length integral") {
  for (int p : {2, 3, 4, 5, 6}) {
    const auto pp = PParam::make(p);
    const auto& cs = constants_for(pp);
    for (int i = 1; i < 20; ++i) {
      const double x = cs.a * i / 20.0;
      const auto e = eval_real(pp, x);
      const double back =
          pp.even ? quadrature::sigma0(pp, e.s) : quadrature::sigma_odd(pp, e.s);
      CHECK(std::abs(back - x) < 1e-10);
    }
  }
}

TEST_CASE("pythagorean residual in the moderate zone") {
  for (int p : {3, 4, 5}) {
    const auto pp = PParam::make(p);
    const auto& cs = constants_for(pp);
    for (int i = 0; i <= 100; ++i) {
      const double x = pp.even
                           ? -2.0 * cs.a + 4.0 * cs.a * i / 100.0
                           : (-cs.b + 0.05) + (cs.a + 2.0 * cs.b - 0.1) * i / 100.0;
      const auto e = eval_real(pp, x);
      REQUIRE(e.status != RealStatus::out_of_domain);
      const double r = quadrature::detail::ipow(e.s, p) +
                       quadrature::detail::ipow(e.c, p) - 1.0;
      CHECK(std::abs(r) < 1e-10);
    }
  }
}

TEST_CASE("even p: parity, period, quadrant reduction") {
  const auto pp = PParam::make(4);
  const auto& cs = constants_for(pp);
  for (double x : {0.3, 1.1, 2.9, 4.8, 6.6}) {
    const auto e = eval_real(pp, x);
    const auto en = eval_real(pp, -x);
    CHECK(std::abs(en.s + e.s) < 1e-12);
    CHECK(std::abs(en.c - e.c) < 1e-12);
    const auto ep = eval_real(pp, x + 4.0 * cs.a);
    CHECK(std::abs(ep.s - e.s) < 1e-10);
    CHECK(std::abs(ep.c - e.c) < 1e-10);
    const auto eh = eval_real(pp, x + 2.0 * cs.a);
    CHECK(std::abs(eh.s + e.s) < 1e-10);
    CHECK(std::abs(eh.c + e.c) < 1e-10);
  }
  const auto ea = eval_real(pp, cs.a);
  CHECK(ea.s == 1.0);
  CHECK(ea.c == 0.0);
  CHECK(ea.status == RealStatus::at_pole_of_t);
  CHECK(std::isinf(ea.t));
  CHECK(ea.t > 0);
  const auto em = eval_real(pp, -cs.a);
  CHECK(em.status == RealStatus::at_pole_of_t);
  CHECK(em.t < 0);
}

TEST_CASE("special values at the edge midpoint") {
  for (int p : {2, 3, 4, 5, 6, 7}) {
    const auto pp = PParam::make(p);
    const auto& cs = constants_for(pp);
    const auto e = eval_real(pp, cs.k);
    const double v = std::pow(2.0, -1.0 / p);
    CHECK(std::abs(e.s - v) < 1e-10);
    CHECK(std::abs(e.c - v) < 1e-10);
    CHECK(std::abs(t_real(pp, cs.k) - 1.0) < 1e-10);
    // complementarity against an independent inversion
    for (double x : {0.1 * cs.a, 0.4 * cs.a, 0.85 * cs.a}) {
      CHECK(std::abs(eval_real(pp, cs.a - x).c - eval_real(pp, x).s) < 1e-10);
    }
  }
}

TEST_CASE("odd p: domain boundary, blow-up signs, pole at a") {
  for (int p : {3, 5}) {
    const auto pp = PParam::make(p);
    const auto& cs = constants_for(pp);

    CHECK(eval_real(pp, -cs.b).status == RealStatus::out_of_domain);
    CHECK(eval_real(pp, cs.a + cs.b).status == RealStatus::out_of_domain);
    CHECK(eval_real(pp, -cs.b - 0.5).status == RealStatus::out_of_domain);
    CHECK(eval_real(pp, 50.0).status == RealStatus::out_of_domain);
    CHECK(std::isnan(eval_real(pp, 50.0).s));

    const auto lo = eval_real(pp, -cs.b + 1e-6);
    REQUIRE(lo.status == RealStatus::ok);
    CHECK(lo.s < 0);
    CHECK(lo.c > 0);
    CHECK(lo.c >= -lo.s);  // c = (1 - s^p)^(1/p) >= |s| on the lower side

    const auto hi = eval_real(pp, cs.a + cs.b - 1e-6);
    REQUIRE(hi.status == RealStatus::ok);
    CHECK(hi.s > 0);
    CHECK(hi.c < 0);
    CHECK(hi.s >= -hi.c);

    // s grows monotonically into the upper blow-up
    double prev = 0.0;
    for (int k = 1; k <= 6; ++k) {
      const auto e = eval_real(pp, cs.a + cs.b - std::pow(10.0, -k));
      REQUIRE(e.status == RealStatus::ok);
      CHECK(e.s > prev);
      prev = e.s;
    }
    if (p == 3) CHECK(prev > 1e3);

    const auto ea = eval_real(pp, cs.a);
    CHECK(ea.status == RealStatus::at_pole_of_t);
    CHECK(ea.s == 1.0);
    CHECK(ea.c == 0.0);
    CHECK(std::isinf(ea.t));
  }
}

TEST_CASE("invert_sigma round trips in all three regimes") {
  for (int p : {3, 4, 5, 6}) {
    const auto pp = PParam::make(p);
    for (double x : {-0.999, -0.6, 0.0, 0.3, 0.9, 0.999, 0.9999999}) {
      if (pp.even && x < 0) continue;  // negative side mirrors
      const double y =
          pp.even ? quadrature::sigma0(pp, x) : quadrature::sigma_odd(pp, x);
      CHECK(std::abs(invert_sigma(pp, y) - x) < 1e-9);
    }
    if (!pp.even) {
      const double y = quadrature::sigma_odd(pp, -40.0);
      CHECK(std::abs(invert_sigma(pp, y) + 40.0) < 40.0 * 1e-9);
    }
  }
}
