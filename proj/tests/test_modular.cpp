#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nct/modular/special.hpp"

#include <cmath>

using namespace nct;
using namespace nct::modular;

namespace {

const LaurentXW one = LaurentXW::constant(Rational(1));
const LaurentXW w = LaurentXW::w();
const LaurentXW x = LaurentXW::x();

}  // namespace

TEST_CASE("modular function expressions") {
  ModularFunctionExpr f = ModularFunctionExpr::modified_log(2) * (ModularFunctionExpr::constant(1) + ModularFunctionExpr::delta_power(1));
  CHECK(f.coefficient({0, 2}) == 1);
  CHECK(f.coefficient({1, 2}) == 1);
  CHECK(f.to_string() == "L2 + D^(1/2)*L2");
  CHECK_THROWS_AS(ModularFunctionExpr::modified_log(4), Error);
  CHECK_THROWS_AS(ModularFunctionExpr::modified_log(1) * ModularFunctionExpr::modified_log(2), Error);
  CHECK(f_expression().to_string() == "1/6*D^(-1/2) - 1/3 + L1 - 2*L2 + L3 - 2*D^(1/2)*L2 + 2*D^(1/2)*L3 + D*L3");
}

TEST_CASE("Laurent polynomial division by w - 1 and w + 1") {
  const LaurentXW p = (w - one).pow(3) * (w + one) * (x + w.shifted(0, -3));
  auto q = p.divide_by_w_minus(1);
  REQUIRE(q);
  CHECK(*q == (w - one).pow(2) * (w + one) * (x + w.shifted(0, -3)));
  CHECK_FALSE((w + one).divide_by_w_minus(1));
  CHECK(*(w + one).divide_by_w_minus(-1) == one);
}

TEST_CASE("closed-form arithmetic") {
  const ClosedForm a(x, w - one);
  const ClosedForm b(x * (w + one), w * w - one);
  CHECK(a == b);
  CHECK((a - b).is_zero());
  CHECK(b.simplified().denominator() == (w - one));
  CHECK_THROWS_AS(ClosedForm(x, LaurentXW()), Error);
}

TEST_CASE("modified logarithm closed forms match the numeric definition") {
  for (int m = 1; m <= 3; ++m) {
    const ClosedForm lm = modified_log_closed_form(m);
    for (double t : {-3.0, -0.7, 0.5, 2.5}) {
      CHECK(static_cast<double>(lm.evaluate_direct(t)) == doctest::Approx(static_cast<double>(eval_L(m, std::exp(t)))).epsilon(1e-12));
    }
    // 𝓛_m(1) = 1/(m+1)
    const auto series = lm.taylor(2);
    CHECK(series[0] == Rational(1, m + 1));
  }
}

TEST_CASE("eval_L values and domain") {
  for (int m = 1; m <= 3; ++m) CHECK(static_cast<double>(eval_L(m, 1.0L)) == doctest::Approx(1.0 / (m + 1)).epsilon(1e-15));
  CHECK_THROWS_AS(eval_L(1, 0.0L), Error);
  CHECK_THROWS_AS(eval_L(2, -1.0L), Error);
  CHECK_THROWS_AS(eval_L(0, 2.0L), Error);
  // 𝓛₁(u) = (u − 1 − log u)/(u − 1)² closed form by hand at u = 4
  CHECK(static_cast<double>(eval_L(1, 4.0L)) == doctest::Approx((3.0 - std::log(4.0)) / 9.0).epsilon(1e-14));
}

TEST_CASE("eval_L branches agree near the switch") {
  // 𝓛₂ near u = 1, where the closed form still holds 12 digits in long double
  for (long double u : {1.001L, 0.999L}) CHECK(std::fabs(static_cast<double>(eval_L_series(2, u) - eval_L_closed(2, u))) < 1e-12);
  for (int m = 1; m <= 3; ++m) {
    for (long double u : {1.0999L, 0.9001L, 1.1L, 0.9L, 1.05L}) {
      INFO("m = " << m << " u = " << static_cast<double>(u));
      CHECK(std::fabs(static_cast<double>(eval_L_series(m, u) - eval_L_closed(m, u))) < 1e-12);
    }
    // no jump across the switch radius
    for (long double edge : {1.1L, 0.9L}) {
      const long double below = eval_L(m, edge - 1e-12L);
      const long double above = eval_L(m, edge + 1e-12L);
      CHECK(std::fabs(static_cast<double>(above - below)) < 1e-11);
    }
  }
}

TEST_CASE("h, K and f") {
  const ClosedForm h = h_from_f();
  CHECK(h == h_reference());
  const ClosedForm k = K_from_h();
  CHECK(k == K_reference());
  CHECK(is_odd(k));
  CHECK(is_odd(K_reference()));
  CHECK_FALSE(is_odd(h_reference()));
  CHECK(is_odd(ClosedForm()));
  // simplified h keeps the (w−1)⁴(w+1)² denominator
  LaurentXW den = h.denominator();
  int down = 0, up = 0;
  while (auto q = den.divide_by_w_minus(1)) { den = *q; ++down; }
  while (auto q = den.divide_by_w_minus(-1)) { den = *q; ++up; }
  CHECK(down == 4);
  CHECK(up == 2);
  CHECK(den.terms().size() == 1);
  CHECK(h_reference().taylor(0)[0] == 0);
}

TEST_CASE("Taylor coefficients of h") {
  const auto c = taylor_h(5);
  CHECK(c[0] == 0);
  CHECK(c[1] == Rational(-1, 20));
  CHECK(c[2] == Rational(1, 40));
  CHECK(c[3] == Rational(-1, 210));
  CHECK(c[4] == Rational(1, 3360));
  CHECK(c[5] == Rational(1, 201600));
  CHECK_THROWS_AS(taylor_h(13), Error);
  CHECK(taylor_h(12).size() == 13);
}

TEST_CASE("K has only odd Taylor coefficients") {
  const auto c = K_reference().taylor(15);
  for (std::size_t i = 0; i < c.size(); i += 2) CHECK(c[i] == 0);
  CHECK(c[1] != 0);
}

TEST_CASE("sampling") {
  const auto hs = sample(h_reference(), {0.0, 1e-4, 0.5, 3.0});
  CHECK(hs[0].value == 0.0);
  CHECK(hs[1].value == doctest::Approx(-1e-4 / 20).epsilon(1e-3));
  CHECK(hs[2].value == doctest::Approx(static_cast<double>(h_reference().evaluate_direct(0.5L))).epsilon(1e-12));
  const NumericFunction kf(K_reference());
  for (double t : {0.01, 0.3, 0.99, 1.01, 2.0, 5.5}) CHECK(std::fabs(static_cast<double>(kf(-t) + kf(t))) < 1e-12);
  // continuity at the Taylor/direct switch
  CHECK(static_cast<double>(kf(0.999999L)) == doctest::Approx(static_cast<double>(kf(1.000001L))).epsilon(1e-5));
  CHECK(to_csv({{0.0, 0.0}, {0.5, -0.0123456789012345678}}, "h") == "x,h\n0,0\n0.5,-0.0123456789012346\n");
}

TEST_CASE("h(0.5) + h(-0.5) is nonzero") {
  const NumericFunction h(h_reference());
  CHECK(std::fabs(static_cast<double>(h(0.5L) + h(-0.5L))) > 1e-3);
}
