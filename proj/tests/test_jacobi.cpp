#include <doctest.h>

#include "g2lift/errors.hpp"
#include "g2lift/jacobi.hpp"
#include "oracles.hpp"

using namespace g2lift;

TEST_CASE("phi_{-2,1} product formula matches the theta-quotient oracle") {
  const int P = 25;
  TwoVarSeries prod = phi_weak_minus2_series(P);
  TwoVarSeries theta = oracles::phi_minus2_theta_quotient(P);
  CHECK(prod == theta);
}

TEST_CASE("phi_{-2,1} coefficients") {
  JacobiIndex1 phi = phi_weak_minus2(10);
  // frozen from the theta-quotient oracle
  TwoVarSeries o = oracles::phi_minus2_theta_quotient(10);
  CHECK(phi.coeff_by_disc(-1) == 1);
  CHECK(phi.coeff_by_disc(0) == -2);
  CHECK(phi.coeff_by_disc(3) == o.coeff(1, 1));
  CHECK(phi.coeff_by_disc(3) == 8);
  CHECK(phi.coeff_by_disc(4) == o.coeff(1, 0));
  CHECK(phi.coeff_by_disc(4) == -12);
}

TEST_CASE("phi_{0,1} coefficients and D-dependence") {
  const int P = 12;
  JacobiIndex1 phi = phi_weak_0(P);
  CHECK(phi.coeff_by_disc(-1) == 1);
  CHECK(phi.coeff_by_disc(0) == 10);
  // D-dependence on the raw grid: same D at different (n, r)
  TwoVarSeries s = phi_weak_0_series(P);
  CHECK(s.coeff(1, 1) == s.coeff(3, 3));    // D = 3
  CHECK(s.coeff(1, 0) == s.coeff(2, 2));    // D = 4
  CHECK(s.coeff(2, 1) == s.coeff(4, 3));    // D = 7
  CHECK(s.coeff(0, -1) == s.coeff(2, -3));  // D = -1
}

TEST_CASE("chi10 coefficients from the Jacobi oracle") {
  JacobiIndex1 chi10 = jacobi_cusp_named("chi10", 12);
  TwoVarSeries phi = oracles::phi_minus2_theta_quotient(12);
  QExpansion D = delta(12);
  // chi10 c(3) = Delta_1 * c_phi(-1)
  CHECK(chi10.coeff_by_disc(3) == D.coeff(1) * phi.coeff(0, 1));
  CHECK(chi10.coeff_by_disc(3) == 1);
  CHECK(chi10.coeff_by_disc(4) == -2);
  // c(7) = Delta_1 c_phi(3) + Delta_2 c_phi(-1) = 8 - 24
  CHECK(chi10.coeff_by_disc(7) == D.coeff(1) * phi.coeff(1, 1) + D.coeff(2) * phi.coeff(0, 1));
  CHECK(chi10.coeff_by_disc(7) == -16);
}

TEST_CASE("cusp condition") {
  for (const char* name : {"chi10", "chi12"}) {
    JacobiIndex1 f = jacobi_cusp_named(name, 15);
    for (long D = -1; D <= 0; ++D)
      if (D == -1 || D == 0) CHECK(f.coeff_by_disc(D) == 0);
    for (const auto& [D, v] : f.table())
      if (D <= 0) CHECK(v == 0);
  }
}

TEST_CASE("chi12 value fixed by the product oracle") {
  JacobiIndex1 chi12 = jacobi_cusp_named("chi12", 10);
  // c(3) = Delta_1 * c_{phi01}(-1) = 1, c(4) = Delta_1 * c_{phi01}(0) = 10
  CHECK(chi12.coeff_by_disc(3) == 1);
  CHECK(chi12.coeff_by_disc(4) == 10);
}

TEST_CASE("coeff_by_disc error contract") {
  JacobiIndex1 chi10 = jacobi_cusp_named("chi10", 5);
  CHECK(chi10.coeff_by_disc(0) == 0);                             // cusp form
  CHECK_THROWS_AS(chi10.coeff_by_disc(100), InsufficientPrecision);
  CHECK_THROWS_AS(chi10.coeff_by_disc(5), std::domain_error);     // 5 != 0,3 mod 4
}

TEST_CASE("jacobi_cusp weight checking") {
  const int P = 8;
  LevelOneForm e4{eisenstein(4, P), 4};
  // weight 14 = 10 + 4: f = E4 works, g must have weight 2 (impossible)
  CHECK_NOTHROW(jacobi_cusp(14, e4, LevelOneForm::zero(P), P));
  CHECK_THROWS_AS(jacobi_cusp(16, e4, LevelOneForm::zero(P), P), WeightError);
  CHECK_THROWS_AS(jacobi_cusp(13, e4, LevelOneForm::zero(P), P), WeightError);
}

TEST_CASE("modular polynomial parser") {
  const int P = 10;
  LevelOneForm f = parse_modular_poly("E4^3-E6^2", P);
  CHECK(f.weight == 12);
  CHECK(f.series == mpz_class(1728) * delta(P));
  CHECK_THROWS_AS(parse_modular_poly("E4+E6", P), ParseError);
  CHECK_THROWS_AS(parse_modular_poly("E4*", P), ParseError);
  CHECK(parse_modular_poly("2*Delta", P).series == mpz_class(2) * delta(P));
}
