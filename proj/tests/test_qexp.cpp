#include <doctest.h>

#include <random>

#include "g2lift/errors.hpp"
#include "g2lift/qexp.hpp"
#include "oracles.hpp"

using namespace g2lift;

namespace {

QExpansion random_series(std::mt19937& rng, int prec) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  QExpansion r(prec);
  for (int n = 0; n < prec; ++n) r.set_coeff(n, coeff(rng));
  return r;
}

}  // namespace

TEST_CASE("series addition") {
  // (1 + q) + (1 - q) = 2
  QExpansion a(2, {1, 1});
  QExpansion b(2, {1, -1});
  CHECK((a + b) == QExpansion(2, {2, 0}));

  // identity
  QExpansion z(2);
  CHECK((a + z) == a);

  // Delta + Delta doubles the q-coefficient
  QExpansion two_delta = delta(5) + delta(5);
  CHECK(two_delta.coeff(1) == 2);
}

TEST_CASE("series multiplication") {
  QExpansion a(3, {1, 1, 0});
  QExpansion b(3, {1, -1, 0});
  CHECK((a * b) == QExpansion(3, {1, 0, -1}));
  CHECK((a * QExpansion::one(3)) == a);

  // product times recursively-computed inverse is 1
  QExpansion e = euler_product(40);
  CHECK((e * e.inverse()) == QExpansion::one(40));
}

TEST_CASE("series multiplication is commutative and associative") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 20; ++trial) {
    QExpansion a = random_series(rng, 15);
    QExpansion b = random_series(rng, 15);
    QExpansion c = random_series(rng, 15);
    CHECK((a * b) == (b * a));
    CHECK(((a * b) * c) == (a * (b * c)));
  }
}

TEST_CASE("delta against the sigma-recursion for tau") {
  const int P = 30;
  QExpansion D = delta(P);
  CHECK(D.coeff(0) == 0);
  CHECK(D.coeff(1) == 1);
  CHECK(D.coeff(2) == -24);
  CHECK(D.coeff(3) == 252);
  for (int n = 1; n < P; ++n) CHECK(D.coeff(n) == oracles::tau_niebur(n));
}

TEST_CASE("eisenstein series") {
  QExpansion e4 = eisenstein(4, 5);
  CHECK(e4.coeff(0) == 1);
  CHECK(e4.coeff(1) == 240);
  QExpansion e6 = eisenstein(6, 5);
  CHECK(e6.coeff(0) == 1);
  CHECK(e6.coeff(2) == -16632);  // -504 * sigma_5(2), sigma_5(2) = 33
  CHECK_THROWS_AS(eisenstein(8, 5), WeightError);
}

TEST_CASE("E4^3 - E6^2 = 1728 Delta") {
  const int P = 30;
  QExpansion lhs = eisenstein(4, P).pow(3) - eisenstein(6, P).pow(2);
  CHECK(lhs == mpz_class(1728) * delta(P));
}
