#include <doctest.h>

#include <random>
#include <set>

#include "g2lift/errors.hpp"
#include "g2lift/lattice.hpp"
#include "oracles.hpp"

using namespace g2lift;

namespace {

const VectorPair kBasePair{{1, 0, 0, 1}, {0, -1, 1, 0}};  // gram (1,0,1)

VectorPair random_pair(std::mt19937& rng, long lo, long hi) {
  std::uniform_int_distribution<long> e(lo, hi);
  return {{e(rng), e(rng), e(rng), e(rng)}, {e(rng), e(rng), e(rng), e(rng)}};
}

std::set<std::tuple<long, long, long>> as_set(const std::vector<DivisorCoset>& v) {
  std::set<std::tuple<long, long, long>> s;
  for (const auto& c : v) s.insert({c.d1.get_si(), c.b.get_si(), c.d2.get_si()});
  return s;
}

}  // namespace

TEST_CASE("gram examples") {
  CHECK(gram(kBasePair) == HalfIntegralForm{1, 0, 1});
  VectorPair degenerate{{1, 2, 3, 4}, {1, 2, 3, 4}};
  HalfIntegralForm S = gram(degenerate);
  CHECK(S.n == S.m);
  CHECK(S.r == 2 * S.n);
  CHECK(S.disc() == 0);
}

TEST_CASE("gram transforms by congruence under GL2(Z)") {
  std::mt19937 rng(99);
  const std::array<std::array<long, 4>, 2> gens = {{{0, -1, 1, 0}, {1, 1, 0, 1}}};
  for (int t = 0; t < 50; ++t) {
    VectorPair p = random_pair(rng, -6, 6);
    for (const auto& u : gens) {
      VectorPair q = pair_transform_int(p, u);
      HalfIntegralForm S = gram(p);
      // u^T S u computed on the doubled matrix
      mpz_class n2 = 2 * S.n, r2 = S.r, m2 = 2 * S.m;
      mpz_class a = u[0] * (u[0] * n2 + u[2] * r2) + u[2] * (u[0] * r2 + u[2] * m2);
      mpz_class b = u[1] * (u[0] * n2 + u[2] * r2) + u[3] * (u[0] * r2 + u[2] * m2);
      mpz_class d = u[1] * (u[1] * n2 + u[3] * r2) + u[3] * (u[1] * r2 + u[3] * m2);
      CHECK(gram(q) == HalfIntegralForm{a / 2, b, d / 2});
    }
  }
}

TEST_CASE("pair_transform rational cases") {
  // identity
  std::array<mpq_class, 4> id = {1, 0, 0, 1};
  CHECK(pair_transform(kBasePair, id).to_integral() == kBasePair);
  // scaled pair pulled back by (2I)^-1
  VectorPair doubled{2 * kBasePair.y1, 2 * kBasePair.y2};
  std::array<mpq_class, 4> half = {mpq_class(1, 2), 0, 0, mpq_class(1, 2)};
  RationalPair back = pair_transform(doubled, half);
  CHECK(back.is_integral());
  CHECK(back.to_integral() == kBasePair);
  // non-integral results are representable and flagged
  RationalPair frac = pair_transform(kBasePair, half);
  CHECK_FALSE(frac.is_integral());
  CHECK_THROWS_AS(frac.to_integral(), std::domain_error);
}

TEST_CASE("divisor_cosets: primitive pair") {
  auto cosets = divisor_cosets(kBasePair);
  REQUIRE(cosets.size() == 1);
  CHECK(cosets[0] == DivisorCoset{1, 0, 1});
}

TEST_CASE("divisor_cosets: doubled pair has the five index-dividing cosets") {
  VectorPair p{2 * kBasePair.y1, 2 * kBasePair.y2};
  auto cosets = divisor_cosets(p);
  const std::set<std::tuple<long, long, long>> expected = {
      {1, 0, 1}, {1, 0, 2}, {1, 1, 2}, {2, 0, 1}, {2, 0, 2}};
  CHECK(as_set(cosets) == expected);
  CHECK(as_set(cosets) == oracles::brute_force_cosets(p, 4));
}

TEST_CASE("divisor_cosets: (y1, 3y2) only has determinants 1 and 3") {
  VectorPair p{kBasePair.y1, 3 * kBasePair.y2};
  auto cosets = divisor_cosets(p);
  CHECK(as_set(cosets) == oracles::brute_force_cosets(p, 9));
  for (const auto& c : cosets) CHECK((c.det() == 1 || c.det() == 3));
}

TEST_CASE("divisor_cosets: degenerate pair rejected") {
  VectorPair p{{1, 0, 0, 1}, {2, 0, 0, 2}};  // rank 1 span
  CHECK_THROWS_AS(divisor_cosets(p), DegeneratePair);
  VectorPair z{{0, 0, 0, 0}, {0, 0, 0, 0}};
  CHECK_THROWS_AS(divisor_cosets(z), DegeneratePair);
}

TEST_CASE("divisor_cosets agrees with the blind brute force") {
  std::mt19937 rng(4242);
  int tested = 0;
  while (tested < 60) {
    VectorPair base = random_pair(rng, -3, 3);
    std::uniform_int_distribution<long> scale(1, 3);
    VectorPair p{scale(rng) * base.y1, scale(rng) * base.y2};
    // keep elementary divisor product within the blind search bound
    mpz_class mg = 0;
    const std::array<mpz_class, 4> a1 = {p.y1.a, p.y1.b, p.y1.c, p.y1.d};
    const std::array<mpz_class, 4> a2 = {p.y2.a, p.y2.b, p.y2.c, p.y2.d};
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = i + 1; j < 4; ++j) mg = gcd(mg, a1[i] * a2[j] - a1[j] * a2[i]);
    if (mg == 0 || mg > 20) continue;
    ++tested;
    CHECK(as_set(divisor_cosets(p)) == oracles::brute_force_cosets(p, 20));
  }
}

TEST_CASE("coset determinants divide c^2 for scaled pairs") {
  std::mt19937 rng(17);
  int tested = 0;
  while (tested < 30) {
    VectorPair base = random_pair(rng, -3, 3);
    std::uniform_int_distribution<long> scale(1, 4);
    const long c = scale(rng);
    VectorPair p{c * base.y1, c * base.y2};
    // the clean c^2 bound needs the base lattice itself to be saturated,
    // i.e. its only divisor coset is the identity
    std::vector<DivisorCoset> base_cosets;
    try {
      base_cosets = divisor_cosets(base);
    } catch (const DegeneratePair&) {
      continue;
    }
    if (base_cosets.size() != 1) continue;
    ++tested;
    for (const auto& r : divisor_cosets(p)) CHECK(mpz_class(c) * c % r.det() == 0);
  }
}

TEST_CASE("theta_so44_coeff anchors") {
  auto P = SiegelProvider::maass_named("chi10");
  CHECK(theta_so44_coeff(*P, kBasePair, 10) == -2);

  // doubled pair: coset sum with dets 1, 2, 2, 2, 4
  VectorPair dp{2 * kBasePair.y1, 2 * kBasePair.y2};
  JacobiIndex1 chi10 = jacobi_cusp_named("chi10", 24);
  // det^9 weights: identity, the three det-2 Hermite cosets, and 2*I
  mpz_class expected = maass_lift_coeff(chi10, {4, 0, 4}) +
                       mpz_class(512) * (maass_lift_coeff(chi10, {4, 0, 1}) +
                                         maass_lift_coeff(chi10, reduce_class({4, -4, 2})) +
                                         maass_lift_coeff(chi10, {1, 0, 4})) +
                       (mpz_class(1) << 18) * maass_lift_coeff(chi10, {1, 0, 1});
  CHECK(theta_so44_coeff(*P, dp, 10) == expected);

  CHECK_THROWS_AS(theta_so44_coeff(*P, VectorPair{kBasePair.y1, kBasePair.y1}, 10),
                  NotPositiveDefinite);
  CHECK_THROWS_AS(theta_so44_coeff(*P, kBasePair, 12), WeightError);
}

TEST_CASE("theta_so44_coeff is GL2(Z)-invariant") {
  auto P = SiegelProvider::maass_named("chi10");
  const std::array<std::array<long, 4>, 2> gens = {{{0, -1, 1, 0}, {1, 1, 0, 1}}};
  std::mt19937 rng(2024);
  int tested = 0;
  while (tested < 100) {
    VectorPair p = random_pair(rng, -2, 2);
    if (!gram(p).positive_definite()) continue;
    ++tested;
    const mpz_class v = theta_so44_coeff(*P, p, 10);
    for (const auto& u : gens) CHECK(theta_so44_coeff(*P, pair_transform_int(p, u), 10) == v);
  }
}
