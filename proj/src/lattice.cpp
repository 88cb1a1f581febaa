#include "g2lift/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "g2lift/errors.hpp"

namespace g2lift {

mpz_class pairing(const V0Vector& x, const V0Vector& y) {
  return (x + y).det() - x.det() - y.det();
}

HalfIntegralForm gram(const VectorPair& p) {
  return {p.y1.det(), pairing(p.y1, p.y2), p.y2.det()};
}

bool RationalPair::is_integral() const {
  for (const auto& v : y1.e)
    if (v.get_den() != 1) return false;
  for (const auto& v : y2.e)
    if (v.get_den() != 1) return false;
  return true;
}

VectorPair RationalPair::to_integral() const {
  if (!is_integral()) throw std::domain_error("RationalPair::to_integral: pair is not integral");
  return {{y1.e[0].get_num(), y1.e[1].get_num(), y1.e[2].get_num(), y1.e[3].get_num()},
          {y2.e[0].get_num(), y2.e[1].get_num(), y2.e[2].get_num(), y2.e[3].get_num()}};
}

RationalPair pair_transform(const VectorPair& p, const std::array<mpq_class, 4>& g) {
  const std::array<mpz_class, 4> a1 = {p.y1.a, p.y1.b, p.y1.c, p.y1.d};
  const std::array<mpz_class, 4> a2 = {p.y2.a, p.y2.b, p.y2.c, p.y2.d};
  RationalPair out;
  for (size_t i = 0; i < 4; ++i) {
    out.y1.e[i] = g[0] * a1[i] + g[2] * a2[i];
    out.y2.e[i] = g[1] * a1[i] + g[3] * a2[i];
  }
  return out;
}

VectorPair pair_transform_int(const VectorPair& p, const std::array<long, 4>& g) {
  std::array<mpq_class, 4> q;
  for (size_t i = 0; i < 4; ++i) q[i] = g[i];
  return pair_transform(p, q).to_integral();
}

namespace {

std::vector<long> divisors_of(long n) {
  std::vector<long> out;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<DivisorCoset> divisor_cosets(const VectorPair& p) {
  const std::array<mpz_class, 4> a1 = {p.y1.a, p.y1.b, p.y1.c, p.y1.d};
  const std::array<mpz_class, 4> a2 = {p.y2.a, p.y2.b, p.y2.c, p.y2.d};
  // gcd of the 2x2 minors of the 4x2 coordinate matrix = e1*e2 (Smith form);
  // det(r) must divide it for (y1,y2) r^-1 to be integral.
  mpz_class minor_gcd = 0;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i + 1; j < 4; ++j) minor_gcd = gcd(minor_gcd, a1[i] * a2[j] - a1[j] * a2[i]);
  if (minor_gcd == 0) throw DegeneratePair("divisor_cosets: pair has rank < 2");
  if (!minor_gcd.fits_slong_p())
    throw std::overflow_error("divisor_cosets: elementary divisor product too large");
  const long e1e2 = std::abs(minor_gcd.get_si());

  std::vector<DivisorCoset> out;
  for (long det : divisors_of(e1e2)) {
    for (long d1 : divisors_of(det)) {
      const long d2 = det / d1;
      for (long b = 0; b < d2; ++b) {
        // adj(r) = [[d2, -b], [0, d1]]; need A * adj(r) == 0 mod det
        bool ok = true;
        for (size_t i = 0; i < 4 && ok; ++i) {
          if (a1[i] % d1 != 0) ok = false;  // d2 * a1[i] mod d1*d2
          if (ok && (d1 * a2[i] - b * a1[i]) % det != 0) ok = false;
        }
        if (ok) out.push_back({d1, b, d2});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const DivisorCoset& x, const DivisorCoset& y) {
    return std::tuple(x.det(), x.d1, x.b) < std::tuple(y.det(), y.d1, y.b);
  });
  return out;
}

VectorPair apply_coset_inverse(const VectorPair& p, const DivisorCoset& r) {
  const mpz_class det = r.det();
  const std::array<mpz_class, 4> a1 = {p.y1.a, p.y1.b, p.y1.c, p.y1.d};
  const std::array<mpz_class, 4> a2 = {p.y2.a, p.y2.b, p.y2.c, p.y2.d};
  std::array<mpz_class, 4> b1, b2;
  for (size_t i = 0; i < 4; ++i) {
    mpz_class n1 = r.d2 * a1[i];
    mpz_class n2 = r.d1 * a2[i] - r.b * a1[i];
    if (n1 % det != 0 || n2 % det != 0)
      throw std::logic_error("apply_coset_inverse: transform is not integral");
    b1[i] = n1 / det;
    b2[i] = n2 / det;
  }
  return {{b1[0], b1[1], b1[2], b1[3]}, {b2[0], b2[1], b2[2], b2[3]}};
}

mpz_class theta_so44_coeff_report(SiegelProvider& P, const VectorPair& p, int w,
                                  std::vector<CosetReport>& reports) {
  if (w % 2 != 0) throw WeightError("theta_so44_coeff: weight must be even");
  if (P.weight() != w)
    throw WeightError("theta_so44_coeff: provider has weight " + std::to_string(P.weight()) +
                      ", expected " + std::to_string(w));
  const HalfIntegralForm S = gram(p);
  if (!S.positive_definite())
    throw NotPositiveDefinite("theta_so44_coeff: Gram form is not positive-definite");
  mpz_class total = 0;
  for (const DivisorCoset& r : divisor_cosets(p)) {
    const VectorPair q = apply_coset_inverse(p, r);
    const HalfIntegralForm red = reduce_class(gram(q));
    const mpz_class a = P.coeff(red);
    mpz_class dk;
    mpz_pow_ui(dk.get_mpz_t(), r.det().get_mpz_t(), static_cast<unsigned long>(w - 1));
    total += dk * a;
    reports.push_back({r, red, a});
  }
  return total;
}

mpz_class theta_so44_coeff(SiegelProvider& P, const VectorPair& p, int w) {
  std::vector<CosetReport> reports;
  return theta_so44_coeff_report(P, p, w, reports);
}

}  // namespace g2lift
