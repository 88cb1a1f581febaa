#ifndef G2LIFT_LATTICE_HPP
#define G2LIFT_LATTICE_HPP

#include <gmpxx.h>

#include <array>
#include <tuple>
#include <vector>

#include "g2lift/siegel.hpp"

namespace g2lift {

/// Vector in V0(Z), modeled as a 2x2 integer matrix with quadratic form
/// q(y) = det(y). This is an even unimodular lattice of signature (2,2).
struct V0Vector {
  mpz_class a, b, c, d;  // [[a, b], [c, d]]

  mpz_class det() const { return a * d - b * c; }

  friend V0Vector operator+(const V0Vector& x, const V0Vector& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend V0Vector operator*(const mpz_class& s, const V0Vector& y) {
    return {s * y.a, s * y.b, s * y.c, s * y.d};
  }
  friend bool operator==(const V0Vector& x, const V0Vector& y) = default;
};

/// Bilinear pairing B(x,y) = det(x+y) - det(x) - det(y); (y,y) = 2 det(y).
mpz_class pairing(const V0Vector& x, const V0Vector& y);

struct VectorPair {
  V0Vector y1, y2;

  friend bool operator==(const VectorPair& a, const VectorPair& b) = default;
};

/// Gram form S(y1,y2) = [[q(y1), B/2], [B/2, q(y2)]] as (n, r, m).
HalfIntegralForm gram(const VectorPair& p);

/// Pair with rational entries; the image of pair_transform before any
/// integrality is established.
struct RationalVector {
  std::array<mpq_class, 4> e;  // row-major [[e0, e1], [e2, e3]]
};

struct RationalPair {
  RationalVector y1, y2;

  bool is_integral() const;
  /// Throws std::domain_error when not integral.
  VectorPair to_integral() const;
};

/// Right action on the row (y1, y2): yj' = sum_i yi * g(i,j); g row-major.
RationalPair pair_transform(const VectorPair& p, const std::array<mpq_class, 4>& g);

/// Convenience for integer g (e.g. GL2(Z) tests).
VectorPair pair_transform_int(const VectorPair& p, const std::array<long, 4>& g);

/// Row-Hermite representative [[d1, b], [0, d2]] of a left GL2(Z)-coset of
/// an integral matrix; d1, d2 >= 1 and 0 <= b < d2.
struct DivisorCoset {
  mpz_class d1, b, d2;

  mpz_class det() const { return d1 * d2; }

  friend bool operator==(const DivisorCoset& a, const DivisorCoset& b) = default;
  friend bool operator<(const DivisorCoset& a, const DivisorCoset& b) {
    return std::tie(a.d1, a.b, a.d2) < std::tie(b.d1, b.b, b.d2);
  }
};

/// All Hermite representatives r with (y1,y2) r^-1 integral. The pair must
/// have rank 2 (nonzero Gram determinant); throws DegeneratePair otherwise.
std::vector<DivisorCoset> divisor_cosets(const VectorPair& p);

/// (y1,y2) r^-1, which is integral for any r from divisor_cosets.
VectorPair apply_coset_inverse(const VectorPair& p, const DivisorCoset& r);

/// SO(4,4) theta-lift Fourier coefficient at (y1,y2):
/// sum over cosets r of det(r)^(w-1) * a_F(gram((y1,y2) r^-1)).
/// Requires gram(p) positive-definite and provider weight == w.
mpz_class theta_so44_coeff(SiegelProvider& P, const VectorPair& p, int w);

/// Coset list together with the reduced Siegel class each one queries
/// (reporting surface for the CLI).
struct CosetReport {
  DivisorCoset coset;
  HalfIntegralForm reduced_class;
  mpz_class a_value;
};
mpz_class theta_so44_coeff_report(SiegelProvider& P, const VectorPair& p, int w,
                                  std::vector<CosetReport>& reports);

}  // namespace g2lift

#endif
