#ifndef G2LIFT_CUBES_HPP
#define G2LIFT_CUBES_HPP

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <vector>

#include "g2lift/lattice.hpp"

namespace g2lift {

struct BinaryQuadraticForm {
  int64_t A = 0, B = 0, C = 0;  // A x^2 + B xy + C y^2

  int64_t disc() const { return B * B - 4 * A * C; }
  bool positive_definite() const { return A > 0 && disc() < 0; }

  friend bool operator==(const BinaryQuadraticForm& a, const BinaryQuadraticForm& b) = default;
};

/// 2x2x2 integer box (a, (b1,b2,b3), (c1,c2,c3), d).
struct Box {
  int64_t a = 0;
  std::array<int64_t, 3> b{};
  std::array<int64_t, 3> c{};
  int64_t d = 0;

  friend Box operator-(const Box& v) {
    return {-v.a, {-v.b[0], -v.b[1], -v.b[2]}, {-v.c[0], -v.c[1], -v.c[2]}, -v.d};
  }
  friend bool operator==(const Box& x, const Box& y) = default;
  friend auto operator<=>(const Box& x, const Box& y) = default;
};

/// Binary cubic p(x,y) = a x^3 + b x^2 y + c xy^2 + d y^3. Boxes above a
/// cubic match by coefficient sums: b = b1+b2+b3, c = c1+c2+c3.
struct CubicForm {
  int64_t a = 0, b = 0, c = 0, d = 0;

  friend CubicForm operator-(const CubicForm& p) { return {-p.a, -p.b, -p.c, -p.d}; }
  friend bool operator==(const CubicForm& x, const CubicForm& y) = default;
  friend auto operator<=>(const CubicForm& x, const CubicForm& y) = default;
};

int64_t cubic_disc(const CubicForm& p);

/// p composed with the substitution (x,y) -> (x,y) * u, u row-major.
CubicForm cubic_transform(const CubicForm& p, const std::array<int64_t, 4>& u);

/// The three binary quadratic forms of a box; all share one discriminant.
std::array<BinaryQuadraticForm, 3> three_forms(const Box& v);

/// True iff all three forms are positive-definite.
bool is_positive(const Box& v);

/// The V0(Z)^2 slicing of a box: y1 = [[a,-b3],[b2,-c1]], y2 = [[b1,-c2],[c3,-d]].
/// det(x*y1 + y*y2) = Q1(x,y), so gram(box_to_pair(v)) is the Gram matrix of Q1.
VectorPair box_to_pair(const Box& v);

/// Exact inverse of box_to_pair. Throws std::overflow_error if the pair's
/// entries do not fit int64.
Box pair_to_box(const VectorPair& p);

/// Sum-convention projection (a, b1+b2+b3, c1+c2+c3, d).
CubicForm project(const Box& v);

/// All positive boxes above p with |b_i|, |c_i| <= R, in lexicographic order.
std::vector<Box> enumerate_boxes(const CubicForm& p, int64_t R);

/// True if no positive box above p touches the shell max|b_i|,|c_i| = R.
bool boundary_clean(const CubicForm& p, int64_t R);

int64_t default_radius(const CubicForm& p);

struct G2Result {
  mpz_class value;
  size_t boxes = 0;
  int64_t radius = 0;
  bool boundary_clean = true;
};

/// G2 Fourier coefficient at p: sum over enumerate_boxes(p, R) of the
/// SO(4,4) coefficient of the box's pair. A dirty boundary shell is
/// reported in the result, never silently dropped.
G2Result g2_coeff(SiegelProvider& P, const CubicForm& p, int w, int64_t R);

/// As g2_coeff, but doubles R (up to max_doublings) until the shell is clean.
G2Result g2_coeff_clean(SiegelProvider& P, const CubicForm& p, int w, int64_t R,
                        int max_doublings = 4);

}  // namespace g2lift

#endif
