#include "g2lift/cubes.hpp"

#include <algorithm>
#include <stdexcept>

#include "g2lift/errors.hpp"

namespace g2lift {

int64_t cubic_disc(const CubicForm& p) {
  const int64_t a = p.a, b = p.b, c = p.c, d = p.d;
  return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
         27 * a * a * d * d;
}

CubicForm cubic_transform(const CubicForm& p, const std::array<int64_t, 4>& u) {
  // (x,y) -> (x,y) * u = (al*x + ga*y, be*x + de*y)
  const int64_t al = u[0], be = u[1], ga = u[2], de = u[3];
  CubicForm q;
  q.a = p.a * al * al * al + p.b * al * al * be + p.c * al * be * be + p.d * be * be * be;
  q.b = p.a * 3 * al * al * ga + p.b * (al * al * de + 2 * al * be * ga) +
        p.c * (2 * al * be * de + be * be * ga) + p.d * 3 * be * be * de;
  q.c = p.a * 3 * al * ga * ga + p.b * (2 * al * ga * de + be * ga * ga) +
        p.c * (al * de * de + 2 * be * ga * de) + p.d * 3 * be * de * de;
  q.d = p.a * ga * ga * ga + p.b * ga * ga * de + p.c * ga * de * de + p.d * de * de * de;
  return q;
}

std::array<BinaryQuadraticForm, 3> three_forms(const Box& v) {
  std::array<BinaryQuadraticForm, 3> q;
  const int64_t ad = v.a * v.d;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    q[static_cast<size_t>(i)] = {
        v.b[static_cast<size_t>(j)] * v.b[static_cast<size_t>(k)] - v.a * v.c[static_cast<size_t>(i)],
        v.b[static_cast<size_t>(j)] * v.c[static_cast<size_t>(j)] +
            v.b[static_cast<size_t>(k)] * v.c[static_cast<size_t>(k)] -
            v.b[static_cast<size_t>(i)] * v.c[static_cast<size_t>(i)] - ad,
        v.c[static_cast<size_t>(j)] * v.c[static_cast<size_t>(k)] - v.d * v.b[static_cast<size_t>(i)]};
  }
  return q;
}

bool is_positive(const Box& v) {
  const auto q = three_forms(v);
  return q[0].positive_definite() && q[1].positive_definite() && q[2].positive_definite();
}

VectorPair box_to_pair(const Box& v) {
  return {{v.a, -v.b[2], v.b[1], -v.c[0]}, {v.b[0], -v.c[1], v.c[2], -v.d}};
}

namespace {

int64_t to_i64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("pair_to_box: entry does not fit int64");
  return z.get_si();
}

}  // namespace

Box pair_to_box(const VectorPair& p) {
  Box v;
  v.a = to_i64(p.y1.a);
  v.b[2] = -to_i64(p.y1.b);
  v.b[1] = to_i64(p.y1.c);
  v.c[0] = -to_i64(p.y1.d);
  v.b[0] = to_i64(p.y2.a);
  v.c[1] = -to_i64(p.y2.b);
  v.c[2] = to_i64(p.y2.c);
  v.d = -to_i64(p.y2.d);
  return v;
}

CubicForm project(const Box& v) {
  return {v.a, v.b[0] + v.b[1] + v.b[2], v.c[0] + v.c[1] + v.c[2], v.d};
}

std::vector<Box> enumerate_boxes(const CubicForm& p, int64_t R) {
  if (R < 1) throw std::invalid_argument("enumerate_boxes: radius must be >= 1");
  std::vector<Box> out;
  const int64_t a = p.a, d = p.d;
  for (int64_t b1 = -R; b1 <= R; ++b1) {
    for (int64_t b2 = -R; b2 <= R; ++b2) {
      const int64_t b3 = p.b - b1 - b2;
      if (b3 < -R || b3 > R) continue;
      // with a = 0 the x^2-coefficients are the pairwise b-products
      if (a == 0 && (b1 * b2 <= 0 || b1 * b3 <= 0 || b2 * b3 <= 0)) continue;
      for (int64_t c1 = -R; c1 <= R; ++c1) {
        const int64_t A1 = b2 * b3 - a * c1;
        if (A1 <= 0) continue;
        for (int64_t c2 = -R; c2 <= R; ++c2) {
          const int64_t c3 = p.c - c1 - c2;
          if (c3 < -R || c3 > R) continue;
          const int64_t A2 = b1 * b3 - a * c2;
          if (A2 <= 0) continue;
          const int64_t A3 = b1 * b2 - a * c3;
          if (A3 <= 0) continue;
          const int64_t C1 = c2 * c3 - d * b1;
          if (C1 <= 0) continue;
          const int64_t C2 = c1 * c3 - d * b2;
          if (C2 <= 0) continue;
          const int64_t C3 = c1 * c2 - d * b3;
          if (C3 <= 0) continue;
          const int64_t B1 = b2 * c2 + b3 * c3 - b1 * c1 - a * d;
          // the three forms share one discriminant; one check suffices
          if (B1 * B1 >= 4 * A1 * C1) continue;
          out.push_back({a, {b1, b2, b3}, {c1, c2, c3}, d});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool on_shell(const Box& v, int64_t R) {
  for (int i = 0; i < 3; ++i)
    if (std::abs(v.b[static_cast<size_t>(i)]) == R || std::abs(v.c[static_cast<size_t>(i)]) == R)
      return true;
  return false;
}

}  // namespace

bool boundary_clean(const CubicForm& p, int64_t R) {
  for (const Box& v : enumerate_boxes(p, R))
    if (on_shell(v, R)) return false;
  return true;
}

int64_t default_radius(const CubicForm& p) {
  const int64_t h = std::max(std::max(std::abs(p.a), std::abs(p.b)),
                             std::max(std::abs(p.c), std::abs(p.d)));
  return 8 + 2 * h;
}

G2Result g2_coeff(SiegelProvider& P, const CubicForm& p, int w, int64_t R) {
  G2Result res;
  res.radius = R;
  const std::vector<Box> boxes = enumerate_boxes(p, R);
  res.boxes = boxes.size();
  for (const Box& v : boxes) {
    if (on_shell(v, R)) res.boundary_clean = false;
    res.value += theta_so44_coeff(P, box_to_pair(v), w);
  }
  return res;
}

G2Result g2_coeff_clean(SiegelProvider& P, const CubicForm& p, int w, int64_t R,
                        int max_doublings) {
  for (int i = 0;; ++i) {
    G2Result res = g2_coeff(P, p, w, R);
    if (res.boundary_clean || i == max_doublings) return res;
    R *= 2;
  }
}

}  // namespace g2lift
