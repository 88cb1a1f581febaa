#include "g2lift/jacobi.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "g2lift/errors.hpp"

namespace g2lift {

namespace {

// Multiply s in place by (1 + sign * q^n z^e).
void mul_binomial(TwoVarSeries& s, int sign, int n, long e) {
  for (int i = s.prec() - 1; i >= n; --i) {
    const LaurentPoly& src = s.row(i - n);
    for (size_t j = 0; j < src.c.size(); ++j) {
      if (src.c[j] == 0) continue;
      s.row(i).add_term(src.lo + static_cast<long>(j) + e,
                        sign > 0 ? src.c[j] : mpz_class(-src.c[j]));
    }
  }
}

}  // namespace

JacobiIndex1::JacobiIndex1(int weight, int qprec, const TwoVarSeries& expansion, bool cuspidal)
    : weight_(weight), qprec_(qprec), cuspidal_(cuspidal) {
  if (qprec < 1) throw std::invalid_argument("JacobiIndex1: qprec must be >= 1");
  if (expansion.prec() < qprec)
    throw std::invalid_argument("JacobiIndex1: expansion shorter than requested qprec");
  // Collapse the (n,r) grid to the D-table, verifying D-dependence.
  for (int n = 0; n < qprec; ++n) {
    const LaurentPoly& row = expansion.row(n);
    for (size_t j = 0; j < row.c.size(); ++j) {
      const long r = row.lo + static_cast<long>(j);
      const long D = 4L * n - r * r;
      auto it = table_.find(D);
      if (it == table_.end()) {
        table_.emplace(D, row.c[j]);
      } else if (it->second != row.c[j]) {
        throw std::logic_error("JacobiIndex1: coefficients not constant on discriminant D=" +
                               std::to_string(D) + "; input is not an index-1 Jacobi form");
      }
    }
  }
  // Grid points with zero coefficient also pin their D to zero.
  for (int n = 0; n < qprec; ++n) {
    const LaurentPoly& row = expansion.row(n);
    const long rmax = static_cast<long>(std::sqrt(4.0 * n + 1.0)) + 2;
    for (long r = -rmax; r <= rmax; ++r) {
      const long D = 4L * n - r * r;
      if (D < -1) continue;
      auto it = table_.find(D);
      mpz_class v = row.coeff(r);
      if (it == table_.end()) {
        table_.emplace(D, v);
      } else if (it->second != v) {
        throw std::logic_error("JacobiIndex1: coefficients not constant on discriminant D=" +
                               std::to_string(D) + "; input is not an index-1 Jacobi form");
      }
    }
  }
  if (cuspidal_) {
    for (const auto& [D, v] : table_)
      if (D <= 0 && v != 0)
        throw CuspidalityError("JacobiIndex1: nonzero coefficient at D=" + std::to_string(D) +
                               " contradicts cuspidality");
  }
}

mpz_class JacobiIndex1::coeff_by_disc(long D) const {
  if (cuspidal_ && D <= 0) return 0;
  if (D < -1) return 0;
  const long res = ((D % 4) + 4) % 4;
  if (res != 0 && res != 3)
    throw std::domain_error("coeff_by_disc: D=" + std::to_string(D) +
                            " is not of the form 4n - r^2");
  const long n_min = (res == 0) ? D / 4 : (D + 1) / 4;
  if (n_min >= qprec_)
    throw InsufficientPrecision("coeff_by_disc: D=" + std::to_string(D) +
                                " needs q-precision " + std::to_string(n_min + 1) +
                                " but only " + std::to_string(qprec_) + " is stored");
  auto it = table_.find(D);
  return it == table_.end() ? mpz_class(0) : it->second;
}

TwoVarSeries phi_weak_minus2_series(int prec) {
  if (prec < 1) throw std::invalid_argument("phi_weak_minus2: prec must be >= 1");
  TwoVarSeries s(prec);
  s.row(0).add_term(-1, 1);
  s.row(0).add_term(0, -2);
  s.row(0).add_term(1, 1);
  for (int n = 1; n < prec; ++n) {
    mul_binomial(s, -1, n, 1);
    mul_binomial(s, -1, n, 1);
    mul_binomial(s, -1, n, -1);
    mul_binomial(s, -1, n, -1);
  }
  return euler_product(prec).pow(4).inverse() * s;
}

JacobiIndex1 phi_weak_minus2(int prec) {
  return JacobiIndex1(-2, prec, phi_weak_minus2_series(prec), false);
}

TwoVarSeries phi_weak_0_series(int prec) {
  if (prec < 1) throw std::invalid_argument("phi_weak_0: prec must be >= 1");
  // (theta_2(tau,z)/theta_2(tau,0))^2 lives in integral q-powers directly;
  // the cos^2(pi z) prefactor gives (zeta + 2 + 1/zeta)/4, so f2 below is
  // 4*(theta_2 quotient)^2 and enters the final sum without the extra 4.
  TwoVarSeries f2(prec);
  f2.row(0).add_term(-1, 1);
  f2.row(0).add_term(0, 2);
  f2.row(0).add_term(1, 1);
  QExpansion d2 = QExpansion::one(prec);
  for (int n = 1; n < prec; ++n) {
    mul_binomial(f2, 1, n, 1);
    mul_binomial(f2, 1, n, 1);
    mul_binomial(f2, 1, n, -1);
    mul_binomial(f2, 1, n, -1);
    std::vector<mpz_class> c = d2.coeffs();
    for (int i = prec - 1; i >= n; --i) c[static_cast<size_t>(i)] += c[static_cast<size_t>(i - n)];
    d2 = QExpansion(prec, std::move(c));
  }
  f2 = d2.pow(4).inverse() * f2;

  // theta_3 / theta_4 quotients carry half-integral q-powers; work in
  // s = q^(1/2) and check that odd s-rows cancel in the sum.
  const int sprec = 2 * prec;
  TwoVarSeries sum34(sprec);
  for (int sign : {1, -1}) {
    TwoVarSeries f = TwoVarSeries::one(sprec);
    QExpansion den = QExpansion::one(sprec);
    for (int m = 1; 2 * m - 1 < sprec; ++m) {
      const int e = 2 * m - 1;  // exponent of s
      mul_binomial(f, sign, e, 1);
      mul_binomial(f, sign, e, 1);
      mul_binomial(f, sign, e, -1);
      mul_binomial(f, sign, e, -1);
      std::vector<mpz_class> c = den.coeffs();
      for (int i = sprec - 1; i >= e; --i) {
        if (sign > 0)
          c[static_cast<size_t>(i)] += c[static_cast<size_t>(i - e)];
        else
          c[static_cast<size_t>(i)] -= c[static_cast<size_t>(i - e)];
      }
      den = QExpansion(sprec, std::move(c));
    }
    sum34 = sum34 + den.pow(4).inverse() * f;
  }
  TwoVarSeries result(prec);
  for (int n = 0; n < sprec; ++n) {
    if (n % 2 == 1) {
      if (!sum34.row(n).is_zero())
        throw std::logic_error("phi_weak_0: half-integral q-powers did not cancel");
      continue;
    }
    if (n / 2 < prec) result.row(n / 2) = sum34.row(n);
  }
  return f2 + mpz_class(4) * result;
}

JacobiIndex1 phi_weak_0(int prec) { return JacobiIndex1(0, prec, phi_weak_0_series(prec), false); }

JacobiIndex1 jacobi_cusp(int k, const LevelOneForm& f, const LevelOneForm& g, int prec) {
  if (k % 2 != 0) throw WeightError("jacobi_cusp: weight must be even");
  const bool fz = f.series.is_zero();
  const bool gz = g.series.is_zero();
  if (!fz && f.weight != k - 10)
    throw WeightError("jacobi_cusp: f has weight " + std::to_string(f.weight) + ", expected " +
                      std::to_string(k - 10));
  if (!gz && g.weight != k - 12)
    throw WeightError("jacobi_cusp: g has weight " + std::to_string(g.weight) + ", expected " +
                      std::to_string(k - 12));
  const QExpansion D = delta(prec);
  TwoVarSeries total(prec);
  if (!fz) total = total + (D * f.series.truncate(prec)) * phi_weak_minus2_series(prec);
  if (!gz) total = total + (D * g.series.truncate(prec)) * phi_weak_0_series(prec);
  return JacobiIndex1(k, prec, total, /*cuspidal=*/true);
}

bool is_named_jacobi_form(const std::string& name) { return name == "chi10" || name == "chi12"; }

int named_jacobi_weight(const std::string& name) {
  if (name == "chi10") return 10;
  if (name == "chi12") return 12;
  throw std::invalid_argument("unknown Jacobi cusp form: " + name +
                              " (known forms: chi10, chi12)");
}

JacobiIndex1 jacobi_cusp_named(const std::string& name, int prec) {
  if (name == "chi10")
    return jacobi_cusp(10, {QExpansion::one(prec), 0}, LevelOneForm::zero(prec), prec);
  if (name == "chi12")
    return jacobi_cusp(12, LevelOneForm::zero(prec), {QExpansion::one(prec), 0}, prec);
  throw std::invalid_argument("unknown Jacobi cusp form: " + name +
                              " (known forms: chi10, chi12)");
}

// --- polynomial-in-(E4, E6, Delta) parser -----------------------------------

namespace {

struct PolyParser {
  const std::string& src;
  size_t pos = 0;
  int prec;

  explicit PolyParser(const std::string& s, int p) : src(s), prec(p) {}

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError("modular polynomial: " + msg + " at position " + std::to_string(pos) +
                     " in \"" + src + "\"");
  }

  // expr := term (('+'|'-') term)*
  LevelOneForm parse_expr() {
    bool neg = eat('-');
    LevelOneForm acc = parse_term();
    if (neg) acc.series = -acc.series;
    bool have = !acc.series.is_zero();
    for (;;) {
      skip_ws();
      if (eat('+'))
        neg = false;
      else if (eat('-'))
        neg = true;
      else
        break;
      LevelOneForm t = parse_term();
      if (!t.series.is_zero()) {
        if (have && t.weight != acc.weight) fail("mixed weights in sum");
        acc.weight = t.weight;
        have = true;
      }
      acc.series = neg ? acc.series - t.series : acc.series + t.series;
    }
    return acc;
  }

  // term := factor ('*' factor)*
  LevelOneForm parse_term() {
    LevelOneForm acc = parse_factor();
    for (;;) {
      skip_ws();
      if (!eat('*')) break;
      LevelOneForm f = parse_factor();
      acc.series = acc.series * f.series;
      acc.weight += f.weight;
    }
    return acc;
  }

  // factor := atom ('^' uint)?
  LevelOneForm parse_factor() {
    LevelOneForm a = parse_atom();
    skip_ws();
    if (eat('^')) {
      skip_ws();
      if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
        fail("expected exponent");
      unsigned e = 0;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
        e = e * 10 + static_cast<unsigned>(src[pos++] - '0');
      a.series = a.series.pow(e);
      a.weight *= static_cast<int>(e);
    }
    return a;
  }

  LevelOneForm parse_atom() {
    skip_ws();
    if (eat('(')) {
      LevelOneForm e = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
      std::string num;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
        num += src[pos++];
      return {QExpansion::constant(mpz_class(num), prec), 0};
    }
    if (src.compare(pos, 2, "E4") == 0) {
      pos += 2;
      return {eisenstein(4, prec), 4};
    }
    if (src.compare(pos, 2, "E6") == 0) {
      pos += 2;
      return {eisenstein(6, prec), 6};
    }
    if (src.compare(pos, 5, "Delta") == 0) {
      pos += 5;
      return {delta(prec), 12};
    }
    fail("expected integer, E4, E6, Delta or '('");
  }
};

}  // namespace

LevelOneForm parse_modular_poly(const std::string& expr, int prec) {
  PolyParser p(expr, prec);
  LevelOneForm f = p.parse_expr();
  p.skip_ws();
  if (p.pos != expr.size()) p.fail("trailing input");
  return f;
}

}  // namespace g2lift
