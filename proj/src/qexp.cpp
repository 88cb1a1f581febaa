#include "g2lift/qexp.hpp"

#include <algorithm>
#include <stdexcept>

#include "g2lift/errors.hpp"

namespace g2lift {

QExpansion::QExpansion(int prec, std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(static_cast<size_t>(prec));
}

QExpansion QExpansion::one(int prec) { return constant(1, prec); }

QExpansion QExpansion::constant(const mpz_class& c, int prec) {
  QExpansion r(prec);
  if (prec > 0) r.coeffs_[0] = c;
  return r;
}

QExpansion QExpansion::monomial(const mpz_class& c, int n, int prec) {
  QExpansion r(prec);
  if (n >= 0 && n < prec) r.coeffs_[static_cast<size_t>(n)] = c;
  return r;
}

const mpz_class& QExpansion::coeff(int n) const {
  if (n < 0 || n >= prec()) throw std::out_of_range("QExpansion::coeff: index outside precision");
  return coeffs_[static_cast<size_t>(n)];
}

void QExpansion::set_coeff(int n, const mpz_class& v) {
  if (n < 0 || n >= prec()) throw std::out_of_range("QExpansion::set_coeff: index outside precision");
  coeffs_[static_cast<size_t>(n)] = v;
}

QExpansion QExpansion::truncate(int prec) const {
  QExpansion r(std::min(prec, this->prec()));
  std::copy_n(coeffs_.begin(), r.coeffs_.size(), r.coeffs_.begin());
  return r;
}

bool QExpansion::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c == 0; });
}

QExpansion operator+(const QExpansion& a, const QExpansion& b) {
  QExpansion r(std::min(a.prec(), b.prec()));
  for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return r;
}

QExpansion operator-(const QExpansion& a, const QExpansion& b) {
  QExpansion r(std::min(a.prec(), b.prec()));
  for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
  return r;
}

QExpansion operator-(const QExpansion& a) {
  QExpansion r(a.prec());
  for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = -a.coeffs_[i];
  return r;
}

// Quadratic Cauchy product; precisions at this scale stay small.
QExpansion operator*(const QExpansion& a, const QExpansion& b) {
  QExpansion r(std::min(a.prec(), b.prec()));
  const int P = r.prec();
  for (int i = 0; i < P; ++i) {
    if (a.coeffs_[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; i + j < P; ++j)
      r.coeffs_[static_cast<size_t>(i + j)] +=
          a.coeffs_[static_cast<size_t>(i)] * b.coeffs_[static_cast<size_t>(j)];
  }
  return r;
}

QExpansion operator*(const mpz_class& c, const QExpansion& a) {
  QExpansion r(a.prec());
  for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = c * a.coeffs_[i];
  return r;
}

bool operator==(const QExpansion& a, const QExpansion& b) { return a.coeffs_ == b.coeffs_; }

QExpansion QExpansion::pow(unsigned e) const {
  QExpansion r = one(prec());
  QExpansion base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1u;
  }
  return r;
}

QExpansion QExpansion::inverse() const {
  if (prec() == 0) return *this;
  const mpz_class& c0 = coeffs_[0];
  if (c0 != 1 && c0 != -1)
    throw std::domain_error("QExpansion::inverse: constant term must be a unit");
  QExpansion r(prec());
  r.coeffs_[0] = c0;  // 1/c0 == c0 for +-1
  for (int n = 1; n < prec(); ++n) {
    mpz_class s = 0;
    for (int k = 1; k <= n; ++k)
      s += coeffs_[static_cast<size_t>(k)] * r.coeffs_[static_cast<size_t>(n - k)];
    r.coeffs_[static_cast<size_t>(n)] = -c0 * s;
  }
  return r;
}

QExpansion QExpansion::shift(int n) const {
  QExpansion r(prec());
  for (int i = 0; i + n < prec(); ++i)
    if (i + n >= 0) r.coeffs_[static_cast<size_t>(i + n)] = coeffs_[static_cast<size_t>(i)];
  return r;
}

QExpansion euler_product(int prec) {
  QExpansion r = QExpansion::one(prec);
  for (int n = 1; n < prec; ++n) {
    // multiply by (1 - q^n) in place
    std::vector<mpz_class> c = r.coeffs();
    for (int i = prec - 1; i >= n; --i) c[static_cast<size_t>(i)] -= c[static_cast<size_t>(i - n)];
    r = QExpansion(prec, std::move(c));
  }
  return r;
}

QExpansion delta(int prec) {
  if (prec < 1) throw std::invalid_argument("delta: prec must be >= 1");
  return euler_product(prec).pow(24).shift(1);
}

QExpansion eisenstein(int k, int prec) {
  if (k != 4 && k != 6) throw WeightError("eisenstein: only weights 4 and 6 are supported");
  const int power = (k == 4) ? 3 : 5;
  const mpz_class factor = (k == 4) ? mpz_class(240) : mpz_class(-504);
  QExpansion r = QExpansion::one(prec);
  for (int n = 1; n < prec; ++n) {
    mpz_class sigma = 0;
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      mpz_class dk = d;
      mpz_pow_ui(dk.get_mpz_t(), dk.get_mpz_t(), static_cast<unsigned long>(power));
      sigma += dk;
    }
    r.set_coeff(n, factor * sigma);
  }
  return r;
}

}  // namespace g2lift
