#ifndef G2LIFT_QEXP_HPP
#define G2LIFT_QEXP_HPP

#include <gmpxx.h>

#include <vector>

namespace g2lift {

/// Truncated power series in q with exact integer coefficients.
/// coeff(n) is the coefficient of q^n for 0 <= n < prec().
class QExpansion {
 public:
  QExpansion() = default;
  explicit QExpansion(int prec) : coeffs_(static_cast<size_t>(prec)) {}
  QExpansion(int prec, std::vector<mpz_class> coeffs);

  static QExpansion one(int prec);
  static QExpansion constant(const mpz_class& c, int prec);
  /// c * q^n, truncated.
  static QExpansion monomial(const mpz_class& c, int n, int prec);

  int prec() const { return static_cast<int>(coeffs_.size()); }
  const mpz_class& coeff(int n) const;
  void set_coeff(int n, const mpz_class& v);
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  QExpansion truncate(int prec) const;
  bool is_zero() const;

  friend QExpansion operator+(const QExpansion& a, const QExpansion& b);
  friend QExpansion operator-(const QExpansion& a, const QExpansion& b);
  friend QExpansion operator-(const QExpansion& a);
  friend QExpansion operator*(const QExpansion& a, const QExpansion& b);
  friend QExpansion operator*(const mpz_class& c, const QExpansion& a);
  friend bool operator==(const QExpansion& a, const QExpansion& b);

  QExpansion pow(unsigned e) const;
  /// Multiplicative inverse; requires constant term 1 or -1.
  QExpansion inverse() const;
  /// Multiply by q^n (shift up), truncating at current precision.
  QExpansion shift(int n) const;

 private:
  std::vector<mpz_class> coeffs_;
};

/// Delta = q prod_{n>=1} (1-q^n)^24.
QExpansion delta(int prec);

/// E4 or E6, normalized with constant term 1. Throws WeightError otherwise.
QExpansion eisenstein(int k, int prec);

/// prod_{n>=1} (1-q^n), Euler product form.
QExpansion euler_product(int prec);

}  // namespace g2lift

#endif
