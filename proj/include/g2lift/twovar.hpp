#ifndef G2LIFT_TWOVAR_HPP
#define G2LIFT_TWOVAR_HPP

#include <gmpxx.h>

#include <vector>

#include "g2lift/qexp.hpp"

namespace g2lift {

/// Laurent polynomial in z (the elliptic variable): coefficients of z^r
/// for lo <= r < lo + size.
struct LaurentPoly {
  long lo = 0;
  std::vector<mpz_class> c;

  mpz_class coeff(long r) const;
  void add_term(long r, const mpz_class& v);
  void trim();
  bool is_zero() const;
};

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const mpz_class& s, const LaurentPoly& a);
bool operator==(const LaurentPoly& a, const LaurentPoly& b);

/// Truncated series in q whose coefficients are Laurent polynomials in z.
/// rows[n] is the z-Laurent coefficient of q^n.
class TwoVarSeries {
 public:
  TwoVarSeries() = default;
  explicit TwoVarSeries(int prec) : rows_(static_cast<size_t>(prec)) {}

  static TwoVarSeries one(int prec);
  /// c * q^n * z^r.
  static TwoVarSeries monomial(const mpz_class& c, int n, long r, int prec);
  static TwoVarSeries from_series(const QExpansion& f);

  int prec() const { return static_cast<int>(rows_.size()); }
  const LaurentPoly& row(int n) const { return rows_[static_cast<size_t>(n)]; }
  LaurentPoly& row(int n) { return rows_[static_cast<size_t>(n)]; }
  mpz_class coeff(int n, long r) const { return row(n).coeff(r); }

  friend TwoVarSeries operator+(const TwoVarSeries& a, const TwoVarSeries& b);
  friend TwoVarSeries operator*(const TwoVarSeries& a, const TwoVarSeries& b);
  friend TwoVarSeries operator*(const mpz_class& s, const TwoVarSeries& a);
  friend TwoVarSeries operator*(const QExpansion& f, const TwoVarSeries& a);
  friend bool operator==(const TwoVarSeries& a, const TwoVarSeries& b);

 private:
  std::vector<LaurentPoly> rows_;
};

}  // namespace g2lift

#endif
