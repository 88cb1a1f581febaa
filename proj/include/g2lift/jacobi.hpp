#ifndef G2LIFT_JACOBI_HPP
#define G2LIFT_JACOBI_HPP

#include <gmpxx.h>

#include <map>
#include <string>

#include "g2lift/qexp.hpp"
#include "g2lift/twovar.hpp"

namespace g2lift {

/// Index-1 Jacobi form stored as a table keyed by the discriminant
/// D = 4n - r^2. Coefficients c(n,r) of index-1 forms depend only on D;
/// constructors verify this on the raw (n,r) grid before collapsing.
class JacobiIndex1 {
 public:
  JacobiIndex1(int weight, int qprec, const TwoVarSeries& expansion, bool cuspidal);

  int weight() const { return weight_; }
  int qprec() const { return qprec_; }
  bool cuspidal() const { return cuspidal_; }

  /// Table value at discriminant D. Throws InsufficientPrecision when D is
  /// not realized as 4n - r^2 with n < qprec.
  mpz_class coeff_by_disc(long D) const;

  const std::map<long, mpz_class>& table() const { return table_; }

 private:
  int weight_;
  int qprec_;
  bool cuspidal_;
  std::map<long, mpz_class> table_;
};

/// Level-one modular form together with its weight (weight is meaningless
/// for the zero series).
struct LevelOneForm {
  QExpansion series;
  int weight = 0;

  static LevelOneForm zero(int prec) { return {QExpansion(prec), 0}; }
};

/// Parse an integer polynomial in E4, E6, Delta (e.g. "E4^2-3*Delta") into
/// its q-expansion, checking homogeneity of the weight.
LevelOneForm parse_modular_poly(const std::string& expr, int prec);

/// The weak Jacobi form phi_{-2,1}, via the product
/// (z - 2 + 1/z) prod (1-q^n z)^2 (1-q^n/z)^2 (1-q^n)^-4.
JacobiIndex1 phi_weak_minus2(int prec);
TwoVarSeries phi_weak_minus2_series(int prec);

/// The weak Jacobi form phi_{0,1}, as 4 * (sum of the three even theta
/// quotients squared); q^0 part is z + 10 + 1/z.
JacobiIndex1 phi_weak_0(int prec);
TwoVarSeries phi_weak_0_series(int prec);

/// Delta * (f * phi_{-2,1} + g * phi_{0,1}) of weight k; f must have weight
/// k-10 and g weight k-12. The result must be a cusp form; any c(D) != 0
/// with D <= 0 is a hard error.
JacobiIndex1 jacobi_cusp(int k, const LevelOneForm& f, const LevelOneForm& g, int prec);

/// Named presets: "chi10" = Delta*phi_{-2,1}, "chi12" = Delta*phi_{0,1}.
JacobiIndex1 jacobi_cusp_named(const std::string& name, int prec);
bool is_named_jacobi_form(const std::string& name);
int named_jacobi_weight(const std::string& name);

}  // namespace g2lift

#endif
