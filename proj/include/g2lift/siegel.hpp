#ifndef G2LIFT_SIEGEL_HPP
#define G2LIFT_SIEGEL_HPP

#include <gmpxx.h>

#include <functional>
#include <map>
#include <tuple>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

#include "g2lift/jacobi.hpp"

namespace g2lift {

/// Half-integral 2x2 matrix T = [[n, r/2], [r/2, m]], stored as (n, r, m).
struct HalfIntegralForm {
  mpz_class n, r, m;

  mpz_class disc() const { return 4 * n * m - r * r; }
  bool positive_definite() const { return n > 0 && disc() > 0; }

  friend bool operator==(const HalfIntegralForm& a, const HalfIntegralForm& b) = default;
  friend bool operator<(const HalfIntegralForm& a, const HalfIntegralForm& b) {
    return std::tie(a.n, a.r, a.m) < std::tie(b.n, b.r, b.m);
  }
};

/// GL2(Z)-reduced class representative with 0 <= r <= n <= m.
/// Throws NotPositiveDefinite.
HalfIntegralForm reduce_class(const HalfIntegralForm& T);

/// Classical Maass lift coefficient
/// a(T) = sum_{d | gcd(n,r,m)} d^{k-1} c_J((4nm - r^2)/d^2).
mpz_class maass_lift_coeff(const JacobiIndex1& J, const HalfIntegralForm& T);

/// All reduced classes (0 <= r <= n <= m) with 0 < disc <= max_disc,
/// ordered by (disc, n, r, m).
std::vector<HalfIntegralForm> reduced_classes_up_to(long max_disc);

/// Source of Siegel Fourier coefficients a_F(T) for a level-one cusp form on
/// Sp(4): either a Maass lift of an index-1 Jacobi cusp form (precision is
/// extended on demand) or an ingested coefficient table (never extrapolates).
/// Values are cached per reduced class; queries are safe to run concurrently.
class SiegelProvider {
 public:
  using Regenerator = std::function<JacobiIndex1(int prec)>;

  static std::shared_ptr<SiegelProvider> maass(JacobiIndex1 initial, Regenerator regen,
                                               std::string name = "");
  static std::shared_ptr<SiegelProvider> maass_named(const std::string& name, int initial_prec = 16);
  static std::shared_ptr<SiegelProvider> from_table(int weight, std::string name,
                                                    std::map<HalfIntegralForm, mpz_class> entries);

  int weight() const { return weight_; }
  const std::string& name() const { return name_; }
  bool is_table() const { return !regen_; }

  /// a_F(T); T must be positive-definite. Table sources throw MissingEntry
  /// on classes they do not carry.
  mpz_class coeff(const HalfIntegralForm& T);

  /// Snapshot of the reduced-class cache (for persistence).
  std::map<HalfIntegralForm, mpz_class> cache_snapshot() const;
  /// Preload cached values (e.g. from disk). Entries must be reduced.
  void preload_cache(const std::map<HalfIntegralForm, mpz_class>& entries);

 private:
  SiegelProvider(int weight, std::string name) : weight_(weight), name_(std::move(name)) {}

  mpz_class compute(const HalfIntegralForm& reduced);

  int weight_;
  std::string name_;
  Regenerator regen_;  // null for table sources
  std::shared_ptr<const JacobiIndex1> jacobi_;
  std::map<HalfIntegralForm, mpz_class> table_;
  std::map<HalfIntegralForm, mpz_class> cache_;
  mutable std::shared_mutex mutex_;
};

/// Parse a siegel-sp4-level1/v1 JSON table file. Throws ParseError (with
/// position information), DuplicateClassError, or WeightError if the file's
/// weight contradicts `weight` (pass 0 to accept the file's weight).
std::shared_ptr<SiegelProvider> ingest_table(const std::string& path, int weight);

}  // namespace g2lift

#endif
