#include "g2lift/siegel.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include <nlohmann/json.hpp>

#include "g2lift/errors.hpp"

namespace g2lift {

HalfIntegralForm reduce_class(const HalfIntegralForm& T) {
  if (!T.positive_definite())
    throw NotPositiveDefinite("reduce_class: T = (" + T.n.get_str() + "," + T.r.get_str() + "," +
                              T.m.get_str() + ") is not positive-definite");
  mpz_class n = T.n, r = T.r, m = T.m;
  for (;;) {
    if (n > m) std::swap(n, m);  // u = [[0,1],[1,0]] fixes r
    // translate r into (-n, n] via u = [[1,t],[0,1]]
    mpz_class t, rem;
    mpz_fdiv_qr(t.get_mpz_t(), rem.get_mpz_t(), (mpz_class(n - r)).get_mpz_t(),
                (mpz_class(2 * n)).get_mpz_t());
    // r + 2nt in (-n, n]
    if (t != 0) {
      m += t * r + n * t * t;
      r += 2 * n * t;
    }
    if (n <= m) break;
  }
  if (r < 0) r = -r;  // diag(1,-1)
  if (n > m) {
    std::swap(n, m);
  }
  return {n, r, m};
}

mpz_class maass_lift_coeff(const JacobiIndex1& J, const HalfIntegralForm& T) {
  if (!T.positive_definite())
    throw NotPositiveDefinite("maass_lift_coeff: T is not positive-definite");
  if (!J.cuspidal()) throw std::invalid_argument("maass_lift_coeff: J must be cuspidal");
  mpz_class g = gcd(gcd(T.n, T.r), T.m);
  const mpz_class D = T.disc();
  mpz_class total = 0;
  for (mpz_class d = 1; d <= g; ++d) {
    if (g % d != 0) continue;
    mpz_class dk;
    mpz_pow_ui(dk.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(J.weight() - 1));
    mpz_class Dd = D / (d * d);
    if (!Dd.fits_slong_p()) throw std::overflow_error("maass_lift_coeff: discriminant too large");
    total += dk * J.coeff_by_disc(Dd.get_si());
  }
  return total;
}

std::vector<HalfIntegralForm> reduced_classes_up_to(long max_disc) {
  std::vector<HalfIntegralForm> out;
  for (long n = 1; 4 * n * n - n * n <= max_disc; ++n) {
    for (long r = 0; r <= n; ++r) {
      for (long m = n;; ++m) {
        const long disc = 4 * n * m - r * r;
        if (disc > max_disc) break;
        if (disc > 0) out.push_back({n, r, m});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const HalfIntegralForm& a, const HalfIntegralForm& b) {
    return std::tuple(a.disc(), a.n, a.r, a.m) < std::tuple(b.disc(), b.n, b.r, b.m);
  });
  return out;
}

std::shared_ptr<SiegelProvider> SiegelProvider::maass(JacobiIndex1 initial, Regenerator regen,
                                                      std::string name) {
  if (!regen) throw std::invalid_argument("SiegelProvider::maass: regenerator required");
  auto p = std::shared_ptr<SiegelProvider>(new SiegelProvider(initial.weight(), std::move(name)));
  p->regen_ = std::move(regen);
  p->jacobi_ = std::make_shared<const JacobiIndex1>(std::move(initial));
  return p;
}

std::shared_ptr<SiegelProvider> SiegelProvider::maass_named(const std::string& name,
                                                            int initial_prec) {
  return maass(jacobi_cusp_named(name, initial_prec),
               [name](int prec) { return jacobi_cusp_named(name, prec); }, name);
}

std::shared_ptr<SiegelProvider> SiegelProvider::from_table(
    int weight, std::string name, std::map<HalfIntegralForm, mpz_class> entries) {
  auto p = std::shared_ptr<SiegelProvider>(new SiegelProvider(weight, std::move(name)));
  p->table_ = std::move(entries);
  return p;
}

mpz_class SiegelProvider::compute(const HalfIntegralForm& reduced) {
  if (!regen_) {
    auto it = table_.find(reduced);
    if (it == table_.end())
      throw MissingEntry("SiegelProvider: class (" + reduced.n.get_str() + "," +
                         reduced.r.get_str() + "," + reduced.m.get_str() +
                         ") is not in the ingested table");
    return it->second;
  }
  // Maass source: extend the Jacobi expansion on demand.
  mpz_class D = reduced.disc();
  if (!D.fits_slong_p()) throw std::overflow_error("SiegelProvider: discriminant too large");
  const int needed = static_cast<int>(D.get_si() / 4) + 2;
  std::shared_ptr<const JacobiIndex1> jac;
  {
    std::shared_lock lock(mutex_);
    jac = jacobi_;
  }
  if (jac->qprec() < needed) {
    auto fresh =
        std::make_shared<const JacobiIndex1>(regen_(std::max(needed, 2 * jac->qprec())));
    std::unique_lock lock(mutex_);
    if (jacobi_->qprec() < fresh->qprec()) jacobi_ = fresh;
    jac = jacobi_;
  }
  return maass_lift_coeff(*jac, reduced);
}

mpz_class SiegelProvider::coeff(const HalfIntegralForm& T) {
  const HalfIntegralForm red = reduce_class(T);
  {
    std::shared_lock lock(mutex_);
    auto it = cache_.find(red);
    if (it != cache_.end()) return it->second;
  }
  mpz_class v = compute(red);
  {
    std::unique_lock lock(mutex_);
    cache_.emplace(red, v);  // recomputation is idempotent; races are benign
  }
  return v;
}

std::map<HalfIntegralForm, mpz_class> SiegelProvider::cache_snapshot() const {
  std::shared_lock lock(mutex_);
  return cache_;
}

void SiegelProvider::preload_cache(const std::map<HalfIntegralForm, mpz_class>& entries) {
  std::unique_lock lock(mutex_);
  for (const auto& [k, v] : entries) cache_.insert_or_assign(k, v);
}

std::shared_ptr<SiegelProvider> ingest_table(const std::string& path, int weight) {
  std::ifstream in(path);
  if (!in) throw ParseError("ingest_table: cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("ingest_table: " + path + ": " + e.what());
  }
  if (!j.is_object() || j.value("schema", "") != "siegel-sp4-level1/v1")
    throw ParseError("ingest_table: " + path + ": missing or unknown schema (expected siegel-sp4-level1/v1)");
  if (!j.contains("weight") || !j["weight"].is_number_integer())
    throw ParseError("ingest_table: " + path + ": missing integer \"weight\"");
  const int file_weight = j["weight"].get<int>();
  if (file_weight % 2 != 0) throw WeightError("ingest_table: weight must be even");
  if (weight != 0 && weight != file_weight)
    throw WeightError("ingest_table: file has weight " + std::to_string(file_weight) +
                      ", expected " + std::to_string(weight));
  std::map<HalfIntegralForm, mpz_class> entries;
  if (!j.contains("entries") || !j["entries"].is_array())
    throw ParseError("ingest_table: " + path + ": missing \"entries\" array");
  size_t idx = 0;
  for (const auto& e : j["entries"]) {
    ++idx;
    const std::string where = path + ": entry " + std::to_string(idx);
    if (!e.is_object() || !e.contains("n") || !e.contains("r") || !e.contains("m") ||
        !e.contains("a"))
      throw ParseError("ingest_table: " + where + ": expected object with n, r, m, a");
    HalfIntegralForm T;
    try {
      T.n = mpz_class(e["n"].is_string() ? e["n"].get<std::string>()
                                         : std::to_string(e["n"].get<long long>()));
      T.r = mpz_class(e["r"].is_string() ? e["r"].get<std::string>()
                                         : std::to_string(e["r"].get<long long>()));
      T.m = mpz_class(e["m"].is_string() ? e["m"].get<std::string>()
                                         : std::to_string(e["m"].get<long long>()));
      mpz_class a(e["a"].is_string() ? e["a"].get<std::string>()
                                     : std::to_string(e["a"].get<long long>()));
      if (!T.positive_definite())
        throw ParseError("ingest_table: " + where + ": T is not positive-definite");
      HalfIntegralForm red = reduce_class(T);
      auto it = entries.find(red);
      if (it != entries.end()) {
        if (it->second != a)
          throw DuplicateClassError("ingest_table: " + where +
                                    ": conflicting value for class (" + red.n.get_str() + "," +
                                    red.r.get_str() + "," + red.m.get_str() + ")");
        // equal duplicates are deduplicated silently
      } else {
        entries.emplace(red, a);
      }
    } catch (const nlohmann::json::exception& ex) {
      throw ParseError("ingest_table: " + where + ": " + ex.what());
    } catch (const std::invalid_argument& ex) {
      throw ParseError("ingest_table: " + where + ": bad integer literal");
    }
  }
  auto p = SiegelProvider::from_table(file_weight, j.value("form", ""), std::move(entries));
  return p;
}

}  // namespace g2lift
