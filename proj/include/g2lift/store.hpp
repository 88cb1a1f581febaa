#ifndef G2LIFT_STORE_HPP
#define G2LIFT_STORE_HPP

#include <map>
#include <string>

#include "g2lift/siegel.hpp"

namespace g2lift {

/// Cache root resolution: explicit flag wins, then $G2LIFT_CACHE_DIR,
/// otherwise empty (caching disabled).
std::string resolve_cache_dir(const std::string& flag_value);

std::string cache_file_path(const std::string& cache_dir, const std::string& form, int weight);

/// Load a per-(form, weight) reduced-class cache; missing file -> empty map.
std::map<HalfIntegralForm, mpz_class> load_cache(const std::string& cache_dir,
                                                 const std::string& form, int weight);

/// Atomic write (temp file + rename).
void save_cache(const std::string& cache_dir, const std::string& form, int weight,
                const std::map<HalfIntegralForm, mpz_class>& entries);

/// siegel-sp4-level1/v1 serialization; entries are emitted in map order, so
/// output is deterministic. Big integers serialize as decimal text.
std::string siegel_table_json(const std::string& form, int weight,
                              const std::map<HalfIntegralForm, mpz_class>& entries);

void write_file_atomic(const std::string& path, const std::string& content);

/// CSV with header n,r,m,a -> reduced-class entries. Throws ParseError with
/// the offending line number, DuplicateClassError on conflicting duplicates.
std::map<HalfIntegralForm, mpz_class> read_csv_entries(const std::string& path);

}  // namespace g2lift

#endif
