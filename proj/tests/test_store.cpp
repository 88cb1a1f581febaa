#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "g2lift/errors.hpp"
#include "g2lift/store.hpp"

using namespace g2lift;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const std::string& leaf) {
  fs::path p = fs::temp_directory_path() / leaf;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("siegel table export/import round-trip") {
  const fs::path dir = temp_dir("g2lift_test_store_rt");
  auto P = SiegelProvider::maass_named("chi10");
  std::map<HalfIntegralForm, mpz_class> entries;
  for (const HalfIntegralForm& T : reduced_classes_up_to(24)) entries.emplace(T, P->coeff(T));
  const std::string path = (dir / "chi10.json").string();
  write_file_atomic(path, siegel_table_json("chi10", 10, entries));

  auto Q = ingest_table(path, 10);
  for (const auto& [T, a] : entries) CHECK(Q->coeff(T) == a);
}

TEST_CASE("export is deterministic") {
  auto P = SiegelProvider::maass_named("chi10");
  std::map<HalfIntegralForm, mpz_class> entries;
  for (const HalfIntegralForm& T : reduced_classes_up_to(16)) entries.emplace(T, P->coeff(T));
  CHECK(siegel_table_json("chi10", 10, entries) == siegel_table_json("chi10", 10, entries));
}

TEST_CASE("max_disc 2 exports only the class (1,1,1)") {
  auto classes = reduced_classes_up_to(2);
  CHECK(classes.empty());  // minimal positive-definite disc is 3
  classes = reduced_classes_up_to(3);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0] == HalfIntegralForm{1, 1, 1});
  // disc 4 adds (1,0,1)
  classes = reduced_classes_up_to(4);
  REQUIRE(classes.size() == 2);
  CHECK(classes[1] == HalfIntegralForm{1, 0, 1});
}

TEST_CASE("disk cache: cold and warm runs agree") {
  const fs::path dir = temp_dir("g2lift_test_store_cache");
  std::map<HalfIntegralForm, mpz_class> cold;
  {
    auto P = SiegelProvider::maass_named("chi10");
    for (const HalfIntegralForm& T : reduced_classes_up_to(20)) cold.emplace(T, P->coeff(T));
    save_cache(dir.string(), "chi10", 10, P->cache_snapshot());
  }
  {
    auto P = SiegelProvider::maass_named("chi10");
    P->preload_cache(load_cache(dir.string(), "chi10", 10));
    for (const auto& [T, a] : cold) CHECK(P->coeff(T) == a);
  }
  CHECK(load_cache(dir.string(), "missing-form", 10).empty());
}

TEST_CASE("csv import") {
  const fs::path dir = temp_dir("g2lift_test_store_csv");

  SUBCASE("well-formed rows, equivalent duplicates deduplicated") {
    const std::string path = (dir / "ok.csv").string();
    std::ofstream(path) << "n,r,m,a\n1,1,1,1\n1,0,1,-2\n1,2,2,-2\n2,1,2,36\n";
    auto entries = read_csv_entries(path);
    CHECK(entries.size() == 3);  // (1,2,2) reduces to (1,0,1)
    CHECK(entries.at({1, 0, 1}) == -2);
  }

  SUBCASE("non-positive-definite row rejected with its line number") {
    const std::string path = (dir / "npd.csv").string();
    std::ofstream(path) << "n,r,m,a\n1,1,1,1\n1,2,1,5\n";
    CHECK_THROWS_WITH_AS(read_csv_entries(path), doctest::Contains("line 3"), ParseError);
  }

  SUBCASE("conflicting duplicates are an error") {
    const std::string path = (dir / "dup.csv").string();
    std::ofstream(path) << "n,r,m,a\n1,0,1,-2\n1,2,2,7\n";
    CHECK_THROWS_AS(read_csv_entries(path), DuplicateClassError);
  }

  SUBCASE("malformed tokens") {
    const std::string path = (dir / "bad.csv").string();
    std::ofstream(path) << "n,r,m,a\n1,x,1,1\n";
    CHECK_THROWS_AS(read_csv_entries(path), ParseError);
    const std::string path2 = (dir / "hdr.csv").string();
    std::ofstream(path2) << "a,b,c,d\n";
    CHECK_THROWS_AS(read_csv_entries(path2), ParseError);
  }
}
