#include "g2lift/store.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "g2lift/errors.hpp"

namespace g2lift {

std::string resolve_cache_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("G2LIFT_CACHE_DIR")) return env;
  return "";
}

std::string cache_file_path(const std::string& cache_dir, const std::string& form, int weight) {
  std::string safe = form.empty() ? "table" : form;
  for (char& c : safe)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') c = '_';
  return cache_dir + "/" + safe + "-w" + std::to_string(weight) + ".json";
}

std::string siegel_table_json(const std::string& form, int weight,
                              const std::map<HalfIntegralForm, mpz_class>& entries) {
  nlohmann::ordered_json j;
  j["schema"] = "siegel-sp4-level1/v1";
  j["weight"] = weight;
  j["form"] = form;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& [T, a] : entries) {
    nlohmann::ordered_json e;
    e["n"] = T.n.get_str();
    e["r"] = T.r.get_str();
    e["m"] = T.m.get_str();
    e["a"] = a.get_str();
    j["entries"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::map<HalfIntegralForm, mpz_class> load_cache(const std::string& cache_dir,
                                                 const std::string& form, int weight) {
  std::map<HalfIntegralForm, mpz_class> out;
  const std::string path = cache_file_path(cache_dir, form, weight);
  if (!std::filesystem::exists(path)) return out;
  // A cache file is a siegel-sp4-level1/v1 table of known-good values.
  std::ifstream in(path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("load_cache: " + path + ": " + e.what());
  }
  if (j.value("schema", "") != "siegel-sp4-level1/v1")
    throw ParseError("load_cache: " + path + ": unknown schema");
  for (const auto& e : j["entries"]) {
    HalfIntegralForm T{mpz_class(e["n"].get<std::string>()), mpz_class(e["r"].get<std::string>()),
                       mpz_class(e["m"].get<std::string>())};
    out.emplace(reduce_class(T), mpz_class(e["a"].get<std::string>()));
  }
  return out;
}

void save_cache(const std::string& cache_dir, const std::string& form, int weight,
                const std::map<HalfIntegralForm, mpz_class>& entries) {
  std::filesystem::create_directories(cache_dir);
  write_file_atomic(cache_file_path(cache_dir, form, weight),
                    siegel_table_json(form, weight, entries));
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) {
    // trim
    size_t b = item.find_first_not_of(" \t\r");
    size_t e = item.find_last_not_of(" \t\r");
    fields.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return fields;
}

}  // namespace

std::map<HalfIntegralForm, mpz_class> read_csv_entries(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("read_csv_entries: cannot open " + path);
  std::string line;
  size_t lineno = 0;
  if (!std::getline(in, line)) throw ParseError(path + ": empty file");
  ++lineno;
  auto header = split_csv_line(line);
  if (header != std::vector<std::string>{"n", "r", "m", "a"})
    throw ParseError(path + ": line 1: expected header n,r,m,a");
  std::map<HalfIntegralForm, mpz_class> out;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto f = split_csv_line(line);
    if (f.size() != 4)
      throw ParseError(path + ": line " + std::to_string(lineno) + ": expected 4 fields");
    HalfIntegralForm T;
    mpz_class a;
    try {
      T.n = mpz_class(f[0]);
      T.r = mpz_class(f[1]);
      T.m = mpz_class(f[2]);
      a = mpz_class(f[3]);
    } catch (const std::invalid_argument&) {
      throw ParseError(path + ": line " + std::to_string(lineno) + ": bad integer literal");
    }
    if (!T.positive_definite())
      throw ParseError(path + ": line " + std::to_string(lineno) +
                       ": T is not positive-definite");
    HalfIntegralForm red = reduce_class(T);
    auto it = out.find(red);
    if (it != out.end()) {
      if (it->second != a)
        throw DuplicateClassError(path + ": line " + std::to_string(lineno) +
                                  ": conflicting value for class (" + red.n.get_str() + "," +
                                  red.r.get_str() + "," + red.m.get_str() + ")");
    } else {
      out.emplace(red, a);
    }
  }
  return out;
}

}  // namespace g2lift
