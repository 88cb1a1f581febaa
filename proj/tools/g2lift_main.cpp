#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "g2lift/cubes.hpp"
#include "g2lift/errors.hpp"
#include "g2lift/lattice.hpp"
#include "g2lift/siegel.hpp"
#include "g2lift/store.hpp"

using namespace g2lift;

namespace {

std::vector<long long> parse_int_list(const std::string& text, char sep) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, sep)) {
    size_t b = tok.find_first_not_of(" \t");
    size_t e = tok.find_last_not_of(" \t");
    std::string t = b == std::string::npos ? "" : tok.substr(b, e - b + 1);
    try {
      size_t used = 0;
      long long v = std::stoll(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("malformed integer token \"" + t + "\" in \"" + text + "\"");
    }
  }
  return out;
}

VectorPair parse_pair(const std::string& text) {
  const size_t semi = text.find(';');
  if (semi == std::string::npos)
    throw ParseError("pair must be \"y1;y2\" with row-major entries: " + text);
  auto v1 = parse_int_list(text.substr(0, semi), ',');
  auto v2 = parse_int_list(text.substr(semi + 1), ',');
  if (v1.size() != 4 || v2.size() != 4)
    throw ParseError("pair needs 4+4 integers, got " + std::to_string(v1.size()) + "+" +
                     std::to_string(v2.size()));
  auto z = [](long long v) { return mpz_class(static_cast<long>(v)); };
  return {{z(v1[0]), z(v1[1]), z(v1[2]), z(v1[3])}, {z(v2[0]), z(v2[1]), z(v2[2]), z(v2[3])}};
}

CubicForm parse_cubic(const std::string& text, bool classical) {
  auto v = parse_int_list(text, ',');
  if (v.size() != 4) throw ParseError("cubic needs 4 integers a,b,c,d, got " + text);
  CubicForm p{v[0], v[1], v[2], v[3]};
  // Classical (tr/3) convention: middle coefficients triple under the
  // sum-matching convention used for box enumeration.
  if (classical) {
    p.b *= 3;
    p.c *= 3;
  }
  return p;
}

struct ProviderOptions {
  std::string form = "chi10";
  int weight = 0;  // 0 = take the form's natural weight
  std::string combo_f, combo_g;
  std::string table_path;
  std::string cache_dir;
};

void add_provider_flags(CLI::App* cmd, ProviderOptions& o) {
  cmd->add_option("--form", o.form, "chi10, chi12, or custom (with --f/--g)");
  cmd->add_option("--weight", o.weight, "even weight of the Siegel input form");
  cmd->add_option("--f", o.combo_f, "weight-(k-10) polynomial in E4,E6,Delta (custom form)");
  cmd->add_option("--g", o.combo_g, "weight-(k-12) polynomial in E4,E6,Delta (custom form)");
  cmd->add_option("--table", o.table_path, "siegel-sp4-level1/v1 table file to use as source");
  cmd->add_option("--cache-dir", o.cache_dir,
                  "coefficient cache directory (or $G2LIFT_CACHE_DIR)");
}

struct ProviderHandle {
  std::shared_ptr<SiegelProvider> provider;
  std::string cache_dir;  // empty = no disk cache

  ~ProviderHandle() {
    if (provider && !cache_dir.empty() && !provider->is_table()) {
      try {
        save_cache(cache_dir, provider->name(), provider->weight(), provider->cache_snapshot());
      } catch (...) {
        // cache persistence failure must not fail the computation
      }
    }
  }
};

ProviderHandle make_provider(const ProviderOptions& o) {
  ProviderHandle h;
  if (!o.table_path.empty()) {
    h.provider = ingest_table(o.table_path, o.weight);
    return h;
  }
  if (is_named_jacobi_form(o.form)) {
    const int w = named_jacobi_weight(o.form);
    if (o.weight != 0 && o.weight != w)
      throw WeightError(o.form + " has weight " + std::to_string(w) + ", not " +
                        std::to_string(o.weight));
    h.provider = SiegelProvider::maass_named(o.form);
    h.cache_dir = resolve_cache_dir(o.cache_dir);
    if (!h.cache_dir.empty())
      h.provider->preload_cache(load_cache(h.cache_dir, o.form, w));
    return h;
  }
  if (o.form == "custom") {
    if (o.weight == 0) throw WeightError("custom form requires --weight");
    const int k = o.weight;
    auto build = [k, f = o.combo_f, g = o.combo_g](int prec) {
      LevelOneForm ff = f.empty() ? LevelOneForm::zero(prec) : parse_modular_poly(f, prec);
      LevelOneForm gg = g.empty() ? LevelOneForm::zero(prec) : parse_modular_poly(g, prec);
      return jacobi_cusp(k, ff, gg, prec);
    };
    h.provider = SiegelProvider::maass(build(16), build, "custom");
    return h;
  }
  throw ParseError("unknown form \"" + o.form + "\" (known forms: chi10, chi12, custom)");
}

nlohmann::ordered_json g2_record(const CubicForm& p, const G2Result& r) {
  nlohmann::ordered_json rec;
  rec["cubic"] = {p.a, p.b, p.c, p.d};
  rec["disc"] = cubic_disc(p);
  rec["coefficient"] = r.value.get_str();
  rec["boxes"] = r.boxes;
  rec["radius"] = r.radius;
  rec["boundary_clean"] = r.boundary_clean;
  return rec;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_file_atomic(out_path, content);
}

int cmd_siegel(const ProviderOptions& po, long max_disc, const std::string& out_path) {
  ProviderHandle h = make_provider(po);
  std::map<HalfIntegralForm, mpz_class> entries;
  for (const HalfIntegralForm& T : reduced_classes_up_to(max_disc))
    entries.emplace(T, h.provider->coeff(T));
  emit(out_path,
       siegel_table_json(h.provider->name().empty() ? po.form : h.provider->name(),
                         h.provider->weight(), entries));
  return 0;
}

int cmd_so44(const ProviderOptions& po, const std::string& pair_text, int weight) {
  ProviderHandle h = make_provider(po);
  const VectorPair pair = parse_pair(pair_text);
  const int w = weight != 0 ? weight : h.provider->weight();
  std::vector<CosetReport> reports;
  const mpz_class value = theta_so44_coeff_report(*h.provider, pair, w, reports);
  std::cout << "coefficient " << value.get_str() << "\n";
  std::cout << "cosets " << reports.size() << "\n";
  for (const CosetReport& cr : reports) {
    std::cout << "  r=[[" << cr.coset.d1.get_str() << "," << cr.coset.b.get_str() << "],[0,"
              << cr.coset.d2.get_str() << "]] det=" << cr.coset.det().get_str() << " class=("
              << cr.reduced_class.n.get_str() << "," << cr.reduced_class.r.get_str() << ","
              << cr.reduced_class.m.get_str() << ") a=" << cr.a_value.get_str() << "\n";
  }
  return 0;
}

int cmd_g2(const ProviderOptions& po, const std::string& cubic_text, bool classical, int weight,
           long long radius, const std::string& out_path) {
  ProviderHandle h = make_provider(po);
  const CubicForm p = parse_cubic(cubic_text, classical);
  const int w = weight != 0 ? weight : h.provider->weight();
  const int64_t R = radius > 0 ? radius : default_radius(p);
  const G2Result r = g2_coeff(*h.provider, p, w, R);
  emit(out_path, g2_record(p, r).dump() + "\n");
  if (!r.boundary_clean)
    std::cerr << "warning: positive box on the radius-" << R
              << " boundary shell; increase --radius\n";
  return 0;
}

int cmd_g2_table(const ProviderOptions& po, long long max_height, int weight, long long radius,
                 unsigned jobs, const std::string& out_path) {
  ProviderHandle h = make_provider(po);
  const int w = weight != 0 ? weight : h.provider->weight();
  // All cubics with height <= H and disc > 0, deduplicated by p ~ -p
  // (coefficients agree); the kept representative has positive leading
  // nonzero coefficient.
  std::vector<CubicForm> cubics;
  for (long long a = -max_height; a <= max_height; ++a)
    for (long long b = -max_height; b <= max_height; ++b)
      for (long long c = -max_height; c <= max_height; ++c)
        for (long long d = -max_height; d <= max_height; ++d) {
          const CubicForm p{a, b, c, d};
          if (cubic_disc(p) <= 0) continue;
          if (p < -p) continue;
          cubics.push_back(p);
        }
  std::vector<G2Result> results(cubics.size());
  if (jobs < 1) jobs = 1;
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= cubics.size()) return;
      const int64_t R = radius > 0 ? radius : default_radius(cubics[i]);
      results[i] = g2_coeff(*h.provider, cubics[i], w, R);
    }
  };
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::string out;
  size_t total_boxes = 0;
  for (size_t i = 0; i < cubics.size(); ++i) {
    out += g2_record(cubics[i], results[i]).dump() + "\n";
    total_boxes += results[i].boxes;
  }
  nlohmann::ordered_json summary;
  summary["summary"] = true;
  summary["cubics"] = cubics.size();
  summary["boxes"] = total_boxes;
  summary["radius"] = radius;  // 0 = per-cubic default
  summary["max_height"] = max_height;
  out += summary.dump() + "\n";
  emit(out_path, out);
  return 0;
}

int cmd_import(const std::string& in_path, int weight, const std::string& out_path) {
  std::map<HalfIntegralForm, mpz_class> entries;
  std::string form = "imported";
  if (in_path.size() > 4 && in_path.substr(in_path.size() - 4) == ".csv") {
    entries = read_csv_entries(in_path);
  } else {
    auto p = ingest_table(in_path, weight);
    if (weight == 0) weight = p->weight();
    form = p->name().empty() ? form : p->name();
    // Re-query every ingested class to round-trip through the provider.
    std::ifstream in(in_path);
    nlohmann::json j;
    in >> j;
    for (const auto& e : j["entries"]) {
      HalfIntegralForm T{
          mpz_class(e["n"].is_string() ? e["n"].get<std::string>()
                                       : std::to_string(e["n"].get<long long>())),
          mpz_class(e["r"].is_string() ? e["r"].get<std::string>()
                                       : std::to_string(e["r"].get<long long>())),
          mpz_class(e["m"].is_string() ? e["m"].get<std::string>()
                                       : std::to_string(e["m"].get<long long>()))};
      entries.emplace(reduce_class(T), p->coeff(T));
    }
  }
  if (weight == 0) throw WeightError("import: --weight is required for CSV input");
  emit(out_path, siegel_table_json(form, weight, entries));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Fourier coefficients of theta lifts: Sp(4) -> SO(4,4) -> G2"};
  app.require_subcommand(1);

  ProviderOptions po_siegel, po_so44, po_g2, po_table;
  long max_disc = 48;
  std::string out_path, pair_text, cubic_text, import_in;
  bool classical = false;
  int weight = 0;
  long long radius = 0, max_height = 2;
  unsigned jobs = 1;
  int import_weight = 0;

  auto* siegel = app.add_subcommand("siegel", "export a Siegel coefficient table");
  add_provider_flags(siegel, po_siegel);
  siegel->add_option("--max-disc", max_disc, "largest discriminant to export")->required();
  siegel->add_option("--out", out_path, "output file (default stdout)");

  auto* so44 = app.add_subcommand("so44", "SO(4,4) theta-lift coefficient at a vector pair");
  add_provider_flags(so44, po_so44);
  so44->add_option("--pair", pair_text, "pair \"y1;y2\", each 2x2 row-major")->required();

  auto* g2 = app.add_subcommand("g2", "G2 Fourier coefficient at a binary cubic form");
  add_provider_flags(g2, po_g2);
  g2->add_option("--cubic", cubic_text, "cubic a,b,c,d (box-sum convention)")->required();
  g2->add_flag("--classical", classical,
               "interpret --cubic in the classical tr/3 convention (b,c scale by 3)");
  g2->add_option("--radius", radius, "box enumeration radius (default 8+2*height)");
  g2->add_option("--out", out_path, "output file (default stdout)");

  auto* g2t = app.add_subcommand("g2-table", "G2 coefficients for all cubics up to a height");
  add_provider_flags(g2t, po_table);
  g2t->add_option("--max-height", max_height, "largest coefficient height")->required();
  g2t->add_option("--radius", radius, "box enumeration radius (default 8+2*height)");
  g2t->add_option("--jobs", jobs, "worker threads (default 1)");
  g2t->add_option("--out", out_path, "output file (default stdout)");

  auto* imp = app.add_subcommand("import", "normalize a CSV or JSON coefficient table");
  imp->add_option("--in", import_in, "input file (.csv with header n,r,m,a, or schema JSON)")
      ->required();
  imp->add_option("--weight", import_weight, "weight of the imported form");
  imp->add_option("--out", out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (siegel->parsed()) return cmd_siegel(po_siegel, max_disc, out_path);
    if (so44->parsed()) return cmd_so44(po_so44, pair_text, po_so44.weight);
    if (g2->parsed()) return cmd_g2(po_g2, cubic_text, classical, po_g2.weight, radius, out_path);
    if (g2t->parsed()) return cmd_g2_table(po_table, max_height, po_table.weight, radius, jobs, out_path);
    if (imp->parsed()) return cmd_import(import_in, import_weight, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
