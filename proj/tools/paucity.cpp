// paucity: command-line driver for the equal-sums laboratory.
//
//   paucity depress x^3+3x^2
//   paucity enumerate x^3 s=2 B=12 [--emit | --csv out.csv] [--oracle]
//   paucity census y^3-27y s=2 B=1000 [--on-image] [--audit]
//   paucity ladder x^3 s=2 200,400,800,1600 --fit --compare [--tsv ladder.tsv]
//   paucity selftest
//
// Exit codes: 0 ok, 1 internal failure, 2 parse error, 3 precondition, 4 memory budget,
// 5 oracle mismatch. Errors are single JSON lines on stderr.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "paucity/asymptotics.hpp"
#include "paucity/cache.hpp"
#include "paucity/depress.hpp"
#include "paucity/enumerate.hpp"
#include "paucity/error.hpp"
#include "paucity/oracle.hpp"
#include "paucity/report.hpp"
#include "paucity/surface.hpp"

namespace fs = std::filesystem;
using namespace paucity;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitMemory = 4;
constexpr int kExitOracle = 5;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
      return kExitParse;
    case ErrorKind::MemoryBudgetExceeded:
      return kExitMemory;
    case ErrorKind::OracleMismatch:
      return kExitOracle;
    case ErrorKind::ConvergenceFailure:
      return kExitInternal;
    default:
      return kExitPrecondition;
  }
}

void report_error(const std::string& kind, const std::string& message, int code) {
  Json j;
  j["error"] = kind;
  j["message"] = message;
  j["exit"] = code;
  std::cerr << j.dump() << '\n';
}

void report_warning(const std::string& message) {
  Json j;
  j["warning"] = message;
  std::cerr << j.dump() << '\n';
}

std::uint64_t parse_bytes(const std::string& text) {
  static const std::regex pattern(R"(^\s*(\d+)\s*([KkMmGgTt]?)(i?[Bb])?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw Error(ErrorKind::ParseError, "cannot read byte size '" + text + "'");
  std::uint64_t value = std::stoull(m[1].str());
  const std::string unit = m[2].str();
  int shift = 0;
  if (!unit.empty()) shift = 10 * (1 + static_cast<int>(std::string("kmgt").find(static_cast<char>(std::tolower(unit[0])))));
  return value << shift;
}

/// Settings that can come from a flag, the environment, or a key=value file.
struct Settings {
  fs::path cache_dir;
  std::uint64_t memory_budget = EnumerateOptions{}.memory_budget;
};

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open config file " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::ParseError, path + ":" + std::to_string(lineno) + ": expected key=value");
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

fs::path default_cache_dir() {
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "paucity-lab";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "paucity-lab";
  return fs::temp_directory_path() / "paucity-lab";
}

// flag > environment > config file > default
Settings resolve_settings(const std::optional<std::string>& cache_flag, const std::optional<std::string>& budget_flag,
                          const std::optional<std::string>& config_path) {
  std::map<std::string, std::string> file;
  if (config_path) file = read_config_file(*config_path);
  auto pick = [&](const std::optional<std::string>& flag, const char* env, const char* key) -> std::optional<std::string> {
    if (flag) return flag;
    if (const char* v = std::getenv(env); v && *v) return std::string(v);
    if (auto it = file.find(key); it != file.end()) return it->second;
    return std::nullopt;
  };
  Settings s;
  s.cache_dir = default_cache_dir();
  if (auto v = pick(cache_flag, "PAUCITY_CACHE_DIR", "cache_dir")) s.cache_dir = *v;
  if (auto v = pick(budget_flag, "PAUCITY_MEM_BUDGET", "mem_budget")) s.memory_budget = parse_bytes(*v);
  return s;
}

void print(const Json& j) { std::cout << dump(j); }

/// Accepts the "s=2" and "B=12" spellings alongside "-s 2" and "-B 12".
std::vector<std::string> normalize_args(int argc, char** argv) {
  static const std::regex kv(R"(^(s|B)=(.*)$)");
  std::vector<std::string> out;
  for (int i = argc - 1; i >= 1; --i) {
    std::string a = argv[i];
    std::smatch m;
    if (std::regex_match(a, m, kv)) {
      out.push_back(m[2].str());
      out.push_back("-" + m[1].str());
    } else {
      out.push_back(a);
    }
  }
  return out;  // CLI11 wants the reversed order
}

std::vector<std::int64_t> parse_b_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, "bad B list entry '" + item + "'");
    }
  }
  if (out.empty()) throw Error(ErrorKind::ParseError, "empty B list");
  return out;
}

struct Common {
  std::optional<std::string> cache_dir;
  std::optional<std::string> budget;
  std::optional<std::string> config;
  bool no_cache = false;
  unsigned threads = 0;
};

std::optional<ResultCache> open_cache(const Settings& settings, bool disabled) {
  if (disabled) return std::nullopt;
  std::error_code ec;
  fs::create_directories(settings.cache_dir, ec);
  if (ec) {
    report_warning("cache disabled, cannot create " + settings.cache_dir.string() + ": " + ec.message());
    return std::nullopt;
  }
  return ResultCache(settings.cache_dir, report_warning);
}

int cmd_depress(const std::string& poly) {
  const auto f = parse_polynomial(poly).poly;
  print(depressed_json(f, depress(f)));
  return kExitOk;
}

struct EnumerateArgs {
  std::string poly;
  int s = 2;
  std::int64_t B = 0;
  bool emit = false;
  std::string csv;
  bool emit_trivial = false;
  bool oracle = false;
  bool timing = false;
  bool on_image = false;
};

int cmd_enumerate(const EnumerateArgs& a, const Common& common) {
  const auto f = parse_polynomial(a.poly).poly;
  const Settings settings = resolve_settings(common.cache_dir, common.budget, common.config);
  EnumerateOptions opts;
  opts.memory_budget = settings.memory_budget;
  opts.threads = common.threads;
  opts.emit_trivial = a.emit_trivial;

  const bool emitting = a.emit || !a.csv.empty();
  std::ofstream csv_file;
  std::ostream* csv = nullptr;
  if (!a.csv.empty()) {
    csv_file.open(a.csv);
    if (!csv_file) throw Error(ErrorKind::InvalidArgument, "cannot write " + a.csv);
    csv = &csv_file;
  } else if (a.emit) {
    csv = &std::cout;
  }
  SolutionSink sink;
  if (csv) {
    write_solutions_csv_header(*csv, a.s);
    sink = [csv](const SolutionRecord& r) { write_solution_csv_row(*csv, r); };
  }

  std::optional<DepressedForm> df;
  if (a.on_image) df = depress(f);
  const auto key = RunKey::make(f, a.s, a.B, a.on_image ? "image" : "box");
  auto cache = open_cache(settings, common.no_cache);
  std::optional<CountSummary> summary;
  const auto start = std::chrono::steady_clock::now();
  if (cache && !emitting) summary = cache->load(key);
  if (!summary) {
    summary = a.on_image ? enumerate_on_image(*df, a.s, a.B, opts, sink) : enumerate(f, a.s, a.B, opts, sink);
    if (cache) {
      try {
        cache->store(key, *summary);
      } catch (const std::exception& e) {
        report_warning(std::string("cache write failed: ") + e.what());
      }
    }
  }
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (a.oracle) {
    const auto reference = oracle::brute_counts(f, a.s, a.B);
    const bool comparable = !a.on_image;
    const bool agree = comparable ? reference.same_counts(*summary)
                                  : reference.shared == summary->shared && reference.disjoint == summary->disjoint;
    if (!agree) {
      throw Error(ErrorKind::OracleMismatch, "meet-in-the-middle counts " + dump(counts_json(*summary)) +
                                                 " disagree with nested loops " + dump(counts_json(reference)));
    }
  }

  Json j = counts_json(*summary, a.timing ? std::optional<double>(elapsed) : std::nullopt);
  if (a.on_image) j["domain"] = "image";
  if (a.oracle) j["oracle"] = "agree";
  if (csv != &std::cout) print(j);
  return kExitOk;
}

struct CensusArgs {
  std::string poly;
  int s = 2;
  std::int64_t B = 0;
  bool on_image = false;
  bool as_g = false;
  bool audit = false;
  std::size_t sample = 20;
};

int cmd_census(const CensusArgs& a) {
  const auto parsed = parse_polynomial(a.poly);
  const bool given_g = a.as_g || parsed.variable == 'y';
  IntPolynomial g = parsed.poly;
  std::optional<DepressedForm> df;
  if (!given_g) {
    df = depress(parsed.poly);
    g = df->g;
  } else if (a.on_image) {
    throw Error(ErrorKind::InvalidArgument, "--on-image needs f in x, not a depressed g");
  }
  if (g.degree() < 3) throw Error(ErrorKind::DegreeTooLow, "census needs deg g >= 3");
  const Progression domain = a.on_image ? image_domain(*df, a.B) : Progression::box(a.B);
  auto report = singular_census(g, a.s, domain, a.sample);
  report.on_image = a.on_image;
  report.B = a.B;
  Json j = census_json(report);
  if (df) {
    j["f"] = format_polynomial(parsed.poly, 'x');
    j["map"] = format_map(*df);
  }
  if (a.audit) {
    Json audits = Json::array();
    for (const auto& n : report.singular_n_sample) {
      Json entry;
      entry["n"] = n;
      Json curves = Json::array();
      for (const auto& c : family_audit(SurfaceSpec(g, a.s, n))) curves.push_back(curve_json(c));
      entry["curves"] = curves;
      audits.push_back(entry);
    }
    j["audit"] = audits;
  }
  print(j);
  return kExitOk;
}

struct LadderArgs {
  std::string poly;
  int s = 2;
  std::string B_list;
  bool fit = false;
  bool compare = false;
  double tolerance = 0.15;
  std::string tsv;
  bool parallel = false;
};

int cmd_ladder(const LadderArgs& a, const Common& common) {
  const auto f = parse_polynomial(a.poly).poly;
  const auto B = parse_b_list(a.B_list);
  const Settings settings = resolve_settings(common.cache_dir, common.budget, common.config);
  auto cache = open_cache(settings, common.no_cache);
  LadderOptions opts;
  opts.enumerate.memory_budget = settings.memory_budget;
  opts.enumerate.threads = common.threads;
  opts.parallel_rungs = a.parallel;
  const auto report = run_ladder(f, a.s, B, cache ? &*cache : nullptr, opts);

  std::optional<BoundProfile> profile;
  std::optional<Verdict> verdict;
  if (a.compare) {
    profile = bound_profile(f.degree(), a.s);
    verdict = compare_bounds(report.fit, *profile, a.tolerance);
  }
  Json j = ladder_json(report, profile, verdict);
  if (!a.fit && !a.compare) j.erase("fit");
  if (!a.tsv.empty()) {
    std::ofstream out(a.tsv);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + a.tsv);
    write_ladder_tsv(out, report);
  }
  print(j);

  for (const auto& r : report.rungs) {
    if (r.status == RungStatus::Ok) return kExitOk;
  }
  bool all_memory = true;
  for (const auto& r : report.rungs) all_memory &= r.error.rfind("MemoryBudgetExceeded", 0) == 0;
  report_error("AllRungsFailed", "no rung of the ladder completed", all_memory ? kExitMemory : kExitPrecondition);
  return all_memory ? kExitMemory : kExitPrecondition;
}

int cmd_selftest() {
  Json checks = Json::array();
  bool ok = true;
  auto record = [&](const std::string& name, bool pass, Json detail) {
    Json c;
    c["name"] = name;
    c["ok"] = pass;
    c["detail"] = std::move(detail);
    checks.push_back(c);
    ok &= pass;
  };

  std::vector<std::pair<double, double>> synthetic;
  for (double b : {10.0, 20.0, 40.0, 80.0, 160.0, 320.0}) synthetic.emplace_back(b, 7.0 * std::pow(b, 4.0 / 3.0));
  const auto fit = fit_power_law(synthetic);
  record("synthetic_fit", fit.sufficient && std::abs(fit.slope - 4.0 / 3.0) < 1e-9, fit.slope);

  const IntPolynomial cube{0, 0, 0, 1};
  const auto fast = enumerate(cube, 2, 12);
  const auto slow = oracle::brute_counts(cube, 2, 12);
  record("taxicab_oracle", fast.same_counts(slow) && fast.disjoint == 8, counts_json(fast)["counts"]);

  const auto df = depress(IntPolynomial{0, 0, 3, 1});
  record("depress_cubic", format_polynomial(df.g, 'y') == "y^3-27y" && df.residual == 54, format_map(df));

  const SurfaceSpec spec(df.g, 2, {6});
  const bool exact = singular_test(spec);
  record("singular_n6", exact && exact == oracle::numeric_singular_test(spec), exact);

  Json j;
  j["schema"] = kSchema;
  j["checks"] = checks;
  j["ok"] = ok;
  print(j);
  if (!ok) report_error("OracleMismatch", "selftest failed", kExitOracle);
  return ok ? kExitOk : kExitOracle;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equal sums of polynomial values: enumeration, surface census, growth ladders"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kSchema));

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--cache-dir", common.cache_dir, "result cache directory (env PAUCITY_CACHE_DIR)");
    sub->add_option("--budget,--mem-budget", common.budget, "memory budget, e.g. 512M or 4G (env PAUCITY_MEM_BUDGET)");
    sub->add_option("--config", common.config, "key=value file with cache_dir / mem_budget");
    sub->add_flag("--no-cache", common.no_cache, "neither read nor write the cache");
    sub->add_option("--threads", common.threads, "worker threads for table builds (0: all cores)");
  };

  std::string depress_poly;
  auto* dep = app.add_subcommand("depress", "print the depressed form g of f");
  dep->add_option("poly", depress_poly, "polynomial, e.g. x^3+3x^2 or 0,0,3,1")->required();

  EnumerateArgs en;
  auto* enu = app.add_subcommand("enumerate", "count solutions in [1,B]^(2s)");
  enu->add_option("poly", en.poly)->required();
  enu->add_option("-s", en.s, "2 or 3")->required();
  enu->add_option("-B", en.B, "box size")->required();
  enu->add_flag("--emit", en.emit, "stream nontrivial solutions as CSV on stdout instead of the JSON summary");
  enu->add_option("--csv", en.csv, "write nontrivial solutions to this CSV file");
  enu->add_flag("--emit-trivial", en.emit_trivial, "include trivial solutions in the CSV");
  enu->add_flag("--oracle", en.oracle, "cross-check against nested loops (small B only)");
  enu->add_flag("--timing", en.timing, "add elapsed_ms to the JSON");
  enu->add_flag("--on-image", en.on_image, "enumerate g over the image progression of [1,B]");
  add_common(enu);

  CensusArgs ce;
  auto* cen = app.add_subcommand("census", "count n with a singular surface");
  cen->add_option("poly", ce.poly, "f in x (depressed first) or g in y")->required();
  cen->add_option("-s", ce.s)->required();
  cen->add_option("-B", ce.B)->required();
  cen->add_flag("--on-image", ce.on_image, "range n over the image progression instead of [1,B]");
  cen->add_flag("--as-g", ce.as_g, "treat the polynomial as g even if written in x");
  cen->add_flag("--audit", ce.audit, "list low-degree curves on each sampled singular surface");
  cen->add_option("--sample", ce.sample, "how many singular n to list");

  LadderArgs la;
  auto* lad = app.add_subcommand("ladder", "enumerate on a list of B and fit the growth of DISJOINT counts");
  lad->add_option("poly", la.poly)->required();
  lad->add_option("B_list", la.B_list, "comma-separated, strictly increasing")->required();
  lad->add_option("-s", la.s)->required();
  lad->add_flag("--fit", la.fit, "include the log-log fit");
  lad->add_flag("--compare", la.compare, "compare the fit with the growth exponents for this d and s");
  lad->add_option("--tolerance", la.tolerance, "slack allowed above the theorem exponent");
  lad->add_option("--tsv", la.tsv, "also write a TSV table");
  lad->add_flag("--parallel", la.parallel, "run rungs concurrently");
  add_common(lad);

  auto* self = app.add_subcommand("selftest", "built-in consistency checks");

  try {
    app.parse(normalize_args(argc, argv));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("UsageError", e.what(), kExitParse);
    return kExitParse;
  }

  try {
    if (*dep) return cmd_depress(depress_poly);
    if (*enu) return cmd_enumerate(en, common);
    if (*cen) return cmd_census(ce);
    if (*lad) return cmd_ladder(la, common);
    if (*self) return cmd_selftest();
  } catch (const Error& e) {
    const int code = exit_code_for(e.kind());
    report_error(error_kind_name(e.kind()), e.what(), code);
    return code;
  } catch (const std::exception& e) {
    report_error("Internal", e.what(), kExitInternal);
    return kExitInternal;
  }
  return kExitInternal;
}
