// pcmkit: command-line front end.
//
// Exit status: 0 ok, 1 input error, 2 some verdict is needs_revision,
// 3 numeric non-convergence, 4 disconnected comparisons.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pcmkit/builtin.hpp"
#include "pcmkit/completion.hpp"
#include "pcmkit/csv.hpp"
#include "pcmkit/ensemble.hpp"
#include "pcmkit/error.hpp"
#include "pcmkit/format.hpp"
#include "pcmkit/generator.hpp"
#include "pcmkit/indices.hpp"
#include "pcmkit/matrix_io.hpp"
#include "pcmkit/priority.hpp"
#include "pcmkit/random_index.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace pcmkit;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerdict = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitStructural = 4;
constexpr int kSchemaVersion = 1;

int exit_code(Errc code) {
  switch (code) {
    case Errc::no_convergence:
    case Errc::svd_failure: return kExitNumeric;
    case Errc::disconnected: return kExitStructural;
    default: return kExitInput;
  }
}

struct Common {
  std::optional<std::uint64_t> seed;
  bool full_precision = false;
  std::string ri_table;

  std::uint64_t resolved_seed() const {
    if (seed) return *seed;
    if (const char* env = std::getenv("PCMKIT_SEED")) {
      try {
        return std::stoull(env);
      } catch (const std::exception&) {
        throw Error(Errc::bad_parameter, "PCMKIT_SEED is not an unsigned integer");
      }
    }
    return kDefaultSeed;
  }

  std::optional<RandomIndexTable> table() const {
    std::string path = ri_table;
    if (path.empty()) {
      if (const char* env = std::getenv("PCMKIT_RI_TABLE")) path = env;
    }
    if (path.empty()) path = std::string(PCMKIT_DATA_DIR) + "/ri_table.txt";
    if (!std::filesystem::exists(path)) {
      if (!ri_table.empty()) throw Error(Errc::parse_error, "cannot open '" + path + "'");
      return std::nullopt;
    }
    return RandomIndexTable::load(path);
  }
};

std::string num(double v, const Common& c) { return format_real(v, c.full_precision); }

// JSON number carrying the same digits as the text output.
json jnum(double v, const Common& c) { return std::stod(num(v, c)); }

// Writes to `path`, or to stdout when it is empty or "-".
template <class F>
void emit(const std::string& path, F&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::bad_parameter, "cannot write '" + path + "'");
  write(out);
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoul(s);
      return {v, v};
    }
    return {std::stoul(s.substr(0, dots)), std::stoul(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(Errc::bad_parameter, "range must look like 3..50, got '" + s + "'");
  }
}

Pcm load_complete(const std::string& path) {
  auto parsed = read_matrix_file(path);
  if (auto* m = std::get_if<Pcm>(&parsed)) return *m;
  throw Error(Errc::parse_error,
              "'" + path + "' has missing entries; use the complete subcommand");
}

json report_json(const IndexReport& r, const Common& c) {
  json j;
  j["index"] = std::string(to_string(r.index));
  j["value"] = jnum(r.value, c);
  j["threshold"] = r.threshold ? jnum(*r.threshold, c) : json(nullptr);
  j["verdict"] = r.verdict ? json(std::string(to_string(*r.verdict))) : json(nullptr);
  j["degenerate"] = r.degenerate;
  return j;
}

// analyze ------------------------------------------------------------------

struct AnalyzeArgs {
  std::string file;
  std::vector<std::string> indices;
  std::string format = "text";
};

int run_analyze(const AnalyzeArgs& a, const Common& c) {
  const Pcm m = load_complete(a.file);
  const auto table = c.table();
  std::vector<IndexKind> kinds;
  if (a.indices.empty()) {
    for (auto k : {IndexKind::ci, IndexKind::cr, IndexKind::k, IndexKind::gci,
                   IndexKind::re, IndexKind::im}) {
      if (k != IndexKind::ci && m.order() < 3) continue;
      if (k == IndexKind::cr && !(table && table->contains(m.order()))) continue;
      kinds.push_back(k);
    }
  } else {
    for (const auto& s : a.indices) kinds.push_back(parse_index_kind(s));
  }

  std::vector<IndexReport> reports;
  for (auto k : kinds) {
    if (k == IndexKind::cr && !table) {
      throw Error(Errc::bad_parameter, "cr needs a random index table (--ri-table)");
    }
    reports.push_back(evaluate(k, m, table ? &*table : nullptr));
  }

  bool revise = false;
  for (const auto& r : reports) revise |= r.verdict == Verdict::needs_revision;

  if (a.format == "json") {
    json j;
    j["schema"] = kSchemaVersion;
    j["n"] = m.order();
    j["reports"] = json::array();
    for (const auto& r : reports) j["reports"].push_back(report_json(r, c));
    std::cout << j.dump(2) << '\n';
  } else if (a.format == "csv") {
    std::cout << "index,value,threshold,verdict\n";
    for (const auto& r : reports) {
      std::cout << to_string(r.index) << ',' << num(r.value, c) << ','
                << (r.threshold ? num(*r.threshold, c) : "") << ','
                << (r.verdict ? std::string(to_string(*r.verdict)) : "") << '\n';
    }
  } else {
    std::cout << "n = " << m.order() << '\n';
    for (const auto& r : reports) {
      std::cout << to_string(r.index) << "  " << num(r.value, c);
      if (r.threshold) {
        std::cout << "  tau=" << num(*r.threshold, c) << "  " << to_string(*r.verdict);
      }
      if (r.degenerate) std::cout << "  (degenerate: all-ones matrix)";
      std::cout << '\n';
    }
  }
  return revise ? kExitVerdict : kExitOk;
}

// priority -----------------------------------------------------------------

struct PriorityArgs {
  std::string file;
  std::string method = "eigen";
  std::string format = "text";
  double tol = 1e-12;
  long max_iter = 10'000;
};

int run_priority(const PriorityArgs& a, const Common& c) {
  const Pcm m = load_complete(a.file);
  PriorityVector w;
  std::optional<EigenResult> eig;
  if (a.method == "eigen") {
    eig = eigen_priority(m, {a.tol, a.max_iter});
    w = eig->vector;
  } else {
    w = geometric_mean_priority(m);
  }
  if (a.format == "json") {
    json j;
    j["schema"] = kSchemaVersion;
    j["method"] = a.method;
    j["weights"] = json::array();
    for (double x : w.weights) j["weights"].push_back(jnum(x, c));
    if (eig) {
      j["lambda_max"] = jnum(eig->lambda_max, c);
      j["iterations"] = eig->iterations;
      j["residual"] = jnum(eig->residual, c);
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "weights";
    for (double x : w.weights) std::cout << ' ' << num(x, c);
    std::cout << '\n';
    if (eig) {
      std::cout << "lambda_max " << num(eig->lambda_max, c) << '\n'
                << "iterations " << eig->iterations << '\n';
    }
  }
  return kExitOk;
}

// complete -----------------------------------------------------------------

struct CompleteArgs {
  std::string file;
  std::string index = "ci";
  std::string method = "nelder_mead_log";
  std::size_t starts = 5;
  std::string out;
  std::string report;
};

int run_complete(const CompleteArgs& a, const Common& c) {
  auto parsed = read_matrix_file(a.file);
  if (std::holds_alternative<Pcm>(parsed)) {
    throw Error(Errc::nothing_to_complete, "'" + a.file + "' has no missing entries");
  }
  const auto& m = std::get<IncompletePcm>(parsed);
  const auto kind = parse_index_kind(a.index);
  if (kind == IndexKind::cr) {
    throw Error(Errc::bad_parameter, "complete accepts ci, k, gci, re or im");
  }
  CompletionOptions opts;
  opts.method = parse_completion_method(a.method);
  opts.starts = a.starts;
  opts.seed = c.resolved_seed();
  const auto r = complete(m, index_function(kind), opts);

  json j;
  j["schema"] = kSchemaVersion;
  j["index"] = a.index;
  j["method"] = std::string(to_string(r.method));
  j["objective"] = jnum(r.objective, c);
  j["evaluations"] = r.evaluations;
  j["converged"] = r.converged;
  j["values"] = json::array();
  for (const auto& v : r.values) {
    j["values"].push_back({{"i", v.pos.i + 1}, {"j", v.pos.j + 1}, {"value", jnum(v.value, c)}});
  }
  emit(a.out, [&](std::ostream& os) { write_matrix(os, r.filled, c.full_precision); });
  emit(a.report, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
  return r.converged ? kExitOk : kExitNumeric;
}

// study --------------------------------------------------------------------

struct StudyArgs {
  std::string out;
  // scatter
  std::string x_index = "im", y_index = "re", generator = "saaty_uniform";
  std::size_t n = 6, count = 2000;
  double sigma = 0.5;
  // scan
  std::string matrix = "frame3(1.5)", entry = "1,3", index = "ci";
  double lo = 0.1, hi = 40.0;
  std::size_t points = 401;
  // asymptotic / ri
  double x = 2.0;
  std::string range = "3..50";
  std::size_t samples = kDefaultRiSamples;
};

// Summary goes to stdout unless the CSV does, then to stderr.
std::ostream& summary_stream(const StudyArgs& a) {
  return (a.out.empty() || a.out == "-") ? std::cerr : std::cout;
}

int run_scatter(const StudyArgs& a, const Common& c) {
  GeneratorSpec spec{parse_generator_kind(a.generator), a.n, c.resolved_seed()};
  spec.sigma = a.sigma;
  const auto table = c.table();
  const auto study = scatter_study(spec, a.count, parse_index_kind(a.x_index),
                                   parse_index_kind(a.y_index), Exec::parallel,
                                   table ? &*table : nullptr);
  emit(a.out, [&](std::ostream& os) { write_scatter_csv(os, study, c.full_precision); });
  json j;
  j["schema"] = kSchemaVersion;
  j["study"] = "scatter";
  j["rows"] = study.rows.size();
  j["pearson"] = jnum(study.summary.pearson, c);
  j["spearman"] = jnum(study.summary.spearman, c);
  j["highlight"] = study.summary.discordant;
  summary_stream(a) << j.dump(2) << '\n';
  return kExitOk;
}

int run_scan(const StudyArgs& a, const Common& c) {
  auto base = builtin::by_name(a.matrix);
  if (!std::holds_alternative<Pcm>(base)) {
    throw Error(Errc::bad_parameter, "scan needs a complete 3x3 matrix");
  }
  Position entry;
  {
    std::istringstream es(a.entry);
    char comma = 0;
    std::size_t i = 0, k = 0;
    if (!(es >> i >> comma >> k) || comma != ',' || i < 1 || k <= i) {
      throw Error(Errc::bad_parameter, "--entry must look like 1,3");
    }
    entry = {i - 1, k - 1};
  }
  const auto scan = quasiconvexity_scan(std::get<Pcm>(base), entry,
                                        index_function(parse_index_kind(a.index)),
                                        {a.lo, a.hi, a.points});
  emit(a.out, [&](std::ostream& os) { write_scan_csv(os, scan, c.full_precision); });
  json j;
  j["schema"] = kSchemaVersion;
  j["study"] = "scan";
  j["unimodal"] = scan.unimodal;
  j["argmin_x"] = jnum(scan.argmin_x, c);
  j["min_value"] = jnum(scan.min_value, c);
  j["consistent_x"] = jnum(scan.consistent_x, c);
  j["refined_x"] = jnum(scan.refined_x, c);
  j["refined_min_value"] = jnum(scan.refined_value, c);
  j["argmin_at_consistent"] = scan.argmin_at_consistent;
  summary_stream(a) << j.dump(2) << '\n';
  return kExitOk;
}

int run_asymptotic(const StudyArgs& a, const Common& c) {
  const auto [lo, hi] = parse_range(a.range);
  const auto table = c.table();
  const auto s = asymptotic_study(a.x, lo, hi, table ? &*table : nullptr);
  emit(a.out, [&](std::ostream& os) { write_asymptotic_csv(os, s, c.full_precision); });
  json j;
  j["schema"] = kSchemaVersion;
  j["study"] = "asymptotic";
  j["x"] = jnum(a.x, c);
  j["ci_strictly_decreasing"] = s.ci_strictly_decreasing;
  j["k_constant"] = s.k_constant;
  j["cr_acceptable_from"] = s.cr_acceptable_from ? json(*s.cr_acceptable_from) : json(nullptr);
  summary_stream(a) << j.dump(2) << '\n';
  return kExitOk;
}

int run_suite(const StudyArgs& a, const Common&) {
  const auto checks = counterexample_suite();
  emit(a.out, [&](std::ostream& os) { write_suite_csv(os, checks); });
  std::size_t passed = 0;
  for (const auto& ch : checks) passed += ch.pass;
  json j;
  j["schema"] = kSchemaVersion;
  j["study"] = "suite";
  j["checks"] = checks.size();
  j["passed"] = passed;
  summary_stream(a) << j.dump(2) << '\n';
  return passed == checks.size() ? kExitOk : kExitVerdict;
}

int run_ri(const StudyArgs& a, const Common& c) {
  const auto [lo, hi] = parse_range(a.range);
  RandomIndexTable table;
  const auto seed = c.resolved_seed();
  for (std::size_t n = lo; n <= hi; ++n)
    table.insert(simulate_random_index(n, a.samples, seed));
  emit(a.out, [&](std::ostream& os) { table.write(os); });
  return kExitOk;
}

// gen ----------------------------------------------------------------------

struct GenArgs {
  std::string what;
  std::string generator = "saaty_uniform";
  std::size_t n = 6;
  std::size_t id = 0;
  std::size_t count = 1;
  double sigma = 0.5;
  std::string out;
  std::string out_dir;
};

int run_gen(const GenArgs& a, const Common& c) {
  if (a.what != "random") {
    const auto m = builtin::by_name(a.what);
    emit(a.out, [&](std::ostream& os) {
      std::visit([&](const auto& mm) { write_matrix(os, mm, c.full_precision); }, m);
    });
    return kExitOk;
  }
  GeneratorSpec spec{parse_generator_kind(a.generator), a.n, c.resolved_seed()};
  spec.sigma = a.sigma;
  if (a.count == 1 && a.out_dir.empty()) {
    emit(a.out, [&](std::ostream& os) {
      write_matrix(os, generate_one(spec, a.id), c.full_precision);
    });
    return kExitOk;
  }
  if (a.out_dir.empty()) throw Error(Errc::bad_parameter, "--count > 1 needs --out-dir");
  std::filesystem::create_directories(a.out_dir);
  for (std::size_t t = 0; t < a.count; ++t) {
    char name[32];
    std::snprintf(name, sizeof name, "matrix_%06zu.txt", a.id + t);
    emit(a.out_dir + "/" + name, [&](std::ostream& os) {
      write_matrix(os, generate_one(spec, a.id + t), c.full_precision);
    });
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pcmkit: pairwise comparison matrices and inconsistency indices"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--seed", common.seed, "RNG seed (default: $PCMKIT_SEED or a fixed constant)");
  app.add_flag("--full-precision", common.full_precision,
               "Print shortest round-trip decimals instead of 12 significant digits");
  app.add_option("--ri-table", common.ri_table, "Random index table file");

  AnalyzeArgs analyze;
  auto* an = app.add_subcommand("analyze", "Evaluate inconsistency indices");
  an->add_option("file", analyze.file, "Matrix file")->required();
  an->add_option("-i,--index", analyze.indices, "ci, cr, k, gci, re, im (default: all)")
      ->delimiter(',');
  an->add_option("--format", analyze.format)->check(CLI::IsMember({"text", "json", "csv"}));

  PriorityArgs priority;
  auto* pr = app.add_subcommand("priority", "Priority vector and lambda_max");
  pr->add_option("file", priority.file, "Matrix file")->required();
  pr->add_option("-m,--method", priority.method)->check(CLI::IsMember({"eigen", "geometric"}));
  pr->add_option("--format", priority.format)->check(CLI::IsMember({"text", "json"}));
  pr->add_option("--tol", priority.tol);
  pr->add_option("--max-iter", priority.max_iter);

  CompleteArgs completion;
  auto* co = app.add_subcommand("complete", "Fill '?' entries by minimizing an index");
  co->add_option("file", completion.file, "Matrix file with '?' entries")->required();
  co->add_option("-i,--index", completion.index);
  co->add_option("-m,--method", completion.method,
                 "nelder_mead_log, cyclic_coordinate_log or grid_oracle");
  co->add_option("--starts", completion.starts);
  co->add_option("-o,--out", completion.out, "Filled matrix (default stdout)");
  co->add_option("--report", completion.report, "JSON report (default stdout)");

  StudyArgs study;
  auto* st = app.add_subcommand("study", "Run a study and write CSV");
  st->require_subcommand(1);
  st->fallthrough();
  auto* sc = st->add_subcommand("scatter", "Index-vs-index scatter over a random ensemble");
  sc->add_option("--x", study.x_index);
  sc->add_option("--y", study.y_index);
  sc->add_option("--n", study.n);
  sc->add_option("--count", study.count);
  sc->add_option("--generator", study.generator);
  sc->add_option("--sigma", study.sigma);
  auto* sn = st->add_subcommand("scan", "Index along one entry of a 3x3 matrix");
  sn->add_option("--matrix", study.matrix, "Builtin 3x3 matrix expression");
  sn->add_option("--entry", study.entry, "1-based entry i,k");
  sn->add_option("--index", study.index);
  sn->add_option("--lo", study.lo);
  sn->add_option("--hi", study.hi);
  sn->add_option("--points", study.points);
  auto* as = st->add_subcommand("asymptotic", "CI, CR and K of A_KS(n, x) over n");
  as->add_option("--x", study.x);
  as->add_option("--n", study.range, "Order range, e.g. 3..50");
  auto* su = st->add_subcommand("suite", "Counterexample checks");
  auto* ri = st->add_subcommand("ri", "Simulate the random index table");
  ri->add_option("--n", study.range, "Order range, e.g. 3..15");
  ri->add_option("--samples", study.samples);
  for (auto* sub : {sc, sn, as, su, ri}) sub->add_option("-o,--out", study.out, "CSV output (default stdout)");

  GenArgs gen;
  auto* ge = app.add_subcommand("gen", "Write a builtin or random matrix");
  ge->add_option("what", gen.what, "Builtin expression such as 'A_KS(10,2)', or 'random'")
      ->required();
  ge->add_option("--generator", gen.generator);
  ge->add_option("--n", gen.n);
  ge->add_option("--id", gen.id, "First stream index");
  ge->add_option("--count", gen.count);
  ge->add_option("--sigma", gen.sigma);
  ge->add_option("-o,--out", gen.out);
  ge->add_option("--out-dir", gen.out_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*an) return run_analyze(analyze, common);
    if (*pr) return run_priority(priority, common);
    if (*co) return run_complete(completion, common);
    if (*ge) return run_gen(gen, common);
    if (*sc) return run_scatter(study, common);
    if (*sn) return run_scan(study, common);
    if (*as) return run_asymptotic(study, common);
    if (*su) return run_suite(study, common);
    if (*ri) return run_ri(study, common);
  } catch (const Error& e) {
    std::cerr << "pcmkit: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "pcmkit: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
