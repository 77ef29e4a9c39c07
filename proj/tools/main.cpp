// tropf5: tropical F5 on a polynomial system file, plus the bench harness and
// the random-coefficient precision experiment.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "stats_json.hpp"
#include "tropf5/tropf5.hpp"

namespace {

using namespace tropf5;
using nlohmann::json;

enum Exit { kOk = 0, kVerifyFailed = 1, kInputError = 2, kResourceCap = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<mpq_class> parse_weight(const std::string& text) {
  std::vector<mpq_class> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      mpq_class q(item);
      q.canonicalize();
      out.push_back(q);
    } catch (const std::invalid_argument&) {
      throw InputError("bad weight entry '" + item + "'");
    }
  }
  if (out.empty()) throw InputError("empty weight");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PrecisionConfig parse_experiment(const std::vector<std::string>& tokens) {
  PrecisionConfig cfg;
  for (const auto& tok : tokens) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw InputError("expected key=value, got '" + tok + "'");
    const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    try {
      if (key == "p") {
        cfg.p = std::stoul(val);
      } else if (key == "w") {
        cfg.weight = parse_weight(val);
      } else if (key == "reps") {
        cfg.reps = std::stoi(val);
      } else if (key == "N") {
        cfg.precision = std::stol(val);
      } else if (key == "seed") {
        cfg.seed = std::stoull(val);
      } else if (key == "tiebreak") {
        cfg.tiebreak = parse_tiebreak(val);
      } else if (key == "degrees") {
        const auto dots = val.find("..");
        if (dots == std::string::npos) {
          cfg.min_degree = cfg.max_degree = std::stoi(val);
        } else {
          cfg.min_degree = std::stoi(val.substr(0, dots));
          cfg.max_degree = std::stoi(val.substr(dots + 2));
        }
      } else {
        throw InputError("unknown precision-experiment key '" + key + "'");
      }
    } catch (const std::logic_error&) {
      throw InputError("bad value for '" + key + "': " + val);
    }
  }
  if (cfg.p < 2 || cfg.reps < 1 || cfg.precision < 1 || cfg.min_degree < 1 || cfg.min_degree > cfg.max_degree)
    throw InputError("precision-experiment parameters out of range");
  if (cfg.weight.size() != 3) throw InputError("precision experiment needs a weight of length 3");
  return cfg;
}

void write_basis(std::ostream& out, const RunResult& r) {
  for (const auto& b : r.basis) out << b.signature << " : " << b.polynomial << "\n";
}

void print_run_summary(std::ostream& out, const RunResult& r) {
  if (r.f5_ran) {
    out << "basis: " << r.basis.size() << " elements, " << r.stats.zero_reductions << " zero reductions, "
        << std::fixed << std::setprecision(3) << r.f5_time.cpu << " s cpu\n";
    out.unsetf(std::ios::floatfield);
  }
  if (r.loss)
    out << "precision loss: " << r.loss->count << " coefficients, mean " << r.loss->mean << ", max " << r.loss->max
        << "\n";
  for (const auto& n : r.stats.notices) out << "note: " << n << "\n";
  if (r.oracle_ran) {
    out << "oracle: D=" << r.oracle_bound << ", dims";
    for (std::size_t d = 0; d < r.oracle_dims.size(); ++d) out << " " << r.oracle_dims[d];
    out << "\n";
    if (r.regular) out << "regular sequence: " << (*r.regular ? "yes" : "no") << "\n";
  }
  if (r.verify) {
    out << "verify: " << (r.verify->passed() ? "pass" : "FAIL") << " (" << r.verify->checked
        << " leading monomials checked through degree " << r.verify->bound << ")\n";
    for (const auto& u : r.uncovered) out << "  uncovered " << u << "\n";
  }
}

void print_bench(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << std::left << std::setw(12) << "system" << std::right << std::setw(6) << "n" << std::setw(6) << "s"
      << std::setw(12) << "status" << std::setw(12) << "cpu_s" << std::setw(8) << "|G|" << std::setw(8) << "zero"
      << std::setw(10) << "verified" << "\n";
  for (const auto& r : rows) {
    out << std::left << std::setw(12) << r.name << std::right << std::setw(6) << r.nvars << std::setw(6) << r.npolys
        << std::setw(12) << r.status << std::setw(12) << std::fixed << std::setprecision(3) << r.cpu_seconds
        << std::setw(8) << r.basis_size << std::setw(8) << r.zero_reductions << std::setw(10)
        << (r.verified ? (*r.verified ? "yes" : "NO") : "-") << "\n";
  }
  out.unsetf(std::ios::floatfield);
}

void print_precision(std::ostream& out, const PrecisionResult& r) {
  out << "p=" << r.config.p << " N=" << r.config.precision << " reps=" << r.config.reps << " seed=" << r.config.seed
      << " w=";
  for (std::size_t i = 0; i < r.config.weight.size(); ++i) out << (i ? "," : "") << r.config.weight[i];
  out << "\n";
  out << std::setw(4) << "D" << std::setw(8) << "reps" << std::setw(10) << "coeffs" << std::setw(10) << "mean"
      << std::setw(6) << "max" << std::setw(8) << "zero" << std::setw(8) << "failed" << "\n";
  for (const auto& b : r.buckets)
    out << std::setw(4) << b.bound << std::setw(8) << b.reps << std::setw(10) << b.coefficients << std::setw(10)
        << std::fixed << std::setprecision(3) << b.mean << std::setw(6) << b.max << std::setw(8) << b.zero_reductions
        << std::setw(8) << b.failures << "\n";
  out << "pooled mean " << r.pooled_mean << "\n";
  out.unsetf(std::ios::floatfield);
}

json config_json(const std::vector<std::string>& argv, const RunConfig& cfg) {
  json j = {{"argv", argv},
            {"verify", cfg.verify},
            {"oracle_only", cfg.oracle_only},
            {"rewriting", cfg.rewriting},
            {"check_invariants", cfg.check_invariants},
            {"signature_order", to_string(cfg.signature_order)},
            {"completeness_stop", cfg.completeness_stop},
            {"max_degree", cfg.max_degree}};
  j["oracle_bound"] = cfg.oracle_bound ? json(*cfg.oracle_bound) : json(nullptr);
  j["timeout_seconds"] = cfg.timeout_seconds ? json(*cfg.timeout_seconds) : json(nullptr);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical F5 Groebner bases over Q with p-adic valuations"};
  app.set_version_flag("--version", "tropf5 1.0");

  std::string system_path, stats_path, output_path, bench_suite_name, weight_text, tiebreak_text, dump_path;
  std::optional<long> prime, precision;
  std::optional<std::uint64_t> seed;
  std::optional<int> oracle_bound;
  std::optional<double> timeout;
  std::vector<std::string> experiment;
  bool trivial = false, homogenize = false, quiet = false;
  RunConfig cfg;

  app.add_option("--system", system_path, "Polynomial system file")->check(CLI::ExistingFile);
  app.add_option("--prime", prime, "Use the p-adic valuation for this prime")->check(CLI::Range(2L, 1L << 62));
  app.add_flag("--trivial-valuation", trivial, "Use the trivial valuation on Q");
  app.add_option("--weight", weight_text, "Weight vector, comma separated rationals");
  app.add_option("--tiebreak", tiebreak_text, "Monomial tiebreak")->check(CLI::IsMember({"grevlex", "lex"}));
  app.add_flag("--homogenize", homogenize, "Homogenize the input with an extra variable");
  app.add_option("--max-degree", cfg.max_degree, "Abort above this degree")->check(CLI::PositiveNumber);
  app.add_flag("--verify", cfg.verify, "Check the basis against the Macaulay-matrix oracle");
  app.add_flag("--oracle-only", cfg.oracle_only, "Run only the Macaulay-matrix oracle");
  app.add_flag("--rewriting", cfg.rewriting, "Enable the rewriting criterion");
  std::string sig_order_text = "position-over-term";
  app.add_option("--signature-order", sig_order_text, "Module order on signatures")
      ->check(CLI::IsMember({"position-over-term", "syzygy-split"}));
  bool no_stop = false;
  app.add_flag("--no-completeness-stop", no_stop,
               "Keep going until the pair queue is empty, even when the leading monomials are complete");
  app.add_option("--precision", precision, "Capped p-adic arithmetic at O(p^N)")->check(CLI::PositiveNumber);
  app.add_option("--precision-experiment", experiment,
                 "Random dense systems in Q_p[x,y,z]: p= w= reps= degrees=a..b seed= N=")
      ->expected(0, -1);
  app.add_option("--seed", seed, "Seed for the precision experiment");
  app.add_option("--stats", stats_path, "Write statistics JSON here");
  app.add_option("--bench", bench_suite_name, "Benchmark suite: desk, standard, stretch, empty or a comma list");
  app.add_option("--output", output_path, "Write the basis here instead of stdout");
  app.add_option("--oracle-bound", oracle_bound, "Oracle degree bound (default: Macaulay bound)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--timeout", timeout, "Wall-clock limit in seconds")->check(CLI::PositiveNumber);
  app.add_option("--dump-matrices", dump_path, "Write every Macaulay matrix to this file");
  app.add_flag("--check-invariants", cfg.check_invariants, "Check signature invariants after each degree");
  app.add_flag("-q,--quiet", quiet, "Only print the basis");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }
  cfg.signature_order = parse_signature_order(sig_order_text);
  cfg.completeness_stop = !no_stop;

  const std::vector<std::string> args(argv, argv + argc);
  json stats = {{"schema", cli::kStatsSchema}};
  auto write_stats = [&]() {
    if (stats_path.empty()) return;
    std::ofstream out(stats_path);
    if (!out) {
      std::cerr << "tropf5: cannot write " << stats_path << "\n";
      return;
    }
    out << stats.dump(2) << "\n";
  };
  std::ofstream dump;

  const bool experiment_mode = app.count("--precision-experiment") > 0;
  const bool bench_mode = app.count("--bench") > 0;
  try {
    if (static_cast<int>(experiment_mode) + static_cast<int>(bench_mode) + static_cast<int>(!system_path.empty()) != 1)
      throw InputError("give exactly one of --system, --bench, --precision-experiment");
    if (trivial && prime) throw InputError("--trivial-valuation conflicts with --prime");
    if (timeout) cfg.timeout_seconds = *timeout;
    if (oracle_bound) cfg.oracle_bound = *oracle_bound;
    stats["config"] = config_json(args, cfg);
    if (!dump_path.empty()) {
      dump.open(dump_path);
      if (!dump) throw InputError("cannot write " + dump_path);
      cfg.matrix_dump = &dump;
    }

    if (experiment_mode) {
      PrecisionConfig pc = parse_experiment(experiment);
      if (seed) pc.seed = *seed;
      auto r = precision_experiment(pc);
      stats["mode"] = "precision_experiment";
      stats["precision_experiment"] = cli::to_json(r);
      print_precision(std::cout, r);
      write_stats();
      return kOk;
    }

    SystemFile base;
    if (!system_path.empty()) base = parse_system(read_file(system_path));
    if (trivial) base.field = FieldSpec{};
    if (prime) base.field.prime = *prime;
    if (precision) {
      if (!base.field.prime) throw InputError("--precision needs a prime");
      base.field.precision = *precision;
    }
    if (!tiebreak_text.empty()) base.tiebreak = parse_tiebreak(tiebreak_text);
    if (!weight_text.empty()) base.weight = parse_weight(weight_text);
    if (homogenize) base.homogenize = true;

    if (bench_mode) {
      const auto names = bench_suite(bench_suite_name);
      const auto rows = run_bench(names, base, cfg);
      stats["mode"] = "bench";
      stats["suite"] = bench_suite_name;
      stats["bench"] = cli::to_json(rows);
      print_bench(std::cout, rows);
      write_stats();
      for (const auto& r : rows)
        if (r.verified && !*r.verified) return kVerifyFailed;
      return kOk;
    }

    if (cfg.on_degree == nullptr && !quiet)
      cfg.on_degree = [](const DegreeRecord& d) {
        std::cerr << "degree " << d.degree << ": " << d.rows << "x" << d.cols << ", " << d.new_elements << " new, "
                  << d.zero_reductions << " zero\n";
      };
    auto r = run_system(base, cfg);
    stats["mode"] = "run";
    stats["run"] = cli::to_json(r);
    if (!output_path.empty()) {
      std::ofstream out(output_path);
      if (!out) throw InputError("cannot write " + output_path);
      write_basis(out, r);
    } else {
      write_basis(std::cout, r);
    }
    if (!quiet) print_run_summary(output_path.empty() ? std::cerr : std::cout, r);
    write_stats();
    if (r.verify && !r.verify->passed()) return kVerifyFailed;
    return kOk;
  } catch (const InputError& e) {
    std::cerr << "tropf5: " << e.what() << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    std::cerr << "tropf5: " << system_path << ": " << e.what() << "\n";
    return kInputError;
  } catch (const InhomogeneousError& e) {
    std::cerr << "tropf5: " << e.what() << "\n";
    return kInputError;
  } catch (const MaxDegreeExceeded& e) {
    std::cerr << "tropf5: " << e.what() << "\n";
    stats["error"] = {{"kind", "max_degree"}, {"message", e.what()}};
    write_stats();
    return kResourceCap;
  } catch (const ResourceLimit& e) {
    std::cerr << "tropf5: " << e.what() << "\n";
    stats["error"] = {{"kind", "resource_limit"}, {"message", e.what()}};
    write_stats();
    return kResourceCap;
  } catch (const PrecisionExhausted& e) {
    std::cerr << "tropf5: " << e.what() << " (raise --precision)\n";
    stats["error"] = {{"kind", "precision_exhausted"}, {"message", e.what()}};
    write_stats();
    return kResourceCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "tropf5: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "tropf5: " << e.what() << "\n";
    return kInputError;
  }
}
