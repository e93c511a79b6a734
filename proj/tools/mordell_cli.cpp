#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mordell/oracle.hpp"
#include "mordell/pipeline.hpp"
#include "mordell/rangerun.hpp"
#include "mordell/report.hpp"

namespace {

using namespace mordell;

Int parse_int_arg(const std::string& text, const std::string& flag) {
  std::size_t j = text.empty() || text[0] != '-' ? 0 : 1;
  if (j == text.size() ||
      text.find_first_not_of("0123456789", j) != std::string::npos) {
    throw CLI::ValidationError(flag, "not an integer: " + text);
  }
  return Int(text);
}

struct CommonOpts {
  std::string thue_bound;
  std::string hall_coeff = "50";
  std::string format = "human";
  std::string out;
};

void add_solver_flags(CLI::App* cmd, CommonOpts* o) {
  cmd->add_option("--thue-bound", o->thue_bound,
                  "explicit |y| bound for the Thue solver (marks results "
                  "incomplete unless provably sufficient)");
  cmd->add_option("--hall-coeff", o->hall_coeff,
                  "search coefficient c: points kept up to X = (c|k|)^2")
      ->capture_default_str();
}

SolverConfig solver_config(const CommonOpts& o) {
  SolverConfig cfg;
  cfg.hall_coeff = parse_rational(o.hall_coeff);
  if (cfg.hall_coeff.num <= 0) {
    throw CLI::ValidationError("--hall-coeff", "must be positive");
  }
  if (!o.thue_bound.empty()) {
    cfg.y_bound = parse_int_arg(o.thue_bound, "--thue-bound");
    if (cfg.y_bound < 1) {
      throw CLI::ValidationError("--thue-bound", "must be >= 1");
    }
    cfg.bound_policy = BoundPolicy::explicit_bound;
  }
  return cfg;
}

OutputFormat record_format(const std::string& format) {
  if (format == "csv") return OutputFormat::csv;
  return OutputFormat::json_lines;
}

void print_human(std::ostream& os, const SolutionSet& s) {
  os << "k=" << to_string(s.k) << " n=" << s.n_k()
     << " complete=" << (s.complete_flag ? "true" : "false") << '\n';
  for (const auto& p : s.points) {
    os << to_string(p.X) << ' ' << to_string(p.Y) << '\n';
  }
}

void emit(const SolutionSet& s, const CommonOpts& o) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!o.out.empty()) {
    file.open(o.out, std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open " + o.out);
    os = &file;
  }
  if (o.format == "human") {
    print_human(*os, s);
  } else {
    Results r;
    r.emplace(s.k, s);
    serialize(r, record_format(o.format), *os);
  }
}

Results load_results(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string first;
  std::getline(in, first);
  in.clear();
  in.seekg(0);
  if (first == "k,X,Y,complete") return parse_csv(in);
  return parse_json_lines(in);
}

int run(int argc, char** argv) {
  CLI::App app{"integral points on Mordell curves Y^2 = X^3 + k"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "solve a single curve");
  std::string solve_k_arg;
  CommonOpts solve_opts;
  solve->add_option("--k", solve_k_arg, "curve parameter k (nonzero)")
      ->required();
  solve->add_option("--format", solve_opts.format, "human, json-lines or csv")
      ->check(CLI::IsMember({"human", "json-lines", "csv"}))
      ->capture_default_str();
  solve->add_option("--out", solve_opts.out, "output file (default stdout)");
  add_solver_flags(solve, &solve_opts);

  auto* range = app.add_subcommand("range", "solve a range of curves");
  std::string from_arg, to_arg;
  CommonOpts range_opts;
  range_opts.format = "json-lines";
  long chunk = 1000000;
  int workers = 1;
  range->add_option("--from", from_arg, "lowest k")->required();
  range->add_option("--to", to_arg, "highest k")->required();
  range->add_option("--chunk", chunk, "discriminant units per resumable chunk")
      ->capture_default_str();
  range->add_option("--workers", workers, "parallel chunk workers")
      ->capture_default_str();
  long max_chunks = -1;
  range->add_option("--max-chunks", max_chunks,
                    "stop after this many chunks (resume later; < 0 = no cap)");
  range->add_option("--format", range_opts.format, "json-lines or csv")
      ->check(CLI::IsMember({"json-lines", "csv"}))
      ->capture_default_str();
  range->add_option("--out", range_opts.out,
                    "output file; enables chunked resume via <out>.manifest");
  add_solver_flags(range, &range_opts);

  auto* verify = app.add_subcommand("verify", "re-check stored results");
  std::string verify_path;
  verify->add_option("path", verify_path, "results file (json-lines or csv)")
      ->required();

  auto* stats = app.add_subcommand("stats", "tables over stored results");
  std::string stats_path, hall_arg, large_arg;
  bool spf = false, allow_incomplete = false;
  stats->add_option("path", stats_path, "results file (json-lines or csv)")
      ->required();
  stats->add_flag("--sixth-power-free", spf,
                  "histogram only 6th-power-free k");
  stats->add_flag("--allow-incomplete", allow_incomplete,
                  "permit records with complete=false");
  stats->add_option("--hall", hall_arg,
                    "list Hall records with sqrt(X)/|k| above this threshold");
  stats->add_option("--large", large_arg,
                    "list points with X above this threshold");

  auto* oracle = app.add_subcommand("oracle", "brute-force check of one curve");
  std::string oracle_k_arg, oracle_max_arg = "10000";
  CommonOpts oracle_opts;
  oracle->add_option("--k", oracle_k_arg, "curve parameter k (nonzero)")
      ->required();
  oracle->add_option("--oracle-max", oracle_max_arg, "scan X in [x0, max]")
      ->capture_default_str();
  oracle->add_option("--format", oracle_opts.format,
                     "human, json-lines or csv")
      ->check(CLI::IsMember({"human", "json-lines", "csv"}))
      ->capture_default_str();
  oracle->add_option("--out", oracle_opts.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  try {
    if (solve->parsed()) {
      Int k = parse_int_arg(solve_k_arg, "--k");
      emit(solve_k(k, solver_config(solve_opts)), solve_opts);
      return 0;
    }
    if (range->parsed()) {
      RangeRunConfig cfg;
      cfg.k_lo = parse_int_arg(from_arg, "--from");
      cfg.k_hi = parse_int_arg(to_arg, "--to");
      cfg.chunk = chunk;
      cfg.workers = workers;
      cfg.stop_after_chunks = max_chunks;
      cfg.format = record_format(range_opts.format);
      cfg.solver = solver_config(range_opts);
      if (cfg.k_lo > cfg.k_hi) {
        throw CLI::ValidationError("--from/--to", "empty range");
      }
      if (range_opts.out.empty()) {
        auto results = solve_range(cfg.k_lo, cfg.k_hi, cfg.solver);
        serialize(results, cfg.format, std::cout);
      } else {
        long n = run_range(cfg, range_opts.out, range_opts.out + ".manifest");
        std::cerr << "wrote " << n << " records to " << range_opts.out << '\n';
      }
      return 0;
    }
    if (verify->parsed()) {
      Results r = load_results(verify_path);
      auto issues = verify_results(r);
      for (const auto& issue : issues) {
        std::cerr << "k=" << to_string(issue.k) << ": " << issue.message
                  << '\n';
      }
      if (!issues.empty()) return 1;
      std::cout << r.size() << " records verified\n";
      return 0;
    }
    if (stats->parsed()) {
      Results r = load_results(stats_path);
      auto filter =
          spf ? HistogramFilter::sixth_power_free : HistogramFilter::all;
      Histogram h = histogram(r, filter, allow_incomplete);
      std::cout << "histogram over " << h.range_desc << " ("
                << (spf ? "sixth-power-free" : "all") << ")"
                << (h.includes_incomplete ? " [includes incomplete records]"
                                          : "")
                << '\n';
      std::cout << "n_k curves\n";
      for (const auto& [n, count] : h.buckets) {
        std::cout << n << ' ' << count << '\n';
      }
      if (!hall_arg.empty()) {
        auto records = hall_measures(r, parse_rational(hall_arg));
        std::cout << "hall records above " << hall_arg << '\n';
        std::cout << "k X measure\n";
        for (const auto& rec : records) {
          std::cout << to_string(rec.k) << ' ' << to_string(rec.X) << ' '
                    << rec.display() << '\n';
        }
      }
      if (!large_arg.empty()) {
        auto rows = large_solutions(r, parse_int_arg(large_arg, "--large"));
        std::cout << "points with X above " << large_arg << '\n';
        std::cout << "k X Y\n";
        for (const auto& row : rows) {
          std::cout << to_string(row.k) << ' ' << to_string(row.X) << ' '
                    << to_string(row.Y) << '\n';
        }
      }
      return 0;
    }
    if (oracle->parsed()) {
      OracleConfig cfg;
      cfg.x_max = parse_int_arg(oracle_max_arg, "--oracle-max");
      Int k = parse_int_arg(oracle_k_arg, "--k");
      emit(brute_force_k(k, cfg), oracle_opts);
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
