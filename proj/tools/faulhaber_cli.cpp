#include <chrono>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/faulhaber_form.hpp"
#include "faulhaber/generators.hpp"
#include "faulhaber/oracle.hpp"
#include "faulhaber/output.hpp"

namespace {

using namespace faulhaber;

int run_gen(unsigned k, const std::string& format, GeneratorKind kind,
            std::optional<unsigned> cache_max_k) {
  PowerSumTable table(kind, cache_max_k);
  const ReducedPowerPoly p = table.power_sum(k);
  if (format == "plain") {
    std::cout << render_plain(k, p) << "\n";
  } else if (format == "latex") {
    std::cout << render_latex(k, p) << "\n";
  } else if (format == "json") {
    std::cout << make_output_record(k, p, kind).to_json().dump(2) << "\n";
  } else {  // csv
    std::cout << kTableCsvHeader << "\n" << render_csv_row(make_output_record(k, p, kind)) << "\n";
  }
  return 0;
}

int run_verify(unsigned k_max, unsigned long n_max, GeneratorKind kind,
               std::optional<unsigned> cache_max_k) {
  PowerSumTable table(kind, cache_max_k);
  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  bool all_pass = true;
  for (unsigned k = 1; k <= k_max; ++k) {
    const VerificationReport report = verify_power_sum(k, n_max, table);
    all_pass = all_pass && report.pass;
    reports.push_back(report_to_json(report));
  }
  std::cout << reports.dump(2) << "\n";
  return all_pass ? 0 : 1;
}

int run_xcheck(unsigned r_max, std::optional<unsigned> cache_max_k) {
  PowerSumTable standard(GeneratorKind::standard, cache_max_k);
  PowerSumTable alternative(GeneratorKind::alternative, cache_max_k);
  bool ok = true;
  for (unsigned r = 1; r <= r_max; ++r) {
    const bool odd_match = standard.power_sum(2 * r + 1) == alternative.power_sum(2 * r + 1);
    const bool even_match = standard.power_sum(2 * r + 2) == alternative.power_sum(2 * r + 2);
    ok = ok && odd_match && even_match;
    std::cout << "r=" << r << ": S" << 2 * r + 1 << " " << (odd_match ? "match" : "MISMATCH")
              << ", S" << 2 * r + 2 << " " << (even_match ? "match" : "MISMATCH") << "\n";
  }
  for (unsigned k = 1; k <= r_max; ++k) {
    const bool i_s1 = s1_power_identity_holds(k, standard) &&
                      s1_power_identity_holds(k, alternative);
    const bool i_s2 = s2_s1_power_identity_holds(k, standard) &&
                      s2_s1_power_identity_holds(k, alternative);
    ok = ok && i_s1 && i_s2;
    std::cout << "k=" << k << ": S1^k identity " << (i_s1 ? "holds" : "FAILED")
              << ", S2*S1^k identity " << (i_s2 ? "holds" : "FAILED") << "\n";
  }
  std::cout << (ok ? "xcheck: all checks passed" : "xcheck: FAILURES detected") << "\n";
  return ok ? 0 : 1;
}

int run_table(unsigned k_max, const std::string& format, GeneratorKind kind,
              std::optional<unsigned> cache_max_k) {
  PowerSumTable table(kind, cache_max_k);
  std::vector<OutputRecord> rows;
  rows.reserve(k_max - 1);
  for (unsigned k = 2; k <= k_max; ++k)
    rows.push_back(make_output_record(k, table.power_sum(k), kind));
  if (format == "plain")
    std::cout << render_table_plain(rows);
  else if (format == "csv")
    std::cout << render_table_csv(rows);
  else  // json lines
    std::cout << render_table_jsonl(rows);
  return 0;
}

int run_bench(unsigned k_max, unsigned reps, std::optional<unsigned> cache_max_k) {
  std::cout << "strategy,k,millis,ops,hash\n";
  for (const GeneratorKind kind : {GeneratorKind::standard, GeneratorKind::alternative}) {
    for (unsigned k = 2; k <= k_max; ++k) {
      double best_ms = std::numeric_limits<double>::infinity();
      std::uint64_t ops = 0;
      std::uint64_t hash = 0;
      for (unsigned rep = 0; rep < reps; ++rep) {
        PowerSumTable table(kind, cache_max_k);  // cold cache on every repetition
        const std::uint64_t ops_before = rational_op_count();
        const auto start = std::chrono::steady_clock::now();
        const ReducedPowerPoly p = table.power_sum(k);
        const auto stop = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
        if (ms < best_ms) best_ms = ms;
        ops = rational_op_count() - ops_before;
        hash = canonical_hash(p);
      }
      std::ostringstream row;
      row << to_string(kind) << "," << k << "," << std::fixed << std::setprecision(3) << best_ms
          << "," << ops << "," << std::hex << std::setw(16) << std::setfill('0') << hash;
      std::cout << row.str() << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Faulhaber polynomials: exact generation, verification and benchmarks"};
  app.require_subcommand(1);

  std::optional<unsigned> cache_max_k;
  app.add_option("--cache-max-k", cache_max_k,
                 "Largest power-sum index kept in the memo table (default unlimited)")
      ->envname("FAULHABER_CACHE_MAX_K");

  const std::vector<std::string> gen_formats{"plain", "latex", "json", "csv"};
  const std::vector<std::string> table_formats{"plain", "csv", "json"};
  const std::vector<std::string> generators{"standard", "alternative"};

  auto* gen = app.add_subcommand("gen", "Print S_k as a Faulhaber polynomial");
  unsigned gen_k = 0;
  std::string gen_format = "plain";
  std::string gen_generator = "standard";
  gen->add_option("--k", gen_k, "Power-sum index k >= 1")->required()->check(CLI::PositiveNumber);
  gen->add_option("--format", gen_format, "Output format")->check(CLI::IsMember(gen_formats));
  gen->add_option("--generator", gen_generator, "Generator strategy")
      ->check(CLI::IsMember(generators));

  auto* verify = app.add_subcommand("verify", "Check generated polynomials against direct sums");
  unsigned verify_k_max = 20;
  unsigned long verify_n_max = 200;
  std::string verify_generator = "standard";
  verify->add_option("--k-max", verify_k_max, "Verify S_k for every k <= k-max")
      ->check(CLI::PositiveNumber);
  verify->add_option("--n-max", verify_n_max, "Evaluate at every n <= n-max")
      ->check(CLI::PositiveNumber);
  verify->add_option("--generator", verify_generator, "Generator strategy")
      ->check(CLI::IsMember(generators));

  auto* xcheck = app.add_subcommand("xcheck", "Compare the two generator strategies");
  unsigned xcheck_r_max = 50;
  xcheck->add_option("--r-max", xcheck_r_max, "Compare S_{2r+1}, S_{2r+2} for every r <= r-max")
      ->check(CLI::PositiveNumber);

  auto* table_cmd = app.add_subcommand("table", "Tabulate Faulhaber coefficients");
  unsigned table_k_max = 10;
  std::string table_format = "plain";
  std::string table_generator = "standard";
  table_cmd->add_option("--k-max", table_k_max, "Last row k (first row is k = 2)")
      ->check(CLI::Range(2u, std::numeric_limits<unsigned>::max()));
  table_cmd->add_option("--format", table_format, "Output format")
      ->check(CLI::IsMember(table_formats));
  table_cmd->add_option("--generator", table_generator, "Generator strategy")
      ->check(CLI::IsMember(generators));

  auto* bench = app.add_subcommand("bench", "Benchmark the generator strategies, cold cache");
  unsigned bench_k_max = 40;
  unsigned bench_reps = 3;
  bench->add_option("--k-max", bench_k_max, "Generate S_k for every k <= k-max")
      ->check(CLI::Range(2u, std::numeric_limits<unsigned>::max()));
  bench->add_option("--reps", bench_reps, "Repetitions per measurement")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed())
      return run_gen(gen_k, gen_format, generator_kind_from_string(gen_generator), cache_max_k);
    if (verify->parsed())
      return run_verify(verify_k_max, verify_n_max,
                        generator_kind_from_string(verify_generator), cache_max_k);
    if (xcheck->parsed()) return run_xcheck(xcheck_r_max, cache_max_k);
    if (table_cmd->parsed())
      return run_table(table_k_max, table_format, generator_kind_from_string(table_generator),
                       cache_max_k);
    if (bench->parsed()) return run_bench(bench_k_max, bench_reps, cache_max_k);
  } catch (const StructureError& e) {
    std::cerr << "internal structure violation: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
