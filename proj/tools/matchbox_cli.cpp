// Command-line surface over the matchbox library: exact pmfs, identity
// verification sweeps, the corollary report, moments, and the drawing-process
// simulation. Results go to stdout as JSON records (or CSV tables);
// diagnostics go to stderr.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <matchbox/matchbox.hpp>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct CommandResult {
  json params = json::object();
  json payload = json::object();
  std::string csv;  // tabular rendering; run-level scalars repeat per row
  int exit_code = kExitOk;
};

// One scalar rendering shared by the JSON and CSV paths, so both formats
// carry identical numeric content.
std::string number_text(double value) { return json(value).dump(); }

const char* bool_text(bool value) { return value ? "true" : "false"; }

void emit_record(const std::string& command, const std::string& format,
                 const CommandResult& result) {
  if (format == "csv") {
    std::cout << result.csv;
    return;
  }
  const json record{{"command", command},
                    {"params", result.params},
                    {"payload", result.payload},
                    {"status", "ok"}};
  std::cout << record.dump(2) << "\n";
}

void emit_error(const std::string& command, const std::string& message) {
  const json record{{"command", command},
                    {"params", json::object()},
                    {"payload", json::object()},
                    {"status", "error"},
                    {"message", message}};
  std::cout << record.dump(2) << "\n";
}

CommandResult run_pmf(std::uint32_t n, const std::string& p_text) {
  const matchbox::MatchboxParams params(n, matchbox::parse_rational(p_text));
  const matchbox::Pmf pmf = matchbox::pmf_generalized(params);
  const std::string sum = matchbox::to_fraction_string(matchbox::pmf_sum(pmf));

  json probs = json::array();
  std::ostringstream csv;
  csv << "r,probability,sum\n";
  for (std::size_t r = 0; r < pmf.size(); ++r) {
    const std::string text = matchbox::to_fraction_string(pmf[r]);
    probs.push_back(text);
    csv << r << "," << text << "," << sum << "\n";
  }

  CommandResult result;
  result.params = {{"n", n}, {"p", matchbox::to_fraction_string(params.p())}};
  result.payload = {{"pmf", std::move(probs)}, {"sum", sum}};
  result.csv = csv.str();
  return result;
}

CommandResult run_verify(std::uint32_t n_max, std::vector<std::string> p_texts) {
  if (p_texts.empty()) {
    p_texts = {"1/2", "1/3", "2/5", "9/10", "1/1000"};
  }
  std::vector<matchbox::Rational> probabilities;
  json p_echo = json::array();
  for (const auto& text : p_texts) {
    probabilities.push_back(matchbox::parse_rational(text));
    p_echo.push_back(matchbox::to_fraction_string(probabilities.back()));
  }

  json cells = json::array();
  json failures = json::array();
  std::ostringstream csv;
  csv << "n,p,lhs,rhs_factorial,rhs_pochhammer,equal\n";
  bool all_equal = true;
  for (std::uint32_t n = 0; n <= n_max; ++n) {
    for (const auto& p : probabilities) {
      const matchbox::MatchboxParams params(n, p);
      const matchbox::IdentityReport report = matchbox::verify_identity(params);
      const std::string p_str = matchbox::to_fraction_string(p);
      const std::string lhs = matchbox::to_fraction_string(report.lhs);
      const std::string rhs_f = matchbox::to_fraction_string(report.rhs_factorial_form);
      const std::string rhs_p = matchbox::to_fraction_string(report.rhs_pochhammer_form);
      cells.push_back({{"n", n},
                       {"p", p_str},
                       {"lhs", lhs},
                       {"rhs_factorial", rhs_f},
                       {"rhs_pochhammer", rhs_p},
                       {"equal", report.equal}});
      csv << n << "," << p_str << "," << lhs << "," << rhs_f << "," << rhs_p << ","
          << bool_text(report.equal) << "\n";
      if (!report.equal) {
        all_equal = false;
        failures.push_back({{"n", n}, {"p", p_str}});
      }
    }
  }

  CommandResult result;
  result.params = {{"n_max", n_max}, {"p", std::move(p_echo)}};
  result.payload = {{"cells", std::move(cells)},
                    {"all_equal", all_equal},
                    {"failures", std::move(failures)}};
  result.csv = csv.str();
  result.exit_code = all_equal ? kExitOk : kExitVerifyFailed;
  return result;
}

CommandResult run_corollary(std::uint32_t n_max) {
  json rows = json::array();
  std::ostringstream csv;
  csv << "n,value_at_2,pochhammer_ratio,matches_at_2,value_at_1,"
         "chu_vandermonde_ratio,matches_at_1\n";
  bool all_at_2 = true;
  bool all_at_1 = true;
  for (std::uint32_t n = 0; n <= n_max; ++n) {
    const matchbox::CorollaryReport report = matchbox::corollary_check(n);
    const std::string at_2 = matchbox::to_fraction_string(report.value_at_2);
    const std::string ratio = matchbox::to_fraction_string(report.pochhammer_ratio);
    const std::string at_1 = matchbox::to_fraction_string(report.value_at_1);
    const std::string chu = matchbox::to_fraction_string(report.chu_vandermonde_ratio);
    rows.push_back({{"n", n},
                    {"value_at_2", at_2},
                    {"pochhammer_ratio", ratio},
                    {"matches_at_2", report.matches_at_2},
                    {"value_at_1", at_1},
                    {"chu_vandermonde_ratio", chu},
                    {"matches_at_1", report.matches_at_1}});
    csv << n << "," << at_2 << "," << ratio << "," << bool_text(report.matches_at_2)
        << "," << at_1 << "," << chu << "," << bool_text(report.matches_at_1) << "\n";
    all_at_2 = all_at_2 && report.matches_at_2;
    all_at_1 = all_at_1 && report.matches_at_1;
  }

  CommandResult result;
  result.params = {{"n_max", n_max}};
  result.payload = {{"rows", std::move(rows)},
                    {"all_match_at_2", all_at_2},
                    {"all_match_at_1", all_at_1}};
  result.csv = csv.str();
  return result;
}

CommandResult run_simulate(std::uint32_t n, const std::string& p_text,
                           std::uint64_t trials, std::uint64_t seed,
                           unsigned workers) {
  const matchbox::Rational p = matchbox::parse_rational(p_text);
  const matchbox::SimConfig config(n, p, trials, seed);
  const matchbox::Pmf exact = matchbox::pmf_generalized(matchbox::MatchboxParams(n, p));
  const matchbox::SimReport report = matchbox::run_simulation(config, exact, workers);

  const std::string tv = number_text(report.tv_distance);
  const std::string chi = number_text(report.chi_square);
  json counts = json::array();
  json empirical = json::array();
  json exact_probs = json::array();
  std::ostringstream csv;
  csv << "r,count,empirical,exact,tv_distance,chi_square\n";
  for (std::size_t r = 0; r < report.counts.size(); ++r) {
    const double frequency = static_cast<double>(report.counts[r]) /
                             static_cast<double>(report.trials);
    const std::string exact_text = matchbox::to_fraction_string(exact[r]);
    counts.push_back(report.counts[r]);
    empirical.push_back(frequency);
    exact_probs.push_back(exact_text);
    csv << r << "," << report.counts[r] << "," << number_text(frequency) << ","
        << exact_text << "," << tv << "," << chi << "\n";
  }

  CommandResult result;
  result.params = {{"n", n},
                   {"p", matchbox::to_fraction_string(p)},
                   {"trials", trials},
                   {"seed", seed},
                   {"workers", workers}};
  result.payload = {{"counts", std::move(counts)},
                    {"empirical", std::move(empirical)},
                    {"exact", std::move(exact_probs)},
                    {"trials", report.trials},
                    {"tv_distance", report.tv_distance},
                    {"chi_square", report.chi_square}};
  result.csv = csv.str();
  return result;
}

CommandResult run_moment(std::uint32_t n, const std::string& p_text, std::uint32_t k) {
  const matchbox::MatchboxParams params(n, matchbox::parse_rational(p_text));
  const std::string p_str = matchbox::to_fraction_string(params.p());
  const std::string value = matchbox::to_fraction_string(matchbox::moment(params, k));

  CommandResult result;
  result.params = {{"n", n}, {"p", p_str}, {"k", k}};
  result.payload = {{"moment", value}};
  std::ostringstream csv;
  csv << "n,p,k,moment\n" << n << "," << p_str << "," << k << "," << value << "\n";
  result.csv = csv.str();
  return result;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact generalized matchbox distributions, terminating 2F1 "
               "evaluation, and hypergeometric identity verification"};
  app.require_subcommand(1);

  const std::string format_help = "Output format (default json)";
  const auto format_check = CLI::IsMember({"json", "csv"});

  auto* pmf_cmd = app.add_subcommand("pmf", "Exact pmf of the generalized matchbox distribution");
  std::uint32_t pmf_n = 0;
  std::string pmf_p;
  std::string pmf_format = "json";
  pmf_cmd->add_option("--n", pmf_n, "Initial matches per box")->required();
  pmf_cmd->add_option("--p", pmf_p, "Box-one selection probability, 'a/b' or a finite decimal")->required();
  pmf_cmd->add_option("--format", pmf_format, format_help)->check(format_check);

  auto* verify_cmd = app.add_subcommand(
      "verify", "Sweep the two-term 2F1 identity over a (n, p) grid; exit 1 on any mismatch");
  std::uint32_t verify_n_max = 50;
  std::vector<std::string> verify_p;
  std::string verify_format = "json";
  verify_cmd->add_option("--n-max", verify_n_max, "Largest n in the sweep (default 50)");
  verify_cmd->add_option("--p", verify_p,
                         "Probability grid value, repeatable (default 1/2 1/3 2/5 9/10 1/1000)");
  verify_cmd->add_option("--format", verify_format, format_help)->check(format_check);

  auto* corollary_cmd = app.add_subcommand(
      "corollary", "Report 2F1(-n,1;-2n;x) at x = 2 and x = 1 against their closed forms");
  std::uint32_t corollary_n_max = 50;
  std::string corollary_format = "json";
  corollary_cmd->add_option("--n-max", corollary_n_max, "Largest n in the report (default 50)");
  corollary_cmd->add_option("--format", corollary_format, format_help)->check(format_check);

  auto* simulate_cmd = app.add_subcommand(
      "simulate", "Simulate the drawing process and score it against the exact pmf");
  std::uint32_t sim_n = 0;
  std::string sim_p;
  std::uint64_t sim_trials = 100000;
  std::uint64_t sim_seed = 0;
  unsigned sim_workers = 1;
  std::string sim_format = "json";
  simulate_cmd->add_option("--n", sim_n, "Initial matches per box")->required();
  simulate_cmd->add_option("--p", sim_p, "Box-one selection probability")->required();
  simulate_cmd->add_option("--trials", sim_trials, "Trial count (default 100000)");
  simulate_cmd->add_option("--seed", sim_seed, "Seed for the per-trial streams (default 0)");
  simulate_cmd->add_option("--workers", sim_workers,
                           "Worker threads; the report is identical for any count (default 1)");
  simulate_cmd->add_option("--format", sim_format, format_help)->check(format_check);

  auto* moment_cmd = app.add_subcommand("moment", "Exact k-th raw moment of the distribution");
  std::uint32_t moment_n = 0;
  std::string moment_p;
  std::uint32_t moment_k = 1;
  std::string moment_format = "json";
  moment_cmd->add_option("--n", moment_n, "Initial matches per box")->required();
  moment_cmd->add_option("--p", moment_p, "Box-one selection probability")->required();
  moment_cmd->add_option("--k", moment_k, "Moment order (default 1)");
  moment_cmd->add_option("--format", moment_format, format_help)->check(format_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    const auto chosen = app.get_subcommands();
    emit_error(chosen.empty() ? "none" : chosen.front()->get_name(), e.what());
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    CommandResult result;
    std::string format = "json";
    if (command == "pmf") {
      result = run_pmf(pmf_n, pmf_p);
      format = pmf_format;
    } else if (command == "verify") {
      result = run_verify(verify_n_max, verify_p);
      format = verify_format;
    } else if (command == "corollary") {
      result = run_corollary(corollary_n_max);
      format = corollary_format;
    } else if (command == "simulate") {
      result = run_simulate(sim_n, sim_p, sim_trials, sim_seed, sim_workers);
      format = sim_format;
    } else {
      result = run_moment(moment_n, moment_p, moment_k);
      format = moment_format;
    }
    emit_record(command, format, result);
    return result.exit_code;
  } catch (const std::exception& e) {
    emit_error(command, e.what());
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
}
