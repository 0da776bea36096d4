#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "iterseq/collatz.hpp"
#include "iterseq/digitproc.hpp"
#include "iterseq/kaprekar.hpp"
#include "iterseq/report.hpp"
#include "iterseq/verifier.hpp"

namespace {

using namespace iterseq;

constexpr int exit_ok = 0;
constexpr int exit_falsified = 1;
constexpr int exit_usage = 2;
constexpr int exit_cap = 3;

struct cli_options {
  // collatz
  std::string collatz_start;
  nat collatz_max_steps = collatz_default_max_steps;
  bool collatz_csv = false;
  // kaprekar
  kaprekar_config kcfg;
  std::string kaprekar_value;
  std::string format = "json";
  nat cap = default_state_cap;
  bool acknowledge_cap = false;
  int m_min = 3;
  int m_max = 4;
  // digit processes
  std::string proc_start;
  bool proc_trace = false;
  // verifier
  int workers = 1;
  bool no_memo = false;
  // shared
  std::string output_path;  // empty = stdout
};

void emit(const cli_options& opt, const std::string& body) {
  if (opt.output_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream file(opt.output_path, std::ios::binary);
  if (!file) throw error("cannot open output file: " + opt.output_path);
  file << body;
}

render_format parse_format(const std::string& name) {
  if (name == "json") return render_format::json;
  if (name == "table") return render_format::table;
  if (name == "csv") return render_format::csv;
  throw unsupported_format("unknown format '" + name + "'");
}

nat effective_cap(const cli_options& opt) {
  if (opt.cap > default_state_cap && !opt.acknowledge_cap)
    throw precondition_violated(
        "raising --cap above " + std::to_string(default_state_cap) +
        " needs --force to acknowledge the cost");
  return opt.cap;
}

int run_collatz_trajectory(const cli_options& opt) {
  const nat start = parse_decimal(opt.collatz_start);
  const auto result = collatz_trajectory(start, opt.collatz_max_steps);
  render_spec spec{opt.collatz_csv ? render_format::csv : render_format::table};
  emit(opt, render(result, spec));
  std::cerr << "collatz: start " << start << (result.reached_one ? " reaches 1 in " : " not at 1 after ")
            << result.steps << " steps\n";
  return exit_ok;
}

int run_kaprekar_step(const cli_options& opt) {
  const nat value = parse_decimal(opt.kaprekar_value);
  if (value >= state_count(opt.kcfg))
    throw value_too_large("value does not fit in " +
                          std::to_string(opt.kcfg.length) + " base-" +
                          std::to_string(opt.kcfg.base) + " digits");
  const auto next = kaprekar_step(value, opt.kcfg);
  emit(opt, next ? std::to_string(*next) + "\n" : "degenerate\n");
  return exit_ok;
}

int run_kaprekar_classify(const cli_options& opt) {
  const auto result = classify_all(opt.kcfg, effective_cap(opt));
  emit(opt, render(result, render_spec{parse_format(opt.format)}));
  std::cerr << "kaprekar: " << result.fixed_points.size() << " fixed point(s), "
            << result.cycles.size() << " loop(s), "
            << result.degenerate_starts.size() << " degenerate start(s)\n";
  return exit_ok;
}

int run_kaprekar_table1(const cli_options& opt) {
  std::vector<kaprekar_classification> results;
  for (int length = 4; length <= 9; ++length)
    results.push_back(classify_all({2, length, 2, 2}, effective_cap(opt)));
  emit(opt, render_table1(results));
  return exit_ok;
}

int run_kaprekar_conjecture(const cli_options& opt) {
  if (opt.m_min < 3 || opt.m_max < opt.m_min)
    throw precondition_violated("need 3 <= m-min <= m-max");
  std::vector<conjecture_result> results;
  bool all_hold = true;
  for (int m = opt.m_min; m <= opt.m_max; ++m) {
    results.push_back(conjecture_check(m, effective_cap(opt)));
    all_hold = all_hold && results.back().holds();
  }
  emit(opt, render(results, render_spec{parse_format(opt.format)}));
  std::cerr << "conjecture: m in [" << opt.m_min << ", " << opt.m_max << "] "
            << (all_hold ? "holds" : "FALSIFIED") << "\n";
  return all_hold ? exit_ok : exit_falsified;
}

int run_digit_process(const digit_process& p, const cli_options& opt) {
  const nat first_image = apply_decimal(p, opt.proc_start);
  // the start itself participates when it fits a word; otherwise the
  // trajectory is reported from the first image
  std::vector<nat> values;
  trajectory_result terminal;
  bool start_oversize = false;
  nat start_word = 0;
  try {
    start_word = parse_decimal(opt.proc_start);
  } catch (const value_too_large&) {
    start_oversize = true;
  }
  if (start_oversize) {
    terminal = find_terminal([&p](nat x) { return apply_value(p, x); }, first_image);
  } else {
    terminal = find_terminal([&p](nat x) { return apply_value(p, x); }, start_word);
  }

  if (opt.proc_trace) {
    std::string csv = "step,value\n";
    std::size_t step = 0;
    if (start_oversize) {
      csv += "0," + std::string(opt.proc_start) + "\n";
      step = 1;
    }
    for (nat v : terminal.transient)
      csv += std::to_string(step++) + "," + std::to_string(v) + "\n";
    for (nat v : terminal.terminal.values)
      csv += std::to_string(step++) + "," + std::to_string(v) + "\n";
    emit(opt, csv);
  } else {
    nlohmann::ordered_json j;
    j["process"] = p.name;
    j["start"] = opt.proc_start;
    j["transient_length"] = terminal.transient_length() + (start_oversize ? 1 : 0);
    j["cycle"] = terminal.terminal.values;
    std::string name = "unknown";
    for (const auto& entry : terminal_catalog(p))
      if (entry.values == terminal.terminal) name = entry.name;
    j["terminal"] = name;
    emit(opt, j.dump(2) + "\n");
  }
  std::cerr << p.name << ": reaches " << (terminal.terminal.size() == 1 ? "fixed point " : "loop of ")
            << (terminal.terminal.size() == 1
                    ? std::to_string(terminal.terminal.min())
                    : std::to_string(terminal.terminal.size()) + " values")
            << "\n";
  return exit_ok;
}

int run_verify(const digit_process& p, const cli_options& opt) {
  verify_options vopts;
  vopts.workers = opt.workers;
  vopts.memoize = !opt.no_memo;
  const auto report = verify_theorem(p, vopts);
  emit(opt, render(report, render_spec{render_format::json}));
  std::cerr << report.process << ": " << report.cases_total << " cases, "
            << report.cases_per_terminal.size() << " terminals, "
            << report.unknown_terminals.size() << " unknown, max transient "
            << report.max_transient_length << ", " << report.elapsed.count()
            << " ms\n";
  return report.confirmed() ? exit_ok : exit_falsified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"iterated digit sequences: Collatz, generalized Kaprekar, "
               "digit factorial/power processes"};
  app.require_subcommand(1);
  cli_options opt;

  // collatz
  auto* collatz = app.add_subcommand("collatz", "Collatz trajectories and range verification");
  auto* c_start = collatz->add_option("--start", opt.collatz_start, "start value");
  collatz->add_option("--max-steps", opt.collatz_max_steps, "trajectory step cap");
  collatz->add_flag("--csv", opt.collatz_csv, "emit step,value CSV");
  auto* collatz_verify = collatz->add_subcommand("verify", "check every start up to a bound");
  auto* c_upto = collatz_verify->add_option("--upto", opt.collatz_start, "inclusive upper bound")
                     ->required();
  (void)c_start;
  (void)c_upto;

  // kaprekar
  auto* kaprekar = app.add_subcommand("kaprekar", "generalized Kaprekar routine K_{u,v}");
  kaprekar->require_subcommand(1);
  auto add_config = [&opt](CLI::App* cmd, bool with_uv = true) {
    cmd->add_option("--base", opt.kcfg.base, "digit base")->required();
    cmd->add_option("--length", opt.kcfg.length, "digit length")->required();
    if (with_uv) {
      cmd->add_option("-u", opt.kcfg.u, "rank from the largest arrangement")->required();
      cmd->add_option("-v", opt.kcfg.v, "rank from the smallest arrangement")->required();
    }
  };
  auto* k_step = kaprekar->add_subcommand("step", "one application of K_{u,v}");
  add_config(k_step);
  k_step->add_option("--value", opt.kaprekar_value, "input value")->required();
  auto* k_classify = kaprekar->add_subcommand("classify", "exhaustive terminal classification");
  add_config(k_classify);
  k_classify->add_option("--format", opt.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
  k_classify->add_option("--cap", opt.cap, "state-space cap");
  k_classify->add_flag("--force", opt.acknowledge_cap, "acknowledge a raised cap");
  auto* k_table1 = kaprekar->add_subcommand("table1", "base-2 K_{2,2} summary, lengths 4..9");
  (void)k_table1;
  auto* k_conj = kaprekar->add_subcommand("conjecture", "check the closed forms for a range of m");
  k_conj->add_option("--m-min", opt.m_min, "first m")->required();
  k_conj->add_option("--m-max", opt.m_max, "last m")->required();
  k_conj->add_option("--format", opt.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
  k_conj->add_option("--cap", opt.cap, "state-space cap");
  k_conj->add_flag("--force", opt.acknowledge_cap, "acknowledge a raised cap");

  // digit processes
  auto* dfp_cmd = app.add_subcommand("dfp", "digit factorial process");
  dfp_cmd->add_option("--start", opt.proc_start, "start value (any length)")->required();
  dfp_cmd->add_flag("--trace", opt.proc_trace, "emit step,value CSV");
  auto* dpp_cmd = app.add_subcommand("dpp", "digit power process");
  dpp_cmd->add_option("--start", opt.proc_start, "start value (any length)")->required();
  dpp_cmd->add_flag("--trace", opt.proc_trace, "emit step,value CSV");

  // verify
  auto* verify = app.add_subcommand("verify", "exhaustive terminal-catalog verification");
  verify->require_subcommand(1);
  auto* v_dfp = verify->add_subcommand("dfp", "all 11439 digit multisets up to size 7");
  auto* v_dpp = verify->add_subcommand("dpp", "all 92377 digit multisets up to size 10");
  for (auto* cmd : {v_dfp, v_dpp}) {
    cmd->add_option("--workers", opt.workers, "worker thread count")
        ->envname("ITERSEQ_WORKERS");
    cmd->add_flag("--no-memo", opt.no_memo, "disable the value memo");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (collatz->parsed()) {
      if (collatz_verify->parsed()) {
        const auto report = collatz_verify_range(parse_decimal(opt.collatz_start));
        std::cout << render(report, render_spec{render_format::json});
        std::cerr << "collatz: verified 1.." << report.upper << ", max steps "
                  << report.max_steps << ", max excursion " << report.max_excursion
                  << "\n";
        return report.all_reached_one ? exit_ok : exit_falsified;
      }
      if (opt.collatz_start.empty())
        throw precondition_violated("collatz needs --start (or the verify subcommand)");
      return run_collatz_trajectory(opt);
    }
    if (kaprekar->parsed()) {
      if (k_step->parsed()) return run_kaprekar_step(opt);
      if (k_classify->parsed()) return run_kaprekar_classify(opt);
      if (k_table1->parsed()) return run_kaprekar_table1(opt);
      if (k_conj->parsed()) return run_kaprekar_conjecture(opt);
    }
    if (dfp_cmd->parsed()) return run_digit_process(dfp(), opt);
    if (dpp_cmd->parsed()) return run_digit_process(dpp(), opt);
    if (verify->parsed()) {
      if (v_dfp->parsed()) return run_verify(dfp(), opt);
      if (v_dpp->parsed()) return run_verify(dpp(), opt);
    }
  } catch (const state_space_too_large& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_cap;
  } catch (const step_cap_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_cap;
  } catch (const overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_cap;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
