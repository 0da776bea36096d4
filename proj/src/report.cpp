#include "iterseq/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace iterseq {

using ordered_json = nlohmann::ordered_json;

std::string to_base_string(nat v, int base) {
  if (base < 2 || base > 36) throw precondition_violated("display base must be in [2, 36]");
  static constexpr char alphabet[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  std::string out;
  do {
    out.push_back(alphabet[v % static_cast<nat>(base)]);
    v /= static_cast<nat>(base);
  } while (v > 0);
  std::reverse(out.begin(), out.end());
  return out;
}

nat parse_base_string(std::string_view text, int base) {
  if (base < 2 || base > 36) throw precondition_violated("base must be in [2, 36]");
  if (text.empty()) throw parse_error("empty number");
  unsigned __int128 v = 0;
  for (char c : text) {
    int digit;
    if (c >= '0' && c <= '9')
      digit = c - '0';
    else if (c >= 'a' && c <= 'z')
      digit = c - 'a' + 10;
    else
      digit = base;  // reject
    if (digit >= base)
      throw parse_error("not a base-" + std::to_string(base) + " digit string: '" +
                        std::string(text) + "'");
    v = v * static_cast<unsigned>(base) + static_cast<unsigned>(digit);
    if (v > UINT64_MAX) throw value_too_large("value exceeds 64 bits");
  }
  return static_cast<nat>(v);
}

std::string render_trajectory_csv(const std::vector<nat>& values) {
  std::string out = "step,value\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += std::to_string(values[i]);
    out += '\n';
  }
  return out;
}

namespace {

std::string join_values(const std::vector<nat>& values, int base) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_base_string(values[i], base);
  }
  return out;
}

std::string cycle_braces(const cycle& c, int base) {
  return "{" + join_values(c.values, base) + "}";
}

ordered_json config_json(const kaprekar_config& cfg) {
  return ordered_json{
      {"base", cfg.base}, {"length", cfg.length}, {"u", cfg.u}, {"v", cfg.v}};
}

ordered_json classification_json(const kaprekar_classification& r) {
  ordered_json j;
  j["config"] = config_json(r.config);
  j["fixed_points"] = r.fixed_points;
  auto cycles = ordered_json::array();
  for (const auto& c : r.cycles) cycles.push_back(c.values);
  j["cycles"] = std::move(cycles);
  j["degenerate_starts_count"] = r.degenerate_starts.size();
  ordered_json basins = ordered_json::object();
  for (const auto& [key, size] : r.basin_sizes)
    basins[std::to_string(key)] = size;
  j["basins"] = std::move(basins);
  j["canonical_terminals"] = r.canonical_terminals;
  return j;
}

ordered_json verification_json(const verification_report& r, bool include_elapsed) {
  ordered_json j;
  j["process"] = r.process;
  j["cases"] = r.cases_total;
  const auto& catalog =
      terminal_catalog(r.process == "dfp" ? dfp() : dpp());
  auto terminals = ordered_json::array();
  for (std::size_t i = 0; i < r.cases_per_terminal.size(); ++i) {
    const auto& [name, basin] = r.cases_per_terminal[i];
    ordered_json t;
    t["name"] = name;
    t["cycle"] = i < catalog.size() ? catalog[i].values.values : std::vector<nat>{};
    t["basin"] = basin;
    terminals.push_back(std::move(t));
  }
  j["terminals"] = std::move(terminals);
  auto unknown = ordered_json::array();
  for (const auto& c : r.unknown_terminals) unknown.push_back(c.values);
  j["unknown"] = std::move(unknown);
  j["max_transient"] = r.max_transient_length;
  j["elapsed_ms"] = include_elapsed ? r.elapsed.count() : 0;
  return j;
}

std::string classification_table(const kaprekar_classification& r, int base) {
  std::ostringstream out;
  out << "K_{" << r.config.u << "," << r.config.v << "} base " << r.config.base
      << " length " << r.config.length << "\n";
  out << "fixed points: "
      << (r.fixed_points.empty() ? "none" : join_values(r.fixed_points, base))
      << "\n";
  out << "loops: ";
  if (r.cycles.empty()) {
    out << "none\n";
  } else {
    for (std::size_t i = 0; i < r.cycles.size(); ++i)
      out << (i ? ", " : "") << cycle_braces(r.cycles[i], base);
    out << "\n";
  }
  out << "degenerate starts: " << r.degenerate_starts.size() << "\n";
  out << "basins:\n";
  for (const auto& [key, size] : r.basin_sizes)
    out << "  " << to_base_string(key, base) << ": " << size << "\n";
  return out.str();
}

}  // namespace

std::vector<table1_row> table1_rows(
    const std::vector<kaprekar_classification>& results) {
  std::vector<table1_row> rows;
  rows.reserve(results.size());
  for (const auto& r : results) {
    table1_row row;
    row.digit_length = r.config.length;
    if (r.fixed_points.empty()) {
      row.fixed_points = "none";
    } else {
      // Table 1 lists fixed points largest first
      auto descending = r.fixed_points;
      std::sort(descending.rbegin(), descending.rend());
      row.fixed_points = join_values(descending, 2);
    }
    if (r.cycles.empty()) {
      row.loops = "none";
    } else {
      std::string loops;
      for (std::size_t i = 0; i < r.cycles.size(); ++i)
        loops += (i ? ", " : "") + cycle_braces(r.cycles[i], 2);
      row.loops = loops;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_table1(const std::vector<kaprekar_classification>& results) {
  const auto rows = table1_rows(results);
  std::size_t fixed_width = std::string("fixed points").size();
  for (const auto& row : rows) fixed_width = std::max(fixed_width, row.fixed_points.size());
  std::ostringstream out;
  out << std::left << std::setw(6) << "base" << std::setw(8) << "length"
      << std::setw(static_cast<int>(fixed_width) + 2) << "fixed points"
      << "loops" << "\n";
  for (const auto& row : rows) {
    out << std::left << std::setw(6) << 2 << std::setw(8) << row.digit_length
        << std::setw(static_cast<int>(fixed_width) + 2) << row.fixed_points
        << row.loops << "\n";
  }
  return out.str();
}

std::string render(const kaprekar_classification& result, const render_spec& spec) {
  switch (spec.format) {
    case render_format::json:
      return classification_json(result).dump(2) + "\n";
    case render_format::table:
      return classification_table(result, spec.display_base);
    case render_format::csv:
      throw unsupported_format("no CSV form for a classification");
  }
  throw unsupported_format("unreachable");
}

std::string render(const verification_report& result, const render_spec& spec) {
  switch (spec.format) {
    case render_format::json:
      return verification_json(result, spec.include_elapsed).dump(2) + "\n";
    case render_format::table: {
      std::ostringstream out;
      out << result.process << ": " << result.cases_total << " cases\n";
      for (const auto& [name, basin] : result.cases_per_terminal)
        out << "  " << name << ": " << basin << "\n";
      out << "  unknown: " << result.unknown_cases
          << ", max transient: " << result.max_transient_length << "\n";
      return out.str();
    }
    case render_format::csv:
      throw unsupported_format("no CSV form for a verification report");
  }
  throw unsupported_format("unreachable");
}

std::string render(const collatz_trajectory_result& result, const render_spec& spec) {
  switch (spec.format) {
    case render_format::csv:
      return render_trajectory_csv(result.values);
    case render_format::json: {
      ordered_json j;
      j["start"] = result.start;
      j["values"] = result.values;
      j["reached_one"] = result.reached_one;
      j["steps"] = result.steps;
      return j.dump(2) + "\n";
    }
    case render_format::table: {
      std::string out;
      for (std::size_t i = 0; i < result.values.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(result.values[i]);
      }
      out += "\n";
      return out;
    }
  }
  throw unsupported_format("unreachable");
}

std::string render(const collatz_range_report& result, const render_spec& spec) {
  switch (spec.format) {
    case render_format::json: {
      ordered_json j;
      j["upper"] = result.upper;
      j["all_reached_one"] = result.all_reached_one;
      j["max_steps"] = result.max_steps;
      j["max_steps_start"] = result.max_steps_start;
      j["max_excursion"] = result.max_excursion;
      j["max_excursion_start"] = result.max_excursion_start;
      return j.dump(2) + "\n";
    }
    case render_format::table: {
      std::ostringstream out;
      out << "verified 1.." << result.upper
          << (result.all_reached_one ? ": all reach 1" : ": FAILED") << "\n"
          << "max steps " << result.max_steps << " (start " << result.max_steps_start
          << "), max excursion " << result.max_excursion << " (start "
          << result.max_excursion_start << ")\n";
      return out.str();
    }
    case render_format::csv:
      throw unsupported_format("no CSV form for a range report");
  }
  throw unsupported_format("unreachable");
}

std::string render(const std::vector<conjecture_result>& results,
                   const render_spec& spec) {
  switch (spec.format) {
    case render_format::json: {
      auto arr = ordered_json::array();
      for (const auto& r : results) {
        ordered_json j;
        j["m"] = r.m;
        j["fixed_point_ok"] = r.fixed_point_ok;
        j["loop_ok"] = r.loop_ok;
        j["fixed_point"] = r.predicted_fixed_point;
        j["loop"] = r.predicted_loop.values;
        arr.push_back(std::move(j));
      }
      return arr.dump(2) + "\n";
    }
    case render_format::table: {
      std::ostringstream out;
      for (const auto& r : results) {
        out << "m=" << r.m << ": fixed point " << r.predicted_fixed_point << " ("
            << to_base_string(r.predicted_fixed_point, 2) << ") "
            << (r.fixed_point_ok ? "ok" : "MISMATCH") << ", loop "
            << cycle_braces(r.predicted_loop, 2) << " "
            << (r.loop_ok ? "ok" : "MISMATCH") << "\n";
      }
      return out.str();
    }
    case render_format::csv:
      throw unsupported_format("no CSV form for conjecture results");
  }
  throw unsupported_format("unreachable");
}

}  // namespace iterseq
