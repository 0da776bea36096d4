#pragma once

#include <string>
#include <vector>

#include "iterseq/collatz.hpp"
#include "iterseq/kaprekar.hpp"
#include "iterseq/verifier.hpp"

namespace iterseq {

enum class render_format { table, csv, json };

struct render_spec {
  render_format format = render_format::json;
  int display_base = 10;  // base 2 for the binary Kaprekar outputs
  bool include_elapsed = true;
};

/// Digit-string rendering without prefix or leading zeros ("101001" style).
std::string to_base_string(nat v, int base);
nat parse_base_string(std::string_view text, int base);

/// CSV with header "step,value", LF line endings, steps counted from 0.
std::string render_trajectory_csv(const std::vector<nat>& values);

struct table1_row {
  int digit_length = 0;
  std::string fixed_points;  // binary, descending, "none" when empty
  std::string loops;         // "{a, b}" in canonical rotation, "none" when empty
};

/// Row contents of the base-2 K_{2,2} summary table for the given
/// classifications (expected: lengths 4..9, u = v = 2).
std::vector<table1_row> table1_rows(
    const std::vector<kaprekar_classification>& results);

/// Aligned text table built from table1_rows.
std::string render_table1(const std::vector<kaprekar_classification>& results);

/// Deterministic serializations. Formats not defined for a report type throw
/// unsupported_format.
std::string render(const kaprekar_classification& result, const render_spec& spec);
std::string render(const verification_report& result, const render_spec& spec);
std::string render(const collatz_trajectory_result& result, const render_spec& spec);
std::string render(const collatz_range_report& result, const render_spec& spec);
std::string render(const std::vector<conjecture_result>& results,
                   const render_spec& spec);

}  // namespace iterseq
