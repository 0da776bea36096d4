#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string_view>

#include "iterseq/digits.hpp"

namespace iterseq {

using wide_int = boost::multiprecision::cpp_int;

enum class process_kind { dfp, dpp };

/// A digit process: n -> sum of weight[d] over the decimal digits d of n.
struct digit_process {
  process_kind kind;
  const char* name;
  std::array<nat, 10> weight;  // d! for dfp; d^d with 0^0 = 1 for dpp
  nat descent_threshold;       // apply_decimal(n) < n for every n >= threshold
  int multiset_depth;          // digit count covering [1, threshold)
  nat ratio_scale;             // denominator scale of the descent ratio
};

const digit_process& dfp();
const digit_process& dpp();
const digit_process& process_for(process_kind kind);

/// Applies the process to a decimal digit string of any length.
/// Throws parse_error on empty or non-digit input.
nat apply_decimal(const digit_process& p, std::string_view decimal);

/// Same map on an in-range value.
nat apply_value(const digit_process& p, nat n);

/// Image of every natural whose zero-normalized digit multiset is m:
/// sum of count_d * weight[d].
nat apply_to_multiset(const digit_process& p, const digit_multiset& m);

/// Scaled integers for the digit-count-m descent inequality
/// (10^m - 1)/10 > m * weight[9], cleared of the denominator:
/// lhs = 10^m - 1, rhs = 10 * m * weight[9]. Descent holds iff lhs > rhs.
struct descent_bound_pair {
  wide_int lhs;
  wide_int rhs;
};
descent_bound_pair descent_bound(const digit_process& p, int m);
bool descent_bound_holds(const digit_process& p, int m);

/// Exact check that (10^m - 1)/(m*scale) < (10^{m+1} - 1)/((m+1)*scale),
/// by cross-multiplication. No floating point anywhere.
bool ratio_strictly_increases(nat scale, int m);

/// apply_decimal(p, n) < n for an n at or above the descent threshold. Oversize
/// inputs are compared as digit strings (length first, then lexicographic).
/// Throws precondition_violated for n below the threshold.
bool check_descent(const digit_process& p, std::string_view decimal);

/// Numeric order of two decimal digit strings, ignoring leading zeros.
/// Negative / zero / positive like a three-way comparison of the values.
int compare_decimal(std::string_view a, std::string_view b);

}  // namespace iterseq
