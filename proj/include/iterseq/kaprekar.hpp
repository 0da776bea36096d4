#pragma once

#include <map>
#include <optional>
#include <vector>

#include "iterseq/cycledetect.hpp"
#include "iterseq/digits.hpp"

namespace iterseq {

/// Parameters of the generalized Kaprekar map K_{u,v} on fixed-length digit
/// strings: subtract the v-th smallest arrangement from the u-th largest.
struct kaprekar_config {
  int base = 10;
  int length = 4;
  nat u = 1;
  nat v = 1;
};

/// base^length; the full state space of length-L digit strings.
/// Throws value_too_large when it does not fit exact 64-bit arithmetic.
nat state_count(const kaprekar_config& cfg);

/// Number of distinct length-L arrangements of d's digit multiset:
/// L! / prod(count_c!).
nat distinct_perm_count(const digits& d);

/// u-th largest value among the distinct arrangements of d's digits,
/// leading zeros permitted (arrangements count at their numeric value).
/// Throws rank_out_of_range when u exceeds distinct_perm_count(d).
nat alpha(const digits& d, nat u);

/// v-th smallest value among the distinct arrangements.
nat beta(const digits& d, nat v);

/// One application of K_{u,v} to n, decomposed at the configured length with
/// leading zeros retained. nullopt is the Degenerate sentinel: the required
/// rank does not exist or the difference would be negative.
std::optional<nat> kaprekar_step(nat n, const kaprekar_config& cfg);

inline constexpr nat default_state_cap = 10'000'000;

struct kaprekar_classification {
  kaprekar_config config;
  std::vector<nat> fixed_points;       // ascending
  std::vector<cycle> cycles;           // length >= 2, sorted by min element
  std::vector<nat> degenerate_starts;  // ascending; includes zero-bound starts
  // terminal key = fixed point value, or the cycle's minimum element
  std::map<nat, nat> basin_sizes;         // key -> number of assigned starts
  std::vector<nat> canonical_terminals;   // keys reachable from starts without
                                          // leading zeros

  nat assigned_total() const;
};

/// Iterates kaprekar_step from every n in [0, base^L) until a known value or
/// Degenerate, and returns the complete terminal catalog with basin sizes.
/// Starts whose trajectory degenerates or reaches the all-zeros state (which
/// never leaves itself) are listed separately, not assigned to a terminal.
/// Throws state_space_too_large when base^L exceeds state_cap.
kaprekar_classification classify_all(const kaprekar_config& cfg,
                                     nat state_cap = default_state_cap);

struct conjecture_result {
  int m = 0;
  bool fixed_point_ok = false;  // length 2m: terminals == { predicted fixed point }
  bool loop_ok = false;         // length 2m+1: terminals == { predicted 2-cycle }
  nat predicted_fixed_point = 0;  // 2^{2m} - 3*2^m + 1
  cycle predicted_loop;  // {2^{2m+1} - 7*2^m + 2^{m-2} + 1, ... + 10*2^{m-2} + 1}

  bool holds() const { return fixed_point_ok && loop_ok; }
};

/// Exhaustively classifies base-2 K_{2,2} at digit lengths 2m and 2m+1 and
/// compares the non-degenerate terminal sets against the closed forms.
/// Requires m >= 3 (precondition_violated below).
conjecture_result conjecture_check(int m, nat state_cap = default_state_cap);

}  // namespace iterseq
