#pragma once

#include <vector>

#include "iterseq/digits.hpp"

namespace iterseq {

/// One application of the Collatz map: x/2 for even x, 3x+1 for odd x.
/// Throws overflow_error instead of wrapping when 3x+1 exceeds 64 bits.
nat collatz_step(nat x);

inline constexpr nat collatz_default_max_steps = 100'000;

struct collatz_trajectory_result {
  nat start = 1;
  std::vector<nat> values;  // begins with start
  bool reached_one = false;
  nat steps = 0;  // map applications performed
};

/// Iterates the map from n until the value 1 or max_steps applications.
collatz_trajectory_result collatz_trajectory(
    nat n, nat max_steps = collatz_default_max_steps);

struct collatz_range_report {
  nat upper = 1;
  bool all_reached_one = false;
  nat max_steps = 0;  // largest number of map applications over the range
  nat max_steps_start = 1;
  nat max_excursion = 1;  // largest value seen in any trajectory
  nat max_excursion_start = 1;
};

/// Confirms that every 1 <= n <= upper reaches 1, memoizing step counts below
/// the scan frontier. No step cap; an overflow aborts with the offending n.
collatz_range_report collatz_verify_range(nat upper);

}  // namespace iterseq
