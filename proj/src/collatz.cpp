#include "iterseq/collatz.hpp"

#include <limits>

namespace iterseq {

namespace {
// largest odd x with 3x+1 still representable
constexpr nat max_safe_odd = (std::numeric_limits<nat>::max() - 1) / 3;
}  // namespace

nat collatz_step(nat x) {
  if (x < 1) throw precondition_violated("collatz map is defined on x >= 1");
  if (x % 2 == 0) return x / 2;
  if (x > max_safe_odd)
    throw overflow_error("3x+1 exceeds 64 bits at x = " + std::to_string(x));
  return 3 * x + 1;
}

collatz_trajectory_result collatz_trajectory(nat n, nat max_steps) {
  if (n < 1) throw precondition_violated("start must be >= 1");
  collatz_trajectory_result result;
  result.start = n;
  result.values.push_back(n);
  nat x = n;
  while (x != 1 && result.steps < max_steps) {
    x = collatz_step(x);
    result.values.push_back(x);
    ++result.steps;
  }
  result.reached_one = (x == 1);
  return result;
}

collatz_range_report collatz_verify_range(nat upper) {
  if (upper < 1) throw precondition_violated("upper must be >= 1");
  collatz_range_report report;
  report.upper = upper;
  // steps-to-one for every verified start below the frontier
  std::vector<std::uint32_t> steps_to_one(upper + 1, 0);
  for (nat n = 2; n <= upper; ++n) {
    nat x = n;
    nat local = 0;
    if (n > report.max_excursion) {
      report.max_excursion = n;
      report.max_excursion_start = n;
    }
    while (x >= n) {
      try {
        x = collatz_step(x);
      } catch (const overflow_error&) {
        throw overflow_error("trajectory from " + std::to_string(n) +
                             " exceeds 64 bits");
      }
      ++local;
      if (x > report.max_excursion) {
        report.max_excursion = x;
        report.max_excursion_start = n;
      }
    }
    const nat total = local + steps_to_one[x];
    steps_to_one[n] = static_cast<std::uint32_t>(total);
    if (total > report.max_steps) {
      report.max_steps = total;
      report.max_steps_start = n;
    }
  }
  report.all_reached_one = true;  // the loop only exits by descending to a
                                  // verified value; overflow throws
  return report;
}

}  // namespace iterseq
