#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "iterseq/digits.hpp"

namespace iterseq {

/// Nonempty list of distinct naturals, rotated so the minimum comes first.
/// Under the owning map f, f(values[i]) = values[(i+1) mod size].
struct cycle {
  std::vector<nat> values;

  nat min() const { return values.front(); }
  std::size_t size() const { return values.size(); }
  bool operator==(const cycle&) const = default;
  bool operator<(const cycle& rhs) const { return values < rhs.values; }
};

/// Rotates values so the minimum element is first.
/// Throws duplicate_elements if the values are not pairwise distinct.
cycle canonical(std::vector<nat> values);

/// True iff f maps each element of c to its cyclic successor.
template <typename F>
bool verify_cycle(F&& f, const cycle& c) {
  const auto n = c.values.size();
  if (n == 0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (f(c.values[i]) != c.values[(i + 1) % n]) return false;
  }
  return true;
}

struct trajectory_result {
  nat start = 0;
  std::vector<nat> transient;  // starts with `start` unless start is on the cycle
  cycle terminal;

  nat transient_length() const { return transient.size(); }
};

inline constexpr nat default_step_cap = 1'000'000;

/// Iterates f from start, recording visited values, until a value repeats.
/// The repeated tail is the terminal cycle (canonical rotation); everything
/// before it is the transient. Fixed points come back as cycles of length 1.
/// Throws step_cap_exceeded after step_cap applications without a repeat.
template <typename F>
trajectory_result find_terminal(F&& f, nat start, nat step_cap = default_step_cap) {
  std::vector<nat> order;
  std::unordered_map<nat, std::size_t> index;
  nat x = start;
  while (!index.contains(x)) {
    if (order.size() >= step_cap) {
      throw step_cap_exceeded("find_terminal: no repeat within " +
                              std::to_string(step_cap) + " steps from " +
                              std::to_string(start));
    }
    index.emplace(x, order.size());
    order.push_back(x);
    x = f(x);
  }
  const auto entry = order.begin() + static_cast<std::ptrdiff_t>(index.at(x));
  trajectory_result result;
  result.start = start;
  result.transient.assign(order.begin(), entry);
  result.terminal = canonical(std::vector<nat>(entry, order.end()));
  return result;
}

}  // namespace iterseq
