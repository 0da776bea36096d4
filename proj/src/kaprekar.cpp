#include "iterseq/kaprekar.hpp"

#include <algorithm>
#include <set>

namespace iterseq {

namespace {

void require_config(const kaprekar_config& cfg) {
  if (cfg.base < 2) throw precondition_violated("base must be >= 2");
  if (cfg.length < 2) throw precondition_violated("length must be >= 2");
  if (cfg.u < 1 || cfg.v < 1) throw precondition_violated("u and v must be >= 1");
}

}  // namespace

nat state_count(const kaprekar_config& cfg) {
  require_config(cfg);
  unsigned __int128 n = 1;
  for (int i = 0; i < cfg.length; ++i) {
    n *= static_cast<unsigned>(cfg.base);
    if (n > (static_cast<unsigned __int128>(1) << 63))
      throw value_too_large("base^length does not fit exact 64-bit arithmetic");
  }
  return static_cast<nat>(n);
}

nat distinct_perm_count(const digits& d) {
  // product of binomials: place each digit group into the growing prefix
  std::array<int, 64> count{};
  if (d.base > 64) throw precondition_violated("base too large");
  for (int digit : d.values) {
    if (digit < 0 || digit >= d.base)
      throw precondition_violated("digit out of range for base");
    ++count[static_cast<std::size_t>(digit)];
  }
  unsigned __int128 result = 1;
  int placed = 0;
  for (int c = 0; c < d.base; ++c) {
    for (int i = 1; i <= count[static_cast<std::size_t>(c)]; ++i) {
      result = result * static_cast<unsigned>(++placed) / static_cast<unsigned>(i);
    }
  }
  return static_cast<nat>(result);
}

nat alpha(const digits& d, nat u) {
  if (u < 1) throw precondition_violated("rank must be >= 1");
  if (u > distinct_perm_count(d))
    throw rank_out_of_range("alpha rank " + std::to_string(u) +
                            " exceeds arrangement count");
  digits arrangement = d;
  std::sort(arrangement.values.begin(), arrangement.values.end(),
            std::greater<int>());
  for (nat i = 1; i < u; ++i)
    std::prev_permutation(arrangement.values.begin(), arrangement.values.end());
  return compose(arrangement);
}

nat beta(const digits& d, nat v) {
  if (v < 1) throw precondition_violated("rank must be >= 1");
  if (v > distinct_perm_count(d))
    throw rank_out_of_range("beta rank " + std::to_string(v) +
                            " exceeds arrangement count");
  digits arrangement = d;
  std::sort(arrangement.values.begin(), arrangement.values.end());
  for (nat i = 1; i < v; ++i)
    std::next_permutation(arrangement.values.begin(), arrangement.values.end());
  return compose(arrangement);
}

std::optional<nat> kaprekar_step(nat n, const kaprekar_config& cfg) {
  require_config(cfg);
  const digits d = decompose(n, cfg.base, cfg.length);
  if (distinct_perm_count(d) < std::max(cfg.u, cfg.v)) return std::nullopt;
  const nat largest = alpha(d, cfg.u);
  const nat smallest = beta(d, cfg.v);
  if (largest < smallest) return std::nullopt;
  return largest - smallest;
}

nat kaprekar_classification::assigned_total() const {
  nat total = 0;
  for (const auto& [key, size] : basin_sizes) total += size;
  return total;
}

kaprekar_classification classify_all(const kaprekar_config& cfg, nat state_cap) {
  const nat states = state_count(cfg);
  if (states > state_cap)
    throw state_space_too_large("state space " + std::to_string(states) +
                                " exceeds cap " + std::to_string(state_cap));

  constexpr std::int32_t unassigned = -1;
  constexpr std::int32_t in_progress = -2;
  constexpr std::int32_t degenerate = -3;
  std::vector<std::int32_t> assignment(states, unassigned);
  std::vector<cycle> terminals;  // id = index
  std::vector<nat> path;

  for (nat start = 0; start < states; ++start) {
    if (assignment[start] != unassigned) continue;
    path.clear();
    nat x = start;
    std::int32_t terminal = degenerate;
    while (true) {
      const std::int32_t seen = assignment[x];
      if (seen == in_progress) {
        // closed a new cycle inside the current path
        auto entry = std::find(path.begin(), path.end(), x);
        terminals.push_back(canonical(std::vector<nat>(entry, path.end())));
        terminal = static_cast<std::int32_t>(terminals.size()) - 1;
        break;
      }
      if (seen != unassigned) {
        terminal = seen;
        break;
      }
      assignment[x] = in_progress;
      path.push_back(x);
      const std::optional<nat> next = kaprekar_step(x, cfg);
      // the all-zeros state never leaves itself; fold it into the
      // degenerate bucket instead of reporting a trivial terminal
      if (!next || *next == 0) {
        terminal = degenerate;
        break;
      }
      x = *next;
    }
    for (nat value : path) assignment[value] = terminal;
  }

  kaprekar_classification result;
  result.config = cfg;
  std::vector<nat> terminal_key(terminals.size());
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    terminal_key[i] = terminals[i].min();
    if (terminals[i].size() == 1)
      result.fixed_points.push_back(terminals[i].min());
    else
      result.cycles.push_back(terminals[i]);
  }
  std::sort(result.fixed_points.begin(), result.fixed_points.end());
  std::sort(result.cycles.begin(), result.cycles.end());

  std::set<nat> canonical_keys;
  const nat canonical_floor =
      states / static_cast<nat>(cfg.base);  // base^(L-1): no leading zero
  for (nat start = 0; start < states; ++start) {
    const std::int32_t t = assignment[start];
    if (t == degenerate) {
      result.degenerate_starts.push_back(start);
    } else {
      ++result.basin_sizes[terminal_key[static_cast<std::size_t>(t)]];
      if (start >= canonical_floor)
        canonical_keys.insert(terminal_key[static_cast<std::size_t>(t)]);
    }
  }
  result.canonical_terminals.assign(canonical_keys.begin(), canonical_keys.end());
  return result;
}

conjecture_result conjecture_check(int m, nat state_cap) {
  if (m < 3) throw precondition_violated("conjecture is stated for m >= 3");
  conjecture_result result;
  result.m = m;
  const nat p2m = nat{1} << (2 * m);
  const nat pm = nat{1} << m;
  result.predicted_fixed_point = p2m - 3 * pm + 1;
  const nat odd_base = (nat{1} << (2 * m + 1)) - 7 * pm;
  result.predicted_loop =
      canonical({odd_base + (pm >> 2) + 1, odd_base + 10 * (pm >> 2) + 1});

  const auto even = classify_all({2, 2 * m, 2, 2}, state_cap);
  result.fixed_point_ok = even.fixed_points ==
                              std::vector<nat>{result.predicted_fixed_point} &&
                          even.cycles.empty();

  const auto odd = classify_all({2, 2 * m + 1, 2, 2}, state_cap);
  result.loop_ok = odd.fixed_points.empty() &&
                   odd.cycles == std::vector<cycle>{result.predicted_loop};
  return result;
}

}  // namespace iterseq
