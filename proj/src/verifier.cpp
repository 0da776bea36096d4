#include "iterseq/verifier.hpp"

#include <algorithm>
#include <map>
#include <thread>
#include <unordered_map>

namespace iterseq {

nat verification_report::assigned_total() const {
  nat total = unknown_cases;
  for (const auto& [name, count] : cases_per_terminal) total += count;
  return total;
}

namespace {

struct case_outcome {
  std::int32_t terminal = -1;  // catalog index, or >= catalog size for unknown
  std::uint32_t transient = 0;
};

// Walks values to their terminal cycle; memoizes (terminal, distance to the
// cycle) per value so shared tails are followed once. Results are a pure
// function of the value, so memoization cannot change any outcome.
class terminal_walker {
 public:
  terminal_walker(const digit_process& p,
                  const std::map<std::vector<nat>, std::int32_t>& catalog_index,
                  bool memoize, nat step_cap)
      : process_(p),
        catalog_index_(catalog_index),
        memoize_(memoize),
        step_cap_(step_cap) {}

  case_outcome walk(nat start) {
    if (!memoize_) {
      const auto result = find_terminal(
          [this](nat x) { return apply_value(process_, x); }, start, step_cap_);
      return {terminal_id(result.terminal),
              static_cast<std::uint32_t>(result.transient_length())};
    }
    path_.clear();
    position_.clear();
    nat x = start;
    auto hit = memo_.find(x);
    while (hit == memo_.end() && !position_.contains(x)) {
      if (path_.size() >= step_cap_)
        throw step_cap_exceeded("no repeat within " + std::to_string(step_cap_) +
                                " steps from " + std::to_string(start));
      position_.emplace(x, path_.size());
      path_.push_back(x);
      x = apply_value(process_, x);
      hit = memo_.find(x);
    }
    if (hit != memo_.end()) {
      auto [terminal, dist] = hit->second;
      for (auto it = path_.rbegin(); it != path_.rend(); ++it)
        memo_.emplace(*it, std::pair{terminal, ++dist});
    } else {
      const std::size_t entry = position_.at(x);
      const std::int32_t terminal =
          terminal_id(canonical(std::vector<nat>(path_.begin() + entry, path_.end())));
      for (std::size_t j = 0; j < path_.size(); ++j)
        memo_.emplace(path_[j],
                      std::pair{terminal, j >= entry
                                              ? std::uint32_t{0}
                                              : static_cast<std::uint32_t>(entry - j)});
    }
    const auto [terminal, dist] = memo_.at(start);
    return {terminal, dist};
  }

  const std::vector<cycle>& unknowns() const { return unknowns_; }

 private:
  std::int32_t terminal_id(const cycle& c) {
    if (auto it = catalog_index_.find(c.values); it != catalog_index_.end())
      return it->second;
    // not in the published catalog: a counterexample to the theorem
    for (std::size_t i = 0; i < unknowns_.size(); ++i)
      if (unknowns_[i] == c)
        return static_cast<std::int32_t>(catalog_index_.size() + i);
    unknowns_.push_back(c);
    return static_cast<std::int32_t>(catalog_index_.size() + unknowns_.size() - 1);
  }

  const digit_process& process_;
  const std::map<std::vector<nat>, std::int32_t>& catalog_index_;
  bool memoize_;
  nat step_cap_;
  std::unordered_map<nat, std::pair<std::int32_t, std::uint32_t>> memo_;
  std::unordered_map<nat, std::size_t> position_;
  std::vector<nat> path_;
  std::vector<cycle> unknowns_;
};

}  // namespace

verification_report verify_theorem(const digit_process& p,
                                   const verify_options& opts) {
  const auto started = std::chrono::steady_clock::now();
  validate_catalog(p);
  const auto& catalog = terminal_catalog(p);
  std::map<std::vector<nat>, std::int32_t> catalog_index;
  for (std::size_t i = 0; i < catalog.size(); ++i)
    catalog_index.emplace(catalog[i].values.values, static_cast<std::int32_t>(i));

  const int depth = opts.max_depth > 0 ? opts.max_depth : p.multiset_depth;
  std::vector<digit_multiset> cases;
  for (int r = 1; r <= depth; ++r) {
    auto block = all_multisets(r);
    cases.insert(cases.end(), block.begin(), block.end());
  }

  std::vector<case_outcome> outcomes(cases.size());
  std::vector<std::vector<cycle>> worker_unknowns;

  const int workers = std::max(1, opts.workers);
  auto run_range = [&](std::size_t begin, std::size_t end,
                       std::vector<cycle>& unknowns_out) {
    terminal_walker walker(p, catalog_index, opts.memoize, opts.step_cap);
    for (std::size_t i = begin; i < end; ++i)
      outcomes[i] = walker.walk(apply_to_multiset(p, cases[i]));
    unknowns_out = walker.unknowns();
  };

  worker_unknowns.resize(static_cast<std::size_t>(workers));
  if (workers == 1) {
    run_range(0, cases.size(), worker_unknowns[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      const std::size_t begin = cases.size() * static_cast<std::size_t>(w) /
                                static_cast<std::size_t>(workers);
      const std::size_t end = cases.size() * static_cast<std::size_t>(w + 1) /
                              static_cast<std::size_t>(workers);
      pool.emplace_back(run_range, begin, end,
                        std::ref(worker_unknowns[static_cast<std::size_t>(w)]));
    }
    for (auto& t : pool) t.join();
  }

  verification_report report;
  report.process = p.name;
  report.cases_total = cases.size();
  std::vector<nat> per_terminal(catalog.size(), 0);
  for (const auto& outcome : outcomes) {
    if (outcome.terminal < static_cast<std::int32_t>(catalog.size()))
      ++per_terminal[static_cast<std::size_t>(outcome.terminal)];
    else
      ++report.unknown_cases;
    report.max_transient_length =
        std::max<nat>(report.max_transient_length, outcome.transient);
  }
  for (std::size_t i = 0; i < catalog.size(); ++i)
    report.cases_per_terminal.emplace_back(catalog[i].name, per_terminal[i]);

  std::vector<cycle> unknowns;
  for (const auto& block : worker_unknowns)
    for (const auto& c : block)
      if (std::find(unknowns.begin(), unknowns.end(), c) == unknowns.end())
        unknowns.push_back(c);
  std::sort(unknowns.begin(), unknowns.end());
  report.unknown_terminals = std::move(unknowns);

  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  return report;
}

coverage_report coverage_argument_check(const digit_process& p, nat threshold,
                                        int depth) {
  coverage_report report;
  // worst image of any value below the threshold: every digit a 9
  report.trap_holds = static_cast<nat>(depth) * p.weight[9] < threshold;
  report.depth_sufficient =
      static_cast<int>(std::to_string(threshold - 1).size()) <= depth;
  return report;
}

coverage_report coverage_argument_check(const digit_process& p) {
  return coverage_argument_check(p, p.descent_threshold, p.multiset_depth);
}

}  // namespace iterseq
