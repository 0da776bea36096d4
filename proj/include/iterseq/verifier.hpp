#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "iterseq/catalog.hpp"
#include "iterseq/cycledetect.hpp"
#include "iterseq/digitproc.hpp"

namespace iterseq {

struct verify_options {
  int workers = 1;       // <= 1 means single-threaded
  bool memoize = true;   // per-worker value -> terminal memo
  int max_depth = 0;     // 0 = the process's multiset_depth
  nat step_cap = default_step_cap;
};

struct verification_report {
  std::string process;
  nat cases_total = 0;
  // catalog order; every catalog entry appears, possibly with basin 0
  std::vector<std::pair<std::string, nat>> cases_per_terminal;
  nat max_transient_length = 0;
  std::vector<cycle> unknown_terminals;  // empty iff the theorem is confirmed
  nat unknown_cases = 0;
  std::chrono::milliseconds elapsed{0};

  bool confirmed() const { return unknown_terminals.empty(); }
  nat assigned_total() const;
};

/// Runs the multiset-reduced exhaustive check: for every digit multiset of
/// size 1..multiset_depth, takes the first image via apply_to_multiset,
/// follows the map to its terminal cycle, and matches it against the
/// published catalog. The theorem is confirmed iff no unknown terminal
/// appears. Reports are identical for any worker count and with or without
/// memoization.
verification_report verify_theorem(const digit_process& p,
                                   const verify_options& opts = {});

struct coverage_report {
  bool trap_holds = false;        // depth * weight[9] < threshold, exactly
  bool depth_sufficient = false;  // depth >= digit count of threshold - 1
  bool ok() const { return trap_holds && depth_sufficient; }
};

/// Numeric confirmation of the reduction's premises for the process's own
/// threshold and depth.
coverage_report coverage_argument_check(const digit_process& p);

/// Same premises against a hypothetical threshold/depth pair.
coverage_report coverage_argument_check(const digit_process& p, nat threshold,
                                        int depth);

}  // namespace iterseq
