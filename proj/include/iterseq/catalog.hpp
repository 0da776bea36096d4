#pragma once

#include <string>
#include <vector>

#include "iterseq/cycledetect.hpp"
#include "iterseq/digitproc.hpp"

namespace iterseq {

/// A named terminal of a digit process: a fixed point (size 1) or a loop.
struct catalog_entry {
  std::string name;
  cycle values;  // canonical rotation
};

/// The published terminals of the process: dfp has fixA, fixB, fixC, fixD,
/// loop2A, loop2B, loop3; dpp has fixA, fixB, loop2, loop3, loop8, loop11,
/// loop40, loop97. Embedded static data.
const std::vector<catalog_entry>& terminal_catalog(const digit_process& p);

/// Checks every catalog entry elementwise under the process map and that the
/// entries are pairwise disjoint. Throws catalog_inconsistent on any failure,
/// so a transcription error is a hard stop rather than a wrong baseline.
void validate_catalog(const digit_process& p);

/// Total number of elementwise successor checks validate_catalog performs.
nat catalog_value_count(const digit_process& p);

}  // namespace iterseq
