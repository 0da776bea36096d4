#pragma once

#include <stdexcept>
#include <string>

namespace iterseq {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct parse_error : error {
  using error::error;
};
struct value_too_large : error {
  using error::error;
};
struct overflow_error : error {
  using error::error;
};
struct rank_out_of_range : error {
  using error::error;
};
struct state_space_too_large : error {
  using error::error;
};
struct step_cap_exceeded : error {
  using error::error;
};
struct duplicate_elements : error {
  using error::error;
};
struct precondition_violated : error {
  using error::error;
};
struct catalog_inconsistent : error {
  using error::error;
};
struct unsupported_format : error {
  using error::error;
};

}  // namespace iterseq
