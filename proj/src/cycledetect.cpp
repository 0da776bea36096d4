#include "iterseq/cycledetect.hpp"

#include <algorithm>

namespace iterseq {

cycle canonical(std::vector<nat> values) {
  if (values.empty()) throw precondition_violated("cycle must be nonempty");
  auto lowest = std::min_element(values.begin(), values.end());
  std::rotate(values.begin(), lowest, values.end());
  auto sorted = values;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw duplicate_elements("cycle values must be distinct");
  return cycle{std::move(values)};
}

}  // namespace iterseq
