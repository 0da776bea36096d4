#include "iterseq/digitproc.hpp"

#include <algorithm>

namespace iterseq {

namespace {

constexpr std::array<nat, 10> factorial_table = {
    1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880};
constexpr std::array<nat, 10> self_power_table = {
    1, 1, 4, 27, 256, 3125, 46656, 823543, 16777216, 387420489};  // 0^0 = 1

const digit_process dfp_process = {
    process_kind::dfp, "dfp", factorial_table,
    10'000'000ULL,     7,     3628800ULL /* 10! */};
const digit_process dpp_process = {
    process_kind::dpp, "dpp",          self_power_table,
    10'000'000'000ULL, 10,             387420489ULL /* 9^9 */};

wide_int pow10_minus_1(int m) {
  wide_int p = 1;
  for (int i = 0; i < m; ++i) p *= 10;
  return p - 1;
}

std::string_view strip_leading_zeros(std::string_view s) {
  const auto pos = s.find_first_not_of('0');
  return pos == std::string_view::npos ? s.substr(s.size() - 1) : s.substr(pos);
}

}  // namespace

const digit_process& dfp() { return dfp_process; }
const digit_process& dpp() { return dpp_process; }

const digit_process& process_for(process_kind kind) {
  return kind == process_kind::dfp ? dfp_process : dpp_process;
}

nat apply_decimal(const digit_process& p, std::string_view decimal) {
  if (decimal.empty()) throw parse_error("empty number");
  nat sum = 0;
  for (char c : decimal) {
    if (c < '0' || c > '9')
      throw parse_error("not a decimal digit string: '" + std::string(decimal) + "'");
    sum += p.weight[static_cast<std::size_t>(c - '0')];
  }
  return sum;
}

nat apply_value(const digit_process& p, nat n) {
  nat sum = 0;
  do {
    sum += p.weight[n % 10];
    n /= 10;
  } while (n > 0);
  return sum;
}

nat apply_to_multiset(const digit_process& p, const digit_multiset& m) {
  nat sum = 0;
  for (int d = 1; d <= 9; ++d)
    sum += static_cast<nat>(m.count[d]) * p.weight[static_cast<std::size_t>(d)];
  return sum;
}

descent_bound_pair descent_bound(const digit_process& p, int m) {
  if (m < 1) throw precondition_violated("digit count must be >= 1");
  return {pow10_minus_1(m), wide_int(10) * m * p.weight[9]};
}

bool descent_bound_holds(const digit_process& p, int m) {
  const auto [lhs, rhs] = descent_bound(p, m);
  return lhs > rhs;
}

bool ratio_strictly_increases(nat scale, int m) {
  if (m < 1) throw precondition_violated("m must be >= 1");
  const wide_int s(scale);
  return pow10_minus_1(m) * (m + 1) * s < pow10_minus_1(m + 1) * m * s;
}

int compare_decimal(std::string_view a, std::string_view b) {
  const std::string_view x = strip_leading_zeros(a);
  const std::string_view y = strip_leading_zeros(b);
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  const int c = x.compare(y);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

bool check_descent(const digit_process& p, std::string_view decimal) {
  const nat image = apply_decimal(p, decimal);  // also validates the digit string
  const std::string threshold = std::to_string(p.descent_threshold);
  if (compare_decimal(decimal, threshold) < 0)
    throw precondition_violated("descent is only guaranteed from " + threshold +
                                " upward");
  return compare_decimal(std::to_string(image), decimal) < 0;
}

}  // namespace iterseq
