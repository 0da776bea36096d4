#include "iterseq/digits.hpp"

#include <algorithm>
#include <numeric>

namespace iterseq {

namespace {

void require_base(int base) {
  if (base < 2) throw precondition_violated("base must be >= 2");
}

}  // namespace

nat parse_decimal(std::string_view text) {
  if (text.empty()) throw parse_error("empty number");
  unsigned __int128 v = 0;
  for (char c : text) {
    if (c < '0' || c > '9')
      throw parse_error("not a decimal digit string: '" + std::string(text) + "'");
    v = v * 10 + static_cast<unsigned>(c - '0');
    if (v > UINT64_MAX)
      throw value_too_large("value exceeds 64 bits: '" + std::string(text) + "'");
  }
  return static_cast<nat>(v);
}

digits decompose(nat n, int base, std::optional<int> pad_length) {
  require_base(base);
  if (pad_length && *pad_length < 1)
    throw precondition_violated("pad length must be >= 1");
  std::vector<int> reversed;
  nat x = n;
  do {
    reversed.push_back(static_cast<int>(x % static_cast<nat>(base)));
    x /= static_cast<nat>(base);
  } while (x > 0);
  if (pad_length) {
    if (static_cast<int>(reversed.size()) > *pad_length)
      throw value_too_large(std::to_string(n) + " does not fit in " +
                            std::to_string(*pad_length) + " base-" +
                            std::to_string(base) + " digits");
    reversed.resize(static_cast<std::size_t>(*pad_length), 0);
  }
  std::reverse(reversed.begin(), reversed.end());
  return digits{base, std::move(reversed)};
}

digits decompose(std::string_view decimal, int base, std::optional<int> pad_length) {
  return decompose(parse_decimal(decimal), base, pad_length);
}

nat compose(const digits& d) {
  require_base(d.base);
  unsigned __int128 v = 0;
  for (int digit : d.values) {
    if (digit < 0 || digit >= d.base)
      throw precondition_violated("digit out of range for base");
    v = v * static_cast<unsigned>(d.base) + static_cast<unsigned>(digit);
    if (v > UINT64_MAX) throw value_too_large("composed value exceeds 64 bits");
  }
  return static_cast<nat>(v);
}

int digit_multiset::size() const {
  return std::accumulate(count.begin(), count.end(), 0);
}

namespace {

digit_multiset normalize(const std::array<int, 10>& raw) {
  digit_multiset m;
  for (int d = 1; d <= 9; ++d) m.count[d] = raw[d];
  m.count[1] += raw[0];  // 0 folds into 1
  return m;
}

}  // namespace

digit_multiset normalized_multiset(nat n) {
  std::array<int, 10> raw{};
  do {
    ++raw[n % 10];
    n /= 10;
  } while (n > 0);
  return normalize(raw);
}

digit_multiset normalized_multiset(std::string_view decimal) {
  if (decimal.empty()) throw parse_error("empty number");
  std::array<int, 10> raw{};
  for (char c : decimal) {
    if (c < '0' || c > '9')
      throw parse_error("not a decimal digit string: '" + std::string(decimal) + "'");
    ++raw[c - '0'];
  }
  return normalize(raw);
}

multiset_enumerator::multiset_enumerator(int r) {
  if (r < 1) throw precondition_violated("multiset size must be >= 1");
  seq_.assign(static_cast<std::size_t>(r), 1);
}

std::optional<digit_multiset> multiset_enumerator::next() {
  if (done_) return std::nullopt;
  digit_multiset m;
  for (int d : seq_) ++m.count[d];
  // advance: bump the rightmost digit below 9, level everything after it
  int i = static_cast<int>(seq_.size()) - 1;
  while (i >= 0 && seq_[static_cast<std::size_t>(i)] == 9) --i;
  if (i < 0) {
    done_ = true;
  } else {
    const int d = ++seq_[static_cast<std::size_t>(i)];
    std::fill(seq_.begin() + i + 1, seq_.end(), d);
  }
  return m;
}

std::vector<digit_multiset> all_multisets(int r) {
  std::vector<digit_multiset> out;
  multiset_enumerator en(r);
  while (auto m = en.next()) out.push_back(*m);
  return out;
}

nat binomial(nat n, nat k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 result = 1;
  for (nat i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;  // integral at every step
    if (result > UINT64_MAX) throw value_too_large("binomial exceeds 64 bits");
  }
  return static_cast<nat>(result);
}

nat multiset_count(int r_max) {
  if (r_max < 1) throw precondition_violated("r_max must be >= 1");
  nat total = 0;
  for (int r = 1; r <= r_max; ++r)
    total += binomial(static_cast<nat>(r) + 8, static_cast<nat>(r));
  return total;
}

nat min_value_of_multiset(const digit_multiset& m) {
  if (m.size() < 1) throw precondition_violated("multiset must be nonempty");
  unsigned __int128 v = 0;
  for (int d = 1; d <= 9; ++d) {
    for (int i = 0; i < m.count[d]; ++i) {
      v = v * 10 + static_cast<unsigned>(d);
      if (v > UINT64_MAX)
        throw value_too_large("multiset representative exceeds 64 bits");
    }
  }
  return static_cast<nat>(v);
}

}  // namespace iterseq
