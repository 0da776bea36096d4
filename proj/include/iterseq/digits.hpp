#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iterseq/error.hpp"

namespace iterseq {

using nat = std::uint64_t;

/// Fixed-length base-b digit string, most significant digit first.
/// Leading zeros are part of the representation and are retained.
struct digits {
  int base = 10;
  std::vector<int> values;  // each in [0, base)

  int length() const { return static_cast<int>(values.size()); }
  bool operator==(const digits&) const = default;
};

/// Parses a nonnegative base-10 integer. Throws parse_error on anything that
/// is not a plain digit string, value_too_large past 64 bits.
nat parse_decimal(std::string_view text);

/// Digit decomposition of n in the given base. With pad_length the result is
/// zero-padded on the left to exactly that many digits (value_too_large if n
/// does not fit); otherwise the minimal length is used (at least 1).
digits decompose(nat n, int base, std::optional<int> pad_length = std::nullopt);
digits decompose(std::string_view decimal, int base,
                 std::optional<int> pad_length = std::nullopt);

/// Place-value composition; exact inverse of decompose for in-range values.
nat compose(const digits& d);

/// Multiset of digit values over the alphabet {1,...,9}. Zeros are folded
/// into ones at construction time (0!=1! and 0^0=1^1, so the digit processes
/// cannot tell them apart); the key 0 never occurs.
struct digit_multiset {
  std::array<int, 10> count{};  // count[0] is always 0

  int size() const;
  bool operator==(const digit_multiset&) const = default;
};

/// Digit multiset of n with 0 replaced by 1.
digit_multiset normalized_multiset(nat n);
digit_multiset normalized_multiset(std::string_view decimal);

/// Streams every size-r multiset over {1,...,9} exactly once, ordered as
/// nondecreasing digit sequences in lexicographic order: (1,1,..,1),
/// (1,1,..,2), ..., (9,9,..,9). Independent instances restart from the top.
class multiset_enumerator {
 public:
  explicit multiset_enumerator(int r);

  /// Next multiset, or nullopt when exhausted.
  std::optional<digit_multiset> next();

 private:
  std::vector<int> seq_;  // current nondecreasing digit sequence
  bool done_ = false;
};

/// All size-r multisets in enumeration order. binom(r+8, r) entries.
std::vector<digit_multiset> all_multisets(int r);

/// Exact binomial coefficient; value_too_large if it exceeds 64 bits.
nat binomial(nat n, nat k);

/// Number of nonempty multisets of size up to r_max: sum_{r=1..r_max} binom(r+8, r).
nat multiset_count(int r_max);

/// Smallest natural whose zero-normalized digit multiset equals m
/// (its digits sorted ascending).
nat min_value_of_multiset(const digit_multiset& m);

}  // namespace iterseq
