#pragma once

#include "feasreg/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace feasreg {

/// A permutation of {1,...,n} in one-line notation. Positions are 0-based in
/// the C++ API; values are 1-based as in the usual notation.
class Permutation {
 public:
  using value_type = int;

  Permutation() = default;
  /// Validates that `values` is a bijection onto {1,...,n}.
  explicit Permutation(std::vector<value_type> values);
  Permutation(std::initializer_list<value_type> values);

  /// Increasing permutation 1 2 ... n.
  static Permutation identity(std::size_t n);
  /// Decreasing permutation n ... 2 1.
  static Permutation decreasing(std::size_t n);
  /// Compact digit form such as "2143"; only for sizes up to 9.
  static Permutation from_digits(std::string_view digits);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  value_type operator[](std::size_t i) const { return values_[i]; }
  value_type at(std::size_t i) const { return values_.at(i); }
  std::span<const value_type> values() const noexcept { return values_; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  Permutation inverse() const;
  Permutation reverse() const;
  Permutation complement() const;

  /// Space separated one-line form, e.g. "2 4 1 3".
  std::string to_string() const;
  /// Digit string form ("2413"); falls back to to_string() beyond size 9.
  std::string compact() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Shorter permutations first, then lexicographic one-line order.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);

 private:
  struct Unchecked {};
  Permutation(std::vector<value_type> values, Unchecked) : values_(std::move(values)) {}
  friend Permutation standardize_unchecked(std::vector<value_type> values);

  std::vector<value_type> values_;
};

/// A finite set of forbidden patterns. Empty means the unrestricted class.
using PatternSet = std::vector<Permutation>;

/// Rank-preserving relabelling of distinct numbers onto 1..n.
/// Throws InvalidArgument on duplicate values.
Permutation standardize(std::span<const long long> values);
Permutation standardize(std::span<const int> values);

/// Pattern induced by the given (strictly increasing, 0-based) positions.
Permutation pattern_at(const Permutation& sigma, std::span<const std::size_t> positions);
/// Pattern induced by the contiguous window [first, first + length).
Permutation window_pattern(const Permutation& sigma, std::size_t first, std::size_t length);
/// Pattern of the first k entries.
Permutation begin_pattern(const Permutation& sigma, std::size_t k);
/// Pattern of the last k entries.
Permutation end_pattern(const Permutation& sigma, std::size_t k);

/// True iff some subsequence of sigma is order-isomorphic to tau.
bool contains(const Permutation& sigma, const Permutation& tau);
inline bool avoids(const Permutation& sigma, const Permutation& tau) { return !contains(sigma, tau); }
bool avoids_all(const Permutation& sigma, const PatternSet& patterns);
/// True iff sigma contains tau through an occurrence that uses sigma's last entry.
bool contains_through_last(const Permutation& sigma, const Permutation& tau);

Permutation direct_sum(const Permutation& tau, const Permutation& sigma);
Permutation skew_sum(const Permutation& tau, const Permutation& sigma);
/// Direct sum of `copies` copies of sigma. Throws for copies < 1.
Permutation repeat_sum(std::size_t copies, const Permutation& sigma);
/// Skew sum of `copies` copies of sigma. Throws for copies < 1.
Permutation repeat_skew_sum(std::size_t copies, const Permutation& sigma);
bool is_sum_decomposable(const Permutation& sigma);
bool is_skew_decomposable(const Permutation& sigma);

/// sigma with a new final entry of value `level` (1 <= level <= |sigma|+1);
/// entries >= level are shifted up by one.
Permutation append(const Permutation& sigma, int level);

/// Number of index sets inducing pi.
std::uint64_t occurrences(const Permutation& pi, const Permutation& sigma);
/// Number of windows inducing pi.
std::uint64_t consecutive_occurrences(const Permutation& pi, const Permutation& sigma);

/// Consecutive-pattern densities c-occ(pi, sigma) / |sigma| over a fixed
/// coordinate order of size-k patterns.
struct DensityVector {
  std::vector<Permutation> order;
  RatVector entries;

  const Rational& operator[](const Permutation& pi) const;
  Rational sum() const;
};

/// All permutations of size k in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t k);

/// Density vector of sigma over the given coordinate order; patterns of
/// sigma missing from `order` are an InvalidArgument.
DensityVector density_vector(const Permutation& sigma, std::span<const Permutation> order);
/// Density vector over all of S_k in lexicographic order.
DensityVector density_vector(const Permutation& sigma, std::size_t k);

/// Parses "2 4 1 3", "[2,4,1,3]" or compact "2413" (size <= 9).
Permutation parse_permutation(std::string_view text);
/// Parses a comma separated list of patterns, e.g. "312,4321".
PatternSet parse_pattern_set(std::string_view text);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace feasreg
