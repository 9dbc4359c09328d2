#pragma once

#include "feasreg/permutation.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace feasreg {

struct EnumerationLimits {
  /// Largest number of permutations held at any single size.
  std::size_t max_permutations = 5'000'000;
};

/// Av_m(B) in lexicographic order. Generated by appending final values to
/// Av_{m-1}(B) and testing only occurrences through the new entry.
/// Throws CapExceeded rather than returning a partial list.
std::vector<Permutation> enumerate_avoiders(std::size_t m, const PatternSet& patterns,
                                            const EnumerationLimits& limits = {});

/// Number of standard Young tableaux of the given shape (hook length formula).
Integer standard_tableaux(const std::vector<int>& shape);

/// Partitions of k into at most `max_parts` parts, each weakly decreasing.
std::vector<std::vector<int>> partitions(int k, int max_parts);

/// |Av_k(n...1)| as the sum of f_lambda^2 over partitions of k with at most
/// n-1 parts.
Integer count_avoiders_rsk(int n, int k);

}  // namespace feasreg
