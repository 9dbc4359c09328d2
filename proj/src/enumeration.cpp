#include "feasreg/enumeration.hpp"

#include "feasreg/errors.hpp"

#include <algorithm>

namespace feasreg {

std::vector<Permutation> enumerate_avoiders(std::size_t m, const PatternSet& patterns,
                                            const EnumerationLimits& limits) {
  if (m < 1) throw InvalidArgument("enumerate_avoiders: size must be at least 1");
  std::vector<Permutation> level{Permutation::identity(1)};
  if (!avoids_all(level.front(), patterns)) level.clear();
  for (std::size_t size = 2; size <= m; ++size) {
    std::vector<Permutation> next;
    for (const auto& sigma : level) {
      for (int v = 1; v <= static_cast<int>(size); ++v) {
        Permutation candidate = append(sigma, v);
        bool ok = std::none_of(patterns.begin(), patterns.end(),
                               [&](const Permutation& b) { return contains_through_last(candidate, b); });
        if (!ok) continue;
        if (next.size() >= limits.max_permutations)
          throw CapExceeded("enumerate_avoiders: too many permutations of size " + std::to_string(size),
                            limits.max_permutations);
        next.push_back(std::move(candidate));
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  return level;
}

Integer standard_tableaux(const std::vector<int>& shape) {
  int total = 0;
  for (int row : shape) total += row;
  Integer numerator = 1;
  for (int i = 2; i <= total; ++i) numerator *= i;
  Integer hooks = 1;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    for (int c = 0; c < shape[r]; ++c) {
      int below = 0;
      for (std::size_t s = r + 1; s < shape.size() && shape[s] > c; ++s) ++below;
      hooks *= (shape[r] - c - 1) + below + 1;
    }
  }
  return numerator / hooks;
}

namespace {

void partitions_into(int remaining, int largest, int parts_left, std::vector<int>& current,
                     std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  if (parts_left == 0) return;
  for (int part = std::min(remaining, largest); part >= 1; --part) {
    current.push_back(part);
    partitions_into(remaining - part, part, parts_left - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> partitions(int k, int max_parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  partitions_into(k, k, max_parts, current, out);
  return out;
}

Integer count_avoiders_rsk(int n, int k) {
  if (n < 2 || k < 1) throw InvalidArgument("count_avoiders_rsk: need n >= 2 and k >= 1");
  Integer total = 0;
  for (const auto& shape : partitions(k, n - 1)) {
    Integer f = standard_tableaux(shape);
    total += f * f;
  }
  return total;
}

}  // namespace feasreg
