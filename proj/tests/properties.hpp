#pragma once

// Exhaustive checks of the structural properties of RITMO colourings. Each
// function returns the number of violated instances for one permutation.

#include "feasreg/colouring.hpp"
#include "feasreg/permutation.hpp"

#include <cstddef>

namespace props {

using feasreg::Permutation;

// Descents force strictly increasing colours; ascents with a colour jump
// are explained by larger entries in between of the two boundary colours.
inline std::size_t descent_colour_violations(const Permutation& s) {
  const auto c = feasreg::ritmo(s).colours;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] > s[j]) {
        if (!(c[i] < c[j])) ++bad;
        continue;
      }
      if (!(c[i] < c[j])) continue;
      bool same_as_i = false, just_below_j = false;
      for (std::size_t m = i + 1; m < j; ++m) {
        if (s[m] <= s[j]) continue;
        if (c[m] == c[i]) same_as_i = true;
        if (c[m] == c[j] - 1) just_below_j = true;
      }
      bad += !same_as_i;
      bad += !just_below_j;
    }
  return bad;
}

// Colouring a prefix on its own agrees with the prefix of the colouring.
inline std::size_t prefix_violations(const Permutation& s) {
  const auto full = feasreg::ritmo(s);
  std::size_t bad = 0;
  for (std::size_t j = 1; j <= s.size(); ++j)
    if (feasreg::begin_pattern(full, j) != feasreg::ritmo(feasreg::begin_pattern(s, j))) ++bad;
  return bad;
}

// The end pattern after appending level iota is pi^{*y} exactly when
// tilde(y-1) < iota <= tilde(y).
inline std::size_t end_pattern_interval_violations(const Permutation& s) {
  std::size_t bad = 0;
  const int m = static_cast<int>(s.size());
  for (int iota = 1; iota <= m + 1; ++iota) {
    const auto t = feasreg::append(s, iota);
    for (std::size_t j = 1; j <= s.size(); ++j) {
      const auto tilde = feasreg::tilde_heights(s, j);
      const auto after = feasreg::end_pattern(t, j + 1);
      if (feasreg::begin_pattern(after, j) != feasreg::end_pattern(s, j)) ++bad;
      const int actual = after[j];
      for (int y = 1; y <= static_cast<int>(j) + 1; ++y) {
        const bool in = tilde[y - 1] < iota && iota <= tilde[y];
        if (in != (y == actual)) ++bad;
      }
    }
  }
  return bad;
}

// The appended entry gets colour f exactly when z(f) <= iota < z(f-1).
inline std::size_t appended_colour_interval_violations(const Permutation& s) {
  std::size_t bad = 0;
  const auto z = feasreg::z_values(s);
  auto zf = [&](int f) { return f < static_cast<int>(z.size()) ? z[f] : 1; };
  const int m = static_cast<int>(s.size());
  const int top = static_cast<int>(z.size()) + 1;
  for (int iota = 1; iota <= m + 1; ++iota) {
    const int actual = feasreg::ritmo(feasreg::append(s, iota)).colours.back();
    for (int f = 1; f <= top; ++f) {
      const bool in = zf(f) <= iota && iota < zf(f - 1);
      if (in != (f == actual)) ++bad;
    }
  }
  return bad;
}

}  // namespace props
