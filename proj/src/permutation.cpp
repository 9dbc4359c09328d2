#include "feasreg/permutation.hpp"

#include "feasreg/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace feasreg {

namespace {

template <typename T>
std::vector<int> ranks_of(std::span<const T> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<int> ranks(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && !(values[order[r - 1]] < values[order[r]]))
      throw InvalidArgument("standardize: duplicate value in input sequence");
    ranks[order[r]] = static_cast<int>(r + 1);
  }
  return ranks;
}

// Backtracking occurrence search. For each pattern position t, `below[t]` and
// `above[t]` are the earlier pattern positions holding the nearest smaller and
// larger pattern values; a candidate must fit strictly between their images.
class OccurrenceSearch {
 public:
  OccurrenceSearch(const Permutation& sigma, const Permutation& tau) : sigma_(sigma), tau_(tau) {
    const std::size_t k = tau.size();
    below_.assign(k, npos);
    above_.assign(k, npos);
    for (std::size_t t = 0; t < k; ++t) {
      for (std::size_t s = 0; s < t; ++s) {
        if (tau[s] < tau[t] && (below_[t] == npos || tau[s] > tau[below_[t]])) below_[t] = s;
        if (tau[s] > tau[t] && (above_[t] == npos || tau[s] < tau[above_[t]])) above_[t] = s;
      }
    }
    chosen_.resize(k);
  }

  bool find(bool through_last) {
    const std::size_t k = tau_.size();
    if (k == 0) return true;
    if (k > sigma_.size()) return false;
    through_last_ = through_last;
    return extend(0, 0);
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  bool fits(std::size_t t, std::size_t pos) const {
    const int v = sigma_[pos];
    if (below_[t] != npos && !(sigma_[chosen_[below_[t]]] < v)) return false;
    if (above_[t] != npos && !(sigma_[chosen_[above_[t]]] > v)) return false;
    return true;
  }

  bool extend(std::size_t t, std::size_t from) {
    const std::size_t k = tau_.size();
    const std::size_t n = sigma_.size();
    if (t == k) return true;
    if (through_last_ && t == k - 1) {
      if (from > n - 1 || !fits(t, n - 1)) return false;
      chosen_[t] = n - 1;
      return true;
    }
    // Leave room for the remaining k - t - 1 entries (the last one pinned at
    // n - 1 when searching through the final entry).
    for (std::size_t pos = from; pos + (k - t) <= n; ++pos) {
      if (!fits(t, pos)) continue;
      chosen_[t] = pos;
      if (extend(t + 1, pos + 1)) return true;
    }
    return false;
  }

  const Permutation& sigma_;
  const Permutation& tau_;
  std::vector<std::size_t> below_, above_, chosen_;
  bool through_last_ = false;
};

}  // namespace

Permutation standardize_unchecked(std::vector<int> values) {
  return Permutation(std::move(values), Permutation::Unchecked{});
}

Permutation::Permutation(std::vector<value_type> values) : values_(std::move(values)) {
  std::vector<bool> seen(values_.size() + 1, false);
  for (value_type v : values_) {
    if (v < 1 || static_cast<std::size_t>(v) > values_.size() || seen[v])
      throw InvalidArgument("not a permutation of 1..n");
    seen[v] = true;
  }
}

Permutation::Permutation(std::initializer_list<value_type> values)
    : Permutation(std::vector<value_type>(values)) {}

Permutation Permutation::identity(std::size_t n) {
  std::vector<value_type> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v), Unchecked{});
}

Permutation Permutation::decreasing(std::size_t n) {
  std::vector<value_type> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<value_type>(n - i);
  return Permutation(std::move(v), Unchecked{});
}

Permutation Permutation::from_digits(std::string_view digits) {
  if (digits.empty() || digits.size() > 9) throw InvalidArgument("compact form is only for sizes 1..9");
  std::vector<value_type> v;
  for (char c : digits) {
    if (c < '1' || c > '9') throw InvalidArgument(std::string("bad digit in permutation: ") + c);
    v.push_back(c - '0');
  }
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<value_type> inv(size());
  for (std::size_t i = 0; i < size(); ++i) inv[values_[i] - 1] = static_cast<value_type>(i + 1);
  return Permutation(std::move(inv), Unchecked{});
}

Permutation Permutation::reverse() const {
  return Permutation(std::vector<value_type>(values_.rbegin(), values_.rend()), Unchecked{});
}

Permutation Permutation::complement() const {
  std::vector<value_type> c(size());
  const auto n = static_cast<value_type>(size());
  for (std::size_t i = 0; i < size(); ++i) c[i] = n + 1 - values_[i];
  return Permutation(std::move(c), Unchecked{});
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values_[i]);
  }
  return out;
}

std::string Permutation::compact() const {
  if (size() > 9) return to_string();
  std::string out;
  for (value_type v : values_) out += static_cast<char>('0' + v);
  return out;
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.values_.begin(), a.values_.end(), b.values_.begin(),
                                                b.values_.end());
}

Permutation standardize(std::span<const long long> values) { return standardize_unchecked(ranks_of(values)); }
Permutation standardize(std::span<const int> values) { return standardize_unchecked(ranks_of(values)); }

Permutation pattern_at(const Permutation& sigma, std::span<const std::size_t> positions) {
  if (positions.empty()) throw InvalidArgument("pattern_at: empty index set");
  std::vector<int> picked;
  picked.reserve(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] >= sigma.size()) throw InvalidArgument("pattern_at: index out of range");
    if (i > 0 && positions[i] <= positions[i - 1]) throw InvalidArgument("pattern_at: indices must be increasing");
    picked.push_back(sigma[positions[i]]);
  }
  return standardize(std::span<const int>(picked));
}

Permutation window_pattern(const Permutation& sigma, std::size_t first, std::size_t length) {
  if (length == 0 || first + length > sigma.size()) throw InvalidArgument("window out of range");
  return standardize(sigma.values().subspan(first, length));
}

Permutation begin_pattern(const Permutation& sigma, std::size_t k) {
  if (k > sigma.size()) throw InvalidArgument("begin_pattern: k exceeds permutation size");
  if (k == 0) return {};
  return window_pattern(sigma, 0, k);
}

Permutation end_pattern(const Permutation& sigma, std::size_t k) {
  if (k > sigma.size()) throw InvalidArgument("end_pattern: k exceeds permutation size");
  if (k == 0) return {};
  return window_pattern(sigma, sigma.size() - k, k);
}

bool contains(const Permutation& sigma, const Permutation& tau) {
  return OccurrenceSearch(sigma, tau).find(false);
}

bool contains_through_last(const Permutation& sigma, const Permutation& tau) {
  if (tau.empty()) return true;
  return OccurrenceSearch(sigma, tau).find(true);
}

bool avoids_all(const Permutation& sigma, const PatternSet& patterns) {
  return std::none_of(patterns.begin(), patterns.end(), [&](const Permutation& b) { return contains(sigma, b); });
}

Permutation direct_sum(const Permutation& tau, const Permutation& sigma) {
  std::vector<int> v(tau.begin(), tau.end());
  const auto m = static_cast<int>(tau.size());
  for (int x : sigma) v.push_back(x + m);
  return standardize_unchecked(std::move(v));
}

Permutation skew_sum(const Permutation& tau, const Permutation& sigma) {
  std::vector<int> v;
  const auto n = static_cast<int>(sigma.size());
  for (int x : tau) v.push_back(x + n);
  v.insert(v.end(), sigma.begin(), sigma.end());
  return standardize_unchecked(std::move(v));
}

Permutation repeat_sum(std::size_t copies, const Permutation& sigma) {
  if (copies < 1) throw InvalidArgument("repeat_sum: need at least one copy");
  std::vector<int> v;
  v.reserve(copies * sigma.size());
  const auto n = static_cast<int>(sigma.size());
  for (std::size_t c = 0; c < copies; ++c)
    for (int x : sigma) v.push_back(x + static_cast<int>(c) * n);
  return standardize_unchecked(std::move(v));
}

Permutation repeat_skew_sum(std::size_t copies, const Permutation& sigma) {
  if (copies < 1) throw InvalidArgument("repeat_skew_sum: need at least one copy");
  std::vector<int> v;
  v.reserve(copies * sigma.size());
  const auto n = static_cast<int>(sigma.size());
  for (std::size_t c = 0; c < copies; ++c)
    for (int x : sigma) v.push_back(x + static_cast<int>(copies - 1 - c) * n);
  return standardize_unchecked(std::move(v));
}

bool is_sum_decomposable(const Permutation& sigma) {
  int running_max = 0;
  for (std::size_t i = 0; i + 1 < sigma.size(); ++i) {
    running_max = std::max(running_max, sigma[i]);
    if (running_max == static_cast<int>(i + 1)) return true;
  }
  return false;
}

bool is_skew_decomposable(const Permutation& sigma) { return is_sum_decomposable(sigma.complement()); }

Permutation append(const Permutation& sigma, int level) {
  if (level < 1 || level > static_cast<int>(sigma.size()) + 1)
    throw InvalidArgument("append: level must lie in [1, |sigma|+1]");
  std::vector<int> v;
  v.reserve(sigma.size() + 1);
  for (int x : sigma) v.push_back(x >= level ? x + 1 : x);
  v.push_back(level);
  return standardize_unchecked(std::move(v));
}

std::uint64_t occurrences(const Permutation& pi, const Permutation& sigma) {
  const std::size_t k = pi.size(), n = sigma.size();
  if (k == 0 || k > n) return 0;
  std::uint64_t count = 0;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    if (pattern_at(sigma, idx) == pi) ++count;
    std::size_t t = k;
    while (t > 0 && idx[t - 1] == n - k + t - 1) --t;
    if (t == 0) break;
    ++idx[t - 1];
    for (std::size_t s = t; s < k; ++s) idx[s] = idx[s - 1] + 1;
  }
  return count;
}

std::uint64_t consecutive_occurrences(const Permutation& pi, const Permutation& sigma) {
  const std::size_t k = pi.size(), n = sigma.size();
  if (k == 0 || k > n) return 0;
  std::uint64_t count = 0;
  for (std::size_t i = 0; i + k <= n; ++i)
    if (window_pattern(sigma, i, k) == pi) ++count;
  return count;
}

const Rational& DensityVector::operator[](const Permutation& pi) const {
  auto it = std::find(order.begin(), order.end(), pi);
  if (it == order.end()) throw InvalidArgument("pattern not among density coordinates: " + pi.compact());
  return entries[static_cast<Eigen::Index>(it - order.begin())];
}

Rational DensityVector::sum() const { return entries.sum(); }

std::vector<Permutation> all_permutations(std::size_t k) {
  std::vector<Permutation> out;
  std::vector<int> v(k);
  std::iota(v.begin(), v.end(), 1);
  do {
    out.push_back(standardize_unchecked(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

DensityVector density_vector(const Permutation& sigma, std::span<const Permutation> order) {
  if (order.empty()) throw InvalidArgument("density_vector: empty coordinate order");
  const std::size_t k = order.front().size();
  if (k > sigma.size()) throw InvalidArgument("density_vector: k exceeds permutation size");
  std::unordered_map<Permutation, Eigen::Index, PermutationHash> index;
  for (std::size_t i = 0; i < order.size(); ++i) index.emplace(order[i], static_cast<Eigen::Index>(i));
  std::vector<long> counts(order.size(), 0);
  for (std::size_t i = 0; i + k <= sigma.size(); ++i) {
    auto it = index.find(window_pattern(sigma, i, k));
    if (it == index.end()) throw InvalidArgument("density_vector: window pattern outside coordinate order");
    ++counts[static_cast<std::size_t>(it->second)];
  }
  DensityVector out{std::vector<Permutation>(order.begin(), order.end()), RatVector(static_cast<Eigen::Index>(order.size()))};
  const auto n = static_cast<long>(sigma.size());
  for (std::size_t i = 0; i < counts.size(); ++i) out.entries[static_cast<Eigen::Index>(i)] = Rational(counts[i], n);
  return out;
}

DensityVector density_vector(const Permutation& sigma, std::size_t k) {
  const auto order = all_permutations(k);
  return density_vector(sigma, order);
}

Permutation parse_permutation(std::string_view text) {
  std::string s(text);
  for (char& c : s)
    if (c == '[' || c == ']' || c == ',') c = ' ';
  std::vector<long long> values;
  std::istringstream in(s);
  std::string token;
  std::vector<std::string> tokens;
  while (in >> token) tokens.push_back(token);
  if (tokens.empty()) throw InvalidArgument("empty permutation");
  if (tokens.size() == 1 && tokens[0].size() > 1) return Permutation::from_digits(tokens[0]);
  std::vector<int> v;
  for (const auto& t : tokens) {
    int x = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
    if (ec != std::errc() || ptr != t.data() + t.size()) throw InvalidArgument("bad permutation entry: " + t);
    v.push_back(x);
  }
  return Permutation(std::move(v));
}

PatternSet parse_pattern_set(std::string_view text) {
  PatternSet out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    std::string trimmed;
    for (char c : piece)
      if (c != ' ') trimmed += c;
    if (!trimmed.empty()) out.push_back(parse_permutation(trimmed));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = p.size();
  for (int v : p) h = h * 1315423911u + static_cast<std::size_t>(v);
  return h;
}

}  // namespace feasreg
