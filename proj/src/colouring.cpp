#include "feasreg/colouring.hpp"

#include "feasreg/errors.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <sstream>

namespace feasreg {

int ColouredPermutation::max_colour() const {
  return colours.empty() ? 0 : *std::max_element(colours.begin(), colours.end());
}

std::string ColouredPermutation::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out << ' ';
    out << perm[i] << ':' << colours[i];
  }
  return out.str();
}

std::string ColouredPermutation::pretty() const {
  std::string out;
  const bool wide = size() > 9;
  for (std::size_t i = 0; i < size(); ++i) {
    const bool new_run = i == 0 || colours[i] != colours[i - 1];
    if (new_run) out += colour_name(colours[i]);
    else if (wide) out += ',';
    out += std::to_string(perm[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const ColouredPermutation& a, const ColouredPermutation& b) {
  if (auto c = a.perm <=> b.perm; c != 0) return c;
  for (std::size_t i = a.colours.size(); i-- > 0;)
    if (auto c = a.colours[i] <=> b.colours[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string colour_name(int colour) {
  switch (colour) {
    case 1: return "red";
    case 2: return "blue";
    case 3: return "green";
    default: return "c" + std::to_string(colour);
  }
}

ColouredPermutation parse_coloured(std::string_view text) {
  std::vector<int> values, colours;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    auto colon = token.find(':');
    if (colon == std::string::npos) throw InvalidArgument("coloured permutation: expected value:colour, got '" + token + "'");
    int v = 0, c = 0;
    auto r1 = std::from_chars(token.data(), token.data() + colon, v);
    auto r2 = std::from_chars(token.data() + colon + 1, token.data() + token.size(), c);
    if (r1.ec != std::errc{} || r1.ptr != token.data() + colon || r2.ec != std::errc{} ||
        r2.ptr != token.data() + token.size() || c < 1)
      throw InvalidArgument("coloured permutation: malformed token '" + token + "'");
    values.push_back(v);
    colours.push_back(c);
  }
  return {Permutation(std::move(values)), std::move(colours)};
}

ColouredPermutation ritmo(const Permutation& sigma) {
  const std::size_t n = sigma.size();
  std::vector<std::size_t> position(n + 1);
  for (std::size_t i = 0; i < n; ++i) position[sigma[i]] = i;
  std::vector<int> colours(n, 0);
  std::vector<char> used;
  for (int v = static_cast<int>(n); v >= 1; --v) {
    const std::size_t p = position[v];
    used.assign(n + 2, 0);
    for (std::size_t i = 0; i < p; ++i)
      if (sigma[i] > v) used[colours[i]] = 1;
    int c = 1;
    while (used[c]) ++c;
    colours[p] = c;
  }
  return {sigma, std::move(colours)};
}

ColouredPermutation restrict_to(const ColouredPermutation& cp, std::span<const std::size_t> positions) {
  std::vector<int> colours;
  colours.reserve(positions.size());
  for (std::size_t p : positions) colours.push_back(cp.colours.at(p));
  return {pattern_at(cp.perm, positions), std::move(colours)};
}

ColouredPermutation begin_pattern(const ColouredPermutation& cp, std::size_t k) {
  return {begin_pattern(cp.perm, k), std::vector<int>(cp.colours.begin(), cp.colours.begin() + k)};
}

ColouredPermutation end_pattern(const ColouredPermutation& cp, std::size_t k) {
  return {end_pattern(cp.perm, k), std::vector<int>(cp.colours.end() - k, cp.colours.end())};
}

bool is_rainbow(const ColouredPermutation& cp, int m) {
  std::vector<char> seen(m + 1, 0);
  for (int c : cp.colours) {
    if (c < 1 || c > m) return false;
    seen[c] = 1;
  }
  return std::all_of(seen.begin() + 1, seen.end(), [](char s) { return s != 0; });
}

std::vector<WitnessedColouring> enumerate_inherited(std::size_t n, std::size_t k, const EnumerationLimits& limits) {
  if (n < 2) throw InvalidArgument("enumerate_inherited: n must be at least 2");
  if (k < 1) throw InvalidArgument("enumerate_inherited: k must be at least 1");
  const int max_colour = static_cast<int>(n) - 1;
  const Permutation pad = Permutation::decreasing(n - 1);

  std::map<ColouredPermutation, Permutation> found;
  std::deque<std::map<ColouredPermutation, Permutation>::const_iterator> frontier;
  auto visit = [&](Permutation witness) {
    auto state = end_pattern(ritmo(witness), k);
    auto [it, inserted] = found.try_emplace(std::move(state), std::move(witness));
    if (!inserted) return;
    if (found.size() > limits.max_permutations) throw CapExceeded("inherited colourings", limits.max_permutations);
    frontier.push_back(it);
  };

  for (const auto& pi : enumerate_avoiders(k, {Permutation::decreasing(n)}, limits)) visit(direct_sum(pad, pi));
  // Appending never recolours earlier entries, and from a rainbow witness
  // every continuation in the coloured overlap graph is realizable, so
  // exploring one witness per state reaches every state.
  while (!frontier.empty()) {
    const Permutation witness = frontier.front()->second;
    frontier.pop_front();
    for (int level = 1; level <= static_cast<int>(witness.size()) + 1; ++level) {
      Permutation next = append(witness, level);
      const int c = ritmo(next).colours.back();
      if (c > max_colour) continue;
      visit(std::move(next));
    }
  }

  std::vector<WitnessedColouring> out;
  out.reserve(found.size());
  for (auto& [state, witness] : found) out.push_back({state, witness});
  return out;
}

ColouredOverlapGraph build_coloured_overlap(std::size_t n, std::size_t k, const EnumerationLimits& limits) {
  if (k < 2) throw InvalidArgument("build_coloured_overlap: k must be at least 2");
  ColouredOverlapGraph cog;
  cog.n = n;
  cog.k = k;
  for (auto& v : enumerate_inherited(n, k - 1, limits)) cog.graph.add_vertex(std::move(v.state));
  for (auto& e : enumerate_inherited(n, k, limits)) {
    auto source = cog.graph.find_vertex(begin_pattern(e.state, k - 1));
    auto target = cog.graph.find_vertex(end_pattern(e.state, k - 1));
    if (!source || !target) throw InvariantViolation("coloured overlap graph: edge endpoint is not an inherited colouring");
    cog.graph.add_edge(std::move(e.state), *source, *target);
    cog.edge_witnesses.push_back(std::move(e.witness));
  }
  return cog;
}

Walk coloured_walk_of(const ColouredOverlapGraph& cog, const Permutation& sigma) {
  const std::size_t k = cog.k;
  if (sigma.size() < k) throw InvalidArgument("coloured_walk_of: permutation shorter than k");
  const auto cp = ritmo(sigma);
  if (cp.max_colour() > static_cast<int>(cog.n) - 1)
    throw InvalidArgument("coloured_walk_of: permutation contains the decreasing pattern");
  Walk w;
  std::vector<std::size_t> positions(k);
  for (std::size_t i = 0; i + k <= sigma.size(); ++i) {
    for (std::size_t t = 0; t < k; ++t) positions[t] = i + t;
    auto e = cog.graph.find_edge(restrict_to(cp, positions));
    if (!e) throw InvariantViolation("coloured_walk_of: window colouring missing from the graph");
    w.edges.push_back(*e);
  }
  return w;
}

std::vector<ActiveSite> active_sites(const ColouredOverlapGraph& cog, std::size_t v) {
  std::vector<ActiveSite> out;
  for (std::size_t e : cog.graph.out_edges(v)) {
    const auto& label = cog.graph.edge_label(e);
    out.push_back({label.perm[label.size() - 1], label.colours.back()});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> z_values(const Permutation& sigma) {
  const auto cp = ritmo(sigma);
  const int m = cp.max_colour();
  std::vector<int> z(m + 2, 1);
  z[0] = static_cast<int>(sigma.size()) + 2;
  for (std::size_t i = 0; i < sigma.size(); ++i) z[cp.colours[i]] = sigma[i] + 1;
  return z;
}

std::vector<int> tilde_heights(const Permutation& sigma, std::size_t j) {
  if (j > sigma.size()) throw InvalidArgument("tilde_heights: j exceeds |sigma|");
  const Permutation pi = end_pattern(sigma, j);
  const std::size_t offset = sigma.size() - j;
  std::vector<int> out(j + 2);
  out[0] = 0;
  out[j + 1] = static_cast<int>(sigma.size()) + 1;
  for (std::size_t t = 0; t < j; ++t) out[pi[t]] = sigma[offset + t];
  return out;
}

Permutation extend_monotone(const Permutation& sigma, const ColouredPermutation& next, std::size_t n) {
  const std::size_t k = next.size();
  if (k < 2 || sigma.size() < k - 1) throw InvalidArgument("extend_monotone: sigma too short for the target edge");
  const auto cp = ritmo(sigma);
  if (!is_rainbow(cp, static_cast<int>(n) - 1)) throw InvalidArgument("extend_monotone: colouring of sigma is not rainbow");
  if (end_pattern(cp, k - 1) != begin_pattern(next, k - 1))
    throw InvalidArgument("extend_monotone: target is not a continuation of sigma's end");

  const int y = next.perm[k - 1];
  const int f = next.colours.back();
  const auto tilde = tilde_heights(sigma, k - 1);
  const auto z = z_values(sigma);
  auto z_at = [&](int c) { return c < static_cast<int>(z.size()) ? z[c] : 1; };

  const int lo = std::max(tilde[y - 1] + 1, z_at(f));
  const int hi = std::min(tilde[y], z_at(f - 1) - 1);
  if (lo > hi) throw InvariantViolation("extend_monotone: empty interval for the appended value");
  Permutation out = append(sigma, lo);
  const auto out_colours = ritmo(out);
  if (out_colours.max_colour() > static_cast<int>(n) - 1 || end_pattern(out_colours, k) != next)
    throw InvariantViolation("extend_monotone: constructed extension is invalid");
  return out;
}

MonotoneRealizer::MonotoneRealizer(const ColouredOverlapGraph& cog, std::size_t max_witness_size)
    : cog_(&cog), minimal_(cog.graph.edge_count()) {
  std::size_t missing = cog.graph.edge_count();
  const PatternSet forbidden{Permutation::decreasing(cog.n)};
  for (std::size_t m = cog.k; missing > 0; ++m) {
    if (m > max_witness_size) throw CapExceeded("minimal witness size", max_witness_size);
    for (const auto& sigma : enumerate_avoiders(m, forbidden)) {
      auto e = cog.graph.find_edge(end_pattern(ritmo(sigma), cog.k));
      if (e && minimal_[*e].empty()) {
        minimal_[*e] = sigma;
        --missing;
      }
    }
  }
}

std::size_t MonotoneRealizer::constant() const {
  std::size_t longest = 0;
  for (const auto& s : minimal_) longest = std::max(longest, s.size());
  return longest + cog_->n - cog_->k - 1;
}

MonotoneRealizer::Result MonotoneRealizer::realize(const Walk& w) const {
  const auto& g = cog_->graph;
  if (w.empty()) throw InvalidArgument("realize: empty walk");
  if (!is_walk(g, w.edges)) throw InvalidArgument("realize: incompatible walk");
  Result r{direct_sum(Permutation::decreasing(cog_->n - 1), minimal_.at(w.edges.front())), {}};
  r.prefix = coloured_walk_of(*cog_, r.sigma);
  if (r.prefix.edges.back() != w.edges.front()) throw InvariantViolation("realize: padded witness ends in the wrong edge");
  r.prefix.edges.pop_back();
  for (std::size_t i = 1; i < w.size(); ++i) r.sigma = extend_monotone(r.sigma, g.edge_label(w.edges[i]), cog_->n);
  return r;
}

}  // namespace feasreg
