#include "feasreg/overlap.hpp"

#include "feasreg/errors.hpp"

#include <algorithm>

namespace feasreg {

OverlapGraph build_overlap_graph(std::size_t k, const PatternSet& patterns, const EnumerationLimits& limits) {
  if (k < 2) throw InvalidArgument("build_overlap_graph: k must be at least 2");
  OverlapGraph og{k, patterns, {}};
  for (auto& v : enumerate_avoiders(k - 1, patterns, limits)) og.graph.add_vertex(std::move(v));
  for (auto& pi : enumerate_avoiders(k, patterns, limits)) {
    auto source = og.graph.find_vertex(begin_pattern(pi, k - 1));
    auto target = og.graph.find_vertex(end_pattern(pi, k - 1));
    if (!source || !target) throw InvariantViolation("overlap graph: edge endpoint outside Av_{k-1}(B)");
    og.graph.add_edge(std::move(pi), *source, *target);
  }
  return og;
}

Walk walk_of(const OverlapGraph& og, const Permutation& sigma) {
  const std::size_t k = og.k;
  if (sigma.size() < k) throw InvalidArgument("walk_of: permutation shorter than k");
  Walk w;
  w.edges.reserve(sigma.size() - k + 1);
  for (std::size_t i = 0; i + k <= sigma.size(); ++i) {
    auto e = og.graph.find_edge(window_pattern(sigma, i, k));
    if (!e) throw InvalidArgument("walk_of: permutation lies outside the graph's class");
    w.edges.push_back(*e);
  }
  return w;
}

Permutation extend_312(const Permutation& sigma, const Permutation& next) {
  static const Permutation forbidden{3, 1, 2};
  const std::size_t k = next.size();
  if (k < 2 || sigma.size() < k - 1) throw InvalidArgument("extend_312: sigma too short for the target edge");
  if (contains(sigma, forbidden) || contains(next, forbidden))
    throw InvalidArgument("extend_312: inputs must avoid 312");
  if (end_pattern(sigma, k - 1) != begin_pattern(next, k - 1))
    throw InvalidArgument("extend_312: target is not a continuation of sigma's end");

  const int last = next[k - 1];
  int level;
  if (last == 1) {
    level = 1;
  } else if (last == static_cast<int>(k)) {
    level = static_cast<int>(sigma.size()) + 1;
  } else {
    // The entry of `next` just above its final point sits at some position j
    // among its first k-1 entries; the new value goes right below sigma's
    // matching entry.
    auto above = std::find(next.begin(), next.end(), last + 1);
    const auto j = static_cast<std::size_t>(above - next.begin());
    level = sigma[sigma.size() - (k - 1) + j];
  }
  Permutation out = append(sigma, level);
  if (contains_through_last(out, forbidden) || end_pattern(out, k) != next)
    throw InvariantViolation("extend_312: constructed extension is invalid");
  return out;
}

Permutation realize_walk_312(const OverlapGraph& og, const Walk& w) {
  if (w.empty()) throw InvalidArgument("realize_walk_312: empty walk");
  if (!is_walk(og.graph, w.edges)) throw InvalidArgument("realize_walk_312: incompatible walk");
  Permutation sigma = og.graph.edge_label(w.edges.front());
  for (std::size_t i = 1; i < w.size(); ++i) sigma = extend_312(sigma, og.graph.edge_label(w.edges[i]));
  return sigma;
}

namespace {

bool search_realization(const OverlapGraph& og, const Walk& w, std::size_t step, Permutation& sigma) {
  if (step == w.size()) return true;
  const Permutation& target = og.graph.edge_label(w.edges[step]);
  const std::size_t k = og.k;
  for (int level = 1; level <= static_cast<int>(sigma.size()) + 1; ++level) {
    Permutation candidate = append(sigma, level);
    if (end_pattern(candidate, k) != target) continue;
    bool ok = std::none_of(og.patterns.begin(), og.patterns.end(),
                           [&](const Permutation& b) { return contains_through_last(candidate, b); });
    if (!ok) continue;
    Permutation saved = sigma;
    sigma = std::move(candidate);
    if (search_realization(og, w, step + 1, sigma)) return true;
    sigma = std::move(saved);
  }
  return false;
}

}  // namespace

Permutation realize_walk(const OverlapGraph& og, const Walk& w) {
  if (w.empty()) throw InvalidArgument("realize_walk: empty walk");
  if (!is_walk(og.graph, w.edges)) throw InvalidArgument("realize_walk: incompatible walk");
  Permutation sigma = og.graph.edge_label(w.edges.front());
  if (!search_realization(og, w, 1, sigma)) throw InvalidArgument("realize_walk: walk is not realizable in the class");
  return sigma;
}

}  // namespace feasreg
