#pragma once

// Directed multigraphs with labelled vertices and edges, walks, incidence
// matrices, strong connectivity and simple-cycle enumeration. Header-only and
// templated on the label type; overlap graphs use Permutation labels and
// coloured overlap graphs use ColouredPermutation labels.

#include "feasreg/errors.hpp"
#include "feasreg/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace feasreg {

struct EdgeRecord {
  std::size_t source = 0;
  std::size_t target = 0;
  /// Position among parallel edges carrying an equal label; always 0 in the
  /// graphs built by this library, where edge labels are unique.
  std::size_t ordinal = 0;

  bool is_loop() const noexcept { return source == target; }
};

template <typename Label>
class DirectedMultigraph {
 public:
  using label_type = Label;

  std::size_t add_vertex(Label label) {
    const std::size_t id = vertex_labels_.size();
    vertex_index_.emplace(label, id);
    vertex_labels_.push_back(std::move(label));
    out_.emplace_back();
    in_.emplace_back();
    return id;
  }

  std::size_t add_edge(Label label, std::size_t source, std::size_t target) {
    if (source >= vertex_count() || target >= vertex_count())
      throw InvalidArgument("add_edge: endpoint is not a vertex");
    const std::size_t id = edges_.size();
    std::size_t ordinal = 0;
    for (auto it = edge_index_.find(label); it != edge_index_.end() && it->first == label; ++it) ++ordinal;
    edge_index_.emplace(label, id);
    edges_.push_back({source, target, ordinal});
    edge_labels_.push_back(std::move(label));
    out_[source].push_back(id);
    in_[target].push_back(id);
    return id;
  }

  std::size_t vertex_count() const noexcept { return vertex_labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const Label& vertex_label(std::size_t v) const { return vertex_labels_.at(v); }
  const Label& edge_label(std::size_t e) const { return edge_labels_.at(e); }
  const EdgeRecord& edge(std::size_t e) const { return edges_.at(e); }
  std::span<const Label> vertex_labels() const noexcept { return vertex_labels_; }
  std::span<const Label> edge_labels() const noexcept { return edge_labels_; }
  std::span<const std::size_t> out_edges(std::size_t v) const { return out_.at(v); }
  std::span<const std::size_t> in_edges(std::size_t v) const { return in_.at(v); }

  std::optional<std::size_t> find_vertex(const Label& label) const {
    auto it = vertex_index_.find(label);
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::size_t> find_edge(const Label& label) const {
    auto it = edge_index_.find(label);
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::vector<Label> vertex_labels_;
  std::vector<Label> edge_labels_;
  std::vector<EdgeRecord> edges_;
  std::vector<std::vector<std::size_t>> out_, in_;
  std::map<Label, std::size_t> vertex_index_;
  std::multimap<Label, std::size_t> edge_index_;
};

/// A sequence of edge ids; consecutive edges must be compatible.
struct Walk {
  std::vector<std::size_t> edges;

  std::size_t size() const noexcept { return edges.size(); }
  bool empty() const noexcept { return edges.empty(); }
  friend bool operator==(const Walk&, const Walk&) = default;
  friend auto operator<=>(const Walk&, const Walk&) = default;
};

template <typename Label>
bool is_walk(const DirectedMultigraph<Label>& g, std::span<const std::size_t> edges) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i] >= g.edge_count()) return false;
    if (i > 0 && g.edge(edges[i - 1]).target != g.edge(edges[i]).source) return false;
  }
  return true;
}

template <typename Label>
bool is_cycle(const DirectedMultigraph<Label>& g, std::span<const std::size_t> edges) {
  return !edges.empty() && is_walk(g, edges) && g.edge(edges.back()).target == g.edge(edges.front()).source;
}

/// n_e(w) for every edge e.
template <typename Label>
std::vector<std::size_t> edge_multiplicities(const DirectedMultigraph<Label>& g, std::span<const std::size_t> edges) {
  std::vector<std::size_t> counts(g.edge_count(), 0);
  for (std::size_t e : edges) ++counts.at(e);
  return counts;
}

/// Vertex-by-edge incidence matrix: +1 at the source and -1 at the target of
/// every non-loop edge; loop columns are zero.
template <typename Scalar, typename Label>
Matrix<Scalar> incidence_matrix(const DirectedMultigraph<Label>& g) {
  Matrix<Scalar> m = Matrix<Scalar>::Zero(static_cast<Eigen::Index>(g.vertex_count()),
                                          static_cast<Eigen::Index>(g.edge_count()));
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& rec = g.edge(e);
    if (rec.is_loop()) continue;
    m(static_cast<Eigen::Index>(rec.source), static_cast<Eigen::Index>(e)) = Scalar(1);
    m(static_cast<Eigen::Index>(rec.target), static_cast<Eigen::Index>(e)) = Scalar(-1);
  }
  return m;
}

namespace detail {

// Iterative Tarjan over the vertex set restricted by `allowed` (all vertices
// when empty). Returns a component id per vertex (npos for excluded ones).
template <typename Label>
std::vector<std::size_t> strong_components(const DirectedMultigraph<Label>& g, const std::vector<bool>& allowed,
                                           std::size_t& component_count) {
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  const std::size_t n = g.vertex_count();
  auto ok = [&](std::size_t v) { return allowed.empty() || allowed[v]; };
  std::vector<std::size_t> index(n, npos), low(n, 0), comp(n, npos);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0;
  component_count = 0;
  struct Frame {
    std::size_t v;
    std::size_t next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (!ok(root) || index[root] != npos) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      auto outs = g.out_edges(f.v);
      if (f.next < outs.size()) {
        std::size_t w = g.edge(outs[f.next++]).target;
        if (!ok(w)) continue;
        if (index[w] == npos) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const std::size_t v = f.v;
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = component_count;
        } while (w != v);
        ++component_count;
      }
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
    }
  }
  return comp;
}

}  // namespace detail

template <typename Label>
bool is_strongly_connected(const DirectedMultigraph<Label>& g) {
  if (g.vertex_count() == 0) return true;
  std::size_t count = 0;
  detail::strong_components(g, {}, count);
  return count == 1;
}

/// Splits a walk into simple cycles and a residual path by peeling a cycle
/// whenever the running path revisits a vertex.
struct WalkDecomposition {
  std::vector<Walk> cycles;
  Walk residual;
};

template <typename Label>
WalkDecomposition decompose_walk(const DirectedMultigraph<Label>& g, std::span<const std::size_t> edges) {
  if (!is_walk(g, edges)) throw InvalidArgument("decompose_walk: not a walk");
  WalkDecomposition out;
  if (edges.empty()) return out;
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  // path_vertices[i] is the vertex before path_edges[i]; the back is the current endpoint.
  std::vector<std::size_t> path_vertices{g.edge(edges.front()).source};
  std::vector<std::size_t> path_edges;
  std::vector<std::size_t> position(g.vertex_count(), npos);
  position[path_vertices.front()] = 0;
  for (std::size_t e : edges) {
    const std::size_t u = g.edge(e).target;
    path_edges.push_back(e);
    if (position[u] != npos) {
      const std::size_t p = position[u];
      out.cycles.push_back(Walk{{path_edges.begin() + static_cast<std::ptrdiff_t>(p), path_edges.end()}});
      path_edges.resize(p);
      for (std::size_t i = p + 1; i < path_vertices.size(); ++i) position[path_vertices[i]] = npos;
      path_vertices.resize(p + 1);
    } else {
      position[u] = path_vertices.size();
      path_vertices.push_back(u);
    }
  }
  out.residual.edges = std::move(path_edges);
  return out;
}

/// Rotates a cycle so that its smallest edge id comes first.
inline Walk canonical_rotation(Walk cycle) {
  if (cycle.edges.empty()) return cycle;
  auto smallest = std::min_element(cycle.edges.begin(), cycle.edges.end());
  std::rotate(cycle.edges.begin(), smallest, cycle.edges.end());
  return cycle;
}

/// Every simple cycle, canonically rotated and sorted. Vertex cycles are
/// found with Johnson's circuit algorithm on the underlying simple digraph
/// and then expanded over parallel edges; loops are added directly.
/// Throws CapExceeded once more than `cap` cycles exist.
template <typename Label>
std::vector<Walk> simple_cycles(const DirectedMultigraph<Label>& g, std::size_t cap = 1'000'000) {
  const std::size_t n = g.vertex_count();
  std::vector<Walk> cycles;
  auto push = [&](Walk w) {
    if (cycles.size() >= cap) throw CapExceeded("simple_cycles: too many simple cycles", cap);
    cycles.push_back(canonical_rotation(std::move(w)));
  };

  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (g.edge(e).is_loop()) push(Walk{{e}});

  // parallel[v][w]: non-loop edges from v to w.
  std::vector<std::map<std::size_t, std::vector<std::size_t>>> parallel(n);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& rec = g.edge(e);
    if (!rec.is_loop()) parallel[rec.source][rec.target].push_back(e);
  }

  auto expand = [&](const std::vector<std::size_t>& vertices) {
    const std::size_t len = vertices.size();
    std::vector<const std::vector<std::size_t>*> choices(len);
    for (std::size_t i = 0; i < len; ++i) choices[i] = &parallel[vertices[i]].at(vertices[(i + 1) % len]);
    std::vector<std::size_t> pick(len, 0);
    while (true) {
      Walk w;
      w.edges.reserve(len);
      for (std::size_t i = 0; i < len; ++i) w.edges.push_back((*choices[i])[pick[i]]);
      push(std::move(w));
      std::size_t i = 0;
      while (i < len && ++pick[i] == choices[i]->size()) pick[i++] = 0;
      if (i == len) break;
    }
  };

  // Johnson: for each start s, search circuits through s in the subgraph of
  // vertices >= s restricted to the strong component containing s.
  std::vector<bool> blocked(n, false);
  std::vector<std::vector<std::size_t>> block_map(n);
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<bool> allowed(n, false);
    for (std::size_t v = s; v < n; ++v) allowed[v] = true;
    std::size_t ncomp = 0;
    auto comp = detail::strong_components(g, allowed, ncomp);
    std::vector<bool> in_comp(n, false);
    std::size_t size = 0;
    for (std::size_t v = s; v < n; ++v)
      if (comp[v] == comp[s]) in_comp[v] = true, ++size;
    if (size < 2) continue;
    std::vector<std::vector<std::size_t>> succ(n);
    for (std::size_t v = s; v < n; ++v) {
      if (!in_comp[v]) continue;
      for (const auto& [w, es] : parallel[v])
        if (in_comp[w]) succ[v].push_back(w);
    }
    for (std::size_t v = s; v < n; ++v) {
      blocked[v] = false;
      block_map[v].clear();
    }

    struct Frame {
      std::size_t v;
      std::size_t next;
      bool found;
    };
    auto unblock = [&](std::size_t u) {
      std::vector<std::size_t> work{u};
      while (!work.empty()) {
        std::size_t x = work.back();
        work.pop_back();
        if (!blocked[x]) continue;
        blocked[x] = false;
        for (std::size_t y : block_map[x]) work.push_back(y);
        block_map[x].clear();
      }
    };
    std::vector<Frame> call{{s, 0, false}};
    stack.assign(1, s);
    blocked[s] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next < succ[f.v].size()) {
        std::size_t w = succ[f.v][f.next++];
        if (w == s) {
          expand(stack);
          f.found = true;
        } else if (!blocked[w]) {
          stack.push_back(w);
          blocked[w] = true;
          call.push_back({w, 0, false});
        }
        continue;
      }
      const std::size_t v = f.v;
      const bool found = f.found;
      if (found) {
        unblock(v);
      } else {
        for (std::size_t w : succ[v]) {
          auto& bm = block_map[w];
          if (std::find(bm.begin(), bm.end(), v) == bm.end()) bm.push_back(v);
        }
      }
      stack.pop_back();
      call.pop_back();
      if (!call.empty() && found) call.back().found = true;
    }
  }

  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

}  // namespace feasreg
