#include "feasreg/analysis.hpp"

#include "feasreg/enumeration.hpp"
#include "feasreg/errors.hpp"
#include "feasreg/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace feasreg {

namespace {

std::vector<Permutation> monotone_avoiders(std::size_t n, std::size_t k) {
  return enumerate_avoiders(k, {Permutation::decreasing(n)});
}

std::string describe(const PatternSet& patterns) {
  if (patterns.empty()) return "all permutations";
  std::string out = "Av(";
  for (std::size_t i = 0; i < patterns.size(); ++i) out += (i ? "," : "") + patterns[i].compact();
  return out + ")";
}

}  // namespace

LabelledMatrix<Rational> matrix_A(const ColouredOverlapGraph& cog) {
  const auto perms = monotone_avoiders(cog.n, cog.k);
  LabelledMatrix<Rational> a;
  for (const auto& p : perms) a.row_labels.push_back(label_string(p));
  for (const auto& v : vertex_label_strings(cog.graph)) a.row_labels.push_back(v);
  a.col_labels = edge_label_strings(cog.graph);
  const auto np = static_cast<Eigen::Index>(perms.size());
  const auto nv = static_cast<Eigen::Index>(cog.graph.vertex_count());
  a.values = RatMatrix(np + nv, static_cast<Eigen::Index>(cog.graph.edge_count()));
  a.values.topRows(np) = forget_colours_values(cog, perms);
  a.values.bottomRows(nv) = incidence_matrix<Rational>(cog.graph);
  return a;
}

LabelledMatrix<Rational> matrix_A(std::size_t n, std::size_t k) { return matrix_A(build_coloured_overlap(n, k)); }

DimensionReport cycle_polytope_dimension(const PatternSet& patterns, std::size_t k, std::size_t cycle_cap) {
  const auto og = build_overlap_graph(k, patterns);
  const auto p = cycle_polytope<Rational>(og.graph, cycle_cap);
  DimensionReport r;
  r.class_description = describe(patterns);
  r.k = k;
  r.upper_bound = og.graph.edge_count() - og.graph.vertex_count();
  r.lower_bound = affine_dimension(p.vertices);
  r.conclusive = true;
  r.method = "cycle-polytope";
  r.certificates = {{"edges", std::to_string(og.graph.edge_count())},
                    {"vertices", std::to_string(og.graph.vertex_count())},
                    {"polytope_vertices", std::to_string(p.vertices.size())},
                    {"strongly_connected", is_strongly_connected(og.graph) ? "true" : "false"}};
  return r;
}

DimensionReport feasible_dimension_monotone(std::size_t n, std::size_t k, std::size_t cycle_cap) {
  const auto cog = build_coloured_overlap(n, k);
  const std::size_t closed_form = monotone_avoiders(n, k).size() - monotone_avoiders(n, k - 1).size();
  const std::size_t rank = rank_exact(matrix_A(cog).values);
  const std::size_t vertices = cog.graph.vertex_count();
  if (rank < vertices) throw InvariantViolation("feasible_dimension_monotone: rank of A below the vertex count");
  const std::size_t from_rank = rank - vertices;

  const auto projection = forget_colours_matrix(cog);
  const auto projected = project_forget_colours(projection, cycle_polytope<Rational>(cog.graph, cycle_cap));
  const std::size_t from_vertices = affine_dimension(projected.vertices);

  if (closed_form != from_rank || closed_form != from_vertices)
    throw InvariantViolation("feasible_dimension_monotone: closed form " + std::to_string(closed_form) +
                             ", rank route " + std::to_string(from_rank) + ", vertex route " +
                             std::to_string(from_vertices) + " disagree");
  DimensionReport r;
  r.class_description = "Av(" + Permutation::decreasing(n).compact() + ")";
  r.k = k;
  r.upper_bound = closed_form;
  r.lower_bound = from_rank;
  r.conclusive = true;
  r.method = "rank-of-A";
  r.certificates = {{"rank_A", std::to_string(rank)},
                    {"coloured_vertices", std::to_string(vertices)},
                    {"coloured_edges", std::to_string(cog.graph.edge_count())},
                    {"projected_vertices", std::to_string(projected.vertices.size())},
                    {"projected_affine_dimension", std::to_string(from_vertices)}};
  return r;
}

MinorCertificate triangular_minor(const ColouredOverlapGraph& cog) {
  const auto& g = cog.graph;
  const std::size_t k = cog.k;
  const std::size_t nv = g.vertex_count();

  // Completion: the out-edge whose last entry has height k and colour 1.
  std::vector<std::size_t> comp(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    std::optional<std::size_t> found;
    for (std::size_t e : g.out_edges(v)) {
      const auto& l = g.edge_label(e);
      if (l.perm[k - 1] == static_cast<int>(k) && l.colours.back() == 1) {
        if (found) throw InvariantViolation("triangular_minor: two completion edges at one vertex");
        found = e;
      }
    }
    if (!found) throw InvariantViolation("triangular_minor: vertex without a completion edge");
    comp[v] = *found;
  }

  const ColouredPermutation red_gamma{Permutation::identity(k), std::vector<int>(k, 1)};
  const auto loop_edge = g.find_edge(red_gamma);
  const auto base = g.find_vertex(begin_pattern(red_gamma, k - 1));
  if (!loop_edge || !base || comp[*base] != *loop_edge)
    throw InvariantViolation("triangular_minor: the all-red increasing loop is not a completion edge");

  // Order the remaining vertices so that v1 precedes v2 whenever comp(v2)
  // ends at v1; ties broken by label order (vertex ids follow label order).
  std::vector<std::size_t> pending(nv, 0);
  std::vector<std::vector<std::size_t>> later(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    if (v == *base) continue;
    const std::size_t t = g.edge(comp[v]).target;
    if (t == *base) continue;
    later[t].push_back(v);
    ++pending[v];
  }
  std::set<std::size_t> ready;
  for (std::size_t v = 0; v < nv; ++v)
    if (v != *base && pending[v] == 0) ready.insert(v);
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    const std::size_t v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (std::size_t w : later[v])
      if (--pending[w] == 0) ready.insert(w);
  }
  if (order.size() + 1 != nv) throw InvariantViolation("triangular_minor: completion edges contain a cycle besides the loop");

  // Avoiders not ending in their maximum, each with its least colouring.
  const auto perms = monotone_avoiders(cog.n, k);
  std::vector<Permutation> ne;
  std::vector<std::size_t> cne;
  for (const auto& p : perms) {
    if (p[k - 1] == static_cast<int>(k)) continue;
    std::optional<std::size_t> best;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const auto& l = g.edge_label(e);
      if (l.perm != p) continue;
      if (!best || l.colours < g.edge_label(*best).colours) best = e;
    }
    if (!best) throw InvariantViolation("triangular_minor: avoider without a coloured edge");
    ne.push_back(p);
    cne.push_back(*best);
  }

  const auto a = matrix_A(cog);
  const auto perm_row = [&](const Permutation& p) {
    return static_cast<Eigen::Index>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
  };
  const auto np = static_cast<Eigen::Index>(perms.size());

  std::vector<Eigen::Index> rows{perm_row(Permutation::identity(k))};
  std::vector<Eigen::Index> cols{static_cast<Eigen::Index>(*loop_edge)};
  for (std::size_t v : order) {
    rows.push_back(np + static_cast<Eigen::Index>(v));
    cols.push_back(static_cast<Eigen::Index>(comp[v]));
  }
  for (std::size_t i = 0; i < ne.size(); ++i) {
    rows.push_back(perm_row(ne[i]));
    cols.push_back(static_cast<Eigen::Index>(cne[i]));
  }

  MinorCertificate cert;
  const auto d = static_cast<Eigen::Index>(rows.size());
  cert.minor = RatMatrix(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    cert.row_labels.push_back(a.row_labels[rows[i]]);
    cert.col_labels.push_back(a.col_labels[cols[i]]);
    for (Eigen::Index j = 0; j < d; ++j) cert.minor(i, j) = a.values(rows[i], cols[j]);
  }
  cert.upper_triangular = true;
  for (Eigen::Index i = 0; i < d; ++i) {
    if (cert.minor(i, i) == 0) cert.upper_triangular = false;
    for (Eigen::Index j = 0; j < i; ++j)
      if (cert.minor(i, j) != 0) cert.upper_triangular = false;
  }
  const std::size_t expected = nv + perms.size() - monotone_avoiders(cog.n, k - 1).size();
  if (static_cast<std::size_t>(d) != expected) throw InvariantViolation("triangular_minor: unexpected minor size");
  if (!cert.upper_triangular) throw InvariantViolation("triangular_minor: minor is not upper triangular");
  return cert;
}

MinorCertificate triangular_minor(std::size_t n, std::size_t k) { return triangular_minor(build_coloured_overlap(n, k)); }

RatVector sum_power_limit(const Permutation& rho, std::span<const Permutation> order, bool skew) {
  if (order.empty()) throw InvalidArgument("sum_power_limit: empty coordinate order");
  const std::size_t k = order.front().size();
  Permutation block = rho;
  while (block.size() + 1 < k) block = skew ? skew_sum(block, rho) : direct_sum(block, rho);
  const Permutation twice = skew ? skew_sum(block, block) : direct_sum(block, block);

  auto counts = [&](const Permutation& s) {
    RatVector c = RatVector::Zero(static_cast<Eigen::Index>(order.size()));
    std::size_t total = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const auto occ = consecutive_occurrences(order[i], s);
      c(static_cast<Eigen::Index>(i)) = Rational(static_cast<long long>(occ));
      total += occ;
    }
    if (s.size() >= k && total != s.size() - k + 1)
      throw InvalidArgument("sum_power_limit: a window pattern lies outside the coordinate order");
    return c;
  };
  const RatVector one = counts(block);
  const RatVector two = counts(twice);
  // Each further copy adds one block's windows plus one seam's worth.
  return (two - one) / Rational(static_cast<long long>(block.size()));
}

DimensionReport conjecture_probe(const Permutation& tau, std::size_t k, const ProbeEffort& effort) {
  if (k < 2) throw InvalidArgument("conjecture_probe: k must be at least 2");
  // Av(tau) is closed under direct sums iff tau is sum-indecomposable, and
  // no permutation is both sum- and skew-decomposable.
  const bool skew = is_sum_decomposable(tau);

  const PatternSet patterns{tau};
  const auto order = enumerate_avoiders(k, patterns);
  const std::size_t smaller = enumerate_avoiders(k - 1, patterns).size();

  DimensionReport r;
  r.class_description = describe(patterns);
  r.k = k;
  r.upper_bound = order.size() - smaller;
  r.method = "empirical-lower-bound";

  EchelonBasis<Rational> basis(static_cast<Eigen::Index>(order.size()));
  std::optional<RatVector> origin;
  std::size_t candidates = 0;
  std::size_t realized_cycles = 0;
  bool exhausted = false;
  auto consider = [&](const Permutation& rho) {
    ++candidates;
    RatVector p = sum_power_limit(rho, order, skew);
    if (!origin) origin = p;
    else basis.insert(p - *origin);
  };
  auto done = [&] { return origin && basis.rank() == r.upper_bound; };
  auto budget_left = [&] {
    if (candidates < effort.max_candidates) return true;
    exhausted = true;
    return false;
  };

  const std::size_t block_size = effort.block_size ? effort.block_size : k + 1;
  for (std::size_t m = 1; m <= block_size && !done(); ++m)
    for (const auto& rho : enumerate_avoiders(m, patterns)) {
      if (done() || !budget_left()) break;
      consider(rho);
    }

  if (!done() && !exhausted) {
    const auto og = build_overlap_graph(k, patterns);
    std::vector<Walk> cycles;
    try {
      cycles = simple_cycles(og.graph, effort.cycle_cap);
    } catch (const CapExceeded&) {
      exhausted = true;
    }
    for (const auto& c : cycles) {
      if (done() || !budget_left()) break;
      Walk repeated;
      for (std::size_t t = 0; t < std::max<std::size_t>(effort.repeats, 1); ++t)
        repeated.edges.insert(repeated.edges.end(), c.edges.begin(), c.edges.end());
      try {
        consider(realize_walk(og, repeated));
        ++realized_cycles;
      } catch (const InvalidArgument&) {
        // Not realizable as a single permutation of the class; skip.
      }
    }
  }

  r.lower_bound = origin ? basis.rank() : 0;
  r.conclusive = r.lower_bound == r.upper_bound;
  r.certificates = {{"closure", skew ? "skew-sum" : "direct-sum"},
                    {"candidates", std::to_string(candidates)},
                    {"realized_cycles", std::to_string(realized_cycles)},
                    {"gap", std::to_string(r.upper_bound - r.lower_bound)},
                    {"budget_exhausted", exhausted ? "true" : "false"}};
  return r;
}

DistanceCertificate projected_distance_certificate(const ColouredOverlapGraph& cog,
                                                   const LabelledMatrix<Rational>& projection,
                                                   const VPolytope<Rational>& projected_vertices,
                                                   const Permutation& sigma) {
  std::vector<Permutation> order;
  for (const auto& label : projection.row_labels) order.push_back(parse_permutation(label));
  DistanceCertificate cert;
  cert.density = density_vector(sigma, order).entries;

  std::vector<RatVector> candidates = projected_vertices.vertices;
  const Walk w = coloured_walk_of(cog, sigma);
  const auto split = decompose_walk(cog.graph, w.edges);
  if (!split.cycles.empty()) {
    RatVector x = RatVector::Zero(static_cast<Eigen::Index>(cog.graph.edge_count()));
    long long total = 0;
    for (const auto& c : split.cycles)
      for (std::size_t e : c.edges) {
        x(static_cast<Eigen::Index>(e)) += 1;
        ++total;
      }
    candidates.push_back(project_forget_colours(projection, RatVector(x / Rational(total))));
  }
  if (candidates.empty()) throw InvalidArgument("projected_distance_certificate: no candidate points");

  bool first = true;
  for (const auto& c : candidates) {
    const RatVector diff = cert.density - c;
    const Rational sq = diff.dot(diff);
    if (first || sq < cert.squared_distance) {
      cert.squared_distance = sq;
      cert.witness = c;
      first = false;
    }
  }
  return cert;
}

}  // namespace feasreg
