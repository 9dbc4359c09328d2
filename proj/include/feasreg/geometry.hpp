#pragma once

#include "feasreg/colouring.hpp"
#include "feasreg/errors.hpp"
#include "feasreg/graph.hpp"
#include "feasreg/linalg.hpp"
#include "feasreg/permutation.hpp"
#include "feasreg/rational.hpp"
#include "feasreg/simplex.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace feasreg {

inline std::string label_string(const Permutation& p) { return p.compact(); }
inline std::string label_string(const ColouredPermutation& cp) { return cp.to_string(); }

template <typename Label>
std::vector<std::string> edge_label_strings(const DirectedMultigraph<Label>& g) {
  std::vector<std::string> out;
  for (const auto& l : g.edge_labels()) out.push_back(label_string(l));
  return out;
}

template <typename Label>
std::vector<std::string> vertex_label_strings(const DirectedMultigraph<Label>& g) {
  std::vector<std::string> out;
  for (const auto& l : g.vertex_labels()) out.push_back(label_string(l));
  return out;
}

template <typename Scalar>
struct LabelledMatrix {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  Matrix<Scalar> values;
};

template <typename Scalar>
struct VPolytope {
  std::vector<std::string> labels;
  std::vector<Vector<Scalar>> vertices;
};

/// {x : equalities x = rhs, x_i >= 0 where nonnegative[i]}.
template <typename Scalar>
struct HPolytope {
  std::vector<std::string> labels;
  std::vector<std::string> constraint_labels;
  Matrix<Scalar> equalities;
  Vector<Scalar> rhs;
  std::vector<bool> nonnegative;

  bool satisfied_by(const Vector<Scalar>& x) const {
    if (x.size() != static_cast<Eigen::Index>(labels.size())) throw InvalidArgument("HPolytope: dimension mismatch");
    for (Eigen::Index i = 0; i < x.size(); ++i)
      if (nonnegative[i] && x(i) < 0) return false;
    return equalities * x == rhs;
  }
};

/// Occurrence count of each edge in the cycle divided by the cycle length.
template <typename Scalar, typename Label>
Vector<Scalar> cycle_vector(const DirectedMultigraph<Label>& g, const Walk& cycle) {
  if (!is_cycle(g, cycle.edges)) throw InvalidArgument("cycle_vector: not a cycle");
  Vector<Scalar> v = Vector<Scalar>::Zero(static_cast<Eigen::Index>(g.edge_count()));
  const Scalar share = Scalar(1) / Scalar(static_cast<long>(cycle.size()));
  for (std::size_t e : cycle.edges) v(static_cast<Eigen::Index>(e)) += share;
  return v;
}

/// Convex hull of the cycle vectors of all simple cycles, duplicates removed.
template <typename Scalar, typename Label>
VPolytope<Scalar> cycle_polytope(const DirectedMultigraph<Label>& g, std::size_t cap = 1'000'000) {
  VPolytope<Scalar> out{edge_label_strings(g), {}};
  for (const auto& c : simple_cycles(g, cap)) {
    Vector<Scalar> v = cycle_vector<Scalar>(g, c);
    if (std::none_of(out.vertices.begin(), out.vertices.end(), [&](const auto& u) { return u == v; }))
      out.vertices.push_back(std::move(v));
  }
  return out;
}

/// Flow balance at every vertex plus total mass one, x >= 0.
template <typename Scalar, typename Label>
HPolytope<Scalar> h_representation(const DirectedMultigraph<Label>& g) {
  const auto nv = static_cast<Eigen::Index>(g.vertex_count());
  const auto ne = static_cast<Eigen::Index>(g.edge_count());
  HPolytope<Scalar> h;
  h.labels = edge_label_strings(g);
  h.constraint_labels = vertex_label_strings(g);
  h.constraint_labels.push_back("sum");
  h.equalities = Matrix<Scalar>::Zero(nv + 1, ne);
  h.equalities.topRows(nv) = incidence_matrix<Scalar>(g);
  h.equalities.row(nv).setConstant(Scalar(1));
  h.rhs = Vector<Scalar>::Zero(nv + 1);
  h.rhs(nv) = 1;
  h.nonnegative.assign(static_cast<std::size_t>(ne), true);
  return h;
}

namespace detail {

// Rewrites H (plus extra rows over the same variables) as a standard-form
// system by splitting free variables into positive and negative parts.
template <typename Scalar>
struct StandardForm {
  Matrix<Scalar> a;
  Vector<Scalar> b;
  std::vector<Eigen::Index> negative_part;  // column of x_i^- or -1
};

template <typename Scalar>
StandardForm<Scalar> standard_form(const HPolytope<Scalar>& h, const Matrix<Scalar>& extra_a, const Vector<Scalar>& extra_b) {
  const Eigen::Index n = static_cast<Eigen::Index>(h.labels.size());
  if (h.equalities.cols() != n || (extra_a.rows() > 0 && extra_a.cols() != n) || extra_a.rows() != extra_b.size())
    throw InvalidArgument("lp: dimension mismatch");
  StandardForm<Scalar> sf;
  Eigen::Index free_count = 0;
  sf.negative_part.assign(static_cast<std::size_t>(n), -1);
  for (Eigen::Index i = 0; i < n; ++i)
    if (!h.nonnegative[i]) sf.negative_part[i] = n + free_count++;
  const Eigen::Index rows = h.equalities.rows() + extra_a.rows();
  Matrix<Scalar> base(rows, n);
  base.topRows(h.equalities.rows()) = h.equalities;
  if (extra_a.rows() > 0) base.bottomRows(extra_a.rows()) = extra_a;
  sf.a = Matrix<Scalar>::Zero(rows, n + free_count);
  sf.a.leftCols(n) = base;
  for (Eigen::Index i = 0; i < n; ++i)
    if (sf.negative_part[i] >= 0) sf.a.col(sf.negative_part[i]) = -base.col(i);
  sf.b = Vector<Scalar>(rows);
  sf.b.head(h.rhs.size()) = h.rhs;
  if (extra_b.size() > 0) sf.b.tail(extra_b.size()) = extra_b;
  return sf;
}

template <typename Scalar>
Vector<Scalar> recover(const StandardForm<Scalar>& sf, const Vector<Scalar>& y) {
  const auto n = static_cast<Eigen::Index>(sf.negative_part.size());
  Vector<Scalar> x = y.head(n);
  for (Eigen::Index i = 0; i < n; ++i)
    if (sf.negative_part[i] >= 0) x(i) -= y(sf.negative_part[i]);
  return x;
}

}  // namespace detail

/// Is {x in H : extra_a x = extra_b} non-empty?
template <typename Scalar>
bool lp_feasible(const HPolytope<Scalar>& h, const Matrix<Scalar>& extra_a = {}, const Vector<Scalar>& extra_b = {}) {
  auto sf = detail::standard_form(h, extra_a, extra_b);
  auto r = solve_lp<Scalar>(sf.a, sf.b, Vector<Scalar>::Zero(sf.a.cols()));
  return r.status == LpStatus::optimal;
}

template <typename Scalar>
struct LpOptimum {
  Scalar value;
  Vector<Scalar> optimizer;
};

/// Maximum of c.x over H. Throws InvalidArgument when H is empty and
/// InvariantViolation when unbounded (impossible for cycle polytopes).
template <typename Scalar>
LpOptimum<Scalar> lp_maximize(const Vector<Scalar>& c, const HPolytope<Scalar>& h) {
  auto sf = detail::standard_form(h, Matrix<Scalar>(0, c.size()), Vector<Scalar>(0));
  Vector<Scalar> cost = Vector<Scalar>::Zero(sf.a.cols());
  cost.head(c.size()) = c;
  for (Eigen::Index i = 0; i < c.size(); ++i)
    if (sf.negative_part[i] >= 0) cost(sf.negative_part[i]) = -c(i);
  auto r = solve_lp<Scalar>(sf.a, sf.b, cost);
  if (r.status == LpStatus::infeasible) throw InvalidArgument("lp_maximize: empty polytope");
  if (r.status == LpStatus::unbounded) throw InvariantViolation("lp_maximize: unbounded objective");
  return {r.value, detail::recover(sf, r.x)};
}

/// point in H.
template <typename Scalar>
bool contains_point(const HPolytope<Scalar>& h, const Vector<Scalar>& point) {
  const auto n = static_cast<Eigen::Index>(h.labels.size());
  if (point.size() != n) throw InvalidArgument("contains_point: dimension mismatch");
  return lp_feasible<Scalar>(h, Matrix<Scalar>::Identity(n, n), point);
}

/// point in projection(H).
template <typename Scalar>
bool projection_contains(const HPolytope<Scalar>& h, const LabelledMatrix<Scalar>& projection, const Vector<Scalar>& point) {
  if (projection.col_labels != h.labels) throw InvalidArgument("projection_contains: label mismatch");
  if (point.size() != projection.values.rows()) throw InvalidArgument("projection_contains: dimension mismatch");
  return lp_feasible<Scalar>(h, projection.values, point);
}

/// Is every vertex outside the convex hull of the others?
template <typename Scalar>
bool vertices_are_extreme(const VPolytope<Scalar>& p) {
  const std::size_t count = p.vertices.size();
  if (count < 2) return true;
  const auto dim = static_cast<Eigen::Index>(p.labels.size());
  for (std::size_t v = 0; v < count; ++v) {
    // lambda >= 0 over the other vertices, sum lambda = 1, combination = v.
    Matrix<Scalar> a(dim + 1, static_cast<Eigen::Index>(count - 1));
    Eigen::Index col = 0;
    for (std::size_t u = 0; u < count; ++u) {
      if (u == v) continue;
      a.col(col).head(dim) = p.vertices[u];
      a(dim, col) = 1;
      ++col;
    }
    Vector<Scalar> b(dim + 1);
    b.head(dim) = p.vertices[v];
    b(dim) = 1;
    if (solve_lp<Scalar>(a, b, Vector<Scalar>::Zero(a.cols())).status == LpStatus::optimal) return false;
  }
  return true;
}

/// Pi: coloured-pattern coordinates to Av_k(n...1) coordinates by summing
/// over colourings. Rows in lexicographic order, columns the graph's edges.
RatMatrix forget_colours_values(const ColouredOverlapGraph& cog, const std::vector<Permutation>& rows);
LabelledMatrix<Rational> forget_colours_matrix(const ColouredOverlapGraph& cog);
RatVector project_forget_colours(const LabelledMatrix<Rational>& projection, const RatVector& x);
VPolytope<Rational> project_forget_colours(const LabelledMatrix<Rational>& projection, const VPolytope<Rational>& p);

}  // namespace feasreg
