#include "feasreg/geometry.hpp"

#include "feasreg/enumeration.hpp"

namespace feasreg {

RatMatrix forget_colours_values(const ColouredOverlapGraph& cog, const std::vector<Permutation>& rows) {
  RatMatrix pi = RatMatrix::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cog.graph.edge_count()));
  for (std::size_t e = 0; e < cog.graph.edge_count(); ++e) {
    auto it = std::lower_bound(rows.begin(), rows.end(), cog.graph.edge_label(e).perm);
    if (it == rows.end() || *it != cog.graph.edge_label(e).perm)
      throw InvariantViolation("forget_colours: coloured edge over a permutation outside the class");
    pi(it - rows.begin(), static_cast<Eigen::Index>(e)) = 1;
  }
  return pi;
}

LabelledMatrix<Rational> forget_colours_matrix(const ColouredOverlapGraph& cog) {
  auto rows = enumerate_avoiders(cog.k, {Permutation::decreasing(cog.n)});
  LabelledMatrix<Rational> out;
  for (const auto& p : rows) out.row_labels.push_back(label_string(p));
  out.col_labels = edge_label_strings(cog.graph);
  out.values = forget_colours_values(cog, rows);
  return out;
}

RatVector project_forget_colours(const LabelledMatrix<Rational>& projection, const RatVector& x) {
  if (x.size() != projection.values.cols()) throw InvalidArgument("project_forget_colours: label mismatch");
  return projection.values * x;
}

VPolytope<Rational> project_forget_colours(const LabelledMatrix<Rational>& projection, const VPolytope<Rational>& p) {
  if (p.labels != projection.col_labels) throw InvalidArgument("project_forget_colours: label mismatch");
  VPolytope<Rational> out{projection.row_labels, {}};
  for (const auto& v : p.vertices) {
    RatVector w = projection.values * v;
    if (std::none_of(out.vertices.begin(), out.vertices.end(), [&](const RatVector& u) { return u == w; }))
      out.vertices.push_back(std::move(w));
  }
  return out;
}

}  // namespace feasreg
