#include "feasreg/reproduce.hpp"

#include "feasreg/analysis.hpp"
#include "feasreg/errors.hpp"
#include "feasreg/golden.hpp"
#include "feasreg/io.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace feasreg {

namespace {

class Checker {
 public:
  explicit Checker(FactResult& r) : r_(r) { r_.passed = true; }

  void check(bool ok, const std::string& what) {
    r_.details.push_back((ok ? "ok " : "MISMATCH ") + what);
    if (!ok) r_.passed = false;
  }

  template <typename T>
  void equal(const T& got, const T& want, const std::string& what) {
    std::ostringstream s;
    s << what << ": got " << got << ", expected " << want;
    check(got == want, s.str());
  }

 private:
  FactResult& r_;
};

void compare_matrix(Checker& c, const LabelledMatrix<Rational>& got, const golden::GoldenMatrix& want,
                    const std::string& name) {
  c.equal<std::size_t>(got.row_labels.size(), want.rows.size(), name + " row count");
  c.equal<std::size_t>(got.col_labels.size(), want.cols.size(), name + " column count");
  c.check(got.row_labels == want.rows, name + " row labels");
  c.check(got.col_labels == want.cols, name + " column labels");
  std::size_t mismatches = 0;
  if (static_cast<std::size_t>(got.values.rows()) == want.rows.size() &&
      static_cast<std::size_t>(got.values.cols()) == want.cols.size()) {
    for (std::size_t i = 0; i < want.rows.size(); ++i)
      for (std::size_t j = 0; j < want.cols.size(); ++j)
        if (got.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) != want.values[i][j]) ++mismatches;
  } else {
    mismatches = want.rows.size() * want.cols.size();
  }
  c.equal<std::size_t>(mismatches, 0, name + " differing entries");
}

std::vector<RatVector> reorder(const VPolytope<Rational>& p, const std::vector<Permutation>& order) {
  std::vector<RatVector> out;
  for (const auto& v : p.vertices) {
    RatVector w = RatVector::Zero(static_cast<Eigen::Index>(order.size()));
    for (std::size_t i = 0; i < p.labels.size(); ++i) {
      auto it = std::find_if(order.begin(), order.end(), [&](const Permutation& q) { return q.compact() == p.labels[i]; });
      w(it - order.begin()) = v(static_cast<Eigen::Index>(i));
    }
    out.push_back(w);
  }
  return out;
}

RatVector conventional(std::initializer_list<Rational> entries) {
  RatVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const auto& e : entries) v(i++) = e;
  return v;
}

bool same_set(std::vector<RatVector> a, std::vector<RatVector> b) {
  if (a.size() != b.size()) return false;
  for (const auto& v : a) {
    auto it = std::find_if(b.begin(), b.end(), [&](const RatVector& w) { return w == v; });
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

std::map<std::size_t, std::size_t> length_histogram(const std::vector<Walk>& cycles) {
  std::map<std::size_t, std::size_t> h;
  for (const auto& c : cycles) ++h[c.size()];
  return h;
}

std::string histogram_string(const std::map<std::size_t, std::size_t>& h) {
  std::string s;
  for (const auto& [len, count] : h) s += (s.empty() ? "" : " ") + std::to_string(len) + "x" + std::to_string(count);
  return s;
}

const Rational half{1, 2};

void fig_1(Checker& c) {
  const auto og = build_overlap_graph(3, {});
  c.equal<std::size_t>(og.graph.vertex_count(), 2, "vertices of Ov_3");
  c.equal<std::size_t>(og.graph.edge_count(), 6, "edges of Ov_3");
  const auto cycles = simple_cycles(og.graph);
  c.equal(histogram_string(length_histogram(cycles)), std::string("1x2 2x4"), "cycle lengths of Ov_3");
  const auto p = cycle_polytope<Rational>(og.graph);
  const std::vector<RatVector> want{
      conventional({1, 0, 0, 0, 0, 0}),       conventional({0, 0, 0, 0, 0, 1}),
      conventional({0, half, half, 0, 0, 0}), conventional({0, half, 0, half, 0, 0}),
      conventional({0, 0, half, 0, half, 0}), conventional({0, 0, 0, half, half, 0})};
  c.check(same_set(reorder(p, conventional_order(3)), want), "vertex set of P_3 in order (123,231,312,213,132,321)");
  c.equal<std::size_t>(affine_dimension(p.vertices), 4, "dimension of P_3");
}

void fig_4(Checker& c) {
  const auto og312 = build_overlap_graph(3, {Permutation{3, 1, 2}});
  const auto p312 = cycle_polytope<Rational>(og312.graph);
  const std::vector<RatVector> want312{conventional({1, 0, 0, 0, 0, 0}), conventional({0, 0, 0, 0, 0, 1}),
                                       conventional({0, half, 0, half, 0, 0}), conventional({0, 0, 0, half, half, 0})};
  c.check(same_set(reorder(p312, conventional_order(3)), want312), "vertex set of P^Av(312)_3");
  c.equal<std::size_t>(affine_dimension(p312.vertices), 3, "dimension of P^Av(312)_3");

  const auto og321 = build_overlap_graph(3, {Permutation{3, 2, 1}});
  const auto p321 = cycle_polytope<Rational>(og321.graph);
  c.equal<std::size_t>(p321.vertices.size(), 5, "vertices of P(Ov_3,Av(321))");
  c.equal<std::size_t>(affine_dimension(p321.vertices), 3, "dimension of P(Ov_3,Av(321))");

  const auto cog = build_coloured_overlap(3, 3);
  const auto pi = forget_colours_matrix(cog);
  const auto projected = project_forget_colours(pi, cycle_polytope<Rational>(cog.graph));
  c.equal<std::size_t>(affine_dimension(projected.vertices), 3, "dimension of P^Av(321)_3");
  const auto h321 = h_representation<Rational>(og321.graph);
  c.check(std::all_of(projected.vertices.begin(), projected.vertices.end(),
                      [&](const RatVector& v) { return h321.satisfied_by(v); }),
          "P^Av(321)_3 inside P(Ov_3,Av(321))");
  const auto h = h_representation<Rational>(cog.graph);
  const bool strict = std::any_of(p321.vertices.begin(), p321.vertices.end(),
                                  [&](const RatVector& v) { return !projection_contains(h, pi, v); });
  c.check(strict, "P^Av(321)_3 strictly smaller than P(Ov_3,Av(321))");
}

void fig_6(Checker& c) {
  const auto cog = build_coloured_overlap(3, 3);
  c.equal<std::size_t>(cog.graph.vertex_count(), 4, "vertices of Ov^mon[3,321]");
  c.equal<std::size_t>(cog.graph.edge_count(), 9, "edges of Ov^mon[3,321]");
  const auto from = cog.graph.find_vertex(parse_coloured("1:1 2:1"));
  const auto to = cog.graph.find_vertex(parse_coloured("2:1 1:2"));
  std::set<std::string> labels;
  for (std::size_t e : cog.graph.out_edges(*from))
    if (cog.graph.edge(e).target == *to) labels.insert(cog.graph.edge_label(e).pretty());
  c.check(labels == std::set<std::string>{"red23blue1", "red13blue2"}, "parallel edges red12 -> red2blue1");
  c.equal(histogram_string(length_histogram(simple_cycles(cog.graph))), std::string("1x2 2x1 3x3 4x2"),
          "cycle lengths of Ov^mon[3,321]");

  const auto sigma = Permutation::from_digits(golden::walk_permutation);
  c.check(ritmo(sigma).colours == golden::walk_colours, "RITMO colouring of 1243756");
  const auto w = coloured_walk_of(cog, sigma);
  std::vector<std::string> got;
  for (std::size_t e : w.edges) got.push_back(cog.graph.edge_label(e).to_string());
  c.check(got == golden::walk_edges, "coloured 3-walk of 1243756");
}

void table_1(Checker& c) {
  std::vector<std::string> got;
  for (const auto& w : enumerate_inherited(3, 3)) got.push_back(w.state.to_string());
  c.check(got == golden::inherited_2_3, "inherited 2-colourings of size 3");
  c.check(std::find(got.begin(), got.end(), golden::not_inherited_2_3) == got.end(), "red2blue13 is not inherited");
}

void matrix_a_3_3(Checker& c) {
  const auto cog = build_coloured_overlap(3, 3);
  compare_matrix(c, matrix_A(cog), golden::matrix_a_3_3, "A(3,3)");
  const auto minor = triangular_minor(cog);
  compare_matrix(c, LabelledMatrix<Rational>{minor.row_labels, minor.col_labels, minor.minor}, golden::minor_3_3,
                 "minor(3,3)");
  c.check(minor.upper_triangular, "minor(3,3) upper triangular with non-zero diagonal");
}

bool has_monochromatic_descent(const ColouredPermutation& cp) {
  for (std::size_t i = 0; i < cp.size(); ++i)
    for (std::size_t j = i + 1; j < cp.size(); ++j)
      if (cp.colours[i] == cp.colours[j] && cp.perm[i] > cp.perm[j]) return true;
  return false;
}

void matrix_a_4_3(Checker& c) {
  const auto a = matrix_A(4, 3);
  const auto& erratum = golden::matrix_a_4_3_erratum;
  const auto published = parse_coloured(erratum.published_label);
  c.check(has_monochromatic_descent(published),
          "published column " + std::to_string(erratum.column + 1) + " label " + published.pretty() +
              " has a monochromatic descent, so it is not inherited; replaced by " +
              parse_coloured(erratum.corrected_label).pretty());
  compare_matrix(c, a, golden::corrected(golden::matrix_a_4_3, erratum), "A(4,3)");
  c.equal<std::size_t>(rank_exact(a.values), 13, "rank of A(4,3)");
}

void fact_1_10(Checker& c) {
  // (0,1/2,1/2,0,0,0) in the order (123,231,312,213,132,321), restricted to
  // Av_3(321) in lexicographic order (123,132,213,231,312).
  RatVector point = RatVector::Zero(5);
  point(3) = half;
  point(4) = half;
  const auto og = build_overlap_graph(3, {Permutation{3, 2, 1}});
  const bool in_cycle_polytope = contains_point(h_representation<Rational>(og.graph), point);
  const auto cog = build_coloured_overlap(3, 3);
  const bool in_region = projection_contains(h_representation<Rational>(cog.graph), forget_colours_matrix(cog), point);
  c.check(in_cycle_polytope, "(0,1/2,1/2,0,0,0) lies in P(Ov_3,Av(321))");
  c.check(!in_region, "(0,1/2,1/2,0,0,0) lies outside P^Av(321)_3");
}

struct Fact {
  const char* id;
  const char* description;
  void (*run)(Checker&);
};

const std::vector<Fact>& registry() {
  static const std::vector<Fact> facts{
      {"fig-1", "overlap graph Ov_3 and the 4-dimensional polytope P_3", fig_1},
      {"fig-4", "P^Av(312)_3, P(Ov_3,Av(321)) and the strictly smaller P^Av(321)_3", fig_4},
      {"fig-6", "coloured overlap graph Ov^mon[3,321] and the walk of 1243756", fig_6},
      {"table-1", "inherited 2-colourings of size 3", table_1},
      {"matrix-a-3-3", "matrix A and its triangular minor for n=3, k=3", matrix_a_3_3},
      {"matrix-a-4-3", "matrix A for n=4, k=3", matrix_a_4_3},
      {"fact-1-10", "a point of P(Ov_3,Av(321)) outside the feasible region", fact_1_10},
  };
  return facts;
}

FactResult run(const Fact& f) {
  FactResult r{f.id, f.description, false, {}};
  Checker c(r);
  f.run(c);
  return r;
}

}  // namespace

std::vector<std::string> fact_ids() {
  std::vector<std::string> out;
  for (const auto& f : registry()) out.emplace_back(f.id);
  return out;
}

FactResult reproduce_fact(const std::string& id) {
  for (const auto& f : registry())
    if (id == f.id) return run(f);
  throw InvalidArgument("unknown fact id '" + id + "'");
}

std::vector<FactResult> reproduce_all() {
  std::vector<FactResult> out;
  for (const auto& f : registry()) out.push_back(run(f));
  return out;
}

}  // namespace feasreg
