#include "oracles.hpp"

#include "feasreg/analysis.hpp"
#include "feasreg/errors.hpp"
#include "feasreg/golden.hpp"
#include "feasreg/linalg.hpp"

#include <doctest.h>

using namespace feasreg;

namespace {
Permutation P(const char* s) { return Permutation::from_digits(s); }

void check_against(const LabelledMatrix<Rational>& got, const golden::GoldenMatrix& want) {
  CHECK(got.row_labels == want.rows);
  CHECK(got.col_labels == want.cols);
  REQUIRE(static_cast<std::size_t>(got.values.rows()) == want.rows.size());
  REQUIRE(static_cast<std::size_t>(got.values.cols()) == want.cols.size());
  for (std::size_t i = 0; i < want.rows.size(); ++i)
    for (std::size_t j = 0; j < want.cols.size(); ++j)
      CHECK(got.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) == want.values[i][j]);
}

std::string cert(const DimensionReport& r, const std::string& name) {
  for (auto& [k, v] : r.certificates)
    if (k == name) return v;
  return {};
}
}  // namespace

TEST_CASE("matrix A for n=3, k=3") {
  const auto a = matrix_A(3, 3);
  check_against(a, golden::matrix_a_3_3);
  CHECK(rank_exact(a.values) == 7);
}

TEST_CASE("matrix A is the kernel indicator stacked on the incidence matrix") {
  for (auto [n, k] : {std::pair{3u, 3u}, {3u, 4u}, {4u, 3u}, {4u, 4u}}) {
    const auto cog = build_coloured_overlap(n, k);
    const auto a = matrix_A(cog);
    const auto perms = enumerate_avoiders(k, {Permutation::decreasing(n)});
    const auto np = static_cast<Eigen::Index>(perms.size());
    REQUIRE(a.values.rows() == np + static_cast<Eigen::Index>(cog.graph.vertex_count()));
    REQUIRE(a.values.cols() == static_cast<Eigen::Index>(cog.graph.edge_count()));
    for (Eigen::Index i = 0; i < np; ++i)
      for (std::size_t e = 0; e < cog.graph.edge_count(); ++e)
        CHECK(a.values(i, static_cast<Eigen::Index>(e)) == (cog.graph.edge_label(e).perm == perms[i] ? 1 : 0));
    CHECK(a.values.bottomRows(a.values.rows() - np) == incidence_matrix<Rational>(cog.graph));
  }
}

TEST_CASE("matrix A for n=4, k=3 against the published landscape matrix") {
  const auto a = matrix_A(4, 3);
  CHECK(a.values.rows() == 15);
  CHECK(a.values.cols() == 29);
  const auto& erratum = golden::matrix_a_4_3_erratum;
  check_against(a, golden::corrected(golden::matrix_a_4_3, erratum));
  // Only the erratum column differs from the published one.
  std::size_t differing_columns = 0;
  for (std::size_t j = 0; j < 29; ++j) {
    bool differs = a.col_labels[j] != golden::matrix_a_4_3.cols[j];
    for (std::size_t i = 0; i < 15; ++i)
      differs |= a.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) != golden::matrix_a_4_3.values[i][j];
    if (differs) {
      ++differing_columns;
      CHECK(j == erratum.column);
    }
  }
  CHECK(differing_columns == 1);
  CHECK(golden::matrix_a_4_3.cols[erratum.column] == erratum.published_label);
  CHECK(rank_exact(a.values) == 13);
}

TEST_CASE("triangular minor for n=3, k=3") {
  const auto m = triangular_minor(3, 3);
  check_against(LabelledMatrix<Rational>{m.row_labels, m.col_labels, m.minor}, golden::minor_3_3);
  CHECK(m.upper_triangular);
}

TEST_CASE("triangular minors are non-singular and certify the rank") {
  for (auto [n, k] : {std::pair{3u, 3u}, {3u, 4u}, {4u, 3u}, {4u, 4u}, {3u, 5u}}) {
    const auto cog = build_coloured_overlap(n, k);
    const auto m = triangular_minor(cog);
    CHECK(m.upper_triangular);
    CHECK(m.minor.rows() == m.minor.cols());
    CHECK(rank_exact(m.minor) == static_cast<std::size_t>(m.minor.rows()));
    CHECK(rank_exact(matrix_A(cog).values) == static_cast<std::size_t>(m.minor.rows()));
  }
}

TEST_CASE("cycle polytope dimension reports") {
  const auto p3 = cycle_polytope_dimension({}, 3);
  CHECK(p3.lower_bound == 4);
  CHECK(p3.upper_bound == 4);
  CHECK(p3.conclusive);
  CHECK(cycle_polytope_dimension({}, 4).lower_bound == 18);
  for (auto [k, d] : {std::pair{3u, 3u}, {4u, 9u}, {5u, 28u}}) {
    const auto r = cycle_polytope_dimension({P("312")}, k);
    CHECK(r.lower_bound == d);
    CHECK(r.upper_bound == d);
    CHECK(r.conclusive);
  }
  CHECK_THROWS_AS(cycle_polytope_dimension({}, 5, 100), CapExceeded);
}

TEST_CASE("monotone feasible region dimensions") {
  for (auto [n, k, d] : {std::tuple{3u, 3u, 3u}, {3u, 4u, 9u}, {4u, 3u, 4u}}) {
    const auto r = feasible_dimension_monotone(n, k);
    CHECK(r.lower_bound == d);
    CHECK(r.upper_bound == d);
    CHECK(r.conclusive);
    CHECK_FALSE(cert(r, "rank_A").empty());
  }
  // The coloured graph for (4,4) has too many simple cycles for the
  // projected-polytope route at the default cap.
  CHECK_THROWS_AS(feasible_dimension_monotone(4, 4, 1000), CapExceeded);
  // closed form |Av_k| - |Av_{k-1}|
  for (auto [n, k] : {std::pair{3u, 3u}, {3u, 4u}, {4u, 3u}, {3u, 5u}}) {
    const auto r = feasible_dimension_monotone(n, k);
    const std::size_t closed = enumerate_avoiders(k, {Permutation::decreasing(n)}).size() -
                               enumerate_avoiders(k - 1, {Permutation::decreasing(n)}).size();
    CHECK(r.lower_bound == closed);
  }
}

TEST_CASE("sum power limits") {
  const auto order = all_permutations(3);
  auto idx = [&](const char* s) { return std::find(order.begin(), order.end(), P(s)) - order.begin(); };
  const auto l1 = sum_power_limit(P("1"), order, false);
  CHECK(l1(idx("123")) == 1);
  CHECK(l1.sum() == 1);
  const auto l21 = sum_power_limit(P("21"), order, false);
  CHECK(l21(idx("213")) == Rational(1, 2));
  CHECK(l21(idx("132")) == Rational(1, 2));
  const auto skew = sum_power_limit(P("12"), order, true);
  CHECK(skew(idx("231")) == Rational(1, 2));
  CHECK(skew(idx("312")) == Rational(1, 2));

  // The window counts of L copies grow linearly with slope |rho| * limit.
  for (const auto& rho : {P("2413"), P("231"), P("3142"), P("21"), P("1")})
    for (bool sk : {false, true}) {
      const auto lim = sum_power_limit(rho, order, sk);
      CHECK(lim.sum() == 1);
      for (std::size_t copies = 4; copies <= 7; ++copies) {
        const auto big = sk ? repeat_skew_sum(copies, rho) : repeat_sum(copies, rho);
        const auto small = sk ? repeat_skew_sum(copies - 1, rho) : repeat_sum(copies - 1, rho);
        const RatVector diff = density_vector(big, order).entries * Rational(static_cast<long>(big.size())) -
                               density_vector(small, order).entries * Rational(static_cast<long>(small.size()));
        CHECK(diff == lim * Rational(static_cast<long>(rho.size())));
      }
    }
}

TEST_CASE("conjecture probe") {
  for (auto [tau, k, d] : {std::tuple{"312", 3u, 3u}, {"321", 3u, 3u}, {"1342", 3u, 4u}, {"2413", 3u, 4u}, {"1342", 4u, 17u},
                           {"312", 4u, 9u}}) {
    const auto r = conjecture_probe(P(tau), k);
    CHECK(r.upper_bound == d);
    CHECK(r.lower_bound == d);
    CHECK(r.conclusive);
  }
  const auto r21 = conjecture_probe(P("21"), 4);
  CHECK(r21.upper_bound == 0);
  CHECK(r21.conclusive);
  const auto r2143 = conjecture_probe(P("2143"), 3);
  CHECK(r2143.upper_bound == 4);
  CHECK(r2143.conclusive);
  CHECK(cert(r2143, "closure") == "skew-sum");
  CHECK_THROWS_AS(conjecture_probe(P("312"), 1), InvalidArgument);
  ProbeEffort tiny;
  tiny.max_candidates = 2;
  const auto partial = conjecture_probe(P("1342"), 4, tiny);
  CHECK(partial.lower_bound <= 1);
  CHECK_FALSE(partial.conclusive);
  CHECK(cert(partial, "budget_exhausted") == "true");
}

TEST_CASE("distance certificates") {
  const auto cog = build_coloured_overlap(3, 3);
  const auto pi = forget_colours_matrix(cog);
  const auto projected = project_forget_colours(pi, cycle_polytope<Rational>(cog.graph));
  const auto h = h_representation<Rational>(cog.graph);
  for (std::size_t m = 3; m <= 8; ++m)
    for (const auto& s : enumerate_avoiders(m, {P("321")})) {
      const auto c = projected_distance_certificate(cog, pi, projected, s);
      const RatVector diff = c.density - c.witness;
      CHECK(c.squared_distance == diff.dot(diff));
      CHECK(c.squared_distance * Rational(static_cast<long>(m * m)) <= 18 * 18);
      CHECK(c.witness.sum() == 1);
    }
  const auto c = projected_distance_certificate(cog, pi, projected, P("123456789"));
  CHECK(c.squared_distance * 81 == 4);
  CHECK(projection_contains(h, pi, c.witness));
}
