#pragma once

#include "feasreg/colouring.hpp"
#include "feasreg/geometry.hpp"
#include "feasreg/overlap.hpp"
#include "feasreg/permutation.hpp"
#include "feasreg/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace feasreg {

/// A = [A_ker; A_S]. Rows: Av_k(n...1) then the vertices of Ov^mon[k, n...1];
/// columns: its edges. A_ker marks the underlying permutation of each
/// column, A_S is the incidence matrix.
LabelledMatrix<Rational> matrix_A(const ColouredOverlapGraph& cog);
LabelledMatrix<Rational> matrix_A(std::size_t n, std::size_t k);

struct DimensionReport {
  std::string class_description;
  std::size_t k = 0;
  std::size_t upper_bound = 0;
  /// Certified lower bound; equals the dimension when conclusive.
  std::size_t lower_bound = 0;
  bool conclusive = false;
  std::string method;
  /// Named supporting quantities, e.g. {"rank_A", "13"}.
  std::vector<std::pair<std::string, std::string>> certificates;
};

/// Dimension of the cycle polytope P(Ov_{k,Av(B)}) against the bound
/// |Av_k(B)| - |Av_{k-1}(B)|. For B empty this is P_k itself.
DimensionReport cycle_polytope_dimension(const PatternSet& patterns, std::size_t k, std::size_t cycle_cap = 1'000'000);

/// Dimension of the feasible region for Av(n...1), computed three ways:
/// closed form, rank of A minus the vertex count, and the affine dimension of
/// the projected cycle polytope. Any disagreement is an InvariantViolation.
DimensionReport feasible_dimension_monotone(std::size_t n, std::size_t k, std::size_t cycle_cap = 1'000'000);

struct MinorCertificate {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  RatMatrix minor;
  bool upper_triangular = false;
};

/// Square minor of A built from the completion edges and one coloured edge
/// per avoider not ending in its maximum, ordered to be upper triangular.
MinorCertificate triangular_minor(const ColouredOverlapGraph& cog);
MinorCertificate triangular_minor(std::size_t n, std::size_t k);

struct ProbeEffort {
  std::size_t cycle_cap = 200'000;
  /// Copies of each cycle concatenated before realizing it.
  std::size_t repeats = 2;
  /// Avoiders up to this size are also used directly as building blocks.
  std::size_t block_size = 0;  // 0 means k + 1
  std::size_t max_candidates = 20'000;
};

/// Exact limit of the consecutive k-pattern densities of rho+rho+...+rho
/// (direct sums when `skew` is false, skew sums otherwise).
RatVector sum_power_limit(const Permutation& rho, std::span<const Permutation> order, bool skew);

/// Bounds the dimension of the feasible region of Av(tau). The lower bound
/// is the affine dimension of exact limit points of sum powers of explicit
/// permutations; never claims more than it certifies.
DimensionReport conjecture_probe(const Permutation& tau, std::size_t k, const ProbeEffort& effort = {});

/// Upper bound on the Euclidean distance from the density vector of sigma to
/// the projected region, witnessed by an explicit point of that region.
struct DistanceCertificate {
  RatVector density;
  RatVector witness;
  Rational squared_distance;
};

DistanceCertificate projected_distance_certificate(const ColouredOverlapGraph& cog,
                                                   const LabelledMatrix<Rational>& projection,
                                                   const VPolytope<Rational>& projected_vertices,
                                                   const Permutation& sigma);

}  // namespace feasreg
