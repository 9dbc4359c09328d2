#pragma once

#include "feasreg/errors.hpp"
#include "feasreg/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace feasreg {

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
inline std::size_t rank_bareiss(IntMatrix m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Integer prev = 1;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return static_cast<std::size_t>(r);
}

/// Clears denominators row by row; the row space is unchanged.
inline IntMatrix clear_denominators(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Integer d = boost::multiprecision::denominator(m(i, j));
      l = l / boost::multiprecision::gcd(l, d) * d;
    }
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(i, j) = boost::multiprecision::numerator(m(i, j)) * (l / boost::multiprecision::denominator(m(i, j)));
  }
  return out;
}

inline std::size_t rank_exact(const RatMatrix& m) { return rank_bareiss(clear_denominators(m)); }
inline std::size_t rank_exact(const IntMatrix& m) { return rank_bareiss(m); }

/// Incrementally maintained row-echelon basis over a field.
template <typename Scalar>
class EchelonBasis {
 public:
  explicit EchelonBasis(Eigen::Index dimension) : dimension_(dimension) {}

  /// Adds v to the span; returns true iff v was independent of the basis.
  bool insert(Vector<Scalar> v) {
    if (v.size() != dimension_) throw InvalidArgument("EchelonBasis: dimension mismatch");
    for (std::size_t t = 0; t < rows_.size(); ++t) {
      const Scalar f = v(pivots_[t]);
      if (f != 0) v -= f * rows_[t];
    }
    Eigen::Index p = 0;
    while (p < dimension_ && v(p) == 0) ++p;
    if (p == dimension_) return false;
    const Scalar lead = v(p);
    v /= lead;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  std::size_t rank() const noexcept { return rows_.size(); }
  Eigen::Index dimension() const noexcept { return dimension_; }

 private:
  Eigen::Index dimension_;
  std::vector<Vector<Scalar>> rows_;
  std::vector<Eigen::Index> pivots_;
};

/// Dimension of the affine hull of a non-empty point set.
template <typename Scalar>
std::size_t affine_dimension(const std::vector<Vector<Scalar>>& points) {
  if (points.empty()) throw InvalidArgument("affine_dimension: empty point set");
  EchelonBasis<Scalar> basis(points.front().size());
  for (std::size_t i = 1; i < points.size(); ++i) basis.insert(points[i] - points.front());
  return basis.rank();
}

}  // namespace feasreg
