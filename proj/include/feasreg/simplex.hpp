#pragma once

// Exact two-phase tableau simplex with Bland's smallest-index rule.

#include "feasreg/errors.hpp"
#include "feasreg/rational.hpp"

#include <cstddef>
#include <vector>

namespace feasreg {

enum class LpStatus { optimal, infeasible, unbounded };

template <typename Scalar>
struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Scalar value{};
  Vector<Scalar> x;
};

namespace detail {

template <typename Scalar>
class Tableau {
 public:
  // Rows 0..m-1 are constraints, row m the reduced costs; last column is the
  // right-hand side. The cost row's rhs holds minus the objective value.
  Tableau(Matrix<Scalar> t, std::vector<Eigen::Index> basis) : t_(std::move(t)), basis_(std::move(basis)) {}

  Eigen::Index rows() const { return t_.rows() - 1; }
  Eigen::Index rhs_col() const { return t_.cols() - 1; }

  void set_costs(const Vector<Scalar>& c) {
    const Eigen::Index m = rows();
    t_.row(m).setZero();
    t_.row(m).head(c.size()) = c.transpose();
    for (Eigen::Index i = 0; i < m; ++i) {
      const Scalar cb = basis_[i] < c.size() ? c(basis_[i]) : Scalar(0);
      if (cb != 0) t_.row(m) -= cb * t_.row(i);
    }
  }

  void pivot(Eigen::Index r, Eigen::Index c) {
    const Scalar p = t_(r, c);
    t_.row(r) /= p;
    for (Eigen::Index i = 0; i <= rows(); ++i) {
      if (i == r) continue;
      const Scalar f = t_(i, c);
      if (f != 0) t_.row(i) -= f * t_.row(r);
    }
    basis_[r] = c;
  }

  /// Maximizes over columns [0, allowed); returns false when unbounded.
  bool optimize(Eigen::Index allowed) {
    const Eigen::Index m = rows();
    while (true) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < allowed; ++j)
        if (t_(m, j) > 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      Eigen::Index leave = -1;
      Scalar best{};
      for (Eigen::Index i = 0; i < m; ++i) {
        if (t_(i, enter) <= 0) continue;
        const Scalar ratio = t_(i, rhs_col()) / t_(i, enter);
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  Scalar objective() const { return -t_(rows(), rhs_col()); }
  const Scalar& at(Eigen::Index i, Eigen::Index j) const { return t_(i, j); }
  Eigen::Index basic(Eigen::Index i) const { return basis_[i]; }

  void drop_rows(const std::vector<bool>& drop) {
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < rows(); ++i)
      if (!drop[i]) keep.push_back(i);
    keep.push_back(rows());
    Matrix<Scalar> t(static_cast<Eigen::Index>(keep.size()), t_.cols());
    std::vector<Eigen::Index> basis;
    for (std::size_t r = 0; r < keep.size(); ++r) {
      t.row(r) = t_.row(keep[r]);
      if (keep[r] < rows()) basis.push_back(basis_[keep[r]]);
    }
    t_ = std::move(t);
    basis_ = std::move(basis);
  }

 private:
  Matrix<Scalar> t_;
  std::vector<Eigen::Index> basis_;
};

}  // namespace detail

/// Maximizes c.x subject to a x = b and x >= 0.
template <typename Scalar>
LpResult<Scalar> solve_lp(const Matrix<Scalar>& a, const Vector<Scalar>& b, const Vector<Scalar>& c) {
  const Eigen::Index m = a.rows(), n = a.cols();
  if (b.size() != m || c.size() != n) throw InvalidArgument("solve_lp: dimension mismatch");

  Matrix<Scalar> t = Matrix<Scalar>::Zero(m + 1, n + m + 1);
  std::vector<Eigen::Index> basis(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Scalar sign = b(i) < 0 ? Scalar(-1) : Scalar(1);
    t.row(i).head(n) = sign * a.row(i);
    t(i, n + i) = 1;
    t(i, n + m) = sign * b(i);
    basis[i] = n + i;
  }
  detail::Tableau<Scalar> tab(std::move(t), std::move(basis));

  // Phase 1: drive the artificial variables to zero.
  Vector<Scalar> phase1 = Vector<Scalar>::Zero(n + m);
  phase1.tail(m).setConstant(Scalar(-1));
  tab.set_costs(phase1);
  tab.optimize(n + m);
  LpResult<Scalar> result;
  if (tab.objective() != 0) return result;

  std::vector<bool> redundant(m, false);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (tab.basic(i) < n) continue;
    Eigen::Index j = 0;
    while (j < n && tab.at(i, j) == 0) ++j;
    if (j < n) tab.pivot(i, j);
    else redundant[i] = true;
  }
  tab.drop_rows(redundant);

  // Phase 2 over the original columns only.
  tab.set_costs(c);
  if (!tab.optimize(n)) {
    result.status = LpStatus::unbounded;
    return result;
  }
  result.status = LpStatus::optimal;
  result.value = tab.objective();
  result.x = Vector<Scalar>::Zero(n);
  for (Eigen::Index i = 0; i < tab.rows(); ++i)
    if (tab.basic(i) < n) result.x(tab.basic(i)) = tab.at(i, tab.rhs_col());
  return result;
}

}  // namespace feasreg
