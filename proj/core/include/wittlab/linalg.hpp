#pragma once

#include "wittlab/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <vector>

namespace wittlab {

/// Dense matrix of exact rationals, row-major.
class RationalMatrix {
public:
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix from_rows(
      std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

/// Densifies sparse rows (column index -> coefficient); rows that are
/// entirely zero are dropped.
RationalMatrix matrix_from_sparse_rows(
    std::size_t cols, const std::vector<std::map<std::size_t, Rational>>& rows);

struct NullspaceResult {
  std::size_t rank = 0;
  /// Kernel basis; each vector is normalized to a primitive integer vector
  /// with positive first nonzero entry, so the output is deterministic.
  std::vector<std::vector<Rational>> basis;

  std::size_t nullity() const { return basis.size(); }
};

/// Exact kernel basis via fraction-free (Bareiss) elimination: each row is
/// scaled integral, pivots are chosen by smallest absolute value in the
/// column to bound coefficient growth, and every division in the update
/// step is exact. rank + nullity = column count always holds.
NullspaceResult nullspace(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

struct LinearSolveResult {
  /// A particular solution with free variables set to zero, when one exists.
  std::optional<std::vector<Rational>> solution;
  /// When the system is inconsistent: a row combination y with
  /// y^T A = 0 and y^T b = 1, an exact infeasibility certificate.
  std::optional<std::vector<Rational>> infeasibility_witness;

  bool feasible() const { return solution.has_value(); }
};

/// Solves A x = b exactly. Carries a row-operation tracker to produce the
/// infeasibility witness, so intended for the moderate system sizes used
/// by the certificate checks (the dimension counts go through nullspace).
LinearSolveResult solve_linear(const RationalMatrix& a, const std::vector<Rational>& b);

/// Incremental exact row space, used for greedy independence selection.
/// A plain rational Gauss reduction, kept independent of the Bareiss path
/// so the two routes can cross-check each other.
class RowSpace {
public:
  explicit RowSpace(std::size_t cols) : cols_(cols) {}

  /// Reduces the row against the span; stores the remainder and returns
  /// true when it enlarged the span.
  bool insert(std::vector<Rational> row);
  bool contains(std::vector<Rational> row) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

private:
  void reduce(std::vector<Rational>& row) const;
  static std::size_t leading(const std::vector<Rational>& row);

  std::size_t cols_;
  std::vector<std::vector<Rational>> rows_;  // each normalized, unique leading column
};

}  // namespace wittlab
