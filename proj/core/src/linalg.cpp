#include "wittlab/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace wittlab {

namespace mp = boost::multiprecision;

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::from_rows(
    std::initializer_list<std::initializer_list<Rational>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  RationalMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("from_rows: ragged rows");
    std::size_t j = 0;
    for (const auto& v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

RationalMatrix matrix_from_sparse_rows(
    std::size_t cols, const std::vector<std::map<std::size_t, Rational>>& rows) {
  std::size_t nonzero = 0;
  for (const auto& row : rows) {
    if (!row.empty()) ++nonzero;
  }
  RationalMatrix m(nonzero, cols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.empty()) continue;
    for (const auto& [c, v] : row) {
      if (c >= cols) throw std::out_of_range("matrix_from_sparse_rows: column index");
      m.at(r, c) = v;
    }
    ++r;
  }
  return m;
}

namespace {

using IntRow = std::vector<BigInt>;
using SparseRow = std::map<std::size_t, Rational>;

// Scales a sparse row to primitive integer entries with positive leading
// coefficient; rows equal up to scale then compare equal, which is what
// the deduplication set relies on.
void normalize_sparse(SparseRow& row) {
  if (row.empty()) return;
  BigInt den_lcm = 1;
  for (const auto& [c, v] : row) den_lcm = mp::lcm(den_lcm, v.denominator());
  BigInt num_gcd = 0;
  for (const auto& [c, v] : row) {
    num_gcd = mp::gcd(num_gcd, v.numerator() * (den_lcm / v.denominator()));
  }
  num_gcd = mp::abs(num_gcd);
  if (row.begin()->second.sign() < 0) num_gcd = -num_gcd;
  for (auto& [c, v] : row) {
    v = Rational(v.numerator() * (den_lcm / v.denominator()) / num_gcd);
  }
}

struct Preprocessed {
  std::vector<SparseRow> core_rows;     // over remapped core columns
  std::vector<std::size_t> core_cols;   // core column -> original column
  std::vector<bool> forced_zero;        // original columns pinned to zero
  std::size_t forced_count = 0;
};

// Structural reduction ahead of the dense fraction-free step: duplicate
// rows collapse, and single-entry rows pin their variable to zero, which
// cascades. Solution-space preserving, and the rank splits additively as
// forced_count + rank(core).
Preprocessed preprocess(std::vector<SparseRow> rows, std::size_t cols) {
  Preprocessed out;
  out.forced_zero.assign(cols, false);

  std::set<SparseRow> unique;
  for (auto& row : rows) {
    if (row.empty()) continue;
    normalize_sparse(row);
    unique.insert(std::move(row));
  }
  std::vector<SparseRow> work(unique.begin(), unique.end());

  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& row : work) {
      if (row.size() == 1 && !out.forced_zero[row.begin()->first]) {
        out.forced_zero[row.begin()->first] = true;
        ++out.forced_count;
        changed = true;
      }
    }
    if (!changed) break;
    std::set<SparseRow> next;
    for (auto& row : work) {
      SparseRow reduced;
      for (const auto& [c, v] : row) {
        if (!out.forced_zero[c]) reduced.emplace(c, v);
      }
      if (reduced.empty()) continue;
      normalize_sparse(reduced);
      next.insert(std::move(reduced));
    }
    work.assign(next.begin(), next.end());
  }

  std::vector<std::size_t> remap(cols, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    if (out.forced_zero[c]) continue;
    remap[c] = out.core_cols.size();
    out.core_cols.push_back(c);
  }
  out.core_rows.reserve(work.size());
  for (auto& row : work) {
    SparseRow mapped;
    for (const auto& [c, v] : row) mapped.emplace(remap[c], v);
    out.core_rows.push_back(std::move(mapped));
  }
  return out;
}

struct Echelon {
  std::vector<IntRow> rows;
  std::vector<std::size_t> pivot_cols;  // pivot of row r sits in pivot_cols[r]

  std::size_t rank() const { return pivot_cols.size(); }
};

// One-step fraction-free elimination. Every entry of the working matrix is
// a minor of the (scaled) input, so the division by the previous pivot is
// exact; that is checked, not assumed. Pivots come from the first
// pivot_limit columns, chosen smallest in absolute value; any augmented
// columns ride along.
Echelon fraction_free_echelon(std::vector<IntRow> rows, std::size_t pivot_limit) {
  Echelon out;
  const std::size_t nrows = rows.size();
  const std::size_t ncols = nrows == 0 ? 0 : rows[0].size();
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_limit && r < nrows; ++c) {
    std::size_t pivot_row = nrows;
    for (std::size_t i = r; i < nrows; ++i) {
      if (rows[i][c].is_zero()) continue;
      if (pivot_row == nrows || mp::abs(rows[i][c]) < mp::abs(rows[pivot_row][c])) {
        pivot_row = i;
      }
    }
    if (pivot_row == nrows) continue;
    std::swap(rows[r], rows[pivot_row]);
    const BigInt& pivot = rows[r][c];
    for (std::size_t i = r + 1; i < nrows; ++i) {
      const BigInt factor = rows[i][c];
      for (std::size_t j = c + 1; j < ncols; ++j) {
        BigInt t = pivot * rows[i][j] - factor * rows[r][j];
        if (t.is_zero()) {
          rows[i][j] = 0;
          continue;
        }
        BigInt q, rem;
        mp::divide_qr(t, prev, q, rem);
        if (!rem.is_zero()) {
          throw std::logic_error("fraction_free_echelon: inexact division");
        }
        rows[i][j] = std::move(q);
      }
      rows[i][c] = 0;
    }
    prev = pivot;
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rows = std::move(rows);
  return out;
}

std::vector<IntRow> integral_rows_from_sparse(const std::vector<SparseRow>& rows,
                                              std::size_t cols) {
  std::vector<IntRow> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    IntRow r(cols);
    for (const auto& [c, v] : row) {
      // preprocessed rows are already primitive integer
      r[c] = v.numerator();
    }
    out.push_back(std::move(r));
  }
  return out;
}

// Primitive integer vector, first nonzero entry positive.
void normalize_primitive(std::vector<Rational>& v) {
  BigInt den_lcm = 1;
  for (const auto& x : v) {
    if (!x.is_zero()) den_lcm = mp::lcm(den_lcm, x.denominator());
  }
  BigInt num_gcd = 0;
  std::vector<BigInt> ints(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    ints[i] = v[i].numerator() * (den_lcm / v[i].denominator());
    num_gcd = mp::gcd(num_gcd, mp::abs(ints[i]));
  }
  if (num_gcd.is_zero()) return;
  int lead_sign = 0;
  for (const auto& x : ints) {
    if (!x.is_zero()) {
      lead_sign = x.sign();
      break;
    }
  }
  if (lead_sign < 0) num_gcd = -num_gcd;
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = Rational(ints[i] / num_gcd);
  }
}

std::vector<SparseRow> sparse_rows_of(const RationalMatrix& m) {
  std::vector<SparseRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseRow row;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m.at(r, c).is_zero()) row.emplace(c, m.at(r, c));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

NullspaceResult nullspace(const RationalMatrix& m) {
  NullspaceResult out;
  const std::size_t cols = m.cols();
  Preprocessed pre = preprocess(sparse_rows_of(m), cols);
  const std::size_t core_cols = pre.core_cols.size();

  Echelon e = fraction_free_echelon(
      integral_rows_from_sparse(pre.core_rows, core_cols), core_cols);
  out.rank = pre.forced_count + e.rank();

  std::vector<bool> is_pivot(core_cols, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

  for (std::size_t f = 0; f < core_cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(core_cols);
    v[f] = 1;
    for (std::size_t r = e.rank(); r-- > 0;) {
      const std::size_t c = e.pivot_cols[r];
      Rational sum = 0;
      for (std::size_t j = c + 1; j < core_cols; ++j) {
        if (e.rows[r][j].is_zero() || v[j].is_zero()) continue;
        sum += Rational(e.rows[r][j]) * v[j];
      }
      v[c] = -sum / Rational(e.rows[r][c]);
    }
    normalize_primitive(v);
    std::vector<Rational> full(cols);
    for (std::size_t i = 0; i < core_cols; ++i) full[pre.core_cols[i]] = std::move(v[i]);
    out.basis.push_back(std::move(full));
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  Preprocessed pre = preprocess(sparse_rows_of(m), m.cols());
  const std::size_t core_cols = pre.core_cols.size();
  Echelon e = fraction_free_echelon(
      integral_rows_from_sparse(pre.core_rows, core_cols), core_cols);
  return pre.forced_count + e.rank();
}

LinearSolveResult solve_linear(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) {
    throw std::invalid_argument("solve_linear: dimension mismatch");
  }
  LinearSolveResult out;
  const std::size_t cols = a.cols();

  // [s_i * A | s_i * b | I]: per-row integral scale s_i, identity tracker.
  std::vector<IntRow> rows;
  std::vector<std::size_t> origin;  // working row -> original row index
  std::vector<BigInt> scales;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    BigInt scale = 1;
    bool any = false;
    auto fold = [&](const Rational& v) {
      if (!v.is_zero()) {
        any = true;
        scale = mp::lcm(scale, v.denominator());
      }
    };
    for (std::size_t c = 0; c < cols; ++c) fold(a.at(r, c));
    fold(b[r]);
    if (!any) continue;
    IntRow row(cols + 1);
    for (std::size_t c = 0; c < cols; ++c) {
      const Rational& v = a.at(r, c);
      if (!v.is_zero()) row[c] = v.numerator() * (scale / v.denominator());
    }
    if (!b[r].is_zero()) row[cols] = b[r].numerator() * (scale / b[r].denominator());
    rows.push_back(std::move(row));
    origin.push_back(r);
    scales.push_back(std::move(scale));
  }
  const std::size_t nrows = rows.size();
  for (std::size_t r = 0; r < nrows; ++r) {
    rows[r].resize(cols + 1 + nrows);
    rows[r][cols + 1 + r] = 1;
  }

  Echelon e = fraction_free_echelon(std::move(rows), cols);

  // Rows at or below the rank are zero on every main column, so a nonzero
  // b entry there is an inconsistency; its tracker part is the witness.
  for (std::size_t r = e.rank(); r < e.rows.size(); ++r) {
    if (e.rows[r][cols].is_zero()) continue;
    std::vector<Rational> y(a.rows(), Rational(0));
    for (std::size_t i = 0; i < nrows; ++i) {
      const BigInt& t = e.rows[r][cols + 1 + i];
      if (t.is_zero()) continue;
      y[origin[i]] = Rational(t) * Rational(scales[i]);
    }
    Rational yb = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (!y[i].is_zero() && !b[i].is_zero()) yb += y[i] * b[i];
    }
    if (yb.is_zero()) {
      throw std::logic_error("solve_linear: witness does not hit b");
    }
    for (auto& v : y) {
      if (!v.is_zero()) v /= yb;
    }
    out.infeasibility_witness = std::move(y);
    return out;
  }

  // back substitution, free variables zero
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t r = e.rank(); r-- > 0;) {
    const std::size_t c = e.pivot_cols[r];
    Rational sum = Rational(e.rows[r][cols]);
    for (std::size_t j = c + 1; j < cols; ++j) {
      if (e.rows[r][j].is_zero() || x[j].is_zero()) continue;
      sum -= Rational(e.rows[r][j]) * x[j];
    }
    x[c] = sum / Rational(e.rows[r][c]);
  }
  out.solution = std::move(x);
  return out;
}

std::size_t RowSpace::leading(const std::vector<Rational>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (!row[i].is_zero()) return i;
  }
  return row.size();
}

void RowSpace::reduce(std::vector<Rational>& row) const {
  for (const auto& basis_row : rows_) {
    const std::size_t lead = leading(basis_row);
    if (row[lead].is_zero()) continue;
    const Rational factor = row[lead];  // basis rows have leading entry 1
    for (std::size_t j = lead; j < cols_; ++j) {
      if (!basis_row[j].is_zero()) row[j] -= factor * basis_row[j];
    }
  }
}

bool RowSpace::insert(std::vector<Rational> row) {
  if (row.size() != cols_) throw std::invalid_argument("RowSpace: row size");
  reduce(row);
  const std::size_t lead = leading(row);
  if (lead == cols_) return false;
  const Rational inv = Rational(1) / row[lead];
  for (std::size_t j = lead; j < cols_; ++j) {
    if (!row[j].is_zero()) row[j] *= inv;
  }
  auto at = std::lower_bound(rows_.begin(), rows_.end(), lead,
                             [](const std::vector<Rational>& r, std::size_t l) {
                               return leading(r) < l;
                             });
  rows_.insert(at, std::move(row));
  return true;
}

bool RowSpace::contains(std::vector<Rational> row) const {
  if (row.size() != cols_) throw std::invalid_argument("RowSpace: row size");
  reduce(row);
  return leading(row) == cols_;
}

}  // namespace wittlab
