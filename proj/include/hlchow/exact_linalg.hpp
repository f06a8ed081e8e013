#ifndef HLCHOW_EXACT_LINALG_HPP
#define HLCHOW_EXACT_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hlchow/basics.hpp"

namespace hlchow {

// Dense matrix of exact rationals. All computations are exact; rank and
// solves clear denominators and run fraction-free (Bareiss) elimination
// over the integers.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows, std::vector<Rat>(cols)) {}

  static ExactMatrix from_rows(std::vector<std::vector<Rat>> rows);
  static ExactMatrix from_int_rows(const std::vector<std::vector<Int>>& rows);
  // Column j of the result is columns[j].
  static ExactMatrix from_columns(const std::vector<std::vector<Rat>>& columns);
  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t i, std::size_t j) { return data_[i][j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return data_[i][j]; }

  ExactMatrix transposed() const;

  // Rank over the rationals.
  std::size_t rank() const;

  // Determinant; requires a square matrix.
  Rat det() const;

  // Exact solution of (*this) x = rhs for a matrix with linearly
  // independent columns. Returns nullopt when the system is inconsistent.
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& rhs) const;

  // Invariant factors d1 | d2 | ... of the Smith normal form. Entries must
  // be integers (NonIntegerEntry otherwise). Zero factors are omitted, so
  // the result has rank() entries, each positive.
  std::vector<Int> smith_invariants() const;

 private:
  std::size_t rows_, cols_;
  std::vector<std::vector<Rat>> data_;

  // rows as integer vectors after clearing denominators row by row
  std::vector<std::vector<Int>> integer_rows() const;
};

// Membership test for a simplicial cone: solves basis * c = target exactly
// and returns c only when the system is consistent and c >= 0 entrywise.
// Basis columns must be linearly independent.
std::optional<std::vector<Rat>> solve_nonnegative(const ExactMatrix& basis,
                                                  const std::vector<Rat>& target);

// ---- sparse exact row reduction ------------------------------------------

// A sparse integer row: (column, value) pairs sorted by column, values
// nonzero. The conversion is faithful; only the Q-echelon below divides rows
// by their content, since rank, span and reduction are scale-invariant.
// Lattice computations must see rows unscaled.
using SparseRow = std::vector<std::pair<int, Int>>;

SparseRow sparse_from_dense(const std::vector<Int>& v);
void gcd_normalize(SparseRow& r);

// Incremental row echelon form over Q with integer arithmetic. The pivot of
// a stored row is its largest column index; inserting a row reduces it
// against the stored rows. Used for rank computation, span membership and
// quotient-basis extraction throughout the chow module.
//
// Pivoting on the largest column means the non-pivot columns are the
// lexicographically earliest column set spanning the quotient, which is what
// makes graded bases deterministic.
class RowEchelon {
 public:
  // Reduce r against the echelon; if a nonzero remainder survives, store it
  // and return true (rank grew).
  bool insert(SparseRow r);

  // Reduce a copy of r; true iff it vanishes (r lies in the row span).
  bool in_span(SparseRow r) const;

  std::size_t rank() const { return rows_.size(); }

  // Back-eliminate so every stored row has its pivot column nowhere else.
  void reduce_fully();

  const std::vector<SparseRow>& rows() const { return rows_; }

 private:
  // reduce r against stored rows; returns the remainder (gcd-normalized)
  SparseRow residue(SparseRow r) const;

  std::vector<SparseRow> rows_;          // each with a distinct pivot column
  std::vector<int> pivot_of_row_;        // pivot column of rows_[i]
  std::vector<int> row_with_pivot_;      // column -> index into rows_, or -1
};

// Integer row echelon built from unimodular row operations only (no row
// scaling), so the stored rows generate exactly the lattice generated by
// everything inserted. Pivot of a row is its largest column, as above.
// Used for torsion detection: the quotient Z^cols / lattice is torsion-free
// iff the lattice is saturated.
class LatticeEchelon {
 public:
  void insert(SparseRow r);

  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseRow>& rows() const { return rows_; }

  // True iff the lattice is saturated in Z^cols. Fast path: every pivot
  // value ±1 makes the lattice a direct summand. Otherwise falls back to the
  // Smith form of the stored basis.
  bool saturated() const;

 private:
  std::vector<SparseRow> rows_;
  std::vector<int> row_with_pivot_;  // column -> index into rows_, or -1
};

}  // namespace hlchow

#endif
