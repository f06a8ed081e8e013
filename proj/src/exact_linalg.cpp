#include "hlchow/exact_linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace hlchow {

namespace {

// Scale each row to integers by its denominators' lcm; multipliers[i] is the
// factor applied to row i (needed by det()).
std::vector<std::vector<Int>> cleared_rows(const std::vector<std::vector<Rat>>& data,
                                           std::vector<Int>* multipliers) {
  std::vector<std::vector<Int>> out(data.size());
  if (multipliers) multipliers->assign(data.size(), Int(1));
  for (std::size_t i = 0; i < data.size(); ++i) {
    Int l = 1;
    for (const Rat& q : data[i]) {
      Int g;
      mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
      l = l / g * q.get_den();
    }
    out[i].reserve(data[i].size());
    for (const Rat& q : data[i]) out[i].push_back(q.get_num() * (l / q.get_den()));
    if (multipliers) (*multipliers)[i] = l;
  }
  return out;
}

// Fraction-free elimination in place; returns the rank. When det_out is
// given the matrix must be square; receives the determinant.
std::size_t bareiss(std::vector<std::vector<Int>>& a, Int* det_out) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  Int prev = 1;
  std::size_t rank = 0;
  int sign = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank) {
      std::swap(a[piv], a[rank]);
      sign = -sign;
    }
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        Int t = a[i][j] * a[rank][col] - a[i][col] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  if (det_out) {
    // the k-th Bareiss pivot is the k x k leading principal minor, so after
    // a full-rank square run `prev` is the determinant up to row swaps
    *det_out = (rank == rows && rank == cols) ? Int(sign) * prev : Int(0);
  }
  return rank;
}

}  // namespace

ExactMatrix ExactMatrix::from_rows(std::vector<std::vector<Rat>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  for (const auto& row : rows)
    if (row.size() != c) throw DimensionMismatch("ragged rows");
  ExactMatrix m(r, c);
  m.data_ = std::move(rows);
  return m;
}

ExactMatrix ExactMatrix::from_int_rows(const std::vector<std::vector<Int>>& rows) {
  std::vector<std::vector<Rat>> q(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    q[i].reserve(rows[i].size());
    for (const Int& z : rows[i]) q[i].emplace_back(z);
  }
  return from_rows(std::move(q));
}

ExactMatrix ExactMatrix::from_columns(const std::vector<std::vector<Rat>>& columns) {
  const std::size_t c = columns.size();
  const std::size_t r = c ? columns[0].size() : 0;
  for (const auto& col : columns)
    if (col.size() != r) throw DimensionMismatch("ragged columns");
  ExactMatrix m(r, c);
  for (std::size_t j = 0; j < c; ++j)
    for (std::size_t i = 0; i < r; ++i) m.data_[i][j] = columns[j][i];
  return m;
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i][i] = 1;
  return m;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.data_[j][i] = data_[i][j];
  return m;
}

std::vector<std::vector<Int>> ExactMatrix::integer_rows() const {
  return cleared_rows(data_, nullptr);
}

std::size_t ExactMatrix::rank() const {
  auto a = integer_rows();
  return bareiss(a, nullptr);
}

Rat ExactMatrix::det() const {
  if (rows_ != cols_) throw DimensionMismatch("det of non-square matrix");
  std::vector<Int> multipliers;
  auto a = cleared_rows(data_, &multipliers);
  Int d;
  bareiss(a, &d);
  Rat scale = 1;
  for (const Int& m : multipliers) scale *= Rat(m);
  Rat result = Rat(d) / scale;
  result.canonicalize();
  return result;
}

std::optional<std::vector<Rat>> ExactMatrix::solve(const std::vector<Rat>& rhs) const {
  if (rhs.size() != rows_) throw DimensionMismatch("rhs length != rows");
  auto a = data_;
  for (std::size_t i = 0; i < rows_; ++i) a[i].push_back(rhs[i]);

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && a[p][c] == 0) ++p;
    if (p == rows_) continue;
    std::swap(a[p], a[r]);
    Rat inv = a[r][c];
    for (std::size_t j = c; j <= cols_; ++j) a[r][j] /= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = c; j <= cols_; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows_; ++i)
    if (a[i][cols_] != 0) return std::nullopt;

  // free columns (only when the columns are dependent) get coefficient 0
  std::vector<Rat> x(cols_, Rat(0));
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) x[pivot_cols[k]] = a[k][cols_];
  return x;
}

std::vector<Int> ExactMatrix::smith_invariants() const {
  std::vector<std::vector<Int>> a(rows_, std::vector<Int>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (data_[i][j].get_den() != 1)
        throw NonIntegerEntry("smith form needs integer entries");
      a[i][j] = data_[i][j].get_num();
    }

  std::vector<Int> invariants;
  std::size_t t = 0;
  while (t < rows_ && t < cols_) {
    // smallest nonzero |entry| as pivot keeps the numbers from exploding
    std::size_t pi = t, pj = t;
    bool found = false;
    Int best;
    for (std::size_t i = t; i < rows_; ++i)
      for (std::size_t j = t; j < cols_; ++j) {
        if (a[i][j] == 0) continue;
        Int v = abs(a[i][j]);
        if (!found || v < best) {
          best = v;
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    std::swap(a[t], a[pi]);
    if (pj != t)
      for (std::size_t i = 0; i < rows_; ++i) std::swap(a[i][t], a[i][pj]);
    if (a[t][t] < 0)
      for (std::size_t j = t; j < cols_; ++j) a[t][j] = -a[t][j];

    bool clean = true;
    for (std::size_t i = t + 1; i < rows_; ++i) {
      Int q = a[i][t] / a[t][t];
      if (q != 0)
        for (std::size_t j = t; j < cols_; ++j) a[i][j] -= q * a[t][j];
      if (a[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols_; ++j) {
      Int q = a[t][j] / a[t][t];
      if (q != 0)
        for (std::size_t i = t; i < rows_; ++i) a[i][j] -= q * a[i][t];
      if (a[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // remainders smaller than the pivot appeared; re-pick

    // pivot must divide the rest of the submatrix for d1 | d2 | ... to hold
    bool divides = true;
    std::size_t bad_row = 0;
    for (std::size_t i = t + 1; i < rows_ && divides; ++i)
      for (std::size_t j = t + 1; j < cols_; ++j)
        if (a[i][j] % a[t][t] != 0) {
          divides = false;
          bad_row = i;
          break;
        }
    if (!divides) {
      for (std::size_t j = t; j < cols_; ++j) a[t][j] += a[bad_row][j];
      continue;
    }
    invariants.push_back(a[t][t]);
    ++t;
  }
  return invariants;
}

std::optional<std::vector<Rat>> solve_nonnegative(const ExactMatrix& basis,
                                                  const std::vector<Rat>& target) {
  auto x = basis.solve(target);
  if (!x) return std::nullopt;
  for (const Rat& c : *x)
    if (c < 0) return std::nullopt;
  return x;
}

SparseRow sparse_from_dense(const std::vector<Int>& v) {
  SparseRow r;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j] != 0) r.emplace_back(static_cast<int>(j), v[j]);
  return r;
}

void gcd_normalize(SparseRow& r) {
  if (r.empty()) return;
  Int g = 0;
  for (const auto& [col, val] : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), val.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& [col, val] : r) mpz_divexact(val.get_mpz_t(), val.get_mpz_t(), g.get_mpz_t());
}

namespace {

// a*x + b*y over sorted sparse rows
SparseRow linear_combine(const Int& a, const SparseRow& x, const Int& b,
                         const SparseRow& y) {
  SparseRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      Int v = a * x[i].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      Int v = b * y[j].second;
      if (v != 0) out.emplace_back(y[j].first, std::move(v));
      ++j;
    } else {
      Int v = a * x[i].second + b * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseRow RowEchelon::residue(SparseRow r) const {
  gcd_normalize(r);
  while (!r.empty()) {
    const int p = r.back().first;
    if (p >= static_cast<int>(row_with_pivot_.size()) || row_with_pivot_[p] < 0)
      break;
    const SparseRow& s = rows_[row_with_pivot_[p]];
    r = linear_combine(s.back().second, r, -r.back().second, s);
    gcd_normalize(r);
  }
  return r;
}

bool RowEchelon::insert(SparseRow r) {
  r = residue(std::move(r));
  if (r.empty()) return false;
  const int p = r.back().first;
  if (p >= static_cast<int>(row_with_pivot_.size()))
    row_with_pivot_.resize(p + 1, -1);
  row_with_pivot_[p] = static_cast<int>(rows_.size());
  pivot_of_row_.push_back(p);
  rows_.push_back(std::move(r));
  return true;
}

bool RowEchelon::in_span(SparseRow r) const { return residue(std::move(r)).empty(); }

void LatticeEchelon::insert(SparseRow r) {
  while (!r.empty()) {
    const int p = r.back().first;
    const int held =
        p < static_cast<int>(row_with_pivot_.size()) ? row_with_pivot_[p] : -1;
    if (held < 0) {
      if (p >= static_cast<int>(row_with_pivot_.size()))
        row_with_pivot_.resize(p + 1, -1);
      row_with_pivot_[p] = static_cast<int>(rows_.size());
      rows_.push_back(std::move(r));
      return;
    }
    SparseRow& s = rows_[held];
    const Int a = s.back().second;
    const Int b = r.back().second;
    if (b % a == 0) {
      r = linear_combine(Int(1), r, -(b / a), s);
      continue;
    }
    // replace (s, r) by (u*s + v*r, (a/g)*r - (b/g)*s); the 2x2 coefficient
    // matrix has determinant 1, so the generated lattice is unchanged
    Int g, u, v;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
    SparseRow new_s = linear_combine(u, s, v, r);
    SparseRow new_r = linear_combine(a / g, r, -(b / g), s);
    s = std::move(new_s);
    r = std::move(new_r);
  }
}

bool LatticeEchelon::saturated() const {
  bool unit_pivots = true;
  int max_col = -1;
  for (const SparseRow& s : rows_) {
    const Int& piv = s.back().second;
    if (piv != 1 && piv != -1) unit_pivots = false;
    if (s.back().first > max_col) max_col = s.back().first;
  }
  if (unit_pivots) return true;
  std::vector<std::vector<Int>> dense(rows_.size(),
                                      std::vector<Int>(max_col + 1, Int(0)));
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& [col, val] : rows_[i]) dense[i][col] = val;
  const auto invariants = ExactMatrix::from_int_rows(dense).smith_invariants();
  for (const Int& d : invariants)
    if (d != 1) return false;
  return true;
}

void RowEchelon::reduce_fully() {
  // by increasing pivot: every foreign pivot column in a row is smaller than
  // the row's own pivot, and the rows it borrows from are already clean
  std::vector<int> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return pivot_of_row_[a] < pivot_of_row_[b]; });
  for (int idx : order) {
    SparseRow& r = rows_[idx];
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [col, val] : r) {
        if (col == pivot_of_row_[idx]) continue;
        const int other =
            col < static_cast<int>(row_with_pivot_.size()) ? row_with_pivot_[col] : -1;
        if (other < 0 || other == idx) continue;
        const SparseRow& s = rows_[other];
        SparseRow next = linear_combine(s.back().second, r, -val, s);
        gcd_normalize(next);
        r = std::move(next);
        changed = true;
        break;
      }
    }
  }
}

}  // namespace hlchow
