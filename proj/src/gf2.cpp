#include "matgirth/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace matgirth::gf2 {

void Vec::xor_with(const Vec& o) {
  for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
}

int Vec::popcount() const {
  int c = 0;
  for (std::uint64_t x : w_) c += std::popcount(x);
  return c;
}

bool Vec::is_zero() const {
  for (std::uint64_t x : w_)
    if (x) return false;
  return true;
}

std::vector<int> Vec::support() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (get(i)) out.push_back(i);
  return out;
}

std::string Vec::to_string() const {
  std::string s(static_cast<size_t>(n_), '0');
  for (int i = 0; i < n_; ++i)
    if (get(i)) s[static_cast<size_t>(i)] = '1';
  return s;
}

Vec Vec::from_string(const std::string& s) {
  Vec v(static_cast<int>(s.size()));
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      v.set(static_cast<int>(i), true);
    else if (s[i] != '0')
      throw std::invalid_argument("Vec::from_string: expected 0/1");
  }
  return v;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

Matrix Matrix::from_strings(const std::vector<std::string>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("Matrix::from_strings: ragged rows");
    for (int j = 0; j < c; ++j)
      if (rows[i][static_cast<size_t>(j)] == '1') m.set(i, j, true);
  }
  return m;
}

Vec Matrix::row(int r) const {
  Vec v(cols_);
  std::copy(w_.begin() + idx(r), w_.begin() + idx(r) + wpr_, v.w_.begin());
  return v;
}

void Matrix::set_row(int r, const Vec& v) {
  std::copy(v.w_.begin(), v.w_.end(), w_.begin() + idx(r));
}

void Matrix::xor_row_into(int src, int dst) {
  for (int k = 0; k < wpr_; ++k) w_[idx(dst) + k] ^= w_[idx(src) + k];
}

void Matrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int k = 0; k < wpr_; ++k) std::swap(w_[idx(a) + k], w_[idx(b) + k]);
}

bool Matrix::row_is_zero(int r) const {
  for (int k = 0; k < wpr_; ++k)
    if (w_[idx(r) + k]) return false;
  return true;
}

Vec Matrix::column(int c) const {
  Vec v(rows_);
  for (int r = 0; r < rows_; ++r)
    if (get(r, c)) v.set(r, true);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (get(r, c)) m.set(c, r, true);
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Matrix+: shape mismatch");
  Matrix m = *this;
  for (size_t i = 0; i < w_.size(); ++i) m.w_[i] ^= o.w_[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_)
    throw std::invalid_argument("Matrix*: shape mismatch");
  Matrix m(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r) {
    Vec acc(o.cols_);
    for (int k = 0; k < cols_; ++k)
      if (get(r, k)) acc.xor_with(o.row(k));
    m.set_row(r, acc);
  }
  return m;
}

bool Matrix::is_zero() const {
  for (std::uint64_t x : w_)
    if (x) return false;
  return true;
}

Matrix Matrix::submatrix_cols(const std::vector<int>& cols) const {
  Matrix m(rows_, static_cast<int>(cols.size()));
  for (int r = 0; r < rows_; ++r)
    for (size_t j = 0; j < cols.size(); ++j)
      if (get(r, cols[j])) m.set(r, static_cast<int>(j), true);
  return m;
}

Matrix Matrix::submatrix_rows(const std::vector<int>& rows) const {
  Matrix m(static_cast<int>(rows.size()), cols_);
  for (size_t i = 0; i < rows.size(); ++i)
    m.set_row(static_cast<int>(i), row(rows[i]));
  return m;
}

Matrix Matrix::append_cols(const Matrix& right) const {
  if (rows_ != right.rows_)
    throw std::invalid_argument("append_cols: row mismatch");
  Matrix m(rows_, cols_ + right.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c)
      if (get(r, c)) m.set(r, c, true);
    for (int c = 0; c < right.cols_; ++c)
      if (right.get(r, c)) m.set(r, cols_ + c, true);
  }
  return m;
}

Matrix Matrix::append_rows(const Matrix& below) const {
  if (cols_ != below.cols_)
    throw std::invalid_argument("append_rows: col mismatch");
  Matrix m(rows_ + below.rows_, cols_);
  for (int r = 0; r < rows_; ++r) m.set_row(r, row(r));
  for (int r = 0; r < below.rows_; ++r) m.set_row(rows_ + r, below.row(r));
  return m;
}

std::vector<std::string> Matrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(static_cast<size_t>(rows_));
  for (int r = 0; r < rows_; ++r) out.push_back(row(r).to_string());
  return out;
}

Rref row_reduce(const Matrix& a) {
  Rref out{a, {}};
  Matrix& m = out.m;
  int pivot_row = 0;
  for (int c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    int r = pivot_row;
    while (r < m.rows() && !m.get(r, c)) ++r;
    if (r == m.rows()) continue;
    m.swap_rows(r, pivot_row);
    for (int rr = 0; rr < m.rows(); ++rr)
      if (rr != pivot_row && m.get(rr, c)) m.xor_row_into(pivot_row, rr);
    out.pivot_cols.push_back(c);
    ++pivot_row;
  }
  return out;
}

int rank(const Matrix& a) { return row_reduce(a).rank(); }

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows())
    throw std::invalid_argument("solve: rhs length mismatch");
  Matrix bcol(a.rows(), 1);
  for (int r = 0; r < a.rows(); ++r)
    if (b.get(r)) bcol.set(r, 0, true);
  Rref rr = row_reduce(a.append_cols(bcol));
  Vec x(a.cols());
  for (size_t i = 0; i < rr.pivot_cols.size(); ++i) {
    if (rr.pivot_cols[i] == a.cols()) return std::nullopt;  // inconsistent
    x.set(rr.pivot_cols[i], rr.m.get(static_cast<int>(i), a.cols()));
  }
  return x;
}

Matrix null_space_basis(const Matrix& a) {
  Rref rr = row_reduce(a);
  std::vector<int> nonpivots;
  {
    size_t pi = 0;
    for (int c = 0; c < a.cols(); ++c) {
      if (pi < rr.pivot_cols.size() && rr.pivot_cols[pi] == c)
        ++pi;
      else
        nonpivots.push_back(c);
    }
  }
  Matrix basis(static_cast<int>(nonpivots.size()), a.cols());
  for (size_t k = 0; k < nonpivots.size(); ++k) {
    basis.set(static_cast<int>(k), nonpivots[k], true);
    for (size_t i = 0; i < rr.pivot_cols.size(); ++i)
      if (rr.m.get(static_cast<int>(i), nonpivots[k]))
        basis.set(static_cast<int>(k), rr.pivot_cols[i], true);
  }
  return basis;
}

LowRankFactors factor_low_rank(const Matrix& p) {
  Rref rr = row_reduce(p);
  int k = rr.rank();
  Matrix c = rr.m.submatrix_rows([&] {
    std::vector<int> first_k(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) first_k[static_cast<size_t>(i)] = i;
    return first_k;
  }());
  // c restricted to the pivot columns is the identity, so b = p[:, pivots]
  // reproduces p as b*c.
  Matrix b = p.submatrix_cols(rr.pivot_cols);
  return {b, c};
}

MatroidRep::MatroidRep(Matrix m) : a(std::move(m)) {
  ground.resize(static_cast<size_t>(a.cols()));
  for (int i = 0; i < a.cols(); ++i) ground[static_cast<size_t>(i)] = i;
}

MatroidRep::MatroidRep(Matrix m, std::vector<int> labels)
    : a(std::move(m)), ground(std::move(labels)) {
  if (static_cast<int>(ground.size()) != a.cols())
    throw std::invalid_argument("MatroidRep: label count != columns");
  std::vector<int> sorted = ground;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("MatroidRep: duplicate labels");
}

int MatroidRep::col_of(int label) const {
  for (size_t i = 0; i < ground.size(); ++i)
    if (ground[i] == label) return static_cast<int>(i);
  return -1;
}

MatroidRep contract_delete(const MatroidRep& m, const std::vector<int>& contract,
                           const std::vector<int>& del) {
  std::vector<char> gone_col(static_cast<size_t>(m.a.cols()), 0);
  std::vector<char> gone_row(static_cast<size_t>(m.a.rows()), 0);
  auto col_of_checked = [&](int label) {
    int c = m.col_of(label);
    if (c < 0)
      throw std::invalid_argument("contract_delete: unknown label " +
                                  std::to_string(label));
    return c;
  };
  for (int label : del) {
    int c = col_of_checked(label);
    if (gone_col[static_cast<size_t>(c)])
      throw std::invalid_argument("contract_delete: label repeated");
    gone_col[static_cast<size_t>(c)] = 1;
  }
  Matrix work = m.a;
  for (int label : contract) {
    int c = col_of_checked(label);
    if (gone_col[static_cast<size_t>(c)])
      throw std::invalid_argument("contract_delete: label repeated");
    gone_col[static_cast<size_t>(c)] = 1;
    int pivot = -1;
    for (int r = 0; r < work.rows(); ++r)
      if (!gone_row[static_cast<size_t>(r)] && work.get(r, c)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;  // loop in the current minor: contraction = deletion
    for (int r = 0; r < work.rows(); ++r)
      if (r != pivot && !gone_row[static_cast<size_t>(r)] && work.get(r, c))
        work.xor_row_into(pivot, r);
    gone_row[static_cast<size_t>(pivot)] = 1;
  }
  std::vector<int> keep_rows, keep_cols, labels;
  for (int r = 0; r < work.rows(); ++r)
    if (!gone_row[static_cast<size_t>(r)]) keep_rows.push_back(r);
  for (int c = 0; c < work.cols(); ++c)
    if (!gone_col[static_cast<size_t>(c)]) {
      keep_cols.push_back(c);
      labels.push_back(m.ground[static_cast<size_t>(c)]);
    }
  return MatroidRep(work.submatrix_rows(keep_rows).submatrix_cols(keep_cols),
                    std::move(labels));
}

MatroidRep dual(const MatroidRep& m) {
  return MatroidRep(null_space_basis(m.a), m.ground);
}

namespace {

// Gray-code walk over all non-zero combinations of the given basis vectors,
// tracking the running xor; calls visit(current) after every flip.
template <class Visit>
void gray_walk(const std::vector<Vec>& basis, Vec acc, Visit visit) {
  const int k = static_cast<int>(basis.size());
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t step = 1; step < total; ++step) {
    int bit = std::countr_zero(step);
    acc.xor_with(basis[static_cast<size_t>(bit)]);
    visit(acc);
  }
}

WeightWitness best_over_span(const std::vector<Vec>& basis,
                             const std::vector<int>& labels, int veclen) {
  WeightWitness best;
  gray_walk(basis, Vec(veclen), [&](const Vec& v) {
    int w = v.popcount();
    if (w == 0 || w > best.size) return;
    std::vector<int> ids;
    ids.reserve(static_cast<size_t>(w));
    for (int i : v.support()) ids.push_back(labels[static_cast<size_t>(i)]);
    std::sort(ids.begin(), ids.end());
    if (better_result(w, ids, best.size, best.elements)) {
      best.size = w;
      best.elements = std::move(ids);
    }
  });
  return best;
}

}  // namespace

WeightWitness girth_oracle_witness(const MatroidRep& m) {
  if (m.a.cols() > kOracleGuardBits)
    throw std::invalid_argument("girth_oracle: too many columns for exhaustion");
  if (m.a.cols() == 0) return {};
  Matrix nb = null_space_basis(m.a);
  std::vector<Vec> basis;
  for (int r = 0; r < nb.rows(); ++r) basis.push_back(nb.row(r));
  return best_over_span(basis, m.ground, m.a.cols());
}

WeightWitness cogirth_oracle_witness(const MatroidRep& m) {
  Rref rr = row_reduce(m.a);
  if (rr.rank() > kOracleGuardBits)
    throw std::invalid_argument("cogirth_oracle: rank too large for exhaustion");
  std::vector<Vec> basis;
  for (int r = 0; r < rr.rank(); ++r) basis.push_back(rr.m.row(r));
  return best_over_span(basis, m.ground, m.a.cols());
}

Size girth_oracle(const MatroidRep& m) { return girth_oracle_witness(m).size; }
Size cogirth_oracle(const MatroidRep& m) {
  return cogirth_oracle_witness(m).size;
}

}  // namespace matgirth::gf2
