#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matgirth/common.hpp"

namespace matgirth::gf2 {

// Bit vector over GF(2), packed 64 bits per word.
class Vec {
 public:
  Vec() = default;
  explicit Vec(int n) : n_(n), w_(words(n), 0) {}

  int size() const { return n_; }
  bool get(int i) const { return w_[i >> 6] >> (i & 63) & 1u; }
  void set(int i, bool v) {
    std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }
  void flip(int i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  void xor_with(const Vec& o);
  int popcount() const;
  bool is_zero() const;
  bool operator==(const Vec&) const = default;
  std::vector<int> support() const;  // indices of one-bits, ascending
  std::string to_string() const;     // "0101..."
  static Vec from_string(const std::string& s);

 private:
  static int words(int n) { return (n + 63) >> 6; }
  int n_ = 0;
  std::vector<std::uint64_t> w_;
  friend class Matrix;
};

// Dense matrix over GF(2), rows packed as bit vectors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), wpr_((cols + 63) >> 6),
        w_(static_cast<size_t>(rows) * wpr_, 0) {}
  static Matrix identity(int n);
  static Matrix from_strings(const std::vector<std::string>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool get(int r, int c) const {
    return w_[idx(r) + (c >> 6)] >> (c & 63) & 1u;
  }
  void set(int r, int c, bool v) {
    std::uint64_t m = std::uint64_t{1} << (c & 63);
    if (v)
      w_[idx(r) + (c >> 6)] |= m;
    else
      w_[idx(r) + (c >> 6)] &= ~m;
  }
  Vec row(int r) const;
  void set_row(int r, const Vec& v);
  void xor_row_into(int src, int dst);  // row dst ^= row src
  void swap_rows(int a, int b);
  bool row_is_zero(int r) const;
  Vec column(int c) const;

  Matrix transpose() const;
  Matrix operator+(const Matrix& o) const;  // entrywise xor
  Matrix operator*(const Matrix& o) const;
  bool operator==(const Matrix&) const = default;
  bool is_zero() const;

  Matrix submatrix_cols(const std::vector<int>& cols) const;
  Matrix submatrix_rows(const std::vector<int>& rows) const;
  Matrix append_cols(const Matrix& right) const;  // [this | right]
  Matrix append_rows(const Matrix& below) const;
  std::vector<std::string> to_strings() const;

 private:
  size_t idx(int r) const { return static_cast<size_t>(r) * wpr_; }
  int rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<std::uint64_t> w_;
};

// Reduced row echelon form: pivot columns strictly increasing, each pivot
// column has a single one, zero rows at the bottom.  rank = pivot count.
struct Rref {
  Matrix m;
  std::vector<int> pivot_cols;
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};
Rref row_reduce(const Matrix& a);
int rank(const Matrix& a);

// Some x with a*x == b, if one exists (x as column vector of length cols).
std::optional<Vec> solve(const Matrix& a, const Vec& b);

// Rows form a basis of the right null space {x : a*x == 0}.
Matrix null_space_basis(const Matrix& a);

// Factors p (r x n, rank k) as p == b*c with b r x k and c k x n; both have
// full rank k, so p == b*c exhibits the rank of the perturbation explicitly.
struct LowRankFactors {
  Matrix b, c;
};
LowRankFactors factor_low_rank(const Matrix& p);

// Binary matroid given by a representation matrix; ground elements are the
// columns, addressed by integer labels (defaults to the column index).
struct MatroidRep {
  Matrix a;
  std::vector<int> ground;
  explicit MatroidRep(Matrix m);
  MatroidRep(Matrix m, std::vector<int> labels);
  int col_of(int label) const;  // -1 if absent
};

// Minor M / contract \ delete.  Contracting a loop deletes it.  Throws
// std::invalid_argument on unknown or overlapping labels.
MatroidRep contract_delete(const MatroidRep& m, const std::vector<int>& contract,
                           const std::vector<int>& del);

// Standard-form dual: rows span the orthogonal complement of rowspace(a).
MatroidRep dual(const MatroidRep& m);

// Brute-force girth/cogirth with a certifying witness (sorted ground labels).
// Size guard: girth enumerates the null space (throws std::invalid_argument
// beyond kOracleGuardBits columns), cogirth the row space (guard on rank).
inline constexpr int kOracleGuardBits = 24;

struct WeightWitness {
  Size size = kInf;
  std::vector<int> elements;
};
WeightWitness girth_oracle_witness(const MatroidRep& m);
WeightWitness cogirth_oracle_witness(const MatroidRep& m);
Size girth_oracle(const MatroidRep& m);
Size cogirth_oracle(const MatroidRep& m);

}  // namespace matgirth::gf2
