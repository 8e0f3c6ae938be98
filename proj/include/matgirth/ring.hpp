#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "matgirth/common.hpp"

namespace matgirth::ring {

using Int = boost::multiprecision::cpp_int;

// Element of Z[y_1..y_t, z] / <y_i^2 - 1>: for each y-class beta in GF(2)^t a
// polynomial in z with arbitrary-precision integer coefficients.  Stored
// densely per class with trailing zeros trimmed; conceptually the term set is
// the non-zero (beta, z-degree) -> coefficient map.
class GroupRingPoly {
 public:
  explicit GroupRingPoly(int t);
  static GroupRingPoly unit(int t);
  static GroupRingPoly monomial(int t, ParityVec beta, int zdeg, Int coeff);

  int t() const { return t_; }
  bool is_zero() const;
  Int coeff(ParityVec beta, int zdeg) const;  // 0 when absent
  int num_terms() const;                      // non-zero coefficients
  int max_zdeg() const;                       // -1 for the zero element
  Int max_abs_coeff() const;                  // 0 for the zero element

  // The z-polynomial attached to one y-class, ascending degrees, trimmed.
  const std::vector<Int>& z_poly(ParityVec beta) const;
  // Minimum z-degree with non-zero coefficient in the class, kInf when the
  // class polynomial is zero.
  Size mindeg_z(ParityVec beta) const;

  GroupRingPoly operator-() const;
  bool operator==(const GroupRingPoly& o) const;
  bool operator!=(const GroupRingPoly& o) const { return !(*this == o); }

  // Sum of monomials "c y^<bits> z^<d>" in (beta, degree) order, "0" if zero.
  std::string to_string() const;

  friend GroupRingPoly ring_add(const GroupRingPoly& a, const GroupRingPoly& b);
  friend GroupRingPoly ring_sub(const GroupRingPoly& a, const GroupRingPoly& b);
  friend GroupRingPoly ring_mul(const GroupRingPoly& a, const GroupRingPoly& b);
  friend GroupRingPoly ring_mul_trunc(const GroupRingPoly& a,
                                      const GroupRingPoly& b, int max_zdeg);

 private:
  void trim();
  int t_;
  std::vector<std::vector<Int>> c_;  // 2^t rows of z-coefficients
};

// Throw std::invalid_argument when the t parameters differ.
GroupRingPoly ring_add(const GroupRingPoly& a, const GroupRingPoly& b);
GroupRingPoly ring_sub(const GroupRingPoly& a, const GroupRingPoly& b);
GroupRingPoly ring_mul(const GroupRingPoly& a, const GroupRingPoly& b);

// Product with every z-degree above max_zdeg discarded; max_zdeg < 0 means no
// cap (plain ring_mul).  Equal to ring_mul followed by dropping high degrees.
GroupRingPoly ring_mul_trunc(const GroupRingPoly& a, const GroupRingPoly& b,
                             int max_zdeg);

inline GroupRingPoly operator+(const GroupRingPoly& a, const GroupRingPoly& b) {
  return ring_add(a, b);
}
inline GroupRingPoly operator-(const GroupRingPoly& a, const GroupRingPoly& b) {
  return ring_sub(a, b);
}
inline GroupRingPoly operator*(const GroupRingPoly& a, const GroupRingPoly& b) {
  return ring_mul(a, b);
}

// Skew-symmetric matrix over the group ring, indexed 1..n to match the usual
// matrix conventions.  Assignments go through set_upper, which also writes
// the negated mirror entry; the diagonal stays zero.
class SkewRingMatrix {
 public:
  SkewRingMatrix(int n, int t);
  int n() const { return n_; }
  int t() const { return t_; }
  const GroupRingPoly& at(int i, int j) const;
  void set_upper(int i, int j, const GroupRingPoly& value);  // needs i < j

 private:
  int n_, t_;
  std::vector<GroupRingPoly> e_;
};

// Throws std::invalid_argument unless the matrix is skew-symmetric with zero
// diagonal (set_upper maintains this; direct constructions are checked).
void validate_skew(const SkewRingMatrix& m);

}  // namespace matgirth::ring
