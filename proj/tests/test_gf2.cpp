#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "matgirth/gf2.hpp"
#include "test_util.hpp"

using namespace matgirth;
using namespace matgirth::gf2;
using testutil::BitMat;

namespace {

// Incidence matrix of K4 on vertices 0..3, columns = the six edges.
Matrix k4_incidence() {
  // Edges: 01 02 03 12 13 23
  return Matrix::from_strings({
      "111000",
      "100110",
      "010101",
      "001011",
  });
}

Matrix triangle_incidence() {
  return Matrix::from_strings({
      "110",
      "101",
      "011",
  });
}

}  // namespace

TEST_CASE("rank of basic matrices") {
  CHECK(rank(Matrix::identity(5)) == 5);
  CHECK(rank(Matrix(3, 4)) == 0);
  CHECK(rank(Matrix::from_strings({"10", "01", "11"})) == 2);
  CHECK(rank(k4_incidence()) == 3);
  CHECK(rank(Matrix(0, 7)) == 0);
  CHECK(rank(Matrix(4, 0)) == 0);
}

TEST_CASE("rank agrees with brute-force span size") {
  auto g = testutil::test_rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    int r = testutil::rnd(g, 0, 8), c = testutil::rnd(g, 0, 9);
    BitMat m = testutil::random_bitmat(g, r, c);
    CHECK(rank(testutil::pack(m)) == testutil::brute_rank(m));
  }
}

TEST_CASE("row_reduce yields canonical RREF preserving the row space") {
  auto g = testutil::test_rng(102);
  for (int trial = 0; trial < 40; ++trial) {
    int r = testutil::rnd(g, 1, 7), c = testutil::rnd(g, 1, 9);
    Matrix a = testutil::pack(testutil::random_bitmat(g, r, c));
    Rref rr = row_reduce(a);

    // Pivot columns strictly increasing, pivot entries are lone ones.
    for (size_t i = 0; i + 1 < rr.pivot_cols.size(); ++i)
      CHECK(rr.pivot_cols[i] < rr.pivot_cols[i + 1]);
    for (size_t i = 0; i < rr.pivot_cols.size(); ++i) {
      for (int row = 0; row < rr.m.rows(); ++row)
        CHECK(rr.m.get(row, rr.pivot_cols[i]) == (row == static_cast<int>(i)));
    }
    // Zero rows trail.
    for (int row = rr.rank(); row < rr.m.rows(); ++row)
      CHECK(rr.m.row_is_zero(row));

    // Same row space: appending any row of one matrix to the other does not
    // increase rank.
    int base = rank(a);
    CHECK(base == rr.rank());
    for (int row = 0; row < r; ++row) {
      Matrix ext = rr.m.append_rows(a.submatrix_rows({row}));
      CHECK(rank(ext) == base);
      Matrix ext2 = a.append_rows(rr.m.submatrix_rows({row}));
      CHECK(rank(ext2) == base);
    }
  }
}

TEST_CASE("solve finds solutions exactly when consistent") {
  auto g = testutil::test_rng(103);
  for (int trial = 0; trial < 60; ++trial) {
    int r = testutil::rnd(g, 1, 7), c = testutil::rnd(g, 1, 8);
    Matrix a = testutil::pack(testutil::random_bitmat(g, r, c));
    Vec b(r);
    for (int i = 0; i < r; ++i) b.set(i, testutil::rnd(g, 0, 1));
    auto x = solve(a, b);
    Matrix bm(r, 1);
    for (int i = 0; i < r; ++i) bm.set(i, 0, b.get(i));
    if (x) {
      Matrix xm(c, 1);
      for (int i = 0; i < c; ++i) xm.set(i, 0, x->get(i));
      CHECK(a * xm == bm);
    } else {
      CHECK(rank(a.append_cols(bm)) == rank(a) + 1);
    }
  }
}

TEST_CASE("null_space_basis spans exactly the kernel") {
  auto g = testutil::test_rng(104);
  for (int trial = 0; trial < 40; ++trial) {
    int r = testutil::rnd(g, 1, 6), c = testutil::rnd(g, 1, 8);
    Matrix a = testutil::pack(testutil::random_bitmat(g, r, c));
    Matrix nb = null_space_basis(a);
    CHECK(nb.rows() == c - rank(a));
    CHECK(rank(nb) == nb.rows());
    // Every basis row is in the kernel.
    if (nb.rows() > 0) CHECK((a * nb.transpose()).is_zero());
  }
}

TEST_CASE("factor_low_rank reconstructs the perturbation") {
  auto g = testutil::test_rng(105);
  for (int trial = 0; trial < 60; ++trial) {
    int r = testutil::rnd(g, 1, 7), c = testutil::rnd(g, 1, 8);
    Matrix p(r, c);
    if (trial % 4 != 0) {
      // Random low-rank product.
      int t = testutil::rnd(g, 0, 2);
      Matrix b = testutil::pack(testutil::random_bitmat(g, r, t));
      Matrix cc = testutil::pack(testutil::random_bitmat(g, t, c));
      p = b * cc;
    } else {
      p = testutil::pack(testutil::random_bitmat(g, r, c, 30));
    }
    LowRankFactors f = factor_low_rank(p);
    CHECK(f.b.cols() == rank(p));
    CHECK(f.c.rows() == rank(p));
    CHECK(f.b * f.c == p);
    if (rank(p) > 0) {
      CHECK(rank(f.b) == rank(p));
      CHECK(rank(f.c) == rank(p));
    }
  }
}

TEST_CASE("girth oracle on graph incidence matrices") {
  CHECK(girth_oracle(MatroidRep(triangle_incidence())) == 3);
  CHECK(girth_oracle(MatroidRep(k4_incidence())) == 3);
  // 4-cycle.
  CHECK(girth_oracle(MatroidRep(Matrix::from_strings(
            {"1001", "1100", "0110", "0011"}))) == 4);
  // Independent columns: no cycle at all.
  CHECK(is_inf(girth_oracle(MatroidRep(Matrix::identity(4)))));
  // Zero column = loop, girth 1.
  Matrix loop(2, 3);
  loop.set(0, 0, true);
  loop.set(1, 1, true);
  CHECK(girth_oracle(MatroidRep(loop)) == 1);
  // Parallel edges = equal columns, girth 2.
  CHECK(girth_oracle(MatroidRep(Matrix::from_strings({"11", "11"}))) == 2);
  CHECK(is_inf(girth_oracle(MatroidRep(Matrix(3, 0)))));
}

TEST_CASE("girth oracle matches subset enumeration") {
  auto g = testutil::test_rng(106);
  for (int trial = 0; trial < 100; ++trial) {
    int r = testutil::rnd(g, 1, 6), c = testutil::rnd(g, 1, 10);
    BitMat m = testutil::random_bitmat(g, r, c, testutil::rnd(g, 20, 70));
    MatroidRep rep(testutil::pack(m));
    WeightWitness ww = girth_oracle_witness(rep);
    CHECK(ww.size == testutil::brute_girth(m));
    if (!is_inf(ww.size)) {
      // Witness columns really sum to zero and have the right size.
      CHECK(static_cast<Size>(ww.elements.size()) == ww.size);
      std::vector<int> acc(r, 0);
      for (int label : ww.elements)
        for (int row = 0; row < r; ++row) acc[row] ^= m[row][label];
      CHECK(std::all_of(acc.begin(), acc.end(), [](int x) { return x == 0; }));
    }
  }
}

TEST_CASE("cogirth oracle basics and brute-force agreement") {
  CHECK(cogirth_oracle(MatroidRep(k4_incidence())) == 3);  // min cut of K4
  // Path on 3 vertices: min cut 1.
  CHECK(cogirth_oracle(MatroidRep(Matrix::from_strings({"10", "11", "01"}))) ==
        1);
  CHECK(is_inf(cogirth_oracle(MatroidRep(Matrix(2, 4)))));  // zero row space

  auto g = testutil::test_rng(107);
  for (int trial = 0; trial < 100; ++trial) {
    int r = testutil::rnd(g, 1, 6), c = testutil::rnd(g, 1, 10);
    BitMat m = testutil::random_bitmat(g, r, c, testutil::rnd(g, 20, 70));
    MatroidRep rep(testutil::pack(m));
    WeightWitness ww = cogirth_oracle_witness(rep);
    CHECK(ww.size == testutil::brute_cogirth(m));
    if (!is_inf(ww.size)) {
      CHECK(static_cast<Size>(ww.elements.size()) == ww.size);
      // Witness is the support of a row-space vector: appending its
      // characteristic vector must not increase the rank.
      Matrix chi(1, c);
      for (int label : ww.elements) chi.set(0, label, true);
      CHECK(rank(rep.a.append_rows(chi)) == rank(rep.a));
    }
  }
}

TEST_CASE("oracle size guards") {
  CHECK_THROWS_AS(girth_oracle(MatroidRep(Matrix(2, kOracleGuardBits + 1))),
                  std::invalid_argument);
  // Large rank triggers the cogirth guard.
  CHECK_THROWS_AS(cogirth_oracle(MatroidRep(Matrix::identity(30))),
                  std::invalid_argument);
  // Many columns but tiny rank is fine for cogirth.
  Matrix wide(1, 40);
  for (int c = 0; c < 40; ++c) wide.set(0, c, true);
  CHECK(cogirth_oracle(MatroidRep(wide)) == 40);
}

TEST_CASE("contract_delete matches the matroid minor rank law") {
  auto g = testutil::test_rng(108);
  for (int trial = 0; trial < 60; ++trial) {
    int r = testutil::rnd(g, 1, 5), c = testutil::rnd(g, 2, 7);
    BitMat m = testutil::random_bitmat(g, r, c, testutil::rnd(g, 25, 65));
    MatroidRep rep(testutil::pack(m));

    // Random disjoint contract/delete label sets.
    std::vector<int> contract, del, rest;
    for (int e = 0; e < c; ++e) {
      int roll = testutil::rnd(g, 0, 3);
      if (roll == 0)
        contract.push_back(e);
      else if (roll == 1)
        del.push_back(e);
      else
        rest.push_back(e);
    }
    MatroidRep minor = contract_delete(rep, contract, del);

    REQUIRE(minor.ground == rest);
    // Independence in the minor vs. the rank identity
    // r_minor(S) = r(S u contract) - r(contract).
    int rc = testutil::brute_subset_rank(m, contract);
    for (std::uint32_t mask = 0; mask < (1u << rest.size()); ++mask) {
      std::vector<int> s, s_cols;
      for (size_t i = 0; i < rest.size(); ++i)
        if (mask >> i & 1) s.push_back(rest[i]);
      s_cols = s;
      std::vector<int> merged = s_cols;
      merged.insert(merged.end(), contract.begin(), contract.end());
      int want = testutil::brute_subset_rank(m, merged) - rc;
      std::vector<int> minor_cols;
      for (int label : s) minor_cols.push_back(minor.col_of(label));
      int got = testutil::brute_subset_rank(testutil::unpack(minor.a),
                                            minor_cols);
      CHECK(got == want);
    }
  }
}

TEST_CASE("contract_delete on the triangle") {
  MatroidRep tri(triangle_incidence());
  // Contract one edge of a triangle: remaining pair is a 2-cycle.
  CHECK(girth_oracle(contract_delete(tri, {0}, {})) == 2);
  // Delete one edge instead: a path has no cycles.
  CHECK(is_inf(girth_oracle(contract_delete(tri, {}, {0}))));
  // Contracting a loop is deletion.
  Matrix withloop(3, 4);
  for (int i = 0; i < 3; ++i) withloop.set(i, i, true);
  MatroidRep rep(withloop);  // column 3 is zero = loop
  MatroidRep minor = contract_delete(rep, {3}, {});
  CHECK(minor.a.cols() == 3);
  CHECK(rank(minor.a) == 3);
  CHECK_THROWS_AS(contract_delete(tri, {0}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(contract_delete(tri, {7}, {}), std::invalid_argument);
}

TEST_CASE("dual exchanges girth and cogirth") {
  auto g = testutil::test_rng(109);
  for (int trial = 0; trial < 60; ++trial) {
    int r = testutil::rnd(g, 1, 6), c = testutil::rnd(g, 1, 9);
    BitMat m = testutil::random_bitmat(g, r, c, testutil::rnd(g, 20, 70));
    MatroidRep rep(testutil::pack(m));
    MatroidRep d = dual(rep);
    CHECK(d.a.cols() == c);
    // Orthogonal row spaces.
    if (d.a.rows() > 0) CHECK((rep.a * d.a.transpose()).is_zero());
    CHECK(rank(rep.a) + rank(d.a) == c);
    CHECK(girth_oracle(rep) == cogirth_oracle(d));
    CHECK(cogirth_oracle(rep) == girth_oracle(d));
  }
}
