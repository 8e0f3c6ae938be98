#include "doctest.h"

#include <stdexcept>

#include "matgirth/graft.hpp"
#include "test_util.hpp"

using namespace matgirth;
using namespace matgirth::graft;
using matgirth::graph::MultiGraph;

namespace {

MultiGraph random_multigraph(std::mt19937_64& g, int n, int m,
                             int loop_percent = 15) {
  MultiGraph out(n);
  for (int j = 0; j < m; ++j) {
    int u = testutil::rnd(g, 1, n);
    int v = testutil::rnd(g, 0, 99) < loop_percent ? u : testutil::rnd(g, 1, n);
    out.add_edge(j, u, v);
  }
  return out;
}

gf2::Matrix random_mat(std::mt19937_64& g, int rows, int cols) {
  gf2::Matrix out(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (testutil::rnd(g, 0, 1)) out.set(r, c, true);
  return out;
}

SignedGraft random_graft(std::mt19937_64& g, int n, int m, int s, int t) {
  SignedGraft sg;
  sg.g = random_multigraph(g, n, m);
  sg.s = s;
  sg.t = t;
  sg.b = random_mat(g, n, t);
  sg.c = random_mat(g, s, m);
  sg.d = random_mat(g, s, t);
  return sg;
}

// A random |V| x |E| perturbation of rank at most r.
gf2::Matrix random_pert(std::mt19937_64& g, int n, int m, int r) {
  return random_mat(g, n, r) * random_mat(g, r, m);
}

// Every subset rank agrees: the two representations give the same matroid.
void check_same_matroid(const gf2::MatroidRep& a, const gf2::MatroidRep& b) {
  REQUIRE(a.ground == b.ground);
  const int m = static_cast<int>(a.ground.size());
  REQUIRE(m <= 12);
  auto ba = testutil::unpack(a.a);
  auto bb = testutil::unpack(b.a);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> cols;
    for (int j = 0; j < m; ++j)
      if (mask >> j & 1u) cols.push_back(j);
    CHECK(testutil::brute_subset_rank(ba, cols) ==
          testutil::brute_subset_rank(bb, cols));
  }
}

}  // namespace

TEST_CASE("graft validation rejects bad block dimensions") {
  auto g = testutil::test_rng(400);
  SignedGraft sg = random_graft(g, 4, 5, 2, 2);
  CHECK_NOTHROW(validate(sg));
  SignedGraft bad = sg;
  bad.b = gf2::Matrix(3, 2);
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = sg;
  bad.c = gf2::Matrix(2, 4);
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = sg;
  bad.d = gf2::Matrix(1, 2);
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}

TEST_CASE("graft incidence is the labelled block matrix") {
  // s = t = 0: the matrix is exactly the graph incidence.
  MultiGraph tri(3);
  tri.add_edge(0, 1, 2);
  tri.add_edge(1, 2, 3);
  tri.add_edge(2, 1, 3);
  SignedGraft plain{tri, 0, 0, gf2::Matrix(3, 0), gf2::Matrix(0, 3),
                    gf2::Matrix(0, 0)};
  gf2::MatroidRep inc = graft_incidence(plain);
  CHECK(inc.a == tri.incidence().a);
  CHECK(inc.ground == std::vector<int>{0, 1, 2});

  // Single edge, s = t = 1, zero B, C, D: only the A(G) block is non-zero.
  MultiGraph one(2);
  one.add_edge(7, 1, 2);
  SignedGraft zg{one, 1, 1, gf2::Matrix(2, 1), gf2::Matrix(1, 1),
                 gf2::Matrix(1, 1)};
  gf2::MatroidRep z = graft_incidence(zg);
  REQUIRE(z.a.rows() == 3);
  REQUIRE(z.a.cols() == 2);
  CHECK(z.ground == std::vector<int>{7, -1});
  CHECK_FALSE(z.a.get(0, 0));
  CHECK_FALSE(z.a.get(0, 1));
  CHECK(z.a.get(1, 0));
  CHECK(z.a.get(2, 0));
  CHECK_FALSE(z.a.get(1, 1));
  CHECK_FALSE(z.a.get(2, 1));

  // Random graft: blocks land where they should.
  auto g = testutil::test_rng(401);
  SignedGraft sg = random_graft(g, 4, 6, 2, 3);
  gf2::MatroidRep inc2 = graft_incidence(sg);
  REQUIRE(inc2.a.rows() == 2 + 4);
  REQUIRE(inc2.a.cols() == 6 + 3);
  gf2::MatroidRep ginc = sg.g.incidence();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 6; ++j) CHECK(inc2.a.get(i, j) == sg.c.get(i, j));
    for (int j = 0; j < 3; ++j) CHECK(inc2.a.get(i, 6 + j) == sg.d.get(i, j));
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 6; ++j) CHECK(inc2.a.get(2 + i, j) == ginc.a.get(i, j));
    for (int j = 0; j < 3; ++j)
      CHECK(inc2.a.get(2 + i, 6 + j) == sg.b.get(i, j));
  }
  CHECK(inc2.ground == std::vector<int>{0, 1, 2, 3, 4, 5, -1, -2, -3});
}

TEST_CASE("from_perturbation represents the perturbed matroid exactly") {
  auto g = testutil::test_rng(402);

  // P = 0 gives a t = 0 graft whose contraction is M(A(G)) itself.
  MultiGraph tri(3);
  tri.add_edge(0, 1, 2);
  tri.add_edge(1, 2, 3);
  tri.add_edge(2, 1, 3);
  SignedGraft zero = from_perturbation(tri, gf2::Matrix(3, 3));
  CHECK(zero.t == 0);
  CHECK(zero.s == 0);
  check_same_matroid(contracted_rep(zero), tri.incidence());

  // Random low-rank perturbations: full matroid equality on small cases.
  for (int trial = 0; trial < 25; ++trial) {
    int n = testutil::rnd(g, 2, 5);
    int m = testutil::rnd(g, 1, 7);
    int r = testutil::rnd(g, 0, 2);
    MultiGraph graph = random_multigraph(g, n, m);
    gf2::Matrix p = random_pert(g, n, m, r);
    SignedGraft sg = from_perturbation(graph, p);
    CHECK(sg.t == gf2::rank(p));
    gf2::Matrix sum = graph.incidence().a + p;
    gf2::MatroidRep direct{sum, graph.incidence().ground};
    check_same_matroid(contracted_rep(sg), direct);
  }

  // Larger random instances: girth and cogirth agree through the graft.
  for (int trial = 0; trial < 30; ++trial) {
    int n = testutil::rnd(g, 2, 6);
    int m = testutil::rnd(g, 1, 10);
    int r = testutil::rnd(g, 0, 2);
    MultiGraph graph = random_multigraph(g, n, m);
    gf2::Matrix p = random_pert(g, n, m, r);
    SignedGraft sg = from_perturbation(graph, p);
    gf2::MatroidRep direct{graph.incidence().a + p, graph.incidence().ground};
    gf2::MatroidRep via = contracted_rep(sg);
    CHECK(gf2::girth_oracle(direct) == gf2::girth_oracle(via));
    CHECK(gf2::cogirth_oracle(direct) == gf2::cogirth_oracle(via));
  }

  CHECK_THROWS_AS(from_perturbation(tri, gf2::Matrix(2, 3)),
                  std::invalid_argument);
}

TEST_CASE("reduce_s: cogirth is the minimum over the 2^s row selections") {
  auto g = testutil::test_rng(403);
  for (int trial = 0; trial < 20; ++trial) {
    int n = testutil::rnd(g, 2, 5);
    int m = testutil::rnd(g, 1, 7);
    int s = testutil::rnd(g, 0, 2);
    int t = testutil::rnd(g, 0, 2);
    SignedGraft sg = random_graft(g, n, m, s, t);
    std::vector<SignedGraft> red = reduce_s(sg);
    REQUIRE(static_cast<int>(red.size()) == 1 << s);
    Size expect = gf2::cogirth_oracle(contracted_rep(sg));
    Size got = kInf;
    for (const auto& r : red) {
      CHECK(r.s == 1);
      CHECK(r.t == sg.t);
      got = std::min(got, gf2::cogirth_oracle(contracted_rep(r)));
    }
    CHECK(got == expect);
    // The all-ones selector carries the sum of the input rows.
    gf2::Vec csum(m), dsum(t);
    for (int i = 0; i < s; ++i) {
      csum.xor_with(sg.c.row(i));
      dsum.xor_with(sg.d.row(i));
    }
    CHECK(red.back().c.row(0) == csum);
    CHECK(red.back().d.row(0) == dsum);
  }
}

TEST_CASE("reduce_t: girth is the minimum over the 2^t column selections") {
  auto g = testutil::test_rng(404);
  for (int trial = 0; trial < 20; ++trial) {
    int n = testutil::rnd(g, 2, 5);
    int m = testutil::rnd(g, 1, 7);
    int s = testutil::rnd(g, 0, 2);
    int t = testutil::rnd(g, 0, 2);
    SignedGraft sg = random_graft(g, n, m, s, t);
    std::vector<SignedGraft> red = reduce_t(sg);
    REQUIRE(static_cast<int>(red.size()) == 1 << t);
    Size expect = gf2::girth_oracle(contracted_rep(sg));
    Size got = kInf;
    for (const auto& r : red) {
      CHECK(r.t == 1);
      CHECK(r.s == sg.s);
      got = std::min(got, gf2::girth_oracle(contracted_rep(r)));
    }
    CHECK(got == expect);
  }
  // t = 0: the single branch has a zero T column, a loop of the matroid;
  // contracting it is deletion and the matroid survives unchanged.
  SignedGraft sg = random_graft(g, 4, 6, 1, 0);
  std::vector<SignedGraft> red = reduce_t(sg);
  REQUIRE(red.size() == 1);
  CHECK(gf2::girth_oracle(contracted_rep(red[0])) ==
        gf2::girth_oracle(contracted_rep(sg)));
}

TEST_CASE("to_evencut mirrors the (1,t)-graft cogirth problem") {
  auto g = testutil::test_rng(405);

  // C = 0, D = 0 maps to an empty Sigma and zero alpha.
  SignedGraft zg = random_graft(g, 4, 5, 1, 2);
  zg.c = gf2::Matrix(1, 5);
  zg.d = gf2::Matrix(1, 2);
  evencut::EvenCutInstance zi = to_evencut(zg);
  CHECK(zi.sigma.empty());
  CHECK(zi.alpha == 0);
  CHECK(zi.t == 2);

  // Triangle, t = 0, C = (1,0,0): Sigma is the first edge.
  MultiGraph tri(3);
  tri.add_edge(0, 1, 2);
  tri.add_edge(1, 2, 3);
  tri.add_edge(2, 1, 3);
  SignedGraft tg{tri, 1, 0, gf2::Matrix(3, 0), gf2::Matrix(1, 3),
                 gf2::Matrix(1, 0)};
  tg.c.set(0, 0, true);
  evencut::EvenCutInstance ti = to_evencut(tg);
  CHECK(ti.sigma == std::vector<int>{0});
  CHECK(testutil::brute_dim_min(ti) == gf2::cogirth_oracle(contracted_rep(tg)));

  // Random (1,t)-grafts: the even-cut optimum equals the contracted cogirth.
  for (int trial = 0; trial < 40; ++trial) {
    int n = testutil::rnd(g, 1, 6);
    int m = testutil::rnd(g, 0, 8);
    int t = testutil::rnd(g, 0, 2);
    SignedGraft sg = random_graft(g, n, m, 1, t);
    evencut::EvenCutInstance inst = to_evencut(sg);
    CHECK_NOTHROW(evencut::validate(inst));
    CHECK(testutil::brute_dim_min(inst) ==
          gf2::cogirth_oracle(contracted_rep(sg)));
  }

  SignedGraft two = random_graft(g, 3, 3, 2, 1);
  CHECK_THROWS_AS(to_evencut(two), std::invalid_argument);
}

TEST_CASE("perturbed cogirth through reduce_s, even cuts, and the solver") {
  auto g = testutil::test_rng(406);
  int nontrivial = 0;
  for (int trial = 0; trial < 25; ++trial) {
    int n = testutil::rnd(g, 2, 6);
    int m = testutil::rnd(g, 1, 9);
    int r = testutil::rnd(g, 0, 2);
    MultiGraph graph = random_multigraph(g, n, m);
    gf2::Matrix p = random_pert(g, n, m, r);
    SignedGraft sg = from_perturbation(graph, p);
    gf2::MatroidRep direct{graph.incidence().a + p, graph.incidence().ground};
    Size expect = gf2::cogirth_oracle(direct);
    Size got = kInf;
    for (const auto& r1 : reduce_s(sg)) {
      evencut::ContractionAnswer ans =
          evencut::solve_even_cut(to_evencut(r1), 1, 17 + trial);
      got = std::min(got, ans.cut.size);
    }
    CHECK(got == expect);
    if (sg.t > 0 && !is_inf(expect)) ++nontrivial;
  }
  CHECK(nontrivial >= 8);
}
