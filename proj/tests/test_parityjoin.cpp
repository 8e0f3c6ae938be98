#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "matgirth/parityjoin.hpp"
#include "test_util.hpp"

using namespace matgirth;
using namespace matgirth::parityjoin;
using matgirth::graph::MultiGraph;

namespace {

struct LabeledGraph {
  MultiGraph g;
  std::vector<ParityVec> gamma;
};

LabeledGraph random_labeled(std::mt19937_64& rng, int n, int m, int t,
                            int loop_percent = 15) {
  LabeledGraph out;
  out.g = MultiGraph(n);
  for (int j = 0; j < m; ++j) {
    int u = testutil::rnd(rng, 1, n);
    int v = testutil::rnd(rng, 0, 99) < loop_percent ? u
                                                     : testutil::rnd(rng, 1, n);
    out.g.add_edge(j, u, v);
    out.gamma.push_back(
        static_cast<ParityVec>(testutil::rnd(rng, 0, (1 << t) - 1)));
  }
  return out;
}

std::vector<int> random_terminals(std::mt19937_64& rng, int n, int count) {
  std::vector<int> all(static_cast<size_t>(n));
  for (int v = 1; v <= n; ++v) all[static_cast<size_t>(v - 1)] = v;
  for (int i = 0; i < count; ++i) {
    int j = testutil::rnd(rng, i, n - 1);
    std::swap(all[static_cast<size_t>(i)], all[static_cast<size_t>(j)]);
  }
  all.resize(static_cast<size_t>(count));
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

TEST_CASE("parity table construction and bounds") {
  ParityTable tbl(2);
  CHECK(tbl.val.size() == 4);
  for (ParityVec b = 0; b < 4; ++b) CHECK(is_inf(tbl.at(b)));
  CHECK_THROWS_AS(tbl.at(4), std::invalid_argument);
  CHECK_THROWS_AS(ParityTable(21), std::invalid_argument);
}

TEST_CASE("parity walks: trivial and forced cases") {
  MultiGraph g(2);
  g.add_edge(0, 1, 2);
  std::vector<ParityVec> gamma = {1};
  CHECK(parity_walk(g, gamma, 1, 0, 1, 1) == 0);  // empty walk
  // Any (1,2)-walk uses the edge an odd number of times: parity is forced.
  CHECK(is_inf(parity_walk(g, gamma, 1, 0, 1, 2)));
  CHECK(parity_walk(g, gamma, 1, 1, 1, 2) == 1);
  // Closed walks at an end traverse the edge an even number of times.
  CHECK(parity_walk(g, gamma, 1, 0, 2, 2) == 0);
  CHECK(is_inf(parity_walk(g, gamma, 1, 1, 2, 2)));
  CHECK(is_inf(parity_walk(g, std::vector<ParityVec>{0}, 1, 1, 1, 2)));
  // Dimension zero: plain breadth-first distance.
  MultiGraph path(3);
  path.add_edge(0, 1, 2);
  path.add_edge(1, 2, 3);
  CHECK(parity_walk(path, {0, 0}, 0, 0, 1, 3) == 2);
  // Input validation.
  CHECK_THROWS_AS(parity_walk(g, {1, 0}, 1, 0, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(parity_walk(g, {2}, 1, 0, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(parity_walk(g, gamma, 1, 0, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(parity_walk(g, gamma, 1, 0, 1, 3), std::invalid_argument);
}

TEST_CASE("parity walks match the exact-length dynamic program") {
  auto rng = testutil::test_rng(600);
  for (int trial = 0; trial < 25; ++trial) {
    int n = testutil::rnd(rng, 2, 8);
    int m = testutil::rnd(rng, 1, 12);
    int t = testutil::rnd(rng, 0, 2);
    LabeledGraph lg = random_labeled(rng, n, m, t);
    for (int u = 1; u <= n; ++u)
      for (int v = 1; v <= n; ++v) {
        ParityTable tbl = walk_table(lg.g, lg.gamma, t, u, v);
        std::vector<Size> brute =
            testutil::brute_walk_dp(lg.g, lg.gamma, t, u, v);
        for (ParityVec b = 0; b < (1u << t); ++b)
          CHECK(tbl.at(b) == brute[b]);
      }
  }
}

TEST_CASE("explicitly built product graph gives the same distances") {
  auto rng = testutil::test_rng(601);
  for (int trial = 0; trial < 12; ++trial) {
    int n = testutil::rnd(rng, 2, 7);
    int m = testutil::rnd(rng, 1, 12);
    int t = testutil::rnd(rng, 1, 2);
    LabeledGraph lg = random_labeled(rng, n, m, t);
    const int classes = 1 << t;

    // The product has a state per (vertex, parity) and a simple edge
    // whenever some edge of G connects two distinct states.
    std::set<std::pair<int, int>> product_edges;
    auto sid = [&](int v, ParityVec b) {
      return (v - 1) * classes + static_cast<int>(b);
    };
    for (int i = 0; i < m; ++i) {
      const auto& e = lg.g.edge_at(i);
      for (int b = 0; b < classes; ++b) {
        int a = sid(e.u, static_cast<ParityVec>(b));
        int c = sid(e.v, static_cast<ParityVec>(b) ^
                             lg.gamma[static_cast<size_t>(i)]);
        if (a == c) continue;  // a zero-parity loop adds nothing
        product_edges.insert({std::min(a, c), std::max(a, c)});
      }
    }
    int num_states = n * classes;
    CHECK(static_cast<int>(product_edges.size()) <= classes * m);

    std::vector<std::vector<int>> adj(static_cast<size_t>(num_states));
    for (auto [a, c] : product_edges) {
      adj[static_cast<size_t>(a)].push_back(c);
      adj[static_cast<size_t>(c)].push_back(a);
    }
    for (int u = 1; u <= n; ++u) {
      std::vector<int> dist(static_cast<size_t>(num_states), -1);
      std::vector<int> queue = {sid(u, 0)};
      dist[static_cast<size_t>(sid(u, 0))] = 0;
      for (size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        for (int y : adj[static_cast<size_t>(x)])
          if (dist[static_cast<size_t>(y)] == -1) {
            dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
            queue.push_back(y);
          }
      }
      for (int v = 1; v <= n; ++v)
        for (int b = 0; b < classes; ++b) {
          int d = dist[static_cast<size_t>(sid(v, static_cast<ParityVec>(b)))];
          Size got =
              parity_walk(lg.g, lg.gamma, t, static_cast<ParityVec>(b), u, v);
          if (d == -1)
            CHECK(is_inf(got));
          else
            CHECK(got == d);
        }
    }
  }
}

TEST_CASE("walk distances are symmetric and triangle-bounded") {
  auto rng = testutil::test_rng(602);
  for (int trial = 0; trial < 10; ++trial) {
    int n = testutil::rnd(rng, 2, 6);
    int t = testutil::rnd(rng, 1, 2);
    LabeledGraph lg = random_labeled(rng, n, testutil::rnd(rng, 2, 10), t);
    std::vector<std::vector<ParityTable>> d(static_cast<size_t>(n) + 1);
    for (int u = 1; u <= n; ++u) {
      d[static_cast<size_t>(u)].resize(static_cast<size_t>(n) + 1);
      for (int v = 1; v <= n; ++v)
        d[static_cast<size_t>(u)][static_cast<size_t>(v)] =
            walk_table(lg.g, lg.gamma, t, u, v);
    }
    for (int u = 1; u <= n; ++u)
      for (int v = 1; v <= n; ++v)
        for (ParityVec a = 0; a < (1u << t); ++a) {
          CHECK(d[static_cast<size_t>(u)][static_cast<size_t>(v)].at(a) ==
                d[static_cast<size_t>(v)][static_cast<size_t>(u)].at(a));
          for (int w = 1; w <= n; ++w)
            for (ParityVec b = 0; b < (1u << t); ++b)
              CHECK(d[static_cast<size_t>(u)][static_cast<size_t>(w)].at(a ^
                                                                         b) <=
                    add_size(
                        d[static_cast<size_t>(u)][static_cast<size_t>(v)].at(a),
                        d[static_cast<size_t>(v)][static_cast<size_t>(w)].at(
                            b)));
        }
  }
}

TEST_CASE("closed walk tables record the cheapest parities") {
  // A forest with all-zero labels only has trivial closed-walk parities.
  MultiGraph forest(4);
  forest.add_edge(0, 1, 2);
  forest.add_edge(1, 3, 4);
  ParityTable w = closed_walk_table(forest, {0, 0}, 1);
  CHECK(w.at(0) == 0);
  CHECK(is_inf(w.at(1)));

  // A single loop of parity 1 gives w(1) = 1.
  MultiGraph loop(1);
  loop.add_edge(0, 1, 1);
  w = closed_walk_table(loop, {1}, 1);
  CHECK(w.at(0) == 0);
  CHECK(w.at(1) == 1);

  // Triangle labeled (1,0,0): the odd closed walks go all the way around.
  MultiGraph tri(3);
  tri.add_edge(0, 1, 2);
  tri.add_edge(1, 2, 3);
  tri.add_edge(2, 3, 1);
  w = closed_walk_table(tri, {1, 0, 0}, 1);
  CHECK(w.at(0) == 0);
  CHECK(w.at(1) == 3);

  // Random cross-check against the per-base-vertex dynamic program.
  auto rng = testutil::test_rng(603);
  for (int trial = 0; trial < 15; ++trial) {
    int n = testutil::rnd(rng, 1, 7);
    int t = testutil::rnd(rng, 0, 2);
    LabeledGraph lg = random_labeled(rng, n, testutil::rnd(rng, 0, 11), t);
    ParityTable got = closed_walk_table(lg.g, lg.gamma, t);
    for (ParityVec b = 0; b < (1u << t); ++b) {
      Size expect = b == 0 ? 0 : kInf;
      for (int u = 1; u <= n; ++u)
        expect = std::min(expect,
                          testutil::brute_walk_dp(lg.g, lg.gamma, t, u, u)[b]);
      CHECK(got.at(b) == expect);
    }
  }
}

TEST_CASE("subset folding composes closed-walk parities") {
  ParityTable w(1);
  w.val = {0, 5};
  ParityTable f = wtilde_table(w);
  CHECK(f.at(0) == 0);
  CHECK(f.at(1) == 5);

  ParityTable w2(2);
  w2.val = {0, 3, 4, 9};  // classes 00, 01, 10, 11
  f = wtilde_table(w2);
  CHECK(f.at(0b00) == 0);
  CHECK(f.at(0b01) == 3);
  CHECK(f.at(0b10) == 4);
  CHECK(f.at(0b11) == 7);  // {01, 10} beats the direct class

  // Unreachable classes stay unreachable.
  ParityTable winf(1);
  winf.val = {0, kInf};
  f = wtilde_table(winf);
  CHECK(f.at(0) == 0);
  CHECK(is_inf(f.at(1)));

  // The empty subset pins entry 0 even when the input is expensive there.
  ParityTable wodd(1);
  wodd.val = {4, kInf};
  CHECK(wtilde_table(wodd).at(0) == 0);

  // Subadditivity holds on random tables, infinities included.
  auto rng = testutil::test_rng(604);
  for (int trial = 0; trial < 20; ++trial) {
    int t = testutil::rnd(rng, 0, 3);
    ParityTable r(t);
    r.val[0] = 0;
    for (size_t b = 1; b < r.val.size(); ++b)
      r.val[b] = testutil::rnd(rng, 0, 4) == 0 ? kInf : testutil::rnd(rng, 0, 9);
    ParityTable ft = wtilde_table(r);
    for (ParityVec x = 0; x < ft.val.size(); ++x) {
      CHECK(ft.at(x) <= r.at(x));  // the singleton subset
      for (ParityVec y = 0; y < ft.val.size(); ++y)
        CHECK(ft.at(x ^ y) <= add_size(ft.at(x), ft.at(y)));
    }
  }

  CHECK_THROWS_AS(wtilde_table(ParityTable(5)), std::invalid_argument);
}

TEST_CASE("minimum parity cycles match subset enumeration") {
  // The empty cycle settles demand zero.
  MultiGraph lone(2);
  CHECK(parity_cycle(lone, {}, 2, 0) == 0);

  MultiGraph tri(3);
  tri.add_edge(0, 1, 2);
  tri.add_edge(1, 2, 3);
  tri.add_edge(2, 3, 1);
  CHECK(parity_cycle(tri, {1, 1, 1}, 1, 1) == 3);
  CHECK(parity_cycle(tri, {1, 1, 1}, 1, 0) == 0);

  auto rng = testutil::test_rng(605);
  for (int trial = 0; trial < 20; ++trial) {
    int n = testutil::rnd(rng, 2, 7);
    int t = testutil::rnd(rng, 0, 2);
    LabeledGraph lg = random_labeled(rng, n, testutil::rnd(rng, 0, 14), t);
    for (ParityVec a = 0; a < (1u << t); ++a)
      CHECK(parity_cycle(lg.g, lg.gamma, t, a) ==
            testutil::brute_join_min(lg.g, lg.gamma, {}, a));
  }
}

TEST_CASE("two-element joins match subset enumeration") {
  MultiGraph pair(2);
  pair.add_edge(0, 1, 2);
  CHECK(two_join(pair, {1}, 1, 1, 2, 1) == 1);
  CHECK(is_inf(two_join(pair, {1}, 1, 1, 2, 0)));
  CHECK_THROWS_AS(two_join(pair, {1}, 1, 2, 2, 1), std::invalid_argument);

  auto rng = testutil::test_rng(606);
  for (int trial = 0; trial < 20; ++trial) {
    int n = testutil::rnd(rng, 2, 6);
    int t = testutil::rnd(rng, 0, 2);
    LabeledGraph lg = random_labeled(rng, n, testutil::rnd(rng, 1, 12), t);
    int u = testutil::rnd(rng, 1, n - 1);
    int v = testutil::rnd(rng, u + 1, n);
    for (ParityVec a = 0; a < (1u << t); ++a)
      CHECK(two_join(lg.g, lg.gamma, t, u, v, a) ==
            testutil::brute_join_min(lg.g, lg.gamma, {u, v}, a));
  }
}

TEST_CASE("finite join values respect the size bound") {
  CHECK(join_size_bound(0, 7) == 7);
  CHECK(join_size_bound(2, 10) == 40);
  auto rng = testutil::test_rng(607);
  for (int trial = 0; trial < 15; ++trial) {
    int n = testutil::rnd(rng, 2, 7);
    int t = testutil::rnd(rng, 0, 2);
    LabeledGraph lg = random_labeled(rng, n, testutil::rnd(rng, 1, 12), t);
    int u = testutil::rnd(rng, 1, n - 1);
    int v = testutil::rnd(rng, u + 1, n);
    for (ParityVec a = 0; a < (1u << t); ++a) {
      Size value = two_join(lg.g, lg.gamma, t, u, v, a);
      if (!is_inf(value)) CHECK(value <= join_size_bound(t, n));
    }
  }
}

TEST_CASE("join graph edges are the finite pairwise join values") {
  auto rng = testutil::test_rng(608);

  // Two terminals: at most one edge per parity class.
  {
    LabeledGraph lg = random_labeled(rng, 5, 8, 2);
    JoinGraph jg = build_join_graph(lg.g, lg.gamma, 2, {2, 4});
    CHECK(jg.terminals == std::vector<int>{2, 4});
    CHECK(jg.h.num_vertices() == 2);
    CHECK(jg.h.num_edges() <= 4);
  }

  // Terminals in different components never connect.
  {
    MultiGraph split(4);
    split.add_edge(0, 1, 2);
    split.add_edge(1, 3, 4);
    JoinGraph jg = build_join_graph(split, {0, 1}, 1, {1, 2, 3, 4});
    for (const auto& e : jg.h.edges()) {
      int cu = jg.terminals[static_cast<size_t>(e.u - 1)];
      int cv = jg.terminals[static_cast<size_t>(e.v - 1)];
      CHECK((cu <= 2) == (cv <= 2));
    }
  }

  // Weights and parities agree with direct recomputation.
  for (int trial = 0; trial < 8; ++trial) {
    int n = testutil::rnd(rng, 4, 8);
    int t = testutil::rnd(rng, 0, 2);
    LabeledGraph lg = random_labeled(rng, n, testutil::rnd(rng, 3, 14), t);
    std::vector<int> terminals = random_terminals(rng, n, 4);
    JoinGraph jg = build_join_graph(lg.g, lg.gamma, t, terminals);
    std::map<std::tuple<int, int, ParityVec>, Size> present;
    for (int i = 0; i < jg.h.num_edges(); ++i) {
      const auto& e = jg.h.edge_at(i);
      int cu = jg.terminals[static_cast<size_t>(e.u - 1)];
      int cv = jg.terminals[static_cast<size_t>(e.v - 1)];
      present[{std::min(cu, cv), std::max(cu, cv),
               jg.gamma[static_cast<size_t>(i)]}] =
          jg.w[static_cast<size_t>(i)];
    }
    for (size_t i = 0; i < terminals.size(); ++i)
      for (size_t j = i + 1; j < terminals.size(); ++j)
        for (ParityVec b = 0; b < (1u << t); ++b) {
          Size direct = two_join(lg.g, lg.gamma, t, terminals[i], terminals[j],
                                 b);
          auto it = present.find({terminals[i], terminals[j], b});
          if (is_inf(direct))
            CHECK(it == present.end());
          else {
            REQUIRE(it != present.end());
            CHECK(it->second == direct);
          }
        }
  }

  LabeledGraph lg = random_labeled(rng, 5, 6, 1);
  CHECK_THROWS_AS(build_join_graph(lg.g, lg.gamma, 1, {1, 2, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_join_graph(lg.g, lg.gamma, 1, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_join_graph(lg.g, lg.gamma, 1, {2, 2}),
                  std::invalid_argument);
}

TEST_CASE("parity joins: empty, odd, and two-terminal cases") {
  auto rng = testutil::test_rng(609);
  LabeledGraph lg = random_labeled(rng, 6, 10, 2);
  // Empty terminal set falls through to the cycle solver, deterministic.
  CHECK(parity_join(lg.g, lg.gamma, 2, {}, 0, 2, 0, 1) == 0);
  for (ParityVec a = 0; a < 4; ++a)
    CHECK(parity_join(lg.g, lg.gamma, 2, {}, a, 2, 5, 1) ==
          parity_cycle(lg.g, lg.gamma, 2, a));
  // Odd terminal sets have no joins.
  CHECK(is_inf(parity_join(lg.g, lg.gamma, 2, {1, 2, 3}, 0, 2, 5, 1)));
  // Two terminals: the matching path reproduces the deterministic value.
  for (int trial = 0; trial < 10; ++trial) {
    int n = testutil::rnd(rng, 2, 6);
    int t = testutil::rnd(rng, 0, 2);
    LabeledGraph inst = random_labeled(rng, n, testutil::rnd(rng, 1, 10), t);
    int u = testutil::rnd(rng, 1, n - 1);
    int v = testutil::rnd(rng, u + 1, n);
    for (ParityVec a = 0; a < (1u << t); ++a)
      CHECK(parity_join(inst.g, inst.gamma, t, {u, v}, a, 2, 10,
                        300 + trial) == two_join(inst.g, inst.gamma, t, u, v,
                                                 a));
  }
}

TEST_CASE("parity joins match subset enumeration") {
  auto rng = testutil::test_rng(610);
  int finite = 0;
  for (int trial = 0; trial < 18; ++trial) {
    int n = testutil::rnd(rng, 4, 8);
    int t = testutil::rnd(rng, 0, 2);
    int tcount = 2 * testutil::rnd(rng, 1, 2);
    LabeledGraph lg = random_labeled(rng, n, testutil::rnd(rng, 3, 13), t);
    std::vector<int> terminals = random_terminals(rng, n, tcount);
    ParityVec alpha = static_cast<ParityVec>(testutil::rnd(rng, 0, (1 << t) - 1));
    Size expect = testutil::brute_join_min(lg.g, lg.gamma, terminals, alpha);
    CHECK(parity_join(lg.g, lg.gamma, t, terminals, alpha, 2, 10,
                      500 + trial) == expect);
    if (!is_inf(expect)) ++finite;
  }
  CHECK(finite >= 6);

  // A six-terminal instance end to end.
  for (int trial = 0; trial < 3; ++trial) {
    LabeledGraph lg = random_labeled(rng, 7, 13, 1);
    std::vector<int> terminals = random_terminals(rng, 7, 6);
    for (ParityVec a = 0; a < 2; ++a)
      CHECK(parity_join(lg.g, lg.gamma, 1, terminals, a, 2, 10, 40 + trial) ==
            testutil::brute_join_min(lg.g, lg.gamma, terminals, a));
  }
}
