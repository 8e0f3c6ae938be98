#pragma once

#include <cstdint>
#include <vector>

#include "matgirth/common.hpp"
#include "matgirth/graph.hpp"

namespace matgirth::parityjoin {

// Optimal values indexed by parity class beta in GF(2)^t.
struct ParityTable {
  int t = 0;
  std::vector<Size> val;  // 2^t entries

  ParityTable() = default;
  explicit ParityTable(int t);
  Size at(ParityVec beta) const;  // bounds-checked
};

// Edge parities gamma are indexed by edge position (insertion order), like
// the other per-edge attribute vectors.  All operations validate t in
// [0, 20], gamma length and range, and vertex arguments.

// Minimum length of a (u,v)-walk of total parity alpha: a breadth-first
// search over (vertex, accumulated parity) states, where traversing edge e
// adds gamma(e).  Walks may repeat vertices and edges; the empty walk has
// length 0 and parity 0.
Size parity_walk(const graph::MultiGraph& g,
                 const std::vector<ParityVec>& gamma, int t, ParityVec alpha,
                 int u, int v);

// Entry beta = minimum length of a (u,v)-walk of parity beta, from a single
// search.
ParityTable walk_table(const graph::MultiGraph& g,
                       const std::vector<ParityVec>& gamma, int t, int u,
                       int v);

// Entry beta = minimum length of a closed walk of parity beta at any base
// vertex; entry 0 is 0 via the empty walk.
ParityTable closed_walk_table(const graph::MultiGraph& g,
                              const std::vector<ParityVec>& gamma, int t);

// Entry beta = minimum of sum(w(a) : a in S) over the subsets S of GF(2)^t
// with XOR(S) = beta.  Exact enumeration of all 2^(2^t) subsets; requires
// t <= 4.  The output inherits w-tilde's laws: entry 0 is 0 (empty subset)
// and the table is subadditive.
ParityTable wtilde_table(const ParityTable& w);

// Minimum cardinality of a cycle (an edge set with all degrees even,
// possibly empty) of parity alpha.  Equals wtilde(alpha): a minimum cycle
// splits into circuits with distinct nonzero parities, each at least as
// large as the corresponding closed-walk bound, and conversely closed walks
// of the chosen parities yield a cycle no bigger.
Size parity_cycle(const graph::MultiGraph& g,
                  const std::vector<ParityVec>& gamma, int t, ParityVec alpha);

// Minimum size of a {u,v}-join of parity alpha for distinct u, v: the
// minimum over beta of walk(u, v, beta) + wtilde(alpha + beta).  Throws on
// u == v (use parity_cycle for the empty terminal pair instead).
Size two_join(const graph::MultiGraph& g, const std::vector<ParityVec>& gamma,
              int t, int u, int v, ParityVec alpha);

// Every finite two-element join value is at most 2^t * n.
Size join_size_bound(int t, int n);

// H(G,T): one vertex per terminal and one edge per (terminal pair, parity
// class) weighted by the two-element join value; pairs with no join of a
// given parity contribute no edge.
struct JoinGraph {
  std::vector<int> terminals;    // sorted original vertices
  graph::MultiGraph h;           // vertices 1..|T|, positions in `terminals`
  int t = 0;
  std::vector<Size> w;           // by edge position
  std::vector<ParityVec> gamma;  // by edge position
};

// Requires |T| even and >= 2, members distinct vertices of g.
JoinGraph build_join_graph(const graph::MultiGraph& g,
                           const std::vector<ParityVec>& gamma, int t,
                           const std::vector<int>& terminals);

// Minimum size of a T-join of parity alpha.  T empty reduces to the cycle
// problem (deterministic); odd |T| has no joins at all; otherwise a minimum
// parity perfect matching on H(G,T), randomized with one-sided error (the
// result never undershoots the truth, and each repetition independently
// finds it with probability at least 1 - 1/(2c)).
Size parity_join(const graph::MultiGraph& g,
                 const std::vector<ParityVec>& gamma, int t,
                 const std::vector<int>& terminals, ParityVec alpha, int c,
                 int reps, std::uint64_t seed);

}  // namespace matgirth::parityjoin
