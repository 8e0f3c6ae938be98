#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "matgirth/common.hpp"
#include "matgirth/graph.hpp"
#include "matgirth/ring.hpp"
#include "matgirth/rng.hpp"

namespace matgirth::pfaffian {

// Minimum-weight perfect matching subject to a parity demand: find a perfect
// matching M of g minimizing total weight with the XOR of the edge parities
// equal to alpha.  Weights and parities are indexed by edge position in
// g.edges() order.
struct MatchingInstance {
  graph::MultiGraph g;
  int t = 0;
  std::vector<Size> w;           // non-negative, by edge position
  std::vector<ParityVec> gamma;  // by edge position
  ParityVec alpha = 0;
};

// Throws std::invalid_argument on size mismatches, negative or oversized
// weights (z-polynomials are stored densely, so per-edge weights are capped
// at 100000), or parities out of range for t.
void validate(const MatchingInstance& inst);

// Keep, for each unordered vertex pair and parity class, only one edge of
// minimum weight (ties: smallest edge id); drop loops.
MatchingInstance dedupe_parallel(const MatchingInstance& inst);

// Sign of a perfect matching of {1..2k}: (-1)^(number of crossing pairs),
// where {a,b} and {c,d} (a<b, c<d) cross iff a<c<b<d or c<a<d<b.  Throws
// unless the pairs partition {1..2k} exactly.
int sign_of_matching(const std::vector<std::pair<int, int>>& pairs);

// The Tutte matrix of the instance evaluated at x: entry (u,v) for u<v is
// the sum over parallel edges e of x[e] * y^gamma(e) * z^w(e); loops
// contribute nothing.  x is indexed by edge position and must be positive.
ring::SkewRingMatrix tutte_matrix(const MatchingInstance& inst,
                                  const std::vector<long long>& x);

// Pfaffian by summing sign * product over all perfect pairings of {1..n}.
// The empty matrix has Pfaffian 1, odd n gives 0.  Guarded to n <= 12.
ring::GroupRingPoly pfaffian_naive(const ring::SkewRingMatrix& d);

// Layered DAG whose signed path weights sum to the Pfaffian: paths walk
// states (sign bit, clow head, position, edges consumed) and pick up one
// matrix entry on every second step.  Rule numbers refer to
// docs/dag_rules.md.
struct PfaffianDag {
  int n = 0;

  // wi == 0 marks the ring unit; otherwise the weight is entry (wi, wj).
  struct Edge {
    int from = 0, to = 0;
    int wi = 0, wj = 0;
  };
  std::vector<Edge> edges;

  static constexpr int kS = 0;
  static constexpr int kTMinus = 1;
  static constexpr int kTPlus = 2;

  int num_vertices() const { return 2 * n * n * n + 3; }
  // State vertices: bit in {0,1}, head and position in 1..n, consumed in
  // [0, n).
  int xid(int bit, int head, int pos, int consumed) const;
  // Decodes a state vertex; returns false for s, t-, t+.
  bool decode(int id, int* bit, int* head, int* pos, int* consumed) const;
  // Topological level: s = 0, states = consumed + 1, t-/t+ = n + 1.
  int level(int id) const;
};

// Builds the DAG for an n x n matrix, n even (n = 0 allowed, giving the
// trivial three-vertex graph).  Throws on odd n.
PfaffianDag build_dag(const ring::SkewRingMatrix& d);

struct DagEvalStats {
  ring::Int max_abs = 0;  // largest |coefficient| over every path sum f(v)
  int max_zdeg = -1;
};

// One topological sweep of f(v) = sum of f(u) * wt(uv); returns
// f(t+) - f(t-).  The DAG must belong to a matrix of the same size.  A
// non-negative max_zdeg discards every z-degree above it as the sweep goes
// (degrees at most max_zdeg come out exact, higher ones are gone).
ring::GroupRingPoly eval_dag(const PfaffianDag& dag,
                             const ring::SkewRingMatrix& d,
                             DagEvalStats* stats = nullptr, int max_zdeg = -1);

// Pfaffian via the DAG; equals pfaffian_naive everywhere (below any z-cap).
// Handles the empty matrix (1) and odd n (0) directly.
ring::GroupRingPoly pfaffian_dag(const ring::SkewRingMatrix& d,
                                 int max_zdeg = -1);

// Random Evaluation: draw x uniformly from {1..c|V|}^E, evaluate the Tutte
// Pfaffian, and read the minimum z-degree of the alpha class; repeat `reps`
// times (run r uses make_rng(seed, kStreamMatchingRun, r)) and keep the
// minimum.  One-sided: the result is never below the true optimum, and it
// exceeds it (or falsely reports INFINITY) with probability at most
// (1/(2c))^reps.  Odd |V| returns INFINITY immediately.  A non-negative
// max_weight prunes z-degrees above it during evaluation; when the caller
// can promise the optimum is at most max_weight the answer is unchanged,
// otherwise values above the cap degrade to INFINITY (still one-sided).
Size parity_matching(const MatchingInstance& inst, int c, long long reps,
                     std::uint64_t seed, Size max_weight = -1);

}  // namespace matgirth::pfaffian
