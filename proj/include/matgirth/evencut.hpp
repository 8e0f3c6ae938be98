#pragma once

#include <cstdint>
#include <vector>

#include "matgirth/common.hpp"
#include "matgirth/gf2.hpp"
#include "matgirth/graph.hpp"
#include "matgirth/rng.hpp"

namespace matgirth::evencut {

// ---------------------------------------------------------------------------
// Set variant: given terminal sets T_1..T_t, minimize |delta(X)| over vertex
// sets X that are non-empty, proper, and meet every T_i in an even number of
// vertices.
// ---------------------------------------------------------------------------

struct SetEvenCutInstance {
  graph::MultiGraph g;
  std::vector<std::vector<int>> terminals;  // sorted vertex lists, even sizes
  int t() const { return static_cast<int>(terminals.size()); }
};

// Throws std::invalid_argument on out-of-range vertices, duplicate members,
// or odd terminal sets.
void validate(const SetEvenCutInstance& inst);

bool set_feasible(const SetEvenCutInstance& inst);

// Contract a non-loop edge xy; the new terminal sets contain the merged
// vertex iff exactly one of x, y was a member.
SetEvenCutInstance set_contract(const SetEvenCutInstance& inst, int edge_id);

// ---------------------------------------------------------------------------
// Dimensional variant: minimize |delta(X) symdiff Sigma'| non-empty over both
// demand branches (Sigma', alpha') in {(Sigma, alpha), (empty, 0)} subject to
// tau(X) = alpha'.
// ---------------------------------------------------------------------------

struct EvenCutInstance {
  graph::MultiGraph g;
  int t = 0;
  std::vector<ParityVec> tau;  // indexed by vertex, entry 0 unused
  std::vector<int> sigma;      // sorted edge ids
  ParityVec alpha = 0;
};

void validate(const EvenCutInstance& inst);

bool dim_feasible(const EvenCutInstance& inst);

// The binary matroid behind the instance: top row (sigma | alpha), then one
// row (incidence | tau(v)) per vertex.  Columns are the edges (labelled by
// edge id) followed by t parity columns labelled -1, -2, ..., -t.  The even
// cuts of the instance are exactly the cocycles of this matroid with the
// parity columns contracted.
gf2::MatroidRep formulation_matrix(const EvenCutInstance& inst);
std::vector<int> parity_column_labels(int t);

// Contract a non-loop edge e = xy with x the first endpoint of the edge
// record.  If e is in Sigma, the new Sigma is Sigma symdiff delta(x) and
// alpha gains tau(x); tau of the merged vertex is tau(x)+tau(y).
EvenCutInstance dim_contract(const EvenCutInstance& inst, int edge_id);

// ---------------------------------------------------------------------------
// Results
// ---------------------------------------------------------------------------

struct CutResult {
  Size size = kInf;
  std::vector<int> witness;     // sorted edge ids
  std::vector<int> x_vertices;  // sorted defining side, original numbering
  bool used_sigma = false;      // dimensional: (Sigma', alpha') == (Sigma, alpha)
  bool found() const { return !is_inf(size); }
};

struct ContractionAnswer {
  CutResult cut;
  long long repetitions = 0;
  bool exact = false;  // solved by one exhaustive pass at base-case size
};

// One random-contraction run.  Contracts uniform random non-loop edges until
// at most 2^t + 4 vertex classes remain, then exhausts all class subsets.
// A run can fail to see any valid cut (size stays kInf).
CutResult set_random_contraction(const SetEvenCutInstance& inst, Rng& rng);
CutResult dim_random_contraction(const EvenCutInstance& inst, Rng& rng);

// Best of c * n^4 independent runs (n = |V|), with per-run seeds derived from
// `seed`; instances already at base-case size are solved exactly in one pass.
// Preconditions: feasible (both), connected (dimensional).
ContractionAnswer set_min_even_cut(const SetEvenCutInstance& inst, int c,
                                   std::uint64_t seed);
ContractionAnswer dim_min_cocycle(const EvenCutInstance& inst, int c,
                                  std::uint64_t seed);

// ---------------------------------------------------------------------------
// Connectivity reduction: a disconnected instance is equivalent to a small
// family of connected instances on the graph obtained by gluing one
// representative vertex per component into a single blob vertex.
// ---------------------------------------------------------------------------

struct ReducedBranch {
  EvenCutInstance instance;  // connected
  ParityVec beta = 0;        // demand shift drawn from the component-mass span
  bool sigma_kept = true;    // false: the Sigma-free companion family
};

struct ConnectivityReduction {
  // When every component is trivial (single vertex, loops only), the answer
  // is computed directly and `branches` is empty.
  bool direct = false;
  CutResult direct_result;

  std::vector<ReducedBranch> branches;

  // Pull-back data, kept to lift branch results to the original instance.
  std::vector<std::vector<int>> component_sets;  // original vertices
  std::vector<ParityVec> component_mass;         // tau sum per component
  std::vector<int> vertex_map;  // original vertex -> merged vertex (0 unused)
};

ConnectivityReduction connectivity_reduce(const EvenCutInstance& inst);

// Lift a branch-level result back to the original instance: restores the
// defining vertex side (adding whole components as needed to meet the
// original demand) and the branch tag.  Witness edges are unchanged.
CutResult lift_result(const ConnectivityReduction& red, size_t branch_index,
                      const CutResult& branch_result,
                      const EvenCutInstance& original);

// Convenience driver: validate, reduce if disconnected, run dim_min_cocycle
// on every feasible branch, lift, and merge deterministically.
ContractionAnswer solve_even_cut(const EvenCutInstance& inst, int c,
                                 std::uint64_t seed);

}  // namespace matgirth::evencut
