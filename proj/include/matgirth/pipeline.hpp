#pragma once

#include <cstdint>
#include <vector>

#include "matgirth/common.hpp"
#include "matgirth/gf2.hpp"
#include "matgirth/graft.hpp"

namespace matgirth::pipeline {

struct SolverConfig {
  double epsilon = 1e-3;   // total error budget, split by union bound
  std::uint64_t seed = 0;  // root of every derived stream
  int max_rank = 4;        // cap on the perturbation rank (2^rank branches)
  int contraction_c = 0;   // override the even-cut run multiplier; 0 derives
  int matching_reps = 0;   // override matching repetitions; 0 derives
};

// Throws std::invalid_argument when epsilon or the overrides are out of
// range.
void validate(const SolverConfig& cfg);

// Run multiplier c for an even-cut contraction suite with per-suite error
// budget eps: c * n^4 runs each succeed with probability at least 24 / n^4,
// so failure is under exp(-24 c) <= eps.
int contraction_repetition_factor(double eps);

// Repetitions for a matching-backed call at c = 2 with per-call budget eps:
// each repetition fails with probability at most 1/(2c), so
// (1/4)^reps <= eps.
int matching_repetitions(double eps);

// The effective per-join repetition count girth_perturbed uses for a rank
// `rank` perturbation of a graph with num_edges edges: the matching_reps
// override when set, else the derived count for budget
// epsilon / 2^rank / (num_edges + 1).
int girth_matching_reps(int rank, int num_edges, const SolverConfig& cfg);

// The effective contraction multiplier cogirth_perturbed uses for rank
// `rank`: the contraction_c override when set, else the derived factor for
// budget epsilon / 4^rank.
int cogirth_contraction_c(int rank, const SolverConfig& cfg);

// Girth of M(graft)/T for a graft whose T side is a single element, with
// parity rank s at most 4.  Deterministic except for one randomized join
// (the cheapest circuit through the contracted element); its repetitions
// take the configured budget split over all m+1 per-element subcalls.
// The randomization is one-sided: the result never drops below the truth
// and is exact with probability at least 1 - epsilon.
Size girth_graft_t1(const graft::SignedGraft& sg, const SolverConfig& cfg);

// Girth of M(A + P) where A is a graph incidence matrix: encode the
// perturbation as a signed graft, split the T side into 2^t single-element
// branches, and take the minimum branch girth, each branch on budget
// epsilon / 2^t with its own derived seed.
Size girth_perturbed(const gf2::Matrix& a, const gf2::Matrix& p,
                     const SolverConfig& cfg);

struct CogirthResult {
  Size value = kInf;
  std::vector<int> witness;  // sorted column indices of a smallest cocycle
  long long repetitions = 0;  // contraction runs spent across all branches
  bool found() const { return !is_inf(value); }
};

// Cogirth of M(A + P): 2^t single-row branches, each solved as a minimum
// even cut on budget epsilon / 4^t (the extra factor covers the
// connectivity sub-branches inside each solve).  Any returned witness is a
// genuine cocycle of M(A + P): its characteristic vector lies in the row
// space of A + P.
CogirthResult cogirth_perturbed(const gf2::Matrix& a, const gf2::Matrix& p,
                                const SolverConfig& cfg);

}  // namespace matgirth::pipeline
