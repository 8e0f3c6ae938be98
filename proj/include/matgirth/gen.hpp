#pragma once

#include <cstdint>

#include "matgirth/evencut.hpp"
#include "matgirth/gf2.hpp"
#include "matgirth/io.hpp"
#include "matgirth/pfaffian.hpp"

// Random instance generators.  Every generator is a pure function of its
// parameters and the seed (draws go through make_rng on the generator
// stream), so the same call produces the same instance byte for byte.
// Parameter combinations that cannot be met throw std::invalid_argument.
namespace matgirth::gen {

// A = incidence matrix of a random connected multigraph with r vertices and
// n edges (spanning tree first, then uniform extra edges, loops included);
// P = a uniform product of full-rank factors, so rank(P) is exactly t.
// Needs n >= r - 1 and t <= min(r, n).
struct PerturbedPair {
  gf2::Matrix a;
  gf2::Matrix p;
};
PerturbedPair gen_perturbed(int r, int n, int t, std::uint64_t seed);

// Random multigraph plus t random even-cardinality terminal sets.
evencut::SetEvenCutInstance gen_evencut_set(int n, int m, int t,
                                            std::uint64_t seed);

// Random multigraph with uniform vertex parities, a sparse random Sigma
// (each edge kept with probability 1/4), and a uniform demand.
evencut::EvenCutInstance gen_evencut_dim(int n, int m, int t,
                                         std::uint64_t seed);

// Random loopless weighted graph with uniform parities and demand; weights
// are uniform in 0..max_w.  Needs n >= 2 when m > 0.
pfaffian::MatchingInstance gen_matching(int n, int m, int t, int max_w,
                                        std::uint64_t seed);

// Random multigraph with uniform parities, a uniform distinct terminal set
// of the requested size, and a uniform demand.  Needs terminal_count <= n.
io::ParityInstance gen_parity(int n, int m, int t, int terminal_count,
                              std::uint64_t seed);

}  // namespace matgirth::gen
