#pragma once

#include <string>
#include <vector>

#include "matgirth/evencut.hpp"
#include "matgirth/gf2.hpp"
#include "matgirth/graph.hpp"

namespace matgirth::graft {

// An (s,t)-signed-graft: a graph G together with s extra parity rows and t
// extra parity columns.  Its incidence matrix is the block matrix
//
//              E(G)   T
//        S   [  C     D ]
//        V   [ A(G)   B ]
//
// and the matroid of interest is M(incidence) with the T columns contracted.
// The extra row set S = {s1..} and column set T = {t1..} carry synthesized
// labels; in matrix form the T columns are labelled -1, -2, ..., -t so they
// stay disjoint from the (non-negative) edge ids.
struct SignedGraft {
  graph::MultiGraph g;
  int s = 0;
  int t = 0;
  gf2::Matrix b;  // |V| x t, row v-1 belongs to vertex v
  gf2::Matrix c;  // s x |E|, columns in edge insertion order
  gf2::Matrix d;  // s x t

  std::string s_label(int i) const { return "s" + std::to_string(i + 1); }
  std::string t_label(int j) const { return "t" + std::to_string(j + 1); }
};

// Throws std::invalid_argument when block dimensions disagree.
void validate(const SignedGraft& sg);

// Column labels of the T block: {-1, ..., -t}.
std::vector<int> t_column_labels(int t);

// The (s+|V|) x (|E|+t) block matrix with column labels: edge ids then
// t_column_labels(t).
gf2::MatroidRep graft_incidence(const SignedGraft& sg);

// The contracted matroid M(incidence)/T itself, for oracle-scale work.
gf2::MatroidRep contracted_rep(const SignedGraft& sg);

// Encode M(A(G)+P) as a (k,k)-signed-graft with k = rank(P): factor P = BC
// and set D = I.  Contracting the T columns of the result recovers exactly
// M(A(G)+P).  Throws when P is not |V| x |E|.
SignedGraft from_perturbation(const graph::MultiGraph& g, const gf2::Matrix& p);

// The 2^s grafts (G, {s1}, T, B, yC, yD) for y in GF(2)^s, indexed by the
// integer y (bit i selects row i).  The cogirth of the input's T-contraction
// is the minimum of the outputs' cogirths.
std::vector<SignedGraft> reduce_s(const SignedGraft& sg);

// The 2^t grafts (G, S, {t1}, Bx, C, Dx) for x in GF(2)^t, indexed by the
// integer x (bit j selects column j).  The girth of the input's T-contraction
// is the minimum of the outputs' girths (each contracting its one column).
std::vector<SignedGraft> reduce_t(const SignedGraft& sg);

// A (1,t)-graft's cogirth problem as an even-cut instance: tau(v) = row v of
// B, Sigma = support of the single C row, alpha = the single D row.  Throws
// unless s == 1.
evencut::EvenCutInstance to_evencut(const SignedGraft& sg);

}  // namespace matgirth::graft
