#include "matgirth/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "matgirth/evencut.hpp"
#include "matgirth/graph.hpp"
#include "matgirth/parityjoin.hpp"
#include "matgirth/rng.hpp"

namespace matgirth::pipeline {

namespace {

// Per-edge parity classes from the C block: bit j of edge i is C(j, i).
std::vector<ParityVec> edge_parities(const graft::SignedGraft& sg) {
  std::vector<ParityVec> out(static_cast<size_t>(sg.g.num_edges()), 0);
  for (size_t i = 0; i < out.size(); ++i)
    for (int j = 0; j < sg.s; ++j)
      if (sg.c.get(j, static_cast<int>(i))) out[i] |= ParityVec{1} << j;
  return out;
}

graft::SignedGraft build_graft(const gf2::Matrix& a, const gf2::Matrix& p,
                               const SolverConfig& cfg) {
  graph::MultiGraph g = graph::graph_from_incidence(gf2::MatroidRep(a));
  graft::SignedGraft sg = graft::from_perturbation(g, p);
  if (sg.s > cfg.max_rank)
    throw std::invalid_argument("perturbation rank exceeds the configured cap");
  return sg;
}

}  // namespace

void validate(const SolverConfig& cfg) {
  if (!(cfg.epsilon > 0.0) || !(cfg.epsilon < 1.0))
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (cfg.max_rank < 0 || cfg.max_rank > 20)
    throw std::invalid_argument("rank cap must lie in [0, 20]");
  if (cfg.contraction_c < 0 || cfg.matching_reps < 0)
    throw std::invalid_argument("repetition overrides must be non-negative");
}

int contraction_repetition_factor(double eps) {
  if (!(eps > 0.0) || !(eps < 1.0))
    throw std::invalid_argument("budget must lie in (0, 1)");
  return std::max(1, static_cast<int>(std::ceil(std::log(1.0 / eps) / 24.0)));
}

int matching_repetitions(double eps) {
  if (!(eps > 0.0) || !(eps < 1.0))
    throw std::invalid_argument("budget must lie in (0, 1)");
  return std::max(
      1, static_cast<int>(std::ceil(std::log(1.0 / eps) / std::log(4.0))));
}

int girth_matching_reps(int rank, int num_edges, const SolverConfig& cfg) {
  validate(cfg);
  if (rank < 0 || rank > 20 || num_edges < 0)
    throw std::invalid_argument("rank or edge count out of range");
  if (cfg.matching_reps > 0) return cfg.matching_reps;
  double branch = cfg.epsilon / static_cast<double>(1LL << rank);
  return matching_repetitions(branch / (num_edges + 1));
}

int cogirth_contraction_c(int rank, const SolverConfig& cfg) {
  validate(cfg);
  if (rank < 0 || rank > 20)
    throw std::invalid_argument("rank out of range");
  if (cfg.contraction_c > 0) return cfg.contraction_c;
  double size = static_cast<double>(1LL << rank);
  return contraction_repetition_factor(cfg.epsilon / (size * size));
}

Size girth_graft_t1(const graft::SignedGraft& sg, const SolverConfig& cfg) {
  graft::validate(sg);
  validate(cfg);
  if (sg.t != 1)
    throw std::invalid_argument("the T side must be a single element");
  if (sg.s > 4)
    throw std::invalid_argument(
        "parity rank above the subset-folding guard (4)");

  const int n = sg.g.num_vertices();
  const int m = sg.g.num_edges();
  if (m == 0) return kInf;

  // Fast paths on the contracted representation: a zero column is a
  // one-element circuit, equal (non-zero) columns are a two-element one.
  gf2::MatroidRep rep = graft::contracted_rep(sg);
  {
    const int rows = rep.a.rows();
    std::vector<std::vector<std::uint64_t>> keys;
    keys.reserve(static_cast<size_t>(rep.a.cols()));
    bool any_zero = false;
    for (int col = 0; col < rep.a.cols(); ++col) {
      std::vector<std::uint64_t> key(static_cast<size_t>(rows + 63) / 64, 0);
      bool zero = true;
      for (int r = 0; r < rows; ++r)
        if (rep.a.get(r, col)) {
          key[static_cast<size_t>(r) / 64] |= std::uint64_t{1} << (r % 64);
          zero = false;
        }
      any_zero = any_zero || zero;
      keys.push_back(std::move(key));
    }
    if (any_zero) return 1;
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) return 2;
  }

  std::vector<ParityVec> gamma = edge_parities(sg);

  // k1: the smallest circuit avoiding the extra element, found per edge f
  // as 1 + (smallest join completing f to a cycle in the rest of the graph).
  Size k1 = kInf;
  for (int i = 0; i < m; ++i) {
    const graph::Edge& f = sg.g.edge_at(i);
    graph::MultiGraph rest(n);
    std::vector<ParityVec> rest_gamma;
    rest_gamma.reserve(static_cast<size_t>(m) - 1);
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      const graph::Edge& e = sg.g.edge_at(j);
      rest.add_edge(e.id, e.u, e.v);
      rest_gamma.push_back(gamma[static_cast<size_t>(j)]);
    }
    Size inner =
        f.is_loop()
            ? parityjoin::parity_cycle(rest, rest_gamma, sg.s,
                                       gamma[static_cast<size_t>(i)])
            : parityjoin::two_join(rest, rest_gamma, sg.s, f.u, f.v,
                                   gamma[static_cast<size_t>(i)]);
    k1 = std::min(k1, add_size(1, inner));
  }

  // k2 + 1: the smallest circuit through the extra element; k2 is the
  // smallest join hitting the element's vertex support with the demand from
  // the D entry.  This is the driver's only randomized subcall.
  std::vector<int> support;
  for (int v = 1; v <= n; ++v)
    if (sg.b.get(v - 1, 0)) support.push_back(v);
  ParityVec alpha = 0;
  for (int j = 0; j < sg.s; ++j)
    if (sg.d.get(j, 0)) alpha |= ParityVec{1} << j;
  int reps = cfg.matching_reps > 0
                 ? cfg.matching_reps
                 : matching_repetitions(cfg.epsilon / (m + 1));
  Size k2 =
      parityjoin::parity_join(sg.g, gamma, sg.s, support, alpha, 2, reps,
                              cfg.seed);

  // An empty k2 join means the extra element is itself a circuit before
  // contraction, contributing nothing afterwards.
  return k2 == 0 ? k1 : std::min(k1, k2);
}

Size girth_perturbed(const gf2::Matrix& a, const gf2::Matrix& p,
                     const SolverConfig& cfg) {
  validate(cfg);
  graft::SignedGraft sg = build_graft(a, p, cfg);
  std::vector<graft::SignedGraft> branches = graft::reduce_t(sg);
  int reps = girth_matching_reps(sg.t, sg.g.num_edges(), cfg);
  Size best = kInf;
  for (size_t x = 0; x < branches.size(); ++x) {
    SolverConfig branch_cfg = cfg;
    branch_cfg.epsilon = cfg.epsilon / static_cast<double>(branches.size());
    branch_cfg.matching_reps = reps;
    branch_cfg.seed = derive_seed(cfg.seed, kStreamGirthBranch, x);
    best = std::min(best, girth_graft_t1(branches[x], branch_cfg));
  }
  return best;
}

CogirthResult cogirth_perturbed(const gf2::Matrix& a, const gf2::Matrix& p,
                                const SolverConfig& cfg) {
  validate(cfg);
  graft::SignedGraft sg = build_graft(a, p, cfg);
  std::vector<graft::SignedGraft> branches = graft::reduce_s(sg);
  int c = cogirth_contraction_c(sg.s, cfg);
  CogirthResult out;
  for (size_t y = 0; y < branches.size(); ++y) {
    evencut::EvenCutInstance ec = graft::to_evencut(branches[y]);
    evencut::ContractionAnswer ans = evencut::solve_even_cut(
        ec, c, derive_seed(cfg.seed, kStreamCogirthBranch, y));
    out.repetitions += ans.repetitions;
    if (ans.cut.found() && better_result(ans.cut.size, ans.cut.witness,
                                         out.value, out.witness)) {
      out.value = ans.cut.size;
      out.witness = std::move(ans.cut.witness);
    }
  }
  return out;
}

}  // namespace matgirth::pipeline
