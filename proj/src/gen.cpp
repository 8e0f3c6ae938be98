#include "matgirth/gen.hpp"

#include <algorithm>
#include <stdexcept>

#include "matgirth/rng.hpp"

namespace matgirth::gen {

namespace {

// Draw phases on the generator stream: one per generator kind, so different
// kinds never share a generator state for the same root seed.
enum : std::uint64_t {
  kPhasePerturbed = 1,
  kPhaseEvenCutSet = 2,
  kPhaseEvenCutDim = 3,
  kPhaseMatching = 4,
  kPhaseParity = 5,
};

void check_counts(int n, int m, int t) {
  if (n < 0 || m < 0) throw std::invalid_argument("sizes must be non-negative");
  if (t < 0 || t > 20)
    throw std::invalid_argument("parity dimension must be between 0 and 20");
  if (n == 0 && m > 0)
    throw std::invalid_argument("edges need at least one vertex");
}

graph::MultiGraph random_multigraph(Rng& rng, int n, int m) {
  graph::MultiGraph g(n);
  for (int i = 0; i < m; ++i)
    g.add_edge(i, static_cast<int>(rng_int(rng, 1, n)),
               static_cast<int>(rng_int(rng, 1, n)));
  return g;
}

gf2::Matrix random_full_rank(Rng& rng, int rows, int cols) {
  const int want = std::min(rows, cols);
  for (;;) {
    gf2::Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (rng_bit(rng)) m.set(i, j, 1);
    if (gf2::rank(m) == want) return m;
  }
}

ParityVec random_parity(Rng& rng, int t) {
  ParityVec v = 0;
  for (int i = 0; i < t; ++i)
    if (rng_bit(rng)) v |= ParityVec{1} << i;
  return v;
}

// The first `count` entries of a uniform permutation of 1..n, sorted.
std::vector<int> random_vertex_set(Rng& rng, int n, int count) {
  std::vector<int> pool(static_cast<size_t>(n));
  for (int v = 1; v <= n; ++v) pool[static_cast<size_t>(v - 1)] = v;
  for (int i = 0; i < count; ++i) {
    int j = static_cast<int>(rng_int(rng, i, n - 1));
    std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(j)]);
  }
  pool.resize(static_cast<size_t>(count));
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

PerturbedPair gen_perturbed(int r, int n, int t, std::uint64_t seed) {
  check_counts(r, n, t);
  if (n < r - 1)
    throw std::invalid_argument(
        "a connected graph needs at least r - 1 edges");
  if (t > std::min(r, n))
    throw std::invalid_argument("rank t needs t <= min(r, n)");
  Rng rng = make_rng(seed, kStreamGen, kPhasePerturbed);

  graph::MultiGraph g(r);
  int next_id = 0;
  for (int v = 2; v <= r; ++v)
    g.add_edge(next_id++, static_cast<int>(rng_int(rng, 1, v - 1)), v);
  while (next_id < n) {
    g.add_edge(next_id++, static_cast<int>(rng_int(rng, 1, r)),
               static_cast<int>(rng_int(rng, 1, r)));
  }

  PerturbedPair out{gf2::Matrix(r, n), gf2::Matrix(r, n)};
  for (int j = 0; j < n; ++j) {
    const graph::Edge& e = g.edge_at(j);
    if (!e.is_loop()) {
      out.a.set(e.u - 1, j, 1);
      out.a.set(e.v - 1, j, 1);
    }
  }
  if (t > 0) {
    gf2::Matrix left = random_full_rank(rng, r, t);
    gf2::Matrix right = random_full_rank(rng, t, n);
    out.p = left * right;
  }
  return out;
}

evencut::SetEvenCutInstance gen_evencut_set(int n, int m, int t,
                                            std::uint64_t seed) {
  check_counts(n, m, t);
  Rng rng = make_rng(seed, kStreamGen, kPhaseEvenCutSet);
  evencut::SetEvenCutInstance inst;
  inst.g = random_multigraph(rng, n, m);
  for (int i = 0; i < t; ++i) {
    int size = 2 * static_cast<int>(rng_int(rng, 0, n / 2));
    inst.terminals.push_back(random_vertex_set(rng, n, size));
  }
  evencut::validate(inst);
  return inst;
}

evencut::EvenCutInstance gen_evencut_dim(int n, int m, int t,
                                         std::uint64_t seed) {
  check_counts(n, m, t);
  Rng rng = make_rng(seed, kStreamGen, kPhaseEvenCutDim);
  evencut::EvenCutInstance inst;
  inst.g = random_multigraph(rng, n, m);
  inst.t = t;
  inst.tau.assign(static_cast<size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v)
    inst.tau[static_cast<size_t>(v)] = random_parity(rng, t);
  for (int i = 0; i < m; ++i)
    if (rng_below(rng, 4) == 0)
      inst.sigma.push_back(inst.g.edge_at(i).id);
  inst.alpha = random_parity(rng, t);
  evencut::validate(inst);
  return inst;
}

pfaffian::MatchingInstance gen_matching(int n, int m, int t, int max_w,
                                        std::uint64_t seed) {
  check_counts(n, m, t);
  if (max_w < 0) throw std::invalid_argument("max_w must be non-negative");
  if (m > 0 && n < 2)
    throw std::invalid_argument("loopless edges need at least two vertices");
  Rng rng = make_rng(seed, kStreamGen, kPhaseMatching);
  pfaffian::MatchingInstance inst;
  inst.g = graph::MultiGraph(n);
  inst.t = t;
  for (int i = 0; i < m; ++i) {
    int u = static_cast<int>(rng_int(rng, 1, n));
    int v = static_cast<int>(rng_int(rng, 1, n - 1));
    if (v >= u) ++v;  // uniform over ordered pairs with u != v
    inst.g.add_edge(i, std::min(u, v), std::max(u, v));
    inst.w.push_back(rng_int(rng, 0, max_w));
    inst.gamma.push_back(random_parity(rng, t));
  }
  inst.alpha = random_parity(rng, t);
  pfaffian::validate(inst);
  return inst;
}

io::ParityInstance gen_parity(int n, int m, int t, int terminal_count,
                              std::uint64_t seed) {
  check_counts(n, m, t);
  if (terminal_count < 0 || terminal_count > n)
    throw std::invalid_argument("terminal count must be between 0 and n");
  Rng rng = make_rng(seed, kStreamGen, kPhaseParity);
  io::ParityInstance inst;
  inst.g = random_multigraph(rng, n, m);
  inst.t = t;
  for (int i = 0; i < m; ++i) inst.gamma.push_back(random_parity(rng, t));
  inst.terminals = random_vertex_set(rng, n, terminal_count);
  inst.alpha = random_parity(rng, t);
  return inst;
}

}  // namespace matgirth::gen
