#include "matgirth/parityjoin.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

#include "matgirth/pfaffian.hpp"
#include "matgirth/rng.hpp"

namespace matgirth::parityjoin {

namespace {

void check_inputs(const graph::MultiGraph& g,
                  const std::vector<ParityVec>& gamma, int t) {
  if (t < 0 || t > 20)
    throw std::invalid_argument("parity dimension must be in [0, 20]");
  if (gamma.size() != static_cast<size_t>(g.num_edges()))
    throw std::invalid_argument("need one parity per edge");
  for (ParityVec p : gamma)
    if ((p >> t) != 0)
      throw std::invalid_argument("edge parity out of range for dimension");
}

void check_vertex(const graph::MultiGraph& g, int v) {
  if (v < 1 || v > g.num_vertices())
    throw std::invalid_argument("vertex out of range: " + std::to_string(v));
}

// Breadth-first distances over the (vertex, parity) states from (src, 0);
// -1 marks unreachable states.  State (v, b) has index (v-1) * 2^t + b.
std::vector<int> product_bfs(const graph::MultiGraph& g,
                             const std::vector<ParityVec>& gamma, int t,
                             int src) {
  const size_t classes = size_t{1} << t;
  std::vector<int> dist(static_cast<size_t>(g.num_vertices()) * classes, -1);
  auto idx = [&](int v, ParityVec b) {
    return static_cast<size_t>(v - 1) * classes + b;
  };
  std::deque<std::pair<int, ParityVec>> queue;
  dist[idx(src, 0)] = 0;
  queue.emplace_back(src, 0);
  while (!queue.empty()) {
    auto [v, b] = queue.front();
    queue.pop_front();
    int d = dist[idx(v, b)];
    for (int i = 0; i < g.num_edges(); ++i) {
      const graph::Edge& e = g.edge_at(i);
      int other;
      if (e.u == v)
        other = e.v;
      else if (e.v == v)
        other = e.u;
      else
        continue;
      ParityVec nb = b ^ gamma[static_cast<size_t>(i)];
      if (dist[idx(other, nb)] != -1) continue;
      dist[idx(other, nb)] = d + 1;
      queue.emplace_back(other, nb);
    }
  }
  return dist;
}

}  // namespace

ParityTable::ParityTable(int t) : t(t) {
  if (t < 0 || t > 20)
    throw std::invalid_argument("parity dimension must be in [0, 20]");
  val.assign(size_t{1} << t, kInf);
}

Size ParityTable::at(ParityVec beta) const {
  if (beta >= val.size())
    throw std::invalid_argument("parity class out of range");
  return val[beta];
}

Size parity_walk(const graph::MultiGraph& g,
                 const std::vector<ParityVec>& gamma, int t, ParityVec alpha,
                 int u, int v) {
  return walk_table(g, gamma, t, u, v).at(alpha);
}

ParityTable walk_table(const graph::MultiGraph& g,
                       const std::vector<ParityVec>& gamma, int t, int u,
                       int v) {
  check_inputs(g, gamma, t);
  check_vertex(g, u);
  check_vertex(g, v);
  std::vector<int> dist = product_bfs(g, gamma, t, u);
  ParityTable out(t);
  const size_t classes = size_t{1} << t;
  for (ParityVec b = 0; b < classes; ++b) {
    int d = dist[static_cast<size_t>(v - 1) * classes + b];
    if (d >= 0) out.val[b] = d;
  }
  return out;
}

ParityTable closed_walk_table(const graph::MultiGraph& g,
                              const std::vector<ParityVec>& gamma, int t) {
  check_inputs(g, gamma, t);
  ParityTable out(t);
  out.val[0] = 0;  // the empty walk
  const size_t classes = size_t{1} << t;
  for (int u = 1; u <= g.num_vertices(); ++u) {
    std::vector<int> dist = product_bfs(g, gamma, t, u);
    for (ParityVec b = 0; b < classes; ++b) {
      int d = dist[static_cast<size_t>(u - 1) * classes + b];
      if (d >= 0) out.val[b] = std::min<Size>(out.val[b], d);
    }
  }
  return out;
}

ParityTable wtilde_table(const ParityTable& w) {
  if (w.t > 4)
    throw std::invalid_argument(
        "subset folding needs parity dimension at most 4");
  const size_t classes = size_t{1} << w.t;
  if (w.val.size() != classes)
    throw std::invalid_argument("parity table has wrong size");
  ParityTable out(w.t);
  // Subset sums and XORs by lowest-set-bit recursion over class masks.
  std::vector<Size> sum(size_t{1} << classes, 0);
  std::vector<ParityVec> acc(size_t{1} << classes, 0);
  out.val[0] = 0;
  for (size_t mask = 1; mask < sum.size(); ++mask) {
    size_t low = mask & (~mask + 1);
    int cls = std::countr_zero(mask);
    sum[mask] = add_size(sum[mask ^ low], w.val[static_cast<size_t>(cls)]);
    acc[mask] = acc[mask ^ low] ^ static_cast<ParityVec>(cls);
    if (sum[mask] < out.val[acc[mask]]) out.val[acc[mask]] = sum[mask];
  }
  return out;
}

Size parity_cycle(const graph::MultiGraph& g,
                  const std::vector<ParityVec>& gamma, int t,
                  ParityVec alpha) {
  return wtilde_table(closed_walk_table(g, gamma, t)).at(alpha);
}

Size two_join(const graph::MultiGraph& g, const std::vector<ParityVec>& gamma,
              int t, int u, int v, ParityVec alpha) {
  if (u == v)
    throw std::invalid_argument("two-element joins need distinct ends");
  ParityTable walks = walk_table(g, gamma, t, u, v);
  ParityTable cycles = wtilde_table(closed_walk_table(g, gamma, t));
  if (alpha >= walks.val.size())
    throw std::invalid_argument("parity class out of range");
  Size best = kInf;
  for (ParityVec beta = 0; beta < walks.val.size(); ++beta)
    best = std::min(best, add_size(walks.val[beta], cycles.at(alpha ^ beta)));
  return best;
}

Size join_size_bound(int t, int n) {
  if (t < 0 || t > 20)
    throw std::invalid_argument("parity dimension must be in [0, 20]");
  return (Size{1} << t) * n;
}

JoinGraph build_join_graph(const graph::MultiGraph& g,
                           const std::vector<ParityVec>& gamma, int t,
                           const std::vector<int>& terminals) {
  check_inputs(g, gamma, t);
  if (terminals.empty() || terminals.size() % 2 != 0)
    throw std::invalid_argument(
        "the terminal set must be non-empty of even size");
  std::set<int> seen;
  for (int v : terminals) {
    check_vertex(g, v);
    if (!seen.insert(v).second)
      throw std::invalid_argument("duplicate terminal");
  }

  JoinGraph out;
  out.terminals.assign(seen.begin(), seen.end());
  out.t = t;
  int k = static_cast<int>(out.terminals.size());
  out.h = graph::MultiGraph(k);

  const size_t classes = size_t{1} << t;
  ParityTable cycles = wtilde_table(closed_walk_table(g, gamma, t));
  // One search per terminal serves all pairs it participates in.
  std::vector<std::vector<int>> dist;
  dist.reserve(static_cast<size_t>(k));
  for (int v : out.terminals)
    dist.push_back(product_bfs(g, gamma, t, v));

  int next_id = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const std::vector<int>& d = dist[static_cast<size_t>(i)];
      int target = out.terminals[static_cast<size_t>(j)];
      for (ParityVec beta = 0; beta < classes; ++beta) {
        Size best = kInf;
        for (ParityVec bw = 0; bw < classes; ++bw) {
          int wd = d[static_cast<size_t>(target - 1) * classes + bw];
          if (wd < 0) continue;
          best = std::min(best, add_size(Size{wd}, cycles.at(beta ^ bw)));
        }
        if (is_inf(best)) continue;
        out.h.add_edge(next_id++, i + 1, j + 1);
        out.w.push_back(best);
        out.gamma.push_back(beta);
      }
    }
  return out;
}

Size parity_join(const graph::MultiGraph& g,
                 const std::vector<ParityVec>& gamma, int t,
                 const std::vector<int>& terminals, ParityVec alpha, int c,
                 int reps, std::uint64_t seed) {
  check_inputs(g, gamma, t);
  if (terminals.empty()) return parity_cycle(g, gamma, t, alpha);
  if (terminals.size() % 2 != 0) return kInf;

  JoinGraph jg = build_join_graph(g, gamma, t, terminals);
  pfaffian::MatchingInstance inst;
  inst.g = jg.h;
  inst.t = t;
  inst.w = jg.w;
  inst.gamma = jg.gamma;
  inst.alpha = alpha;

  // Any join is an edge subset of g, so the optimum (when finite) is at most
  // |E(g)|; capping the z-degrees there keeps the Pfaffian polynomials small.
  const Size cap = static_cast<Size>(g.num_edges());
  Size best = kInf;
  for (int rep = 0; rep < reps; ++rep)
    best = std::min(best,
                    pfaffian::parity_matching(
                        inst, c, 1,
                        derive_seed(seed, kStreamJoinRun,
                                    static_cast<std::uint64_t>(rep)),
                        cap));
  return best;
}

}  // namespace matgirth::parityjoin
