#include "matgirth/pfaffian.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace matgirth::pfaffian {

using ring::GroupRingPoly;
using ring::SkewRingMatrix;

namespace {
constexpr Size kMaxWeight = 100000;
}

void validate(const MatchingInstance& inst) {
  const size_t m = static_cast<size_t>(inst.g.num_edges());
  if (inst.t < 0 || inst.t > 20)
    throw std::invalid_argument("parity dimension out of range");
  if (inst.w.size() != m || inst.gamma.size() != m)
    throw std::invalid_argument("edge attribute count mismatch");
  if (inst.alpha >= (ParityVec{1} << inst.t))
    throw std::invalid_argument("alpha out of range");
  for (size_t i = 0; i < m; ++i) {
    if (inst.w[i] < 0 || inst.w[i] > kMaxWeight)
      throw std::invalid_argument("edge weight out of range");
    if (inst.gamma[i] >= (ParityVec{1} << inst.t))
      throw std::invalid_argument("edge parity out of range");
  }
}

MatchingInstance dedupe_parallel(const MatchingInstance& inst) {
  validate(inst);
  const int m = inst.g.num_edges();
  // (u, v, parity) -> position of the best edge so far.
  std::map<std::tuple<int, int, ParityVec>, int> best;
  for (int i = 0; i < m; ++i) {
    const graph::Edge& e = inst.g.edge_at(i);
    if (e.is_loop()) continue;
    auto key = std::make_tuple(std::min(e.u, e.v), std::max(e.u, e.v),
                               inst.gamma[static_cast<size_t>(i)]);
    auto it = best.find(key);
    if (it == best.end()) {
      best[key] = i;
      continue;
    }
    const int j = it->second;
    Size wi = inst.w[static_cast<size_t>(i)];
    Size wj = inst.w[static_cast<size_t>(j)];
    int idi = inst.g.edge_at(i).id, idj = inst.g.edge_at(j).id;
    if (wi < wj || (wi == wj && idi < idj)) it->second = i;
  }
  std::vector<char> keep(static_cast<size_t>(m), 0);
  for (const auto& [key, pos] : best) keep[static_cast<size_t>(pos)] = 1;
  MatchingInstance out;
  out.g = graph::MultiGraph(inst.g.num_vertices());
  out.t = inst.t;
  out.alpha = inst.alpha;
  for (int i = 0; i < m; ++i) {
    if (!keep[static_cast<size_t>(i)]) continue;
    const graph::Edge& e = inst.g.edge_at(i);
    out.g.add_edge(e.id, e.u, e.v);
    out.w.push_back(inst.w[static_cast<size_t>(i)]);
    out.gamma.push_back(inst.gamma[static_cast<size_t>(i)]);
  }
  return out;
}

int sign_of_matching(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::pair<int, int>> m;
  std::vector<int> seen;
  for (auto [u, v] : pairs) {
    if (u == v) throw std::invalid_argument("matching pair with equal ends");
    m.emplace_back(std::min(u, v), std::max(u, v));
    seen.push_back(u);
    seen.push_back(v);
  }
  std::sort(seen.begin(), seen.end());
  for (size_t i = 0; i < seen.size(); ++i)
    if (seen[i] != static_cast<int>(i) + 1)
      throw std::invalid_argument("pairs do not partition 1..2k");
  int crossings = 0;
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = i + 1; j < m.size(); ++j) {
      auto [a, b] = m[i];
      auto [c, d] = m[j];
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) ++crossings;
    }
  return crossings % 2 == 0 ? 1 : -1;
}

ring::SkewRingMatrix tutte_matrix(const MatchingInstance& inst,
                                  const std::vector<long long>& x) {
  validate(inst);
  const int n = inst.g.num_vertices();
  const int m = inst.g.num_edges();
  if (x.size() != static_cast<size_t>(m))
    throw std::invalid_argument("evaluation point size mismatch");
  for (long long v : x)
    if (v <= 0) throw std::invalid_argument("evaluation entries must be positive");
  SkewRingMatrix out(n, inst.t);
  std::map<std::pair<int, int>, GroupRingPoly> acc;
  for (int i = 0; i < m; ++i) {
    const graph::Edge& e = inst.g.edge_at(i);
    if (e.is_loop()) continue;
    auto key = std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
    GroupRingPoly mono = GroupRingPoly::monomial(
        inst.t, inst.gamma[static_cast<size_t>(i)],
        static_cast<int>(inst.w[static_cast<size_t>(i)]),
        x[static_cast<size_t>(i)]);
    auto it = acc.find(key);
    if (it == acc.end())
      acc.emplace(key, std::move(mono));
    else
      it->second = ring_add(it->second, mono);
  }
  for (const auto& [key, poly] : acc) out.set_upper(key.first, key.second, poly);
  return out;
}

namespace {

void naive_rec(const SkewRingMatrix& d, std::vector<char>& used,
               std::vector<std::pair<int, int>>& pairs, GroupRingPoly& total) {
  const int n = d.n();
  int u = 0;
  for (int v = 1; v <= n; ++v)
    if (!used[static_cast<size_t>(v)]) {
      u = v;
      break;
    }
  if (u == 0) {
    GroupRingPoly prod = GroupRingPoly::unit(d.t());
    for (auto [a, b] : pairs) prod = ring_mul(prod, d.at(a, b));
    if (sign_of_matching(pairs) < 0) prod = -prod;
    total = ring_add(total, prod);
    return;
  }
  used[static_cast<size_t>(u)] = 1;
  for (int v = u + 1; v <= n; ++v) {
    if (used[static_cast<size_t>(v)]) continue;
    if (d.at(u, v).is_zero()) continue;  // the whole branch contributes zero
    used[static_cast<size_t>(v)] = 1;
    pairs.emplace_back(u, v);
    naive_rec(d, used, pairs, total);
    pairs.pop_back();
    used[static_cast<size_t>(v)] = 0;
  }
  used[static_cast<size_t>(u)] = 0;
}

}  // namespace

GroupRingPoly pfaffian_naive(const SkewRingMatrix& d) {
  const int n = d.n();
  if (n > 12) throw std::invalid_argument("naive Pfaffian capped at n = 12");
  if (n % 2 != 0) return GroupRingPoly(d.t());
  if (n == 0) return GroupRingPoly::unit(d.t());
  GroupRingPoly total(d.t());
  std::vector<char> used(static_cast<size_t>(n) + 1, 0);
  std::vector<std::pair<int, int>> pairs;
  naive_rec(d, used, pairs, total);
  return total;
}

int PfaffianDag::xid(int bit, int head, int pos, int consumed) const {
  return 3 + ((bit * n + (head - 1)) * n + (pos - 1)) * n + consumed;
}

bool PfaffianDag::decode(int id, int* bit, int* head, int* pos,
                         int* consumed) const {
  if (id < 3) return false;
  int r = id - 3;
  *consumed = r % n;
  r /= n;
  *pos = r % n + 1;
  r /= n;
  *head = r % n + 1;
  r /= n;
  *bit = r;
  return true;
}

int PfaffianDag::level(int id) const {
  if (id == kS) return 0;
  if (id == kTMinus || id == kTPlus) return n + 1;
  int b, h, p, l;
  decode(id, &b, &h, &p, &l);
  return l + 1;
}

PfaffianDag build_dag(const SkewRingMatrix& d) {
  const int n = d.n();
  if (n % 2 != 0) throw std::invalid_argument("the DAG needs even n");
  PfaffianDag dag;
  dag.n = n;
  auto unit_edge = [&](int from, int to) {
    dag.edges.push_back({from, to, 0, 0});
  };
  auto entry_edge = [&](int from, int to, int i, int j) {
    dag.edges.push_back({from, to, i, j});
  };

  // Rule 1: start a clow with odd head a at position a, nothing consumed.
  for (int a = 1; a < n; a += 2)
    unit_edge(PfaffianDag::kS, dag.xid(0, a, a, 0));

  // Rule 2: consume a matrix entry, moving the position from a to v3 above
  // the head.  Fires into odd consumed-counts.  Only upper-triangular
  // entries are used; stepping up from below (a < v3) flips the sign bit.
  for (int v4 = 1; v4 < n; v4 += 2)
    for (int v1 = 0; v1 <= 1; ++v1)
      for (int v2 = 1; v2 <= n; ++v2)
        for (int v3 = v2 + 1; v3 <= n; ++v3)
          for (int a = 1; a <= n; ++a) {
            if (a == v3) continue;
            if (a < v3)
              entry_edge(dag.xid(1 - v1, v2, a, v4 - 1),
                         dag.xid(v1, v2, v3, v4), a, v3);
            else
              entry_edge(dag.xid(v1, v2, a, v4 - 1), dag.xid(v1, v2, v3, v4),
                         v3, a);
          }

  for (int v4 = 2; v4 < n; v4 += 2)
    for (int v1 = 0; v1 <= 1; ++v1) {
      // Rule 3: free step from odd position v3-1 to its even partner v3,
      // flipping the sign bit.
      for (int v3 = 2; v3 <= n; v3 += 2)
        for (int v2 = 1; v2 < v3 - 1; ++v2)
          unit_edge(dag.xid(1 - v1, v2, v3 - 1, v4 - 1),
                    dag.xid(v1, v2, v3, v4));
      // Rule 4: free step from even position v3+1 down to odd v3.
      for (int v3 = 1; v3 <= n; v3 += 2)
        for (int v2 = 1; v2 < v3; ++v2)
          unit_edge(dag.xid(v1, v2, v3 + 1, v4 - 1), dag.xid(v1, v2, v3, v4));
      // Rule 5: close the clow with head a at position a+1 and open a new
      // one with larger odd head v2, flipping the sign bit.
      for (int v2 = 1; v2 <= n; v2 += 2)
        for (int a = 1; a < v2; ++a)
          unit_edge(dag.xid(1 - v1, a, a + 1, v4 - 1),
                    dag.xid(v1, v2, v2, v4));
    }

  // Rules 6 and 7: a finished walk sits at the partner a+1 of its head a
  // with everything consumed; the sign bit picks the terminal.
  for (int a = 1; a < n; a += 2) {
    unit_edge(dag.xid(0, a, a + 1, n - 1), PfaffianDag::kTMinus);
    unit_edge(dag.xid(1, a, a + 1, n - 1), PfaffianDag::kTPlus);
  }
  return dag;
}

GroupRingPoly eval_dag(const PfaffianDag& dag, const SkewRingMatrix& d,
                       DagEvalStats* stats, int max_zdeg) {
  if (d.n() != dag.n) throw std::invalid_argument("DAG size mismatch");
  const int nv = dag.num_vertices();
  std::vector<GroupRingPoly> f(static_cast<size_t>(nv), GroupRingPoly(d.t()));
  f[PfaffianDag::kS] = GroupRingPoly::unit(d.t());

  // Bucket edges by the level of their head; each level depends only on the
  // previous one.
  std::vector<std::vector<int>> by_level(static_cast<size_t>(dag.n) + 2);
  for (size_t i = 0; i < dag.edges.size(); ++i)
    by_level[static_cast<size_t>(dag.level(dag.edges[i].to))].push_back(
        static_cast<int>(i));
  for (int lvl = 1; lvl <= dag.n + 1; ++lvl)
    for (int ei : by_level[static_cast<size_t>(lvl)]) {
      const PfaffianDag::Edge& e = dag.edges[static_cast<size_t>(ei)];
      const GroupRingPoly& src = f[static_cast<size_t>(e.from)];
      if (src.is_zero()) continue;
      GroupRingPoly term =
          e.wi == 0 ? src : ring_mul_trunc(src, d.at(e.wi, e.wj), max_zdeg);
      f[static_cast<size_t>(e.to)] =
          ring_add(f[static_cast<size_t>(e.to)], term);
    }
  if (stats) {
    for (const auto& poly : f) {
      ring::Int a = poly.max_abs_coeff();
      if (a > stats->max_abs) stats->max_abs = a;
      stats->max_zdeg = std::max(stats->max_zdeg, poly.max_zdeg());
    }
  }
  return ring_sub(f[PfaffianDag::kTPlus], f[PfaffianDag::kTMinus]);
}

GroupRingPoly pfaffian_dag(const SkewRingMatrix& d, int max_zdeg) {
  if (d.n() % 2 != 0) return GroupRingPoly(d.t());
  if (d.n() == 0) return GroupRingPoly::unit(d.t());
  return eval_dag(build_dag(d), d, nullptr, max_zdeg);
}

Size parity_matching(const MatchingInstance& inst, int c, long long reps,
                     std::uint64_t seed, Size max_weight) {
  validate(inst);
  if (c < 1) throw std::invalid_argument("confidence parameter must be >= 1");
  const int n = inst.g.num_vertices();
  if (n % 2 != 0) return kInf;
  const int m = inst.g.num_edges();
  int cap = -1;
  if (max_weight >= 0 && !is_inf(max_weight))
    cap = static_cast<int>(std::min<Size>(max_weight, 1 << 30));
  Size best = kInf;
  for (long long run = 0; run < reps; ++run) {
    Rng rng = make_rng(seed, kStreamMatchingRun,
                       static_cast<std::uint64_t>(run));
    std::vector<long long> x(static_cast<size_t>(m));
    for (auto& v : x)
      v = rng_int(rng, 1, static_cast<long long>(c) * std::max(n, 1));
    ring::SkewRingMatrix tm = tutte_matrix(inst, x);
    best = std::min(best, pfaffian_dag(tm, cap).mindeg_z(inst.alpha));
  }
  return best;
}

}  // namespace matgirth::pfaffian
