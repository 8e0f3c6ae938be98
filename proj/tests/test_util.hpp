#pragma once

// Shared helpers for the unit tests.  The brute-force routines here are
// deliberately written with different code paths from the library (plain
// subset enumeration on unpacked bits) so they can serve as independent
// oracles for the optimized implementations.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include <cmath>

#include "matgirth/common.hpp"
#include "matgirth/evencut.hpp"
#include "matgirth/gf2.hpp"
#include "matgirth/pfaffian.hpp"
#include "matgirth/ring.hpp"

namespace testutil {

using matgirth::Size;
using matgirth::kInf;

inline std::mt19937_64 test_rng(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

inline int rnd(std::mt19937_64& g, int lo, int hi) {
  return lo + static_cast<int>(g() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Matrix as vector of rows of 0/1 ints; independent of the packed class.
using BitMat = std::vector<std::vector<int>>;

inline BitMat random_bitmat(std::mt19937_64& g, int rows, int cols,
                            int percent_ones = 50) {
  BitMat m(rows, std::vector<int>(cols, 0));
  for (auto& row : m)
    for (auto& x : row) x = rnd(g, 0, 99) < percent_ones ? 1 : 0;
  return m;
}

inline matgirth::gf2::Matrix pack(const BitMat& m) {
  int rows = static_cast<int>(m.size());
  int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  matgirth::gf2::Matrix out(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (m[r][c]) out.set(r, c, true);
  return out;
}

inline BitMat unpack(const matgirth::gf2::Matrix& m) {
  BitMat out(m.rows(), std::vector<int>(m.cols(), 0));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out[r][c] = m.get(r, c) ? 1 : 0;
  return out;
}

// Number of distinct vectors in the row span, brute-forced; span size = 2^rank.
inline int brute_rank(const BitMat& m) {
  int rows = static_cast<int>(m.size());
  int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  std::vector<std::vector<int>> seen;
  for (std::uint32_t mask = 0; mask < (1u << rows); ++mask) {
    std::vector<int> acc(cols, 0);
    for (int r = 0; r < rows; ++r)
      if (mask >> r & 1)
        for (int c = 0; c < cols; ++c) acc[c] ^= m[r][c];
    if (std::find(seen.begin(), seen.end(), acc) == seen.end())
      seen.push_back(acc);
  }
  int rank = 0;
  while ((size_t{1} << rank) < seen.size()) ++rank;
  return rank;
}

// Minimum size of a non-empty column subset with zero sum (the girth).
inline Size brute_girth(const BitMat& m) {
  int rows = static_cast<int>(m.size());
  int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  Size best = kInf;
  for (std::uint32_t mask = 1; mask < (1u << cols); ++mask) {
    std::vector<int> acc(rows, 0);
    int size = 0;
    for (int c = 0; c < cols; ++c)
      if (mask >> c & 1) {
        ++size;
        for (int r = 0; r < rows; ++r) acc[r] ^= m[r][c];
      }
    if (std::all_of(acc.begin(), acc.end(), [](int x) { return x == 0; }))
      best = std::min<Size>(best, size);
  }
  return best;
}

// Minimum support of a non-zero row-space vector (the cogirth).
inline Size brute_cogirth(const BitMat& m) {
  int rows = static_cast<int>(m.size());
  int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  Size best = kInf;
  for (std::uint32_t mask = 1; mask < (1u << rows); ++mask) {
    std::vector<int> acc(cols, 0);
    for (int r = 0; r < rows; ++r)
      if (mask >> r & 1)
        for (int c = 0; c < cols; ++c) acc[c] ^= m[r][c];
    int w = 0;
    for (int x : acc) w += x;
    if (w > 0) best = std::min<Size>(best, w);
  }
  return best;
}

// Rank of the column subset indexed by `cols_in` (unpacked elimination).
inline int brute_subset_rank(const BitMat& m, const std::vector<int>& cols_in) {
  int rows = static_cast<int>(m.size());
  std::vector<std::vector<int>> sub(rows);
  for (int r = 0; r < rows; ++r)
    for (int c : cols_in) sub[r].push_back(m[r][c]);
  // Plain Gaussian elimination on the small dense matrix.
  int rank = 0;
  int ncols = static_cast<int>(cols_in.size());
  std::vector<std::vector<int>> w = sub;
  for (int c = 0; c < ncols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (w[r][c]) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(w[piv], w[rank]);
    for (int r = 0; r < rows; ++r)
      if (r != rank && w[r][c])
        for (int cc = 0; cc < ncols; ++cc) w[r][cc] ^= w[rank][cc];
    ++rank;
  }
  return rank;
}

inline std::vector<int> symdiff(std::vector<int> a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}

// Minimum even cut of the set variant by plain vertex-subset enumeration.
inline Size brute_set_min(const matgirth::evencut::SetEvenCutInstance& inst) {
  const int n = inst.g.num_vertices();
  Size best = kInf;
  for (std::uint32_t s = 1; s + 1 < (1u << n); ++s) {
    bool ok = true;
    for (const auto& ts : inst.terminals) {
      int cnt = 0;
      for (int v : ts) cnt += s >> (v - 1) & 1u;
      if (cnt % 2 != 0) ok = false;
    }
    if (!ok) continue;
    std::vector<int> x;
    for (int v = 1; v <= n; ++v)
      if (s >> (v - 1) & 1u) x.push_back(v);
    best = std::min<Size>(best, static_cast<Size>(inst.g.delta(x).size()));
  }
  return best;
}

// (value, sorted witness) of the best dimensional even cut by definition:
// both demand branches, all vertex subsets.
inline std::pair<Size, std::vector<int>> brute_dim_best(
    const matgirth::evencut::EvenCutInstance& inst) {
  const int n = inst.g.num_vertices();
  Size best = kInf;
  std::vector<int> best_w;
  for (int branch = 0; branch < 2; ++branch) {
    const bool with_sigma = branch == 0;
    const matgirth::ParityVec demand = with_sigma ? inst.alpha : 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      matgirth::ParityVec par = 0;
      std::vector<int> x;
      for (int v = 1; v <= n; ++v)
        if (s >> (v - 1) & 1u) {
          par ^= inst.tau[static_cast<size_t>(v)];
          x.push_back(v);
        }
      if (par != demand) continue;
      std::vector<int> c = inst.g.delta(x);
      if (with_sigma) c = symdiff(std::move(c), inst.sigma);
      if (c.empty()) continue;
      if (matgirth::better_result(static_cast<Size>(c.size()), c, best,
                                  best_w)) {
        best = static_cast<Size>(c.size());
        best_w = std::move(c);
      }
    }
  }
  return {best, best_w};
}

inline Size brute_dim_min(const matgirth::evencut::EvenCutInstance& inst) {
  return brute_dim_best(inst).first;
}

// Exact integer determinant by fraction-free (Bareiss) elimination.
inline matgirth::ring::Int brute_det_int(
    std::vector<std::vector<matgirth::ring::Int>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  matgirth::ring::Int sign = 1, prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Minimum weight of a perfect matching with the demanded parity, by
// recursive enumeration over the lowest unmatched vertex.
inline Size brute_matching_min(
    const matgirth::pfaffian::MatchingInstance& inst) {
  const int n = inst.g.num_vertices();
  if (n % 2 != 0) return kInf;
  std::vector<char> used(static_cast<size_t>(n) + 1, 0);
  Size best = kInf;
  auto rec = [&](auto&& self, Size weight, matgirth::ParityVec par) -> void {
    int u = 0;
    for (int v = 1; v <= n; ++v)
      if (!used[static_cast<size_t>(v)]) {
        u = v;
        break;
      }
    if (u == 0) {
      if (par == inst.alpha) best = std::min(best, weight);
      return;
    }
    used[static_cast<size_t>(u)] = 1;
    for (int i = 0; i < inst.g.num_edges(); ++i) {
      const auto& e = inst.g.edge_at(i);
      if (e.is_loop()) continue;
      int other = e.u == u ? e.v : e.v == u ? e.u : 0;
      if (other == 0 || used[static_cast<size_t>(other)]) continue;
      used[static_cast<size_t>(other)] = 1;
      self(self, weight + inst.w[static_cast<size_t>(i)],
           par ^ inst.gamma[static_cast<size_t>(i)]);
      used[static_cast<size_t>(other)] = 0;
    }
    used[static_cast<size_t>(u)] = 0;
  };
  rec(rec, 0, 0);
  return best;
}

// Minimum (u,v)-walk length per parity class by dynamic programming over
// exact lengths 0, 1, ..., 2^t * n: front[k] holds the states reachable in
// exactly k steps, and a state's first appearance is its distance.
inline std::vector<Size> brute_walk_dp(const matgirth::graph::MultiGraph& g,
                                       const std::vector<matgirth::ParityVec>&
                                           gamma,
                                       int t, int u, int v) {
  const size_t classes = size_t{1} << t;
  const int n = g.num_vertices();
  auto idx = [&](int vert, matgirth::ParityVec b) {
    return static_cast<size_t>(vert - 1) * classes + b;
  };
  std::vector<Size> best(classes, kInf);
  std::vector<char> front(static_cast<size_t>(n) * classes, 0);
  std::vector<char> seen(front.size(), 0);
  front[idx(u, 0)] = seen[idx(u, 0)] = 1;
  long long max_len = static_cast<long long>(classes) * n;
  for (long long k = 0; k <= max_len; ++k) {
    for (matgirth::ParityVec b = 0; b < classes; ++b)
      if (front[idx(v, b)] && matgirth::is_inf(best[b])) best[b] = k;
    std::vector<char> next(front.size(), 0);
    for (int x = 1; x <= n; ++x)
      for (matgirth::ParityVec b = 0; b < classes; ++b) {
        if (!front[idx(x, b)]) continue;
        for (const auto& e : g.edges()) {
          int other = e.u == x ? e.v : e.v == x ? e.u : 0;
          if (other == 0) continue;
          matgirth::ParityVec nb =
              b ^ gamma[static_cast<size_t>(g.pos_of_id(e.id))];
          if (!seen[idx(other, nb)]) next[idx(other, nb)] = 1;
        }
      }
    for (size_t i = 0; i < next.size(); ++i)
      if (next[i]) seen[i] = 1;
    front.swap(next);
  }
  return best;
}

// Minimum size of a T-join of parity alpha by enumerating all edge subsets:
// a subset qualifies when its odd-degree vertex set is exactly T.  T empty
// gives the minimum parity cycle.
inline Size brute_join_min(const matgirth::graph::MultiGraph& g,
                           const std::vector<matgirth::ParityVec>& gamma,
                           const std::vector<int>& terminals,
                           matgirth::ParityVec alpha) {
  const int m = g.num_edges();
  const int n = g.num_vertices();
  if (m > 20) throw std::invalid_argument("too many edges for brute joins");
  std::vector<char> want(static_cast<size_t>(n) + 1, 0);
  for (int v : terminals) want[static_cast<size_t>(v)] = 1;
  Size best = kInf;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<char> odd(static_cast<size_t>(n) + 1, 0);
    matgirth::ParityVec par = 0;
    int size = 0;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1u) {
        const auto& e = g.edge_at(i);
        if (!e.is_loop()) {
          odd[static_cast<size_t>(e.u)] ^= 1;
          odd[static_cast<size_t>(e.v)] ^= 1;
        }
        par ^= gamma[static_cast<size_t>(i)];
        ++size;
      }
    if (par != alpha || size >= best) continue;
    bool ok = true;
    for (int v = 1; v <= n && ok; ++v) ok = odd[static_cast<size_t>(v)] == want[static_cast<size_t>(v)];
    if (ok) best = size;
  }
  return best;
}

// P(X <= k) for X ~ Binomial(n, p), summed in log space.
inline double binom_cdf(int n, double p, int k) {
  if (k < 0) return 0.0;
  if (k >= n) return 1.0;
  double total = 0.0;
  for (int i = 0; i <= k; ++i) {
    double logpmf = std::lgamma(n + 1.0) - std::lgamma(i + 1.0) -
                    std::lgamma(n - i + 1.0) + i * std::log(p) +
                    (n - i) * std::log1p(-p);
    total += std::exp(logpmf);
  }
  return std::min(total, 1.0);
}

}  // namespace testutil
