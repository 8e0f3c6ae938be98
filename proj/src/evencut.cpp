#include "matgirth/evencut.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace matgirth::evencut {

namespace {

constexpr int kMaxT = 16;

int base_threshold(int t) { return (1 << t) + 4; }

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Union-find over vertices 1..n with class parity payloads.
struct UnionFind {
  std::vector<int> parent, size;
  void reset(int n) {
    parent.resize(static_cast<size_t>(n) + 1);
    size.assign(static_cast<size_t>(n) + 1, 1);
    for (int v = 0; v <= n; ++v) parent[static_cast<size_t>(v)] = v;
  }
  int find(int v) {
    while (parent[static_cast<size_t>(v)] != v) {
      parent[static_cast<size_t>(v)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
      v = parent[static_cast<size_t>(v)];
    }
    return v;
  }
  // Returns the surviving root.
  int unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (size[static_cast<size_t>(a)] < size[static_cast<size_t>(b)])
      std::swap(a, b);
    parent[static_cast<size_t>(b)] = a;
    size[static_cast<size_t>(a)] += size[static_cast<size_t>(b)];
    return a;
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// Validation and feasibility
// ---------------------------------------------------------------------------

void validate(const SetEvenCutInstance& inst) {
  const int n = inst.g.num_vertices();
  if (n < 1) throw std::invalid_argument("set instance: empty graph");
  if (inst.t() > kMaxT) throw std::invalid_argument("set instance: t too large");
  for (const auto& ts : inst.terminals) {
    if (ts.size() % 2 != 0)
      throw std::invalid_argument("set instance: odd terminal set");
    for (size_t i = 0; i < ts.size(); ++i) {
      if (ts[i] < 1 || ts[i] > n)
        throw std::invalid_argument("set instance: terminal out of range");
      if (i > 0 && ts[i] <= ts[i - 1])
        throw std::invalid_argument("set instance: terminals not sorted unique");
    }
  }
}

bool set_feasible(const SetEvenCutInstance& inst) {
  // Valid sides X are the kernel vectors of the t x n membership matrix; the
  // kernel always contains 0 and the all-ones vector (terminal sets are
  // even), so a non-empty proper X exists iff the kernel dimension is >= 2.
  const int n = inst.g.num_vertices();
  gf2::Matrix a(inst.t(), n);
  for (int i = 0; i < inst.t(); ++i)
    for (int v : inst.terminals[static_cast<size_t>(i)]) a.set(i, v - 1, true);
  return n - gf2::rank(a) >= 2;
}

SetEvenCutInstance set_contract(const SetEvenCutInstance& inst, int edge_id) {
  const graph::Edge& e = inst.g.edge_by_id(edge_id);
  graph::Contraction con = inst.g.contract_edge(edge_id);
  SetEvenCutInstance out{std::move(con.g), {}};
  for (const auto& ts : inst.terminals) {
    std::vector<int> nt;
    bool u_in = std::binary_search(ts.begin(), ts.end(), e.u);
    bool v_in = std::binary_search(ts.begin(), ts.end(), e.v);
    for (int v : ts)
      if (v != e.u && v != e.v)
        nt.push_back(con.vertex_map[static_cast<size_t>(v)]);
    if (u_in != v_in)
      nt.push_back(con.vertex_map[static_cast<size_t>(e.u)]);
    out.terminals.push_back(sorted_unique(std::move(nt)));
  }
  return out;
}

void validate(const EvenCutInstance& inst) {
  const int n = inst.g.num_vertices();
  if (n < 1) throw std::invalid_argument("even-cut instance: empty graph");
  if (inst.t < 0 || inst.t > kMaxT)
    throw std::invalid_argument("even-cut instance: bad t");
  const ParityVec limit =
      inst.t >= 32 ? ~ParityVec{0} : (ParityVec{1} << inst.t) - 1;
  if ((inst.alpha & ~limit) != 0)
    throw std::invalid_argument("even-cut instance: alpha out of range");
  if (static_cast<int>(inst.tau.size()) != n + 1)
    throw std::invalid_argument("even-cut instance: tau size mismatch");
  for (int v = 1; v <= n; ++v)
    if ((inst.tau[static_cast<size_t>(v)] & ~limit) != 0)
      throw std::invalid_argument("even-cut instance: tau out of range");
  for (size_t i = 0; i < inst.sigma.size(); ++i) {
    if (!inst.g.has_edge_id(inst.sigma[i]))
      throw std::invalid_argument("even-cut instance: sigma id unknown");
    if (i > 0 && inst.sigma[i] <= inst.sigma[i - 1])
      throw std::invalid_argument("even-cut instance: sigma not sorted unique");
  }
}

std::vector<int> parity_column_labels(int t) {
  std::vector<int> out;
  for (int i = 1; i <= t; ++i) out.push_back(-i);
  return out;
}

gf2::MatroidRep formulation_matrix(const EvenCutInstance& inst) {
  const int n = inst.g.num_vertices();
  const int m = inst.g.num_edges();
  gf2::Matrix a(n + 1, m + inst.t);
  std::vector<int> labels;
  for (int j = 0; j < m; ++j) {
    const graph::Edge& e = inst.g.edge_at(j);
    if (std::binary_search(inst.sigma.begin(), inst.sigma.end(), e.id))
      a.set(0, j, true);
    if (!e.is_loop()) {
      a.set(e.u, j, true);  // row v sits at index v (row 0 is the sigma row)
      a.set(e.v, j, true);
    }
    labels.push_back(e.id);
  }
  for (int i = 0; i < inst.t; ++i) {
    if (inst.alpha >> i & 1u) a.set(0, m + i, true);
    for (int v = 1; v <= n; ++v)
      if (inst.tau[static_cast<size_t>(v)] >> i & 1u) a.set(v, m + i, true);
  }
  for (int lbl : parity_column_labels(inst.t)) labels.push_back(lbl);
  return gf2::MatroidRep(std::move(a), std::move(labels));
}

bool dim_feasible(const EvenCutInstance& inst) {
  // Feasible iff the matroid of the formulation matrix with the parity
  // columns contracted has positive rank, i.e. some non-empty cocycle exists.
  gf2::MatroidRep rep = formulation_matrix(inst);
  const int m = inst.g.num_edges();
  std::vector<int> parity_cols;
  for (int i = 0; i < inst.t; ++i) parity_cols.push_back(m + i);
  int rank_t = gf2::rank(rep.a.submatrix_cols(parity_cols));
  return gf2::rank(rep.a) > rank_t;
}

EvenCutInstance dim_contract(const EvenCutInstance& inst, int edge_id) {
  const graph::Edge& e = inst.g.edge_by_id(edge_id);
  if (e.is_loop())
    throw std::invalid_argument("dim_contract: cannot contract a loop");
  const int x = e.u;  // pivot endpoint: first in the edge record
  graph::Contraction con = inst.g.contract_edge(edge_id);

  EvenCutInstance out;
  out.t = inst.t;
  out.alpha = inst.alpha;
  bool e_in_sigma =
      std::binary_search(inst.sigma.begin(), inst.sigma.end(), edge_id);
  std::set<int> sigma(inst.sigma.begin(), inst.sigma.end());
  if (e_in_sigma) {
    for (int f : inst.g.delta({x})) {
      if (sigma.count(f))
        sigma.erase(f);
      else
        sigma.insert(f);
    }
    out.alpha ^= inst.tau[static_cast<size_t>(x)];
  }
  sigma.erase(edge_id);

  out.tau.assign(static_cast<size_t>(con.g.num_vertices()) + 1, 0);
  for (int v = 1; v <= inst.g.num_vertices(); ++v)
    out.tau[static_cast<size_t>(con.vertex_map[static_cast<size_t>(v)])] ^=
        inst.tau[static_cast<size_t>(v)];
  out.g = std::move(con.g);
  out.sigma.assign(sigma.begin(), sigma.end());
  return out;
}

// ---------------------------------------------------------------------------
// Contraction engines
// ---------------------------------------------------------------------------

namespace {

struct SetEngine {
  int n, t, threshold;
  std::vector<ParityVec> mask0;          // per-vertex terminal membership
  std::vector<int> eu, ev, eid;          // non-loop edges only
  UnionFind uf;
  std::vector<ParityVec> cmask;          // per-class membership
  std::vector<int> alive;                // indices into eu/ev/eid

  explicit SetEngine(const SetEvenCutInstance& inst) {
    n = inst.g.num_vertices();
    t = inst.t();
    threshold = base_threshold(t);
    mask0.assign(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i < t; ++i)
      for (int v : inst.terminals[static_cast<size_t>(i)])
        mask0[static_cast<size_t>(v)] |= ParityVec{1} << i;
    for (const graph::Edge& e : inst.g.edges())
      if (!e.is_loop()) {
        eu.push_back(e.u);
        ev.push_back(e.v);
        eid.push_back(e.id);
      }
  }

  CutResult run(Rng& rng) {
    uf.reset(n);
    cmask = mask0;
    alive.resize(eu.size());
    for (size_t i = 0; i < eu.size(); ++i) alive[i] = static_cast<int>(i);
    int classes = n;
    while (classes > threshold) {
      if (alive.empty()) return zero_cut_answer();
      size_t pick = static_cast<size_t>(rng_below(rng, alive.size()));
      int q = alive[pick];
      int a = uf.find(eu[static_cast<size_t>(q)]);
      int b = uf.find(ev[static_cast<size_t>(q)]);
      alive[pick] = alive.back();
      alive.pop_back();
      if (a == b) continue;  // became a loop earlier; deleting it now
      int r = uf.unite(a, b);
      cmask[static_cast<size_t>(r)] = cmask[static_cast<size_t>(a)] ^
                                      cmask[static_cast<size_t>(b)];
      --classes;
    }
    return exhaustive();
  }

  // No crossing edges remain but many classes do: any valid side is a zero
  // cut; find one through the kernel of the class membership matrix.
  CutResult zero_cut_answer() {
    std::vector<int> roots = current_roots();
    int k = static_cast<int>(roots.size());
    gf2::Matrix a(t, k);
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < t; ++i)
        if (cmask[static_cast<size_t>(roots[static_cast<size_t>(j)])] >> i & 1u)
          a.set(i, j, true);
    gf2::Matrix nb = gf2::null_space_basis(a);
    gf2::Vec all_ones(k);
    for (int j = 0; j < k; ++j) all_ones.set(j, true);
    for (int r = 0; r < nb.rows(); ++r) {
      gf2::Vec cand = nb.row(r);
      if (cand.is_zero()) continue;
      if (cand == all_ones) {
        if (r + 1 < nb.rows()) {
          cand.xor_with(nb.row(r + 1));
        } else {
          continue;
        }
      }
      CutResult res;
      res.size = 0;
      std::vector<char> chosen(static_cast<size_t>(n) + 1, 0);
      for (int j = 0; j < k; ++j)
        if (cand.get(j)) chosen[static_cast<size_t>(roots[static_cast<size_t>(j)])] = 1;
      for (int v = 1; v <= n; ++v)
        if (chosen[static_cast<size_t>(uf.find(v))]) res.x_vertices.push_back(v);
      return res;
    }
    return {};  // infeasible residual state
  }

  std::vector<int> current_roots() {
    std::vector<int> roots;
    for (int v = 1; v <= n; ++v)
      if (uf.find(v) == v) roots.push_back(v);
    return roots;
  }

  CutResult exhaustive() {
    std::vector<int> roots = current_roots();
    const int k = static_cast<int>(roots.size());
    std::vector<int> class_index(static_cast<size_t>(n) + 1, -1);
    for (int j = 0; j < k; ++j)
      class_index[static_cast<size_t>(roots[static_cast<size_t>(j)])] = j;
    std::vector<ParityVec> rmask(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j)
      rmask[static_cast<size_t>(j)] =
          cmask[static_cast<size_t>(roots[static_cast<size_t>(j)])];
    // Surviving crossing edges as class-index pairs.
    std::vector<int> ec_a, ec_b, ec_id;
    for (int q : alive) {
      int a = class_index[static_cast<size_t>(uf.find(eu[static_cast<size_t>(q)]))];
      int b = class_index[static_cast<size_t>(uf.find(ev[static_cast<size_t>(q)]))];
      if (a == b) continue;
      ec_a.push_back(a);
      ec_b.push_back(b);
      ec_id.push_back(eid[static_cast<size_t>(q)]);
    }
    CutResult best;
    const std::uint32_t full = k >= 32 ? ~0u : (1u << k) - 1;
    for (std::uint32_t s = 1; s < full; ++s) {
      ParityVec par = 0;
      for (int j = 0; j < k; ++j)
        if (s >> j & 1u) par ^= rmask[static_cast<size_t>(j)];
      if (par != 0) continue;
      Size size = 0;
      for (size_t q = 0; q < ec_a.size(); ++q)
        size += (s >> ec_a[q] ^ s >> ec_b[q]) & 1u;
      if (size > best.size) continue;
      std::vector<int> witness;
      for (size_t q = 0; q < ec_a.size(); ++q)
        if ((s >> ec_a[q] ^ s >> ec_b[q]) & 1u) witness.push_back(ec_id[q]);
      std::sort(witness.begin(), witness.end());
      if (better_result(size, witness, best.size, best.witness)) {
        best.size = size;
        best.witness = std::move(witness);
        best.x_vertices.clear();
        for (int v = 1; v <= n; ++v)
          if (s >> class_index[static_cast<size_t>(uf.find(v))] & 1u)
            best.x_vertices.push_back(v);
      }
    }
    return best;
  }
};

struct DimEngine {
  int n, m, t, threshold;
  ParityVec alpha0;
  std::vector<ParityVec> tau0;
  std::vector<int> eu, ev, eid;      // all edges, original endpoints
  std::vector<char> sig0;            // sigma membership per edge
  UnionFind uf;
  std::vector<ParityVec> ctau;
  std::vector<char> sig;
  std::vector<int> alive;            // candidate contraction edges
  ParityVec alpha = 0;
  // Each Sigma-edge contraction rewrites Sigma by delta(pivot class), which
  // shifts the original-side set of every later cut by that class.  wflip
  // accumulates the symmetric difference of all pivot classes.
  std::vector<char> wflip;

  explicit DimEngine(const EvenCutInstance& inst) {
    n = inst.g.num_vertices();
    m = inst.g.num_edges();
    t = inst.t;
    threshold = base_threshold(t);
    alpha0 = inst.alpha;
    tau0 = inst.tau;
    sig0.assign(static_cast<size_t>(m), 0);
    for (int j = 0; j < m; ++j) {
      const graph::Edge& e = inst.g.edge_at(j);
      eu.push_back(e.u);
      ev.push_back(e.v);
      eid.push_back(e.id);
      if (std::binary_search(inst.sigma.begin(), inst.sigma.end(), e.id))
        sig0[static_cast<size_t>(j)] = 1;
    }
  }

  CutResult run(Rng& rng) {
    uf.reset(n);
    ctau = tau0;
    sig = sig0;
    alpha = alpha0;
    wflip.assign(static_cast<size_t>(n) + 1, 0);
    alive.clear();
    for (int j = 0; j < m; ++j)
      if (eu[static_cast<size_t>(j)] != ev[static_cast<size_t>(j)])
        alive.push_back(j);
    int classes = n;
    while (classes > threshold) {
      if (alive.empty()) break;  // disconnected residue; exhaust what we have
      size_t pick = static_cast<size_t>(rng_below(rng, alive.size()));
      int q = alive[pick];
      int ru = uf.find(eu[static_cast<size_t>(q)]);
      int rv = uf.find(ev[static_cast<size_t>(q)]);
      alive[pick] = alive.back();
      alive.pop_back();
      if (ru == rv) continue;  // lazily deleted loop
      if (sig[static_cast<size_t>(q)]) {
        // Sigma gains delta(x) for x = class of the first endpoint.
        for (int f = 0; f < m; ++f) {
          int cu = uf.find(eu[static_cast<size_t>(f)]);
          int cv = uf.find(ev[static_cast<size_t>(f)]);
          if (cu == cv) continue;
          if ((cu == ru) != (cv == ru)) sig[static_cast<size_t>(f)] ^= 1;
        }
        alpha ^= ctau[static_cast<size_t>(ru)];
        for (int v = 1; v <= n; ++v)
          if (uf.find(v) == ru) wflip[static_cast<size_t>(v)] ^= 1;
      }
      int r = uf.unite(ru, rv);
      ctau[static_cast<size_t>(r)] = ctau[static_cast<size_t>(ru)] ^
                                     ctau[static_cast<size_t>(rv)];
      --classes;
    }
    if (classes > threshold) return {};  // cannot exhaust; run failed
    return exhaustive();
  }

  CutResult exhaustive() {
    std::vector<int> roots;
    for (int v = 1; v <= n; ++v)
      if (uf.find(v) == v) roots.push_back(v);
    const int k = static_cast<int>(roots.size());
    std::vector<int> class_index(static_cast<size_t>(n) + 1, -1);
    for (int j = 0; j < k; ++j)
      class_index[static_cast<size_t>(roots[static_cast<size_t>(j)])] = j;
    std::vector<ParityVec> rtau(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j)
      rtau[static_cast<size_t>(j)] =
          ctau[static_cast<size_t>(roots[static_cast<size_t>(j)])];
    // Edge classification in the current minor.
    std::vector<int> ca(static_cast<size_t>(m)), cb(static_cast<size_t>(m));
    for (int f = 0; f < m; ++f) {
      ca[static_cast<size_t>(f)] =
          class_index[static_cast<size_t>(uf.find(eu[static_cast<size_t>(f)]))];
      cb[static_cast<size_t>(f)] =
          class_index[static_cast<size_t>(uf.find(ev[static_cast<size_t>(f)]))];
    }
    CutResult best;
    const std::uint32_t limit = k >= 31 ? 0 : 1u << k;
    for (int branch = 0; branch < 2; ++branch) {
      const bool with_sigma = branch == 0;
      const ParityVec demand = with_sigma ? alpha : 0;
      for (std::uint32_t s = 0; s < limit; ++s) {
        ParityVec par = 0;
        for (int j = 0; j < k; ++j)
          if (s >> j & 1u) par ^= rtau[static_cast<size_t>(j)];
        if (par != demand) continue;
        Size size = 0;
        for (int f = 0; f < m; ++f) {
          bool crossing = ca[static_cast<size_t>(f)] != cb[static_cast<size_t>(f)] &&
                          ((s >> ca[static_cast<size_t>(f)] ^
                            s >> cb[static_cast<size_t>(f)]) &
                           1u);
          bool in_c = crossing ^ (with_sigma && sig[static_cast<size_t>(f)]);
          size += in_c;
        }
        if (size == 0 || size > best.size) continue;
        std::vector<int> witness;
        for (int f = 0; f < m; ++f) {
          bool crossing = ca[static_cast<size_t>(f)] != cb[static_cast<size_t>(f)] &&
                          ((s >> ca[static_cast<size_t>(f)] ^
                            s >> cb[static_cast<size_t>(f)]) &
                           1u);
          if (crossing ^ (with_sigma && sig[static_cast<size_t>(f)]))
            witness.push_back(eid[static_cast<size_t>(f)]);
        }
        std::sort(witness.begin(), witness.end());
        if (better_result(size, witness, best.size, best.witness)) {
          best.size = size;
          best.witness = std::move(witness);
          best.used_sigma = with_sigma;
          best.x_vertices.clear();
          for (int v = 1; v <= n; ++v) {
            bool in_x = (s >> class_index[static_cast<size_t>(uf.find(v))] & 1u) ^
                        (with_sigma && wflip[static_cast<size_t>(v)]);
            if (in_x) best.x_vertices.push_back(v);
          }
        }
      }
    }
    return best;
  }
};

template <class Engine, class Inst>
ContractionAnswer drive(const Inst& inst, int c, std::uint64_t seed) {
  Engine engine(inst);
  ContractionAnswer out;
  if (engine.n <= engine.threshold) {
    Rng unused = make_rng(seed, kStreamEvenCutRun, 0);
    out.cut = engine.run(unused);  // no contractions happen: one exact pass
    out.repetitions = 1;
    out.exact = true;
    return out;
  }
  const long long nn = engine.n;
  const long long reps = c * nn * nn * nn * nn;
  for (long long i = 0; i < reps; ++i) {
    Rng rng = make_rng(seed, kStreamEvenCutRun, static_cast<std::uint64_t>(i));
    CutResult res = engine.run(rng);  // run() fully resets the engine state
    if (!res.found()) continue;
    if (better_result(res.size, res.witness, out.cut.size, out.cut.witness))
      out.cut = std::move(res);
  }
  out.repetitions = reps;
  return out;
}

}  // namespace

CutResult set_random_contraction(const SetEvenCutInstance& inst, Rng& rng) {
  validate(inst);
  SetEngine engine(inst);
  return engine.run(rng);
}

CutResult dim_random_contraction(const EvenCutInstance& inst, Rng& rng) {
  validate(inst);
  DimEngine engine(inst);
  return engine.run(rng);
}

ContractionAnswer set_min_even_cut(const SetEvenCutInstance& inst, int c,
                                   std::uint64_t seed) {
  validate(inst);
  if (c < 1) throw std::invalid_argument("set_min_even_cut: c must be >= 1");
  if (!set_feasible(inst))
    throw std::invalid_argument("set_min_even_cut: infeasible instance");
  return drive<SetEngine>(inst, c, seed);
}

ContractionAnswer dim_min_cocycle(const EvenCutInstance& inst, int c,
                                  std::uint64_t seed) {
  validate(inst);
  if (c < 1) throw std::invalid_argument("dim_min_cocycle: c must be >= 1");
  if (!inst.g.is_connected())
    throw std::invalid_argument("dim_min_cocycle: graph must be connected");
  if (!dim_feasible(inst))
    throw std::invalid_argument("dim_min_cocycle: infeasible instance");
  return drive<DimEngine>(inst, c, seed);
}

// ---------------------------------------------------------------------------
// Connectivity reduction
// ---------------------------------------------------------------------------

namespace {

// Distinct values of the GF(2) span of the given masks, ascending.
std::vector<ParityVec> span_values(const std::vector<ParityVec>& gens) {
  std::set<ParityVec> vals{0};
  for (ParityVec g : gens) {
    std::set<ParityVec> next = vals;
    for (ParityVec v : vals) next.insert(v ^ g);
    vals = std::move(next);
  }
  return {vals.begin(), vals.end()};
}

}  // namespace

ConnectivityReduction connectivity_reduce(const EvenCutInstance& inst) {
  validate(inst);
  ConnectivityReduction red;
  const int n = inst.g.num_vertices();
  std::vector<int> comp = inst.g.component_of();
  const int ncomp = *std::max_element(comp.begin() + 1, comp.end());

  red.component_sets.assign(static_cast<size_t>(ncomp), {});
  red.component_mass.assign(static_cast<size_t>(ncomp), 0);
  for (int v = 1; v <= n; ++v) {
    red.component_sets[static_cast<size_t>(comp[static_cast<size_t>(v)] - 1)]
        .push_back(v);
    red.component_mass[static_cast<size_t>(comp[static_cast<size_t>(v)] - 1)] ^=
        inst.tau[static_cast<size_t>(v)];
  }

  if (ncomp == 1) {
    red.vertex_map.resize(static_cast<size_t>(n) + 1);
    for (int v = 0; v <= n; ++v) red.vertex_map[static_cast<size_t>(v)] = v;
    red.branches.push_back({inst, 0, true});
    return red;
  }

  bool all_trivial = true;
  for (const auto& cs : red.component_sets)
    if (cs.size() > 1) all_trivial = false;

  if (all_trivial) {
    // Only loops remain; the matroid has rank at most t+1, so the exact
    // cogirth oracle applies directly.
    red.direct = true;
    gf2::MatroidRep rep = formulation_matrix(inst);
    gf2::MatroidRep minor =
        gf2::contract_delete(rep, parity_column_labels(inst.t), {});
    gf2::WeightWitness ww = gf2::cogirth_oracle_witness(minor);
    red.direct_result.size = ww.size;
    red.direct_result.witness = ww.elements;
    if (ww.size != kInf && !is_inf(ww.size)) {
      // The only edge support available is the sigma row, so the witness is
      // Sigma itself and some X with tau(X) = alpha exists; recover one.
      gf2::Matrix a(inst.t, n);
      for (int v = 1; v <= n; ++v)
        for (int i = 0; i < inst.t; ++i)
          if (inst.tau[static_cast<size_t>(v)] >> i & 1u) a.set(i, v - 1, true);
      gf2::Vec b(inst.t);
      for (int i = 0; i < inst.t; ++i)
        if (inst.alpha >> i & 1u) b.set(i, true);
      auto x = gf2::solve(a, b);
      if (!x)
        throw std::logic_error("connectivity_reduce: inconsistent direct case");
      for (int v = 1; v <= n; ++v)
        if (x->get(v - 1)) red.direct_result.x_vertices.push_back(v);
      red.direct_result.used_sigma = true;
    }
    return red;
  }

  // Glue one representative per component (its lowest vertex) into a blob.
  std::vector<int> reps(static_cast<size_t>(ncomp));
  for (int i = 0; i < ncomp; ++i)
    reps[static_cast<size_t>(i)] = red.component_sets[static_cast<size_t>(i)][0];
  std::vector<char> is_rep(static_cast<size_t>(n) + 1, 0);
  for (int r : reps) is_rep[static_cast<size_t>(r)] = 1;

  red.vertex_map.assign(static_cast<size_t>(n) + 1, 0);
  int next = 1;  // blob takes vertex 1
  for (int v = 1; v <= n; ++v)
    red.vertex_map[static_cast<size_t>(v)] =
        is_rep[static_cast<size_t>(v)] ? 1 : ++next;

  graph::MultiGraph merged(n - ncomp + 1);
  for (const graph::Edge& e : inst.g.edges())
    merged.add_edge(e.id, red.vertex_map[static_cast<size_t>(e.u)],
                    red.vertex_map[static_cast<size_t>(e.v)]);

  std::vector<ParityVec> tau(static_cast<size_t>(merged.num_vertices()) + 1, 0);
  for (int v = 1; v <= n; ++v)
    tau[static_cast<size_t>(red.vertex_map[static_cast<size_t>(v)])] ^=
        inst.tau[static_cast<size_t>(v)];

  // Demand shifts come from the span of the non-first component masses.
  std::vector<ParityVec> gens(red.component_mass.begin() + 1,
                              red.component_mass.end());
  std::vector<ParityVec> betas = span_values(gens);

  for (ParityVec beta : betas) {
    EvenCutInstance branch;
    branch.g = merged;
    branch.t = inst.t;
    branch.tau = tau;
    branch.sigma = inst.sigma;
    branch.alpha = inst.alpha ^ beta;
    red.branches.push_back({std::move(branch), beta, true});
  }
  for (ParityVec beta : betas) {
    if (beta == 0) continue;
    // Companion family: covers cocycles that avoid Sigma entirely while the
    // defining side absorbs whole components of total mass beta.
    EvenCutInstance branch;
    branch.g = merged;
    branch.t = inst.t;
    branch.tau = tau;
    branch.sigma = {};
    branch.alpha = beta;
    red.branches.push_back({std::move(branch), beta, false});
  }
  return red;
}

CutResult lift_result(const ConnectivityReduction& red, size_t branch_index,
                      const CutResult& branch_result,
                      const EvenCutInstance& original) {
  if (!branch_result.found()) return branch_result;
  const ReducedBranch& br = red.branches.at(branch_index);
  CutResult out = branch_result;

  std::vector<char> in_merged(
      static_cast<size_t>(br.instance.g.num_vertices()) + 1, 0);
  for (int v : branch_result.x_vertices) in_merged[static_cast<size_t>(v)] = 1;
  std::vector<char> in_orig(static_cast<size_t>(original.g.num_vertices()) + 1,
                            0);
  for (int v = 1; v <= original.g.num_vertices(); ++v)
    in_orig[static_cast<size_t>(v)] =
        in_merged[static_cast<size_t>(red.vertex_map[static_cast<size_t>(v)])];

  const ParityVec adjust = branch_result.used_sigma ? br.beta : 0;
  if (adjust != 0) {
    // Solve for a set of non-first components whose masses xor to `adjust`
    // and symmetric-difference them into the side; whole components change
    // no cut edges but fix the parity demand.
    const int k = static_cast<int>(red.component_mass.size()) - 1;
    gf2::Matrix a(original.t, k);
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < original.t; ++i)
        if (red.component_mass[static_cast<size_t>(j + 1)] >> i & 1u)
          a.set(i, j, true);
    gf2::Vec b(original.t);
    for (int i = 0; i < original.t; ++i)
      if (adjust >> i & 1u) b.set(i, true);
    auto x = gf2::solve(a, b);
    if (!x) throw std::logic_error("lift_result: unreachable demand shift");
    for (int j = 0; j < k; ++j)
      if (x->get(j))
        for (int v : red.component_sets[static_cast<size_t>(j + 1)])
          in_orig[static_cast<size_t>(v)] ^= 1;
  }

  out.x_vertices.clear();
  for (int v = 1; v <= original.g.num_vertices(); ++v)
    if (in_orig[static_cast<size_t>(v)]) out.x_vertices.push_back(v);
  out.used_sigma = br.sigma_kept && branch_result.used_sigma;
  return out;
}

ContractionAnswer solve_even_cut(const EvenCutInstance& inst, int c,
                                 std::uint64_t seed) {
  ConnectivityReduction red = connectivity_reduce(inst);
  ContractionAnswer out;
  if (red.direct) {
    out.cut = red.direct_result;
    out.repetitions = 0;
    out.exact = true;
    return out;
  }
  out.exact = true;
  for (size_t i = 0; i < red.branches.size(); ++i) {
    const ReducedBranch& br = red.branches[i];
    if (!dim_feasible(br.instance)) continue;
    std::uint64_t sub = derive_seed(seed, kStreamEvenCutBranch, i);
    ContractionAnswer ans = dim_min_cocycle(br.instance, c, sub);
    out.repetitions += ans.repetitions;
    if (!ans.exact) out.exact = false;
    CutResult lifted = lift_result(red, i, ans.cut, inst);
    if (lifted.found() &&
        better_result(lifted.size, lifted.witness, out.cut.size,
                      out.cut.witness))
      out.cut = std::move(lifted);
  }
  return out;
}

}  // namespace matgirth::evencut
