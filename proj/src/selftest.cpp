#include "matgirth/selftest.hpp"

#include <algorithm>
#include <queue>

#include "matgirth/evencut.hpp"
#include "matgirth/gen.hpp"
#include "matgirth/gf2.hpp"
#include "matgirth/graft.hpp"
#include "matgirth/parityjoin.hpp"
#include "matgirth/pfaffian.hpp"
#include "matgirth/pipeline.hpp"
#include "matgirth/ring.hpp"
#include "matgirth/rng.hpp"

namespace matgirth::selftest {

namespace {

// Suite indices double as rng counters on the selftest stream.
enum : std::uint64_t {
  kSuiteGirth = 1,
  kSuiteCogirth = 2,
  kSuiteEvenCut = 3,
  kSuitePfaffian = 4,
  kSuiteJoin = 5,
  kSuiteWalk = 6,
};

int rnd(Rng& rng, int lo, int hi) {
  return static_cast<int>(rng_int(rng, lo, hi));
}

gen::PerturbedPair draw_perturbed(Rng& rng) {
  int r = rnd(rng, 2, 6);
  int n = rnd(rng, std::max(1, r - 1), 9);
  int t = rnd(rng, 0, std::min({2, r, n}));
  return gen::gen_perturbed(r, n, t, rng());
}

pipeline::SolverConfig draw_config(Rng& rng) {
  pipeline::SolverConfig cfg;
  cfg.epsilon = 1e-4;
  cfg.seed = rng();
  return cfg;
}

// True when the 0/1 row indexed by `elements` lies in the row space of m.
bool in_row_space(const gf2::Matrix& m, const std::vector<int>& elements) {
  gf2::Matrix probe(1, m.cols());
  for (int label : elements) {
    if (label < 0 || label >= m.cols()) return false;
    probe.set(0, label, 1);
  }
  return gf2::rank(m.append_rows(probe)) == gf2::rank(m);
}

long long run_girth(const Options& opt) {
  Rng rng = make_rng(opt.seed, kStreamSelftest, kSuiteGirth);
  long long failures = 0;
  for (long long i = 0; i < opt.trials; ++i) {
    gen::PerturbedPair pair = draw_perturbed(rng);
    pipeline::SolverConfig cfg = draw_config(rng);
    Size got = pipeline::girth_perturbed(pair.a, pair.p, cfg);
    Size want = gf2::girth_oracle(gf2::MatroidRep(pair.a + pair.p));
    if (got != want) ++failures;
  }
  return failures;
}

long long run_cogirth(const Options& opt) {
  Rng rng = make_rng(opt.seed, kStreamSelftest, kSuiteCogirth);
  long long failures = 0;
  for (long long i = 0; i < opt.trials; ++i) {
    gen::PerturbedPair pair = draw_perturbed(rng);
    pipeline::SolverConfig cfg = draw_config(rng);
    pipeline::CogirthResult got = pipeline::cogirth_perturbed(pair.a, pair.p, cfg);
    gf2::Matrix sum = pair.a + pair.p;
    Size want = gf2::cogirth_oracle(gf2::MatroidRep(sum));
    bool ok = got.value == want;
    if (got.found()) {
      ok = ok && static_cast<Size>(got.witness.size()) == got.value &&
           std::is_sorted(got.witness.begin(), got.witness.end()) &&
           in_row_space(sum, got.witness);
    }
    if (!ok) ++failures;
  }
  return failures;
}

long long run_evencut(const Options& opt) {
  Rng rng = make_rng(opt.seed, kStreamSelftest, kSuiteEvenCut);
  long long failures = 0;
  for (long long i = 0; i < opt.trials; ++i) {
    int n = rnd(rng, 1, 7);
    int m = rnd(rng, 0, 9);
    int t = rnd(rng, 0, 2);
    evencut::EvenCutInstance inst = gen::gen_evencut_dim(n, m, t, rng());
    evencut::ContractionAnswer ans = evencut::solve_even_cut(inst, 2, rng());
    gf2::MatroidRep contracted = gf2::contract_delete(
        evencut::formulation_matrix(inst), evencut::parity_column_labels(t), {});
    if (ans.cut.size != gf2::cogirth_oracle(contracted)) ++failures;
  }
  return failures;
}

ring::GroupRingPoly random_poly(Rng& rng, int t) {
  ring::GroupRingPoly p(t);
  int terms = rnd(rng, 0, 2);
  for (int i = 0; i < terms; ++i) {
    ParityVec beta = static_cast<ParityVec>(
        rng_below(rng, ParityVec{1} << t));
    int zdeg = rnd(rng, 0, 3);
    int coeff = rnd(rng, -4, 4);
    p = ring_add(p, ring::GroupRingPoly::monomial(t, beta, zdeg, coeff));
  }
  return p;
}

long long run_pfaffian(const Options& opt) {
  Rng rng = make_rng(opt.seed, kStreamSelftest, kSuitePfaffian);
  long long failures = 0;
  for (long long i = 0; i < opt.trials; ++i) {
    int n = 2 * rnd(rng, 1, 3);
    int t = rnd(rng, 0, 2);
    ring::SkewRingMatrix d(n, t);
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) d.set_upper(a, b, random_poly(rng, t));
    pfaffian::PfaffianDag dag = pfaffian::build_dag(d);
    if (opt.mutate_dag) {
      // Negative control: corrupt the sign rule by crossing the two sinks,
      // which turns the evaluation into -Pf and fails whenever Pf != 0.
      for (auto& e : dag.edges) {
        if (e.to == pfaffian::PfaffianDag::kTPlus)
          e.to = pfaffian::PfaffianDag::kTMinus;
        else if (e.to == pfaffian::PfaffianDag::kTMinus)
          e.to = pfaffian::PfaffianDag::kTPlus;
      }
    }
    if (pfaffian::eval_dag(dag, d) != pfaffian::pfaffian_naive(d)) ++failures;
  }
  return failures;
}

struct LabeledDraw {
  graph::MultiGraph g;
  std::vector<ParityVec> gamma;
  int t = 0;
};

LabeledDraw draw_labeled(Rng& rng, int min_n, int max_n, int max_m) {
  LabeledDraw out;
  int n = rnd(rng, min_n, max_n);
  int m = rnd(rng, 0, max_m);
  out.t = rnd(rng, 0, 2);
  out.g = graph::MultiGraph(n);
  for (int i = 0; i < m; ++i)
    out.g.add_edge(i, rnd(rng, 1, n), rnd(rng, 1, n));
  for (int i = 0; i < m; ++i)
    out.gamma.push_back(
        static_cast<ParityVec>(rng_below(rng, ParityVec{1} << out.t)));
  return out;
}

long long run_join(const Options& opt) {
  Rng rng = make_rng(opt.seed, kStreamSelftest, kSuiteJoin);
  long long failures = 0;
  for (long long i = 0; i < opt.trials; ++i) {
    LabeledDraw d = draw_labeled(rng, 2, 6, 8);
    ParityVec alpha =
        static_cast<ParityVec>(rng_below(rng, ParityVec{1} << d.t));
    int u = rnd(rng, 1, d.g.num_vertices());
    int v = rnd(rng, 1, d.g.num_vertices() - 1);
    if (v >= u) ++v;
    Size direct = parityjoin::two_join(d.g, d.gamma, d.t, u, v, alpha);
    Size via_matching = parityjoin::parity_join(
        d.g, d.gamma, d.t, {std::min(u, v), std::max(u, v)}, alpha, 2, 10,
        rng());
    if (via_matching != direct) ++failures;
    if (parityjoin::parity_join(d.g, d.gamma, d.t, {}, alpha, 2, 1, rng()) !=
        parityjoin::parity_cycle(d.g, d.gamma, d.t, alpha))
      ++failures;
  }
  return failures;
}

// Independent walk oracle: materialize the (vertex, parity) product graph as
// an explicit adjacency list and run a plain breadth-first search on it.
std::vector<Size> product_distances(const LabeledDraw& d, int u) {
  const int classes = 1 << d.t;
  const int states = d.g.num_vertices() * classes;
  std::vector<std::vector<int>> adj(static_cast<size_t>(states));
  auto id = [&](int v, ParityVec b) {
    return (v - 1) * classes + static_cast<int>(b);
  };
  for (int i = 0; i < d.g.num_edges(); ++i) {
    const graph::Edge& e = d.g.edge_at(i);
    ParityVec p = d.gamma[static_cast<size_t>(i)];
    for (ParityVec b = 0; b < static_cast<ParityVec>(classes); ++b) {
      adj[static_cast<size_t>(id(e.u, b))].push_back(id(e.v, b ^ p));
      adj[static_cast<size_t>(id(e.v, b))].push_back(id(e.u, b ^ p));
    }
  }
  std::vector<Size> dist(static_cast<size_t>(states), kInf);
  std::queue<int> q;
  dist[static_cast<size_t>(id(u, 0))] = 0;
  q.push(id(u, 0));
  while (!q.empty()) {
    int s = q.front();
    q.pop();
    for (int nxt : adj[static_cast<size_t>(s)])
      if (is_inf(dist[static_cast<size_t>(nxt)])) {
        dist[static_cast<size_t>(nxt)] = dist[static_cast<size_t>(s)] + 1;
        q.push(nxt);
      }
  }
  return dist;
}

long long run_walk(const Options& opt) {
  Rng rng = make_rng(opt.seed, kStreamSelftest, kSuiteWalk);
  long long failures = 0;
  for (long long i = 0; i < opt.trials; ++i) {
    LabeledDraw d = draw_labeled(rng, 1, 6, 8);
    int u = rnd(rng, 1, d.g.num_vertices());
    std::vector<Size> dist = product_distances(d, u);
    const int classes = 1 << d.t;
    for (int v = 1; v <= d.g.num_vertices(); ++v) {
      parityjoin::ParityTable table =
          parityjoin::walk_table(d.g, d.gamma, d.t, u, v);
      for (ParityVec b = 0; b < static_cast<ParityVec>(classes); ++b)
        if (table.at(b) !=
            dist[static_cast<size_t>((v - 1) * classes + static_cast<int>(b))])
          ++failures;
    }
  }
  return failures;
}

}  // namespace

std::vector<SuiteResult> run_selftest(const Options& opt) {
  if (opt.trials < 0) throw std::invalid_argument("trials must be >= 0");
  std::vector<SuiteResult> out;
  if (opt.trials == 0) return out;
  out.push_back({"girth", opt.trials, run_girth(opt)});
  out.push_back({"cogirth", opt.trials, run_cogirth(opt)});
  out.push_back({"evencut", opt.trials, run_evencut(opt)});
  out.push_back({"pfaffian", opt.trials, run_pfaffian(opt)});
  out.push_back({"join", opt.trials, run_join(opt)});
  out.push_back({"walk", opt.trials, run_walk(opt)});
  return out;
}

std::string format_report(const std::vector<SuiteResult>& results) {
  if (results.empty()) return "";
  std::string out;
  for (const SuiteResult& r : results) {
    out += "suite=" + r.name + " trials=" + std::to_string(r.trials) +
           " failures=" + std::to_string(r.failures) +
           " status=" + (r.passed() ? "pass" : "fail") + "\n";
  }
  out += std::string("selftest=") + (all_passed(results) ? "pass" : "fail") +
         "\n";
  return out;
}

bool all_passed(const std::vector<SuiteResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const SuiteResult& r) { return r.passed(); });
}

}  // namespace matgirth::selftest
