#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <tuple>
#include <vector>

#include "matgirth/common.hpp"
#include "matgirth/evencut.hpp"
#include "matgirth/gen.hpp"
#include "matgirth/gf2.hpp"
#include "matgirth/graph.hpp"
#include "matgirth/parityjoin.hpp"
#include "matgirth/pfaffian.hpp"
#include "matgirth/pipeline.hpp"
#include "matgirth/selftest.hpp"

namespace py = pybind11;

namespace {

using namespace matgirth;

// Matrices cross the boundary as lists of row strings ("0101"), graphs as a
// vertex count plus (id, u, v) triples, parity classes as bitmasks with bit
// i = coordinate i, and infinite sizes as float('inf').

using EdgeList = std::vector<std::tuple<int, int, int>>;

gf2::Matrix to_matrix(const std::vector<std::string>& rows) {
  return gf2::Matrix::from_strings(rows);
}

graph::MultiGraph to_graph(int num_vertices, const EdgeList& edges) {
  graph::MultiGraph g(num_vertices);
  for (const auto& [id, u, v] : edges) g.add_edge(id, u, v);
  return g;
}

std::vector<ParityVec> to_gamma(const std::vector<std::uint32_t>& gamma) {
  return {gamma.begin(), gamma.end()};
}

py::object size_out(Size v) {
  if (is_inf(v)) return py::cast(std::numeric_limits<double>::infinity());
  return py::cast(static_cast<long long>(v));
}

pipeline::SolverConfig config_of(double epsilon, std::uint64_t seed) {
  pipeline::SolverConfig cfg;
  cfg.epsilon = epsilon;
  cfg.seed = seed;
  return cfg;
}

py::tuple cut_tuple(const evencut::ContractionAnswer& ans) {
  return py::make_tuple(size_out(ans.cut.size), ans.cut.witness,
                        ans.repetitions);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Girth and cogirth of low-rank perturbations of graphic matroids over "
      "GF(2)";
#ifdef MATGIRTH_VERSION_INFO
  m.attr("__version__") = MATGIRTH_VERSION_INFO;
#endif

  py::class_<pipeline::CogirthResult>(m, "CogirthResult")
      .def_property_readonly(
          "value", [](const pipeline::CogirthResult& r) { return size_out(r.value); },
          "smallest cocircuit size, or float('inf')")
      .def_readonly("witness", &pipeline::CogirthResult::witness,
                    "sorted column indices of a smallest cocycle")
      .def_readonly("repetitions", &pipeline::CogirthResult::repetitions,
                    "contraction runs spent across all branches")
      .def_property_readonly(
          "found", [](const pipeline::CogirthResult& r) { return r.found(); })
      .def("__repr__", [](const pipeline::CogirthResult& r) {
        std::string s = "CogirthResult(value=" + size_to_string(r.value) +
                        ", witness=[";
        for (size_t i = 0; i < r.witness.size(); ++i) {
          if (i) s += ", ";
          s += std::to_string(r.witness[i]);
        }
        return s + "])";
      });

  // -------------------------------------------------------------------------
  // Headline pipeline
  // -------------------------------------------------------------------------
  m.def(
      "girth",
      [](const std::vector<std::string>& a, const std::vector<std::string>& p,
         double epsilon, std::uint64_t seed) {
        return size_out(
            pipeline::girth_perturbed(to_matrix(a), to_matrix(p),
                                      config_of(epsilon, seed)));
      },
      py::arg("a"), py::arg("p"), py::kw_only(), py::arg("epsilon") = 1e-3,
      py::arg("seed") = 0,
      "Smallest circuit size of M(a + p); randomized and one-sided (never "
      "below the truth, exact with probability at least 1 - epsilon).");

  m.def(
      "cogirth",
      [](const std::vector<std::string>& a, const std::vector<std::string>& p,
         double epsilon, std::uint64_t seed) {
        return pipeline::cogirth_perturbed(to_matrix(a), to_matrix(p),
                                           config_of(epsilon, seed));
      },
      py::arg("a"), py::arg("p"), py::kw_only(), py::arg("epsilon") = 1e-3,
      py::arg("seed") = 0,
      "Smallest cocircuit size of M(a + p) with a certified witness; any "
      "returned witness is a genuine cocycle.");

  // -------------------------------------------------------------------------
  // Exhaustive oracles and GF(2) helpers
  // -------------------------------------------------------------------------
  m.def(
      "girth_oracle",
      [](const std::vector<std::string>& mat) {
        return size_out(gf2::girth_oracle(gf2::MatroidRep(to_matrix(mat))));
      },
      py::arg("mat"), "Brute-force girth of M(mat) (guarded to 24 columns).");
  m.def(
      "cogirth_oracle",
      [](const std::vector<std::string>& mat) {
        return size_out(gf2::cogirth_oracle(gf2::MatroidRep(to_matrix(mat))));
      },
      py::arg("mat"), "Brute-force cogirth of M(mat) (guarded to rank 24).");
  m.def(
      "girth_oracle_witness",
      [](const std::vector<std::string>& mat) {
        gf2::WeightWitness w =
            gf2::girth_oracle_witness(gf2::MatroidRep(to_matrix(mat)));
        return py::make_tuple(size_out(w.size), w.elements);
      },
      py::arg("mat"), "(value, sorted column indices) of a smallest circuit.");
  m.def(
      "cogirth_oracle_witness",
      [](const std::vector<std::string>& mat) {
        gf2::WeightWitness w =
            gf2::cogirth_oracle_witness(gf2::MatroidRep(to_matrix(mat)));
        return py::make_tuple(size_out(w.size), w.elements);
      },
      py::arg("mat"),
      "(value, sorted column indices) of a smallest cocircuit.");

  m.def(
      "mat_add",
      [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        return (to_matrix(a) + to_matrix(b)).to_strings();
      },
      py::arg("a"), py::arg("b"), "Entrywise GF(2) sum as row strings.");
  m.def(
      "mat_rank",
      [](const std::vector<std::string>& mat) {
        return gf2::rank(to_matrix(mat));
      },
      py::arg("mat"), "GF(2) rank.");

  // -------------------------------------------------------------------------
  // Parity-labelled graph solvers
  // -------------------------------------------------------------------------
  m.def(
      "parity_walk",
      [](int num_vertices, const EdgeList& edges,
         const std::vector<std::uint32_t>& gamma, int t, std::uint32_t alpha,
         int u, int v) {
        return size_out(parityjoin::parity_walk(to_graph(num_vertices, edges),
                                                to_gamma(gamma), t, alpha, u,
                                                v));
      },
      py::arg("num_vertices"), py::arg("edges"), py::arg("gamma"),
      py::arg("t"), py::arg("alpha"), py::arg("u"), py::arg("v"),
      "Minimum length of a (u, v)-walk whose edge parities XOR to alpha.");

  m.def(
      "parity_cycle",
      [](int num_vertices, const EdgeList& edges,
         const std::vector<std::uint32_t>& gamma, int t, std::uint32_t alpha) {
        return size_out(parityjoin::parity_cycle(to_graph(num_vertices, edges),
                                                 to_gamma(gamma), t, alpha));
      },
      py::arg("num_vertices"), py::arg("edges"), py::arg("gamma"),
      py::arg("t"), py::arg("alpha"),
      "Minimum cardinality of an even-degree edge set of parity alpha.");

  m.def(
      "parity_join",
      [](int num_vertices, const EdgeList& edges,
         const std::vector<std::uint32_t>& gamma, int t,
         const std::vector<int>& terminals, std::uint32_t alpha, int c,
         long long reps, std::uint64_t seed) {
        return size_out(parityjoin::parity_join(
            to_graph(num_vertices, edges), to_gamma(gamma), t, terminals,
            alpha, c, static_cast<int>(reps), seed));
      },
      py::arg("num_vertices"), py::arg("edges"), py::arg("gamma"),
      py::arg("t"), py::arg("terminals"), py::arg("alpha"), py::kw_only(),
      py::arg("c") = 2, py::arg("reps") = 10, py::arg("seed") = 0,
      "Minimum size of a T-join of parity alpha; randomized and one-sided "
      "unless the terminal set is empty.");

  m.def(
      "parity_matching",
      [](int num_vertices, const EdgeList& edges,
         const std::vector<long long>& weights,
         const std::vector<std::uint32_t>& gamma, int t, std::uint32_t alpha,
         int c, long long reps, std::uint64_t seed) {
        pfaffian::MatchingInstance inst;
        inst.g = to_graph(num_vertices, edges);
        inst.t = t;
        inst.w.assign(weights.begin(), weights.end());
        inst.gamma = to_gamma(gamma);
        inst.alpha = alpha;
        return size_out(pfaffian::parity_matching(inst, c, reps, seed));
      },
      py::arg("num_vertices"), py::arg("edges"), py::arg("weights"),
      py::arg("gamma"), py::arg("t"), py::arg("alpha"), py::kw_only(),
      py::arg("c") = 2, py::arg("reps") = 10, py::arg("seed") = 0,
      "Minimum weight of a perfect matching whose parities XOR to alpha; "
      "randomized and one-sided.");

  // -------------------------------------------------------------------------
  // Even-cut solvers
  // -------------------------------------------------------------------------
  m.def(
      "min_even_cut_set",
      [](int num_vertices, const EdgeList& edges,
         const std::vector<std::vector<int>>& terminal_sets, int c,
         std::uint64_t seed) {
        evencut::SetEvenCutInstance inst;
        inst.g = to_graph(num_vertices, edges);
        inst.terminals = terminal_sets;
        for (std::vector<int>& s : inst.terminals)
          std::sort(s.begin(), s.end());
        evencut::validate(inst);
        if (!evencut::set_feasible(inst)) {
          evencut::ContractionAnswer none;
          return cut_tuple(none);
        }
        return cut_tuple(evencut::set_min_even_cut(inst, c, seed));
      },
      py::arg("num_vertices"), py::arg("edges"), py::arg("terminal_sets"),
      py::kw_only(), py::arg("c") = 2, py::arg("seed") = 0,
      "(value, witness edge ids, repetitions) for the minimum cut meeting "
      "every terminal set evenly; value is float('inf') when infeasible.");

  m.def(
      "min_even_cut_dim",
      [](int num_vertices, const EdgeList& edges,
         const std::vector<std::uint32_t>& tau, int t,
         const std::vector<int>& sigma, std::uint32_t alpha, int c,
         std::uint64_t seed) {
        evencut::EvenCutInstance inst;
        inst.g = to_graph(num_vertices, edges);
        inst.t = t;
        inst.tau.assign(static_cast<size_t>(num_vertices) + 1, 0);
        if (static_cast<int>(tau.size()) != num_vertices)
          throw std::invalid_argument("tau needs one entry per vertex");
        for (int v = 1; v <= num_vertices; ++v)
          inst.tau[static_cast<size_t>(v)] = tau[static_cast<size_t>(v - 1)];
        inst.sigma = sigma;
        std::sort(inst.sigma.begin(), inst.sigma.end());
        inst.alpha = alpha;
        return cut_tuple(evencut::solve_even_cut(inst, c, seed));
      },
      py::arg("num_vertices"), py::arg("edges"), py::arg("tau"), py::arg("t"),
      py::arg("sigma"), py::arg("alpha"), py::kw_only(), py::arg("c") = 2,
      py::arg("seed") = 0,
      "(value, witness edge ids, repetitions) for the minimum cocycle of the "
      "parity-augmented cut space; tau is listed per vertex 1..n.");

  // -------------------------------------------------------------------------
  // Generation and the built-in selftest
  // -------------------------------------------------------------------------
  m.def(
      "gen_perturbed",
      [](int r, int n, int t, std::uint64_t seed) {
        gen::PerturbedPair pair = gen::gen_perturbed(r, n, t, seed);
        return py::make_tuple(pair.a.to_strings(), pair.p.to_strings());
      },
      py::arg("r"), py::arg("n"), py::arg("t"), py::kw_only(),
      py::arg("seed") = 0,
      "(a, p) row strings: a random connected incidence matrix and a random "
      "perturbation of exact rank t.");

  m.def(
      "selftest",
      [](long long trials, std::uint64_t seed) {
        selftest::Options opt;
        opt.trials = trials;
        opt.seed = seed;
        std::vector<selftest::SuiteResult> results =
            selftest::run_selftest(opt);
        return py::make_tuple(selftest::all_passed(results),
                              selftest::format_report(results));
      },
      py::kw_only(), py::arg("trials") = 25, py::arg("seed") = 0,
      "(ok, report): replay every randomized solver against its exhaustive "
      "oracle.");
}
