#include "matgirth/cli.hpp"

#include <cstdint>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "matgirth/common.hpp"
#include "matgirth/evencut.hpp"
#include "matgirth/gen.hpp"
#include "matgirth/gf2.hpp"
#include "matgirth/io.hpp"
#include "matgirth/parityjoin.hpp"
#include "matgirth/pfaffian.hpp"
#include "matgirth/pipeline.hpp"
#include "matgirth/selftest.hpp"

namespace matgirth::cli {

namespace {

// Flags shared by every subcommand (defined on the parent app; subcommands
// use fallthrough so the flags may appear before or after the name).
struct Globals {
  std::uint64_t seed = 0;
  double epsilon = 1e-3;
  bool as_json = false;
};

pipeline::SolverConfig to_config(const Globals& g) {
  pipeline::SolverConfig cfg;
  cfg.epsilon = g.epsilon;
  cfg.seed = g.seed;
  return cfg;
}

// Result fields of one command, rendered either as key=value lines (in
// insertion order) or as a single JSON object mirroring the same fields.
class Report {
 public:
  explicit Report(bool as_json) : as_json_(as_json) {}

  void add_int(const std::string& key, long long v) {
    lines_.push_back(key + "=" + std::to_string(v));
    j_[key] = v;
  }
  void add_size(const std::string& key, Size v) {
    lines_.push_back(key + "=" + size_to_string(v));
    if (is_inf(v))
      j_[key] = "inf";
    else
      j_[key] = v;
  }
  void add_ids(const std::string& key, const std::vector<int>& ids) {
    std::string line = key + "=";
    for (size_t i = 0; i < ids.size(); ++i) {
      if (i) line += ' ';
      line += std::to_string(ids[i]);
    }
    lines_.push_back(line);
    j_[key] = ids;
  }
  void add_string(const std::string& key, const std::string& v) {
    lines_.push_back(key + "=" + v);
    j_[key] = v;
  }

  void print(std::ostream& out) const {
    if (as_json_) {
      out << j_.dump() << '\n';
      return;
    }
    for (const std::string& line : lines_) out << line << '\n';
  }

 private:
  bool as_json_;
  nlohmann::json j_ = nlohmann::json::object();
  std::vector<std::string> lines_;
};

// ---------------------------------------------------------------------------
// Command handlers.  Each returns the exit code and writes only to `out`;
// anything invalid throws and the caller turns it into exit code 2.
// ---------------------------------------------------------------------------

struct MatrixPairArgs {
  std::string a_path;
  std::string p_path;
};

int cmd_girth(const Globals& g, const MatrixPairArgs& mp, std::ostream& out) {
  gf2::Matrix a = io::parse_matrix(io::read_file(mp.a_path));
  gf2::Matrix p = io::parse_matrix(io::read_file(mp.p_path));
  pipeline::SolverConfig cfg = to_config(g);
  int reps = pipeline::girth_matching_reps(gf2::rank(p), a.cols(), cfg);
  Size value = pipeline::girth_perturbed(a, p, cfg);
  Report r(g.as_json);
  r.add_int("c", 2);
  r.add_int("reps", reps);
  r.add_size("value", value);
  r.print(out);
  return 0;
}

int cmd_cogirth(const Globals& g, const MatrixPairArgs& mp, std::ostream& out) {
  gf2::Matrix a = io::parse_matrix(io::read_file(mp.a_path));
  gf2::Matrix p = io::parse_matrix(io::read_file(mp.p_path));
  pipeline::SolverConfig cfg = to_config(g);
  int c = pipeline::cogirth_contraction_c(gf2::rank(p), cfg);
  pipeline::CogirthResult res = pipeline::cogirth_perturbed(a, p, cfg);
  Report r(g.as_json);
  r.add_int("c", c);
  r.add_int("reps", res.repetitions);
  r.add_size("value", res.value);
  if (res.found()) r.add_ids("witness", res.witness);
  r.print(out);
  return 0;
}

int cmd_oracle(const Globals& g, const std::string& kind,
               const MatrixPairArgs& mp, std::ostream& out) {
  gf2::Matrix a = io::parse_matrix(io::read_file(mp.a_path));
  gf2::Matrix p = io::parse_matrix(io::read_file(mp.p_path));
  gf2::MatroidRep rep(a + p);
  gf2::WeightWitness w = kind == "girth" ? gf2::girth_oracle_witness(rep)
                                         : gf2::cogirth_oracle_witness(rep);
  Report r(g.as_json);
  r.add_size("value", w.size);
  if (!is_inf(w.size)) r.add_ids("witness", w.elements);
  r.print(out);
  return 0;
}

int cmd_evencut_set(const Globals& g, const std::string& input, int c_flag,
                    std::ostream& out) {
  evencut::SetEvenCutInstance inst =
      io::parse_evencut_set(io::read_file(input));
  int c = c_flag > 0 ? c_flag
                     : pipeline::contraction_repetition_factor(g.epsilon);
  Report r(g.as_json);
  r.add_int("c", c);
  if (!evencut::set_feasible(inst)) {
    r.add_int("reps", 0);
    r.add_size("value", kInf);
    r.print(out);
    return 0;
  }
  evencut::ContractionAnswer ans = evencut::set_min_even_cut(inst, c, g.seed);
  r.add_int("reps", ans.repetitions);
  r.add_size("value", ans.cut.size);
  if (ans.cut.found()) r.add_ids("witness", ans.cut.witness);
  r.print(out);
  return 0;
}

int cmd_evencut_dim(const Globals& g, const std::string& input, int c_flag,
                    std::ostream& out) {
  evencut::EvenCutInstance inst = io::parse_evencut_dim(io::read_file(input));
  int c = c_flag > 0 ? c_flag
                     : pipeline::contraction_repetition_factor(g.epsilon);
  evencut::ContractionAnswer ans = evencut::solve_even_cut(inst, c, g.seed);
  Report r(g.as_json);
  r.add_int("c", c);
  r.add_int("reps", ans.repetitions);
  r.add_size("value", ans.cut.size);
  if (ans.cut.found()) r.add_ids("witness", ans.cut.witness);
  r.print(out);
  return 0;
}

int cmd_paritymatch(const Globals& g, const std::string& input, int confidence,
                    int reps_flag, std::ostream& out) {
  pfaffian::MatchingInstance inst = io::parse_matching(io::read_file(input));
  int reps =
      reps_flag > 0 ? reps_flag : pipeline::matching_repetitions(g.epsilon);
  Size value = pfaffian::parity_matching(inst, confidence, reps, g.seed);
  Report r(g.as_json);
  r.add_int("c", confidence);
  r.add_int("reps", reps);
  r.add_size("value", value);
  r.print(out);
  return 0;
}

int cmd_parityjoin(const Globals& g, const std::string& input, int confidence,
                   int reps_flag, std::ostream& out) {
  io::ParityInstance inst = io::parse_parity_instance(io::read_file(input));
  int reps =
      reps_flag > 0 ? reps_flag : pipeline::matching_repetitions(g.epsilon);
  Size value = parityjoin::parity_join(inst.g, inst.gamma, inst.t,
                                       inst.terminals, inst.alpha, confidence,
                                       reps, g.seed);
  Report r(g.as_json);
  r.add_int("c", confidence);
  r.add_int("reps", reps);
  r.add_size("value", value);
  r.print(out);
  return 0;
}

io::ParityInstance parse_terminal_free(const std::string& input) {
  io::ParityInstance inst = io::parse_parity_instance(io::read_file(input));
  if (!inst.terminals.empty())
    throw std::invalid_argument(
        "this solver takes no T line; use parityjoin for terminal sets");
  return inst;
}

int cmd_paritywalk(const Globals& g, const std::string& input, int from,
                   int to, std::ostream& out) {
  io::ParityInstance inst = parse_terminal_free(input);
  Size value =
      parityjoin::parity_walk(inst.g, inst.gamma, inst.t, inst.alpha, from, to);
  Report r(g.as_json);
  r.add_size("value", value);
  r.print(out);
  return 0;
}

int cmd_paritycycle(const Globals& g, const std::string& input,
                    std::ostream& out) {
  io::ParityInstance inst = parse_terminal_free(input);
  Size value = parityjoin::parity_cycle(inst.g, inst.gamma, inst.t, inst.alpha);
  Report r(g.as_json);
  r.add_size("value", value);
  r.print(out);
  return 0;
}

int cmd_pfaffian(const Globals& g, const std::string& input, bool naive,
                 std::ostream& out) {
  pfaffian::MatchingInstance inst = io::parse_matching(io::read_file(input));
  std::vector<long long> x(static_cast<size_t>(inst.g.num_edges()), 1);
  ring::SkewRingMatrix tm = pfaffian::tutte_matrix(inst, x);
  ring::GroupRingPoly pf =
      naive ? pfaffian::pfaffian_naive(tm) : pfaffian::pfaffian_dag(tm);
  Report r(g.as_json);
  r.add_string("value", pf.to_string());
  r.print(out);
  return 0;
}

int cmd_selftest(const Globals& g, long long trials, bool mutate_dag,
                 std::ostream& out) {
  selftest::Options opt;
  opt.trials = trials;
  opt.seed = g.seed;
  opt.mutate_dag = mutate_dag;
  std::vector<selftest::SuiteResult> results = selftest::run_selftest(opt);
  if (g.as_json) {
    nlohmann::json j = nlohmann::json::object();
    j["suites"] = nlohmann::json::array();
    for (const selftest::SuiteResult& s : results) {
      nlohmann::json e = nlohmann::json::object();
      e["suite"] = s.name;
      e["trials"] = s.trials;
      e["failures"] = s.failures;
      e["status"] = s.passed() ? "pass" : "fail";
      j["suites"].push_back(e);
    }
    j["selftest"] = selftest::all_passed(results) ? "pass" : "fail";
    out << j.dump() << '\n';
  } else {
    out << selftest::format_report(results);
  }
  return selftest::all_passed(results) ? 0 : 1;
}

// ---------------------------------------------------------------------------
// gen: one positional kind plus the union of all generator parameters; the
// flags that do not belong to the chosen kind are rejected by name.
// ---------------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  int r = 0, n = 0, m = 0, t = 0;
  int max_w = 5, terminals = 0;
  std::string out_path, a_path, p_path;
};

struct GenFlagCounts {
  int r = 0, n = 0, m = 0, t = 0, max_w = 0, terminals = 0;
  int out = 0, a = 0, p = 0;
};

void require_given(int count, const std::string& kind,
                   const std::string& flag) {
  if (count == 0)
    throw std::invalid_argument("gen " + kind + " needs " + flag);
}

void forbid_given(int count, const std::string& kind,
                  const std::string& flag) {
  if (count > 0)
    throw std::invalid_argument("the " + flag + " flag does not apply to gen " +
                                kind);
}

void emit_instance(const Globals& g, const std::string& text,
                   const std::string& out_path, std::ostream& out) {
  if (!out_path.empty()) {
    io::write_file(out_path, text);
    return;
  }
  if (g.as_json) {
    nlohmann::json j = nlohmann::json::object();
    j["text"] = text;
    out << j.dump() << '\n';
  } else {
    out << text;
  }
}

int cmd_gen(const Globals& g, const GenArgs& a, const GenFlagCounts& given,
            std::ostream& out) {
  const std::string& kind = a.kind;
  if (kind == "perturbed") {
    require_given(given.r, kind, "--r");
    require_given(given.n, kind, "--n");
    require_given(given.t, kind, "--t");
    forbid_given(given.m, kind, "--m");
    forbid_given(given.max_w, kind, "--max-w");
    forbid_given(given.terminals, kind, "--terminals");
    forbid_given(given.out, kind, "--out");
    gen::PerturbedPair pair = gen::gen_perturbed(a.r, a.n, a.t, g.seed);
    std::string a_text = io::write_matrix(pair.a);
    std::string p_text = io::write_matrix(pair.p);
    if (!a.a_path.empty()) {
      io::write_file(a.a_path, a_text);
      io::write_file(a.p_path, p_text);
      return 0;
    }
    if (g.as_json) {
      nlohmann::json j = nlohmann::json::object();
      j["a"] = a_text;
      j["p"] = p_text;
      out << j.dump() << '\n';
    } else {
      out << a_text << p_text;
    }
    return 0;
  }

  forbid_given(given.r, kind, "--r");
  forbid_given(given.a, kind, "--A");
  forbid_given(given.p, kind, "--P");
  require_given(given.n, kind, "--n");
  require_given(given.m, kind, "--m");
  require_given(given.t, kind, "--t");
  if (kind != "matching") forbid_given(given.max_w, kind, "--max-w");
  if (kind != "parity") forbid_given(given.terminals, kind, "--terminals");

  std::string text;
  if (kind == "evencut-set") {
    text = io::write_evencut_set(gen::gen_evencut_set(a.n, a.m, a.t, g.seed));
  } else if (kind == "evencut-dim") {
    text = io::write_evencut_dim(gen::gen_evencut_dim(a.n, a.m, a.t, g.seed));
  } else if (kind == "matching") {
    text = io::write_matching(
        gen::gen_matching(a.n, a.m, a.t, a.max_w, g.seed));
  } else {  // parity
    text = io::write_parity_instance(
        gen::gen_parity(a.n, a.m, a.t, a.terminals, g.seed));
  }
  emit_instance(g, text, a.out_path, out);
  return 0;
}

// ---------------------------------------------------------------------------
// App wiring
// ---------------------------------------------------------------------------

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  Globals g;
  CLI::App app{"Girth and cogirth of low-rank perturbations of graphic "
               "matroids over GF(2)"};
  app.require_subcommand(1);
  app.add_option("--seed", g.seed, "root seed for every randomized component")
      ->capture_default_str();
  app.add_option("--epsilon", g.epsilon,
                 "total error budget in (0, 1) for randomized commands")
      ->capture_default_str();
  app.add_flag("--json", g.as_json,
               "machine-readable output mirroring the text fields");

  auto add_sub = [&](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->fallthrough();
    return sub;
  };
  auto add_matrix_pair = [](CLI::App* sub, MatrixPairArgs& mp) {
    sub->add_option("--A", mp.a_path, "incidence matrix file (gf2matrix)")
        ->required();
    sub->add_option("--P", mp.p_path, "perturbation matrix file (gf2matrix)")
        ->required();
  };

  MatrixPairArgs girth_mp, cogirth_mp, oracle_mp;
  std::string oracle_kind;
  std::string ec_set_input, ec_dim_input, match_input, join_input;
  std::string walk_input, cycle_input, pf_input;
  int ec_set_c = 0, ec_dim_c = 0;
  int match_conf = 2, match_reps = 0, join_conf = 2, join_reps = 0;
  int walk_from = 0, walk_to = 0;
  bool pf_naive = false;
  long long st_trials = 25;
  bool st_mutate = false;
  GenArgs gen_args;

  CLI::App* sc_girth =
      add_sub("girth", "smallest circuit size of M(A + P) (randomized, "
                       "one-sided: never below the truth)");
  add_matrix_pair(sc_girth, girth_mp);

  CLI::App* sc_cogirth =
      add_sub("cogirth", "smallest cocircuit size of M(A + P) with a "
                         "certified witness (randomized, one-sided)");
  add_matrix_pair(sc_cogirth, cogirth_mp);

  CLI::App* sc_ec_set = add_sub(
      "evencut-set",
      "minimum cut meeting every terminal set evenly (evencut-set file)");
  sc_ec_set->add_option("--input", ec_set_input, "evencut-set instance file")
      ->required();
  sc_ec_set->add_option("--c", ec_set_c,
                        "contraction run multiplier (0 derives from epsilon)")
      ->check(CLI::Range(0, 1000000));

  CLI::App* sc_ec_dim = add_sub(
      "evencut-dim",
      "minimum cocycle of the parity-augmented cut space (evencut-dim file)");
  sc_ec_dim->add_option("--input", ec_dim_input, "evencut-dim instance file")
      ->required();
  sc_ec_dim->add_option("--c", ec_dim_c,
                        "contraction run multiplier (0 derives from epsilon)")
      ->check(CLI::Range(0, 1000000));

  CLI::App* sc_match = add_sub(
      "paritymatch",
      "minimum-weight perfect matching with a parity demand (matching file)");
  sc_match->add_option("--input", match_input, "matching instance file")
      ->required();
  sc_match->add_option("--confidence", match_conf,
                       "per-repetition confidence c (success >= 1 - 1/(2c))")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  sc_match->add_option("--reps", match_reps,
                       "repetitions (0 derives from epsilon)")
      ->check(CLI::Range(0, 1000000));

  CLI::App* sc_join = add_sub(
      "parityjoin",
      "minimum T-join of a given parity class (parity file with a T line)");
  sc_join->add_option("--input", join_input, "parity instance file")
      ->required();
  sc_join->add_option("--confidence", join_conf,
                      "per-repetition confidence c (success >= 1 - 1/(2c))")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  sc_join->add_option("--reps", join_reps,
                      "repetitions (0 derives from epsilon)")
      ->check(CLI::Range(0, 1000000));

  CLI::App* sc_walk = add_sub(
      "paritywalk",
      "shortest walk of a given parity class between two vertices "
      "(deterministic)");
  sc_walk->add_option("--input", walk_input, "parity instance file (no T line)")
      ->required();
  sc_walk->add_option("--from", walk_from, "start vertex")->required();
  sc_walk->add_option("--to", walk_to, "end vertex")->required();

  CLI::App* sc_cycle = add_sub(
      "paritycycle",
      "smallest cycle of a given parity class (deterministic)");
  sc_cycle->add_option("--input", cycle_input,
                       "parity instance file (no T line)")
      ->required();

  CLI::App* sc_pf = add_sub(
      "pfaffian",
      "Pfaffian of the Tutte matrix at unit edge variables (matching file)");
  sc_pf->add_option("--input", pf_input, "matching instance file")->required();
  sc_pf->add_flag("--naive", pf_naive,
                  "use the exhaustive pairing sum (needs <= 12 vertices)");

  CLI::App* sc_oracle = add_sub(
      "oracle", "exhaustive reference answer over the columns of A + P");
  sc_oracle
      ->add_option("kind", oracle_kind, "which quantity to compute")
      ->required()
      ->check(CLI::IsMember({"girth", "cogirth"}));
  add_matrix_pair(sc_oracle, oracle_mp);

  CLI::App* sc_gen =
      add_sub("gen", "write a reproducible random instance for --seed");
  sc_gen->add_option("kind", gen_args.kind, "instance kind")
      ->required()
      ->check(CLI::IsMember(
          {"perturbed", "evencut-set", "evencut-dim", "matching", "parity"}));
  CLI::Option* og_r =
      sc_gen->add_option("--r", gen_args.r, "vertex count of the graph of A")
          ->check(CLI::Range(1, 1000));
  CLI::Option* og_n = sc_gen
                          ->add_option("--n", gen_args.n,
                                       "columns of A (perturbed) or vertices")
                          ->check(CLI::Range(0, 1000));
  CLI::Option* og_m =
      sc_gen->add_option("--m", gen_args.m, "edge count")
          ->check(CLI::Range(0, 100000));
  CLI::Option* og_t =
      sc_gen->add_option("--t", gen_args.t, "parity dimension / rank")
          ->check(CLI::Range(0, 20));
  CLI::Option* og_w =
      sc_gen->add_option("--max-w", gen_args.max_w, "maximum edge weight")
          ->check(CLI::Range(0, 100000))
          ->capture_default_str();
  CLI::Option* og_term =
      sc_gen
          ->add_option("--terminals", gen_args.terminals,
                       "terminal count (parity kind)")
          ->check(CLI::Range(0, 1000))
          ->capture_default_str();
  CLI::Option* og_out =
      sc_gen->add_option("--out", gen_args.out_path, "write here, not stdout");
  CLI::Option* og_a =
      sc_gen->add_option("--A", gen_args.a_path, "write A here (perturbed)");
  CLI::Option* og_p =
      sc_gen->add_option("--P", gen_args.p_path, "write P here (perturbed)");
  og_a->needs(og_p);
  og_p->needs(og_a);

  CLI::App* sc_st = add_sub(
      "selftest",
      "replay every randomized solver against its exhaustive oracle");
  sc_st->add_option("--trials", st_trials, "trials per suite (0 runs nothing)")
      ->check(CLI::Range(0, 1000000))
      ->capture_default_str();
  sc_st->add_flag("--mutate-dag", st_mutate)->group("");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (!(g.epsilon > 0.0) || !(g.epsilon < 1.0))
    throw std::invalid_argument("epsilon must lie in (0, 1)");

  if (sc_girth->parsed()) return cmd_girth(g, girth_mp, out);
  if (sc_cogirth->parsed()) return cmd_cogirth(g, cogirth_mp, out);
  if (sc_ec_set->parsed()) return cmd_evencut_set(g, ec_set_input, ec_set_c, out);
  if (sc_ec_dim->parsed()) return cmd_evencut_dim(g, ec_dim_input, ec_dim_c, out);
  if (sc_match->parsed())
    return cmd_paritymatch(g, match_input, match_conf, match_reps, out);
  if (sc_join->parsed())
    return cmd_parityjoin(g, join_input, join_conf, join_reps, out);
  if (sc_walk->parsed())
    return cmd_paritywalk(g, walk_input, walk_from, walk_to, out);
  if (sc_cycle->parsed()) return cmd_paritycycle(g, cycle_input, out);
  if (sc_pf->parsed()) return cmd_pfaffian(g, pf_input, pf_naive, out);
  if (sc_oracle->parsed()) return cmd_oracle(g, oracle_kind, oracle_mp, out);
  if (sc_st->parsed()) return cmd_selftest(g, st_trials, st_mutate, out);
  GenFlagCounts given;
  given.r = static_cast<int>(og_r->count());
  given.n = static_cast<int>(og_n->count());
  given.m = static_cast<int>(og_m->count());
  given.t = static_cast<int>(og_t->count());
  given.max_w = static_cast<int>(og_w->count());
  given.terminals = static_cast<int>(og_term->count());
  given.out = static_cast<int>(og_out->count());
  given.a = static_cast<int>(og_a->count());
  given.p = static_cast<int>(og_p->count());
  return cmd_gen(g, gen_args, given, out);
}

}  // namespace

RunResult run_command(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult res;
  try {
    res.exit_code = dispatch(args, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    res.exit_code = 2;
  } catch (...) {
    err << "error: unknown failure\n";
    res.exit_code = 2;
  }
  res.out = out.str();
  res.err = err.str();
  return res;
}

int main_entry(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  RunResult res = run_command(args);
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}

}  // namespace matgirth::cli
