#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "matgirth/common.hpp"
#include "matgirth/evencut.hpp"
#include "matgirth/gf2.hpp"
#include "matgirth/graft.hpp"
#include "matgirth/graph.hpp"
#include "matgirth/pfaffian.hpp"

// Plain-text instance formats.  Every parser takes the whole file as a
// string; every writer produces the canonical form, so writing and re-parsing
// round-trips and parsing a canonically formatted file and re-writing it
// reproduces the bytes.  Blank lines are ignored everywhere; anything else
// that does not fit the grammar raises ParseError with a 1-based line number.
//
// Building blocks:
//
//   gf2matrix <rows> <cols>        followed by one line of <cols> symbols
//   0110...                        from {0,1} per row
//
//   graph <vertices> <edges>       vertices are 1..n
//   e <id> <u> <v> [p=<bits>] [w=<int>] [s=<0|1>]
//                                  one line per edge; p = parity bits (bit i
//                                  of the vector is character i), w = weight,
//                                  s = Sigma membership flag
//
// Instance files:
//
//   matrix          a single gf2matrix block
//   parity          graph block (p= allowed), then optional "T <v1> <v2> ..."
//                   terminals and optional "alpha <bits>"; the parity
//                   dimension t is the alpha length when present, else the
//                   p= length, else 0
//   matching        like parity but w= is required on every edge and
//                   terminals are not allowed; p= and alpha are required
//                   exactly when t > 0
//   evencut-set     header "evencut-set", graph block (no attributes), then
//                   "T <i> <v1> <v2> ..." lines numbered 1, 2, ... in order
//   evencut-dim     header "evencut-dim t=<t>", graph block (s= allowed),
//                   then "tau <v> <bits>" lines (at most one per vertex,
//                   omitted vertices get 0) and "alpha <bits>" when t > 0
//   graft           header "graft s=<s> t=<t>", graph block (no attributes),
//                   then gf2matrix blocks B (|V| x t), C (s x |E|), D (s x t)
namespace matgirth::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& detail)
      : std::runtime_error("line " + std::to_string(line) + ": " + detail),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

gf2::Matrix parse_matrix(const std::string& text);
std::string write_matrix(const gf2::Matrix& m);

// Graph with per-edge parities plus an optional terminal set and demand; the
// common input shape of the walk, cycle, and join solvers.
struct ParityInstance {
  graph::MultiGraph g;
  int t = 0;
  std::vector<ParityVec> gamma;  // by edge position
  std::vector<int> terminals;    // sorted, distinct; may be empty
  ParityVec alpha = 0;
};

ParityInstance parse_parity_instance(const std::string& text);
std::string write_parity_instance(const ParityInstance& inst);

pfaffian::MatchingInstance parse_matching(const std::string& text);
std::string write_matching(const pfaffian::MatchingInstance& inst);

evencut::SetEvenCutInstance parse_evencut_set(const std::string& text);
std::string write_evencut_set(const evencut::SetEvenCutInstance& inst);

evencut::EvenCutInstance parse_evencut_dim(const std::string& text);
std::string write_evencut_dim(const evencut::EvenCutInstance& inst);

graft::SignedGraft parse_graft(const std::string& text);
std::string write_graft(const graft::SignedGraft& sg);

// Whole-file helpers; both throw std::runtime_error naming the path.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace matgirth::io
