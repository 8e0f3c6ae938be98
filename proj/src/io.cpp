#include "matgirth/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace matgirth::io {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Walks the file line by line, skipping blanks, tracking 1-based numbers.
class Scanner {
 public:
  explicit Scanner(const std::string& text) {
    std::string cur;
    for (char ch : text) {
      if (ch == '\n') {
        lines_.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    if (!cur.empty()) lines_.push_back(cur);
  }

  // Next non-blank line, without consuming it; false at end of file.
  bool peek(std::vector<std::string>* tokens, int* lineno) {
    while (pos_ < lines_.size()) {
      std::vector<std::string> toks = split_tokens(lines_[pos_]);
      if (toks.empty()) {
        ++pos_;
        continue;
      }
      if (tokens) *tokens = std::move(toks);
      if (lineno) *lineno = static_cast<int>(pos_) + 1;
      return true;
    }
    return false;
  }

  void advance() { ++pos_; }

  // The raw (untokenized) current line, valid right after a peek.
  const std::string& raw() const { return lines_[pos_]; }

  int eof_line() const { return static_cast<int>(lines_.size()) + 1; }

  std::vector<std::string> take_or_fail(const std::string& expected,
                                        int* lineno_out) {
    std::vector<std::string> toks;
    int lineno = 0;
    if (!peek(&toks, &lineno))
      throw ParseError(eof_line(), "unexpected end of file, expected " + expected);
    if (lineno_out) *lineno_out = lineno;
    advance();
    return toks;
  }

  void expect_eof() {
    std::vector<std::string> toks;
    int lineno = 0;
    if (peek(&toks, &lineno))
      throw ParseError(lineno, "unrecognized line '" + toks[0] + "'");
  }

 private:
  std::vector<std::string> lines_;
  size_t pos_ = 0;
};

long long parse_int(const std::string& tok, int lineno, const std::string& what) {
  long long value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw ParseError(lineno, what + " must be an integer (got '" + tok + "')");
  return value;
}

long long parse_count(const std::string& tok, int lineno,
                      const std::string& what, long long hi) {
  long long value = parse_int(tok, lineno, what);
  if (value < 0 || value > hi)
    throw ParseError(lineno, what + " must be between 0 and " +
                                 std::to_string(hi));
  return value;
}

// "0110" -> value with bit i = character i.  Lengths above 20 are rejected to
// match the solvers' parity-dimension cap.
ParityVec parse_bits(const std::string& tok, int lineno,
                     const std::string& what, int* length) {
  if (tok.size() > 20)
    throw ParseError(lineno, what + " is limited to 20 parity bits");
  ParityVec value = 0;
  for (size_t i = 0; i < tok.size(); ++i) {
    if (tok[i] == '1')
      value |= ParityVec{1} << i;
    else if (tok[i] != '0')
      throw ParseError(lineno, what + " must use only 0 and 1 symbols");
  }
  if (length) *length = static_cast<int>(tok.size());
  return value;
}

// "t=3" -> 3, enforcing the key.
long long parse_keyed(const std::string& tok, int lineno, const std::string& key,
                      long long hi) {
  if (tok.size() < key.size() + 1 || tok.compare(0, key.size() + 1, key + "=") != 0)
    throw ParseError(lineno, "expected '" + key + "=<value>' (got '" + tok + "')");
  return parse_count(tok.substr(key.size() + 1), lineno, key, hi);
}

constexpr long long kMaxDim = 1000000;      // rows, columns, vertices, edges
constexpr long long kMaxCells = 10000000;   // total matrix cells
constexpr long long kMaxWeight = 100000;    // per-edge weight cap (dense z)

gf2::Matrix parse_matrix_block(Scanner& sc) {
  int lineno = 0;
  std::vector<std::string> head;
  if (!sc.peek(&head, &lineno))
    throw ParseError(sc.eof_line(),
                     "unexpected end of file, expected 'gf2matrix <rows> <cols>'");
  if (head[0] != "gf2matrix" || head.size() != 3)
    throw ParseError(lineno, "expected 'gf2matrix <rows> <cols>'");
  long long rows = parse_count(head[1], lineno, "rows", kMaxDim);
  long long cols = parse_count(head[2], lineno, "cols", kMaxDim);
  if (rows * cols > kMaxCells)
    throw ParseError(lineno, "matrix is too large (at most " +
                                 std::to_string(kMaxCells) + " cells)");
  sc.advance();

  gf2::Matrix m(static_cast<int>(rows), static_cast<int>(cols));
  if (cols == 0) return m;  // zero-width rows have no lines of their own
  for (long long r = 0; r < rows; ++r) {
    std::vector<std::string> toks;
    if (!sc.peek(&toks, &lineno))
      throw ParseError(sc.eof_line(), "unexpected end of file, expected row " +
                                          std::to_string(r + 1) + " of the matrix");
    const std::string& row = toks[0];
    if (toks.size() != 1 || static_cast<long long>(row.size()) != cols)
      throw ParseError(lineno, "row " + std::to_string(r + 1) +
                                   " has the wrong length (expected " +
                                   std::to_string(cols) + " symbols)");
    for (long long c = 0; c < cols; ++c) {
      if (row[static_cast<size_t>(c)] == '1')
        m.set(static_cast<int>(r), static_cast<int>(c), 1);
      else if (row[static_cast<size_t>(c)] != '0')
        throw ParseError(lineno, "row " + std::to_string(r + 1) +
                                     " must use only 0 and 1 symbols");
    }
    sc.advance();
  }
  return m;
}

void write_matrix_block(std::string* out, const gf2::Matrix& m) {
  *out += "gf2matrix " + std::to_string(m.rows()) + " " +
          std::to_string(m.cols()) + "\n";
  if (m.cols() == 0) return;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) *out += m.get(r, c) ? '1' : '0';
    *out += '\n';
  }
}

constexpr unsigned kAllowP = 1;
constexpr unsigned kAllowW = 2;
constexpr unsigned kAllowS = 4;

struct GraphBlock {
  graph::MultiGraph g;
  // By edge position; nullopt marks an absent attribute.
  std::vector<std::optional<std::string>> parity;
  std::vector<int> parity_line;  // for errors deferred until t is known
  std::vector<std::optional<long long>> weight;
  std::vector<char> sigma;
};

GraphBlock parse_graph_block(Scanner& sc, unsigned allowed) {
  int lineno = 0;
  std::vector<std::string> head;
  if (!sc.peek(&head, &lineno))
    throw ParseError(sc.eof_line(),
                     "unexpected end of file, expected 'graph <vertices> <edges>'");
  if (head[0] != "graph" || head.size() != 3)
    throw ParseError(lineno, "expected 'graph <vertices> <edges>'");
  long long n = parse_count(head[1], lineno, "vertices", kMaxDim);
  long long m = parse_count(head[2], lineno, "edges", kMaxDim);
  sc.advance();

  GraphBlock block;
  block.g = graph::MultiGraph(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    std::vector<std::string> toks;
    if (!sc.peek(&toks, &lineno))
      throw ParseError(sc.eof_line(), "unexpected end of file, expected edge " +
                                          std::to_string(i + 1) + " of " +
                                          std::to_string(m));
    if (toks[0] != "e" || toks.size() < 4)
      throw ParseError(lineno, "expected 'e <id> <u> <v> [attributes]'");
    long long id = parse_int(toks[1], lineno, "edge id");
    if (id < 0 || id > kMaxDim * 8)
      throw ParseError(lineno, "edge ids must be between 0 and " +
                                   std::to_string(kMaxDim * 8));
    if (block.g.has_edge_id(static_cast<int>(id)))
      throw ParseError(lineno, "repeated edge id " + std::to_string(id));
    long long u = parse_int(toks[2], lineno, "edge endpoint");
    long long v = parse_int(toks[3], lineno, "edge endpoint");
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError(lineno, "edge endpoint out of range 1.." +
                                   std::to_string(n));

    std::optional<std::string> parity;
    std::optional<long long> weight;
    std::optional<char> sigma;
    for (size_t k = 4; k < toks.size(); ++k) {
      const std::string& tok = toks[k];
      size_t eq = tok.find('=');
      if (eq == std::string::npos)
        throw ParseError(lineno, "edge attributes look like key=value (got '" +
                                     tok + "')");
      std::string key = tok.substr(0, eq);
      std::string val = tok.substr(eq + 1);
      if (key == "p" && (allowed & kAllowP)) {
        if (parity)
          throw ParseError(lineno, "the p= attribute is given twice");
        parse_bits(val, lineno, "p=", nullptr);  // symbols checked now
        parity = val;
      } else if (key == "w" && (allowed & kAllowW)) {
        if (weight)
          throw ParseError(lineno, "the w= attribute is given twice");
        weight = parse_count(val, lineno, "w", kMaxWeight);
      } else if (key == "s" && (allowed & kAllowS)) {
        if (sigma)
          throw ParseError(lineno, "the s= attribute is given twice");
        long long flag = parse_count(val, lineno, "s", 1);
        sigma = static_cast<char>(flag);
      } else {
        throw ParseError(lineno, "the " + key +
                                     "= attribute does not belong in this format");
      }
    }

    block.g.add_edge(static_cast<int>(id), static_cast<int>(u),
                     static_cast<int>(v));
    block.parity.push_back(parity);
    block.parity_line.push_back(lineno);
    block.weight.push_back(weight);
    block.sigma.push_back(sigma.value_or(0));
    sc.advance();
  }
  return block;
}

struct EdgeAttrText {
  std::string parity;  // without the p= prefix; empty string means omit
  bool has_parity = false;
  long long weight = -1;  // negative means omit
  bool sigma = false;
};

void write_graph_block(std::string* out, const graph::MultiGraph& g,
                       const std::vector<EdgeAttrText>& attrs) {
  *out += "graph " + std::to_string(g.num_vertices()) + " " +
          std::to_string(g.num_edges()) + "\n";
  for (int i = 0; i < g.num_edges(); ++i) {
    const graph::Edge& e = g.edge_at(i);
    *out += "e " + std::to_string(e.id) + " " + std::to_string(e.u) + " " +
            std::to_string(e.v);
    if (!attrs.empty()) {
      const EdgeAttrText& a = attrs[static_cast<size_t>(i)];
      if (a.has_parity) *out += " p=" + a.parity;
      if (a.weight >= 0) *out += " w=" + std::to_string(a.weight);
      if (a.sigma) *out += " s=1";
    }
    *out += '\n';
  }
}

// Decide the parity dimension of a block-with-alpha file: the alpha length
// wins, else the first p= length, else 0.
int resolve_t(const GraphBlock& block, const std::optional<std::string>& alpha) {
  if (alpha) return static_cast<int>(alpha->size());
  for (const auto& p : block.parity)
    if (p) return static_cast<int>(p->size());
  return 0;
}

// Convert the stored p= strings against the resolved t, with errors anchored
// at the original edge lines.  Absent attributes become 0.
std::vector<ParityVec> edge_parities(const GraphBlock& block, int t) {
  std::vector<ParityVec> gamma;
  for (size_t i = 0; i < block.parity.size(); ++i) {
    if (!block.parity[i]) {
      gamma.push_back(0);
      continue;
    }
    if (static_cast<int>(block.parity[i]->size()) != t)
      throw ParseError(block.parity_line[i],
                       "p= needs exactly " + std::to_string(t) +
                           " parity bits to match the rest of the file");
    gamma.push_back(parse_bits(*block.parity[i], block.parity_line[i], "p=",
                               nullptr));
  }
  return gamma;
}

}  // namespace

gf2::Matrix parse_matrix(const std::string& text) {
  Scanner sc(text);
  gf2::Matrix m = parse_matrix_block(sc);
  sc.expect_eof();
  return m;
}

std::string write_matrix(const gf2::Matrix& m) {
  std::string out;
  write_matrix_block(&out, m);
  return out;
}

ParityInstance parse_parity_instance(const std::string& text) {
  Scanner sc(text);
  GraphBlock block = parse_graph_block(sc, kAllowP);

  std::optional<std::string> alpha_bits;
  std::optional<std::vector<int>> terminals;
  std::vector<std::string> toks;
  int lineno = 0;
  while (sc.peek(&toks, &lineno)) {
    if (toks[0] == "T") {
      if (terminals)
        throw ParseError(lineno, "the terminal line is given twice");
      if (toks.size() < 2)
        throw ParseError(lineno, "the terminal line needs at least one vertex");
      std::vector<int> t_set;
      for (size_t k = 1; k < toks.size(); ++k) {
        long long v = parse_int(toks[k], lineno, "terminal vertex");
        if (v < 1 || v > block.g.num_vertices())
          throw ParseError(lineno, "terminal vertex out of range 1.." +
                                       std::to_string(block.g.num_vertices()));
        t_set.push_back(static_cast<int>(v));
      }
      std::sort(t_set.begin(), t_set.end());
      if (std::adjacent_find(t_set.begin(), t_set.end()) != t_set.end())
        throw ParseError(lineno, "the terminal line has a repeated vertex");
      terminals = std::move(t_set);
    } else if (toks[0] == "alpha") {
      if (alpha_bits)
        throw ParseError(lineno, "the alpha line is given twice");
      if (toks.size() > 2)
        throw ParseError(lineno, "expected 'alpha <bits>'");
      std::string bits = toks.size() == 2 ? toks[1] : std::string();
      parse_bits(bits, lineno, "alpha", nullptr);
      alpha_bits = bits;
    } else {
      throw ParseError(lineno, "unrecognized line '" + toks[0] + "'");
    }
    sc.advance();
  }

  ParityInstance inst;
  inst.t = resolve_t(block, alpha_bits);
  inst.gamma = edge_parities(block, inst.t);
  inst.g = std::move(block.g);
  if (terminals) inst.terminals = std::move(*terminals);
  if (alpha_bits) inst.alpha = parse_bits(*alpha_bits, 0, "alpha", nullptr);
  return inst;
}

std::string write_parity_instance(const ParityInstance& inst) {
  std::string out;
  std::vector<EdgeAttrText> attrs(static_cast<size_t>(inst.g.num_edges()));
  for (size_t i = 0; i < attrs.size(); ++i) {
    if (inst.t > 0) {
      attrs[i].has_parity = true;
      attrs[i].parity = parity_to_string(
          i < inst.gamma.size() ? inst.gamma[i] : 0, inst.t);
    }
  }
  write_graph_block(&out, inst.g, attrs);
  if (!inst.terminals.empty()) {
    out += "T";
    for (int v : inst.terminals) out += " " + std::to_string(v);
    out += '\n';
  }
  if (inst.t > 0) out += "alpha " + parity_to_string(inst.alpha, inst.t) + "\n";
  return out;
}

pfaffian::MatchingInstance parse_matching(const std::string& text) {
  Scanner sc(text);
  GraphBlock block = parse_graph_block(sc, kAllowP | kAllowW);

  std::optional<std::string> alpha_bits;
  std::vector<std::string> toks;
  int lineno = 0;
  while (sc.peek(&toks, &lineno)) {
    if (toks[0] == "alpha") {
      if (alpha_bits)
        throw ParseError(lineno, "the alpha line is given twice");
      if (toks.size() > 2)
        throw ParseError(lineno, "expected 'alpha <bits>'");
      std::string bits = toks.size() == 2 ? toks[1] : std::string();
      parse_bits(bits, lineno, "alpha", nullptr);
      alpha_bits = bits;
    } else {
      throw ParseError(lineno, "unrecognized line '" + toks[0] + "'");
    }
    sc.advance();
  }

  pfaffian::MatchingInstance inst;
  inst.t = resolve_t(block, alpha_bits);
  if (inst.t > 0 && !alpha_bits)
    throw ParseError(sc.eof_line(),
                     "an alpha line is required when edges carry parities");
  for (size_t i = 0; i < block.parity.size(); ++i)
    if (inst.t > 0 && !block.parity[i])
      throw ParseError(block.parity_line[i],
                       "every edge needs a p= parity in a matching file");
  inst.gamma = edge_parities(block, inst.t);
  for (size_t i = 0; i < block.weight.size(); ++i) {
    if (!block.weight[i])
      throw ParseError(block.parity_line[i],
                       "every edge needs a w= weight in a matching file");
    inst.w.push_back(*block.weight[i]);
  }
  inst.g = std::move(block.g);
  if (alpha_bits) inst.alpha = parse_bits(*alpha_bits, 0, "alpha", nullptr);
  return inst;
}

std::string write_matching(const pfaffian::MatchingInstance& inst) {
  std::string out;
  std::vector<EdgeAttrText> attrs(static_cast<size_t>(inst.g.num_edges()));
  for (size_t i = 0; i < attrs.size(); ++i) {
    if (inst.t > 0) {
      attrs[i].has_parity = true;
      attrs[i].parity = parity_to_string(
          i < inst.gamma.size() ? inst.gamma[i] : 0, inst.t);
    }
    attrs[i].weight = i < inst.w.size() ? inst.w[i] : 0;
  }
  write_graph_block(&out, inst.g, attrs);
  if (inst.t > 0) out += "alpha " + parity_to_string(inst.alpha, inst.t) + "\n";
  return out;
}

evencut::SetEvenCutInstance parse_evencut_set(const std::string& text) {
  Scanner sc(text);
  int head_line = 0;
  std::vector<std::string> head = sc.take_or_fail("'evencut-set'", &head_line);
  if (head[0] != "evencut-set" || head.size() != 1)
    throw ParseError(head_line, "expected the header 'evencut-set'");
  GraphBlock block = parse_graph_block(sc, 0);

  evencut::SetEvenCutInstance inst;
  inst.g = std::move(block.g);
  std::vector<std::string> toks;
  int lineno = 0;
  while (sc.peek(&toks, &lineno)) {
    if (toks[0] != "T")
      throw ParseError(lineno, "unrecognized line '" + toks[0] + "'");
    if (toks.size() < 2)
      throw ParseError(lineno, "expected 'T <index> <v1> <v2> ...'");
    long long index = parse_int(toks[1], lineno, "terminal set index");
    long long expected = static_cast<long long>(inst.terminals.size()) + 1;
    if (index != expected)
      throw ParseError(lineno, "terminal sets must appear in order (expected T_" +
                                   std::to_string(expected) + ", got T_" +
                                   std::to_string(index) + ")");
    std::string name = "T_" + std::to_string(index);
    std::vector<int> t_set;
    for (size_t k = 2; k < toks.size(); ++k) {
      long long v = parse_int(toks[k], lineno, "terminal vertex");
      if (v < 1 || v > inst.g.num_vertices())
        throw ParseError(lineno, name + " has a vertex out of range 1.." +
                                     std::to_string(inst.g.num_vertices()));
      t_set.push_back(static_cast<int>(v));
    }
    std::sort(t_set.begin(), t_set.end());
    if (std::adjacent_find(t_set.begin(), t_set.end()) != t_set.end())
      throw ParseError(lineno, name + " has a repeated vertex");
    if (t_set.size() % 2 != 0)
      throw ParseError(lineno, name + " has odd cardinality");
    inst.terminals.push_back(std::move(t_set));
    sc.advance();
  }
  if (inst.terminals.size() > 20)
    throw ParseError(sc.eof_line(), "at most 20 terminal sets are supported");
  evencut::validate(inst);
  return inst;
}

std::string write_evencut_set(const evencut::SetEvenCutInstance& inst) {
  std::string out = "evencut-set\n";
  write_graph_block(&out, inst.g, {});
  for (size_t i = 0; i < inst.terminals.size(); ++i) {
    out += "T " + std::to_string(i + 1);
    for (int v : inst.terminals[i]) out += " " + std::to_string(v);
    out += '\n';
  }
  return out;
}

evencut::EvenCutInstance parse_evencut_dim(const std::string& text) {
  Scanner sc(text);
  int head_line = 0;
  std::vector<std::string> head =
      sc.take_or_fail("'evencut-dim t=<t>'", &head_line);
  if (head[0] != "evencut-dim" || head.size() != 2)
    throw ParseError(head_line, "expected the header 'evencut-dim t=<t>'");
  long long t = parse_keyed(head[1], head_line, "t", 20);
  GraphBlock block = parse_graph_block(sc, kAllowS);

  evencut::EvenCutInstance inst;
  inst.t = static_cast<int>(t);
  inst.tau.assign(static_cast<size_t>(block.g.num_vertices()) + 1, 0);
  for (int i = 0; i < block.g.num_edges(); ++i)
    if (block.sigma[static_cast<size_t>(i)])
      inst.sigma.push_back(block.g.edge_at(i).id);
  std::sort(inst.sigma.begin(), inst.sigma.end());

  std::vector<char> tau_seen(static_cast<size_t>(block.g.num_vertices()) + 1, 0);
  std::optional<std::string> alpha_bits;
  std::vector<std::string> toks;
  int lineno = 0;
  while (sc.peek(&toks, &lineno)) {
    if (toks[0] == "tau") {
      if (toks.size() != 3 && !(toks.size() == 2 && t == 0))
        throw ParseError(lineno, "expected 'tau <vertex> <bits>'");
      long long v = parse_int(toks[1], lineno, "tau vertex");
      if (v < 1 || v > block.g.num_vertices())
        throw ParseError(lineno, "tau vertex out of range 1.." +
                                     std::to_string(block.g.num_vertices()));
      if (tau_seen[static_cast<size_t>(v)])
        throw ParseError(lineno,
                         "tau for vertex " + std::to_string(v) + " is given twice");
      tau_seen[static_cast<size_t>(v)] = 1;
      std::string bits = toks.size() == 3 ? toks[2] : std::string();
      int len = 0;
      ParityVec value = parse_bits(bits, lineno, "tau", &len);
      if (len != t)
        throw ParseError(lineno, "tau needs exactly " + std::to_string(t) +
                                     " parity bits");
      inst.tau[static_cast<size_t>(v)] = value;
    } else if (toks[0] == "alpha") {
      if (alpha_bits)
        throw ParseError(lineno, "the alpha line is given twice");
      if (toks.size() > 2)
        throw ParseError(lineno, "expected 'alpha <bits>'");
      std::string bits = toks.size() == 2 ? toks[1] : std::string();
      int len = 0;
      inst.alpha = parse_bits(bits, lineno, "alpha", &len);
      if (len != t)
        throw ParseError(lineno, "alpha needs exactly " + std::to_string(t) +
                                     " parity bits");
      alpha_bits = bits;
    } else {
      throw ParseError(lineno, "unrecognized line '" + toks[0] + "'");
    }
    sc.advance();
  }
  inst.g = std::move(block.g);
  evencut::validate(inst);
  return inst;
}

std::string write_evencut_dim(const evencut::EvenCutInstance& inst) {
  std::string out = "evencut-dim t=" + std::to_string(inst.t) + "\n";
  std::set<int> sigma(inst.sigma.begin(), inst.sigma.end());
  std::vector<EdgeAttrText> attrs(static_cast<size_t>(inst.g.num_edges()));
  for (size_t i = 0; i < attrs.size(); ++i)
    attrs[i].sigma = sigma.count(inst.g.edge_at(static_cast<int>(i)).id) != 0;
  write_graph_block(&out, inst.g, attrs);
  for (int v = 1; v <= inst.g.num_vertices(); ++v)
    if (inst.tau[static_cast<size_t>(v)] != 0)
      out += "tau " + std::to_string(v) + " " +
             parity_to_string(inst.tau[static_cast<size_t>(v)], inst.t) + "\n";
  if (inst.t > 0)
    out += "alpha " + parity_to_string(inst.alpha, inst.t) + "\n";
  return out;
}

graft::SignedGraft parse_graft(const std::string& text) {
  Scanner sc(text);
  int head_line = 0;
  std::vector<std::string> head =
      sc.take_or_fail("'graft s=<s> t=<t>'", &head_line);
  if (head[0] != "graft" || head.size() != 3)
    throw ParseError(head_line, "expected the header 'graft s=<s> t=<t>'");
  long long s = parse_keyed(head[1], head_line, "s", 20);
  long long t = parse_keyed(head[2], head_line, "t", 20);
  GraphBlock block = parse_graph_block(sc, 0);

  graft::SignedGraft sg;
  sg.s = static_cast<int>(s);
  sg.t = static_cast<int>(t);
  const int n = block.g.num_vertices();
  const int m = block.g.num_edges();
  sg.g = std::move(block.g);

  struct Expect {
    const char* name;
    int rows, cols;
    const char* shape;
    gf2::Matrix* dst;
  };
  Expect blocks[3] = {
      {"B", n, static_cast<int>(t), "vertices x t", &sg.b},
      {"C", static_cast<int>(s), m, "s x edges", &sg.c},
      {"D", static_cast<int>(s), static_cast<int>(t), "s x t", &sg.d},
  };
  for (const Expect& want : blocks) {
    int lineno = 0;
    std::vector<std::string> peeked;
    if (!sc.peek(&peeked, &lineno)) lineno = sc.eof_line();
    gf2::Matrix got = parse_matrix_block(sc);
    if (got.rows() != want.rows || got.cols() != want.cols)
      throw ParseError(lineno, std::string("the ") + want.name +
                                   " block must be " +
                                   std::to_string(want.rows) + " x " +
                                   std::to_string(want.cols) + " (" +
                                   want.shape + ")");
    *want.dst = got;
  }
  sc.expect_eof();
  graft::validate(sg);
  return sg;
}

std::string write_graft(const graft::SignedGraft& sg) {
  std::string out = "graft s=" + std::to_string(sg.s) +
                    " t=" + std::to_string(sg.t) + "\n";
  write_graph_block(&out, sg.g, {});
  write_matrix_block(&out, sg.b);
  write_matrix_block(&out, sg.c);
  write_matrix_block(&out, sg.d);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace matgirth::io
