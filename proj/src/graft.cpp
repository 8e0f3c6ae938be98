#include "matgirth/graft.hpp"

#include <stdexcept>

namespace matgirth::graft {

void validate(const SignedGraft& sg) {
  const int n = sg.g.num_vertices();
  const int m = sg.g.num_edges();
  if (sg.s < 0 || sg.t < 0)
    throw std::invalid_argument("signed graft: negative block size");
  if (sg.b.rows() != n || sg.b.cols() != sg.t)
    throw std::invalid_argument("signed graft: B must be |V| x t");
  if (sg.c.rows() != sg.s || sg.c.cols() != m)
    throw std::invalid_argument("signed graft: C must be s x |E|");
  if (sg.d.rows() != sg.s || sg.d.cols() != sg.t)
    throw std::invalid_argument("signed graft: D must be s x t");
}

std::vector<int> t_column_labels(int t) {
  return evencut::parity_column_labels(t);
}

gf2::MatroidRep graft_incidence(const SignedGraft& sg) {
  validate(sg);
  gf2::MatroidRep inc = sg.g.incidence();
  gf2::Matrix top = sg.c.append_cols(sg.d);
  gf2::Matrix bottom = inc.a.append_cols(sg.b);
  std::vector<int> labels = inc.ground;
  for (int lbl : t_column_labels(sg.t)) labels.push_back(lbl);
  return {top.append_rows(bottom), std::move(labels)};
}

gf2::MatroidRep contracted_rep(const SignedGraft& sg) {
  return gf2::contract_delete(graft_incidence(sg), t_column_labels(sg.t), {});
}

SignedGraft from_perturbation(const graph::MultiGraph& g,
                              const gf2::Matrix& p) {
  if (p.rows() != g.num_vertices() || p.cols() != g.num_edges())
    throw std::invalid_argument("perturbation must be |V| x |E|");
  gf2::LowRankFactors f = gf2::factor_low_rank(p);
  SignedGraft sg;
  sg.g = g;
  sg.t = f.c.rows();
  sg.s = sg.t;
  sg.b = f.b;
  sg.c = f.c;
  sg.d = gf2::Matrix::identity(sg.t);  // -I over GF(2)
  return sg;
}

std::vector<SignedGraft> reduce_s(const SignedGraft& sg) {
  validate(sg);
  if (sg.s > 20) throw std::invalid_argument("too many C rows to enumerate");
  std::vector<SignedGraft> out;
  const int m = sg.g.num_edges();
  for (std::uint32_t y = 0; y < (1u << sg.s); ++y) {
    SignedGraft r;
    r.g = sg.g;
    r.s = 1;
    r.t = sg.t;
    r.b = sg.b;
    r.c = gf2::Matrix(1, m);
    r.d = gf2::Matrix(1, sg.t);
    gf2::Vec crow(m), drow(sg.t);
    for (int i = 0; i < sg.s; ++i)
      if (y >> i & 1u) {
        crow.xor_with(sg.c.row(i));
        drow.xor_with(sg.d.row(i));
      }
    r.c.set_row(0, crow);
    r.d.set_row(0, drow);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<SignedGraft> reduce_t(const SignedGraft& sg) {
  validate(sg);
  if (sg.t > 20) throw std::invalid_argument("too many T columns to enumerate");
  std::vector<SignedGraft> out;
  const int n = sg.g.num_vertices();
  for (std::uint32_t x = 0; x < (1u << sg.t); ++x) {
    SignedGraft r;
    r.g = sg.g;
    r.s = sg.s;
    r.t = 1;
    r.c = sg.c;
    r.b = gf2::Matrix(n, 1);
    r.d = gf2::Matrix(sg.s, 1);
    for (int j = 0; j < sg.t; ++j)
      if (x >> j & 1u) {
        for (int v = 0; v < n; ++v)
          if (sg.b.get(v, j)) r.b.set(v, 0, !r.b.get(v, 0));
        for (int i = 0; i < sg.s; ++i)
          if (sg.d.get(i, j)) r.d.set(i, 0, !r.d.get(i, 0));
      }
    out.push_back(std::move(r));
  }
  return out;
}

evencut::EvenCutInstance to_evencut(const SignedGraft& sg) {
  validate(sg);
  if (sg.s != 1)
    throw std::invalid_argument("even-cut conversion needs exactly one C row");
  if (sg.t > 20) throw std::invalid_argument("too many T columns to pack");
  const int n = sg.g.num_vertices();
  evencut::EvenCutInstance inst;
  inst.g = sg.g;
  inst.t = sg.t;
  inst.tau.assign(static_cast<size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v)
    for (int j = 0; j < sg.t; ++j)
      if (sg.b.get(v - 1, j))
        inst.tau[static_cast<size_t>(v)] |= ParityVec{1} << j;
  for (int j = 0; j < sg.t; ++j)
    if (sg.d.get(0, j)) inst.alpha |= ParityVec{1} << j;
  for (int e = 0; e < sg.g.num_edges(); ++e)
    if (sg.c.get(0, e)) inst.sigma.push_back(sg.g.edge_at(e).id);
  std::sort(inst.sigma.begin(), inst.sigma.end());
  return inst;
}

}  // namespace matgirth::graft
