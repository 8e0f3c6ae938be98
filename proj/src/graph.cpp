#include "matgirth/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace matgirth::graph {

MultiGraph::MultiGraph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("MultiGraph: negative vertex count");
}

void MultiGraph::add_edge(int id, int u, int v) {
  if (u < 1 || u > n_ || v < 1 || v > n_)
    throw std::invalid_argument("add_edge: endpoint out of range");
  if (pos_by_id_.count(id))
    throw std::invalid_argument("add_edge: duplicate edge id " +
                                std::to_string(id));
  pos_by_id_[id] = static_cast<int>(edges_.size());
  edges_.push_back({id, u, v});
}

int MultiGraph::add_edge(int u, int v) {
  int id = 0;
  while (pos_by_id_.count(id)) ++id;
  add_edge(id, u, v);
  return id;
}

const Edge& MultiGraph::edge_by_id(int id) const {
  auto it = pos_by_id_.find(id);
  if (it == pos_by_id_.end())
    throw std::invalid_argument("edge_by_id: unknown id " + std::to_string(id));
  return edges_[static_cast<size_t>(it->second)];
}

int MultiGraph::pos_of_id(int id) const {
  auto it = pos_by_id_.find(id);
  return it == pos_by_id_.end() ? -1 : it->second;
}

int MultiGraph::degree(int v) const {
  int d = 0;
  for (const Edge& e : edges_) {
    if (e.u == v) ++d;
    if (e.v == v) ++d;
  }
  return d;
}

std::vector<int> MultiGraph::component_of() const {
  std::vector<int> comp(static_cast<size_t>(n_) + 1, 0);
  std::vector<std::vector<int>> adj(static_cast<size_t>(n_) + 1);
  for (const Edge& e : edges_)
    if (!e.is_loop()) {
      adj[static_cast<size_t>(e.u)].push_back(e.v);
      adj[static_cast<size_t>(e.v)].push_back(e.u);
    }
  int next = 0;
  for (int s = 1; s <= n_; ++s) {
    if (comp[static_cast<size_t>(s)] != 0) continue;
    comp[static_cast<size_t>(s)] = ++next;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<size_t>(v)])
        if (comp[static_cast<size_t>(w)] == 0) {
          comp[static_cast<size_t>(w)] = next;
          stack.push_back(w);
        }
    }
  }
  return comp;
}

int MultiGraph::num_components() const {
  auto comp = component_of();
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end());
}

bool MultiGraph::is_connected() const { return num_components() <= 1; }

std::vector<int> MultiGraph::delta(const std::vector<int>& x) const {
  std::vector<char> in(static_cast<size_t>(n_) + 1, 0);
  for (int v : x) {
    if (v < 1 || v > n_) throw std::invalid_argument("delta: bad vertex");
    in[static_cast<size_t>(v)] = 1;
  }
  std::vector<int> out;
  for (const Edge& e : edges_)
    if (in[static_cast<size_t>(e.u)] != in[static_cast<size_t>(e.v)])
      out.push_back(e.id);
  std::sort(out.begin(), out.end());
  return out;
}

gf2::MatroidRep MultiGraph::incidence() const {
  gf2::Matrix a(n_, num_edges());
  std::vector<int> labels;
  labels.reserve(edges_.size());
  for (size_t j = 0; j < edges_.size(); ++j) {
    const Edge& e = edges_[j];
    if (!e.is_loop()) {
      a.set(e.u - 1, static_cast<int>(j), true);
      a.set(e.v - 1, static_cast<int>(j), true);
    }
    labels.push_back(e.id);
  }
  return gf2::MatroidRep(std::move(a), std::move(labels));
}

Contraction MultiGraph::contract_edge(int edge_id) const {
  const Edge& e = edge_by_id(edge_id);
  if (e.is_loop())
    throw std::invalid_argument("contract_edge: cannot contract a loop");
  int keep = std::min(e.u, e.v), gone = std::max(e.u, e.v);
  std::vector<int> vmap(static_cast<size_t>(n_) + 1, 0);
  for (int v = 1; v <= n_; ++v) {
    if (v == gone)
      vmap[static_cast<size_t>(v)] = keep;
    else
      vmap[static_cast<size_t>(v)] = v > gone ? v - 1 : v;
  }
  MultiGraph g(n_ - 1);
  for (const Edge& f : edges_)
    if (f.id != edge_id)
      g.add_edge(f.id, vmap[static_cast<size_t>(f.u)],
                 vmap[static_cast<size_t>(f.v)]);
  return {std::move(g), std::move(vmap)};
}

MultiGraph graph_from_incidence(const gf2::MatroidRep& rep) {
  MultiGraph g(rep.a.rows());
  for (int c = 0; c < rep.a.cols(); ++c) {
    std::vector<int> ends;
    for (int r = 0; r < rep.a.rows(); ++r)
      if (rep.a.get(r, c)) ends.push_back(r + 1);
    int id = rep.ground[static_cast<size_t>(c)];
    if (ends.empty()) {
      if (rep.a.rows() == 0)
        throw std::invalid_argument("graph_from_incidence: loop needs a vertex");
      g.add_edge(id, 1, 1);
    } else if (ends.size() == 2) {
      g.add_edge(id, ends[0], ends[1]);
    } else {
      throw std::invalid_argument(
          "graph_from_incidence: column weight must be 0 or 2");
    }
  }
  return g;
}

}  // namespace matgirth::graph
