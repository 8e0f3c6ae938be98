#pragma once

#include <map>
#include <vector>

#include "matgirth/common.hpp"
#include "matgirth/gf2.hpp"

namespace matgirth::graph {

// Vertices are 1..n.  Edges carry stable integer ids that survive minors;
// loops (u == v) are allowed first-class citizens.
struct Edge {
  int id;
  int u, v;
  bool is_loop() const { return u == v; }
};

struct Contraction;

class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int n);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge_at(int pos) const { return edges_[static_cast<size_t>(pos)]; }

  // Throws std::invalid_argument on out-of-range endpoints or duplicate ids.
  void add_edge(int id, int u, int v);
  int add_edge(int u, int v);  // picks the smallest unused id, returns it

  bool has_edge_id(int id) const { return pos_by_id_.count(id) != 0; }
  const Edge& edge_by_id(int id) const;
  int pos_of_id(int id) const;  // -1 if absent

  int degree(int v) const;  // endpoint count; a loop contributes two

  // Component labels 1..k in order of first appearance by lowest vertex;
  // entry 0 is unused.  Isolated vertices are their own (trivial) components.
  std::vector<int> component_of() const;
  int num_components() const;
  bool is_connected() const;  // true for n <= 1

  // Sorted ids of non-loop edges with exactly one endpoint in x.
  std::vector<int> delta(const std::vector<int>& x) const;

  // Rows = vertices 1..n, columns = edges in insertion order, column labels =
  // edge ids.  A loop yields a zero column.
  gf2::MatroidRep incidence() const;

  // Contract a non-loop edge: endpoints merge into min(u, v), higher vertex
  // numbers shift down by one, all other edges keep their ids (edges between
  // the merged endpoints become loops).
  Contraction contract_edge(int edge_id) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::map<int, int> pos_by_id_;
};

// Result of contract_edge: vertex_map[old] = new, entry 0 unused.
struct Contraction {
  MultiGraph g;
  std::vector<int> vertex_map;
};

// Inverse of MultiGraph::incidence.  Columns must have zero or two ones; a
// zero column becomes a loop at vertex 1.  Column labels become edge ids.
MultiGraph graph_from_incidence(const gf2::MatroidRep& rep);

}  // namespace matgirth::graph
