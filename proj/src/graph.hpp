#ifndef SHUFSQ_GRAPH_HPP
#define SHUFSQ_GRAPH_HPP

#include <optional>
#include <string>
#include <vector>

#include "twins.hpp"
#include "word.hpp"

namespace shufsq {

struct GraphVertex {
  uint8_t letter_class = 0;
  int capacity = 1;
  bool operator==(const GraphVertex&) const = default;
};

struct GraphEdge {
  int p = 0;  // p <= q; p == q is a loop
  int q = 0;
  int multiplicity = 1;
  bool operator==(const GraphEdge&) const = default;
};

/// A graph on linearly ordered vertices with loops and edge multiplicities.
/// Every edge joins vertices of the same letter class and no vertex degree
/// may exceed its capacity (a loop contributes 2 to the degree).
class OrderedMultigraph {
 public:
  OrderedMultigraph() = default;
  OrderedMultigraph(std::vector<GraphVertex> vertices, std::vector<GraphEdge> edges);

  size_t vertex_count() const { return vertices_.size(); }
  const std::vector<GraphVertex>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }

  int degree(int v) const;
  int right_degree(int v) const;  // edges leaving v rightward; a loop adds 1
  int left_degree(int v) const;
  long long total_degree() const;

  bool operator==(const OrderedMultigraph&) const = default;

 private:
  std::vector<GraphVertex> vertices_;
  std::vector<GraphEdge> edges_;  // sorted by (p, q), coalesced
};

struct NestWitness {
  GraphEdge outer;
  GraphEdge inner;
};

/// Any nest (an edge strictly containing a vertex-disjoint edge or loop),
/// or nullopt when the graph is nest-free.
std::optional<NestWitness> find_nest(const OrderedMultigraph& g);

/// The contraction of the position matching of canonical twins by runs:
/// vertex h carries the letter class and capacity of run U_h, and pairs
/// (x[h], y[h]) become edges between their runs. Rejects non-canonical
/// input. The result is nest-free with deg(u_h) = |supp(U_h) n supp(X,Y)|.
OrderedMultigraph graph_from_twins(const Twins& tw);

/// Reconstructs canonical twins from a nest-free graph whose vertices
/// match the word's runs: from run U_h the first right-degree positions go
/// to X, the next left-degree positions to Y, the rest are gaps.
Twins twins_from_graph(const OrderedMultigraph& g, const RunLengthWord& word);

/// Deterministic Graphviz output: vertices in linear order with capacity
/// labels, edge labels carry multiplicities, loops rendered as self-edges.
std::string export_dot(const OrderedMultigraph& g);

/// {"vertices":[{"class":..,"capacity":..}],"edges":[{"p":..,"q":..,"mu":..}]}
std::string export_json(const OrderedMultigraph& g);

}  // namespace shufsq

#endif
