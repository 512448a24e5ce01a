#include "graph.hpp"

#include <algorithm>
#include <map>

namespace shufsq {

OrderedMultigraph::OrderedMultigraph(std::vector<GraphVertex> vertices,
                                     std::vector<GraphEdge> edges)
    : vertices_(std::move(vertices)) {
  const int m = static_cast<int>(vertices_.size());
  std::map<std::pair<int, int>, int> coalesced;
  for (const GraphEdge& e : edges) {
    if (e.p < 0 || e.q < 0 || e.p >= m || e.q >= m)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.multiplicity < 1) throw std::invalid_argument("edge multiplicity must be positive");
    int p = std::min(e.p, e.q), q = std::max(e.p, e.q);
    if (vertices_[static_cast<size_t>(p)].letter_class !=
        vertices_[static_cast<size_t>(q)].letter_class)
      throw std::invalid_argument("edges must join vertices of the same letter class");
    coalesced[{p, q}] += e.multiplicity;
  }
  edges_.reserve(coalesced.size());
  for (const auto& [pq, mu] : coalesced) edges_.push_back(GraphEdge{pq.first, pq.second, mu});
  for (int v = 0; v < m; ++v) {
    if (vertices_[static_cast<size_t>(v)].capacity < 1)
      throw std::invalid_argument("vertex capacity must be positive");
    if (degree(v) > vertices_[static_cast<size_t>(v)].capacity)
      throw std::invalid_argument("degree exceeds capacity at vertex " + std::to_string(v + 1));
  }
}

int OrderedMultigraph::degree(int v) const {
  int d = 0;
  for (const GraphEdge& e : edges_) {
    if (e.p == v) d += e.multiplicity;
    if (e.q == v) d += e.multiplicity;  // a loop counts twice
  }
  return d;
}

int OrderedMultigraph::right_degree(int v) const {
  int d = 0;
  for (const GraphEdge& e : edges_)
    if (e.p == v) d += e.multiplicity;
  return d;
}

int OrderedMultigraph::left_degree(int v) const {
  int d = 0;
  for (const GraphEdge& e : edges_)
    if (e.q == v) d += e.multiplicity;
  return d;
}

long long OrderedMultigraph::total_degree() const {
  long long d = 0;
  for (const GraphEdge& e : edges_) d += 2LL * e.multiplicity;
  return d;
}

std::optional<NestWitness> find_nest(const OrderedMultigraph& g) {
  // A nest is exactly a strict containment: p_e < p_f <= q_f < q_e forces
  // all four endpoints distinct, so the disjointness clause is implied.
  // Edges are sorted by (p, q); sweep keeping the widest edge seen among
  // strictly smaller left endpoints.
  const auto& edges = g.edges();
  std::optional<GraphEdge> widest;
  size_t i = 0;
  while (i < edges.size()) {
    size_t j = i;
    while (j < edges.size() && edges[j].p == edges[i].p) ++j;
    if (widest) {
      for (size_t t = i; t < j; ++t)
        if (edges[t].q < widest->q) return NestWitness{*widest, edges[t]};
    }
    for (size_t t = i; t < j; ++t)
      if (!widest || edges[t].q > widest->q) widest = edges[t];
    i = j;
  }
  return std::nullopt;
}

OrderedMultigraph graph_from_twins(const Twins& tw) {
  if (auto rep = validate(tw); !rep.ok)
    throw std::invalid_argument("graph_from_twins requires valid twins: " + rep.message);
  if (!is_canonical(tw))
    throw std::invalid_argument("graph_from_twins requires canonical twins");
  auto rl = runs(tw.word);
  std::vector<int> run_of(tw.word.size());
  std::vector<GraphVertex> vertices;
  size_t pos = 0;
  for (size_t h = 0; h < rl.run_count(); ++h) {
    vertices.push_back(GraphVertex{rl[h].symbol, rl[h].length});
    for (int c = 0; c < rl[h].length; ++c) run_of[pos++] = static_cast<int>(h);
  }
  std::vector<GraphEdge> edges;
  for (size_t h = 0; h < tw.length(); ++h)
    edges.push_back(GraphEdge{run_of[static_cast<size_t>(tw.x_support[h])],
                              run_of[static_cast<size_t>(tw.y_support[h])], 1});
  return OrderedMultigraph(std::move(vertices), std::move(edges));
}

Twins twins_from_graph(const OrderedMultigraph& g, const RunLengthWord& word) {
  if (g.vertex_count() != word.run_count())
    throw std::invalid_argument("vertex count does not match run count");
  for (size_t h = 0; h < word.run_count(); ++h) {
    const auto& v = g.vertices()[h];
    if (v.letter_class != word[h].symbol)
      throw std::invalid_argument("letter class mismatch at vertex " + std::to_string(h + 1));
    if (v.capacity != word[h].length)
      throw std::invalid_argument("capacity mismatch at vertex " + std::to_string(h + 1));
    if (g.degree(static_cast<int>(h)) > v.capacity)
      throw std::invalid_argument("degree exceeds capacity at vertex " + std::to_string(h + 1));
  }
  if (find_nest(g)) throw std::invalid_argument("graph contains a nest");
  Twins out;
  out.word = word.to_word();
  size_t pos = 0;
  for (size_t h = 0; h < word.run_count(); ++h) {
    int r = g.right_degree(static_cast<int>(h));
    int l = g.left_degree(static_cast<int>(h));
    for (int c = 0; c < r; ++c) out.x_support.push_back(static_cast<int>(pos) + c);
    for (int c = 0; c < l; ++c) out.y_support.push_back(static_cast<int>(pos) + r + c);
    pos += static_cast<size_t>(word[h].length);
  }
  if (auto rep = validate(out); !rep.ok)
    throw std::invalid_argument("graph does not decode to twins: " + rep.message);
  return out;
}

std::string export_dot(const OrderedMultigraph& g) {
  std::string out = "graph shufsq {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (size_t v = 0; v < g.vertex_count(); ++v) {
    out += "  u" + std::to_string(v + 1) + " [label=\"u" + std::to_string(v + 1) + "(" +
           std::to_string(g.vertices()[v].capacity) + ")\" class=\"c" +
           std::to_string(g.vertices()[v].letter_class) + "\"];\n";
  }
  for (size_t v = 0; v + 1 < g.vertex_count(); ++v)
    out += "  u" + std::to_string(v + 1) + " -- u" + std::to_string(v + 2) +
           " [style=invis];\n";
  for (const GraphEdge& e : g.edges())
    out += "  u" + std::to_string(e.p + 1) + " -- u" + std::to_string(e.q + 1) + " [label=\"" +
           std::to_string(e.multiplicity) + "\" constraint=false];\n";
  out += "}\n";
  return out;
}

std::string export_json(const OrderedMultigraph& g) {
  std::string out = "{\"vertices\":[";
  for (size_t v = 0; v < g.vertex_count(); ++v) {
    if (v) out.push_back(',');
    out += "{\"class\":" + std::to_string(g.vertices()[v].letter_class) +
           ",\"capacity\":" + std::to_string(g.vertices()[v].capacity) + "}";
  }
  out += "],\"edges\":[";
  for (size_t i = 0; i < g.edges().size(); ++i) {
    if (i) out.push_back(',');
    const GraphEdge& e = g.edges()[i];
    out += "{\"p\":" + std::to_string(e.p) + ",\"q\":" + std::to_string(e.q) +
           ",\"mu\":" + std::to_string(e.multiplicity) + "}";
  }
  out += "]}";
  return out;
}

}  // namespace shufsq
