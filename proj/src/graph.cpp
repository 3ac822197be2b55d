#include "upg/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace upg {

SimpleGraph::SimpleGraph(std::size_t n, const std::vector<Edge>& edges,
                         std::vector<std::string> labels)
    : rows_(n, Bitset(n)), labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_.reserve(n);
    for (std::size_t v = 0; v < n; ++v) labels_.push_back(std::to_string(v));
  }
  if (labels_.size() != n) throw std::invalid_argument("label count does not match vertex count");
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    rows_[u].set(v);
    rows_[v].set(u);
  }
  for (const auto& r : rows_) edge_count_ += r.count();
  edge_count_ /= 2;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < size(); ++u)
    for (auto v = rows_[u].find_next(u); v != Bitset::npos; v = rows_[u].find_next(v))
      out.emplace_back(u, v);
  return out;
}

SimpleGraph SimpleGraph::induced(const std::vector<Vertex>& vs) const {
  std::vector<Edge> es;
  std::vector<std::string> ls;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    ls.push_back(labels_[vs[i]]);
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (adjacent(vs[i], vs[j])) es.emplace_back(i, j);
  }
  return SimpleGraph(vs.size(), es, std::move(ls));
}

SimpleGraph unity_product_graph(const UnitGroup& ug) {
  const auto& us = ug.elements();
  std::vector<std::string> labels;
  labels.reserve(us.size());
  for (Element x : us) labels.push_back(ug.ring().element_name(x));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < us.size(); ++i) {
    const Element inv = ug.inverse_of(us[i]);
    if (inv > us[i]) edges.emplace_back(i, *ug.position(inv));
  }
  return SimpleGraph(us.size(), edges, std::move(labels));
}

SimpleGraph complement(const SimpleGraph& g) {
  SimpleGraph c;
  const std::size_t n = g.size();
  c.labels_ = g.labels_;
  c.rows_.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    Bitset r = ~g.rows_[v];
    r.reset(v);
    c.rows_.push_back(std::move(r));
  }
  c.edge_count_ = n * (n > 0 ? n - 1 : 0) / 2 - g.edge_count_;
  return c;
}

StructureDecomposition decompose_matching_structure(const SimpleGraph& g) {
  StructureDecomposition d;
  for (Vertex v = 0; v < g.size(); ++v) {
    const auto deg = g.degree(v);
    if (deg == 0) ++d.s;
    else if (deg == 1) {
      const Vertex w = g.neighbors(v).find_first();
      if (g.degree(w) != 1) return {};
      if (v < w) ++d.t;
    } else {
      return {};
    }
  }
  d.valid = true;
  return d;
}

MultipartiteProfile recognize_complete_multipartite(const SimpleGraph& g) {
  // Non-adjacency must be an equivalence relation: each vertex's closed
  // non-neighborhood is its part, and parts must coincide across members.
  const std::size_t n = g.size();
  MultipartiteProfile p;
  std::vector<bool> seen(n, false);
  for (Vertex v = 0; v < n; ++v) {
    if (seen[v]) continue;
    Bitset part = ~g.neighbors(v);
    std::size_t size = 0;
    for (auto w = part.find_first(); w != Bitset::npos; w = part.find_next(w)) {
      Bitset other = ~g.neighbors(w);
      if (other != part) return {};
      seen[w] = true;
      ++size;
    }
    p.part_sizes.push_back(size);
  }
  std::sort(p.part_sizes.begin(), p.part_sizes.end(), std::greater<>());
  p.valid = true;
  return p;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string export_dot(const SimpleGraph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.size(); ++v)
    os << "  " << v << " [label=\"" << dot_escape(g.label(v)) << "\"];\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string export_json(const SimpleGraph& g) {
  nlohmann::ordered_json doc;
  doc["n"] = g.size();
  doc["labels"] = g.labels();
  auto edges = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

SimpleGraph import_json(std::string_view text) {
  try {
    auto doc = nlohmann::json::parse(text);
    const auto n = doc.at("n").get<std::size_t>();
    std::vector<std::string> labels;
    if (doc.contains("labels")) labels = doc.at("labels").get<std::vector<std::string>>();
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    return SimpleGraph(n, edges, std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("graph JSON: ") + e.what());
  }
}

SimpleGraph make_complete(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return SimpleGraph(n, es);
}

SimpleGraph make_path(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v) es.emplace_back(v - 1, v);
  return SimpleGraph(n, es);
}

SimpleGraph make_cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (Vertex v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
  return SimpleGraph(n, es);
}

SimpleGraph make_complete_multipartite(const std::vector<std::size_t>& parts) {
  std::vector<std::size_t> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) part_of.insert(part_of.end(), parts[i], i);
  std::vector<Edge> es;
  for (Vertex u = 0; u < part_of.size(); ++u)
    for (Vertex v = u + 1; v < part_of.size(); ++v)
      if (part_of[u] != part_of[v]) es.emplace_back(u, v);
  return SimpleGraph(part_of.size(), es);
}

}  // namespace upg
