#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "upg/units.hpp"

namespace upg {

using Vertex = std::size_t;
using Bitset = boost::dynamic_bitset<std::uint64_t>;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected loop-free graph with packed adjacency rows.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  /// Edges may be given in any orientation; duplicates are merged. Throws
  /// std::invalid_argument on loops or out-of-range endpoints.
  SimpleGraph(std::size_t n, const std::vector<Edge>& edges, std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return rows_.size(); }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const Bitset& neighbors(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return rows_[v].count(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  /// All edges (u, v) with u < v in ascending order.
  std::vector<Edge> edges() const;
  const std::string& label(Vertex v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Subgraph induced by `vertices` (kept in the given order).
  SimpleGraph induced(const std::vector<Vertex>& vertices) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.rows_ == b.rows_ && a.labels_ == b.labels_;
  }

 private:
  friend SimpleGraph complement(const SimpleGraph& g);
  std::vector<Bitset> rows_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

/// Components of g as an s·K1 ∪ t·K2 union.
struct StructureDecomposition {
  std::size_t s = 0;
  std::size_t t = 0;
  bool valid = false;
};

struct MultipartiteProfile {
  std::vector<std::size_t> part_sizes;  // descending
  bool valid = false;
};

/// Γ'(R): vertices are units (ascending element index), edge {x,y} iff x ≠ y
/// and x·y = e.
SimpleGraph unity_product_graph(const UnitGroup& ug);
SimpleGraph complement(const SimpleGraph& g);

StructureDecomposition decompose_matching_structure(const SimpleGraph& g);
/// Valid iff the complement of g is a disjoint union of cliques.
MultipartiteProfile recognize_complete_multipartite(const SimpleGraph& g);

std::string export_dot(const SimpleGraph& g, std::string_view name = "G");
/// {"n": .., "labels": [..], "edges": [[u,v], ..]}
std::string export_json(const SimpleGraph& g);
SimpleGraph import_json(std::string_view text);

SimpleGraph make_complete(std::size_t n);
SimpleGraph make_path(std::size_t n);
SimpleGraph make_cycle(std::size_t n);
SimpleGraph make_complete_multipartite(const std::vector<std::size_t>& parts);

}  // namespace upg
