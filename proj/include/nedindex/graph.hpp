#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace nedindex {

using VertexId = std::uint32_t;

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Vertices are dense ids 0..n-1. Each vertex keeps the label it was
/// created from (the token in the input file, or a generator-chosen name).
/// Neighbor lists are sorted and free of self-loops and duplicates, so
/// degree(v) == neighbors(v).size() and the degree sum is 2 * edge_count().
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return degrees_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const VertexId> neighbors(VertexId v) const;
  std::uint32_t degree(VertexId v) const;
  std::span<const std::uint32_t> degrees() const noexcept { return degrees_; }
  bool has_edge(VertexId u, VertexId v) const;

  const std::string& label(VertexId v) const;
  std::optional<VertexId> find(std::string_view label) const;

  /// Every edge once, as (u, v) with u < v, in increasing (u, v) order.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

 private:
  friend class GraphBuilder;

  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> adjacency_;
  std::vector<std::uint32_t> degrees_;
  std::size_t edge_count_ = 0;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
};

/// Accumulates labelled vertices and edges; densifies labels in
/// first-appearance order, drops self-loops and collapses duplicates.
class GraphBuilder {
 public:
  VertexId add_vertex(std::string_view label);
  void add_edge(std::string_view u, std::string_view v);
  void add_edge(VertexId u, VertexId v);

  std::size_t vertex_count() const noexcept { return labels_.size(); }

  Graph build() &&;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
};

/// Builds a graph from a labelled edge list. A vertex_hint of n declares the
/// labels "0".."n-1" up front, so numeric ids below n keep their value and
/// isolated vertices among them survive.
Graph build_graph(std::span<const std::pair<std::string, std::string>> edges,
                  std::optional<std::size_t> vertex_hint = std::nullopt);
Graph build_graph(std::span<const std::pair<std::int64_t, std::int64_t>> edges,
                  std::optional<std::size_t> vertex_hint = std::nullopt);

/// Twice the edge count, which is also the degree sum.
std::uint64_t total_degree(const Graph& g) noexcept;

/// Sum of full-graph degrees over a vertex set (its volume). Throws
/// kInvalidVertex for ids outside the graph.
std::uint64_t degree_sum_over(const Graph& g, std::span<const VertexId> vertices);

}  // namespace nedindex
