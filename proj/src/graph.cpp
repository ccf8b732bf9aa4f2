#include "nedindex/graph.hpp"

#include <algorithm>
#include <numeric>

#include "nedindex/error.hpp"

namespace nedindex {

namespace {

void check_vertex(const Graph& g, VertexId v) {
  if (v >= g.vertex_count()) {
    throw Error(ErrorCode::kInvalidVertex,
                "vertex " + std::to_string(v) + " not in graph of " +
                    std::to_string(g.vertex_count()) + " vertices");
  }
}

}  // namespace

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  check_vertex(*this, v);
  return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
}

std::uint32_t Graph::degree(VertexId v) const {
  check_vertex(*this, v);
  return degrees_[v];
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto adj = neighbors(u);
  check_vertex(*this, v);
  return std::binary_search(adj.begin(), adj.end(), v);
}

const std::string& Graph::label(VertexId v) const {
  check_vertex(*this, v);
  return labels_[v];
}

std::optional<VertexId> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (std::size_t i = offsets_[u]; i < offsets_[u + 1]; ++i) {
      if (u < adjacency_[i]) out.emplace_back(u, adjacency_[i]);
    }
  }
  return out;
}

VertexId GraphBuilder::add_vertex(std::string_view label) {
  auto [it, inserted] =
      index_.try_emplace(std::string(label), static_cast<VertexId>(labels_.size()));
  if (inserted) labels_.emplace_back(label);
  return it->second;
}

void GraphBuilder::add_edge(std::string_view u, std::string_view v) {
  VertexId a = add_vertex(u);
  VertexId b = add_vertex(v);
  add_edge(a, b);
}

void GraphBuilder::add_edge(VertexId u, VertexId v) {
  if (u >= labels_.size() || v >= labels_.size()) {
    throw Error(ErrorCode::kInvalidVertex, "edge endpoint was never declared");
  }
  if (u == v) return;
  edges_.emplace_back(std::min(u, v), std::max(u, v));
}

Graph GraphBuilder::build() && {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  Graph g;
  const std::size_t n = labels_.size();
  g.degrees_.assign(n, 0);
  for (auto [u, v] : edges_) {
    ++g.degrees_[u];
    ++g.degrees_[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + g.degrees_[v];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v) with u < v: vertex x first receives its lower
  // neighbors from the (a, x) edges, then its higher ones from (x, b), so every
  // list comes out sorted.
  for (auto [u, v] : edges_) {
    g.adjacency_[cursor[u]++] = v;
    g.adjacency_[cursor[v]++] = u;
  }
  g.edge_count_ = edges_.size();
  g.labels_ = std::move(labels_);
  g.index_ = std::move(index_);
  return g;
}

Graph build_graph(std::span<const std::pair<std::string, std::string>> edges,
                  std::optional<std::size_t> vertex_hint) {
  GraphBuilder b;
  if (vertex_hint) {
    for (std::size_t v = 0; v < *vertex_hint; ++v) b.add_vertex(std::to_string(v));
  }
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

Graph build_graph(std::span<const std::pair<std::int64_t, std::int64_t>> edges,
                  std::optional<std::size_t> vertex_hint) {
  GraphBuilder b;
  if (vertex_hint) {
    for (std::size_t v = 0; v < *vertex_hint; ++v) b.add_vertex(std::to_string(v));
  }
  for (auto [u, v] : edges) b.add_edge(std::to_string(u), std::to_string(v));
  return std::move(b).build();
}

std::uint64_t total_degree(const Graph& g) noexcept {
  return 2 * static_cast<std::uint64_t>(g.edge_count());
}

std::uint64_t degree_sum_over(const Graph& g, std::span<const VertexId> vertices) {
  std::uint64_t sum = 0;
  for (VertexId v : vertices) sum += g.degree(v);
  return sum;
}

}  // namespace nedindex
