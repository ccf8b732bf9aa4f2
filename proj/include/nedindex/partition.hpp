#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "nedindex/graph.hpp"

namespace nedindex {

using ClusterId = std::uint32_t;

/// Disjoint, complete assignment of vertices 0..n-1 to clusters 0..k-1,
/// every cluster non-empty.
class Partition {
 public:
  Partition() = default;

  std::size_t vertex_count() const noexcept { return assignment_.size(); }
  std::size_t cluster_count() const noexcept { return offsets_.size() - 1; }

  ClusterId cluster_of(VertexId v) const;
  std::span<const ClusterId> assignment() const noexcept { return assignment_; }
  /// Members of cluster c in ascending vertex order.
  std::span<const VertexId> members(ClusterId c) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.assignment_ == b.assignment_;
  }

 private:
  friend Partition make_partition(std::size_t, std::span<const std::size_t>);

  std::vector<ClusterId> assignment_;
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> members_;
};

/// Validates and compacts an assignment: labels keep their relative order
/// and unused ones are dropped, so {0, 5, 5, 2} becomes {0, 2, 2, 1}.
/// Throws kInvalidAssignment when the length differs from the vertex count.
Partition make_partition(std::size_t vertex_count, std::span<const std::size_t> assignment);
Partition make_partition(const Graph& g, std::span<const std::size_t> assignment);

struct ClusterStats {
  std::uint64_t size = 0;             // |V_c|
  std::uint64_t internal_edges = 0;   // |E_c|
  std::uint64_t internal_degree = 0;  // D(C) = 2 |E_c|
  std::uint64_t graph_degree = 0;     // D(G, V_c), the cluster volume
  std::uint64_t cut = 0;              // edges leaving the cluster

  friend bool operator==(const ClusterStats&, const ClusterStats&) = default;
};

/// Tallies for every cluster from a single pass over the edges.
std::vector<ClusterStats> all_cluster_stats(const Graph& g, const Partition& p);
/// Tallies for one cluster. Throws kOutOfRange when c >= cluster_count().
ClusterStats cluster_stats(const Graph& g, const Partition& p, ClusterId c);

/// "label cluster" per line, vertices in dense order.
void write_partition(std::ostream& out, const Graph& g, const Partition& p);
/// Accepts any whitespace and '#' comments; every vertex of g must appear
/// exactly once. Errors are kParseError with the line number.
Partition read_partition(std::istream& in, const Graph& g);
Partition read_partition_file(const std::filesystem::path& path, const Graph& g);

}  // namespace nedindex
