#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "nedindex/graph.hpp"
#include "nedindex/partition.hpp"

namespace nedindex {

/// Squared Euclidean distance between the 0/1 adjacency rows of u and v:
/// deg(u) + deg(v) - 2 |N(u) ∩ N(v)|. The zero diagonal means an edge u-v
/// shows up once in each degree and never in the intersection, so no
/// correction term is needed.
std::uint64_t row_distance_sq(const Graph& g, VertexId u, VertexId v);

enum class Linkage { kSingle, kComplete, kAverage };

Linkage parse_linkage(std::string_view name);
std::string_view to_string(Linkage linkage);

/// One agglomeration step. Node ids follow the usual convention: leaves are
/// 0..n-1 and merge t creates node n + t. left < right.
struct Merge {
  std::size_t left = 0;
  std::size_t right = 0;
  double distance = 0.0;
  std::size_t size = 0;
};

struct Dendrogram {
  std::size_t leaf_count = 0;
  std::vector<Merge> merges;  // non-decreasing distance, leaf_count - 1 entries
};

/// Agglomerative clustering of the adjacency rows under Euclidean distance.
///
/// Single linkage runs Prim's algorithm on the implicit complete distance
/// graph with O(n) memory; equal-distance merges are ordered by their
/// (lower, higher) vertex pair. Complete and average linkage keep the
/// condensed O(n^2) distance matrix and always merge the closest pair of
/// clusters, ties going to the lowest (min-id, min-id) pair.
Dendrogram linkage(const Graph& g, Linkage method = Linkage::kSingle);
Dendrogram linkage_single(const Graph& g);

/// Flat clustering from the smallest merge threshold that leaves at most k
/// clusters. Ties at the threshold collapse together, so fewer than k
/// clusters may come back. Throws kOutOfRange unless 1 <= k <= leaf_count.
Partition cut_maxclust(const Dendrogram& d, std::size_t k);

struct KMeansResult {
  Partition partition;
  std::vector<double> objective;  // within-cluster squared distance per iteration
  std::size_t iterations = 0;
  bool converged = false;
};

/// Lloyd's k-means over the adjacency rows with k-means++ seeding drawn from
/// `seed`. Empty clusters are refilled with the point farthest from its
/// centroid. Deterministic for a fixed (graph, k, seed, max_iter).
KMeansResult kmeans_rows_detailed(const Graph& g, std::size_t k, std::uint64_t seed,
                                  std::size_t max_iter = 100);
Partition kmeans_rows(const Graph& g, std::size_t k, std::uint64_t seed,
                      std::size_t max_iter = 100);

}  // namespace nedindex
