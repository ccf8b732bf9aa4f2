#pragma once

#include <cstdint>
#include <vector>

#include "nedindex/graph.hpp"

namespace nedindex::detail {

// Squared row distances from one vertex to every vertex, via two-hop
// common-neighbor counting. Cost per source: sum of its neighbors' degrees.
class RowDistances {
 public:
  explicit RowDistances(const Graph& g) : g_(g), common_(g.vertex_count(), 0) {}

  void compute_from(VertexId u) {
    for (VertexId x : touched_) common_[x] = 0;
    touched_.clear();
    for (VertexId w : g_.neighbors(u)) {
      for (VertexId x : g_.neighbors(w)) {
        if (common_[x]++ == 0) touched_.push_back(x);
      }
    }
    source_ = u;
  }

  std::uint64_t to(VertexId v) const {
    return std::uint64_t{g_.degrees()[source_]} + g_.degrees()[v] - 2ull * common_[v];
  }

 private:
  const Graph& g_;
  std::vector<std::uint32_t> common_;
  std::vector<VertexId> touched_;
  VertexId source_ = 0;
};

}  // namespace nedindex::detail
