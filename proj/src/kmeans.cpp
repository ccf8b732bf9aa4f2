#include <algorithm>
#include <limits>
#include <random>
#include <string>

#include "nedindex/clustering.hpp"
#include "nedindex/error.hpp"
#include "row_distance.hpp"

namespace nedindex {

namespace {

// Portable uniform draw in [0, 1); std::uniform_real_distribution is
// implementation-defined, which would make seeds non-reproducible across
// standard libraries.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t count) {
  return std::min(count - 1, static_cast<std::size_t>(uniform01(rng) * static_cast<double>(count)));
}

std::vector<VertexId> seed_plus_plus(const Graph& g, std::size_t k, std::mt19937_64& rng) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> centers;
  centers.reserve(k);
  std::vector<bool> chosen(n, false);
  std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
  detail::RowDistances rows(g);

  auto take = [&](VertexId c) {
    centers.push_back(c);
    chosen[c] = true;
    rows.compute_from(c);
    for (VertexId v = 0; v < n; ++v) {
      nearest[v] = std::min(nearest[v], static_cast<double>(rows.to(v)));
    }
  };

  take(static_cast<VertexId>(uniform_index(rng, n)));
  while (centers.size() < k) {
    double total = 0.0;
    for (VertexId v = 0; v < n; ++v) {
      if (!chosen[v]) total += nearest[v];
    }
    if (total <= 0.0) {
      // Every remaining point duplicates a center; pick uniformly among them.
      std::vector<VertexId> rest;
      for (VertexId v = 0; v < n; ++v) {
        if (!chosen[v]) rest.push_back(v);
      }
      take(rest[uniform_index(rng, rest.size())]);
      continue;
    }
    const double target = uniform01(rng) * total;
    double running = 0.0;
    VertexId pick = n;
    for (VertexId v = 0; v < n; ++v) {
      if (chosen[v] || nearest[v] <= 0.0) continue;
      pick = v;
      running += nearest[v];
      if (running > target) break;
    }
    take(pick);
  }
  return centers;
}

// Clusters kept as coordinate sums plus sizes. Rows are 0/1, so sums, dot
// products and squared norms are small integers held exactly in doubles.
class Clusters {
 public:
  Clusters(std::size_t k, std::size_t dim)
      : dim_(dim), sums_(k * dim, 0.0), norm_sq_(k, 0.0), sizes_(k, 0) {}

  std::size_t size(std::size_t c) const { return sizes_[c]; }

  void clear() {
    std::fill(sums_.begin(), sums_.end(), 0.0);
    std::fill(norm_sq_.begin(), norm_sq_.end(), 0.0);
    std::fill(sizes_.begin(), sizes_.end(), 0);
  }

  void add(const Graph& g, std::size_t c, VertexId v) { shift(g, c, v, +1.0); }
  void remove(const Graph& g, std::size_t c, VertexId v) { shift(g, c, v, -1.0); }

  // Squared distance from the row of v to the centroid (sum / size).
  double distance_sq(const Graph& g, std::size_t c, VertexId v) const {
    if (sizes_[c] == 0) return std::numeric_limits<double>::infinity();
    const double m = static_cast<double>(sizes_[c]);
    return static_cast<double>(g.degree(v)) - 2.0 * dot(g, c, v) / m + norm_sq_[c] / (m * m);
  }

 private:
  double dot(const Graph& g, std::size_t c, VertexId v) const {
    const double* s = sums_.data() + c * dim_;
    double d = 0.0;
    for (VertexId w : g.neighbors(v)) d += s[w];
    return d;
  }

  void shift(const Graph& g, std::size_t c, VertexId v, double sign) {
    // ||S +- x||^2 = ||S||^2 +- 2 S.x + ||x||^2
    norm_sq_[c] += sign * 2.0 * dot(g, c, v) + static_cast<double>(g.degree(v));
    double* s = sums_.data() + c * dim_;
    for (VertexId w : g.neighbors(v)) s[w] += sign;
    sizes_[c] += sign > 0 ? 1 : -1;
  }

  std::size_t dim_;
  std::vector<double> sums_;
  std::vector<double> norm_sq_;
  std::vector<std::size_t> sizes_;
};

double objective(const Graph& g, const Clusters& clusters, const std::vector<std::size_t>& assignment) {
  double total = 0.0;
  for (VertexId v = 0; v < assignment.size(); ++v) total += clusters.distance_sq(g, assignment[v], v);
  return total;
}

// Single-point moves that strictly lower the objective (Hartigan's rule):
// moving v from a to b changes it by |b|/(|b|+1) d(v,b) - |a|/(|a|-1) d(v,a).
bool refine_pass(const Graph& g, Clusters& clusters, std::vector<std::size_t>& assignment,
                 std::size_t k) {
  bool moved = false;
  for (VertexId v = 0; v < assignment.size(); ++v) {
    const std::size_t from = assignment[v];
    const double from_size = static_cast<double>(clusters.size(from));
    if (from_size < 2) continue;
    const double removal = from_size / (from_size - 1.0) * clusters.distance_sq(g, from, v);
    std::size_t best = from;
    double best_gain = 1e-9 * std::max(1.0, removal);
    for (std::size_t c = 0; c < k; ++c) {
      if (c == from) continue;
      const double size = static_cast<double>(clusters.size(c));
      const double gain = removal - size / (size + 1.0) * clusters.distance_sq(g, c, v);
      if (gain > best_gain) {
        best = c;
        best_gain = gain;
      }
    }
    if (best != from) {
      clusters.remove(g, from, v);
      clusters.add(g, best, v);
      assignment[v] = best;
      moved = true;
    }
  }
  return moved;
}

}  // namespace

KMeansResult kmeans_rows_detailed(const Graph& g, std::size_t k, std::uint64_t seed,
                                  std::size_t max_iter) {
  const std::size_t n = g.vertex_count();
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kOutOfRange,
                "k-means cluster count " + std::to_string(k) + " outside 1.." + std::to_string(n));
  }
  if (max_iter < 1) throw Error(ErrorCode::kInvalidConfig, "max_iter must be positive");

  std::mt19937_64 rng(seed);
  const auto centers = seed_plus_plus(g, k, rng);
  Clusters clusters(k, n);
  for (std::size_t c = 0; c < k; ++c) clusters.add(g, c, centers[c]);

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> assignment(n, kNone);
  for (std::size_t c = 0; c < k; ++c) assignment[centers[c]] = c;

  KMeansResult result;
  std::vector<double> cost(n, 0.0);
  std::vector<std::vector<VertexId>> members(k);

  // Batch (Lloyd) phase.
  bool settled = false;
  while (result.iterations < max_iter && !settled) {
    bool changed = false;
    for (VertexId v = 0; v < n; ++v) {
      const std::size_t current = assignment[v];
      std::size_t best = current;
      double best_dist = current == kNone ? std::numeric_limits<double>::infinity()
                                          : clusters.distance_sq(g, current, v);
      for (std::size_t c = 0; c < k; ++c) {
        if (c == current) continue;
        const double dist = clusters.distance_sq(g, c, v);
        if (dist < best_dist) {
          best = c;
          best_dist = dist;
        }
      }
      changed |= best != current;
      assignment[v] = best;
      cost[v] = best_dist;
    }

    for (auto& m : members) m.clear();
    for (VertexId v = 0; v < n; ++v) members[assignment[v]].push_back(v);
    for (std::size_t c = 0; c < k; ++c) {
      if (!members[c].empty()) continue;
      VertexId far = n;
      for (VertexId v = 0; v < n; ++v) {
        if (members[assignment[v]].size() < 2) continue;
        if (far == n || cost[v] > cost[far]) far = v;
      }
      auto& donor = members[assignment[far]];
      donor.erase(std::find(donor.begin(), donor.end(), far));
      assignment[far] = c;
      cost[far] = 0.0;
      members[c].push_back(far);
      changed = true;
    }

    clusters.clear();
    for (VertexId v = 0; v < n; ++v) clusters.add(g, assignment[v], v);
    result.objective.push_back(objective(g, clusters, assignment));
    ++result.iterations;
    settled = !changed;
  }

  // Online phase: escapes batch fixed points that a single move improves.
  // A pass with no move is Lloyd-stable as well, so it ends the run.
  if (settled) {
    while (result.iterations < max_iter) {
      settled = !refine_pass(g, clusters, assignment, k);
      ++result.iterations;
      if (settled) break;
      result.objective.push_back(objective(g, clusters, assignment));
    }
  }
  result.converged = settled;

  result.partition = make_partition(n, assignment);
  return result;
}

Partition kmeans_rows(const Graph& g, std::size_t k, std::uint64_t seed, std::size_t max_iter) {
  return kmeans_rows_detailed(g, k, seed, max_iter).partition;
}

}  // namespace nedindex
