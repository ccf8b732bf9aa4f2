#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <tuple>

#include "nedindex/clustering.hpp"
#include "nedindex/error.hpp"
#include "row_distance.hpp"

namespace nedindex {

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  std::vector<std::size_t> parent;
};

// Condensed upper-triangle storage for i < j.
class CondensedMatrix {
 public:
  explicit CondensedMatrix(std::size_t n) : n_(n), data_(n * (n - 1) / 2) {}

  double& at(std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return data_[i * n_ - i * (i + 1) / 2 + (j - i - 1)];
  }

 private:
  std::size_t n_;
  std::vector<double> data_;
};

Dendrogram linkage_generic(const Graph& g, Linkage method) {
  const std::size_t n = g.vertex_count();
  Dendrogram d;
  d.leaf_count = n;
  if (n < 2) return d;

  CondensedMatrix dist(n);
  detail::RowDistances rows(g);
  for (VertexId u = 0; u < n; ++u) {
    rows.compute_from(u);
    for (VertexId v = u + 1; v < n; ++v) dist.at(u, v) = std::sqrt(static_cast<double>(rows.to(v)));
  }

  // Each cluster lives in the slot of its smallest vertex id.
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<bool> active(n, true);
  std::vector<std::size_t> size(n, 1), node(n);
  std::iota(node.begin(), node.end(), 0);
  std::vector<std::size_t> nn(n, n);
  std::vector<double> nn_dist(n, kInf);

  auto refresh = [&](std::size_t i) {
    nn[i] = n;
    nn_dist[i] = kInf;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (active[j] && dist.at(i, j) < nn_dist[i]) {
        nn_dist[i] = dist.at(i, j);
        nn[i] = j;
      }
    }
  };
  for (std::size_t i = 0; i + 1 < n; ++i) refresh(i);

  d.merges.reserve(n - 1);
  for (std::size_t step = 0; step + 1 < n; ++step) {
    std::size_t a = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (active[i] && nn[i] < n && (a == n || nn_dist[i] < nn_dist[a])) a = i;
    }
    const std::size_t b = nn[a];
    d.merges.push_back({std::min(node[a], node[b]), std::max(node[a], node[b]), nn_dist[a],
                        size[a] + size[b]});

    active[b] = false;
    for (std::size_t x = 0; x < n; ++x) {
      if (!active[x] || x == a) continue;
      const double da = dist.at(a, x), db = dist.at(b, x);
      dist.at(a, x) = method == Linkage::kComplete
                          ? std::max(da, db)
                          : (static_cast<double>(size[a]) * da + static_cast<double>(size[b]) * db) /
                                static_cast<double>(size[a] + size[b]);
    }
    size[a] += size[b];
    node[a] = n + step;

    refresh(a);
    for (std::size_t x = 0; x < a; ++x) {
      if (!active[x]) continue;
      if (nn[x] == a || nn[x] == b) {
        refresh(x);
      } else if (dist.at(x, a) < nn_dist[x] || (dist.at(x, a) == nn_dist[x] && a < nn[x])) {
        nn[x] = a;
        nn_dist[x] = dist.at(x, a);
      }
    }
    for (std::size_t x = a + 1; x < b; ++x) {
      if (active[x] && nn[x] == b) refresh(x);
    }
  }
  return d;
}

}  // namespace

std::uint64_t row_distance_sq(const Graph& g, VertexId u, VertexId v) {
  auto nu = g.neighbors(u), nv = g.neighbors(v);
  std::uint64_t common = 0;
  auto i = nu.begin(), j = nv.begin();
  while (i != nu.end() && j != nv.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return nu.size() + nv.size() - 2 * common;
}

Linkage parse_linkage(std::string_view name) {
  if (name == "single") return Linkage::kSingle;
  if (name == "complete") return Linkage::kComplete;
  if (name == "average") return Linkage::kAverage;
  throw Error(ErrorCode::kInvalidConfig, "unknown linkage '" + std::string(name) + "'");
}

std::string_view to_string(Linkage linkage) {
  switch (linkage) {
    case Linkage::kSingle: return "single";
    case Linkage::kComplete: return "complete";
    case Linkage::kAverage: return "average";
  }
  return "?";
}

Dendrogram linkage_single(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Dendrogram d;
  d.leaf_count = n;
  if (n < 2) return d;

  // Prim's minimum spanning tree over squared row distances (exact integers).
  constexpr auto kUnreached = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> best(n, kUnreached);
  std::vector<VertexId> via(n, 0);
  std::vector<bool> in_tree(n, false);
  detail::RowDistances rows(g);

  struct TreeEdge {
    std::uint64_t dist_sq;
    VertexId lo, hi;
  };
  std::vector<TreeEdge> tree;
  tree.reserve(n - 1);

  VertexId current = 0;
  for (std::size_t added = 1;; ++added) {
    in_tree[current] = true;
    if (added == n) break;
    rows.compute_from(current);
    VertexId next = 0;
    std::uint64_t next_dist = kUnreached;
    bool found = false;
    for (VertexId v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      const auto dv = rows.to(v);
      if (dv < best[v]) {
        best[v] = dv;
        via[v] = current;
      }
      if (!found || best[v] < next_dist) {
        next = v;
        next_dist = best[v];
        found = true;
      }
    }
    tree.push_back({next_dist, std::min(next, via[next]), std::max(next, via[next])});
    current = next;
  }

  std::sort(tree.begin(), tree.end(), [](const TreeEdge& x, const TreeEdge& y) {
    return std::tie(x.dist_sq, x.lo, x.hi) < std::tie(y.dist_sq, y.lo, y.hi);
  });

  DisjointSets sets(n);
  std::vector<std::size_t> node(n), size(n, 1);
  std::iota(node.begin(), node.end(), 0);
  d.merges.reserve(n - 1);
  for (const auto& e : tree) {
    auto ra = sets.find(e.lo), rb = sets.find(e.hi);
    const std::size_t merged = size[ra] + size[rb];
    d.merges.push_back({std::min(node[ra], node[rb]), std::max(node[ra], node[rb]),
                        std::sqrt(static_cast<double>(e.dist_sq)), merged});
    const std::size_t new_node = n + d.merges.size() - 1;
    sets.parent[rb] = ra;
    node[ra] = new_node;
    size[ra] = merged;
  }
  return d;
}

Dendrogram linkage(const Graph& g, Linkage method) {
  if (method == Linkage::kSingle) return linkage_single(g);
  return linkage_generic(g, method);
}

Partition cut_maxclust(const Dendrogram& d, std::size_t k) {
  const std::size_t n = d.leaf_count;
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kOutOfRange,
                "cluster count " + std::to_string(k) + " outside 1.." + std::to_string(n));
  }
  std::size_t applied = n - k;
  if (applied > 0) {
    const double threshold = d.merges[applied - 1].distance;
    while (applied < d.merges.size() && d.merges[applied].distance <= threshold) ++applied;
  }

  DisjointSets sets(n);
  std::vector<std::size_t> leaf_of(n + d.merges.size());
  std::iota(leaf_of.begin(), leaf_of.begin() + static_cast<std::ptrdiff_t>(n), 0);
  for (std::size_t t = 0; t < d.merges.size(); ++t) {
    const auto& m = d.merges[t];
    leaf_of[n + t] = leaf_of[m.left];
    if (t < applied) sets.parent[sets.find(leaf_of[m.right])] = sets.find(leaf_of[m.left]);
  }

  std::vector<std::size_t> label(n, n), assignment(n);
  std::size_t next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    auto root = sets.find(v);
    if (label[root] == n) label[root] = next++;
    assignment[v] = label[root];
  }
  return make_partition(n, assignment);
}

}  // namespace nedindex
