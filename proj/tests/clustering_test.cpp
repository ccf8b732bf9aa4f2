#include <set>

#include <gtest/gtest.h>

#include "nedindex/clustering.hpp"
#include "nedindex/error.hpp"
#include "nedindex/generators.hpp"
#include "oracles.hpp"

namespace nedindex {
namespace {

Graph two_triangles() {
  std::vector<std::pair<std::int64_t, std::int64_t>> e{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
  return build_graph(e);
}

std::vector<std::size_t> labels(const Partition& p) { return testing::canonical_labels(p.assignment()); }

// Every cluster of `fine` sits inside one cluster of `coarse`.
bool refines(const Partition& fine, const Partition& coarse) {
  for (ClusterId c = 0; c < fine.cluster_count(); ++c) {
    std::set<ClusterId> hit;
    for (VertexId v : fine.members(c)) hit.insert(coarse.cluster_of(v));
    if (hit.size() != 1) return false;
  }
  return true;
}

TEST(RowDistance, ClosedFormMatchesDenseRows) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = testing::random_gnp(18, 0.1 + 0.03 * static_cast<double>(seed % 20), seed);
    auto a = testing::dense(g);
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const double naive = testing::naive_row_distance(a, u, v);
        EXPECT_EQ(static_cast<double>(row_distance_sq(g, u, v)), std::round(naive * naive));
      }
    }
  }
}

TEST(Linkage, TwoTrianglesMergeInsideFirst) {
  Graph g = two_triangles();
  Dendrogram d = linkage_single(g);
  ASSERT_EQ(d.merges.size(), 5u);
  for (std::size_t t = 0; t + 1 < d.merges.size(); ++t) {
    EXPECT_LT(d.merges[t].distance, d.merges.back().distance);
  }
  EXPECT_EQ(d.merges.back().size, 6u);
  EXPECT_EQ(labels(cut_maxclust(d, 2)), (std::vector<std::size_t>{0, 0, 0, 1, 1, 1}));
}

TEST(Linkage, CompleteGraphTiesCollapse) {
  Graph g = generate_complete(6);
  Dendrogram d = linkage_single(g);
  for (const auto& m : d.merges) EXPECT_DOUBLE_EQ(m.distance, std::sqrt(2.0));
  EXPECT_EQ(cut_maxclust(d, 1).cluster_count(), 1u);
  EXPECT_EQ(cut_maxclust(d, 3).cluster_count(), 1u);
  EXPECT_EQ(cut_maxclust(d, 6).cluster_count(), 6u);
}

TEST(Linkage, DendrogramShape) {
  for (auto method : {Linkage::kSingle, Linkage::kComplete, Linkage::kAverage}) {
    Graph g = testing::random_gnp(25, 0.2, 4);
    Dendrogram d = linkage(g, method);
    EXPECT_EQ(d.leaf_count, 25u);
    ASSERT_EQ(d.merges.size(), 24u);
    EXPECT_EQ(d.merges.back().size, 25u);
    std::set<std::size_t> used;
    for (std::size_t t = 0; t < d.merges.size(); ++t) {
      const auto& m = d.merges[t];
      EXPECT_LT(m.left, m.right);
      EXPECT_LT(m.right, 25 + t);
      EXPECT_TRUE(used.insert(m.left).second);
      EXPECT_TRUE(used.insert(m.right).second);
      if (t > 0) EXPECT_LE(d.merges[t - 1].distance, m.distance + 1e-12);
    }
  }
}

TEST(Linkage, TinyGraphs) {
  Graph one = generate_complete(1);
  Dendrogram d = linkage_single(one);
  EXPECT_TRUE(d.merges.empty());
  EXPECT_EQ(cut_maxclust(d, 1).cluster_count(), 1u);
  Graph empty;
  EXPECT_EQ(linkage(empty, Linkage::kAverage).leaf_count, 0u);
}

// Offline reference: scipy.cluster.hierarchy linkage(method="single") on the
// adjacency rows followed by fcluster(criterion="maxclust").
TEST(CutMaxclust, Figure2MatchesReference) {
  Graph g = figure2_graph();
  Dendrogram d = linkage_single(g);
  const std::vector<std::size_t> cliques{0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2};
  const std::vector<std::size_t> fine{0, 1, 1, 2, 3, 4, 4, 5, 6, 7, 7, 8};
  for (std::size_t k = 1; k <= 12; ++k) {
    auto got = labels(cut_maxclust(d, k));
    if (k <= 2) EXPECT_EQ(got, std::vector<std::size_t>(12, 0)) << k;
    else if (k <= 8) EXPECT_EQ(got, cliques) << k;
    else if (k <= 11) EXPECT_EQ(got, fine) << k;
    else EXPECT_EQ(got.back(), 11u);
  }
}

TEST(CutMaxclust, Figure3MatchesReference) {
  Graph g = figure3_graph();
  Dendrogram d = linkage_single(g);
  EXPECT_EQ(labels(cut_maxclust(d, 2)),
            (std::vector<std::size_t>{0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0}));
  EXPECT_EQ(labels(cut_maxclust(d, 3)), figure3_groups());
  EXPECT_EQ(labels(cut_maxclust(d, 5)),
            (std::vector<std::size_t>{0, 1, 1, 1, 0, 2, 3, 3, 3, 3, 2, 4, 4, 4, 4}));
  EXPECT_EQ(labels(cut_maxclust(d, 14)),
            (std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7, 8, 6, 9, 10, 11, 12, 13}));
}

TEST(CutMaxclust, KarateMatchesReference) {
  Graph g = karate_club();
  Dendrogram d = linkage_single(g);
  const std::vector<std::size_t> counts{1,  2,  2,  4,  5,  6,  6,  6,  9,  9,  9,  9,
                                        9,  14, 14, 14, 14, 14, 14, 14, 14, 22, 22, 22,
                                        22, 22, 22, 22, 29, 29, 29, 29, 29, 34};
  for (std::size_t k = 1; k <= 34; ++k) EXPECT_EQ(cut_maxclust(d, k).cluster_count(), counts[k - 1]) << k;
  std::vector<std::size_t> k2(34, 1);
  k2[0] = 0;
  EXPECT_EQ(labels(cut_maxclust(d, 2)), k2);
  EXPECT_EQ(labels(cut_maxclust(d, 3)), k2);
  EXPECT_EQ(labels(cut_maxclust(d, 6)),
            (std::vector<std::size_t>{0, 1, 2, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3,
                                      3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 4, 5}));
}

TEST(CutMaxclust, OutOfRange) {
  Dendrogram d = linkage_single(generate_complete(4));
  for (std::size_t k : {0u, 5u}) {
    try {
      cut_maxclust(d, k);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kOutOfRange);
    }
  }
}

TEST(CutMaxclust, BoundsAndNesting) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = testing::random_gnp(30, 0.15, seed);
    for (auto method : {Linkage::kSingle, Linkage::kComplete, Linkage::kAverage}) {
      Dendrogram d = linkage(g, method);
      EXPECT_EQ(cut_maxclust(d, 1).cluster_count(), 1u);
      EXPECT_EQ(cut_maxclust(d, 30).cluster_count(), 30u);
      std::vector<Partition> cuts;
      for (std::size_t k = 1; k <= 30; ++k) {
        cuts.push_back(cut_maxclust(d, k));
        EXPECT_GE(cuts.back().cluster_count(), 1u);
        EXPECT_LE(cuts.back().cluster_count(), k);
        if (k > 1) EXPECT_GE(cuts.back().cluster_count(), cuts[k - 2].cluster_count());
      }
      for (std::size_t hi = 0; hi < cuts.size(); ++hi) {
        for (std::size_t lo = 0; lo < hi; ++lo) EXPECT_TRUE(refines(cuts[hi], cuts[lo]));
      }
    }
  }
}

// Single-linkage cuts are unique regardless of tie order, so they must agree
// with the textbook agglomeration at every k.
TEST(Linkage, SingleCutsMatchNaiveAgglomeration) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    Graph g = testing::random_gnp(22, 0.1 + 0.04 * static_cast<double>(seed % 10), seed);
    Dendrogram fast = linkage_single(g);
    Dendrogram naive = testing::naive_linkage(g, Linkage::kSingle);
    for (std::size_t t = 0; t < fast.merges.size(); ++t) {
      EXPECT_NEAR(fast.merges[t].distance, naive.merges[t].distance, 1e-12);
    }
    for (std::size_t k = 1; k <= 22; ++k) {
      EXPECT_EQ(labels(cut_maxclust(fast, k)), labels(cut_maxclust(naive, k))) << seed << " k=" << k;
    }
  }
}

TEST(Linkage, CompleteMatchesNaiveAgglomeration) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    Graph g = testing::random_gnp(22, 0.1 + 0.04 * static_cast<double>(seed % 10), seed + 50);
    Dendrogram fast = linkage(g, Linkage::kComplete);
    Dendrogram naive = testing::naive_linkage(g, Linkage::kComplete);
    ASSERT_EQ(fast.merges.size(), naive.merges.size());
    for (std::size_t t = 0; t < fast.merges.size(); ++t) {
      EXPECT_EQ(fast.merges[t].left, naive.merges[t].left) << seed << " t=" << t;
      EXPECT_EQ(fast.merges[t].right, naive.merges[t].right) << seed << " t=" << t;
      EXPECT_NEAR(fast.merges[t].distance, naive.merges[t].distance, 1e-12);
    }
  }
}

TEST(Linkage, AverageMatchesNaiveAgglomeration) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    Graph g = testing::random_gnp(22, 0.1 + 0.04 * static_cast<double>(seed % 10), seed + 90);
    Dendrogram fast = linkage(g, Linkage::kAverage);
    Dendrogram naive = testing::naive_linkage(g, Linkage::kAverage);
    for (std::size_t t = 0; t < fast.merges.size(); ++t) {
      EXPECT_NEAR(fast.merges[t].distance, naive.merges[t].distance, 1e-9) << seed << " t=" << t;
    }
  }
}

TEST(KMeans, SingleClusterForAnySeed) {
  Graph g = karate_club();
  for (std::uint64_t seed = 0; seed < 5; ++seed) EXPECT_EQ(kmeans_rows(g, 1, seed).cluster_count(), 1u);
}

TEST(KMeans, KEqualsVertexCountGivesSingletons) {
  for (Graph g : {karate_club(), generate_complete(5), two_triangles()}) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      EXPECT_EQ(kmeans_rows(g, g.vertex_count(), seed).cluster_count(), g.vertex_count());
    }
  }
}

TEST(KMeans, TwoTrianglesForEverySeed) {
  Graph g = two_triangles();
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(labels(kmeans_rows(g, 2, seed)), (std::vector<std::size_t>{0, 0, 0, 1, 1, 1})) << seed;
  }
}

TEST(KMeans, Reproducible) {
  Graph g = testing::random_gnp(60, 0.1, 3);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_EQ(kmeans_rows(g, 6, seed), kmeans_rows(g, 6, seed));
  }
}

TEST(KMeans, ObjectiveNeverIncreases) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = testing::random_gnp(50, 0.08 + 0.01 * static_cast<double>(seed % 10), seed);
    auto r = kmeans_rows_detailed(g, 2 + seed % 10, seed, 200);
    ASSERT_FALSE(r.objective.empty());
    for (std::size_t i = 1; i < r.objective.size(); ++i) {
      EXPECT_LE(r.objective[i], r.objective[i - 1] + 1e-9) << seed << " iter " << i;
    }
    EXPECT_EQ(r.partition.cluster_count(), 2 + seed % 10);
  }
}

TEST(KMeans, DuplicateRowsStillFillEveryCluster) {
  // Leaves of a star share identical rows.
  std::vector<std::pair<std::int64_t, std::int64_t>> e;
  for (int v = 1; v <= 8; ++v) e.emplace_back(0, v);
  Graph star = build_graph(e);
  for (std::size_t k = 1; k <= 9; ++k) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      EXPECT_EQ(kmeans_rows(star, k, seed).cluster_count(), k) << k;
    }
  }
}

TEST(KMeans, OutOfRange) {
  Graph g = generate_complete(4);
  EXPECT_THROW(kmeans_rows(g, 0, 0), Error);
  EXPECT_THROW(kmeans_rows(g, 5, 0), Error);
}

}  // namespace
}  // namespace nedindex
