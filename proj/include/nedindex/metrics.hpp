#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nedindex/graph.hpp"
#include "nedindex/partition.hpp"

namespace nedindex {

/// Node-edge-degree score of one cluster:
///   (|V_c| + |E_c| + D(C)) / (|V_c| + C(|V_c|, 2) + D(G, V_c)).
/// Lies in (0, 1] for any non-empty cluster of a simple graph.
double ned(const ClusterStats& stats);

/// Internal-degree weighted mean of the per-cluster NED, normalized by the
/// total degree. 0 for an edgeless graph.
double nedindex(const Graph& g, const Partition& p);

/// Newman-Girvan modularity, signed. 0 for an edgeless graph.
double modularity(const Graph& g, const Partition& p);

/// Normalized mutual information (natural log, arithmetic-mean
/// normalization). When both partitions have zero entropy the result is 1 if
/// they are identical and 0 otherwise. Throws kInvalidPair when the vertex
/// counts differ.
double nmi(const Partition& p, const Partition& q);

/// Unweighted mean over clusters of cut / min(vol, 2|E| - vol); a cluster
/// with no cut edges scores 0. 0 for an edgeless graph.
double conductance(const Graph& g, const Partition& p);

struct MetricReport {
  std::size_t cluster_count = 0;
  double nedindex = 0.0;
  double modularity = 0.0;
  std::optional<double> nmi;
  double conductance = 0.0;
  std::vector<double> per_cluster_ned;
  std::vector<double> per_cluster_conductance;
};

/// All metrics from one shared pass over the cluster tallies.
MetricReport report(const Graph& g, const Partition& p,
                    const Partition* reference = nullptr);

/// "k,nedindex,modularity,nmi,conductance"
std::string metrics_csv_header();
std::string to_csv_row(const MetricReport& r);

/// Shortest round-trippable decimal used across all CSV output.
std::string format_real(double x);

}  // namespace nedindex
