#include "nedindex/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include <fmt/format.h>

#include "nedindex/error.hpp"

namespace nedindex {

namespace {

double phi(const ClusterStats& s, std::uint64_t total) {
  if (s.cut == 0) return 0.0;
  auto denom = std::min(s.graph_degree, total - s.graph_degree);
  return static_cast<double>(s.cut) / static_cast<double>(denom);
}

double nedindex_from(const std::vector<ClusterStats>& stats, std::uint64_t total) {
  if (total == 0) return 0.0;
  double acc = 0.0;
  for (const auto& s : stats) acc += ned(s) * static_cast<double>(s.internal_degree);
  return acc / static_cast<double>(total);
}

double modularity_from(const std::vector<ClusterStats>& stats, std::uint64_t total) {
  if (total == 0) return 0.0;
  const double two_m = static_cast<double>(total);
  double q = 0.0;
  for (const auto& s : stats) {
    const double share = static_cast<double>(s.graph_degree) / two_m;
    q += static_cast<double>(s.internal_degree) / two_m - share * share;
  }
  return q;
}

double conductance_from(const std::vector<ClusterStats>& stats, std::uint64_t total) {
  if (total == 0 || stats.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& s : stats) sum += phi(s, total);
  return sum / static_cast<double>(stats.size());
}

double entropy_term(std::uint64_t count, double n) {
  const double c = static_cast<double>(count);
  return c * std::log(c / n);
}

}  // namespace

double ned(const ClusterStats& s) {
  const double size = static_cast<double>(s.size);
  const double numer = size + static_cast<double>(s.internal_edges) +
                       static_cast<double>(s.internal_degree);
  const double denom = size + size * (size - 1.0) / 2.0 + static_cast<double>(s.graph_degree);
  return numer / denom;
}

double nedindex(const Graph& g, const Partition& p) {
  return nedindex_from(all_cluster_stats(g, p), total_degree(g));
}

double modularity(const Graph& g, const Partition& p) {
  return modularity_from(all_cluster_stats(g, p), total_degree(g));
}

double conductance(const Graph& g, const Partition& p) {
  return conductance_from(all_cluster_stats(g, p), total_degree(g));
}

double nmi(const Partition& p, const Partition& q) {
  if (p.vertex_count() != q.vertex_count()) {
    throw Error(ErrorCode::kInvalidPair, "partitions cover different vertex counts");
  }
  const std::size_t vertices = p.vertex_count();
  if (p.cluster_count() <= 1 && q.cluster_count() <= 1) return 1.0;

  // Sparse confusion matrix; at most min(n, kp*kq) non-zero cells.
  std::map<std::pair<ClusterId, ClusterId>, std::uint64_t> joint;
  for (VertexId v = 0; v < vertices; ++v) ++joint[{p.cluster_of(v), q.cluster_of(v)}];

  const double n = static_cast<double>(vertices);
  double mutual = 0.0;
  for (const auto& [cell, count] : joint) {
    const double nab = static_cast<double>(count);
    const double na = static_cast<double>(p.members(cell.first).size());
    const double nb = static_cast<double>(q.members(cell.second).size());
    mutual += nab * std::log(nab * n / (na * nb));
  }
  double marginals = 0.0;
  for (ClusterId a = 0; a < p.cluster_count(); ++a) marginals += entropy_term(p.members(a).size(), n);
  for (ClusterId b = 0; b < q.cluster_count(); ++b) marginals += entropy_term(q.members(b).size(), n);
  // Round-off can leave tiny excursions past the bounds.
  return std::clamp(-2.0 * mutual / marginals, 0.0, 1.0);
}

MetricReport report(const Graph& g, const Partition& p, const Partition* reference) {
  const auto stats = all_cluster_stats(g, p);
  const auto total = total_degree(g);
  MetricReport r;
  r.cluster_count = p.cluster_count();
  r.nedindex = nedindex_from(stats, total);
  r.modularity = modularity_from(stats, total);
  r.conductance = conductance_from(stats, total);
  r.per_cluster_ned.reserve(stats.size());
  r.per_cluster_conductance.reserve(stats.size());
  for (const auto& s : stats) {
    r.per_cluster_ned.push_back(ned(s));
    r.per_cluster_conductance.push_back(total == 0 ? 0.0 : phi(s, total));
  }
  if (reference) r.nmi = nmi(p, *reference);
  return r;
}

std::string metrics_csv_header() { return "k,nedindex,modularity,nmi,conductance"; }

std::string to_csv_row(const MetricReport& r) {
  return fmt::format("{},{},{},{},{}", r.cluster_count, format_real(r.nedindex),
                     format_real(r.modularity), r.nmi ? format_real(*r.nmi) : "",
                     format_real(r.conductance));
}

std::string format_real(double x) {
  if (x == 0.0) x = 0.0;  // no "-0"
  return fmt::format("{}", x);
}

}  // namespace nedindex
