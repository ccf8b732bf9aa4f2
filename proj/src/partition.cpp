#include "nedindex/partition.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>

#include <fmt/ostream.h>

#include "nedindex/error.hpp"

namespace nedindex {

namespace {

void check_same_graph(const Graph& g, const Partition& p) {
  if (p.vertex_count() != g.vertex_count()) {
    throw Error(ErrorCode::kInvalidAssignment,
                "partition covers " + std::to_string(p.vertex_count()) +
                    " vertices, graph has " + std::to_string(g.vertex_count()));
  }
}

}  // namespace

ClusterId Partition::cluster_of(VertexId v) const {
  if (v >= assignment_.size()) {
    throw Error(ErrorCode::kInvalidVertex, "vertex " + std::to_string(v) + " not in partition");
  }
  return assignment_[v];
}

std::span<const VertexId> Partition::members(ClusterId c) const {
  if (c >= cluster_count()) {
    throw Error(ErrorCode::kOutOfRange, "cluster " + std::to_string(c) + " out of range");
  }
  return {members_.data() + offsets_[c], members_.data() + offsets_[c + 1]};
}

Partition make_partition(std::size_t vertex_count, std::span<const std::size_t> assignment) {
  if (assignment.size() != vertex_count) {
    throw Error(ErrorCode::kInvalidAssignment,
                "assignment has " + std::to_string(assignment.size()) + " entries for " +
                    std::to_string(vertex_count) + " vertices");
  }
  std::vector<std::size_t> used(assignment.begin(), assignment.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());

  Partition p;
  p.assignment_.resize(vertex_count);
  std::vector<std::size_t> counts(used.size(), 0);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    auto c = static_cast<ClusterId>(
        std::lower_bound(used.begin(), used.end(), assignment[v]) - used.begin());
    p.assignment_[v] = c;
    ++counts[c];
  }
  p.offsets_.assign(used.size() + 1, 0);
  for (std::size_t c = 0; c < used.size(); ++c) p.offsets_[c + 1] = p.offsets_[c] + counts[c];
  p.members_.resize(vertex_count);
  std::vector<std::size_t> cursor(p.offsets_.begin(), p.offsets_.end() - 1);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    p.members_[cursor[p.assignment_[v]]++] = static_cast<VertexId>(v);
  }
  return p;
}

Partition make_partition(const Graph& g, std::span<const std::size_t> assignment) {
  return make_partition(g.vertex_count(), assignment);
}

std::vector<ClusterStats> all_cluster_stats(const Graph& g, const Partition& p) {
  check_same_graph(g, p);
  std::vector<ClusterStats> stats(p.cluster_count());
  const auto assignment = p.assignment();
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    auto& s = stats[assignment[u]];
    ++s.size;
    s.graph_degree += g.degree(u);
    for (VertexId v : g.neighbors(u)) {
      if (v <= u) continue;
      if (assignment[v] == assignment[u]) {
        ++s.internal_edges;
      } else {
        ++s.cut;
        ++stats[assignment[v]].cut;
      }
    }
  }
  for (auto& s : stats) s.internal_degree = 2 * s.internal_edges;
  return stats;
}

ClusterStats cluster_stats(const Graph& g, const Partition& p, ClusterId c) {
  check_same_graph(g, p);
  ClusterStats s;
  const auto members = p.members(c);
  const auto assignment = p.assignment();
  s.size = members.size();
  for (VertexId u : members) {
    s.graph_degree += g.degree(u);
    for (VertexId v : g.neighbors(u)) {
      if (assignment[v] == c) {
        if (u < v) ++s.internal_edges;
      } else {
        ++s.cut;
      }
    }
  }
  s.internal_degree = 2 * s.internal_edges;
  return s;
}

void write_partition(std::ostream& out, const Graph& g, const Partition& p) {
  check_same_graph(g, p);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    fmt::print(out, "{} {}\n", g.label(v), p.cluster_of(v));
  }
}

Partition read_partition(std::istream& in, const Graph& g) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> assignment(g.vertex_count(), kUnset);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string label, cluster, extra;
    if (!(ss >> label)) continue;
    if (label.front() == '#' || label.front() == '%') continue;
    if (!(ss >> cluster) || (ss >> extra)) {
      throw Error(ErrorCode::kParseError, "expected 'vertex cluster': '" + line + "'", line_no);
    }
    auto v = g.find(label);
    if (!v) throw Error(ErrorCode::kParseError, "unknown vertex '" + label + "'", line_no);
    std::size_t c = 0;
    auto [ptr, ec] = std::from_chars(cluster.data(), cluster.data() + cluster.size(), c);
    if (ec != std::errc{} || ptr != cluster.data() + cluster.size()) {
      throw Error(ErrorCode::kParseError, "bad cluster index '" + cluster + "'", line_no);
    }
    if (assignment[*v] != kUnset) {
      throw Error(ErrorCode::kParseError, "vertex '" + label + "' assigned twice", line_no);
    }
    assignment[*v] = c;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (assignment[v] == kUnset) {
      throw Error(ErrorCode::kParseError,
                  "vertex '" + g.label(v) + "' missing from partition", line_no);
    }
  }
  return make_partition(g, assignment);
}

Partition read_partition_file(const std::filesystem::path& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return read_partition(in, g);
}

}  // namespace nedindex
