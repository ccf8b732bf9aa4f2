#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nedindex/clustering.hpp"
#include "nedindex/graph.hpp"
#include "nedindex/metrics.hpp"
#include "nedindex/partition.hpp"

namespace nedindex {

enum class Method { kHierarchical, kKMeans };

Method parse_method(std::string_view name);
std::string_view to_string(Method method);

struct KRange {
  std::size_t first = 1;
  std::size_t last = 1;
};

/// "a..b" (inclusive) or a single "k". Throws kInvalidConfig.
KRange parse_k_range(std::string_view text);

struct SweepConfig {
  KRange k_range;
  std::size_t repeats = 5;
  Method method = Method::kHierarchical;
  Linkage linkage = Linkage::kSingle;
  std::int64_t base_seed = 0;
  std::size_t max_iter = 100;
  std::optional<Partition> reference;
  /// Worker threads for independent (k, repeat) cells; 0 picks the hardware
  /// concurrency. Output order never depends on it.
  std::size_t threads = 1;
};

struct SweepRecord {
  static constexpr int kAveraged = -1;

  std::size_t k = 0;
  int repeat_index = 0;          // kAveraged for the per-k mean row
  std::optional<std::int64_t> seed;  // empty on averaged rows
  MetricReport metrics;
  std::chrono::duration<double, std::milli> elapsed{0};
};

/// Throws kInvalidConfig when the range or repeat count does not fit g.
void validate(const SweepConfig& cfg, const Graph& g);

/// Clusters g at every k in the range, `repeats` times each with seed
/// base_seed + repeat, and scores every partition. Returns the per-repeat
/// rows in (k, repeat) order followed by one averaged row per k.
std::vector<SweepRecord> sweep(const Graph& g, const SweepConfig& cfg);

struct NamedPartition {
  std::string name;
  Partition partition;
};

std::vector<std::pair<std::string, MetricReport>> fixed_partition_report(
    const Graph& g, const std::vector<NamedPartition>& partitions,
    const Partition* reference = nullptr);

/// "k,repeat,seed,nedindex,modularity,nmi,conductance,elapsed_ms". Timing is
/// left blank unless include_timing is set, keeping the output byte-stable.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records,
                     bool include_timing = false);

}  // namespace nedindex
