#include "nedindex/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "nedindex/error.hpp"

namespace nedindex {

namespace {

using Clock = std::chrono::steady_clock;

std::size_t parse_count(std::string_view text, std::string_view whole) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kInvalidConfig, "bad cluster range '" + std::string(whole) + "'");
  }
  return value;
}

SweepRecord average(std::size_t k, const std::vector<SweepRecord>& rows) {
  SweepRecord avg;
  avg.k = k;
  avg.repeat_index = SweepRecord::kAveraged;
  const double count = static_cast<double>(rows.size());
  bool has_nmi = true;
  double cluster_sum = 0.0;
  double nmi_sum = 0.0;
  for (const auto& r : rows) {
    cluster_sum += static_cast<double>(r.metrics.cluster_count);
    avg.metrics.nedindex += r.metrics.nedindex;
    avg.metrics.modularity += r.metrics.modularity;
    avg.metrics.conductance += r.metrics.conductance;
    avg.elapsed += r.elapsed;
    if (r.metrics.nmi) {
      nmi_sum += *r.metrics.nmi;
    } else {
      has_nmi = false;
    }
  }
  avg.metrics.cluster_count = static_cast<std::size_t>(std::lround(cluster_sum / count));
  avg.metrics.nedindex /= count;
  avg.metrics.modularity /= count;
  avg.metrics.conductance /= count;
  if (has_nmi) avg.metrics.nmi = nmi_sum / count;
  avg.elapsed /= count;
  return avg;
}

}  // namespace

Method parse_method(std::string_view name) {
  if (name == "hierarchical") return Method::kHierarchical;
  if (name == "kmeans") return Method::kKMeans;
  throw Error(ErrorCode::kInvalidConfig, "unknown method '" + std::string(name) + "'");
}

std::string_view to_string(Method method) {
  return method == Method::kHierarchical ? "hierarchical" : "kmeans";
}

KRange parse_k_range(std::string_view text) {
  auto dots = text.find("..");
  KRange r;
  if (dots == std::string_view::npos) {
    r.first = r.last = parse_count(text, text);
  } else {
    r.first = parse_count(text.substr(0, dots), text);
    r.last = parse_count(text.substr(dots + 2), text);
  }
  if (r.first < 1 || r.first > r.last) {
    throw Error(ErrorCode::kInvalidConfig, "bad cluster range '" + std::string(text) + "'");
  }
  return r;
}

void validate(const SweepConfig& cfg, const Graph& g) {
  const auto n = g.vertex_count();
  if (cfg.k_range.first < 1 || cfg.k_range.first > cfg.k_range.last || cfg.k_range.last > n) {
    throw Error(ErrorCode::kInvalidConfig,
                fmt::format("cluster range {}..{} invalid for {} vertices", cfg.k_range.first,
                            cfg.k_range.last, n));
  }
  if (cfg.repeats < 1) throw Error(ErrorCode::kInvalidConfig, "repeats must be at least 1");
  if (cfg.reference && cfg.reference->vertex_count() != n) {
    throw Error(ErrorCode::kInvalidConfig, "reference partition does not match the graph");
  }
}

std::vector<SweepRecord> sweep(const Graph& g, const SweepConfig& cfg) {
  validate(cfg, g);
  const std::size_t k_count = cfg.k_range.last - cfg.k_range.first + 1;
  const std::size_t cells = k_count * cfg.repeats;
  const Partition* reference = cfg.reference ? &*cfg.reference : nullptr;

  std::optional<Dendrogram> tree;
  if (cfg.method == Method::kHierarchical) tree = linkage(g, cfg.linkage);

  std::vector<SweepRecord> records(cells);
  auto run_cell = [&](std::size_t cell) {
    const std::size_t k = cfg.k_range.first + cell / cfg.repeats;
    const auto repeat = static_cast<int>(cell % cfg.repeats);
    const std::int64_t seed = cfg.base_seed + repeat;
    try {
      const auto start = Clock::now();
      const Partition p = cfg.method == Method::kHierarchical
                              ? cut_maxclust(*tree, k)
                              : kmeans_rows(g, k, static_cast<std::uint64_t>(seed), cfg.max_iter);
      auto& rec = records[cell];
      rec.metrics = report(g, p, reference);
      rec.elapsed = Clock::now() - start;
      rec.k = k;
      rec.repeat_index = repeat;
      rec.seed = seed;
    } catch (const Error& e) {
      throw Error(e.code(), fmt::format("k={} repeat={}: {}", k, repeat, e.what()));
    }
  };

  std::size_t workers = cfg.threads == 0 ? std::thread::hardware_concurrency() : cfg.threads;
  workers = std::clamp<std::size_t>(workers, 1, cells);
  if (workers == 1) {
    for (std::size_t cell = 0; cell < cells; ++cell) run_cell(cell);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t cell; (cell = next.fetch_add(1)) < cells;) {
            try {
              run_cell(cell);
            } catch (...) {
              std::lock_guard lock(failure_mutex);
              if (!failure) failure = std::current_exception();
              next = cells;
            }
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<SweepRecord> out = records;
  out.reserve(cells + k_count);
  for (std::size_t i = 0; i < k_count; ++i) {
    std::vector<SweepRecord> group(records.begin() + static_cast<std::ptrdiff_t>(i * cfg.repeats),
                                   records.begin() + static_cast<std::ptrdiff_t>((i + 1) * cfg.repeats));
    out.push_back(average(cfg.k_range.first + i, group));
  }
  return out;
}

std::vector<std::pair<std::string, MetricReport>> fixed_partition_report(
    const Graph& g, const std::vector<NamedPartition>& partitions, const Partition* reference) {
  std::vector<std::pair<std::string, MetricReport>> out;
  out.reserve(partitions.size());
  for (const auto& [name, p] : partitions) {
    try {
      out.emplace_back(name, report(g, p, reference));
    } catch (const Error& e) {
      throw Error(e.code(), name + ": " + e.what());
    }
  }
  return out;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records,
                     bool include_timing) {
  out << "k,repeat,seed,nedindex,modularity,nmi,conductance,elapsed_ms\n";
  for (const auto& r : records) {
    fmt::print(out, "{},{},{},{},{},{},{},{}\n", r.k, r.repeat_index,
               r.seed ? std::to_string(*r.seed) : "", format_real(r.metrics.nedindex),
               format_real(r.metrics.modularity),
               r.metrics.nmi ? format_real(*r.metrics.nmi) : "",
               format_real(r.metrics.conductance),
               include_timing ? fmt::format("{:.3f}", r.elapsed.count()) : "");
  }
}

}  // namespace nedindex
