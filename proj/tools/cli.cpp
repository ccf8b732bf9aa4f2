#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "nedindex/clustering.hpp"
#include "nedindex/edge_list.hpp"
#include "nedindex/error.hpp"
#include "nedindex/generators.hpp"
#include "nedindex/harness.hpp"
#include "nedindex/metrics.hpp"
#include "nedindex/partition.hpp"

namespace nedindex::cli {

namespace {

constexpr int kUsage = 1;
constexpr int kInput = 2;
constexpr int kInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::string input;
  std::string generator;
  std::string dataset;

  void attach(CLI::App* cmd) {
    cmd->add_option("-i,--input", input, "Edge-list file");
    cmd->add_option("-g,--generate", generator, "complete:N, wheel:N, figure2 or figure3");
    cmd->add_option("-d,--dataset", dataset, "Embedded dataset (see `datasets`)");
  }

  Graph load() const {
    const int given = !input.empty() + !generator.empty() + !dataset.empty();
    if (given != 1) {
      throw UsageError("exactly one of --input, --generate or --dataset is required");
    }
    if (!input.empty()) return load_edge_list_file(input);
    if (!generator.empty()) return generate(generator);
    return load_dataset(dataset);
  }

  /// Explicit file first, then the dataset's own ground truth.
  std::optional<Partition> reference(const Graph& g, const std::string& file,
                                     bool disabled) const {
    if (!file.empty()) return read_partition_file(file, g);
    if (!dataset.empty() && !disabled) return make_partition(g, dataset_reference(dataset));
    return std::nullopt;
  }
};

// Writes to the file when a path is given, else to the fallback stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Error(ErrorCode::kIo, "cannot write " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& stream() { return *stream_; }
  bool to_file() const { return file_ != nullptr; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
    case ErrorCode::kIo:
    case ErrorCode::kInvalidVertex:
    case ErrorCode::kInvalidAssignment:
    case ErrorCode::kInvalidPair:
      return kInput;
    case ErrorCode::kInvalidSize:
    case ErrorCode::kInvalidConfig:
    case ErrorCode::kOutOfRange:
      return kUsage;
  }
  return kInternal;
}

Partition cluster_once(const Graph& g, Method method, Linkage linkage_kind, std::size_t k,
                       std::int64_t seed, std::size_t max_iter) {
  if (method == Method::kHierarchical) return cut_maxclust(linkage(g, linkage_kind), k);
  return kmeans_rows(g, k, static_cast<std::uint64_t>(seed), max_iter);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph clustering quality: NEDindex, modularity, NMI and conductance"};
  app.name(args.empty() ? "nedindex" : args.front());
  app.require_subcommand(1);

  GraphSource source;
  std::string partition_file, reference_file, out_path, k_text, method_name = "hierarchical",
                                                         linkage_name = "single";
  bool no_reference = false, csv = false, per_cluster = false, timing = false;
  std::size_t repeats = 5, max_iter = 100, threads = 0, k = 0;
  std::int64_t seed = 0;

  auto* metrics_cmd = app.add_subcommand("metrics", "Score a partition of a graph");
  source.attach(metrics_cmd);
  metrics_cmd->add_option("-p,--partition", partition_file, "Partition file")->required();
  metrics_cmd->add_option("-r,--reference", reference_file, "Reference partition for NMI");
  metrics_cmd->add_flag("--no-reference", no_reference, "Ignore the dataset's ground truth");
  metrics_cmd->add_flag("--csv", csv, "Print a CSV header and row");
  metrics_cmd->add_flag("--per-cluster", per_cluster, "Also print per-cluster NED and conductance");

  auto* sweep_cmd = app.add_subcommand("sweep", "Cluster at every k in a range and score");
  source.attach(sweep_cmd);
  sweep_cmd->add_option("-k,--k", k_text, "Cluster counts, a..b or k")->required();
  sweep_cmd->add_option("-m,--method", method_name, "hierarchical or kmeans")->capture_default_str();
  sweep_cmd->add_option("--linkage", linkage_name, "single, complete or average")->capture_default_str();
  sweep_cmd->add_option("--repeats", repeats, "Runs per k")->capture_default_str();
  sweep_cmd->add_option("-s,--seed", seed, "Base seed")->capture_default_str();
  sweep_cmd->add_option("--max-iter", max_iter, "k-means iteration cap")->capture_default_str();
  sweep_cmd->add_option("--threads", threads, "Worker threads, 0 = all cores")->capture_default_str();
  sweep_cmd->add_option("-r,--reference", reference_file, "Reference partition for NMI");
  sweep_cmd->add_flag("--no-reference", no_reference, "Ignore the dataset's ground truth");
  sweep_cmd->add_option("-o,--out", out_path, "CSV output path (default stdout)");
  sweep_cmd->add_flag("--timing", timing, "Fill the elapsed_ms column");

  auto* cluster_cmd = app.add_subcommand("cluster", "Write a partition at one cluster count");
  source.attach(cluster_cmd);
  cluster_cmd->add_option("-k,--k", k, "Cluster count")->required();
  cluster_cmd->add_option("-m,--method", method_name, "hierarchical or kmeans")->capture_default_str();
  cluster_cmd->add_option("--linkage", linkage_name, "single, complete or average")->capture_default_str();
  cluster_cmd->add_option("-s,--seed", seed, "k-means seed")->capture_default_str();
  cluster_cmd->add_option("--max-iter", max_iter, "k-means iteration cap")->capture_default_str();
  cluster_cmd->add_option("-o,--out", out_path, "Partition output path (default stdout)");

  std::string kind;
  auto* generate_cmd = app.add_subcommand("generate", "Write a generated graph as an edge list");
  generate_cmd->add_option("kind", kind, "complete:N, wheel:N, figure2 or figure3")->required();
  generate_cmd->add_option("-o,--out", out_path, "Edge-list output path (default stdout)");

  std::string export_name, export_reference;
  auto* datasets_cmd = app.add_subcommand("datasets", "List or export embedded datasets");
  datasets_cmd->add_option("--export", export_name, "Write the dataset's edge list");
  datasets_cmd->add_option("--reference", export_reference, "Write the dataset's ground-truth partition");
  datasets_cmd->add_option("-o,--out", out_path, "Output path (default stdout)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("nedindex");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*metrics_cmd) {
      const Graph g = source.load();
      const Partition p = read_partition_file(partition_file, g);
      const auto reference = source.reference(g, reference_file, no_reference);
      const auto r = report(g, p, reference ? &*reference : nullptr);
      if (csv) {
        fmt::print(out, "{}\n{}\n", metrics_csv_header(), to_csv_row(r));
      } else {
        fmt::print(out, "clusters {}\nnedindex {}\nmodularity {}\n", r.cluster_count,
                   format_real(r.nedindex), format_real(r.modularity));
        if (r.nmi) fmt::print(out, "nmi {}\n", format_real(*r.nmi));
        fmt::print(out, "conductance {}\n", format_real(r.conductance));
      }
      if (per_cluster) {
        for (std::size_t c = 0; c < r.per_cluster_ned.size(); ++c) {
          fmt::print(out, "cluster {} ned {} conductance {}\n", c,
                     format_real(r.per_cluster_ned[c]), format_real(r.per_cluster_conductance[c]));
        }
      }
    } else if (*sweep_cmd) {
      const Graph g = source.load();
      SweepConfig cfg;
      cfg.k_range = parse_k_range(k_text);
      cfg.repeats = repeats;
      cfg.method = parse_method(method_name);
      cfg.linkage = parse_linkage(linkage_name);
      cfg.base_seed = seed;
      cfg.max_iter = max_iter;
      cfg.threads = threads;
      cfg.reference = source.reference(g, reference_file, no_reference);
      const auto records = sweep(g, cfg);
      Sink sink(out_path, out);
      write_sweep_csv(sink.stream(), records, timing);
      std::ostream& summary = sink.to_file() ? out : err;
      fmt::print(summary, "sweep: {} rows ({} repeat, {} averaged), k {}..{}, {}{}\n",
                 records.size(), records.size() - (cfg.k_range.last - cfg.k_range.first + 1),
                 cfg.k_range.last - cfg.k_range.first + 1, cfg.k_range.first, cfg.k_range.last,
                 to_string(cfg.method), sink.to_file() ? " -> " + out_path : "");
    } else if (*cluster_cmd) {
      const Graph g = source.load();
      const Partition p = cluster_once(g, parse_method(method_name), parse_linkage(linkage_name),
                                       k, seed, max_iter);
      Sink sink(out_path, out);
      write_partition(sink.stream(), g, p);
    } else if (*generate_cmd) {
      const Graph g = generate(kind);
      Sink sink(out_path, out);
      write_edge_list(sink.stream(), g);
    } else if (*datasets_cmd) {
      Sink sink(out_path, out);
      if (!export_name.empty()) {
        write_edge_list(sink.stream(), load_dataset(export_name));
      } else if (!export_reference.empty()) {
        const Graph g = load_dataset(export_reference);
        write_partition(sink.stream(), g, make_partition(g, dataset_reference(export_reference)));
      } else {
        for (const auto& d : embedded_datasets()) fmt::print(sink.stream(), "{}\t{}\n", d.name, d.description);
      }
    }
  } catch (const UsageError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kUsage;
  } catch (const Error& e) {
    fmt::print(err, "error ({}): {}\n", to_string(e.code()), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    fmt::print(err, "internal error: {}\n", e.what());
    return kInternal;
  }
  return 0;
}

}  // namespace nedindex::cli
