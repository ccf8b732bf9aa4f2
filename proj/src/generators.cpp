#include "nedindex/generators.hpp"

#include <array>
#include <charconv>
#include <utility>

#include "nedindex/error.hpp"

namespace nedindex {

namespace {

std::string letter(std::size_t i) { return std::string(1, static_cast<char>('A' + i)); }

Graph lettered_graph(std::size_t n, std::span<const std::pair<char, char>> edges) {
  GraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_vertex(letter(i));
  for (auto [u, v] : edges) b.add_edge(std::string(1, u), std::string(1, v));
  return std::move(b).build();
}

void add_clique(std::vector<std::pair<char, char>>& edges, std::string_view members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) edges.emplace_back(members[i], members[j]);
  }
}

std::size_t parse_size(std::string_view text, std::string_view spec) {
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::kInvalidSize, "bad size in generator spec '" + std::string(spec) + "'");
  }
  return n;
}

}  // namespace

Graph generate_complete(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidSize, "complete graph needs at least 1 vertex");
  GraphBuilder b;
  for (std::size_t v = 0; v < n; ++v) b.add_vertex(std::to_string(v));
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return std::move(b).build();
}

Graph generate_wheel(std::size_t n) {
  if (n < 4) throw Error(ErrorCode::kInvalidSize, "wheel graph needs at least 4 vertices");
  GraphBuilder b;
  for (std::size_t v = 0; v < n; ++v) b.add_vertex(std::to_string(v));
  const auto rim = static_cast<VertexId>(n - 1);
  for (VertexId v = 1; v <= rim; ++v) {
    b.add_edge(0, v);
    b.add_edge(v, v == rim ? 1 : v + 1);
  }
  return std::move(b).build();
}

Graph figure2_graph() {
  std::vector<std::pair<char, char>> edges;
  add_clique(edges, "ABCD");
  add_clique(edges, "EFGH");
  add_clique(edges, "IJKL");
  edges.insert(edges.end(), {{'D', 'E'}, {'H', 'I'}, {'L', 'A'}});
  return lettered_graph(12, edges);
}

std::vector<std::size_t> figure2_cliques() {
  return {0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2};
}

Graph figure3_graph() {
  std::vector<std::pair<char, char>> edges;
  add_clique(edges, "ABCDE");
  add_clique(edges, "FGHIJK");
  add_clique(edges, "LMNO");
  std::erase_if(edges, [](auto e) {
    return e == std::pair{'A', 'E'} || e == std::pair{'F', 'K'} || e == std::pair{'G', 'J'};
  });
  edges.insert(edges.end(), {{'E', 'F'}, {'C', 'H'}, {'K', 'L'}, {'O', 'A'}});
  return lettered_graph(15, edges);
}

std::vector<std::size_t> figure3_groups() {
  return {0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2};
}

Graph generate(std::string_view spec) {
  if (spec == "figure2") return figure2_graph();
  if (spec == "figure3") return figure3_graph();
  auto colon = spec.find(':');
  if (colon != std::string_view::npos) {
    auto kind = spec.substr(0, colon);
    auto n = parse_size(spec.substr(colon + 1), spec);
    if (kind == "complete") return generate_complete(n);
    if (kind == "wheel") return generate_wheel(n);
  }
  throw Error(ErrorCode::kInvalidConfig,
              "unknown generator '" + std::string(spec) +
                  "' (expected complete:N, wheel:N, figure2 or figure3)");
}

std::vector<DatasetInfo> embedded_datasets() {
  return {{"karate", "Zachary karate club, 34 vertices, 78 edges, two-faction reference"}};
}

Graph load_dataset(std::string_view name) {
  if (name == "karate") return karate_club();
  throw Error(ErrorCode::kInvalidConfig, "unknown dataset '" + std::string(name) + "'");
}

std::vector<std::size_t> dataset_reference(std::string_view name) {
  if (name == "karate") return karate_factions();
  throw Error(ErrorCode::kInvalidConfig, "unknown dataset '" + std::string(name) + "'");
}

}  // namespace nedindex
