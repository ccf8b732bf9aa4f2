#include "nedindex/edge_list.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "nedindex/error.hpp"

namespace nedindex {

namespace {

std::optional<std::size_t> declared_vertex_count(const std::string& line) {
  std::istringstream ss(line.substr(1));
  std::string vertices_kw, edges_kw;
  std::size_t n = 0, m = 0;
  if (ss >> vertices_kw >> n >> edges_kw >> m && vertices_kw == "vertices" &&
      edges_kw == "edges") {
    std::string rest;
    if (!(ss >> rest)) return n;
  }
  return std::nullopt;
}

}  // namespace

Graph load_edge_list(std::istream& in) {
  GraphBuilder b;
  std::string line;
  std::size_t line_no = 0;
  bool seen_data = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#' || line[first] == '%') {
      if (!seen_data && b.vertex_count() == 0 && line[first] == '#') {
        if (auto n = declared_vertex_count(line.substr(first))) {
          for (std::size_t v = 0; v < *n; ++v) b.add_vertex(std::to_string(v));
        }
      }
      continue;
    }
    std::istringstream ss(line);
    std::string u, v, extra;
    if (!(ss >> u >> v) || (ss >> extra)) {
      throw Error(ErrorCode::kParseError, "expected two vertex tokens: '" + line + "'", line_no);
    }
    seen_data = true;
    b.add_edge(u, v);
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "read failure");
  return std::move(b).build();
}

Graph load_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  fmt::print(out, "# vertices {} edges {}\n", g.vertex_count(), g.edge_count());
  for (auto [u, v] : g.edges()) fmt::print(out, "{} {}\n", u, v);
}

void save_edge_list_file(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  write_edge_list(out, g);
}

}  // namespace nedindex
