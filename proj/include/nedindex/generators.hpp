#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nedindex/graph.hpp"

namespace nedindex {

/// K_n. Throws kInvalidSize for n == 0.
Graph generate_complete(std::size_t n);

/// Hub vertex 0 joined to every vertex of the cycle 1..n-1. Requires n >= 4.
Graph generate_wheel(std::size_t n);

/// Three 4-cliques {A..D}, {E..H}, {I..L} joined pairwise by one edge each
/// (D-E, H-I, L-A): 12 vertices, 21 edges, every clique has volume 14.
Graph figure2_graph();
/// Per-vertex cluster of the three-clique split of figure2_graph().
std::vector<std::size_t> figure2_cliques();

/// Reconstruction of a 15-vertex graph with three dense groups
/// {A..E}, {F..K}, {L..O}. Only the group structure is known from the
/// drawing; the exact edges here are a plausible stand-in.
Graph figure3_graph();
std::vector<std::size_t> figure3_groups();

/// Zachary's karate club: 34 members, 78 ties, ids 0..33 in the usual order.
Graph karate_club();
/// Faction each member joined after the split (0 = instructor, 1 = officer).
std::vector<std::size_t> karate_factions();

/// Parses "complete:N", "wheel:N", "figure2" or "figure3".
Graph generate(std::string_view spec);

struct DatasetInfo {
  std::string name;
  std::string description;
};
std::vector<DatasetInfo> embedded_datasets();
Graph load_dataset(std::string_view name);
/// Ground-truth partition shipped with a dataset, if any.
std::vector<std::size_t> dataset_reference(std::string_view name);

}  // namespace nedindex
