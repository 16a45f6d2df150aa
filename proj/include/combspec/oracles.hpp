#pragma once

// Naive exhaustive implementations of the classical definitions. They share
// nothing with the spectral machinery beyond the SimpleGraph type.
//
// Enumeration orders (reproducible):
//  - edge labelings: edges in SimpleGraph::edges() order, first edge most
//    significant, labels ascending;
//  - bijective labelings: std::next_permutation over 1..|E|;
//  - vertex subsets: lexicographic combinations;
//  - cyclic orderings: vertex 1 first, remaining vertices permuted
//    lexicographically, keeping only orderings whose second vertex is smaller
//    than the last one.

#include <cstdint>
#include <optional>
#include <vector>

#include "combspec/config.hpp"
#include "combspec/graph.hpp"

namespace combspec::oracle {

struct OracleResult {
  bool holds = false;
  std::optional<long long> value;
  /// Labeling (one entry per edge), vertex subset, or cyclic ordering.
  std::vector<int> witness;
  std::uint64_t enumerated = 0;
};

/// Some bijection E -> {1..|E|} gives pairwise-distinct weighted degrees.
OracleResult antimagic(const SimpleGraph& g, const Limits& limits = {});
/// Least k <= k_max admitting an irregular labeling E -> {1..k}.
OracleResult strength(const SimpleGraph& g, int k_max, const Limits& limits = {});
/// Some labeling E -> {1..k} separates the weighted degrees of adjacent vertices.
OracleResult chi_sigma(const SimpleGraph& g, int k, const Limits& limits = {});
/// Some k-subset of vertices dominates g.
OracleResult domination(const SimpleGraph& g, int k, const Limits& limits = {});
/// Minimum weight of an edge Roman dominating function.
OracleResult edge_roman(const SimpleGraph& g, const Limits& limits = {});
/// Minimum of d(pi) over cyclic orderings pi.
OracleResult hamiltonian(const SimpleGraph& g, const Limits& limits = {});

// Direct re-verification of witnesses against the definitions.
std::vector<long long> weighted_degrees(const SimpleGraph& g, const std::vector<int>& labels);
bool is_antimagic_labeling(const SimpleGraph& g, const std::vector<int>& labels);
bool is_irregular_labeling(const SimpleGraph& g, const std::vector<int>& labels);
bool is_vertex_coloring_labeling(const SimpleGraph& g, const std::vector<int>& labels);
bool is_dominating_set(const SimpleGraph& g, const std::vector<int>& vertices);
bool is_edge_roman_function(const SimpleGraph& g, const std::vector<int>& labels);
/// d(pi) for a cyclic ordering; nullopt when g is disconnected.
std::optional<long long> cyclic_length(const SimpleGraph& g, const std::vector<int>& ordering);

}  // namespace combspec::oracle
