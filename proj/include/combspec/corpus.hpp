#pragma once

#include <cstdint>
#include <vector>

#include "combspec/graph.hpp"

namespace combspec {

/// Canonical adjacency code of g (n <= 11): the minimum, over relabelings that
/// list vertices by non-increasing degree, of the upper-triangle bit string.
std::uint64_t canonical_code(const SimpleGraph& g);

/// One representative per isomorphism class of graphs on n vertices, built by
/// vertex augmentation with canonical deduplication. Ordered by edge count,
/// then by canonical code. n <= 8.
std::vector<SimpleGraph> all_graphs(int n);
std::vector<SimpleGraph> connected_graphs(int n);
/// Connected graphs with min_n <= order <= max_n, grouped by order.
std::vector<SimpleGraph> connected_graphs_between(int min_n, int max_n);

}  // namespace combspec
