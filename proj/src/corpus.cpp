#include "combspec/corpus.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <tuple>

#include "combspec/error.hpp"

namespace combspec {

namespace {

constexpr std::uint64_t bit_of(int a, int b) {  // 0-based, a < b
  return std::uint64_t{1} << (static_cast<unsigned>(b * (b - 1) / 2 + a));
}

SimpleGraph decode(int n, std::uint64_t code) {
  SimpleGraph g(n);
  for (int b = 1; b < n; ++b) {
    for (int a = 0; a < b; ++a) {
      if (code & bit_of(a, b)) g.add_edge(a + 1, b + 1);
    }
  }
  return g;
}

}  // namespace

std::uint64_t canonical_code(const SimpleGraph& g) {
  const int n = g.order();
  if (n > 11) throw Error(ErrorCode::invalid_argument, "canonical_code: order above 11");
  // Vertex invariant: (degree, sum of neighbour degrees), larger first.
  std::vector<std::pair<int, int>> inv(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) {
    int s = 0;
    for (int w : g.neighbors(v)) s += g.degree(w);
    inv[static_cast<std::size_t>(v - 1)] = {g.degree(v), s};
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return inv[static_cast<std::size_t>(a)] != inv[static_cast<std::size_t>(b)]
               ? inv[static_cast<std::size_t>(a)] > inv[static_cast<std::size_t>(b)]
               : a < b;
  });
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && inv[static_cast<std::size_t>(order[j])] == inv[static_cast<std::size_t>(order[i])]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  for (auto [b, e] : cells) std::sort(order.begin() + static_cast<std::ptrdiff_t>(b), order.begin() + static_cast<std::ptrdiff_t>(e));

  std::uint64_t best = ~std::uint64_t{0};
  for (;;) {
    std::uint64_t code = 0;
    for (int b = 1; b < n; ++b) {
      for (int a = 0; a < b; ++a) {
        if (g.adjacent(order[static_cast<std::size_t>(a)] + 1, order[static_cast<std::size_t>(b)] + 1)) {
          code |= bit_of(a, b);
        }
      }
    }
    best = std::min(best, code);
    // Odometer over the cells' permutations.
    std::size_t c = cells.size();
    while (c-- > 0) {
      auto first = order.begin() + static_cast<std::ptrdiff_t>(cells[c].first);
      auto last = order.begin() + static_cast<std::ptrdiff_t>(cells[c].second);
      if (std::next_permutation(first, last)) break;
    }
    if (c == static_cast<std::size_t>(-1)) break;
  }
  return best;
}

std::vector<SimpleGraph> all_graphs(int n) {
  if (n < 1 || n > 8) throw Error(ErrorCode::invalid_argument, "all_graphs: order must lie in 1..8");
  std::set<std::uint64_t> codes{0};
  for (int m = 2; m <= n; ++m) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : codes) {
      const SimpleGraph base = decode(m - 1, code);
      for (std::uint32_t nbrs = 0; nbrs < (1U << static_cast<unsigned>(m - 1)); ++nbrs) {
        SimpleGraph g(m, base.edges());
        for (int a = 0; a < m - 1; ++a) {
          if (nbrs & (1U << static_cast<unsigned>(a))) g.add_edge(a + 1, m);
        }
        next.insert(canonical_code(g));
      }
    }
    codes = std::move(next);
  }
  std::vector<std::pair<int, std::uint64_t>> keyed;
  for (std::uint64_t c : codes) keyed.emplace_back(std::popcount(c), c);
  std::sort(keyed.begin(), keyed.end());
  std::vector<SimpleGraph> out;
  out.reserve(keyed.size());
  for (auto [_, c] : keyed) out.push_back(decode(n, c));
  return out;
}

std::vector<SimpleGraph> connected_graphs(int n) {
  std::vector<SimpleGraph> out;
  for (auto& g : all_graphs(n)) {
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<SimpleGraph> connected_graphs_between(int min_n, int max_n) {
  std::vector<SimpleGraph> out;
  for (int n = std::max(1, min_n); n <= max_n; ++n) {
    auto part = connected_graphs(n);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace combspec
