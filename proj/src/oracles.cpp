#include "combspec/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "combspec/error.hpp"

namespace combspec::oracle {

namespace {

// Advances an odometer over {1..k}^m, last position fastest. False on wrap.
bool next_labeling(std::vector<int>& labels, int k) {
  for (std::size_t i = labels.size(); i-- > 0;) {
    if (labels[i] < k) {
      ++labels[i];
      return true;
    }
    labels[i] = 1;
  }
  return false;
}

void guard(std::uint64_t count, const Limits& limits, const char* what) {
  limits.check_steps(count, what);
}

std::vector<std::vector<int>> bfs_distances(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> dist(static_cast<std::size_t>(n) + 1,
                                     std::vector<int>(static_cast<std::size_t>(n) + 1, -1));
  for (int s = 1; s <= n; ++s) {
    std::queue<int> q;
    q.push(s);
    dist[s][s] = 0;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w = 1; w <= n; ++w) {
        if (g.adjacent(v, w) && dist[s][w] < 0) {
          dist[s][w] = dist[s][v] + 1;
          q.push(w);
        }
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<long long> weighted_degrees(const SimpleGraph& g, const std::vector<int>& labels) {
  std::vector<long long> deg(static_cast<std::size_t>(g.order()) + 1, 0);
  const auto& edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    deg[edges[e].u] += labels[e];
    deg[edges[e].v] += labels[e];
  }
  return deg;
}

bool is_irregular_labeling(const SimpleGraph& g, const std::vector<int>& labels) {
  auto deg = weighted_degrees(g, labels);
  std::set<long long> seen(deg.begin() + 1, deg.end());
  return seen.size() == static_cast<std::size_t>(g.order());
}

bool is_antimagic_labeling(const SimpleGraph& g, const std::vector<int>& labels) {
  std::vector<int> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1) return false;
  }
  return is_irregular_labeling(g, labels);
}

bool is_vertex_coloring_labeling(const SimpleGraph& g, const std::vector<int>& labels) {
  const auto deg = weighted_degrees(g, labels);
  for (const auto& e : g.edges()) {
    if (deg[e.u] == deg[e.v]) return false;
  }
  return true;
}

bool is_dominating_set(const SimpleGraph& g, const std::vector<int>& vertices) {
  std::vector<char> in(static_cast<std::size_t>(g.order()) + 1, 0);
  for (int v : vertices) in[v] = 1;
  for (int v = 1; v <= g.order(); ++v) {
    if (in[v]) continue;
    bool covered = false;
    for (int u : vertices) covered = covered || g.adjacent(u, v);
    if (!covered) return false;
  }
  return true;
}

bool is_edge_roman_function(const SimpleGraph& g, const std::vector<int>& labels) {
  const auto& edges = g.edges();
  for (std::size_t a = 0; a < edges.size(); ++a) {
    if (labels[a] != 0) continue;
    bool defended = false;
    for (std::size_t b = 0; b < edges.size() && !defended; ++b) {
      const bool share = edges[a].u == edges[b].u || edges[a].u == edges[b].v ||
                         edges[a].v == edges[b].u || edges[a].v == edges[b].v;
      defended = b != a && share && labels[b] == 2;
    }
    if (!defended) return false;
  }
  return true;
}

std::optional<long long> cyclic_length(const SimpleGraph& g, const std::vector<int>& ordering) {
  const auto dist = bfs_distances(g);
  long long total = 0;
  for (std::size_t i = 0; i < ordering.size(); ++i) {
    const int d = dist[ordering[i]][ordering[(i + 1) % ordering.size()]];
    if (d < 0) return std::nullopt;
    total += d;
  }
  return total;
}

OracleResult antimagic(const SimpleGraph& g, const Limits& limits) {
  if (has_isolated_vertex(g) || g.order() < 2) {
    throw Error(ErrorCode::precondition, "antimagic oracle: graph has an isolated vertex");
  }
  guard(factorial(static_cast<int>(g.size())), limits, "antimagic oracle");
  OracleResult r;
  std::vector<int> labels(g.size());
  std::iota(labels.begin(), labels.end(), 1);
  do {
    ++r.enumerated;
    if (is_irregular_labeling(g, labels)) {
      r.holds = true;
      r.witness = labels;
      break;
    }
  } while (std::next_permutation(labels.begin(), labels.end()));
  return r;
}

OracleResult strength(const SimpleGraph& g, int k_max, const Limits& limits) {
  if (has_isolated_vertex(g) || g.order() < 2) {
    throw Error(ErrorCode::precondition, "strength oracle: graph has an isolated vertex");
  }
  std::uint64_t budget = 0;
  for (int k = 1; k <= k_max; ++k) {
    budget = saturating_mul(1, budget + saturating_pow(static_cast<std::uint64_t>(k), g.size()));
  }
  guard(budget, limits, "strength oracle");
  OracleResult r;
  for (int k = 1; k <= k_max && !r.holds; ++k) {
    std::vector<int> labels(g.size(), 1);
    do {
      ++r.enumerated;
      if (is_irregular_labeling(g, labels)) {
        r.holds = true;
        r.value = k;
        r.witness = labels;
        break;
      }
    } while (next_labeling(labels, k));
  }
  return r;
}

OracleResult chi_sigma(const SimpleGraph& g, int k, const Limits& limits) {
  if (component_orders(g).front() < 3) {
    throw Error(ErrorCode::precondition, "chi_sigma oracle: component of order below 3");
  }
  guard(saturating_pow(static_cast<std::uint64_t>(k), g.size()), limits, "chi_sigma oracle");
  OracleResult r;
  std::vector<int> labels(g.size(), 1);
  do {
    ++r.enumerated;
    if (is_vertex_coloring_labeling(g, labels)) {
      r.holds = true;
      r.witness = labels;
      break;
    }
  } while (next_labeling(labels, k));
  return r;
}

OracleResult domination(const SimpleGraph& g, int k, const Limits& limits) {
  const int n = g.order();
  if (k < 1 || k > n) throw Error(ErrorCode::precondition, "domination oracle: k must lie in 1..n");
  guard(saturating_pow(2, static_cast<std::uint64_t>(n)), limits, "domination oracle");
  OracleResult r;
  std::vector<int> subset(static_cast<std::size_t>(k));
  std::iota(subset.begin(), subset.end(), 1);
  for (;;) {
    ++r.enumerated;
    if (is_dominating_set(g, subset)) {
      r.holds = true;
      r.witness = subset;
      return r;
    }
    int i = k - 1;
    while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) return r;
    ++subset[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

OracleResult edge_roman(const SimpleGraph& g, const Limits& limits) {
  if (g.size() == 0) throw Error(ErrorCode::precondition, "edge roman oracle: graph has no edges");
  guard(saturating_pow(3, g.size()), limits, "edge roman oracle");
  OracleResult r;
  // Odometer over {0,1,2}^m via labels shifted by one.
  std::vector<int> shifted(g.size(), 1);
  std::vector<int> labels(g.size());
  do {
    ++r.enumerated;
    for (std::size_t e = 0; e < labels.size(); ++e) labels[e] = shifted[e] - 1;
    if (!is_edge_roman_function(g, labels)) continue;
    const long long w = std::accumulate(labels.begin(), labels.end(), 0LL);
    if (!r.value || w < *r.value) {
      r.holds = true;
      r.value = w;
      r.witness = labels;
    }
  } while (next_labeling(shifted, 3));
  return r;
}

OracleResult hamiltonian(const SimpleGraph& g, const Limits& limits) {
  const int n = g.order();
  if (n < 3) throw Error(ErrorCode::precondition, "hamiltonian oracle: need at least 3 vertices");
  guard(factorial(n - 1), limits, "hamiltonian oracle");
  const auto dist = bfs_distances(g);
  for (int v = 1; v <= n; ++v) {
    if (dist[1][v] < 0) throw Error(ErrorCode::precondition, "hamiltonian oracle: graph is disconnected");
  }
  OracleResult r;
  std::vector<int> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 2);
  do {
    if (rest.front() > rest.back()) continue;
    ++r.enumerated;
    long long total = dist[1][rest.front()] + dist[rest.back()][1];
    for (std::size_t i = 0; i + 1 < rest.size(); ++i) total += dist[rest[i]][rest[i + 1]];
    if (!r.value || total < *r.value) {
      r.holds = true;
      r.value = total;
      r.witness = {1};
      r.witness.insert(r.witness.end(), rest.begin(), rest.end());
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return r;
}

}  // namespace combspec::oracle
