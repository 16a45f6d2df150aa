#include "combspec/spectra.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <unordered_set>

#include "combspec/error.hpp"
#include "combspec/parallel.hpp"

namespace combspec {

namespace {

using WCGSet = std::unordered_set<WCG, WCGHash>;

void check_same_order(const GraphFamily& a, const GraphFamily& b, const char* what) {
  if (a.order() != b.order()) {
    throw Error(ErrorCode::invalid_argument, std::string(what) + ": order mismatch " +
                                                 std::to_string(a.order()) + " vs " +
                                                 std::to_string(b.order()));
  }
}

GraphFamily merge_sets(int n, std::vector<WCGSet>& sets, const Limits& limits, const char* what) {
  std::size_t largest = 0;
  for (std::size_t s = 1; s < sets.size(); ++s) {
    if (sets[s].size() > sets[largest].size()) largest = s;
  }
  WCGSet all = std::move(sets[largest]);
  for (std::size_t s = 0; s < sets.size(); ++s) {
    if (s == largest) continue;
    all.merge(sets[s]);
    limits.check_family(all.size(), what);
  }
  std::vector<WCG> members;
  members.reserve(all.size());
  while (!all.empty()) members.push_back(std::move(all.extract(all.begin()).value()));
  return GraphFamily(n, std::move(members));
}

}  // namespace

// --- GraphFamily / Spectrum -----------------------------------------------

GraphFamily::GraphFamily(int n, std::vector<WCG> members) : n_(n), members_(std::move(members)) {
  for (const auto& m : members_) {
    if (m.order() != n_) throw Error(ErrorCode::invalid_argument, "graph family: member order mismatch");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

GraphFamily GraphFamily::singleton(WCG g) {
  const int n = g.order();
  return GraphFamily(n, std::vector<WCG>{std::move(g)});
}

bool GraphFamily::contains(const WCG& g) const {
  return std::binary_search(members_.begin(), members_.end(), g);
}

Spectrum::Spectrum(std::vector<RingElem> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

bool Spectrum::contains(const RingElem& r) const {
  return std::binary_search(values_.begin(), values_.end(), r);
}

// --- family algebra -------------------------------------------------------

GraphFamily family_product(const GraphFamily& h, const GraphFamily& g, const Limits& limits) {
  check_same_order(h, g, "family_product");
  const int n = h.order();
  limits.check_order(n, "family_product");
  if (h.empty() || g.empty()) return GraphFamily(n);
  const PermutationTable perms(n);
  const std::uint64_t per_pair = perms.size();
  const std::uint64_t total =
      saturating_mul(saturating_mul(h.size(), g.size()), per_pair);
  limits.check_steps(total, "family_product");
  auto sets = parallel_chunks<WCGSet>(
      total, limits, [] { return WCGSet{}; },
      [&](WCGSet& local, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
          const std::uint64_t p = i % per_pair;
          const std::uint64_t pair = i / per_pair;
          const WCG& left = h[pair / g.size()];
          const WCG& right = g[pair % g.size()];
          local.insert(star_product_f(left, right, perms.pair_map(p)));
        }
        limits.check_family(local.size(), "family_product");
      });
  return merge_sets(n, sets, limits, "family_product");
}

GraphFamily family_sum(const GraphFamily& a, const GraphFamily& b, const Limits& limits) {
  check_same_order(a, b, "family_sum");
  const int n = a.order();
  const std::uint64_t total = saturating_mul(a.size(), b.size());
  limits.check_steps(total, "family_sum");
  auto sets = parallel_chunks<WCGSet>(
      total, limits, [] { return WCGSet{}; },
      [&](WCGSet& local, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
          local.insert(a[i / b.size()] + b[i % b.size()]);
        }
        limits.check_family(local.size(), "family_sum");
      });
  if (total == 0) return GraphFamily(n);
  return merge_sets(n, sets, limits, "family_sum");
}

GraphFamily family_union(const GraphFamily& a, const GraphFamily& b) {
  if (a.order() != b.order()) throw Error(ErrorCode::invalid_argument, "family_union: order mismatch");
  std::vector<WCG> all(a.members().begin(), a.members().end());
  all.insert(all.end(), b.members().begin(), b.members().end());
  return GraphFamily(a.order(), std::move(all));
}

PowerResult power_infty(const GraphFamily& g, const Limits& limits) {
  const int cap = static_cast<int>(pair_count(g.order())) + 2;
  GraphFamily current = g;
  for (int exponent = 1; exponent <= cap; ++exponent) {
    GraphFamily next = family_product(current, g, limits);
    if (next == current) return {std::move(current), exponent};
    current = std::move(next);
  }
  throw Error(ErrorCode::size_guard, "power_infty: no stabilization within " +
                                         std::to_string(cap) + " iterations");
}

GraphFamily edge_deleted_family(int n) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "edge_deleted_family: need n >= 2");
  const WCG all_ones = indicator(complete_graph(n));
  std::vector<WCG> members;
  for (std::size_t e = 0; e < pair_count(n); ++e) {
    WCG w = all_ones;
    const auto [a, b] = pair_at(e);
    w.set_weight(a, b, 0);
    members.push_back(std::move(w));
  }
  return GraphFamily(n, std::move(members));
}

GraphFamily colorings_family(int n, int k, const Limits& limits) {
  if (n < 2 || k < 1) throw Error(ErrorCode::invalid_argument, "colorings_family: need n >= 2 and k >= 1");
  limits.check_order(n, "colorings_family");
  limits.check_family(saturating_pow(static_cast<std::uint64_t>(k), pair_count(n)),
                      "colorings_family");

  static std::mutex cache_mutex;
  static std::map<std::pair<int, int>, GraphFamily> cache;
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find({n, k}); it != cache.end()) return it->second;
  }

  const GraphFamily ones = GraphFamily::singleton(indicator(complete_graph(n)));
  const GraphFamily step = family_union(power_infty(edge_deleted_family(n), limits).family, ones);

  // sum_{i=1}^{k-1} step, with the empty sum being the zero graph.
  GraphFamily acc = GraphFamily::singleton(zero_graph(n));
  for (int i = 1; i <= k - 1; ++i) acc = i == 1 ? step : family_sum(acc, step, limits);
  GraphFamily result = family_sum(acc, ones, limits);

  std::lock_guard lock(cache_mutex);
  cache.emplace(std::pair{n, k}, result);
  return result;
}

GraphFamily colorings_of_graph(const SimpleGraph& g, std::span<const RingElem> palette,
                               const Limits& limits) {
  const auto& edges = g.edges();
  const std::uint64_t total = saturating_pow(palette.size(), edges.size());
  limits.check_family(total, "colorings_of_graph");
  std::vector<WCG> members;
  members.reserve(total);
  std::vector<std::size_t> digits(edges.size(), 0);
  for (std::uint64_t c = 0; c < total; ++c) {
    WCG w(g.order());
    for (std::size_t e = 0; e < edges.size(); ++e) w.set_weight(edges[e].u, edges[e].v, palette[digits[e]]);
    members.push_back(std::move(w));
    for (std::size_t e = edges.size(); e-- > 0;) {
      if (++digits[e] < palette.size()) break;
      digits[e] = 0;
    }
  }
  return GraphFamily(g.order(), std::move(members));
}

Spectrum spectrum(const GraphFamily& family) {
  std::vector<RingElem> values;
  values.reserve(family.size());
  for (const auto& m : family.members()) values.push_back(s_of(m));
  return Spectrum(std::move(values));
}

std::vector<RingElem> roman_palette() { return {RingElem(0), RingElem(-1), RingElem::y()}; }

bool in_roman_color_family(const WCG& h) {
  const int n = h.order();
  if (n < 2) return true;
  Limits limits;
  limits.max_n = std::max(limits.max_n, n);
  limits.workers = 1;
  const GraphFamily probe = family_product(GraphFamily::singleton(h),
                                           GraphFamily::singleton(edge_gadget(1, 2, n)), limits);
  const auto allowed = roman_palette();
  const Spectrum values = spectrum(probe);
  for (const auto& s : values.values()) {
    if (std::find(allowed.begin(), allowed.end(), s) == allowed.end()) return false;
  }
  return true;
}

}  // namespace combspec
