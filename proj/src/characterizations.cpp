#include "combspec/characterizations.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "combspec/error.hpp"
#include "combspec/parallel.hpp"

namespace combspec {

namespace {

using Clock = std::chrono::steady_clock;

long long constant_label(const RingElem& w, const char* what) {
  const auto c = w.constant();
  if (!c || !c->is_real() || c->re() < 0 ||
      c->re() > std::numeric_limits<long long>::max()) {
    throw Error(ErrorCode::invalid_argument,
                std::string(what) + ": weights must be nonnegative integer constants, got " +
                    w.to_string());
  }
  return static_cast<long long>(c->re());
}

void require_natural_weights(const WCG& g, const char* what) {
  for (const auto& w : g.weights()) constant_label(w, what);
}

std::size_t nonzero_weights(const WCG& g) {
  return static_cast<std::size_t>(
      std::count_if(g.weights().begin(), g.weights().end(), [](const RingElem& w) { return !w.is_zero(); }));
}

std::vector<LabeledEdge> labels_on(const SimpleGraph& g, const WCG& h) {
  std::vector<LabeledEdge> out;
  for (const auto& e : g.edges()) out.push_back({e, constant_label(h.weight(e.u, e.v), "labels")});
  return out;
}

// Enumerates (member, bijection) pairs, bijection index fastest, and reports
// the first pair whose polynomial is accepted.
// `reject` may discard a pair before its polynomial is built; it must only
// return true for pairs that `accept` would refuse.
template <class Members, class Reject, class Eval, class Accept>
Verdict search_pairs_filtered(const Members& family, const PermutationTable& perms,
                              const SearchOptions& opts, Reject&& reject, Eval&& eval, Accept&& accept) {
  const auto start = Clock::now();
  const std::uint64_t per_member = perms.size();
  const std::uint64_t total = saturating_mul(family.size(), per_member);
  opts.limits.check_steps(total, "search");
  auto test = [&](std::uint64_t i) {
    const std::size_t m = static_cast<std::size_t>(i / per_member);
    const auto map = perms.pair_map(i % per_member);
    if (reject(m, map)) return false;
    const RingElem p = eval(family[m], map);
    return accept(m, p);
  };
  Verdict v;
  v.stats.members = family.size();
  v.stats.bijections = per_member;
  const auto hit = parallel_find_first(total, opts.limits, test);
  if (opts.exhaustive) v.witness_count = parallel_count(total, opts.limits, test);
  v.stats.candidates = hit ? *hit + 1 : total;
  if (hit) {
    const std::size_t m = static_cast<std::size_t>(*hit / per_member);
    v.holds = true;
    v.witness_graph = family[m];
    v.witness_bijection = perms.bijection(*hit % per_member);
    v.witness_polynomial = eval(family[m], perms.pair_map(*hit % per_member));
  }
  v.stats.elapsed = Clock::now() - start;
  return v;
}

template <class Members, class Eval, class Accept>
Verdict search_pairs(const Members& family, const PermutationTable& perms, const SearchOptions& opts,
                     Eval&& eval, Accept&& accept) {
  return search_pairs_filtered(
      family, perms, opts, [](std::size_t, std::span<const std::uint16_t>) { return false; }, eval, accept);
}

void require_no_isolated(const SimpleGraph& g, const char* what) {
  if (g.order() < 2 || has_isolated_vertex(g)) {
    throw Error(ErrorCode::precondition, std::string(what) + ": graph has an isolated vertex");
  }
}

Verdict single_graph_verdict(const WCG& g, bool holds, std::chrono::nanoseconds elapsed) {
  Verdict v;
  v.holds = holds;
  if (holds) v.witness_graph = g;
  v.stats.members = 1;
  v.stats.bijections = factorial(g.order());
  v.stats.candidates = v.stats.bijections;
  v.stats.elapsed = elapsed;
  return v;
}

Spectrum single_spectrum(const WCG& g, const WCG& probe, const Limits& limits) {
  return spectrum(family_product(GraphFamily::singleton(g), GraphFamily::singleton(probe), limits));
}

}  // namespace

// --- coefficient tests ----------------------------------------------------

bool distinct_vertex_coefficients(const RingElem& p, int n) {
  std::vector<RingElem> c;
  for (int j = 0; j < n; ++j) c.push_back(coef_x(p, static_cast<std::uint32_t>(j)));
  std::sort(c.begin(), c.end());
  return std::adjacent_find(c.begin(), c.end()) == c.end();
}

bool antimagic_coefficients(const RingElem& p, int n, std::size_t edge_count) {
  if (!distinct_vertex_coefficients(p, n)) return false;
  std::set<RingElem> rest;
  const std::size_t first = static_cast<std::size_t>(n);
  for (std::size_t j = first; j < first + pair_count(n); ++j) {
    rest.insert(coef_x(p, static_cast<std::uint32_t>(j)));
  }
  for (std::size_t label = 1; label <= edge_count; ++label) {
    if (!rest.contains(RingElem(static_cast<long long>(label)))) return false;
  }
  return true;
}

bool no_nonzero_imaginary_coefficient(const RingElem& p, std::size_t count) {
  for (std::size_t j = 0; j < count; ++j) {
    if (classify(coef_x(p, static_cast<std::uint32_t>(j))).is_nonzero_pure_imaginary) return false;
  }
  return true;
}

bool all_coefficients_nonzero(const RingElem& p, std::size_t count) {
  for (std::size_t j = 0; j < count; ++j) {
    if (coef_x(p, static_cast<std::uint32_t>(j)).is_zero()) return false;
  }
  return true;
}

bool no_coefficient_in_minus_i_plus_z(const RingElem& p, std::size_t count) {
  for (std::size_t j = 0; j < count; ++j) {
    if (classify(coef_x(p, static_cast<std::uint32_t>(j))).is_in_minus_i_plus_Z) return false;
  }
  return true;
}

std::vector<LabeledEdge> decode_roman(const SimpleGraph& g, const WCG& h) {
  std::vector<LabeledEdge> out;
  for (const auto& e : g.edges()) {
    const RingElem& w = h.weight(e.u, e.v);
    long long label = 0;
    if (w == RingElem(-1)) {
      label = 0;
    } else if (w.is_zero()) {
      label = 1;
    } else if (w == RingElem::y()) {
      label = 2;
    } else {
      throw Error(ErrorCode::invalid_argument, "decode_roman: weight outside {0,-1,y}: " + w.to_string());
    }
    out.push_back({e, label});
  }
  return out;
}

BigInt predicted_roman_weight(const SimpleGraph& g, const WCG& h) {
  const GaussInt at_one = eval(s_of(h), GaussInt(1), GaussInt(1));
  return BigInt(g.size()) + at_one.re();
}

// --- weighted single graphs ----------------------------------------------

Verdict antimagic_weighted(const WCG& g, bool is_complete, const Limits& limits) {
  const auto start = Clock::now();
  require_natural_weights(g, "antimagic_weighted");
  const int n = g.order();
  const bool sums_distinct =
      single_spectrum(g, star_gadget(1, n), limits).size() == static_cast<std::size_t>(n);
  const std::size_t edges = is_complete ? pair_count(n) : nonzero_weights(g);
  std::vector<RingElem> expected;
  for (std::size_t label = is_complete ? 1 : 0; label <= edges; ++label) {
    expected.emplace_back(static_cast<long long>(label));
  }
  const bool labels_exact =
      n >= 2 && single_spectrum(g, edge_gadget(1, 2, n), limits) == Spectrum(std::move(expected));
  return single_graph_verdict(g, sums_distinct && labels_exact, Clock::now() - start);
}

Verdict irregular_weighted(const WCG& g, const Limits& limits) {
  const auto start = Clock::now();
  require_natural_weights(g, "irregular_weighted");
  const bool holds = single_spectrum(g, star_gadget(1, g.order()), limits).size() ==
                     static_cast<std::size_t>(g.order());
  return single_graph_verdict(g, holds, Clock::now() - start);
}

Verdict local_irregular_weighted(const WCG& g, const Limits& limits) {
  const auto start = Clock::now();
  require_natural_weights(g, "local_irregular_weighted");
  if (g.order() < 2) return single_graph_verdict(g, true, Clock::now() - start);
  const Spectrum s = single_spectrum(g, sign_gadget(1, 2, g.order()), limits);
  const bool holds = std::none_of(s.values().begin(), s.values().end(), [](const RingElem& r) {
    return classify(r).is_nonzero_pure_imaginary;
  });
  return single_graph_verdict(g, holds, Clock::now() - start);
}

// --- family and unweighted searches --------------------------------------

Verdict antimagic_family(const GraphFamily& family, const SearchOptions& opts) {
  const int n = family.order();
  if (family.empty() || n < 2) {
    Verdict v;
    v.stats.members = family.size();
    return v;
  }
  opts.limits.check_order(n, "antimagic_family");
  std::vector<std::size_t> edge_counts;
  edge_counts.reserve(family.size());
  for (const auto& m : family.members()) {
    require_natural_weights(m, "antimagic_family");
    edge_counts.push_back(nonzero_weights(m));
  }
  const WCG gadget = antimagic_gadget(n);
  const PermutationTable perms(n);
  return search_pairs(
      family, perms, opts,
      [&](const WCG& member, std::span<const std::uint16_t> map) {
        return s_of_product(member, gadget, map);
      },
      [&](std::size_t m, const RingElem& p) { return antimagic_coefficients(p, n, edge_counts[m]); });
}

Verdict antimagic_unweighted(const SimpleGraph& g, const SearchOptions& opts) {
  require_no_isolated(g, "antimagic_unweighted");
  const int n = g.order();
  opts.limits.check_order(n, "antimagic_unweighted");
  const int k = static_cast<int>(g.size());
  const GraphFamily colorings = family_product(GraphFamily::singleton(indicator(g)),
                                               colorings_family(n, k, opts.limits), opts.limits);
  Verdict v = antimagic_family(colorings, opts);
  if (v.holds) v.witness_labels = labels_on(g, *v.witness_graph);
  return v;
}

Verdict strength_at_most(const SimpleGraph& g, int k, const SearchOptions& opts) {
  require_no_isolated(g, "strength_at_most");
  if (k < 1) throw Error(ErrorCode::invalid_argument, "strength_at_most: k must be positive");
  const int n = g.order();
  opts.limits.check_order(n, "strength_at_most");
  const GraphFamily colorings = family_product(GraphFamily::singleton(indicator(g)),
                                               colorings_family(n, k, opts.limits), opts.limits);
  const WCG gadget = star_polynomial(n);
  const PermutationTable perms(n);
  Verdict v = search_pairs(
      colorings, perms, opts,
      [&](const WCG& member, std::span<const std::uint16_t> map) {
        return s_of_product(member, gadget, map);
      },
      [&](std::size_t, const RingElem& p) { return distinct_vertex_coefficients(p, n); });
  if (v.holds) v.witness_labels = labels_on(g, *v.witness_graph);
  return v;
}

Verdict one_two_three(const SimpleGraph& g, const SearchOptions& opts) {
  const auto orders = component_orders(g);
  if (orders.front() < 3) {
    throw Error(ErrorCode::precondition,
                "one_two_three: component of order " + std::to_string(orders.front()));
  }
  const int n = g.order();
  opts.limits.check_order(n, "one_two_three");
  opts.limits.check_steps(
      saturating_mul(saturating_pow(3, g.size()), factorial(n)), "one_two_three");
  const GraphFamily colorings = family_product(GraphFamily::singleton(indicator(g)),
                                               colorings_family(n, 3, opts.limits), opts.limits);
  const WCG gadget = sign_polynomial(n);
  const PermutationTable perms(n);
  Verdict v = search_pairs(
      colorings, perms, opts,
      [&](const WCG& member, std::span<const std::uint16_t> map) {
        return s_of_product(member, gadget, map);
      },
      [&](std::size_t, const RingElem& p) { return no_nonzero_imaginary_coefficient(p, pair_count(n)); });
  if (v.holds) v.witness_labels = labels_on(g, *v.witness_graph);
  return v;
}

Verdict dominating_k(const SimpleGraph& g, int k, const SearchOptions& opts) {
  const int n = g.order();
  if (k < 1 || k > n - 1) {
    throw Error(ErrorCode::precondition, "dominating_k: k must lie in 1.." + std::to_string(n - 1));
  }
  opts.limits.check_order(n, "dominating_k");
  const GraphFamily gadget = GraphFamily::singleton(domination_gadget(k, n));
  const WCG target = indicator(g);
  const PermutationTable perms(n);
  const auto checked = static_cast<std::size_t>(n - k);
  Verdict v = search_pairs(
      gadget, perms, opts,
      [&](const WCG& member, std::span<const std::uint16_t> map) {
        return s_of_product(member, target, map);
      },
      [&](std::size_t, const RingElem& p) { return all_coefficients_nonzero(p, checked); });
  if (v.holds) {
    for (int j = n - k + 1; j <= n; ++j) v.witness_set.push_back((*v.witness_bijection)(j));
    std::sort(v.witness_set.begin(), v.witness_set.end());
  }
  return v;
}

Verdict edge_roman_at_most(const SimpleGraph& g, int k, const SearchOptions& opts) {
  const auto m = static_cast<long long>(g.size());
  if (m < 1) throw Error(ErrorCode::precondition, "edge_roman_at_most: graph has no edges");
  if (k < 0 || k > m) {
    throw Error(ErrorCode::precondition, "edge_roman_at_most: need 0 <= k <= |E| = " + std::to_string(m));
  }
  const int n = g.order();
  opts.limits.check_order(n, "edge_roman_at_most");
  const auto palette = roman_palette();
  // Decoded functions are visited in descending lexicographic order (first
  // edge most significant), so witnesses favour 2-labels on early edges.
  std::vector<std::pair<std::vector<long long>, WCG>> keyed;
  const GraphFamily all_colorings = colorings_of_graph(g, palette, opts.limits);
  for (const auto& h : all_colorings.members()) {
    std::vector<long long> key;
    for (const auto& l : decode_roman(g, h)) key.push_back(l.label);
    keyed.emplace_back(std::move(key), h);
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<WCG> colorings;
  colorings.reserve(keyed.size());
  for (auto& [_, h] : keyed) colorings.push_back(std::move(h));
  const WCG gadget = roman_polynomial(n);
  const GaussInt divisor(BigInt(2 * n - 4), BigInt(1));
  const PermutationTable perms(n);

  auto weight_of = [&](const RingElem& p) {
    const auto q = eval(p, GaussInt(1), GaussInt(1)).divide_exact(divisor);
    if (!q || !q->is_real()) {
      throw Error(ErrorCode::internal, "edge_roman_at_most: q(1,1) = " +
                                           eval(p, GaussInt(1), GaussInt(1)).to_string() +
                                           " is not a real multiple of " + divisor.to_string());
    }
    return BigInt(m) + q->re();
  };
  // q(1,1) through the evaluation homomorphism: s(H(1) *_f R[1]) needs only
  // machine integers, so pairs over the weight bound skip the full product.
  struct Gauss64 {
    long long re = 0, im = 0;
  };
  std::vector<Gauss64> gadget_at_one;
  for (const auto& w : gadget.weights()) {
    const GaussInt c = eval(w, GaussInt(1), GaussInt(1));
    gadget_at_one.push_back({static_cast<long long>(c.re()), static_cast<long long>(c.im())});
  }
  std::vector<std::vector<long long>> member_at_one;
  for (const auto& h : colorings) {
    std::vector<long long> row;
    for (const auto& w : h.weights()) row.push_back(static_cast<long long>(eval(w, GaussInt(1), GaussInt(1)).re()));
    member_at_one.push_back(std::move(row));
  }
  const long long c = 2LL * n - 4, norm = c * c + 1;
  auto over_bound = [&](std::size_t member, std::span<const std::uint16_t> map) {
    Gauss64 q;
    const auto& row = member_at_one[member];
    for (std::size_t e = 0; e < map.size(); ++e) {
      q.re += row[e] * gadget_at_one[map[e]].re;
      q.im += row[e] * gadget_at_one[map[e]].im;
    }
    // (a+bi)/(c+i) = ((ac+b) + (bc-a)i) / (c^2+1)
    const long long num_re = q.re * c + q.im, num_im = q.im * c - q.re;
    if (num_re % norm != 0 || num_im != 0) {
      throw Error(ErrorCode::internal, "edge_roman_at_most: q(1,1) = " + std::to_string(q.re) + "+" +
                                           std::to_string(q.im) + "i is not a real multiple of " +
                                           divisor.to_string());
    }
    return m + num_re / norm > k;
  };
  Verdict v = search_pairs_filtered(
      colorings, perms, opts, over_bound,
      [&](const WCG& member, std::span<const std::uint16_t> map) {
        return s_of_product(member, gadget, map);
      },
      [&](std::size_t, const RingElem& p) {
        return weight_of(p) <= k && no_coefficient_in_minus_i_plus_z(p, pair_count(n));
      });
  if (v.holds) {
    v.witness_labels = decode_roman(g, *v.witness_graph);
    v.witness_weight = static_cast<long long>(weight_of(*v.witness_polynomial));
  }
  return v;
}

// --- Hamiltonian spectra --------------------------------------------------

Spectrum hamiltonian_spectrum(const SimpleGraph& h, const SimpleGraph& g, const Limits& limits) {
  if (h.order() != g.order()) throw Error(ErrorCode::invalid_argument, "hamiltonian_spectrum: order mismatch");
  if (!is_connected(g)) throw Error(ErrorCode::precondition, "hamiltonian_spectrum: graph is disconnected");
  limits.check_order(g.order(), "hamiltonian_spectrum");
  return spectrum(family_product(GraphFamily::singleton(indicator(h)),
                                 GraphFamily::singleton(dist_graph(g)), limits));
}

BigInt hamiltonian_number(const SimpleGraph& g, const Limits& limits) {
  if (g.order() < 3) throw Error(ErrorCode::precondition, "hamiltonian_number: need at least 3 vertices");
  const Spectrum s = hamiltonian_spectrum(cycle_graph(g.order()), g, limits);
  BigInt best = -1;
  for (const auto& value : s.values()) {
    const BigInt v = value.is_zero() ? BigInt(0) : value.terms()[0].coef.re();
    if (best < 0 || v < best) best = v;
  }
  return best;
}

}  // namespace combspec
