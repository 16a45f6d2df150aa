#pragma once

// Decision procedures that answer classical graph questions by searching a
// combinatorial spectrum for a polynomial with a prescribed coefficient shape.
//
// Every search enumerates (family member, bijection) pairs in canonical order:
// members sorted, bijections lexicographic, bijection index varying fastest.
// The reported witness is the first hit in that order, so verdicts do not
// depend on the worker count.

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "combspec/config.hpp"
#include "combspec/gadgets.hpp"
#include "combspec/spectra.hpp"

namespace combspec {

struct SearchStats {
  std::uint64_t members = 0;
  std::uint64_t bijections = 0;
  /// Candidates up to and including the witness in canonical order, or all of
  /// them when no witness exists.
  std::uint64_t candidates = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct LabeledEdge {
  Edge edge;
  long long label = 0;
  friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

struct Verdict {
  bool holds = false;
  std::optional<RingElem> witness_polynomial;
  std::optional<WCG> witness_graph;
  std::optional<Bijection> witness_bijection;
  /// Dominating set for dominating_k.
  std::vector<int> witness_set;
  /// Edge labeling, or the decoded edge Roman function.
  std::vector<LabeledEdge> witness_labels;
  /// Weight of the decoded edge Roman function.
  std::optional<long long> witness_weight;
  /// Number of satisfying candidates; exhaustive mode only.
  std::optional<std::uint64_t> witness_count;
  SearchStats stats;
};

struct SearchOptions {
  Limits limits;
  /// Also count every satisfying candidate instead of stopping at the first.
  bool exhaustive = false;
};

// Weighted single-graph criteria. Weights must be nonnegative integer constants.
Verdict antimagic_weighted(const WCG& g, bool is_complete, const Limits& limits = {});
Verdict irregular_weighted(const WCG& g, const Limits& limits = {});
Verdict local_irregular_weighted(const WCG& g, const Limits& limits = {});

/// Searches s(family * (S[x] + x^n E[x])).
Verdict antimagic_family(const GraphFamily& family, const SearchOptions& opts = {});

Verdict antimagic_unweighted(const SimpleGraph& g, const SearchOptions& opts = {});
/// Holds iff the irregularity strength of g is at most k.
Verdict strength_at_most(const SimpleGraph& g, int k, const SearchOptions& opts = {});
/// Holds iff g admits a vertex-coloring edge labeling from {1,2,3}.
Verdict one_two_three(const SimpleGraph& g, const SearchOptions& opts = {});
/// Holds iff g has a dominating set of cardinality k.
Verdict dominating_k(const SimpleGraph& g, int k, const SearchOptions& opts = {});
/// Holds iff the edge Roman domination number of g is at most k (0 <= k <= |E|).
Verdict edge_roman_at_most(const SimpleGraph& g, int k, const SearchOptions& opts = {});

/// {s_H(f, G)} over all bijections f.
Spectrum hamiltonian_spectrum(const SimpleGraph& h, const SimpleGraph& g, const Limits& limits = {});
/// Minimum of the C_n-Hamiltonian spectrum; requires n >= 3 and g connected.
BigInt hamiltonian_number(const SimpleGraph& g, const Limits& limits = {});

// Coefficient tests, exposed for verification suites.

/// Coefficients 0..n-1 pairwise distinct and {coef_j : n <= j < n + C(n,2)}
/// a superset of {1..edge_count}.
bool antimagic_coefficients(const RingElem& p, int n, std::size_t edge_count);
/// Coefficients 0..n-1 pairwise distinct (zeros included).
bool distinct_vertex_coefficients(const RingElem& p, int n);
/// No coefficient among 0..count-1 is a nonzero purely imaginary constant.
bool no_nonzero_imaginary_coefficient(const RingElem& p, std::size_t count);
/// Coefficients 0..count-1 all nonzero.
bool all_coefficients_nonzero(const RingElem& p, std::size_t count);
/// No coefficient among 0..count-1 lies in -i + Z.
bool no_coefficient_in_minus_i_plus_z(const RingElem& p, std::size_t count);

/// Decodes a {0,-1,y} coloring H of g into f~: -1 -> 0, 0 -> 1, y -> 2.
std::vector<LabeledEdge> decode_roman(const SimpleGraph& g, const WCG& h);
/// |E(g)| + s(H)(1), the weight predicted for the decoded function.
BigInt predicted_roman_weight(const SimpleGraph& g, const WCG& h);

}  // namespace combspec
