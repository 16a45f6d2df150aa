#pragma once

// Weighted complete graphs over Z[i][x,y] and the gadget graphs whose star
// products encode labeling and domination problems as polynomial spectra.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "combspec/graph.hpp"
#include "combspec/ring.hpp"

namespace combspec {

/// Lexicographic index of the pair (j, k), j > k, starting from 0:
/// C(j-1, 2) + k - 1. Requires 1 <= k < j <= n.
std::size_t psi(int j, int k, int n);
/// Unordered form used everywhere else: psi(max, min).
std::size_t pair_index(int a, int b);
/// Inverse of pair_index: returns (j, k) with j > k.
std::pair<int, int> pair_at(std::size_t index);
constexpr std::size_t pair_count(int n) {
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

/// A permutation f of {1..n}; f(v) is the image of vertex v.
class Bijection {
 public:
  /// `image[v-1]` is f(v). Throws Error{invalid_argument} unless a permutation.
  explicit Bijection(std::vector<int> image);
  static Bijection identity(int n);

  int order() const { return static_cast<int>(image_.size()); }
  int operator()(int v) const { return image_[static_cast<std::size_t>(v - 1)]; }
  const std::vector<int>& image() const { return image_; }
  Bijection inverse() const;
  /// pair_index(f(u), f(v)) for every pair index of {u, v}.
  std::vector<std::uint16_t> pair_map() const;

  friend bool operator==(const Bijection&, const Bijection&) = default;

 private:
  std::vector<int> image_;
};

/// All n! bijections of {1..n} in lexicographic order of their image vectors,
/// with precomputed pair maps.
class PermutationTable {
 public:
  explicit PermutationTable(int n);
  int order() const { return n_; }
  std::size_t size() const { return count_; }
  Bijection bijection(std::size_t index) const;
  std::span<const std::uint16_t> pair_map(std::size_t index) const {
    const std::size_t m = pair_count(n_);
    return {maps_.data() + index * m, m};
  }

 private:
  int n_;
  std::size_t count_ = 0;
  std::vector<std::uint8_t> images_;
  std::vector<std::uint16_t> maps_;
};

/// Complete graph on {1..n} with one ring element per unordered pair, stored
/// in pair_index order. Equality is labeled equality.
class WeightedCompleteGraph {
 public:
  explicit WeightedCompleteGraph(int n);
  WeightedCompleteGraph(int n, std::vector<RingElem> weights);

  int order() const { return n_; }
  const RingElem& weight(int a, int b) const { return weights_[pair_index(a, b)]; }
  const RingElem& weight_at(std::size_t index) const { return weights_[index]; }
  void set_weight(int a, int b, RingElem w) { weights_[pair_index(a, b)] = std::move(w); }
  std::span<const RingElem> weights() const { return weights_; }

  WeightedCompleteGraph& operator+=(const WeightedCompleteGraph& o);
  friend bool operator==(const WeightedCompleteGraph& a, const WeightedCompleteGraph& b) {
    return a.n_ == b.n_ && a.weights_ == b.weights_;
  }
  friend std::strong_ordering compare(const WeightedCompleteGraph& a,
                                      const WeightedCompleteGraph& b);
  friend bool operator<(const WeightedCompleteGraph& a, const WeightedCompleteGraph& b) {
    return compare(a, b) < 0;
  }
  std::size_t hash() const;

 private:
  int n_;
  std::vector<RingElem> weights_;
};

using WCG = WeightedCompleteGraph;

struct WCGHash {
  std::size_t operator()(const WCG& g) const { return g.hash(); }
};

using EdgeLabels = std::map<Edge, long long>;

WCG indicator(const SimpleGraph& g);
/// Labels must be given on exactly the edges of g.
WCG embed_weighted(const SimpleGraph& g, const EdgeLabels& labels);
/// Requires g connected.
WCG dist_graph(const SimpleGraph& g);
WCG zero_graph(int n);

// Basis gadgets.
WCG star_gadget(int center, int n);          // I(S(j))
WCG edge_gadget(int j, int k, int n);        // I(E(j,k))
WCG sign_gadget(int j, int k, int n);        // J(j,k): i / 1 at j / -1 at k
WCG roman_gadget(int j, int k, int n);       // R(j,k): i / 1 at either end
WCG domination_gadget(int k, int n);         // D_k[x]

// Polynomial composites.
WCG star_polynomial(int n);       // S[x] = sum_j x^{j-1} I(S(j))
WCG edge_polynomial(int n);       // E[x] = sum x^{psi(j,k)} I(E(j,k))
WCG sign_polynomial(int n);       // M[x] = sum x^{psi{j,k}} J(j,k)
WCG roman_polynomial(int n);      // R[x] = sum x^{psi{j,k}} R(j,k)
WCG antimagic_gadget(int n);      // S[x] + x^n E[x]

WCG wcg_add(const WCG& a, const WCG& b);
WCG operator+(const WCG& a, const WCG& b);
/// Multiplies every weight by c.
WCG scale(const RingElem& c, const WCG& g);
/// Substitutes x = value in every weight.
WCG eval_x(const WCG& g, const GaussInt& value);

/// H *_f G: weight of e is nu_H(e) * nu_G(f(e)), on the vertex set of H.
WCG star_product_f(const WCG& h, const WCG& g, const Bijection& f);
WCG star_product_f(const WCG& h, const WCG& g, std::span<const std::uint16_t> pair_map);

RingElem s_of(const WCG& g);
/// s(H *_f G) without materializing the product.
RingElem s_of_product(const WCG& h, const WCG& g, std::span<const std::uint16_t> pair_map);

/// Sum over edges {x,y} of H of d_G(f(x), f(y)). Requires G connected.
BigInt hamiltonian_sum(const SimpleGraph& h, const SimpleGraph& g, const Bijection& f);

}  // namespace combspec
