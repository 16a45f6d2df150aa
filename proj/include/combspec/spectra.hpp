#pragma once

#include <span>
#include <vector>

#include "combspec/config.hpp"
#include "combspec/gadgets.hpp"

namespace combspec {

/// Finite set of weighted complete graphs of one order. Members are kept
/// sorted and unique, so iteration order is canonical.
class GraphFamily {
 public:
  explicit GraphFamily(int n) : n_(n) {}
  GraphFamily(int n, std::vector<WCG> members);
  static GraphFamily singleton(WCG g);

  int order() const { return n_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::span<const WCG> members() const { return members_; }
  const WCG& operator[](std::size_t i) const { return members_[i]; }
  bool contains(const WCG& g) const;

  friend bool operator==(const GraphFamily&, const GraphFamily&) = default;

 private:
  int n_;
  std::vector<WCG> members_;
};

/// Deduplicated, sorted set of ring elements.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<RingElem> values);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  std::span<const RingElem> values() const { return values_; }
  bool contains(const RingElem& r) const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::vector<RingElem> values_;
};

/// Union over members H, G and all n! bijections f of H *_f G.
GraphFamily family_product(const GraphFamily& h, const GraphFamily& g, const Limits& limits);
/// All pairwise sums H1 + H2.
GraphFamily family_sum(const GraphFamily& a, const GraphFamily& b, const Limits& limits);
GraphFamily family_union(const GraphFamily& a, const GraphFamily& b);

struct PowerResult {
  GraphFamily family;
  /// Smallest k with G^{*k} = G^{*(k+1)}.
  int exponent = 1;
};

/// Iterates G^{*(k+1)} = G^{*k} * G to its fixed point; throws
/// Error{size_guard} when no stabilization occurs within C(n,2) + 2 rounds.
PowerResult power_infty(const GraphFamily& g, const Limits& limits);

/// {I(K_n \ e) : e an edge of K_n}, one member per deleted edge.
GraphFamily edge_deleted_family(int n);

/// C(1,...,k)_n assembled from the fixpoint of edge_deleted_family(n), its
/// union with I(K_n), k-1 family sums and a final + I(K_n). Memoized.
GraphFamily colorings_family(int n, int k, const Limits& limits);

/// Every assignment of palette values to the edges of g, zeros elsewhere.
GraphFamily colorings_of_graph(const SimpleGraph& g, std::span<const RingElem> palette,
                               const Limits& limits);

Spectrum spectrum(const GraphFamily& family);

/// {0, -1, y}: the color palette of the edge Roman construction.
std::vector<RingElem> roman_palette();
/// Membership in C(0,-1,y): s(H * I(E(1,2))) is contained in {0, -1, y}.
bool in_roman_color_family(const WCG& h);

}  // namespace combspec
