#include "combspec/gadgets.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "combspec/error.hpp"

namespace combspec {

namespace {

std::size_t choose2(std::size_t m) { return m < 2 ? 0 : m * (m - 1) / 2; }

void check_pair(int j, int k, int n, const char* what) {
  if (!(1 <= j && j < k && k <= n)) {
    throw Error(ErrorCode::invalid_argument, std::string(what) + ": need 1 <= j < k <= n, got j=" +
                                                 std::to_string(j) + " k=" + std::to_string(k) +
                                                 " n=" + std::to_string(n));
  }
}

void check_order(int n, int min, const char* what) {
  if (n < min) {
    throw Error(ErrorCode::invalid_argument,
                std::string(what) + ": order must be at least " + std::to_string(min));
  }
}

void check_same_order(const WCG& a, const WCG& b, const char* what) {
  if (a.order() != b.order()) {
    throw Error(ErrorCode::invalid_argument, std::string(what) + ": order mismatch " +
                                                 std::to_string(a.order()) + " vs " +
                                                 std::to_string(b.order()));
  }
}

// Weight of basis pair gadgets by how the pair {u, v} meets {j, k}.
template <class Rule>
WCG pair_gadget(int j, int k, int n, Rule rule) {
  WCG g(n);
  for (std::size_t idx = 0; idx < pair_count(n); ++idx) {
    const auto [a, b] = pair_at(idx);
    const bool has_j = a == j || b == j;
    const bool has_k = a == k || b == k;
    g.set_weight(a, b, rule(has_j, has_k));
  }
  return g;
}

// sum over pairs j < k of x^{psi{j,k}} * gadget(j, k).
template <class Builder>
WCG pair_polynomial(int n, Builder build) {
  check_order(n, 2, "pair polynomial");
  std::vector<RingAccumulator> acc(pair_count(n));
  for (int j = 1; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      const RingElem shift = RingElem::x(static_cast<std::uint32_t>(pair_index(j, k)));
      const WCG basis = build(j, k, n);
      for (std::size_t e = 0; e < acc.size(); ++e) acc[e].add_product(shift, basis.weight_at(e));
    }
  }
  std::vector<RingElem> w;
  w.reserve(acc.size());
  for (auto& a : acc) w.push_back(a.take());
  return WCG(n, std::move(w));
}

}  // namespace

std::size_t psi(int j, int k, int n) {
  if (!(1 <= k && k < j && j <= n)) {
    throw Error(ErrorCode::invalid_argument, "psi: need 1 <= k < j <= n, got j=" +
                                                 std::to_string(j) + " k=" + std::to_string(k) +
                                                 " n=" + std::to_string(n));
  }
  return choose2(static_cast<std::size_t>(j - 1)) + static_cast<std::size_t>(k - 1);
}

std::size_t pair_index(int a, int b) {
  const int j = std::max(a, b);
  const int k = std::min(a, b);
  return choose2(static_cast<std::size_t>(j - 1)) + static_cast<std::size_t>(k - 1);
}

std::pair<int, int> pair_at(std::size_t index) {
  int j = 2;
  while (choose2(static_cast<std::size_t>(j)) <= index) ++j;
  const int k = static_cast<int>(index - choose2(static_cast<std::size_t>(j - 1))) + 1;
  return {j, k};
}

// --- Bijection ------------------------------------------------------------

Bijection::Bijection(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size() + 1, 0);
  for (int v : image_) {
    if (v < 1 || v > static_cast<int>(image_.size()) || seen[v]) {
      throw Error(ErrorCode::invalid_argument, "bijection: not a permutation of 1..n");
    }
    seen[v] = 1;
  }
}

Bijection Bijection::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  return Bijection(std::move(image));
}

Bijection Bijection::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t v = 0; v < image_.size(); ++v) {
    inv[static_cast<std::size_t>(image_[v] - 1)] = static_cast<int>(v) + 1;
  }
  return Bijection(std::move(inv));
}

std::vector<std::uint16_t> Bijection::pair_map() const {
  const int n = order();
  std::vector<std::uint16_t> map(pair_count(n));
  for (std::size_t idx = 0; idx < map.size(); ++idx) {
    const auto [a, b] = pair_at(idx);
    map[idx] = static_cast<std::uint16_t>(pair_index((*this)(a), (*this)(b)));
  }
  return map;
}

PermutationTable::PermutationTable(int n) : n_(n) {
  check_order(n, 1, "permutation table");
  if (n > 9) throw Error(ErrorCode::size_guard, "permutation table: order above 9");
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  const std::size_t m = pair_count(n);
  do {
    for (int v : image) images_.push_back(static_cast<std::uint8_t>(v));
    for (std::size_t idx = 0; idx < m; ++idx) {
      const auto [a, b] = pair_at(idx);
      maps_.push_back(static_cast<std::uint16_t>(
          pair_index(image[static_cast<std::size_t>(a - 1)], image[static_cast<std::size_t>(b - 1)])));
    }
    ++count_;
  } while (std::next_permutation(image.begin(), image.end()));
}

Bijection PermutationTable::bijection(std::size_t index) const {
  const auto first = images_.begin() + static_cast<std::ptrdiff_t>(index * static_cast<std::size_t>(n_));
  return Bijection(std::vector<int>(first, first + n_));
}

// --- WeightedCompleteGraph ------------------------------------------------

WeightedCompleteGraph::WeightedCompleteGraph(int n) : n_(n) {
  check_order(n, 1, "weighted complete graph");
  weights_.resize(pair_count(n));
}

WeightedCompleteGraph::WeightedCompleteGraph(int n, std::vector<RingElem> weights)
    : n_(n), weights_(std::move(weights)) {
  check_order(n, 1, "weighted complete graph");
  if (weights_.size() != pair_count(n)) {
    throw Error(ErrorCode::invalid_argument,
                "weighted complete graph: expected " + std::to_string(pair_count(n)) +
                    " weights, got " + std::to_string(weights_.size()));
  }
}

WeightedCompleteGraph& WeightedCompleteGraph::operator+=(const WeightedCompleteGraph& o) {
  check_same_order(*this, o, "wcg_add");
  for (std::size_t e = 0; e < weights_.size(); ++e) weights_[e] += o.weights_[e];
  return *this;
}

std::strong_ordering compare(const WeightedCompleteGraph& a, const WeightedCompleteGraph& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  for (std::size_t e = 0; e < a.weights_.size(); ++e) {
    if (auto c = compare(a.weights_[e], b.weights_[e]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t WeightedCompleteGraph::hash() const {
  std::size_t seed = static_cast<std::size_t>(n_);
  for (const auto& w : weights_) seed = seed * 1099511628211ULL ^ w.hash();
  return seed;
}

// --- embeddings -----------------------------------------------------------

WCG indicator(const SimpleGraph& g) {
  WCG w(g.order());
  for (const auto& e : g.edges()) w.set_weight(e.u, e.v, 1);
  return w;
}

WCG embed_weighted(const SimpleGraph& g, const EdgeLabels& labels) {
  WCG w(g.order());
  for (const auto& [e, label] : labels) {
    if (!g.adjacent(e.u, e.v)) {
      throw Error(ErrorCode::invalid_argument, "embed_weighted: label on non-edge {" +
                                                   std::to_string(e.u) + "," +
                                                   std::to_string(e.v) + "}");
    }
    if (label <= 0) throw Error(ErrorCode::invalid_argument, "embed_weighted: labels must be positive");
    w.set_weight(e.u, e.v, label);
  }
  for (const auto& e : g.edges()) {
    if (!labels.contains(e)) {
      throw Error(ErrorCode::invalid_argument, "embed_weighted: edge {" + std::to_string(e.u) +
                                                   "," + std::to_string(e.v) + "} unlabeled");
    }
  }
  return w;
}

WCG dist_graph(const SimpleGraph& g) {
  const DistanceTable d = all_pairs_distances(g);
  if (!d.connected()) throw Error(ErrorCode::precondition, "dist_graph: graph is disconnected");
  WCG w(g.order());
  for (std::size_t idx = 0; idx < pair_count(g.order()); ++idx) {
    const auto [a, b] = pair_at(idx);
    w.set_weight(a, b, *d.at(a, b));
  }
  return w;
}

WCG zero_graph(int n) { return WCG(n); }

// --- basis gadgets --------------------------------------------------------

WCG star_gadget(int center, int n) {
  if (center < 1 || center > n) throw Error(ErrorCode::invalid_argument, "star_gadget: center out of range");
  WCG g(n);
  for (int v = 1; v <= n; ++v) {
    if (v != center) g.set_weight(center, v, 1);
  }
  return g;
}

WCG edge_gadget(int j, int k, int n) {
  check_pair(std::min(j, k), std::max(j, k), n, "edge_gadget");
  WCG g(n);
  g.set_weight(j, k, 1);
  return g;
}

WCG sign_gadget(int j, int k, int n) {
  check_pair(j, k, n, "sign_gadget");
  return pair_gadget(j, k, n, [](bool has_j, bool has_k) -> RingElem {
    if (has_j && has_k) return RingElem::i();
    if (has_j) return 1;
    if (has_k) return -1;
    return {};
  });
}

WCG roman_gadget(int j, int k, int n) {
  check_pair(j, k, n, "roman_gadget");
  return pair_gadget(j, k, n, [](bool has_j, bool has_k) -> RingElem {
    if (has_j && has_k) return RingElem::i();
    if (has_j || has_k) return 1;
    return {};
  });
}

WCG domination_gadget(int k, int n) {
  if (k < 1 || k > n - 1) {
    throw Error(ErrorCode::invalid_argument, "domination_gadget: need 1 <= k <= n-1");
  }
  WCG g(n);
  const int cut = n - k;
  for (int j = 1; j <= cut; ++j) {
    for (int l = cut + 1; l <= n; ++l) {
      g.set_weight(j, l, RingElem::x(static_cast<std::uint32_t>(j - 1)));
    }
  }
  return g;
}

// --- polynomial composites ------------------------------------------------

WCG star_polynomial(int n) {
  check_order(n, 2, "star_polynomial");
  WCG g(n);
  for (int j = 1; j <= n; ++j) {
    g += scale(RingElem::x(static_cast<std::uint32_t>(j - 1)), star_gadget(j, n));
  }
  return g;
}

WCG edge_polynomial(int n) {
  check_order(n, 2, "edge_polynomial");
  WCG g(n);
  for (int j = 2; j <= n; ++j) {
    for (int k = 1; k < j; ++k) {
      g += scale(RingElem::x(static_cast<std::uint32_t>(psi(j, k, n))), edge_gadget(k, j, n));
    }
  }
  return g;
}

WCG sign_polynomial(int n) { return pair_polynomial(n, sign_gadget); }

WCG roman_polynomial(int n) { return pair_polynomial(n, roman_gadget); }

WCG antimagic_gadget(int n) {
  return star_polynomial(n) + scale(RingElem::x(static_cast<std::uint32_t>(n)), edge_polynomial(n));
}

// --- single-graph algebra -------------------------------------------------

WCG wcg_add(const WCG& a, const WCG& b) {
  WCG r = a;
  r += b;
  return r;
}

WCG operator+(const WCG& a, const WCG& b) { return wcg_add(a, b); }

WCG scale(const RingElem& c, const WCG& g) {
  std::vector<RingElem> w;
  w.reserve(g.weights().size());
  for (const auto& x : g.weights()) w.push_back(c * x);
  return WCG(g.order(), std::move(w));
}

WCG eval_x(const WCG& g, const GaussInt& value) {
  std::vector<RingElem> w;
  w.reserve(g.weights().size());
  for (const auto& x : g.weights()) w.push_back(eval_x(x, value));
  return WCG(g.order(), std::move(w));
}

WCG star_product_f(const WCG& h, const WCG& g, std::span<const std::uint16_t> pair_map) {
  std::vector<RingElem> w;
  w.reserve(pair_map.size());
  for (std::size_t e = 0; e < pair_map.size(); ++e) {
    w.push_back(h.weight_at(e) * g.weight_at(pair_map[e]));
  }
  return WCG(h.order(), std::move(w));
}

WCG star_product_f(const WCG& h, const WCG& g, const Bijection& f) {
  check_same_order(h, g, "star_product_f");
  if (f.order() != h.order()) throw Error(ErrorCode::invalid_argument, "star_product_f: bijection order mismatch");
  return star_product_f(h, g, f.pair_map());
}

RingElem s_of(const WCG& g) {
  RingAccumulator acc;
  for (const auto& w : g.weights()) acc.add(w);
  return acc.take();
}

RingElem s_of_product(const WCG& h, const WCG& g, std::span<const std::uint16_t> pair_map) {
  RingAccumulator acc;
  for (std::size_t e = 0; e < pair_map.size(); ++e) {
    acc.add_product(h.weight_at(e), g.weight_at(pair_map[e]));
  }
  return acc.take();
}

BigInt hamiltonian_sum(const SimpleGraph& h, const SimpleGraph& g, const Bijection& f) {
  if (h.order() != g.order()) throw Error(ErrorCode::invalid_argument, "hamiltonian_sum: order mismatch");
  const RingElem s = s_of(star_product_f(indicator(h), dist_graph(g), f));
  return s.is_zero() ? BigInt(0) : s.terms()[0].coef.re();
}

}  // namespace combspec
