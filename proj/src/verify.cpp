#include "combspec/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "combspec/corpus.hpp"
#include "combspec/error.hpp"

namespace combspec {

namespace {

std::vector<int> as_labels(const std::vector<LabeledEdge>& labeled) {
  std::vector<int> out;
  out.reserve(labeled.size());
  for (const auto& l : labeled) out.push_back(static_cast<int>(l.label));
  return out;
}

std::vector<SimpleGraph> corpus(const VerifyOptions& opts, int floor_n) {
  if (!opts.graphs.empty()) return opts.graphs;
  return connected_graphs_between(std::max(opts.min_n, floor_n), opts.max_n);
}

json graph_key(const SimpleGraph& g) {
  return {{"graph6", to_graph6(g)}, {"n", g.order()}, {"m", g.size()}};
}

struct Tally {
  VerifyReport& report;
  void row(json r, bool agree) {
    r["agree"] = agree;
    ++report.checks;
    if (!agree) ++report.disagreements;
    report.rows.push_back(std::move(r));
  }
  void skip(const SimpleGraph& g, const std::string& why) {
    json r = graph_key(g);
    r["skipped"] = why;
    ++report.skipped;
    report.rows.push_back(std::move(r));
  }
};

SearchOptions search_options(const VerifyOptions& opts) {
  SearchOptions s;
  s.limits = opts.limits;
  return s;
}

void suite_antimagic(const VerifyOptions& opts, Tally& t) {
  for (const auto& g : corpus(opts, 2)) {
    if (g.order() < 2 || has_isolated_vertex(g)) {
      t.skip(g, "isolated vertex");
      continue;
    }
    const Verdict v = antimagic_unweighted(g, search_options(opts));
    const auto o = oracle::antimagic(g, opts.limits);
    const bool witness_ok = !v.holds || oracle::is_antimagic_labeling(g, as_labels(v.witness_labels));
    json r = graph_key(g);
    r["spectral"] = v.holds;
    r["oracle"] = o.holds;
    r["witness_verified"] = witness_ok;
    t.row(std::move(r), v.holds == o.holds && witness_ok);
  }
}

void suite_antimagic_lemma(const VerifyOptions& opts, Tally& t) {
  for (const auto& g : corpus(opts, 2)) {
    if (g.order() < 2 || has_isolated_vertex(g)) {
      t.skip(g, "isolated vertex");
      continue;
    }
    const bool complete = g.size() == pair_count(g.order());
    std::vector<int> labels(g.size());
    std::iota(labels.begin(), labels.end(), 1);
    std::size_t count = 0, lemma_true = 0, theorem_true = 0, oracle_true = 0, mismatches = 0;
    do {
      EdgeLabels el;
      for (std::size_t e = 0; e < labels.size(); ++e) el[g.edges()[e]] = labels[e];
      const WCG w = embed_weighted(g, el);
      const bool lemma = antimagic_weighted(w, complete, opts.limits).holds;
      const bool theorem = antimagic_family(GraphFamily::singleton(w), search_options(opts)).holds;
      const bool direct = oracle::is_antimagic_labeling(g, labels);
      ++count;
      lemma_true += lemma ? 1 : 0;
      theorem_true += theorem ? 1 : 0;
      oracle_true += direct ? 1 : 0;
      mismatches += (lemma != theorem || theorem != direct) ? 1 : 0;
    } while (std::next_permutation(labels.begin(), labels.end()));
    json r = graph_key(g);
    r["labelings"] = count;
    r["lemma_true"] = lemma_true;
    r["theorem_true"] = theorem_true;
    r["oracle_true"] = oracle_true;
    r["mismatches"] = mismatches;
    t.row(std::move(r), mismatches == 0);
  }
}

void suite_strength(const VerifyOptions& opts, Tally& t) {
  for (const auto& g : corpus(opts, 2)) {
    if (g.order() < 2 || has_isolated_vertex(g)) {
      t.skip(g, "isolated vertex");
      continue;
    }
    const auto o = oracle::strength(g, opts.k_max, opts.limits);
    for (int k = 1; k <= opts.k_max; ++k) {
      const Verdict v = strength_at_most(g, k, search_options(opts));
      const bool oracle_holds = o.holds && *o.value <= k;
      const bool witness_ok = !v.holds || oracle::is_irregular_labeling(g, as_labels(v.witness_labels));
      json r = graph_key(g);
      r["k"] = k;
      r["spectral"] = v.holds;
      r["oracle"] = oracle_holds;
      r["oracle_strength"] = o.value ? json(*o.value) : json(nullptr);
      r["witness_verified"] = witness_ok;
      t.row(std::move(r), v.holds == oracle_holds && witness_ok);
    }
  }
}

void suite_one_two_three(const VerifyOptions& opts, Tally& t) {
  for (const auto& g : corpus(opts, 3)) {
    if (component_orders(g).front() < 3) {
      t.skip(g, "component of order below 3");
      continue;
    }
    const Verdict v = one_two_three(g, search_options(opts));
    const auto o = oracle::chi_sigma(g, 3, opts.limits);
    const bool witness_ok =
        !v.holds || oracle::is_vertex_coloring_labeling(g, as_labels(v.witness_labels));
    json r = graph_key(g);
    r["spectral"] = v.holds;
    r["oracle"] = o.holds;
    r["witness_verified"] = witness_ok;
    t.row(std::move(r), v.holds == o.holds && witness_ok);
  }
}

void suite_domination(const VerifyOptions& opts, Tally& t) {
  for (const auto& g : corpus(opts, 2)) {
    if (g.order() < 2) {
      t.skip(g, "order below 2");
      continue;
    }
    for (int k = 1; k <= g.order() - 1; ++k) {
      const Verdict v = dominating_k(g, k, search_options(opts));
      const auto o = oracle::domination(g, k, opts.limits);
      const bool witness_ok = !v.holds || (static_cast<int>(v.witness_set.size()) == k &&
                                           oracle::is_dominating_set(g, v.witness_set));
      json r = graph_key(g);
      r["k"] = k;
      r["spectral"] = v.holds;
      r["oracle"] = o.holds;
      r["witness_verified"] = witness_ok;
      t.row(std::move(r), v.holds == o.holds && witness_ok);
    }
  }
}

void suite_domination_coefficients(const VerifyOptions& opts, Tally& t) {
  for (const auto& g : corpus(opts, 2)) {
    if (g.order() < 2) {
      t.skip(g, "order below 2");
      continue;
    }
    const int n = g.order();
    opts.limits.check_order(n, "domination-coefficients");
    const WCG target = indicator(g);
    const PermutationTable perms(n);
    for (int k = 1; k <= n - 1; ++k) {
      const WCG gadget = domination_gadget(k, n);
      std::size_t identity_ok = 0, remark_ok = 0;
      for (std::size_t p = 0; p < perms.size(); ++p) {
        const Bijection f = perms.bijection(p);
        const RingElem s = s_of_product(gadget, target, perms.pair_map(p));
        bool inside = true, outside = true;
        for (int j = 1; j <= n - k; ++j) {
          long long in_d = 0, out_d = 0;
          for (int l = 1; l <= n; ++l) {
            if (!g.adjacent(f(j), f(l))) continue;
            (l > n - k ? in_d : out_d) += 1;
          }
          const RingElem c = coef_x(s, static_cast<std::uint32_t>(j - 1));
          inside = inside && c == RingElem(in_d);
          outside = outside && c == RingElem(out_d);
        }
        identity_ok += inside ? 1 : 0;
        remark_ok += outside ? 1 : 0;
      }
      json r = graph_key(g);
      r["k"] = k;
      r["bijections"] = perms.size();
      r["neighbors_in_set_identity"] = identity_ok;
      r["neighbors_in_complement_identity"] = remark_ok;
      t.row(std::move(r), identity_ok == perms.size());
    }
  }
}

void suite_edge_roman(const VerifyOptions& opts, Tally& t) {
  for (const auto& g : corpus(opts, 2)) {
    if (g.size() < 1) {
      t.skip(g, "no edges");
      continue;
    }
    const auto o = oracle::edge_roman(g, opts.limits);
    // Weight identity on every {0,-1,y} coloring of g.
    std::size_t colorings = 0, weight_ok = 0;
    const GraphFamily colored = colorings_of_graph(g, roman_palette(), opts.limits);
    for (const auto& h : colored.members()) {
      const auto labels = decode_roman(g, h);
      long long w = 0;
      for (const auto& l : labels) w += l.label;
      ++colorings;
      weight_ok += BigInt(w) == predicted_roman_weight(g, h) ? 1 : 0;
    }
    json base = graph_key(g);
    base["oracle_value"] = *o.value;
    base["colorings"] = colorings;
    base["weight_identity"] = weight_ok;
    t.row(base, weight_ok == colorings);
    for (int k = 0; k <= static_cast<int>(g.size()); ++k) {
      const Verdict v = edge_roman_at_most(g, k, search_options(opts));
      const bool oracle_holds = *o.value <= k;
      bool witness_ok = true;
      if (v.holds) {
        const auto labels = as_labels(v.witness_labels);
        const long long w = std::accumulate(labels.begin(), labels.end(), 0LL);
        witness_ok = oracle::is_edge_roman_function(g, labels) && w == *v.witness_weight && w <= k;
      }
      json r = graph_key(g);
      r["k"] = k;
      r["spectral"] = v.holds;
      r["oracle"] = oracle_holds;
      r["witness_verified"] = witness_ok;
      t.row(std::move(r), v.holds == oracle_holds && witness_ok);
    }
  }
}

void suite_hamiltonian(const VerifyOptions& opts, Tally& t) {
  for (const auto& g : corpus(opts, 3)) {
    if (g.order() < 3 || !is_connected(g)) {
      t.skip(g, "needs a connected graph on at least 3 vertices");
      continue;
    }
    const BigInt h = hamiltonian_number(g, opts.limits);
    const auto o = oracle::hamiltonian(g, opts.limits);
    json r = graph_key(g);
    r["spectral"] = h.str();
    r["oracle"] = std::to_string(*o.value);
    t.row(std::move(r), h == *o.value);
  }
}

void suite_colorings(const VerifyOptions& opts, Tally& t) {
  for (const auto& g : corpus(opts, 2)) {
    if (g.order() < 2) {
      t.skip(g, "order below 2");
      continue;
    }
    for (int k = 2; k <= opts.k_max; ++k) {
      const GraphFamily built = family_product(GraphFamily::singleton(indicator(g)),
                                               colorings_family(g.order(), k, opts.limits), opts.limits);
      std::vector<RingElem> palette;
      for (int c = 1; c <= k; ++c) palette.emplace_back(c);
      const GraphFamily direct = colorings_of_graph(g, palette, opts.limits);
      json r = graph_key(g);
      r["k"] = k;
      r["count"] = built.size();
      r["expected"] = saturating_pow(static_cast<std::uint64_t>(k), g.size());
      t.row(std::move(r), built == direct && built.size() == r["expected"].get<std::uint64_t>());
    }
  }
}

void suite_roman_colorings(const VerifyOptions& opts, Tally& t) {
  for (const auto& g : corpus(opts, 2)) {
    if (g.order() < 2) {
      t.skip(g, "order below 2");
      continue;
    }
    const auto palette = roman_palette();
    const GraphFamily all_colored = colorings_of_graph(complete_graph(g.order()), palette, opts.limits);
    const GraphFamily built =
        family_product(GraphFamily::singleton(indicator(g)), all_colored, opts.limits);
    const GraphFamily direct = colorings_of_graph(g, palette, opts.limits);
    const bool members_ok = std::all_of(all_colored.members().begin(), all_colored.members().end(),
                                        [](const WCG& h) { return in_roman_color_family(h); });
    json r = graph_key(g);
    r["count"] = built.size();
    r["expected"] = direct.size();
    r["membership_verified"] = members_ok;
    t.row(std::move(r), built == direct && members_ok);
  }
}

}  // namespace

json VerifyReport::to_json() const {
  return {{"schema", kSchemaVersion}, {"suite", suite},     {"checks", checks},
          {"disagreements", disagreements}, {"skipped", skipped}, {"ok", ok()},
          {"rows", rows}};
}

const std::vector<std::string>& theorem_suites() {
  static const std::vector<std::string> names = {
      "antimagic",  "antimagic-lemma", "irregular-strength", "one-two-three", "domination",
      "domination-coefficients", "edge-roman", "hamiltonian", "colorings", "roman-colorings"};
  return names;
}

VerifyReport verify_theorem(std::string_view suite, const VerifyOptions& opts) {
  static const std::vector<std::pair<std::string_view, std::function<void(const VerifyOptions&, Tally&)>>>
      table = {{"antimagic", suite_antimagic},
               {"antimagic-lemma", suite_antimagic_lemma},
               {"irregular-strength", suite_strength},
               {"one-two-three", suite_one_two_three},
               {"domination", suite_domination},
               {"domination-coefficients", suite_domination_coefficients},
               {"edge-roman", suite_edge_roman},
               {"hamiltonian", suite_hamiltonian},
               {"colorings", suite_colorings},
               {"roman-colorings", suite_roman_colorings}};
  for (const auto& [name, run] : table) {
    if (name == suite) {
      VerifyReport report;
      report.suite = std::string(suite);
      Tally t{report};
      run(opts, t);
      return report;
    }
  }
  throw Error(ErrorCode::invalid_argument, "unknown verification suite '" + std::string(suite) + "'");
}

const std::vector<std::string>& identity_suites() {
  static const std::vector<std::string> names = {"S1", "E1", "R1"};
  return names;
}

VerifyReport verify_identity(std::string_view identity, int n_min, int n_max) {
  VerifyReport report;
  report.suite = std::string(identity);
  Tally t{report};
  for (int n = std::max(2, n_min); n <= n_max; ++n) {
    const WCG ones = indicator(complete_graph(n));
    WCG lhs(n), rhs(n);
    if (identity == "S1") {
      lhs = eval_x(star_polynomial(n), GaussInt(1));
      rhs = scale(RingElem(2), ones);
    } else if (identity == "E1") {
      lhs = eval_x(edge_polynomial(n), GaussInt(1));
      rhs = ones;
    } else if (identity == "R1") {
      lhs = eval_x(roman_polynomial(n), GaussInt(1));
      rhs = scale(RingElem(GaussInt(BigInt(2 * n - 4), BigInt(1))), ones);
    } else {
      throw Error(ErrorCode::invalid_argument, "unknown identity '" + std::string(identity) + "'");
    }
    json r = {{"n", n}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}};
    t.row(std::move(r), lhs == rhs);
  }
  return report;
}

}  // namespace combspec
