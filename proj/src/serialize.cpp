#include "combspec/serialize.hpp"

#include "combspec/error.hpp"

namespace combspec {

namespace {

BigInt big_from_string(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_string()) {
    throw Error(ErrorCode::parse, std::string("ring element term: missing string field '") + field + "'");
  }
  try {
    return BigInt(j[field].get<std::string>());
  } catch (const std::exception&) {
    throw Error(ErrorCode::parse, std::string("ring element term: bad integer in '") + field + "'");
  }
}

json labels_json(const std::vector<LabeledEdge>& labels) {
  json out = json::array();
  for (const auto& l : labels) out.push_back({{"u", l.edge.u}, {"v", l.edge.v}, {"label", l.label}});
  return out;
}

}  // namespace

json to_json(const RingElem& r) {
  json out = json::array();
  for (const auto& t : r.terms()) {
    out.push_back({{"x", t.mono.x}, {"y", t.mono.y}, {"re", t.coef.re().str()}, {"im", t.coef.im().str()}});
  }
  return out;
}

RingElem ring_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::parse, "ring element: expected an array of terms");
  std::vector<Term> terms;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("x") || !t.contains("y") || !t["x"].is_number_unsigned() ||
        !t["y"].is_number_unsigned()) {
      throw Error(ErrorCode::parse, "ring element term: expected nonnegative integer 'x' and 'y'");
    }
    terms.push_back(Term{Monomial{t["x"].get<std::uint32_t>(), t["y"].get<std::uint32_t>()},
                         GaussInt(big_from_string(t, "re"), big_from_string(t, "im"))});
  }
  return RingElem::from_terms(std::move(terms));
}

json to_json(const WCG& g) {
  json w = json::array();
  for (const auto& x : g.weights()) w.push_back(to_json(x));
  return {{"n", g.order()}, {"weights", std::move(w)}};
}

WCG wcg_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("weights") || !j["weights"].is_array()) {
    throw Error(ErrorCode::parse, "weighted graph: expected {\"n\", \"weights\"}");
  }
  std::vector<RingElem> w;
  for (const auto& x : j["weights"]) w.push_back(ring_from_json(x));
  return WCG(j["n"].get<int>(), std::move(w));
}

json to_json(const Spectrum& s) {
  json out = json::array();
  for (const auto& v : s.values()) out.push_back(to_json(v));
  return out;
}

json to_json(const GraphFamily& f, std::size_t member_limit) {
  json out = {{"n", f.order()}, {"count", f.size()}};
  if (f.size() <= member_limit) {
    json members = json::array();
    for (const auto& m : f.members()) members.push_back(to_json(m)["weights"]);
    out["members"] = std::move(members);
  }
  return out;
}

json to_json(const SimpleGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"m", g.size()}, {"graph6", to_graph6(g)}, {"edges", std::move(edges)}};
}

json to_json(const Verdict& v, bool include_timing) {
  json witness = json::object();
  if (v.witness_polynomial) {
    witness["polynomial"] = to_json(*v.witness_polynomial);
    witness["polynomial_text"] = v.witness_polynomial->to_string();
  }
  if (v.witness_graph) witness["graph"] = to_json(*v.witness_graph);
  if (v.witness_bijection) witness["bijection"] = v.witness_bijection->image();
  if (!v.witness_set.empty()) witness["set"] = v.witness_set;
  if (!v.witness_labels.empty()) witness["labels"] = labels_json(v.witness_labels);
  if (v.witness_weight) witness["weight"] = *v.witness_weight;

  json stats = {{"members", v.stats.members},
                {"bijections", v.stats.bijections},
                {"candidates", v.stats.candidates}};
  if (v.witness_count) stats["witnesses"] = *v.witness_count;
  if (include_timing) {
    stats["elapsed_ms"] = std::chrono::duration<double, std::milli>(v.stats.elapsed).count();
  }
  json out = {{"schema", kSchemaVersion}, {"holds", v.holds}, {"stats", std::move(stats)}};
  if (!witness.empty()) out["witness"] = std::move(witness);
  return out;
}

json to_json(const oracle::OracleResult& r) {
  json out = {{"schema", kSchemaVersion}, {"holds", r.holds}, {"enumerated", r.enumerated}};
  if (r.value) out["value"] = *r.value;
  if (!r.witness.empty()) out["witness"] = r.witness;
  return out;
}

}  // namespace combspec
