#pragma once

#include <json.hpp>

#include "combspec/characterizations.hpp"
#include "combspec/oracles.hpp"
#include "combspec/spectra.hpp"

namespace combspec {

using json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

/// [{"x": int, "y": int, "re": "decimal", "im": "decimal"}, ...] in (x, y) order.
json to_json(const RingElem& r);
RingElem ring_from_json(const json& j);

/// {"n": int, "weights": [RingElem, ...]} in pair_index order.
json to_json(const WCG& g);
WCG wcg_from_json(const json& j);

json to_json(const Spectrum& s);
/// {"n", "count", "members"}; members are omitted above member_limit.
json to_json(const GraphFamily& f, std::size_t member_limit = 4096);

json to_json(const SimpleGraph& g);
json to_json(const Verdict& v, bool include_timing = false);
json to_json(const oracle::OracleResult& r);

}  // namespace combspec
