#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "combspec/serialize.hpp"

namespace combspec {

struct VerifyOptions {
  int min_n = 1;
  int max_n = 4;
  /// Largest label bound for the strength and coloring suites.
  int k_max = 3;
  Limits limits;
  /// Explicit corpus; when empty every connected graph in [min_n, max_n] is used.
  std::vector<SimpleGraph> graphs;
};

/// Per-graph agreement table. Rows are emitted in corpus order, so the JSON
/// form is identical for any worker count.
struct VerifyReport {
  std::string suite;
  json rows = json::array();
  std::size_t checks = 0;
  std::size_t disagreements = 0;
  std::size_t skipped = 0;

  bool ok() const { return disagreements == 0; }
  json to_json() const;
};

/// Suites: antimagic, antimagic-lemma, irregular-strength, one-two-three,
/// domination, domination-coefficients, edge-roman, hamiltonian, colorings,
/// roman-colorings.
const std::vector<std::string>& theorem_suites();
VerifyReport verify_theorem(std::string_view suite, const VerifyOptions& opts);

/// Identities S1 (S[1] = 2 I(K_n)), E1 (E[1] = I(K_n)), R1 (R[1] = (2n-4+i) I(K_n)).
const std::vector<std::string>& identity_suites();
VerifyReport verify_identity(std::string_view identity, int n_min, int n_max);

}  // namespace combspec
