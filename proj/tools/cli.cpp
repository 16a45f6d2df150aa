#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "combspec/error.hpp"
#include "combspec/serialize.hpp"
#include "combspec/verify.hpp"

namespace combspec::cli {

namespace {

struct RunConfig {
  int max_n = Limits{}.max_n;
  std::uint64_t max_family = Limits{}.max_family;
  std::uint64_t max_steps = Limits{}.max_steps;
  unsigned workers = 0;
  double timeout_seconds = 0;
  bool json = false;
  bool timing = false;
  bool exhaustive = false;

  Limits limits() const {
    Limits l;
    l.max_n = max_n;
    l.max_family = max_family;
    l.max_steps = max_steps;
    l.workers = workers;
    if (timeout_seconds > 0) {
      l.deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(timeout_seconds));
    }
    return l;
  }
};

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return kUsage;
    case ErrorCode::parse: return kParse;
    case ErrorCode::precondition: return kPrecondition;
    case ErrorCode::size_guard: return kSizeGuard;
    case ErrorCode::timeout: return kTimeout;
    case ErrorCode::not_divisible:
    case ErrorCode::internal: return kInternal;
  }
  return kInternal;
}

int report_error(const RunConfig& cfg, std::ostream& out, std::ostream& err, std::string_view code,
                 int exit_code, const std::string& message) {
  if (cfg.json) {
    json e = {{"schema", kSchemaVersion},
              {"error", {{"code", code}, {"exit", exit_code}, {"message", message}}}};
    out << e.dump() << '\n';
  }
  err << "combspec: " << code << ": " << message << '\n';
  return exit_code;
}

std::string read_input(const std::string& path, std::istream& in) {
  std::stringstream buf;
  if (path.empty() || path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw Error(ErrorCode::invalid_argument, "cannot open '" + path + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

std::vector<SimpleGraph> read_graphs(const std::string& path, std::istream& in) {
  const std::string text = read_input(path, in);
  try {
    return parse_graphs(text);
  } catch (const Error& e) {
    if (path.empty() || path == "-") throw;
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::string labels_text(const std::vector<LabeledEdge>& labels) {
  std::string s;
  for (const auto& l : labels) {
    if (!s.empty()) s += ' ';
    s += std::to_string(l.edge.u) + "-" + std::to_string(l.edge.v) + ":" + std::to_string(l.label);
  }
  return s;
}

std::string ints_text(const std::vector<int>& v, char open = '{', char close = '}') {
  std::string s(1, open);
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + close;
}

void print_verdict(std::ostream& out, const Verdict& v, bool timing) {
  out << "holds: " << (v.holds ? "yes" : "no") << '\n';
  if (v.witness_polynomial) out << "witness polynomial: " << v.witness_polynomial->to_string() << '\n';
  if (v.witness_bijection) out << "witness bijection: " << ints_text(v.witness_bijection->image(), '[', ']') << '\n';
  if (!v.witness_set.empty()) out << "witness set: " << ints_text(v.witness_set) << '\n';
  if (!v.witness_labels.empty()) out << "witness labels: " << labels_text(v.witness_labels) << '\n';
  if (v.witness_weight) out << "witness weight: " << *v.witness_weight << '\n';
  if (v.witness_count) out << "satisfying candidates: " << *v.witness_count << '\n';
  out << "candidates examined: " << v.stats.candidates << " (" << v.stats.members << " members x "
      << v.stats.bijections << " bijections)\n";
  if (timing) {
    out << "elapsed: " << std::chrono::duration<double, std::milli>(v.stats.elapsed).count() << " ms\n";
  }
}

int require_k(const std::optional<int>& k, const std::string& subject) {
  if (!k) throw Error(ErrorCode::invalid_argument, subject + " requires --k");
  return *k;
}

json run_check(const std::string& subject, const SimpleGraph& g, const std::optional<int>& k,
               const RunConfig& cfg, std::ostream& out) {
  SearchOptions opts;
  opts.limits = cfg.limits();
  opts.exhaustive = cfg.exhaustive;
  json header = {{"subject", subject}, {"graph6", to_graph6(g)}};
  if (k) header["k"] = *k;

  if (subject == "hamiltonian") {
    if (g.order() < 3) throw Error(ErrorCode::precondition, "hamiltonian: graph must have at least 3 vertices");
    const Spectrum spec = hamiltonian_spectrum(cycle_graph(g.order()), g, opts.limits);
    const BigInt h = hamiltonian_number(g, opts.limits);
    json values = json::array();
    for (const auto& v : spec.values()) values.push_back(v.to_string());
    json j = {{"schema", kSchemaVersion}, {"holds", true}, {"value", h.str()}, {"spectrum", values}};
    j.update(header);
    if (!cfg.json) {
      out << "graph: " << to_graph6(g) << '\n' << "hamiltonian number: " << h.str() << '\n';
      out << "spectrum: {";
      for (std::size_t i = 0; i < values.size(); ++i) out << (i ? ", " : "") << values[i].get<std::string>();
      out << "}\n";
    }
    return j;
  }

  Verdict v;
  if (subject == "antimagic") {
    v = antimagic_unweighted(g, opts);
  } else if (subject == "irregular-strength") {
    v = strength_at_most(g, require_k(k, subject), opts);
  } else if (subject == "one-two-three") {
    v = one_two_three(g, opts);
  } else if (subject == "domination") {
    v = dominating_k(g, require_k(k, subject), opts);
  } else if (subject == "edge-roman") {
    v = edge_roman_at_most(g, require_k(k, subject), opts);
  } else {
    throw Error(ErrorCode::invalid_argument, "unknown subject '" + subject + "'");
  }
  json j = to_json(v, cfg.timing);
  j.update(header);
  if (!cfg.json) {
    out << "graph: " << to_graph6(g) << '\n';
    print_verdict(out, v, cfg.timing);
  }
  return j;
}

json run_oracle(const std::string& name, const SimpleGraph& g, const std::optional<int>& k,
                const RunConfig& cfg, std::ostream& out) {
  const Limits limits = cfg.limits();
  oracle::OracleResult r;
  if (name == "antimagic") {
    r = oracle::antimagic(g, limits);
  } else if (name == "strength") {
    r = oracle::strength(g, k.value_or(3), limits);
  } else if (name == "chi-sigma") {
    r = oracle::chi_sigma(g, k.value_or(3), limits);
  } else if (name == "domination") {
    r = oracle::domination(g, require_k(k, name), limits);
  } else if (name == "edge-roman") {
    r = oracle::edge_roman(g, limits);
  } else if (name == "hamiltonian") {
    r = oracle::hamiltonian(g, limits);
  } else {
    throw Error(ErrorCode::invalid_argument, "unknown oracle '" + name + "'");
  }
  json j = to_json(r);
  j["oracle"] = name;
  j["graph6"] = to_graph6(g);
  if (k) j["k"] = *k;
  if (!cfg.json) {
    out << "graph: " << to_graph6(g) << '\n' << "holds: " << (r.holds ? "yes" : "no") << '\n';
    if (r.value) out << "value: " << *r.value << '\n';
    if (!r.witness.empty()) out << "witness: " << ints_text(r.witness, '[', ']') << '\n';
    out << "enumerated: " << r.enumerated << '\n';
  }
  return j;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::invalid_argument, "--n expects N or A..B, got '" + text + "'");
  }
}

void print_report(std::ostream& out, const VerifyReport& r) {
  out << "== " << r.suite << '\n';
  for (const auto& row : r.rows) {
    std::string line = row.contains("graph6") ? row["graph6"].get<std::string>()
                                              : "n=" + std::to_string(row["n"].get<int>());
    for (const auto& [key, value] : row.items()) {
      if (key == "graph6" || key == "agree" || key == "lhs" || key == "rhs") continue;
      line += ' ' + key + '=' + (value.is_string() ? value.get<std::string>() : value.dump());
    }
    if (row.contains("agree")) line += row["agree"].get<bool>() ? "  ok" : "  DISAGREE";
    out << line << '\n';
  }
  out << r.suite << ": " << r.checks << " checks, " << r.disagreements << " disagreements, " << r.skipped
      << " skipped\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Decide graph properties through combinatorial spectra of weighted complete graphs."};
  app.name(args.empty() ? "combspec" : args[0]);
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--max-n", cfg.max_n, "Largest accepted graph order")
      ->envname("COMBSPEC_MAX_N")
      ->check(CLI::Range(1, 9));
  app.add_option("--max-family", cfg.max_family, "Largest graph family built in memory")
      ->envname("COMBSPEC_MAX_FAMILY")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-steps", cfg.max_steps, "Largest enumeration size")
      ->envname("COMBSPEC_MAX_STEPS")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", cfg.workers, "Worker threads (0 = hardware concurrency)")
      ->envname("COMBSPEC_WORKERS");
  app.add_option("--timeout-seconds", cfg.timeout_seconds, "Wall-clock budget (0 = none)")
      ->envname("COMBSPEC_TIMEOUT_SECONDS")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--json", cfg.json, "Emit JSON, one document per line");
  app.add_flag("--timing", cfg.timing, "Report elapsed time (output is then no longer reproducible)");

  std::string subject, file;
  std::optional<int> k;

  auto* check = app.add_subcommand("check", "Decide a property through its spectral characterization");
  check->add_option("subject", subject, "Property to decide")
      ->required()
      ->check(CLI::IsMember({"antimagic", "irregular-strength", "one-two-three", "domination", "edge-roman",
                             "hamiltonian"}));
  check->add_option("file", file, "Edge-list or graph6 file; '-' or omitted reads standard input");
  check->add_option("--k", k, "Bound or set size");
  check->add_flag("--exhaustive", cfg.exhaustive, "Count every satisfying candidate");

  auto* orc = app.add_subcommand("oracle", "Decide a property by direct enumeration");
  orc->add_option("name", subject, "Oracle to run")
      ->required()
      ->check(CLI::IsMember({"antimagic", "strength", "chi-sigma", "domination", "edge-roman", "hamiltonian"}));
  orc->add_option("file", file, "Edge-list or graph6 file; '-' or omitted reads standard input");
  orc->add_option("--k", k, "Label bound (strength, chi-sigma; default 3) or set size (domination)");

  std::vector<std::string> theorems, identities, files;
  std::string n_range;
  int k_max = 3;
  auto* ver = app.add_subcommand("verify", "Compare spectral characterizations against oracles on a corpus");
  ver->add_option("--theorem", theorems, "Suite to run (repeatable; default: all)")
      ->check(CLI::IsMember(theorem_suites()));
  ver->add_option("--identity", identities, "Gadget identity to check (repeatable)")
      ->check(CLI::IsMember(identity_suites()));
  ver->add_option("--n", n_range, "Order range N or A..B");
  ver->add_option("--k", k_max, "Largest label bound for strength and coloring suites")->check(CLI::Range(1, 9));
  ver->add_option("files", files, "Explicit corpus files (edge lists or graph6 lines)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("combspec");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    return report_error(cfg, out, err, "usage", kUsage, e.what());
  }

  try {
    if (check->parsed() || orc->parsed()) {
      for (const auto& g : read_graphs(file, in)) {
        cfg.limits().check_order(g.order(), "input graph");
        const json j = check->parsed() ? run_check(subject, g, k, cfg, out) : run_oracle(subject, g, k, cfg, out);
        if (cfg.json) out << j.dump() << '\n';
      }
      return kOk;
    }

    VerifyOptions opts;
    opts.limits = cfg.limits();
    opts.k_max = k_max;
    if (app.get_option("--max-n")->count() > 0) opts.max_n = cfg.max_n;
    if (!n_range.empty()) std::tie(opts.min_n, opts.max_n) = parse_range(n_range);
    opts.limits.max_n = std::max(opts.limits.max_n, opts.max_n);
    for (const auto& f : files) {
      for (auto& g : read_graphs(f, in)) opts.graphs.push_back(std::move(g));
    }
    if (theorems.empty() && identities.empty()) theorems = theorem_suites();

    std::vector<VerifyReport> reports;
    for (const auto& t : theorems) reports.push_back(verify_theorem(t, opts));
    for (const auto& id : identities) {
      const int lo = n_range.empty() ? 3 : opts.min_n;
      const int hi = n_range.empty() ? 6 : opts.max_n;
      reports.push_back(verify_identity(id, lo, hi));
    }
    bool ok = true;
    json all = json::array();
    for (const auto& r : reports) {
      ok = ok && r.ok();
      if (cfg.json) {
        all.push_back(r.to_json());
      } else {
        print_report(out, r);
      }
    }
    if (cfg.json) {
      out << json{{"schema", kSchemaVersion}, {"ok", ok}, {"reports", all}}.dump() << '\n';
    } else {
      out << (ok ? "all suites agree" : "DISAGREEMENT FOUND") << '\n';
    }
    return ok ? kOk : kDisagreement;
  } catch (const Error& e) {
    return report_error(cfg, out, err, to_string(e.code()), exit_for(e.code()), e.what());
  } catch (const std::exception& e) {
    return report_error(cfg, out, err, "internal", kInternal, e.what());
  }
}

}  // namespace combspec::cli
