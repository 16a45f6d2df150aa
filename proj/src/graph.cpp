#include "combspec/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>

#include "combspec/error.hpp"

namespace combspec {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::string_view strip(std::string_view s) {
  if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::parse, "line " + std::to_string(line) + ": " + msg);
}

long long to_int(std::string_view tok, std::size_t line) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    parse_fail(line, "expected an integer, got '" + std::string(tok) + "'");
  }
  return v;
}

constexpr int kGraph6Bias = 63;

}  // namespace

Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// --- SimpleGraph ----------------------------------------------------------

SimpleGraph::SimpleGraph(int n) : n_(n) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "graph order must be at least 1");
  adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

SimpleGraph::SimpleGraph(int n, const std::vector<Edge>& edges) : SimpleGraph(n) {
  for (const auto& e : edges) add_edge(e.u, e.v);
}

bool SimpleGraph::adjacent(int a, int b) const {
  if (a < 1 || b < 1 || a > n_ || b > n_) return false;
  return adj_[slot(a, b)] != 0;
}

std::vector<int> SimpleGraph::neighbors(int v) const {
  std::vector<int> out;
  for (int w = 1; w <= n_; ++w) {
    if (adjacent(v, w)) out.push_back(w);
  }
  return out;
}

int SimpleGraph::degree(int v) const {
  int d = 0;
  for (int w = 1; w <= n_; ++w) d += adjacent(v, w) ? 1 : 0;
  return d;
}

void SimpleGraph::add_edge(int a, int b) {
  if (a < 1 || b < 1 || a > n_ || b > n_) {
    throw Error(ErrorCode::invalid_argument, "edge {" + std::to_string(a) + "," +
                                                 std::to_string(b) + "} out of range 1.." +
                                                 std::to_string(n_));
  }
  if (a == b) throw Error(ErrorCode::invalid_argument, "loop at vertex " + std::to_string(a));
  if (adjacent(a, b)) {
    throw Error(ErrorCode::invalid_argument,
                "duplicate edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
  }
  adj_[slot(a, b)] = adj_[slot(b, a)] = 1;
  const Edge e = make_edge(a, b);
  edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), e), e);
}

// --- DistanceTable --------------------------------------------------------

DistanceTable::DistanceTable(int n) : n_(n) {
  dist_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  for (int v = 1; v <= n; ++v) dist_[slot(v, v)] = 0;
}

std::size_t DistanceTable::slot(int a, int b) const {
  return static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(n_) +
         static_cast<std::size_t>(b - 1);
}

std::optional<int> DistanceTable::at(int a, int b) const {
  const int d = dist_[slot(a, b)];
  if (d < 0) return std::nullopt;
  return d;
}

void DistanceTable::set(int a, int b, int d) { dist_[slot(a, b)] = dist_[slot(b, a)] = d; }

bool DistanceTable::connected() const {
  return std::none_of(dist_.begin(), dist_.end(), [](int d) { return d < 0; });
}

// --- parsing --------------------------------------------------------------

SimpleGraph parse_edge_list(std::string_view text) {
  const auto lines = split_lines(text);
  std::optional<SimpleGraph> g;
  long long expected = 0;
  long long seen = 0;
  std::size_t header_line = 0;
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const std::size_t lineno = idx + 1;
    const auto line = strip(lines[idx]);
    if (line.empty()) continue;
    const auto tok = tokens(line);
    if (tok.size() != 2) parse_fail(lineno, "expected two integers");
    const long long a = to_int(tok[0], lineno);
    const long long b = to_int(tok[1], lineno);
    if (!g) {
      if (a < 1) parse_fail(lineno, "vertex count must be at least 1");
      if (a > 1'000'000) parse_fail(lineno, "vertex count too large");
      if (b < 0 || b > a * (a - 1) / 2) parse_fail(lineno, "edge count out of range");
      g.emplace(static_cast<int>(a));
      expected = b;
      header_line = lineno;
      continue;
    }
    if (seen == expected) parse_fail(lineno, "more edges than declared");
    if (a < 1 || b < 1 || a > g->order() || b > g->order()) {
      parse_fail(lineno, "vertex index out of range 1.." + std::to_string(g->order()));
    }
    if (a == b) parse_fail(lineno, "loop at vertex " + std::to_string(a));
    if (g->adjacent(static_cast<int>(a), static_cast<int>(b))) {
      parse_fail(lineno, "duplicate edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
    }
    g->add_edge(static_cast<int>(a), static_cast<int>(b));
    ++seen;
  }
  if (!g) parse_fail(1, "missing header line \"n m\"");
  if (seen != expected) {
    parse_fail(header_line, "declared " + std::to_string(expected) + " edges, found " +
                                std::to_string(seen));
  }
  return *g;
}

std::string to_edge_list(const SimpleGraph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

SimpleGraph parse_graph6(std::string_view line) {
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  line = strip(line);
  if (line.empty()) throw Error(ErrorCode::parse, "graph6: empty input");
  for (char c : line) {
    if (c < 63 || c > 126) throw Error(ErrorCode::parse, "graph6: invalid character");
  }
  std::size_t pos = 0;
  long long n = 0;
  if (line[0] != 126) {
    n = line[0] - kGraph6Bias;
    pos = 1;
  } else if (line.size() >= 4 && line[1] != 126) {
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | (line[k] - kGraph6Bias);
    pos = 4;
  } else {
    throw Error(ErrorCode::parse, "graph6: orders above 258047 are not supported");
  }
  if (n < 1) throw Error(ErrorCode::parse, "graph6: graph order must be at least 1");
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (line.size() - pos != need) {
    throw Error(ErrorCode::parse, "graph6: expected " + std::to_string(need) +
                                      " data bytes, found " + std::to_string(line.size() - pos));
  }
  SimpleGraph g(static_cast<int>(n));
  std::size_t bit = 0;
  // Upper triangle, column-major: (0,1), (0,2), (1,2), (0,3), ...
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      const int byte = line[pos + bit / 6] - kGraph6Bias;
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(u + 1, v + 1);
    }
  }
  return g;
}

std::string to_graph6(const SimpleGraph& g) {
  std::string out;
  const long long n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kGraph6Bias));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kGraph6Bias));
    }
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u + 1, v + 1) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kGraph6Bias));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kGraph6Bias));
  return out;
}

SimpleGraph parse_graph(std::string_view text) {
  for (auto raw : split_lines(text)) {
    const auto line = strip(raw);
    if (line.empty()) continue;
    if (tokens(line).size() == 1) return parse_graph6(line);
    break;
  }
  return parse_edge_list(text);
}

std::vector<SimpleGraph> parse_graphs(std::string_view text) {
  std::vector<std::string_view> lines;
  for (auto raw : split_lines(text)) {
    const auto line = strip(raw);
    if (line.empty() || line.front() == '#') continue;
    if (tokens(line).size() != 1) return {parse_edge_list(text)};
    lines.push_back(line);
  }
  if (lines.empty()) return {parse_edge_list(text)};
  std::vector<SimpleGraph> out;
  for (auto line : lines) out.push_back(parse_graph6(line));
  return out;
}

// --- structure ------------------------------------------------------------

DistanceTable all_pairs_distances(const SimpleGraph& g) {
  const int n = g.order();
  DistanceTable table(n);
  std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n) + 1);
  for (const auto& e : g.edges()) {
    nbrs[e.u].push_back(e.v);
    nbrs[e.v].push_back(e.u);
  }
  for (int src = 1; src <= n; ++src) {
    std::vector<int> dist(static_cast<std::size_t>(n) + 1, -1);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : nbrs[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
    for (int t = 1; t <= n; ++t) {
      if (dist[t] >= 0) table.set(src, t, dist[t]);
    }
  }
  return table;
}

std::vector<int> component_orders(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> orders;
  for (int s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    int count = 0;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++count;
      for (int w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    orders.push_back(count);
  }
  std::sort(orders.begin(), orders.end());
  return orders;
}

bool is_connected(const SimpleGraph& g) { return component_orders(g).size() == 1; }

bool has_isolated_vertex(const SimpleGraph& g) {
  for (int v = 1; v <= g.order(); ++v) {
    if (g.degree(v) == 0) return true;
  }
  return false;
}

SimpleGraph path_graph(int n) {
  SimpleGraph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

SimpleGraph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorCode::invalid_argument, "cycle needs at least 3 vertices");
  SimpleGraph g = path_graph(n);
  g.add_edge(n, 1);
  return g;
}

SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) g.add_edge(a, b);
  }
  return g;
}

SimpleGraph star_graph(int n) {
  SimpleGraph g(n);
  for (int v = 2; v <= n; ++v) g.add_edge(1, v);
  return g;
}

}  // namespace combspec
