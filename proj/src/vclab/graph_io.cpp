#include "vclab/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace vclab {

namespace {

std::pair<int, std::int64_t> read_header(std::istream& is, const char* what) {
  std::string line;
  if (!std::getline(is, line)) throw InputError(std::string(what) + ": missing header line");
  std::istringstream ss(line);
  long long n = -1, m = -1;
  if (!(ss >> n >> m) || n < 0 || m < 0) throw InputError(std::string(what) + ": bad header: " + line);
  std::string rest;
  if (ss >> rest) throw InputError(std::string(what) + ": trailing content in header: " + line);
  return {static_cast<int>(n), static_cast<std::int64_t>(m)};
}

std::vector<std::pair<int, int>> read_pairs(std::istream& is, int n, std::int64_t m, bool require_increasing,
                                            const char* what) {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m));
  std::string line;
  for (std::int64_t i = 0; i < m; ++i) {
    if (!std::getline(is, line)) throw InputError(std::string(what) + ": expected " + std::to_string(m) + " lines");
    std::istringstream ss(line);
    long long u, v;
    if (!(ss >> u >> v)) throw InputError(std::string(what) + ": bad line: " + line);
    std::string rest;
    if (ss >> rest) throw InputError(std::string(what) + ": trailing content: " + line);
    if (u < 0 || u >= n || v < 0 || v >= n) throw InputError(std::string(what) + ": endpoint out of range: " + line);
    if (require_increasing && u >= v) throw InputError(std::string(what) + ": endpoints not increasing: " + line);
    std::pair<int, int> p{static_cast<int>(u), static_cast<int>(v)};
    if (!out.empty() && !(out.back() < p)) throw InputError(std::string(what) + ": lines not sorted: " + line);
    out.push_back(p);
  }
  if (std::getline(is, line) && !line.empty()) throw InputError(std::string(what) + ": trailing content after " + std::to_string(m) + " lines");
  return out;
}

}  // namespace

void write_graph(std::ostream& os, const Graph& g) {
  os << g.size() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

Graph read_graph(std::istream& is) {
  auto [n, m] = read_header(is, "graph");
  return Graph::from_edges(n, read_pairs(is, n, m, true, "graph"));
}

void write_digraph(std::ostream& os, const BalancedDigraph& d) {
  os << d.size() << ' ' << d.arc_count() << '\n';
  for (auto [u, v] : d.arcs()) os << u << ' ' << v << '\n';
}

BalancedDigraph read_digraph(std::istream& is) {
  auto [n, m] = read_header(is, "digraph");
  return BalancedDigraph::from_arcs(n, read_pairs(is, n, m, false, "digraph"));
}

namespace {

template <typename T, typename Parse>
std::vector<T> read_per_vertex(std::istream& is, Parse parse, const char* what) {
  std::vector<std::pair<int, T>> entries;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    long long v;
    std::string tok, rest;
    if (!(ss >> v >> tok)) throw InputError(std::string(what) + ": bad line: " + line);
    if (ss >> rest) throw InputError(std::string(what) + ": trailing content: " + line);
    entries.emplace_back(static_cast<int>(v), parse(tok));
  }
  int n = static_cast<int>(entries.size());
  std::vector<T> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto& [v, t] = entries[static_cast<std::size_t>(i)];
    if (v != i)
      throw InputError(std::string(what) + ": expected vertex " + std::to_string(i) + ", got " + std::to_string(v));
    out[static_cast<std::size_t>(i)] = t;
  }
  return out;
}

}  // namespace

void write_labelling(std::ostream& os, const Labelling& l) {
  for (std::size_t v = 0; v < l.size(); ++v) os << v << ' ' << to_string(l[v]) << '\n';
}

Labelling read_labelling(std::istream& is) { return read_per_vertex<Label>(is, parse_label, "labelling"); }

void write_colouring(std::ostream& os, const Colouring& c) {
  for (std::size_t v = 0; v < c.size(); ++v) os << v << ' ' << to_string(c[v]) << '\n';
}

Colouring read_colouring(std::istream& is) { return read_per_vertex<Colour>(is, parse_colour, "colouring"); }

void write_vertex_set(std::ostream& os, int n, const std::vector<int>& vs) {
  os << n << ' ' << vs.size() << '\n';
  for (int v : vs) os << v << '\n';
}

std::vector<int> read_vertex_set(std::istream& is, int* n_out) {
  auto [n, k] = read_header(is, "vertex set");
  if (n_out) *n_out = n;
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(k));
  std::string line;
  for (std::int64_t i = 0; i < k; ++i) {
    if (!std::getline(is, line)) throw InputError("vertex set: expected " + std::to_string(k) + " lines");
    std::istringstream ss(line);
    long long v;
    std::string rest;
    if (!(ss >> v)) throw InputError("vertex set: bad line: " + line);
    if (ss >> rest) throw InputError("vertex set: trailing content: " + line);
    if (v < 0 || v >= n) throw InputError("vertex set: vertex out of range: " + line);
    if (!out.empty() && out.back() >= v) throw InputError("vertex set: lines not sorted: " + line);
    out.push_back(static_cast<int>(v));
  }
  return out;
}

void write_edge_set(std::ostream& os, int n, const std::vector<std::pair<int, int>>& es) {
  os << n << ' ' << es.size() << '\n';
  for (auto [u, v] : es) os << u << ' ' << v << '\n';
}

std::vector<std::pair<int, int>> read_edge_set(std::istream& is, int* n_out) {
  auto [n, k] = read_header(is, "edge set");
  if (n_out) *n_out = n;
  return read_pairs(is, n, k, true, "edge set");
}

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open file: " + path);
  return f;
}

}  // namespace

Graph load_graph(const std::string& path) {
  auto f = open_in(path);
  try {
    return read_graph(f);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

BalancedDigraph load_digraph(const std::string& path) {
  auto f = open_in(path);
  try {
    return read_digraph(f);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Labelling load_labelling(const std::string& path) {
  auto f = open_in(path);
  try {
    return read_labelling(f);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Colouring load_colouring(const std::string& path) {
  auto f = open_in(path);
  try {
    return read_colouring(f);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void save_text(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write file: " + path);
  f << content;
  if (!f) throw InputError("write failed: " + path);
}

std::string graph_to_string(const Graph& g) {
  std::ostringstream ss;
  write_graph(ss, g);
  return ss.str();
}

std::string digraph_to_string(const BalancedDigraph& d) {
  std::ostringstream ss;
  write_digraph(ss, d);
  return ss.str();
}

std::string labelling_to_string(const Labelling& l) {
  std::ostringstream ss;
  write_labelling(ss, l);
  return ss.str();
}

std::string colouring_to_string(const Colouring& c) {
  std::ostringstream ss;
  write_colouring(ss, c);
  return ss.str();
}

}  // namespace vclab
