#include "turanforge/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace turanforge {

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream is(text);
  long long n = -1;
  long long m = -1;
  if (!(is >> n >> m) || n < 0 || m < 0) throw ParseError("edge list: expected header 'n m'");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = -1;
    long long v = -1;
    if (!(is >> u >> v)) throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("edge list: edge " + std::to_string(i) + " has endpoint out of range");
    }
    if (u == v) throw ParseError("edge list: self-loop at vertex " + std::to_string(u));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string trailing;
  if (is >> trailing) throw ParseError("edge list: unexpected trailing content '" + trailing + "'");
  return Graph(static_cast<std::size_t>(n), edges);
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int bits = 0;
  int acc = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bits = 0;
        acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph parse_graph6(const std::string& text) {
  std::string s = text;
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  if (s.empty()) throw ParseError("graph6: empty input");
  for (char ch : s) {
    if (ch < 63 || ch > 126) throw ParseError("graph6: invalid character");
  }
  std::size_t pos = 0;
  std::size_t n = 0;
  auto take = [&](int count) {
    std::size_t v = 0;
    for (int k = 0; k < count; ++k) {
      if (pos >= s.size()) throw ParseError("graph6: truncated order field");
      v = (v << 6) | static_cast<std::size_t>(s[pos++] - 63);
    }
    return v;
  };
  if (s[0] != 126) {
    n = take(1);
  } else if (s.size() > 1 && s[1] != 126) {
    ++pos;
    n = take(3);
  } else {
    pos += 2;
    n = take(6);
  }
  const std::size_t pair_count = n * (n == 0 ? 0 : n - 1) / 2;
  const std::size_t expected = (pair_count + 5) / 6;
  if (s.size() - pos != expected) throw ParseError("graph6: body length does not match order");
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int chunk = s[pos + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (path.extension() == ".g6" || text.rfind(">>graph6<<", 0) == 0) return parse_graph6(text);
  return parse_edge_list(text);
}

void write_graph_file(const std::filesystem::path& path, const Graph& g, bool graph6) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << (graph6 ? to_graph6(g) + "\n" : to_edge_list(g));
}

}  // namespace turanforge
