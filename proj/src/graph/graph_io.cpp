#include "flexcolor/graph/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "flexcolor/core/errors.hpp"

namespace flexcolor {
namespace {

std::vector<long long> integers(const std::string& line, std::size_t number) {
  std::vector<long long> out;
  const char* p = line.data();
  const char* end = p + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p == end) break;
    long long value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc() || (next < end && *next != ' ' && *next != '\t' && *next != '\r'))
      throw ParseError("expected integers, got '" + line + "'", number);
    out.push_back(value);
    p = next;
  }
  return out;
}

bool blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t number = 0;
  long long n = -1, m = -1;
  while (std::getline(in, line)) {
    ++number;
    if (blank(line)) continue;
    auto header = integers(line, number);
    if (header.size() != 2) throw ParseError("header must be 'n m'", number);
    n = header[0];
    m = header[1];
    break;
  }
  if (n < 0 || m < 0) throw ParseError("missing or negative 'n m' header", number);
  if (n > (1 << 24)) throw ParseError("vertex count too large", number);
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (static_cast<long long>(edges.size()) < m && std::getline(in, line)) {
    ++number;
    if (blank(line)) continue;
    auto e = integers(line, number);
    if (e.size() != 2) throw ParseError("edge line must be 'u v'", number);
    const long long u = e[0], v = e[1];
    if (u == v) throw ParseError("loop at vertex " + std::to_string(u), number);
    if (u < 0 || v >= n || u > v)
      throw ParseError("edge must satisfy 0 <= u < v < n", number);
    Edge edge{static_cast<Vertex>(u), static_cast<Vertex>(v)};
    if (!seen.insert(edge).second)
      throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v), number);
    edges.push_back(edge);
  }
  if (static_cast<long long>(edges.size()) < m)
    throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()), number);
  while (std::getline(in, line)) {
    ++number;
    if (!blank(line)) throw ParseError("unexpected content after the last edge", number);
  }
  return Graph(static_cast<int>(n), edges);
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_graph(in);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'", 0);
  return read_graph(in);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace flexcolor
