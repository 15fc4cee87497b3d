#include "flexcolor/listcolor/lists.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "flexcolor/core/errors.hpp"

namespace flexcolor {

ListAssignment::ListAssignment(std::vector<std::vector<Color>> lists) : lists_(std::move(lists)) {
  for (std::size_t v = 0; v < lists_.size(); ++v) {
    auto& list = lists_[v];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    if (list.empty()) throw PreconditionError("empty list at vertex " + std::to_string(v));
    if (list.front() < 0) throw PreconditionError("negative color at vertex " + std::to_string(v));
  }
}

ListAssignment ListAssignment::uniform(int n, int k, Color first) {
  std::vector<Color> list(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) list[i] = first + i;
  return ListAssignment(std::vector<std::vector<Color>>(static_cast<std::size_t>(n), list));
}

bool ListAssignment::contains(Vertex v, Color c) const {
  const auto& list = lists_.at(static_cast<std::size_t>(v));
  return std::binary_search(list.begin(), list.end(), c);
}

bool ListAssignment::is_k_assignment(int k) const {
  return std::all_of(lists_.begin(), lists_.end(), [k](const auto& l) { return static_cast<int>(l.size()) == k; });
}

ListAssignment ListAssignment::restrict(std::span<const Vertex> sorted_vertices) const {
  std::vector<std::vector<Color>> out;
  out.reserve(sorted_vertices.size());
  for (Vertex v : sorted_vertices) out.push_back(lists_.at(static_cast<std::size_t>(v)));
  return ListAssignment(std::move(out));
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

long long to_int(std::string_view token, std::size_t line, const char* what) {
  const std::string t = trim(token);
  long long value = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || p != t.data() + t.size())
    throw ParseError(std::string("invalid ") + what + " '" + t + "'", line);
  return value;
}

}  // namespace

ListAssignment read_lists(std::istream& in, int order) {
  std::vector<std::vector<Color>> lists(static_cast<std::size_t>(order));
  std::vector<char> seen(static_cast<std::size_t>(order), 0);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (trim(line).empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'v: c1,c2,...'", number);
    const long long v = to_int(std::string_view(line).substr(0, colon), number, "vertex");
    if (v < 0 || v >= order) throw ParseError("vertex " + std::to_string(v) + " out of range", number);
    if (seen[v]) throw ParseError("vertex " + std::to_string(v) + " listed twice", number);
    seen[v] = 1;
    std::string rest = line.substr(colon + 1);
    std::stringstream parts(rest);
    std::string token;
    while (std::getline(parts, token, ',')) {
      const long long c = to_int(token, number, "color");
      if (c < 0 || c > (1LL << 30)) throw ParseError("color out of range", number);
      if (std::find(lists[v].begin(), lists[v].end(), c) != lists[v].end())
        throw ParseError("color " + std::to_string(c) + " repeated", number);
      lists[v].push_back(static_cast<Color>(c));
    }
    if (lists[v].empty()) throw ParseError("empty list", number);
  }
  for (int v = 0; v < order; ++v)
    if (!seen[v]) throw ParseError("no list for vertex " + std::to_string(v), number);
  return ListAssignment(std::move(lists));
}

ListAssignment parse_lists(std::string_view text, int order) {
  std::istringstream in{std::string(text)};
  return read_lists(in, order);
}

ListAssignment load_lists(const std::string& path, int order) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open lists file '" + path + "'", 0);
  return read_lists(in, order);
}

std::string format_lists(const ListAssignment& lists) {
  std::ostringstream out;
  for (Vertex v = 0; v < lists.order(); ++v) {
    out << v << ": ";
    bool first = true;
    for (Color c : lists[v]) {
      out << (first ? "" : ",") << c;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

void WeightedRequest::set(Vertex v, Color c, const Rational& weight) {
  if (weight < 0) throw PreconditionError("negative request weight");
  if (weight == 0)
    weights_.erase({v, c});
  else
    weights_[{v, c}] = weight;
}

Rational WeightedRequest::weight(Vertex v, Color c) const {
  auto it = weights_.find({v, c});
  return it == weights_.end() ? Rational(0) : it->second;
}

Rational WeightedRequest::total() const {
  Rational sum = 0;
  for (const auto& [key, w] : weights_) sum += w;
  return sum;
}

WeightedRequest read_request(std::istream& in, const ListAssignment& lists) {
  WeightedRequest w;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream fields(line);
    std::string vs, cs, ws, extra;
    if (!(fields >> vs)) continue;
    if (!(fields >> cs >> ws) || (fields >> extra)) throw ParseError("expected 'v c weight'", number);
    const long long v = to_int(vs, number, "vertex");
    const long long c = to_int(cs, number, "color");
    if (v < 0 || v >= lists.order()) throw ParseError("vertex " + vs + " out of range", number);
    Rational weight;
    try {
      weight = parse_rational(ws);
    } catch (const std::invalid_argument&) {
      throw ParseError("invalid weight '" + ws + "'", number);
    }
    if (weight < 0) throw ParseError("negative weight", number);
    if (weight > 0 && !lists.contains(static_cast<Vertex>(v), static_cast<Color>(c)))
      throw ParseError("color " + cs + " is not in L(" + vs + ")", number);
    if (w.weight(static_cast<Vertex>(v), static_cast<Color>(c)) != 0)
      throw ParseError("repeated request for (" + vs + ", " + cs + ")", number);
    w.set(static_cast<Vertex>(v), static_cast<Color>(c), weight);
  }
  return w;
}

WeightedRequest parse_request(std::string_view text, const ListAssignment& lists) {
  std::istringstream in{std::string(text)};
  return read_request(in, lists);
}

WeightedRequest load_request(const std::string& path, const ListAssignment& lists) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open request file '" + path + "'", 0);
  return read_request(in, lists);
}

std::string format_request(const WeightedRequest& w) {
  std::ostringstream out;
  for (const auto& [key, weight] : w.entries())
    out << key.first << ' ' << key.second << ' ' << to_string(weight) << '\n';
  return out.str();
}

Rational request_value(const Coloring& phi, const WeightedRequest& w) {
  Rational sum = 0;
  for (const auto& [key, weight] : w.entries())
    if (key.first >= 0 && static_cast<std::size_t>(key.first) < phi.size() && phi[key.first] == key.second)
      sum += weight;
  return sum;
}

Rational request_fraction(const Coloring& phi, const WeightedRequest& w) {
  const Rational total = w.total();
  if (total == 0) return 1;
  return request_value(phi, w) / total;
}

int EllBounds::at(Vertex host) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), host);
  if (it == vertices.end() || *it != host) throw PreconditionError("vertex not in H");
  return values[it - vertices.begin()];
}

EllBounds ell_bounds(const Graph& g, std::span<const Vertex> h_vertices, int k) {
  EllBounds out;
  out.vertices.assign(h_vertices.begin(), h_vertices.end());
  std::sort(out.vertices.begin(), out.vertices.end());
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
  for (Vertex v : out.vertices) {
    int inside = 0;
    for (Vertex w : g.neighbors(v)) inside += std::binary_search(out.vertices.begin(), out.vertices.end(), w);
    out.values.push_back(k - g.degree(v) + inside);
  }
  return out;
}

bool is_proper(const Graph& g, const ListAssignment& lists, const Coloring& phi) {
  if (static_cast<int>(phi.size()) != g.order() || lists.order() != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (phi[v] == kNoColor) continue;
    if (!lists.contains(v, phi[v])) return false;
    for (Vertex w : g.neighbors(v))
      if (w > v && phi[w] == phi[v]) return false;
  }
  return true;
}

bool is_proper_total(const Graph& g, const ListAssignment& lists, const Coloring& phi) {
  return is_proper(g, lists, phi) && std::find(phi.begin(), phi.end(), kNoColor) == phi.end();
}

std::string format_coloring(const Coloring& phi) {
  std::string out;
  for (std::size_t v = 0; v < phi.size(); ++v) {
    if (phi[v] == kNoColor) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(v) + "→" + std::to_string(phi[v]);
  }
  return out;
}

}  // namespace flexcolor
