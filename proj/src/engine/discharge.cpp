#include "flexcolor/engine/discharge.hpp"

#include "flexcolor/graph/conductive.hpp"

namespace flexcolor {

std::string_view degree2_class_name(Degree2Class c) {
  switch (c) {
    case Degree2Class::Cheap: return "cheap";
    case Degree2Class::Expensive: return "expensive";
    case Degree2Class::Unanchored: return "unanchored";
  }
  return "?";
}

std::map<Vertex, Degree2Info> classify_degree2(const Graph& g) {
  std::map<Vertex, Degree2Info> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.degree(u) != 2) continue;
    Degree2Info info;
    info.anchors = conductive_high_degree(g, u);
    info.cls = info.anchors.empty()       ? Degree2Class::Unanchored
               : info.anchors.size() == 1 ? Degree2Class::Expensive
                                          : Degree2Class::Cheap;
    out.emplace(u, std::move(info));
  }
  return out;
}

Rational ChargeLedger::initial_total() const {
  Rational t = 0;
  for (const auto& c : initial) t += c;
  return t;
}

Rational ChargeLedger::final_total() const {
  Rational t = 0;
  for (const auto& c : final_charge) t += c;
  return t;
}

bool ChargeLedger::conserved(const Graph& g) const {
  const Rational expected = 2 * static_cast<long>(g.size()) - 3 * static_cast<long>(g.order());
  return initial_total() == expected && final_total() == expected;
}

Rational degree_floor(int d) {
  if (d >= 6) return Rational(d - 3) - make_rational(d, 2);
  return 0;
}

namespace {

std::string high_degree_reason(int d, int expensive, int cheap) {
  const std::string counts =
      " (" + std::to_string(expensive) + " expensive, " + std::to_string(cheap) + " cheap)";
  if (d == 4) {
    if (expensive >= 2) return "degree 4 with two expensive vertices" + counts;
    if (expensive >= 1 && cheap >= 1) return "degree 4 with expensive and cheap vertices" + counts;
    return "degree 4 with three or more cheap vertices" + counts;
  }
  if (cheap >= d - 1) return "degree " + std::to_string(d) + " with d-1 cheap vertices" + counts;
  if (d == 5) return "degree 5 with too many conductive degree-2 partners" + counts;
  return "2s + t exceeds the degree" + counts;
}

}  // namespace

ChargeLedger discharge_audit(const Graph& g) {
  ChargeLedger ledger;
  for (Vertex v = 0; v < g.order(); ++v) ledger.initial.push_back(g.degree(v) - 3);
  ledger.final_charge = ledger.initial;
  ledger.degree2 = classify_degree2(g);
  std::vector<int> expensive(static_cast<std::size_t>(g.order()), 0), cheap(expensive);
  for (const auto& [u, info] : ledger.degree2) {
    if (info.cls == Degree2Class::Unanchored) continue;
    const Rational amount = info.cls == Degree2Class::Expensive ? Rational(1) : make_rational(1, 2);
    for (Vertex a : info.anchors) {
      ledger.transfers.push_back({a, u, amount});
      ledger.final_charge[a] -= amount;
      ledger.final_charge[u] += amount;
      ++(info.cls == Degree2Class::Expensive ? expensive : cheap)[a];
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (ledger.final_charge[v] >= 0) continue;
    const int d = g.degree(v);
    std::string reason;
    if (d <= 1) reason = "vertex of degree below 2";
    else if (d == 2) reason = "degree-2 vertex conductively connected to no vertex of degree at least 4";
    else reason = high_degree_reason(d, expensive[v], cheap[v]);
    ledger.negatives.push_back({v, ledger.final_charge[v], std::move(reason)});
  }
  return ledger;
}

}  // namespace flexcolor
