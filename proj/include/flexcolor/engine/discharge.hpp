#pragma once

#include <map>
#include <string>
#include <vector>

#include "flexcolor/core/rational.hpp"
#include "flexcolor/graph/graph.hpp"

namespace flexcolor {

enum class Degree2Class { Cheap, Expensive, Unanchored };

std::string_view degree2_class_name(Degree2Class c);

struct Degree2Info {
  Degree2Class cls = Degree2Class::Unanchored;
  std::vector<Vertex> anchors;  // conductively connected vertices of degree >= 4
};

// Every degree-2 vertex, labelled by how many vertices of degree >= 4 it is
// conductively connected with: one is expensive, two or more cheap, none
// unanchored (a reducible configuration exists instead).
std::map<Vertex, Degree2Info> classify_degree2(const Graph& g);

struct Transfer {
  Vertex from = -1;
  Vertex to = -1;
  Rational amount;
};

struct ChargeFinding {
  Vertex vertex = -1;
  Rational charge;
  std::string reason;
};

struct ChargeLedger {
  std::vector<Rational> initial;  // deg(v) - 3
  std::vector<Transfer> transfers;
  std::vector<Rational> final_charge;
  std::map<Vertex, Degree2Info> degree2;
  std::vector<ChargeFinding> negatives;

  Rational initial_total() const;
  Rational final_total() const;
  // Sum initial == sum final == 2|E| - 3|V|.
  bool conserved(const Graph& g) const;
};

// Cheap vertices take 1/2 from each anchor, expensive ones take 1 from their
// anchor. Every vertex ending below zero is reported with the structural
// condition it breaks.
ChargeLedger discharge_audit(const Graph& g);

// The least final charge the rules allow at a vertex of degree d once every
// forbidden configuration is absent: 0 for d = 2, 3, 4, 5 and d - 3 - d/2
// for d >= 6. Used to cross-check the ledger arithmetic.
Rational degree_floor(int d);

}  // namespace flexcolor
