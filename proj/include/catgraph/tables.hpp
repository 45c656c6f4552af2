#pragma once

#include <map>
#include <string>
#include <vector>

#include "catgraph/graph.hpp"

namespace catgraph {

struct TableCell {
  std::string value;           // Y / N, or a description for Table 2 rows
  bool machine_checked = true; // false: asserted, not verified here
  std::string detail;
};

struct PropertyTable {
  std::string name;
  std::vector<std::string> rows;
  std::vector<std::string> columns;  // category short names
  // row -> column -> cell
  std::map<std::string, std::map<std::string, TableCell>> cells;
};

/// The Lawvere-style axiom grid: limit/colimit constructions checked by
/// bounded universal-property sweeps, exponentiation by adjunction counts or
/// the counting refutation, the classifier by pullback soundness, choice and
/// two-valuedness by their counterexample instances. The natural-number-object
/// row is reported as asserted (the object is infinite), never computed.
PropertyTable axiom_table(std::size_t battery_max_parts = 4);

/// The epi/mono criteria, free and cofree objects, and the
/// projective/injective/generator/cogenerator rows, evaluated on
/// representative instances plus their characterization predicates.
PropertyTable properties_table(std::size_t battery_max_parts = 4);

/// Fixed-width text rendering.
std::string render_table(const PropertyTable& table);

}  // namespace catgraph
