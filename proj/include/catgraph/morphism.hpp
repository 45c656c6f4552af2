#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "catgraph/graph.hpp"

namespace catgraph {

/// A total map on parts between two graphs. Domain and codomain are shared
/// immutable values; equality is pointwise map equality over concrete part
/// ids together with equality of the end graphs.
class Morphism {
 public:
  Morphism() = default;
  Morphism(Graph dom, Graph cod, std::map<PartId, PartId> part_map);
  Morphism(std::shared_ptr<const Graph> dom, std::shared_ptr<const Graph> cod,
           std::map<PartId, PartId> part_map);

  const Graph& dom() const { return *dom_; }
  const Graph& cod() const { return *cod_; }
  std::shared_ptr<const Graph> dom_ptr() const { return dom_; }
  std::shared_ptr<const Graph> cod_ptr() const { return cod_; }
  const std::map<PartId, PartId>& part_map() const { return map_; }

  const PartId& at(const PartId& p) const;

  bool operator==(const Morphism& other) const {
    return map_ == other.map_ && dom() == other.dom() && cod() == other.cod();
  }
  bool operator<(const Morphism& other) const {
    if (map_ != other.map_) return map_ < other.map_;
    if (dom() != other.dom()) return dom() < other.dom();
    return cod() < other.cod();
  }

 private:
  std::shared_ptr<const Graph> dom_ = std::make_shared<Graph>();
  std::shared_ptr<const Graph> cod_ = std::make_shared<Graph>();
  std::map<PartId, PartId> map_;
};

struct ValidationReport {
  bool pass = false;
  std::string offending_part;  // empty when pass
  std::string reason;
};

/// Checks the morphism laws for category c: dom/cod are objects of c
/// (ObjectNotInCategory otherwise), the map is total on dom parts into cod
/// parts, vertices map to vertices, incidence is preserved (a vertex image
/// counts as diagonal incidence), and edges map to edges when c is strict.
ValidationReport validate(const Morphism& f, CategoryId c);

bool is_valid(const Morphism& f, CategoryId c);
void require_valid(const Morphism& f, CategoryId c);  // throws InvalidMorphism

/// Every edge image is an edge.
bool is_strict(const Morphism& f);

Morphism identity(const Graph& g);
Morphism identity(std::shared_ptr<const Graph> g);

/// Inclusion of a subgraph (same part ids) into a larger graph.
Morphism inclusion(const Graph& sub, const Graph& whole);
Morphism inclusion(std::shared_ptr<const Graph> sub, std::shared_ptr<const Graph> whole);

/// g after f; requires cod(f) == dom(g) as graphs with the same ids.
Morphism compose(const Morphism& g, const Morphism& f);

bool surjective_on_parts(const Morphism& f);
bool injective_on_parts(const Morphism& f);
bool surjective_on_vertices(const Morphism& f);
bool injective_on_vertices(const Morphism& f);

}  // namespace catgraph
