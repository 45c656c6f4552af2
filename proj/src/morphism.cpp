#include "catgraph/morphism.hpp"

#include <algorithm>
#include <utility>

namespace catgraph {

Morphism::Morphism(Graph dom, Graph cod, std::map<PartId, PartId> part_map)
    : dom_(std::make_shared<Graph>(std::move(dom))),
      cod_(std::make_shared<Graph>(std::move(cod))),
      map_(std::move(part_map)) {}

Morphism::Morphism(std::shared_ptr<const Graph> dom, std::shared_ptr<const Graph> cod,
                   std::map<PartId, PartId> part_map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(part_map)) {}

const PartId& Morphism::at(const PartId& p) const {
  auto it = map_.find(p);
  if (it == map_.end())
    throw Error(ErrorCode::UnknownPart, "morphism undefined on part '" + p + "'");
  return it->second;
}

ValidationReport validate(const Morphism& f, CategoryId c) {
  require_object(f.dom(), c);
  require_object(f.cod(), c);
  const Graph& A = f.dom();
  const Graph& B = f.cod();

  for (const auto& p : A.parts()) {
    if (!f.part_map().count(p))
      return {false, p, "map is not total: no image for part"};
  }
  for (const auto& [p, q] : f.part_map()) {
    if (!A.contains(p)) return {false, p, "map defined on a part outside the domain"};
    if (!B.contains(q)) return {false, p, "image '" + q + "' is not a part of the codomain"};
    if (A.is_vertex(p) && !B.is_vertex(q))
      return {false, p, "vertex mapped to a non-vertex"};
  }
  for (const auto& [e, pair] : A.edge_incidence()) {
    const PartId& image = f.part_map().at(e);
    VertexPair required(f.part_map().at(pair.a), f.part_map().at(pair.b));
    if (B.incidence(image) != required)
      return {false, e, "incidence not preserved"};
    if (requires_strict(c) && !B.is_edge(image))
      return {false, e, "edge mapped to a vertex under a strict morphism"};
  }
  return {true, "", ""};
}

bool is_valid(const Morphism& f, CategoryId c) { return validate(f, c).pass; }

void require_valid(const Morphism& f, CategoryId c) {
  auto report = validate(f, c);
  if (!report.pass)
    throw Error(ErrorCode::InvalidMorphism,
                "at part '" + report.offending_part + "': " + report.reason);
}

bool is_strict(const Morphism& f) {
  for (const auto& [e, _] : f.dom().edge_incidence())
    if (!f.cod().is_edge(f.at(e))) return false;
  return true;
}

Morphism identity(const Graph& g) { return identity(std::make_shared<Graph>(g)); }

Morphism identity(std::shared_ptr<const Graph> g) {
  std::map<PartId, PartId> m;
  for (const auto& p : g->parts()) m.emplace(p, p);
  return Morphism(g, g, std::move(m));
}

Morphism inclusion(const Graph& sub, const Graph& whole) {
  return inclusion(std::make_shared<Graph>(sub), std::make_shared<Graph>(whole));
}

Morphism inclusion(std::shared_ptr<const Graph> sub, std::shared_ptr<const Graph> whole) {
  std::map<PartId, PartId> m;
  for (const auto& p : sub->parts()) {
    if (!whole->contains(p))
      throw Error(ErrorCode::UnknownPart, "inclusion target lacks part '" + p + "'");
    m.emplace(p, p);
  }
  return Morphism(std::move(sub), std::move(whole), std::move(m));
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (f.cod() != g.dom())
    throw Error(ErrorCode::NonComposable, "cod of the first factor differs from dom of the second");
  std::map<PartId, PartId> m;
  for (const auto& [p, q] : f.part_map()) m.emplace(p, g.at(q));
  return Morphism(f.dom_ptr(), g.cod_ptr(), std::move(m));
}

bool surjective_on_parts(const Morphism& f) {
  std::set<PartId> image;
  for (const auto& [_, q] : f.part_map()) image.insert(q);
  return image.size() == f.cod().part_count();
}

bool injective_on_parts(const Morphism& f) {
  std::set<PartId> image;
  for (const auto& [_, q] : f.part_map())
    if (!image.insert(q).second) return false;
  return true;
}

bool surjective_on_vertices(const Morphism& f) {
  std::set<PartId> image;
  for (const auto& v : f.dom().vertices()) image.insert(f.at(v));
  return image.size() == f.cod().vertex_count();
}

bool injective_on_vertices(const Morphism& f) {
  std::set<PartId> image;
  for (const auto& v : f.dom().vertices())
    if (!image.insert(f.at(v)).second) return false;
  return true;
}

}  // namespace catgraph
