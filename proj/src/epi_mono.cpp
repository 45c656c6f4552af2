#include "catgraph/epi_mono.hpp"

#include <algorithm>

#include "catgraph/catalog.hpp"

namespace catgraph {

namespace {

PartId fresh_id(const Graph& g, PartId base) {
  while (g.contains(base)) base += "'";
  return base;
}

/// Appends a clone v' of vertex v together with clones of every edge
/// incident to v (a loop at v becomes a loop at v'). Returns (C, i, g)
/// where i is the inclusion and g the morphism shifting v to v'.
EpiWitness append_vertex_witness(const Graph& B, const PartId& v) {
  PartId v2 = fresh_id(B, v + "'");
  std::vector<PartId> parts(B.parts().begin(), B.parts().end());
  std::vector<PartId> vertices(B.vertices().begin(), B.vertices().end());
  std::map<PartId, VertexPair> inc = B.edge_incidence();
  parts.push_back(v2);
  vertices.push_back(v2);

  std::map<PartId, PartId> shifted;  // edge -> its clone at v'
  for (const auto& [e, pair] : B.edge_incidence()) {
    if (!pair.touches(v)) continue;
    PartId e2 = fresh_id(B, e + "'");
    while (inc.count(e2)) e2 += "'";
    parts.push_back(e2);
    inc.emplace(e2, pair.diagonal() ? VertexPair(v2, v2) : VertexPair(v2, pair.other(v)));
    shifted.emplace(e, e2);
  }
  Graph C = Graph::make(parts, vertices, inc);

  auto Bp = std::make_shared<const Graph>(B);
  auto Cp = std::make_shared<const Graph>(C);
  std::map<PartId, PartId> imap, gmap;
  for (const auto& p : B.parts()) {
    imap.emplace(p, p);
    if (p == v)
      gmap.emplace(p, v2);
    else if (auto it = shifted.find(p); it != shifted.end())
      gmap.emplace(p, it->second);
    else
      gmap.emplace(p, p);
  }
  return {C, Morphism(Bp, Cp, std::move(imap)), Morphism(Bp, Cp, std::move(gmap)), v};
}

/// Appends a parallel copy e' of edge e; i is the inclusion, g moves e to e'.
EpiWitness parallel_edge_witness(const Graph& B, const PartId& e) {
  PartId e2 = fresh_id(B, e + "'");
  std::vector<PartId> parts(B.parts().begin(), B.parts().end());
  std::map<PartId, VertexPair> inc = B.edge_incidence();
  parts.push_back(e2);
  inc.emplace(e2, B.incidence(e));
  Graph C = Graph::make(parts, {B.vertices().begin(), B.vertices().end()}, inc);

  auto Bp = std::make_shared<const Graph>(B);
  auto Cp = std::make_shared<const Graph>(C);
  std::map<PartId, PartId> imap, gmap;
  for (const auto& p : B.parts()) {
    imap.emplace(p, p);
    gmap.emplace(p, p == e ? e2 : p);
  }
  return {C, Morphism(Bp, Cp, std::move(imap)), Morphism(Bp, Cp, std::move(gmap)), e};
}

/// The one-vertex-one-loop target: i collapses everything to the vertex,
/// g does the same except for e, which goes to the loop. Used where a
/// parallel edge would break simplicity.
EpiWitness loop_collapse_witness(const Graph& B, const PartId& e) {
  Graph C = standard_graph("K1^l");
  auto Bp = std::make_shared<const Graph>(B);
  auto Cp = std::make_shared<const Graph>(C);
  std::map<PartId, PartId> imap, gmap;
  for (const auto& p : B.parts()) {
    imap.emplace(p, "v1");
    gmap.emplace(p, p == e ? "l(v1)" : "v1");
  }
  return {C, Morphism(Bp, Cp, std::move(imap)), Morphism(Bp, Cp, std::move(gmap)), e};
}

}  // namespace

EpiReport classify_epi(const Morphism& f, CategoryId c) {
  require_valid(f, c);
  const Graph& B = f.cod();
  EpiReport report;
  report.criterion = uses_part_epi_mono(c) ? "part-surjective" : "vertex-surjective";

  std::set<PartId> image;
  for (const auto& [_, q] : f.part_map()) image.insert(q);

  PartId missed;
  bool found = false;
  if (uses_part_epi_mono(c)) {
    for (const auto& p : B.parts())
      if (!image.count(p)) {
        // prefer a missed vertex: its witness is valid in every category
        if (!found || (!B.is_vertex(missed) && B.is_vertex(p))) {
          missed = p;
          found = true;
        }
      }
  } else {
    for (const auto& v : B.vertices())
      if (!image.count(v)) {
        missed = v;
        found = true;
        break;
      }
  }
  if (!found) {
    report.epi = true;
    return report;
  }

  if (B.is_vertex(missed))
    report.witness = append_vertex_witness(B, missed);
  else if (c == CategoryId::SiG)
    report.witness = loop_collapse_witness(B, missed);
  else
    report.witness = parallel_edge_witness(B, missed);
  return report;
}

MonoReport classify_mono(const Morphism& f, CategoryId c) {
  require_valid(f, c);
  const Graph& A = f.dom();
  MonoReport report;
  report.criterion = uses_part_epi_mono(c) ? "part-injective" : "vertex-injective";

  std::map<PartId, PartId> first_preimage;
  PartId col_a, col_b;
  bool found = false;
  auto scan = [&](const PartId& p) {
    auto [it, inserted] = first_preimage.emplace(f.at(p), p);
    if (!inserted && !found) {
      col_a = it->second;
      col_b = p;
      found = true;
    }
  };
  if (uses_part_epi_mono(c)) {
    // prefer vertex collisions; their K_1 witness is valid in every category
    for (const auto& v : A.vertices()) scan(v);
    if (!found)
      for (const auto& e : A.edges()) scan(e);
  } else {
    for (const auto& v : A.vertices()) scan(v);
  }
  if (!found) {
    report.mono = true;
    return report;
  }

  auto Ap = std::make_shared<const Graph>(A);
  if (A.is_vertex(col_a) && A.is_vertex(col_b)) {
    Graph K1 = standard_graph("K1");
    auto Kp = std::make_shared<const Graph>(K1);
    report.witness = MonoWitness{Morphism(Kp, Ap, {{"v1", col_a}}),
                                 Morphism(Kp, Ap, {{"v1", col_b}}), col_a, col_b};
    return report;
  }

  // at least one collided part is an edge: distinguish with maps from K_2
  Graph K2 = standard_graph("K2");
  auto Kp = std::make_shared<const Graph>(K2);
  auto leg = [&](const PartId& target, bool flip) {
    std::map<PartId, PartId> m;
    if (A.is_edge(target)) {
      VertexPair pair = A.incidence(target);
      m = {{"v1", flip ? pair.b : pair.a},
           {"v2", flip ? pair.a : pair.b},
           {"e(v1,v2)", target}};
    } else {
      m = {{"v1", target}, {"v2", target}, {"e(v1,v2)", target}};
    }
    return Morphism(Kp, Ap, std::move(m));
  };
  // orient the second leg so the composites agree pointwise on vertices
  Morphism j = leg(col_a, false);
  Morphism k = leg(col_b, false);
  if (f.at(j.at("v1")) != f.at(k.at("v1"))) k = leg(col_b, true);
  report.witness = MonoWitness{std::move(j), std::move(k), col_a, col_b};
  return report;
}

}  // namespace catgraph
