#include "catgraph/limits.hpp"

#include <algorithm>
#include <cassert>

#include "catgraph/catalog.hpp"
#include "catgraph/hom.hpp"

namespace catgraph {

namespace {

struct ProductPart {
  PartId id;
  VertexPair ends;
  bool vertex = false;
  PartId alpha, beta;  // generating pair; for merged parts, the representative's
};

}  // namespace

TerminalResult terminal_object(CategoryId c) {
  switch (c) {
    case CategoryId::G:
    case CategoryId::SiG:
    case CategoryId::SiLlG:
      return {standard_graph("K1"), ""};
    case CategoryId::StG:
    case CategoryId::SiStG:
      return {standard_graph("K1^l"), ""};
    case CategoryId::SiLlStG:
      return {std::nullopt,
              "no terminal object: an edgeless candidate admits no strict morphism "
              "from K2, and a candidate with an edge u-w admits two distinct "
              "morphisms from K1"};
  }
  return {std::nullopt, "unreachable"};
}

Graph initial_object(CategoryId) { return Graph(); }

ConeResult product(const Graph& A, const Graph& B, CategoryId c) {
  require_object(A, c);
  require_object(B, c);

  std::vector<ProductPart> made;
  for (const auto& alpha : A.parts()) {
    VertexPair pa = A.incidence(alpha);
    bool a_vertex = A.is_vertex(alpha);
    for (const auto& beta : B.parts()) {
      VertexPair pb = B.incidence(beta);
      bool b_vertex = B.is_vertex(beta);
      if (requires_strict(c) && a_vertex != b_vertex) continue;  // mixed pair
      PartId id = "(" + alpha + "," + beta + ")";
      VertexPair ends(PartId("(" + pa.a + "," + pb.a + ")"),
                      PartId("(" + pa.b + "," + pb.b + ")"));
      made.push_back({id, ends, a_vertex && b_vertex, alpha, beta});
      if (!pa.diagonal() && !pb.diagonal()) {
        PartId bar = "bar(" + alpha + "," + beta + ")";
        VertexPair bar_ends(PartId("(" + pa.b + "," + pb.a + ")"),
                            PartId("(" + pa.a + "," + pb.b + ")"));
        made.push_back({bar, bar_ends, false, alpha, beta});
      }
    }
  }

  if (requires_simple(c)) {
    // one edge per endpoint pair; the lexicographically least id represents
    std::map<VertexPair, const ProductPart*> keep;
    std::vector<ProductPart> merged;
    for (const auto& part : made)
      if (!part.vertex) {
        auto [it, inserted] = keep.emplace(part.ends, &part);
        if (!inserted && part.id < it->second->id) it->second = &part;
      }
    for (const auto& part : made)
      if (part.vertex) merged.push_back(part);
    for (const auto& [_, part] : keep) merged.push_back(*part);
    made = std::move(merged);
  }

  std::vector<PartId> parts, vertices;
  std::map<PartId, VertexPair> inc;
  std::map<PartId, PartId> to_a, to_b;
  for (const auto& part : made) {
    parts.push_back(part.id);
    if (part.vertex)
      vertices.push_back(part.id);
    else
      inc.emplace(part.id, part.ends);
    to_a.emplace(part.id, part.alpha);
    to_b.emplace(part.id, part.beta);
  }

  ConeResult cone;
  cone.kind = "product";
  cone.apex = Graph::make(parts, vertices, inc);
  auto apex = std::make_shared<const Graph>(cone.apex);
  cone.legs.emplace("pi_A", Morphism(apex, std::make_shared<const Graph>(A), std::move(to_a)));
  cone.legs.emplace("pi_B", Morphism(apex, std::make_shared<const Graph>(B), std::move(to_b)));
  return cone;
}

ConeResult coproduct(const Graph& A, const Graph& B, CategoryId c) {
  require_object(A, c);
  require_object(B, c);

  std::vector<PartId> parts, vertices;
  std::map<PartId, VertexPair> inc;
  std::map<PartId, PartId> inj_a, inj_b;
  auto add = [&](const Graph& g, const std::string& tag, std::map<PartId, PartId>& inj) {
    for (const auto& p : g.parts()) {
      PartId id = tag + "(" + p + ")";
      parts.push_back(id);
      if (g.is_vertex(p)) {
        vertices.push_back(id);
      } else {
        VertexPair pair = g.incidence(p);
        inc.emplace(id, VertexPair(tag + "(" + pair.a + ")", tag + "(" + pair.b + ")"));
      }
      inj.emplace(p, id);
    }
  };
  add(A, "l", inj_a);
  add(B, "r", inj_b);

  ConeResult cone;
  cone.kind = "coproduct";
  cone.apex = Graph::make(parts, vertices, inc);
  auto apex = std::make_shared<const Graph>(cone.apex);
  cone.legs.emplace("iota_A", Morphism(std::make_shared<const Graph>(A), apex, std::move(inj_a)));
  cone.legs.emplace("iota_B", Morphism(std::make_shared<const Graph>(B), apex, std::move(inj_b)));
  return cone;
}

namespace {

void require_parallel(const Morphism& f, const Morphism& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod())
    throw Error(ErrorCode::NotParallel, "the morphisms do not share dom and cod");
}

}  // namespace

ConeResult equalizer(const Morphism& f, const Morphism& g, CategoryId c) {
  require_parallel(f, g);
  require_valid(f, c);
  require_valid(g, c);
  const Graph& A = f.dom();

  std::set<PartId> keep;
  for (const auto& p : A.parts()) {
    if (f.at(p) != g.at(p)) continue;
    VertexPair pair = A.incidence(p);
    if (f.at(pair.a) != g.at(pair.a) || f.at(pair.b) != g.at(pair.b)) continue;
    keep.insert(p);
  }

  std::vector<PartId> parts, vertices;
  std::map<PartId, VertexPair> inc;
  for (const auto& p : keep) {
    parts.push_back(p);
    if (A.is_vertex(p))
      vertices.push_back(p);
    else
      inc.emplace(p, A.incidence(p));
  }

  ConeResult cone;
  cone.kind = "equalizer";
  cone.apex = Graph::make(parts, vertices, inc);
  cone.legs.emplace("include", inclusion(cone.apex, A));
  cone.inputs = {f, g};
  return cone;
}

namespace {

class PartUnionFind {
 public:
  explicit PartUnionFind(const Graph& g) {
    for (const auto& p : g.parts()) parent_.emplace(p, p);
  }
  PartId find(const PartId& p) const {
    PartId root = p;
    while (parent_.at(root) != root) root = parent_.at(root);
    return root;
  }
  void unite(const PartId& x, const PartId& y) {
    PartId rx = find(x), ry = find(y);
    if (rx == ry) return;
    if (ry < rx) std::swap(rx, ry);
    parent_.at(ry) = rx;
  }

 private:
  std::map<PartId, PartId> parent_;
};

struct QuotientView {
  // class representative -> members
  std::map<PartId, std::set<PartId>> classes;
  // representative -> is the class a vertex
  std::map<PartId, bool> vertexish;
  // representative -> endpoint class reps (edge classes only)
  std::map<PartId, std::pair<PartId, PartId>> ends;
};

QuotientView snapshot(const Graph& B, const PartUnionFind& uf) {
  QuotientView view;
  for (const auto& p : B.parts()) {
    PartId root = uf.find(p);
    view.classes[root].insert(p);
    if (B.is_vertex(p)) view.vertexish[root] = true;
    else view.vertexish.emplace(root, false);
  }
  for (auto& [root, members] : view.classes) {
    if (view.vertexish.at(root)) continue;
    bool first = true;
    std::pair<PartId, PartId> ends;
    for (const auto& m : members) {
      VertexPair pair = B.incidence(m);
      std::pair<PartId, PartId> here{uf.find(pair.a), uf.find(pair.b)};
      if (here.second < here.first) std::swap(here.first, here.second);
      if (first) {
        ends = here;
        first = false;
      } else {
        // all members of an edge class share endpoint classes; guaranteed by
        // the generating relation, checked here
        assert(ends == here);
      }
    }
    view.ends.emplace(root, ends);
  }
  return view;
}

}  // namespace

CoequalizerResult coequalizer(const Morphism& f, const Morphism& g, CategoryId c) {
  require_parallel(f, g);
  require_valid(f, c);
  require_valid(g, c);
  const Graph& B = f.cod();

  PartUnionFind uf(B);
  for (const auto& a : f.dom().parts()) uf.unite(f.at(a), g.at(a));

  if (c == CategoryId::SiLlG) {
    // a class that would be a loop folds into its incident vertex class
    auto view = snapshot(B, uf);
    for (const auto& [root, ends] : view.ends)
      if (ends.first == ends.second) uf.unite(root, ends.first);
  }

  if (c == CategoryId::SiLlStG) {
    auto view = snapshot(B, uf);
    for (const auto& [root, ends] : view.ends) {
      if (ends.first == ends.second) {
        CoequalizerResult out;
        out.refusal =
            "quotient forces a loop: both endpoints of the edge class fall into "
            "one vertex class";
        out.refusal_class = view.classes.at(root);
        out.refusal_vertex_class = ends.first;
        return out;
      }
    }
  }

  if (requires_simple(c)) {
    // merge parallel edge classes over one endpoint-class pair
    auto view = snapshot(B, uf);
    std::map<std::pair<PartId, PartId>, PartId> seen;
    for (const auto& [root, ends] : view.ends) {
      auto [it, inserted] = seen.emplace(ends, root);
      if (!inserted) uf.unite(it->second, root);
    }
  }

  auto view = snapshot(B, uf);
  std::map<PartId, PartId> class_id;  // representative -> printed id
  for (const auto& [root, members] : view.classes) {
    std::string id = "{";
    for (auto it = members.begin(); it != members.end(); ++it) {
      if (it != members.begin()) id += ",";
      id += *it;
    }
    id += "}";
    class_id.emplace(root, id);
  }

  std::vector<PartId> parts, vertices;
  std::map<PartId, VertexPair> inc;
  for (const auto& [root, members] : view.classes) {
    parts.push_back(class_id.at(root));
    if (view.vertexish.at(root)) {
      vertices.push_back(class_id.at(root));
    } else {
      const auto& ends = view.ends.at(root);
      inc.emplace(class_id.at(root),
                  VertexPair(class_id.at(ends.first), class_id.at(ends.second)));
    }
  }

  CoequalizerResult out;
  ConeResult cone;
  cone.kind = "coequalizer";
  cone.apex = Graph::make(parts, vertices, inc);
  std::map<PartId, PartId> qmap;
  for (const auto& p : B.parts()) qmap.emplace(p, class_id.at(uf.find(p)));
  cone.legs.emplace("q", Morphism(f.cod_ptr(), std::make_shared<const Graph>(cone.apex),
                                  std::move(qmap)));
  cone.inputs = {f, g};
  out.cone = std::move(cone);
  return out;
}

ConeResult pullback(const Morphism& f, const Morphism& g, CategoryId c) {
  if (f.cod() != g.cod())
    throw Error(ErrorCode::NotCospan, "pullback needs a common codomain");
  require_valid(f, c);
  require_valid(g, c);

  ConeResult prod = product(f.dom(), g.dom(), c);
  Morphism left = compose(f, prod.legs.at("pi_A"));
  Morphism right = compose(g, prod.legs.at("pi_B"));
  ConeResult eq = equalizer(left, right, c);

  ConeResult cone;
  cone.kind = "pullback";
  cone.apex = eq.apex;
  cone.legs.emplace("pb_A", compose(prod.legs.at("pi_A"), eq.legs.at("include")));
  cone.legs.emplace("pb_B", compose(prod.legs.at("pi_B"), eq.legs.at("include")));
  cone.inputs = {f, g};
  return cone;
}

ConeResult terminal_cone(const Graph& t) {
  ConeResult cone;
  cone.kind = "terminal";
  cone.apex = t;
  return cone;
}

Morphism pair_into(const ConeResult& cone, const Morphism& u, const Morphism& w,
                   CategoryId c) {
  const bool is_pullback = cone.kind == "pullback";
  const Morphism& la = cone.legs.at(is_pullback ? "pb_A" : "pi_A");
  const Morphism& lb = cone.legs.at(is_pullback ? "pb_B" : "pi_B");
  const Graph& T = u.dom();

  std::map<PartId, PartId> m;
  for (const auto& t : T.vertices()) {
    PartId pick;
    int found = 0;
    for (const auto& p : cone.apex.vertices())
      if (la.at(p) == u.at(t) && lb.at(p) == w.at(t)) {
        pick = p;
        ++found;
      }
    if (found != 1)
      throw Error(ErrorCode::InvalidMorphism,
                  "pairing: " + std::to_string(found) + " apex vertices over a span");
    m.emplace(t, pick);
  }
  for (const auto& [e, ends] : T.edge_incidence()) {
    VertexPair target(m.at(ends.a), m.at(ends.b));
    PartId pick;
    int found = 0;
    for (const auto& p : cone.apex.parts_over(target))
      if (la.at(p) == u.at(e) && lb.at(p) == w.at(e) &&
          (!requires_strict(c) || cone.apex.is_edge(p))) {
        pick = p;
        ++found;
      }
    if (found != 1)
      throw Error(ErrorCode::InvalidMorphism,
                  "pairing: " + std::to_string(found) + " apex parts over an edge span");
    m.emplace(e, pick);
  }
  return Morphism(std::make_shared<const Graph>(T),
                  std::make_shared<const Graph>(cone.apex), std::move(m));
}

namespace {

struct CandidateIndex {
  // (leg_a image, leg_b image, endpoint pair) -> apex parts
  std::map<std::tuple<PartId, PartId, VertexPair>, std::vector<PartId>> slots;

  CandidateIndex(const Graph& apex, const Morphism& la, const Morphism& lb) {
    for (const auto& p : apex.parts())
      slots[{la.at(p), lb.at(p), apex.incidence(p)}].push_back(p);
  }

  const std::vector<PartId>* find(const PartId& ia, const PartId& ib,
                                  const VertexPair& ends) const {
    auto it = slots.find({ia, ib, ends});
    return it == slots.end() ? nullptr : &it->second;
  }
};

struct VertexIndex {
  std::map<std::pair<PartId, PartId>, std::vector<PartId>> slots;

  VertexIndex(const Graph& apex, const Morphism& la, const Morphism& lb) {
    for (const auto& v : apex.vertices()) slots[{la.at(v), lb.at(v)}].push_back(v);
  }

  const std::vector<PartId>* find(const PartId& ia, const PartId& ib) const {
    auto it = slots.find({ia, ib});
    return it == slots.end() ? nullptr : &it->second;
  }
};

}  // namespace

UmpReport verify_ump(const ConeResult& cone, const std::vector<Graph>& battery,
                     CategoryId c) {
  UmpReport report;

  auto fail = [&](std::string detail) {
    report.pass = false;
    if (report.detail.empty()) report.detail = std::move(detail);
  };

  if (cone.kind == "terminal") {
    for (const auto& T : battery) {
      if (!in_category(T, c)) continue;
      auto n = hom_count(T, cone.apex, c);
      if (n != 1) {
        fail("terminal check: " + std::to_string(n) + " morphisms from a battery object");
        break;
      }
    }
    return report;
  }

  if (cone.kind == "product" || cone.kind == "pullback") {
    const bool is_pullback = cone.kind == "pullback";
    const Morphism& la = cone.legs.at(is_pullback ? "pb_A" : "pi_A");
    const Morphism& lb = cone.legs.at(is_pullback ? "pb_B" : "pi_B");
    const Graph& A = la.cod();
    const Graph& B = lb.cod();

    // validity of the legs themselves is part of the property
    if (!is_valid(la, c) || !is_valid(lb, c)) {
      fail("a projection is not a valid morphism of the category");
      return report;
    }
    if (is_pullback) {
      if (compose(cone.inputs[0], la).part_map() != compose(cone.inputs[1], lb).part_map()) {
        fail("pullback square does not commute");
        return report;
      }
    }

    CandidateIndex index(cone.apex, la, lb);
    VertexIndex vindex(cone.apex, la, lb);

    for (const auto& T : battery) {
      if (!in_category(T, c)) continue;
      HomSet homs_a = enumerate_homs(T, A, c);
      HomSet homs_b = enumerate_homs(T, B, c);
      for (const auto& u : homs_a.morphisms) {
        for (const auto& w : homs_b.morphisms) {
          if (is_pullback &&
              compose(cone.inputs[0], u).part_map() != compose(cone.inputs[1], w).part_map())
            continue;

          std::map<PartId, PartId> m;
          for (const auto& t : T.vertices()) {
            const auto* cands = vindex.find(u.at(t), w.at(t));
            if (!cands || cands->empty()) {
              fail(cone.kind + ": no apex vertex over a test span");
              return report;
            }
            if (cands->size() > 1) {
              fail(cone.kind + ": apex vertex over a test span is not unique");
              return report;
            }
            m.emplace(t, cands->front());
          }

          for (const auto& [e, ends] : T.edge_incidence()) {
            VertexPair target(m.at(ends.a), m.at(ends.b));
            const auto* cands = index.find(u.at(e), w.at(e), target);
            std::size_t usable = 0;
            PartId pick;
            if (cands) {
              for (const auto& p : *cands) {
                if (requires_strict(c) && !cone.apex.is_edge(p)) continue;
                pick = p;
                ++usable;
              }
            }
            if (usable == 0) {
              fail(cone.kind + ": no mediating image for an edge datum (u=" + u.at(e) +
                   ", w=" + w.at(e) + ")");
              return report;
            }
            if (usable > 1) {
              fail(cone.kind + ": mediating image for an edge datum is not unique");
              return report;
            }
            m.emplace(e, pick);
          }

          Morphism mediator(std::make_shared<const Graph>(T),
                            std::make_shared<const Graph>(cone.apex), std::move(m));
          if (!is_valid(mediator, c)) {
            fail(cone.kind + ": constructed mediator is not a valid morphism");
            return report;
          }
          if (compose(la, mediator).part_map() != u.part_map() ||
              compose(lb, mediator).part_map() != w.part_map()) {
            fail(cone.kind + ": mediator does not commute with the legs");
            return report;
          }
        }
      }
    }
    return report;
  }

  if (cone.kind == "coproduct") {
    const Morphism& ia = cone.legs.at("iota_A");
    const Morphism& ib = cone.legs.at("iota_B");
    if (!is_valid(ia, c) || !is_valid(ib, c)) {
      fail("an injection is not a valid morphism of the category");
      return report;
    }
    std::map<PartId, std::pair<bool, PartId>> origin;  // apex part -> (from A?, source)
    for (const auto& [p, q] : ia.part_map()) origin[q] = {true, p};
    for (const auto& [p, q] : ib.part_map()) origin[q] = {false, p};

    for (const auto& T : battery) {
      if (!in_category(T, c)) continue;
      HomSet homs_a = enumerate_homs(ia.dom(), T, c);
      HomSet homs_b = enumerate_homs(ib.dom(), T, c);
      for (const auto& u : homs_a.morphisms) {
        for (const auto& w : homs_b.morphisms) {
          std::map<PartId, PartId> m;
          for (const auto& p : cone.apex.parts()) {
            const auto& [from_a, src] = origin.at(p);
            m.emplace(p, from_a ? u.at(src) : w.at(src));
          }
          Morphism mediator(std::make_shared<const Graph>(cone.apex),
                            std::make_shared<const Graph>(T), std::move(m));
          if (!is_valid(mediator, c)) {
            fail("coproduct: copairing is not a valid morphism");
            return report;
          }
          if (compose(mediator, ia).part_map() != u.part_map() ||
              compose(mediator, ib).part_map() != w.part_map()) {
            fail("coproduct: copairing does not restrict to the data");
            return report;
          }
        }
      }
    }
    return report;
  }

  if (cone.kind == "equalizer") {
    const Morphism& inc = cone.legs.at("include");
    const Morphism& f = cone.inputs.at(0);
    const Morphism& g = cone.inputs.at(1);
    if (!is_valid(inc, c)) {
      fail("equalizer: inclusion is not a valid morphism");
      return report;
    }
    if (compose(f, inc).part_map() != compose(g, inc).part_map()) {
      fail("equalizer: the inclusion does not equalize the pair");
      return report;
    }
    for (const auto& T : battery) {
      if (!in_category(T, c)) continue;
      HomSet homs = enumerate_homs(T, f.dom(), c);
      for (const auto& t : homs.morphisms) {
        if (compose(f, t).part_map() != compose(g, t).part_map()) continue;
        for (const auto& [_, image] : t.part_map()) {
          if (!cone.apex.contains(image)) {
            fail("equalizer: an equalizing test morphism does not factor");
            return report;
          }
        }
      }
    }
    return report;
  }

  if (cone.kind == "coequalizer") {
    const Morphism& q = cone.legs.at("q");
    const Morphism& f = cone.inputs.at(0);
    const Morphism& g = cone.inputs.at(1);
    if (!is_valid(q, c)) {
      fail("coequalizer: quotient map is not a valid morphism");
      return report;
    }
    if (compose(q, f).part_map() != compose(q, g).part_map()) {
      fail("coequalizer: q does not coequalize the pair");
      return report;
    }
    // class membership is recovered from q itself
    std::map<PartId, std::vector<PartId>> members;
    for (const auto& [p, cls] : q.part_map()) members[cls].push_back(p);

    for (const auto& T : battery) {
      if (!in_category(T, c)) continue;
      HomSet homs = enumerate_homs(f.cod(), T, c);
      for (const auto& z : homs.morphisms) {
        if (compose(z, f).part_map() != compose(z, g).part_map()) continue;
        std::map<PartId, PartId> m;
        bool consistent = true;
        for (const auto& [cls, mems] : members) {
          const PartId& value = z.at(mems.front());
          for (const auto& mem : mems) {
            if (z.at(mem) != value) {
              consistent = false;
              break;
            }
          }
          if (!consistent) break;
          m.emplace(cls, value);
        }
        if (!consistent) {
          fail("coequalizer: a coequalizing morphism is not constant on a class, "
               "so no mediator exists");
          return report;
        }
        Morphism mediator(std::make_shared<const Graph>(cone.apex),
                          std::make_shared<const Graph>(T), std::move(m));
        if (!is_valid(mediator, c)) {
          fail("coequalizer: induced mediator is not a valid morphism");
          return report;
        }
        if (compose(mediator, q).part_map() != z.part_map()) {
          fail("coequalizer: induced mediator does not recover the test morphism");
          return report;
        }
      }
    }
    return report;
  }

  fail("unknown cone kind '" + cone.kind + "'");
  return report;
}

}  // namespace catgraph
