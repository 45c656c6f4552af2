#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "catgraph/morphism.hpp"

namespace catgraph {

/// A constructed universal object together with its structural morphisms.
/// `legs` holds, by kind:
///   product:     pi_A, pi_B        (apex -> factor)
///   coproduct:   iota_A, iota_B    (summand -> apex)
///   equalizer:   include           (apex -> dom of the pair)
///   coequalizer: q                 (cod of the pair -> apex)
///   pullback:    pb_A, pb_B        (apex -> the two legs' domains)
/// `inputs` carries the defining morphisms for equalizer/coequalizer/pullback.
struct ConeResult {
  std::string kind;
  Graph apex;
  std::map<std::string, Morphism> legs;
  std::vector<Morphism> inputs;
};

struct TerminalResult {
  std::optional<Graph> object;
  std::string refutation;  // set when no terminal object exists
};

/// K_1 for the conceptual-morphism categories, K_1 with a loop for the
/// strict multigraph categories, nothing for SiLlStG (an edgeless candidate
/// rejects K_2, an edged candidate admits two maps from K_1).
TerminalResult terminal_object(CategoryId c);

/// The empty graph, in every category.
Graph initial_object(CategoryId c);

/// Categorical product. Conceptual base construction: one part per part
/// pair, with a second "bar" part when both factors are non-loop edges;
/// strict categories drop mixed vertex/edge pairs; simple categories merge
/// duplicate edges over one endpoint pair into a single representative.
ConeResult product(const Graph& A, const Graph& B, CategoryId c);

/// Disjoint union with parts tagged l(...) / r(...).
ConeResult coproduct(const Graph& A, const Graph& B, CategoryId c);

/// Subgraph of dom(f) on the parts where f and g agree, together with
/// endpoint agreement for edges. Throws NotParallel.
ConeResult equalizer(const Morphism& f, const Morphism& g, CategoryId c);

struct CoequalizerResult {
  std::optional<ConeResult> cone;
  // set when the category refuses the quotient (SiLlStG forced loop)
  std::string refusal;
  std::set<PartId> refusal_class;    // the edge class that would become a loop
  PartId refusal_vertex_class;       // the vertex class both endpoints land in
};

/// Quotient of cod parts by the closure of { f(a) ~ g(a) }. A class holding
/// any vertex is a vertex. Simple categories merge parallel classes; SiLlG
/// folds would-be loops into their incident vertex class; SiLlStG refuses
/// with a loop witness instead.
CoequalizerResult coequalizer(const Morphism& f, const Morphism& g, CategoryId c);

/// Equalizer of f.pi_A and g.pi_B over product(dom f, dom g).
/// Throws NotCospan when the codomains differ.
ConeResult pullback(const Morphism& f, const Morphism& g, CategoryId c);

ConeResult terminal_cone(const Graph& t);

/// The mediating morphism T -> apex of a product (or pullback) cone for the
/// span u : T -> A, w : T -> B. Throws InvalidMorphism when the apex admits
/// no (or no unique) image for some part.
Morphism pair_into(const ConeResult& cone, const Morphism& u, const Morphism& w,
                   CategoryId c);

struct UmpReport {
  bool pass = true;
  std::string detail;  // first violation, when any
};

/// Exhaustive bounded check of the universal mapping property of a
/// constructed cone against every admissible test datum built from the
/// battery: mediating morphisms are constructed directly and counted, so
/// both existence and uniqueness failures are detected and reported.
UmpReport verify_ump(const ConeResult& cone, const std::vector<Graph>& battery,
                     CategoryId c);

}  // namespace catgraph
