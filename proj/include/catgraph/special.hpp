#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catgraph/morphism.hpp"

namespace catgraph {

enum class Verdict { Yes, No, Nonexistent };

const char* to_string(Verdict v);

/// Outcome of a projectivity / injectivity / generator / cogenerator test.
/// The characterization predicate decides; negative verdicts carry a
/// re-validated obstruction or inseparable pair, positive verdicts are
/// spot-checked against a small battery.
struct ObjectClassification {
  CategoryId category;
  std::string property;
  Verdict verdict = Verdict::No;
  std::string detail;
  std::optional<Morphism> witness_f;
  std::optional<Morphism> witness_g;
  std::optional<Graph> witness_graph;
  bool witness_verified = false;
};

/// The edgeless graph on the given vertex set; free in all six categories.
Graph free_graph(const std::vector<PartId>& X, CategoryId c);

struct CofreeResult {
  std::optional<Graph> graph;
  std::string refutation;   // SiLlStG
  bool refutation_verified = false;
};

/// Complete graph on X for the conceptual-morphism categories, complete with
/// one loop per vertex for StG/SiStG, nonexistent for SiLlStG (verified on
/// every small candidate).
CofreeResult cofree_graph(const std::vector<PartId>& X, CategoryId c);

/// G/SiG/StG: projective iff every component carries at most one edge.
/// SiStG/SiLlG/SiLlStG: projective iff edgeless.
ObjectClassification is_projective(const Graph& g, CategoryId c);

/// A projective object with an epimorphism onto g: the edge-splitting
/// construction for the part-surjective categories, the edgeless graph on
/// V(g) for the vertex-surjective ones.
std::pair<Graph, Morphism> projective_presentation(const Graph& g, CategoryId c);

/// Injective iff the graph spans its category's cofree object (complete,
/// with loops everywhere under strict morphisms) and is nonempty; no
/// injective objects exist in SiLlStG.
ObjectClassification is_injective(const Graph& g, CategoryId c);

/// An injective object receiving a monomorphism from g: g itself plus an
/// edge over every unjoined vertex pair (and, under strict morphisms, a loop
/// at every bare vertex). The empty graph embeds into the terminal object.
/// Throws WrongCategory for SiLlStG, which has no injective objects.
std::pair<Graph, Morphism> injective_envelope(const Graph& g, CategoryId c);

/// G/SiG: generators are the graphs with a non-loop edge; SiLlG: every
/// nonempty graph; StG: none exist; SiStG/SiLlStG: nonempty edgeless graphs.
ObjectClassification is_generator(const Graph& g, CategoryId c);

/// G/SiG: a loop and a non-loop edge; SiLlG: an edge; StG: a doubly-looped
/// vertex plus an edge joining two looped vertices; SiStG: an edge joining
/// two looped vertices; SiLlStG: none exist.
ObjectClassification is_cogenerator(const Graph& g, CategoryId c);

}  // namespace catgraph
