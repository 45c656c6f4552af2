#pragma once

#include <optional>
#include <string>

#include "catgraph/morphism.hpp"

namespace catgraph {

/// A pair of morphisms that defeats right-cancellation: i != g yet
/// i . f == g . f. Both legs share the codomain `target`.
struct EpiWitness {
  Graph target;
  Morphism i;
  Morphism g;
  PartId missed;  // the codomain part outside the image of f
};

/// Two morphisms into dom(f) that defeat left-cancellation: j != k yet
/// f . j == f . k.
struct MonoWitness {
  Morphism j;
  Morphism k;
  PartId collided_a, collided_b;  // distinct parts of dom with equal images
};

struct EpiReport {
  bool epi = false;
  std::string criterion;  // "part-surjective" or "vertex-surjective"
  std::optional<EpiWitness> witness;
};

struct MonoReport {
  bool mono = false;
  std::string criterion;  // "part-injective" or "vertex-injective"
  std::optional<MonoWitness> witness;
};

/// Epimorphism test by the surjectivity characterization of the category
/// (parts for G/StG/SiG, vertices otherwise). Non-epis come with a concrete
/// witness: an appended-vertex or appended-parallel-edge extension of the
/// codomain, or the two collapse maps onto a one-vertex looped graph when
/// the category forbids parallel edges.
EpiReport classify_epi(const Morphism& f, CategoryId c);

/// Monomorphism test by the injectivity characterization; non-monos carry a
/// distinguishing pair from K_2 (edge collisions) or K_1 (vertex collisions).
MonoReport classify_mono(const Morphism& f, CategoryId c);

}  // namespace catgraph
