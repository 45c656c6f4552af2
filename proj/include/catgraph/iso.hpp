#pragma once

#include <optional>

#include "catgraph/morphism.hpp"

namespace catgraph {

struct Isomorphism {
  Morphism forward;
  Morphism inverse;
};

/// Exhaustive search over vertex bijections with edge matching per incidence
/// class. Returns a concrete forward/inverse pair when the graphs are
/// isomorphic, nullopt otherwise.
std::optional<Isomorphism> is_isomorphic(const Graph& g, const Graph& h);

bool isomorphic(const Graph& g, const Graph& h);

}  // namespace catgraph
