#pragma once

#include <cstdint>
#include <vector>

#include "catgraph/morphism.hpp"

namespace catgraph {

struct HomSet {
  Graph dom, cod;
  CategoryId category;
  std::vector<Morphism> morphisms;

  std::size_t size() const { return morphisms.size(); }
};

/// Complete, duplicate-free enumeration of hom_c(A, B) in a canonical order.
/// Iterates vertex maps V(A) -> V(B) and extends each edge to every part of
/// B carrying the required image incidence: edges only under a strict
/// category, edges or the diagonal vertex part otherwise.
/// Throws TooLarge when the result would exceed max_results.
HomSet enumerate_homs(const Graph& A, const Graph& B, CategoryId c,
                      std::uint64_t max_results = 2'000'000);

/// |hom_c(A, B)| without materializing: closed form for edgeless domains,
/// per-vertex-map products of edge-target counts otherwise.
std::uint64_t hom_count(const Graph& A, const Graph& B, CategoryId c);

}  // namespace catgraph
