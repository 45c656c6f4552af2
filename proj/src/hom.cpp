#include "catgraph/hom.hpp"

#include <algorithm>

namespace catgraph {

namespace {

constexpr std::uint64_t kIterationCap = 80'000'000;

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > UINT64_MAX / base)
      throw Error(ErrorCode::TooLarge, "hom count exceeds 64 bits");
    out *= base;
  }
  return out;
}

struct EdgeSlot {
  PartId edge;
  VertexPair ends;  // endpoints in dom
};

/// Parts of B usable as the image of an edge whose endpoint images form
/// `pair`: every edge over the pair, plus the diagonal vertex when the
/// category admits conceptual morphisms.
std::vector<PartId> edge_targets(const Graph& B, const VertexPair& pair, CategoryId c) {
  std::vector<PartId> out;
  if (!requires_strict(c) && pair.diagonal() && B.is_vertex(pair.a)) out.push_back(pair.a);
  for (const auto& e : B.edges_over(pair)) out.push_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

HomSet enumerate_homs(const Graph& A, const Graph& B, CategoryId c,
                      std::uint64_t max_results) {
  require_object(A, c);
  require_object(B, c);
  HomSet result{A, B, c, {}};

  auto dom = std::make_shared<const Graph>(A);
  auto cod = std::make_shared<const Graph>(B);

  if (A.empty()) {
    result.morphisms.emplace_back(dom, cod, std::map<PartId, PartId>{});
    return result;
  }
  if (B.vertices().empty()) return result;

  std::vector<PartId> dom_vs(A.vertices().begin(), A.vertices().end());
  std::vector<PartId> cod_vs(B.vertices().begin(), B.vertices().end());
  std::vector<EdgeSlot> slots;
  for (const auto& [e, pair] : A.edge_incidence()) slots.push_back({e, pair});

  std::vector<std::size_t> choice(dom_vs.size(), 0);
  bool done = false;
  while (!done) {
    std::map<PartId, PartId> vmap;
    for (std::size_t i = 0; i < dom_vs.size(); ++i) vmap.emplace(dom_vs[i], cod_vs[choice[i]]);

    // per-edge candidate lists under this vertex map
    std::vector<std::vector<PartId>> cands(slots.size());
    bool feasible = true;
    for (std::size_t i = 0; i < slots.size() && feasible; ++i) {
      VertexPair image(vmap.at(slots[i].ends.a), vmap.at(slots[i].ends.b));
      cands[i] = edge_targets(B, image, c);
      feasible = !cands[i].empty();
    }
    if (feasible) {
      std::vector<std::size_t> pick(slots.size(), 0);
      bool inner_done = false;
      while (!inner_done) {
        std::map<PartId, PartId> m = vmap;
        for (std::size_t i = 0; i < slots.size(); ++i) m.emplace(slots[i].edge, cands[i][pick[i]]);
        if (result.morphisms.size() >= max_results)
          throw Error(ErrorCode::TooLarge, "hom set exceeds enumeration bound");
        result.morphisms.emplace_back(dom, cod, std::move(m));
        inner_done = true;
        for (std::size_t i = slots.size(); i-- > 0;) {
          if (++pick[i] < cands[i].size()) {
            inner_done = false;
            break;
          }
          pick[i] = 0;
        }
        if (slots.empty()) break;
      }
    }
    done = true;
    for (std::size_t i = dom_vs.size(); i-- > 0;) {
      if (++choice[i] < cod_vs.size()) {
        done = false;
        break;
      }
      choice[i] = 0;
    }
  }
  return result;
}

std::uint64_t hom_count(const Graph& A, const Graph& B, CategoryId c) {
  require_object(A, c);
  require_object(B, c);
  if (A.empty()) return 1;
  if (B.vertices().empty()) return 0;
  if (A.edge_count() == 0) return checked_pow(B.vertex_count(), A.vertex_count());

  // target multiplicities per incidence pair of B
  std::map<VertexPair, std::uint64_t> multiplicity;
  for (const auto& [e, pair] : B.edge_incidence()) ++multiplicity[pair];
  auto targets_for = [&](const VertexPair& pair) -> std::uint64_t {
    std::uint64_t n = 0;
    if (auto it = multiplicity.find(pair); it != multiplicity.end()) n = it->second;
    if (!requires_strict(c) && pair.diagonal() && B.is_vertex(pair.a)) ++n;
    return n;
  };

  std::vector<PartId> dom_vs(A.vertices().begin(), A.vertices().end());
  std::vector<PartId> cod_vs(B.vertices().begin(), B.vertices().end());
  std::vector<EdgeSlot> slots;
  for (const auto& [e, pair] : A.edge_incidence()) slots.push_back({e, pair});

  std::uint64_t vertex_maps = checked_pow(cod_vs.size(), dom_vs.size());
  if (vertex_maps > kIterationCap)
    throw Error(ErrorCode::TooLarge, "vertex map space too large to sweep");

  std::map<PartId, std::size_t> vindex;
  for (std::size_t i = 0; i < dom_vs.size(); ++i) vindex.emplace(dom_vs[i], i);

  std::uint64_t total = 0;
  std::vector<std::size_t> choice(dom_vs.size(), 0);
  bool done = false;
  while (!done) {
    std::uint64_t ways = 1;
    for (const auto& slot : slots) {
      const PartId& ia = cod_vs[choice[vindex.at(slot.ends.a)]];
      const PartId& ib = cod_vs[choice[vindex.at(slot.ends.b)]];
      ways *= targets_for(VertexPair(ia, ib));
      if (ways == 0) break;
    }
    if (total > UINT64_MAX - ways) throw Error(ErrorCode::TooLarge, "hom count overflow");
    total += ways;
    done = true;
    for (std::size_t i = dom_vs.size(); i-- > 0;) {
      if (++choice[i] < cod_vs.size()) {
        done = false;
        break;
      }
      choice[i] = 0;
    }
  }
  return total;
}

}  // namespace catgraph
