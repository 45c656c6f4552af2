#include "catgraph/iso.hpp"

#include <algorithm>
#include <numeric>

namespace catgraph {

namespace {

std::map<VertexPair, std::vector<PartId>> edges_by_pair(const Graph& g) {
  std::map<VertexPair, std::vector<PartId>> out;
  for (const auto& [e, pair] : g.edge_incidence()) out[pair].push_back(e);
  return out;  // inner vectors come out sorted: map iteration is by edge id
}

}  // namespace

std::optional<Isomorphism> is_isomorphic(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
    return std::nullopt;

  std::vector<PartId> gv(g.vertices().begin(), g.vertices().end());
  std::vector<PartId> hv(h.vertices().begin(), h.vertices().end());
  auto g_edges = edges_by_pair(g);
  auto h_edges = edges_by_pair(h);

  // degree-profile pre-check per incidence class size
  {
    std::vector<std::size_t> gs, hs;
    for (auto& [_, v] : g_edges) gs.push_back(v.size());
    for (auto& [_, v] : h_edges) hs.push_back(v.size());
    std::sort(gs.begin(), gs.end());
    std::sort(hs.begin(), hs.end());
    if (gs != hs) return std::nullopt;
  }

  std::vector<std::size_t> perm(gv.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::map<PartId, PartId> vmap;
    for (std::size_t i = 0; i < gv.size(); ++i) vmap.emplace(gv[i], hv[perm[i]]);

    bool ok = true;
    std::map<PartId, PartId> fwd = vmap, bwd;
    for (const auto& [v, w] : vmap) bwd.emplace(w, v);
    for (const auto& [pair, edges] : g_edges) {
      VertexPair image(vmap.at(pair.a), vmap.at(pair.b));
      auto it = h_edges.find(image);
      if (it == h_edges.end() || it->second.size() != edges.size()) {
        ok = false;
        break;
      }
      for (std::size_t i = 0; i < edges.size(); ++i) {
        fwd.emplace(edges[i], it->second[i]);
        bwd.emplace(it->second[i], edges[i]);
      }
    }
    if (ok && fwd.size() == g.part_count() && bwd.size() == h.part_count()) {
      auto gp = std::make_shared<const Graph>(g);
      auto hp = std::make_shared<const Graph>(h);
      return Isomorphism{Morphism(gp, hp, std::move(fwd)), Morphism(hp, gp, std::move(bwd))};
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

bool isomorphic(const Graph& g, const Graph& h) { return is_isomorphic(g, h).has_value(); }

}  // namespace catgraph
