#include "catgraph/graph.hpp"

#include <algorithm>

namespace catgraph {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorCode::VertexWithIncidence: return "VertexWithIncidence";
    case ErrorCode::EmptyVertexNonemptyParts: return "EmptyVertexNonemptyParts";
    case ErrorCode::MissingIncidence: return "MissingIncidence";
    case ErrorCode::UnknownPart: return "UnknownPart";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::ObjectNotInCategory: return "ObjectNotInCategory";
    case ErrorCode::NonComposable: return "NonComposable";
    case ErrorCode::NotParallel: return "NotParallel";
    case ErrorCode::NotCospan: return "NotCospan";
    case ErrorCode::InvalidMorphism: return "InvalidMorphism";
    case ErrorCode::NotMono: return "NotMono";
    case ErrorCode::NoClassifier: return "NoClassifier";
    case ErrorCode::NoTranspose: return "NoTranspose";
    case ErrorCode::WrongCategory: return "WrongCategory";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Error";
}

VertexPair::VertexPair(PartId x, PartId y) {
  if (y < x) std::swap(x, y);
  a = std::move(x);
  b = std::move(y);
}

Graph Graph::make(const std::vector<PartId>& parts,
                  const std::vector<PartId>& vertices,
                  const std::map<PartId, VertexPair>& incidence) {
  Graph g;
  for (const auto& p : parts) {
    if (!g.parts_.insert(p).second)
      throw Error(ErrorCode::DuplicateId, "part '" + p + "' declared twice");
  }
  for (const auto& v : vertices) {
    if (!g.parts_.count(v))
      throw Error(ErrorCode::UnknownPart, "vertex '" + v + "' is not a declared part");
    g.vertices_.insert(v);
  }
  if (g.vertices_.empty() && !g.parts_.empty())
    throw Error(ErrorCode::EmptyVertexNonemptyParts,
                "a graph with no vertices has no parts");
  for (const auto& [e, pair] : incidence) {
    if (!g.parts_.count(e))
      throw Error(ErrorCode::UnknownPart, "incidence given for unknown part '" + e + "'");
    if (g.vertices_.count(e))
      throw Error(ErrorCode::VertexWithIncidence,
                  "vertex '" + e + "' may not carry an explicit incidence entry");
    for (const auto& end : {pair.a, pair.b}) {
      if (!g.vertices_.count(end))
        throw Error(ErrorCode::DanglingEndpoint,
                    "endpoint '" + end + "' of edge '" + e + "' is not a vertex");
    }
    g.incidence_.emplace(e, VertexPair(pair.a, pair.b));
  }
  for (const auto& p : g.parts_) {
    if (!g.vertices_.count(p) && !g.incidence_.count(p))
      throw Error(ErrorCode::MissingIncidence, "edge '" + p + "' has no incidence entry");
  }
  return g;
}

VertexPair Graph::incidence(const PartId& p) const {
  if (auto it = incidence_.find(p); it != incidence_.end()) return it->second;
  if (vertices_.count(p)) return VertexPair(p, p);
  throw Error(ErrorCode::UnknownPart, "no part '" + p + "'");
}

std::vector<PartId> Graph::edges() const {
  std::vector<PartId> out;
  out.reserve(incidence_.size());
  for (const auto& [e, _] : incidence_) out.push_back(e);
  return out;
}

std::vector<PartId> Graph::parts_over(const VertexPair& pair) const {
  std::vector<PartId> out;
  if (pair.diagonal() && vertices_.count(pair.a)) out.push_back(pair.a);
  for (const auto& [e, inc] : incidence_)
    if (inc == pair) out.push_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PartId> Graph::edges_over(const VertexPair& pair) const {
  std::vector<PartId> out;
  for (const auto& [e, inc] : incidence_)
    if (inc == pair) out.push_back(e);
  return out;
}

bool is_simple(const Graph& g) {
  std::set<VertexPair> seen;
  for (const auto& [e, pair] : g.edge_incidence())
    if (!seen.insert(pair).second) return false;
  return true;
}

bool is_loopless(const Graph& g) {
  for (const auto& [e, pair] : g.edge_incidence())
    if (pair.diagonal()) return false;
  return true;
}

bool requires_simple(CategoryId c) {
  return c == CategoryId::SiG || c == CategoryId::SiLlG || c == CategoryId::SiStG ||
         c == CategoryId::SiLlStG;
}

bool requires_loopless(CategoryId c) {
  return c == CategoryId::SiLlG || c == CategoryId::SiLlStG;
}

bool requires_strict(CategoryId c) {
  return c == CategoryId::StG || c == CategoryId::SiStG || c == CategoryId::SiLlStG;
}

bool uses_part_epi_mono(CategoryId c) {
  return c == CategoryId::G || c == CategoryId::StG || c == CategoryId::SiG;
}

bool in_category(const Graph& g, CategoryId c) {
  if (requires_simple(c) && !is_simple(g)) return false;
  if (requires_loopless(c) && !is_loopless(g)) return false;
  return true;
}

void require_object(const Graph& g, CategoryId c) {
  if (!in_category(g, c))
    throw Error(ErrorCode::ObjectNotInCategory,
                "graph is not an object of " + to_string(c));
}

std::string to_string(CategoryId c) {
  switch (c) {
    case CategoryId::G: return "G";
    case CategoryId::SiG: return "SiG";
    case CategoryId::SiLlG: return "SiLlG";
    case CategoryId::StG: return "StG";
    case CategoryId::SiStG: return "SiStG";
    case CategoryId::SiLlStG: return "SiLlStG";
  }
  return "?";
}

std::optional<CategoryId> parse_category(const std::string& name) {
  static const std::map<std::string, CategoryId> names = {
      {"G", CategoryId::G},           {"Grphs", CategoryId::G},
      {"SiG", CategoryId::SiG},       {"SiGrphs", CategoryId::SiG},
      {"SiLlG", CategoryId::SiLlG},   {"SiLlGrphs", CategoryId::SiLlG},
      {"StG", CategoryId::StG},       {"StGrphs", CategoryId::StG},
      {"SiStG", CategoryId::SiStG},   {"SiStGrphs", CategoryId::SiStG},
      {"SiLlStG", CategoryId::SiLlStG}, {"SiLlStGrphs", CategoryId::SiLlStG},
  };
  auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

namespace {

class UnionFind {
 public:
  void add(const PartId& p) { parent_.emplace(p, p); }
  PartId find(const PartId& p) {
    PartId root = p;
    while (parent_.at(root) != root) root = parent_.at(root);
    PartId cur = p;
    while (cur != root) cur = std::exchange(parent_.at(cur), root);
    return root;
  }
  void unite(const PartId& x, const PartId& y) {
    PartId rx = find(x), ry = find(y);
    if (rx == ry) return;
    if (ry < rx) std::swap(rx, ry);
    parent_.at(ry) = rx;  // smaller id wins, keeps results deterministic
  }

 private:
  std::map<PartId, PartId> parent_;
};

}  // namespace

std::vector<std::set<PartId>> components(const Graph& g) {
  UnionFind uf;
  for (const auto& p : g.parts()) uf.add(p);
  for (const auto& [e, pair] : g.edge_incidence()) {
    uf.unite(e, pair.a);
    uf.unite(e, pair.b);
  }
  std::map<PartId, std::set<PartId>> by_root;
  for (const auto& p : g.parts()) by_root[uf.find(p)].insert(p);
  std::vector<std::set<PartId>> out;
  out.reserve(by_root.size());
  for (auto& [_, comp] : by_root) out.push_back(std::move(comp));
  return out;
}

}  // namespace catgraph
