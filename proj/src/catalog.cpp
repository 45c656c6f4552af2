#include "catgraph/catalog.hpp"

#include <cctype>
#include <optional>

namespace catgraph {

namespace {

std::string vid(int i) { return "v" + std::to_string(i); }

Graph complete(int n, bool loops) {
  std::vector<PartId> parts, vertices;
  std::map<PartId, VertexPair> inc;
  for (int i = 1; i <= n; ++i) {
    parts.push_back(vid(i));
    vertices.push_back(vid(i));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      PartId e = "e(" + vid(i) + "," + vid(j) + ")";
      parts.push_back(e);
      inc.emplace(e, VertexPair(vid(i), vid(j)));
    }
  if (loops)
    for (int i = 1; i <= n; ++i) {
      PartId l = "l(" + vid(i) + ")";
      parts.push_back(l);
      inc.emplace(l, VertexPair(vid(i), vid(i)));
    }
  return Graph::make(parts, vertices, inc);
}

Graph edgeless(int n) {
  std::vector<PartId> vs;
  for (int i = 1; i <= n; ++i) vs.push_back(vid(i));
  return Graph::make(vs, vs, {});
}

Graph cycle(int n) {
  std::vector<PartId> parts, vertices;
  std::map<PartId, VertexPair> inc;
  for (int i = 1; i <= n; ++i) {
    parts.push_back(vid(i));
    vertices.push_back(vid(i));
  }
  for (int i = 1; i <= n; ++i) {
    int j = i % n + 1;
    PartId e = "e" + std::to_string(i);
    parts.push_back(e);
    inc.emplace(e, VertexPair(vid(i), vid(j)));
  }
  return Graph::make(parts, vertices, inc);
}

Graph dipole(int n) {
  std::vector<PartId> parts = {"u", "w"};
  std::map<PartId, VertexPair> inc;
  for (int i = 1; i <= n; ++i) {
    PartId e = "e" + std::to_string(i);
    parts.push_back(e);
    inc.emplace(e, VertexPair("u", "w"));
  }
  return Graph::make(parts, {"u", "w"}, inc);
}

Graph bouquet(int n) {
  std::vector<PartId> parts = {"u"};
  std::map<PartId, VertexPair> inc;
  for (int i = 1; i <= n; ++i) {
    PartId l = "l" + std::to_string(i);
    parts.push_back(l);
    inc.emplace(l, VertexPair("u", "u"));
  }
  return Graph::make(parts, {"u"}, inc);
}

Graph x4() {
  return Graph::make({"u", "w", "d", "l"}, {"u", "w"},
                     {{"d", VertexPair("u", "w")}, {"l", VertexPair("u", "u")}});
}

Graph omega_conceptual() {
  return Graph::make({"T", "F", "l_T", "e_TF"}, {"T", "F"},
                     {{"l_T", VertexPair("T", "T")}, {"e_TF", VertexPair("T", "F")}});
}

Graph omega_strict() {
  return Graph::make(
      {"T", "F", "l_true", "l_T", "l_F", "e_TF"}, {"T", "F"},
      {{"l_true", VertexPair("T", "T")},
       {"l_T", VertexPair("T", "T")},
       {"l_F", VertexPair("F", "F")},
       {"e_TF", VertexPair("T", "F")}});
}

std::optional<int> parse_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
  try {
    return std::stoi(s);
  } catch (...) {
    return std::nullopt;
  }
}

}  // namespace

Graph standard_graph(const std::string& name) {
  if (name == "X4") return x4();
  if (name == "Omega_G" || name == "Omega_Grphs") return omega_conceptual();
  if (name == "Omega_St" || name == "Omega_StGrphs") return omega_strict();

  auto family = [&](char prefix) -> std::optional<std::pair<int, std::string>> {
    if (name.empty() || name[0] != prefix) return std::nullopt;
    std::string rest = name.substr(1);
    std::string suffix;
    if (auto caret = rest.find('^'); caret != std::string::npos) {
      suffix = rest.substr(caret + 1);
      rest = rest.substr(0, caret);
    }
    auto n = parse_int(rest);
    if (!n) return std::nullopt;
    return std::make_pair(*n, suffix);
  };

  if (auto k = family('K')) {
    auto [n, suffix] = *k;
    if (n < 0) throw Error(ErrorCode::BadParameter, "K needs n >= 0");
    if (suffix.empty()) return complete(n, false);
    if (suffix == "c") return edgeless(n);
    if (suffix == "l") return complete(n, true);
    throw Error(ErrorCode::UnknownName, "unknown suffix in '" + name + "'");
  }
  if (auto c = family('C')) {
    auto [n, suffix] = *c;
    if (!suffix.empty()) throw Error(ErrorCode::UnknownName, "unknown suffix in '" + name + "'");
    if (n < 3) throw Error(ErrorCode::BadParameter, "C needs n >= 3");
    return cycle(n);
  }
  if (auto d = family('D')) {
    auto [n, suffix] = *d;
    if (!suffix.empty()) throw Error(ErrorCode::UnknownName, "unknown suffix in '" + name + "'");
    if (n < 1) throw Error(ErrorCode::BadParameter, "D needs n >= 1");
    return dipole(n);
  }
  if (auto b = family('B')) {
    auto [n, suffix] = *b;
    if (!suffix.empty()) throw Error(ErrorCode::UnknownName, "unknown suffix in '" + name + "'");
    if (n < 0) throw Error(ErrorCode::BadParameter, "B needs n >= 0");
    return bouquet(n);
  }
  throw Error(ErrorCode::UnknownName, "no catalog graph named '" + name + "'");
}

std::vector<std::pair<std::string, Graph>> catalog_battery(CategoryId c,
                                                           std::size_t max_parts) {
  static const std::vector<std::string> names = {
      "K0",   "K1",   "K2",  "K3",  "K2^c", "K3^c",    "K4^c",     "K5^c",
      "K1^l", "K2^l", "C3",  "C4",  "C6",   "D2",      "B2",       "X4",
      "Omega_G", "Omega_St",
  };
  std::vector<std::pair<std::string, Graph>> out;
  for (const auto& name : names) {
    Graph g = standard_graph(name);
    if (g.part_count() > max_parts) continue;
    if (!in_category(g, c)) continue;
    out.emplace_back(name, std::move(g));
  }
  return out;
}

std::vector<Graph> battery_graphs(CategoryId c, std::size_t max_parts) {
  std::vector<Graph> out;
  for (auto& [_, g] : catalog_battery(c, max_parts)) out.push_back(std::move(g));
  return out;
}

}  // namespace catgraph
