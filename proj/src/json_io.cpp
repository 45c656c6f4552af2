#include "catgraph/json_io.hpp"

#include <fstream>

namespace catgraph {

Json to_json(const Graph& g) {
  Json j;
  j["parts"] = Json::array();
  for (const auto& p : g.parts()) j["parts"].push_back(p);
  j["vertices"] = Json::array();
  for (const auto& v : g.vertices()) j["vertices"].push_back(v);
  j["incidence"] = Json::object();
  for (const auto& [e, pair] : g.edge_incidence())
    j["incidence"][e] = Json::array({pair.a, pair.b});
  return j;
}

Graph graph_from_json(const Json& j) {
  std::vector<PartId> parts, vertices;
  std::map<PartId, VertexPair> inc;
  for (const auto& p : j.at("parts")) parts.push_back(p.get<std::string>());
  for (const auto& v : j.at("vertices")) vertices.push_back(v.get<std::string>());
  if (j.contains("incidence")) {
    for (const auto& [e, pair] : j.at("incidence").items()) {
      if (!pair.is_array() || pair.size() != 2)
        throw Error(ErrorCode::BadParameter, "incidence of '" + e + "' must be a pair");
      inc.emplace(e, VertexPair(pair[0].get<std::string>(), pair[1].get<std::string>()));
    }
  }
  return Graph::make(parts, vertices, inc);
}

Json to_json(const Morphism& f) {
  Json j;
  j["dom"] = to_json(f.dom());
  j["cod"] = to_json(f.cod());
  j["map"] = Json::object();
  for (const auto& [p, q] : f.part_map()) j["map"][p] = q;
  return j;
}

Morphism morphism_from_json(const Json& j) {
  Graph dom = graph_from_json(j.at("dom"));
  Graph cod = graph_from_json(j.at("cod"));
  std::map<PartId, PartId> m;
  for (const auto& [p, q] : j.at("map").items()) m.emplace(p, q.get<std::string>());
  return Morphism(std::move(dom), std::move(cod), std::move(m));
}

Json to_json(const ConeResult& cone) {
  Json j;
  j["kind"] = cone.kind;
  j["apex"] = to_json(cone.apex);
  j["legs"] = Json::object();
  for (const auto& [name, leg] : cone.legs) j["legs"][name] = to_json(leg);
  return j;
}

Json to_json(const ValidationReport& r) {
  Json j;
  j["pass"] = r.pass;
  if (!r.pass) {
    j["offending_part"] = r.offending_part;
    j["reason"] = r.reason;
  }
  return j;
}

Json to_json(const EpiReport& r) {
  Json j;
  j["epi"] = r.epi;
  j["criterion"] = r.criterion;
  if (r.witness) {
    j["witness"] = {{"target", to_json(r.witness->target)},
                    {"i", to_json(r.witness->i)},
                    {"g", to_json(r.witness->g)},
                    {"missed", r.witness->missed}};
  }
  return j;
}

Json to_json(const MonoReport& r) {
  Json j;
  j["mono"] = r.mono;
  j["criterion"] = r.criterion;
  if (r.witness) {
    j["witness"] = {{"j", to_json(r.witness->j)},
                    {"k", to_json(r.witness->k)},
                    {"collided", Json::array({r.witness->collided_a, r.witness->collided_b})}};
  }
  return j;
}

Json to_json(const UmpReport& r) {
  Json j;
  j["pass"] = r.pass;
  if (!r.pass) j["detail"] = r.detail;
  return j;
}

Graph graph_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadParameter, "cannot open '" + path + "'");
  Json j = Json::parse(in);
  return graph_from_json(j);
}

Morphism morphism_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadParameter, "cannot open '" + path + "'");
  Json j = Json::parse(in);
  return morphism_from_json(j);
}

}  // namespace catgraph
