#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace catgraph {

using PartId = std::string;

enum class ErrorCode {
  DuplicateId,
  DanglingEndpoint,
  VertexWithIncidence,
  EmptyVertexNonemptyParts,
  MissingIncidence,
  UnknownPart,
  UnknownName,
  BadParameter,
  ObjectNotInCategory,
  NonComposable,
  NotParallel,
  NotCospan,
  InvalidMorphism,
  NotMono,
  NoClassifier,
  NoTranspose,
  WrongCategory,
  TooLarge,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Unordered pair of vertex ids; the canonical form stores the
/// lexicographically smaller id first, so equality is symmetric.
struct VertexPair {
  PartId a, b;

  VertexPair() = default;
  VertexPair(PartId x, PartId y);

  bool diagonal() const { return a == b; }
  bool touches(const PartId& v) const { return a == v || b == v; }
  PartId other(const PartId& v) const { return a == v ? b : a; }

  auto operator<=>(const VertexPair&) const = default;
};

/// A graph is a finite part set with a distinguished vertex subset and an
/// incidence map sending each edge part to an unordered pair of vertices.
/// Vertices carry no explicit incidence entry: a vertex's incidence is the
/// diagonal pair by representation, so the inclusion-compatibility law holds
/// structurally and cannot be violated.
class Graph {
 public:
  Graph() = default;

  /// Validates and builds a graph. Throws Error on any invariant violation:
  /// duplicate part ids, incidence entries on vertices, dangling endpoints,
  /// edges without incidence, or a nonempty part set with no vertices.
  static Graph make(const std::vector<PartId>& parts,
                    const std::vector<PartId>& vertices,
                    const std::map<PartId, VertexPair>& incidence);

  const std::set<PartId>& parts() const { return parts_; }
  const std::set<PartId>& vertices() const { return vertices_; }
  const std::map<PartId, VertexPair>& edge_incidence() const { return incidence_; }

  bool contains(const PartId& p) const { return parts_.count(p) != 0; }
  bool is_vertex(const PartId& p) const { return vertices_.count(p) != 0; }
  bool is_edge(const PartId& p) const { return contains(p) && !is_vertex(p); }

  /// Incidence of any part; vertices report their diagonal pair.
  VertexPair incidence(const PartId& p) const;

  std::vector<PartId> edges() const;

  /// Parts of the graph whose incidence equals the given pair. Includes the
  /// diagonal vertex itself for diagonal pairs.
  std::vector<PartId> parts_over(const VertexPair& pair) const;

  /// Edges only (no diagonal vertex part).
  std::vector<PartId> edges_over(const VertexPair& pair) const;

  std::size_t part_count() const { return parts_.size(); }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return parts_.size() - vertices_.size(); }
  bool empty() const { return parts_.empty(); }

  bool operator==(const Graph&) const = default;
  auto operator<=>(const Graph&) const = default;

 private:
  std::set<PartId> parts_;
  std::set<PartId> vertices_;
  std::map<PartId, VertexPair> incidence_;  // edge parts only
};

/// At most one edge over any unordered vertex pair (loops included); the
/// vertex part occupying a diagonal pair does not count against the edge.
bool is_simple(const Graph& g);

/// No edge has diagonal incidence.
bool is_loopless(const Graph& g);

/// The six concrete categories of graphs. Object predicate: SiG/SiStG require
/// simple, SiLlG/SiLlStG require simple and loopless, G/StG accept every
/// graph. Morphism predicate: StG/SiStG/SiLlStG require strict morphisms.
enum class CategoryId { G, SiG, SiLlG, StG, SiStG, SiLlStG };

inline constexpr CategoryId kAllCategories[] = {
    CategoryId::G,    CategoryId::SiG,   CategoryId::SiLlG,
    CategoryId::StG,  CategoryId::SiStG, CategoryId::SiLlStG,
};

bool requires_simple(CategoryId c);
bool requires_loopless(CategoryId c);
bool requires_strict(CategoryId c);

/// Epis (monos) are part-surjective (part-injective) in G/StG/SiG and
/// vertex-surjective (vertex-injective) in the other three categories.
bool uses_part_epi_mono(CategoryId c);

bool in_category(const Graph& g, CategoryId c);
void require_object(const Graph& g, CategoryId c);  // throws ObjectNotInCategory

std::string to_string(CategoryId c);
std::optional<CategoryId> parse_category(const std::string& name);

/// Partition of the part set by connectivity: an edge lies in the component
/// of its endpoints, isolated vertices are singletons. Components are sorted
/// by their least member.
std::vector<std::set<PartId>> components(const Graph& g);

}  // namespace catgraph
