#pragma once

#include <string>
#include <utility>
#include <vector>

#include "catgraph/graph.hpp"

namespace catgraph {

/// Builds a named graph with deterministic part ids. Recognized specs:
///   K<n>      complete graph, n >= 0        (vertices v1..vn, edges e(vi,vj))
///   K<n>^c    edgeless graph on n vertices
///   K<n>^l    complete graph with one loop per vertex (loops l(vi))
///   C<n>      cycle, n >= 3
///   D<n>      dipole: two vertices joined by n parallel edges, n >= 1
///   B<n>      bouquet: one vertex carrying n loops, n >= 0
///   X4        two vertices joined by an edge, with a loop on one of them
///   Omega_G   the classifier graph of the conceptual categories
///             (vertices T, F; loop l_T at T; edge e_TF)
///   Omega_St  the classifier graph of the strict conceptual category
///             (T, F; loops l_true, l_T at T; loop l_F at F; edge e_TF)
/// Long aliases Omega_Grphs / Omega_StGrphs are accepted.
/// Throws UnknownName / BadParameter.
Graph standard_graph(const std::string& name);

/// All catalog instances with at most max_parts parts that are objects of c,
/// paired with their catalog names, in a fixed deterministic order.
std::vector<std::pair<std::string, Graph>> catalog_battery(CategoryId c,
                                                           std::size_t max_parts);

/// Convenience: the graphs only.
std::vector<Graph> battery_graphs(CategoryId c, std::size_t max_parts);

}  // namespace catgraph
