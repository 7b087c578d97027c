#pragma once

#include <string>

#include "gia/graph/graph.hpp"

namespace gia {

enum class PropertyKind { NumNodes, NumEdges, Density, Diameter, Radius };

PropertyKind property_from_name(const std::string& name);
const char* property_name(PropertyKind p);

/// Global graph properties:
///   num_nodes  n
///   num_edges  undirected edge count (each edge once)
///   density    2|E| / (n(n-1)) for n > 1, else 0
///   diameter   max eccentricity on the largest connected component
///   radius     min eccentricity on the largest connected component
double graph_property(const Graph& g, PropertyKind p);

/// Replaces node features with a (max_degree+1)-dim one-hot of each node's
/// degree; degrees above max_degree clamp to the top slot.
Graph degree_onehot_features(const Graph& g, int max_degree);

}  // namespace gia
