#pragma once

#include <span>
#include <string>
#include <vector>

#include "gia/core/mat.hpp"

namespace gia {

/// Undirected, unweighted, attributed graph. Adjacency is kept as sorted
/// neighbor lists (the adjacency matrix is symmetric with zero diagonal by
/// construction). Immutable by convention after construction.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;  // adj[u] sorted ascending, no self-loops
  Mat features;                       // n x d_X (d_X may be 0)
  int label = 0;

  int degree(int u) const { return static_cast<int>(adj[u].size()); }
  int num_edges() const {
    size_t twice = 0;
    for (const auto& nb : adj) twice += nb.size();
    return static_cast<int>(twice / 2);
  }
  bool has_edge(int u, int v) const;
  int feat_dim() const { return features.cols; }

  /// Builds a graph from an undirected edge list; duplicates are merged and
  /// self-loops rejected. Endpoints must lie in [0, n).
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                          Mat features = {}, int label = 0);

  /// Dense n x n copy of the adjacency matrix (small graphs only).
  Mat dense_adjacency() const;
};

/// Throws std::invalid_argument when a structural invariant is broken
/// (asymmetry cannot occur by construction; checks feature shape and
/// neighbor-list sanity).
void validate_graph(const Graph& g);

/// Node-induced subgraph on `nodes` (order defines the new ids).
Graph induced_subgraph(const Graph& g, std::span<const int> nodes);

/// Relabels nodes: node u of `g` becomes node perm[u].
Graph permute_graph(const Graph& g, std::span<const int> perm);

/// Connected components; returns component id per node, largest-first is not
/// guaranteed — use largest_component for that.
std::vector<int> connected_components(const Graph& g, int* count = nullptr);

/// Node ids of the largest connected component (ties: the one containing the
/// smallest node id).
std::vector<int> largest_component(const Graph& g);

struct GraphDataset {
  std::string name;
  int num_classes = 0;
  int feat_dim = 0;
  std::vector<Graph> graphs;

  size_t size() const { return graphs.size(); }
  int max_nodes() const;
};

void validate_dataset(const GraphDataset& ds);

}  // namespace gia
