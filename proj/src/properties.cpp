#include "gia/graph/properties.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace gia {

PropertyKind property_from_name(const std::string& name) {
  if (name == "num_nodes") return PropertyKind::NumNodes;
  if (name == "num_edges") return PropertyKind::NumEdges;
  if (name == "density") return PropertyKind::Density;
  if (name == "diameter") return PropertyKind::Diameter;
  if (name == "radius") return PropertyKind::Radius;
  throw std::invalid_argument("unknown property: " + name);
}

const char* property_name(PropertyKind p) {
  switch (p) {
    case PropertyKind::NumNodes: return "num_nodes";
    case PropertyKind::NumEdges: return "num_edges";
    case PropertyKind::Density: return "density";
    case PropertyKind::Diameter: return "diameter";
    case PropertyKind::Radius: return "radius";
  }
  return "?";
}

namespace {

// Eccentricities via BFS restricted to `nodes`; returns (diameter, radius).
std::pair<int, int> diameter_radius(const Graph& g, const std::vector<int>& nodes) {
  if (nodes.size() <= 1) return {0, 0};
  std::vector<int> dist(g.n);
  int diam = 0, rad = g.n + 1;
  std::queue<int> q;
  for (int s : nodes) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    q.push(s);
    int ecc = 0;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      ecc = std::max(ecc, dist[u]);
      for (int v : g.adj[u])
        if (dist[v] == -1) {
          dist[v] = dist[u] + 1;
          q.push(v);
        }
    }
    diam = std::max(diam, ecc);
    rad = std::min(rad, ecc);
  }
  return {diam, rad};
}

}  // namespace

double graph_property(const Graph& g, PropertyKind p) {
  switch (p) {
    case PropertyKind::NumNodes:
      return static_cast<double>(g.n);
    case PropertyKind::NumEdges:
      return static_cast<double>(g.num_edges());
    case PropertyKind::Density: {
      if (g.n <= 1) return 0.0;
      return 2.0 * g.num_edges() / (static_cast<double>(g.n) * (g.n - 1));
    }
    case PropertyKind::Diameter:
    case PropertyKind::Radius: {
      if (g.n == 0) return 0.0;
      const auto lcc = largest_component(g);
      const auto [diam, rad] = diameter_radius(g, lcc);
      return static_cast<double>(p == PropertyKind::Diameter ? diam : rad);
    }
  }
  return 0.0;
}

Graph degree_onehot_features(const Graph& g, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
  Graph out = g;
  out.features = Mat(g.n, max_degree + 1);
  for (int u = 0; u < g.n; ++u) {
    const int d = std::min(g.degree(u), max_degree);
    out.features.at(u, d) = 1.0;
  }
  return out;
}

}  // namespace gia
