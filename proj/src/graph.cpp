#include "gia/graph/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace gia {

bool Graph::has_edge(int u, int v) const {
  const auto& nb = adj[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        Mat features, int label) {
  Graph g;
  g.n = n;
  g.adj.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop not allowed");
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& nb : g.adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  if (features.rows == 0 && features.cols == 0) features = Mat(n, 0);
  g.features = std::move(features);
  g.label = label;
  validate_graph(g);
  return g;
}

Mat Graph::dense_adjacency() const {
  Mat a(n, n);
  for (int u = 0; u < n; ++u)
    for (int v : adj[u]) a.at(u, v) = 1.0;
  return a;
}

void validate_graph(const Graph& g) {
  if (g.n < 0) throw std::invalid_argument("negative node count");
  if (static_cast<int>(g.adj.size()) != g.n)
    throw std::invalid_argument("adjacency size mismatch");
  if (g.features.rows != g.n)
    throw std::invalid_argument("feature row count must equal node count");
  for (int u = 0; u < g.n; ++u) {
    int prev = -1;
    for (int v : g.adj[u]) {
      if (v < 0 || v >= g.n) throw std::invalid_argument("neighbor out of range");
      if (v == u) throw std::invalid_argument("self-loop present");
      if (v <= prev) throw std::invalid_argument("neighbor list not strictly sorted");
      prev = v;
      if (!g.has_edge(v, u)) throw std::invalid_argument("adjacency not symmetric");
    }
  }
}

Graph induced_subgraph(const Graph& g, std::span<const int> nodes) {
  std::vector<int> remap(g.n, -1);
  for (size_t i = 0; i < nodes.size(); ++i) {
    const int u = nodes[i];
    if (u < 0 || u >= g.n) throw std::invalid_argument("node id out of range");
    if (remap[u] != -1) throw std::invalid_argument("duplicate node in selection");
    remap[u] = static_cast<int>(i);
  }
  Graph s;
  s.n = static_cast<int>(nodes.size());
  s.adj.assign(s.n, {});
  s.features = Mat(s.n, g.features.cols);
  s.label = g.label;
  for (size_t i = 0; i < nodes.size(); ++i) {
    const int u = nodes[i];
    for (int v : g.adj[u])
      if (remap[v] != -1) s.adj[i].push_back(remap[v]);
    std::sort(s.adj[i].begin(), s.adj[i].end());
    for (int c = 0; c < g.features.cols; ++c)
      s.features.at(static_cast<int>(i), c) = g.features.at(u, c);
  }
  return s;
}

Graph permute_graph(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.n)
    throw std::invalid_argument("permutation size mismatch");
  Graph p;
  p.n = g.n;
  p.adj.assign(g.n, {});
  p.features = Mat(g.n, g.features.cols);
  p.label = g.label;
  for (int u = 0; u < g.n; ++u) {
    const int pu = perm[u];
    for (int v : g.adj[u]) p.adj[pu].push_back(perm[v]);
    for (int c = 0; c < g.features.cols; ++c) p.features.at(pu, c) = g.features.at(u, c);
  }
  for (auto& nb : p.adj) std::sort(nb.begin(), nb.end());
  return p;
}

std::vector<int> connected_components(const Graph& g, int* count) {
  std::vector<int> comp(g.n, -1);
  int c = 0;
  std::queue<int> q;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = c;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : g.adj[u])
        if (comp[v] == -1) {
          comp[v] = c;
          q.push(v);
        }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

std::vector<int> largest_component(const Graph& g) {
  int count = 0;
  const auto comp = connected_components(g, &count);
  std::vector<int> sizes(count, 0);
  for (int c : comp) ++sizes[c];
  int best = 0;
  for (int c = 1; c < count; ++c)
    if (sizes[c] > sizes[best]) best = c;
  std::vector<int> nodes;
  nodes.reserve(sizes.empty() ? 0 : sizes[best]);
  for (int u = 0; u < g.n; ++u)
    if (comp[u] == best) nodes.push_back(u);
  return nodes;
}

int GraphDataset::max_nodes() const {
  int m = 0;
  for (const auto& g : graphs) m = std::max(m, g.n);
  return m;
}

void validate_dataset(const GraphDataset& ds) {
  if (ds.num_classes <= 0) throw std::invalid_argument("num_classes must be positive");
  for (const auto& g : ds.graphs) {
    validate_graph(g);
    if (g.feat_dim() != ds.feat_dim)
      throw std::invalid_argument("inconsistent feature dimension in dataset");
    if (g.label < 0 || g.label >= ds.num_classes)
      throw std::invalid_argument("graph label out of range");
  }
}

}  // namespace gia
