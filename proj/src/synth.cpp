#include "gia/graph/synth.hpp"

#include <fstream>
#include <stdexcept>

#include "gia/core/rng.hpp"

namespace gia {

GraphDataset generate_synth_dataset(const std::string& name, const SynthSpec& spec) {
  if (spec.num_classes < 2 || spec.min_nodes < 2 || spec.max_nodes < spec.min_nodes)
    throw std::invalid_argument("bad synth spec");
  Rng rng(mix64(spec.seed, fnv1a("synth")));

  GraphDataset ds;
  ds.name = name;
  ds.num_classes = spec.num_classes;
  ds.feat_dim = spec.node_label_values;
  ds.graphs.reserve(spec.num_graphs);

  for (int gi = 0; gi < spec.num_graphs; ++gi) {
    const int cls = gi % spec.num_classes;
    const int n = spec.min_nodes + rng.below(spec.max_nodes - spec.min_nodes + 1);

    // class-banded density plus per-graph jitter
    const double p_lo = 0.12 + 0.5 * cls / spec.num_classes;
    const double p = p_lo + 0.08 * rng.uniform();

    // per-graph node-label signature biased towards a class-specific value
    std::vector<double> mix(spec.node_label_values);
    double tot = 0.0;
    for (auto& w : mix) {
      w = 0.2 + rng.uniform();
      tot += w;
    }
    mix[cls % spec.node_label_values] += 0.8 * tot;

    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    g.features = Mat(n, spec.node_label_values);
    g.label = cls;
    for (int u = 0; u < n; ++u) {
      double r = rng.uniform() * (tot + 0.8 * tot);
      int lab = 0;
      for (int v = 0; v < spec.node_label_values; ++v) {
        r -= mix[v];
        if (r <= 0.0) {
          lab = v;
          break;
        }
      }
      g.features.at(u, lab) = 1.0;
    }
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.uniform() < p) {
          g.adj[u].push_back(v);
          g.adj[v].push_back(u);
        }
    // keep a spanning path so graphs stay connected enough for samplers
    for (int u = 0; u + 1 < n; ++u)
      if (!g.has_edge(u, u + 1)) {
        g.adj[u].push_back(u + 1);
        g.adj[u + 1].push_back(u);
      }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    ds.graphs.push_back(std::move(g));
  }
  validate_dataset(ds);
  return ds;
}

void write_tudataset(const GraphDataset& ds, const std::filesystem::path& root) {
  const auto dir = root / ds.name;
  std::filesystem::create_directories(dir);
  const auto open = [&](const char* suffix) {
    std::ofstream out(dir / (ds.name + suffix));
    if (!out) throw std::runtime_error("cannot write dataset file");
    return out;
  };

  auto fa = open("_A.txt");
  auto fi = open("_graph_indicator.txt");
  auto fl = open("_graph_labels.txt");
  auto fn = open("_node_labels.txt");

  int base = 1;  // TUDataset ids are 1-indexed and global
  for (size_t gi = 0; gi < ds.graphs.size(); ++gi) {
    const auto& g = ds.graphs[gi];
    fl << g.label << "\n";
    for (int u = 0; u < g.n; ++u) {
      fi << gi + 1 << "\n";
      int lab = 0;
      for (int c = 0; c < g.features.cols; ++c)
        if (g.features.at(u, c) > 0.5) lab = c;
      fn << lab << "\n";
      for (int v : g.adj[u]) fa << base + u << ", " << base + v << "\n";
    }
    base += g.n;
  }
}

}  // namespace gia
