#include "gia/graph/tudataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace gia {
namespace {

std::vector<std::string> read_lines(const std::filesystem::path& p, bool required) {
  std::ifstream in(p);
  if (!in) {
    if (required) throw IngestError("missing mandatory file: " + p.string());
    return {};
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    lines.push_back(line);
  }
  return lines;
}

std::vector<double> parse_csv_row(const std::string& line, const std::string& what) {
  std::vector<double> vals;
  std::stringstream ss(line);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      vals.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw FormatError("unparseable value in " + what + ": '" + tok + "'");
    }
  }
  if (vals.empty()) throw FormatError("empty row in " + what);
  return vals;
}

long parse_int(const std::string& s, const std::string& what) {
  long v = 0;
  size_t i = s.find_first_not_of(" \t");
  size_t j = s.find_last_not_of(" \t");
  const auto res = std::from_chars(s.data() + i, s.data() + j + 1, v);
  if (res.ec != std::errc() || res.ptr != s.data() + j + 1)
    throw FormatError("unparseable integer in " + what + ": '" + s + "'");
  return v;
}

}  // namespace

GraphDataset load_tudataset(const std::filesystem::path& root_path,
                            const std::string& name) {
  const auto dir = root_path / name;
  const auto file = [&](const char* suffix) { return dir / (name + suffix); };

  const auto indicator_lines = read_lines(file("_graph_indicator.txt"), true);
  const auto label_lines = read_lines(file("_graph_labels.txt"), true);
  const auto edge_lines = read_lines(file("_A.txt"), true);
  const auto node_label_lines = read_lines(file("_node_labels.txt"), false);
  const auto node_attr_lines = read_lines(file("_node_attributes.txt"), false);

  const int total_nodes = static_cast<int>(indicator_lines.size());
  const int num_graphs = static_cast<int>(label_lines.size());
  if (num_graphs == 0) throw FormatError(name + ": no graphs");

  // global node id (0-based) -> (graph id, local id)
  std::vector<int> graph_of(total_nodes), local_of(total_nodes);
  std::vector<int> node_count(num_graphs, 0);
  for (int i = 0; i < total_nodes; ++i) {
    const long gid = parse_int(indicator_lines[i], "graph_indicator") - 1;
    if (gid < 0 || gid >= num_graphs)
      throw FormatError(name + ": graph indicator out of range at node line " +
                        std::to_string(i + 1));
    graph_of[i] = static_cast<int>(gid);
    local_of[i] = node_count[gid]++;
  }

  // Node features: one-hot labels, optionally prefixed by real attributes.
  int attr_dim = 0;
  std::vector<std::vector<double>> attrs;
  if (!node_attr_lines.empty()) {
    if (static_cast<int>(node_attr_lines.size()) != total_nodes)
      throw FormatError(name + ": node_attributes line count mismatch");
    attrs.reserve(total_nodes);
    for (const auto& l : node_attr_lines) attrs.push_back(parse_csv_row(l, "node_attributes"));
    attr_dim = static_cast<int>(attrs[0].size());
    for (const auto& a : attrs)
      if (static_cast<int>(a.size()) != attr_dim)
        throw FormatError(name + ": ragged node_attributes rows");
  }

  std::vector<int> node_label_idx;
  int label_dim = 0;
  if (!node_label_lines.empty()) {
    if (static_cast<int>(node_label_lines.size()) != total_nodes)
      throw FormatError(name + ": node_labels line count mismatch");
    std::vector<long> raw(total_nodes);
    std::map<long, int> remap;
    for (int i = 0; i < total_nodes; ++i) {
      raw[i] = parse_int(node_label_lines[i], "node_labels");
      remap.emplace(raw[i], 0);
    }
    int next = 0;
    for (auto& [k, v] : remap) v = next++;
    label_dim = next;
    node_label_idx.resize(total_nodes);
    for (int i = 0; i < total_nodes; ++i) node_label_idx[i] = remap[raw[i]];
  }

  int feat_dim = attr_dim + label_dim;
  if (feat_dim == 0) feat_dim = 1;  // featureless datasets get a constant 1

  GraphDataset ds;
  ds.name = name;
  ds.feat_dim = feat_dim;
  ds.graphs.resize(num_graphs);

  std::map<long, int> class_remap;
  std::vector<long> raw_labels(num_graphs);
  for (int g = 0; g < num_graphs; ++g) {
    raw_labels[g] = parse_int(label_lines[g], "graph_labels");
    class_remap.emplace(raw_labels[g], 0);
  }
  int next_class = 0;
  for (auto& [k, v] : class_remap) v = next_class++;
  ds.num_classes = next_class;

  for (int g = 0; g < num_graphs; ++g) {
    auto& graph = ds.graphs[g];
    graph.n = node_count[g];
    graph.adj.assign(graph.n, {});
    graph.features = Mat(graph.n, feat_dim);
    graph.label = class_remap[raw_labels[g]];
  }
  for (int i = 0; i < total_nodes; ++i) {
    auto& graph = ds.graphs[graph_of[i]];
    double* row = graph.features.row(local_of[i]);
    int c = 0;
    if (attr_dim > 0)
      for (double v : attrs[i]) row[c++] = v;
    if (label_dim > 0)
      row[c + node_label_idx[i]] = 1.0;
    else if (attr_dim == 0)
      row[0] = 1.0;
  }

  for (size_t li = 0; li < edge_lines.size(); ++li) {
    const auto vals = parse_csv_row(edge_lines[li], "edge list");
    if (vals.size() != 2) throw FormatError(name + ": edge row must have two ids");
    const long u = static_cast<long>(vals[0]) - 1;
    const long v = static_cast<long>(vals[1]) - 1;
    if (u < 0 || u >= total_nodes || v < 0 || v >= total_nodes)
      throw FormatError(name + ": dangling edge endpoint at line " + std::to_string(li + 1));
    if (graph_of[u] != graph_of[v])
      throw FormatError(name + ": edge spans two graphs at line " + std::to_string(li + 1));
    if (u == v) continue;  // drop self-loops
    auto& graph = ds.graphs[graph_of[u]];
    graph.adj[local_of[u]].push_back(local_of[v]);
    graph.adj[local_of[v]].push_back(local_of[u]);
  }
  for (auto& graph : ds.graphs)
    for (auto& nb : graph.adj) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }

  validate_dataset(ds);
  return ds;
}

}  // namespace gia
