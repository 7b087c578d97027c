#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "gia/graph/graph.hpp"

namespace gia {

/// Synthetic benchmark generator for offline smoke runs and integration
/// tests. Emits class-conditioned random graphs with a planted, learnable
/// signal: each class has its own edge density band and node-label mixture,
/// and each graph additionally gets an individual label-mixture signature so
/// that subgraphs are attributable to their source graph.
struct SynthSpec {
  int num_graphs = 120;
  int num_classes = 2;
  int min_nodes = 8;
  int max_nodes = 24;
  int node_label_values = 4;
  uint64_t seed = 7;
};

GraphDataset generate_synth_dataset(const std::string& name, const SynthSpec& spec);

/// Writes `ds` in the TUDataset plain-text layout under root/ds.name/. The
/// feature matrix must be a pure one-hot encoding (as produced by
/// generate_synth_dataset); the argmax column is written as the node label.
void write_tudataset(const GraphDataset& ds, const std::filesystem::path& root);

}  // namespace gia
