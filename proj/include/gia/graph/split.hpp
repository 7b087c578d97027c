#pragma once

#include <cstdint>
#include <vector>

#include "gia/graph/graph.hpp"

namespace gia {

/// Disjoint 40/30/30 split: target-model training set, attack training set
/// (the adversary's auxiliary data), and attack test set.
struct DataSplit {
  std::vector<int> target_train;
  std::vector<int> attack_train;
  std::vector<int> attack_test;
};

/// Deterministic for a fixed (dataset size, seed); indices are shuffled
/// before slicing. Throws std::invalid_argument for datasets with fewer than
/// 10 graphs.
DataSplit split_dataset(const GraphDataset& ds, uint64_t seed);

}  // namespace gia
