#include "gia/graph/split.hpp"

#include <cmath>
#include <stdexcept>

#include "gia/core/rng.hpp"

namespace gia {

DataSplit split_dataset(const GraphDataset& ds, uint64_t seed) {
  const int n = static_cast<int>(ds.size());
  if (n < 10) throw std::invalid_argument("dataset too small to split (need >= 10 graphs)");

  Rng rng(mix64(seed, fnv1a("split")));
  auto idx = rng.permutation(n);

  const int n_target = static_cast<int>(std::llround(0.4 * n));
  const int n_aux = static_cast<int>(std::llround(0.3 * n));

  DataSplit s;
  s.target_train.assign(idx.begin(), idx.begin() + n_target);
  s.attack_train.assign(idx.begin() + n_target, idx.begin() + n_target + n_aux);
  s.attack_test.assign(idx.begin() + n_target + n_aux, idx.end());
  return s;
}

}  // namespace gia
