#pragma once

#include <span>
#include <vector>

#include "gia/graph/properties.hpp"

namespace gia {

enum class BucketStrategy { EqualWidth, Quantile };

/// Bucketization scheme turning a real-valued graph property into a class
/// index. Boundaries are always built on the auxiliary set only.
struct BucketScheme {
  PropertyKind property;
  int k = 2;
  BucketStrategy strategy = BucketStrategy::EqualWidth;
  std::vector<double> edges;  // k+1 strictly ascending boundaries
};

/// Equal-width bins span [min, max] of the property over `aux` (density is
/// pinned to [0, 1]). Quantile bins place interior boundaries at the i/k
/// empirical quantiles, which balances classes on skewed properties.
/// Throws std::invalid_argument when all auxiliary values coincide.
BucketScheme build_bucket_scheme(std::span<const Graph> aux, PropertyKind property,
                                 int k,
                                 BucketStrategy strategy = BucketStrategy::EqualWidth);

/// Scheme over raw values (testing and internal use).
BucketScheme build_bucket_scheme_values(std::vector<double> values,
                                        PropertyKind property, int k,
                                        BucketStrategy strategy);

/// Class index of `value`: values outside the range clamp to the end bins, a
/// value exactly on an interior boundary goes to the higher bin.
int bucketize(double value, const BucketScheme& scheme);

}  // namespace gia
