#include "gia/graph/buckets.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gia {
namespace {

// Interior boundaries must be strictly ascending; heavy ties get nudged by
// the smallest representable step so bucketize stays well defined (the bins
// between coinciding quantiles are then simply empty).
void enforce_ascending(std::vector<double>& edges) {
  for (size_t i = 1; i < edges.size(); ++i)
    if (edges[i] <= edges[i - 1])
      edges[i] = std::nextafter(edges[i - 1], std::numeric_limits<double>::infinity());
}

}  // namespace

BucketScheme build_bucket_scheme_values(std::vector<double> values,
                                        PropertyKind property, int k,
                                        BucketStrategy strategy) {
  if (k < 1) throw std::invalid_argument("bucket count must be >= 1");
  if (values.empty()) throw std::invalid_argument("auxiliary set is empty");
  std::sort(values.begin(), values.end());
  const double lo = values.front(), hi = values.back();

  BucketScheme s;
  s.property = property;
  s.k = k;
  s.strategy = strategy;
  s.edges.resize(k + 1);

  if (strategy == BucketStrategy::EqualWidth) {
    double a = lo, b = hi;
    if (property == PropertyKind::Density) {
      a = 0.0;
      b = 1.0;
    } else if (a == b) {
      throw std::invalid_argument("all auxiliary property values identical; bins undefined");
    }
    for (int i = 0; i <= k; ++i) s.edges[i] = a + (b - a) * i / k;
  } else {
    if (lo == hi)
      throw std::invalid_argument("all auxiliary property values identical; bins undefined");
    s.edges[0] = lo;
    s.edges[k] = hi;
    const size_t m = values.size();
    for (int i = 1; i < k; ++i) {
      // linear-interpolation quantile at p = i/k
      const double pos = static_cast<double>(i) / k * (m - 1);
      const size_t j = static_cast<size_t>(pos);
      const double frac = pos - static_cast<double>(j);
      s.edges[i] = j + 1 < m ? values[j] * (1.0 - frac) + values[j + 1] * frac : values[j];
    }
    enforce_ascending(s.edges);
  }
  return s;
}

BucketScheme build_bucket_scheme(std::span<const Graph> aux, PropertyKind property,
                                 int k, BucketStrategy strategy) {
  std::vector<double> values;
  values.reserve(aux.size());
  for (const auto& g : aux) values.push_back(graph_property(g, property));
  return build_bucket_scheme_values(std::move(values), property, k, strategy);
}

int bucketize(double value, const BucketScheme& scheme) {
  const int k = scheme.k;
  if (value < scheme.edges[0]) return 0;
  if (value >= scheme.edges[k]) return k - 1;
  // first interior boundary strictly greater than value; boundary hits go up
  int lo = 0, hi = k;
  while (lo + 1 < hi) {
    const int mid = (lo + hi) / 2;
    if (scheme.edges[mid] <= value)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace gia
