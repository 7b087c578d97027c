#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace gia {

/// Dense row-major matrix of doubles. Vectors are represented as 1xN or Nx1.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<double> d;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), d(static_cast<size_t>(r) * c, 0.0) {}
  Mat(int r, int c, double fill)
      : rows(r), cols(c), d(static_cast<size_t>(r) * c, fill) {}

  static Mat zeros(int r, int c) { return Mat(r, c); }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }

  static Mat from_rows(std::initializer_list<std::initializer_list<double>> rs) {
    Mat m(static_cast<int>(rs.size()),
          rs.size() ? static_cast<int>(rs.begin()->size()) : 0);
    int i = 0;
    for (const auto& r : rs) {
      int j = 0;
      for (double v : r) m.at(i, j++) = v;
      ++i;
    }
    return m;
  }

  double* data() { return d.data(); }
  const double* data() const { return d.data(); }
  double* row(int i) { return d.data() + static_cast<size_t>(i) * cols; }
  const double* row(int i) const { return d.data() + static_cast<size_t>(i) * cols; }

  double& at(int i, int j) {
    assert(i >= 0 && i < rows && j >= 0 && j < cols);
    return d[static_cast<size_t>(i) * cols + j];
  }
  double at(int i, int j) const {
    assert(i >= 0 && i < rows && j >= 0 && j < cols);
    return d[static_cast<size_t>(i) * cols + j];
  }

  size_t size() const { return d.size(); }
  bool empty() const { return d.empty(); }

  void fill(double v) { std::fill(d.begin(), d.end(), v); }

  bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }
};

}  // namespace gia
