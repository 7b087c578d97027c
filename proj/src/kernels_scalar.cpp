#include "gia/kernels/kernels.hpp"

// Reference kernels. Kept deliberately plain: these define the semantics the
// vectorized variants are tested against.

namespace gia::kernels {
namespace {

void gemm_nn_s(const double* a, const double* b, double* c, int m, int k, int n) {
  for (int i = 0; i < m; ++i) {
    const double* arow = a + static_cast<size_t>(i) * k;
    double* crow = c + static_cast<size_t>(i) * n;
    for (int p = 0; p < k; ++p) {
      const double av = arow[p];
      if (av == 0.0) continue;
      const double* brow = b + static_cast<size_t>(p) * n;
      for (int j = 0; j < n; ++j) crow[j] += av * brow[j];
    }
  }
}

void gemm_nt_s(const double* a, const double* b, double* c, int m, int k, int n) {
  for (int i = 0; i < m; ++i) {
    const double* arow = a + static_cast<size_t>(i) * k;
    double* crow = c + static_cast<size_t>(i) * n;
    for (int j = 0; j < n; ++j) {
      const double* brow = b + static_cast<size_t>(j) * k;
      double acc = 0.0;
      for (int p = 0; p < k; ++p) acc += arow[p] * brow[p];
      crow[j] += acc;
    }
  }
}

void gemm_tn_s(const double* a, const double* b, double* c, int m, int k, int n) {
  for (int p = 0; p < k; ++p) {
    const double* arow = a + static_cast<size_t>(p) * m;
    const double* brow = b + static_cast<size_t>(p) * n;
    for (int i = 0; i < m; ++i) {
      const double av = arow[i];
      if (av == 0.0) continue;
      double* crow = c + static_cast<size_t>(i) * n;
      for (int j = 0; j < n; ++j) crow[j] += av * brow[j];
    }
  }
}

void axpy_s(double alpha, const double* x, double* y, int n) {
  for (int i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void vadd_s(const double* x, const double* y, double* z, int n) {
  for (int i = 0; i < n; ++i) z[i] = x[i] + y[i];
}

void vsub_s(const double* x, const double* y, double* z, int n) {
  for (int i = 0; i < n; ++i) z[i] = x[i] - y[i];
}

void vmul_s(const double* x, const double* y, double* z, int n) {
  for (int i = 0; i < n; ++i) z[i] = x[i] * y[i];
}

void vscale_s(const double* x, double alpha, double* z, int n) {
  for (int i = 0; i < n; ++i) z[i] = alpha * x[i];
}

void vmul_acc_s(const double* x, const double* y, double* z, int n) {
  for (int i = 0; i < n; ++i) z[i] += x[i] * y[i];
}

double dot_s(const double* x, const double* y, int n) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

double sum_s(const double* x, int n) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += x[i];
  return acc;
}

void relu_fwd_s(const double* x, double* y, int n) {
  for (int i = 0; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_bwd_s(const double* y, const double* dy, double* dx, int n) {
  for (int i = 0; i < n; ++i)
    if (y[i] > 0.0) dx[i] += dy[i];
}

double rowmax_prod_s(const double* p, const double* x, int n) {
  if (n <= 0) return 0.0;
  double best = p[0] * x[0];
  for (int i = 1; i < n; ++i) {
    const double v = p[i] * x[i];
    if (v > best) best = v;
  }
  return best;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops table = {
      gemm_nn_s, gemm_nt_s, gemm_tn_s, axpy_s,     vadd_s,
      vsub_s,    vmul_s,    vscale_s,  vmul_acc_s, dot_s,
      sum_s,     relu_fwd_s, relu_bwd_s, rowmax_prod_s,
  };
  return table;
}

}  // namespace gia::kernels
