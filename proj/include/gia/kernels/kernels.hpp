#pragma once

#include <cstddef>
#include <string>

namespace gia::kernels {

/// Dense arithmetic kernels behind the training and matching inner loops.
///
/// Every entry has a scalar reference implementation and, on x86-64 with
/// AVX2+FMA, a vectorized variant. The active table is picked once at startup
/// (cpuid probe, overridable via GIA_KERNELS=scalar|avx2). The two variants
/// are equivalence-tested against each other; transcendentals stay scalar so
/// both paths share bit-identical nonlinearities.
struct Ops {
  // C(MxN) += A(MxK) * B(KxN)
  void (*gemm_nn)(const double* a, const double* b, double* c, int m, int k, int n);
  // C(MxN) += A(MxK) * B(NxK)^T
  void (*gemm_nt)(const double* a, const double* b, double* c, int m, int k, int n);
  // C(MxN) += A(KxM)^T * B(KxN)
  void (*gemm_tn)(const double* a, const double* b, double* c, int m, int k, int n);

  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, int n);
  // z = x + y / z = x - y / z = x .* y / z = alpha * x
  void (*vadd)(const double* x, const double* y, double* z, int n);
  void (*vsub)(const double* x, const double* y, double* z, int n);
  void (*vmul)(const double* x, const double* y, double* z, int n);
  void (*vscale)(const double* x, double alpha, double* z, int n);
  // z += x .* y
  void (*vmul_acc)(const double* x, const double* y, double* z, int n);

  double (*dot)(const double* x, const double* y, int n);
  double (*sum)(const double* x, int n);

  // y = max(x, 0);  dx += dy where y > 0
  void (*relu_fwd)(const double* x, double* y, int n);
  void (*relu_bwd)(const double* y, const double* dy, double* dx, int n);

  // max_j p[j] * x[j]; n == 0 yields 0. Used by max-pooling graph matching.
  double (*rowmax_prod)(const double* p, const double* x, int n);
};

enum class Impl { Auto, Scalar, Avx2 };

/// Active kernel table (dispatch decided on first use).
const Ops& ops();

const Ops& scalar_ops();
bool avx2_supported();
/// Force an implementation (testing hook). Avx2 on unsupported hardware throws.
void set_impl(Impl impl);
std::string active_impl_name();

}  // namespace gia::kernels
