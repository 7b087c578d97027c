#include "gia/nn/tape.hpp"

#include <cmath>
#include <stdexcept>

#include "gia/kernels/kernels.hpp"

namespace gia::nn {

using kernels::ops;

CsrAdj CsrAdj::from_graph(const Graph& g) {
  CsrAdj a;
  a.n = g.n;
  a.offsets.resize(g.n + 1, 0);
  size_t total = 0;
  for (int u = 0; u < g.n; ++u) total += g.adj[u].size();
  a.indices.reserve(total);
  for (int u = 0; u < g.n; ++u) {
    a.offsets[u] = static_cast<int>(a.indices.size());
    a.indices.insert(a.indices.end(), g.adj[u].begin(), g.adj[u].end());
  }
  a.offsets[g.n] = static_cast<int>(a.indices.size());
  return a;
}

Mat& Tape::ensure_grad(int i) {
  Node& n = nodes_[i];
  if (n.grad.empty() || n.grad.rows == 0) {
    const Mat& v = val(i);
    n.grad = Mat(v.rows, v.cols);
  }
  return n.grad;
}

Tape::Var Tape::constant(Mat v) {
  Node n;
  n.val = std::move(v);
  return push(std::move(n));
}

Tape::Var Tape::external(const Mat* v) {
  Node n;
  n.ext = v;
  return push(std::move(n));
}

Tape::Var Tape::param(const Mat* v, int param_idx) {
  Node n;
  n.ext = v;
  n.param_idx = param_idx;
  return push(std::move(n));
}

Tape::Var Tape::matmul(Var a, Var b) {
  const Mat &A = val(a.i), &B = val(b.i);
  if (A.cols != B.rows) throw std::invalid_argument("matmul shape mismatch");
  Node n;
  n.op = Op::MatMulNN;
  n.p0 = a.i;
  n.p1 = b.i;
  n.val = Mat(A.rows, B.cols);
  ops().gemm_nn(A.data(), B.data(), n.val.data(), A.rows, A.cols, B.cols);
  return push(std::move(n));
}

Tape::Var Tape::matmul_nt(Var a, Var b) {
  const Mat &A = val(a.i), &B = val(b.i);
  if (A.cols != B.cols) throw std::invalid_argument("matmul_nt shape mismatch");
  Node n;
  n.op = Op::MatMulNT;
  n.p0 = a.i;
  n.p1 = b.i;
  n.val = Mat(A.rows, B.rows);
  ops().gemm_nt(A.data(), B.data(), n.val.data(), A.rows, A.cols, B.rows);
  return push(std::move(n));
}

Tape::Var Tape::matmul_tn(Var a, Var b) {
  const Mat &A = val(a.i), &B = val(b.i);
  if (A.rows != B.rows) throw std::invalid_argument("matmul_tn shape mismatch");
  Node n;
  n.op = Op::MatMulTN;
  n.p0 = a.i;
  n.p1 = b.i;
  n.val = Mat(A.cols, B.cols);
  ops().gemm_tn(A.data(), B.data(), n.val.data(), A.cols, A.rows, B.cols);
  return push(std::move(n));
}

Tape::Var Tape::add(Var a, Var b) {
  const Mat &A = val(a.i), &B = val(b.i);
  if (!A.same_shape(B)) throw std::invalid_argument("add shape mismatch");
  Node n;
  n.op = Op::Add;
  n.p0 = a.i;
  n.p1 = b.i;
  n.val = Mat(A.rows, A.cols);
  ops().vadd(A.data(), B.data(), n.val.data(), static_cast<int>(A.size()));
  return push(std::move(n));
}

Tape::Var Tape::sub(Var a, Var b) {
  const Mat &A = val(a.i), &B = val(b.i);
  if (!A.same_shape(B)) throw std::invalid_argument("sub shape mismatch");
  Node n;
  n.op = Op::Sub;
  n.p0 = a.i;
  n.p1 = b.i;
  n.val = Mat(A.rows, A.cols);
  ops().vsub(A.data(), B.data(), n.val.data(), static_cast<int>(A.size()));
  return push(std::move(n));
}

Tape::Var Tape::hadamard(Var a, Var b) {
  const Mat &A = val(a.i), &B = val(b.i);
  if (!A.same_shape(B)) throw std::invalid_argument("hadamard shape mismatch");
  Node n;
  n.op = Op::Hadamard;
  n.p0 = a.i;
  n.p1 = b.i;
  n.val = Mat(A.rows, A.cols);
  ops().vmul(A.data(), B.data(), n.val.data(), static_cast<int>(A.size()));
  return push(std::move(n));
}

Tape::Var Tape::add_rowvec(Var a, Var bias) {
  const Mat &A = val(a.i), &B = val(bias.i);
  if (B.rows != 1 || B.cols != A.cols) throw std::invalid_argument("add_rowvec shape");
  Node n;
  n.op = Op::AddRowVec;
  n.p0 = a.i;
  n.p1 = bias.i;
  n.val = Mat(A.rows, A.cols);
  for (int i = 0; i < A.rows; ++i)
    ops().vadd(A.row(i), B.data(), n.val.row(i), A.cols);
  return push(std::move(n));
}

Tape::Var Tape::scale(Var a, double c) {
  const Mat& A = val(a.i);
  Node n;
  n.op = Op::Scale;
  n.p0 = a.i;
  n.c0 = c;
  n.val = Mat(A.rows, A.cols);
  ops().vscale(A.data(), c, n.val.data(), static_cast<int>(A.size()));
  return push(std::move(n));
}

Tape::Var Tape::add_const(Var a, double c) {
  const Mat& A = val(a.i);
  Node n;
  n.op = Op::AddConst;
  n.p0 = a.i;
  n.c0 = c;
  n.val = Mat(A.rows, A.cols);
  for (size_t i = 0; i < A.size(); ++i) n.val.d[i] = A.d[i] + c;
  return push(std::move(n));
}

Tape::Var Tape::relu(Var a) {
  const Mat& A = val(a.i);
  Node n;
  n.op = Op::Relu;
  n.p0 = a.i;
  n.val = Mat(A.rows, A.cols);
  ops().relu_fwd(A.data(), n.val.data(), static_cast<int>(A.size()));
  return push(std::move(n));
}

Tape::Var Tape::tanh_(Var a) {
  const Mat& A = val(a.i);
  Node n;
  n.op = Op::Tanh;
  n.p0 = a.i;
  n.val = Mat(A.rows, A.cols);
  for (size_t i = 0; i < A.size(); ++i) n.val.d[i] = std::tanh(A.d[i]);
  return push(std::move(n));
}

Tape::Var Tape::sigmoid(Var a) {
  const Mat& A = val(a.i);
  Node n;
  n.op = Op::Sigmoid;
  n.p0 = a.i;
  n.val = Mat(A.rows, A.cols);
  for (size_t i = 0; i < A.size(); ++i) {
    const double x = A.d[i];
    n.val.d[i] = x >= 0.0 ? 1.0 / (1.0 + std::exp(-x))
                          : std::exp(x) / (1.0 + std::exp(x));
  }
  return push(std::move(n));
}

Tape::Var Tape::log_eps(Var a, double eps) {
  const Mat& A = val(a.i);
  Node n;
  n.op = Op::LogEps;
  n.p0 = a.i;
  n.c0 = eps;
  n.val = Mat(A.rows, A.cols);
  for (size_t i = 0; i < A.size(); ++i) n.val.d[i] = std::log(A.d[i] + eps);
  return push(std::move(n));
}

Tape::Var Tape::sqrt_eps(Var a, double eps) {
  const Mat& A = val(a.i);
  Node n;
  n.op = Op::SqrtEps;
  n.p0 = a.i;
  n.c0 = eps;
  n.val = Mat(A.rows, A.cols);
  for (size_t i = 0; i < A.size(); ++i) n.val.d[i] = std::sqrt(A.d[i] + eps);
  return push(std::move(n));
}

Tape::Var Tape::softmax_rows(Var a) {
  const Mat& A = val(a.i);
  Node n;
  n.op = Op::SoftmaxRows;
  n.p0 = a.i;
  n.val = Mat(A.rows, A.cols);
  for (int i = 0; i < A.rows; ++i) {
    const double* x = A.row(i);
    double* y = n.val.row(i);
    double mx = x[0];
    for (int j = 1; j < A.cols; ++j) mx = std::max(mx, x[j]);
    double s = 0.0;
    for (int j = 0; j < A.cols; ++j) {
      y[j] = std::exp(x[j] - mx);
      s += y[j];
    }
    for (int j = 0; j < A.cols; ++j) y[j] /= s;
  }
  return push(std::move(n));
}

Tape::Var Tape::slice_cols(Var a, int m) {
  const Mat& A = val(a.i);
  if (m < 1 || m > A.cols) throw std::invalid_argument("slice_cols width out of range");
  Node n;
  n.op = Op::SliceCols;
  n.p0 = a.i;
  n.i0 = m;
  n.val = Mat(A.rows, m);
  for (int i = 0; i < A.rows; ++i)
    std::copy(A.row(i), A.row(i) + m, n.val.row(i));
  return push(std::move(n));
}

Tape::Var Tape::concat_cols(Var a, Var b) {
  const Mat &A = val(a.i), &B = val(b.i);
  if (A.rows != B.rows) throw std::invalid_argument("concat_cols row mismatch");
  Node n;
  n.op = Op::ConcatCols;
  n.p0 = a.i;
  n.p1 = b.i;
  n.val = Mat(A.rows, A.cols + B.cols);
  for (int i = 0; i < A.rows; ++i) {
    std::copy(A.row(i), A.row(i) + A.cols, n.val.row(i));
    std::copy(B.row(i), B.row(i) + B.cols, n.val.row(i) + A.cols);
  }
  return push(std::move(n));
}

Tape::Var Tape::rowsum(Var a) {
  const Mat& A = val(a.i);
  Node n;
  n.op = Op::RowSum;
  n.p0 = a.i;
  n.val = Mat(A.rows, 1);
  for (int i = 0; i < A.rows; ++i) n.val.d[i] = ops().sum(A.row(i), A.cols);
  return push(std::move(n));
}

Tape::Var Tape::colmean(Var a) {
  const Mat& A = val(a.i);
  if (A.rows == 0) throw std::invalid_argument("colmean of empty matrix");
  Node n;
  n.op = Op::ColMean;
  n.p0 = a.i;
  n.val = Mat(1, A.cols);
  for (int i = 0; i < A.rows; ++i)
    ops().vadd(n.val.data(), A.row(i), n.val.data(), A.cols);
  ops().vscale(n.val.data(), 1.0 / A.rows, n.val.data(), A.cols);
  return push(std::move(n));
}

Tape::Var Tape::sum_all(Var a) {
  const Mat& A = val(a.i);
  Node n;
  n.op = Op::SumAll;
  n.p0 = a.i;
  n.val = Mat(1, 1);
  n.val.d[0] = ops().sum(A.data(), static_cast<int>(A.size()));
  return push(std::move(n));
}

Tape::Var Tape::rowdiv_safe(Var a, Var r, double eps) {
  const Mat &A = val(a.i), &R = val(r.i);
  if (R.rows != A.rows || R.cols != 1) throw std::invalid_argument("rowdiv_safe shape");
  Node n;
  n.op = Op::RowDivSafe;
  n.p0 = a.i;
  n.p1 = r.i;
  n.c0 = eps;
  n.val = Mat(A.rows, A.cols);
  for (int i = 0; i < A.rows; ++i) {
    const double d = R.d[i];
    if (d > eps) ops().vscale(A.row(i), 1.0 / d, n.val.row(i), A.cols);
  }
  return push(std::move(n));
}

Tape::Var Tape::div_by_scalar_safe(Var a, Var s, double eps) {
  const Mat &A = val(a.i), &S = val(s.i);
  if (S.size() != 1) throw std::invalid_argument("div_by_scalar_safe needs 1x1 divisor");
  Node n;
  n.op = Op::DivByScalarSafe;
  n.p0 = a.i;
  n.p1 = s.i;
  n.c0 = eps;
  n.val = Mat(A.rows, A.cols);
  const double d = std::max(S.d[0], eps);
  ops().vscale(A.data(), 1.0 / d, n.val.data(), static_cast<int>(A.size()));
  return push(std::move(n));
}

Tape::Var Tape::spmm_mean(const CsrAdj* adj, Var h) {
  const Mat& H = val(h.i);
  if (H.rows != adj->n) throw std::invalid_argument("spmm_mean shape mismatch");
  Node n;
  n.op = Op::SpmmMean;
  n.p0 = h.i;
  n.adj = adj;
  n.val = Mat(H.rows, H.cols);
  for (int u = 0; u < adj->n; ++u) {
    const int deg = adj->degree(u);
    if (deg == 0) continue;  // isolated node: zero message
    double* out = n.val.row(u);
    for (int e = adj->offsets[u]; e < adj->offsets[u + 1]; ++e)
      ops().vadd(out, H.row(adj->indices[e]), out, H.cols);
    ops().vscale(out, 1.0 / deg, out, H.cols);
  }
  return push(std::move(n));
}

Tape::Var Tape::bce_logits_mean(Var z, const Mat* target) {
  const Mat& Z = val(z.i);
  if (!Z.same_shape(*target)) throw std::invalid_argument("bce target shape mismatch");
  if (Z.size() == 0) throw std::invalid_argument("bce over empty logits");
  Node n;
  n.op = Op::BceLogitsMean;
  n.p0 = z.i;
  n.target = target;
  n.val = Mat(1, 1);
  double acc = 0.0;
  for (size_t i = 0; i < Z.size(); ++i) {
    const double x = Z.d[i], t = target->d[i];
    acc += std::max(x, 0.0) - x * t + std::log1p(std::exp(-std::fabs(x)));
  }
  n.val.d[0] = acc / static_cast<double>(Z.size());
  return push(std::move(n));
}

Tape::Var Tape::ce_logits(Var z, int label) {
  const Mat& Z = val(z.i);
  if (Z.rows != 1) throw std::invalid_argument("ce_logits expects a 1 x C row");
  if (label < 0 || label >= Z.cols) throw std::invalid_argument("label out of range");
  Node n;
  n.op = Op::CeLogits;
  n.p0 = z.i;
  n.i0 = label;
  n.val = Mat(1, 1);
  double mx = Z.d[0];
  for (int j = 1; j < Z.cols; ++j) mx = std::max(mx, Z.d[j]);
  double s = 0.0;
  for (int j = 0; j < Z.cols; ++j) s += std::exp(Z.d[j] - mx);
  n.val.d[0] = mx + std::log(s) - Z.d[label];
  return push(std::move(n));
}

const Mat& Tape::value(Var v) const { return val(v.i); }

void Tape::backward(Var loss, std::vector<Mat>& param_grads) {
  if (!loss.valid() || val(loss.i).size() != 1)
    throw std::invalid_argument("backward needs a 1x1 loss");
  ensure_grad(loss.i).d[0] = 1.0;

  for (int i = loss.i; i >= 0; --i) {
    Node& n = nodes_[i];
    if (n.grad.empty()) continue;  // not on the path to the loss
    const Mat& g = n.grad;
    const int sz = static_cast<int>(g.size());
    switch (n.op) {
      case Op::Leaf:
        break;
      case Op::MatMulNN: {
        const Mat &A = val(n.p0), &B = val(n.p1);
        ops().gemm_nt(g.data(), B.data(), ensure_grad(n.p0).data(), A.rows, B.cols, A.cols);
        ops().gemm_tn(A.data(), g.data(), ensure_grad(n.p1).data(), A.cols, A.rows, B.cols);
        break;
      }
      case Op::MatMulNT: {
        const Mat &A = val(n.p0), &B = val(n.p1);
        ops().gemm_nn(g.data(), B.data(), ensure_grad(n.p0).data(), A.rows, B.rows, A.cols);
        ops().gemm_tn(g.data(), A.data(), ensure_grad(n.p1).data(), B.rows, A.rows, A.cols);
        break;
      }
      case Op::MatMulTN: {
        const Mat &A = val(n.p0), &B = val(n.p1);
        // dA += B * dC^T ; dB += A * dC
        ops().gemm_nt(B.data(), g.data(), ensure_grad(n.p0).data(), B.rows, B.cols, g.rows);
        ops().gemm_nn(A.data(), g.data(), ensure_grad(n.p1).data(), A.rows, A.cols, g.cols);
        break;
      }
      case Op::Add:
        ops().axpy(1.0, g.data(), ensure_grad(n.p0).data(), sz);
        ops().axpy(1.0, g.data(), ensure_grad(n.p1).data(), sz);
        break;
      case Op::Sub:
        ops().axpy(1.0, g.data(), ensure_grad(n.p0).data(), sz);
        ops().axpy(-1.0, g.data(), ensure_grad(n.p1).data(), sz);
        break;
      case Op::Hadamard:
        ops().vmul_acc(g.data(), val(n.p1).data(), ensure_grad(n.p0).data(), sz);
        ops().vmul_acc(g.data(), val(n.p0).data(), ensure_grad(n.p1).data(), sz);
        break;
      case Op::AddRowVec: {
        ops().axpy(1.0, g.data(), ensure_grad(n.p0).data(), sz);
        Mat& gb = ensure_grad(n.p1);
        for (int r = 0; r < g.rows; ++r) ops().vadd(gb.data(), g.row(r), gb.data(), g.cols);
        break;
      }
      case Op::Scale:
        ops().axpy(n.c0, g.data(), ensure_grad(n.p0).data(), sz);
        break;
      case Op::AddConst:
        ops().axpy(1.0, g.data(), ensure_grad(n.p0).data(), sz);
        break;
      case Op::Relu:
        ops().relu_bwd(n.val.data(), g.data(), ensure_grad(n.p0).data(), sz);
        break;
      case Op::Tanh: {
        Mat& ga = ensure_grad(n.p0);
        for (int j = 0; j < sz; ++j) ga.d[j] += g.d[j] * (1.0 - n.val.d[j] * n.val.d[j]);
        break;
      }
      case Op::Sigmoid: {
        Mat& ga = ensure_grad(n.p0);
        for (int j = 0; j < sz; ++j) ga.d[j] += g.d[j] * n.val.d[j] * (1.0 - n.val.d[j]);
        break;
      }
      case Op::LogEps: {
        const Mat& A = val(n.p0);
        Mat& ga = ensure_grad(n.p0);
        for (int j = 0; j < sz; ++j) ga.d[j] += g.d[j] / (A.d[j] + n.c0);
        break;
      }
      case Op::SqrtEps: {
        Mat& ga = ensure_grad(n.p0);
        for (int j = 0; j < sz; ++j) ga.d[j] += 0.5 * g.d[j] / n.val.d[j];
        break;
      }
      case Op::SoftmaxRows: {
        Mat& ga = ensure_grad(n.p0);
        for (int r = 0; r < g.rows; ++r) {
          const double* y = n.val.row(r);
          const double* gy = g.row(r);
          const double dotv = ops().dot(gy, y, g.cols);
          double* gx = ga.row(r);
          for (int j = 0; j < g.cols; ++j) gx[j] += (gy[j] - dotv) * y[j];
        }
        break;
      }
      case Op::SliceCols: {
        Mat& ga = ensure_grad(n.p0);
        for (int r = 0; r < g.rows; ++r)
          ops().vadd(ga.row(r), g.row(r), ga.row(r), n.i0);
        break;
      }
      case Op::ConcatCols: {
        Mat& ga = ensure_grad(n.p0);
        Mat& gb = ensure_grad(n.p1);
        for (int r = 0; r < g.rows; ++r) {
          ops().vadd(ga.row(r), g.row(r), ga.row(r), ga.cols);
          ops().vadd(gb.row(r), g.row(r) + ga.cols, gb.row(r), gb.cols);
        }
        break;
      }
      case Op::RowSum: {
        Mat& ga = ensure_grad(n.p0);
        for (int r = 0; r < ga.rows; ++r) {
          const double gv = g.d[r];
          if (gv != 0.0)
            for (int j = 0; j < ga.cols; ++j) ga.row(r)[j] += gv;
        }
        break;
      }
      case Op::ColMean: {
        Mat& ga = ensure_grad(n.p0);
        const double inv = 1.0 / ga.rows;
        for (int r = 0; r < ga.rows; ++r) ops().axpy(inv, g.data(), ga.row(r), ga.cols);
        break;
      }
      case Op::SumAll: {
        Mat& ga = ensure_grad(n.p0);
        const double gv = g.d[0];
        for (size_t j = 0; j < ga.size(); ++j) ga.d[j] += gv;
        break;
      }
      case Op::RowDivSafe: {
        const Mat &A = val(n.p0), &R = val(n.p1);
        Mat& ga = ensure_grad(n.p0);
        Mat& gr = ensure_grad(n.p1);
        for (int r = 0; r < A.rows; ++r) {
          const double d = R.d[r];
          if (d <= n.c0) continue;
          ops().axpy(1.0 / d, g.row(r), ga.row(r), A.cols);
          gr.d[r] -= ops().dot(g.row(r), A.row(r), A.cols) / (d * d);
        }
        break;
      }
      case Op::DivByScalarSafe: {
        const Mat &A = val(n.p0), &S = val(n.p1);
        Mat& ga = ensure_grad(n.p0);
        const double d = std::max(S.d[0], n.c0);
        ops().axpy(1.0 / d, g.data(), ga.data(), sz);
        if (S.d[0] > n.c0)
          ensure_grad(n.p1).d[0] -= ops().dot(g.data(), A.data(), sz) / (d * d);
        break;
      }
      case Op::SpmmMean: {
        Mat& gh = ensure_grad(n.p0);
        const CsrAdj* adj = n.adj;
        for (int u = 0; u < adj->n; ++u) {
          const int deg = adj->degree(u);
          if (deg == 0) continue;
          const double inv = 1.0 / deg;
          for (int e = adj->offsets[u]; e < adj->offsets[u + 1]; ++e)
            ops().axpy(inv, g.row(u), gh.row(adj->indices[e]), g.cols);
        }
        break;
      }
      case Op::BceLogitsMean: {
        const Mat& Z = val(n.p0);
        Mat& gz = ensure_grad(n.p0);
        const double gv = g.d[0] / static_cast<double>(Z.size());
        for (size_t j = 0; j < Z.size(); ++j) {
          const double x = Z.d[j];
          const double sig = x >= 0.0 ? 1.0 / (1.0 + std::exp(-x))
                                      : std::exp(x) / (1.0 + std::exp(x));
          gz.d[j] += gv * (sig - n.target->d[j]);
        }
        break;
      }
      case Op::CeLogits: {
        const Mat& Z = val(n.p0);
        Mat& gz = ensure_grad(n.p0);
        double mx = Z.d[0];
        for (int j = 1; j < Z.cols; ++j) mx = std::max(mx, Z.d[j]);
        double s = 0.0;
        for (int j = 0; j < Z.cols; ++j) s += std::exp(Z.d[j] - mx);
        const double gv = g.d[0];
        for (int j = 0; j < Z.cols; ++j) {
          const double p = std::exp(Z.d[j] - mx) / s;
          gz.d[j] += gv * (p - (j == n.i0 ? 1.0 : 0.0));
        }
        break;
      }
    }
  }

  for (const Node& n : nodes_)
    if (n.param_idx >= 0 && !n.grad.empty())
      ops().axpy(1.0, n.grad.data(), param_grads[n.param_idx].data(),
                 static_cast<int>(n.grad.size()));
}

Tape::Var apply_activation(Tape& t, Tape::Var x, Activation act) {
  switch (act) {
    case Activation::Relu: return t.relu(x);
    case Activation::Tanh: return t.tanh_(x);
    case Activation::Identity: return x;
  }
  return x;
}

}  // namespace gia::nn
