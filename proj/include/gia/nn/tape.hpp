#pragma once

#include <cstdint>
#include <vector>

#include "gia/core/mat.hpp"
#include "gia/graph/graph.hpp"

namespace gia::nn {

/// CSR view of a graph's adjacency used by the mean-aggregation op.
struct CsrAdj {
  int n = 0;
  std::vector<int> offsets;  // n+1
  std::vector<int> indices;

  static CsrAdj from_graph(const Graph& g);
  int degree(int u) const { return offsets[u + 1] - offsets[u]; }
};

enum class Op : uint8_t {
  Leaf,
  MatMulNN,   // A * B
  MatMulNT,   // A * B^T
  MatMulTN,   // A^T * B
  Add,
  Sub,
  Hadamard,
  AddRowVec,  // A + broadcast row b (1 x d)
  Scale,      // c0 * A
  AddConst,   // A + c0
  Relu,
  Tanh,
  Sigmoid,
  LogEps,     // ln(A + c0)
  SqrtEps,    // sqrt(A + c0)
  SoftmaxRows,
  SliceCols,  // first i0 columns
  ConcatCols,
  RowSum,     // n x d -> n x 1
  ColMean,    // n x d -> 1 x d
  SumAll,     // -> 1 x 1
  RowDivSafe,     // A / row scalar r (rows with r <= c0 zeroed)
  DivByScalarSafe,  // A / max(s, c0), s a 1x1 var
  SpmmMean,   // neighbor-mean aggregation over a fixed CSR adjacency
  BceLogitsMean,  // mean_k softplus(z_k) - z_k t_k  (binary CE from logits)
  CeLogits,   // softmax cross-entropy of a 1 x C logit row vs class i0
};

/// Reverse-mode autodiff tape over dense matrices. A fresh graph is built per
/// sample (shapes vary per graph), so nodes are stored in a flat arena and
/// the backward pass is a single reverse sweep with a switch per op.
class Tape {
 public:
  struct Var {
    int i = -1;
    bool valid() const { return i >= 0; }
  };

  // --- leaves ---
  Var constant(Mat v);
  Var external(const Mat* v);               // non-owned, not differentiated
  Var param(const Mat* v, int param_idx);   // non-owned, gradient collected

  // --- ops ---
  Var matmul(Var a, Var b);
  Var matmul_nt(Var a, Var b);
  Var matmul_tn(Var a, Var b);
  Var add(Var a, Var b);
  Var sub(Var a, Var b);
  Var hadamard(Var a, Var b);
  Var add_rowvec(Var a, Var bias);
  Var scale(Var a, double c);
  Var add_const(Var a, double c);
  Var relu(Var a);
  Var tanh_(Var a);
  Var sigmoid(Var a);
  Var log_eps(Var a, double eps = 1e-12);
  Var sqrt_eps(Var a, double eps = 1e-12);
  Var softmax_rows(Var a);
  Var slice_cols(Var a, int m);
  Var concat_cols(Var a, Var b);
  Var rowsum(Var a);
  Var colmean(Var a);
  Var sum_all(Var a);
  Var rowdiv_safe(Var a, Var r, double eps = 1e-12);
  Var div_by_scalar_safe(Var a, Var s, double eps = 1e-12);
  Var spmm_mean(const CsrAdj* adj, Var h);
  Var bce_logits_mean(Var z, const Mat* target);
  Var ce_logits(Var z, int label);

  const Mat& value(Var v) const;
  double scalar(Var v) const { return value(v).d[0]; }

  /// Backpropagates from a 1x1 loss; gradients of param leaves are
  /// accumulated into `param_grads[param_idx]`.
  void backward(Var loss, std::vector<Mat>& param_grads);

  void clear() { nodes_.clear(); }
  size_t size() const { return nodes_.size(); }

 private:
  struct Node {
    Op op = Op::Leaf;
    int p0 = -1, p1 = -1;
    Mat val;
    Mat grad;
    const Mat* ext = nullptr;
    int param_idx = -1;
    double c0 = 0.0;
    int i0 = 0;
    const CsrAdj* adj = nullptr;
    const Mat* target = nullptr;
  };

  std::vector<Node> nodes_;

  const Mat& val(int i) const { return nodes_[i].ext ? *nodes_[i].ext : nodes_[i].val; }
  Mat& ensure_grad(int i);
  Var push(Node n) {
    nodes_.push_back(std::move(n));
    return Var{static_cast<int>(nodes_.size()) - 1};
  }
};

enum class Activation { Relu, Tanh, Identity };

Tape::Var apply_activation(Tape& t, Tape::Var x, Activation act);

}  // namespace gia::nn
