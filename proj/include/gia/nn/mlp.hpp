#pragma once

#include <string>
#include <vector>

#include "gia/nn/params.hpp"
#include "gia/nn/tape.hpp"

namespace gia::nn {

/// Plain affine stack: dims = {in, h1, ..., out}. Hidden layers use `act`,
/// the output layer is linear (callers attach softmax/sigmoid losses).
struct Mlp {
  std::vector<int> weight_idx;
  std::vector<int> bias_idx;
  std::vector<int> dims;
  Activation act = Activation::Relu;

  static Mlp create(ParamStore& ps, const std::string& prefix,
                    const std::vector<int>& dims, Activation act, Rng& rng);
  /// Binds an existing store's parameters by prefix (after deserialization).
  static Mlp bind(const ParamStore& ps, const std::string& prefix,
                  const std::vector<int>& dims, Activation act);

  Tape::Var forward(Tape& t, const ParamStore& ps, Tape::Var x) const;
};

}  // namespace gia::nn
