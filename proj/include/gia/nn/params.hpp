#pragma once

#include <string>
#include <vector>

#include "gia/core/mat.hpp"
#include "gia/core/rng.hpp"

namespace gia::nn {

/// Named parameter matrices shared by a model's forward passes. Parameters
/// live outside the tape; tapes reference them and accumulate gradients into
/// caller-provided buffers, which keeps multi-threaded gradient accumulation
/// deterministic (per-chunk buffers merged in chunk order).
class ParamStore {
 public:
  int add(const std::string& name, Mat init);
  int find(const std::string& name) const;  // -1 when absent

  const Mat& value(int idx) const { return values_[idx]; }
  Mat& value(int idx) { return values_[idx]; }
  const std::string& name(int idx) const { return names_[idx]; }
  int count() const { return static_cast<int>(values_.size()); }

  std::vector<Mat> zero_grads() const;
  static void accumulate(std::vector<Mat>& into, const std::vector<Mat>& from);

 private:
  std::vector<std::string> names_;
  std::vector<Mat> values_;
};

Mat glorot(int rows, int cols, Rng& rng);

/// Adam with optional per-parameter freeze mask (used when fine-tuning only a
/// sub-module).
class Adam {
 public:
  explicit Adam(double lr = 1e-3, double beta1 = 0.9, double beta2 = 0.999,
                double eps = 1e-8)
      : lr_(lr), beta1_(beta1), beta2_(beta2), eps_(eps) {}

  void init(const ParamStore& ps);
  void step(ParamStore& ps, const std::vector<Mat>& grads,
            const std::vector<char>* trainable = nullptr);

 private:
  double lr_, beta1_, beta2_, eps_;
  int t_ = 0;
  std::vector<Mat> m_, v_;
};

}  // namespace gia::nn
