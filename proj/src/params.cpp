#include "gia/nn/params.hpp"

#include <cmath>
#include <stdexcept>

#include "gia/kernels/kernels.hpp"

namespace gia::nn {

int ParamStore::add(const std::string& name, Mat init) {
  if (find(name) >= 0) throw std::invalid_argument("duplicate parameter: " + name);
  names_.push_back(name);
  values_.push_back(std::move(init));
  return static_cast<int>(values_.size()) - 1;
}

int ParamStore::find(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

std::vector<Mat> ParamStore::zero_grads() const {
  std::vector<Mat> g;
  g.reserve(values_.size());
  for (const auto& v : values_) g.emplace_back(v.rows, v.cols);
  return g;
}

void ParamStore::accumulate(std::vector<Mat>& into, const std::vector<Mat>& from) {
  for (size_t i = 0; i < into.size(); ++i)
    kernels::ops().axpy(1.0, from[i].data(), into[i].data(),
                        static_cast<int>(into[i].size()));
}

Mat glorot(int rows, int cols, Rng& rng) {
  Mat m(rows, cols);
  const double limit = std::sqrt(6.0 / (rows + cols));
  for (auto& v : m.d) v = rng.uniform(-limit, limit);
  return m;
}

void Adam::init(const ParamStore& ps) {
  t_ = 0;
  m_.clear();
  v_.clear();
  for (int i = 0; i < ps.count(); ++i) {
    m_.emplace_back(ps.value(i).rows, ps.value(i).cols);
    v_.emplace_back(ps.value(i).rows, ps.value(i).cols);
  }
}

void Adam::step(ParamStore& ps, const std::vector<Mat>& grads,
                const std::vector<char>* trainable) {
  if (m_.empty()) init(ps);
  ++t_;
  const double bc1 = 1.0 - std::pow(beta1_, t_);
  const double bc2 = 1.0 - std::pow(beta2_, t_);
  for (int i = 0; i < ps.count(); ++i) {
    if (trainable && !(*trainable)[i]) continue;
    Mat& w = ps.value(i);
    const Mat& g = grads[i];
    for (size_t j = 0; j < w.size(); ++j) {
      m_[i].d[j] = beta1_ * m_[i].d[j] + (1.0 - beta1_) * g.d[j];
      v_[i].d[j] = beta2_ * v_[i].d[j] + (1.0 - beta2_) * g.d[j] * g.d[j];
      const double mhat = m_[i].d[j] / bc1;
      const double vhat = v_[i].d[j] / bc2;
      w.d[j] -= lr_ * mhat / (std::sqrt(vhat) + eps_);
    }
  }
}

}  // namespace gia::nn
