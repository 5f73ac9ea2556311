#include "postlens/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace postlens {

std::pair<Matrix, NormStats> layer_norm(const Matrix& x, const LayerNormParams& params,
                                        double epsilon) {
  const Eigen::Index dim = x.cols();
  if (params.gamma.size() != dim || params.beta.size() != dim) {
    throw ConfigError("layer_norm: parameter length does not match feature dimension");
  }

  NormStats stats;
  stats.mu = x.rowwise().mean();
  Matrix centered = x.colwise() - stats.mu;
  stats.sigma = ((centered.array().square().rowwise().mean()) + epsilon).sqrt();

  Matrix out = (centered.array().colwise() / stats.sigma.array()).rowwise() *
               params.gamma.transpose().array();
  out.array().rowwise() += params.beta.transpose().array();
  return {std::move(out), std::move(stats)};
}

Vector softmax_masked(const Vector& logits, const std::vector<bool>& mask) {
  if (static_cast<Eigen::Index>(mask.size()) != logits.size()) {
    throw ArgumentError("softmax_masked: mask length does not match logits");
  }

  double max_logit = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < logits.size(); ++i) {
    if (mask[static_cast<std::size_t>(i)]) max_logit = std::max(max_logit, logits[i]);
  }
  if (max_logit == -std::numeric_limits<double>::infinity()) {
    throw ArgumentError("softmax_masked: no legal moves");
  }

  Vector probs = Vector::Zero(logits.size());
  double total = 0.0;
  for (Eigen::Index i = 0; i < logits.size(); ++i) {
    if (!mask[static_cast<std::size_t>(i)]) continue;
    const double e = std::exp(logits[i] - max_logit);
    probs[i] = e;
    total += e;
  }
  probs /= total;
  return probs;
}

Matrix softmax_masked(const Matrix& logits, const MoveMask& legal) {
  if (logits.rows() != legal.rows() || logits.cols() != legal.cols()) {
    throw ArgumentError("softmax_masked: legality mask shape does not match logits");
  }
  const Eigen::Index n = logits.size();
  Vector flat(n);
  std::vector<bool> mask(static_cast<std::size_t>(n));
  Eigen::Index k = 0;
  for (Eigen::Index r = 0; r < logits.rows(); ++r) {
    for (Eigen::Index c = 0; c < logits.cols(); ++c, ++k) {
      flat[k] = logits(r, c);
      mask[static_cast<std::size_t>(k)] = legal(r, c);
    }
  }
  Vector probs = softmax_masked(flat, mask);
  Matrix out(logits.rows(), logits.cols());
  k = 0;
  for (Eigen::Index r = 0; r < logits.rows(); ++r) {
    for (Eigen::Index c = 0; c < logits.cols(); ++c, ++k) out(r, c) = probs[k];
  }
  return out;
}

}  // namespace postlens
