#pragma once

#include <utility>
#include <vector>

#include "postlens/types.hpp"

namespace postlens {

// Appendix-A layer norms divide by sqrt(var + eps); the same eps flows through
// the decomposition so the reconstruction identity stays exact.
inline constexpr double kLayerNormEpsilon = 1e-6;

// Learned per-feature scale and bias of one layer norm.
struct LayerNormParams {
  Vector gamma;
  Vector beta;

  static LayerNormParams identity(int dim) {
    return {Vector::Ones(dim), Vector::Zero(dim)};
  }
};

// Per-token statistics recorded by a layer norm application. sigma already
// includes the epsilon term, so sigma > 0 always holds.
struct NormStats {
  Vector mu;
  Vector sigma;
};

// Normalizes each row of x to zero mean / unit variance, then applies the
// learned affine map. Returns the transformed matrix together with the
// statistics actually used, which downstream decomposition consumes verbatim.
std::pair<Matrix, NormStats> layer_norm(const Matrix& x, const LayerNormParams& params,
                                        double epsilon = kLayerNormEpsilon);

// Softmax over the entries where mask is true; masked-out entries get
// probability exactly zero. Max-subtraction keeps the exponentials bounded.
Vector softmax_masked(const Vector& logits, const std::vector<bool>& mask);

// Convenience for 64x64 move logits with a move-space legality mask.
Matrix softmax_masked(const Matrix& logits, const MoveMask& legal);

}  // namespace postlens
