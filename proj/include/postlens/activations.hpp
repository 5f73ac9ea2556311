#pragma once

#include <cmath>

namespace postlens {

// softplus(x) = ln(1 + e^x), computed so large |x| cannot overflow.
inline double softplus(double x) {
  return std::fmax(x, 0.0) + std::log1p(std::exp(-std::fabs(x)));
}

inline double sigmoid(double x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

// mish(x) = x * tanh(softplus(x))
inline double mish(double x) { return x * std::tanh(softplus(x)); }

// swish(x) = x * sigmoid(x)
inline double swish(double x) { return x * sigmoid(x); }

inline double squared_relu(double x) { return x > 0.0 ? x * x : 0.0; }

}  // namespace postlens
