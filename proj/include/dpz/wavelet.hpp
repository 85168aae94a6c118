#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace dpz {

// Orthonormal Haar (db1) analysis. Output layout: [approx_L | detail_L | ... | detail_1],
// so index ranges halve per level and the coefficient tree is implicit in the index.
inline Eigen::VectorXd dwt_haar(const Eigen::VectorXd& x, int levels) {
  const int n = static_cast<int>(x.size());
  if (levels < 0) throw std::invalid_argument("dwt_haar: negative level count");
  if (levels > 0 && (n % (1 << levels)) != 0)
    throw std::invalid_argument("dwt_haar: signal length not divisible by 2^levels");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Eigen::VectorXd out = x;
  int len = n;
  for (int l = 0; l < levels; ++l) {
    Eigen::VectorXd band = out.head(len);
    const int half = len / 2;
    for (int i = 0; i < half; ++i) {
      out[i] = (band[2 * i] + band[2 * i + 1]) * inv_sqrt2;
      out[half + i] = (band[2 * i] - band[2 * i + 1]) * inv_sqrt2;
    }
    len = half;
  }
  return out;
}

inline Eigen::VectorXd idwt_haar(const Eigen::VectorXd& c, int levels) {
  const int n = static_cast<int>(c.size());
  if (levels < 0) throw std::invalid_argument("idwt_haar: negative level count");
  if (levels > 0 && (n % (1 << levels)) != 0)
    throw std::invalid_argument("idwt_haar: length not divisible by 2^levels");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Eigen::VectorXd out = c;
  for (int l = levels - 1; l >= 0; --l) {
    const int half = n >> (l + 1);
    Eigen::VectorXd approx = out.head(half);
    Eigen::VectorXd detail = out.segment(half, half);
    for (int i = 0; i < half; ++i) {
      out[2 * i] = (approx[i] + detail[i]) * inv_sqrt2;
      out[2 * i + 1] = (approx[i] - detail[i]) * inv_sqrt2;
    }
  }
  return out;
}

}  // namespace dpz
