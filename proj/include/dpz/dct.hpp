#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace dpz {

// Orthonormal DCT-II basis for length n, cached per length. B is orthogonal,
// so the inverse transform is B^T and Parseval holds to round-off.
inline const Eigen::MatrixXd& dct_basis(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Eigen::MatrixXd>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  auto basis = std::make_unique<Eigen::MatrixXd>(n, n);
  const double pi = 3.14159265358979323846;
  for (int k = 0; k < n; ++k) {
    const double s = (k == 0) ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n);
    for (int t = 0; t < n; ++t)
      (*basis)(k, t) = s * std::cos(pi * (2 * t + 1) * k / (2.0 * n));
  }
  auto& ref = *basis;
  cache.emplace(n, std::move(basis));
  return ref;
}

inline Eigen::VectorXd dct_channel(const Eigen::VectorXd& x) {
  return dct_basis(static_cast<int>(x.size())) * x;
}

inline Eigen::VectorXd idct_channel(const Eigen::VectorXd& d) {
  return dct_basis(static_cast<int>(d.size())).transpose() * d;
}

// Per-row DCT of an M x N matrix (rows are channels, transform along time).
inline Eigen::MatrixXd dct_rows(const Eigen::MatrixXd& e) {
  return e * dct_basis(static_cast<int>(e.cols())).transpose();
}

inline Eigen::MatrixXd idct_rows(const Eigen::MatrixXd& d) {
  return d * dct_basis(static_cast<int>(d.cols()));
}

}  // namespace dpz
