#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace gpac {

/// Relative singular-value cutoff used for every rank decision.
inline constexpr double kRankTolerance = 1e-9;

/// Singular values in decreasing order (empty for an empty matrix).
std::vector<double> singular_values(const Eigen::MatrixXd& m);

/// Count of singular values strictly above tol * largest; zero when the
/// largest is zero.
std::size_t numeric_rank(const std::vector<double>& sigma, double tol = kRankTolerance) noexcept;

inline std::size_t numeric_rank(const Eigen::MatrixXd& m, double tol = kRankTolerance) {
  return numeric_rank(singular_values(m), tol);
}

}  // namespace gpac
