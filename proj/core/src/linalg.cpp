#include "gpac/linalg.hpp"

#include <algorithm>

namespace gpac {

std::vector<double> singular_values(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return {};
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

std::size_t numeric_rank(const std::vector<double>& sigma, double tol) noexcept {
  if (sigma.empty() || !(sigma.front() > 0.0)) return 0;
  const double cutoff = tol * sigma.front();
  return static_cast<std::size_t>(
      std::count_if(sigma.begin(), sigma.end(), [cutoff](double s) { return s > cutoff; }));
}

}  // namespace gpac
