#pragma once

// Brute-force reference computations used only by tests. None of these call
// into the library's numerical paths.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace gpac::oracle {

using Rows = std::vector<std::vector<double>>;

/// Rank by Gaussian elimination with partial pivoting and a relative cutoff
/// against the largest absolute entry.
inline std::size_t elimination_rank(Rows a, double rel_tol = 1e-9) {
  double scale = 0.0;
  for (const auto& r : a) {
    for (double x : r) scale = std::max(scale, std::fabs(x));
  }
  if (scale == 0.0) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    }
    if (std::fabs(a[piv][c]) <= rel_tol * scale) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const double f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Norm of the component of `target` orthogonal to span(vectors), by
/// modified Gram-Schmidt.
inline double projection_residual(const std::vector<std::vector<double>>& vectors,
                                  std::vector<double> target) {
  std::vector<std::vector<double>> q;
  auto dot = [](const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
  };
  for (auto v : vectors) {
    for (const auto& e : q) {
      const double p = dot(v, e);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= p * e[i];
    }
    const double n = std::sqrt(dot(v, v));
    if (n < 1e-12) continue;
    for (double& x : v) x /= n;
    q.push_back(std::move(v));
  }
  for (const auto& e : q) {
    const double p = dot(target, e);
    for (std::size_t i = 0; i < target.size(); ++i) target[i] -= p * e[i];
  }
  return std::sqrt(dot(target, target));
}

/// Kronecker product straight from the index definition
/// K[i1*r2 + i2][j1*c2 + j2] = A[i1][j1] * B[i2][j2].
inline Rows kronecker(const Rows& a, const Rows& b) {
  const std::size_t r1 = a.size(), c1 = a[0].size(), r2 = b.size(), c2 = b[0].size();
  Rows k(r1 * r2, std::vector<double>(c1 * c2));
  for (std::size_t i1 = 0; i1 < r1; ++i1)
    for (std::size_t j1 = 0; j1 < c1; ++j1)
      for (std::size_t i2 = 0; i2 < r2; ++i2)
        for (std::size_t j2 = 0; j2 < c2; ++j2) k[i1 * r2 + i2][j1 * c2 + j2] = a[i1][j1] * b[i2][j2];
  return k;
}

inline std::uint64_t binomial(unsigned n, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// sum_{k>=2} C(n, k): the number of index subsets with at least two members.
inline std::uint64_t subsets_of_size_at_least_two(unsigned n) {
  std::uint64_t total = 0;
  for (unsigned k = 2; k <= n; ++k) total += binomial(n, k);
  return total;
}

/// P(|Bin(m, 1/2)/m - 1/2| <= eps) by enumerating outcomes.
inline double bernoulli_half_within(unsigned m, double eps) {
  double hit = 0.0;
  for (unsigned k = 0; k <= m; ++k) {
    if (std::fabs(static_cast<double>(k) / m - 0.5) <= eps) {
      hit += std::exp(std::lgamma(m + 1.0) - std::lgamma(k + 1.0) - std::lgamma(m - k + 1.0) -
                      m * std::log(2.0));
    }
  }
  return hit;
}

inline Rows random_rows(std::mt19937_64& gen, std::size_t r, std::size_t c, double lo = -1.0,
                        double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Rows m(r, std::vector<double>(c));
  for (auto& row : m)
    for (double& x : row) x = dist(gen);
  return m;
}

}  // namespace gpac::oracle
