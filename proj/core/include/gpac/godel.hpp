#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "gpac/linalg.hpp"

namespace gpac {

/// Coefficients lambda_ij of a tensor object sum_ij lambda_ij B_i (x) A_j.
/// Rows index the B-side basis, columns the A-side basis.
class CoefficientMatrix {
 public:
  /// Labels default to B1..Bp and A1..Aq.
  explicit CoefficientMatrix(Eigen::MatrixXd entries);
  CoefficientMatrix(Eigen::MatrixXd entries, std::vector<std::string> row_labels,
                    std::vector<std::string> col_labels);

  const Eigen::MatrixXd& entries() const noexcept { return entries_; }
  const std::vector<std::string>& row_labels() const noexcept { return row_labels_; }
  const std::vector<std::string>& col_labels() const noexcept { return col_labels_; }
  std::size_t rows() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  std::size_t cols() const noexcept { return static_cast<std::size_t>(entries_.cols()); }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

 private:
  Eigen::MatrixXd entries_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

enum class Separability { Separable, Entangled };

std::string_view to_string(Separability s) noexcept;

struct SeparabilityVerdict {
  Separability kind = Separability::Separable;
  std::size_t numeric_rank = 0;
  std::vector<double> singular_values;
  /// ad - bc, reported for 2x2 inputs only.
  std::optional<double> determinant;
  /// For 2x2: whether |det| <= tol * sigma_max^2 matches the rank verdict.
  /// Always true otherwise.
  bool criteria_agree = true;
};

/// Rank-1 (product form) test via singular values with a relative cutoff.
SeparabilityVerdict separability_test(const CoefficientMatrix& m, double tol = kRankTolerance);

/// The 2x2 determinant criterion on its own: separable iff
/// |ad - bc| <= tol * sigma_max^2. Throws DimensionMismatch unless 2x2.
bool determinant_separable(const CoefficientMatrix& m, double tol = kRankTolerance);

struct GodelConstruction {
  CoefficientMatrix input;
  double pivot;
  double swap_value;
  CoefficientMatrix output;
};

/// Diagonal construction: mu_ij = pivot where lambda_ij != pivot, otherwise
/// swap_value. pivot is lambda_11; swap_value is lambda_22 when it exists and
/// differs from the pivot, else the first row-major entry that differs.
/// Throws AllEqual for a constant matrix.
GodelConstruction construct_godel(const CoefficientMatrix& m);

/// 2^n - n - 1 for n >= 2, 0 for n <= 1. Throws Overflow past 64 bits.
std::uint64_t godel_dimension(unsigned n);

inline constexpr unsigned kEnumerationBudget = 24;

struct EnumerationResult {
  std::uint64_t count = 0;
  bool verified = false;
};

/// Enumerates all subsets of n basis indices, and for every subset of size
/// k >= 2 places the k-term identity pattern on those indices and checks it
/// is entangled with numeric rank k. `verified` additionally requires the
/// count to equal godel_dimension(n). The result does not depend on `threads`.
EnumerationResult enumerate_entangled_dimension(unsigned n, unsigned threads = 1);

}  // namespace gpac
