#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gpac/linalg.hpp"
#include "gpac/spectra.hpp"

namespace gpac {

/// A finite linear operator from raw information vectors (length in_dim())
/// to spectra over `out_scale` (length out_dim()).
class Interpreter {
 public:
  /// Output scale defaults to the ordinal grid 1..rows.
  Interpreter(std::string label, Eigen::MatrixXd matrix);
  /// Throws DimensionMismatch when out_scale does not match the row count,
  /// NonFiniteInput for NaN/inf entries.
  Interpreter(std::string label, Eigen::MatrixXd matrix, CardinalScale out_scale);

  static Interpreter identity(std::size_t n, std::string label = "identity");

  const std::string& label() const noexcept { return label_; }
  const Eigen::MatrixXd& matrix() const noexcept { return matrix_; }
  const CardinalScale& out_scale() const noexcept { return out_scale_; }
  std::size_t in_dim() const noexcept { return static_cast<std::size_t>(matrix_.cols()); }
  std::size_t out_dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }

 private:
  std::string label_;
  Eigen::MatrixXd matrix_;
  CardinalScale out_scale_;
};

/// Spectrum over h.out_scale() with mass = matrix * info.
Spectrum apply(const Interpreter& h, std::span<const double> info);

/// sum_k coeffs[k] * hs[k]; the result uses the first interpreter's scale.
Interpreter linear_combine(std::span<const double> coeffs, std::span<const Interpreter> hs);

/// Operator on operator: the matrix product b * h (apply h first, then b).
Interpreter compose(const Interpreter& b, const Interpreter& h);

/// Kronecker product; index (i1, i2) maps to i1 * dim2 + i2. The output scale
/// is the ordinal grid 1..rows.
Interpreter tensor(const Interpreter& h1, const Interpreter& h2);

/// Ordered generating set of interpreters with shared dimensions. Whether the
/// flattened matrices are linearly independent is recorded, not enforced, so
/// redundant axiom sets can still be checked for completeness.
class InterpreterSpace {
 public:
  /// Throws EmptyCombination for an empty basis and DimensionMismatch for
  /// mixed shapes.
  explicit InterpreterSpace(std::vector<Interpreter> basis);

  /// Builds the space and throws NotInSpan when a basis element depends on
  /// the others.
  static InterpreterSpace independent(std::vector<Interpreter> basis);

  const std::vector<Interpreter>& basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  std::size_t in_dim() const noexcept { return basis_.front().in_dim(); }
  std::size_t out_dim() const noexcept { return basis_.front().out_dim(); }
  /// Rank of the flattened basis equals its size (within kRankTolerance).
  bool is_independent() const noexcept { return independent_; }

 private:
  std::vector<Interpreter> basis_;
  bool independent_ = false;
};

/// Least-squares coordinates of h in the basis (one of many when the basis is
/// dependent). Throws NotInSpan when the relative residual exceeds
/// kRankTolerance.
std::vector<double> coordinates(const InterpreterSpace& space, const Interpreter& h);

struct CompletenessVerdict {
  bool complete = false;
  /// Zero-based index of the first basis element whose image depends on the
  /// images of its predecessors; set only when incomplete.
  std::optional<std::size_t> witness;
  std::size_t image_rank = 0;
};

/// Complete iff the images of `info` under every basis element are linearly
/// independent.
CompletenessVerdict check_completeness(const InterpreterSpace& space,
                                       std::span<const double> info);

}  // namespace gpac
