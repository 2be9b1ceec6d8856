#include "gpac/interpreters.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gpac/error.hpp"

namespace gpac {

namespace {

std::string shape(const Eigen::MatrixXd& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

Eigen::VectorXd as_vector(std::span<const double> v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

Eigen::VectorXd flatten(const Eigen::MatrixXd& m) {
  return Eigen::Map<const Eigen::VectorXd>(m.data(), m.size());
}

// Columns are the flattened basis matrices.
Eigen::MatrixXd basis_columns(const std::vector<Interpreter>& basis) {
  const auto n = basis.front().matrix().size();
  Eigen::MatrixXd a(n, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    a.col(static_cast<Eigen::Index>(k)) = flatten(basis[k].matrix());
  }
  return a;
}

}  // namespace

Interpreter::Interpreter(std::string label, Eigen::MatrixXd matrix)
    : Interpreter(std::move(label), matrix, CardinalScale::ordinal(static_cast<std::size_t>(
                                                std::max<Eigen::Index>(matrix.rows(), 1)))) {}

Interpreter::Interpreter(std::string label, Eigen::MatrixXd matrix, CardinalScale out_scale)
    : label_(std::move(label)), matrix_(std::move(matrix)), out_scale_(std::move(out_scale)) {
  if (matrix_.rows() == 0 || matrix_.cols() == 0) {
    throw Error(Errc::DimensionMismatch, "interpreter '" + label_ + "' has an empty matrix");
  }
  if (static_cast<std::size_t>(matrix_.rows()) != out_scale_.size()) {
    throw Error(Errc::DimensionMismatch, "interpreter '" + label_ + "' has " +
                                             std::to_string(matrix_.rows()) + " rows but " +
                                             std::to_string(out_scale_.size()) + " scale points");
  }
  if (!matrix_.allFinite()) {
    throw Error(Errc::NonFiniteInput, "interpreter '" + label_ + "' has non-finite entries");
  }
}

Interpreter Interpreter::identity(std::size_t n, std::string label) {
  const auto k = static_cast<Eigen::Index>(n);
  return Interpreter(std::move(label), Eigen::MatrixXd::Identity(k, k));
}

Spectrum apply(const Interpreter& h, std::span<const double> info) {
  if (info.size() != h.in_dim()) {
    throw Error(Errc::DimensionMismatch, "interpreter '" + h.label() + "' expects " +
                                             std::to_string(h.in_dim()) + " inputs, got " +
                                             std::to_string(info.size()));
  }
  for (double x : info) {
    if (!std::isfinite(x)) throw Error(Errc::NonFiniteInput, "information entry is not finite");
  }
  const Eigen::VectorXd out = h.matrix() * as_vector(info);
  return Spectrum(h.out_scale(), std::vector<double>(out.data(), out.data() + out.size()));
}

Interpreter linear_combine(std::span<const double> coeffs, std::span<const Interpreter> hs) {
  if (hs.empty()) throw Error(Errc::EmptyCombination, "no interpreters to combine");
  if (coeffs.size() != hs.size()) {
    throw Error(Errc::DimensionMismatch, "coefficient and interpreter counts differ");
  }
  const auto& first = hs.front().matrix();
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(first.rows(), first.cols());
  std::string label;
  for (std::size_t k = 0; k < hs.size(); ++k) {
    const auto& m = hs[k].matrix();
    if (m.rows() != first.rows() || m.cols() != first.cols()) {
      throw Error(Errc::DimensionMismatch, "cannot combine " + shape(first) + " with " + shape(m));
    }
    acc += coeffs[k] * m;
    if (k > 0) label += " + ";
    label += std::to_string(coeffs[k]) + "*" + hs[k].label();
  }
  return Interpreter(std::move(label), std::move(acc), hs.front().out_scale());
}

Interpreter compose(const Interpreter& b, const Interpreter& h) {
  if (b.in_dim() != h.out_dim()) {
    throw Error(Errc::DimensionMismatch,
                "cannot compose " + shape(b.matrix()) + " after " + shape(h.matrix()));
  }
  return Interpreter(b.label() + " o " + h.label(), b.matrix() * h.matrix(), b.out_scale());
}

Interpreter tensor(const Interpreter& h1, const Interpreter& h2) {
  const auto& a = h1.matrix();
  const auto& b = h2.matrix();
  Eigen::MatrixXd k(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return Interpreter(h1.label() + " (x) " + h2.label(), std::move(k));
}

InterpreterSpace::InterpreterSpace(std::vector<Interpreter> basis) : basis_(std::move(basis)) {
  if (basis_.empty()) throw Error(Errc::EmptyCombination, "interpreter space needs a basis");
  const auto& first = basis_.front().matrix();
  for (const auto& h : basis_) {
    if (h.matrix().rows() != first.rows() || h.matrix().cols() != first.cols()) {
      throw Error(Errc::DimensionMismatch, "basis mixes " + shape(first) + " and " +
                                               shape(h.matrix()) + " interpreters");
    }
  }
  independent_ = numeric_rank(basis_columns(basis_)) == basis_.size();
}

InterpreterSpace InterpreterSpace::independent(std::vector<Interpreter> basis) {
  InterpreterSpace space(std::move(basis));
  if (!space.is_independent()) {
    throw Error(Errc::NotInSpan, "basis interpreters are linearly dependent");
  }
  return space;
}

std::vector<double> coordinates(const InterpreterSpace& space, const Interpreter& h) {
  if (h.in_dim() != space.in_dim() || h.out_dim() != space.out_dim()) {
    throw Error(Errc::DimensionMismatch, "interpreter shape " + shape(h.matrix()) +
                                             " does not match the space");
  }
  const Eigen::MatrixXd a = basis_columns(space.basis());
  const Eigen::VectorXd target = flatten(h.matrix());
  const Eigen::VectorXd c = a.colPivHouseholderQr().solve(target);
  const double residual = (a * c - target).norm();
  if (residual > kRankTolerance * target.norm()) {
    throw Error(Errc::NotInSpan, "interpreter '" + h.label() + "' is outside the span (residual " +
                                     std::to_string(residual) + ")");
  }
  return {c.data(), c.data() + c.size()};
}

CompletenessVerdict check_completeness(const InterpreterSpace& space,
                                       std::span<const double> info) {
  if (info.size() != space.in_dim()) {
    throw Error(Errc::DimensionMismatch, "information vector has " + std::to_string(info.size()) +
                                             " entries, space expects " +
                                             std::to_string(space.in_dim()));
  }
  const Eigen::VectorXd x = as_vector(info);
  const auto& basis = space.basis();
  Eigen::MatrixXd images(static_cast<Eigen::Index>(space.out_dim()),
                         static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    images.col(static_cast<Eigen::Index>(k)) = basis[k].matrix() * x;
  }

  CompletenessVerdict verdict;
  verdict.image_rank = numeric_rank(images);
  verdict.complete = verdict.image_rank == basis.size();
  if (!verdict.complete) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (numeric_rank(images.leftCols(static_cast<Eigen::Index>(k + 1))) < k + 1) {
        verdict.witness = k;
        break;
      }
    }
    if (!verdict.witness) verdict.witness = basis.size() - 1;
  }
  return verdict;
}

}  // namespace gpac
