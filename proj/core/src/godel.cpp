#include "gpac/godel.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <thread>

#include "gpac/error.hpp"

namespace gpac {

namespace {

std::vector<std::string> numbered(char prefix, Eigen::Index n) {
  std::vector<std::string> out;
  for (Eigen::Index i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

struct SubsetTally {
  std::uint64_t count = 0;
  bool all_entangled = true;
};

SubsetTally tally_subsets(unsigned n, std::uint64_t first, std::uint64_t last) {
  SubsetTally t;
  const auto dim = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd generator(dim, dim);
  for (std::uint64_t mask = first; mask < last; ++mask) {
    const auto k = static_cast<std::size_t>(std::popcount(mask));
    if (k < 2) continue;
    ++t.count;
    generator.setZero();
    for (unsigned i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) generator(i, i) = 1.0;
    }
    const auto verdict = separability_test(CoefficientMatrix(generator));
    if (verdict.kind != Separability::Entangled || verdict.numeric_rank != k) {
      t.all_entangled = false;
    }
  }
  return t;
}

}  // namespace

CoefficientMatrix::CoefficientMatrix(Eigen::MatrixXd entries)
    : CoefficientMatrix(entries, numbered('B', entries.rows()), numbered('A', entries.cols())) {}

CoefficientMatrix::CoefficientMatrix(Eigen::MatrixXd entries, std::vector<std::string> row_labels,
                                     std::vector<std::string> col_labels)
    : entries_(std::move(entries)),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)) {
  if (entries_.rows() < 1 || entries_.cols() < 1) {
    throw Error(Errc::DimensionMismatch, "coefficient matrix must be at least 1x1");
  }
  if (!entries_.allFinite()) {
    throw Error(Errc::NonFiniteInput, "coefficient matrix has non-finite entries");
  }
  if (row_labels_.size() != rows() || col_labels_.size() != cols()) {
    throw Error(Errc::DimensionMismatch, "label counts do not match matrix dimensions");
  }
}

std::string_view to_string(Separability s) noexcept {
  return s == Separability::Separable ? "Separable" : "Entangled";
}

bool determinant_separable(const CoefficientMatrix& m, double tol) {
  if (m.rows() != 2 || m.cols() != 2) {
    throw Error(Errc::DimensionMismatch, "determinant criterion needs a 2x2 matrix");
  }
  const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  const auto sigma = singular_values(m.entries());
  return std::fabs(det) <= tol * sigma.front() * sigma.front();
}

SeparabilityVerdict separability_test(const CoefficientMatrix& m, double tol) {
  if (!(tol > 0.0)) throw Error(Errc::InvalidConfig, "tolerance must be positive");
  SeparabilityVerdict v;
  v.singular_values = singular_values(m.entries());
  v.numeric_rank = numeric_rank(v.singular_values, tol);
  v.kind = v.numeric_rank <= 1 ? Separability::Separable : Separability::Entangled;
  if (m.rows() == 2 && m.cols() == 2) {
    v.determinant = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    v.criteria_agree = determinant_separable(m, tol) == (v.kind == Separability::Separable);
  }
  return v;
}

GodelConstruction construct_godel(const CoefficientMatrix& m) {
  const double pivot = m(0, 0);
  std::optional<double> swap;
  if (m.rows() >= 2 && m.cols() >= 2 && m(1, 1) != pivot) swap = m(1, 1);
  for (std::size_t i = 0; i < m.rows() && !swap; ++i) {
    for (std::size_t j = 0; j < m.cols() && !swap; ++j) {
      if (m(i, j) != pivot) swap = m(i, j);
    }
  }
  if (!swap) throw Error(Errc::AllEqual, "every coefficient equals lambda_11");

  Eigen::MatrixXd mu(m.entries().rows(), m.entries().cols());
  for (Eigen::Index i = 0; i < mu.rows(); ++i) {
    for (Eigen::Index j = 0; j < mu.cols(); ++j) {
      mu(i, j) = m.entries()(i, j) != pivot ? pivot : *swap;
    }
  }
  return {m, pivot, *swap, CoefficientMatrix(std::move(mu), m.row_labels(), m.col_labels())};
}

std::uint64_t godel_dimension(unsigned n) {
  if (n <= 1) return 0;
  if (n >= 64) throw Error(Errc::Overflow, "2^" + std::to_string(n) + " exceeds 64 bits");
  return (std::uint64_t{1} << n) - n - 1;
}

EnumerationResult enumerate_entangled_dimension(unsigned n, unsigned threads) {
  if (n > kEnumerationBudget) {
    throw Error(Errc::BudgetExceeded, "enumeration is limited to n <= " +
                                          std::to_string(kEnumerationBudget));
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint64_t workers = std::clamp<std::uint64_t>(threads, 1, total);
  std::vector<SubsetTally> parts(workers);
  if (workers == 1) {
    parts[0] = tally_subsets(n, 0, total);
  } else {
    const std::uint64_t chunk = (total + workers - 1) / workers;
    std::vector<std::jthread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t first = std::min(total, w * chunk);
      const std::uint64_t last = std::min(total, first + chunk);
      pool.emplace_back([&parts, n, w, first, last] { parts[w] = tally_subsets(n, first, last); });
    }
  }
  EnumerationResult r;
  bool all = true;
  for (const auto& p : parts) {
    r.count += p.count;
    all = all && p.all_entangled;
  }
  r.verified = all && r.count == godel_dimension(n);
  return r;
}

}  // namespace gpac
