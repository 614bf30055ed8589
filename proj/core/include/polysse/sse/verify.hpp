#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polysse/matrix/matrix.hpp"

namespace polysse {

/// Outcome of one checked identity.
struct Check {
  std::string identity;
  bool passed = false;
  std::optional<std::size_t> step;  // chain step (1-based), when relevant
  std::optional<std::pair<std::size_t, std::size_t>> entry;  // first differing entry
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;

  bool ok() const {
    for (const Check& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }

  const Check* first_failure() const {
    for (const Check& c : checks) {
      if (!c.passed) return &c;
    }
    return nullptr;
  }
};

/// Compares two matrices and records the first differing entry or a shape
/// mismatch.
template <Ring R>
Check compare(std::string identity, const Matrix<R>& lhs, const Matrix<R>& rhs,
              std::optional<std::size_t> step = std::nullopt) {
  Check c{std::move(identity), true, step, std::nullopt, {}};
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    c.passed = false;
    c.detail = "shape " + lhs.shape() + " vs " + rhs.shape();
    return c;
  }
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t j = 0; j < lhs.cols(); ++j) {
      if (!(lhs(i, j) == rhs(i, j))) {
        c.passed = false;
        c.entry = std::make_pair(i, j);
        c.detail = "entries differ at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
        return c;
      }
    }
  }
  return c;
}

/// Product that reports a shape failure instead of throwing.
template <Ring R>
std::optional<Matrix<R>> try_multiply(const Matrix<R>& a, const Matrix<R>& b) {
  if (a.cols() != b.rows()) return std::nullopt;
  return a * b;
}

}  // namespace polysse
