#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "polysse/factor/factorization.hpp"
#include "polysse/matrix/algorithms.hpp"
#include "polysse/sse/verify.hpp"

namespace polysse {

/// (u, v): from = u*v and to = v*u.
template <Ring R>
struct ElementaryStep {
  Matrix<R> u;
  Matrix<R> v;
  Matrix<R> from;
  Matrix<R> to;
};

/// source = A_0 ~ A_1 ~ ... ~ A_lag = core, one elementary step per link.
template <Ring R>
struct SseChain {
  Matrix<R> source;
  Matrix<R> core;
  std::vector<ElementaryStep<R>> steps;
  std::size_t lag = 0;
};

/// a*u = u*b, v*a = b*v, a^lag = u*v, b^lag = v*u.
template <Ring R>
struct ShiftEquivalence {
  Matrix<R> u;
  Matrix<R> v;
  std::size_t lag = 0;
};

/// The factorization loop reached a zero core after `lag` steps, so
/// source^(lag+1) = 0.
template <Ring R>
struct NilpotencyWitness {
  std::size_t lag = 0;
  SseChain<R> chain;
};

template <Ring R>
using SseOutcome = std::variant<SseChain<R>, NilpotencyWitness<R>>;

template <Ring R>
VerificationReport verify_elementary(const ElementaryStep<R>& step) {
  if (step.u.cols() != step.v.rows() || step.v.cols() != step.u.rows()) {
    throw DimensionMismatch("elementary step factors " + step.u.shape() + " and " + step.v.shape() +
                            " do not compose");
  }
  VerificationReport report;
  report.checks.push_back(compare("from = U*V", step.u * step.v, step.from));
  report.checks.push_back(compare("to = V*U", step.v * step.u, step.to));
  return report;
}

/// Never throws; shape problems are reported as failed checks.
template <Ring R>
VerificationReport verify_sse_chain(const SseChain<R>& chain) {
  VerificationReport report;
  Check lag{"lag = number of steps", chain.lag == chain.steps.size(), std::nullopt, std::nullopt, {}};
  if (!lag.passed) {
    lag.detail = "lag " + std::to_string(chain.lag) + " but " + std::to_string(chain.steps.size()) + " steps";
  }
  report.checks.push_back(std::move(lag));
  if (chain.steps.empty()) {
    report.checks.push_back(compare("source = core", chain.source, chain.core));
    return report;
  }
  report.checks.push_back(compare("A_0 = source", chain.steps.front().from, chain.source, std::size_t{1}));
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    const ElementaryStep<R>& s = chain.steps[i];
    const std::size_t step = i + 1;
    auto uv = try_multiply(s.u, s.v);
    auto vu = try_multiply(s.v, s.u);
    if (!uv || !vu) {
      report.checks.push_back({"U*V and V*U defined", false, step, std::nullopt,
                               "factors " + s.u.shape() + " and " + s.v.shape() + " do not compose"});
      continue;
    }
    report.checks.push_back(compare("A_{i-1} = U_i*V_i", *uv, s.from, step));
    report.checks.push_back(compare("V_i*U_i = A_i", *vu, s.to, step));
    if (i + 1 < chain.steps.size()) {
      report.checks.push_back(compare("link A_i", s.to, chain.steps[i + 1].from, step));
    }
  }
  report.checks.push_back(compare("A_l = core", chain.steps.back().to, chain.core, chain.steps.size()));
  return report;
}

template <Ring R>
VerificationReport verify_se(const Matrix<R>& a, const Matrix<R>& b, const Matrix<R>& u, const Matrix<R>& v,
                             std::size_t lag) {
  if (!a.is_square() || !b.is_square()) throw DimensionMismatch("shift equivalence needs square matrices");
  if (lag == 0) throw DomainError("shift equivalence lag must be at least 1");
  if (u.rows() != a.rows() || u.cols() != b.rows() || v.rows() != b.rows() || v.cols() != a.rows()) {
    throw DimensionMismatch("U must be " + std::to_string(a.rows()) + "x" + std::to_string(b.rows()) +
                            " and V " + std::to_string(b.rows()) + "x" + std::to_string(a.rows()) + ", got " +
                            u.shape() + " and " + v.shape());
  }
  VerificationReport report;
  report.checks.push_back(compare("AU = UB", a * u, u * b));
  report.checks.push_back(compare("VA = BV", v * a, b * v));
  report.checks.push_back(compare("A^l = UV", mat_pow(a, lag), u * v));
  report.checks.push_back(compare("B^l = VU", mat_pow(b, lag), v * u));
  return report;
}

/// U_1 * ... * U_l and V_l * ... * V_1.
template <Ring R>
std::pair<Matrix<R>, Matrix<R>> chain_products(const SseChain<R>& chain) {
  Matrix<R> u = Matrix<R>::identity(chain.source.rows());
  Matrix<R> v = Matrix<R>::identity(chain.source.rows());
  for (const ElementaryStep<R>& s : chain.steps) {
    u = u * s.u;
    v = s.v * v;
  }
  return {std::move(u), std::move(v)};
}

/// a^l = (U_1...U_l)(V_l...V_1) and a^(l+1) = (U_1...U_l) core (V_l...V_1).
template <Ring R>
VerificationReport power_chain_identity(const Matrix<R>& a, const SseChain<R>& chain) {
  VerificationReport report;
  const auto [u, v] = chain_products(chain);
  report.checks.push_back(compare("A^l = U_1..U_l V_l..V_1", mat_pow(a, chain.lag), u * v));
  report.checks.push_back(compare("A^(l+1) = U_1..U_l core V_l..V_1", mat_pow(a, chain.lag + 1), u * chain.core * v));
  return report;
}

template <Ring R>
VerificationReport verify_nilpotency(const NilpotencyWitness<R>& w) {
  VerificationReport report = verify_sse_chain(w.chain);
  Check lag{"witness lag = chain lag", w.lag == w.chain.lag, std::nullopt, std::nullopt, {}};
  report.checks.push_back(std::move(lag));
  report.checks.push_back({"core = 0", w.chain.core.is_zero(), std::nullopt, std::nullopt, {}});
  const Matrix<R>& a = w.chain.source;
  if (a.is_square()) {
    report.checks.push_back(compare("A^(l+1) = 0", mat_pow(a, w.lag + 1), Matrix<R>::zero(a.rows(), a.cols())));
  } else {
    report.checks.push_back({"A^(l+1) = 0", false, std::nullopt, std::nullopt, "source is not square"});
  }
  return report;
}

/// Least k >= 1 with rank(a^k) = rank(a^(k+1)).
template <FractionFieldRing R>
std::size_t lag_index(const Matrix<R>& a) {
  if (!a.is_square()) throw DimensionMismatch("lag index of a non-square matrix");
  Matrix<R> power = a;
  std::size_t current = rank(power);
  for (std::size_t k = 1;; ++k) {
    power = power * a;
    const std::size_t next = rank(power);
    if (next == current) return k;
    current = next;
  }
}

/// Iterates full rank factorizations A = B_1 C_1, C_1 B_1 = B_2 C_2, ... until
/// C_l B_l is nonsingular (a verified chain of lag l) or zero (a nilpotency
/// witness). A zero input gives a witness with lag 0.
template <CoefficientDomain C>
SseOutcome<Polynomial<C>> sse_to_nonsingular(const PolyMatrix<C>& a);

/// Composes a verified chain of lag >= 1 into a shift equivalence between its
/// source and core. Throws Error if the chain or the result does not verify.
template <Ring R>
ShiftEquivalence<R> compose_chain_to_se(const SseChain<R>& chain) {
  if (chain.lag == 0) throw DomainError("composition needs a chain of lag at least 1");
  const VerificationReport chain_report = verify_sse_chain(chain);
  if (!chain_report.ok()) throw Error("cannot compose an unverified chain: " + chain_report.first_failure()->identity);
  auto [u, v] = chain_products(chain);
  ShiftEquivalence<R> se{std::move(u), std::move(v), chain.lag};
  const VerificationReport report = verify_se(chain.source, chain.core, se.u, se.v, se.lag);
  if (!report.ok()) throw Error("composed pair fails " + report.first_failure()->identity);
  return se;
}

}  // namespace polysse
