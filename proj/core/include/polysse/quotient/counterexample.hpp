#pragma once

#include "polysse/matrix/algorithms.hpp"
#include "polysse/matrix/matrix.hpp"
#include "polysse/quotient/tri_polynomial.hpp"
#include "polysse/ring/polynomial.hpp"
#include "polysse/sse/verify.hpp"

namespace polysse {

using TriMatrix = Matrix<TriPolynomial>;
using SphereMatrix = Matrix<QuotientElement>;

/// The skew-symmetric matrix [[0, z, -y], [-z, 0, x], [y, -x, 0]].
TriMatrix counterexample_matrix();

/// The row vector (x, y, z).
TriMatrix counterexample_alpha();

SphereMatrix reduce_matrix(const TriMatrix& m);

struct CounterexampleReport {
  /// Always six checks, in a fixed order.
  VerificationReport checks;

  TriMatrix cubic_defect;                     // A^3 + (x^2+y^2+z^2) A
  SphereMatrix phi_a4;                        // reduction of A^4
  SphereMatrix idempotence_defect;            // phi(A^4)^2 - phi(A^4)
  Polynomial<QuotientElement> char_poly;      // det(I - t phi(A^4))
  SphereMatrix alpha_phi_a4;                  // (x, y, z) phi(A^4)
  QuotientElement trace;                      // trace of phi(A^4)

  bool ok() const { return checks.ok(); }
};

CounterexampleReport verify_counterexample();

}  // namespace polysse
