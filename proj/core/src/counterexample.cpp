#include "polysse/quotient/counterexample.hpp"

namespace polysse {

namespace {

Check scalar_check(std::string identity, bool passed, std::string detail = {}) {
  return {std::move(identity), passed, std::nullopt, std::nullopt, passed ? std::string() : std::move(detail)};
}

}  // namespace

TriMatrix counterexample_matrix() {
  const TriPolynomial x = TriPolynomial::variable(0);
  const TriPolynomial y = TriPolynomial::variable(1);
  const TriPolynomial z = TriPolynomial::variable(2);
  return TriMatrix{{0, z, -y}, {-z, 0, x}, {y, -x, 0}};
}

TriMatrix counterexample_alpha() {
  return TriMatrix{{TriPolynomial::variable(0), TriPolynomial::variable(1), TriPolynomial::variable(2)}};
}

SphereMatrix reduce_matrix(const TriMatrix& m) {
  return map_entries(m, [](const TriPolynomial& p) { return reduce_mod_sphere(p); });
}

CounterexampleReport verify_counterexample() {
  const TriMatrix a = counterexample_matrix();
  const TriMatrix alpha = counterexample_alpha();
  const TriPolynomial q = pow(TriPolynomial::variable(0), 2) + pow(TriPolynomial::variable(1), 2) +
                          pow(TriPolynomial::variable(2), 2);

  const TriMatrix a2 = a * a;
  const TriMatrix a3 = a2 * a;
  const TriMatrix a4 = a3 * a;

  CounterexampleReport r;
  r.cubic_defect = a3 + a.scaled(q);
  r.checks.checks.push_back(compare("A^3 = -(x^2+y^2+z^2) A", r.cubic_defect, TriMatrix::zero(3, 3)));

  r.phi_a4 = reduce_matrix(a4);
  const SphereMatrix rank_one_complement = SphereMatrix::identity(3) - reduce_matrix(alpha.transpose() * alpha);
  Check phi = compare("phi(A^4) = phi(-A^2) = I - alpha^T alpha", r.phi_a4, reduce_matrix(-a2));
  if (phi.passed) phi = compare(phi.identity, r.phi_a4, rank_one_complement);
  r.checks.checks.push_back(std::move(phi));

  r.idempotence_defect = r.phi_a4 * r.phi_a4 - r.phi_a4;
  r.checks.checks.push_back(compare("phi(A^4)^2 = phi(A^4)", r.idempotence_defect, SphereMatrix::zero(3, 3)));

  r.char_poly = char_poly_reversed(r.phi_a4);
  const Polynomial<QuotientElement> expected(std::vector<QuotientElement>{1, -2, 1});
  r.checks.checks.push_back(
      scalar_check("det(I - t phi(A^4)) = (1 - t)^2", r.char_poly == expected, "coefficients differ"));

  r.alpha_phi_a4 = reduce_matrix(alpha) * r.phi_a4;
  r.checks.checks.push_back(compare("alpha phi(A^4) = 0", r.alpha_phi_a4, SphereMatrix::zero(1, 3)));

  r.trace = r.phi_a4(0, 0) + r.phi_a4(1, 1) + r.phi_a4(2, 2);
  r.checks.checks.push_back(scalar_check("trace phi(A^4) = 2", r.trace == QuotientElement(2), "trace differs"));
  return r;
}

}  // namespace polysse
