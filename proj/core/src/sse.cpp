#include "polysse/sse/sse.hpp"

namespace polysse {

template <CoefficientDomain C>
SseOutcome<Polynomial<C>> sse_to_nonsingular(const PolyMatrix<C>& a) {
  using R = Polynomial<C>;
  if (!a.is_square()) throw DimensionMismatch("strong shift equivalence needs a square matrix, got " + a.shape());

  SseChain<R> chain{a, a, {}, 0};
  if (a.is_zero()) return NilpotencyWitness<R>{0, std::move(chain)};

  PolyMatrix<C> current = a;
  for (;;) {
    FullRankFactorization<C> f = full_rank_factorization(current);
    PolyMatrix<C> next = f.q * f.p;
    const bool singular = !is_nonsingular(next);
    if (singular && !next.is_zero() && next.rows() >= current.rows()) {
      throw Error("internal error: factorization loop did not shrink a singular matrix");
    }
    chain.steps.push_back({std::move(f.p), std::move(f.q), std::move(current), next});
    chain.lag = chain.steps.size();
    chain.core = next;
    current = std::move(next);

    if (current.is_zero() && current.rows() > 0) {
      NilpotencyWitness<R> w{chain.lag, std::move(chain)};
      if (!verify_nilpotency(w).ok()) throw Error("internal error: nilpotency witness failed verification");
      return w;
    }
    if (!singular) {
      if (!verify_sse_chain(chain).ok()) throw Error("internal error: chain failed verification");
      return chain;
    }
  }
}

template SseOutcome<ZPoly> sse_to_nonsingular(const ZMatrix&);
template SseOutcome<QPoly> sse_to_nonsingular(const QMatrix&);

}  // namespace polysse
