// Acceptance suite: one line per criterion, every comparison exact.

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "formats.hpp"
#include "polysse/quotient/counterexample.hpp"
#include "polysse/sse/sse.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

namespace {

using namespace polysse;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Everything the pipeline produced, shared by the later criteria.
struct Harvest {
  std::vector<ElementaryStep<QPoly>> q_steps;
  std::vector<ElementaryStep<ZPoly>> z_steps;
  std::vector<SseChain<QPoly>> q_chains;
  std::vector<SseChain<ZPoly>> z_chains;
};

template <class R>
Matrix<R> power(const Matrix<R>& a, std::size_t k) {
  Matrix<R> p = Matrix<R>::identity(a.rows());
  for (std::size_t i = 0; i < k; ++i) p = p * a;
  return p;
}

// Shared checks of criteria 1 and 2 for one input.
template <CoefficientDomain C>
void check_pipeline(const PolyMatrix<C>& a, const std::string& name, Outcome& out, Harvest& h,
                    std::map<std::string, int>& tally) {
  using R = Polynomial<C>;
  SseOutcome<R> result;
  try {
    result = sse_to_nonsingular(a);
  } catch (const FactorizationIncomplete& e) {
    out.require(false, name + ": FactorizationIncomplete: " + e.what());
    ++tally["incomplete"];
    return;
  }
  std::vector<ElementaryStep<R>>* steps;
  std::vector<SseChain<R>>* chains;
  if constexpr (std::is_same_v<C, Rational>) {
    steps = &h.q_steps;
    chains = &h.q_chains;
  } else {
    steps = &h.z_steps;
    chains = &h.z_chains;
  }
  if (const auto* chain = std::get_if<SseChain<R>>(&result)) {
    ++tally["chain"];
    out.require(verify_sse_chain(*chain).ok(), name + ": chain does not verify");
    out.require(!(oracle::leibniz_det(chain->core) == R(0)), name + ": core is singular");
    out.require(chain->lag == lag_index(a), name + ": lag differs from lag_index");
    out.require(chain->source == a, name + ": chain source differs from input");
    steps->insert(steps->end(), chain->steps.begin(), chain->steps.end());
    chains->push_back(*chain);
  } else {
    ++tally["nilpotent"];
    const auto& w = std::get<NilpotencyWitness<R>>(result);
    out.require(power(a, w.lag + 1) == Matrix<R>::zero(a.rows(), a.cols()), name + ": A^(l+1) != 0");
    out.require(verify_sse_chain(w.chain).ok(), name + ": witness chain does not verify");
    steps->insert(steps->end(), w.chain.steps.begin(), w.chain.steps.end());
  }
}

Outcome criterion_1(Harvest& h) {
  Outcome out;
  testing::Generator gen(0x51e1);
  const auto start = Clock::now();
  std::map<std::string, int> tally;
  std::map<std::size_t, int> ranks;
  const std::size_t samples = 250;
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t n = 1 + i % 5;
    const QMatrix a = gen.pipeline_sample<Rational>(n, i / 5);
    ++ranks[rank(a)];
    check_pipeline(a, "sample " + std::to_string(i), out, h, tally);
  }
  const double elapsed = seconds_since(start);
  out.require(elapsed < 60.0, "runtime " + std::to_string(elapsed) + " s exceeds 60 s");
  std::ostringstream s;
  s << samples << " matrices (" << tally["chain"] << " chains, " << tally["nilpotent"] << " nilpotent; ranks";
  for (const auto& [r, count] : ranks) s << ' ' << r << ':' << count;
  s << ") in " << std::fixed;
  s.precision(2);
  s << elapsed << " s";
  out.detail = s.str();
  return out;
}

Outcome criterion_2(Harvest& h) {
  Outcome out;
  std::map<std::string, int> tally;
  const auto& corpus = testing::integer_corpus();
  for (const auto& entry : corpus) {
    check_pipeline(testing::to_matrix<Integer>(entry), entry.name, out, h, tally);
  }
  const ZMatrix example = testing::to_matrix<Integer>(corpus[0]);
  const auto first = sse_to_nonsingular(example);
  const auto* chain = std::get_if<SseChain<ZPoly>>(&first);
  out.require(chain && chain->lag == 1 && chain->core == ZMatrix{{parse_zpoly("2*x")}},
              "[[x,x^2],[1,x]] does not give core [[2x]] with lag 1");
  const ZMatrix nil = testing::to_matrix<Integer>(corpus[1]);
  const auto second = sse_to_nonsingular(nil);
  const auto* witness = std::get_if<NilpotencyWitness<ZPoly>>(&second);
  out.require(witness && witness->lag == 1 && nil * nil == ZMatrix::zero(2, 2),
              "[[x,x^2],[-1,-x]] does not give a nilpotency witness with A^2 = 0");
  out.require(tally["incomplete"] == 0, std::to_string(tally["incomplete"]) + " FactorizationIncomplete outcomes");
  out.detail = std::to_string(corpus.size()) + " curated matrices (" + std::to_string(tally["chain"]) + " chains, " +
               std::to_string(tally["nilpotent"]) + " nilpotent), " + std::to_string(tally["incomplete"]) +
               " incomplete";
  return out;
}

template <class R>
void check_factorization(const ElementaryStep<R>& s, Outcome& out, std::size_t& brute_checked) {
  const std::size_t r = s.u.cols();
  out.require(s.u * s.v == s.from, "A != PQ");
  out.require(s.v.rows() == r, "P and Q have different inner dimension");
  const std::size_t ra = rank(s.from);
  out.require(rank(s.u) == r && rank(s.v) == r && ra == r, "fraction-field ranks differ from r");
  if (s.from.rows() <= 4) {
    ++brute_checked;
    out.require(oracle::brute_rank(s.u) == r && oracle::brute_rank(s.v) == r && oracle::brute_rank(s.from) == r,
                "brute-force ranks differ from r");
  }
}

Outcome criterion_3(const Harvest& h) {
  Outcome out;
  std::size_t brute = 0;
  for (const auto& s : h.q_steps) check_factorization(s, out, brute);
  for (const auto& s : h.z_steps) check_factorization(s, out, brute);
  out.detail = std::to_string(h.q_steps.size() + h.z_steps.size()) + " factorizations, " + std::to_string(brute) +
               " also by brute-force minors";
  return out;
}

template <CoefficientDomain C>
void check_lu(const PolyMatrix<C>& a, Outcome& out, std::size_t& count) {
  if (a.rows() > a.cols() || oracle::brute_rank(a) != a.rows() || a.rows() == 0) return;
  ++count;
  const LuFactorization<C> f = lu_gcd_factor(a);
  const Polynomial<C> g = oracle::gcd_all(oracle::maximal_minors(a));
  out.require(f.l * f.u == a, "L U != A");
  out.require(oracle::associates(oracle::leibniz_det(f.l), g), "det L is not an associate of the minor gcd");
  out.require(is_mlp(f.u) && oracle::is_unit(oracle::gcd_all(oracle::maximal_minors(f.u))), "U is not MLP");
}

Outcome criterion_4(const Harvest& h) {
  Outcome out;
  std::size_t count = 0;
  // Factors produced by the pipeline: Q has full row rank, and so does P^T.
  for (const auto& s : h.z_steps) {
    check_lu(s.v, out, count);
    check_lu(s.u.transpose(), out, count);
  }
  for (const auto& s : h.q_steps) {
    if (s.from.rows() > 3) continue;
    check_lu(s.v, out, count);
    check_lu(s.u.transpose(), out, count);
  }
  // Planted gcds: G * C with G square.
  testing::Generator gen(0x1a23);
  for (int i = 0; i < 60; ++i) {
    const std::size_t m = static_cast<std::size_t>(gen.uniform(1, 3));
    const std::size_t n = m + static_cast<std::size_t>(gen.uniform(0, 2));
    if (i % 2 == 0) {
      check_lu(gen.matrix<Integer>(m, m, 1, 3, 0) * gen.matrix<Integer>(m, n, 1), out, count);
    } else {
      check_lu(gen.matrix<Rational>(m, m, 1, 3, 0) * gen.matrix<Rational>(m, n, 1), out, count);
    }
  }
  out.detail = std::to_string(count) + " full row rank matrices";
  return out;
}

template <CoefficientDomain C>
bool check_certificate(testing::Generator& gen, Outcome& out) {
  const std::size_t m = static_cast<std::size_t>(gen.uniform(1, 3));
  const std::size_t n = static_cast<std::size_t>(gen.uniform(static_cast<int>(m), 5));
  const PolyMatrix<C> c = gen.matrix<C>(m, n, 2);
  if (!oracle::is_unit(oracle::gcd_all(oracle::maximal_minors(c)))) return false;
  const MlpCertificate<C> cert = mlp_certificate(c);
  std::vector<Polynomial<C>> ds;
  for (const auto& w : cert.witnesses) {
    out.require(c * w.z == PolyMatrix<C>::identity(m).scaled(w.d), "C Z_j != d_j I");
    ds.push_back(w.d);
  }
  out.require(!cert.witnesses.empty() && oracle::is_unit(oracle::gcd_all(ds)), "gcd of the d_j is not a unit");
  return true;
}

Outcome criterion_5() {
  Outcome out;
  testing::Generator gen(0xce27);
  int integer = 0;
  int rational = 0;
  while (integer < 50) integer += check_certificate<Integer>(gen, out) ? 1 : 0;
  while (rational < 50) rational += check_certificate<Rational>(gen, out) ? 1 : 0;
  out.detail = std::to_string(integer) + " over Z[x] and " + std::to_string(rational) + " over Q[x], sizes up to 3x5";
  return out;
}

template <class R>
void check_sylvester(const ElementaryStep<R>& s, Outcome& out) {
  const auto uv = char_poly_reversed(s.u * s.v);
  const auto vu = char_poly_reversed(s.v * s.u);
  out.require(uv == vu, "det(I - tUV) != det(I - tVU)");
  out.require(uv == oracle::reversed_char_poly(s.u * s.v) && vu == oracle::reversed_char_poly(s.v * s.u),
              "Berkowitz disagrees with Leibniz expansion");
}

Outcome criterion_6(const Harvest& h) {
  Outcome out;
  for (const auto& s : h.q_steps) check_sylvester(s, out);
  for (const auto& s : h.z_steps) check_sylvester(s, out);
  out.detail = std::to_string(h.q_steps.size() + h.z_steps.size()) + " elementary steps";
  return out;
}

template <CoefficientDomain C>
void check_binet_cauchy(testing::Generator& gen, Outcome& out, std::size_t& identities) {
  const auto dim = [&] { return static_cast<std::size_t>(gen.uniform(1, 4)); };
  const std::size_t m = dim();
  const std::size_t r = dim();
  const std::size_t n = dim();
  const PolyMatrix<C> l = gen.matrix<C>(m, r, 2);
  const PolyMatrix<C> u = gen.matrix<C>(r, n, 2);
  const PolyMatrix<C> lu = l * u;
  for (std::size_t t = 1; t <= std::min(m, n); ++t) {
    ++identities;
    const PolyMatrix<C> lhs = compound(lu, t);
    if (t <= r) {
      out.require(lhs == compound(l, t) * compound(u, t), "compound(LU) != compound(L) compound(U)");
    } else {
      out.require(lhs.is_zero(), "compound of order above the inner dimension is nonzero");
    }
    // Entry (0, 0) is the minor on the first t rows and columns.
    std::vector<std::size_t> first(t);
    for (std::size_t i = 0; i < t; ++i) first[i] = i;
    out.require(lhs(0, 0) == oracle::leibniz_det(oracle::submatrix(lu, first, first)), "compound entry mismatch");
  }
}

Outcome criterion_7() {
  Outcome out;
  testing::Generator gen(0xb1c4);
  std::size_t identities = 0;
  const int pairs = 120;
  for (int i = 0; i < pairs; ++i) {
    if (i % 2 == 0) {
      check_binet_cauchy<Integer>(gen, out, identities);
    } else {
      check_binet_cauchy<Rational>(gen, out, identities);
    }
  }
  out.detail = std::to_string(pairs) + " pairs, " + std::to_string(identities) + " compound identities";
  return out;
}

template <class R>
void check_composition(const SseChain<R>& chain, Outcome& out) {
  ShiftEquivalence<R> se;
  try {
    se = compose_chain_to_se(chain);
  } catch (const Error& e) {
    out.require(false, std::string("composition failed: ") + e.what());
    return;
  }
  out.require(verify_se(chain.source, chain.core, se.u, se.v, se.lag).ok(), "verify_se rejects the pair");
  const Matrix<R>& a = chain.source;
  const Matrix<R>& b = chain.core;
  out.require(a * se.u == se.u * b && se.v * a == b * se.v, "intertwining fails");
  out.require(power(a, se.lag) == se.u * se.v && power(b, se.lag) == se.v * se.u, "power identities fail");
}

Outcome criterion_8(const Harvest& h) {
  Outcome out;
  for (const auto& c : h.q_chains) check_composition(c, out);
  for (const auto& c : h.z_chains) check_composition(c, out);
  out.detail = std::to_string(h.q_chains.size() + h.z_chains.size()) + " chains composed and verified";
  return out;
}

Outcome criterion_9() {
  Outcome out;
  const auto start = Clock::now();
  const CounterexampleReport r = verify_counterexample();
  const double elapsed = seconds_since(start);
  out.require(r.checks.checks.size() == 6, "report does not have six checks");
  for (const Check& c : r.checks.checks) out.require(c.passed, c.identity);
  const Polynomial<QuotientElement> expected(std::vector<QuotientElement>{1, -2, 1});
  out.require(r.char_poly == expected, "det(I - t phi(A^4)) != (1 - t)^2");
  out.require(oracle::reversed_char_poly(r.phi_a4) == expected, "Leibniz det(I - t phi(A^4)) != (1 - t)^2");
  out.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s exceeds 1 s");
  out.detail = "6 identities in " + std::to_string(static_cast<int>(elapsed * 1e6)) + " us";
  return out;
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str() + err.str()};
}

// A failing check with a step or entry location in a written report.
bool located_failure(const fs::path& report) {
  const cli::json doc = cli::read_json(report);
  if (doc.value("ok", true)) return false;
  for (const auto& c : doc["checks"]) {
    if (!c["passed"].get<bool>()) return c.contains("step") || c.contains("entry");
  }
  return false;
}

template <CoefficientDomain C>
void round_trip(const PolyMatrix<C>& a, const fs::path& dir, const std::string& name, Outcome& out,
                std::size_t& artifacts, std::size_t& corruptions, Harvest& h) {
  using R = Polynomial<C>;
  const std::string ring = std::is_same_v<C, Integer> ? "Zx" : "Qx";
  const fs::path in = dir / (name + ".json");
  cli::write_json(in, cli::matrix_to_json(a));

  const fs::path frf = dir / (name + ".frf.json");
  out.require(cli({"frf", "--ring", ring, "--in", in, "--out", frf, "--quiet"}).code == 0, name + ": frf failed");
  out.require(cli({"verify-sse", "--chain", frf, "--quiet"}).code == 0, name + ": frf artifact does not verify");
  ++artifacts;

  const fs::path chain_file = dir / (name + ".chain.json");
  out.require(cli({"sse", "--ring", ring, "--in", in, "--out", chain_file, "--quiet"}).code == 0,
              name + ": sse failed");
  out.require(cli({"verify-sse", "--chain", chain_file, "--in", in, "--quiet"}).code == 0,
              name + ": chain artifact does not verify");
  ++artifacts;

  cli::json chain_doc = cli::read_json(chain_file);
  const SseChain<R> chain = cli::chain_from_json<R>(chain_doc);
  if constexpr (std::is_same_v<C, Rational>) {
    h.q_steps.insert(h.q_steps.end(), chain.steps.begin(), chain.steps.end());
  } else {
    h.z_steps.insert(h.z_steps.end(), chain.steps.begin(), chain.steps.end());
  }

  const fs::path report = dir / (name + ".report.json");
  if (!chain_doc["steps"].empty()) {
    cli::json bad = chain_doc;
    auto& entry = bad["steps"][0]["U"]["entries"][0][0];
    entry = entry.get<std::string>() + " + 1";
    const fs::path corrupted = dir / (name + ".bad-chain.json");
    cli::write_json(corrupted, bad);
    out.require(cli({"verify-sse", "--chain", corrupted, "--out", report, "--quiet"}).code == 1,
                name + ": corrupted chain not refuted");
    out.require(located_failure(report), name + ": corrupted chain refutation not located");
    ++corruptions;
  }

  cli::json bad_frf = cli::read_json(frf);
  if (bad_frf["r"].get<std::size_t>() > 0) {
    auto& entry = bad_frf["P"]["entries"][0][0];
    entry = entry.get<std::string>() + " - x";
    const fs::path corrupted = dir / (name + ".bad-frf.json");
    cli::write_json(corrupted, bad_frf);
    out.require(cli({"verify-sse", "--chain", corrupted, "--out", report, "--quiet"}).code == 1,
                name + ": corrupted factorization not refuted");
    out.require(located_failure(report), name + ": corrupted factorization refutation not located");
    ++corruptions;
  }

  if (!chain_doc.value("nilpotent", false)) {
    const ShiftEquivalence<R> se = compose_chain_to_se(chain);
    const fs::path b = dir / (name + ".B.json");
    const fs::path u = dir / (name + ".U.json");
    const fs::path v = dir / (name + ".V.json");
    cli::write_json(b, cli::matrix_to_json(chain.core));
    cli::write_json(u, cli::matrix_to_json(se.u));
    cli::write_json(v, cli::matrix_to_json(se.v));
    const std::string lag = std::to_string(se.lag);
    out.require(cli({"verify-se", "--a", in, "--b", b, "--u", u, "--v", v, "--lag", lag, "--quiet"}).code == 0,
                name + ": composed pair does not verify");
    ++artifacts;

    Matrix<R> broken = se.u;
    broken(0, 0) = broken(0, 0) + R(1);
    cli::write_json(u, cli::matrix_to_json(broken));
    const CliRun refuted = cli({"verify-se", "--a", in, "--b", b, "--u", u, "--v", v, "--lag", lag});
    out.require(refuted.code == 1 && refuted.out.find("refuted: ") != std::string::npos,
                name + ": corrupted U not refuted with a named identity");
    ++corruptions;
  }
}

Outcome criterion_10(Harvest& h) {
  Outcome out;
  const fs::path dir = fs::temp_directory_path() / ("polysse-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::size_t artifacts = 0;
  std::size_t corruptions = 0;
  for (const auto& entry : testing::integer_corpus()) {
    round_trip(testing::to_matrix<Integer>(entry), dir, entry.name, out, artifacts, corruptions, h);
  }
  testing::Generator gen(0xc11);
  for (std::size_t i = 0; i < 20; ++i) {
    round_trip(gen.pipeline_sample<Rational>(1 + i % 4, i), dir, "random" + std::to_string(i), out, artifacts,
               corruptions, h);
  }
  fs::remove_all(dir);
  out.detail = std::to_string(artifacts) + " artifacts re-verified, " + std::to_string(corruptions) +
               " corruptions refuted";
  return out;
}

// Any escaping exception fails the criterion.
Outcome guarded(const std::function<Outcome()>& run) {
  try {
    return run();
  } catch (const std::exception& e) {
    Outcome out;
    out.require(false, std::string("exception: ") + e.what());
    out.detail = "aborted";
    return out;
  }
}

}  // namespace

int main() {
  Harvest h;
  std::map<int, std::pair<std::string, Outcome>> results;
  results[1] = {"Q[x] pipeline", guarded([&] { return criterion_1(h); })};
  results[2] = {"Z[x] pipeline", guarded([&] { return criterion_2(h); })};
  results[3] = {"full rank factorization postconditions", guarded([&] { return criterion_3(h); })};
  results[4] = {"gcd extraction A = LU", guarded([&] { return criterion_4(h); })};
  results[5] = {"MLP certificates", guarded([&] { return criterion_5(); })};
  results[7] = {"Binet-Cauchy", guarded([&] { return criterion_7(); })};
  results[8] = {"chain composition to shift equivalence", guarded([&] { return criterion_8(h); })};
  results[9] = {"sphere counterexample identities", guarded([&] { return criterion_9(); })};
  results[10] = {"CLI round trip", guarded([&] { return criterion_10(h); })};
  // Last, so that it sees the steps of every other criterion.
  results[6] = {"det(I - tUV) = det(I - tVU)", guarded([&] { return criterion_6(h); })};

  bool all = true;
  for (const auto& [id, result] : results) {
    const auto& [label, o] = result;
    all = all && o.pass;
    std::printf("criterion %2d %s: %s: %s\n", id, o.pass ? "PASS" : "FAIL", label.c_str(), o.detail.c_str());
    for (const std::string& f : o.failures) std::printf("    %s\n", f.c_str());
  }
  return all ? 0 : 1;
}
