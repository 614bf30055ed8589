#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "formats.hpp"

namespace polysse::cli {

namespace {

struct Options {
  std::string ring;
  bool quiet = false;
  std::string in;
  std::string out;
  std::string a;
  std::string b;
  std::string u;
  std::string v;
  std::string chain;
  std::size_t lag = 0;
};

class Session {
 public:
  Session(const Options& opts, std::ostream& out) : opts_(opts), out_(out) {}

  const Options& opts() const { return opts_; }

  void say(const std::string& line) {
    if (!opts_.quiet) out_ << line << '\n';
  }

  /// Writes the artifact to --out, or to standard output without it.
  void emit(const json& doc) {
    if (!opts_.out.empty()) {
      write_json(opts_.out, doc);
      say("wrote " + opts_.out);
    } else {
      out_ << doc.dump(2) << '\n';
    }
  }

  /// Prints the outcome of every check; writes the report to --out if given.
  int conclude(const VerificationReport& report) {
    if (!opts_.quiet) {
      for (const Check& c : report.checks) out_ << (c.passed ? "[ok]   " : "[FAIL] ") << describe(c) << '\n';
    }
    if (!opts_.out.empty()) write_json(opts_.out, report_to_json(report));
    if (const Check* f = report.first_failure()) {
      out_ << "refuted: " << describe(*f) << '\n';
      return kExitRefuted;
    }
    say("verified: " + std::to_string(report.checks.size()) + " identities hold exactly");
    return kExitOk;
  }

  /// Ring of an input document, checked against --ring.
  RingTag ring_for(const json& doc, std::string_view what) const {
    const RingTag file = ring_of(doc, what);
    if (!opts_.ring.empty() && ring_from_flag(opts_.ring) != file) {
      throw UsageError(std::string(what) + " is over " + std::string(file_name(file)) + " but --ring is " +
                       opts_.ring);
    }
    return file;
  }

 private:
  static std::string describe(const Check& c) {
    std::string s = c.identity;
    if (c.step) s += " (step " + std::to_string(*c.step) + ")";
    if (!c.detail.empty()) s += ": " + c.detail;
    return s;
  }

  const Options& opts_;
  std::ostream& out_;
};

/// Calls f.template operator()<C>() for the coefficient domain of a
/// univariate ring.
template <class F>
int over_domain(RingTag ring, std::string_view command, F&& f) {
  switch (ring) {
    case RingTag::Zx:
      return f.template operator()<Integer>();
    case RingTag::Qx:
      return f.template operator()<Rational>();
    case RingTag::Sphere:
      break;
  }
  throw UsageError(std::string(command) + " needs a univariate ring (Zx or Qx)");
}

/// Calls f.template operator()<R>() for the matrix element type of any ring.
template <class F>
int over_elements(RingTag ring, F&& f) {
  switch (ring) {
    case RingTag::Zx:
      return f.template operator()<ZPoly>();
    case RingTag::Qx:
      return f.template operator()<QPoly>();
    case RingTag::Sphere:
      return f.template operator()<QuotientElement>();
  }
  return kExitUsage;
}

std::string dims(std::size_t rows, std::size_t cols) { return std::to_string(rows) + "x" + std::to_string(cols); }

int cmd_rank(Session& s) {
  const json doc = read_json(s.opts().in);
  return over_domain(s.ring_for(doc, "input"), "rank", [&]<class C>() {
    const PolyMatrix<C> a = matrix_from_json<Polynomial<C>>(doc, "input");
    const std::size_t r = rank(a);
    s.say("rank " + std::to_string(r));
    if (!s.opts().out.empty()) write_json(s.opts().out, {{"ring", doc["ring"]}, {"rank", r}});
    return kExitOk;
  });
}

int cmd_frf(Session& s) {
  const json doc = read_json(s.opts().in);
  return over_domain(s.ring_for(doc, "input"), "frf", [&]<class C>() {
    const PolyMatrix<C> a = matrix_from_json<Polynomial<C>>(doc, "input");
    const FullRankFactorization<C> f = full_rank_factorization(a);
    const bool product = f.p * f.q == a;
    const bool ranks = rank(f.p) == f.rank && rank(f.q) == f.rank && rank(a) == f.rank;
    s.say("full rank factorization of rank " + std::to_string(f.rank) + ": P " + dims(f.p.rows(), f.p.cols()) +
          ", Q " + dims(f.q.rows(), f.q.cols()));
    s.emit({{"ring", doc["ring"]},
            {"source", matrix_to_json(a)},
            {"P", matrix_to_json(f.p)},
            {"Q", matrix_to_json(f.q)},
            {"r", f.rank},
            {"verification", {{"rank", ranks}, {"exact_product", product}}}});
    return kExitOk;
  });
}

int cmd_lu(Session& s) {
  const json doc = read_json(s.opts().in);
  return over_domain(s.ring_for(doc, "input"), "lu", [&]<class C>() {
    const PolyMatrix<C> a = matrix_from_json<Polynomial<C>>(doc, "input");
    const LuFactorization<C> f = lu_gcd_factor(a);
    s.say("gcd of maximal minors " + to_string(f.d) + ", det L = " + to_string(det(f.l)));
    s.emit({{"ring", doc["ring"]},
            {"source", matrix_to_json(a)},
            {"L", matrix_to_json(f.l)},
            {"U", matrix_to_json(f.u)},
            {"d", to_string(f.d)},
            {"verification",
             {{"exact_product", f.l * f.u == a}, {"det_associate", are_associates(det(f.l), f.d)},
              {"u_mlp", is_mlp(f.u)}}}});
    return kExitOk;
  });
}

int cmd_mlp(Session& s) {
  const json doc = read_json(s.opts().in);
  return over_domain(s.ring_for(doc, "input"), "mlp", [&]<class C>() {
    const PolyMatrix<C> c = matrix_from_json<Polynomial<C>>(doc, "input");
    std::optional<Polynomial<C>> g;
    try {
      g = maximal_minor_gcd(c);
    } catch (const RankDeficient&) {
    }
    const bool mlp = g && is_unit(*g);
    if (!s.opts().out.empty()) {
      write_json(s.opts().out, {{"ring", doc["ring"]}, {"mlp", mlp}, {"minor_gcd", g ? to_string(*g) : "0"}});
    }
    if (mlp) {
      s.say("minor left prime: maximal minors have unit gcd");
      return kExitOk;
    }
    s.say(g ? "not minor left prime: maximal minors share " + to_string(*g)
            : "not minor left prime: matrix does not have full row rank");
    return kExitRefuted;
  });
}

int cmd_cert(Session& s) {
  const json doc = read_json(s.opts().in);
  return over_domain(s.ring_for(doc, "input"), "cert", [&]<class C>() {
    const PolyMatrix<C> c = matrix_from_json<Polynomial<C>>(doc, "input");
    MlpCertificate<C> cert;
    try {
      cert = mlp_certificate(c);
    } catch (const NotMlp& e) {
      s.say(std::string("refuted: ") + e.what());
      return kExitRefuted;
    } catch (const RankDeficient& e) {
      s.say(std::string("refuted: ") + e.what());
      return kExitRefuted;
    }
    json witnesses = json::array();
    for (const auto& w : cert.witnesses) witnesses.push_back({{"Z", matrix_to_json(w.z)}, {"d", to_string(w.d)}});
    s.say("certificate with " + std::to_string(cert.witnesses.size()) + " witness(es), C*Z_j = d_j*I verified");
    s.emit({{"ring", doc["ring"]}, {"subject", matrix_to_json(c)}, {"witnesses", std::move(witnesses)}});
    return kExitOk;
  });
}

int cmd_sse(Session& s) {
  const json doc = read_json(s.opts().in);
  return over_domain(s.ring_for(doc, "input"), "sse", [&]<class C>() {
    using R = Polynomial<C>;
    const PolyMatrix<C> a = matrix_from_json<R>(doc, "input");
    const SseOutcome<R> outcome = sse_to_nonsingular(a);
    json artifact;
    if (const auto* chain = std::get_if<SseChain<R>>(&outcome)) {
      s.say("strong shift equivalence of lag " + std::to_string(chain->lag) + " to a nonsingular " +
            dims(chain->core.rows(), chain->core.cols()) + " core");
      artifact = chain_to_json(*chain);
      artifact["nilpotent"] = false;
    } else {
      const auto& w = std::get<NilpotencyWitness<R>>(outcome);
      s.say("nilpotent: A^" + std::to_string(w.lag + 1) + " = 0");
      artifact = chain_to_json(w.chain);
      artifact["nilpotent"] = true;
    }
    s.emit(artifact);
    return kExitOk;
  });
}

template <class R>
VerificationReport verify_factorization_doc(const json& doc, std::optional<Matrix<R>> input) {
  if constexpr (FractionFieldRing<R>) {
    if (!doc.contains("r") || !doc["r"].is_number_unsigned()) throw UsageError("factorization: missing r");
    const std::size_t r = doc["r"].get<std::size_t>();
    const Matrix<R> p = matrix_from_json<R>(doc["P"], "P");
    const Matrix<R> q = matrix_from_json<R>(doc["Q"], "Q");
    Matrix<R> a;
    if (doc.contains("source")) {
      a = matrix_from_json<R>(doc["source"], "source");
    } else if (input) {
      a = *input;
    } else {
      throw UsageError("factorization without a source needs --in");
    }
    VerificationReport report;
    if (input) report.checks.push_back(compare("source = input", a, *input));
    auto flag = [&](std::string identity, bool ok, std::string detail) {
      report.checks.push_back({std::move(identity), ok, std::nullopt, std::nullopt, ok ? std::string() : detail});
    };
    flag("P has r columns and Q has r rows", p.cols() == r && q.rows() == r,
         "P is " + dims(p.rows(), p.cols()) + ", Q is " + dims(q.rows(), q.cols()));
    auto product = try_multiply(p, q);
    if (product) {
      report.checks.push_back(compare("A = P*Q", *product, a));
    } else {
      flag("A = P*Q", false, "P and Q do not compose");
    }
    flag("rank P = r", rank(p) == r, "rank P is " + std::to_string(rank(p)));
    flag("rank Q = r", rank(q) == r, "rank Q is " + std::to_string(rank(q)));
    flag("rank A = r", rank(a) == r, "rank A is " + std::to_string(rank(a)));
    return report;
  } else {
    throw UsageError("factorizations are only defined over Zx and Qx");
  }
}

int cmd_verify_sse(Session& s) {
  const json doc = read_json(s.opts().chain);
  const RingTag ring = s.ring_for(doc, "chain");
  return over_elements(ring, [&]<class R>() {
    std::optional<Matrix<R>> input;
    if (!s.opts().in.empty()) {
      const json in = read_json(s.opts().in);
      if (s.ring_for(in, "input") != ring) throw UsageError("input and chain are over different rings");
      input = matrix_from_json<R>(in, "input");
    }
    if (doc.contains("P") || doc.contains("Q")) return s.conclude(verify_factorization_doc<R>(doc, input));

    const SseChain<R> chain = chain_from_json<R>(doc);
    const bool nilpotent = doc.value("nilpotent", false);
    VerificationReport report;
    if (input) report.checks.push_back(compare("source = input", chain.source, *input));
    if (nilpotent) {
      const VerificationReport w = verify_nilpotency(NilpotencyWitness<R>{chain.lag, chain});
      report.checks.insert(report.checks.end(), w.checks.begin(), w.checks.end());
    } else {
      const VerificationReport c = verify_sse_chain(chain);
      report.checks.insert(report.checks.end(), c.checks.begin(), c.checks.end());
      if (doc.contains("nilpotent")) {
        const bool nonsingular = is_nonsingular(chain.core);
        report.checks.push_back({"det(core) != 0", nonsingular, std::nullopt, std::nullopt,
                                 nonsingular ? std::string() : "core is singular"});
      }
    }
    return s.conclude(report);
  });
}

int cmd_verify_se(Session& s) {
  const Options& o = s.opts();
  const json a_doc = read_json(o.a);
  const RingTag ring = s.ring_for(a_doc, "A");
  return over_elements(ring, [&]<class R>() {
    const Matrix<R> a = matrix_from_json<R>(a_doc, "A");
    const Matrix<R> b = matrix_from_json<R>(read_json(o.b), "B");
    const Matrix<R> u = matrix_from_json<R>(read_json(o.u), "U");
    const Matrix<R> v = matrix_from_json<R>(read_json(o.v), "V");
    return s.conclude(verify_se(a, b, u, v, o.lag));
  });
}

int cmd_counterexample(Session& s) {
  if (!s.opts().ring.empty() && ring_from_flag(s.opts().ring) != RingTag::Sphere) {
    throw UsageError("counterexample lives over the sphere ring");
  }
  const CounterexampleReport r = verify_counterexample();
  json doc = report_to_json(r.checks);
  doc["ring"] = file_name(RingTag::Sphere);
  doc["A"] = matrix_to_json(reduce_matrix(counterexample_matrix()));
  doc["artifacts"] = {{"cubic_defect", matrix_to_json(reduce_matrix(r.cubic_defect))},
                      {"phi_A4", matrix_to_json(r.phi_a4)},
                      {"idempotence_defect", matrix_to_json(r.idempotence_defect)},
                      {"char_poly", to_string(r.char_poly)},
                      {"alpha_phi_A4", matrix_to_json(r.alpha_phi_a4)},
                      {"trace", to_string(r.trace)}};
  s.say("det(I - t phi(A^4)) = " + to_string(r.char_poly) + ", trace phi(A^4) = " + to_string(r.trace));
  const int code = s.conclude(r.checks);
  if (!s.opts().out.empty()) write_json(s.opts().out, doc);
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact full rank factorizations and shift equivalences over polynomial rings", "polysse"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--ring", o.ring, "Coefficient ring: Zx, Qx or sphere")->check(CLI::IsMember({"Zx", "Qx", "sphere"}));
  app.add_flag("--quiet", o.quiet, "Suppress the human-readable summary");

  auto with_in = [&](CLI::App* sub) {
    sub->add_option("--in", o.in, "Input matrix file")->required();
    return sub;
  };
  auto with_out = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Output artifact file");
    return sub;
  };

  CLI::App* rank_cmd = with_out(with_in(app.add_subcommand("rank", "Rank over the fraction field")));
  CLI::App* frf_cmd = with_out(with_in(app.add_subcommand("frf", "Full rank factorization A = PQ")));
  CLI::App* lu_cmd = with_out(with_in(app.add_subcommand("lu", "Extract the maximal-minor gcd: A = LU, U MLP")));
  CLI::App* mlp_cmd = with_out(with_in(app.add_subcommand("mlp", "Test minor left primeness")));
  CLI::App* cert_cmd = with_out(with_in(app.add_subcommand("cert", "Certificate of minor left primeness")));
  CLI::App* sse_cmd =
      with_out(with_in(app.add_subcommand("sse", "Strong shift equivalence to a nonsingular core")));

  CLI::App* verify_sse_cmd = with_out(app.add_subcommand("verify-sse", "Verify a chain or factorization file"));
  verify_sse_cmd->add_option("--chain", o.chain, "Chain or factorization file")->required();
  verify_sse_cmd->add_option("--in", o.in, "Expected source matrix");

  CLI::App* verify_se_cmd = with_out(app.add_subcommand("verify-se", "Verify a shift equivalence of lag l"));
  verify_se_cmd->add_option("--a", o.a, "Matrix A")->required();
  verify_se_cmd->add_option("--b", o.b, "Matrix B")->required();
  verify_se_cmd->add_option("--u", o.u, "Matrix U")->required();
  verify_se_cmd->add_option("--v", o.v, "Matrix V")->required();
  verify_se_cmd->add_option("--lag", o.lag, "Lag l >= 1")->required();

  CLI::App* counterexample_cmd =
      with_out(app.add_subcommand("counterexample", "Verify the sphere counterexample identities"));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  Session session(o, out);
  try {
    if (rank_cmd->parsed()) return cmd_rank(session);
    if (frf_cmd->parsed()) return cmd_frf(session);
    if (lu_cmd->parsed()) return cmd_lu(session);
    if (mlp_cmd->parsed()) return cmd_mlp(session);
    if (cert_cmd->parsed()) return cmd_cert(session);
    if (sse_cmd->parsed()) return cmd_sse(session);
    if (verify_sse_cmd->parsed()) return cmd_verify_sse(session);
    if (verify_se_cmd->parsed()) return cmd_verify_se(session);
    if (counterexample_cmd->parsed()) return cmd_counterexample(session);
  } catch (const FactorizationIncomplete& e) {
    err << "factorization incomplete: " << e.what() << '\n';
    return kExitIncomplete;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace polysse::cli
