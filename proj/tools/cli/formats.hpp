#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "polysse/factor/factorization.hpp"
#include "polysse/quotient/counterexample.hpp"
#include "polysse/sse/sse.hpp"
#include "polysse/text.hpp"

namespace polysse::cli {

using json = nlohmann::ordered_json;

enum class RingTag { Zx, Qx, Sphere };

/// Malformed input file or inconsistent arguments (exit code 2).
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string_view flag_name(RingTag ring);
/// The `ring` field of the file formats, e.g. "Z[x]".
std::string_view file_name(RingTag ring);
RingTag ring_from_flag(std::string_view flag);
RingTag ring_from_file(std::string_view name);

/// Entry text codec for each supported element type.
template <class R>
struct Codec;

template <>
struct Codec<ZPoly> {
  static constexpr RingTag ring = RingTag::Zx;
  static ZPoly parse(std::string_view s) { return parse_zpoly(s); }
  static std::string print(const ZPoly& p) { return to_string(p); }
};

template <>
struct Codec<QPoly> {
  static constexpr RingTag ring = RingTag::Qx;
  static QPoly parse(std::string_view s) { return parse_qpoly(s); }
  static std::string print(const QPoly& p) { return to_string(p); }
};

template <>
struct Codec<QuotientElement> {
  static constexpr RingTag ring = RingTag::Sphere;
  static QuotientElement parse(std::string_view s) { return reduce_mod_sphere(parse_tri(s)); }
  static std::string print(const QuotientElement& e) { return to_string(e); }
};

json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const json& doc);

/// The ring named by a document's `ring` field.
RingTag ring_of(const json& doc, std::string_view what);

template <class R>
json matrix_to_json(const Matrix<R>& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(Codec<R>::print(m(i, j)));
    entries.push_back(std::move(row));
  }
  return {{"ring", file_name(Codec<R>::ring)}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

/// `what` names the matrix in error messages.
template <class R>
Matrix<R> matrix_from_json(const json& doc, std::string_view what) {
  if (!doc.is_object()) throw UsageError(std::string(what) + ": expected a matrix object");
  if (doc.contains("ring") && ring_of(doc, what) != Codec<R>::ring) {
    throw UsageError(std::string(what) + ": ring " + doc["ring"].get<std::string>() + " does not match " +
                     std::string(file_name(Codec<R>::ring)));
  }
  if (!doc.contains("rows") || !doc.contains("cols") || !doc.contains("entries")) {
    throw UsageError(std::string(what) + ": matrix needs rows, cols and entries");
  }
  const json& rows_field = doc["rows"];
  const json& cols_field = doc["cols"];
  if (!rows_field.is_number_unsigned() || !cols_field.is_number_unsigned()) {
    throw UsageError(std::string(what) + ": rows and cols must be nonnegative integers");
  }
  const std::size_t rows = rows_field.get<std::size_t>();
  const std::size_t cols = cols_field.get<std::size_t>();
  const json& entries = doc["entries"];
  if (!entries.is_array() || entries.size() != rows) {
    throw UsageError(std::string(what) + ": entries must be an array of " + std::to_string(rows) + " rows");
  }
  Matrix<R> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!entries[i].is_array() || entries[i].size() != cols) {
      throw UsageError(std::string(what) + ": row " + std::to_string(i) + " must have " + std::to_string(cols) +
                       " entries");
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const json& e = entries[i][j];
      if (!e.is_string()) {
        throw UsageError(std::string(what) + ": entry (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") must be a string");
      }
      try {
        m(i, j) = Codec<R>::parse(e.get<std::string>());
      } catch (const ParseError& err) {
        throw UsageError(std::string(what) + ": entry (" + std::to_string(i) + ", " + std::to_string(j) +
                         "): " + err.what());
      }
    }
  }
  return m;
}

template <class R>
json chain_to_json(const SseChain<R>& chain) {
  json steps = json::array();
  for (const ElementaryStep<R>& s : chain.steps) {
    steps.push_back({{"U", matrix_to_json(s.u)}, {"V", matrix_to_json(s.v)}});
  }
  return {{"ring", file_name(Codec<R>::ring)},
          {"source", matrix_to_json(chain.source)},
          {"core", matrix_to_json(chain.core)},
          {"lag", chain.lag},
          {"steps", std::move(steps)}};
}

/// Intermediate matrices are recomputed as V_i U_i; the first `from` is the
/// source, so a corrupted factor surfaces as a failed identity, not a parse
/// error.
template <class R>
SseChain<R> chain_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("source") || !doc.contains("core") || !doc.contains("lag") ||
      !doc.contains("steps")) {
    throw UsageError("chain: needs source, core, lag and steps");
  }
  if (!doc["lag"].is_number_unsigned()) throw UsageError("chain: lag must be a nonnegative integer");
  if (!doc["steps"].is_array()) throw UsageError("chain: steps must be an array");
  SseChain<R> chain;
  chain.source = matrix_from_json<R>(doc["source"], "chain source");
  chain.core = matrix_from_json<R>(doc["core"], "chain core");
  chain.lag = doc["lag"].get<std::size_t>();
  Matrix<R> from = chain.source;
  for (std::size_t i = 0; i < doc["steps"].size(); ++i) {
    const json& s = doc["steps"][i];
    const std::string where = "chain step " + std::to_string(i + 1);
    if (!s.is_object() || !s.contains("U") || !s.contains("V")) throw UsageError(where + ": needs U and V");
    ElementaryStep<R> step;
    step.u = matrix_from_json<R>(s["U"], where + " U");
    step.v = matrix_from_json<R>(s["V"], where + " V");
    step.from = from;
    auto to = try_multiply(step.v, step.u);
    step.to = to ? *std::move(to) : Matrix<R>();
    from = step.to;
    chain.steps.push_back(std::move(step));
  }
  return chain;
}

json report_to_json(const VerificationReport& report);

}  // namespace polysse::cli
