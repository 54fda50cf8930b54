#ifndef VURKIT_IO_HPP
#define VURKIT_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "vurkit/core/observable.hpp"
#include "vurkit/core/state.hpp"
#include "vurkit/entropic.hpp"
#include "vurkit/lur.hpp"
#include "vurkit/oracle.hpp"
#include "vurkit/vur.hpp"

// JSON interchange. Complex numbers are [re, im] pairs; matrices are row lists.
//
//   observable:  {"matrix": [[[re,im], ...], ...]}
//           or   {"spectral": {"eigenvalues": [...], "eigenvectors": [[[re,im], ...], ...]}}
//                (eigenvectors listed column by column)
//   state:       {"pure": [[re,im], ...]}  or  {"density": [[[re,im], ...], ...]}
//
// A file may hold a single observable object or an array of them.

namespace vurkit::io {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// primitives

inline json to_json(complex z) { return json::array({z.real(), z.imag()}); }

inline complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("expected a complex number as [re, im], got " + j.dump());
  return {j[0].get<double>(), j[1].get<double>()};
}

inline json to_json(std::span<const complex> v) {
  json a = json::array();
  for (const auto& z : v) a.push_back(to_json(z));
  return a;
}

inline ComplexVector vector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty list of [re, im] entries");
  ComplexVector v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(complex_from_json(e));
  return v;
}

inline json to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty list of matrix rows");
  const std::size_t n = j.size();
  std::vector<complex> entries;
  entries.reserve(n * n);
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("matrix row is not a list");
    if (row.size() != n)
      throw DimensionError("matrix is not square: " + std::to_string(n) + " rows, a row of length " +
                           std::to_string(row.size()));
    for (const auto& e : row) entries.push_back(complex_from_json(e));
  }
  try {
    return ComplexMatrix(n, std::move(entries));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

// ---------------------------------------------------------------------------
// observables and states

/// An observable exactly as written in a file.
struct ObservableDocument {
  std::variant<ComplexMatrix, SpectralObservable> content;

  SpectralObservable resolve(const Tolerances& tol = default_tolerances()) const {
    if (const auto* m = std::get_if<ComplexMatrix>(&content)) return eigendecompose(*m, tol);
    return std::get<SpectralObservable>(content);
  }

  friend bool operator==(const ObservableDocument&, const ObservableDocument&) = default;
};

inline json to_json(const SpectralObservable& o) {
  json cols = json::array();
  for (std::size_t k = 0; k < o.dim(); ++k) cols.push_back(to_json(o.eigenvector(k)));
  return json{{"spectral", json{{"eigenvalues", o.eigenvalues()}, {"eigenvectors", std::move(cols)}}}};
}

inline json to_json(const ObservableDocument& d) {
  if (const auto* m = std::get_if<ComplexMatrix>(&d.content)) return json{{"matrix", to_json(*m)}};
  return to_json(std::get<SpectralObservable>(d.content));
}

inline ObservableDocument observable_document_from_json(const json& j, const Tolerances& tol = default_tolerances()) {
  if (!j.is_object()) throw ParseError("observable must be a JSON object");
  const bool has_matrix = j.contains("matrix"), has_spectral = j.contains("spectral");
  if (has_matrix == has_spectral)
    throw ParseError("observable must contain exactly one of \"matrix\" or \"spectral\"");
  if (has_matrix) return {matrix_from_json(j.at("matrix"))};

  const json& s = j.at("spectral");
  if (!s.is_object() || !s.contains("eigenvalues") || !s.contains("eigenvectors"))
    throw ParseError("\"spectral\" needs \"eigenvalues\" and \"eigenvectors\"");
  const json& ev = s.at("eigenvalues");
  if (!ev.is_array() || ev.empty()) throw ParseError("\"eigenvalues\" must be a nonempty list");
  std::vector<double> values;
  for (const auto& x : ev) {
    if (!x.is_number()) throw ParseError("eigenvalue is not a number");
    values.push_back(x.get<double>());
  }
  const json& cols = s.at("eigenvectors");
  if (!cols.is_array()) throw ParseError("\"eigenvectors\" must be a list of columns");
  const std::size_t n = values.size();
  if (cols.size() != n)
    throw DimensionError(std::to_string(n) + " eigenvalues but " + std::to_string(cols.size()) + " eigenvectors");
  ComplexMatrix vecs(n);
  for (std::size_t k = 0; k < n; ++k) {
    const ComplexVector col = vector_from_json(cols[k]);
    if (col.size() != n) throw DimensionError("eigenvector length does not match the number of eigenvalues");
    for (std::size_t i = 0; i < n; ++i) vecs(i, k) = col[i];
  }
  try {
    return {SpectralObservable(std::move(values), std::move(vecs), tol)};
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

inline std::vector<ObservableDocument> observable_documents_from_json(const json& j,
                                                                     const Tolerances& tol = default_tolerances()) {
  std::vector<ObservableDocument> out;
  if (j.is_array()) {
    if (j.empty()) throw ParseError("empty observable list");
    for (const auto& e : j) out.push_back(observable_document_from_json(e, tol));
  } else {
    out.push_back(observable_document_from_json(j, tol));
  }
  return out;
}

inline json to_json(const QuantumState& st) {
  if (st.is_pure()) return json{{"pure", to_json(st.amplitudes())}};
  return json{{"density", to_json(st.density_matrix())}};
}

inline QuantumState state_from_json(const json& j, const Tolerances& tol = default_tolerances()) {
  if (!j.is_object()) throw ParseError("state must be a JSON object");
  const bool has_pure = j.contains("pure"), has_density = j.contains("density");
  if (has_pure == has_density) throw ParseError("state must contain exactly one of \"pure\" or \"density\"");
  if (has_pure) return QuantumState::pure(vector_from_json(j.at("pure")), tol);
  return QuantumState::density(matrix_from_json(j.at("density")), tol);
}

inline json parse_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

// ---------------------------------------------------------------------------
// reports

inline json to_json(const EntropicConstant& c) {
  json j{{"value", c.value()}, {"source", std::string(to_string(c.source()))}};
  json in{{"m", c.inputs().observables}, {"n", c.inputs().dimension}, {"mub", c.inputs().mub}};
  in["c"] = c.inputs().overlap ? json(*c.inputs().overlap) : json(nullptr);
  j["inputs"] = std::move(in);
  return j;
}

inline json to_json(const InnerMaxResult& r) {
  return json{{"beta_star", r.beta_star}, {"value", r.value}, {"bracket", {r.bracket_lo, r.bracket_hi}}};
}

inline json to_json(const BoundReport& r) {
  json ops = json::array();
  for (const auto& p : r.per_operator) ops.push_back(to_json(p));
  return json{{"alpha", r.alpha.value()}, {"constant", to_json(r.constant)}, {"per_operator", std::move(ops)},
              {"raw", r.raw},           {"lower_bound", r.lower_bound},       {"clamped", r.clamped}};
}

inline json to_json(const OracleResult& r) {
  return json{{"minimum", r.minimum},
              {"restarts", r.restarts},
              {"restarts_agreeing", r.restarts_agreeing},
              {"best_restart", r.best_restart},
              {"argmin_state", to_json(r.argmin_state)}};
}

inline json to_json(const LurReport& r) {
  json j{{"lhs", r.lhs},       {"u_a", r.u_a},
         {"u_b", r.u_b},       {"margin", r.margin},
         {"verdict", std::string(to_string(r.verdict))}};
  j["bound_a"] = r.bound_a ? to_json(*r.bound_a) : json(nullptr);
  j["bound_b"] = r.bound_b ? to_json(*r.bound_b) : json(nullptr);
  return j;
}

inline json to_json(const ContinuousBound& b) {
  return json{{"alpha_used", b.alpha_used}, {"lower_bound", b.lower_bound}};
}

} // namespace vurkit::io

#endif // VURKIT_IO_HPP
