#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "ueb/basis_set.hpp"
#include "ueb/core.hpp"
#include "ueb/hadamard.hpp"
#include "ueb/lift.hpp"

namespace ueb {

// Insertion-ordered JSON keeps documents human-readable and makes
// parse -> dump the identity on anything this library wrote.
using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

namespace detail {

inline json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline json matrix_to_json(const Matrix& A) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < A.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < A.cols(); ++c) row.push_back(complex_to_json(A(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Loading scales amplitudes back up by sqrt(k), and fl(a/s)*s can land an
// ulp away from a. Writing must be a right inverse of loading so a reloaded
// document keeps its exact bytes, so nudge the quotient until it reproduces
// the entry under that multiplication.
inline double stable_quotient(double a, double s) {
  const double z = a / s;
  if (z * s == a) return z;
  const double lo = std::nextafter(z, -std::numeric_limits<double>::infinity());
  if (lo * s == a) return lo;
  const double hi = std::nextafter(z, std::numeric_limits<double>::infinity());
  if (hi * s == a) return hi;
  return z;
}

inline json normalized_state_json(const Matrix& A, double s) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < A.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < A.cols(); ++c)
      row.push_back(json::array(
          {stable_quotient(A(r, c).real(), s), stable_quotient(A(r, c).imag(), s)}));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix matrix_from_json(const json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw std::invalid_argument("matrix row count mismatch");
  Matrix A(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols)
      throw std::invalid_argument("matrix column count mismatch");
    for (int c = 0; c < cols; ++c) A(r, c) = complex_from_json(j[r][c]);
  }
  return A;
}

inline void require_version(const json& j) {
  if (!j.contains("schema_version") || j["schema_version"].get<std::string>() != kSchemaVersion)
    throw std::invalid_argument("unsupported or missing schema_version");
}

}  // namespace detail

inline json certificate_to_json(const Certificate& cert) {
  json j;
  j["kind"] = cert.kind_name();
  j["tolerance"] = cert.tolerance;
  if (const auto* rd = std::get_if<ComplementRankDeficient>(&cert.detail)) {
    j["max_rank"] = rd->max_rank;
    j["trials"] = rd->trials;
    j["seed"] = rd->seed;
  } else if (const auto* pb = std::get_if<PatternBound>(&cert.detail)) {
    j["matching"] = pb->matching;
    json mask = json::array();
    for (int r = 0; r < pb->pattern.rows; ++r) {
      json row = json::array();
      for (int c = 0; c < pb->pattern.cols; ++c) row.push_back(pb->pattern.at(r, c) ? 1 : 0);
      mask.push_back(std::move(row));
    }
    j["pattern"] = {{"rows", pb->pattern.rows}, {"cols", pb->pattern.cols}, {"mask", std::move(mask)}};
  } else if (const auto* hn = std::get_if<HadamardNoExtension>(&cert.detail)) {
    json v;
    v["found"] = hn->verdict.found();
    v["best_residual"] =
        std::isfinite(hn->verdict.best_residual) ? json(hn->verdict.best_residual) : json(nullptr);
    v["attempts"] = hn->verdict.attempts;
    v["heuristic"] = hn->verdict.heuristic;
    if (hn->verdict.found()) {
      json row = json::array();
      for (Eigen::Index i = 0; i < hn->verdict.row.size(); ++i)
        row.push_back(detail::complex_to_json(hn->verdict.row(i)));
      v["row"] = std::move(row);
    }
    j["verdict"] = std::move(v);
  } else {
    j["reason"] = std::get<Inconclusive>(cert.detail).reason;
  }
  return j;
}

inline Certificate certificate_from_json(const json& j) {
  Certificate cert;
  cert.tolerance = j.at("tolerance").get<double>();
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "complement-rank-deficient") {
    cert.detail = ComplementRankDeficient{j.at("max_rank").get<int>(), j.at("trials").get<int>(),
                                          j.at("seed").get<std::uint64_t>()};
  } else if (kind == "pattern-bound") {
    const json& pj = j.at("pattern");
    SupportPattern p(pj.at("rows").get<int>(), pj.at("cols").get<int>());
    const json& mask = pj.at("mask");
    if (static_cast<int>(mask.size()) != p.rows) throw std::invalid_argument("pattern mask row count mismatch");
    for (int r = 0; r < p.rows; ++r) {
      if (static_cast<int>(mask[r].size()) != p.cols)
        throw std::invalid_argument("pattern mask column count mismatch");
      for (int c = 0; c < p.cols; ++c) p.set(r, c, mask[r][c].get<int>() != 0);
    }
    cert.detail = PatternBound{std::move(p), j.at("matching").get<int>()};
  } else if (kind == "hadamard-no-extension") {
    const json& vj = j.at("verdict");
    ExtensionVerdict v;
    v.kind = vj.at("found").get<bool>() ? ExtensionVerdict::Kind::ExtensionFound
                                        : ExtensionVerdict::Kind::NoExtensionFound;
    v.best_residual =
        vj.at("best_residual").is_null() ? std::numeric_limits<double>::infinity() : vj.at("best_residual").get<double>();
    v.attempts = vj.at("attempts").get<int>();
    v.heuristic = vj.at("heuristic").get<bool>();
    if (v.found()) {
      const json& row = vj.at("row");
      v.row.resize(row.size());
      for (std::size_t i = 0; i < row.size(); ++i) v.row(i) = detail::complex_from_json(row[i]);
    }
    cert.detail = HadamardNoExtension{std::move(v)};
  } else if (kind == "inconclusive") {
    cert.detail = Inconclusive{j.at("reason").get<std::string>()};
  } else {
    throw std::invalid_argument("unknown certificate kind: " + kind);
  }
  return cert;
}

// The on-disk form: states normalized to unit vectors (matrices divided by
// sqrt(k)), matrices listed row by row as [re, im] pairs.
inline json document_from_basis_set(const BasisSet& S) {
  validate_shape(S);
  const double scale = std::sqrt(static_cast<double>(S.k));
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["space"] = {{"d", S.d}, {"dprime", S.dprime}, {"k", S.k}};
  doc["kind"] = to_string(S.kind);
  doc["count"] = S.count();
  json params = json::object();
  for (const auto& [key, value] : S.provenance.params) params[key] = value;
  doc["provenance"] = {{"construction", S.provenance.construction},
                       {"params", std::move(params)},
                       {"seed", S.provenance.seed}};
  json states = json::array();
  for (const Matrix& A : S.matrices) states.push_back(detail::normalized_state_json(A, scale));
  doc["states"] = std::move(states);
  doc["certificate"] = S.certificate ? certificate_to_json(*S.certificate) : json(nullptr);
  return doc;
}

inline BasisSet basis_set_from_document(const json& doc) {
  detail::require_version(doc);
  BasisSet S;
  const json& space = doc.at("space");
  S.d = space.at("d").get<int>();
  S.dprime = space.at("dprime").get<int>();
  S.k = space.at("k").get<int>();
  S.kind = basis_kind_from_string(doc.at("kind").get<std::string>());
  const json& states = doc.at("states");
  if (!states.is_array()) throw std::invalid_argument("states must be an array");
  if (doc.at("count").get<long>() != static_cast<long>(states.size()))
    throw std::invalid_argument("count field disagrees with the number of states");
  const double scale = std::sqrt(static_cast<double>(S.k));
  S.matrices.reserve(states.size());
  for (const json& st : states) S.matrices.push_back(scale * detail::matrix_from_json(st, S.d, S.dprime));
  if (doc.contains("provenance") && doc["provenance"].is_object()) {
    const json& prov = doc["provenance"];
    S.provenance.construction = prov.value("construction", std::string("file"));
    if (prov.contains("params"))
      for (const auto& [key, value] : prov["params"].items()) S.provenance.add(key, value.get<std::string>());
    S.provenance.seed = prov.value("seed", std::uint64_t{0});
  } else {
    S.provenance.construction = "file";
  }
  if (doc.contains("certificate") && !doc["certificate"].is_null())
    S.certificate = certificate_from_json(doc["certificate"]);
  validate_shape(S);
  return S;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

inline std::string dump_document(const json& doc) { return doc.dump(2) + "\n"; }

inline void write_document(const std::string& path, const BasisSet& S) {
  write_text_file(path, dump_document(document_from_basis_set(S)));
}

inline BasisSet read_basis_set(const std::string& path) {
  return basis_set_from_document(json::parse(read_text_file(path)));
}

// One line per amplitude: state index, row, column, real and imaginary part
// of the normalized state, row-major within each state.
inline std::string csv_from_basis_set(const BasisSet& S) {
  validate_shape(S);
  const double scale = std::sqrt(static_cast<double>(S.k));
  std::string out = "state,i,j,re,im\n";
  char buf[96];
  for (std::size_t n = 0; n < S.matrices.size(); ++n)
    for (int r = 0; r < S.d; ++r)
      for (int c = 0; c < S.dprime; ++c) {
        const Complex& z = S.matrices[n](r, c);
        std::snprintf(buf, sizeof(buf), "%zu,%d,%d,%.17g,%.17g\n", n, r, c,
                      detail::stable_quotient(z.real(), scale), detail::stable_quotient(z.imag(), scale));
        out += buf;
      }
  return out;
}

inline void write_csv(const std::string& path, const BasisSet& S) {
  write_text_file(path, csv_from_basis_set(S));
}

// {"schema_version": "1", "m": .., "d": .., "entries": [[[re,im], ..] ..]}
inline PartialHadamard hadamard_from_json(const json& j) {
  detail::require_version(j);
  PartialHadamard H;
  H.m = j.at("m").get<int>();
  H.d = j.at("d").get<int>();
  if (H.m <= 0 || H.d <= 0) throw std::invalid_argument("hadamard file: m and d must be positive");
  H.entries = detail::matrix_from_json(j.at("entries"), H.m, H.d);
  H.label = "file";
  H.validate();
  return H;
}

inline json hadamard_to_json(const PartialHadamard& H) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["m"] = H.m;
  j["d"] = H.d;
  j["entries"] = detail::matrix_to_json(H.entries);
  return j;
}

inline PartialHadamard read_hadamard(const std::string& path) {
  return hadamard_from_json(json::parse(read_text_file(path)));
}

// {"schema_version": "1", "p": .., "q": .., "perms": [[[0/1, ..] ..] ..]}
inline PermutationDecomposition decomposition_from_json(const json& j) {
  detail::require_version(j);
  PermutationDecomposition D;
  D.p = j.at("p").get<int>();
  D.q = j.at("q").get<int>();
  if (D.p <= 0 || D.q <= 0) throw std::invalid_argument("decomposition file: p and q must be positive");
  const json& perms = j.at("perms");
  if (!perms.is_array() || static_cast<int>(perms.size()) != D.q)
    throw std::invalid_argument("decomposition file: expected q permutation matrices");
  for (const json& pj : perms) {
    Eigen::MatrixXi P(D.p, D.q);
    if (!pj.is_array() || static_cast<int>(pj.size()) != D.p)
      throw std::invalid_argument("decomposition file: matrix row count mismatch");
    for (int i = 0; i < D.p; ++i) {
      if (!pj[i].is_array() || static_cast<int>(pj[i].size()) != D.q)
        throw std::invalid_argument("decomposition file: matrix column count mismatch");
      for (int jj = 0; jj < D.q; ++jj) P(i, jj) = pj[i][jj].get<int>();
    }
    D.perms.push_back(std::move(P));
  }
  D.validate();
  return D;
}

inline PermutationDecomposition read_decomposition(const std::string& path) {
  return decomposition_from_json(json::parse(read_text_file(path)));
}

}  // namespace ueb
