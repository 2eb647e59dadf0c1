#pragma once

#include <optional>
#include <string>

#include "wickrot/metric.hpp"

namespace wickrot {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Where a rotated algebra came from: hash of the source document, the
/// involution used, and the adapted basis (t block size t_dim).
struct Provenance {
  std::string parent_hash;
  QMat theta;
  QMat basis_map;
  int t_dim = 0;
  bool theta_exact = true;
};

/// On-disk form of an algebra + metric pair. Scalars written as strings
/// ("p/q" or "p") are exact rationals; scalars written as JSON numbers
/// are binary64 (integers still count as exact). Only pairs i<j appear;
/// the antisymmetric half is implied.
struct AlgebraDocument {
  LieAlgebra algebra;
  Metric metric;
  std::optional<Provenance> provenance;
};

/// Parse and validate. Jacobi is checked on load (exact zero for exact
/// scalars) unless validate is false. Throws ParseError with a field path
/// on schema violations.
AlgebraDocument parse_algebra_document(const std::string& text, bool validate = true, double tol = 1e-9);

/// Canonical serialization: fixed key order, brackets sorted by (i, j),
/// nonzero coefficients only, rationals as strings, binary64 as shortest
/// round-trip numbers. parse(emit(d)) reproduces d bit for bit.
std::string emit_algebra_document(const AlgebraDocument& doc, bool pretty = true);

/// FNV-1a 64 digest of the compact canonical serialization, as 16 hex
/// digits.
std::string document_hash(const AlgebraDocument& doc);

/// {"matrix": [[...]]} with the same scalar conventions.
LinearMap parse_linear_map_document(const std::string& text);
std::string emit_linear_map_document(const LinearMap& map, bool pretty = true);

}  // namespace wickrot
