#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "tlz/algebra.hpp"
#include "tlz/deform.hpp"
#include "tlz/matrix.hpp"
#include "tlz/modrep.hpp"
#include "tlz/report.hpp"
#include "tlz/scalar.hpp"
#include "tlz/tensor.hpp"

namespace tlz {

/// On-disk description of one exact-arithmetic object. The document is JSON
/// with a `kind` tag, a `dims` list, and sparse coefficient data: omitted
/// entries are zero, indices are 0-based and in range, every value is a
/// reduced fraction string, and duplicate indices are rejected.
///
/// Layout per kind (n = dims[0], m = dims[1] where present):
///   binary, comm_assoc   dims [n]     entries over profile (n,n,n)
///   ternary              dims [n]     entries over profile (n,n,n,n)
///   operator             dims [r,c]   entries over profile (r,c); optional
///                                     `weight` fraction and `aux` matrix list
///   cocycle              dims [n,m]   entries over profile (n,n,n,m)
///   bimodule             dims [n,m]   parts l (n,m,m) and r (m,n,m), or
///                                     l1 (m,n,n,m), l2 (n,m,n,m), l3 (n,n,m,m)
///   representation       dims [n,m]   parts lambda, mu, rho, each (n,n,m,m)
///   deformation          dims [n,m]   parts w1, w2 (n,n,n,n) and wl1, wl2,
///                                     wm1, wm2, wr1, wr2 (n,n,m,m)
///
/// Single-tensor kinds populate `main`; multi-part kinds populate `parts`.
/// `meta` carries free-form string annotations (name, notes, ...).
struct AlgebraFile {
  std::string kind;
  std::vector<int> dims;
  Tensor main;
  std::map<std::string, Tensor> parts;
  std::optional<Scalar> weight;
  std::vector<Tensor> aux;
  std::map<std::string, std::string> meta;

  friend bool operator==(const AlgebraFile& a, const AlgebraFile& b) {
    bool w_eq = a.weight.has_value() == b.weight.has_value() &&
                (!a.weight.has_value() || *a.weight == *b.weight);
    return a.kind == b.kind && a.dims == b.dims && a.main == b.main && a.parts == b.parts &&
           w_eq && a.aux == b.aux && a.meta == b.meta;
  }
  friend bool operator!=(const AlgebraFile& a, const AlgebraFile& b) { return !(a == b); }
};

/// Parses a document, enforcing the full invariant set: known kind, correct
/// dims arity, exactly the keys the kind allows, entry objects of the exact
/// form {"idx": [...], "val": "p/q"}, in-range indices, reduced fraction
/// values, and no duplicate indices. Throws ParseError on any violation.
AlgebraFile parse_algebra_file(const std::string& text);

/// Canonical serialization: fixed key order (kind, dims, weight, entries or
/// parts, aux, meta), nonzero entries only, row-major index order, two-space
/// indentation, trailing newline. parse(serialize(x)) == x bit-exactly.
std::string serialize_algebra_file(const AlgebraFile& file);

AlgebraFile load_algebra_file(const std::string& path);
void save_algebra_file(const std::string& path, const AlgebraFile& file);

/// Typed views. Each checks the file's kind tag (ParseError on mismatch).
BinaryAlgebra as_binary(const AlgebraFile& file);
TernaryAlgebra as_ternary(const AlgebraFile& file);
CommAssocAlgebra as_comm_assoc(const AlgebraFile& file);
Matrix as_operator_matrix(const AlgebraFile& file);
std::vector<Matrix> operator_aux(const AlgebraFile& file);
bool bimodule_is_ternary(const AlgebraFile& file);
BinaryBimodule as_binary_bimodule(const AlgebraFile& file);
TernaryBimodule as_ternary_bimodule(const AlgebraFile& file);
Representation as_representation(const AlgebraFile& file);
Cocycle as_cocycle(const AlgebraFile& file);
DeformationData as_deformation(const AlgebraFile& file);

/// Typed builders producing canonical in-memory documents (no meta).
AlgebraFile make_binary_file(const BinaryAlgebra& b);
AlgebraFile make_ternary_file(const TernaryAlgebra& t);
AlgebraFile make_comm_assoc_file(const CommAssocAlgebra& a);
AlgebraFile make_operator_file(const Matrix& op,
                               const std::optional<Scalar>& weight = std::nullopt,
                               const std::vector<Matrix>& aux = {});
AlgebraFile make_bimodule_file(const BinaryBimodule& m);
AlgebraFile make_bimodule_file(const TernaryBimodule& m);
AlgebraFile make_representation_file(const Representation& rep);
AlgebraFile make_cocycle_file(const Cocycle& w);
AlgebraFile make_deformation_file(const DeformationData& data, int algebra_dim, int module_dim);

/// Machine-readable result document: verdict, per-identity pass/fail with
/// exact violation counts, capped witness tuples with both sides' values,
/// and any flags/notes. Field order is fixed for byte-reproducible output.
nlohmann::ordered_json report_to_json(const CheckReport& report);

}  // namespace tlz
