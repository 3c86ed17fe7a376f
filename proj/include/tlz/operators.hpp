#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tlz/algebra.hpp"
#include "tlz/matrix.hpp"
#include "tlz/report.hpp"
#include "tlz/scalar.hpp"

namespace tlz {

/// A named class of operator identities together with its parameters:
/// an optional scalar weight and, for the derivation-like classes that are
/// defined through companion maps, the auxiliary matrices in chain order.
struct OperatorKind {
  enum class Tag {
    derivation,
    rota_baxter,
    centroid,
    reynolds,
    averaging,
    nijenhuis,
    central_derivation,
    generalized_derivation,
    quasiderivation,
  };

  Tag tag = Tag::derivation;
  Scalar weight;
  std::vector<Matrix> aux;

  static OperatorKind derivation(const Scalar& weight = Scalar(0));
  static OperatorKind rota_baxter(const Scalar& weight = Scalar(0));
  static OperatorKind centroid();
  static OperatorKind reynolds();
  static OperatorKind averaging();
  static OperatorKind nijenhuis();
  static OperatorKind central_derivation();
  /// Binary form expects aux = {D', D''} with an optional chained D''';
  /// ternary form expects aux = {D', D'', D'''}.
  static OperatorKind generalized_derivation(std::vector<Matrix> aux);
  /// Binary form expects aux = {D'} with an optional chained D'';
  /// ternary form expects aux = {D', D''}.
  static OperatorKind quasiderivation(std::vector<Matrix> aux);

  /// Kebab-case tag name ("rota-baxter", "central-derivation", ...).
  std::string name() const;
  static Tag tag_from_name(const std::string& name);
};

/// Verify the kind's defining identity for `op` on all basis pairs of `b`.
///
/// Identities checked per kind (D = op, lambda = kind.weight):
///   derivation:          D[x,y] = [Dx,y] + [x,Dy] + lambda [x,y]
///   rota_baxter:         [Dx,Dy] = D([Dx,y] + [x,Dy] + lambda [x,y])
///   centroid:            D[x,y] = [Dx,y]  and  D[x,y] = [x,Dy]
///   reynolds:            D[x,y] = D([Dx,y] + [x,Dy] - [Dx,Dy])
///   averaging:           D[Dx,y] = [Dx,Dy]  and  D[x,Dy] = [Dx,Dy]
///   nijenhuis:           [Dx,Dy] = D([Dx,y] + [x,Dy] - D[x,y])
///   central_derivation:  D[x,y] = 0, [Dx,y] = 0, [x,Dy] = 0
///   generalized:         D''[x,y] = [Dx,y] + [x,D'y]   (chain, if D''' given:
///                        D'''[x,y] = [Dx,y] + [x,D''y])
///   quasiderivation:     D'[x,y] = [Dx,y] + [x,Dy]     (chain, if D'' given:
///                        D''[x,y] = [D'x,y] + [x,D'y])
CheckReport check_binary_operator(const BinaryAlgebra& b, const OperatorKind& kind,
                                  const Matrix& op);

/// Verify the kind's ternary identity for `op` on all basis triples of `t`.
///
/// Identities checked per kind (D = op, lambda = kind.weight):
///   derivation:          D[x,y,z] = [Dx,Dy,z] + [Dx,y,Dz] + [x,Dy,Dz]
///                         + lambda([Dx,y,z] + [x,Dy,z] + [x,y,Dz]) + lambda^2 [x,y,z]
///   rota_baxter:         [Dx,Dy,Dz] = D(same right-hand sum as derivation)
///   centroid:            D[x,y,z] = [Dx,y,z] = [x,Dy,z] = [x,y,Dz]
///   reynolds:            [Dx,Dy,Dz] = D([Dx,Dy,z] + [Dx,y,Dz] + [x,Dy,Dz] - [Dx,Dy,Dz])
///   averaging:           D[Dx,Dy,z] = D[Dx,y,Dz] = D[x,Dy,Dz] = [Dx,Dy,Dz]
///   nijenhuis:           [Dx,Dy,Dz] = D([Dx,Dy,z]+[Dx,y,Dz]+[x,Dy,Dz])
///                         - D^2([Dx,y,z]+[x,Dy,z]+[x,y,Dz]) + D^3 [x,y,z]
///   central_derivation:  D[x,y,z] = 0 and zero in each slot
///   generalized:         D'''[x,y,z] = [Dx,y,z] + [x,D'y,z] + [x,y,D''z]
///   quasiderivation:     D''[x,y,z] = [D'x,y,z] + [x,Dy,z] + [x,y,Dz]
CheckReport check_ternary_operator(const TernaryAlgebra& t, const OperatorKind& kind,
                                   const Matrix& op);

/// Operator-induced binary brackets.
BinaryAlgebra nijenhuis_sum_bracket(const BinaryAlgebra& b, const Matrix& n);   // [Nx,y]+[x,Ny]+[x,y]
BinaryAlgebra averaging_left_bracket(const BinaryAlgebra& b, const Matrix& beta);  // [Bx,y]
BinaryAlgebra rota_baxter_bracket(const BinaryAlgebra& b, const Matrix& r,
                                  const Scalar& weight);  // [Rx,y]+[x,Ry]+w[x,y]

/// Operator-induced ternary brackets.
TernaryAlgebra averaging_bracket(const TernaryAlgebra& t, const Matrix& beta);  // [Bx,By,z]
TernaryAlgebra rota_baxter0_bracket(const TernaryAlgebra& t,
                                    const Matrix& r);  // [Rx,Ry,z]+[Rx,y,Rz]+[x,Ry,Rz]
/// Apply the averaging bracket to both members of a bracket pair.
std::pair<TernaryAlgebra, TernaryAlgebra> averaging_pair_brackets(const TernaryAlgebra& t1,
                                                                  const TernaryAlgebra& t2,
                                                                  const Matrix& beta);
/// {x,y,z} with theta inserted in the first `variant` slots (variant 1..3).
TernaryAlgebra centroid_bracket_family(const TernaryAlgebra& t, const Matrix& theta, int variant);

/// Same operator checked both on `b` and, with the auxiliaries rebuilt for
/// the ternary identity shape, on the associated ternary bracket of `b`.
struct TransferReport {
  CheckReport binary;
  CheckReport ternary;

  bool implication_holds() const { return !binary.pass() || ternary.pass(); }
  /// Single report with "binary/" and "ternary/" prefixes and the verdict flags.
  CheckReport combined() const;
};

TransferReport check_operator_transfer(const BinaryAlgebra& b, const OperatorKind& kind,
                                       const Matrix& op);

/// Mixed averaging identity for a pair of operators on all basis triples:
///   [B2[B1 x,y],z] + [B1[B2 x,y],z] = [[B1 x,B2 y],z] + [[B2 x,B1 y],z]
/// and, when `strict`, also the unbracketed form on basis pairs:
///   B2[B1 x,y] + B1[B2 x,y] = [B1 x,B2 y] + [B2 x,B1 y].
/// Flags report whether the operators commute and whether each is injective.
CheckReport check_compatible_averaging(const BinaryAlgebra& b, const Matrix& b1, const Matrix& b2,
                                       bool strict = false);

/// Verify that R satisfies the weighted ternary Rota-Baxter identity and that
/// R^{-1} satisfies the matching weighted derivation identity. Throws
/// SingularError when R is not invertible.
CheckReport check_inverse_rb_derivation(const TernaryAlgebra& t, const Matrix& r,
                                        const Scalar& weight);

/// Case report for the square of a candidate Nijenhuis operator:
/// N^2 = 0 pairs the Nijenhuis identity with weight-0 Rota-Baxter (verdicts
/// must agree), N^2 = N pairs it with weight -1 (Rota-Baxter pass must imply
/// Nijenhuis pass); any other square leaves only the Nijenhuis verdict.
struct NijenhuisRbReport {
  bool square_zero = false;
  bool square_idempotent = false;
  CheckReport nijenhuis;
  std::optional<CheckReport> rota_baxter;
  Scalar rb_weight;

  bool implication_holds() const;
  CheckReport combined() const;
};

NijenhuisRbReport check_nijenhuis_rb_equivalence(const TernaryAlgebra& t, const Matrix& n);

/// Exact basis of the operators satisfying a linear identity class.
/// Supported: binary centroid / central_derivation / derivation (weight 0);
/// ternary centroid / central_derivation. Everything else throws
/// UnsupportedError (their identities are not linear in the operator).
std::vector<Matrix> solve_operator_space(const BinaryAlgebra& b, const OperatorKind& kind);
std::vector<Matrix> solve_operator_space(const TernaryAlgebra& t, const OperatorKind& kind);

}  // namespace tlz
