#pragma once

#include <optional>
#include <utility>

#include "tlz/algebra.hpp"
#include "tlz/matrix.hpp"
#include "tlz/report.hpp"
#include "tlz/tensor.hpp"

namespace tlz {

/// Module actions for a binary bracket: left action l(x, m) with tensor
/// profile (n, m, m) and right action r(m, x) with profile (m, n, m); the
/// last index is always the output coordinate.
class BinaryBimodule {
 public:
  BinaryBimodule(Tensor left_action, Tensor right_action);

  int algebra_dim() const { return l_.dims()[0]; }
  int module_dim() const { return l_.dims()[1]; }
  const Tensor& l() const { return l_; }
  const Tensor& r() const { return r_; }

  Vec<Scalar> left(const Vec<Scalar>& x, const Vec<Scalar>& m) const;
  Vec<Scalar> right(const Vec<Scalar>& m, const Vec<Scalar>& x) const;

 private:
  Tensor l_, r_;
};

/// Module actions for a ternary bracket, one per module slot:
/// l1(m, x, y) with profile (m, n, n, m), l2(x, m, y) with (n, m, n, m),
/// l3(x, y, m) with (n, n, m, m).
class TernaryBimodule {
 public:
  TernaryBimodule(Tensor l1, Tensor l2, Tensor l3);

  int algebra_dim() const { return l1_.dims()[1]; }
  int module_dim() const { return l1_.dims()[0]; }
  const Tensor& l1() const { return l1_; }
  const Tensor& l2() const { return l2_; }
  const Tensor& l3() const { return l3_; }

  Vec<Scalar> act1(const Vec<Scalar>& m, const Vec<Scalar>& x, const Vec<Scalar>& y) const;
  Vec<Scalar> act2(const Vec<Scalar>& x, const Vec<Scalar>& m, const Vec<Scalar>& y) const;
  Vec<Scalar> act3(const Vec<Scalar>& x, const Vec<Scalar>& y, const Vec<Scalar>& m) const;

 private:
  Tensor l1_, l2_, l3_;
};

/// Representation by three families of module operators indexed by algebra
/// pairs; each tensor has profile (n, n, m, m), so lambda(x, y) acting on v
/// is apply(lambda, {x, y, v}).
class Representation {
 public:
  Representation(Tensor lambda, Tensor mu, Tensor rho);

  int algebra_dim() const { return lambda_.dims()[0]; }
  int module_dim() const { return lambda_.dims()[2]; }
  const Tensor& lambda() const { return lambda_; }
  const Tensor& mu() const { return mu_; }
  const Tensor& rho() const { return rho_; }

  /// The m-by-m operator matrices at (possibly non-basis) algebra arguments.
  Matrix lambda_op(const Vec<Scalar>& x, const Vec<Scalar>& y) const;
  Matrix mu_op(const Vec<Scalar>& x, const Vec<Scalar>& y) const;
  Matrix rho_op(const Vec<Scalar>& x, const Vec<Scalar>& y) const;

 private:
  Tensor lambda_, mu_, rho_;
};

/// Module-valued trilinear map on the algebra, tensor profile (n, n, n, m).
class Cocycle {
 public:
  explicit Cocycle(Tensor w);

  int algebra_dim() const { return w_.dims()[0]; }
  int module_dim() const { return w_.dims()[3]; }
  const Tensor& w() const { return w_; }

  Vec<Scalar> value(const Vec<Scalar>& x, const Vec<Scalar>& y, const Vec<Scalar>& z) const;

 private:
  Tensor w_;
};

/// A linear map V -> L together with the representation it is measured
/// against; `t` has algebra_dim rows and module_dim columns.
struct OOperatorData {
  Matrix t;
  Representation rep;

  OOperatorData(Matrix t, Representation rep);
};

/// Bracket actions of an algebra on itself.
BinaryBimodule regular_bimodule(const BinaryAlgebra& b);
TernaryBimodule regular_bimodule(const TernaryAlgebra& t);
Representation adjoint_representation(const TernaryAlgebra& t);

BinaryBimodule zero_binary_bimodule(int algebra_dim, int module_dim);
TernaryBimodule zero_ternary_bimodule(int algebra_dim, int module_dim);
Representation zero_representation(int algebra_dim, int module_dim);

/// Blockwise direct sum of two module structures over the same algebra.
TernaryBimodule direct_sum(const TernaryBimodule& a, const TernaryBimodule& b);

/// The binary Leibniz identity with the module element placed in each of the
/// three argument slots ("bimodule-slot1".."bimodule-slot3").
CheckReport check_binary_bimodule(const BinaryAlgebra& b, const BinaryBimodule& m);

/// The ternary Leibniz identity with the module element placed in each of
/// the five argument slots ("bimodule-slot1".."bimodule-slot5").
CheckReport check_ternary_bimodule(const TernaryAlgebra& t, const TernaryBimodule& m);

/// Ternary actions over the nested bracket of a binary algebra:
/// l1(m,x,y) = r(m,[x,y]), l2(x,m,y) = l(x, r(m,y)), l3(x,y,m) = l(x, l(y,m)).
TernaryBimodule bimodule_from_binary(const BinaryAlgebra& b, const BinaryBimodule& m);

/// Mutually inverse reindexings between the action and operator pictures:
/// lambda(x,y)m = l3(x,y,m), mu(x,y)m = l2(x,m,y), rho(x,y)m = l1(m,x,y).
Representation rep_from_bimodule(const TernaryBimodule& m);
TernaryBimodule bimodule_from_rep(const Representation& r);

/// The five operator equations of a representation on all basis 4-tuples.
CheckReport check_representation(const TernaryAlgebra& t, const Representation& r);

/// Both pure bimodule checks plus, for each of the five axioms, the mixed
/// identity obtained by splitting outer and inner operations across the two
/// structures and summing the two assignments ("mixed-slot1".."mixed-slot5").
CheckReport check_compatible_bimodule(const TernaryAlgebra& t1, const TernaryAlgebra& t2,
                                      const TernaryBimodule& m1, const TernaryBimodule& m2);

/// The five cross-term equations that make the entrywise sum of two
/// representations a representation again; flags record each pure verdict,
/// the sum verdict, and whether the cross route agrees with the sum route.
CheckReport check_compatible_representations(const TernaryAlgebra& t, const Representation& r1,
                                             const Representation& r2);

/// Weighted-zero operator pair compatibility between an algebra operator
/// `r_op` and a module operator `rm`, and the module actions it induces over
/// the descendent bracket.
CheckReport check_rb_bimodule(const BinaryAlgebra& b, const Matrix& r_op, const BinaryBimodule& m,
                              const Matrix& rm);
BinaryBimodule induced_bimodule(const BinaryAlgebra& b, const Matrix& r_op,
                                const BinaryBimodule& m, const Matrix& rm);
CheckReport check_rb_bimodule(const TernaryAlgebra& t, const Matrix& r_op,
                              const TernaryBimodule& m, const Matrix& rm);
TernaryBimodule induced_bimodule(const TernaryAlgebra& t, const Matrix& r_op,
                                 const TernaryBimodule& m, const Matrix& rm);

/// Seven-term closedness condition for a module-valued trilinear map.
CheckReport check_cocycle(const TernaryAlgebra& t, const TernaryBimodule& m, const Cocycle& w);

/// Bracket on L+M (algebra coordinates first):
/// [x+m1, y+m2, z+m3] = [x,y,z] + l1(m1,y,z) + l2(x,m2,z) + l3(x,y,m3) + w(x,y,z).
TernaryAlgebra semidirect(const TernaryAlgebra& t, const TernaryBimodule& m,
                          const std::optional<Cocycle>& w = std::nullopt);

/// Same bracket written through representation operators:
/// [x+m1, y+m2, z+m3] = [x,y,z] + rho(y,z)m1 + mu(x,z)m2 + lambda(x,y)m3.
/// Implemented independently of `semidirect`; the two agree exactly.
TernaryAlgebra semidirect_from_rep(const TernaryAlgebra& t, const Representation& r);

/// The pair of semidirect brackets of a compatible pair with a bimodule pack.
std::pair<TernaryAlgebra, TernaryAlgebra> compatible_semidirect(const TernaryAlgebra& t1,
                                                                const TernaryAlgebra& t2,
                                                                const TernaryBimodule& m1,
                                                                const TernaryBimodule& m2);

/// [Tu,Tv,Tw] = T(lambda(Tu,Tv)w + mu(Tu,Tw)v + rho(Tv,Tw)u) on basis triples of V.
CheckReport check_o_operator(const OOperatorData& data, const TernaryAlgebra& l);

/// [u1,u2,u3]_T = lambda(Tu1,Tu2)u3 + mu(Tu1,Tu3)u2 + rho(Tu2,Tu3)u1 on V.
TernaryAlgebra o_operator_bracket(const OOperatorData& data);

/// Morphism conditions from `from` to `to` over the algebra `l`: f is a
/// bracket morphism of l, to.t composed with phi equals f composed with
/// from.t, and phi intertwines each family of representation operators.
/// The flag "phi-bracket-homomorphism" reports whether phi also intertwines
/// the two induced brackets (implied by the conditions; not part of the verdict).
CheckReport check_o_morphism(const Matrix& f, const Matrix& phi, const OOperatorData& from,
                             const OOperatorData& to, const TernaryAlgebra& l);

/// Dual-basis representation: each operator is minus the transpose.
Representation dual_representation(const Representation& r);

}  // namespace tlz
