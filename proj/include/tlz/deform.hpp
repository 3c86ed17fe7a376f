#pragma once

#include "tlz/algebra.hpp"
#include "tlz/matrix.hpp"
#include "tlz/modrep.hpp"
#include "tlz/report.hpp"
#include "tlz/tensor.hpp"

namespace tlz {

/// One-parameter deformation data for a ternary algebra with a
/// representation: the bracket family is
///   [x,y,z]_s = [x,y,z] + s*w1(x,y,z) + s^2*w2(x,y,z)
/// and each operator family lambda/mu/rho is deformed the same way by the
/// corresponding pair of profile (n,n,m,m) tensors.
struct DeformationData {
  Tensor w1, w2;    ///< bracket corrections, profile (n,n,n,n)
  Tensor wl1, wl2;  ///< lambda-family corrections
  Tensor wm1, wm2;  ///< mu-family corrections
  Tensor wr1, wr2;  ///< rho-family corrections
};

DeformationData zero_deformation(int algebra_dim, int module_dim);

/// An operator pair: `n` acts on the algebra, `t` on the module.
struct PairData {
  Matrix n;
  Matrix t;
  PairData(Matrix n_in, Matrix t_in);
};

/// Degree-by-degree equation system for the deformed family to remain a
/// ternary Leibniz algebra with a representation. The parameter coefficient
/// of each axiom is assembled by convolving the degree pieces of the data;
/// violations are grouped as bracket-degree-0..4 (Leibniz identity
/// coefficients, tuple (i,j,k,l,p)) and rep-degree-0..4 (representation
/// axiom coefficients, tuple (family 1..5, i,j,k,l, module index)). The
/// degree-0 groups restate the base axioms so the verdict matches the
/// expansion checker on arbitrary input.
CheckReport check_deformation_equations(const TernaryAlgebra& alg, const Representation& rep,
                                        const DeformationData& data);

/// Independent route to the same verdict: forms the bracket and operator
/// families with polynomial coefficients, evaluates the ternary Leibniz
/// identity and the five representation axioms verbatim, and requires every
/// parameter coefficient to vanish. Group names match
/// check_deformation_equations.
CheckReport check_deformation_by_expansion(const TernaryAlgebra& alg, const Representation& rep,
                                           const DeformationData& data);

/// N must be a Nijenhuis operator on the algebra (absorbed as nijenhuis/*)
/// and T must satisfy, for each operator family op in {lambda, mu, rho} and
/// all x, y ("pair-lambda", "pair-mu", "pair-rho", tuple (i,j)):
///   op(Nx,Ny) T = T(op(Nx,Ny) + op(Nx,y)T + op(x,Ny)T)
///                 - T^2(op(x,y)T + op(Nx,y) + op(x,Ny)) + T^3 op(x,y).
CheckReport check_nijenhuis_pair(const TernaryAlgebra& alg, const Representation& rep,
                                 const PairData& pair);

/// Dual form of the pair condition ("dual-pair-lambda/mu/rho"): N Nijenhuis
/// on the algebra and, for each family,
///   op(x,y) T^3 = T op(Nx,Ny) - (op(Nx,Ny) + T op(Nx,y) + T op(x,Ny)) T
///                 + (T op(x,y) + op(Nx,y) + op(x,Ny)) T^2.
/// Transposing the direct condition and negating shows (N,T) satisfies the
/// direct form on a representation exactly when (N, transpose T) satisfies
/// this form on the dual representation.
CheckReport check_dual_nijenhuis_pair(const TernaryAlgebra& alg, const Representation& rep,
                                      const PairData& pair);

/// Deformation generated by an operator pair. Writing
///   A(x,y,z) = [Nx,y,z] + [x,Ny,z] + [x,y,Nz],
///   B(x,y,z) = [Nx,Ny,z] + [Nx,y,Nz] + [x,Ny,Nz],
/// the bracket corrections are the Nijenhuis-twisted combinations
///   w1 = A - N([x,y,z]),   w2 = B - N(A) + N^2([x,y,z]),
/// chosen so that 1 + sN transports the deformed bracket back onto the base
/// bracket degree by degree (the degree-3 remainder is exactly the Nijenhuis
/// identity of N). The operator families use, for op in {lambda,mu,rho},
///   w_op1(x,y) = op(x,y)T + op(Nx,y) + op(x,Ny) - T op(x,y),
///   w_op2(x,y) = op(Nx,Ny) + op(Nx,y)T + op(x,Ny)T - T w_op1(x,y),
/// whose degree-3 remainder is exactly the pair condition on T. When the
/// pair passes check_nijenhuis_pair the result passes both deformation
/// checkers and check_equivalence against the zero deformation.
DeformationData deformation_from_pair(const TernaryAlgebra& alg, const Representation& rep,
                                      const PairData& pair);

/// Equivalence of two deformations via the isomorphism (1 + sN, 1 + sT):
///   (1+sN) [x,y,z]^B_s            = [(1+sN)x, (1+sN)y, (1+sN)z]^A_s
///   (1+sT) op^B_s(x,y)            = op^A_s((1+sN)x, (1+sN)y) (1+sT)
/// checked coefficientwise in the parameter; identities
/// "equivalence-bracket" (tuple (i,j,k,degree)) and
/// "equivalence-lambda/mu/rho" (tuple (i,j,module index,degree)).
CheckReport check_equivalence(const TernaryAlgebra& alg, const Representation& rep,
                              const DeformationData& a, const DeformationData& b,
                              const PairData& pair);

/// Block-diagonal sum N (+) T as a single operator on the semidirect algebra
/// of the representation, run through the ternary Nijenhuis check (absorbed
/// as sum-operator/*). Flags record whether the pair condition holds, whether
/// the summed operator passes, and whether pair-pass implies sum-pass.
CheckReport pair_sum_nijenhuis(const TernaryAlgebra& alg, const Representation& rep,
                               const PairData& pair);

/// For data whose degree-2 part vanishes identically, the deformation
/// condition splits into four standalone statements, checked here:
///   new-bracket/*            w1 is itself a ternary Leibniz bracket,
///   mixed-compatibility      the base bracket and w1 are compatible,
///   new-representation/*     (wl1, wm1, wr1) represents (L, w1),
///   summed-representation/*  the summed triple represents (L, base + w1).
/// Data with a nonzero degree-2 part is rejected with UnsupportedError.
CheckReport linear_deformation_check(const TernaryAlgebra& alg, const Representation& rep,
                                     const DeformationData& data);

}  // namespace tlz
