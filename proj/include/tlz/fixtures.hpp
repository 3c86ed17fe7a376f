#pragma once

#include <random>

#include "tlz/algebra.hpp"
#include "tlz/deform.hpp"
#include "tlz/matrix.hpp"
#include "tlz/modrep.hpp"

namespace tlz {

/// Small catalog of concrete structures used by the test suites and shipped
/// as serialized fixtures. Every validity claim about them is re-derived by
/// the exhaustive checkers; nothing is asserted by construction.

BinaryAlgebra abelian_binary(int n);
TernaryAlgebra abelian_ternary(int n);

/// Dim 2, [e0,e0] = e1: a bracket with a one-dimensional square-zero image;
/// passes the binary Leibniz identity but is not antisymmetric.
BinaryAlgebra heisenberg2();

/// Dim 3 antisymmetric bracket [e0,e1] = e2, [e2,e0] = 2 e0, [e2,e1] = -2 e1.
BinaryAlgebra sl2();

/// Dim 2 antisymmetric bracket [e0,e1] = e0.
BinaryAlgebra solvable2();

/// Dim 2, [e0,e0] = e0: fails the binary Leibniz identity.
BinaryAlgebra not_leibniz2();

/// Dim 1, [e,e,e] = e: fails the ternary Leibniz identity.
TernaryAlgebra not_ternary_leibniz1();

/// Dim 2 commutative associative algebra with unit e0 and e1*e1 = 0.
CommAssocAlgebra dual_numbers();

/// Nilpotent single shift: e_j maps to e_{j-1}, e_0 maps to 0.
Matrix shift_matrix(int n);

/// Uniform numerator in [-bound, bound], denominator in {1, 2, 3}.
Scalar random_scalar(std::mt19937_64& rng, long bound);
Matrix random_matrix(std::mt19937_64& rng, int rows, int cols, long bound);

/// Random bracket whose generators multiply into an annihilated tail block:
/// basis splits as `gens` generators followed by `center` central vectors,
/// products of generators land in the central block, and every bracket with
/// a central argument vanishes. All triple brackets are zero, so the Leibniz
/// identity holds automatically, and any two such brackets over the same
/// split are compatible.
BinaryAlgebra random_nilpotent2_binary(std::mt19937_64& rng, int gens, int center);
TernaryAlgebra random_nilpotent2_ternary(std::mt19937_64& rng, int gens, int center);

/// Representation of the abelian ternary algebra of dim n on module dim m:
/// every operator is a random multiple of the corner matrix E(0, m-1). All
/// operator products vanish, so the five axioms hold with a zero bracket,
/// and the corner matrix annihilates the shift from both sides.
Representation shift_representation(std::mt19937_64& rng, int n, int m);

/// Unstructured deformation data (usually violating the degree equations).
DeformationData random_deformation(std::mt19937_64& rng, int n, int m);

}  // namespace tlz
