#pragma once

#include <array>

#include "tlz/matrix.hpp"
#include "tlz/report.hpp"
#include "tlz/tensor.hpp"

namespace tlz {

/// Finite-dimensional binary bracket given by structure constants:
/// [e_i, e_j] = sum_k c[i][j][k] e_k.
class BinaryAlgebra {
 public:
  explicit BinaryAlgebra(int dim) : c_(std::vector<int>{dim, dim, dim}) {}
  explicit BinaryAlgebra(Tensor c);

  int dim() const { return c_.dims()[0]; }
  const Tensor& c() const { return c_; }
  Tensor& c() { return c_; }

  Vec<Scalar> bracket(int i, int j) const;
  Vec<Scalar> bracket(const Vec<Scalar>& x, const Vec<Scalar>& y) const;

 private:
  Tensor c_;
};

/// Finite-dimensional ternary bracket: [e_i, e_j, e_k] = sum_l t[i][j][k][l] e_l.
class TernaryAlgebra {
 public:
  explicit TernaryAlgebra(int dim) : t_(std::vector<int>{dim, dim, dim, dim}) {}
  explicit TernaryAlgebra(Tensor t);

  int dim() const { return t_.dims()[0]; }
  const Tensor& t() const { return t_; }
  Tensor& t() { return t_; }

  Vec<Scalar> bracket(int i, int j, int k) const;
  Vec<Scalar> bracket(const Vec<Scalar>& x, const Vec<Scalar>& y, const Vec<Scalar>& z) const;

 private:
  Tensor t_;
};

/// Commutative associative algebra with a validating constructor: the
/// structure constants are rejected (std::invalid_argument, witness tuple in
/// the message) unless the product is commutative and associative.
class CommAssocAlgebra {
 public:
  explicit CommAssocAlgebra(Tensor p);

  int dim() const { return p_.dims()[0]; }
  const Tensor& p() const { return p_; }

  Vec<Scalar> product(const Vec<Scalar>& a, const Vec<Scalar>& b) const;

 private:
  Tensor p_;
};

/// Right Leibniz identity [[x,y],z] = [x,[y,z]] + [[x,z],y] on all basis triples.
CheckReport check_leibniz(const BinaryAlgebra& a);

/// Commutativity ("commutative", pairs) and associativity ("associative",
/// triples) of a raw product table of profile (n, n, n).
CheckReport check_comm_assoc(const Tensor& p);

/// Ternary right-Leibniz identity
/// [[x,y,z],t,u] = [x,y,[z,t,u]] + [x,[y,t,u],z] + [[x,t,u],y,z]
/// on all basis 5-tuples.
CheckReport check_ternary_leibniz(const TernaryAlgebra& a);

/// Both brackets individually Leibniz plus the six-term mixed identity.
CheckReport check_compatible_leibniz(const BinaryAlgebra& a1, const BinaryAlgebra& a2);

/// Both brackets individually ternary Leibniz plus the eight-term mixed identity.
CheckReport check_compatible_ternary(const TernaryAlgebra& a1, const TernaryAlgebra& a2);

BinaryAlgebra pencil(const BinaryAlgebra& a1, const BinaryAlgebra& a2, const Scalar& k1,
                     const Scalar& k2);
TernaryAlgebra pencil(const TernaryAlgebra& a1, const TernaryAlgebra& a2, const Scalar& k1,
                      const Scalar& k2);

/// Associated ternary bracket {x,y,z} = [x,[y,z]].
TernaryAlgebra ternary_from_binary(const BinaryAlgebra& a);

/// Binary bracket on the tensor square: {a⊗b, c⊗d} = a⊗[b,c,d] + [a,c,d]⊗b,
/// basis e_i⊗e_j at index i*n + j.
BinaryAlgebra tensor_square_leibniz(const TernaryAlgebra& a);

/// Componentwise bracket on the direct sum, first summand's block first.
TernaryAlgebra direct_sum(const TernaryAlgebra& a, const TernaryAlgebra& b);

/// Bracket {a⊗x, b⊗y, c⊗z} = (abc)⊗[x,y,z] on the lexicographic product
/// basis (algebra factor major): a_α⊗e_i at index α*dim(L) + i.
TernaryAlgebra scalar_extension(const CommAssocAlgebra& a, const TernaryAlgebra& t);

namespace detail {

/// Defect of the binary Leibniz identity with the outer/inner bracket split:
/// [[x,y]_in, z]_out − [x,[y,z]_in]_out − [[x,z]_in, y]_out at a basis triple.
Vec<Scalar> leibniz_defect(const Tensor& outer, const Tensor& inner, int x, int y, int z);

/// Defect of the ternary Leibniz identity with the outer/inner split:
/// [[x,y,z]_in,t,u]_out − [x,y,[z,t,u]_in]_out − [x,[y,t,u]_in,z]_out − [[x,t,u]_in,y,z]_out.
Vec<Scalar> ternary_leibniz_defect(const Tensor& outer, const Tensor& inner, int x, int y, int z,
                                   int t, int u);

}  // namespace detail

}  // namespace tlz
