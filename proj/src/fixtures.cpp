#include "tlz/fixtures.hpp"

namespace tlz {

BinaryAlgebra abelian_binary(int n) { return BinaryAlgebra(n); }

TernaryAlgebra abelian_ternary(int n) { return TernaryAlgebra(n); }

BinaryAlgebra heisenberg2() {
  BinaryAlgebra b(2);
  b.c().at({0, 0, 1}) = 1;
  return b;
}

BinaryAlgebra sl2() {
  BinaryAlgebra b(3);
  b.c().at({0, 1, 2}) = 1;
  b.c().at({1, 0, 2}) = -1;
  b.c().at({2, 0, 0}) = 2;
  b.c().at({0, 2, 0}) = -2;
  b.c().at({2, 1, 1}) = -2;
  b.c().at({1, 2, 1}) = 2;
  return b;
}

BinaryAlgebra solvable2() {
  BinaryAlgebra b(2);
  b.c().at({0, 1, 0}) = 1;
  b.c().at({1, 0, 0}) = -1;
  return b;
}

BinaryAlgebra not_leibniz2() {
  BinaryAlgebra b(2);
  b.c().at({0, 0, 0}) = 1;
  return b;
}

TernaryAlgebra not_ternary_leibniz1() {
  TernaryAlgebra t(1);
  t.t().at({0, 0, 0, 0}) = 1;
  return t;
}

CommAssocAlgebra dual_numbers() {
  Tensor p({2, 2, 2});
  p.at({0, 0, 0}) = 1;
  p.at({0, 1, 1}) = 1;
  p.at({1, 0, 1}) = 1;
  return CommAssocAlgebra(p);
}

Matrix shift_matrix(int n) {
  Matrix m(n, n);
  for (int j = 1; j < n; ++j) m.at(j - 1, j) = 1;
  return m;
}

Scalar random_scalar(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, 3);
  return Scalar(num(rng), den(rng));
}

Matrix random_matrix(std::mt19937_64& rng, int rows, int cols, long bound) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m.at(i, j) = random_scalar(rng, bound);
  }
  return m;
}

BinaryAlgebra random_nilpotent2_binary(std::mt19937_64& rng, int gens, int center) {
  BinaryAlgebra b(gens + center);
  for (int i = 0; i < gens; ++i) {
    for (int j = 0; j < gens; ++j) {
      for (int a = 0; a < center; ++a) b.c().at({i, j, gens + a}) = random_scalar(rng, 3);
    }
  }
  return b;
}

TernaryAlgebra random_nilpotent2_ternary(std::mt19937_64& rng, int gens, int center) {
  TernaryAlgebra t(gens + center);
  for (int i = 0; i < gens; ++i) {
    for (int j = 0; j < gens; ++j) {
      for (int k = 0; k < gens; ++k) {
        for (int a = 0; a < center; ++a) t.t().at({i, j, k, gens + a}) = random_scalar(rng, 3);
      }
    }
  }
  return t;
}

Representation shift_representation(std::mt19937_64& rng, int n, int m) {
  Tensor lambda({n, n, m, m});
  Tensor mu({n, n, m, m});
  Tensor rho({n, n, m, m});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // op(e_i, e_j) = coefficient * E(0, m-1); entry (b, a) sits at index
      // {i, j, a, b}, so the corner matrix populates {i, j, m-1, 0}.
      lambda.at({i, j, m - 1, 0}) = random_scalar(rng, 3);
      mu.at({i, j, m - 1, 0}) = random_scalar(rng, 3);
      rho.at({i, j, m - 1, 0}) = random_scalar(rng, 3);
    }
  }
  return Representation(std::move(lambda), std::move(mu), std::move(rho));
}

DeformationData random_deformation(std::mt19937_64& rng, int n, int m) {
  auto fill = [&rng](Tensor& t) {
    for (auto& v : t.data()) v = random_scalar(rng, 2);
  };
  DeformationData data{Tensor({n, n, n, n}), Tensor({n, n, n, n}), Tensor({n, n, m, m}),
                       Tensor({n, n, m, m}), Tensor({n, n, m, m}), Tensor({n, n, m, m}),
                       Tensor({n, n, m, m}), Tensor({n, n, m, m})};
  fill(data.w1);
  fill(data.w2);
  fill(data.wl1);
  fill(data.wl2);
  fill(data.wm1);
  fill(data.wm2);
  fill(data.wr1);
  fill(data.wr2);
  return data;
}

}  // namespace tlz
