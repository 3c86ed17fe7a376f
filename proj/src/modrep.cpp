#include "tlz/modrep.hpp"

#include <cstddef>
#include <string>

#include "tlz/errors.hpp"

namespace tlz {

namespace {

std::string dims_str(const std::vector<int>& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(d[i]);
  }
  return out + ")";
}

void require_profile(const Tensor& t, const std::vector<int>& want, const char* what) {
  if (t.dims() != want) {
    throw ShapeError(std::string(what) + ": expected profile " + dims_str(want) + ", got " +
                     dims_str(t.dims()));
  }
}

void require_matrix(const Matrix& m, int rows, int cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw ShapeError(std::string(what) + ": expected a " + std::to_string(rows) + "x" +
                     std::to_string(cols) + " matrix, got " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()));
  }
}

Matrix op_at(const Tensor& t, int i, int j) {
  const int m = t.dims()[2];
  Matrix out(m, m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) out.at(b, a) = t.at({i, j, a, b});
  }
  return out;
}

Matrix op_vec(const Tensor& t, const Vec<Scalar>& x, const Vec<Scalar>& y) {
  const int n = t.dims()[0];
  const int m = t.dims()[2];
  Matrix out(m, m);
  for (int i = 0; i < n; ++i) {
    if (x[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y[static_cast<std::size_t>(j)].is_zero()) continue;
      const Scalar c = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
      for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) out.at(b, a) += c * t.at({i, j, a, b});
      }
    }
  }
  return out;
}

Vec<Scalar> mat_vec(const Matrix& m) {
  Vec<Scalar> out;
  out.reserve(static_cast<std::size_t>(m.rows()) * static_cast<std::size_t>(m.cols()));
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out.push_back(m.at(r, c));
  }
  return out;
}

}  // namespace

BinaryBimodule::BinaryBimodule(Tensor left_action, Tensor right_action)
    : l_(std::move(left_action)), r_(std::move(right_action)) {
  if (l_.dims().size() != 3) throw ShapeError("left action must be an arity-3 tensor");
  const int n = l_.dims()[0];
  const int m = l_.dims()[1];
  require_profile(l_, {n, m, m}, "left action");
  require_profile(r_, {m, n, m}, "right action");
}

Vec<Scalar> BinaryBimodule::left(const Vec<Scalar>& x, const Vec<Scalar>& m) const {
  return apply(l_, {x, m});
}

Vec<Scalar> BinaryBimodule::right(const Vec<Scalar>& m, const Vec<Scalar>& x) const {
  return apply(r_, {m, x});
}

TernaryBimodule::TernaryBimodule(Tensor l1, Tensor l2, Tensor l3)
    : l1_(std::move(l1)), l2_(std::move(l2)), l3_(std::move(l3)) {
  if (l1_.dims().size() != 4) throw ShapeError("slot-1 action must be an arity-4 tensor");
  const int m = l1_.dims()[0];
  const int n = l1_.dims()[1];
  require_profile(l1_, {m, n, n, m}, "slot-1 action");
  require_profile(l2_, {n, m, n, m}, "slot-2 action");
  require_profile(l3_, {n, n, m, m}, "slot-3 action");
}

Vec<Scalar> TernaryBimodule::act1(const Vec<Scalar>& m, const Vec<Scalar>& x,
                                  const Vec<Scalar>& y) const {
  return apply(l1_, {m, x, y});
}

Vec<Scalar> TernaryBimodule::act2(const Vec<Scalar>& x, const Vec<Scalar>& m,
                                  const Vec<Scalar>& y) const {
  return apply(l2_, {x, m, y});
}

Vec<Scalar> TernaryBimodule::act3(const Vec<Scalar>& x, const Vec<Scalar>& y,
                                  const Vec<Scalar>& m) const {
  return apply(l3_, {x, y, m});
}

Representation::Representation(Tensor lambda, Tensor mu, Tensor rho)
    : lambda_(std::move(lambda)), mu_(std::move(mu)), rho_(std::move(rho)) {
  if (lambda_.dims().size() != 4) throw ShapeError("operator family must be an arity-4 tensor");
  const int n = lambda_.dims()[0];
  const int m = lambda_.dims()[2];
  require_profile(lambda_, {n, n, m, m}, "lambda family");
  require_profile(mu_, {n, n, m, m}, "mu family");
  require_profile(rho_, {n, n, m, m}, "rho family");
}

Matrix Representation::lambda_op(const Vec<Scalar>& x, const Vec<Scalar>& y) const {
  return op_vec(lambda_, x, y);
}
Matrix Representation::mu_op(const Vec<Scalar>& x, const Vec<Scalar>& y) const {
  return op_vec(mu_, x, y);
}
Matrix Representation::rho_op(const Vec<Scalar>& x, const Vec<Scalar>& y) const {
  return op_vec(rho_, x, y);
}

Cocycle::Cocycle(Tensor w) : w_(std::move(w)) {
  if (w_.dims().size() != 4) throw ShapeError("cocycle must be an arity-4 tensor");
  const int n = w_.dims()[0];
  const int m = w_.dims()[3];
  require_profile(w_, {n, n, n, m}, "cocycle");
}

Vec<Scalar> Cocycle::value(const Vec<Scalar>& x, const Vec<Scalar>& y, const Vec<Scalar>& z) const {
  return apply(w_, {x, y, z});
}

OOperatorData::OOperatorData(Matrix t_in, Representation rep_in)
    : t(std::move(t_in)), rep(std::move(rep_in)) {
  require_matrix(t, rep.algebra_dim(), rep.module_dim(), "module-to-algebra map");
}

BinaryBimodule regular_bimodule(const BinaryAlgebra& b) { return {b.c(), b.c()}; }

TernaryBimodule regular_bimodule(const TernaryAlgebra& t) { return {t.t(), t.t(), t.t()}; }

Representation adjoint_representation(const TernaryAlgebra& t) {
  return rep_from_bimodule(regular_bimodule(t));
}

BinaryBimodule zero_binary_bimodule(int algebra_dim, int module_dim) {
  return {Tensor({algebra_dim, module_dim, module_dim}),
          Tensor({module_dim, algebra_dim, module_dim})};
}

TernaryBimodule zero_ternary_bimodule(int algebra_dim, int module_dim) {
  return {Tensor({module_dim, algebra_dim, algebra_dim, module_dim}),
          Tensor({algebra_dim, module_dim, algebra_dim, module_dim}),
          Tensor({algebra_dim, algebra_dim, module_dim, module_dim})};
}

Representation zero_representation(int algebra_dim, int module_dim) {
  Tensor z({algebra_dim, algebra_dim, module_dim, module_dim});
  return {z, z, z};
}

TernaryBimodule direct_sum(const TernaryBimodule& a, const TernaryBimodule& b) {
  if (a.algebra_dim() != b.algebra_dim()) {
    throw ShapeError("direct sum of module structures needs a common algebra dimension");
  }
  const int n = a.algebra_dim();
  const int ma = a.module_dim();
  const int mb = b.module_dim();
  const int m = ma + mb;
  Tensor l1({m, n, n, m}), l2({n, m, n, m}), l3({n, n, m, m});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int p = 0; p < ma; ++p) {
        for (int q = 0; q < ma; ++q) {
          l1.at({p, i, j, q}) = a.l1().at({p, i, j, q});
          l2.at({i, p, j, q}) = a.l2().at({i, p, j, q});
          l3.at({i, j, p, q}) = a.l3().at({i, j, p, q});
        }
      }
      for (int p = 0; p < mb; ++p) {
        for (int q = 0; q < mb; ++q) {
          l1.at({ma + p, i, j, ma + q}) = b.l1().at({p, i, j, q});
          l2.at({i, ma + p, j, ma + q}) = b.l2().at({i, p, j, q});
          l3.at({i, j, ma + p, ma + q}) = b.l3().at({i, j, p, q});
        }
      }
    }
  }
  return {l1, l2, l3};
}

CheckReport check_binary_bimodule(const BinaryAlgebra& b, const BinaryBimodule& mod) {
  if (mod.algebra_dim() != b.dim()) {
    throw ShapeError("module actions are over dimension " + std::to_string(mod.algebra_dim()) +
                     " but the algebra has dimension " + std::to_string(b.dim()));
  }
  const int n = b.dim();
  const int m = mod.module_dim();
  CheckReport rep;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Vec<Scalar> x = basis_vec<Scalar>(n, i);
      const Vec<Scalar> y = basis_vec<Scalar>(n, j);
      const Vec<Scalar> bxy = b.bracket(i, j);
      for (int a = 0; a < m; ++a) {
        const Vec<Scalar> w = basis_vec<Scalar>(m, a);
        // module in the last slot: [[x,y],w] = [x,[y,w]] + [[x,w],y]
        rep.require("bimodule-slot3", {i, j, a}, mod.left(bxy, w),
                    vec_add(mod.left(x, mod.left(y, w)), mod.right(mod.left(x, w), y)));
        // module in the middle slot: [[x,w],y] = [x,[w,y]] + [[x,y],w]
        rep.require("bimodule-slot2", {i, a, j}, mod.right(mod.left(x, w), y),
                    vec_add(mod.left(x, mod.right(w, y)), mod.left(bxy, w)));
        // module in the first slot: [[w,x],y] = [w,[x,y]] + [[w,y],x]
        rep.require("bimodule-slot1", {a, i, j}, mod.right(mod.right(w, x), y),
                    vec_add(mod.right(w, bxy), mod.right(mod.right(w, y), x)));
      }
    }
  }
  return rep;
}

namespace {

/// One algebra-with-module-actions side of a polarized axiom evaluation.
struct TernaryStructure {
  const TernaryAlgebra* alg;
  const TernaryBimodule* mod;
};

/// Defect of the ternary Leibniz identity with the module element `w` in
/// argument position `slot` (1-based) and the algebra elements p1..p4 filling
/// the remaining positions in order. Operations applied last (the receiving
/// action) come from `o`, operations applied first (nested actions and
/// brackets) come from `in`. With o == in these are the plain bimodule
/// axioms; the compatibility equations sum the two mixed assignments.
Vec<Scalar> bimodule_slot_defect(int slot, const TernaryStructure& o, const TernaryStructure& in,
                                 const Vec<Scalar>& w, const Vec<Scalar>& p1, const Vec<Scalar>& p2,
                                 const Vec<Scalar>& p3, const Vec<Scalar>& p4) {
  const TernaryBimodule& om = *o.mod;
  const TernaryBimodule& im = *in.mod;
  const TernaryAlgebra& ia = *in.alg;
  switch (slot) {
    case 1: {
      Vec<Scalar> d = om.act1(im.act1(w, p1, p2), p3, p4);
      d = vec_sub(d, om.act1(w, p1, ia.bracket(p2, p3, p4)));
      d = vec_sub(d, om.act1(w, ia.bracket(p1, p3, p4), p2));
      d = vec_sub(d, om.act1(im.act1(w, p3, p4), p1, p2));
      return d;
    }
    case 2: {
      Vec<Scalar> d = om.act1(im.act2(p1, w, p2), p3, p4);
      d = vec_sub(d, om.act2(p1, w, ia.bracket(p2, p3, p4)));
      d = vec_sub(d, om.act2(p1, im.act1(w, p3, p4), p2));
      d = vec_sub(d, om.act2(ia.bracket(p1, p3, p4), w, p2));
      return d;
    }
    case 3: {
      Vec<Scalar> d = om.act1(im.act3(p1, p2, w), p3, p4);
      d = vec_sub(d, om.act3(p1, p2, im.act1(w, p3, p4)));
      d = vec_sub(d, om.act3(p1, ia.bracket(p2, p3, p4), w));
      d = vec_sub(d, om.act3(ia.bracket(p1, p3, p4), p2, w));
      return d;
    }
    case 4: {
      Vec<Scalar> d = om.act2(ia.bracket(p1, p2, p3), w, p4);
      d = vec_sub(d, om.act3(p1, p2, im.act2(p3, w, p4)));
      d = vec_sub(d, om.act2(p1, im.act2(p2, w, p4), p3));
      d = vec_sub(d, om.act1(im.act2(p1, w, p4), p2, p3));
      return d;
    }
    default: {
      Vec<Scalar> d = om.act3(ia.bracket(p1, p2, p3), p4, w);
      d = vec_sub(d, om.act3(p1, p2, im.act3(p3, p4, w)));
      d = vec_sub(d, om.act2(p1, im.act3(p2, p4, w), p3));
      d = vec_sub(d, om.act1(im.act3(p1, p4, w), p2, p3));
      return d;
    }
  }
}

std::vector<int> slot_tuple(int slot, int a, int i, int j, int k, int l) {
  std::vector<int> tuple = {i, j, k, l};
  tuple.insert(tuple.begin() + (slot - 1), a);
  return tuple;
}

template <class Defect>
void run_slot_axioms(CheckReport& rep, const std::string& prefix, int n, int m,
                     const Defect& defect) {
  for (int slot = 1; slot <= 5; ++slot) {
    const std::string identity = prefix + "-slot" + std::to_string(slot);
    for (int a = 0; a < m; ++a) {
      const Vec<Scalar> w = basis_vec<Scalar>(m, a);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          for (int k = 0; k < n; ++k) {
            for (int l = 0; l < n; ++l) {
              rep.require_zero(identity, slot_tuple(slot, a, i, j, k, l),
                               defect(slot, w, basis_vec<Scalar>(n, i), basis_vec<Scalar>(n, j),
                                      basis_vec<Scalar>(n, k), basis_vec<Scalar>(n, l)));
            }
          }
        }
      }
    }
  }
}

}  // namespace

CheckReport check_ternary_bimodule(const TernaryAlgebra& t, const TernaryBimodule& mod) {
  if (mod.algebra_dim() != t.dim()) {
    throw ShapeError("module actions are over dimension " + std::to_string(mod.algebra_dim()) +
                     " but the algebra has dimension " + std::to_string(t.dim()));
  }
  const TernaryStructure s{&t, &mod};
  CheckReport rep;
  run_slot_axioms(rep, "bimodule", t.dim(), mod.module_dim(),
                  [&](int slot, const Vec<Scalar>& w, const Vec<Scalar>& p1, const Vec<Scalar>& p2,
                      const Vec<Scalar>& p3, const Vec<Scalar>& p4) {
                    return bimodule_slot_defect(slot, s, s, w, p1, p2, p3, p4);
                  });
  return rep;
}

TernaryBimodule bimodule_from_binary(const BinaryAlgebra& b, const BinaryBimodule& mod) {
  if (mod.algebra_dim() != b.dim()) {
    throw ShapeError("module actions are over dimension " + std::to_string(mod.algebra_dim()) +
                     " but the algebra has dimension " + std::to_string(b.dim()));
  }
  const int n = b.dim();
  const int m = mod.module_dim();
  Tensor l1({m, n, n, m}), l2({n, m, n, m}), l3({n, n, m, m});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Vec<Scalar> x = basis_vec<Scalar>(n, i);
      const Vec<Scalar> y = basis_vec<Scalar>(n, j);
      const Vec<Scalar> bxy = b.bracket(i, j);
      for (int a = 0; a < m; ++a) {
        const Vec<Scalar> w = basis_vec<Scalar>(m, a);
        const Vec<Scalar> v1 = mod.right(w, bxy);                // r(m, [x,y])
        const Vec<Scalar> v2 = mod.left(x, mod.right(w, y));     // l(x, r(m,y))
        const Vec<Scalar> v3 = mod.left(x, mod.left(y, w));      // l(x, l(y,m))
        for (int c = 0; c < m; ++c) {
          l1.at({a, i, j, c}) = v1[static_cast<std::size_t>(c)];
          l2.at({i, a, j, c}) = v2[static_cast<std::size_t>(c)];
          l3.at({i, j, a, c}) = v3[static_cast<std::size_t>(c)];
        }
      }
    }
  }
  return {l1, l2, l3};
}

Representation rep_from_bimodule(const TernaryBimodule& m) {
  const int n = m.algebra_dim();
  const int md = m.module_dim();
  Tensor lambda({n, n, md, md}), mu({n, n, md, md}), rho({n, n, md, md});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int a = 0; a < md; ++a) {
        for (int b = 0; b < md; ++b) {
          lambda.at({i, j, a, b}) = m.l3().at({i, j, a, b});
          mu.at({i, j, a, b}) = m.l2().at({i, a, j, b});
          rho.at({i, j, a, b}) = m.l1().at({a, i, j, b});
        }
      }
    }
  }
  return {lambda, mu, rho};
}

TernaryBimodule bimodule_from_rep(const Representation& r) {
  const int n = r.algebra_dim();
  const int md = r.module_dim();
  Tensor l1({md, n, n, md}), l2({n, md, n, md}), l3({n, n, md, md});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int a = 0; a < md; ++a) {
        for (int b = 0; b < md; ++b) {
          l3.at({i, j, a, b}) = r.lambda().at({i, j, a, b});
          l2.at({i, a, j, b}) = r.mu().at({i, j, a, b});
          l1.at({a, i, j, b}) = r.rho().at({i, j, a, b});
        }
      }
    }
  }
  return {l1, l2, l3};
}

CheckReport check_representation(const TernaryAlgebra& t, const Representation& r) {
  if (r.algebra_dim() != t.dim()) {
    throw ShapeError("representation is over dimension " + std::to_string(r.algebra_dim()) +
                     " but the algebra has dimension " + std::to_string(t.dim()));
  }
  const int n = t.dim();
  std::vector<Matrix> lam, mu, rho;
  lam.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  mu.reserve(lam.capacity());
  rho.reserve(lam.capacity());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      lam.push_back(op_at(r.lambda(), i, j));
      mu.push_back(op_at(r.mu(), i, j));
      rho.push_back(op_at(r.rho(), i, j));
    }
  }
  const auto at = [n](const std::vector<Matrix>& ops, int i, int j) -> const Matrix& {
    return ops[static_cast<std::size_t>(i * n + j)];
  };

  CheckReport rep;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const Vec<Scalar> br_ijk = t.bracket(i, j, k);
        for (int l = 0; l < n; ++l) {
          const Vec<Scalar> el = basis_vec<Scalar>(n, l);
          const Vec<Scalar> ei = basis_vec<Scalar>(n, i);
          const Vec<Scalar> ej = basis_vec<Scalar>(n, j);
          const Vec<Scalar> br_jkl = t.bracket(j, k, l);
          const Vec<Scalar> br_ikl = t.bracket(i, k, l);
          const std::vector<int> tuple = {i, j, k, l};

          rep.require("rep-lambda-bracket", tuple, mat_vec(op_vec(r.lambda(), br_ijk, el)),
                      mat_vec(at(lam, i, j) * at(lam, k, l) + at(mu, i, k) * at(lam, j, l) +
                              at(rho, j, k) * at(lam, i, l)));
          rep.require("rep-mu-bracket", tuple, mat_vec(op_vec(r.mu(), br_ijk, el)),
                      mat_vec(at(lam, i, j) * at(mu, k, l) + at(mu, i, k) * at(mu, j, l) +
                              at(rho, j, k) * at(mu, i, l)));
          rep.require("rep-rho-lambda", tuple, mat_vec(at(rho, k, l) * at(lam, i, j)),
                      mat_vec(at(lam, i, j) * at(rho, k, l) + op_vec(r.lambda(), ei, br_jkl) +
                              op_vec(r.lambda(), br_ikl, ej)));
          rep.require("rep-rho-mu", tuple, mat_vec(at(rho, k, l) * at(mu, i, j)),
                      mat_vec(op_vec(r.mu(), ei, br_jkl) + at(mu, i, j) * at(rho, k, l) +
                              op_vec(r.mu(), br_ikl, ej)));
          rep.require("rep-rho-rho", tuple, mat_vec(at(rho, k, l) * at(rho, i, j)),
                      mat_vec(op_vec(r.rho(), ei, br_jkl) + op_vec(r.rho(), br_ikl, ej) +
                              at(rho, i, j) * at(rho, k, l)));
        }
      }
    }
  }
  return rep;
}

CheckReport check_compatible_bimodule(const TernaryAlgebra& t1, const TernaryAlgebra& t2,
                                      const TernaryBimodule& m1, const TernaryBimodule& m2) {
  if (t1.dim() != t2.dim() || m1.algebra_dim() != t1.dim() || m2.algebra_dim() != t1.dim() ||
      m1.module_dim() != m2.module_dim()) {
    throw ShapeError("compatible module structures need matching algebra and module dimensions");
  }
  CheckReport rep;
  rep.absorb("first/", check_ternary_bimodule(t1, m1));
  rep.absorb("second/", check_ternary_bimodule(t2, m2));

  const TernaryStructure s1{&t1, &m1};
  const TernaryStructure s2{&t2, &m2};
  run_slot_axioms(rep, "mixed", t1.dim(), m1.module_dim(),
                  [&](int slot, const Vec<Scalar>& w, const Vec<Scalar>& p1, const Vec<Scalar>& p2,
                      const Vec<Scalar>& p3, const Vec<Scalar>& p4) {
                    return vec_add(bimodule_slot_defect(slot, s1, s2, w, p1, p2, p3, p4),
                                   bimodule_slot_defect(slot, s2, s1, w, p1, p2, p3, p4));
                  });
  return rep;
}

CheckReport check_compatible_representations(const TernaryAlgebra& t, const Representation& r1,
                                             const Representation& r2) {
  if (r1.algebra_dim() != t.dim() || r2.algebra_dim() != t.dim() ||
      r1.module_dim() != r2.module_dim()) {
    throw ShapeError("compatible representations need matching algebra and module dimensions");
  }
  const int n = t.dim();
  std::vector<Matrix> l1v, m1v, r1v, l2v, m2v, r2v;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      l1v.push_back(op_at(r1.lambda(), i, j));
      m1v.push_back(op_at(r1.mu(), i, j));
      r1v.push_back(op_at(r1.rho(), i, j));
      l2v.push_back(op_at(r2.lambda(), i, j));
      m2v.push_back(op_at(r2.mu(), i, j));
      r2v.push_back(op_at(r2.rho(), i, j));
    }
  }
  const auto at = [n](const std::vector<Matrix>& ops, int i, int j) -> const Matrix& {
    return ops[static_cast<std::size_t>(i * n + j)];
  };

  CheckReport rep;
  const int m = r1.module_dim();
  const Vec<Scalar> zero = zero_vec<Scalar>(m * m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          const std::vector<int> tuple = {i, j, k, l};
          // Cross terms of the bracket-argument axioms.
          rep.require("cross-lambda-bracket", tuple,
                      mat_vec(at(l1v, i, j) * at(l2v, k, l) + at(l2v, i, j) * at(l1v, k, l) +
                              at(m1v, i, k) * at(l2v, j, l) + at(m2v, i, k) * at(l1v, j, l) +
                              at(r1v, j, k) * at(l2v, i, l) + at(r2v, j, k) * at(l1v, i, l)),
                      zero);
          rep.require("cross-mu-bracket", tuple,
                      mat_vec(at(l1v, i, j) * at(m2v, k, l) + at(l2v, i, j) * at(m1v, k, l) +
                              at(m1v, i, k) * at(m2v, j, l) + at(m2v, i, k) * at(m1v, j, l) +
                              at(r1v, j, k) * at(m2v, i, l) + at(r2v, j, k) * at(m1v, i, l)),
                      zero);
          // Cross terms of the commutation axioms.
          rep.require("cross-rho-lambda", tuple,
                      mat_vec(at(r1v, k, l) * at(l2v, i, j) + at(r2v, k, l) * at(l1v, i, j) -
                              at(l1v, i, j) * at(r2v, k, l) - at(l2v, i, j) * at(r1v, k, l)),
                      zero);
          rep.require("cross-rho-mu", tuple,
                      mat_vec(at(r1v, k, l) * at(m2v, i, j) + at(r2v, k, l) * at(m1v, i, j) -
                              at(m1v, i, j) * at(r2v, k, l) - at(m2v, i, j) * at(r1v, k, l)),
                      zero);
          rep.require("cross-rho-rho", tuple,
                      mat_vec(at(r1v, k, l) * at(r2v, i, j) + at(r2v, k, l) * at(r1v, i, j) -
                              at(r1v, i, j) * at(r2v, k, l) - at(r2v, i, j) * at(r1v, k, l)),
                      zero);
        }
      }
    }
  }

  const bool cross_ok = rep.pass();
  const bool first_ok = check_representation(t, r1).pass();
  const bool second_ok = check_representation(t, r2).pass();
  const Representation sum(r1.lambda() + r2.lambda(), r1.mu() + r2.mu(), r1.rho() + r2.rho());
  const bool sum_ok = check_representation(t, sum).pass();
  rep.flags()["first-is-representation"] = first_ok;
  rep.flags()["second-is-representation"] = second_ok;
  rep.flags()["sum-is-representation"] = sum_ok;
  rep.flags()["routes-agree"] = !(first_ok && second_ok) || (cross_ok == sum_ok);
  return rep;
}

CheckReport check_rb_bimodule(const BinaryAlgebra& b, const Matrix& r_op, const BinaryBimodule& m,
                              const Matrix& rm) {
  const int n = b.dim();
  const int md = m.module_dim();
  if (m.algebra_dim() != n) throw ShapeError("module actions and algebra dimensions differ");
  require_matrix(r_op, n, n, "algebra operator");
  require_matrix(rm, md, md, "module operator");
  CheckReport rep;
  for (int i = 0; i < n; ++i) {
    const Vec<Scalar> x = basis_vec<Scalar>(n, i);
    const Vec<Scalar> rx = r_op.col(i);
    for (int a = 0; a < md; ++a) {
      const Vec<Scalar> w = basis_vec<Scalar>(md, a);
      const Vec<Scalar> rw = rm.col(a);
      rep.require("rb-bimodule-left", {i, a}, m.left(rx, rw),
                  mat_apply(rm, vec_add(m.left(rx, w), m.left(x, rw))));
      rep.require("rb-bimodule-right", {a, i}, m.right(rw, rx),
                  mat_apply(rm, vec_add(m.right(rw, x), m.right(w, rx))));
    }
  }
  return rep;
}

BinaryBimodule induced_bimodule(const BinaryAlgebra& b, const Matrix& r_op,
                                const BinaryBimodule& m, const Matrix& rm) {
  const int n = b.dim();
  const int md = m.module_dim();
  if (m.algebra_dim() != n) throw ShapeError("module actions and algebra dimensions differ");
  require_matrix(r_op, n, n, "algebra operator");
  require_matrix(rm, md, md, "module operator");
  Tensor l({n, md, md}), r({md, n, md});
  for (int i = 0; i < n; ++i) {
    const Vec<Scalar> x = basis_vec<Scalar>(n, i);
    const Vec<Scalar> rx = r_op.col(i);
    for (int a = 0; a < md; ++a) {
      const Vec<Scalar> w = basis_vec<Scalar>(md, a);
      const Vec<Scalar> rw = rm.col(a);
      const Vec<Scalar> lv = vec_add(m.left(rx, w), m.left(x, rw));
      const Vec<Scalar> rv = vec_add(m.right(rw, x), m.right(w, rx));
      for (int c = 0; c < md; ++c) {
        l.at({i, a, c}) = lv[static_cast<std::size_t>(c)];
        r.at({a, i, c}) = rv[static_cast<std::size_t>(c)];
      }
    }
  }
  return {l, r};
}

CheckReport check_rb_bimodule(const TernaryAlgebra& t, const Matrix& r_op,
                              const TernaryBimodule& m, const Matrix& rm) {
  const int n = t.dim();
  const int md = m.module_dim();
  if (m.algebra_dim() != n) throw ShapeError("module actions and algebra dimensions differ");
  require_matrix(r_op, n, n, "algebra operator");
  require_matrix(rm, md, md, "module operator");
  CheckReport rep;
  for (int a = 0; a < md; ++a) {
    const Vec<Scalar> w = basis_vec<Scalar>(md, a);
    const Vec<Scalar> rw = rm.col(a);
    for (int i = 0; i < n; ++i) {
      const Vec<Scalar> x = basis_vec<Scalar>(n, i);
      const Vec<Scalar> rx = r_op.col(i);
      for (int j = 0; j < n; ++j) {
        const Vec<Scalar> y = basis_vec<Scalar>(n, j);
        const Vec<Scalar> ry = r_op.col(j);
        Vec<Scalar> in1 = m.act1(rw, rx, y);
        vec_add_in(in1, m.act1(w, rx, ry));
        vec_add_in(in1, m.act1(rw, x, ry));
        rep.require("rb-bimodule-1", {a, i, j}, m.act1(rw, rx, ry), mat_apply(rm, in1));
        Vec<Scalar> in2 = m.act2(rx, rw, y);
        vec_add_in(in2, m.act2(x, rw, ry));
        vec_add_in(in2, m.act2(rx, w, ry));
        rep.require("rb-bimodule-2", {i, a, j}, m.act2(rx, rw, ry), mat_apply(rm, in2));
        Vec<Scalar> in3 = m.act3(rx, y, rw);
        vec_add_in(in3, m.act3(x, ry, rw));
        vec_add_in(in3, m.act3(rx, ry, w));
        rep.require("rb-bimodule-3", {i, j, a}, m.act3(rx, ry, rw), mat_apply(rm, in3));
      }
    }
  }
  return rep;
}

TernaryBimodule induced_bimodule(const TernaryAlgebra& t, const Matrix& r_op,
                                 const TernaryBimodule& m, const Matrix& rm) {
  const int n = t.dim();
  const int md = m.module_dim();
  if (m.algebra_dim() != n) throw ShapeError("module actions and algebra dimensions differ");
  require_matrix(r_op, n, n, "algebra operator");
  require_matrix(rm, md, md, "module operator");
  Tensor l1({md, n, n, md}), l2({n, md, n, md}), l3({n, n, md, md});
  for (int a = 0; a < md; ++a) {
    const Vec<Scalar> w = basis_vec<Scalar>(md, a);
    const Vec<Scalar> rw = rm.col(a);
    for (int i = 0; i < n; ++i) {
      const Vec<Scalar> x = basis_vec<Scalar>(n, i);
      const Vec<Scalar> rx = r_op.col(i);
      for (int j = 0; j < n; ++j) {
        const Vec<Scalar> y = basis_vec<Scalar>(n, j);
        const Vec<Scalar> ry = r_op.col(j);
        Vec<Scalar> v1 = m.act1(rw, rx, y);
        vec_add_in(v1, m.act1(w, rx, ry));
        vec_add_in(v1, m.act1(rw, x, ry));
        Vec<Scalar> v2 = m.act2(rx, rw, y);
        vec_add_in(v2, m.act2(x, rw, ry));
        vec_add_in(v2, m.act2(rx, w, ry));
        Vec<Scalar> v3 = m.act3(rx, y, rw);
        vec_add_in(v3, m.act3(x, ry, rw));
        vec_add_in(v3, m.act3(rx, ry, w));
        for (int c = 0; c < md; ++c) {
          l1.at({a, i, j, c}) = v1[static_cast<std::size_t>(c)];
          l2.at({i, a, j, c}) = v2[static_cast<std::size_t>(c)];
          l3.at({i, j, a, c}) = v3[static_cast<std::size_t>(c)];
        }
      }
    }
  }
  return {l1, l2, l3};
}

CheckReport check_cocycle(const TernaryAlgebra& t, const TernaryBimodule& m, const Cocycle& w) {
  const int n = t.dim();
  if (m.algebra_dim() != n || w.algebra_dim() != n || w.module_dim() != m.module_dim()) {
    throw ShapeError("cocycle, module actions and algebra dimensions must agree");
  }
  CheckReport rep;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          for (int p = 0; p < n; ++p) {
            const Vec<Scalar> x = basis_vec<Scalar>(n, i);
            const Vec<Scalar> y = basis_vec<Scalar>(n, j);
            const Vec<Scalar> z = basis_vec<Scalar>(n, k);
            const Vec<Scalar> s = basis_vec<Scalar>(n, l);
            const Vec<Scalar> u = basis_vec<Scalar>(n, p);
            Vec<Scalar> lhs = m.act1(w.value(x, y, z), s, u);
            vec_add_in(lhs, w.value(t.bracket(x, y, z), s, u));
            Vec<Scalar> rhs = m.act3(x, y, w.value(z, s, u));
            vec_add_in(rhs, m.act2(x, w.value(y, s, u), z));
            vec_add_in(rhs, m.act1(w.value(x, s, u), y, z));
            vec_add_in(rhs, w.value(x, y, t.bracket(z, s, u)));
            vec_add_in(rhs, w.value(x, t.bracket(y, s, u), z));
            vec_add_in(rhs, w.value(t.bracket(x, s, u), y, z));
            rep.require("cocycle", {i, j, k, l, p}, lhs, rhs);
          }
        }
      }
    }
  }
  return rep;
}

TernaryAlgebra semidirect(const TernaryAlgebra& t, const TernaryBimodule& m,
                          const std::optional<Cocycle>& w) {
  const int n = t.dim();
  const int md = m.module_dim();
  if (m.algebra_dim() != n) throw ShapeError("module actions and algebra dimensions differ");
  if (w && (w->algebra_dim() != n || w->module_dim() != md)) {
    throw ShapeError("cocycle profile does not match the algebra and module dimensions");
  }
  TernaryAlgebra out(n + md);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) out.t().at({i, j, k, l}) = t.t().at({i, j, k, l});
        if (w) {
          for (int b = 0; b < md; ++b) out.t().at({i, j, k, n + b}) = w->w().at({i, j, k, b});
        }
      }
    }
  }
  for (int a = 0; a < md; ++a) {
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        for (int b = 0; b < md; ++b) {
          out.t().at({n + a, p, q, n + b}) = m.l1().at({a, p, q, b});
          out.t().at({p, n + a, q, n + b}) = m.l2().at({p, a, q, b});
          out.t().at({p, q, n + a, n + b}) = m.l3().at({p, q, a, b});
        }
      }
    }
  }
  return out;
}

TernaryAlgebra semidirect_from_rep(const TernaryAlgebra& t, const Representation& r) {
  const int n = t.dim();
  const int md = r.module_dim();
  if (r.algebra_dim() != n) throw ShapeError("representation and algebra dimensions differ");
  TernaryAlgebra out(n + md);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) out.t().at({i, j, k, l}) = t.t().at({i, j, k, l});
      }
    }
  }
  for (int a = 0; a < md; ++a) {
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        for (int b = 0; b < md; ++b) {
          out.t().at({n + a, p, q, n + b}) = r.rho().at({p, q, a, b});
          out.t().at({p, n + a, q, n + b}) = r.mu().at({p, q, a, b});
          out.t().at({p, q, n + a, n + b}) = r.lambda().at({p, q, a, b});
        }
      }
    }
  }
  return out;
}

std::pair<TernaryAlgebra, TernaryAlgebra> compatible_semidirect(const TernaryAlgebra& t1,
                                                                const TernaryAlgebra& t2,
                                                                const TernaryBimodule& m1,
                                                                const TernaryBimodule& m2) {
  if (t1.dim() != t2.dim() || m1.module_dim() != m2.module_dim()) {
    throw ShapeError("the two semidirect summands need matching dimensions");
  }
  return {semidirect(t1, m1), semidirect(t2, m2)};
}

CheckReport check_o_operator(const OOperatorData& data, const TernaryAlgebra& l) {
  if (data.rep.algebra_dim() != l.dim()) {
    throw ShapeError("representation is over dimension " + std::to_string(data.rep.algebra_dim()) +
                     " but the algebra has dimension " + std::to_string(l.dim()));
  }
  const int m = data.rep.module_dim();
  CheckReport rep;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      for (int c = 0; c < m; ++c) {
        const Vec<Scalar> u = basis_vec<Scalar>(m, a);
        const Vec<Scalar> v = basis_vec<Scalar>(m, b);
        const Vec<Scalar> w = basis_vec<Scalar>(m, c);
        const Vec<Scalar> tu = data.t.col(a);
        const Vec<Scalar> tv = data.t.col(b);
        const Vec<Scalar> tw = data.t.col(c);
        Vec<Scalar> inner = apply(data.rep.lambda(), {tu, tv, w});
        vec_add_in(inner, apply(data.rep.mu(), {tu, tw, v}));
        vec_add_in(inner, apply(data.rep.rho(), {tv, tw, u}));
        rep.require("o-operator", {a, b, c}, l.bracket(tu, tv, tw), mat_apply(data.t, inner));
      }
    }
  }
  return rep;
}

TernaryAlgebra o_operator_bracket(const OOperatorData& data) {
  const int m = data.rep.module_dim();
  TernaryAlgebra out(m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      for (int c = 0; c < m; ++c) {
        const Vec<Scalar> u = basis_vec<Scalar>(m, a);
        const Vec<Scalar> v = basis_vec<Scalar>(m, b);
        const Vec<Scalar> w = basis_vec<Scalar>(m, c);
        Vec<Scalar> val = apply(data.rep.lambda(), {data.t.col(a), data.t.col(b), w});
        vec_add_in(val, apply(data.rep.mu(), {data.t.col(a), data.t.col(c), v}));
        vec_add_in(val, apply(data.rep.rho(), {data.t.col(b), data.t.col(c), u}));
        for (int e = 0; e < m; ++e) out.t().at({a, b, c, e}) = val[static_cast<std::size_t>(e)];
      }
    }
  }
  return out;
}

CheckReport check_o_morphism(const Matrix& f, const Matrix& phi, const OOperatorData& from,
                             const OOperatorData& to, const TernaryAlgebra& l) {
  const int n = l.dim();
  const int m = from.rep.module_dim();
  if (from.rep.algebra_dim() != n || to.rep.algebra_dim() != n || to.rep.module_dim() != m) {
    throw ShapeError("morphism data must share one algebra and one module dimension");
  }
  require_matrix(f, n, n, "algebra map");
  require_matrix(phi, m, m, "module map");

  CheckReport rep;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        rep.require("algebra-morphism", {i, j, k}, mat_apply(f, l.bracket(i, j, k)),
                    l.bracket(f.col(i), f.col(j), f.col(k)));
      }
    }
  }
  for (int a = 0; a < m; ++a) {
    rep.require("intertwine-t", {a}, mat_apply(to.t, phi.col(a)), mat_apply(f, from.t.col(a)));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Vec<Scalar> ei = basis_vec<Scalar>(n, i);
      const Vec<Scalar> ej = basis_vec<Scalar>(n, j);
      const Vec<Scalar> fi = f.col(i);
      const Vec<Scalar> fj = f.col(j);
      for (int a = 0; a < m; ++a) {
        const Vec<Scalar> ua = basis_vec<Scalar>(m, a);
        rep.require("intertwine-lambda", {i, j, a},
                    mat_apply(phi, apply(from.rep.lambda(), {ei, ej, ua})),
                    apply(to.rep.lambda(), {fi, fj, phi.col(a)}));
        rep.require("intertwine-mu", {i, j, a}, mat_apply(phi, apply(from.rep.mu(), {ei, ej, ua})),
                    apply(to.rep.mu(), {fi, fj, phi.col(a)}));
        rep.require("intertwine-rho", {i, j, a},
                    mat_apply(phi, apply(from.rep.rho(), {ei, ej, ua})),
                    apply(to.rep.rho(), {fi, fj, phi.col(a)}));
      }
    }
  }

  const TernaryAlgebra from_bracket = o_operator_bracket(from);
  const TernaryAlgebra to_bracket = o_operator_bracket(to);
  bool hom = true;
  for (int a = 0; a < m && hom; ++a) {
    for (int b = 0; b < m && hom; ++b) {
      for (int c = 0; c < m && hom; ++c) {
        hom = mat_apply(phi, from_bracket.bracket(a, b, c)) ==
              to_bracket.bracket(phi.col(a), phi.col(b), phi.col(c));
      }
    }
  }
  rep.flags()["phi-bracket-homomorphism"] = hom;
  return rep;
}

Representation dual_representation(const Representation& r) {
  const int n = r.algebra_dim();
  const int m = r.module_dim();
  Tensor lambda({n, n, m, m}), mu({n, n, m, m}), rho({n, n, m, m});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
          lambda.at({i, j, a, b}) = -r.lambda().at({i, j, b, a});
          mu.at({i, j, a, b}) = -r.mu().at({i, j, b, a});
          rho.at({i, j, a, b}) = -r.rho().at({i, j, b, a});
        }
      }
    }
  }
  return {lambda, mu, rho};
}

}  // namespace tlz
