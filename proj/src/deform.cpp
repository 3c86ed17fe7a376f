#include "tlz/deform.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <tuple>
#include <utility>

#include "tlz/errors.hpp"
#include "tlz/operators.hpp"

namespace tlz {

namespace {

void require_profile(const Tensor& t, const std::vector<int>& want, const char* what) {
  if (t.dims() != want) {
    throw ShapeError(std::string(what) + ": tensor profile does not match the base structures");
  }
}

void validate_deformation(const TernaryAlgebra& alg, const Representation& rep,
                          const DeformationData& d) {
  const int n = alg.dim();
  const int m = rep.module_dim();
  if (rep.algebra_dim() != n) {
    throw ShapeError("representation is over dimension " + std::to_string(rep.algebra_dim()) +
                     " but the algebra has dimension " + std::to_string(n));
  }
  const std::vector<int> bracket_profile{n, n, n, n};
  const std::vector<int> family_profile{n, n, m, m};
  require_profile(d.w1, bracket_profile, "degree-1 bracket correction");
  require_profile(d.w2, bracket_profile, "degree-2 bracket correction");
  require_profile(d.wl1, family_profile, "degree-1 lambda correction");
  require_profile(d.wl2, family_profile, "degree-2 lambda correction");
  require_profile(d.wm1, family_profile, "degree-1 mu correction");
  require_profile(d.wm2, family_profile, "degree-2 mu correction");
  require_profile(d.wr1, family_profile, "degree-1 rho correction");
  require_profile(d.wr2, family_profile, "degree-2 rho correction");
}

void validate_pair(const TernaryAlgebra& alg, const Representation& rep, const PairData& pair) {
  if (rep.algebra_dim() != alg.dim()) {
    throw ShapeError("representation is over dimension " + std::to_string(rep.algebra_dim()) +
                     " but the algebra has dimension " + std::to_string(alg.dim()));
  }
  if (pair.n.rows() != alg.dim()) throw ShapeError("algebra operator size mismatch");
  if (pair.t.rows() != rep.module_dim()) throw ShapeError("module operator size mismatch");
}

Vec<Scalar> mat_vec(const Matrix& m) {
  Vec<Scalar> out;
  out.reserve(static_cast<std::size_t>(m.rows()) * static_cast<std::size_t>(m.cols()));
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out.push_back(m.at(r, c));
  }
  return out;
}

/// Degree-split piece of one representation axiom: the first-written factor
/// of every term takes its operators from (lp, mp, rp) while nested operator
/// arguments and bracket arguments come from (lq, mq, rq, bq). Summing over
/// all degree splits (p, q) with p + q = d gives the coefficient of s^d of
/// the axiom for the deformed families.
Vec<Scalar> rep_family_defect(int family, const Tensor& lp, const Tensor& mp, const Tensor& rp,
                              const Tensor& lq, const Tensor& mq, const Tensor& rq,
                              const Tensor& bq, const Vec<Scalar>& x, const Vec<Scalar>& y,
                              const Vec<Scalar>& z, const Vec<Scalar>& t, const Vec<Scalar>& u) {
  switch (family) {
    case 1: {  // lambda([x,y,z],t) = lambda(x,y)lambda(z,t) + mu(x,z)lambda(y,t) + rho(y,z)lambda(x,t)
      Vec<Scalar> d = apply(lp, {apply(bq, {x, y, z}), t, u});
      d = vec_sub(d, apply(lp, {x, y, apply(lq, {z, t, u})}));
      d = vec_sub(d, apply(mp, {x, z, apply(lq, {y, t, u})}));
      d = vec_sub(d, apply(rp, {y, z, apply(lq, {x, t, u})}));
      return d;
    }
    case 2: {  // mu([x,y,z],t) = lambda(x,y)mu(z,t) + mu(x,z)mu(y,t) + rho(y,z)mu(x,t)
      Vec<Scalar> d = apply(mp, {apply(bq, {x, y, z}), t, u});
      d = vec_sub(d, apply(lp, {x, y, apply(mq, {z, t, u})}));
      d = vec_sub(d, apply(mp, {x, z, apply(mq, {y, t, u})}));
      d = vec_sub(d, apply(rp, {y, z, apply(mq, {x, t, u})}));
      return d;
    }
    case 3: {  // rho(z,t)lambda(x,y) = lambda(x,y)rho(z,t) + lambda(x,[y,z,t]) + lambda([x,z,t],y)
      Vec<Scalar> d = apply(rp, {z, t, apply(lq, {x, y, u})});
      d = vec_sub(d, apply(lp, {x, y, apply(rq, {z, t, u})}));
      d = vec_sub(d, apply(lp, {x, apply(bq, {y, z, t}), u}));
      d = vec_sub(d, apply(lp, {apply(bq, {x, z, t}), y, u}));
      return d;
    }
    case 4: {  // rho(z,t)mu(x,y) = mu(x,[y,z,t]) + mu(x,y)rho(z,t) + mu([x,z,t],y)
      Vec<Scalar> d = apply(rp, {z, t, apply(mq, {x, y, u})});
      d = vec_sub(d, apply(mp, {x, apply(bq, {y, z, t}), u}));
      d = vec_sub(d, apply(mp, {x, y, apply(rq, {z, t, u})}));
      d = vec_sub(d, apply(mp, {apply(bq, {x, z, t}), y, u}));
      return d;
    }
    default: {  // rho(z,t)rho(x,y) = rho(x,[y,z,t]) + rho([x,z,t],y) + rho(x,y)rho(z,t)
      Vec<Scalar> d = apply(rp, {z, t, apply(rq, {x, y, u})});
      d = vec_sub(d, apply(rp, {x, apply(bq, {y, z, t}), u}));
      d = vec_sub(d, apply(rp, {apply(bq, {x, z, t}), y, u}));
      d = vec_sub(d, apply(rp, {x, y, apply(rq, {z, t, u})}));
      return d;
    }
  }
}

}  // namespace

DeformationData zero_deformation(int algebra_dim, int module_dim) {
  const Tensor bracket({algebra_dim, algebra_dim, algebra_dim, algebra_dim});
  const Tensor family({algebra_dim, algebra_dim, module_dim, module_dim});
  return {bracket, bracket, family, family, family, family, family, family};
}

PairData::PairData(Matrix n_in, Matrix t_in) : n(std::move(n_in)), t(std::move(t_in)) {
  if (!n.is_square()) throw ShapeError("algebra operator of a pair must be square");
  if (!t.is_square()) throw ShapeError("module operator of a pair must be square");
}

CheckReport check_deformation_equations(const TernaryAlgebra& alg, const Representation& rep,
                                        const DeformationData& data) {
  validate_deformation(alg, rep, data);
  const int n = alg.dim();
  const int m = rep.module_dim();
  const std::array<const Tensor*, 3> br = {&alg.t(), &data.w1, &data.w2};
  const std::array<const Tensor*, 3> lam = {&rep.lambda(), &data.wl1, &data.wl2};
  const std::array<const Tensor*, 3> mu = {&rep.mu(), &data.wm1, &data.wm2};
  const std::array<const Tensor*, 3> rho = {&rep.rho(), &data.wr1, &data.wr2};

  std::vector<Vec<Scalar>> en, em;
  for (int i = 0; i < n; ++i) en.push_back(basis_vec<Scalar>(n, i));
  for (int a = 0; a < m; ++a) em.push_back(basis_vec<Scalar>(m, a));

  CheckReport out;
  for (int deg = 0; deg <= 4; ++deg) {
    const std::string group = "bracket-degree-" + std::to_string(deg);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          for (int l = 0; l < n; ++l) {
            for (int p = 0; p < n; ++p) {
              Vec<Scalar> sum = zero_vec<Scalar>(n);
              for (int dp = 0; dp <= 2; ++dp) {
                const int dq = deg - dp;
                if (dq < 0 || dq > 2) continue;
                vec_add_in(sum, detail::ternary_leibniz_defect(*br[dp], *br[dq], i, j, k, l, p));
              }
              out.require_zero(group, {i, j, k, l, p}, sum);
            }
          }
        }
      }
    }
  }
  for (int deg = 0; deg <= 4; ++deg) {
    const std::string group = "rep-degree-" + std::to_string(deg);
    for (int family = 1; family <= 5; ++family) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          for (int k = 0; k < n; ++k) {
            for (int l = 0; l < n; ++l) {
              for (int a = 0; a < m; ++a) {
                Vec<Scalar> sum = zero_vec<Scalar>(m);
                for (int dp = 0; dp <= 2; ++dp) {
                  const int dq = deg - dp;
                  if (dq < 0 || dq > 2) continue;
                  vec_add_in(sum, rep_family_defect(family, *lam[dp], *mu[dp], *rho[dp], *lam[dq],
                                                    *mu[dq], *rho[dq], *br[dq], en[i], en[j], en[k],
                                                    en[l], em[a]));
                }
                out.require_zero(group, {family, i, j, k, l, a}, sum);
              }
            }
          }
        }
      }
    }
  }
  return out;
}

CheckReport check_deformation_by_expansion(const TernaryAlgebra& alg, const Representation& rep,
                                           const DeformationData& data) {
  validate_deformation(alg, rep, data);
  const int n = alg.dim();
  const int m = rep.module_dim();
  const PolyScalar s = PolyScalar::parameter();
  const PolyScalar s2 = s * s;
  const PolyTensor bs = to_poly(alg.t()) + s * to_poly(data.w1) + s2 * to_poly(data.w2);
  const PolyTensor ls = to_poly(rep.lambda()) + s * to_poly(data.wl1) + s2 * to_poly(data.wl2);
  const PolyTensor ms = to_poly(rep.mu()) + s * to_poly(data.wm1) + s2 * to_poly(data.wm2);
  const PolyTensor rs = to_poly(rep.rho()) + s * to_poly(data.wr1) + s2 * to_poly(data.wr2);

  std::vector<Vec<PolyScalar>> en, em;
  for (int i = 0; i < n; ++i) en.push_back(basis_vec<PolyScalar>(n, i));
  for (int a = 0; a < m; ++a) em.push_back(basis_vec<PolyScalar>(m, a));

  const auto split = [](CheckReport& out, const std::string& stem, const std::vector<int>& tuple,
                        const Vec<PolyScalar>& defect) {
    for (int deg = 0; deg <= 4; ++deg) {
      Vec<Scalar> coeff;
      coeff.reserve(defect.size());
      for (const auto& c : defect) coeff.push_back(c.coeff(deg));
      out.require_zero(stem + std::to_string(deg), tuple, coeff);
    }
  };

  CheckReport out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          for (int p = 0; p < n; ++p) {
            Vec<PolyScalar> d = apply(bs, {apply(bs, {en[i], en[j], en[k]}), en[l], en[p]});
            d = vec_sub(d, apply(bs, {en[i], en[j], apply(bs, {en[k], en[l], en[p]})}));
            d = vec_sub(d, apply(bs, {en[i], apply(bs, {en[j], en[l], en[p]}), en[k]}));
            d = vec_sub(d, apply(bs, {apply(bs, {en[i], en[l], en[p]}), en[j], en[k]}));
            split(out, "bracket-degree-", {i, j, k, l, p}, d);
          }
        }
      }
    }
  }
  for (int family = 1; family <= 5; ++family) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          for (int l = 0; l < n; ++l) {
            const Vec<PolyScalar>& x = en[i];
            const Vec<PolyScalar>& y = en[j];
            const Vec<PolyScalar>& z = en[k];
            const Vec<PolyScalar>& t = en[l];
            for (int a = 0; a < m; ++a) {
              const Vec<PolyScalar>& u = em[a];
              Vec<PolyScalar> d;
              switch (family) {
                case 1:
                  d = apply(ls, {apply(bs, {x, y, z}), t, u});
                  d = vec_sub(d, apply(ls, {x, y, apply(ls, {z, t, u})}));
                  d = vec_sub(d, apply(ms, {x, z, apply(ls, {y, t, u})}));
                  d = vec_sub(d, apply(rs, {y, z, apply(ls, {x, t, u})}));
                  break;
                case 2:
                  d = apply(ms, {apply(bs, {x, y, z}), t, u});
                  d = vec_sub(d, apply(ls, {x, y, apply(ms, {z, t, u})}));
                  d = vec_sub(d, apply(ms, {x, z, apply(ms, {y, t, u})}));
                  d = vec_sub(d, apply(rs, {y, z, apply(ms, {x, t, u})}));
                  break;
                case 3:
                  d = apply(rs, {z, t, apply(ls, {x, y, u})});
                  d = vec_sub(d, apply(ls, {x, y, apply(rs, {z, t, u})}));
                  d = vec_sub(d, apply(ls, {x, apply(bs, {y, z, t}), u}));
                  d = vec_sub(d, apply(ls, {apply(bs, {x, z, t}), y, u}));
                  break;
                case 4:
                  d = apply(rs, {z, t, apply(ms, {x, y, u})});
                  d = vec_sub(d, apply(ms, {x, apply(bs, {y, z, t}), u}));
                  d = vec_sub(d, apply(ms, {x, y, apply(rs, {z, t, u})}));
                  d = vec_sub(d, apply(ms, {apply(bs, {x, z, t}), y, u}));
                  break;
                default:
                  d = apply(rs, {z, t, apply(rs, {x, y, u})});
                  d = vec_sub(d, apply(rs, {x, apply(bs, {y, z, t}), u}));
                  d = vec_sub(d, apply(rs, {apply(bs, {x, z, t}), y, u}));
                  d = vec_sub(d, apply(rs, {x, y, apply(rs, {z, t, u})}));
                  break;
              }
              split(out, "rep-degree-", {family, i, j, k, l, a}, d);
            }
          }
        }
      }
    }
  }
  return out;
}

CheckReport check_nijenhuis_pair(const TernaryAlgebra& alg, const Representation& rep,
                                 const PairData& pair) {
  validate_pair(alg, rep, pair);
  const int n = alg.dim();
  CheckReport out;
  out.absorb("nijenhuis/", check_ternary_operator(alg, OperatorKind::nijenhuis(), pair.n));

  const Matrix& tm = pair.t;
  const Matrix t2 = tm * tm;
  const Matrix t3 = t2 * tm;
  using OpFn = Matrix (Representation::*)(const Vec<Scalar>&, const Vec<Scalar>&) const;
  const std::array<std::pair<const char*, OpFn>, 3> families = {{
      {"pair-lambda", &Representation::lambda_op},
      {"pair-mu", &Representation::mu_op},
      {"pair-rho", &Representation::rho_op},
  }};
  for (int i = 0; i < n; ++i) {
    const Vec<Scalar> x = basis_vec<Scalar>(n, i);
    const Vec<Scalar> nx = pair.n.col(i);
    for (int j = 0; j < n; ++j) {
      const Vec<Scalar> y = basis_vec<Scalar>(n, j);
      const Vec<Scalar> ny = pair.n.col(j);
      for (const auto& [name, fn] : families) {
        const Matrix op_nn = (rep.*fn)(nx, ny);
        const Matrix op_ny = (rep.*fn)(nx, y);
        const Matrix op_xn = (rep.*fn)(x, ny);
        const Matrix op_xy = (rep.*fn)(x, y);
        const Matrix lhs = op_nn * tm;
        const Matrix rhs = tm * (op_nn + op_ny * tm + op_xn * tm) -
                           t2 * (op_xy * tm + op_ny + op_xn) + t3 * op_xy;
        out.require(name, {i, j}, mat_vec(lhs), mat_vec(rhs));
      }
    }
  }
  return out;
}

CheckReport check_dual_nijenhuis_pair(const TernaryAlgebra& alg, const Representation& rep,
                                      const PairData& pair) {
  validate_pair(alg, rep, pair);
  const int n = alg.dim();
  CheckReport out;
  out.absorb("nijenhuis/", check_ternary_operator(alg, OperatorKind::nijenhuis(), pair.n));

  const Matrix& tm = pair.t;
  const Matrix t2 = tm * tm;
  const Matrix t3 = t2 * tm;
  using OpFn = Matrix (Representation::*)(const Vec<Scalar>&, const Vec<Scalar>&) const;
  const std::array<std::pair<const char*, OpFn>, 3> families = {{
      {"dual-pair-lambda", &Representation::lambda_op},
      {"dual-pair-mu", &Representation::mu_op},
      {"dual-pair-rho", &Representation::rho_op},
  }};
  for (int i = 0; i < n; ++i) {
    const Vec<Scalar> x = basis_vec<Scalar>(n, i);
    const Vec<Scalar> nx = pair.n.col(i);
    for (int j = 0; j < n; ++j) {
      const Vec<Scalar> y = basis_vec<Scalar>(n, j);
      const Vec<Scalar> ny = pair.n.col(j);
      for (const auto& [name, fn] : families) {
        const Matrix op_nn = (rep.*fn)(nx, ny);
        const Matrix op_ny = (rep.*fn)(nx, y);
        const Matrix op_xn = (rep.*fn)(x, ny);
        const Matrix op_xy = (rep.*fn)(x, y);
        const Matrix lhs = op_xy * t3;
        const Matrix rhs = tm * op_nn - (op_nn + tm * op_ny + tm * op_xn) * tm +
                           (tm * op_xy + op_ny + op_xn) * t2;
        out.require(name, {i, j}, mat_vec(lhs), mat_vec(rhs));
      }
    }
  }
  return out;
}

DeformationData deformation_from_pair(const TernaryAlgebra& alg, const Representation& rep,
                                      const PairData& pair) {
  validate_pair(alg, rep, pair);
  const int n = alg.dim();
  const int m = rep.module_dim();
  DeformationData out = zero_deformation(n, m);

  for (int i = 0; i < n; ++i) {
    const Vec<Scalar> x = basis_vec<Scalar>(n, i);
    const Vec<Scalar> nx = pair.n.col(i);
    for (int j = 0; j < n; ++j) {
      const Vec<Scalar> y = basis_vec<Scalar>(n, j);
      const Vec<Scalar> ny = pair.n.col(j);
      for (int k = 0; k < n; ++k) {
        const Vec<Scalar> z = basis_vec<Scalar>(n, k);
        const Vec<Scalar> nz = pair.n.col(k);
        const Vec<Scalar> base = alg.bracket(i, j, k);
        Vec<Scalar> one_n = alg.bracket(nx, y, z);  // N in one slot at a time
        vec_add_in(one_n, alg.bracket(x, ny, z));
        vec_add_in(one_n, alg.bracket(x, y, nz));
        Vec<Scalar> two_n = alg.bracket(nx, ny, z);  // N in two slots
        vec_add_in(two_n, alg.bracket(nx, y, nz));
        vec_add_in(two_n, alg.bracket(x, ny, nz));
        const Vec<Scalar> w1v = vec_sub(one_n, mat_apply(pair.n, base));
        Vec<Scalar> w2v = vec_sub(two_n, mat_apply(pair.n, one_n));
        vec_add_in(w2v, mat_apply(pair.n, mat_apply(pair.n, base)));
        for (int l = 0; l < n; ++l) {
          out.w1.at({i, j, k, l}) = w1v[static_cast<std::size_t>(l)];
          out.w2.at({i, j, k, l}) = w2v[static_cast<std::size_t>(l)];
        }
      }
    }
  }

  using OpFn = Matrix (Representation::*)(const Vec<Scalar>&, const Vec<Scalar>&) const;
  const std::array<std::tuple<OpFn, Tensor*, Tensor*>, 3> families = {{
      {&Representation::lambda_op, &out.wl1, &out.wl2},
      {&Representation::mu_op, &out.wm1, &out.wm2},
      {&Representation::rho_op, &out.wr1, &out.wr2},
  }};
  const Matrix& tm = pair.t;
  for (int i = 0; i < n; ++i) {
    const Vec<Scalar> x = basis_vec<Scalar>(n, i);
    const Vec<Scalar> nx = pair.n.col(i);
    for (int j = 0; j < n; ++j) {
      const Vec<Scalar> y = basis_vec<Scalar>(n, j);
      const Vec<Scalar> ny = pair.n.col(j);
      for (const auto& [fn, first, second] : families) {
        const Matrix op_nn = (rep.*fn)(nx, ny);
        const Matrix op_ny = (rep.*fn)(nx, y);
        const Matrix op_xn = (rep.*fn)(x, ny);
        const Matrix op_xy = (rep.*fn)(x, y);
        const Matrix o1 = op_xy * tm + op_ny + op_xn - tm * op_xy;
        const Matrix o2 = op_nn + op_ny * tm + op_xn * tm - tm * o1;
        for (int a = 0; a < m; ++a) {
          for (int b = 0; b < m; ++b) {
            first->at({i, j, a, b}) = o1.at(b, a);
            second->at({i, j, a, b}) = o2.at(b, a);
          }
        }
      }
    }
  }
  return out;
}

CheckReport check_equivalence(const TernaryAlgebra& alg, const Representation& rep,
                              const DeformationData& a, const DeformationData& b,
                              const PairData& pair) {
  validate_deformation(alg, rep, a);
  validate_deformation(alg, rep, b);
  validate_pair(alg, rep, pair);
  const int n = alg.dim();
  const int m = rep.module_dim();
  const PolyScalar s = PolyScalar::parameter();
  const PolyScalar s2 = s * s;

  const PolyTensor bra = to_poly(alg.t()) + s * to_poly(a.w1) + s2 * to_poly(a.w2);
  const PolyTensor brb = to_poly(alg.t()) + s * to_poly(b.w1) + s2 * to_poly(b.w2);
  const std::array<std::array<PolyTensor, 2>, 3> ops = {{
      {to_poly(rep.lambda()) + s * to_poly(a.wl1) + s2 * to_poly(a.wl2),
       to_poly(rep.lambda()) + s * to_poly(b.wl1) + s2 * to_poly(b.wl2)},
      {to_poly(rep.mu()) + s * to_poly(a.wm1) + s2 * to_poly(a.wm2),
       to_poly(rep.mu()) + s * to_poly(b.wm1) + s2 * to_poly(b.wm2)},
      {to_poly(rep.rho()) + s * to_poly(a.wr1) + s2 * to_poly(a.wr2),
       to_poly(rep.rho()) + s * to_poly(b.wr1) + s2 * to_poly(b.wr2)},
  }};
  const std::array<const char*, 3> names = {"equivalence-lambda", "equivalence-mu",
                                            "equivalence-rho"};

  // 1 + sN on the algebra, 1 + sT on the module.
  const auto phi_alg = [&](const Vec<PolyScalar>& v) {
    return vec_add(v, vec_scale(s, mat_apply(pair.n, v)));
  };
  const auto phi_mod = [&](const Vec<PolyScalar>& v) {
    return vec_add(v, vec_scale(s, mat_apply(pair.t, v)));
  };

  std::vector<Vec<PolyScalar>> en, em;
  for (int i = 0; i < n; ++i) en.push_back(basis_vec<PolyScalar>(n, i));
  for (int q = 0; q < m; ++q) em.push_back(basis_vec<PolyScalar>(m, q));

  const auto require_coeffs = [](CheckReport& out, const std::string& identity,
                                 std::vector<int> tuple, const Vec<PolyScalar>& lhs,
                                 const Vec<PolyScalar>& rhs) {
    const Vec<PolyScalar> diff = vec_sub(lhs, rhs);
    int top = 0;
    for (const auto& c : diff) top = std::max(top, c.degree());
    tuple.push_back(0);
    for (int deg = 0; deg <= top; ++deg) {
      Vec<Scalar> coeff;
      coeff.reserve(diff.size());
      for (const auto& c : diff) coeff.push_back(c.coeff(deg));
      tuple.back() = deg;
      out.require_zero(identity, tuple, coeff);
    }
  };

  CheckReport out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const Vec<PolyScalar> lhs = phi_alg(apply(brb, {en[i], en[j], en[k]}));
        const Vec<PolyScalar> rhs = apply(bra, {phi_alg(en[i]), phi_alg(en[j]), phi_alg(en[k])});
        require_coeffs(out, "equivalence-bracket", {i, j, k}, lhs, rhs);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int q = 0; q < m; ++q) {
        for (std::size_t f = 0; f < ops.size(); ++f) {
          const Vec<PolyScalar> lhs = phi_mod(apply(ops[f][1], {en[i], en[j], em[q]}));
          const Vec<PolyScalar> rhs =
              apply(ops[f][0], {phi_alg(en[i]), phi_alg(en[j]), phi_mod(em[q])});
          require_coeffs(out, names[f], {i, j, q}, lhs, rhs);
        }
      }
    }
  }
  return out;
}

CheckReport pair_sum_nijenhuis(const TernaryAlgebra& alg, const Representation& rep,
                               const PairData& pair) {
  validate_pair(alg, rep, pair);
  const int n = alg.dim();
  const int m = rep.module_dim();
  const TernaryAlgebra sum = semidirect_from_rep(alg, rep);
  Matrix block(n + m, n + m);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) block.at(r, c) = pair.n.at(r, c);
  }
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) block.at(n + r, n + c) = pair.t.at(r, c);
  }
  const CheckReport op = check_ternary_operator(sum, OperatorKind::nijenhuis(), block);
  const bool pair_ok = check_nijenhuis_pair(alg, rep, pair).pass();
  CheckReport out;
  out.absorb("sum-operator/", op);
  out.flags()["pair-passes"] = pair_ok;
  out.flags()["sum-operator-passes"] = op.pass();
  out.flags()["implication-holds"] = !pair_ok || op.pass();
  return out;
}

CheckReport linear_deformation_check(const TernaryAlgebra& alg, const Representation& rep,
                                     const DeformationData& data) {
  validate_deformation(alg, rep, data);
  if (!data.w2.is_zero() || !data.wl2.is_zero() || !data.wm2.is_zero() || !data.wr2.is_zero()) {
    throw UnsupportedError("linear deformation check needs a vanishing degree-2 part");
  }
  const int n = alg.dim();
  const TernaryAlgebra new_bracket(data.w1);

  CheckReport out;
  out.absorb("new-bracket/", check_ternary_leibniz(new_bracket));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          for (int p = 0; p < n; ++p) {
            Vec<Scalar> defect = detail::ternary_leibniz_defect(alg.t(), data.w1, i, j, k, l, p);
            vec_add_in(defect, detail::ternary_leibniz_defect(data.w1, alg.t(), i, j, k, l, p));
            out.require_zero("mixed-compatibility", {i, j, k, l, p}, defect);
          }
        }
      }
    }
  }
  const Representation correction(data.wl1, data.wm1, data.wr1);
  out.absorb("new-representation/", check_representation(new_bracket, correction));
  const TernaryAlgebra summed_bracket(alg.t() + data.w1);
  const Representation summed(rep.lambda() + data.wl1, rep.mu() + data.wm1,
                              rep.rho() + data.wr1);
  out.absorb("summed-representation/", check_representation(summed_bracket, summed));
  return out;
}

}  // namespace tlz
