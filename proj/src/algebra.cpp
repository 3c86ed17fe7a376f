#include "tlz/algebra.hpp"

#include <string>

namespace tlz {

namespace {

Tensor checked_cube(Tensor c, int arity) {
  if (c.arity() != arity) throw ShapeError("structure tensor has wrong arity");
  for (int d : c.dims()) {
    if (d != c.dims()[0]) throw ShapeError("structure tensor must be cubical");
  }
  return c;
}

}  // namespace

BinaryAlgebra::BinaryAlgebra(Tensor c) : c_(checked_cube(std::move(c), 3)) {}

Vec<Scalar> BinaryAlgebra::bracket(int i, int j) const {
  int n = dim();
  Vec<Scalar> out = zero_vec<Scalar>(n);
  for (int k = 0; k < n; ++k) out[k] = c_.at({i, j, k});
  return out;
}

Vec<Scalar> BinaryAlgebra::bracket(const Vec<Scalar>& x, const Vec<Scalar>& y) const {
  return apply(c_, {x, y});
}

TernaryAlgebra::TernaryAlgebra(Tensor t) : t_(checked_cube(std::move(t), 4)) {}

Vec<Scalar> TernaryAlgebra::bracket(int i, int j, int k) const {
  int n = dim();
  Vec<Scalar> out = zero_vec<Scalar>(n);
  for (int l = 0; l < n; ++l) out[l] = t_.at({i, j, k, l});
  return out;
}

Vec<Scalar> TernaryAlgebra::bracket(const Vec<Scalar>& x, const Vec<Scalar>& y,
                                    const Vec<Scalar>& z) const {
  return apply(t_, {x, y, z});
}

CommAssocAlgebra::CommAssocAlgebra(Tensor p) : p_(checked_cube(std::move(p), 3)) {
  int n = dim();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (p_.at({i, j, k}) != p_.at({j, i, k})) {
          throw std::invalid_argument("product not commutative at basis pair (" +
                                      std::to_string(i) + ", " + std::to_string(j) + ")");
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        Vec<Scalar> left = product(product(basis_vec<Scalar>(n, i), basis_vec<Scalar>(n, j)),
                                   basis_vec<Scalar>(n, k));
        Vec<Scalar> right = product(basis_vec<Scalar>(n, i),
                                    product(basis_vec<Scalar>(n, j), basis_vec<Scalar>(n, k)));
        if (left != right) {
          throw std::invalid_argument("product not associative at basis triple (" +
                                      std::to_string(i) + ", " + std::to_string(j) + ", " +
                                      std::to_string(k) + ")");
        }
      }
    }
  }
}

Vec<Scalar> CommAssocAlgebra::product(const Vec<Scalar>& a, const Vec<Scalar>& b) const {
  return apply(p_, {a, b});
}

namespace detail {

// Both defect helpers take basis indices, so every term is one row of the
// inner bracket contracted against rows of the outer bracket. Indexing the
// flat storage directly keeps the whole evaluation at O(n^2) per tuple.

Vec<Scalar> leibniz_defect(const Tensor& outer, const Tensor& inner, int x, int y, int z) {
  const int n = outer.dims()[0];
  const std::vector<Scalar>& iv = inner.data();
  const std::vector<Scalar>& ov = outer.data();
  const std::size_t nn = static_cast<std::size_t>(n);
  auto row = [nn](int a, int b) { return (static_cast<std::size_t>(a) * nn + b) * nn; };
  const std::size_t rxy = row(x, y), ryz = row(y, z), rxz = row(x, z);
  Vec<Scalar> defect = zero_vec<Scalar>(n);
  for (std::size_t a = 0; a < nn; ++a) {
    const Scalar& xy = iv[rxy + a];
    if (!xy.is_zero()) {
      const std::size_t base = row(static_cast<int>(a), z);  // [[x,y],z]
      for (std::size_t o = 0; o < nn; ++o) defect[o] += xy * ov[base + o];
    }
    const Scalar& yz = iv[ryz + a];
    if (!yz.is_zero()) {
      const std::size_t base = row(x, static_cast<int>(a));  // [x,[y,z]]
      for (std::size_t o = 0; o < nn; ++o) defect[o] -= yz * ov[base + o];
    }
    const Scalar& xz = iv[rxz + a];
    if (!xz.is_zero()) {
      const std::size_t base = row(static_cast<int>(a), y);  // [[x,z],y]
      for (std::size_t o = 0; o < nn; ++o) defect[o] -= xz * ov[base + o];
    }
  }
  return defect;
}

Vec<Scalar> ternary_leibniz_defect(const Tensor& outer, const Tensor& inner, int x, int y, int z,
                                   int t, int u) {
  const int n = outer.dims()[0];
  const std::vector<Scalar>& iv = inner.data();
  const std::vector<Scalar>& ov = outer.data();
  const std::size_t nn = static_cast<std::size_t>(n);
  auto row = [nn](int a, int b, int c) {
    return ((static_cast<std::size_t>(a) * nn + b) * nn + c) * nn;
  };
  const std::size_t rxyz = row(x, y, z), rztu = row(z, t, u);
  const std::size_t rytu = row(y, t, u), rxtu = row(x, t, u);
  Vec<Scalar> defect = zero_vec<Scalar>(n);
  for (std::size_t a = 0; a < nn; ++a) {
    const int ai = static_cast<int>(a);
    const Scalar& xyz = iv[rxyz + a];
    if (!xyz.is_zero()) {
      const std::size_t base = row(ai, t, u);  // [[x,y,z],t,u]
      for (std::size_t o = 0; o < nn; ++o) defect[o] += xyz * ov[base + o];
    }
    const Scalar& ztu = iv[rztu + a];
    if (!ztu.is_zero()) {
      const std::size_t base = row(x, y, ai);  // [x,y,[z,t,u]]
      for (std::size_t o = 0; o < nn; ++o) defect[o] -= ztu * ov[base + o];
    }
    const Scalar& ytu = iv[rytu + a];
    if (!ytu.is_zero()) {
      const std::size_t base = row(x, ai, z);  // [x,[y,t,u],z]
      for (std::size_t o = 0; o < nn; ++o) defect[o] -= ytu * ov[base + o];
    }
    const Scalar& xtu = iv[rxtu + a];
    if (!xtu.is_zero()) {
      const std::size_t base = row(ai, y, z);  // [[x,t,u],y,z]
      for (std::size_t o = 0; o < nn; ++o) defect[o] -= xtu * ov[base + o];
    }
  }
  return defect;
}

}  // namespace detail

CheckReport check_leibniz(const BinaryAlgebra& a) {
  CheckReport rep;
  int n = a.dim();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        rep.require_zero("leibniz", {x, y, z}, detail::leibniz_defect(a.c(), a.c(), x, y, z));
      }
    }
  }
  return rep;
}

CheckReport check_comm_assoc(const Tensor& p) {
  if (p.arity() != 3 || p.dims()[0] != p.dims()[1] || p.dims()[0] != p.dims()[2]) {
    throw ShapeError("product table must have profile (n, n, n)");
  }
  CheckReport rep;
  rep.declare("commutative");
  rep.declare("associative");
  const int n = p.dims()[0];
  std::vector<Vec<Scalar>> e;
  e.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) e.push_back(basis_vec<Scalar>(n, i));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      rep.require("commutative", {i, j}, apply(p, {e[i], e[j]}), apply(p, {e[j], e[i]}));
      for (int k = 0; k < n; ++k) {
        rep.require("associative", {i, j, k}, apply(p, {apply(p, {e[i], e[j]}), e[k]}),
                    apply(p, {e[i], apply(p, {e[j], e[k]})}));
      }
    }
  }
  return rep;
}

CheckReport check_ternary_leibniz(const TernaryAlgebra& a) {
  CheckReport rep;
  int n = a.dim();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        for (int t = 0; t < n; ++t) {
          for (int u = 0; u < n; ++u) {
            rep.require_zero("ternary-leibniz", {x, y, z, t, u},
                             detail::ternary_leibniz_defect(a.t(), a.t(), x, y, z, t, u));
          }
        }
      }
    }
  }
  return rep;
}

CheckReport check_compatible_leibniz(const BinaryAlgebra& a1, const BinaryAlgebra& a2) {
  if (a1.dim() != a2.dim()) throw ShapeError("compatible check needs equal dimensions");
  CheckReport rep;
  rep.absorb("first/", check_leibniz(a1));
  rep.absorb("second/", check_leibniz(a2));
  int n = a1.dim();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        // Mixed six-term identity: the cross terms of the Leibniz identity
        // polarised across the two brackets.
        Vec<Scalar> defect = vec_add(detail::leibniz_defect(a2.c(), a1.c(), x, y, z),
                                     detail::leibniz_defect(a1.c(), a2.c(), x, y, z));
        rep.require_zero("mixed", {x, y, z}, defect);
      }
    }
  }
  return rep;
}

CheckReport check_compatible_ternary(const TernaryAlgebra& a1, const TernaryAlgebra& a2) {
  if (a1.dim() != a2.dim()) throw ShapeError("compatible check needs equal dimensions");
  CheckReport rep;
  rep.absorb("first/", check_ternary_leibniz(a1));
  rep.absorb("second/", check_ternary_leibniz(a2));
  int n = a1.dim();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        for (int t = 0; t < n; ++t) {
          for (int u = 0; u < n; ++u) {
            Vec<Scalar> defect =
                vec_add(detail::ternary_leibniz_defect(a2.t(), a1.t(), x, y, z, t, u),
                        detail::ternary_leibniz_defect(a1.t(), a2.t(), x, y, z, t, u));
            rep.require_zero("mixed", {x, y, z, t, u}, defect);
          }
        }
      }
    }
  }
  return rep;
}

BinaryAlgebra pencil(const BinaryAlgebra& a1, const BinaryAlgebra& a2, const Scalar& k1,
                     const Scalar& k2) {
  if (a1.dim() != a2.dim()) throw ShapeError("pencil needs equal dimensions");
  return BinaryAlgebra(k1 * a1.c() + k2 * a2.c());
}

TernaryAlgebra pencil(const TernaryAlgebra& a1, const TernaryAlgebra& a2, const Scalar& k1,
                      const Scalar& k2) {
  if (a1.dim() != a2.dim()) throw ShapeError("pencil needs equal dimensions");
  return TernaryAlgebra(k1 * a1.t() + k2 * a2.t());
}

TernaryAlgebra ternary_from_binary(const BinaryAlgebra& a) {
  int n = a.dim();
  TernaryAlgebra out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        Vec<Scalar> v = a.bracket(basis_vec<Scalar>(n, i), a.bracket(j, k));
        for (int l = 0; l < n; ++l) out.t().at({i, j, k, l}) = v[l];
      }
    }
  }
  return out;
}

BinaryAlgebra tensor_square_leibniz(const TernaryAlgebra& a) {
  int n = a.dim();
  int n2 = n * n;
  BinaryAlgebra out(n2);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
          // {e_p⊗e_q, e_r⊗e_s} = e_p⊗[e_q,e_r,e_s] + [e_p,e_r,e_s]⊗e_q
          for (int l = 0; l < n; ++l) {
            const Scalar& c1 = a.t().at({q, r, s, l});
            if (!c1.is_zero()) out.c().at({p * n + q, r * n + s, p * n + l}) += c1;
            const Scalar& c2 = a.t().at({p, r, s, l});
            if (!c2.is_zero()) out.c().at({p * n + q, r * n + s, l * n + q}) += c2;
          }
        }
      }
    }
  }
  return out;
}

TernaryAlgebra direct_sum(const TernaryAlgebra& a, const TernaryAlgebra& b) {
  int na = a.dim();
  int nb = b.dim();
  TernaryAlgebra out(na + nb);
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < na; ++j) {
      for (int k = 0; k < na; ++k) {
        for (int l = 0; l < na; ++l) out.t().at({i, j, k, l}) = a.t().at({i, j, k, l});
      }
    }
  }
  for (int i = 0; i < nb; ++i) {
    for (int j = 0; j < nb; ++j) {
      for (int k = 0; k < nb; ++k) {
        for (int l = 0; l < nb; ++l) {
          out.t().at({na + i, na + j, na + k, na + l}) = b.t().at({i, j, k, l});
        }
      }
    }
  }
  return out;
}

TernaryAlgebra scalar_extension(const CommAssocAlgebra& a, const TernaryAlgebra& t) {
  int na = a.dim();
  int nt = t.dim();
  TernaryAlgebra out(na * nt);
  for (int al = 0; al < na; ++al) {
    for (int be = 0; be < na; ++be) {
      // triple product (a_al · a_be) · a_ga expanded through the basis
      Vec<Scalar> ab = a.product(basis_vec<Scalar>(na, al), basis_vec<Scalar>(na, be));
      for (int ga = 0; ga < na; ++ga) {
        Vec<Scalar> abc = a.product(ab, basis_vec<Scalar>(na, ga));
        for (int de = 0; de < na; ++de) {
          if (abc[de].is_zero()) continue;
          for (int i = 0; i < nt; ++i) {
            for (int j = 0; j < nt; ++j) {
              for (int k = 0; k < nt; ++k) {
                for (int l = 0; l < nt; ++l) {
                  const Scalar& coeff = t.t().at({i, j, k, l});
                  if (coeff.is_zero()) continue;
                  out.t().at({al * nt + i, be * nt + j, ga * nt + k, de * nt + l}) +=
                      abc[de] * coeff;
                }
              }
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace tlz
