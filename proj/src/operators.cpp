#include "tlz/operators.hpp"

#include <cstddef>
#include <utility>

#include "tlz/errors.hpp"

namespace tlz {

namespace {

void require_square(const Matrix& m, int n, const char* what) {
  if (m.rows() != n || m.cols() != n) {
    throw ShapeError(std::string(what) + ": expected a " + std::to_string(n) + "x" +
                     std::to_string(n) + " matrix, got " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()));
  }
}

void require_aux(const OperatorKind& kind, std::size_t count, const char* names) {
  if (kind.aux.size() < count) {
    throw ShapeError("operator kind '" + kind.name() + "' needs auxiliary maps " + names + "; " +
                     std::to_string(kind.aux.size()) + " given");
  }
}

/// [Dx,Dy,z]+[Dx,y,Dz]+[x,Dy,Dz] + w([Dx,y,z]+[x,Dy,z]+[x,y,Dz]) + w^2 [x,y,z],
/// the right-hand sum shared by the weighted ternary Rota-Baxter and
/// derivation identities.
Vec<Scalar> weighted_rb_sum(const TernaryAlgebra& t, const Scalar& w, const Vec<Scalar>& x,
                            const Vec<Scalar>& y, const Vec<Scalar>& z, const Vec<Scalar>& dx,
                            const Vec<Scalar>& dy, const Vec<Scalar>& dz) {
  Vec<Scalar> s = t.bracket(dx, dy, z);
  vec_add_in(s, t.bracket(dx, y, dz));
  vec_add_in(s, t.bracket(x, dy, dz));
  if (!w.is_zero()) {
    Vec<Scalar> lin = t.bracket(dx, y, z);
    vec_add_in(lin, t.bracket(x, dy, z));
    vec_add_in(lin, t.bracket(x, y, dz));
    vec_add_in(s, vec_scale(w, lin));
    vec_add_in(s, vec_scale(w * w, t.bracket(x, y, z)));
  }
  return s;
}

}  // namespace

OperatorKind OperatorKind::derivation(const Scalar& weight) {
  return {Tag::derivation, weight, {}};
}
OperatorKind OperatorKind::rota_baxter(const Scalar& weight) {
  return {Tag::rota_baxter, weight, {}};
}
OperatorKind OperatorKind::centroid() { return {Tag::centroid, Scalar(0), {}}; }
OperatorKind OperatorKind::reynolds() { return {Tag::reynolds, Scalar(0), {}}; }
OperatorKind OperatorKind::averaging() { return {Tag::averaging, Scalar(0), {}}; }
OperatorKind OperatorKind::nijenhuis() { return {Tag::nijenhuis, Scalar(0), {}}; }
OperatorKind OperatorKind::central_derivation() { return {Tag::central_derivation, Scalar(0), {}}; }
OperatorKind OperatorKind::generalized_derivation(std::vector<Matrix> aux) {
  return {Tag::generalized_derivation, Scalar(0), std::move(aux)};
}
OperatorKind OperatorKind::quasiderivation(std::vector<Matrix> aux) {
  return {Tag::quasiderivation, Scalar(0), std::move(aux)};
}

std::string OperatorKind::name() const {
  switch (tag) {
    case Tag::derivation: return "derivation";
    case Tag::rota_baxter: return "rota-baxter";
    case Tag::centroid: return "centroid";
    case Tag::reynolds: return "reynolds";
    case Tag::averaging: return "averaging";
    case Tag::nijenhuis: return "nijenhuis";
    case Tag::central_derivation: return "central-derivation";
    case Tag::generalized_derivation: return "generalized-derivation";
    case Tag::quasiderivation: return "quasiderivation";
  }
  return "unknown";
}

OperatorKind::Tag OperatorKind::tag_from_name(const std::string& name) {
  if (name == "derivation") return Tag::derivation;
  if (name == "rota-baxter") return Tag::rota_baxter;
  if (name == "centroid") return Tag::centroid;
  if (name == "reynolds") return Tag::reynolds;
  if (name == "averaging") return Tag::averaging;
  if (name == "nijenhuis") return Tag::nijenhuis;
  if (name == "central-derivation") return Tag::central_derivation;
  if (name == "generalized-derivation") return Tag::generalized_derivation;
  if (name == "quasiderivation") return Tag::quasiderivation;
  throw UnsupportedError("unknown operator kind '" + name + "'");
}

CheckReport check_binary_operator(const BinaryAlgebra& b, const OperatorKind& kind,
                                  const Matrix& op) {
  const int n = b.dim();
  require_square(op, n, "operator");
  for (const Matrix& a : kind.aux) require_square(a, n, "auxiliary map");
  using Tag = OperatorKind::Tag;
  if (kind.tag == Tag::generalized_derivation) require_aux(kind, 2, "D', D''");
  if (kind.tag == Tag::quasiderivation) require_aux(kind, 1, "D'");

  CheckReport rep;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Vec<Scalar> x = basis_vec<Scalar>(n, i);
      const Vec<Scalar> y = basis_vec<Scalar>(n, j);
      const Vec<Scalar> dx = op.col(i);
      const Vec<Scalar> dy = op.col(j);
      const Vec<Scalar> bxy = b.bracket(i, j);
      switch (kind.tag) {
        case Tag::derivation: {
          Vec<Scalar> rhs = vec_add(b.bracket(dx, y), b.bracket(x, dy));
          if (!kind.weight.is_zero()) vec_add_in(rhs, vec_scale(kind.weight, bxy));
          rep.require("derivation", {i, j}, mat_apply(op, bxy), rhs);
          break;
        }
        case Tag::rota_baxter: {
          Vec<Scalar> inner = vec_add(b.bracket(dx, y), b.bracket(x, dy));
          if (!kind.weight.is_zero()) vec_add_in(inner, vec_scale(kind.weight, bxy));
          rep.require("rota-baxter", {i, j}, b.bracket(dx, dy), mat_apply(op, inner));
          break;
        }
        case Tag::centroid: {
          const Vec<Scalar> lhs = mat_apply(op, bxy);
          rep.require("centroid-slot1", {i, j}, lhs, b.bracket(dx, y));
          rep.require("centroid-slot2", {i, j}, lhs, b.bracket(x, dy));
          break;
        }
        case Tag::reynolds: {
          Vec<Scalar> inner = vec_add(b.bracket(dx, y), b.bracket(x, dy));
          inner = vec_sub(inner, b.bracket(dx, dy));
          rep.require("reynolds", {i, j}, mat_apply(op, bxy), mat_apply(op, inner));
          break;
        }
        case Tag::averaging: {
          const Vec<Scalar> both = b.bracket(dx, dy);
          rep.require("averaging-left", {i, j}, mat_apply(op, b.bracket(dx, y)), both);
          rep.require("averaging-right", {i, j}, mat_apply(op, b.bracket(x, dy)), both);
          break;
        }
        case Tag::nijenhuis: {
          Vec<Scalar> inner = vec_add(b.bracket(dx, y), b.bracket(x, dy));
          inner = vec_sub(inner, mat_apply(op, bxy));
          rep.require("nijenhuis", {i, j}, b.bracket(dx, dy), mat_apply(op, inner));
          break;
        }
        case Tag::central_derivation: {
          rep.require_zero("central-derivation-apply", {i, j}, mat_apply(op, bxy));
          rep.require_zero("central-derivation-slot1", {i, j}, b.bracket(dx, y));
          rep.require_zero("central-derivation-slot2", {i, j}, b.bracket(x, dy));
          break;
        }
        case Tag::generalized_derivation: {
          Vec<Scalar> rhs = vec_add(b.bracket(dx, y), b.bracket(x, mat_apply(kind.aux[0], y)));
          rep.require("generalized-derivation", {i, j}, mat_apply(kind.aux[1], bxy), rhs);
          if (kind.aux.size() >= 3) {
            Vec<Scalar> rhs2 = vec_add(b.bracket(dx, y), b.bracket(x, mat_apply(kind.aux[1], y)));
            rep.require("generalized-derivation-chain", {i, j}, mat_apply(kind.aux[2], bxy), rhs2);
          }
          break;
        }
        case Tag::quasiderivation: {
          Vec<Scalar> rhs = vec_add(b.bracket(dx, y), b.bracket(x, dy));
          rep.require("quasiderivation", {i, j}, mat_apply(kind.aux[0], bxy), rhs);
          if (kind.aux.size() >= 2) {
            Vec<Scalar> rhs2 = vec_add(b.bracket(mat_apply(kind.aux[0], x), y),
                                       b.bracket(x, mat_apply(kind.aux[0], y)));
            rep.require("quasiderivation-chain", {i, j}, mat_apply(kind.aux[1], bxy), rhs2);
          }
          break;
        }
      }
    }
  }
  return rep;
}

CheckReport check_ternary_operator(const TernaryAlgebra& t, const OperatorKind& kind,
                                   const Matrix& op) {
  const int n = t.dim();
  require_square(op, n, "operator");
  for (const Matrix& a : kind.aux) require_square(a, n, "auxiliary map");
  using Tag = OperatorKind::Tag;
  if (kind.tag == Tag::generalized_derivation) require_aux(kind, 3, "D', D'', D'''");
  if (kind.tag == Tag::quasiderivation) require_aux(kind, 2, "D', D''");

  CheckReport rep;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const Vec<Scalar> x = basis_vec<Scalar>(n, i);
        const Vec<Scalar> y = basis_vec<Scalar>(n, j);
        const Vec<Scalar> z = basis_vec<Scalar>(n, k);
        const Vec<Scalar> dx = op.col(i);
        const Vec<Scalar> dy = op.col(j);
        const Vec<Scalar> dz = op.col(k);
        const Vec<Scalar> txyz = t.bracket(i, j, k);
        switch (kind.tag) {
          case Tag::derivation: {
            rep.require("derivation", {i, j, k}, mat_apply(op, txyz),
                        weighted_rb_sum(t, kind.weight, x, y, z, dx, dy, dz));
            break;
          }
          case Tag::rota_baxter: {
            rep.require("rota-baxter", {i, j, k}, t.bracket(dx, dy, dz),
                        mat_apply(op, weighted_rb_sum(t, kind.weight, x, y, z, dx, dy, dz)));
            break;
          }
          case Tag::centroid: {
            const Vec<Scalar> lhs = mat_apply(op, txyz);
            rep.require("centroid-slot1", {i, j, k}, lhs, t.bracket(dx, y, z));
            rep.require("centroid-slot2", {i, j, k}, lhs, t.bracket(x, dy, z));
            rep.require("centroid-slot3", {i, j, k}, lhs, t.bracket(x, y, dz));
            break;
          }
          case Tag::reynolds: {
            Vec<Scalar> inner = t.bracket(dx, dy, z);
            vec_add_in(inner, t.bracket(dx, y, dz));
            vec_add_in(inner, t.bracket(x, dy, dz));
            inner = vec_sub(inner, t.bracket(dx, dy, dz));
            rep.require("reynolds", {i, j, k}, t.bracket(dx, dy, dz), mat_apply(op, inner));
            break;
          }
          case Tag::averaging: {
            const Vec<Scalar> all = t.bracket(dx, dy, dz);
            rep.require("averaging-12", {i, j, k}, mat_apply(op, t.bracket(dx, dy, z)), all);
            rep.require("averaging-13", {i, j, k}, mat_apply(op, t.bracket(dx, y, dz)), all);
            rep.require("averaging-23", {i, j, k}, mat_apply(op, t.bracket(x, dy, dz)), all);
            break;
          }
          case Tag::nijenhuis: {
            Vec<Scalar> quad = t.bracket(dx, dy, z);
            vec_add_in(quad, t.bracket(dx, y, dz));
            vec_add_in(quad, t.bracket(x, dy, dz));
            Vec<Scalar> lin = t.bracket(dx, y, z);
            vec_add_in(lin, t.bracket(x, dy, z));
            vec_add_in(lin, t.bracket(x, y, dz));
            // N(quad) - N^2(lin) + N^3 [x,y,z], evaluated as nested applications.
            Vec<Scalar> rhs =
                mat_apply(op, vec_sub(quad, mat_apply(op, vec_sub(lin, mat_apply(op, txyz)))));
            rep.require("nijenhuis", {i, j, k}, t.bracket(dx, dy, dz), rhs);
            break;
          }
          case Tag::central_derivation: {
            rep.require_zero("central-derivation-apply", {i, j, k}, mat_apply(op, txyz));
            rep.require_zero("central-derivation-slot1", {i, j, k}, t.bracket(dx, y, z));
            rep.require_zero("central-derivation-slot2", {i, j, k}, t.bracket(x, dy, z));
            rep.require_zero("central-derivation-slot3", {i, j, k}, t.bracket(x, y, dz));
            break;
          }
          case Tag::generalized_derivation: {
            Vec<Scalar> rhs = t.bracket(dx, y, z);
            vec_add_in(rhs, t.bracket(x, mat_apply(kind.aux[0], y), z));
            vec_add_in(rhs, t.bracket(x, y, mat_apply(kind.aux[1], z)));
            rep.require("generalized-derivation", {i, j, k}, mat_apply(kind.aux[2], txyz), rhs);
            break;
          }
          case Tag::quasiderivation: {
            Vec<Scalar> rhs = t.bracket(mat_apply(kind.aux[0], x), y, z);
            vec_add_in(rhs, t.bracket(x, dy, z));
            vec_add_in(rhs, t.bracket(x, y, dz));
            rep.require("quasiderivation", {i, j, k}, mat_apply(kind.aux[1], txyz), rhs);
            break;
          }
        }
      }
    }
  }
  return rep;
}

BinaryAlgebra nijenhuis_sum_bracket(const BinaryAlgebra& b, const Matrix& n) {
  const int d = b.dim();
  require_square(n, d, "operator");
  BinaryAlgebra out(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const Vec<Scalar> x = basis_vec<Scalar>(d, i);
      const Vec<Scalar> y = basis_vec<Scalar>(d, j);
      Vec<Scalar> v = vec_add(b.bracket(n.col(i), y), b.bracket(x, n.col(j)));
      vec_add_in(v, b.bracket(i, j));
      for (int k = 0; k < d; ++k) out.c().at({i, j, k}) = v[static_cast<std::size_t>(k)];
    }
  }
  return out;
}

BinaryAlgebra averaging_left_bracket(const BinaryAlgebra& b, const Matrix& beta) {
  const int d = b.dim();
  require_square(beta, d, "operator");
  BinaryAlgebra out(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const Vec<Scalar> v = b.bracket(beta.col(i), basis_vec<Scalar>(d, j));
      for (int k = 0; k < d; ++k) out.c().at({i, j, k}) = v[static_cast<std::size_t>(k)];
    }
  }
  return out;
}

BinaryAlgebra rota_baxter_bracket(const BinaryAlgebra& b, const Matrix& r, const Scalar& weight) {
  const int d = b.dim();
  require_square(r, d, "operator");
  BinaryAlgebra out(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const Vec<Scalar> x = basis_vec<Scalar>(d, i);
      const Vec<Scalar> y = basis_vec<Scalar>(d, j);
      Vec<Scalar> v = vec_add(b.bracket(r.col(i), y), b.bracket(x, r.col(j)));
      if (!weight.is_zero()) vec_add_in(v, vec_scale(weight, b.bracket(i, j)));
      for (int k = 0; k < d; ++k) out.c().at({i, j, k}) = v[static_cast<std::size_t>(k)];
    }
  }
  return out;
}

TernaryAlgebra averaging_bracket(const TernaryAlgebra& t, const Matrix& beta) {
  const int d = t.dim();
  require_square(beta, d, "operator");
  TernaryAlgebra out(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        const Vec<Scalar> v = t.bracket(beta.col(i), beta.col(j), basis_vec<Scalar>(d, k));
        for (int l = 0; l < d; ++l) out.t().at({i, j, k, l}) = v[static_cast<std::size_t>(l)];
      }
    }
  }
  return out;
}

TernaryAlgebra rota_baxter0_bracket(const TernaryAlgebra& t, const Matrix& r) {
  const int d = t.dim();
  require_square(r, d, "operator");
  TernaryAlgebra out(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        const Vec<Scalar> x = basis_vec<Scalar>(d, i);
        const Vec<Scalar> y = basis_vec<Scalar>(d, j);
        const Vec<Scalar> z = basis_vec<Scalar>(d, k);
        Vec<Scalar> v = t.bracket(r.col(i), r.col(j), z);
        vec_add_in(v, t.bracket(r.col(i), y, r.col(k)));
        vec_add_in(v, t.bracket(x, r.col(j), r.col(k)));
        for (int l = 0; l < d; ++l) out.t().at({i, j, k, l}) = v[static_cast<std::size_t>(l)];
      }
    }
  }
  return out;
}

std::pair<TernaryAlgebra, TernaryAlgebra> averaging_pair_brackets(const TernaryAlgebra& t1,
                                                                  const TernaryAlgebra& t2,
                                                                  const Matrix& beta) {
  if (t1.dim() != t2.dim()) {
    throw ShapeError("averaging a bracket pair needs equal dimensions, got " +
                     std::to_string(t1.dim()) + " and " + std::to_string(t2.dim()));
  }
  return {averaging_bracket(t1, beta), averaging_bracket(t2, beta)};
}

TernaryAlgebra centroid_bracket_family(const TernaryAlgebra& t, const Matrix& theta, int variant) {
  const int d = t.dim();
  require_square(theta, d, "operator");
  if (variant < 1 || variant > 3) {
    throw UnsupportedError("centroid bracket variant must be 1, 2 or 3, got " +
                           std::to_string(variant));
  }
  TernaryAlgebra out(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        const Vec<Scalar> x = variant >= 1 ? theta.col(i) : basis_vec<Scalar>(d, i);
        const Vec<Scalar> y = variant >= 2 ? theta.col(j) : basis_vec<Scalar>(d, j);
        const Vec<Scalar> z = variant >= 3 ? theta.col(k) : basis_vec<Scalar>(d, k);
        const Vec<Scalar> v = t.bracket(x, y, z);
        for (int l = 0; l < d; ++l) out.t().at({i, j, k, l}) = v[static_cast<std::size_t>(l)];
      }
    }
  }
  return out;
}

CheckReport TransferReport::combined() const {
  CheckReport rep;
  rep.absorb("binary/", binary);
  rep.absorb("ternary/", ternary);
  rep.flags()["binary-pass"] = binary.pass();
  rep.flags()["ternary-pass"] = ternary.pass();
  rep.flags()["transfer-implication"] = implication_holds();
  return rep;
}

TransferReport check_operator_transfer(const BinaryAlgebra& b, const OperatorKind& kind,
                                       const Matrix& op) {
  using Tag = OperatorKind::Tag;
  TransferReport out;
  out.binary = check_binary_operator(b, kind, op);

  OperatorKind ternary_kind = kind;
  if (kind.tag == Tag::generalized_derivation) {
    // The ternary identity needs the binary chain: D''' applied to the
    // nested bracket unfolds with D in the first slot, D' in the second and
    // the binary D''' as the receiving map.
    if (kind.aux.size() < 3) {
      throw ShapeError(
          "operator transfer for generalized-derivation needs the chained auxiliary D'''");
    }
    ternary_kind.aux = {op, kind.aux[0], kind.aux[2]};
  } else if (kind.tag == Tag::quasiderivation) {
    if (kind.aux.size() < 2) {
      throw ShapeError("operator transfer for quasiderivation needs the chained auxiliary D''");
    }
    ternary_kind.aux = {kind.aux[0], kind.aux[1]};
  }
  out.ternary = check_ternary_operator(ternary_from_binary(b), ternary_kind, op);
  return out;
}

CheckReport check_compatible_averaging(const BinaryAlgebra& b, const Matrix& b1, const Matrix& b2,
                                       bool strict) {
  const int n = b.dim();
  require_square(b1, n, "operator");
  require_square(b2, n, "operator");
  CheckReport rep;
  rep.declare("compatible-averaging");
  if (strict) rep.declare("compatible-averaging-strict");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Vec<Scalar> x = basis_vec<Scalar>(n, i);
      const Vec<Scalar> y = basis_vec<Scalar>(n, j);
      Vec<Scalar> left = vec_add(mat_apply(b2, b.bracket(b1.col(i), y)),
                                 mat_apply(b1, b.bracket(b2.col(i), y)));
      Vec<Scalar> right = vec_add(b.bracket(b1.col(i), b2.col(j)), b.bracket(b2.col(i), b1.col(j)));
      if (strict) rep.require("compatible-averaging-strict", {i, j}, left, right);
      for (int k = 0; k < n; ++k) {
        const Vec<Scalar> z = basis_vec<Scalar>(n, k);
        rep.require("compatible-averaging", {i, j, k}, b.bracket(left, z), b.bracket(right, z));
      }
    }
  }
  rep.flags()["commute"] = (b1 * b2 == b2 * b1);
  rep.flags()["injective-1"] = (rref(b1).rank == n);
  rep.flags()["injective-2"] = (rref(b2).rank == n);
  return rep;
}

CheckReport check_inverse_rb_derivation(const TernaryAlgebra& t, const Matrix& r,
                                        const Scalar& weight) {
  const int n = t.dim();
  require_square(r, n, "operator");
  std::optional<Matrix> inv = inverse(r);
  if (!inv) throw SingularError("operator is singular; it has no inverse to check");
  CheckReport rep;
  rep.absorb("rota-baxter/", check_ternary_operator(t, OperatorKind::rota_baxter(weight), r));
  rep.absorb("inverse-derivation/",
             check_ternary_operator(t, OperatorKind::derivation(weight), *inv));
  return rep;
}

bool NijenhuisRbReport::implication_holds() const {
  if (!rota_baxter) return true;
  if (square_zero) return nijenhuis.pass() == rota_baxter->pass();
  return !rota_baxter->pass() || nijenhuis.pass();
}

CheckReport NijenhuisRbReport::combined() const {
  CheckReport rep;
  rep.absorb("nijenhuis/", nijenhuis);
  if (rota_baxter) {
    rep.absorb("rota-baxter/", *rota_baxter);
    rep.notes()["rota-baxter-weight"] = rb_weight.str();
  }
  rep.flags()["square-zero"] = square_zero;
  rep.flags()["square-idempotent"] = square_idempotent;
  rep.flags()["case-implication"] = implication_holds();
  return rep;
}

NijenhuisRbReport check_nijenhuis_rb_equivalence(const TernaryAlgebra& t, const Matrix& n) {
  const int d = t.dim();
  require_square(n, d, "operator");
  NijenhuisRbReport out;
  const Matrix sq = n * n;
  out.square_zero = sq.is_zero();
  out.square_idempotent = (sq == n);
  out.nijenhuis = check_ternary_operator(t, OperatorKind::nijenhuis(), n);
  if (out.square_zero) {
    out.rb_weight = Scalar(0);
    out.rota_baxter = check_ternary_operator(t, OperatorKind::rota_baxter(Scalar(0)), n);
  } else if (out.square_idempotent) {
    out.rb_weight = Scalar(-1);
    out.rota_baxter = check_ternary_operator(t, OperatorKind::rota_baxter(Scalar(-1)), n);
  }
  return out;
}

namespace {

/// The operator identities that are linear in the unknown map give one scalar
/// equation per (basis tuple, output coordinate). Each equation row is built
/// from slot contributions: "apply" is op composed with the bracket, "slot i"
/// is op inserted in the i-th argument. Unknown (r, c) sits at column r*n + c.
struct BinaryTermPattern {
  // Coefficients of (apply, slot1, slot2) in the identity "sum = 0".
  Scalar apply, slot1, slot2;
};

std::vector<Matrix> solve_from_rows(int n, const std::vector<Vec<Scalar>>& rows) {
  Matrix system(static_cast<int>(rows.size()), n * n);
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
    for (int c = 0; c < n * n; ++c) {
      system.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
  }
  std::vector<Matrix> basis;
  for (const Vec<Scalar>& v : nullspace(system)) {
    Matrix m(n, n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) m.at(r, c) = v[static_cast<std::size_t>(r * n + c)];
    }
    basis.push_back(std::move(m));
  }
  return basis;
}

std::vector<Vec<Scalar>> binary_identity_rows(const BinaryAlgebra& b,
                                              const std::vector<BinaryTermPattern>& patterns) {
  const int n = b.dim();
  std::vector<Vec<Scalar>> rows;
  for (const BinaryTermPattern& p : patterns) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int o = 0; o < n; ++o) {
          Vec<Scalar> row = zero_vec<Scalar>(n * n);
          for (int a = 0; a < n; ++a) {
            // op(.)_o picks row o of the unknown: coefficient of entry (o, a).
            if (!p.apply.is_zero()) {
              row[static_cast<std::size_t>(o * n + a)] += p.apply * b.c().at({i, j, a});
            }
            // op in slot 1 replaces e_i by sum_a op[a][i] e_a.
            if (!p.slot1.is_zero()) {
              row[static_cast<std::size_t>(a * n + i)] += p.slot1 * b.c().at({a, j, o});
            }
            if (!p.slot2.is_zero()) {
              row[static_cast<std::size_t>(a * n + j)] += p.slot2 * b.c().at({i, a, o});
            }
          }
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

struct TernaryTermPattern {
  Scalar apply, slot1, slot2, slot3;
};

std::vector<Vec<Scalar>> ternary_identity_rows(const TernaryAlgebra& t,
                                               const std::vector<TernaryTermPattern>& patterns) {
  const int n = t.dim();
  std::vector<Vec<Scalar>> rows;
  for (const TernaryTermPattern& p : patterns) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          for (int o = 0; o < n; ++o) {
            Vec<Scalar> row = zero_vec<Scalar>(n * n);
            for (int a = 0; a < n; ++a) {
              if (!p.apply.is_zero()) {
                row[static_cast<std::size_t>(o * n + a)] += p.apply * t.t().at({i, j, k, a});
              }
              if (!p.slot1.is_zero()) {
                row[static_cast<std::size_t>(a * n + i)] += p.slot1 * t.t().at({a, j, k, o});
              }
              if (!p.slot2.is_zero()) {
                row[static_cast<std::size_t>(a * n + j)] += p.slot2 * t.t().at({i, a, k, o});
              }
              if (!p.slot3.is_zero()) {
                row[static_cast<std::size_t>(a * n + k)] += p.slot3 * t.t().at({i, j, a, o});
              }
            }
            rows.push_back(std::move(row));
          }
        }
      }
    }
  }
  return rows;
}

}  // namespace

std::vector<Matrix> solve_operator_space(const BinaryAlgebra& b, const OperatorKind& kind) {
  using Tag = OperatorKind::Tag;
  const Scalar one(1), neg(-1), zero(0);
  std::vector<BinaryTermPattern> patterns;
  switch (kind.tag) {
    case Tag::centroid:
      patterns = {{one, neg, zero}, {one, zero, neg}};
      break;
    case Tag::central_derivation:
      patterns = {{one, zero, zero}, {zero, one, zero}, {zero, zero, one}};
      break;
    case Tag::derivation:
      if (!kind.weight.is_zero()) {
        throw UnsupportedError(
            "operator-space solving supports only weight 0: a nonzero weight adds a constant "
            "term, so the solutions no longer form a linear space");
      }
      patterns = {{one, neg, neg}};
      break;
    default:
      throw UnsupportedError("operator space for kind '" + kind.name() +
                             "' is not cut out by linear equations");
  }
  return solve_from_rows(b.dim(), binary_identity_rows(b, patterns));
}

std::vector<Matrix> solve_operator_space(const TernaryAlgebra& t, const OperatorKind& kind) {
  using Tag = OperatorKind::Tag;
  const Scalar one(1), neg(-1), zero(0);
  std::vector<TernaryTermPattern> patterns;
  switch (kind.tag) {
    case Tag::centroid:
      patterns = {{one, neg, zero, zero}, {one, zero, neg, zero}, {one, zero, zero, neg}};
      break;
    case Tag::central_derivation:
      patterns = {{one, zero, zero, zero},
                  {zero, one, zero, zero},
                  {zero, zero, one, zero},
                  {zero, zero, zero, one}};
      break;
    default:
      // Includes derivations: the ternary derivation identity replaces the
      // single-slot sum by the two-slot sum, which is quadratic in the
      // operator, so its solution set is not a linear space.
      throw UnsupportedError("operator space for kind '" + kind.name() +
                             "' is not cut out by linear equations on a ternary bracket");
  }
  return solve_from_rows(t.dim(), ternary_identity_rows(t, patterns));
}

}  // namespace tlz
