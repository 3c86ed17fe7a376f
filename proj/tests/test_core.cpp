#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "doctest.h"
#include "tlz/errors.hpp"
#include "tlz/fixtures.hpp"
#include "tlz/io.hpp"
#include "tlz/matrix.hpp"
#include "tlz/poly.hpp"
#include "tlz/report.hpp"
#include "tlz/scalar.hpp"
#include "tlz/tensor.hpp"

using namespace tlz;

TEST_CASE("scalar parsing accepts exactly the canonical forms") {
  for (const char* good : {"0", "5", "-3", "7/2", "-7/2", "1", "-1", "10/3",
                           "123456789012345678901234567890"}) {
    Scalar s = Scalar::parse(good);
    CHECK(s.str() == good);
  }
  for (const char* bad : {"", "-0", "00", "01", "2/4", "1/-2", "1/0", "+1", " 1", "1 ", "1/",
                          "/2", "a", "1.5", "0/5", "--1", "1//2", "0x1"}) {
    CHECK_THROWS_AS(Scalar::parse(bad), ParseError);
  }
  // An explicit denominator of one is in lowest terms, so it parses, but it
  // re-renders canonically without the slash.
  CHECK(Scalar::parse("3/1").str() == "3");
}

TEST_CASE("scalar arithmetic is exact") {
  Scalar a(1, 2), b(1, 3);
  CHECK((a + b).str() == "5/6");
  CHECK((a - b).str() == "1/6");
  CHECK((a * b).str() == "1/6");
  CHECK((a / b).str() == "3/2");
  CHECK((-a).str() == "-1/2");
  CHECK(inverse(Scalar(-2, 3)) == Scalar(-3, 2));
  CHECK(Scalar(4, -6) == Scalar(-2, 3));
  CHECK(Scalar(0).is_zero());
  CHECK(Scalar(1).is_one());
  CHECK(Scalar(-5).sign() == -1);
  CHECK_THROWS_AS(a / Scalar(0), ShapeError);
  CHECK_THROWS_AS(inverse(Scalar(0)), ShapeError);
  CHECK_THROWS_AS(Scalar(1, 0), ShapeError);
}

TEST_CASE("polynomials track the parameter exactly and cap the degree") {
  PolyScalar s = PolyScalar::parameter();
  PolyScalar p = Scalar(2) + Scalar(3) * s;  // via implicit promotion
  CHECK(p.degree() == 1);
  CHECK(p.coeff(0) == Scalar(2));
  CHECK(p.coeff(1) == Scalar(3));
  PolyScalar q = p * p;
  CHECK(q.degree() == 2);
  CHECK(q.coeff(0) == Scalar(4));
  CHECK(q.coeff(1) == Scalar(12));
  CHECK(q.coeff(2) == Scalar(9));
  CHECK(q.eval(Scalar(1)) == Scalar(25));
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);

  PolyScalar cube = s * s * s;
  CHECK((cube * cube).degree() == 6);
  CHECK_THROWS_AS(cube * cube * s, DegreeError);
}

TEST_CASE("tensor application is multilinear with the last axis as output") {
  Tensor t({2, 2, 2});
  t.at({0, 0, 1}) = Scalar(1);  // [e0,e0] = e1
  Vec<Scalar> e0 = basis_vec<Scalar>(2, 0), e1 = basis_vec<Scalar>(2, 1);
  CHECK(apply(t, {e0, e0}) == e1);
  CHECK(vec_is_zero(apply(t, {e0, e1})));
  CHECK(vec_is_zero(apply(t, {e1, e0})));

  Vec<Scalar> x = vec_add(vec_scale(Scalar(2), e0), vec_scale(Scalar(3), e1));
  Vec<Scalar> y = vec_add(vec_scale(Scalar(5), e0), vec_scale(Scalar(-1), e1));
  // Bilinearity: [2e0+3e1, 5e0-e1] = 10 [e0,e0] = 10 e1.
  CHECK(apply(t, {x, y}) == vec_scale(Scalar(10), e1));

  CHECK_THROWS_AS(Tensor({2, 0}), ShapeError);
  CHECK_THROWS_AS(Tensor({-1}), ShapeError);
}

TEST_CASE("matrix algebra, reduction and solving are exact") {
  Matrix m(2, 2);
  m.at(0, 0) = Scalar(1);
  m.at(0, 1) = Scalar(2);
  m.at(1, 0) = Scalar(3);
  m.at(1, 1) = Scalar(4);

  SUBCASE("products and transpose") {
    Matrix id = Matrix::identity(2);
    CHECK(m * id == m);
    CHECK((Scalar(2) * id) * m == m + m);
    CHECK(m.transpose().at(0, 1) == Scalar(3));
    Vec<Scalar> v = {Scalar(1), Scalar(1)};
    Vec<Scalar> mv = mat_apply(m, v);
    CHECK(mv[0] == Scalar(3));
    CHECK(mv[1] == Scalar(7));
  }

  SUBCASE("inverse") {
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK((*inv) * m == Matrix::identity(2));
    Matrix singular(2, 2);
    singular.at(0, 0) = Scalar(1);
    singular.at(1, 0) = Scalar(2);  // second column zero
    CHECK(!inverse(singular).has_value());
  }

  SUBCASE("rref, nullspace and affine solve") {
    Matrix a(2, 3);
    a.at(0, 0) = Scalar(1);
    a.at(0, 1) = Scalar(2);
    a.at(0, 2) = Scalar(3);
    a.at(1, 0) = Scalar(2);
    a.at(1, 1) = Scalar(4);
    a.at(1, 2) = Scalar(6);  // rank 1
    RrefResult r = rref(a);
    CHECK(r.rank == 1);
    REQUIRE(r.pivot_cols.size() == 1);
    CHECK(r.pivot_cols[0] == 0);

    auto null = nullspace(a);
    REQUIRE(null.size() == 2);
    for (const auto& v : null) {
      Vec<Scalar> av = mat_apply(a, v);
      CHECK(vec_is_zero(av));
    }

    Vec<Scalar> b = {Scalar(6), Scalar(12)};
    LinearSolution sol = solve_affine(a, b);
    REQUIRE(sol.feasible);
    CHECK(mat_apply(a, sol.particular) == b);
    CHECK(sol.homogeneous.size() == 2);

    Vec<Scalar> inconsistent = {Scalar(6), Scalar(13)};
    CHECK(!solve_affine(a, inconsistent).feasible);
  }
}

TEST_CASE("check reports cap witnesses but count every violation") {
  CheckReport rep;
  rep.declare("always-clean");
  Vec<Scalar> zero = zero_vec<Scalar>(1);
  Vec<Scalar> one = {Scalar(1)};
  for (int i = 0; i < 10; ++i) {
    CHECK(!rep.require("broken", {i}, one, zero));
  }
  CHECK(rep.require("broken", {10}, one, one));
  CHECK(!rep.pass());
  CHECK(rep.identity_passed("always-clean"));
  CHECK(!rep.identity_passed("broken"));
  CHECK(rep.total_violations() == 10);
  CHECK(rep.violation_count("broken") == 10);
  CHECK(rep.violation_count("always-clean") == 0);
  CHECK(rep.violations().size() == CheckReport::kMaxWitnessesPerIdentity);
  CHECK(rep.violations()[0].left == std::vector<std::string>{"1"});
  CHECK(rep.violations()[0].right == std::vector<std::string>{"0"});

  CheckReport outer;
  outer.absorb("inner/", rep);
  CHECK(!outer.pass());
  CHECK(outer.total_violations() == 10);
  CHECK(!outer.identity_passed("inner/broken"));
  CHECK(outer.identity_passed("inner/always-clean"));
}

namespace {

/// Serialize, reparse and compare, both structurally and textually.
void roundtrip(const AlgebraFile& file) {
  std::string text = serialize_algebra_file(file);
  AlgebraFile back = parse_algebra_file(text);
  CHECK(back == file);
  CHECK(serialize_algebra_file(back) == text);
}

}  // namespace

TEST_CASE("every file kind serializes and parses back identically") {
  roundtrip(make_binary_file(heisenberg2()));
  roundtrip(make_binary_file(sl2()));
  roundtrip(make_ternary_file(ternary_from_binary(sl2())));
  roundtrip(make_comm_assoc_file(dual_numbers()));

  Matrix op = shift_matrix(3);
  roundtrip(make_operator_file(op));
  roundtrip(make_operator_file(op, Scalar(-1, 2)));
  roundtrip(make_operator_file(op, Scalar(0), {Matrix::identity(3), Scalar(2) * Matrix::identity(3)}));

  roundtrip(make_bimodule_file(regular_bimodule(heisenberg2())));
  TernaryAlgebra st = ternary_from_binary(sl2());
  roundtrip(make_bimodule_file(regular_bimodule(st)));
  roundtrip(make_representation_file(adjoint_representation(st)));
  roundtrip(make_cocycle_file(Cocycle(st.t())));

  std::mt19937_64 rng(7);
  roundtrip(make_deformation_file(random_deformation(rng, 2, 2), 2, 2));

  AlgebraFile with_meta = make_binary_file(solvable2());
  with_meta.meta["name"] = "solv2";
  with_meta.meta["note"] = "two-dimensional solvable";
  roundtrip(with_meta);
}

TEST_CASE("malformed documents are rejected with a parse error") {
  auto reject = [](const std::string& text) {
    CHECK_THROWS_AS(parse_algebra_file(text), ParseError);
  };
  reject("not json at all");
  reject("[1,2,3]");
  reject(R"({"kind":"frobnicator","dims":[2],"entries":[]})");
  reject(R"({"kind":"binary","entries":[]})");                                  // dims missing
  reject(R"({"kind":"binary","dims":[2,3],"entries":[]})");                     // dims wrong length
  reject(R"({"kind":"binary","dims":[0],"entries":[]})");                       // dimension zero
  reject(R"({"kind":"binary","dims":[64],"entries":[]})");                      // above the cap
  reject(R"({"kind":"binary","dims":[2],"entries":[],"extra":1})");             // unknown key
  reject(R"({"kind":"binary","dims":[2],"weight":"1","entries":[]})");          // weight misplaced
  reject(R"({"kind":"binary","dims":[2],"entries":[{"idx":[0,0],"val":"1"}]})");  // idx too short
  reject(R"({"kind":"binary","dims":[2],"entries":[{"idx":[0,0,2],"val":"1"}]})");  // out of range
  reject(R"({"kind":"binary","dims":[2],"entries":[{"idx":[0,0,1],"val":"2/4"}]})");
  reject(R"({"kind":"binary","dims":[2],"entries":[{"idx":[0,0,1],"val":"1","x":2}]})");
  reject(
      R"({"kind":"binary","dims":[2],"entries":[{"idx":[0,0,1],"val":"1"},{"idx":[0,0,1],"val":"2"}]})");
  reject(R"({"kind":"representation","dims":[1,1],"parts":{"lambda":[],"mu":[]}})");
  reject(
      R"({"kind":"representation","dims":[1,1],"parts":{"lambda":[],"mu":[],"rho":[],"sigma":[]}})");
  reject(R"({"kind":"binary","dims":[2],"entries":[],"meta":{"k":1}})");
  CHECK_THROWS_AS(load_algebra_file("/nonexistent/path.json"), ParseError);
}

TEST_CASE("report rendering carries the verdict, counts and witnesses") {
  CheckReport rep;
  Vec<Scalar> one = {Scalar(1)};
  rep.require("bad", {1, 2}, one, zero_vec<Scalar>(1));
  rep.flags()["some-flag"] = true;
  rep.notes()["why"] = "example";
  auto doc = report_to_json(rep);
  CHECK(doc.at("verdict") == "fail");
  CHECK(doc.at("total_violations") == 1);
  CHECK(doc.at("identities").size() == 1);
  CHECK(doc.at("identities")[0].at("name") == "bad");
  CHECK(doc.at("identities")[0].at("pass") == false);
  CHECK(doc.at("witnesses")[0].at("tuple") == std::vector<int>{1, 2});
  CHECK(doc.at("flags").at("some-flag") == true);
  CHECK(doc.at("notes").at("why") == "example");
}
