// Acceptance gate: runs every release criterion and prints one line per
// criterion in the form "CRITERION nn [PASS/FAIL] name". Exits nonzero if
// any criterion fails. Expects the command-line tool, the bundled document
// directory, and the test data directory as arguments.
#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "oracle.hpp"
#include "tlz/algebra.hpp"
#include "tlz/deform.hpp"
#include "tlz/errors.hpp"
#include "tlz/fixtures.hpp"
#include "tlz/io.hpp"
#include "tlz/matrix.hpp"
#include "tlz/modrep.hpp"
#include "tlz/operators.hpp"
#include "tlz/report.hpp"
#include "tlz/tensor.hpp"

using namespace tlz;

namespace {

std::string g_tlz;
std::string g_fixtures;
std::string g_data;

/// Failure collector: criteria record reasons and keep running, so a single
/// run reports everything that went wrong.
struct Ctx {
  bool ok = true;
  std::vector<std::string> notes;
  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (notes.size() < 8) notes.push_back(what);
  }
};

int run_cli(const std::string& args) {
  std::string cmd = g_tlz + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<std::string> split_words(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string word; in >> word;) out.push_back(word);
  return out;
}

std::vector<std::filesystem::path> fixture_paths() {
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(g_fixtures)) {
    if (entry.path().extension() == ".json") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

OperatorKind kind_named(const std::string& name, const Scalar& weight, std::vector<Matrix> aux) {
  OperatorKind kind;
  kind.tag = OperatorKind::tag_from_name(name);
  kind.weight = weight;
  kind.aux = std::move(aux);
  return kind;
}

/// In-process mirror of the command-line dispatch for the checker names that
/// appear in bundled document metadata.
bool lib_checker(const std::string& checker, const std::vector<AlgebraFile>& files) {
  if (checker == "leibniz") return check_leibniz(as_binary(files.at(0))).pass();
  if (checker == "ternary-leibniz") return check_ternary_leibniz(as_ternary(files.at(0))).pass();
  if (checker == "comm-assoc") return check_comm_assoc(files.at(0).main).pass();
  if (checker == "bimodule") {
    if (files.at(0).kind == "binary") {
      return check_binary_bimodule(as_binary(files.at(0)), as_binary_bimodule(files.at(1))).pass();
    }
    return check_ternary_bimodule(as_ternary(files.at(0)), as_ternary_bimodule(files.at(1))).pass();
  }
  if (checker == "representation") {
    return check_representation(as_ternary(files.at(0)), as_representation(files.at(1))).pass();
  }
  if (checker == "cocycle") {
    return check_cocycle(as_ternary(files.at(0)), as_ternary_bimodule(files.at(1)),
                         as_cocycle(files.at(2)))
        .pass();
  }
  if (checker == "deformation-equations") {
    return check_deformation_equations(as_ternary(files.at(0)), as_representation(files.at(1)),
                                       as_deformation(files.at(2)))
        .pass();
  }
  OperatorKind kind = kind_named(checker, files.at(1).weight.value_or(Scalar(0)),
                                 operator_aux(files.at(1)));
  if (files.at(0).kind == "binary") {
    return check_binary_operator(as_binary(files.at(0)), kind, as_operator_matrix(files.at(1)))
        .pass();
  }
  return check_ternary_operator(as_ternary(files.at(0)), kind, as_operator_matrix(files.at(1)))
      .pass();
}

BinaryAlgebra mirror_binary(const Scalar& k) {
  BinaryAlgebra b(2);
  b.c().at({1, 1, 0}) = k;
  return b;
}

TernaryAlgebra one_product_ternary(int from, int to, const Scalar& k) {
  TernaryAlgebra t(2);
  t.t().at({from, from, from, to}) = k;
  return t;
}

/// Representation of the zero bracket whose three families all act through one
/// elementary matrix; products of two such actions vanish or clash by design.
Representation constant_pattern_representation(int n, int m, int row, int col) {
  Tensor t(std::vector<int>{n, n, m, m});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t.at({i, j, col, row}) = Scalar(1);
  }
  return Representation(t, t, t);
}

// ---------------------------------------------------------------------------

void crit01(Ctx& c) {
  int pairs = 0;
  for (const auto& path : fixture_paths()) {
    AlgebraFile f = load_algebra_file(path.string());
    auto it = f.meta.find("checker");
    c.require(it != f.meta.end(), path.filename().string() + ": no checker recorded");
    if (it == f.meta.end()) continue;
    bool want = f.meta.at("verdict") == "pass";
    std::vector<AlgebraFile> files;
    std::vector<oracle::Doc> docs;
    for (const auto& name : split_words(f.meta.at("inputs"))) {
      files.push_back(load_algebra_file(g_fixtures + "/" + name));
      docs.push_back(oracle::load_doc(g_fixtures + "/" + name));
    }
    bool lib = lib_checker(it->second, files);
    bool ref = oracle::run_checker(it->second, docs);
    c.require(lib == want, path.filename().string() + ": library verdict differs from the record");
    c.require(ref == want, path.filename().string() + ": reference verdict differs from the record");
    ++pairs;
  }
  c.require(pairs >= 30, "bundled corpus is unexpectedly small");
}

void crit02(Ctx& c) {
  std::mt19937_64 rng(1001);
  std::vector<BinaryAlgebra> corpus = {abelian_binary(2), abelian_binary(3), heisenberg2(), sl2(),
                                       solvable2()};
  const std::vector<std::pair<int, int>> shapes = {{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}, {1, 3}};
  while (corpus.size() < 54) {
    auto [gens, center] = shapes[corpus.size() % shapes.size()];
    corpus.push_back(random_nilpotent2_binary(rng, gens, center));
  }
  int verified = 0;
  for (const auto& b : corpus) {
    if (!check_leibniz(b).pass()) {
      c.require(false, "a generated instance fails the binary identity");
      continue;
    }
    bool inherited = check_ternary_leibniz(ternary_from_binary(b)).pass();
    c.require(inherited, "an induced ternary bracket fails the ternary identity");
    if (inherited) ++verified;
  }
  c.require(verified >= 50, "fewer than fifty verified instances");

  BinaryAlgebra bad = not_leibniz2();
  c.require(!check_leibniz(bad).pass(), "the designated counterexample passes the binary check");
  c.require(!check_ternary_leibniz(ternary_from_binary(bad)).pass(),
            "the counterexample's induced bracket passes, making the property vacuous");
}

void crit03(Ctx& c) {
  int squared = 0;
  for (const auto& path : fixture_paths()) {
    AlgebraFile f = load_algebra_file(path.string());
    if (f.kind != "ternary" || f.meta.at("verdict") != "pass" || f.dims.at(0) > 3) continue;
    c.require(check_leibniz(tensor_square_leibniz(as_ternary(f))).pass(),
              path.filename().string() + ": tensor square fails the binary identity");
    ++squared;
  }
  c.require(squared >= 4, "too few ternary instances were squared");
}

void crit04(Ctx& c) {
  struct Case {
    BinaryAlgebra alg;
    std::string kind;
    Scalar weight;
    std::vector<Matrix> aux;
    Matrix op;
  };
  BinaryAlgebra h = heisenberg2();
  BinaryAlgebra s = sl2();
  Matrix corner2(2, 2);
  corner2.at(1, 0) = Scalar(1);
  Matrix zero2(2, 2);
  Matrix id3 = Matrix::identity(3);
  Matrix two3 = Matrix::scalar(3, Scalar(2));
  const std::vector<std::string> all_kinds = {
      "derivation", "rota-baxter",        "centroid",
      "reynolds",   "averaging",          "nijenhuis",
      "central-derivation",               "generalized-derivation",
      "quasiderivation"};

  std::vector<Case> corpus;
  for (const auto& kind : all_kinds) {
    std::vector<Matrix> aux;
    if (kind == "generalized-derivation") aux = {zero2, zero2, zero2};
    if (kind == "quasiderivation") aux = {zero2, zero2};
    corpus.push_back({h, kind, Scalar(0), aux, corner2});
  }
  corpus.push_back({s, "centroid", Scalar(0), {}, two3});
  corpus.push_back({s, "averaging", Scalar(0), {}, two3});
  corpus.push_back({s, "nijenhuis", Scalar(0), {}, two3});
  corpus.push_back({s, "rota-baxter", Scalar(1), {}, Matrix::scalar(3, Scalar(-1))});
  corpus.push_back({s, "derivation", Scalar(-1), {}, id3});
  corpus.push_back({s, "generalized-derivation", Scalar(0),
                    {two3, Matrix::scalar(3, Scalar(3)), Matrix::scalar(3, Scalar(4))}, id3});
  corpus.push_back({s, "quasiderivation", Scalar(0), {two3, Matrix::scalar(3, Scalar(4))}, id3});

  std::set<std::string> covered;
  for (const auto& entry : corpus) {
    try {
      TransferReport tr =
          check_operator_transfer(entry.alg, kind_named(entry.kind, entry.weight, entry.aux),
                                  entry.op);
      if (tr.binary.pass()) covered.insert(entry.kind);
      c.require(tr.implication_holds(), "transfer failed for class " + entry.kind);
    } catch (const std::exception& e) {
      c.require(false, "transfer raised for class " + entry.kind + ": " + e.what());
    }
  }
  c.require(covered.size() == all_kinds.size(),
            "some operator class was exercised only vacuously");
}

void crit05(Ctx& c) {
  std::mt19937_64 rng(2002);
  bool yes_b = false, no_b = false, yes_t = false, no_t = false;

  auto binary_case = [&](const BinaryAlgebra& x, const BinaryAlgebra& y) {
    bool compat = check_compatible_leibniz(x, y).pass();
    bool on_pencil = check_leibniz(pencil(x, y, Scalar(1), Scalar(0))).pass() &&
                     check_leibniz(pencil(x, y, Scalar(0), Scalar(1))).pass() &&
                     check_leibniz(pencil(x, y, Scalar(1), Scalar(1))).pass();
    c.require(compat == on_pencil, "binary cross-term and pencil verdicts differ");
    if (compat) {
      yes_b = true;
    } else {
      no_b = true;
    }
  };
  auto ternary_case = [&](const TernaryAlgebra& x, const TernaryAlgebra& y) {
    bool compat = check_compatible_ternary(x, y).pass();
    bool on_pencil = check_ternary_leibniz(pencil(x, y, Scalar(1), Scalar(0))).pass() &&
                     check_ternary_leibniz(pencil(x, y, Scalar(0), Scalar(1))).pass() &&
                     check_ternary_leibniz(pencil(x, y, Scalar(1), Scalar(1))).pass();
    c.require(compat == on_pencil, "ternary cross-term and pencil verdicts differ");
    if (compat) {
      yes_t = true;
    } else {
      no_t = true;
    }
  };

  for (int i = 0; i < 50; ++i) {
    int gens = 1 + (i % 2);
    int center = 1 + ((i / 2) % 2);
    binary_case(random_nilpotent2_binary(rng, gens, center),
                random_nilpotent2_binary(rng, gens, center));
    ternary_case(random_nilpotent2_ternary(rng, gens, center),
                 random_nilpotent2_ternary(rng, gens, center));
  }
  for (int i = 0; i < 10; ++i) {
    switch (i % 4) {
      case 0: binary_case(heisenberg2(), heisenberg2()); break;
      case 1: binary_case(sl2(), sl2()); break;
      case 2: binary_case(solvable2(), solvable2()); break;
      default: binary_case(abelian_binary(3), abelian_binary(3)); break;
    }
    switch (i % 3) {
      case 0: ternary_case(ternary_from_binary(sl2()), ternary_from_binary(sl2())); break;
      case 1: ternary_case(abelian_ternary(3), abelian_ternary(3)); break;
      default:
        ternary_case(ternary_from_binary(solvable2()), ternary_from_binary(solvable2()));
        break;
    }
  }
  for (int k = 1; k <= 40; ++k) {
    binary_case(heisenberg2(), mirror_binary(Scalar(k)));
    ternary_case(one_product_ternary(0, 1, Scalar(1)), one_product_ternary(1, 0, Scalar(k)));
  }
  c.require(yes_b && no_b, "binary corpus did not produce both verdicts");
  c.require(yes_t && no_t, "ternary corpus did not produce both verdicts");
}

void crit06(Ctx& c) {
  int extensions = 0;
  for (const auto& path : fixture_paths()) {
    AlgebraFile f = load_algebra_file(path.string());
    if (f.kind != "cocycle") continue;
    std::vector<std::string> inputs = split_words(f.meta.at("inputs"));
    TernaryAlgebra alg = as_ternary(load_algebra_file(g_fixtures + "/" + inputs.at(0)));
    TernaryBimodule bim = as_ternary_bimodule(load_algebra_file(g_fixtures + "/" + inputs.at(1)));
    Cocycle w = as_cocycle(f);
    c.require(check_cocycle(alg, bim, w).pass(),
              path.filename().string() + ": the twisting map fails its condition");
    TernaryAlgebra plain = semidirect(alg, bim);
    TernaryAlgebra twisted = semidirect(alg, bim, w);
    c.require(check_ternary_leibniz(plain).pass(),
              path.filename().string() + ": the untwisted extension fails");
    c.require(check_ternary_leibniz(twisted).pass(),
              path.filename().string() + ": the twisted extension fails");
    c.require(check_compatible_ternary(plain, twisted).pass(),
              path.filename().string() + ": the twisted and untwisted brackets clash");
    ++extensions;
  }
  c.require(extensions >= 2, "too few twisting maps in the bundle");
}

void crit07(Ctx& c) {
  std::mt19937_64 rng(3003);
  TernaryAlgebra st = ternary_from_binary(sl2());
  Representation ad = adjoint_representation(st);
  int passing = 0;

  auto consider = [&](const TernaryAlgebra& alg, const Representation& rep, const Matrix& t) {
    OOperatorData data(t, rep);
    if (!check_o_operator(data, alg).pass()) return;
    ++passing;
    c.require(check_ternary_leibniz(o_operator_bracket(data)).pass(),
              "an induced relative-operator bracket fails the ternary identity");
  };

  Matrix corner3(3, 3);
  corner3.at(1, 0) = Scalar(1);
  consider(st, ad, corner3);
  for (int i = 0; i < 4; ++i) consider(st, ad, random_matrix(rng, 3, 3, 2));
  for (int n = 2; n <= 3; ++n) {
    TernaryAlgebra flat = abelian_ternary(n);
    Representation sh = shift_representation(rng, n, n);
    for (int i = 0; i < 3; ++i) {
      Matrix t = random_matrix(rng, n, n, 2);
      for (int r = 0; r < n; ++r) t.at(r, 0) = Scalar(0);
      consider(flat, sh, t);
    }
  }
  c.require(passing >= 5, "too few relative operators passed their condition");

  c.require(o_operator_bracket(OOperatorData(corner3, ad)).t() ==
                rota_baxter0_bracket(st, corner3).t(),
            "adjoint route differs from the descendent bracket");
  for (int i = 0; i < 4; ++i) {
    Matrix r = random_matrix(rng, 3, 3, 2);
    c.require(o_operator_bracket(OOperatorData(r, ad)).t() == rota_baxter0_bracket(st, r).t(),
              "adjoint route differs from the descendent bracket on a random operator");
  }
}

void crit08(Ctx& c) {
  std::mt19937_64 rng(4004);
  TernaryAlgebra st = ternary_from_binary(sl2());
  Representation ad = adjoint_representation(st);
  TernaryAlgebra flat = abelian_ternary(2);
  Representation sh = shift_representation(rng, 2, 2);
  int agreements = 0;

  auto compare = [&](const TernaryAlgebra& alg, const Representation& rep,
                     const DeformationData& data) {
    CheckReport eq = check_deformation_equations(alg, rep, data);
    CheckReport ex = check_deformation_by_expansion(alg, rep, data);
    bool same = eq.pass() == ex.pass();
    std::vector<std::string> a = eq.identities();
    std::vector<std::string> b = ex.identities();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    same = same && a == b;
    if (same) {
      for (const auto& name : a) same = same && eq.identity_passed(name) == ex.identity_passed(name);
    }
    c.require(same, "the two deformation checkers disagree");
    if (same) ++agreements;
  };

  compare(st, ad, zero_deformation(3, 3));
  compare(flat, sh, zero_deformation(2, 2));
  for (const char* s : {"1", "2", "1/2"}) {
    PairData pair(Matrix::scalar(3, Scalar::parse(s)),
                  Matrix::scalar(3, Scalar::parse(s) + Scalar(1)));
    compare(st, ad, deformation_from_pair(st, ad, pair));
  }
  for (int i = 0; i < 100; ++i) compare(st, ad, random_deformation(rng, 3, 3));
  for (int i = 0; i < 100; ++i) compare(flat, sh, random_deformation(rng, 2, 2));
  c.require(agreements == 205, "not every comparison agreed");
}

/// The shared operator-pair corpus: scalar pairs on the simple ternary
/// algebra with its adjoint actions, plus nilpotent module operators over
/// zero brackets. All of these satisfy the pair condition.
struct PairCase {
  TernaryAlgebra alg;
  Representation rep;
  PairData pair;
};

std::vector<PairCase> passing_pair_corpus(std::mt19937_64& rng) {
  std::vector<PairCase> out;
  TernaryAlgebra st = ternary_from_binary(sl2());
  Representation ad = adjoint_representation(st);
  const std::pair<const char*, const char*> scalars[] = {
      {"1", "1"}, {"2", "3"}, {"-1", "2"}, {"1/2", "-3/2"}, {"0", "1"}, {"3", "0"}};
  for (const auto& [a, b] : scalars) {
    out.push_back({st, ad,
                   PairData(Matrix::scalar(3, Scalar::parse(a)),
                            Matrix::scalar(3, Scalar::parse(b)))});
  }
  for (int n = 2; n <= 3; ++n) {
    TernaryAlgebra flat = abelian_ternary(n);
    Representation sh = shift_representation(rng, n, n);
    for (int i = 0; i < 2; ++i) {
      out.push_back({flat, sh, PairData(random_matrix(rng, n, n, 2), shift_matrix(n))});
    }
  }
  return out;
}

void crit09(Ctx& c) {
  std::mt19937_64 rng(5005);
  int pipelines = 0;
  for (const auto& entry : passing_pair_corpus(rng)) {
    const TernaryAlgebra& alg = entry.alg;
    const Representation& rep = entry.rep;
    CheckReport cond = check_nijenhuis_pair(alg, rep, entry.pair);
    c.require(cond.pass(), "a corpus pair fails the pair condition");
    if (!cond.pass()) continue;
    DeformationData def = deformation_from_pair(alg, rep, entry.pair);
    c.require(check_deformation_equations(alg, rep, def).pass(),
              "an induced deformation fails the equation checker");
    c.require(check_deformation_by_expansion(alg, rep, def).pass(),
              "an induced deformation fails the expansion checker");
    c.require(check_equivalence(alg, rep, zero_deformation(alg.dim(), rep.module_dim()), def,
                                entry.pair)
                  .pass(),
              "an induced deformation is not certified trivial");
    CheckReport sum = pair_sum_nijenhuis(alg, rep, entry.pair);
    c.require(sum.pass(), "the block-sum report fails");
    c.require(sum.flags().at("sum-operator-passes"),
              "the block-sum operator fails on the semidirect algebra");
    ++pipelines;
  }
  c.require(pipelines >= 10, "fewer than ten pairs completed the pipeline");
}

void crit10(Ctx& c) {
  std::mt19937_64 rng(5005);
  std::vector<PairCase> corpus = passing_pair_corpus(rng);

  TernaryAlgebra flat = abelian_ternary(2);
  Representation pattern = constant_pattern_representation(2, 2, 0, 1);
  Matrix proj(2, 2);
  proj.at(1, 1) = Scalar(1);
  corpus.push_back({flat, pattern, PairData(Matrix::identity(2), proj)});
  TernaryAlgebra st = ternary_from_binary(sl2());
  Representation ad = adjoint_representation(st);
  std::mt19937_64 noise(6006);
  for (int i = 0; i < 9; ++i) {
    corpus.push_back({st, ad,
                      PairData(random_matrix(noise, 3, 3, 2), random_matrix(noise, 3, 3, 2))});
  }

  bool saw_pass = false;
  bool saw_fail = false;
  for (const auto& entry : corpus) {
    bool direct = check_nijenhuis_pair(entry.alg, entry.rep, entry.pair).pass();
    bool dual = check_dual_nijenhuis_pair(entry.alg, dual_representation(entry.rep),
                                          PairData(entry.pair.n, entry.pair.t.transpose()))
                    .pass();
    c.require(direct == dual, "direct and dual pair verdicts differ");
    if (direct) {
      saw_pass = true;
    } else {
      saw_fail = true;
    }
  }
  c.require(saw_pass && saw_fail, "the pair corpus did not produce both verdicts");
}

void crit11(Ctx& c) {
  BinaryAlgebra s = sl2();
  OperatorKind centroid = kind_named("centroid", Scalar(0), {});
  std::vector<Matrix> scaling = solve_operator_space(s, centroid);
  c.require(scaling.size() == 1, "the simple algebra's scaling space is not one-dimensional");
  for (const auto& m : scaling) {
    c.require(check_binary_operator(s, centroid, m).pass(),
              "a solved scaling operator fails its checker");
  }

  BinaryAlgebra h = heisenberg2();
  BinaryAlgebra flat = abelian_binary(2);
  for (const char* name : {"derivation", "centroid", "central-derivation"}) {
    OperatorKind kind = kind_named(name, Scalar(0), {});
    for (const auto& alg : {h, flat, s}) {
      for (const auto& m : solve_operator_space(alg, kind)) {
        c.require(check_binary_operator(alg, kind, m).pass(),
                  std::string("a solved binary operator fails class ") + name);
      }
    }
  }

  // The ternary derivation identity is quadratic in the operator, so only
  // the linear classes are solvable on ternary brackets.
  TernaryAlgebra st = ternary_from_binary(sl2());
  for (const char* name : {"centroid", "central-derivation"}) {
    OperatorKind kind = kind_named(name, Scalar(0), {});
    std::vector<Matrix> basis = solve_operator_space(st, kind);
    for (const auto& m : basis) {
      c.require(check_ternary_operator(st, kind, m).pass(),
                std::string("a solved ternary operator fails class ") + name);
    }
  }
  c.require(!solve_operator_space(st, centroid).empty(),
            "the ternary scaling space is unexpectedly empty");
}

void crit12(Ctx& c) {
  int documents = 0;
  for (const auto& path : fixture_paths()) {
    std::string bytes = slurp(path.string());
    AlgebraFile f = load_algebra_file(path.string());
    c.require(serialize_algebra_file(f) == bytes,
              path.filename().string() + ": serialization is not byte-identical");
    ++documents;
  }
  c.require(documents >= 30, "bundled corpus is unexpectedly small");

  int malformed = 0;
  for (const auto& entry : std::filesystem::directory_iterator(g_data + "/malformed")) {
    if (entry.path().extension() != ".json") continue;
    int code = run_cli("check --kind leibniz " + entry.path().string());
    c.require(code == 2, entry.path().filename().string() + ": expected exit code 2, got " +
                             std::to_string(code));
    ++malformed;
  }
  c.require(malformed >= 15, "malformed corpus is unexpectedly small");

  c.require(run_cli("check --kind leibniz " + g_fixtures + "/sl2.json") == 0,
            "a passing check did not exit with code 0");
  c.require(run_cli("check --kind leibniz " + g_fixtures + "/not_leibniz2.json") == 1,
            "a failing check did not exit with code 1");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 4) {
    std::fprintf(stderr, "usage: %s <tlz-binary> <fixtures-dir> <data-dir>\n", argv[0]);
    return 2;
  }
  g_tlz = argv[1];
  g_fixtures = argv[2];
  g_data = argv[3];

  struct Criterion {
    int num;
    const char* name;
    void (*fn)(Ctx&);
  };
  const std::vector<Criterion> criteria = {
      {1, "every bundled document agrees with the reference evaluator", crit01},
      {2, "binary instances hand their identity to the induced ternary bracket", crit02},
      {3, "tensor squares of ternary instances satisfy the binary identity", crit03},
      {4, "operator classes transfer to the induced ternary bracket", crit04},
      {5, "compatibility of two brackets equals pencil membership", crit05},
      {6, "cocycle-twisted extensions stay in class and compatible", crit06},
      {7, "relative operators induce brackets and match the descendent route", crit07},
      {8, "both deformation checkers agree on two hundred data sets", crit08},
      {9, "passing operator pairs generate certified-trivial deformations", crit09},
      {10, "the pair condition and its dual agree through transposes", crit10},
      {11, "solved operator spaces verify and the simple scaling space is a line", crit11},
      {12, "serialization round-trips and malformed inputs exit with code two", crit12},
  };

  bool all = true;
  for (const auto& criterion : criteria) {
    Ctx ctx;
    try {
      criterion.fn(ctx);
    } catch (const std::exception& e) {
      ctx.ok = false;
      ctx.notes.push_back(std::string("unhandled error: ") + e.what());
    }
    std::printf("CRITERION %02d [%s] %s\n", criterion.num, ctx.ok ? "PASS" : "FAIL",
                criterion.name);
    for (const auto& note : ctx.notes) std::printf("    - %s\n", note.c_str());
    std::fflush(stdout);
    all = all && ctx.ok;
  }
  return all ? 0 : 1;
}
