// Writes the fixture corpus and the malformed-input corpus. Every validity
// claim recorded in a fixture's meta block is re-derived here by running the
// matching checker; a mismatch aborts with a nonzero exit so a stale claim
// can never be committed.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "tlz/algebra.hpp"
#include "tlz/deform.hpp"
#include "tlz/fixtures.hpp"
#include "tlz/io.hpp"
#include "tlz/matrix.hpp"
#include "tlz/modrep.hpp"
#include "tlz/operators.hpp"

using namespace tlz;

namespace {

int failures = 0;

void emit(const std::string& dir, const std::string& name, AlgebraFile file,
          const std::string& checker, const std::string& inputs, bool expect_pass,
          bool actual_pass) {
  if (actual_pass != expect_pass) {
    std::cerr << "claim mismatch for " << name << ": expected "
              << (expect_pass ? "pass" : "fail") << ", checker says "
              << (actual_pass ? "pass" : "fail") << "\n";
    ++failures;
    return;
  }
  file.meta["name"] = name;
  file.meta["checker"] = checker;
  file.meta["inputs"] = inputs;
  file.meta["verdict"] = expect_pass ? "pass" : "fail";
  save_algebra_file(dir + "/" + name + ".json", file);
}

void write_raw(const std::string& dir, const std::string& name, const std::string& text) {
  std::ofstream out(dir + "/" + name, std::ios::binary);
  out << text;
}

OperatorKind kind_with(OperatorKind::Tag tag, const Scalar& weight,
                       const std::vector<Matrix>& aux) {
  OperatorKind k;
  k.tag = tag;
  k.weight = weight;
  k.aux = aux;
  return k;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: gen_fixtures <fixtures_dir> <malformed_dir>\n";
    return 2;
  }
  const std::string fix = argv[1];
  const std::string bad = argv[2];
  std::filesystem::create_directories(fix);
  std::filesystem::create_directories(bad);

  // --- binary algebras ---------------------------------------------------
  const BinaryAlgebra ab2 = abelian_binary(2);
  const BinaryAlgebra ab3 = abelian_binary(3);
  const BinaryAlgebra h2 = heisenberg2();
  const BinaryAlgebra s = sl2();
  const BinaryAlgebra sv = solvable2();
  const BinaryAlgebra nl2 = not_leibniz2();
  std::mt19937_64 rng_b(101);
  const BinaryAlgebra nilb = random_nilpotent2_binary(rng_b, 2, 2);

  emit(fix, "abelian2", make_binary_file(ab2), "leibniz", "abelian2.json", true,
       check_leibniz(ab2).pass());
  emit(fix, "abelian3", make_binary_file(ab3), "leibniz", "abelian3.json", true,
       check_leibniz(ab3).pass());
  emit(fix, "heis2", make_binary_file(h2), "leibniz", "heis2.json", true,
       check_leibniz(h2).pass());
  emit(fix, "sl2", make_binary_file(s), "leibniz", "sl2.json", true, check_leibniz(s).pass());
  emit(fix, "solv2", make_binary_file(sv), "leibniz", "solv2.json", true,
       check_leibniz(sv).pass());
  emit(fix, "nilp2_binary", make_binary_file(nilb), "leibniz", "nilp2_binary.json", true,
       check_leibniz(nilb).pass());
  emit(fix, "not_leibniz2", make_binary_file(nl2), "leibniz", "not_leibniz2.json", false,
       check_leibniz(nl2).pass());

  // --- ternary algebras --------------------------------------------------
  const TernaryAlgebra abt2 = abelian_ternary(2);
  const TernaryAlgebra abt3 = abelian_ternary(3);
  const TernaryAlgebra st = ternary_from_binary(s);
  const TernaryAlgebra svt = ternary_from_binary(sv);
  const TernaryAlgebra nt1 = not_ternary_leibniz1();
  std::mt19937_64 rng_t(202);
  const TernaryAlgebra nilt = random_nilpotent2_ternary(rng_t, 2, 2);

  emit(fix, "abelian2_ternary", make_ternary_file(abt2), "ternary-leibniz",
       "abelian2_ternary.json", true, check_ternary_leibniz(abt2).pass());
  emit(fix, "abelian3_ternary", make_ternary_file(abt3), "ternary-leibniz",
       "abelian3_ternary.json", true, check_ternary_leibniz(abt3).pass());
  emit(fix, "sl2_assoc_ternary", make_ternary_file(st), "ternary-leibniz",
       "sl2_assoc_ternary.json", true, check_ternary_leibniz(st).pass());
  emit(fix, "solv2_assoc_ternary", make_ternary_file(svt), "ternary-leibniz",
       "solv2_assoc_ternary.json", true, check_ternary_leibniz(svt).pass());
  emit(fix, "nilp2_ternary", make_ternary_file(nilt), "ternary-leibniz", "nilp2_ternary.json",
       true, check_ternary_leibniz(nilt).pass());
  emit(fix, "not_ternary1", make_ternary_file(nt1), "ternary-leibniz", "not_ternary1.json", false,
       check_ternary_leibniz(nt1).pass());

  // --- commutative associative -------------------------------------------
  const CommAssocAlgebra dn = dual_numbers();
  emit(fix, "dual_numbers", make_comm_assoc_file(dn), "comm-assoc", "dual_numbers.json", true,
       check_comm_assoc(dn.p()).pass());

  // --- operators -----------------------------------------------------------
  using Tag = OperatorKind::Tag;
  const Matrix id2 = Matrix::identity(2);
  const Matrix id3 = Matrix::identity(3);
  const Matrix two_id3 = Matrix::scalar(3, Scalar(2));
  Matrix e10_2(2, 2);
  e10_2.at(1, 0) = 1;
  Matrix e10_3(3, 3);
  e10_3.at(1, 0) = 1;
  Matrix diag12(2, 2);
  diag12.at(0, 0) = 1;
  diag12.at(1, 1) = 2;
  const Matrix shift3 = shift_matrix(3);

  emit(fix, "op_id2", make_operator_file(id2), "centroid", "heis2.json op_id2.json", true,
       check_binary_operator(h2, kind_with(Tag::centroid, 0, {}), id2).pass());
  emit(fix, "op_id3", make_operator_file(id3), "centroid", "sl2.json op_id3.json", true,
       check_binary_operator(s, kind_with(Tag::centroid, 0, {}), id3).pass());
  emit(fix, "op_2id3", make_operator_file(two_id3), "averaging", "sl2.json op_2id3.json", true,
       check_binary_operator(s, kind_with(Tag::averaging, 0, {}), two_id3).pass());
  emit(fix, "op_e10_2", make_operator_file(e10_2), "derivation", "heis2.json op_e10_2.json", true,
       check_binary_operator(h2, kind_with(Tag::derivation, 0, {}), e10_2).pass());
  emit(fix, "op_diag12", make_operator_file(diag12), "derivation", "heis2.json op_diag12.json",
       true, check_binary_operator(h2, kind_with(Tag::derivation, 0, {}), diag12).pass());
  emit(fix, "op_e10_3", make_operator_file(e10_3, Scalar(0)), "rota-baxter",
       "sl2_assoc_ternary.json op_e10_3.json", true,
       check_ternary_operator(st, kind_with(Tag::rota_baxter, 0, {}), e10_3).pass());
  emit(fix, "op_shift3", make_operator_file(shift3), "nijenhuis",
       "abelian3_ternary.json op_shift3.json", true,
       check_ternary_operator(abt3, kind_with(Tag::nijenhuis, 0, {}), shift3).pass());

  const std::vector<Matrix> gen_aux = {Matrix::scalar(3, Scalar(2)), Matrix::scalar(3, Scalar(3)),
                                       Matrix::scalar(3, Scalar(4))};
  emit(fix, "op_gen_chain3", make_operator_file(id3, std::nullopt, gen_aux),
       "generalized-derivation", "sl2.json op_gen_chain3.json", true,
       check_binary_operator(s, kind_with(Tag::generalized_derivation, 0, gen_aux), id3).pass());
  const std::vector<Matrix> quasi_aux = {Matrix::scalar(3, Scalar(2)),
                                         Matrix::scalar(3, Scalar(4))};
  emit(fix, "op_quasi_chain3", make_operator_file(id3, std::nullopt, quasi_aux),
       "quasiderivation", "sl2.json op_quasi_chain3.json", true,
       check_binary_operator(s, kind_with(Tag::quasiderivation, 0, quasi_aux), id3).pass());

  // --- bimodules and representations ---------------------------------------
  const BinaryBimodule h2_reg = regular_bimodule(h2);
  const TernaryBimodule st_reg = regular_bimodule(st);
  const TernaryBimodule nilt_reg = regular_bimodule(nilt);
  const Representation st_adj = adjoint_representation(st);
  std::mt19937_64 rng_r(303);
  const Representation shift_rep = shift_representation(rng_r, 2, 2);

  emit(fix, "heis2_regular_bimodule", make_bimodule_file(h2_reg), "bimodule",
       "heis2.json heis2_regular_bimodule.json", true, check_binary_bimodule(h2, h2_reg).pass());
  emit(fix, "sl2t_regular_bimodule", make_bimodule_file(st_reg), "bimodule",
       "sl2_assoc_ternary.json sl2t_regular_bimodule.json", true,
       check_ternary_bimodule(st, st_reg).pass());
  emit(fix, "nilp2_regular_bimodule", make_bimodule_file(nilt_reg), "bimodule",
       "nilp2_ternary.json nilp2_regular_bimodule.json", true,
       check_ternary_bimodule(nilt, nilt_reg).pass());
  emit(fix, "sl2t_adjoint_rep", make_representation_file(st_adj), "representation",
       "sl2_assoc_ternary.json sl2t_adjoint_rep.json", true,
       check_representation(st, st_adj).pass());
  emit(fix, "shift_rep_2_2", make_representation_file(shift_rep), "representation",
       "abelian2_ternary.json shift_rep_2_2.json", true,
       check_representation(abt2, shift_rep).pass());

  // --- cocycles -------------------------------------------------------------
  const Cocycle st_cocycle(st.t());
  const Cocycle nilt_cocycle(nilt.t());
  emit(fix, "sl2t_bracket_cocycle", make_cocycle_file(st_cocycle), "cocycle",
       "sl2_assoc_ternary.json sl2t_regular_bimodule.json sl2t_bracket_cocycle.json", true,
       check_cocycle(st, st_reg, st_cocycle).pass());
  emit(fix, "nilp2_bracket_cocycle", make_cocycle_file(nilt_cocycle), "cocycle",
       "nilp2_ternary.json nilp2_regular_bimodule.json nilp2_bracket_cocycle.json", true,
       check_cocycle(nilt, nilt_reg, nilt_cocycle).pass());

  // --- deformations ----------------------------------------------------------
  const PairData scalar_pair(Matrix::scalar(3, Scalar(2)), Matrix::scalar(3, Scalar(2)));
  const DeformationData good = deformation_from_pair(st, st_adj, scalar_pair);
  emit(fix, "sl2t_pair_deformation", make_deformation_file(good, 3, 3), "deformation-equations",
       "sl2_assoc_ternary.json sl2t_adjoint_rep.json sl2t_pair_deformation.json", true,
       check_deformation_equations(st, st_adj, good).pass());

  std::mt19937_64 rng_d(404);
  const DeformationData noisy = random_deformation(rng_d, 2, 2);
  emit(fix, "bad_deformation", make_deformation_file(noisy, 2, 2), "deformation-equations",
       "abelian2_ternary.json shift_rep_2_2.json bad_deformation.json", false,
       check_deformation_equations(abt2, shift_rep, noisy).pass());

  // --- malformed corpus -------------------------------------------------------
  write_raw(bad, "bad_json.json", "{ this is not json\n");
  write_raw(bad, "not_object.json", "[1, 2, 3]\n");
  write_raw(bad, "unknown_kind.json",
            "{\"kind\": \"weird\", \"dims\": [2], \"entries\": []}\n");
  write_raw(bad, "missing_dims.json", "{\"kind\": \"binary\", \"entries\": []}\n");
  write_raw(bad, "dims_wrong_len.json", "{\"kind\": \"binary\", \"dims\": [2, 2], \"entries\": []}\n");
  write_raw(bad, "neg_dim.json", "{\"kind\": \"binary\", \"dims\": [-1], \"entries\": []}\n");
  write_raw(bad, "zero_dim.json", "{\"kind\": \"binary\", \"dims\": [0], \"entries\": []}\n");
  write_raw(bad, "unknown_key.json",
            "{\"kind\": \"binary\", \"dims\": [2], \"entries\": [], \"extra\": 1}\n");
  write_raw(bad, "weight_on_binary.json",
            "{\"kind\": \"binary\", \"dims\": [2], \"entries\": [], \"weight\": \"1\"}\n");
  write_raw(bad, "dup_index.json",
            "{\"kind\": \"binary\", \"dims\": [2], \"entries\": ["
            "{\"idx\": [0, 0, 1], \"val\": \"1\"}, {\"idx\": [0, 0, 1], \"val\": \"2\"}]}\n");
  write_raw(bad, "out_of_range.json",
            "{\"kind\": \"binary\", \"dims\": [2], \"entries\": ["
            "{\"idx\": [0, 0, 5], \"val\": \"1\"}]}\n");
  write_raw(bad, "idx_wrong_len.json",
            "{\"kind\": \"binary\", \"dims\": [2], \"entries\": ["
            "{\"idx\": [0, 0], \"val\": \"1\"}]}\n");
  write_raw(bad, "entry_extra_key.json",
            "{\"kind\": \"binary\", \"dims\": [2], \"entries\": ["
            "{\"idx\": [0, 0, 1], \"val\": \"1\", \"zap\": true}]}\n");
  write_raw(bad, "val_not_string.json",
            "{\"kind\": \"binary\", \"dims\": [2], \"entries\": ["
            "{\"idx\": [0, 0, 1], \"val\": 1}]}\n");
  write_raw(bad, "unreduced_fraction.json",
            "{\"kind\": \"binary\", \"dims\": [2], \"entries\": ["
            "{\"idx\": [0, 0, 1], \"val\": \"2/4\"}]}\n");
  write_raw(bad, "bad_fraction.json",
            "{\"kind\": \"binary\", \"dims\": [2], \"entries\": ["
            "{\"idx\": [0, 0, 1], \"val\": \"1/-2\"}]}\n");
  write_raw(bad, "zero_denominator.json",
            "{\"kind\": \"binary\", \"dims\": [2], \"entries\": ["
            "{\"idx\": [0, 0, 1], \"val\": \"1/0\"}]}\n");
  write_raw(bad, "parts_missing.json",
            "{\"kind\": \"representation\", \"dims\": [2, 2], \"parts\": {"
            "\"lambda\": [], \"mu\": []}}\n");
  write_raw(bad, "parts_extra.json",
            "{\"kind\": \"representation\", \"dims\": [2, 2], \"parts\": {"
            "\"lambda\": [], \"mu\": [], \"rho\": [], \"sigma\": []}}\n");
  write_raw(bad, "meta_not_string.json",
            "{\"kind\": \"binary\", \"dims\": [2], \"entries\": [], \"meta\": {\"name\": 3}}\n");

  if (failures != 0) {
    std::cerr << failures << " fixture claim(s) failed verification\n";
    return 1;
  }
  std::cout << "fixture corpus written to " << fix << " and " << bad << "\n";
  return 0;
}
