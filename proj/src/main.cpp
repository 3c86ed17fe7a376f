#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

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

namespace {

using namespace tlz;

struct Options {
  std::optional<Scalar> weight;
  Scalar k1 = Scalar(1);
  Scalar k2 = Scalar(1);
  int variant = 1;
  bool strict_averaging = false;
  std::string out;
};

/// A checker result together with the verdict driving the exit code. Most
/// checks pass exactly when the report does; implication-style checks
/// (transfer, case analyses) pass when the implication holds even if a
/// premise fails.
struct Outcome {
  CheckReport report;
  bool pass = false;
};

std::vector<AlgebraFile> load_all(const std::vector<std::string>& paths) {
  std::vector<AlgebraFile> files;
  files.reserve(paths.size());
  for (const auto& p : paths) files.push_back(load_algebra_file(p));
  return files;
}

void expect_count(const std::vector<AlgebraFile>& files, std::size_t want,
                  const std::string& what) {
  if (files.size() != want) {
    throw ParseError(what + " needs " + std::to_string(want) + " input file(s), got " +
                     std::to_string(files.size()));
  }
}

void expect_kind(const AlgebraFile& file, const std::string& kind, const std::string& what) {
  if (file.kind != kind) {
    throw ParseError(what + " must have kind \"" + kind + "\", got \"" + file.kind + "\"");
  }
}

Scalar resolve_weight(const Options& opt, const AlgebraFile& op_file) {
  if (opt.weight.has_value()) return *opt.weight;
  if (op_file.weight.has_value()) return *op_file.weight;
  return Scalar(0);
}

OperatorKind make_operator_kind(const std::string& name, const Options& opt,
                                const AlgebraFile& op_file) {
  OperatorKind kind;
  kind.tag = OperatorKind::tag_from_name(name);
  kind.weight = resolve_weight(opt, op_file);
  kind.aux = operator_aux(op_file);
  return kind;
}

bool is_operator_check(const std::string& kind) {
  return kind == "derivation" || kind == "rota-baxter" || kind == "centroid" ||
         kind == "reynolds" || kind == "averaging" || kind == "nijenhuis" ||
         kind == "central-derivation" || kind == "generalized-derivation" ||
         kind == "quasiderivation";
}

Outcome run_check(const std::string& kind, const std::vector<AlgebraFile>& files,
                  const Options& opt) {
  Outcome out;
  if (kind == "leibniz") {
    expect_count(files, 1, "leibniz");
    out.report = check_leibniz(as_binary(files[0]));
  } else if (kind == "ternary-leibniz") {
    expect_count(files, 1, "ternary-leibniz");
    out.report = check_ternary_leibniz(as_ternary(files[0]));
  } else if (kind == "comm-assoc") {
    expect_count(files, 1, "comm-assoc");
    expect_kind(files[0], "comm_assoc", "the input");
    out.report = check_comm_assoc(files[0].main);
  } else if (kind == "compatible-leibniz") {
    expect_count(files, 2, "compatible-leibniz");
    out.report = check_compatible_leibniz(as_binary(files[0]), as_binary(files[1]));
  } else if (kind == "compatible-ternary") {
    expect_count(files, 2, "compatible-ternary");
    out.report = check_compatible_ternary(as_ternary(files[0]), as_ternary(files[1]));
  } else if (is_operator_check(kind)) {
    expect_count(files, 2, kind);
    OperatorKind op_kind = make_operator_kind(kind, opt, files[1]);
    Matrix op = as_operator_matrix(files[1]);
    if (files[0].kind == "binary") {
      out.report = check_binary_operator(as_binary(files[0]), op_kind, op);
    } else if (files[0].kind == "ternary") {
      out.report = check_ternary_operator(as_ternary(files[0]), op_kind, op);
    } else {
      throw ParseError("operator checks need a binary or ternary algebra file first");
    }
  } else if (kind.rfind("transfer-", 0) == 0) {
    expect_count(files, 2, kind);
    OperatorKind op_kind = make_operator_kind(kind.substr(9), opt, files[1]);
    TransferReport tr =
        check_operator_transfer(as_binary(files[0]), op_kind, as_operator_matrix(files[1]));
    out.report = tr.combined();
    out.pass = tr.implication_holds();
    return out;
  } else if (kind == "compatible-averaging") {
    expect_count(files, 3, "compatible-averaging");
    out.report = check_compatible_averaging(as_binary(files[0]), as_operator_matrix(files[1]),
                                            as_operator_matrix(files[2]), opt.strict_averaging);
  } else if (kind == "inverse-rb-derivation") {
    expect_count(files, 2, "inverse-rb-derivation");
    out.report = check_inverse_rb_derivation(as_ternary(files[0]), as_operator_matrix(files[1]),
                                             resolve_weight(opt, files[1]));
  } else if (kind == "nijenhuis-rb") {
    expect_count(files, 2, "nijenhuis-rb");
    NijenhuisRbReport nr =
        check_nijenhuis_rb_equivalence(as_ternary(files[0]), as_operator_matrix(files[1]));
    out.report = nr.combined();
    out.pass = nr.implication_holds();
    return out;
  } else if (kind == "bimodule") {
    expect_count(files, 2, "bimodule");
    if (files[0].kind == "binary") {
      out.report = check_binary_bimodule(as_binary(files[0]), as_binary_bimodule(files[1]));
    } else if (files[0].kind == "ternary") {
      out.report = check_ternary_bimodule(as_ternary(files[0]), as_ternary_bimodule(files[1]));
    } else {
      throw ParseError("bimodule checks need a binary or ternary algebra file first");
    }
  } else if (kind == "representation") {
    expect_count(files, 2, "representation");
    out.report = check_representation(as_ternary(files[0]), as_representation(files[1]));
  } else if (kind == "compatible-bimodule") {
    expect_count(files, 4, "compatible-bimodule");
    out.report =
        check_compatible_bimodule(as_ternary(files[0]), as_ternary(files[1]),
                                  as_ternary_bimodule(files[2]), as_ternary_bimodule(files[3]));
  } else if (kind == "compatible-representations") {
    expect_count(files, 3, "compatible-representations");
    out.report = check_compatible_representations(as_ternary(files[0]),
                                                  as_representation(files[1]),
                                                  as_representation(files[2]));
  } else if (kind == "rb-bimodule") {
    expect_count(files, 4, "rb-bimodule");
    if (files[0].kind == "binary") {
      out.report = check_rb_bimodule(as_binary(files[0]), as_operator_matrix(files[2]),
                                     as_binary_bimodule(files[1]), as_operator_matrix(files[3]));
    } else if (files[0].kind == "ternary") {
      out.report = check_rb_bimodule(as_ternary(files[0]), as_operator_matrix(files[2]),
                                     as_ternary_bimodule(files[1]), as_operator_matrix(files[3]));
    } else {
      throw ParseError("rb-bimodule checks need a binary or ternary algebra file first");
    }
  } else if (kind == "cocycle") {
    expect_count(files, 3, "cocycle");
    out.report =
        check_cocycle(as_ternary(files[0]), as_ternary_bimodule(files[1]), as_cocycle(files[2]));
  } else if (kind == "o-operator") {
    expect_count(files, 3, "o-operator");
    OOperatorData data(as_operator_matrix(files[2]), as_representation(files[1]));
    out.report = check_o_operator(data, as_ternary(files[0]));
  } else if (kind == "o-morphism") {
    expect_count(files, 7, "o-morphism");
    OOperatorData from(as_operator_matrix(files[2]), as_representation(files[1]));
    OOperatorData to(as_operator_matrix(files[4]), as_representation(files[3]));
    out.report = check_o_morphism(as_operator_matrix(files[5]), as_operator_matrix(files[6]),
                                  from, to, as_ternary(files[0]));
  } else if (kind == "deformation-equations") {
    expect_count(files, 3, "deformation-equations");
    out.report = check_deformation_equations(as_ternary(files[0]), as_representation(files[1]),
                                             as_deformation(files[2]));
  } else if (kind == "deformation-expansion") {
    expect_count(files, 3, "deformation-expansion");
    out.report = check_deformation_by_expansion(as_ternary(files[0]), as_representation(files[1]),
                                                as_deformation(files[2]));
  } else if (kind == "nijenhuis-pair") {
    expect_count(files, 4, "nijenhuis-pair");
    out.report = check_nijenhuis_pair(as_ternary(files[0]), as_representation(files[1]),
                                      PairData(as_operator_matrix(files[2]),
                                               as_operator_matrix(files[3])));
  } else if (kind == "dual-nijenhuis-pair") {
    expect_count(files, 4, "dual-nijenhuis-pair");
    out.report = check_dual_nijenhuis_pair(as_ternary(files[0]), as_representation(files[1]),
                                           PairData(as_operator_matrix(files[2]),
                                                    as_operator_matrix(files[3])));
  } else if (kind == "pair-sum-nijenhuis") {
    expect_count(files, 4, "pair-sum-nijenhuis");
    out.report = pair_sum_nijenhuis(as_ternary(files[0]), as_representation(files[1]),
                                    PairData(as_operator_matrix(files[2]),
                                             as_operator_matrix(files[3])));
    out.pass = out.report.flags().at("implication-holds");
    return out;
  } else if (kind == "equivalence") {
    expect_count(files, 6, "equivalence");
    out.report = check_equivalence(as_ternary(files[0]), as_representation(files[1]),
                                   as_deformation(files[2]), as_deformation(files[3]),
                                   PairData(as_operator_matrix(files[4]),
                                            as_operator_matrix(files[5])));
  } else if (kind == "linear-deformation") {
    expect_count(files, 3, "linear-deformation");
    out.report = linear_deformation_check(as_ternary(files[0]), as_representation(files[1]),
                                          as_deformation(files[2]));
  } else {
    throw ParseError("unknown check kind \"" + kind + "\"");
  }
  out.pass = out.report.pass();
  return out;
}

AlgebraFile run_construct(const std::string& recipe, const std::vector<AlgebraFile>& files,
                          const Options& opt) {
  if (recipe == "ternary-from-binary") {
    expect_count(files, 1, recipe);
    return make_ternary_file(ternary_from_binary(as_binary(files[0])));
  }
  if (recipe == "tensor-square") {
    expect_count(files, 1, recipe);
    return make_binary_file(tensor_square_leibniz(as_ternary(files[0])));
  }
  if (recipe == "direct-sum") {
    expect_count(files, 2, recipe);
    if (files[0].kind == "ternary" && files[1].kind == "ternary") {
      return make_ternary_file(direct_sum(as_ternary(files[0]), as_ternary(files[1])));
    }
    if (files[0].kind == "bimodule" && files[1].kind == "bimodule") {
      return make_bimodule_file(
          direct_sum(as_ternary_bimodule(files[0]), as_ternary_bimodule(files[1])));
    }
    throw ParseError("direct-sum needs two ternary algebras or two ternary bimodules");
  }
  if (recipe == "scalar-extension") {
    expect_count(files, 2, recipe);
    return make_ternary_file(scalar_extension(as_comm_assoc(files[0]), as_ternary(files[1])));
  }
  if (recipe == "averaging-bracket") {
    expect_count(files, 2, recipe);
    if (files[0].kind == "binary") {
      return make_binary_file(
          averaging_left_bracket(as_binary(files[0]), as_operator_matrix(files[1])));
    }
    return make_ternary_file(averaging_bracket(as_ternary(files[0]), as_operator_matrix(files[1])));
  }
  if (recipe == "nijenhuis-bracket") {
    expect_count(files, 2, recipe);
    return make_binary_file(
        nijenhuis_sum_bracket(as_binary(files[0]), as_operator_matrix(files[1])));
  }
  if (recipe == "rb-bracket") {
    expect_count(files, 2, recipe);
    Scalar weight = resolve_weight(opt, files[1]);
    if (files[0].kind == "binary") {
      return make_binary_file(
          rota_baxter_bracket(as_binary(files[0]), as_operator_matrix(files[1]), weight));
    }
    if (!weight.is_zero()) {
      throw UnsupportedError("the ternary descendent bracket is defined for weight 0 only");
    }
    return make_ternary_file(
        rota_baxter0_bracket(as_ternary(files[0]), as_operator_matrix(files[1])));
  }
  if (recipe == "centroid-bracket") {
    expect_count(files, 2, recipe);
    return make_ternary_file(centroid_bracket_family(as_ternary(files[0]),
                                                     as_operator_matrix(files[1]), opt.variant));
  }
  if (recipe == "semidirect") {
    expect_count(files, 2, recipe);
    return make_ternary_file(semidirect(as_ternary(files[0]), as_ternary_bimodule(files[1])));
  }
  if (recipe == "semidirect-cocycle") {
    expect_count(files, 3, recipe);
    return make_ternary_file(semidirect(as_ternary(files[0]), as_ternary_bimodule(files[1]),
                                        as_cocycle(files[2])));
  }
  if (recipe == "o-bracket") {
    expect_count(files, 2, recipe);
    OOperatorData data(as_operator_matrix(files[1]), as_representation(files[0]));
    return make_ternary_file(o_operator_bracket(data));
  }
  if (recipe == "induced-bimodule") {
    expect_count(files, 4, recipe);
    if (files[0].kind == "binary") {
      return make_bimodule_file(induced_bimodule(as_binary(files[0]), as_operator_matrix(files[2]),
                                                 as_binary_bimodule(files[1]),
                                                 as_operator_matrix(files[3])));
    }
    if (files[0].kind == "ternary") {
      return make_bimodule_file(induced_bimodule(as_ternary(files[0]), as_operator_matrix(files[2]),
                                                 as_ternary_bimodule(files[1]),
                                                 as_operator_matrix(files[3])));
    }
    throw ParseError("induced-bimodule needs a binary or ternary algebra file first");
  }
  if (recipe == "dual-rep") {
    expect_count(files, 1, recipe);
    return make_representation_file(dual_representation(as_representation(files[0])));
  }
  if (recipe == "deformation-from-pair") {
    expect_count(files, 4, recipe);
    TernaryAlgebra alg = as_ternary(files[0]);
    Representation rep = as_representation(files[1]);
    PairData pair(as_operator_matrix(files[2]), as_operator_matrix(files[3]));
    return make_deformation_file(deformation_from_pair(alg, rep, pair), alg.dim(),
                                 rep.module_dim());
  }
  if (recipe == "pencil") {
    expect_count(files, 2, recipe);
    if (files[0].kind == "binary" && files[1].kind == "binary") {
      return make_binary_file(pencil(as_binary(files[0]), as_binary(files[1]), opt.k1, opt.k2));
    }
    if (files[0].kind == "ternary" && files[1].kind == "ternary") {
      return make_ternary_file(pencil(as_ternary(files[0]), as_ternary(files[1]), opt.k1, opt.k2));
    }
    throw ParseError("pencil needs two algebra files of the same arity");
  }
  throw ParseError("unknown recipe \"" + recipe + "\"");
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << text;
  if (!out) throw ParseError("write failed: " + path);
}

int cmd_check(const std::string& kind, const std::vector<std::string>& paths,
              const Options& opt) {
  auto start = std::chrono::steady_clock::now();
  std::vector<AlgebraFile> files = load_all(paths);
  Outcome outcome = run_check(kind, files, opt);
  auto stop = std::chrono::steady_clock::now();
  nlohmann::ordered_json doc = report_to_json(outcome.report);
  doc["verdict"] = outcome.pass ? "pass" : "fail";
  doc["timing_ms"] = std::chrono::duration<double, std::milli>(stop - start).count();
  write_text(opt.out, doc.dump(2) + "\n");
  return outcome.pass ? 0 : 1;
}

int cmd_construct(const std::string& recipe, const std::vector<std::string>& paths,
                  const Options& opt) {
  std::vector<AlgebraFile> files = load_all(paths);
  AlgebraFile result = run_construct(recipe, files, opt);
  write_text(opt.out, serialize_algebra_file(result));
  return 0;
}

int cmd_solve(const std::string& kind, const std::vector<std::string>& paths,
              const Options& opt) {
  auto start = std::chrono::steady_clock::now();
  if (paths.size() != 1) throw ParseError("solve needs exactly one algebra file");
  AlgebraFile file = load_all(paths)[0];
  OperatorKind op_kind;
  op_kind.tag = OperatorKind::tag_from_name(kind);
  if (opt.weight.has_value()) op_kind.weight = *opt.weight;

  std::vector<Matrix> basis;
  bool outputs_pass = true;
  if (file.kind == "binary") {
    BinaryAlgebra b = as_binary(file);
    basis = solve_operator_space(b, op_kind);
    for (const auto& m : basis) outputs_pass = outputs_pass && check_binary_operator(b, op_kind, m).pass();
  } else if (file.kind == "ternary") {
    TernaryAlgebra t = as_ternary(file);
    basis = solve_operator_space(t, op_kind);
    for (const auto& m : basis) outputs_pass = outputs_pass && check_ternary_operator(t, op_kind, m).pass();
  } else {
    throw ParseError("solve needs a binary or ternary algebra file");
  }

  std::string prefix = opt.out;
  if (prefix.empty()) {
    prefix = paths[0];
    if (prefix.size() > 5 && prefix.substr(prefix.size() - 5) == ".json") {
      prefix = prefix.substr(0, prefix.size() - 5);
    }
    prefix += "-" + kind;
  }
  std::vector<std::string> written;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    char suffix[32];
    std::snprintf(suffix, sizeof(suffix), "-%03zu.json", i);
    std::string path = prefix + suffix;
    save_algebra_file(path, make_operator_file(basis[i]));
    written.push_back(path);
  }
  auto stop = std::chrono::steady_clock::now();
  nlohmann::ordered_json doc;
  doc["verdict"] = outputs_pass ? "pass" : "fail";
  doc["dimension"] = basis.size();
  doc["files"] = written;
  doc["timing_ms"] = std::chrono::duration<double, std::milli>(stop - start).count();
  std::cout << doc.dump(2) + "\n";
  return outputs_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checkers, constructions, and solvers for binary and ternary "
               "Leibniz structures over the rationals"};
  app.require_subcommand(1);

  Options opt;
  std::string kind;
  std::string recipe;
  std::vector<std::string> paths;
  std::string weight_text;
  std::string k1_text;
  std::string k2_text;

  CLI::App* check = app.add_subcommand("check", "Verify an identity class on input files");
  check->add_option("--kind", kind, "Identity class to verify")->required();
  check->add_option("--weight", weight_text, "Operator weight as a fraction");
  check->add_flag("--strict-averaging", opt.strict_averaging,
                  "Also require the unbracketed compatibility identity");
  check->add_option("--out", opt.out, "Write the report here instead of standard output");
  check->add_option("files", paths, "Input files");

  CLI::App* construct = app.add_subcommand("construct", "Build a derived structure");
  construct->add_option("--recipe", recipe, "Construction to run")->required();
  construct->add_option("--weight", weight_text, "Operator weight as a fraction");
  construct->add_option("--k1", k1_text, "First pencil coefficient");
  construct->add_option("--k2", k2_text, "Second pencil coefficient");
  construct->add_option("--variant", opt.variant, "Slot count for the scaling bracket family")
      ->check(CLI::Range(1, 3));
  construct->add_option("--out", opt.out, "Write the result here instead of standard output");
  construct->add_option("files", paths, "Input files");

  CLI::App* solve = app.add_subcommand("solve", "Compute the basis of a linear operator space");
  solve->add_option("--kind", kind, "Operator class to solve for")->required();
  solve->add_option("--weight", weight_text, "Operator weight as a fraction");
  solve->add_option("--out", opt.out, "Output filename prefix");
  solve->add_option("files", paths, "Input file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!weight_text.empty()) opt.weight = Scalar::parse(weight_text);
    if (!k1_text.empty()) opt.k1 = Scalar::parse(k1_text);
    if (!k2_text.empty()) opt.k2 = Scalar::parse(k2_text);
    if (check->parsed()) return cmd_check(kind, paths, opt);
    if (construct->parsed()) return cmd_construct(recipe, paths, opt);
    if (solve->parsed()) return cmd_solve(kind, paths, opt);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
