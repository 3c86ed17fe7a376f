#define DOCTEST_CONFIG_IMPLEMENT
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "tlz/errors.hpp"
#include "tlz/io.hpp"

namespace {

std::string g_tlz;
std::string g_fixtures;
std::string g_data;

std::string fx(const std::string& name) { return g_fixtures + "/" + name; }

/// Run the command line tool and return its exit code.
int run(const std::string& args) {
  std::string cmd = g_tlz + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

/// Run the tool, capture standard output into `doc`, return the exit code.
int run_capture(const std::string& args, const std::string& sink, nlohmann::json& doc) {
  std::string cmd = g_tlz + " " + args + " > " + sink + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  std::ifstream in(sink);
  doc = nlohmann::json::parse(in, nullptr, false);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    std::string tmpl = (std::filesystem::temp_directory_path() / "tlz-cli-XXXXXX").string();
    std::vector<char> buf(tmpl.begin(), tmpl.end());
    buf.push_back('\0');
    REQUIRE(mkdtemp(buf.data()) != nullptr);
    path = buf.data();
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("check maps verdicts to exit codes") {
  CHECK(run("check --kind ternary-leibniz " + fx("sl2_assoc_ternary.json")) == 0);
  CHECK(run("check --kind leibniz " + fx("abelian3.json")) == 0);
  CHECK(run("check --kind leibniz " + fx("sl2.json")) == 0);
  CHECK(run("check --kind leibniz " + fx("not_leibniz2.json")) == 1);
  CHECK(run("check --kind ternary-leibniz " + fx("not_ternary1.json")) == 1);
  CHECK(run("check --kind comm-assoc " + fx("dual_numbers.json")) == 0);
  CHECK(run("check --kind compatible-leibniz " + fx("heis2.json") + " " + fx("heis2.json")) == 0);
  CHECK(run("check --kind compatible-ternary " + fx("sl2_assoc_ternary.json") + " " +
            fx("sl2_assoc_ternary.json")) == 0);
}

TEST_CASE("structure checks accept the bundled positive instances") {
  CHECK(run("check --kind bimodule " + fx("sl2_assoc_ternary.json") + " " +
            fx("sl2t_regular_bimodule.json")) == 0);
  CHECK(run("check --kind bimodule " + fx("heis2.json") + " " +
            fx("heis2_regular_bimodule.json")) == 0);
  CHECK(run("check --kind representation " + fx("sl2_assoc_ternary.json") + " " +
            fx("sl2t_adjoint_rep.json")) == 0);
  CHECK(run("check --kind cocycle " + fx("sl2_assoc_ternary.json") + " " +
            fx("sl2t_regular_bimodule.json") + " " + fx("sl2t_bracket_cocycle.json")) == 0);
  CHECK(run("check --kind deformation-equations " + fx("sl2_assoc_ternary.json") + " " +
            fx("sl2t_adjoint_rep.json") + " " + fx("sl2t_pair_deformation.json")) == 0);
  CHECK(run("check --kind deformation-expansion " + fx("sl2_assoc_ternary.json") + " " +
            fx("sl2t_adjoint_rep.json") + " " + fx("sl2t_pair_deformation.json")) == 0);
  CHECK(run("check --kind deformation-equations " + fx("abelian2_ternary.json") + " " +
            fx("shift_rep_2_2.json") + " " + fx("bad_deformation.json")) == 1);
  CHECK(run("check --kind o-operator " + fx("sl2_assoc_ternary.json") + " " +
            fx("sl2t_adjoint_rep.json") + " " + fx("op_e10_3.json")) == 0);
  CHECK(run("check --kind nijenhuis-pair " + fx("sl2_assoc_ternary.json") + " " +
            fx("sl2t_adjoint_rep.json") + " " + fx("op_id3.json") + " " + fx("op_id3.json")) == 0);
  CHECK(run("check --kind pair-sum-nijenhuis " + fx("sl2_assoc_ternary.json") + " " +
            fx("sl2t_adjoint_rep.json") + " " + fx("op_id3.json") + " " + fx("op_id3.json")) == 0);
}

TEST_CASE("operator checks accept the bundled positive instances") {
  CHECK(run("check --kind derivation " + fx("heis2.json") + " " + fx("op_e10_2.json")) == 0);
  CHECK(run("check --kind derivation " + fx("heis2.json") + " " + fx("op_diag12.json")) == 0);
  CHECK(run("check --kind rota-baxter " + fx("sl2_assoc_ternary.json") + " " +
            fx("op_e10_3.json")) == 0);
  CHECK(run("check --kind centroid " + fx("heis2.json") + " " + fx("op_id2.json")) == 0);
  CHECK(run("check --kind centroid " + fx("sl2.json") + " " + fx("op_id3.json")) == 0);
  CHECK(run("check --kind averaging " + fx("sl2.json") + " " + fx("op_2id3.json")) == 0);
  CHECK(run("check --kind nijenhuis " + fx("abelian3_ternary.json") + " " +
            fx("op_shift3.json")) == 0);
  CHECK(run("check --kind generalized-derivation " + fx("sl2.json") + " " +
            fx("op_gen_chain3.json")) == 0);
  CHECK(run("check --kind quasiderivation " + fx("sl2.json") + " " +
            fx("op_quasi_chain3.json")) == 0);
  CHECK(run("check --kind compatible-averaging --strict-averaging " + fx("sl2.json") + " " +
            fx("op_2id3.json") + " " + fx("op_2id3.json")) == 0);
  CHECK(run("check --kind nijenhuis-rb " + fx("sl2_assoc_ternary.json") + " " +
            fx("op_e10_3.json")) == 0);
  CHECK(run("check --kind transfer-derivation " + fx("heis2.json") + " " +
            fx("op_e10_2.json")) == 0);
  CHECK(run("check --kind inverse-rb-derivation --weight 1 " + fx("abelian2_ternary.json") + " " +
            fx("op_id2.json")) == 0);
}

TEST_CASE("usage errors and invalid inputs exit with code two") {
  CHECK(run("") == 2);
  CHECK(run("check " + fx("heis2.json")) == 2);
  CHECK(run("check --kind frobenius " + fx("heis2.json")) == 2);
  CHECK(run("check --kind leibniz " + fx("no_such_file.json")) == 2);
  CHECK(run("check --kind leibniz " + fx("heis2.json") + " " + fx("heis2.json")) == 2);
  CHECK(run("check --kind comm-assoc " + fx("heis2.json")) == 2);
  CHECK(run("check --kind leibniz " + fx("dual_numbers.json")) == 2);
  CHECK(run("check --kind leibniz " + fx("sl2_assoc_ternary.json")) == 2);
  CHECK(run("check --kind inverse-rb-derivation --weight 1 " + fx("sl2_assoc_ternary.json") +
            " " + fx("op_e10_3.json")) == 2);
  CHECK(run("construct --recipe no-such-recipe " + fx("heis2.json")) == 2);
  CHECK(run("construct --recipe pencil " + fx("heis2.json") + " " +
            fx("sl2_assoc_ternary.json")) == 2);
}

TEST_CASE("every malformed document is rejected with exit code two") {
  int seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(g_data + "/malformed")) {
    if (entry.path().extension() != ".json") continue;
    CAPTURE(entry.path().string());
    CHECK(run("check --kind leibniz " + entry.path().string()) == 2);
    CHECK_THROWS_AS(tlz::load_algebra_file(entry.path().string()), tlz::ParseError);
    ++seen;
  }
  CHECK(seen >= 15);
}

TEST_CASE("reports land in the requested file with verdict and timing") {
  TempDir tmp;
  nlohmann::json unused;
  CHECK(run("check --kind leibniz " + fx("sl2.json") + " --out " + tmp.file("report.json")) == 0);
  nlohmann::json doc = nlohmann::json::parse(slurp(tmp.file("report.json")));
  CHECK(doc.at("verdict") == "pass");
  bool found_leibniz = false;
  for (const auto& row : doc.at("identities")) {
    if (row.at("name") == "leibniz") found_leibniz = row.at("pass").get<bool>();
  }
  CHECK(found_leibniz);
  CHECK(doc.at("timing_ms").is_number());

  CHECK(run("check --kind leibniz " + fx("not_leibniz2.json") + " --out " +
            tmp.file("fail.json")) == 1);
  nlohmann::json bad = nlohmann::json::parse(slurp(tmp.file("fail.json")));
  CHECK(bad.at("verdict") == "fail");
  CHECK(bad.at("total_violations").get<long>() > 0);

  int code = run_capture("check --kind transfer-derivation " + fx("heis2.json") + " " +
                             fx("op_e10_2.json"),
                         tmp.file("transfer.out"), unused);
  CHECK(code == 0);
  nlohmann::json tr = nlohmann::json::parse(slurp(tmp.file("transfer.out")));
  CHECK(tr.at("verdict") == "pass");
  CHECK(tr.at("flags").at("transfer-implication") == true);
}

TEST_CASE("constructions produce loadable documents with the right content") {
  TempDir tmp;

  SUBCASE("the induced ternary bracket of the nilpotent algebra vanishes") {
    CHECK(run("construct --recipe ternary-from-binary " + fx("heis2.json") + " --out " +
              tmp.file("t.json")) == 0);
    tlz::AlgebraFile out = tlz::load_algebra_file(tmp.file("t.json"));
    CHECK(out.kind == "ternary");
    CHECK(out.dims == std::vector<int>{2});
    CHECK(out.main == tlz::Tensor(std::vector<int>{2, 2, 2, 2}));
  }

  SUBCASE("pencil combines brackets with the requested coefficients") {
    CHECK(run("construct --recipe pencil --k1 2 --k2 3 " + fx("heis2.json") + " " +
              fx("heis2.json") + " --out " + tmp.file("p.json")) == 0);
    tlz::Tensor expected = tlz::load_algebra_file(fx("heis2.json")).main;
    for (auto& v : expected.data()) v = v * tlz::Scalar(5);
    CHECK(tlz::load_algebra_file(tmp.file("p.json")).main == expected);
  }

  SUBCASE("semidirect products pass the ternary checker") {
    CHECK(run("construct --recipe semidirect " + fx("sl2_assoc_ternary.json") + " " +
              fx("sl2t_regular_bimodule.json") + " --out " + tmp.file("sd.json")) == 0);
    CHECK(tlz::load_algebra_file(tmp.file("sd.json")).dims == std::vector<int>{6});
    CHECK(run("check --kind ternary-leibniz " + tmp.file("sd.json")) == 0);

    CHECK(run("construct --recipe semidirect-cocycle " + fx("sl2_assoc_ternary.json") + " " +
              fx("sl2t_regular_bimodule.json") + " " + fx("sl2t_bracket_cocycle.json") +
              " --out " + tmp.file("sc.json")) == 0);
    CHECK(run("check --kind ternary-leibniz " + tmp.file("sc.json")) == 0);
    CHECK(tlz::load_algebra_file(tmp.file("sc.json")).main !=
          tlz::load_algebra_file(tmp.file("sd.json")).main);
  }

  SUBCASE("descendent brackets from the weighted operator and its module route agree") {
    CHECK(run("construct --recipe rb-bracket " + fx("sl2_assoc_ternary.json") + " " +
              fx("op_e10_3.json") + " --out " + tmp.file("rb.json")) == 0);
    CHECK(run("check --kind ternary-leibniz " + tmp.file("rb.json")) == 0);

    CHECK(run("construct --recipe o-bracket " + fx("sl2t_adjoint_rep.json") + " " +
              fx("op_e10_3.json") + " --out " + tmp.file("ob.json")) == 0);
    CHECK(tlz::load_algebra_file(tmp.file("ob.json")).main ==
          tlz::load_algebra_file(tmp.file("rb.json")).main);

    CHECK(run("construct --recipe rb-bracket --weight 1 " + fx("sl2_assoc_ternary.json") + " " +
              fx("op_e10_3.json")) == 2);
    CHECK(run("construct --recipe rb-bracket --weight=-1 " + fx("sl2.json") + " " +
              fx("op_id3.json") + " --out " + tmp.file("rbb.json")) == 0);
    CHECK(run("check --kind leibniz " + tmp.file("rbb.json")) == 0);
  }

  SUBCASE("operator-twisted brackets keep their identities") {
    CHECK(run("construct --recipe nijenhuis-bracket " + fx("heis2.json") + " " +
              fx("op_e10_2.json") + " --out " + tmp.file("nb.json")) == 0);
    CHECK(tlz::load_algebra_file(tmp.file("nb.json")).main ==
          tlz::load_algebra_file(fx("heis2.json")).main);

    CHECK(run("construct --recipe averaging-bracket " + fx("sl2.json") + " " +
              fx("op_2id3.json") + " --out " + tmp.file("avb.json")) == 0);
    tlz::Tensor doubled = tlz::load_algebra_file(fx("sl2.json")).main;
    for (auto& v : doubled.data()) v = v * tlz::Scalar(2);
    CHECK(tlz::load_algebra_file(tmp.file("avb.json")).main == doubled);
    CHECK(run("check --kind leibniz " + tmp.file("avb.json")) == 0);

    CHECK(run("construct --recipe centroid-bracket --variant 1 " + fx("sl2_assoc_ternary.json") +
              " " + fx("op_id3.json") + " --out " + tmp.file("cb.json")) == 0);
    CHECK(run("check --kind ternary-leibniz " + tmp.file("cb.json")) == 0);
    CHECK(run("construct --recipe centroid-bracket --variant 4 " + fx("sl2_assoc_ternary.json") +
              " " + fx("op_id3.json")) == 2);
  }

  SUBCASE("sums and extensions stay within the class") {
    CHECK(run("construct --recipe direct-sum " + fx("sl2_assoc_ternary.json") + " " +
              fx("abelian2_ternary.json") + " --out " + tmp.file("ds.json")) == 0);
    CHECK(tlz::load_algebra_file(tmp.file("ds.json")).dims == std::vector<int>{5});
    CHECK(run("check --kind ternary-leibniz " + tmp.file("ds.json")) == 0);

    CHECK(run("construct --recipe scalar-extension " + fx("dual_numbers.json") + " " +
              fx("sl2_assoc_ternary.json") + " --out " + tmp.file("se.json")) == 0);
    CHECK(tlz::load_algebra_file(tmp.file("se.json")).dims == std::vector<int>{6});
    CHECK(run("check --kind ternary-leibniz " + tmp.file("se.json")) == 0);

    CHECK(run("construct --recipe tensor-square " + fx("sl2_assoc_ternary.json") + " --out " +
              tmp.file("ts.json")) == 0);
    CHECK(tlz::load_algebra_file(tmp.file("ts.json")).dims == std::vector<int>{9});
    CHECK(run("check --kind leibniz " + tmp.file("ts.json")) == 0);
  }

  SUBCASE("pair machinery round-trips through files") {
    CHECK(run("construct --recipe dual-rep " + fx("sl2t_adjoint_rep.json") + " --out " +
              tmp.file("d1.json")) == 0);
    CHECK(run("construct --recipe dual-rep " + tmp.file("d1.json") + " --out " +
              tmp.file("d2.json")) == 0);
    CHECK(tlz::load_algebra_file(tmp.file("d2.json")).parts ==
          tlz::load_algebra_file(fx("sl2t_adjoint_rep.json")).parts);
    // Over a zero bracket the dual actions do satisfy the module equations.
    CHECK(run("construct --recipe dual-rep " + fx("shift_rep_2_2.json") + " --out " +
              tmp.file("ds.json")) == 0);
    CHECK(run("check --kind representation " + fx("abelian2_ternary.json") + " " +
              tmp.file("ds.json")) == 0);

    CHECK(run("construct --recipe deformation-from-pair " + fx("sl2_assoc_ternary.json") + " " +
              fx("sl2t_adjoint_rep.json") + " " + fx("op_id3.json") + " " + fx("op_id3.json") +
              " --out " + tmp.file("dp.json")) == 0);
    CHECK(run("check --kind deformation-equations " + fx("sl2_assoc_ternary.json") + " " +
              fx("sl2t_adjoint_rep.json") + " " + tmp.file("dp.json")) == 0);
    CHECK(run("check --kind deformation-expansion " + fx("sl2_assoc_ternary.json") + " " +
              fx("sl2t_adjoint_rep.json") + " " + tmp.file("dp.json")) == 0);
  }

  SUBCASE("weighted operator pairs induce a module over the descendent bracket") {
    CHECK(run("check --kind rb-bimodule " + fx("sl2_assoc_ternary.json") + " " +
              fx("sl2t_regular_bimodule.json") + " " + fx("op_e10_3.json") + " " +
              fx("op_e10_3.json")) == 0);
    CHECK(run("construct --recipe induced-bimodule " + fx("sl2_assoc_ternary.json") + " " +
              fx("sl2t_regular_bimodule.json") + " " + fx("op_e10_3.json") + " " +
              fx("op_e10_3.json") + " --out " + tmp.file("ib.json")) == 0);
    CHECK(run("construct --recipe rb-bracket " + fx("sl2_assoc_ternary.json") + " " +
              fx("op_e10_3.json") + " --out " + tmp.file("desc.json")) == 0);
    CHECK(run("check --kind bimodule " + tmp.file("desc.json") + " " + tmp.file("ib.json")) == 0);
  }
}

TEST_CASE("solve writes one operator document per basis element") {
  TempDir tmp;
  nlohmann::json doc;

  SUBCASE("the simple algebra has a one-dimensional scaling space") {
    CHECK(run_capture("solve --kind centroid " + fx("sl2.json") + " --out " + tmp.file("c"),
                      tmp.file("solve.out"), doc) == 0);
    CHECK(doc.at("verdict") == "pass");
    CHECK(doc.at("dimension").get<int>() == 1);
    CHECK(doc.at("files").size() == 1);
    CHECK(std::filesystem::exists(tmp.file("c-000.json")));
    CHECK(run("check --kind centroid " + fx("sl2.json") + " " + tmp.file("c-000.json")) == 0);
  }

  SUBCASE("the zero bracket admits every operator as a scaling") {
    CHECK(run_capture("solve --kind centroid " + fx("abelian2.json") + " --out " + tmp.file("a"),
                      tmp.file("solve.out"), doc) == 0);
    CHECK(doc.at("dimension").get<int>() == 4);
    for (int i = 0; i < 4; ++i) {
      std::string path = tmp.file("a-00" + std::to_string(i) + ".json");
      CHECK(std::filesystem::exists(path));
      CHECK(run("check --kind centroid " + fx("abelian2.json") + " " + path) == 0);
    }
  }

  SUBCASE("derivations of the nilpotent algebra form a plane") {
    CHECK(run_capture("solve --kind derivation " + fx("heis2.json") + " --out " + tmp.file("d"),
                      tmp.file("solve.out"), doc) == 0);
    CHECK(doc.at("dimension").get<int>() == 2);
    for (const auto& path : doc.at("files")) {
      CHECK(run("check --kind derivation " + fx("heis2.json") + " " +
                path.get<std::string>()) == 0);
    }
  }

  SUBCASE("the central derivation space is spanned by the corner operator") {
    CHECK(run_capture("solve --kind central-derivation " + fx("heis2.json") + " --out " +
                          tmp.file("z"),
                      tmp.file("solve.out"), doc) == 0);
    CHECK(doc.at("dimension").get<int>() == 1);
    tlz::Matrix got = tlz::as_operator_matrix(tlz::load_algebra_file(tmp.file("z-000.json")));
    tlz::Matrix want(2, 2);
    want.at(1, 0) = tlz::Scalar(1);
    CHECK(got == want);
  }

  SUBCASE("ternary scaling operators are solved and verified") {
    CHECK(run_capture("solve --kind centroid " + fx("sl2_assoc_ternary.json") + " --out " +
                          tmp.file("tc"),
                      tmp.file("solve.out"), doc) == 0);
    CHECK(doc.at("dimension").get<int>() >= 1);
    for (const auto& path : doc.at("files")) {
      CHECK(run("check --kind centroid " + fx("sl2_assoc_ternary.json") + " " +
                path.get<std::string>()) == 0);
    }
  }

  SUBCASE("nonlinear or unsupported operator classes are refused") {
    CHECK(run("solve --kind rota-baxter " + fx("sl2.json") + " --out " + tmp.file("r")) == 2);
    CHECK(run("solve --kind derivation --weight 1 " + fx("sl2.json") + " --out " +
              tmp.file("w")) == 2);
    CHECK(run("solve --kind averaging " + fx("sl2_assoc_ternary.json") + " --out " +
              tmp.file("v")) == 2);
  }
}

TEST_CASE("every bundled document reloads byte for byte") {
  int seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(g_fixtures)) {
    if (entry.path().extension() != ".json") continue;
    CAPTURE(entry.path().string());
    std::string bytes = slurp(entry.path().string());
    tlz::AlgebraFile file = tlz::load_algebra_file(entry.path().string());
    CHECK(tlz::serialize_algebra_file(file) == bytes);
    ++seen;
  }
  CHECK(seen >= 30);
}

int main(int argc, char** argv) {
  std::vector<const char*> pass;
  pass.push_back(argv[0]);
  std::vector<std::string> positional;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (!arg.empty() && arg[0] != '-' && positional.size() < 3) {
      positional.push_back(arg);
    } else {
      pass.push_back(argv[i]);
    }
  }
  if (positional.size() != 3) {
    std::fprintf(stderr, "usage: %s <tlz-binary> <fixtures-dir> <data-dir> [doctest args]\n",
                 argv[0]);
    return 2;
  }
  g_tlz = positional[0];
  g_fixtures = positional[1];
  g_data = positional[2];
  doctest::Context context(static_cast<int>(pass.size()), pass.data());
  return context.run();
}
