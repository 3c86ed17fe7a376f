#include "tlz/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "tlz/errors.hpp"

namespace tlz {

namespace {

using nlohmann::ordered_json;

constexpr int kMaxDim = 32;

[[noreturn]] void fail(const std::string& msg) { throw ParseError(msg); }

/// Rejects unknown keys and missing required keys on a JSON object.
void require_keys(const ordered_json& obj, const std::string& what,
                  const std::vector<std::string>& required,
                  const std::vector<std::string>& optional) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const std::string& key = it.key();
    bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                 std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) fail(what + ": unknown key \"" + key + "\"");
  }
  for (const auto& key : required) {
    if (!obj.contains(key)) fail(what + ": missing key \"" + key + "\"");
  }
}

int to_small_int(const ordered_json& j, const std::string& what) {
  if (!j.is_number_integer()) fail(what + " must be an integer");
  long long v = j.get<long long>();
  if (v < 0 || v > 1000000) fail(what + " out of range");
  return static_cast<int>(v);
}

std::vector<int> parse_dims(const ordered_json& j, std::size_t want, const std::string& kind) {
  if (!j.is_array() || j.size() != want) {
    fail("kind \"" + kind + "\" needs a dims list of length " + std::to_string(want));
  }
  std::vector<int> dims;
  for (const auto& d : j) {
    int v = to_small_int(d, "dimension");
    if (v < 1 || v > kMaxDim) fail("dimension must be between 1 and " + std::to_string(kMaxDim));
    dims.push_back(v);
  }
  return dims;
}

Tensor tensor_from_entries(const ordered_json& arr, const std::vector<int>& profile,
                           const std::string& what) {
  if (!arr.is_array()) fail(what + " must be an array");
  Tensor t(profile);
  std::set<std::size_t> seen;
  for (const auto& e : arr) {
    if (!e.is_object()) fail(what + ": entry must be an object");
    require_keys(e, what + " entry", {"idx", "val"}, {});
    const auto& idx_json = e.at("idx");
    if (!idx_json.is_array() || idx_json.size() != profile.size()) {
      fail(what + ": idx must be a list of " + std::to_string(profile.size()) + " indices");
    }
    std::vector<int> idx;
    for (std::size_t k = 0; k < idx_json.size(); ++k) {
      int v = to_small_int(idx_json[k], what + " index");
      if (v >= profile[k]) fail(what + ": index out of range");
      idx.push_back(v);
    }
    const auto& val_json = e.at("val");
    if (!val_json.is_string()) fail(what + ": val must be a fraction string");
    Scalar val = Scalar::parse(val_json.get<std::string>());
    std::size_t off = t.offset(idx);
    if (!seen.insert(off).second) fail(what + ": duplicate index");
    t.at(idx) = val;
  }
  return t;
}

ordered_json entries_to_json(const Tensor& t) {
  ordered_json arr = ordered_json::array();
  const auto& dims = t.dims();
  std::vector<int> idx(dims.size(), 0);
  for (std::size_t off = 0; off < t.data().size(); ++off) {
    const Scalar& v = t.data()[off];
    if (!v.is_zero()) {
      ordered_json e;
      e["idx"] = idx;
      e["val"] = v.str();
      arr.push_back(std::move(e));
    }
    for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
      if (++idx[static_cast<std::size_t>(k)] < dims[static_cast<std::size_t>(k)]) break;
      idx[static_cast<std::size_t>(k)] = 0;
    }
  }
  return arr;
}

/// Canonical part names and tensor profiles for a multi-part kind.
std::vector<std::pair<std::string, std::vector<int>>> part_profiles(const std::string& kind, int n,
                                                                    int m, bool ternary_bimodule) {
  if (kind == "bimodule") {
    if (ternary_bimodule) {
      return {{"l1", {m, n, n, m}}, {"l2", {n, m, n, m}}, {"l3", {n, n, m, m}}};
    }
    return {{"l", {n, m, m}}, {"r", {m, n, m}}};
  }
  if (kind == "representation") {
    return {{"lambda", {n, n, m, m}}, {"mu", {n, n, m, m}}, {"rho", {n, n, m, m}}};
  }
  return {{"w1", {n, n, n, n}},   {"w2", {n, n, n, n}},   {"wl1", {n, n, m, m}},
          {"wl2", {n, n, m, m}},  {"wm1", {n, n, m, m}},  {"wm2", {n, n, m, m}},
          {"wr1", {n, n, m, m}},  {"wr2", {n, n, m, m}}};
}

void require_kind(const AlgebraFile& file, const std::string& kind) {
  if (file.kind != kind) {
    fail("expected a file of kind \"" + kind + "\", got \"" + file.kind + "\"");
  }
}

Matrix tensor_to_matrix(const Tensor& t) {
  Matrix m(t.dims()[0], t.dims()[1]);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = t.at({i, j});
  }
  return m;
}

Tensor matrix_to_tensor(const Matrix& m) {
  Tensor t({m.rows(), m.cols()});
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) t.at({i, j}) = m.at(i, j);
  }
  return t;
}

}  // namespace

AlgebraFile parse_algebra_file(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("document must be a JSON object");
  if (!doc.contains("kind") || !doc.at("kind").is_string()) {
    fail("document needs a string \"kind\"");
  }

  AlgebraFile out;
  out.kind = doc.at("kind").get<std::string>();
  const std::string& kind = out.kind;

  if (kind == "binary" || kind == "comm_assoc" || kind == "ternary") {
    require_keys(doc, "document", {"kind", "dims", "entries"}, {"meta"});
    out.dims = parse_dims(doc.at("dims"), 1, kind);
    int n = out.dims[0];
    std::vector<int> profile =
        kind == "ternary" ? std::vector<int>{n, n, n, n} : std::vector<int>{n, n, n};
    out.main = tensor_from_entries(doc.at("entries"), profile, "entries");
  } else if (kind == "operator") {
    require_keys(doc, "document", {"kind", "dims", "entries"}, {"weight", "aux", "meta"});
    out.dims = parse_dims(doc.at("dims"), 2, kind);
    std::vector<int> profile{out.dims[0], out.dims[1]};
    out.main = tensor_from_entries(doc.at("entries"), profile, "entries");
    if (doc.contains("weight")) {
      if (!doc.at("weight").is_string()) fail("weight must be a fraction string");
      out.weight = Scalar::parse(doc.at("weight").get<std::string>());
    }
    if (doc.contains("aux")) {
      const auto& aux = doc.at("aux");
      if (!aux.is_array()) fail("aux must be an array of entry lists");
      for (std::size_t k = 0; k < aux.size(); ++k) {
        out.aux.push_back(tensor_from_entries(aux[k], profile, "aux[" + std::to_string(k) + "]"));
      }
    }
  } else if (kind == "cocycle") {
    require_keys(doc, "document", {"kind", "dims", "entries"}, {"meta"});
    out.dims = parse_dims(doc.at("dims"), 2, kind);
    int n = out.dims[0], m = out.dims[1];
    out.main = tensor_from_entries(doc.at("entries"), {n, n, n, m}, "entries");
  } else if (kind == "bimodule" || kind == "representation" || kind == "deformation") {
    require_keys(doc, "document", {"kind", "dims", "parts"}, {"meta"});
    out.dims = parse_dims(doc.at("dims"), 2, kind);
    int n = out.dims[0], m = out.dims[1];
    const auto& parts = doc.at("parts");
    if (!parts.is_object()) fail("parts must be an object");
    bool ternary_bimodule = kind == "bimodule" && !parts.contains("l") && !parts.contains("r");
    auto profiles = part_profiles(kind, n, m, ternary_bimodule);
    std::vector<std::string> names;
    names.reserve(profiles.size());
    for (const auto& p : profiles) names.push_back(p.first);
    require_keys(parts, "parts", names, {});
    for (const auto& [name, profile] : profiles) {
      out.parts[name] = tensor_from_entries(parts.at(name), profile, "parts." + name);
    }
  } else {
    fail("unknown kind \"" + kind + "\"");
  }

  if (doc.contains("meta")) {
    const auto& meta = doc.at("meta");
    if (!meta.is_object()) fail("meta must be an object");
    for (auto it = meta.begin(); it != meta.end(); ++it) {
      if (!it.value().is_string()) fail("meta values must be strings");
      out.meta[it.key()] = it.value().get<std::string>();
    }
  }
  return out;
}

std::string serialize_algebra_file(const AlgebraFile& file) {
  ordered_json out;
  out["kind"] = file.kind;
  out["dims"] = file.dims;
  if (file.kind == "operator" && file.weight.has_value()) out["weight"] = file.weight->str();
  bool parts_kind =
      file.kind == "bimodule" || file.kind == "representation" || file.kind == "deformation";
  if (parts_kind) {
    ordered_json parts = ordered_json::object();
    for (const auto& [name, tensor] : file.parts) parts[name] = entries_to_json(tensor);
    out["parts"] = std::move(parts);
  } else {
    out["entries"] = entries_to_json(file.main);
  }
  if (file.kind == "operator" && !file.aux.empty()) {
    ordered_json aux = ordered_json::array();
    for (const auto& t : file.aux) aux.push_back(entries_to_json(t));
    out["aux"] = std::move(aux);
  }
  if (!file.meta.empty()) {
    ordered_json meta = ordered_json::object();
    for (const auto& [key, value] : file.meta) meta[key] = value;
    out["meta"] = std::move(meta);
  }
  return out.dump(2) + "\n";
}

AlgebraFile load_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_file(buf.str());
}

void save_algebra_file(const std::string& path, const AlgebraFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot write file: " + path);
  out << serialize_algebra_file(file);
  if (!out) fail("write failed: " + path);
}

BinaryAlgebra as_binary(const AlgebraFile& file) {
  require_kind(file, "binary");
  return BinaryAlgebra(file.main);
}

TernaryAlgebra as_ternary(const AlgebraFile& file) {
  require_kind(file, "ternary");
  return TernaryAlgebra(file.main);
}

CommAssocAlgebra as_comm_assoc(const AlgebraFile& file) {
  require_kind(file, "comm_assoc");
  return CommAssocAlgebra(file.main);
}

Matrix as_operator_matrix(const AlgebraFile& file) {
  require_kind(file, "operator");
  return tensor_to_matrix(file.main);
}

std::vector<Matrix> operator_aux(const AlgebraFile& file) {
  require_kind(file, "operator");
  std::vector<Matrix> out;
  out.reserve(file.aux.size());
  for (const auto& t : file.aux) out.push_back(tensor_to_matrix(t));
  return out;
}

bool bimodule_is_ternary(const AlgebraFile& file) {
  require_kind(file, "bimodule");
  return file.parts.count("l1") > 0;
}

BinaryBimodule as_binary_bimodule(const AlgebraFile& file) {
  if (bimodule_is_ternary(file)) fail("bimodule file holds ternary actions l1/l2/l3");
  return BinaryBimodule(file.parts.at("l"), file.parts.at("r"));
}

TernaryBimodule as_ternary_bimodule(const AlgebraFile& file) {
  if (!bimodule_is_ternary(file)) fail("bimodule file holds binary actions l/r");
  return TernaryBimodule(file.parts.at("l1"), file.parts.at("l2"), file.parts.at("l3"));
}

Representation as_representation(const AlgebraFile& file) {
  require_kind(file, "representation");
  return Representation(file.parts.at("lambda"), file.parts.at("mu"), file.parts.at("rho"));
}

Cocycle as_cocycle(const AlgebraFile& file) {
  require_kind(file, "cocycle");
  return Cocycle(file.main);
}

DeformationData as_deformation(const AlgebraFile& file) {
  require_kind(file, "deformation");
  return DeformationData{file.parts.at("w1"),  file.parts.at("w2"),  file.parts.at("wl1"),
                         file.parts.at("wl2"), file.parts.at("wm1"), file.parts.at("wm2"),
                         file.parts.at("wr1"), file.parts.at("wr2")};
}

AlgebraFile make_binary_file(const BinaryAlgebra& b) {
  AlgebraFile file;
  file.kind = "binary";
  file.dims = {b.dim()};
  file.main = b.c();
  return file;
}

AlgebraFile make_ternary_file(const TernaryAlgebra& t) {
  AlgebraFile file;
  file.kind = "ternary";
  file.dims = {t.dim()};
  file.main = t.t();
  return file;
}

AlgebraFile make_comm_assoc_file(const CommAssocAlgebra& a) {
  AlgebraFile file;
  file.kind = "comm_assoc";
  file.dims = {a.dim()};
  file.main = a.p();
  return file;
}

AlgebraFile make_operator_file(const Matrix& op, const std::optional<Scalar>& weight,
                               const std::vector<Matrix>& aux) {
  AlgebraFile file;
  file.kind = "operator";
  file.dims = {op.rows(), op.cols()};
  file.main = matrix_to_tensor(op);
  file.weight = weight;
  for (const auto& a : aux) {
    if (a.rows() != op.rows() || a.cols() != op.cols()) {
      throw ShapeError("auxiliary operator shape differs from the main operator");
    }
    file.aux.push_back(matrix_to_tensor(a));
  }
  return file;
}

AlgebraFile make_bimodule_file(const BinaryBimodule& m) {
  AlgebraFile file;
  file.kind = "bimodule";
  file.dims = {m.algebra_dim(), m.module_dim()};
  file.parts["l"] = m.l();
  file.parts["r"] = m.r();
  return file;
}

AlgebraFile make_bimodule_file(const TernaryBimodule& m) {
  AlgebraFile file;
  file.kind = "bimodule";
  file.dims = {m.algebra_dim(), m.module_dim()};
  file.parts["l1"] = m.l1();
  file.parts["l2"] = m.l2();
  file.parts["l3"] = m.l3();
  return file;
}

AlgebraFile make_representation_file(const Representation& rep) {
  AlgebraFile file;
  file.kind = "representation";
  file.dims = {rep.algebra_dim(), rep.module_dim()};
  file.parts["lambda"] = rep.lambda();
  file.parts["mu"] = rep.mu();
  file.parts["rho"] = rep.rho();
  return file;
}

AlgebraFile make_cocycle_file(const Cocycle& w) {
  AlgebraFile file;
  file.kind = "cocycle";
  file.dims = {w.algebra_dim(), w.module_dim()};
  file.main = w.w();
  return file;
}

AlgebraFile make_deformation_file(const DeformationData& data, int algebra_dim, int module_dim) {
  AlgebraFile file;
  file.kind = "deformation";
  file.dims = {algebra_dim, module_dim};
  file.parts["w1"] = data.w1;
  file.parts["w2"] = data.w2;
  file.parts["wl1"] = data.wl1;
  file.parts["wl2"] = data.wl2;
  file.parts["wm1"] = data.wm1;
  file.parts["wm2"] = data.wm2;
  file.parts["wr1"] = data.wr1;
  file.parts["wr2"] = data.wr2;
  return file;
}

nlohmann::ordered_json report_to_json(const CheckReport& report) {
  ordered_json out;
  out["verdict"] = report.pass() ? "pass" : "fail";
  out["total_violations"] = report.total_violations();
  ordered_json identities = ordered_json::array();
  for (const auto& name : report.identities()) {
    ordered_json row;
    row["name"] = name;
    row["pass"] = report.identity_passed(name);
    row["violations"] = report.violation_count(name);
    identities.push_back(std::move(row));
  }
  out["identities"] = std::move(identities);
  ordered_json witnesses = ordered_json::array();
  for (const auto& v : report.violations()) {
    ordered_json row;
    row["identity"] = v.identity;
    row["tuple"] = v.tuple;
    row["left"] = v.left;
    row["right"] = v.right;
    witnesses.push_back(std::move(row));
  }
  out["witnesses"] = std::move(witnesses);
  ordered_json flags = ordered_json::object();
  for (const auto& [key, value] : report.flags()) flags[key] = value;
  out["flags"] = std::move(flags);
  ordered_json notes = ordered_json::object();
  for (const auto& [key, value] : report.notes()) notes[key] = value;
  out["notes"] = std::move(notes);
  return out;
}

}  // namespace tlz
