#include "filippov/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace filippov::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& field, const std::string& what) {
  throw InputError(where + ": " + (field.empty() ? "" : field + ": ") + what);
}

std::string at_key(const std::string& path, const char* key) { return path.empty() ? key : path + "." + key; }
std::string at_index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& require(const Json& obj, const char* key, const std::string& where, const std::string& path) {
  if (!obj.is_object()) fail(where, path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, at_key(path, key), "missing");
  return *it;
}

const Json& require_array(const Json& node, const std::string& where, const std::string& path) {
  if (!node.is_array()) fail(where, path, "expected an array");
  return node;
}

std::size_t to_index(const Json& node, std::size_t bound, const std::string& where, const std::string& path) {
  if (!node.is_number_unsigned()) fail(where, path, "expected a non-negative integer");
  auto v = node.get<std::uint64_t>();
  if (v >= bound) fail(where, path, "index " + std::to_string(v) + " out of range (dimension " + std::to_string(bound) + ")");
  return static_cast<std::size_t>(v);
}

Scalar to_scalar(const Json& node, const std::string& where, const std::string& path) {
  if (node.is_number_integer()) return Scalar(std::to_string(node.get<std::int64_t>()));
  if (!node.is_string()) fail(where, path, "expected a rational such as \"-3/4\"");
  try {
    return parse_scalar(node.get<std::string>());
  } catch (const InputError& e) {
    fail(where, path, e.what());
  }
}

Matrix to_matrix(const Json& node, std::size_t rows, std::size_t cols, const std::string& where,
                 const std::string& path) {
  require_array(node, where, path);
  if (node.size() != rows)
    fail(where, path, "expected " + std::to_string(rows) + " rows, found " + std::to_string(node.size()));
  Matrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_path = at_index(path, r);
    require_array(node[r], where, row_path);
    if (node[r].size() != cols)
      fail(where, row_path, "expected " + std::to_string(cols) + " entries, found " + std::to_string(node[r].size()));
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = to_scalar(node[r][c], where, at_index(row_path, c));
  }
  return out;
}

/// Square matrix whose size is read off the document.
Matrix to_square_matrix(const Json& node, const std::string& where, const std::string& path) {
  require_array(node, where, path);
  return to_matrix(node, node.size(), node.size(), where, path);
}

/// "brackets" list of the algebra format, values of length `value_dim`.
StructureTable to_table(const Json& list, std::size_t arg_dim, std::size_t value_dim, const std::string& where,
                        const std::string& path) {
  require_array(list, where, path);
  StructureTable table;
  for (std::size_t e = 0; e < list.size(); ++e) {
    const std::string entry = at_index(path, e);
    const Json& args = require_array(require(list[e], "args", where, entry), where, at_key(entry, "args"));
    if (args.size() != 3) fail(where, at_key(entry, "args"), "expected 3 indices");
    std::array<std::size_t, 3> key{};
    for (std::size_t k = 0; k < 3; ++k) key[k] = to_index(args[k], arg_dim, where, at_index(at_key(entry, "args"), k));
    if (!(key[0] < key[1] && key[1] < key[2])) fail(where, at_key(entry, "args"), "indices must be strictly increasing");
    if (table.contains(key)) fail(where, at_key(entry, "args"), "duplicate triple");
    Vector value(value_dim);
    const std::string vpath = at_key(entry, "value");
    const Json& terms = require_array(require(list[e], "value", where, entry), where, vpath);
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tpath = at_index(vpath, t);
      std::size_t l = to_index(require(terms[t], "basis", where, tpath), value_dim, where, at_key(tpath, "basis"));
      value[l] += to_scalar(require(terms[t], "coeff", where, tpath), where, at_key(tpath, "coeff"));
    }
    table.emplace(key, std::move(value));
  }
  return table;
}

Json table_to_json(const StructureTable& table) {
  Json list = Json::array();
  for (const auto& [key, value] : table) {
    Json terms = Json::array();
    for (std::size_t l = 0; l < value.size(); ++l)
      if (value[l] != 0) terms.push_back({{"basis", l}, {"coeff", format_scalar(value[l])}});
    if (terms.empty()) continue;
    list.push_back({{"args", {key[0], key[1], key[2]}}, {"value", std::move(terms)}});
  }
  return list;
}

template <class Key>
std::map<Key, Matrix> to_matrix_table(const Json& list, std::size_t first_dim, std::size_t second_dim,
                                      std::size_t size, bool increasing, const std::string& where,
                                      const std::string& path) {
  require_array(list, where, path);
  std::map<Key, Matrix> out;
  for (std::size_t e = 0; e < list.size(); ++e) {
    const std::string entry = at_index(path, e), apath = at_key(entry, "args");
    const Json& args = require_array(require(list[e], "args", where, entry), where, apath);
    if (args.size() != 2) fail(where, apath, "expected 2 indices");
    Key key{to_index(args[0], first_dim, where, at_index(apath, 0)), to_index(args[1], second_dim, where, at_index(apath, 1))};
    if (increasing && key.first >= key.second) fail(where, apath, "indices must be strictly increasing");
    if (out.contains(key)) fail(where, apath, "duplicate entry");
    out.emplace(key, to_matrix(require(list[e], "matrix", where, entry), size, size, where, at_key(entry, "matrix")));
  }
  return out;
}

template <class Table>
Json matrix_table_to_json(const Table& table, const char* list_key) {
  Json list = Json::array();
  for (const auto& [key, m] : table) list.push_back({{"args", {key.first, key.second}}, {"matrix", matrix_to_json(m)}});
  return Json{{list_key, std::move(list)}};
}

ThreeLieAlgebra algebra_field(const Json& node, const std::filesystem::path& base_dir, const std::string& where,
                              const std::string& path) {
  if (node.is_string()) {
    std::filesystem::path file = node.get<std::string>();
    if (file.is_relative()) file = base_dir / file;
    return read_algebra(file);
  }
  if (!node.is_object()) fail(where, path, "expected an algebra object or a file path");
  return algebra_from_json(node, where + ": " + path);
}

}  // namespace

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError(path.string() + ":" + std::to_string(line) + ":" + std::to_string(column) +
                     ": malformed JSON");
  }
}

ThreeLieAlgebra algebra_from_json(const Json& doc, const std::string& where) {
  const Json& dim_node = require(doc, "dim", where, "");
  if (!dim_node.is_number_unsigned()) fail(where, "dim", "expected a non-negative integer");
  const auto n = dim_node.get<std::size_t>();
  std::vector<std::string> labels = default_labels(n);
  if (auto it = doc.find("basis"); it != doc.end()) {
    require_array(*it, where, "basis");
    if (it->size() != n) fail(where, "basis", "expected " + std::to_string(n) + " labels");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(*it)[i].is_string()) fail(where, at_index("basis", i), "expected a string");
      labels[i] = (*it)[i].get<std::string>();
      if (!seen.insert(labels[i]).second) fail(where, at_index("basis", i), "duplicate label");
    }
  }
  StructureTable table;
  if (auto it = doc.find("brackets"); it != doc.end()) table = to_table(*it, n, n, where, "brackets");
  return ThreeLieAlgebra(n, std::move(labels), table);
}

ThreeLieAlgebra read_algebra(const std::filesystem::path& path) {
  return algebra_from_json(read_json(path), path.string());
}

Json algebra_to_json(const ThreeLieAlgebra& algebra) {
  return Json{{"dim", algebra.dim()}, {"basis", algebra.labels()}, {"brackets", table_to_json(algebra.table())}};
}

PairAction pair_action_from_json(const Json& doc, std::size_t algebra_dim, const std::string& where) {
  const Json& pairs = require_array(require(doc, "pairs", where, ""), where, "pairs");
  std::size_t target = 0;
  if (auto it = doc.find("target_dim"); it != doc.end()) {
    if (!it->is_number_unsigned()) fail(where, "target_dim", "expected a non-negative integer");
    target = it->get<std::size_t>();
  } else if (!pairs.empty() && pairs[0].is_object() && pairs[0].contains("matrix") && pairs[0]["matrix"].is_array()) {
    target = pairs[0]["matrix"].size();
  }
  auto table = to_matrix_table<std::pair<std::size_t, std::size_t>>(pairs, algebra_dim, algebra_dim, target, true,
                                                                    where, "pairs");
  return PairAction(algebra_dim, target, table);
}

PairAction read_pair_action(const std::filesystem::path& path, std::size_t algebra_dim) {
  return pair_action_from_json(read_json(path), algebra_dim, path.string());
}

Json pair_action_to_json(const PairAction& action) {
  Json out = matrix_table_to_json(action.table(), "pairs");
  out["target_dim"] = action.target_dim();
  return out;
}

ExtensionSpec spec_from_json(const Json& doc, const std::filesystem::path& base_dir, const std::string& where) {
  ThreeLieAlgebra m = algebra_field(require(doc, "M", where, ""), base_dir, where, "M");
  ThreeLieAlgebra h = algebra_field(require(doc, "H", where, ""), base_dir, where, "H");
  const std::size_t md = m.dim(), hd = h.dim();
  StructureTable mu;
  if (auto it = doc.find("mu"); it != doc.end())
    mu = to_table(require(*it, "brackets", where, "mu"), md, hd, where, "mu.brackets");
  PairTable rho;
  if (auto it = doc.find("rho"); it != doc.end())
    rho = to_matrix_table<std::pair<std::size_t, std::size_t>>(require(*it, "pairs", where, "rho"), md, md, hd, true,
                                                               where, "rho.pairs");
  MixedTable beta;
  if (auto it = doc.find("beta"); it != doc.end())
    beta = to_matrix_table<std::pair<std::size_t, std::size_t>>(require(*it, "entries", where, "beta"), md, hd, hd,
                                                                false, where, "beta.entries");
  try {
    return ExtensionSpec(std::move(m), std::move(h), TriMapToH(md, hd, mu), PairAction(md, hd, rho),
                         MixedAction(md, hd, beta));
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

ExtensionSpec read_spec(const std::filesystem::path& path) {
  return spec_from_json(read_json(path), path.parent_path(), path.string());
}

Json spec_to_json(const ExtensionSpec& spec) {
  return Json{{"M", algebra_to_json(spec.m())},
              {"H", algebra_to_json(spec.h())},
              {"mu", {{"brackets", table_to_json(spec.mu().table())}}},
              {"rho", matrix_table_to_json(spec.rho().table(), "pairs")},
              {"beta", matrix_table_to_json(spec.beta().table(), "entries")}};
}

DerivationPair pair_from_json(const Json& doc, const ExtensionSpec& spec, const std::string& where) {
  Matrix sigma = to_square_matrix(require(doc, "sigma", where, ""), where, "sigma");
  Matrix tau = to_square_matrix(require(doc, "tau", where, ""), where, "tau");
  if (sigma.rows() != spec.m_dim())
    fail(where, "sigma", "expected " + std::to_string(spec.m_dim()) + "x" + std::to_string(spec.m_dim()));
  if (tau.rows() != spec.h_dim())
    fail(where, "tau", "expected " + std::to_string(spec.h_dim()) + "x" + std::to_string(spec.h_dim()));
  try {
    return DerivationPair(spec.m(), spec.h(), LinearMap(std::move(sigma)), LinearMap(std::move(tau)));
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

DerivationPair read_pair(const std::filesystem::path& path, const ExtensionSpec& spec) {
  return pair_from_json(read_json(path), spec, path.string());
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vector_to_json(m.row(r)));
  return rows;
}

Json vector_to_json(std::span<const Scalar> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(format_scalar(x));
  return out;
}

Json report_to_json(const CheckReport& report) {
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses)
    witnesses.push_back({{"identity", w.identity},
                         {"tuple", w.tuple},
                         {"lhs", vector_to_json(w.lhs)},
                         {"rhs", vector_to_json(w.rhs)}});
  return Json{{"name", report.name},
              {"passed", report.passed},
              {"tuples_checked", report.tuples_checked},
              {"violations", report.violations},
              {"witnesses", std::move(witnesses)}};
}

}  // namespace filippov::io
