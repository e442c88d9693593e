#include "fimod/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace fimod {

using nlohmann::json;

namespace {

json matrix_to_json(const Matrix& m)
{
  ScalarOps ops(m.field());
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(ops.to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

[[noreturn]] void bad_field(const std::string& where, const std::string& what)
{
  throw FimodError("module file: field '" + where + "': " + what);
}

const json& member(const json& obj, const std::string& key, const std::string& where)
{
  auto it = obj.find(key);
  if (it == obj.end())
    bad_field(where.empty() ? key : where + "." + key, "missing");
  return *it;
}

std::size_t as_size(const json& j, const std::string& where)
{
  if (!j.is_number_integer() || j.get<long long>() < 0)
    bad_field(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Matrix matrix_from_json(const json& j, Field field, std::size_t rows, std::size_t cols, const std::string& where)
{
  std::string shape = std::to_string(rows) + "x" + std::to_string(cols);
  if (!j.is_array() || j.size() != rows)
    bad_field(where, "expected " + shape + " matrix (array of " + std::to_string(rows) + " rows)");
  ScalarOps ops(field);
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j[i];
    std::string rw = where + "[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != cols)
      bad_field(rw, "expected a row of " + std::to_string(cols) + " entries for " + shape + " matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!row[c].is_string())
        bad_field(rw + "[" + std::to_string(c) + "]", "scalars must be strings");
      try {
        m(i, c) = ops.parse(row[c].get<std::string>());
      } catch (const FimodError& e) {
        bad_field(rw + "[" + std::to_string(c) + "]", e.what());
      }
    }
  }
  return m;
}

bool is_flat_array(const json& j)
{
  for (const json& e : j)
    if (e.is_structured())
      return false;
  return true;
}

void write_pretty(std::string& out, const json& j, int indent)
{
  std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      out += (first ? "" : ",\n") + pad + json(key).dump() + ": ";
      write_pretty(out, value, indent + 2);
      first = false;
    }
    out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "}";
  } else if (j.is_array() && !j.empty() && !is_flat_array(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += (i ? ",\n" : "") + pad;
      write_pretty(out, j[i], indent + 2);
    }
    out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "]";
  } else {
    std::string flat = j.dump();
    if (j.is_array()) {
      // ["1","0"] -> ["1", "0"]
      std::string spaced;
      for (std::size_t i = 0; i < j.size(); ++i)
        spaced += (i ? ", " : "") + j[i].dump();
      flat = "[" + spaced + "]";
    }
    out += flat;
  }
}

Field field_from_json(const json& j)
{
  if (!j.is_object())
    bad_field("field", "expected an object");
  const json& kind = member(j, "kind", "field");
  if (kind == "Q")
    return Field::rationals();
  if (kind == "Fp") {
    std::size_t p = as_size(member(j, "p", "field"), "field.p");
    try {
      return Field::prime(p);
    } catch (const FimodError& e) {
      bad_field("field.p", e.what());
    }
  }
  bad_field("field.kind", "expected \"Q\" or \"Fp\"");
}

json field_to_json(const Field& f)
{
  if (!f.is_prime_field())
    return json{{"kind", "Q"}};
  return json{{"kind", "Fp"}, {"p", f.modulus()}};
}

}  // namespace

json module_to_json(const TruncatedFIModule& v, const json& header)
{
  json out;
  out["field"] = field_to_json(v.field());
  out["trunc"] = v.trunc();
  json dims = json::array();
  for (std::size_t n = 0; n <= v.trunc(); ++n)
    dims.push_back(v.dim(n));
  out["dims"] = std::move(dims);
  json ts = json::object();
  for (std::size_t n = 2; n <= v.trunc(); ++n) {
    json per = json::array();
    for (std::size_t i = 1; i < n; ++i)
      per.push_back(matrix_to_json(v.transposition(n, i)));
    ts[std::to_string(n)] = std::move(per);
  }
  out["transpositions"] = std::move(ts);
  json incs = json::array();
  for (std::size_t n = 0; n < v.trunc(); ++n)
    incs.push_back(matrix_to_json(v.inclusion(n)));
  out["inclusions"] = std::move(incs);
  if (!header.empty())
    out["header"] = header;
  return out;
}

std::string dump_module(const TruncatedFIModule& v, const json& header)
{
  return pretty_json(module_to_json(v, header));
}

std::string pretty_json(const json& j)
{
  std::string out;
  write_pretty(out, j, 0);
  return out + "\n";
}

ModuleFile parse_module(std::string_view text)
{
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FimodError(std::string("module file: ") + e.what());
  }
  if (!j.is_object())
    throw FimodError("module file: top level must be an object");
  Field field = field_from_json(member(j, "field", ""));
  std::size_t N = as_size(member(j, "trunc", ""), "trunc");
  const json& dj = member(j, "dims", "");
  if (!dj.is_array() || dj.size() != N + 1)
    bad_field("dims", "expected " + std::to_string(N + 1) + " entries");
  std::vector<std::size_t> dims;
  for (std::size_t n = 0; n <= N; ++n)
    dims.push_back(as_size(dj[n], "dims[" + std::to_string(n) + "]"));

  const json& tj = member(j, "transpositions", "");
  if (!tj.is_object())
    bad_field("transpositions", "expected an object keyed by degree");
  for (const auto& [key, _] : tj.items()) {
    std::size_t n = 0;
    bool ok = !key.empty() && key.find_first_not_of("0123456789") == std::string::npos;
    if (ok)
      n = std::stoul(key);
    if (!ok || n < 2 || n > N)
      bad_field("transpositions." + key, "degree key must be in 2.." + std::to_string(N));
  }
  std::vector<std::vector<Matrix>> ts(N + 1);
  for (std::size_t n = 2; n <= N; ++n) {
    std::string where = "transpositions." + std::to_string(n);
    const json& per = member(tj, std::to_string(n), "transpositions");
    if (!per.is_array() || per.size() != n - 1)
      bad_field(where, "expected " + std::to_string(n - 1) + " matrices");
    for (std::size_t i = 1; i < n; ++i)
      ts[n].push_back(matrix_from_json(per[i - 1], field, dims[n], dims[n], where + "[" + std::to_string(i - 1) + "]"));
  }
  const json& ij = member(j, "inclusions", "");
  if (!ij.is_array() || ij.size() != N)
    bad_field("inclusions", "expected " + std::to_string(N) + " matrices");
  std::vector<Matrix> incs;
  for (std::size_t n = 0; n < N; ++n)
    incs.push_back(matrix_from_json(ij[n], field, dims[n + 1], dims[n], "inclusions[" + std::to_string(n) + "]"));

  json header = json::object();
  if (auto it = j.find("header"); it != j.end()) {
    if (!it->is_object())
      bad_field("header", "expected an object");
    header = *it;
  }
  for (const auto& [key, _] : j.items())
    if (key != "field" && key != "trunc" && key != "dims" && key != "transpositions" && key != "inclusions" &&
        key != "header")
      bad_field(key, "unknown key");

  TruncatedFIModule v(field, N, std::move(dims), std::move(ts), std::move(incs));
  ValidationReport rep = validate(v);
  if (!rep.ok())
    throw FimodError("validation error: " + rep.violations.front().to_string());
  return ModuleFile{std::move(v), std::move(header)};
}

ModuleFile load_module(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in)
    throw FimodError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_module(ss.str());
  } catch (const FimodError& e) {
    throw FimodError(path.string() + ": " + e.what());
  }
}

void save_module(const std::filesystem::path& path, const TruncatedFIModule& v, const json& header)
{
  write_text(path, dump_module(v, header));
}

void write_text(const std::filesystem::path& path, const std::string& text)
{
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out)
    throw FimodError("cannot write " + path.string());
  out << text;
}

}  // namespace fimod
