#include <biham/errors.hpp>
#include <biham/io.hpp>
#include <biham/parse.hpp>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace biham {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorKind::Parse, "JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::Validation, where + " lacks \"" + key + "\"");
  return j.at(key);
}

std::string as_text(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw Error(ErrorKind::Validation, where + " must be a string or integer");
}

Rational as_rational(const json& j, const std::string& where) { return parse_rational(as_text(j, where)); }

std::size_t as_index(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_number_integer()) throw Error(ErrorKind::Validation, where + " index must be an integer");
  const long long v = j.get<long long>();
  if (v < 0 || static_cast<std::size_t>(v) >= n)
    throw Error(ErrorKind::Validation, where + " index " + std::to_string(v) + " out of range");
  return static_cast<std::size_t>(v);
}

PoissonStructure parse_bivector(const json& j, const Ring& ring, const std::string& label) {
  if (!j.is_array()) throw Error(ErrorKind::Validation, label + " must be an array of {i, j, coeff} entries");
  const std::size_t n = ring->size();
  std::map<std::pair<std::size_t, std::size_t>, RationalFunction> upper;
  for (const auto& e : j) {
    std::size_t a = as_index(field(e, "i", label), n, label), b = as_index(field(e, "j", label), n, label);
    RationalFunction value = parse_expression(as_text(field(e, "coeff", label), label), ring);
    const std::string pair = "{" + (*ring)[a] + "," + (*ring)[b] + "}";
    if (a == b) throw Error(ErrorKind::Validation, label + ": diagonal entry " + pair + " violates skew symmetry");
    if (a > b) {
      std::swap(a, b);
      value = -value;
    }
    auto [it, inserted] = upper.emplace(std::make_pair(a, b), value);
    if (!inserted && !(it->second == value))
      throw Error(ErrorKind::Validation, label + ": conflicting entries for " + pair + " violate skew symmetry");
  }
  return PoissonStructure(ring, upper);
}

json bivector_json(const PoissonStructure& p) {
  json out = json::array();
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = i + 1; j < p.dim(); ++j)
      if (!p(i, j).is_zero()) out.push_back({{"i", i}, {"j", j}, {"coeff", p(i, j).to_string()}});
  return out;
}

Ring ring_from_json(const json& j, const std::string& where) {
  std::vector<std::string> vars;
  std::set<std::string> seen;
  for (const auto& v : field(j, "vars", where)) {
    std::string name = as_text(v, "vars");
    if (!seen.insert(name).second) throw Error(ErrorKind::Validation, "duplicate variable '" + name + "'");
    vars.push_back(name);
  }
  if (vars.empty()) throw Error(ErrorKind::Validation, where + " has no variables");
  if (j.contains("dim") && j.at("dim") != vars.size())
    throw Error(ErrorKind::DimensionMismatch, where + ": dim disagrees with the variable list");
  return make_ring(std::move(vars));
}

LambdaFamily family_from_json(const json& j, const Ring& ring) {
  LambdaFamily f;
  for (const auto& c : field(j, "coeffs", "family")) f.coeffs.push_back(parse_expression(as_text(c, "family"), ring));
  if (f.coeffs.empty()) throw Error(ErrorKind::Validation, "family has no coefficients");
  if (j.contains("degree") && j.at("degree") != f.coeffs.size() - 1)
    throw Error(ErrorKind::Validation, "family degree disagrees with its coefficient count");
  if (j.contains("orientation")) f.orientation = as_text(j.at("orientation"), "family");
  return f;
}

LenardChain chain_from_json(const json& j, const Ring& ring) {
  LenardChain c;
  for (const auto& h : field(j, "functions", "chain")) c.functions.push_back(parse_expression(as_text(h, "chain"), ring));
  if (c.functions.empty()) throw Error(ErrorKind::Validation, "chain has no functions");
  if (j.contains("anchored")) c.anchored = j.at("anchored").get<bool>();
  return c;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    out.push_back(row);
  }
  return out;
}

Matrix matrix_from_json(const json& j, const char* label) {
  if (!j.is_array()) throw Error(ErrorKind::Validation, std::string(label) + " must be an array of rows");
  const std::size_t n = j.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n)
      throw Error(ErrorKind::DimensionMismatch, std::string(label) + " must be square");
    for (std::size_t c = 0; c < n; ++c) m(i, c) = as_rational(j[i][c], label);
  }
  return m;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Validation, "cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

StructureFile parse_structure_text(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw Error(ErrorKind::Validation, "structure file must be a JSON object");
  Ring ring = ring_from_json(j, "structure");
  StructureFile s;
  s.name = j.contains("name") ? as_text(j.at("name"), "name") : "structure";
  s.structure.p1 = parse_bivector(field(j, "P1", "structure"), ring, "P1");
  s.structure.p2 = parse_bivector(field(j, "P2", "structure"), ring, "P2");
  if (j.contains("families"))
    for (const auto& f : j.at("families")) s.families.push_back(family_from_json(f, ring));
  if (j.contains("chains"))
    for (const auto& c : j.at("chains")) s.chains.push_back(chain_from_json(c, ring));
  if (j.contains("genericity"))
    for (const auto& g : j.at("genericity")) s.genericity.push_back(parse_poly(as_text(g, "genericity"), ring));
  return s;
}

StructureFile parse_structure_file(const std::string& path) { return parse_structure_text(read_text_file(path)); }

StructureFile structure_from_model(const ModelSpec& m) {
  StructureFile s;
  s.name = m.identity();
  s.structure = m.structure;
  s.families = m.families;
  s.genericity = m.genericity;
  return s;
}

std::string serialize_structure(const StructureFile& s) {
  json j;
  j["name"] = s.name;
  j["dim"] = s.structure.dim();
  j["vars"] = s.structure.p1.vars();
  j["P1"] = bivector_json(s.structure.p1);
  j["P2"] = bivector_json(s.structure.p2);
  json fams = json::array();
  for (const auto& f : s.families) {
    json c = json::array();
    for (const auto& x : f.coeffs) c.push_back(x.to_string());
    fams.push_back({{"degree", f.degree()}, {"coeffs", c}, {"orientation", f.orientation}});
  }
  j["families"] = fams;
  json chains = json::array();
  for (const auto& ch : s.chains) {
    json c = json::array();
    for (const auto& x : ch.functions) c.push_back(x.to_string());
    chains.push_back({{"functions", c}, {"anchored", ch.anchored}});
  }
  j["chains"] = chains;
  json gen = json::array();
  for (const auto& g : s.genericity) gen.push_back(g.to_string());
  j["genericity"] = gen;
  return j.dump(2) + "\n";
}

SkewPencil parse_pencil_text(const std::string& text) {
  const json j = parse_json(text);
  Matrix a = matrix_from_json(field(j, "A", "pencil"), "A");
  Matrix b = matrix_from_json(field(j, "B", "pencil"), "B");
  if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "A and B differ in size");
  if (j.contains("n") && j.at("n") != a.rows()) throw Error(ErrorKind::DimensionMismatch, "n disagrees with the matrices");
  return SkewPencil(a, b);
}

std::string serialize_pencil(const SkewPencil& p) {
  json j;
  j["n"] = p.n();
  j["A"] = matrix_json(p.a());
  j["B"] = matrix_json(p.b());
  return j.dump(2) + "\n";
}

PoissonStructure parse_poisson_text(const std::string& text) {
  const json j = parse_json(text);
  return parse_bivector(field(j, "brackets", "structure"), ring_from_json(j, "structure"), "brackets");
}

std::string serialize_poisson(const PoissonStructure& p) {
  json j;
  j["dim"] = p.dim();
  j["vars"] = p.vars();
  j["brackets"] = bivector_json(p);
  return j.dump(2) + "\n";
}

LambdaFamily parse_family_text(const std::string& text, const Ring& ring) {
  return family_from_json(parse_json(text), ring);
}

LenardChain parse_chain_text(const std::string& text, const Ring& ring) {
  return chain_from_json(parse_json(text), ring);
}

}  // namespace biham
