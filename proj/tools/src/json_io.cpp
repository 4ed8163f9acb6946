#include "mucos_cli/json_io.hpp"

#include "mucos/error.hpp"

namespace mucos::cli {
namespace {

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(path + ": missing field '" + key + "'");
  return *it;
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

int int_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path + ": expected an integer");
  return j.get<int>();
}

double real_from_json(const Json& j, const std::string& path) {
  if (!j.is_number()) throw ParseError(path + ": expected a number");
  return j.get<double>();
}

std::uint64_t seed_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw ParseError(path + ": expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const CMatrix& m) {
  Json data = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back(to_json(m(r, c)));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Json to_json(const Character& chi) { return Json(chi.exponents); }

Json to_json(const ScalarTable& f) {
  Json out = Json::array();
  for (const Complex& z : f) out.push_back(to_json(z));
  return out;
}

Json to_json(const Instance& inst) {
  Json table = Json::array();
  for (const CMatrix& m : inst.phi.table) table.push_back(to_json(m));
  Json out{{"group", inst.phi.spec.to_string()}, {"dim", inst.phi.dim}, {"mu", to_json(inst.mu)},
           {"table", std::move(table)}};
  if (inst.provenance) {
    const Provenance& p = *inst.provenance;
    Json chars = Json::array();
    for (const auto& chi : p.chars) chars.push_back(to_json(chi));
    Json prov{{"seed", p.seed}, {"kind", std::string(to_string(p.kind))}, {"A", to_json(p.a)}, {"chars", chars}};
    if (p.s) prov["S"] = to_json(*p.s);
    if (p.perturbation) {
      const Perturbation& d = *p.perturbation;
      prov["perturbation"] = Json{{"element", d.element}, {"row", d.row}, {"col", d.col}, {"delta", d.delta}};
    }
    out["provenance"] = std::move(prov);
  }
  return out;
}

Json to_json(const Factorization& fact) {
  Json chars = Json::array();
  for (const auto& chi : fact.chars) chars.push_back(to_json(chi));
  Json groups = Json::array();
  for (const auto& g : fact.groups) groups.push_back(Json{{"chi", to_json(g.chi)}, {"multiplicity", g.multiplicity}});
  return Json{{"A", to_json(fact.a)},         {"chars", std::move(chars)},
              {"mu", to_json(fact.mu)},       {"residual", fact.reconstruction_residual},
              {"seed", fact.seed},            {"groups", std::move(groups)}};
}

Json to_json(const VerificationReport& r) {
  return Json{{"tol", r.tol},
              {"peak_norm", r.peak_norm},
              {"residuals",
               {{"equation", r.max_equation_residual},
                {"identity", r.max_identity_residual},
                {"parity", r.max_parity_residual},
                {"commutator", r.max_commutator},
                {"hermitian", r.max_hermitian_residual}}},
              {"passed",
               {{"equation", r.equation_passed},
                {"identity", r.identity_passed},
                {"parity", r.parity_passed},
                {"commutator", r.commutator_passed},
                {"hermitian", r.hermitian_passed}}},
              {"solution", r.solution_passed()}};
}

Complex complex_from_json(const Json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw ParseError(path + ": expected [re, im]");
  return {real_from_json(j[0], path + "[0]"), real_from_json(j[1], path + "[1]")};
}

CMatrix matrix_from_json(const Json& j, const std::string& path) {
  const int rows = int_from_json(field(j, "rows", path), join(path, "rows"));
  const int cols = int_from_json(field(j, "cols", path), join(path, "cols"));
  const Json& data = field(j, "data", path);
  if (rows < 0 || cols < 0) throw ParseError(path + ": negative shape");
  if (!data.is_array() || data.size() != static_cast<std::size_t>(rows) * cols) {
    throw ParseError(join(path, "data") + ": expected rows*cols entries");
  }
  CMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const std::size_t k = static_cast<std::size_t>(r) * cols + c;
      m(r, c) = complex_from_json(data[k], join(path, "data") + "[" + std::to_string(k) + "]");
    }
  }
  return m;
}

Character character_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected an exponent array");
  Character chi;
  for (std::size_t i = 0; i < j.size(); ++i) chi.exponents.push_back(int_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  return chi;
}

namespace {

GroupSpec group_from_json(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path + ": expected a group string like \"4x2\"");
  try {
    return GroupSpec::parse(j.get<std::string>());
  } catch (const StructuralError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::vector<Character> characters_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected an array of exponent arrays");
  std::vector<Character> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(character_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

Instance instance_from_json(const Json& j) {
  Instance inst;
  inst.phi.spec = group_from_json(field(j, "group", ""), "group");
  inst.phi.dim = int_from_json(field(j, "dim", ""), "dim");
  inst.mu = j.contains("mu") ? character_from_json(j["mu"], "mu") : trivial_character(inst.phi.spec);
  const Json& table = field(j, "table", "");
  if (!table.is_array()) throw ParseError("table: expected an array of matrices");
  for (std::size_t i = 0; i < table.size(); ++i) {
    inst.phi.table.push_back(matrix_from_json(table[i], "table[" + std::to_string(i) + "]"));
  }
  try {
    validate(inst.phi);
    validate(inst.phi.spec, inst.mu);
  } catch (const StructuralError& e) {
    throw ParseError(e.what());
  }
  if (j.contains("provenance")) {
    const Json& pj = j["provenance"];
    Provenance p;
    p.seed = seed_from_json(field(pj, "seed", "provenance"), "provenance.seed");
    const Json& kind = field(pj, "kind", "provenance");
    if (!kind.is_string()) throw ParseError("provenance.kind: expected a string");
    try {
      p.kind = parse_instance_kind(kind.get<std::string>());
    } catch (const StructuralError& e) {
      throw ParseError(std::string("provenance.kind: ") + e.what());
    }
    p.a = matrix_from_json(field(pj, "A", "provenance"), "provenance.A");
    p.chars = characters_from_json(field(pj, "chars", "provenance"), "provenance.chars");
    if (pj.contains("S")) p.s = matrix_from_json(pj["S"], "provenance.S");
    if (pj.contains("perturbation")) {
      const Json& d = pj["perturbation"];
      Perturbation pert;
      pert.element = static_cast<std::size_t>(seed_from_json(field(d, "element", "provenance.perturbation"),
                                                             "provenance.perturbation.element"));
      pert.row = int_from_json(field(d, "row", "provenance.perturbation"), "provenance.perturbation.row");
      pert.col = int_from_json(field(d, "col", "provenance.perturbation"), "provenance.perturbation.col");
      pert.delta = real_from_json(field(d, "delta", "provenance.perturbation"), "provenance.perturbation.delta");
      p.perturbation = pert;
    }
    inst.provenance = std::move(p);
  }
  return inst;
}

Factorization factorization_from_json(const Json& j, GroupSpec* spec) {
  *spec = group_from_json(field(j, "group", ""), "group");
  Factorization fact;
  fact.a = matrix_from_json(field(j, "A", ""), "A");
  fact.chars = characters_from_json(field(j, "chars", ""), "chars");
  fact.mu = character_from_json(field(j, "mu", ""), "mu");
  if (j.contains("residual")) fact.reconstruction_residual = real_from_json(j["residual"], "residual");
  if (j.contains("seed")) fact.seed = seed_from_json(j["seed"], "seed");
  if (fact.a.rows() != fact.a.cols() || static_cast<std::size_t>(fact.a.cols()) != fact.chars.size()) {
    throw ParseError("A must be square with one column per character");
  }
  try {
    validate(*spec, fact.mu);
    for (const auto& chi : fact.chars) validate(*spec, chi);
  } catch (const StructuralError& e) {
    throw ParseError(e.what());
  }
  return fact;
}

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(column),
                     line, column);
  }
}

}  // namespace mucos::cli
