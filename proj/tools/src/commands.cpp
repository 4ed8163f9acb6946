#include "mucos_cli/commands.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mucos/error.hpp"
#include "mucos_cli/json_io.hpp"

namespace mucos::cli {
namespace {

struct Failure {
  int code;
  Json error;
};

Failure failure(int code, const std::string& reason, const std::string& message) {
  return Failure{code, Json{{"reason", reason}, {"message", message}}};
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_commas(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

template <typename T>
T parse_number(const std::string& token, const char* what) {
  T value{};
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || token.empty()) {
    throw StructuralError(std::string("cannot parse ") + what + " '" + token + "'");
  }
  return value;
}

// "2", "1,0" or "[1,0]"; empty means the trivial character.
Character parse_mu(const GroupSpec& spec, std::string text) {
  text = trim(text);
  if (!text.empty() && text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
  if (trim(text).empty()) return trivial_character(spec);
  Character mu;
  for (const auto& tok : split_commas(text)) mu.exponents.push_back(parse_number<int>(tok, "mu exponent"));
  validate(spec, mu);
  return mu;
}

// "basis-k", a JSON array of numbers or [re, im] pairs, or comma separated reals.
CVector parse_xi(const std::string& raw, int dim) {
  const std::string text = trim(raw);
  CVector xi;
  if (text.rfind("basis-", 0) == 0) {
    const int k = parse_number<int>(text.substr(6), "basis index");
    if (k < 0 || k >= dim) throw StructuralError("basis index out of range for dimension " + std::to_string(dim));
    xi = CVector::Unit(dim, k);
    return xi;
  }
  if (!text.empty() && text.front() == '[') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error&) {
      throw StructuralError("--xi is not a valid JSON array");
    }
    if (!j.is_array()) throw StructuralError("--xi must be an array");
    xi.resize(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
      try {
        xi(static_cast<Eigen::Index>(i)) = complex_from_json(j[i], "xi[" + std::to_string(i) + "]");
      } catch (const ParseError& e) {
        throw StructuralError(e.what());
      }
    }
  } else {
    const auto toks = split_commas(text);
    xi.resize(static_cast<Eigen::Index>(toks.size()));
    for (std::size_t i = 0; i < toks.size(); ++i) xi(static_cast<Eigen::Index>(i)) = parse_number<double>(toks[i], "xi entry");
  }
  if (xi.size() != dim) {
    throw StructuralError("xi has " + std::to_string(xi.size()) + " entries, instance dimension is " + std::to_string(dim));
  }
  return xi;
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw failure(kUsage, "io-error", "cannot open '" + path + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

double max_entry_distance(const OperatorFunction& a, const OperatorFunction& b) {
  if (a.table.size() != b.table.size() || a.dim != b.dim) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (std::size_t i = 0; i < a.table.size(); ++i) d = std::max(d, (a.table[i] - b.table[i]).cwiseAbs().maxCoeff());
  return d;
}

struct Options {
  std::string group;
  int dim = 1;
  std::string mu;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::string kind = "hermitian";
  std::string mode = "hermitian";
  std::string xi = "basis-0";
  bool experimental = false;
  std::string input = "-";
};

int cmd_gen(const Options& o, std::ostream& out) {
  const GroupSpec spec = GroupSpec::parse(o.group);
  const Character mu = parse_mu(spec, o.mu);
  const Instance inst = generate_instance(spec, o.dim, mu, o.seed, parse_instance_kind(o.kind));
  out << to_json(inst).dump() << '\n';
  return kOk;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  const Instance inst = instance_from_json(parse_document(read_input(o.input, in)));
  const VerificationReport r = verify_mu_cosine(inst.phi, inst.mu, o.tol);
  Json report{{"group", inst.phi.spec.to_string()}, {"dim", inst.phi.dim}, {"mu", to_json(inst.mu)}};
  const Json clauses = to_json(r);
  for (const auto& [k, v] : clauses.items()) report[k] = v;
  if (inst.provenance) report["provenance_residual"] = max_entry_distance(regenerate(inst.phi.spec, inst.mu, *inst.provenance), inst.phi);
  out << report.dump() << '\n';
  return r.solution_passed() ? kOk : kMathFailure;
}

int cmd_factor(const Options& o, std::istream& in, std::ostream& out) {
  const Instance inst = instance_from_json(parse_document(read_input(o.input, in)));
  const GroupSpec& spec = inst.phi.spec;
  Json j;
  std::vector<Character> chars;
  if (o.mode == "hermitian") {
    const Factorization fact = factor_hermitian(inst.phi, inst.mu, o.tol);
    chars = fact.chars;
    j = to_json(fact);
  } else {
    if (!is_trivial(inst.mu) && !o.experimental) {
      throw failure(kUsage, "unsupported-mu", "bounded mode needs trivial mu (pass --experimental to try anyway)");
    }
    const BoundedFactorization b = is_trivial(inst.mu) ? factor_bounded(inst.phi, o.tol, o.seed)
                                                      : factor_bounded_experimental(inst.phi, inst.mu, o.tol, o.seed);
    // Emit A = S U so that Phi(x) = A diag A^{-1} holds for the input itself.
    Factorization emitted = b.fact;
    emitted.a = b.s * b.fact.a;
    emitted.reconstruction_residual = b.end_to_end_residual;
    emitted.seed = o.seed;
    chars = emitted.chars;
    j = to_json(emitted);
    j["S"] = to_json(b.s);
    j["U"] = to_json(b.fact.a);
    j["cond_S"] = b.cond_s;
    j["hermitian_residual"] = b.fact.reconstruction_residual;
  }
  Json head{{"group", spec.to_string()}, {"mode", o.mode}};
  for (const auto& [k, v] : j.items()) head[k] = v;
  if (inst.provenance) head["provenance_match"] = canonical_multiset(spec, inst.mu, inst.provenance->chars) == chars;
  out << head.dump() << '\n';
  return kOk;
}

int cmd_rebuild(const Options& o, std::istream& in, std::ostream& out) {
  GroupSpec spec;
  const Factorization fact = factorization_from_json(parse_document(read_input(o.input, in)), &spec);
  Instance inst{rebuild(spec, fact), fact.mu, std::nullopt};
  out << to_json(inst).dump() << '\n';
  return kOk;
}

int cmd_kernel(const Options& o, std::istream& in, std::ostream& out) {
  const Instance inst = instance_from_json(parse_document(read_input(o.input, in)));
  const CVector xi = parse_xi(o.xi, inst.phi.dim);
  const VerificationReport v = verify_mu_cosine(inst.phi, inst.mu, o.tol);
  if (!v.hermitian_passed) {
    Failure f = failure(kMathFailure, "not-hermitian", "positivity is only guaranteed for hermitian solutions");
    f.error["hermitian_residual"] = v.max_hermitian_residual;
    throw f;
  }
  const ScalarTable f = scalar_slice(inst.phi, xi);
  const KernelTable k = build_kernel(inst.phi.spec, inst.mu, f);
  const PsdReport psd = psd_check(k, o.tol);
  const BoundaryReport bd = kernel_boundary_checks(k, o.tol);
  Json report{{"group", inst.phi.spec.to_string()},
              {"mu", to_json(inst.mu)},
              {"f", to_json(f)},
              {"gram", to_json(k.gram)},
              {"psd", psd.is_psd},
              {"min_eigenvalue", psd.min_eigenvalue},
              {"rank", nullptr},
              {"rkhs_gram_residual", nullptr},
              {"boundary",
               {{"reflection", bd.reflection_residual},
                {"column", bd.column_residual},
                {"row", bd.row_residual},
                {"passed", bd.passed}}},
              {"regular_representation_residual", regular_representation_identity(k)},
              {"solution", v.solution_passed()},
              {"hermitian_residual", v.max_hermitian_residual}};
  if (psd.is_psd) {
    const RkhsRealization t = rkhs_realize(k, kDefaultRankTol, o.tol);
    report["rank"] = t.rank;
    report["rkhs_gram_residual"] = t.gram_residual;
  }
  out << report.dump() << '\n';
  return psd.is_psd && bd.passed ? kOk : kMathFailure;
}

int cmd_scalar(const Options& o, std::ostream& out) {
  const GroupSpec spec = GroupSpec::parse(o.group);
  const Character mu = parse_mu(spec, o.mu);
  const ScalarSolutionSet set = enumerate_scalar_solutions(spec, mu);
  Json sols = Json::array();
  for (std::size_t i = 0; i < set.solutions.size(); ++i) {
    Json chars = Json::array();
    for (const auto& chi : set.provenance[i]) chars.push_back(to_json(chi));
    sols.push_back(Json{{"f", to_json(set.solutions[i])}, {"chars", std::move(chars)}});
  }
  out << Json{{"group", spec.to_string()}, {"mu", to_json(mu)}, {"solutions", std::move(sols)}}.dump() << '\n';
  return kOk;
}

int report_failure(const Failure& f, std::ostream& out, std::ostream& err) {
  err << "mucos: " << f.error.value("message", std::string()) << '\n';
  out << Json{{"error", f.error}}.dump() << '\n';
  return f.code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, verify and factor operator-valued mu-cosine functions on finite abelian groups", "mucos"};
  app.require_subcommand(1);
  Options o;

  auto tol_opt = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "Verification tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  };
  auto input_opt = [&](CLI::App* sub) {
    sub->add_option("file", o.input, "Input JSON file, '-' for stdin")->capture_default_str();
  };

  CLI::App* gen = app.add_subcommand("gen", "Generate a seeded instance");
  gen->add_option("--group", o.group, "Group as n1xn2x...")->required();
  gen->add_option("--dim", o.dim, "Matrix dimension")->capture_default_str();
  gen->add_option("--mu", o.mu, "Exponents of mu, comma separated (default trivial)");
  gen->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
  gen->add_option("--kind", o.kind, "hermitian | conjugated | scalar | non-solution")->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "Check every clause of the equation");
  input_opt(verify);
  tol_opt(verify);

  CLI::App* factor = app.add_subcommand("factor", "Factor into characters");
  input_opt(factor);
  tol_opt(factor);
  factor->add_option("--mode", o.mode, "hermitian | bounded")
      ->capture_default_str()
      ->check(CLI::IsMember({"hermitian", "bounded"}));
  factor->add_option("--seed", o.seed, "Seed for the similarity search in bounded mode")->capture_default_str();
  factor->add_flag("--experimental", o.experimental, "Allow bounded mode with non-trivial mu");

  CLI::App* rebuild_cmd = app.add_subcommand("rebuild", "Rebuild an instance from a factorization");
  input_opt(rebuild_cmd);

  CLI::App* kernel = app.add_subcommand("kernel", "Kernel of a scalar slice <Phi(x) xi, xi>");
  input_opt(kernel);
  tol_opt(kernel);
  kernel->add_option("--xi", o.xi, "basis-k, JSON array, or comma separated reals")->capture_default_str();

  CLI::App* scalar = app.add_subcommand("scalar", "Enumerate scalar solutions");
  scalar->add_option("--group", o.group, "Group as n1xn2x...")->required();
  scalar->add_option("--mu", o.mu, "Exponents of mu, comma separated (default trivial)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    app.exit(e, err, err);
    return report_failure(failure(kUsage, "usage", e.what()), out, err);
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (verify->parsed()) return cmd_verify(o, in, out);
    if (factor->parsed()) return cmd_factor(o, in, out);
    if (rebuild_cmd->parsed()) return cmd_rebuild(o, in, out);
    if (kernel->parsed()) return cmd_kernel(o, in, out);
    if (scalar->parsed()) return cmd_scalar(o, out);
  } catch (const Failure& f) {
    return report_failure(f, out, err);
  } catch (const ParseError& e) {
    Failure f = failure(kUsage, "parse-error", e.what());
    if (e.line() > 0) {
      f.error["line"] = e.line();
      f.error["column"] = e.column();
    }
    return report_failure(f, out, err);
  } catch (const StructuralError& e) {
    return report_failure(failure(kUsage, "invalid-input", e.what()), out, err);
  } catch (const NotASolution& e) {
    Failure f = failure(kMathFailure, "not-a-solution", e.what());
    f.error["residual"] = e.residual();
    return report_failure(f, out, err);
  } catch (const ContractViolation& e) {
    Failure f = failure(kMathFailure, "contract-violation", e.what());
    f.error["measure"] = e.measure();
    return report_failure(f, out, err);
  } catch (const SingularMatrixError& e) {
    Failure f = failure(kMathFailure, "singular-matrix", e.what());
    f.error["condition"] = e.condition();
    return report_failure(f, out, err);
  } catch (const ConvergenceError& e) {
    Failure f = failure(kNoConvergence, "no-convergence", e.what());
    f.error["residual"] = e.residual();
    return report_failure(f, out, err);
  }
  return kUsage;
}

}  // namespace mucos::cli
