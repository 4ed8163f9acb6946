#include "mucos/instance.hpp"

#include <string>

#include "mucos/error.hpp"
#include "mucos/random.hpp"

namespace mucos {

std::string_view to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kHermitian: return "hermitian";
    case InstanceKind::kConjugated: return "conjugated";
    case InstanceKind::kScalar: return "scalar";
    case InstanceKind::kNonSolution: return "non-solution";
  }
  return "unknown";
}

InstanceKind parse_instance_kind(std::string_view name) {
  for (auto kind : {InstanceKind::kHermitian, InstanceKind::kConjugated, InstanceKind::kScalar,
                    InstanceKind::kNonSolution}) {
    if (to_string(kind) == name) return kind;
  }
  throw StructuralError("unknown instance kind '" + std::string(name) + "'");
}

Instance generate_instance(const GroupSpec& spec, int dim, const Character& mu, std::uint64_t seed, InstanceKind kind) {
  if (dim < 1) throw StructuralError("instance dimension must be >= 1");
  validate(spec, mu);
  Rng rng(seed);
  Provenance p;
  p.seed = seed;
  p.kind = kind;
  if (kind == InstanceKind::kScalar) {
    p.a = CMatrix::Identity(dim, dim);
    p.chars.assign(dim, random_character(spec, rng));
  } else {
    p.a = random_unitary(dim, rng);
    for (int k = 0; k < dim; ++k) p.chars.push_back(random_character(spec, rng));
  }
  if (kind == InstanceKind::kConjugated) p.s = random_invertible(dim, kConjugationMaxCond, rng);
  if (kind == InstanceKind::kNonSolution) {
    // At the identity the (e, e) pair alone gives residual 2d + 2d^2.
    p.perturbation = Perturbation{0, 0, 0, kPerturbation};
  }
  OperatorFunction phi = regenerate(spec, mu, p);
  return Instance{std::move(phi), mu, std::move(p)};
}

OperatorFunction regenerate(const GroupSpec& spec, const Character& mu, const Provenance& p) {
  OperatorFunction phi;
  if (p.kind == InstanceKind::kScalar) {
    const ScalarTable f = cosine_table(spec, p.chars.front(), mu);
    const auto n = static_cast<int>(p.chars.size());
    phi = OperatorFunction{spec, n, {}};
    for (const Complex& v : f) phi.table.push_back(v * CMatrix::Identity(n, n));
  } else {
    phi = build_from_multiplicative(build_multiplicative(spec, p.a, p.chars), mu);
  }
  if (p.s) phi = conjugate_solution(phi, *p.s);
  if (p.perturbation) {
    const Perturbation& d = *p.perturbation;
    if (d.element >= phi.table.size() || d.row >= phi.dim || d.col >= phi.dim) {
      throw StructuralError("perturbation outside the table");
    }
    phi.table[d.element](d.row, d.col) += d.delta;
  }
  return phi;
}

}  // namespace mucos
