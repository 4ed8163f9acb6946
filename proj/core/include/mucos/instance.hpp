#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mucos/cosine.hpp"

namespace mucos {

enum class InstanceKind { kHermitian, kConjugated, kScalar, kNonSolution };

std::string_view to_string(InstanceKind kind);
// Throws StructuralError for unknown names.
InstanceKind parse_instance_kind(std::string_view name);

inline constexpr double kConjugationMaxCond = 100.0;
inline constexpr double kPerturbation = 0.1;

struct Perturbation {
  std::size_t element = 0;
  int row = 0;
  int col = 0;
  double delta = kPerturbation;
};

// Everything needed to regenerate an instance's table.
struct Provenance {
  std::uint64_t seed = 0;
  InstanceKind kind = InstanceKind::kHermitian;
  CMatrix a;                     // unitary generator basis
  std::vector<Character> chars;  // generator characters, as drawn
  std::optional<CMatrix> s;      // post-conjugation (conjugated kind)
  std::optional<Perturbation> perturbation;  // non-solution kind
};

struct Instance {
  OperatorFunction phi;
  Character mu;
  std::optional<Provenance> provenance;
};

// hermitian:    Phi = (M + mu M~)/2 with M = A diag(chars) A*, A Haar unitary
// conjugated:   S Phi S^{-1} for the hermitian Phi, cond(S) <= 100
// scalar:       f(x) I with f = (chi + mu chi~)/2 for one random chi
// non-solution: hermitian instance with Phi(e)(0,0) shifted by 0.1
Instance generate_instance(const GroupSpec& spec, int dim, const Character& mu, std::uint64_t seed, InstanceKind kind);

OperatorFunction regenerate(const GroupSpec& spec, const Character& mu, const Provenance& provenance);

}  // namespace mucos
