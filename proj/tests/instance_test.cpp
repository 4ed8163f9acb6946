#include <gtest/gtest.h>

#include "mucos/error.hpp"
#include "mucos/factor.hpp"
#include "mucos/instance.hpp"
#include "mucos/numerics.hpp"

namespace mucos {
namespace {

double max_distance(const OperatorFunction& a, const OperatorFunction& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.table.size(); ++i) d = std::max(d, (a.table[i] - b.table[i]).cwiseAbs().maxCoeff());
  return d;
}

TEST(InstanceKindTest, NamesRoundTrip) {
  for (auto kind : {InstanceKind::kHermitian, InstanceKind::kConjugated, InstanceKind::kScalar,
                    InstanceKind::kNonSolution}) {
    EXPECT_EQ(parse_instance_kind(to_string(kind)), kind);
  }
  EXPECT_THROW(parse_instance_kind("bogus"), StructuralError);
  EXPECT_THROW(parse_instance_kind(""), StructuralError);
}

TEST(GenerateInstanceTest, RejectsBadArguments) {
  const GroupSpec g = GroupSpec::parse("4");
  EXPECT_THROW(generate_instance(g, 0, trivial_character(g), 1, InstanceKind::kHermitian), StructuralError);
  EXPECT_THROW(generate_instance(g, 2, Character{{4}}, 1, InstanceKind::kHermitian), StructuralError);
  EXPECT_THROW(generate_instance(g, 2, Character{{1, 0}}, 1, InstanceKind::kHermitian), StructuralError);
}

TEST(GenerateInstanceTest, SameSeedSameTable) {
  const GroupSpec g = GroupSpec::parse("3x4");
  const Character mu{{0, 2}};
  const auto a = generate_instance(g, 4, mu, 77, InstanceKind::kConjugated);
  const auto b = generate_instance(g, 4, mu, 77, InstanceKind::kConjugated);
  const auto c = generate_instance(g, 4, mu, 78, InstanceKind::kConjugated);
  EXPECT_EQ(max_distance(a.phi, b.phi), 0.0);
  EXPECT_GT(max_distance(a.phi, c.phi), 0.0);
}

TEST(GenerateInstanceTest, RegenerateReproducesTable) {
  const GroupSpec g = GroupSpec::parse("2x6");
  const Character mu{{1, 3}};
  for (auto kind : {InstanceKind::kHermitian, InstanceKind::kConjugated, InstanceKind::kScalar,
                    InstanceKind::kNonSolution}) {
    const auto inst = generate_instance(g, 3, mu, 5, kind);
    ASSERT_TRUE(inst.provenance);
    EXPECT_EQ(inst.provenance->kind, kind);
    EXPECT_LE(max_distance(regenerate(g, mu, *inst.provenance), inst.phi), 1e-12) << to_string(kind);
  }
}

TEST(GenerateInstanceTest, KindsHaveExpectedVerdicts) {
  const GroupSpec g = GroupSpec::parse("8");
  for (const Character& mu : {Character{{0}}, Character{{4}}}) {
    const auto herm = generate_instance(g, 5, mu, 11, InstanceKind::kHermitian);
    const auto rh = verify_mu_cosine(herm.phi, mu, 1e-9);
    EXPECT_TRUE(rh.solution_passed());
    EXPECT_TRUE(rh.hermitian_passed);

    const auto conj = generate_instance(g, 5, mu, 11, InstanceKind::kConjugated);
    EXPECT_TRUE(verify_mu_cosine(conj.phi, mu, 1e-9).solution_passed());
    EXPECT_LE(condition_number(*conj.provenance->s), kConjugationMaxCond * (1 + 1e-9));

    const auto scalar = generate_instance(g, 3, mu, 11, InstanceKind::kScalar);
    EXPECT_TRUE(verify_mu_cosine(scalar.phi, mu, 1e-9).solution_passed());
    for (const auto& m : scalar.phi.table) EXPECT_LE((m - m(0, 0) * CMatrix::Identity(3, 3)).norm(), 0.0);

    const auto bad = generate_instance(g, 5, mu, 11, InstanceKind::kNonSolution);
    EXPECT_FALSE(verify_mu_cosine(bad.phi, mu, 1e-9).solution_passed());
  }
}

TEST(GenerateInstanceTest, PerturbationResidualTracksDelta) {
  const char* specs[] = {"2", "5", "4x2", "3x3", "16"};
  for (const char* s : specs) {
    const GroupSpec g = GroupSpec::parse(s);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto bad = generate_instance(g, 4, trivial_character(g), seed, InstanceKind::kNonSolution);
      const double r = verify_mu_cosine(bad.phi, trivial_character(g), 1e-9).max_equation_residual;
      EXPECT_GE(r, 2.0 * kPerturbation) << s;
      EXPECT_LE(r, 2.0 * kPerturbation + 2.0 * kPerturbation * kPerturbation + 1e-12) << s;
    }
  }
}

TEST(GenerateInstanceTest, OffIdentityPerturbationBounds) {
  // Shifting Phi(a) by d costs at least d through (e, a) and at most 4d|Phi(a)| + 2d^2 through (a, a).
  const char* specs[] = {"2", "5", "4x2", "3x3", "16"};
  for (const char* s : specs) {
    const GroupSpec g = GroupSpec::parse(s);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto inst = generate_instance(g, 4, trivial_character(g), seed, InstanceKind::kHermitian);
      const double d = kPerturbation;
      inst.phi.table[1](0, 0) += d;
      const double r = verify_mu_cosine(inst.phi, trivial_character(g), 1e-9).max_equation_residual;
      EXPECT_GE(r, d - 1e-12) << s;
      EXPECT_LE(r, 4.0 * d + 2.0 * d * d + 1e-12) << s;
    }
  }
}

TEST(GenerateInstanceTest, TrivialGroup) {
  const GroupSpec g;
  const auto inst = generate_instance(g, 2, trivial_character(g), 1, InstanceKind::kHermitian);
  EXPECT_LE((inst.phi.at(std::size_t{0}) - CMatrix::Identity(2, 2)).norm(), 1e-15);
}

TEST(GenerateInstanceTest, FactorsBackToDrawnCharacters) {
  const GroupSpec g = GroupSpec::parse("12");
  const Character mu{{6}};
  const auto inst = generate_instance(g, 6, mu, 123, InstanceKind::kHermitian);
  const auto fact = factor_hermitian(inst.phi, mu, 1e-9);
  EXPECT_EQ(fact.chars, canonical_multiset(g, mu, inst.provenance->chars));
}

}  // namespace
}  // namespace mucos
