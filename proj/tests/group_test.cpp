#include <gtest/gtest.h>

#include <complex>
#include <set>

#include "mucos/error.hpp"
#include "mucos/group.hpp"

namespace mucos {
namespace {

GroupElement el(std::initializer_list<int> c) { return GroupElement{std::vector<int>(c)}; }
Character ch(std::initializer_list<int> m) { return Character{std::vector<int>(m)}; }

TEST(GroupSpecTest, ParsesProducts) {
  const auto g = GroupSpec::parse("4x2");
  EXPECT_EQ(g.moduli(), (std::vector<int>{4, 2}));
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(g.to_string(), "4x2");
  EXPECT_EQ(GroupSpec::parse("1").order(), 1u);
}

TEST(GroupSpecTest, RejectsMalformedStrings) {
  for (const char* bad : {"", "x", "4x", "x4", "4y2", "0", "-3", "4x0", "2.5"}) {
    EXPECT_THROW(GroupSpec::parse(bad), StructuralError) << bad;
  }
}

TEST(GroupTest, AddExamples) {
  const GroupSpec z4 = GroupSpec::parse("4");
  EXPECT_EQ(add(z4, el({1}), el({3})), el({0}));
  const GroupSpec z4z2 = GroupSpec::parse("4x2");
  EXPECT_EQ(add(z4z2, el({3, 1}), el({2, 1})), el({1, 0}));
  for (const auto& x : enumerate_elements(z4z2)) EXPECT_EQ(add(z4z2, x, identity(z4z2)), x);
}

TEST(GroupTest, NegExamples) {
  const GroupSpec z4 = GroupSpec::parse("4");
  EXPECT_EQ(neg(z4, el({1})), el({3}));
  EXPECT_EQ(neg(z4, el({0})), el({0}));
  EXPECT_EQ(neg(GroupSpec::parse("3x2"), el({2, 1})), el({1, 1}));
}

TEST(GroupTest, DimensionMismatchIsStructural) {
  const GroupSpec z4z2 = GroupSpec::parse("4x2");
  EXPECT_THROW(add(z4z2, el({1}), el({1, 0})), StructuralError);
  EXPECT_THROW(neg(z4z2, el({1, 0, 0})), StructuralError);
  EXPECT_THROW(char_eval(z4z2, ch({1}), el({1, 0})), StructuralError);
  EXPECT_THROW(add(z4z2, el({4, 0}), el({1, 0})), StructuralError);
}

TEST(GroupTest, EnumerationIsLexicographic) {
  EXPECT_EQ(enumerate_elements(GroupSpec::parse("2")), (std::vector<GroupElement>{el({0}), el({1})}));
  EXPECT_EQ(enumerate_elements(GroupSpec::parse("2x2")),
            (std::vector<GroupElement>{el({0, 0}), el({0, 1}), el({1, 0}), el({1, 1})}));
  EXPECT_EQ(enumerate_elements(GroupSpec::parse("1")), (std::vector<GroupElement>{el({0})}));

  const GroupSpec g = GroupSpec::parse("3x4x2");
  const auto all = enumerate_elements(g);
  ASSERT_EQ(all.size(), g.order());
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(index_of(g, all[i]), i);
}

TEST(GroupTest, CharacterValues) {
  const GroupSpec z4 = GroupSpec::parse("4");
  EXPECT_EQ(char_eval(z4, ch({1}), el({1})), Complex(0.0, 1.0));
  EXPECT_EQ(char_eval(z4, ch({2}), el({3})), Complex(-1.0, 0.0));
  const GroupSpec g = GroupSpec::parse("5x3");
  for (const auto& chi : enumerate_dual(g)) EXPECT_EQ(char_eval(g, chi, identity(g)), Complex(1.0, 0.0));
}

TEST(GroupTest, DualExamples) {
  const GroupSpec z2 = GroupSpec::parse("2");
  const auto dual2 = enumerate_dual(z2);
  ASSERT_EQ(dual2.size(), 2u);
  EXPECT_EQ(char_table(z2, dual2[1]), (ScalarTable{1.0, -1.0}));

  const GroupSpec z3 = GroupSpec::parse("3");
  for (const auto& chi : enumerate_dual(z3)) {
    for (const Complex& v : char_table(z3, chi)) EXPECT_NEAR(std::abs(std::pow(v, 3) - 1.0), 0.0, 1e-14);
  }

  const GroupSpec klein = GroupSpec::parse("2x2");
  const auto dual = enumerate_dual(klein);
  ASSERT_EQ(dual.size(), 4u);
  std::set<std::vector<double>> tables;
  for (const auto& chi : dual) {
    std::vector<double> values;
    for (const Complex& v : char_table(klein, chi)) {
      EXPECT_EQ(v.imag(), 0.0);
      EXPECT_EQ(std::abs(v.real()), 1.0);
      values.push_back(v.real());
    }
    tables.insert(values);
  }
  EXPECT_EQ(tables.size(), 4u);
}

TEST(GroupTest, MultiplicativeScalarExamples) {
  const GroupSpec z4 = GroupSpec::parse("4");
  EXPECT_TRUE(is_multiplicative_scalar(z4, {1.0, Complex(0, 1), -1.0, Complex(0, -1)}, 1e-12));
  EXPECT_FALSE(is_multiplicative_scalar(z4, {1.0, 0.0, -1.0, 0.0}, 1e-12));
  EXPECT_TRUE(is_multiplicative_scalar(GroupSpec::parse("2"), {1.0, 1.0}, 1e-12));
  EXPECT_THROW(is_multiplicative_scalar(z4, {1.0, 1.0}, 1e-12), StructuralError);
}

const char* kSpecs[] = {"1", "2", "3", "4", "2x2", "6", "3x2", "8", "2x4", "12", "4x3", "2x2x3", "16", "4x4",
                        "2x2x2x2", "5x5", "8x8", "4x4x4", "2x2x2x2x2x2", "7x9"};

TEST(GroupPropertyTest, DualOrthogonality) {
  for (const char* s : kSpecs) {
    const GroupSpec g = GroupSpec::parse(s);
    if (g.order() > 64) continue;
    const auto dual = enumerate_dual(g);
    ASSERT_EQ(dual.size(), g.order());
    std::vector<ScalarTable> tables;
    for (const auto& chi : dual) tables.push_back(char_table(g, chi));
    for (std::size_t a = 0; a < dual.size(); ++a) {
      for (std::size_t b = 0; b < dual.size(); ++b) {
        Complex sum = 0.0;
        for (std::size_t x = 0; x < g.order(); ++x) sum += tables[a][x] * std::conj(tables[b][x]);
        const double expected = a == b ? static_cast<double>(g.order()) : 0.0;
        EXPECT_NEAR(std::abs(sum - expected), 0.0, 1e-10) << s;
      }
    }
  }
}

TEST(GroupPropertyTest, EveryCharacterIsMultiplicativeAndUnimodular) {
  for (const char* s : kSpecs) {
    const GroupSpec g = GroupSpec::parse(s);
    if (g.order() > 64) continue;
    for (const auto& chi : enumerate_dual(g)) {
      const ScalarTable t = char_table(g, chi);
      EXPECT_TRUE(is_multiplicative_scalar(g, t, 1e-12)) << s;
      for (const Complex& v : t) EXPECT_NEAR(std::abs(v), 1.0, 1e-15);
    }
  }
}

TEST(GroupPropertyTest, GroupLawExhaustive) {
  for (const char* s : kSpecs) {
    const GroupSpec g = GroupSpec::parse(s);
    const auto all = enumerate_elements(g);
    for (const auto& x : all) {
      EXPECT_EQ(neg(g, neg(g, x)), x);
      EXPECT_EQ(add(g, x, neg(g, x)), identity(g));
    }
    if (g.order() > 16) continue;
    for (const auto& a : all) {
      for (const auto& b : all) {
        EXPECT_EQ(add(g, a, b), add(g, b, a));
        for (const auto& c : all) EXPECT_EQ(add(g, add(g, a, b), c), add(g, a, add(g, b, c)));
      }
    }
  }
}

TEST(GroupPropertyTest, IndexTablesAgreeWithElementLaw) {
  const GroupSpec g = GroupSpec::parse("4x3x2");
  const auto t = index_tables(g);
  for (std::size_t i = 0; i < g.order(); ++i) {
    EXPECT_EQ(element_at(g, t.neg(i)), neg(g, element_at(g, i)));
    for (std::size_t j = 0; j < g.order(); ++j) {
      EXPECT_EQ(element_at(g, t.add(i, j)), add(g, element_at(g, i), element_at(g, j)));
      EXPECT_EQ(element_at(g, t.sub(i, j)), sub(g, element_at(g, i), element_at(g, j)));
    }
  }
}

}  // namespace
}  // namespace mucos
