#include "jacobipoly/oracle.hpp"

#include <gtest/gtest.h>

#include <set>

#include "jacobipoly/parse.hpp"
#include "jacobipoly/report.hpp"

namespace jacobipoly {
namespace {

const VarList& kXY = bivariate_vars();

template <CoefficientRing Ring>
std::set<std::string> printed(const std::vector<MultiPoly<Ring>>& polys) {
  std::set<std::string> out;
  for (const auto& p : polys) out.insert(to_string(p));
  return out;
}

TEST(EnumSpace, Shape) {
  EnumSpace<PrimeField> s(PrimeField(3), 1);
  EXPECT_EQ(s.candidate_count(), 81u);
  ASSERT_EQ(s.monomials().size(), 4u);
  EXPECT_EQ(s.monomials().front(), (Monomial{1, 1}));
  EXPECT_EQ(s.monomials().back(), (Monomial{0, 0}));
  EXPECT_EQ(to_string(s.candidate(1)), "1");
  EXPECT_EQ(to_string(s.candidate(80)), "2*x*y+2*x+2*y+2");

  EnumSpace<IntegerRing> z(IntegerRing{}, 1, 4);
  EXPECT_EQ(z.candidate_count(), 6561u);
  EXPECT_EQ(to_string(z.candidate(0)), "-4*x*y-4*x-4*y-4");
}

TEST(EnumSpace, IndexRoundTrip) {
  EnumSpace<PrimeField> s(PrimeField(2), 2);
  for (std::uint64_t i = 0; i < s.candidate_count(); ++i) EXPECT_EQ(s.index_of(s.candidate(i)), i);
  EXPECT_FALSE(s.index_of(parse_poly("x^3", kXY, PrimeField(2))).has_value());
  EXPECT_FALSE(s.index_of(parse_poly("x", kXY, PrimeField(3))).has_value());
  EnumSpace<IntegerRing> z(IntegerRing{}, 1, 2);
  EXPECT_FALSE(z.index_of(parse_poly("3*x", kXY, IntegerRing{})).has_value());
  EXPECT_EQ(z.candidate(*z.index_of(parse_poly("-2*x+y", kXY, IntegerRing{}))),
            parse_poly("-2*x+y", kXY, IntegerRing{}));
}

TEST(EnumSpace, Limits) {
  EXPECT_THROW(EnumSpace<PrimeField>(PrimeField(5), 3), BudgetExceeded);
  EXPECT_THROW(EnumSpace<PrimeField>(PrimeField(3), 2, 1, 1000), BudgetExceeded);
  EXPECT_NO_THROW(EnumSpace<PrimeField>(PrimeField(3), 2, 1, 19683));
  EXPECT_THROW(EnumSpace<UnivariateExtension>(UnivariateExtension(PrimeField(3), "t"), 1), UnsupportedSpec);
  EXPECT_THROW(EnumSpace<IntegerRing>(IntegerRing{}, 1, 0), Error);
}

TEST(Enumerate, F2LinearHasOnlyZero) {
  auto r = enumerate_solutions(EnumSpace<PrimeField>(PrimeField(2), 1), EquationForm::J1, 1);
  EXPECT_EQ(printed(r.solutions), (std::set<std::string>{"0"}));
  EXPECT_TRUE(r.agreement);
  EXPECT_TRUE(degree_bound_report(r));
}

TEST(Enumerate, F3J5HasOnlyZero) {
  auto r = enumerate_solutions(EnumSpace<PrimeField>(PrimeField(3), 1), EquationForm::J5, 1);
  EXPECT_EQ(printed(r.solutions), (std::set<std::string>{"0"}));
  EXPECT_TRUE(r.agreement);
}

TEST(Enumerate, IntegerBox) {
  auto r = enumerate_solutions(EnumSpace<IntegerRing>(IntegerRing{}, 1, 4), EquationForm::J1, 1);
  EXPECT_EQ(printed(r.solutions), (std::set<std::string>{"0", "-2*x+4*y"}));
  EXPECT_TRUE(r.agreement);
  auto r2 = enumerate_solutions(EnumSpace<IntegerRing>(IntegerRing{}, 1, 4), EquationForm::J2, 1);
  EXPECT_EQ(printed(r2.solutions), (std::set<std::string>{"0", "4*x-2*y"}));
  EXPECT_TRUE(r2.agreement);
}

TEST(Enumerate, F3LinearFamilies) {
  auto r = enumerate_solutions(EnumSpace<PrimeField>(PrimeField(3), 1), EquationForm::J1, 1);
  EXPECT_EQ(printed(r.solutions),
            (std::set<std::string>{"0", "1", "2", "x+y", "x+y+1", "x+y+2", "x*y", "x*y+x+y",
                                   "x*y+2*x+2*y+2", "2*x*y", "2*x*y+x+y", "2*x*y+2*x+2*y+1"}));
  EXPECT_TRUE(r.agreement);
}

TEST(Enumerate, F5LinearSolutionsHaveShapeBxPlusCy) {
  auto r = enumerate_solutions(EnumSpace<PrimeField>(PrimeField(5), 1), EquationForm::J1, 1);
  EXPECT_TRUE(r.agreement);
  PrimeField f(5);
  for (const auto& p : r.solutions) {
    EXPECT_EQ(p.coeff(Monomial{1, 1}), 0u);
    EXPECT_EQ(p.coeff(Monomial{0, 0}), 0u);
    auto b = p.coeff(Monomial{1, 0}), c = p.coeff(Monomial{0, 1});
    EXPECT_EQ(f.add(f.add(f.mul(b, b), f.mul(b, c)), c), 0u);
  }
  // One C for every B with 1 + B invertible, plus nothing for B = -1.
  EXPECT_EQ(r.solutions.size(), 4u);
}

TEST(Enumerate, F2QuadraticHasNoQuadraticTerms) {
  EnumSpace<PrimeField> s(PrimeField(2), 2);
  auto r = enumerate_solutions(s, EquationForm::J1, 1);
  EXPECT_TRUE(r.agreement);
  EXPECT_TRUE(degree_bound_report(r));
  for (const auto& p : r.solutions) EXPECT_LE(deg(p), 1);
  EXPECT_TRUE(cross_check_families(s, 1));
}

TEST(Enumerate, SwappedFormsMirrorEachOther) {
  EnumSpace<PrimeField> s(PrimeField(3), 1);
  auto j1 = enumerate_solutions(s, EquationForm::J1, 1);
  auto j2 = enumerate_solutions(s, EquationForm::J2, 1);
  std::vector<MultiPoly<PrimeField>> swapped;
  for (const auto& p : j1.solutions) swapped.push_back(swap(p));
  EXPECT_EQ(printed(j2.solutions), printed(swapped));
  auto j6 = enumerate_solutions(s, EquationForm::J6, 1);
  EXPECT_EQ(printed(j6.solutions), (std::set<std::string>{"0"}));
}

TEST(Enumerate, VacuousDegreeBound) {
  EnumReport<PrimeField> r{EquationForm::J5, EnumSpace<PrimeField>(PrimeField(2), 1), {}, true, -1, -1};
  EXPECT_TRUE(degree_bound_report(r));
  r.max_deg_x = 2;
  EXPECT_FALSE(degree_bound_report(r));
}

TEST(Enumerate, IndependentOfThreadCount) {
  EnumSpace<PrimeField> s(PrimeField(3), 1);
  for (auto form : kAllForms) {
    auto a = enumerate_solutions(s, form, 1);
    auto b = enumerate_solutions(s, form, 3);
    ASSERT_EQ(a.solutions.size(), b.solutions.size());
    for (std::size_t i = 0; i < a.solutions.size(); ++i) EXPECT_EQ(a.solutions[i], b.solutions[i]);
    EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
    EXPECT_EQ(to_json(a).dump(), to_json(enumerate_solutions(s, form, 2)).dump());
  }
}

TEST(Enumerate, PredictionsComeFromParametersAlone) {
  EnumSpace<PrimeField> s(PrimeField(3), 1);
  auto members = family_members(s);
  EXPECT_EQ(members.size(), 12u);
  for (const auto& p : members) EXPECT_TRUE(satisfies(p, EquationForm::J1)) << to_string(p);
  EXPECT_EQ(predicted_solutions(s, EquationForm::J5).size(), 1u);
}

TEST(Report, JsonFields) {
  auto r = enumerate_solutions(EnumSpace<IntegerRing>(IntegerRing{}, 1, 4), EquationForm::J1, 1);
  auto j = to_json(r);
  EXPECT_EQ(j["ring"], "int");
  EXPECT_EQ(j["form"], "j1");
  EXPECT_EQ(j["max_deg"], 1);
  EXPECT_EQ(j["coeff_bound"], 4);
  EXPECT_EQ(j["candidates"], 6561);
  EXPECT_EQ(j["solution_count"], 2);
  EXPECT_EQ(j["agreement"], true);
  EXPECT_EQ(j["degree_bound"], true);
  EXPECT_FALSE(j.contains("elapsed_ms"));
}

}  // namespace
}  // namespace jacobipoly
