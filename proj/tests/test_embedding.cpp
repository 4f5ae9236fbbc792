#include <random>

#include <gtest/gtest.h>

#include "semilen/embedding.hpp"
#include "semilen/error.hpp"
#include "semilen/orbit.hpp"
#include "support/oracles.hpp"

namespace semilen {
namespace {

Assignment z2_assignment_20_9() {
  auto code = build_exact_code({{20, 1}, {9, 1}});
  // index 0 is the length-9 word, index 1 the length-20 word
  return Assignment(AssignmentMode::Exact, std::nullopt, code, {1, 0});
}

TEST(AssignEquivTest, SingletonTakesShortestWord) {
  std::vector<Length> l{1};
  auto asg = assign_equiv(l, m_code_for(l), Rational(9));
  EXPECT_EQ(asg.codeword(0).render(Alphabet::binary()), "b1b1b1b2b1b2b2b2");
}

TEST(AssignEquivTest, EmptyIntervalIsInfeasible) {
  std::vector<Length> l{8};
  try {
    assign_equiv(l, m_code_for(l), Rational(1));
    FAIL() << "expected InfeasibleAssignment";
  } catch (const InfeasibleAssignment& e) {
    EXPECT_EQ(e.element(), 0u);
    EXPECT_EQ(e.lower(), 8u);
    EXPECT_EQ(e.upper(), Rational(8));
  }
}

TEST(AssignEquivTest, CyclicGroupExample) {
  auto z2 = FiniteSemigroup::cyclic_group(2);
  std::vector<Length> l{8, 9};
  auto asg = assign_equiv(z2, l, m_code_for(l), Rational(2));
  EXPECT_EQ(asg.codeword(0).render(Alphabet::binary()), "b1b1b1b2b1b2b2b2");
  EXPECT_EQ(asg.codeword(1).render(Alphabet::binary()), "b1b1b1b2b1b1b2b2b2");
}

TEST(AssignEquivTest, DefaultDoublesUntilFeasible) {
  std::vector<Length> l{1, 1, 1};
  auto asg = assign_equiv(l, m_code_for(l));
  ASSERT_TRUE(asg.d());
  // three words of length <= 10 exist, so 16 suffices
  EXPECT_EQ(*asg.d(), Rational(16));
}

TEST(AssignEquivTest, D1IsAPrecondition) {
  auto z2 = FiniteSemigroup::cyclic_group(2);
  std::vector<Length> l{5, 1};
  EXPECT_THROW(assign_equiv(z2, l, m_code_for(l), Rational(4)), InputError);
  EXPECT_THROW(assign_exact(z2, l), InputError);
}

TEST(AssignEquivProperty, LengthsStayInWindowAndDistinct) {
  std::mt19937_64 rng(testing::test_seed(31));
  std::uniform_int_distribution<Length> pick(1, 20);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Length> l(1 + trial % 8);
    for (auto& v : l) v = pick(rng);
    auto asg = assign_equiv(l, m_code_for(l), Rational(16));
    for (Element g = 0; g < l.size(); ++g) {
      EXPECT_GE(asg.codeword(g).length(), l[g]);
      EXPECT_LT(asg.codeword(g).length(), 16 * l[g]);
    }
    EXPECT_EQ(asg.image().size(), l.size());
  }
}

TEST(AssignExactTest, LengthsMatch) {
  auto z2 = FiniteSemigroup::cyclic_group(2);
  std::vector<Length> l{8, 9};
  auto asg = assign_exact(z2, l);
  EXPECT_EQ(asg.codeword(0).render(asg.code().alphabet()), "s1i1i1i1i1i1i1e1");
  EXPECT_EQ(asg.codeword(1).render(asg.code().alphabet()), "s1i1i1i1i1i1i1i1e1");
  EXPECT_EQ(asg.codeword_lengths(), l);
}

TEST(AssignExactTest, EqualLengthsGetDistinctWordsInElementOrder) {
  std::vector<Length> l{2, 1, 2, 2};
  auto asg = assign_exact(l);
  const auto& a = asg.code().alphabet();
  EXPECT_EQ(asg.codeword(0).render(a), "s1e1");
  EXPECT_EQ(asg.codeword(1).render(a), "d1");
  EXPECT_EQ(asg.codeword(2).render(a), "s1e2");
  EXPECT_EQ(asg.codeword(3).render(a), "s1e3");
}

// --- presentation ----------------------------------------------------------

TEST(PresentationTest, CyclicGroupRelations) {
  auto z2 = FiniteSemigroup::cyclic_group(2);
  std::vector<Length> l{1, 2};
  auto asg = assign_exact(z2, l);
  auto p = build_presentation(z2, asg);
  ASSERT_EQ(p.relations.size(), 4u);
  const auto& a = p.alphabet;
  // (g, g) -> e
  const auto& gg = p.relations[3];
  EXPECT_EQ(gg.product, 0u);
  EXPECT_EQ(gg.lhs.render(a), "d1");
  EXPECT_EQ(gg.rhs.render(a), "s1e1s1e1");
  EXPECT_EQ(p.max_lhs_length(), 2u);
}

TEST(PresentationTest, LeftZeroOrdersPairsRowMajor) {
  auto lz = FiniteSemigroup::left_zero(2);
  std::vector<Length> l{3, 3};
  auto asg = assign_exact(lz, l);
  auto p = build_presentation(lz, asg);
  std::vector<std::tuple<Element, Element, Element>> got;
  for (const auto& r : p.relations) got.emplace_back(r.left, r.right, r.product);
  EXPECT_EQ(got, (std::vector<std::tuple<Element, Element, Element>>{{0, 0, 0}, {0, 1, 0}, {1, 0, 1}, {1, 1, 1}}));
  for (const auto& r : p.relations) EXPECT_EQ(r.rhs, asg.codeword(r.left) + asg.codeword(r.right));
}

// --- length in H -----------------------------------------------------------

TEST(LengthInHTest, RelaxationShortcut) {
  auto z2 = FiniteSemigroup::cyclic_group(2);
  auto t = relax_lengths(z2, {20, 9});
  EXPECT_EQ(t.cost, (std::vector<Length>{18, 9}));
  EXPECT_GE(t.sweeps, 2u);
}

TEST(LengthInHTest, ExactModeReproducesL) {
  auto t2 = FiniteSemigroup::full_transformation_monoid_2();
  std::vector<Length> l{3, 4, 4, 5};
  ASSERT_TRUE(check_d1(t2, l).empty());
  auto asg = assign_exact(t2, l);
  auto table = length_in_h(t2, asg);
  EXPECT_EQ(table.cost, l);
  auto report = verify_theorem1(l, asg, table);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.constants.lower, Rational(1));
  EXPECT_EQ(report.constants.upper, Rational(1));
}

TEST(LengthInHTest, TamperedTableFails) {
  auto z2 = FiniteSemigroup::cyclic_group(2);
  std::vector<Length> l{8, 9};
  auto asg = assign_exact(z2, l);
  auto table = length_in_h(z2, asg);
  table.cost[1] = 10;
  auto report = verify_theorem1(l, asg, table);
  ASSERT_FALSE(report.passed());
  EXPECT_EQ(report.failure->element, 1u);
  EXPECT_EQ(report.failure->got, 10u);
}

TEST(LengthInHTest, EquivModeWithinWindow) {
  auto z2 = FiniteSemigroup::cyclic_group(2);
  std::vector<Length> l{8, 9};
  auto asg = assign_equiv(z2, l, m_code_for(l), Rational(2));
  auto table = length_in_h(z2, asg);
  EXPECT_EQ(table.cost, (std::vector<Length>{8, 9}));
  EXPECT_TRUE(verify_theorem1(l, asg, table).passed());
}

// The fixpoint agrees with an explicit minimum over all factor sequences.
TEST(LengthInHProperty, MatchesSequenceEnumeration) {
  std::mt19937_64 rng(testing::test_seed(32));
  std::uniform_int_distribution<Length> pick(1, 30);
  for (int trial = 0; trial < 200; ++trial) {
    auto s = FiniteSemigroup::from_table(testing::random_associative_table(1 + trial % 3, rng));
    std::vector<Length> initial(s.order());
    for (auto& v : initial) v = pick(rng);
    auto t = relax_lengths(s, initial);
    // any optimal sequence has at most 30 factors since each costs >= 1
    auto best = testing::factorization_minimum(s, initial, 30);
    EXPECT_EQ(t.cost, best);
  }
}

// --- orbits ----------------------------------------------------------------

TEST(OrbitTest, SingletonSaturatesAtTwiceTheCodeword) {
  auto one = FiniteSemigroup::cyclic_group(1);
  std::vector<Length> l{1};
  auto asg = assign_equiv(one, l, m_code_for(l), Rational(9));
  auto p = build_presentation(one, asg);
  auto full = xi_orbit(p, asg.codeword(0), {17});
  EXPECT_EQ(full.words.size(), 2u);
  EXPECT_TRUE(full.saturated);
  EXPECT_EQ(full.min_word, asg.codeword(0));

  auto cut = xi_orbit(p, asg.codeword(0), {8});
  EXPECT_EQ(cut.words.size(), 1u);
  EXPECT_FALSE(cut.saturated);
  EXPECT_GT(cut.dropped_over_length, 0u);
}

TEST(OrbitTest, StateCapIsReported) {
  auto z2 = FiniteSemigroup::cyclic_group(2);
  auto asg = z2_assignment_20_9();
  auto p = build_presentation(z2, asg);
  auto r = xi_orbit(p, asg.codeword(0), {40, 2});
  EXPECT_TRUE(r.state_cap_hit);
  EXPECT_FALSE(r.saturated);
  EXPECT_EQ(r.words.size(), 2u);
}

TEST(OrbitTest, OracleFindsShortcut) {
  auto z2 = FiniteSemigroup::cyclic_group(2);
  auto asg = z2_assignment_20_9();
  auto p = build_presentation(z2, asg);
  auto r = oracle_length(p, asg, 0, {40, 1'000'000});
  EXPECT_EQ(r.length, 18u);
  EXPECT_TRUE(r.saturated);
  EXPECT_EQ(r.length, length_in_h(z2, asg).cost[0]);
}

TEST(OrbitTest, LemmaAndGammaHoldOnCyclicGroup) {
  auto z3 = FiniteSemigroup::cyclic_group(3);
  std::vector<Length> l{2, 1, 2};
  auto asg = assign_exact(z3, l);
  auto p = build_presentation(z3, asg);
  auto caps = OrbitCaps::defaults_for(asg);
  auto orbits = element_orbits(p, asg, caps);
  for (const auto& o : orbits) {
    EXPECT_TRUE(o.saturated);
    EXPECT_FALSE(verify_lemma_lw(o, asg.code()));
  }
  EXPECT_FALSE(verify_gamma_injective(z3, asg, orbits));
}

TEST(OrbitTest, LemmaFlagsWordOutsideTheCode) {
  auto one = FiniteSemigroup::cyclic_group(1);
  std::vector<Length> l{1};
  auto asg = assign_equiv(one, l, m_code_for(l), Rational(9));
  auto p = build_presentation(one, asg);
  auto orbit = xi_orbit(p, asg.codeword(0), {17});
  Word stray{0, 1};
  orbit.words.push_back(stray);
  auto bad = verify_lemma_lw(orbit, asg.code());
  ASSERT_TRUE(bad);
  EXPECT_EQ(*bad, stray);
}

TEST(OrbitTest, GammaFlagsWrongProduct) {
  auto z2 = FiniteSemigroup::cyclic_group(2);
  std::vector<Length> l{1, 2};
  auto asg = assign_exact(z2, l);
  auto p = build_presentation(z2, asg);
  auto orbits = element_orbits(p, asg, OrbitCaps::defaults_for(asg));
  // pretend X_g X_g landed in the orbit of g
  orbits[1].words.push_back(asg.codeword(1) + asg.codeword(1));
  auto breach = verify_gamma_injective(z2, asg, orbits);
  ASSERT_TRUE(breach);
  EXPECT_EQ(breach->element, 1u);
  EXPECT_EQ(breach->product, 0u);
}

// Orbit minima agree with the relaxed table on random small instances.
TEST(OrbitProperty, OracleAgreesWithTable) {
  std::mt19937_64 rng(testing::test_seed(33));
  for (int trial = 0; trial < 40; ++trial) {
    auto s = FiniteSemigroup::from_table(testing::random_associative_table(1 + trial % 3, rng));
    auto l = testing::random_d1_lengths(s, 1, 4, rng);
    auto asg = assign_exact(s, l);
    auto p = build_presentation(s, asg);
    auto caps = OrbitCaps::defaults_for(asg);
    auto table = length_in_h(s, asg);
    for (Element g = 0; g < s.order(); ++g) {
      auto r = oracle_length(p, asg, g, caps);
      EXPECT_TRUE(r.saturated);
      EXPECT_EQ(r.length, table.cost[g]);
    }
  }
}

}  // namespace
}  // namespace semilen
