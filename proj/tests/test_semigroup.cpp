#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "semilen/error.hpp"
#include "semilen/semigroup.hpp"
#include "support/oracles.hpp"

namespace semilen {
namespace {

TEST(ValidateTest, CyclicGroupIsAssociative) {
  EXPECT_FALSE(validate_semigroup({{0, 1}, {1, 0}}));
}

TEST(ValidateTest, ReportsFirstViolatingTriple) {
  auto v = validate_semigroup({{1, 0}, {0, 0}});
  ASSERT_TRUE(v);
  EXPECT_EQ(*v, (AssociativityViolation{0, 0, 1}));
}

TEST(ValidateTest, MalformedTablesAreInputErrors) {
  EXPECT_THROW(validate_semigroup({}), InputError);
  EXPECT_THROW(validate_semigroup({{0, 1}, {1}}), InputError);
  EXPECT_THROW(validate_semigroup({{0, 2}, {1, 0}}), InputError);
  EXPECT_THROW(FiniteSemigroup::from_table({{1, 0}, {0, 0}}), InputError);
}

TEST(ValidateProperty, AgreesWithNaiveOnRandomTables) {
  std::mt19937_64 rng(testing::test_seed(21));
  for (int trial = 0; trial < 3000; ++trial) {
    std::size_t n = 1 + trial % 3;
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    CayleyTable t(n, std::vector<Element>(n));
    for (auto& row : t)
      for (auto& v : row) v = pick(rng);
    auto v = validate_semigroup(t);
    ASSERT_EQ(!v.has_value(), testing::naive_associative(t));
    if (v) EXPECT_NE(t[t[v->x][v->y]][v->z], t[v->x][t[v->y][v->z]]);
  }
}

// Changing one entry of an associative table is caught exactly when the
// naive triple loop says so.
TEST(ValidateProperty, SingleEntryMutations) {
  std::mt19937_64 rng(testing::test_seed(22));
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + trial % 2;
    auto t = testing::random_associative_table(n, rng);
    std::uniform_int_distribution<std::size_t> cell(0, n - 1);
    std::uniform_int_distribution<Element> value(0, static_cast<Element>(n - 1));
    auto mutated = t;
    mutated[cell(rng)][cell(rng)] = value(rng);
    EXPECT_EQ(!validate_semigroup(mutated).has_value(), testing::naive_associative(mutated));
  }
}

TEST(SemigroupTest, StandardFamilies) {
  auto z3 = FiniteSemigroup::cyclic_group(3);
  EXPECT_EQ(z3.product(2, 2), 1u);
  auto lz = FiniteSemigroup::left_zero(3);
  EXPECT_EQ(lz.product(1, 2), 1u);
  auto rz = FiniteSemigroup::right_zero(3);
  EXPECT_EQ(rz.product(1, 2), 2u);
  for (const auto& s : {z3, lz, rz, FiniteSemigroup::full_transformation_monoid_2()})
    EXPECT_TRUE(testing::naive_associative(s.table()));
}

TEST(SemigroupTest, TransformationMonoidComposesLeftFirst) {
  auto t2 = FiniteSemigroup::full_transformation_monoid_2();
  auto id = *t2.find("id"), c0 = *t2.find("c0"), c1 = *t2.find("c1"), sw = *t2.find("swap");
  EXPECT_EQ(t2.product(sw, sw), id);
  EXPECT_EQ(t2.product(c0, sw), c1);  // apply c0, then swap
  EXPECT_EQ(t2.product(sw, c0), c0);
  EXPECT_EQ(t2.product(id, c1), c1);
}

// --- length conditions -----------------------------------------------------

TEST(CheckD1Test, Examples) {
  auto z2 = FiniteSemigroup::cyclic_group(2);
  std::vector<Length> good{8, 9}, bad{5, 1};
  EXPECT_TRUE(check_d1(z2, good).empty());
  auto v = check_d1(z2, bad);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0], (ElementPair{1, 1}));
}

TEST(CheckD1Test, SizeMismatchAndZeroAreInputErrors) {
  auto z2 = FiniteSemigroup::cyclic_group(2);
  std::vector<Length> short_l{1}, zero{0, 1};
  EXPECT_THROW(check_d1(z2, short_l), InputError);
  EXPECT_THROW(check_d1(z2, zero), InputError);
}

TEST(CheckD1Property, AgreesWithNaive) {
  std::mt19937_64 rng(testing::test_seed(23));
  std::uniform_int_distribution<Length> pick(1, 6);
  for (int trial = 0; trial < 500; ++trial) {
    auto t = testing::random_associative_table(1 + trial % 3, rng);
    auto s = FiniteSemigroup::from_table(t);
    std::vector<Length> l(s.order());
    for (auto& v : l) v = pick(rng);
    EXPECT_EQ(check_d1(s, l).empty(), testing::naive_d1(s, l));
  }
}

TEST(D2Test, Examples) {
  std::vector<Length> z2{8, 9};
  EXPECT_EQ(d2_witness(z2), 2u);

  std::vector<Length> log2_100;
  for (std::size_t i = 1; i <= 100; ++i) log2_100.push_back(static_cast<Length>(std::ceil(std::log2(i + 1.0))));
  EXPECT_EQ(d2_witness(log2_100), 2u);
  EXPECT_FALSE(d2_growth(log2_100).growing());

  std::vector<Length> ones(100, 1);
  EXPECT_EQ(d2_witness(ones), 100u);
  auto g = d2_growth(ones);
  EXPECT_EQ(g.half_witness, 50u);
  EXPECT_TRUE(g.growing());
}

// The witness is the least a with #{g : l(g) <= r} <= a^r for every r,
// checked against a direct scan over r and a.
TEST(D2Property, WitnessIsLeast) {
  std::mt19937_64 rng(testing::test_seed(24));
  std::uniform_int_distribution<Length> pick(1, 7);
  std::uniform_int_distribution<std::size_t> size(1, 30);
  auto ok = [](const std::vector<Length>& l, std::uint64_t a) {
    for (Length r = 1; r <= 8; ++r) {
      auto count = static_cast<std::uint64_t>(std::ranges::count_if(l, [r](Length v) { return v <= r; }));
      long double power = std::pow(static_cast<long double>(a), static_cast<long double>(r));
      if (power < static_cast<long double>(count)) return false;
    }
    return true;
  };
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Length> l(size(rng));
    for (auto& v : l) v = pick(rng);
    auto a = d2_witness(l);
    EXPECT_TRUE(ok(l, a));
    if (a > 1) EXPECT_FALSE(ok(l, a - 1));
  }
}

TEST(SmallestBaseTest, Examples) {
  EXPECT_EQ(smallest_base(1, 5), 1u);
  EXPECT_EQ(smallest_base(8, 3), 2u);
  EXPECT_EQ(smallest_base(9, 3), 3u);
  EXPECT_EQ(smallest_base(1'000'000'000'000ULL, 2), 1'000'000u);
  EXPECT_EQ(smallest_base(1'000'000'000'001ULL, 2), 1'000'001u);
}

// --- word length -----------------------------------------------------------

TEST(WordLengthTest, CyclicGroup) {
  auto z2 = FiniteSemigroup::cyclic_group(2);
  std::vector<Element> gens{1};
  EXPECT_EQ(word_length(z2, gens, 0), 2u);
  EXPECT_EQ(word_length(z2, gens, 1), 1u);

  auto z6 = FiniteSemigroup::cyclic_group(6);
  auto all = word_lengths(z6, gens);
  for (Element k = 1; k < 6; ++k) EXPECT_EQ(all[k], Length{k});
  EXPECT_EQ(all[0], Length{6});
}

TEST(WordLengthTest, NonGeneratingSetLeavesGaps) {
  auto lz = FiniteSemigroup::left_zero(3);
  std::vector<Element> gens{0, 1};
  EXPECT_FALSE(is_generating_set(lz, gens));
  EXPECT_FALSE(word_length(lz, gens, 2));
  EXPECT_EQ(word_length(lz, gens, 1), 1u);
}

constexpr std::uint64_t kFar = 1'000'000;

TEST(WordLengthProperty, SubadditiveOnRandomSemigroups) {
  std::mt19937_64 rng(testing::test_seed(25));
  for (int trial = 0; trial < 200; ++trial) {
    auto s = FiniteSemigroup::from_table(testing::random_associative_table(1 + trial % 3, rng));
    std::vector<Element> gens(s.order());
    std::iota(gens.begin(), gens.end(), Element{0});
    std::uniform_int_distribution<int> keep(0, 1);
    std::erase_if(gens, [&](Element) { return keep(rng) == 0; });
    if (gens.empty()) gens.push_back(0);
    auto len = word_lengths(s, gens);
    // reference: shortest product by level enumeration with unit costs
    std::vector<std::uint64_t> unit(s.order(), kFar);
    for (auto a : gens) unit[a] = 1;
    auto best = testing::factorization_minimum(s, unit, s.order() + 1);
    for (Element g = 0; g < s.order(); ++g) {
      if (len[g]) {
        EXPECT_EQ(*len[g], best[g]);
      } else {
        EXPECT_GE(best[g], kFar);
      }
      for (Element h = 0; h < s.order(); ++h) {
        if (len[g] && len[h]) {
          ASSERT_TRUE(len[s.product(g, h)]);
          EXPECT_LE(*len[s.product(g, h)], *len[g] + *len[h]);
        }
      }
    }
  }
}

// --- equivalence constants -------------------------------------------------

TEST(EquivalenceTest, CyclicGroupExample) {
  std::vector<Length> l1{1, 2}, l2{8, 9};
  auto c = equivalence_constants(l1, l2);
  EXPECT_EQ(c.lower, Rational(9, 2));
  EXPECT_EQ(c.upper, Rational(8));
}

TEST(EquivalenceProperty, SymmetricAndTight) {
  std::mt19937_64 rng(testing::test_seed(26));
  std::uniform_int_distribution<Length> pick(1, 50);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Length> a(1 + trial % 7), b(a.size());
    for (auto& v : a) v = pick(rng);
    for (auto& v : b) v = pick(rng);
    auto ab = equivalence_constants(a, b);
    auto ba = equivalence_constants(b, a);
    EXPECT_EQ(ab.lower, 1 / ba.upper);
    EXPECT_EQ(ab.upper, 1 / ba.lower);
    bool lower_hit = false, upper_hit = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      Rational r(static_cast<std::int64_t>(b[i]), static_cast<std::int64_t>(a[i]));
      EXPECT_LE(ab.lower, r);
      EXPECT_GE(ab.upper, r);
      lower_hit |= r == ab.lower;
      upper_hit |= r == ab.upper;
    }
    EXPECT_TRUE(lower_hit && upper_hit);
  }
}

}  // namespace
}  // namespace semilen
