#include <gtest/gtest.h>

#include <random>

#include "typespace/finset_map.hpp"

using namespace typespace;

namespace {

FinSetMap random_map(std::mt19937& rng, int m, int n) {
  std::uniform_int_distribution<int> d(0, n - 1);
  std::vector<int> v(static_cast<std::size_t>(m));
  for (auto& x : v) x = d(rng);
  return FinSetMap(n, v);
}

// Pointwise composition, written out independently of compose().
std::vector<int> pointwise(const FinSetMap& f, const FinSetMap& g) {
  std::vector<int> out;
  for (int i = 0; i < g.source_size(); ++i) out.push_back(f(g(i)));
  return out;
}

}  // namespace

TEST(FinSetMap, RejectsOutOfRangeEntries) {
  EXPECT_THROW(FinSetMap(2, {0, 2}), std::invalid_argument);
  EXPECT_THROW(FinSetMap(2, {-1}), std::invalid_argument);
  EXPECT_THROW(FinSetMap(0, {}), std::invalid_argument);
  EXPECT_THROW(FinSetMap::one_based(3, {0}), std::invalid_argument);
  EXPECT_NO_THROW(FinSetMap::one_based(3, {3, 1}));
}

TEST(FinSetMap, OneBasedPrinting) {
  EXPECT_EQ(FinSetMap::one_based(3, {2, 2}).to_string(), "[2,2]:2->3");
  EXPECT_EQ(FinSetMap::skip(3, 1).to_string(), "[1,3]:2->3");
  EXPECT_EQ(FinSetMap::dup_last(2).to_string(), "[1,2,2]:3->2");
}

TEST(FinSetMap, FactorizationExamples) {
  auto a = canonical_factorization(FinSetMap::one_based(2, {1, 1, 2}));
  EXPECT_EQ(a.surjection, FinSetMap::one_based(2, {1, 1, 2}));
  EXPECT_EQ(a.injection, FinSetMap::one_based(2, {1, 2}));

  auto b = canonical_factorization(FinSetMap::one_based(3, {3}));
  EXPECT_EQ(b.surjection, FinSetMap::one_based(1, {1}));
  EXPECT_EQ(b.injection, FinSetMap::one_based(3, {3}));

  auto c = canonical_factorization(FinSetMap::one_based(3, {2, 2}));
  EXPECT_EQ(c.surjection, FinSetMap::one_based(1, {1, 1}));
  EXPECT_EQ(c.injection, FinSetMap::one_based(3, {2}));
  EXPECT_EQ(pointwise(c.injection, c.surjection), (std::vector<int>{1, 1}));
}

TEST(FinSetMap, FactorizationOfAllSmallMaps) {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      for (const auto& f : all_maps(m, n)) {
        const auto [s, i] = canonical_factorization(f);
        EXPECT_TRUE(s.is_surjective()) << f.to_string();
        EXPECT_TRUE(i.is_injective()) << f.to_string();
        EXPECT_TRUE(i.is_increasing()) << f.to_string();
        EXPECT_EQ(pointwise(i, s), f.values()) << f.to_string();
      }
    }
  }
}

TEST(FinSetMap, AllMapsCount) {
  EXPECT_EQ(all_maps(3, 2).size(), 8u);
  EXPECT_EQ(all_maps(2, 3).size(), 9u);
  EXPECT_EQ(all_maps(1, 1).size(), 1u);
}

TEST(FinSetMap, CompositionIsAssociative) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int a = 1 + static_cast<int>(rng() % 5);
    const int b = 1 + static_cast<int>(rng() % 5);
    const int c = 1 + static_cast<int>(rng() % 5);
    const int d = 1 + static_cast<int>(rng() % 5);
    const auto h = random_map(rng, a, b);
    const auto g = random_map(rng, b, c);
    const auto f = random_map(rng, c, d);
    EXPECT_EQ(compose(f, compose(g, h)), compose(compose(f, g), h));
    EXPECT_EQ(compose(f, g).values(), pointwise(f, g));
    EXPECT_EQ(compose(FinSetMap::identity(d), f), f);
    EXPECT_EQ(compose(f, FinSetMap::identity(c)), f);
  }
  EXPECT_THROW(compose(FinSetMap::identity(2), FinSetMap::identity(3)), std::invalid_argument);
}

TEST(FinSetMap, InverseOfBijections) {
  const auto p = FinSetMap::one_based(3, {3, 1, 2});
  EXPECT_EQ(compose(p, p.inverse()), FinSetMap::identity(3));
  EXPECT_THROW(FinSetMap::one_based(2, {1, 1}).inverse(), std::invalid_argument);
}

TEST(FinSetMap, ShiftFixesHead) {
  const auto f = FinSetMap::one_based(3, {3, 1});
  EXPECT_EQ(shift(f, 2), FinSetMap::one_based(5, {1, 2, 5, 3}));
  EXPECT_EQ(shift(f, 0), f);
}

TEST(FinSetMap, GeneratorMapsShape) {
  // level n contributes n-1 swaps, a forget (n >= 2) and a dup (n < D)
  int expected = 0;
  for (int n = 1; n <= 4; ++n) expected += (n - 1) + (n >= 2) + (n < 4);
  EXPECT_EQ(static_cast<int>(generator_maps(4).size()), expected);
}

TEST(FinSetMap, GeneratorWordLevelsChain) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 5);
    const int n = 1 + static_cast<int>(rng() % 5);
    const auto f = random_map(rng, m, n);
    int level = n;
    for (const auto& s : generator_word(f)) {
      ASSERT_EQ(s.level, level) << f.to_string();
      if (s.kind == GeneratorStep::Kind::ForgetLast) --level;
      if (s.kind == GeneratorStep::Kind::DupLast) ++level;
      if (s.kind == GeneratorStep::Kind::Swap) ASSERT_LT(s.index + 1, s.level);
    }
    EXPECT_EQ(level, m) << f.to_string();
  }
}

// Applying a generator word to a tuple (precomposition) must equal precomposition by f.
TEST(FinSetMap, GeneratorWordActsAsPrecomposition) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 6);
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto f = random_map(rng, m, n);
    std::vector<int> tuple;
    for (int i = 0; i < n; ++i) tuple.push_back(100 + i);
    for (const auto& s : generator_word(f)) {
      switch (s.kind) {
        case GeneratorStep::Kind::Swap:
          std::swap(tuple[static_cast<std::size_t>(s.index)], tuple[static_cast<std::size_t>(s.index + 1)]);
          break;
        case GeneratorStep::Kind::ForgetLast:
          tuple.pop_back();
          break;
        case GeneratorStep::Kind::DupLast:
          tuple.push_back(tuple.back());
          break;
      }
    }
    std::vector<int> expected;
    for (int i = 0; i < m; ++i) expected.push_back(100 + f(i));
    EXPECT_EQ(tuple, expected) << f.to_string();
  }
}
