#include "petcoh/combinat.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace petcoh;

TEST(SubsetJ, ParseForms) {
  const auto a = SubsetJ::parse(5, "{1,2,4}");
  const auto b = SubsetJ::parse(5, "{1,2}|{4}");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.members(), (std::vector<int>{1, 2, 4}));
  EXPECT_EQ(a.to_string(), "{1,2}|{4}");
  EXPECT_EQ(SubsetJ::parse(5, "{}"), SubsetJ::empty(5));
  EXPECT_EQ(SubsetJ::parse(5, " { 3 , 1 } "), SubsetJ::from_members(5, {1, 3}));
  EXPECT_EQ(SubsetJ::empty(5).to_string(), "{}");
  EXPECT_EQ(SubsetJ::full(4).to_string(), "{1,2,3}");
}

TEST(SubsetJ, ParseErrors) {
  EXPECT_THROW(SubsetJ::parse(4, "{1,4}"), std::invalid_argument);
  EXPECT_THROW(SubsetJ::parse(4, "{0}"), std::invalid_argument);
  EXPECT_THROW(SubsetJ::parse(4, "{1,1}"), std::invalid_argument);
  EXPECT_THROW(SubsetJ::parse(4, "{1,a}"), std::invalid_argument);
  EXPECT_THROW(SubsetJ::parse(4, "1,2"), std::invalid_argument);
  EXPECT_THROW(SubsetJ::parse(4, "{1,2"), std::invalid_argument);
  EXPECT_THROW(SubsetJ::parse(4, "{1}|"), std::invalid_argument);
  EXPECT_THROW(SubsetJ::empty(1), std::invalid_argument);
  EXPECT_THROW(SubsetJ::empty(17), std::invalid_argument);
}

TEST(SubsetJ, JsonRoundTripAndOrder) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& j : all_subsets(n)) EXPECT_EQ(SubsetJ::from_json(n, j.to_json()), j);
  EXPECT_LT(SubsetJ::from_members(4, {3}), SubsetJ::from_members(4, {1, 2}));
  EXPECT_LT(SubsetJ::from_members(4, {1}), SubsetJ::from_members(4, {2}));
}

TEST(SubsetJ, WithAndContains) {
  const auto j = SubsetJ::from_members(5, {2});
  EXPECT_TRUE(j.with(3).contains(3));
  EXPECT_FALSE(j.contains(5));
  EXPECT_THROW(j.with(5), std::invalid_argument);
}

TEST(Components, Examples) {
  const auto j = SubsetJ::from_members(10, {1, 2, 4, 5, 6, 9});
  EXPECT_EQ(connected_components(j), (std::vector<Interval>{{1, 2}, {4, 6}, {9, 9}}));
  EXPECT_TRUE(connected_components(SubsetJ::empty(4)).empty());
  EXPECT_EQ(connected_components(SubsetJ::from_members(4, {1, 3})), (std::vector<Interval>{{1, 1}, {3, 3}}));
}

TEST(Components, PartitionTheSubset) {
  for (int n = 2; n <= 9; ++n)
    for (const auto& j : all_subsets(n)) {
      const auto comps = connected_components(j);
      std::vector<int> flat;
      for (std::size_t k = 0; k < comps.size(); ++k) {
        for (int i = comps[k].a; i <= comps[k].b; ++i) flat.push_back(i);
        if (k > 0) {
          EXPECT_GE(comps[k].a, comps[k - 1].b + 2);
        }
      }
      EXPECT_EQ(flat, j.members());
    }
}

TEST(MFactor, Examples) {
  EXPECT_EQ(m_factor(SubsetJ::from_members(10, {1, 2, 4, 5, 6, 9})), 12);
  EXPECT_EQ(m_factor(SubsetJ::from_members(7, {3, 4, 5})), 6);
  EXPECT_EQ(m_factor(SubsetJ::empty(3)), 1);
}

TEST(Hessenberg, Examples) {
  EXPECT_EQ(hessenberg_from_subset(SubsetJ::full(5)).values(), (std::vector<int>{2, 3, 4, 5, 5}));
  EXPECT_EQ(hessenberg_from_subset(SubsetJ::empty(5)).values(), (std::vector<int>{1, 2, 3, 4, 5}));
  EXPECT_EQ(hessenberg_from_subset(SubsetJ::from_members(10, {1, 2, 4, 5, 6, 9})).values(),
            (std::vector<int>{2, 3, 3, 5, 6, 7, 7, 8, 10, 10}));
  EXPECT_THROW(HessenbergFn({2, 1}), std::invalid_argument);
  EXPECT_THROW(HessenbergFn({1, 3}), std::invalid_argument);
  EXPECT_THROW(HessenbergFn({3, 2, 3}), std::invalid_argument);
}

TEST(Dimension, Examples) {
  EXPECT_EQ(dimension_of_pet_J(SubsetJ::from_members(10, {1, 2, 4, 5, 6, 9})), 6);
  EXPECT_EQ(dimension_of_pet_J(SubsetJ::empty(4)), 0);
  EXPECT_EQ(dimension_of_pet_J(SubsetJ::full(5)), 4);
  for (int n = 2; n <= 8; ++n)
    for (const auto& j : all_subsets(n)) EXPECT_EQ(dimension_of_pet_J(j), j.size());
}

TEST(LongestElement, Examples) {
  EXPECT_EQ(longest_element_wJ(SubsetJ::from_members(10, {1, 2, 4, 5, 6, 9})),
            (std::vector<int>{3, 2, 1, 7, 6, 5, 4, 8, 10, 9}));
  EXPECT_EQ(longest_element_wJ(SubsetJ::empty(4)), (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(longest_element_wJ(SubsetJ::full(3)), (std::vector<int>{3, 2, 1}));
}

TEST(LongestElement, IsAnInvolutionWithExpectedLength) {
  for (int n = 2; n <= 7; ++n)
    for (const auto& j : all_subsets(n)) {
      const auto w = longest_element_wJ(j);
      std::vector<int> ww(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) ww[i] = w[static_cast<std::size_t>(w[i] - 1)];
      std::vector<int> id(w.size());
      for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i + 1);
      EXPECT_EQ(ww, id);
      long inversions = 0, expected = 0;
      for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = a + 1; b < w.size(); ++b) inversions += w[a] > w[b];
      for (const auto& c : connected_components(j)) expected += (c.size() + 1) * c.size() / 2;
      EXPECT_EQ(inversions, expected);
    }
}

TEST(Enumeration, AllSubsetsCanonical) {
  for (int n = 2; n <= 10; ++n) {
    const auto all = all_subsets(n);
    EXPECT_EQ(all.size(), std::size_t{1} << (n - 1));
    for (std::size_t k = 1; k < all.size(); ++k) EXPECT_LT(all[k - 1], all[k]);
    std::size_t total = 0;
    for (int k = 0; k < n; ++k) {
      const auto sized = subsets_of_size(n, k);
      EXPECT_EQ(BigInt(sized.size()), oracle::pascal(static_cast<unsigned>(n - 1), static_cast<unsigned>(k)));
      total += sized.size();
    }
    EXPECT_EQ(total, all.size());
  }
}

TEST(Numbers, BinomialAndFactorial) {
  for (unsigned n = 0; n <= 30; ++n)
    for (unsigned k = 0; k <= n + 1; ++k) EXPECT_EQ(binomial(n, k), oracle::pascal(n, k));
  EXPECT_EQ(factorial(20), oracle::fact(20));
  EXPECT_EQ(factorial(0), 1);
}
