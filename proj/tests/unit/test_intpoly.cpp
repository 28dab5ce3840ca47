#include "petcoh/intpoly.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace petcoh;

namespace {

IntPoly y(std::size_t n, std::size_t i) { return IntPoly::variable(n, i); }

IntPoly random_poly(std::size_t n, std::mt19937_64& rng, unsigned max_deg = 3) {
  std::uniform_int_distribution<int> coeff(-5, 5), terms(0, 4), e(0, static_cast<int>(max_deg));
  IntPoly p(n);
  const int t = terms(rng);
  for (int k = 0; k < t; ++k) {
    std::vector<unsigned> ex(n);
    for (auto& x : ex) x = static_cast<unsigned>(e(rng) / 2);
    p.add_term(Monomial(ex), coeff(rng));
  }
  return p;
}

}  // namespace

TEST(Monomial, BasicsAndProduct) {
  const Monomial a({2, 0, 1}), b({0, 1, 1});
  EXPECT_EQ(a.degree(), 3U);
  EXPECT_EQ(a.ambient(), 3U);
  EXPECT_EQ(a * b, Monomial({2, 1, 2}));
  EXPECT_EQ(Monomial::one(3), Monomial({0, 0, 0}));
  EXPECT_EQ(Monomial::variable(3, 2), Monomial({0, 1, 0}));
  EXPECT_THROW(a * Monomial({1, 1}), std::invalid_argument);
  EXPECT_THROW(Monomial::variable(3, 0), std::out_of_range);
  EXPECT_THROW(Monomial::variable(3, 4), std::out_of_range);
}

TEST(Monomial, DescendingGradedLexEnumeration) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (unsigned d = 0; d <= 5; ++d) {
      const auto ms = monomials_of_degree(n, d);
      EXPECT_EQ(BigInt(ms.size()), oracle::pascal(static_cast<unsigned>(n + d - 1), d));
      for (std::size_t k = 1; k < ms.size(); ++k) EXPECT_TRUE(GrLexGreater{}(ms[k - 1], ms[k]));
      std::set<std::vector<unsigned>> got, want;
      for (const auto& m : ms) got.insert({m.exponents().begin(), m.exponents().end()});
      for (const auto& m : oracle::all_monomials(n, d)) want.insert({m.exponents().begin(), m.exponents().end()});
      EXPECT_EQ(got, want);
    }
  }
  const auto ms = monomials_of_degree(2, 2);
  EXPECT_EQ(ms.front(), Monomial({2, 0}));
  EXPECT_EQ(ms.back(), Monomial({0, 2}));
}

TEST(IntPoly, TextForm) {
  const std::size_t n = 3;
  const IntPoly p = IntPoly::term(Monomial({2, 1, 0}), 3) - y(n, 3);
  EXPECT_EQ(p.to_string(), "3*y1^2*y2 - y3");
  EXPECT_EQ(IntPoly(n).to_string(), "0");
  EXPECT_EQ((-y(n, 1)).to_string(), "-y1");
  EXPECT_EQ(IntPoly::constant(n, -7).to_string(), "-7");
}

TEST(IntPoly, DegreeAndHomogeneity) {
  const std::size_t n = 3;
  EXPECT_EQ(IntPoly(n).degree(), -1);
  EXPECT_TRUE(IntPoly(n).is_homogeneous());
  const IntPoly p = y(n, 1) * y(n, 2) + y(n, 3) + IntPoly::constant(n, 4);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_FALSE(p.is_homogeneous());
  EXPECT_EQ(p.homogeneous_component(1), y(n, 3));
  EXPECT_EQ(p.homogeneous_component(0), IntPoly::constant(n, 4));
  EXPECT_TRUE(p.homogeneous_component(5).is_zero());
}

TEST(IntPoly, ArithmeticExamples) {
  const std::size_t n = 3;
  EXPECT_EQ(mul(y(n, 1), y(n, 1) - y(n, 2)),
            IntPoly::term(Monomial({2, 0, 0}), 1) - IntPoly::term(Monomial({1, 1, 0}), 1));
  const IntPoly p = y(n, 1) * BigInt(3) + y(n, 2) * y(n, 3);
  EXPECT_TRUE(add(p, scale(p, -1)).is_zero());
  EXPECT_THROW(y(2, 1) + y(3, 1), std::invalid_argument);
  EXPECT_THROW(y(2, 1) * y(3, 1), std::invalid_argument);
}

TEST(IntPoly, CancellationLeavesNoZeroTerms) {
  const std::size_t n = 2;
  IntPoly p = y(n, 1) + y(n, 2);
  p -= y(n, 1);
  EXPECT_EQ(p.size(), 1U);
  EXPECT_EQ(p.coefficient(Monomial({1, 0})), 0);
  p.add_term(Monomial({0, 1}), -1);
  EXPECT_TRUE(p.is_zero());
}

TEST(IntPoly, JsonRoundTrip) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const IntPoly p = random_poly(4, rng) * IntPoly::constant(4, BigInt("123456789012345678901234567890"));
    EXPECT_EQ(IntPoly::from_json(p.to_json(), 4), p);
  }
}

TEST(IntPoly, RingAxiomsRandomized) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 4;
    const IntPoly p = random_poly(n, rng), q = random_poly(n, rng), r = random_poly(n, rng);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ(p + (q + r), (p + q) + r);
    EXPECT_EQ(p * IntPoly::constant(n, 1), p);
    EXPECT_TRUE((p - p).is_zero());
    if (!p.is_zero() && !q.is_zero()) EXPECT_EQ((p * q).degree(), p.degree() + q.degree());
  }
}

TEST(Symmetric, ElementaryExamples) {
  const std::size_t n = 3;
  EXPECT_EQ(elementary_symmetric(n, 3, 2), y(n, 1) * y(n, 2) + y(n, 1) * y(n, 3) + y(n, 2) * y(n, 3));
  EXPECT_EQ(elementary_symmetric(4, 2, 0), IntPoly::constant(4, 1));
  const IntPoly e3 = elementary_symmetric(5, 5, 3);
  EXPECT_EQ(e3.size(), 10U);
  for (const auto& [m, c] : e3.terms()) {
    EXPECT_EQ(c, 1);
    EXPECT_EQ(m.degree(), 3U);
    for (auto x : m.exponents()) EXPECT_LE(x, 1U);
  }
  EXPECT_THROW(elementary_symmetric(3, 2, 3), std::invalid_argument);
  EXPECT_THROW(elementary_symmetric(3, 4, 1), std::invalid_argument);
}

TEST(Symmetric, ElementaryMatchesSubsetListing) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t k = 0; k <= i; ++k) EXPECT_EQ(elementary_symmetric(n, i, k), oracle::elementary(n, 1, i, k));
  for (std::size_t lo = 1; lo <= 5; ++lo)
    for (std::size_t hi = lo - 1; hi <= 5; ++hi)
      for (std::size_t k = 0; k <= 3; ++k)
        EXPECT_EQ(elementary_symmetric_range(5, lo, hi, k), oracle::elementary(5, lo, hi, k));
}

TEST(Symmetric, HookExamples) {
  const IntPoly m611 = hook_monomial_symmetric(4, 4, {6, 2});
  EXPECT_EQ(m611.size(), 12U);
  EXPECT_EQ(m611.coefficient(Monomial({6, 1, 1, 0})), 1);
  EXPECT_EQ(m611.coefficient(Monomial({0, 1, 1, 6})), 1);
  const std::size_t n = 4;
  const IntPoly m5111 = IntPoly::term(Monomial({5, 1, 1, 1}), 1) + IntPoly::term(Monomial({1, 5, 1, 1}), 1) +
                        IntPoly::term(Monomial({1, 1, 5, 1}), 1) + IntPoly::term(Monomial({1, 1, 1, 5}), 1);
  EXPECT_EQ(hook_monomial_symmetric(n, 4, {5, 3}), m5111);
  EXPECT_EQ(hook_monomial_symmetric(3, 2, {1, 1}), y(3, 1) * y(3, 2));
  EXPECT_THROW(hook_monomial_symmetric(4, 2, {3, 2}), std::invalid_argument);
}

TEST(Symmetric, HookMatchesListing) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t i = 1; i <= n; ++i)
      for (unsigned d = 1; d <= 4; ++d)
        for (unsigned k = 0; k + 1 <= i; ++k)
          EXPECT_EQ(hook_monomial_symmetric(n, i, {d, k}), oracle::hook(n, i, d, k)) << n << i << d << k;
}

TEST(Symmetric, PowerSums) {
  EXPECT_EQ(power_sum_prefix(4, 3, 2), y(4, 1) * y(4, 1) + y(4, 2) * y(4, 2) + y(4, 3) * y(4, 3));
  EXPECT_EQ(power_sum_prefix(2, 1, 5), IntPoly::term(Monomial({5, 0}), 1));
  EXPECT_EQ(power_sum_prefix(4, 4, 5).size(), 4U);
}

// (x1^5 + .. + x4^5) e_3 = m_{6,1,1} + m_{5,1,1,1}
TEST(Symmetric, WorkedPowerSumTimesElementary) {
  EXPECT_EQ(power_sum_prefix(4, 4, 5) * elementary_symmetric(4, 4, 3),
            oracle::hook(4, 4, 6, 2) + oracle::hook(4, 4, 5, 3));
}

TEST(Symmetric, PowerSumTimesElementaryAllCases) {
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t i = 2; i <= n; ++i)
      for (unsigned k = 1; k < i; ++k)
        for (unsigned d = 1; d <= 5; ++d) {
          const IntPoly lhs = power_sum_prefix(n, i, d) * elementary_symmetric(n, i, k);
          const IntPoly rhs =
              oracle::hook(n, i, d + 1, k - 1) + oracle::hook(n, i, d, k) * BigInt(d == 1 ? k + 1 : 1);
          EXPECT_EQ(lhs, rhs) << "n=" << n << " i=" << i << " k=" << k << " d=" << d;
        }
}

TEST(Symmetric, PascalAndSplittingRandomized) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 5);
    std::uniform_int_distribution<std::size_t> pick_b(1, n);
    const std::size_t b = pick_b(rng);
    const std::size_t a = std::uniform_int_distribution<std::size_t>(0, b)(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(0, b)(rng);
    const IntPoly lhs = oracle::elementary(n, 1, b, k);
    if (k > 0) {
      const IntPoly rhs = oracle::elementary(n, 1, b - 1, k) + oracle::elementary(n, 1, b - 1, k - 1) * y(n, b);
      EXPECT_EQ(elementary_symmetric(n, b, k), rhs);
    }
    IntPoly split(n);
    for (std::size_t j = 0; j <= k; ++j)
      split += elementary_symmetric_range(n, 1, a, j) * elementary_symmetric_range(n, a + 1, b, k - j);
    EXPECT_EQ(split, lhs) << "a=" << a << " b=" << b << " k=" << k;
  }
}
