#include <aplcm/gfun.hpp>
#include <aplcm/identities.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace aplcm;

namespace {

std::vector<Natural> nat(std::initializer_list<std::uint64_t> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST(Progression, Reduction) {
  const Progression p(6, 3);
  EXPECT_EQ(p.d(), 3U);
  EXPECT_EQ(p.a_reduced(), 2U);
  EXPECT_EQ(p.b_reduced(), 1U);
  const Progression z(4, 0);
  EXPECT_EQ(z.d(), 4U);
  EXPECT_EQ(z.a_reduced(), 1U);
  EXPECT_EQ(z.b_reduced(), 0U);
  EXPECT_TRUE(Progression(1, 0).is_reduced());
  EXPECT_THROW(Progression(0, 1), PreconditionError);
  EXPECT_THROW(Window(0, 3), PreconditionError);
}

TEST(WindowTerms, Examples) {
  EXPECT_EQ(window_terms(Progression(1, 0), Window(3, 3)), nat({3, 4, 5, 6}));
  EXPECT_EQ(window_terms(Progression(2, 1), Window(1, 2)), nat({3, 5, 7}));
  EXPECT_EQ(window_terms(Progression(5, 3), Window(2, 1)), nat({13, 18}));
}

TEST(WindowTerms, NoOverflowForLargeIndices) {
  const auto t = window_terms(Progression(UINT64_MAX, UINT64_MAX), Window(UINT64_MAX, 1));
  EXPECT_EQ(t[1], Natural(UINT64_MAX) + Natural(UINT64_MAX) * (Natural(UINT64_MAX) + Natural(1)));
}

TEST(G, Examples) {
  EXPECT_EQ(g(Progression(1, 0), Window(3, 3)), Natural(oracle::g(1, 0, 3, 3)));
  EXPECT_EQ(g(Progression(1, 0), Window(3, 3)), Natural(6));
  EXPECT_EQ(g(Progression(2, 1), Window(1, 3)), Natural(oracle::g(2, 1, 1, 3)));
  EXPECT_EQ(g(Progression(2, 1), Window(1, 3)), Natural(3));
  EXPECT_EQ(g(Progression(1, 0), Window(1, 0)), Natural(1));
}

TEST(G, MatchesValuationOracle) {
  for (std::uint64_t k = 0; k <= 6; ++k)
    for (std::uint64_t a = 1; a <= 7; ++a)
      for (std::uint64_t b = 0; b <= 7; ++b)
        for (std::uint64_t n = 1; n <= 25; ++n)
          ASSERT_EQ(g(Progression(a, b), Window(n, k)), Natural(oracle::g(a, b, n, k))) << k << a << b << n;
}

TEST(GpDirect, Examples) {
  EXPECT_EQ(gp_direct(2, Progression(1, 0), Window(3, 3)), 1U);
  EXPECT_EQ(gp_direct(3, Progression(1, 0), Window(3, 3)), 1U);
  EXPECT_EQ(gp_direct(5, Progression(1, 0), Window(3, 3)), 0U);
  EXPECT_THROW(gp_direct(2, Progression(4, 2), Window(1, 3)), PreconditionError);
}

TEST(CountMultiples, Examples) {
  EXPECT_EQ(count_multiples(2, 2, Progression(1, 0), Window(3, 5)), 2U);
  EXPECT_EQ(count_multiples(2, 1, Progression(2, 1), Window(1, 9)), 0U);
  EXPECT_EQ(count_multiples(3, 1, Progression(2, 1), Window(1, 3)), 2U);
  EXPECT_EQ(count_multiples_naive(3, 1, Progression(2, 1), Window(1, 3)), 2U);
  EXPECT_THROW(count_multiples(2, 1, Progression(6, 4), Window(1, 3)), PreconditionError);
  EXPECT_THROW(count_multiples(4, 1, Progression(1, 0), Window(1, 3)), PreconditionError);
  EXPECT_THROW(count_multiples(2, 0, Progression(1, 0), Window(1, 3)), PreconditionError);
}

TEST(CountMultiples, ModularPathMatchesScan) {
  for (std::uint64_t k = 0; k <= 12; ++k)
    for (std::uint64_t a = 1; a <= 12; ++a)
      for (std::uint64_t b = 0; b <= 12; ++b) {
        const Progression prog(a, b);
        if (!prog.is_reduced()) continue;
        for (std::uint64_t n = 1; n <= 40; n += 3)
          for (std::uint64_t p : {2, 3, 5, 7, 11, 13})
            for (std::uint64_t e = 1; e <= 5; ++e)
              ASSERT_EQ(count_multiples(p, e, prog, Window(n, k)), count_multiples_naive(p, e, prog, Window(n, k)))
                  << "p=" << p << " e=" << e << " a=" << a << " b=" << b << " n=" << n << " k=" << k;
      }
}

TEST(CountMultiples, LargeIndexAndHugeModulus) {
  const Progression prog(7, 3);
  const Window w(1'000'000'007, 30);
  for (std::uint64_t e = 1; e <= 4; ++e) EXPECT_EQ(count_multiples(2, e, prog, w), count_multiples_naive(2, e, prog, w));
  EXPECT_EQ(count_multiples(2, 200, prog, w), 0U);
}

TEST(FE, Examples) {
  EXPECT_EQ(f_e(2, 1, Progression(1, 0), Window(3, 3)), 1);
  EXPECT_EQ(f_e(2, 2, Progression(1, 0), Window(3, 5)), 1);
  EXPECT_EQ(f_e(5, 1, Progression(1, 0), Window(1, 3)), -1);
}

TEST(GpCounts, Examples) {
  EXPECT_EQ(gp_counts(2, Progression(1, 0), Window(4, 5)), oracle::vp(2, oracle::g(1, 0, 4, 5)));
  EXPECT_EQ(gp_counts(2, Progression(1, 0), Window(4, 5)), 3U);
  EXPECT_EQ(gp_counts(2, Progression(1, 0), Window(6, 5)), oracle::vp(2, oracle::g(1, 0, 6, 5)));
  EXPECT_EQ(gp_counts(2, Progression(1, 0), Window(6, 5)), 2U);
  EXPECT_EQ(gp_counts(2, Progression(2, 1), Window(7, 4)), 0U);
  EXPECT_EQ(gp_counts(11, Progression(1, 0), Window(7, 4)), 0U);
  EXPECT_THROW(gp_counts(2, Progression(2, 2), Window(7, 4)), PreconditionError);
}

TEST(GpCounts, AgreesWithDirectValuation) {
  for (std::uint64_t k = 0; k <= 8; ++k)
    for (std::uint64_t a = 1; a <= 10; ++a)
      for (std::uint64_t b = 0; b <= 10; ++b) {
        const Progression prog(a, b);
        if (!prog.is_reduced()) continue;
        for (std::uint64_t n = 1; n <= 40; ++n) {
          const Window w(n, k);
          for (auto p : primes_upto(k + 2)) ASSERT_EQ(gp_counts(p, prog, w), gp_direct(p, prog, w));
        }
      }
}

TEST(GProperties, DividesFactorialWhenReduced) {
  for (std::uint64_t k = 0; k <= 8; ++k)
    for (std::uint64_t a = 1; a <= 10; ++a)
      for (std::uint64_t b = 0; b <= 10; ++b) {
        const Progression prog(a, b);
        if (!prog.is_reduced()) continue;
        for (std::uint64_t n = 1; n <= 30; ++n) ASSERT_TRUE(g(prog, Window(n, k)).divides(factorial(k)));
      }
}

TEST(GProperties, ScalesByDToTheK) {
  for (std::uint64_t k = 0; k <= 7; ++k)
    for (std::uint64_t a = 1; a <= 12; ++a)
      for (std::uint64_t b = 0; b <= 12; ++b) {
        const Progression prog(a, b);
        for (std::uint64_t n = 1; n <= 20; ++n) {
          ASSERT_EQ(g(prog, Window(n, k)), pow(Natural(prog.d()), k) * g(prog.reduced(), Window(n, k)));
        }
      }
}

TEST(GProperties, MultiplesOfHighPowersAreIsolated) {
  for (std::uint64_t k = 1; k <= 10; ++k)
    for (std::uint64_t a = 1; a <= 9; ++a)
      for (std::uint64_t b = 0; b <= 9; ++b) {
        const Progression prog(a, b);
        if (!prog.is_reduced()) continue;
        for (auto p : primes_upto(k + 4)) {
          if (a % p == 0) continue;
          const auto top = e_pk(p, k);
          for (std::uint64_t n = 1; n <= 30; ++n) {
            for (std::uint64_t e = 1; e <= top + 2; ++e) {
              const auto c = count_multiples(p, e, prog, Window(n, k));
              if (e > top) {
                ASSERT_LE(c, 1U);
              } else {
                ASSERT_GE(c, 1U);
                ASSERT_GE(f_e(p, e, prog, Window(n, k)), 0);
              }
            }
          }
        }
      }
}

TEST(GProperties, ConsecutivePowerBlockHasDistinctResidues) {
  for (std::uint64_t a = 1; a <= 15; ++a)
    for (std::uint64_t b = 0; b <= 15; ++b)
      for (std::uint64_t pe : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}) {
        if (std::gcd(a, pe) != 1) continue;
        for (std::uint64_t m = 0; m < 10; ++m) {
          std::vector<bool> seen(pe, false);
          for (std::uint64_t i = 0; i < pe; ++i) {
            const auto r = (b + (m + i) * a) % pe;
            ASSERT_FALSE(seen[r]);
            seen[r] = true;
          }
        }
      }
}

TEST(GProperties, LcmUpToKIsAPeriod) {
  for (std::uint64_t k = 0; k <= 8; ++k) {
    const auto lk = L(k).value().to_u64();
    for (std::uint64_t a = 1; a <= 10; ++a)
      for (std::uint64_t b = 0; b <= 10; b += 3)
        for (std::uint64_t n = 1; n <= 30; ++n)
          ASSERT_EQ(g(Progression(a, b), Window(n, k)), g(Progression(a, b), Window(n + lk, k)));
  }
}

TEST(GProperties, FarhiRecursionAndBaseDivisibility) {
  for (std::uint64_t k = 1; k <= 8; ++k)
    for (std::uint64_t n = 1; n <= 100; ++n) ASSERT_TRUE(check_recursion(k, n)) << k << " " << n;
  for (std::uint64_t k = 0; k <= 8; ++k)
    for (std::uint64_t n = 1; n <= 100; ++n) ASSERT_TRUE(check_base_divisibility(k, n)) << k << " " << n;
}
