#include <aplcm/period.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace aplcm;

namespace {

// Smallest period of n -> v_p(g(n)) over all T <= limit, from the
// trial-division oracle.
std::uint64_t brute_prime_period(std::uint64_t p, std::uint64_t a, std::uint64_t b, std::uint64_t k,
                                 std::uint64_t limit) {
  std::vector<std::uint64_t> vals(2 * limit + 1);
  for (std::uint64_t n = 1; n < vals.size(); ++n) vals[n] = oracle::vp(p, oracle::g(a, b, n, k));
  for (std::uint64_t t = 1; t <= limit; ++t) {
    bool ok = true;
    for (std::uint64_t n = 1; n <= limit && ok; ++n) ok = vals[n + t] == vals[n];
    if (ok) return t;
  }
  return 0;
}

}  // namespace

TEST(Delta, Examples) {
  const Delta d3 = delta(3, 1);
  EXPECT_EQ(d3.value, Natural(2));
  EXPECT_EQ(d3.prime, 2U);
  const Delta d5 = delta(5, 1);
  EXPECT_EQ(d5.value, Natural(3));
  EXPECT_EQ(d5.prime, 3U);
  const Delta d4 = delta(4, 1);
  EXPECT_EQ(d4.value, Natural(1));
  EXPECT_FALSE(d4.prime.has_value());
}

TEST(Delta, PrimeDividingAIsSkipped) {
  // v_2(4) >= e_{2,3} but 2 | a.
  EXPECT_FALSE(delta(3, 2).prime.has_value());
  EXPECT_EQ(delta(7, 2).value, Natural(1));
  EXPECT_EQ(delta(7, 3).value, Natural(4));
}

TEST(Delta, OnlyPrimesUpToKAreScanned) {
  // For k = 0 and k = 1 there are no primes to scan; primes above k would
  // satisfy v_p(k+1) = 0 = e_{p,k} vacuously.
  EXPECT_FALSE(delta(0, 1).prime.has_value());
  EXPECT_FALSE(delta(1, 1).prime.has_value());
  EXPECT_FALSE(delta(2, 1).prime.has_value());
}

TEST(Delta, AtMostOneQualifyingPrime) {
  for (std::uint64_t k = 0; k <= 3000; ++k) EXPECT_NO_THROW(delta(k, 1)) << k;
}

TEST(ClosedForm, Examples) {
  EXPECT_EQ(Q(2, 1).value(), Natural(2));
  EXPECT_EQ(Q(3, 1).value(), Natural(3));
  EXPECT_EQ(Q(5, 2).value(), Natural(5));
  EXPECT_EQ(Q(0, 7).value(), Natural(1));
  EXPECT_EQ(oracle::brute_period(1, 0, 2, 2, 2), 2U);
  EXPECT_EQ(oracle::brute_period(1, 0, 3, 6, 6), 3U);
  EXPECT_EQ(oracle::brute_period(2, 1, 5, 60, 60), 5U);
}

TEST(ClosedForm, FarhiKaneValues) {
  const std::vector<std::uint64_t> expected{1, 1, 2, 3, 12, 20, 60, 105, 280, 504, 2520};
  for (std::uint64_t k = 0; k < expected.size(); ++k) EXPECT_EQ(Q(k, 1).value(), Natural(expected[k])) << k;
}

TEST(ClosedForm, ConsecutiveOddNumbers) {
  EXPECT_EQ(Q(2, 2).value(), Natural(1));
  EXPECT_EQ(Q(3, 2).value(), Natural(3));
  EXPECT_EQ(Q(5, 2).value(), Natural(5));
}

TEST(SmallestPeriod, Examples) {
  const PeriodReport r7 = smallest_period(Progression(1, 0), 7);
  EXPECT_EQ(r7.closed_form.value(), Natural(105));
  EXPECT_EQ(r7.closed_form.to_string(), "3·5·7");
  EXPECT_EQ(r7.delta, Natural(4));
  EXPECT_EQ(r7.delta_prime, 2U);
  EXPECT_TRUE(r7.removed_primes.empty());

  const PeriodReport odd = smallest_period(Progression(2, 1), 2);
  EXPECT_EQ(odd.closed_form.value(), Natural(1));
  ASSERT_EQ(odd.removed_primes.size(), 1U);
  EXPECT_EQ(odd.removed_primes[0], (std::pair<std::uint64_t, std::uint64_t>{2, 1}));

  const PeriodReport unreduced = smallest_period(Progression(6, 3), 5);
  EXPECT_EQ(unreduced.a_reduced, 2U);
  EXPECT_EQ(unreduced.closed_form.value(), Natural(5));
  EXPECT_EQ(unreduced.closed_form, smallest_period(Progression(2, 1), 5).closed_form);
}

TEST(SmallestPeriod, KZeroAndOneHaveEmptyPerPrime) {
  for (std::uint64_t k : {0, 1}) {
    const auto r = smallest_period(Progression(9, 4), k);
    EXPECT_EQ(r.closed_form.value(), Natural(1));
    EXPECT_TRUE(r.per_prime.empty());
  }
}

TEST(SmallestPeriod, ReportReassemblesLk) {
  for (std::uint64_t k = 0; k <= 40; ++k)
    for (std::uint64_t a = 1; a <= 40; ++a)
      for (std::uint64_t b : {0, 1, 5, 12}) {
        const auto r = smallest_period(Progression(a, b), k);
        Natural whole = r.closed_form.value() * r.delta;
        for (const auto& [q, e] : r.removed_primes) whole *= pow(Natural(q), e);
        ASSERT_EQ(whole, L(k).value()) << k << " " << a << " " << b;
        Natural per_prime(1U);
        for (const auto& [p, v] : r.per_prime) per_prime *= v;
        ASSERT_EQ(per_prime, r.closed_form.value());
      }
}

TEST(SmallestPeriod, MatchesBruteForceOverAllShifts) {
  for (std::uint64_t k = 0; k <= 6; ++k) {
    const std::uint64_t lk = oracle::lcm_upto(k);
    for (std::uint64_t a = 1; a <= 8; ++a)
      for (std::uint64_t b = 0; b <= 8; ++b) {
        const std::uint64_t brute = oracle::brute_period(a, b, k, lk, lk);
        ASSERT_EQ(smallest_period(Progression(a, b), k).closed_form.value(), Natural(brute))
            << "k=" << k << " a=" << a << " b=" << b;
      }
  }
}

TEST(PeriodOracle, Examples) {
  EXPECT_EQ(smallest_period_oracle(Progression(1, 0), 2), Natural(2));
  EXPECT_EQ(smallest_period_oracle(Progression(1, 0), 3), Natural(3));
  EXPECT_EQ(smallest_period_oracle(Progression(1, 0), 0), Natural(1));
  EXPECT_EQ(smallest_period_oracle(Progression(6, 3), 5), Natural(5));
}

TEST(PeriodOracle, BudgetIsEnforced) {
  EXPECT_THROW(smallest_period_oracle(Progression(1, 0), 8, WorkBudget{1000}), BudgetError);
  EXPECT_THROW(smallest_period_oracle(Progression(1, 0), 60), BudgetError);
  EXPECT_NO_THROW(smallest_period_oracle(Progression(1, 0), 4, WorkBudget{1000}));
}

TEST(PerPrimeOracle, Examples) {
  EXPECT_EQ(per_prime_period_oracle(2, Progression(1, 0), 5), Natural(4));
  EXPECT_EQ(per_prime_period_oracle(3, Progression(1, 0), 5), Natural(1));
  EXPECT_EQ(per_prime_period_oracle(5, Progression(5, 2), 6), Natural(1));
  EXPECT_EQ(brute_prime_period(2, 1, 0, 5, 4), 4U);
  EXPECT_EQ(brute_prime_period(3, 1, 0, 5, 3), 1U);
  EXPECT_THROW(per_prime_period_oracle(2, Progression(4, 2), 5), PreconditionError);
  EXPECT_THROW(per_prime_period_oracle(2, Progression(1, 0), 40, WorkBudget{100}), BudgetError);
}

TEST(PerPrimeOracle, MatchesTrialDivisionOracle) {
  for (std::uint64_t k = 1; k <= 9; ++k)
    for (std::uint64_t a = 1; a <= 6; ++a)
      for (std::uint64_t b = 0; b <= 6; ++b) {
        const Progression prog(a, b);
        if (!prog.is_reduced()) continue;
        for (auto p : primes_upto(k + 3)) {
          const std::uint64_t limit = p <= k ? *checked_pow(p, e_pk(p, k)) : 1;
          ASSERT_EQ(per_prime_period_oracle(p, prog, k), Natural(brute_prime_period(p, a, b, k, limit)))
              << "p=" << p << " k=" << k << " a=" << a << " b=" << b;
        }
      }
}

TEST(Witness, Examples) {
  const Witness w = nonperiod_witness(2, Progression(1, 0), 5);
  EXPECT_EQ(w.n0, 4U);
  EXPECT_EQ(w.shift, 2U);
  EXPECT_EQ(w.value_at_n0, 3U);
  EXPECT_EQ(w.value_at_shifted, 2U);

  const Witness w9 = nonperiod_witness(3, Progression(1, 0), 9);
  EXPECT_EQ(w9.n0 % 9, 0U);
  EXPECT_NE(gp_counts(3, Progression(1, 0), Window(w9.n0, 9)),
            gp_counts(3, Progression(1, 0), Window(w9.n0 + w9.shift, 9)));

  const Witness w31 = nonperiod_witness(2, Progression(3, 1), 5);
  EXPECT_EQ(w31.n0, 1U);
  EXPECT_NE(oracle::vp(2, oracle::g(3, 1, w31.n0, 5)), oracle::vp(2, oracle::g(3, 1, w31.n0 + w31.shift, 5)));
}

TEST(Witness, SecondCaseResidues) {
  // k = 6, p = 2: e = 2, (k+1) mod 4 = 3 > 4 - 2, so n0 is shifted back by p^(e-1) - 1.
  const Witness w = nonperiod_witness(2, Progression(1, 0), 6);
  EXPECT_EQ(w.n0, 3U);
  EXPECT_NE(oracle::vp(2, oracle::g(1, 0, w.n0, 6)), oracle::vp(2, oracle::g(1, 0, w.n0 + w.shift, 6)));
}

TEST(Witness, PreconditionsAreReported) {
  EXPECT_THROW(nonperiod_witness(2, Progression(1, 0), 3), PreconditionError);
  EXPECT_THROW(nonperiod_witness(2, Progression(2, 1), 5), PreconditionError);
  EXPECT_THROW(nonperiod_witness(7, Progression(1, 0), 5), PreconditionError);
  EXPECT_THROW(nonperiod_witness(2, Progression(4, 2), 5), PreconditionError);
  EXPECT_THROW(nonperiod_witness(4, Progression(1, 0), 5), PreconditionError);
}

TEST(Witness, AlwaysSeparatesWindows) {
  for (std::uint64_t k = 2; k <= 40; ++k)
    for (std::uint64_t a = 1; a <= 12; ++a)
      for (std::uint64_t b = 0; b <= 12; ++b) {
        const Progression prog(a, b);
        if (!prog.is_reduced()) continue;
        for (auto p : primes_upto(k)) {
          if (a % p == 0 || vp(p, k + 1) >= e_pk(p, k)) continue;
          const Witness w = nonperiod_witness(p, prog, k);
          ASSERT_GE(w.n0, 1U);
          ASSERT_NE(gp_direct(p, prog, Window(w.n0, k)), gp_direct(p, prog, Window(w.n0 + w.shift, k)));
        }
      }
}
