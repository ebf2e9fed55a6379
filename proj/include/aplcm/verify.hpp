#pragma once

#include <aplcm/budget.hpp>
#include <aplcm/error.hpp>
#include <aplcm/gfun.hpp>
#include <aplcm/identities.hpp>
#include <aplcm/natural.hpp>
#include <aplcm/numtheory.hpp>
#include <aplcm/period.hpp>
#include <aplcm/progression.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

namespace aplcm::verify {

struct Failure {
  std::string input;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t cases_run = 0;
  std::vector<Failure> failures;
  double elapsed_seconds = 0.0;

  [[nodiscard]] bool passed() const { return failures.empty() && cases_run > 0; }
};

struct SuiteOptions {
  WorkBudget budget = WorkBudget::from_env();
  unsigned jobs = 1;
  std::uint64_t seed = 0x5eed'a91c;
};

/// Result of one unit of work: how many individual checks it made and
/// which of them failed.
struct CaseOutcome {
  std::uint64_t checks = 0;
  std::vector<Failure> failures;

  void expect(bool ok, std::string input, std::string expected, std::string actual) {
    ++checks;
    if (!ok) failures.push_back({std::move(input), std::move(expected), std::move(actual)});
  }
  void expect_eq(const Natural& expected, const Natural& actual, std::string input) {
    expect(expected == actual, std::move(input), expected.to_string(), actual.to_string());
  }
};

/// Runs `check` over `cases` on up to `jobs` threads. Failures are merged
/// in case order, so the report does not depend on the worker count.
template <typename Case>
VerificationReport run_cases(const std::string& suite, const std::vector<Case>& cases,
                             const std::function<CaseOutcome(const Case&)>& check, unsigned jobs) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<CaseOutcome> outcomes(cases.size());
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < cases.size(); i += stride) {
      try {
        outcomes[i] = check(cases[i]);
      } catch (const std::exception& e) {
        outcomes[i].checks += 1;
        outcomes[i].failures.push_back({"case #" + std::to_string(i), "no exception", e.what()});
      }
    }
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(cases.size())));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }

  VerificationReport report;
  report.suite = suite;
  for (auto& o : outcomes) {
    report.cases_run += o.checks;
    for (auto& f : o.failures) report.failures.push_back(std::move(f));
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace detail {

struct Triple {
  std::uint64_t k, a, b;
};

inline std::string tag(std::uint64_t k, std::uint64_t a, std::uint64_t b) {
  return "k=" + std::to_string(k) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
}
inline std::string tag(std::uint64_t k, std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return tag(k, a, b) + " n=" + std::to_string(n);
}

// Canonical (k, a, b) order over k <= k_max, 1 <= a <= a_max, 0 <= b <= b_max.
inline std::vector<Triple> sweep(std::uint64_t k_min, std::uint64_t k_max, std::uint64_t a_max,
                                 std::uint64_t b_max, bool reduced_only) {
  std::vector<Triple> out;
  for (std::uint64_t k = k_min; k <= k_max; ++k) {
    for (std::uint64_t a = 1; a <= a_max; ++a) {
      for (std::uint64_t b = 0; b <= b_max; ++b) {
        if (reduced_only && !Progression(a, b).is_reduced()) continue;
        out.push_back({k, a, b});
      }
    }
  }
  return out;
}

inline VerificationReport over_triples(const std::string& name, const std::vector<Triple>& cases,
                                       const SuiteOptions& opt, const std::function<CaseOutcome(const Triple&)>& f) {
  return run_cases<Triple>(name, cases, f, opt.jobs);
}

}  // namespace detail

// Sweep limits shared by the suites below.
constexpr std::uint64_t kSweepK = 8;
constexpr std::uint64_t kSweepA = 10;
constexpr std::uint64_t kSweepB = 10;
constexpr std::uint64_t kSweepN = 200;

/// Closed-form smallest period equals the exhaustive oracle.
inline VerificationReport closed_form_period(const SuiteOptions& opt) {
  return detail::over_triples("closed-form-period", detail::sweep(0, kSweepK, kSweepA, kSweepB, false), opt,
                              [&](const detail::Triple& c) {
                                CaseOutcome o;
                                const Progression prog(c.a, c.b);
                                o.expect_eq(smallest_period(prog, c.k).closed_form.value(),
                                            smallest_period_oracle(prog, c.k, opt.budget),
                                            detail::tag(c.k, c.a, c.b));
                                return o;
                              });
}

/// Smallest periods of g_k for k = 0..10, against the published values.
/// k <= 8 is confirmed by the full oracle, every k by the lcm of per-prime
/// oracles.
inline VerificationReport farhi_kane_table(const SuiteOptions& opt) {
  static const std::vector<std::uint64_t> expected{1, 1, 2, 3, 12, 20, 60, 105, 280, 504, 2520};
  std::vector<std::uint64_t> ks(expected.size());
  for (std::uint64_t k = 0; k < ks.size(); ++k) ks[k] = k;
  return run_cases<std::uint64_t>("farhi-kane-table", ks, [&](const std::uint64_t& k) {
    CaseOutcome o;
    const Progression naturals(1, 0);
    const std::string in = detail::tag(k, 1, 0);
    const Natural closed = smallest_period(naturals, k).closed_form.value();
    o.expect_eq(Natural(expected[k]), closed, in + " closed form");
    if (k <= kSweepK) o.expect_eq(Natural(expected[k]), smallest_period_oracle(naturals, k, opt.budget), in + " oracle");
    Natural joined(1U);
    for (auto p : primes_upto(k)) joined = lcm(joined, per_prime_period_oracle(p, naturals, k, opt.budget));
    o.expect_eq(Natural(expected[k]), joined, in + " lcm of per-prime oracles");
    return o;
  }, opt.jobs);
}

/// v_p(g) from the expanded value equals the divisibility-count formula.
inline VerificationReport valuation_paths(const SuiteOptions& opt) {
  return detail::over_triples("valuation-paths", detail::sweep(0, kSweepK, kSweepA, kSweepB, true), opt,
                              [](const detail::Triple& c) {
                                CaseOutcome o;
                                const Progression prog(c.a, c.b);
                                const auto primes = primes_upto(c.k);
                                for (std::uint64_t n = 1; n <= kSweepN; ++n) {
                                  const Window w(n, c.k);
                                  const Natural gv = g(prog, w);
                                  for (auto p : primes) {
                                    const auto counted = gp_counts(p, prog, w);
                                    const auto direct = vp(p, gv);
                                    o.expect(counted == direct, detail::tag(c.k, c.a, c.b, n) + " p=" + std::to_string(p),
                                             std::to_string(direct), std::to_string(counted));
                                  }
                                }
                                return o;
                              });
}

/// Modular and scanning divisibility counts agree; at most one multiple of
/// p^e above e_pk, at least one at or below it.
inline VerificationReport residue_counts(const SuiteOptions& opt) {
  return detail::over_triples("residue-counts", detail::sweep(1, kSweepK, kSweepA, kSweepB, true), opt,
                              [](const detail::Triple& c) {
                                CaseOutcome o;
                                const Progression prog(c.a, c.b);
                                for (auto p : primes_upto(c.k + 3)) {
                                  const std::uint64_t top = e_pk(p, c.k);
                                  for (std::uint64_t n = 1; n <= 60; ++n) {
                                    const Window w(n, c.k);
                                    for (std::uint64_t e = 1; e <= top + 2; ++e) {
                                      const std::string in =
                                          detail::tag(c.k, c.a, c.b, n) + " p=" + std::to_string(p) + " e=" + std::to_string(e);
                                      const auto fast = count_multiples(p, e, prog, w);
                                      const auto slow = count_multiples_naive(p, e, prog, w);
                                      o.expect(fast == slow, in, std::to_string(slow), std::to_string(fast));
                                      if (c.a % p == 0) continue;
                                      if (e > top) o.expect(fast <= 1, in + " (e > e_pk)", "<= 1", std::to_string(fast));
                                      if (e <= top) o.expect(fast >= 1, in + " (e <= e_pk)", ">= 1", std::to_string(fast));
                                    }
                                  }
                                }
                                return o;
                              });
}

/// Per-prime smallest periods: p^{e_pk} unless v_p(k+1) >= e_pk, 1 when
/// p > k or p | a; every non-period witness verified.
inline VerificationReport per_prime_periods(const SuiteOptions& opt) {
  return detail::over_triples(
      "per-prime-periods", detail::sweep(0, kSweepK, kSweepA, kSweepB, true), opt, [&](const detail::Triple& c) {
        CaseOutcome o;
        const Progression prog(c.a, c.b);
        for (auto p : primes_upto(c.k + 5)) {
          const std::string in = detail::tag(c.k, c.a, c.b) + " p=" + std::to_string(p);
          const Natural observed = per_prime_period_oracle(p, prog, c.k, opt.budget);
          if (p > c.k || c.a % p == 0) {
            o.expect_eq(Natural(1U), observed, in);
            continue;
          }
          const std::uint64_t top = e_pk(p, c.k);
          const bool saturated = vp(p, c.k + 1) >= top;
          o.expect_eq(saturated ? Natural(1U) : pow(Natural(p), top), observed, in);
          if (!saturated) {
            const Witness w = nonperiod_witness(p, prog, c.k);
            const auto before = gp_counts(p, prog, Window(w.n0, c.k));
            const auto after = gp_counts(p, prog, Window(w.n0 + w.shift, c.k));
            o.expect(before != after, in + " witness n0=" + std::to_string(w.n0), "differing values",
                     std::to_string(before) + " vs " + std::to_string(after));
          }
        }
        return o;
      });
}

/// The full smallest period is the lcm of the per-prime smallest periods.
inline VerificationReport per_prime_lcm(const SuiteOptions& opt) {
  return detail::over_triples("per-prime-lcm", detail::sweep(0, kSweepK, kSweepA, kSweepB, true), opt,
                              [&](const detail::Triple& c) {
                                CaseOutcome o;
                                const Progression prog(c.a, c.b);
                                Natural joined(1U);
                                for (auto p : primes_upto(c.k)) joined = lcm(joined, per_prime_period_oracle(p, prog, c.k, opt.budget));
                                o.expect_eq(smallest_period_oracle(prog, c.k, opt.budget), joined, detail::tag(c.k, c.a, c.b));
                                return o;
                              });
}

/// A progression and its gcd-reduction have the same smallest period.
inline VerificationReport reduction(const SuiteOptions& opt) {
  std::vector<detail::Triple> cases;
  for (const auto& c : detail::sweep(0, 6, kSweepA, kSweepB, false)) {
    if (!Progression(c.a, c.b).is_reduced()) cases.push_back(c);
  }
  return detail::over_triples("reduction", cases, opt, [&](const detail::Triple& c) {
    CaseOutcome o;
    const Progression prog(c.a, c.b);
    o.expect_eq(smallest_period_oracle(prog.reduced(), c.k, opt.budget), smallest_period_oracle(prog, c.k, opt.budget),
                detail::tag(c.k, c.a, c.b));
    o.expect_eq(smallest_period(prog.reduced(), c.k).closed_form.value(), smallest_period(prog, c.k).closed_form.value(),
                detail::tag(c.k, c.a, c.b) + " closed form");
    return o;
  });
}

/// Closed form against the Farhi-Kane P_k with the primes of gcd(a', P_k)
/// stripped, and P_{k,a,b} = P_k whenever a | b.
inline VerificationReport farhi_kane_relation(const SuiteOptions& opt) {
  return detail::over_triples("farhi-kane-relation", detail::sweep(0, 30, 30, 30, false), opt,
                              [](const detail::Triple& c) {
                                CaseOutcome o;
                                const Progression prog(c.a, c.b);
                                const FactoredInteger pk = smallest_period(Progression(1, 0), c.k).closed_form;
                                FactoredInteger expected = pk;
                                for (const auto& [p, e] : pk.factors()) {
                                  if (prog.a_reduced() % p == 0) expected = expected.divided_by(p, e_pk(p, c.k));
                                }
                                const Natural actual = smallest_period(prog, c.k).closed_form.value();
                                o.expect_eq(expected.value(), actual, detail::tag(c.k, c.a, c.b));
                                if (c.b % c.a == 0) o.expect_eq(pk.value(), actual, detail::tag(c.k, c.a, c.b) + " (a | b)");
                                return o;
                              });
}

/// At most one prime p <= k with v_p(k+1) >= e_pk, for every k <= 10^4.
inline VerificationReport delta_uniqueness(const SuiteOptions& opt) {
  constexpr std::uint64_t kMax = 10'000;
  const auto primes = primes_upto(kMax);
  std::vector<std::uint64_t> ks;
  for (std::uint64_t k = 0; k <= kMax; ++k) ks.push_back(k);
  return run_cases<std::uint64_t>("delta-uniqueness", ks, [&](const std::uint64_t& k) {
    CaseOutcome o;
    std::uint64_t qualifying = 0;
    for (auto p : primes) {
      if (p > k) break;
      if (vp(p, k + 1) >= e_pk(p, k)) ++qualifying;
    }
    o.expect(qualifying <= 1, "k=" + std::to_string(k), "<= 1 qualifying prime", std::to_string(qualifying));
    return o;
  }, opt.jobs);
}

/// Consecutive odd numbers (a = 2, b = 1): closed form equals the oracle
/// and L_k / (2^{e_2k} D_k), with D_k the odd-prime analogue of δ.
inline VerificationReport odd_progression(const SuiteOptions& opt) {
  std::vector<std::uint64_t> ks;
  for (std::uint64_t k = 0; k <= kSweepK; ++k) ks.push_back(k);
  return run_cases<std::uint64_t>("odd-progression", ks, [&](const std::uint64_t& k) {
    CaseOutcome o;
    const Progression odds(2, 1);
    const std::string in = detail::tag(k, 2, 1);
    const Natural closed = smallest_period(odds, k).closed_form.value();
    o.expect_eq(smallest_period_oracle(odds, k, opt.budget), closed, in);
    if (k >= 2) {
      Natural d(1U);
      for (auto p : primes_upto(k)) {
        if (p != 2 && vp(p, k + 1) >= e_pk(p, k)) d = pow(Natural(p), e_pk(p, k));
      }
      o.expect_eq(L(k).value() / (pow(Natural(2U), e_pk(2, k)) * d), closed, in + " odd-prime form");
    }
    static const std::map<std::uint64_t, std::uint64_t> known{{2, 1}, {3, 3}, {5, 5}};
    if (auto it = known.find(k); it != known.end()) o.expect_eq(Natural(it->second), closed, in + " known value");
    return o;
  }, opt.jobs);
}

/// Inclusion-exclusion lcm equals iterated lcm on random tuples.
inline VerificationReport hua(const SuiteOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::uint64_t> len(2, 8), val(1, 500);
  std::vector<std::vector<Natural>> cases(10'000);
  for (auto& c : cases) {
    const auto n = len(rng);
    for (std::uint64_t i = 0; i < n; ++i) c.emplace_back(val(rng));
  }
  return run_cases<std::vector<Natural>>("hua", cases, [](const std::vector<Natural>& xs) {
    CaseOutcome o;
    std::string in = "[";
    for (const auto& x : xs) in += (in.size() > 1 ? "," : "") + x.to_string();
    in += "]";
    o.expect_eq(lcm_many(xs), hua_lcm(xs), in);
    return o;
  }, opt.jobs);
}

/// Period-table lcm equals direct lcm on random windows, a tenth of them
/// at start indices divisible by the period.
inline VerificationReport fast_lcm_suite(const SuiteOptions& opt) {
  struct Case {
    std::uint64_t k, a, b, n;
  };
  std::mt19937_64 rng(opt.seed ^ 0xfa57);
  std::uniform_int_distribution<std::uint64_t> ks(0, 10), as(1, 12), bs(0, 12), ns(1, 1'000'000'000);
  std::vector<Case> cases;
  for (int i = 0; i < 1000; ++i) {
    Case c{ks(rng), as(rng), bs(rng), ns(rng)};
    if (i % 10 == 0) {
      const std::uint64_t period = smallest_period(Progression(c.a, c.b), c.k).closed_form.value().to_u64();
      c.n = std::max<std::uint64_t>(1, c.n / period) * period;
    }
    cases.push_back(c);
  }
  std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>, PeriodTable> tables;
  for (const auto& c : cases) {
    const auto key = std::make_tuple(c.k, c.a, c.b);
    if (!tables.contains(key)) tables.emplace(key, build_period_table(Progression(c.a, c.b), c.k, opt.budget));
  }
  return run_cases<Case>("fast-lcm", cases, [&](const Case& c) {
    CaseOutcome o;
    const PeriodTable& t = tables.at(std::make_tuple(c.k, c.a, c.b));
    o.expect_eq(lcm_many(window_terms(Progression(c.a, c.b), Window(c.n, c.k))), fast_lcm(t, c.n),
                detail::tag(c.k, c.a, c.b, c.n));
    return o;
  }, opt.jobs);
}

/// g divides k! for reduced progressions, k! d^k in general, and
/// g(a, b) = d^k g(a/d, b/d).
inline VerificationReport factorial_divisibility(const SuiteOptions& opt) {
  return detail::over_triples("factorial-divisibility", detail::sweep(0, kSweepK, kSweepA, kSweepB, false), opt,
                              [](const detail::Triple& c) {
                                CaseOutcome o;
                                const Progression prog(c.a, c.b);
                                const Natural scale = pow(Natural(prog.d()), c.k);
                                const Natural bound = factorial(c.k) * scale;
                                for (std::uint64_t n = 1; n <= kSweepN; ++n) {
                                  const Natural gv = g(prog, Window(n, c.k));
                                  o.expect(gv.divides(bound), detail::tag(c.k, c.a, c.b, n), "divides " + bound.to_string(),
                                           gv.to_string());
                                  if (!prog.is_reduced()) {
                                    o.expect_eq(scale * g(prog.reduced(), Window(n, c.k)), gv,
                                                detail::tag(c.k, c.a, c.b, n) + " scaling");
                                  }
                                }
                                return o;
                              });
}

/// L_k is a period: g(n + L_k) = g(n).
inline VerificationReport lcm_period(const SuiteOptions& opt) {
  return detail::over_triples("lcm-period", detail::sweep(0, kSweepK, kSweepA, kSweepB, false), opt,
                              [](const detail::Triple& c) {
                                CaseOutcome o;
                                const Progression prog(c.a, c.b);
                                const std::uint64_t lk = L(c.k).value().to_u64();
                                for (std::uint64_t n = 1; n <= kSweepN; ++n) {
                                  o.expect_eq(g(prog, Window(n, c.k)), g(prog, Window(n + lk, c.k)), detail::tag(c.k, c.a, c.b, n));
                                }
                                return o;
                              });
}

/// Windows at n and n + L_k have equal pairwise gcds, so the gcd-transfer
/// check applies and must conclude (t = 2 and t = 3).
inline VerificationReport shifted_gcds(const SuiteOptions& opt) {
  return detail::over_triples("shifted-gcds", detail::sweep(1, kSweepK, kSweepA, kSweepB, true), opt,
                              [](const detail::Triple& c) {
                                CaseOutcome o;
                                const Progression prog(c.a, c.b);
                                const std::uint64_t lk = L(c.k).value().to_u64();
                                for (std::uint64_t n = 1; n <= 40; ++n) {
                                  const auto xs = window_terms(prog, Window(n, c.k));
                                  const auto ys = window_terms(prog, Window(n + lk, c.k));
                                  for (std::size_t t = 2; t <= std::min<std::size_t>(3, xs.size()); ++t) {
                                    const auto r = check_gcd_transfer(xs, ys, t);
                                    const std::string in = detail::tag(c.k, c.a, c.b, n) + " t=" + std::to_string(t);
                                    o.expect(r.hypothesis_held, in, "hypothesis holds", "hypothesis failed");
                                    o.expect(r.conclusion_held.value_or(false), in, r.adjusted_ratio_a, r.adjusted_ratio_b);
                                  }
                                }
                                return o;
                              });
}

/// product(u) | lcm(u) k! gcd(u_0, u_1)^k for every window.
inline VerificationReport window_lcm_multiple(const SuiteOptions& opt) {
  return detail::over_triples("window-lcm-multiple", detail::sweep(0, kSweepK, kSweepA, kSweepB, false), opt,
                              [](const detail::Triple& c) {
                                CaseOutcome o;
                                const Progression prog(c.a, c.b);
                                for (std::uint64_t n = 1; n <= kSweepN; ++n) {
                                  const auto r = check_window_lcm_multiple(prog, Window(n, c.k));
                                  o.expect(r.holds, detail::tag(c.k, c.a, c.b, n), "divides " + r.bound.to_string(),
                                           r.product.to_string());
                                }
                                return o;
                              });
}

inline VerificationReport farhi_bounds(const SuiteOptions& opt) {
  std::vector<std::uint64_t> ns;
  for (std::uint64_t n = 1; n <= 300; ++n) ns.push_back(n);
  return run_cases<std::uint64_t>("farhi-bounds", ns, [](const std::uint64_t& n) {
    CaseOutcome o;
    for (std::uint64_t k = 0; k <= 10; ++k) {
      const auto r = check_farhi_bounds(n, k);
      o.expect(r.holds(), "n=" + std::to_string(n) + " k=" + std::to_string(k),
               r.lower.to_string() + " | lcm | " + r.upper.to_string(), r.lcm.to_string());
    }
    return o;
  }, opt.jobs);
}

/// g_k(n) = gcd(k!, (n + k) g_{k-1}(n)).
inline VerificationReport recursion(const SuiteOptions& opt) {
  std::vector<std::uint64_t> ks;
  for (std::uint64_t k = 1; k <= kSweepK; ++k) ks.push_back(k);
  return run_cases<std::uint64_t>("recursion", ks, [](const std::uint64_t& k) {
    CaseOutcome o;
    for (std::uint64_t n = 1; n <= 500; ++n) {
      o.expect(check_recursion(k, n), "k=" + std::to_string(k) + " n=" + std::to_string(n), "holds", "fails");
    }
    return o;
  }, opt.jobs);
}

/// g_k(1) | g_k(n).
inline VerificationReport base_divisibility(const SuiteOptions& opt) {
  std::vector<std::uint64_t> ks;
  for (std::uint64_t k = 0; k <= kSweepK; ++k) ks.push_back(k);
  return run_cases<std::uint64_t>("base-divisibility", ks, [](const std::uint64_t& k) {
    CaseOutcome o;
    for (std::uint64_t n = 1; n <= 500; ++n) {
      o.expect(check_base_divisibility(k, n), "k=" + std::to_string(k) + " n=" + std::to_string(n), "holds", "fails");
    }
    return o;
  }, opt.jobs);
}

/// Properties of the integer primitives: v_p(L_k) = e_pk, p^e_pk <= k <
/// p^(e_pk+1), and lcm_many sits between its entries and their product.
inline VerificationReport primitives(const SuiteOptions& opt) {
  std::vector<std::uint64_t> ks;
  for (std::uint64_t k = 1; k <= 30; ++k) ks.push_back(k);
  return run_cases<std::uint64_t>("primitives", ks, [&](const std::uint64_t& k) {
    CaseOutcome o;
    const Natural lk = L(k).value();
    for (auto p : primes_upto(k)) {
      const auto e = e_pk(p, k);
      const std::string in = "k=" + std::to_string(k) + " p=" + std::to_string(p);
      o.expect(vp(p, lk) == e, in, std::to_string(e), std::to_string(vp(p, lk)));
      o.expect(pow(Natural(p), e) <= Natural(k) && Natural(k) < pow(Natural(p), e + 1), in, "p^e <= k < p^(e+1)",
               "e=" + std::to_string(e));
    }
    std::mt19937_64 rng(opt.seed + k);
    std::uniform_int_distribution<std::uint64_t> len(1, 8), val(1, 1'000'000);
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<Natural> xs;
      const auto n = len(rng);
      for (std::uint64_t i = 0; i < n; ++i) xs.emplace_back(val(rng));
      const Natural l = lcm_many(xs);
      bool ok = l.divides(product(xs));
      for (const auto& x : xs) ok = ok && x.divides(l);
      o.expect(ok, "random tuple #" + std::to_string(rep) + " seed k=" + std::to_string(k), "x_i | lcm | product",
               l.to_string());
    }
    return o;
  }, opt.jobs);
}

using SuiteFn = VerificationReport (*)(const SuiteOptions&);

/// Registered suites in canonical order.
inline const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> all{
      {"primitives", primitives},
      {"valuation-paths", valuation_paths},
      {"residue-counts", residue_counts},
      {"factorial-divisibility", factorial_divisibility},
      {"lcm-period", lcm_period},
      {"closed-form-period", closed_form_period},
      {"farhi-kane-table", farhi_kane_table},
      {"per-prime-periods", per_prime_periods},
      {"per-prime-lcm", per_prime_lcm},
      {"reduction", reduction},
      {"farhi-kane-relation", farhi_kane_relation},
      {"delta-uniqueness", delta_uniqueness},
      {"odd-progression", odd_progression},
      {"hua", hua},
      {"shifted-gcds", shifted_gcds},
      {"window-lcm-multiple", window_lcm_multiple},
      {"farhi-bounds", farhi_bounds},
      {"recursion", recursion},
      {"base-divisibility", base_divisibility},
      {"fast-lcm", fast_lcm_suite},
  };
  return all;
}

inline std::optional<SuiteFn> find_suite(const std::string& name) {
  for (const auto& [n, f] : suites()) {
    if (n == name) return f;
  }
  return std::nullopt;
}

}  // namespace aplcm::verify
