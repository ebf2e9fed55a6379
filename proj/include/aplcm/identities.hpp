#pragma once

#include <aplcm/budget.hpp>
#include <aplcm/error.hpp>
#include <aplcm/gfun.hpp>
#include <aplcm/natural.hpp>
#include <aplcm/numtheory.hpp>
#include <aplcm/period.hpp>
#include <aplcm/progression.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace aplcm {

/// Pairwise coprime integers > 1 such that every input is a product of
/// their powers. Exponents over such a base behave like p-adic valuations
/// under gcd and lcm, with no need to factor the inputs.
inline std::vector<Natural> coprime_base(std::span<const Natural> xs) {
  std::vector<Natural> base;
  for (const auto& x : xs) {
    if (x.is_zero()) throw PreconditionError("coprime_base: zero entry");
    if (x != Natural(1U)) base.push_back(x);
  }
  auto dedupe = [&] {
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
  };
  dedupe();
  // Each split replaces x, y by g, x/g, y/g, strictly shrinking the product.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < base.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
        const Natural gg = gcd(base[i], base[j]);
        if (gg == Natural(1U)) continue;
        const Natural x = base[i] / gg, y = base[j] / gg;
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(j));
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(i));
        for (const Natural& part : {gg, x, y}) {
          if (part != Natural(1U)) base.push_back(part);
        }
        dedupe();
        changed = true;
      }
    }
  }
  return base;
}

namespace detail {

using ExponentVector = std::vector<std::int64_t>;

inline ExponentVector exponents_over(const Natural& x, const std::vector<Natural>& base) {
  ExponentVector out(base.size(), 0);
  Natural rest = x;
  for (std::size_t j = 0; j < base.size(); ++j) {
    while (base[j].divides(rest)) {
      rest = rest / base[j];
      ++out[j];
    }
  }
  if (rest != Natural(1U)) throw InvariantViolation("coprime base does not cover " + x.to_string());
  return out;
}

// Visits every subset of {0..n-1} of size in [min_size, max_size] with
// the elementwise minimum of its members' exponent vectors.
inline void for_each_subset_min(const std::vector<ExponentVector>& exps, std::size_t min_size, std::size_t max_size,
                                const std::function<void(std::size_t, const ExponentVector&)>& visit) {
  const std::size_t n = exps.size();
  std::function<void(std::size_t, std::size_t, const ExponentVector&)> rec =
      [&](std::size_t next, std::size_t size, const ExponentVector& mins) {
        if (size >= min_size) visit(size, mins);
        if (size == max_size) return;
        for (std::size_t i = next; i < n; ++i) {
          ExponentVector m = mins;
          if (size == 0) {
            m = exps[i];
          } else {
            for (std::size_t j = 0; j < m.size(); ++j) m[j] = std::min(m[j], exps[i][j]);
          }
          rec(i + 1, size + 1, m);
        }
      };
  rec(0, 0, ExponentVector{});
}

inline Natural from_exponents(const std::vector<Natural>& base, const ExponentVector& e) {
  Natural acc(1U);
  for (std::size_t j = 0; j < base.size(); ++j) {
    if (e[j] < 0) throw InvariantViolation("negative exponent in an integer result");
    acc *= pow(base[j], static_cast<std::uint64_t>(e[j]));
  }
  return acc;
}

inline std::string ratio_string(const std::vector<Natural>& base, const ExponentVector& e) {
  ExponentVector num(e.size()), den(e.size());
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] >= 0) {
      num[j] = e[j];
    } else {
      den[j] = -e[j];
    }
  }
  return from_exponents(base, num).to_string() + "/" + from_exponents(base, den).to_string();
}

inline void require_positive_entries(std::span<const Natural> xs, const char* op) {
  for (const auto& x : xs) {
    if (x.is_zero()) throw PreconditionError(std::string(op) + ": zero entry");
  }
}

}  // namespace detail

constexpr std::size_t kMaxSubsetInputs = 20;

/// lcm via the inclusion-exclusion product over all subset gcds,
///   x_1 ... x_n * prod_{r>=2} prod_{|S|=r} gcd(S)^{(-1)^{r-1}},
/// evaluated as signed exponent sums over a coprime base of the inputs.
inline Natural hua_lcm(std::span<const Natural> xs) {
  if (xs.empty()) throw PreconditionError("hua_lcm: empty list");
  if (xs.size() > kMaxSubsetInputs) {
    throw BudgetError("hua_lcm: " + std::to_string(xs.size()) + " inputs exceed the subset limit of 20");
  }
  detail::require_positive_entries(xs, "hua_lcm");
  const auto base = coprime_base(xs);
  std::vector<detail::ExponentVector> exps;
  for (const auto& x : xs) exps.push_back(detail::exponents_over(x, base));

  detail::ExponentVector total(base.size(), 0);
  detail::for_each_subset_min(exps, 1, xs.size(), [&](std::size_t size, const detail::ExponentVector& mins) {
    const std::int64_t sign = size % 2 == 1 ? 1 : -1;
    for (std::size_t j = 0; j < total.size(); ++j) total[j] += sign * mins[j];
  });
  return detail::from_exponents(base, total);
}

/// Outcome of comparing two equal-length lists whose order-t subset gcds
/// agree. `conclusion_held` is empty when the hypothesis fails.
struct GcdTransferReport {
  bool hypothesis_held = false;
  std::optional<bool> conclusion_held;
  /// The order-(t-1) adjusted ratio of each side, "num/den"; filled when
  /// the hypothesis holds.
  std::string adjusted_ratio_a;
  std::string adjusted_ratio_b;
};

/// If every order-t subset gcd of xs_a equals the matching one of xs_b,
/// then (product / lcm) * prod_{r=2}^{t-1} prod_{|S|=r} gcd(S)^{(-1)^{r-1}}
/// agrees on both sides. For t = 2 that is product / lcm.
inline GcdTransferReport check_gcd_transfer(std::span<const Natural> xs_a, std::span<const Natural> xs_b,
                                            std::size_t t) {
  if (t < 2) throw PreconditionError("check_gcd_transfer: t must be >= 2");
  if (xs_a.size() != xs_b.size()) throw PreconditionError("check_gcd_transfer: lists differ in length");
  if (xs_a.size() < t) throw PreconditionError("check_gcd_transfer: fewer than t entries");
  if (xs_a.size() > kMaxSubsetInputs) throw BudgetError("check_gcd_transfer: more than 20 inputs");
  detail::require_positive_entries(xs_a, "check_gcd_transfer");
  detail::require_positive_entries(xs_b, "check_gcd_transfer");

  GcdTransferReport report;
  const std::size_t n = xs_a.size();
  bool same = true;
  std::vector<std::size_t> idx;
  std::function<void(std::size_t)> rec = [&](std::size_t next) {
    if (!same) return;
    if (idx.size() == t) {
      Natural ga(0U), gb(0U);
      for (auto i : idx) {
        ga = gcd(ga, xs_a[i]);
        gb = gcd(gb, xs_b[i]);
      }
      same = ga == gb;
      return;
    }
    for (std::size_t i = next; i < n; ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
  report.hypothesis_held = same;
  if (!same) return report;

  std::vector<Natural> all(xs_a.begin(), xs_a.end());
  all.insert(all.end(), xs_b.begin(), xs_b.end());
  const auto base = coprime_base(all);

  auto adjusted = [&](std::span<const Natural> xs) {
    std::vector<detail::ExponentVector> exps;
    for (const auto& x : xs) exps.push_back(detail::exponents_over(x, base));
    detail::ExponentVector total(base.size(), 0);
    for (const auto& e : exps) {
      for (std::size_t j = 0; j < total.size(); ++j) total[j] += e[j];
    }
    const auto lcm_exps = detail::exponents_over(lcm_many(xs), base);
    for (std::size_t j = 0; j < total.size(); ++j) total[j] -= lcm_exps[j];
    if (t > 2) {
      detail::for_each_subset_min(exps, 2, t - 1, [&](std::size_t size, const detail::ExponentVector& mins) {
        const std::int64_t sign = size % 2 == 1 ? 1 : -1;
        for (std::size_t j = 0; j < total.size(); ++j) total[j] += sign * mins[j];
      });
    }
    return total;
  };
  const auto ra = adjusted(xs_a);
  const auto rb = adjusted(xs_b);
  report.conclusion_held = ra == rb;
  report.adjusted_ratio_a = detail::ratio_string(base, ra);
  report.adjusted_ratio_b = detail::ratio_string(base, rb);
  return report;
}

/// n C(n+k, k) | lcm(n, ..., n+k) | n C(n+k, k) lcm(C(k,0), ..., C(k,k)).
struct FarhiBoundsReport {
  Natural lcm;
  Natural lower;
  Natural upper;
  bool lower_divides_lcm = false;
  bool lcm_divides_upper = false;
  [[nodiscard]] bool holds() const { return lower_divides_lcm && lcm_divides_upper; }
};

inline FarhiBoundsReport check_farhi_bounds(std::uint64_t n, std::uint64_t k) {
  if (n == 0) throw PreconditionError("check_farhi_bounds: n must be positive");
  FarhiBoundsReport r;
  r.lcm = lcm_many(window_terms(Progression(1, 0), Window(n, k)));
  r.lower = Natural(n) * binomial(Natural(n) + Natural(k), k);
  std::vector<Natural> row;
  for (std::uint64_t i = 0; i <= k; ++i) row.push_back(binomial(Natural(k), i));
  r.upper = r.lower * lcm_many(row);
  r.lower_divides_lcm = r.lower.divides(r.lcm);
  r.lcm_divides_upper = r.lcm.divides(r.upper);
  return r;
}

/// For window terms u_0 < ... < u_k: lcm(u) is a multiple of
/// u_0 ... u_k / (k! gcd(u_0, u_1)^k), checked as
/// product(u) | lcm(u) k! gcd(u_0, u_1)^k.
struct LcmMultipleReport {
  Natural product;
  Natural bound;
  bool holds = false;
};

inline LcmMultipleReport check_window_lcm_multiple(const Progression& prog, const Window& w) {
  const auto u = window_terms(prog, w);
  LcmMultipleReport r;
  r.product = product(u);
  const Natural step_gcd = u.size() > 1 ? gcd(u[0], u[1]) : Natural(1U);
  r.bound = lcm_many(u) * factorial(w.k) * pow(step_gcd, w.k);
  r.holds = r.product.divides(r.bound);
  return r;
}

/// g_k(n) = gcd(k!, (n + k) g_{k-1}(n)) for the progression 1, 2, 3, ...
inline bool check_recursion(std::uint64_t k, std::uint64_t n) {
  if (k == 0) throw PreconditionError("check_recursion: k must be >= 1");
  const Progression naturals(1, 0);
  const Natural lhs = g(naturals, Window(n, k));
  const Natural rhs = gcd(factorial(k), Natural(n + k) * g(naturals, Window(n, k - 1)));
  return lhs == rhs;
}

/// g_k(1) | g_k(n) for the progression 1, 2, 3, ...
inline bool check_base_divisibility(std::uint64_t k, std::uint64_t n) {
  const Progression naturals(1, 0);
  return g(naturals, Window(1, k)).divides(g(naturals, Window(n, k)));
}

/// g over one full smallest period. values[i] holds g at the start index
/// congruent to i; index 0 holds g(period).
class PeriodTable {
 public:
  PeriodTable(Progression prog, std::uint64_t k, std::vector<Natural> values)
      : prog_(prog), k_(k), values_(std::move(values)) {
    if (values_.empty()) throw PreconditionError("PeriodTable: period must be >= 1");
    for (const auto& v : values_) {
      if (v.is_zero()) throw PreconditionError("PeriodTable: zero g-value");
    }
  }

  [[nodiscard]] const Progression& progression() const noexcept { return prog_; }
  [[nodiscard]] std::uint64_t k() const noexcept { return k_; }
  [[nodiscard]] std::uint64_t period() const noexcept { return values_.size(); }
  [[nodiscard]] const std::vector<Natural>& values() const noexcept { return values_; }

  [[nodiscard]] const Natural& value_for(std::uint64_t n) const { return values_[n % values_.size()]; }

  friend bool operator==(const PeriodTable&, const PeriodTable&) = default;

 private:
  Progression prog_;
  std::uint64_t k_;
  std::vector<Natural> values_;
};

inline PeriodTable build_period_table(const Progression& prog, std::uint64_t k,
                                      const WorkBudget& budget = WorkBudget::from_env()) {
  const PeriodReport report = smallest_period(prog, k);
  const Natural& period = report.closed_form.value();
  if (!period.fits_u64()) throw BudgetError("build_period_table: period does not fit in 64 bits");
  const std::uint64_t p = period.to_u64();
  budget.require(saturating_mul(p, k + 1), "build_period_table(period=" + period.to_string() + ")");
  std::vector<Natural> values;
  values.reserve(p);
  values.push_back(g(prog, Window(p, k)));
  for (std::uint64_t i = 1; i < p; ++i) values.push_back(g(prog, Window(i, k)));
  return {prog, k, std::move(values)};
}

/// lcm of the window at n as its product over the tabulated g-value.
inline Natural fast_lcm(const PeriodTable& table, std::uint64_t n) {
  const auto terms = window_terms(table.progression(), Window(n, table.k()));
  return exact_div(product(terms), table.value_for(n), "fast_lcm");
}

}  // namespace aplcm
