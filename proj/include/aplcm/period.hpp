#pragma once

#include <aplcm/budget.hpp>
#include <aplcm/error.hpp>
#include <aplcm/gfun.hpp>
#include <aplcm/natural.hpp>
#include <aplcm/numtheory.hpp>
#include <aplcm/progression.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace aplcm {

namespace detail {

inline std::uint64_t vp_small(std::uint64_t p, std::uint64_t x) {
  std::uint64_t s = 0;
  while (x % p == 0) {
    x /= p;
    ++s;
  }
  return s;
}

inline std::uint64_t e_pk_small(std::uint64_t p, std::uint64_t k) {
  std::uint64_t e = 0, power = 1;
  while (power <= k / p) {
    power *= p;
    ++e;
  }
  return e;
}

// v_p(k+1) >= e_{p,k}: every p^e <= k divides k + 1.
inline bool saturates(std::uint64_t p, std::uint64_t k) { return vp_small(p, k + 1) >= e_pk_small(p, k); }

inline std::vector<std::uint64_t> divisors_ascending(const FactoredInteger& x) {
  std::vector<std::uint64_t> divs{1};
  for (const auto& [p, e] : x.factors()) {
    const std::size_t base = divs.size();
    std::uint64_t pe = 1;
    for (std::uint64_t i = 1; i <= e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace detail

/// The δ factor: p^{e_{p,k}} for the prime p <= k with p not dividing a and
/// v_p(k+1) >= e_{p,k}, or 1 when no prime qualifies.
struct Delta {
  Natural value{1U};
  std::optional<std::uint64_t> prime;
};

inline Delta delta(std::uint64_t k, std::uint64_t a) {
  if (a == 0) throw PreconditionError("delta: a must be positive");
  Delta out;
  for (auto p : primes_upto(k)) {
    if (a % p == 0 || !detail::saturates(p, k)) continue;
    if (out.prime) {
      throw InvariantViolation("delta: two qualifying primes " + std::to_string(*out.prime) + " and " +
                               std::to_string(p) + " for k=" + std::to_string(k));
    }
    out.prime = p;
    out.value = pow(Natural(p), detail::e_pk_small(p, k));
  }
  return out;
}

/// L_k over δ_{k,a} and over q^{e_{q,k}} for every prime q dividing gcd(a, L_k).
inline FactoredInteger Q(std::uint64_t k, std::uint64_t a) {
  const Delta dl = delta(k, a);
  FactoredInteger result = L(k);
  if (dl.prime) result = result.divided_by(*dl.prime, detail::e_pk_small(*dl.prime, k));
  for (auto q : primes_upto(k)) {
    if (a % q == 0) result = result.divided_by(q, detail::e_pk_small(q, k));
  }
  return result;
}

/// The closed-form smallest period with its derivation.
struct PeriodReport {
  std::uint64_t k = 0;
  std::uint64_t a = 1;
  std::uint64_t b = 0;
  std::uint64_t a_reduced = 1;
  FactoredInteger closed_form;
  Natural delta{1U};
  std::optional<std::uint64_t> delta_prime;
  /// (q, e_{q,k}) for each prime q dividing gcd(a_reduced, L_k).
  std::vector<std::pair<std::uint64_t, std::uint64_t>> removed_primes;
  /// p -> p^{e_p(k,a_reduced)} for every prime p <= k.
  std::map<std::uint64_t, Natural> per_prime;
  std::optional<Natural> oracle_value;
};

/// Smallest period of n -> g(prog, (n, k)) from the closed form, computed
/// for the reduced progression. The per-prime exponents are derived
/// separately and must multiply out to the same value.
inline PeriodReport smallest_period(const Progression& prog, std::uint64_t k) {
  PeriodReport r;
  r.k = k;
  r.a = prog.a();
  r.b = prog.b();
  r.a_reduced = prog.a_reduced();

  const Delta dl = delta(k, r.a_reduced);
  r.delta = dl.value;
  r.delta_prime = dl.prime;
  r.closed_form = Q(k, r.a_reduced);

  Natural per_prime_product(1U);
  for (auto p : primes_upto(k)) {
    const std::uint64_t e = detail::e_pk_small(p, k);
    if (r.a_reduced % p == 0) r.removed_primes.emplace_back(p, e);
    const bool vanishes = detail::saturates(p, k) || r.a_reduced % p == 0;
    const Natural contribution = vanishes ? Natural(1U) : pow(Natural(p), e);
    per_prime_product *= contribution;
    r.per_prime.emplace(p, contribution);
  }
  if (per_prime_product != r.closed_form.value()) {
    throw InvariantViolation("smallest_period: per-prime product " + per_prime_product.to_string() +
                             " != closed form " + r.closed_form.value().to_string());
  }
  return r;
}

/// Smallest period by exhaustion: the first divisor T of L_k (ascending)
/// with g(n + T) = g(n) for every n in [1, L_k].
///
/// Any period's gcd with the period L_k is again a period, so the smallest
/// period divides L_k, and one window of L_k start points covers every
/// residue.
inline Natural smallest_period_oracle(const Progression& prog, std::uint64_t k,
                                      const WorkBudget& budget = WorkBudget::from_env()) {
  const FactoredInteger lk = L(k);
  if (!lk.value().fits_u64()) throw BudgetError("smallest_period_oracle: L_k does not fit in 64 bits");
  const std::uint64_t span = lk.value().to_u64();
  const auto divisors = detail::divisors_ascending(lk);
  budget.require(saturating_mul(saturating_mul(span, k + 1), divisors.size()),
                 "smallest_period_oracle(k=" + std::to_string(k) + ")");

  std::vector<Natural> values(2 * span + 1);
  for (std::uint64_t n = 1; n <= 2 * span; ++n) values[n] = g(prog, Window(n, k));

  for (auto t : divisors) {
    bool periodic = true;
    for (std::uint64_t n = 1; n <= span && periodic; ++n) periodic = values[n + t] == values[n];
    if (periodic) return Natural(t);
  }
  throw InvariantViolation("smallest_period_oracle: L_k is not a period for " + prog.to_string() +
                           ", k=" + std::to_string(k));
}

/// Smallest period of n -> v_p(g(n)) by exhaustion over the powers of p
/// dividing p^{e_{p,k}}.
inline Natural per_prime_period_oracle(std::uint64_t p, const Progression& prog, std::uint64_t k,
                                       const WorkBudget& budget = WorkBudget::from_env()) {
  detail::require_reduced(prog, "per_prime_period_oracle");
  detail::require_prime(p, "per_prime_period_oracle");
  if (k == 0 || p > k) return Natural(1U);
  const std::uint64_t top = detail::e_pk_small(p, k);
  const std::uint64_t span = *checked_pow(p, top);
  budget.require(saturating_mul(saturating_mul(span, k + 1), top + 1),
                 "per_prime_period_oracle(p=" + std::to_string(p) + ", k=" + std::to_string(k) + ")");

  std::vector<std::uint64_t> values(2 * span + 1);
  for (std::uint64_t n = 1; n <= 2 * span; ++n) values[n] = gp_counts(p, prog, Window(n, k));

  std::uint64_t t = 1;
  for (std::uint64_t e = 0; e <= top; ++e, t *= p) {
    bool periodic = true;
    for (std::uint64_t n = 1; n <= span && periodic; ++n) periodic = values[n + t] == values[n];
    if (periodic) return Natural(t);
  }
  throw InvariantViolation("per_prime_period_oracle: p^e_pk is not a period");
}

/// An index n0 at which shifting by p^{E-1} (E = e_{p,k}) changes v_p(g).
struct Witness {
  std::uint64_t n0 = 0;
  std::uint64_t shift = 0;
  std::uint64_t value_at_n0 = 0;
  std::uint64_t value_at_shifted = 0;
};

/// Builds n0 so that b + n0 a (when (k+1) mod p^E <= p^E - p^{E-1}) or
/// b + (n0 + p^{E-1} - 1) a (otherwise) is divisible by p^E; the shifted
/// window then holds one fewer multiple of p^E. The result is re-checked.
inline Witness nonperiod_witness(std::uint64_t p, const Progression& prog, std::uint64_t k) {
  detail::require_reduced(prog, "nonperiod_witness");
  detail::require_prime(p, "nonperiod_witness");
  if (prog.a() % p == 0) throw PreconditionError("nonperiod_witness: p divides a");
  if (p > k) throw PreconditionError("nonperiod_witness: p > k");
  if (detail::saturates(p, k)) throw PreconditionError("nonperiod_witness: v_p(k+1) >= e_{p,k}, p-part has period 1");

  const std::uint64_t top = detail::e_pk_small(p, k);
  const std::uint64_t modulus = *checked_pow(p, top);
  const std::uint64_t shift = modulus / p;
  const std::uint64_t l = (k + 1) % modulus;

  const std::uint64_t a_inv = *inverse_mod(prog.a() % modulus, modulus);
  const std::uint64_t root = mul_mod((modulus - prog.b() % modulus) % modulus, a_inv, modulus);
  std::uint64_t residue = root;
  if (!(l >= 1 && l <= modulus - shift)) residue = (root + modulus - (shift - 1) % modulus) % modulus;
  const std::uint64_t n0 = residue == 0 ? modulus : residue;

  Witness w{n0, shift, gp_counts(p, prog, Window(n0, k)), gp_counts(p, prog, Window(n0 + shift, k))};
  if (w.value_at_n0 == w.value_at_shifted) {
    throw InvariantViolation("nonperiod_witness: constructed n0=" + std::to_string(n0) +
                             " does not separate the shifted windows");
  }
  return w;
}

}  // namespace aplcm
