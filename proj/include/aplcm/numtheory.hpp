#pragma once

#include <aplcm/error.hpp>
#include <aplcm/natural.hpp>

#include <boost/multiprecision/integer.hpp>

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace aplcm {

inline Natural gcd(const Natural& x, const Natural& y) {
  return Natural(boost::multiprecision::gcd(x.raw(), y.raw()));
}

inline Natural lcm(const Natural& x, const Natural& y) {
  if (x.is_zero() || y.is_zero()) throw PreconditionError("lcm: zero argument");
  return x / gcd(x, y) * y;
}

/// Least common multiple of a non-empty list of positive integers, folded
/// pairwise with lcm(x, y) = x*y / gcd(x, y).
inline Natural lcm_many(std::span<const Natural> xs) {
  if (xs.empty()) throw PreconditionError("lcm_many: empty list");
  Natural acc(1U);
  for (const auto& x : xs) {
    if (x.is_zero()) throw PreconditionError("lcm_many: zero entry");
    acc = lcm(acc, x);
  }
  return acc;
}

inline Natural product(std::span<const Natural> xs) {
  Natural acc(1U);
  for (const auto& x : xs) acc *= x;
  return acc;
}

inline Natural factorial(std::uint64_t k) {
  Natural acc(1U);
  for (std::uint64_t i = 2; i <= k; ++i) acc *= Natural(i);
  return acc;
}

// ---------------------------------------------------------------------------
// Machine-word helpers

inline std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % m);
}

/// Inverse of x modulo m, if gcd(x, m) = 1. m >= 1.
inline std::optional<std::uint64_t> inverse_mod(std::uint64_t x, std::uint64_t m) {
  if (m == 1) return 0;
  __int128 old_r = static_cast<__int128>(x % m), r = static_cast<__int128>(m);
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    __int128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) return std::nullopt;
  __int128 inv = old_s % static_cast<__int128>(m);
  if (inv < 0) inv += m;
  return static_cast<std::uint64_t>(inv);
}

/// base^exp, or nullopt if the result does not fit in 64 bits.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t acc = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && acc > std::numeric_limits<std::uint64_t>::max() / base) return std::nullopt;
    acc *= base;
  }
  return acc;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Ascending primes <= k (sieve of Eratosthenes).
inline std::vector<std::uint64_t> primes_upto(std::uint64_t k) {
  std::vector<std::uint64_t> out;
  if (k < 2) return out;
  std::vector<bool> composite(k + 1, false);
  for (std::uint64_t i = 2; i <= k; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    if (i > k / i) continue;
    for (std::uint64_t j = i * i; j <= k; j += i) composite[j] = true;
  }
  return out;
}

/// p-adic valuation of a positive integer.
inline std::uint64_t vp(std::uint64_t p, const Natural& x) {
  if (!is_prime(p)) throw PreconditionError("vp: " + std::to_string(p) + " is not prime");
  if (x.is_zero()) throw PreconditionError("vp: valuation of zero is infinite");
  std::uint64_t s = 0;
  Natural::rep q = x.raw(), r;
  const Natural::rep pp(p);
  for (;;) {
    Natural::rep next;
    boost::multiprecision::divide_qr(q, pp, next, r);
    if (!r.is_zero()) break;
    q = std::move(next);
    ++s;
  }
  return s;
}

inline std::uint64_t vp(std::uint64_t p, std::uint64_t x) { return vp(p, Natural(x)); }

/// Largest e with p^e <= k, found by exact multiplication.
inline std::uint64_t e_pk(std::uint64_t p, std::uint64_t k) {
  if (!is_prime(p)) throw PreconditionError("e_pk: " + std::to_string(p) + " is not prime");
  if (k == 0) throw PreconditionError("e_pk: k must be positive");
  std::uint64_t e = 0, power = 1;
  while (power <= k / p) {
    power *= p;
    ++e;
  }
  return e;
}

/// A positive integer held as its prime factorization, with the expanded
/// value cached. The factorization is authoritative.
class FactoredInteger {
 public:
  using Factors = std::map<std::uint64_t, std::uint64_t>;

  FactoredInteger() = default;

  explicit FactoredInteger(Factors factors) {
    for (const auto& [p, e] : factors) {
      if (!is_prime(p)) throw PreconditionError("FactoredInteger: " + std::to_string(p) + " is not prime");
      if (e > 0) factors_.emplace(p, e);
    }
    recompute();
  }

  [[nodiscard]] const Factors& factors() const noexcept { return factors_; }
  [[nodiscard]] const Natural& value() const noexcept { return value_; }

  [[nodiscard]] std::uint64_t exponent(std::uint64_t p) const {
    auto it = factors_.find(p);
    return it == factors_.end() ? 0 : it->second;
  }

  /// Removes p^e; throws InvariantViolation if p^e does not divide.
  [[nodiscard]] FactoredInteger divided_by(std::uint64_t p, std::uint64_t e) const {
    if (e == 0) return *this;
    Factors f = factors_;
    auto it = f.find(p);
    if (it == f.end() || it->second < e) {
      throw InvariantViolation("FactoredInteger: " + std::to_string(p) + "^" + std::to_string(e) +
                               " does not divide " + to_string());
    }
    it->second -= e;
    if (it->second == 0) f.erase(it);
    return FactoredInteger(std::move(f));
  }

  /// "1" or e.g. "2^2·3·5".
  [[nodiscard]] std::string to_string() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (const auto& [p, e] : factors_) {
      if (!s.empty()) s += "·";
      s += std::to_string(p);
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
  }

  friend bool operator==(const FactoredInteger& x, const FactoredInteger& y) { return x.factors_ == y.factors_; }

 private:
  void recompute() {
    value_ = Natural(1U);
    for (const auto& [p, e] : factors_) value_ *= pow(Natural(p), e);
  }

  Factors factors_;
  Natural value_{1U};
};

/// lcm(1, ..., k) with L_0 = 1, as {p -> e_pk(p, k)} over primes p <= k.
inline FactoredInteger L(std::uint64_t k) {
  FactoredInteger::Factors f;
  for (auto p : primes_upto(k)) f.emplace(p, e_pk(p, k));
  return FactoredInteger(std::move(f));
}

/// Exact binomial coefficient C(n, k); requires k <= n.
inline Natural binomial(const Natural& n, std::uint64_t k) {
  if (Natural(k) > n) throw PreconditionError("binomial: k > n");
  Natural kk(k);
  if (n - kk < kk) kk = n - kk;
  const std::uint64_t steps = kk.to_u64();
  Natural acc(1U);
  const Natural base = n - kk;
  for (std::uint64_t i = 1; i <= steps; ++i) {
    acc *= base + Natural(i);
    acc = exact_div(acc, Natural(i), "binomial");
  }
  return acc;
}

}  // namespace aplcm
