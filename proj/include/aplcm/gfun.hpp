#pragma once

#include <aplcm/error.hpp>
#include <aplcm/natural.hpp>
#include <aplcm/numtheory.hpp>
#include <aplcm/progression.hpp>

#include <algorithm>
#include <cstdint>
#include <vector>

namespace aplcm {

/// [b + n a, b + (n + 1) a, ..., b + (n + k) a].
inline std::vector<Natural> window_terms(const Progression& prog, const Window& w) {
  std::vector<Natural> terms;
  terms.reserve(w.k + 1);
  const Natural a(prog.a());
  Natural t = Natural(prog.b()) + Natural(w.n) * a;
  for (std::uint64_t i = 0; i <= w.k; ++i) {
    terms.push_back(t);
    t += a;
  }
  return terms;
}

/// Product of the window terms over their lcm.
inline Natural g(const Progression& prog, const Window& w) {
  const auto terms = window_terms(prog, w);
  return exact_div(product(terms), lcm_many(terms), "g");
}

namespace detail {

inline void require_reduced(const Progression& prog, const char* op) {
  if (!prog.is_reduced()) {
    throw PreconditionError(std::string(op) + ": progression " + prog.to_string() +
                            " is not reduced (gcd(a,b) = " + std::to_string(prog.d()) + ")");
  }
}

inline void require_prime(std::uint64_t p, const char* op) {
  if (!is_prime(p)) throw PreconditionError(std::string(op) + ": " + std::to_string(p) + " is not prime");
}

}  // namespace detail

/// v_p(g) read off the expanded value of g.
inline std::uint64_t gp_direct(std::uint64_t p, const Progression& prog, const Window& w) {
  detail::require_reduced(prog, "gp_direct");
  return vp(p, g(prog, w));
}

/// Number of window terms divisible by p^e, by a linear scan. Test oracle
/// for count_multiples.
inline std::uint64_t count_multiples_naive(std::uint64_t p, std::uint64_t e, const Progression& prog,
                                           const Window& w) {
  detail::require_prime(p, "count_multiples_naive");
  const Natural m = pow(Natural(p), e);
  std::uint64_t count = 0;
  for (const auto& t : window_terms(prog, w)) {
    if (m.divides(t)) ++count;
  }
  return count;
}

/// Number of window terms divisible by p^e, in O(log) time.
///
/// For p coprime to a the terms divisible by p^e are exactly the offsets
/// i = (-b a^-1 - n) mod p^e + j p^e. When p | a no term is divisible,
/// since gcd(a, b) = 1.
inline std::uint64_t count_multiples(std::uint64_t p, std::uint64_t e, const Progression& prog,
                                     const Window& w) {
  detail::require_reduced(prog, "count_multiples");
  detail::require_prime(p, "count_multiples");
  if (e == 0) throw PreconditionError("count_multiples: e must be positive");
  if (prog.a() % p == 0) return 0;

  const auto modulus = checked_pow(p, e);
  const Natural largest = Natural(prog.b()) + (Natural(w.n) + Natural(w.k)) * Natural(prog.a());
  if (!modulus || Natural(*modulus) > largest) return 0;
  const std::uint64_t m = *modulus;

  const auto a_inv = inverse_mod(prog.a() % m, m);
  if (!a_inv) throw InvariantViolation("count_multiples: a not invertible modulo p^e although p does not divide a");
  const std::uint64_t neg_b = (m - prog.b() % m) % m;
  const std::uint64_t root = mul_mod(neg_b, *a_inv, m);
  const std::uint64_t r = (root + m - w.n % m) % m;
  if (r > w.k) return 0;
  return (w.k - r) / m + 1;
}

/// count_multiples - 1. Can be -1 when e exceeds e_pk(p, k).
inline std::int64_t f_e(std::uint64_t p, std::uint64_t e, const Progression& prog, const Window& w) {
  return static_cast<std::int64_t>(count_multiples(p, e, prog, w)) - 1;
}

/// v_p(g) from the divisibility counts: sum over e = 1..e_pk(p, k) of
/// max(0, #{terms divisible by p^e} - 1). Never forms the product.
inline std::uint64_t gp_counts(std::uint64_t p, const Progression& prog, const Window& w) {
  detail::require_reduced(prog, "gp_counts");
  detail::require_prime(p, "gp_counts");
  if (w.k == 0 || p > w.k || prog.a() % p == 0) return 0;
  const std::uint64_t top = e_pk(p, w.k);
  std::uint64_t total = 0;
  for (std::uint64_t e = 1; e <= top; ++e) {
    total += static_cast<std::uint64_t>(std::max<std::int64_t>(0, f_e(p, e, prog, w)));
  }
  return total;
}

}  // namespace aplcm
