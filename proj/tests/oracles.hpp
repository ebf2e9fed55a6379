#pragma once

// Test-only reference computations. They factor small integers by trial
// division and work with valuations, sharing no code path with the
// big-integer product/lcm route of the library.

#include <aplcm/natural.hpp>

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

inline std::map<std::uint64_t, std::uint64_t> factor(std::uint64_t x) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    while (x % d == 0) {
      ++out[d];
      x /= d;
    }
  }
  if (x > 1) ++out[x];
  return out;
}

inline std::vector<std::uint64_t> terms(std::uint64_t a, std::uint64_t b, std::uint64_t n, std::uint64_t k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i <= k; ++i) out.push_back(b + (n + i) * a);
  return out;
}

/// prod p^(sum of v_p - max v_p) over the window's terms.
inline std::uint64_t g(std::uint64_t a, std::uint64_t b, std::uint64_t n, std::uint64_t k) {
  std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> sum_max;
  for (auto t : terms(a, b, n, k)) {
    for (auto [p, e] : factor(t)) {
      auto& [s, m] = sum_max[p];
      s += e;
      m = std::max(m, e);
    }
  }
  std::uint64_t out = 1;
  for (auto& [p, sm] : sum_max) {
    for (std::uint64_t i = 0; i < sm.first - sm.second; ++i) out *= p;
  }
  return out;
}

inline std::uint64_t vp(std::uint64_t p, std::uint64_t x) {
  std::uint64_t s = 0;
  while (x % p == 0) {
    x /= p;
    ++s;
  }
  return s;
}

/// lcm as prod p^(max v_p).
inline aplcm::Natural lcm(const std::vector<std::uint64_t>& xs) {
  std::map<std::uint64_t, std::uint64_t> mx;
  for (auto x : xs) {
    for (auto [p, e] : factor(x)) mx[p] = std::max(mx[p], e);
  }
  aplcm::Natural out(1U);
  for (auto [p, e] : mx) {
    for (std::uint64_t i = 0; i < e; ++i) out *= aplcm::Natural(p);
  }
  return out;
}

inline std::uint64_t lcm_upto(std::uint64_t k) {
  std::uint64_t l = 1;
  for (std::uint64_t i = 1; i <= k; ++i) l = std::lcm(l, i);
  return l;
}

/// Smallest T in 1..limit with g(n + T) = g(n) for all n in [1, horizon].
inline std::uint64_t brute_period(std::uint64_t a, std::uint64_t b, std::uint64_t k, std::uint64_t limit,
                                  std::uint64_t horizon) {
  std::vector<std::uint64_t> vals(horizon + limit + 1);
  for (std::uint64_t n = 1; n < vals.size(); ++n) vals[n] = g(a, b, n, k);
  for (std::uint64_t t = 1; t <= limit; ++t) {
    bool ok = true;
    for (std::uint64_t n = 1; n <= horizon && ok; ++n) ok = vals[n + t] == vals[n];
    if (ok) return t;
  }
  return 0;
}

}  // namespace oracle
