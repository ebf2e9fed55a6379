#pragma once

#include <aplcm/error.hpp>

#include <cstdint>
#include <cstdlib>
#include <string>

namespace aplcm {

/// Upper bound, in elementary integer operations, on any exhaustive check.
/// Checks that would exceed it throw BudgetError rather than sample.
struct WorkBudget {
  static constexpr std::uint64_t kDefaultOps = 50'000'000;

  std::uint64_t ops = kDefaultOps;

  /// Default budget, overridden by the APLCM_BUDGET environment variable.
  static WorkBudget from_env() {
    WorkBudget b;
    if (const char* env = std::getenv("APLCM_BUDGET"); env != nullptr && *env != '\0') {
      b.ops = parse(env);
    }
    return b;
  }

  static std::uint64_t parse(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw PreconditionError("work budget must be a positive decimal integer, got '" + s + "'");
    }
    const std::uint64_t v = std::stoull(s);
    if (v == 0) throw PreconditionError("work budget must be positive");
    return v;
  }

  void require(std::uint64_t cost, const std::string& what) const {
    if (cost > ops) {
      throw BudgetError(what + ": estimated cost " + std::to_string(cost) + " exceeds work budget " +
                        std::to_string(ops));
    }
  }
};

/// a * b, saturating at UINT64_MAX.
inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

}  // namespace aplcm
