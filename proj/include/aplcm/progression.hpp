#pragma once

#include <aplcm/error.hpp>

#include <cstdint>
#include <numeric>
#include <string>

namespace aplcm {

/// The arithmetic progression b, b + a, b + 2a, ... with a >= 1, b >= 0,
/// together with its reduction by d = gcd(a, b) (gcd(a, 0) = a).
class Progression {
 public:
  Progression(std::uint64_t a, std::uint64_t b) : a_(a), b_(b) {
    if (a == 0) throw PreconditionError("Progression: common difference must be positive");
    d_ = std::gcd(a, b);
  }

  [[nodiscard]] std::uint64_t a() const noexcept { return a_; }
  [[nodiscard]] std::uint64_t b() const noexcept { return b_; }
  [[nodiscard]] std::uint64_t d() const noexcept { return d_; }
  [[nodiscard]] std::uint64_t a_reduced() const noexcept { return a_ / d_; }
  [[nodiscard]] std::uint64_t b_reduced() const noexcept { return b_ / d_; }
  [[nodiscard]] bool is_reduced() const noexcept { return d_ == 1; }
  [[nodiscard]] Progression reduced() const { return {a_reduced(), b_reduced()}; }

  [[nodiscard]] std::string to_string() const {
    return "a=" + std::to_string(a_) + ",b=" + std::to_string(b_);
  }

  friend bool operator==(const Progression&, const Progression&) = default;

 private:
  std::uint64_t a_;
  std::uint64_t b_;
  std::uint64_t d_;
};

/// k + 1 consecutive indices n, n + 1, ..., n + k with n >= 1.
struct Window {
  Window(std::uint64_t n_, std::uint64_t k_) : n(n_), k(k_) {
    if (n == 0) throw PreconditionError("Window: start index n must be >= 1");
  }

  std::uint64_t n;
  std::uint64_t k;

  friend bool operator==(const Window&, const Window&) = default;
};

}  // namespace aplcm
