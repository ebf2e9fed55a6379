#pragma once

#include <aplcm/error.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

namespace aplcm {

/// Arbitrary-precision nonnegative integer.
///
/// Subtraction that would go below zero and division by zero throw
/// instead of wrapping.
class Natural {
 public:
  using rep = boost::multiprecision::cpp_int;

  Natural() = default;

  template <std::integral T>
  Natural(T v) : v_(v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      if (v < 0) throw PreconditionError("Natural: negative value " + std::to_string(v));
    }
  }

  explicit Natural(rep v) : v_(std::move(v)) {
    if (v_.sign() < 0) throw PreconditionError("Natural: negative value");
  }

  /// Parses a plain decimal string (digits only, no sign, no whitespace).
  static Natural parse(std::string_view s) {
    if (s.empty()) throw FormatError("Natural: empty decimal string");
    for (char c : s) {
      if (c < '0' || c > '9') throw FormatError("Natural: not a decimal integer: '" + std::string(s) + "'");
    }
    return Natural(rep(std::string(s)));
  }

  [[nodiscard]] const rep& raw() const noexcept { return v_; }
  [[nodiscard]] bool is_zero() const noexcept { return v_.is_zero(); }
  [[nodiscard]] std::string to_string() const { return v_.str(); }

  [[nodiscard]] bool fits_u64() const noexcept { return v_ <= std::numeric_limits<std::uint64_t>::max(); }
  [[nodiscard]] std::uint64_t to_u64() const {
    if (!fits_u64()) throw PreconditionError("Natural: value exceeds 64 bits: " + to_string());
    return v_.convert_to<std::uint64_t>();
  }

  /// Remainder modulo a machine-word modulus.
  [[nodiscard]] std::uint64_t mod_u64(std::uint64_t m) const {
    if (m == 0) throw PreconditionError("Natural: modulus zero");
    return static_cast<std::uint64_t>(v_ % m);
  }

  [[nodiscard]] bool divides(const Natural& other) const {
    if (is_zero()) return other.is_zero();
    return rep(other.v_ % v_).is_zero();
  }

  Natural& operator+=(const Natural& o) { v_ += o.v_; return *this; }
  Natural& operator*=(const Natural& o) { v_ *= o.v_; return *this; }
  Natural& operator-=(const Natural& o) {
    if (v_ < o.v_) throw PreconditionError("Natural: subtraction underflow");
    v_ -= o.v_;
    return *this;
  }
  Natural& operator/=(const Natural& o) {
    if (o.is_zero()) throw PreconditionError("Natural: division by zero");
    v_ /= o.v_;
    return *this;
  }
  Natural& operator%=(const Natural& o) {
    if (o.is_zero()) throw PreconditionError("Natural: division by zero");
    v_ %= o.v_;
    return *this;
  }

  friend Natural operator+(Natural x, const Natural& y) { return x += y; }
  friend Natural operator-(Natural x, const Natural& y) { return x -= y; }
  friend Natural operator*(Natural x, const Natural& y) { return x *= y; }
  friend Natural operator/(Natural x, const Natural& y) { return x /= y; }
  friend Natural operator%(Natural x, const Natural& y) { return x %= y; }

  friend bool operator==(const Natural& x, const Natural& y) { return x.v_ == y.v_; }
  friend std::strong_ordering operator<=>(const Natural& x, const Natural& y) {
    const int c = x.v_.compare(y.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Natural& x) { return os << x.v_; }

 private:
  rep v_{0};
};

/// x / y, throwing if y does not divide x.
inline Natural exact_div(const Natural& x, const Natural& y, std::string_view what = "exact_div") {
  if (y.is_zero()) throw PreconditionError(std::string(what) + ": division by zero");
  Natural::rep q, r;
  boost::multiprecision::divide_qr(x.raw(), y.raw(), q, r);
  if (!r.is_zero()) {
    throw InvariantViolation(std::string(what) + ": " + y.to_string() + " does not divide " + x.to_string());
  }
  return Natural(std::move(q));
}

inline Natural pow(const Natural& base, std::uint64_t exp) {
  Natural result(1U), b = base;
  while (exp > 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp > 0) b *= b;
  }
  return result;
}

}  // namespace aplcm
