#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cutchoose {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with a positive denominator.
class Ratio {
 public:
  Ratio() = default;
  Ratio(std::int64_t value) : value_(value) {}  // NOLINT: implicit from integers is intended
  Ratio(std::int64_t numerator, std::int64_t denominator);
  Ratio(const BigInt& numerator, const BigInt& denominator);

  /// Accepts "p/q", "p", or a decimal such as "-0.63" (read exactly as p/10^k).
  static Ratio parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;

  bool is_integer() const;
  BigInt floor() const;
  BigInt ceil() const;
  /// Narrowing helpers; throw OutOfRange when the value does not fit.
  std::int64_t floor_i64() const;
  std::int64_t to_i64() const;
  double to_double() const;

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  Ratio operator-() const;
  Ratio& operator+=(const Ratio& rhs);
  Ratio& operator-=(const Ratio& rhs);
  Ratio& operator*=(const Ratio& rhs);
  Ratio& operator/=(const Ratio& rhs);

  friend Ratio operator+(Ratio lhs, const Ratio& rhs) { return lhs += rhs; }
  friend Ratio operator-(Ratio lhs, const Ratio& rhs) { return lhs -= rhs; }
  friend Ratio operator*(Ratio lhs, const Ratio& rhs) { return lhs *= rhs; }
  friend Ratio operator/(Ratio lhs, const Ratio& rhs) { return lhs /= rhs; }

  friend bool operator==(const Ratio& lhs, const Ratio& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Ratio& lhs, const Ratio& rhs);

  friend std::ostream& operator<<(std::ostream& os, const Ratio& r);

 private:
  using Value = boost::multiprecision::cpp_rational;
  explicit Ratio(Value v) : value_(std::move(v)) {}
  Value value_{0};
};

/// b * ceil(a / b).
Ratio round_up_to(const Ratio& a, const Ratio& b);
/// b * floor(a / b).
Ratio round_down_to(const Ratio& a, const Ratio& b);

}  // namespace cutchoose
