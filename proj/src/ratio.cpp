#include "cutchoose/ratio.hpp"

#include "cutchoose/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <limits>
#include <ostream>

namespace cutchoose {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InvalidArgs: return "InvalidArgs";
    case ErrorKind::EmptyStrategySpace: return "EmptyStrategySpace";
    case ErrorKind::InfeasibleConstruction: return "InfeasibleConstruction";
    case ErrorKind::BreakpointAmbiguity: return "BreakpointAmbiguity";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EmptyFile: return "EmptyFile";
    case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
  }
  return "Unknown";
}

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(whole) + "'");
  }
  BigInt out = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(whole) + "'");
    }
    out = out * 10 + (c - '0');
  }
  return out;
}

std::int64_t narrow(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorKind::OutOfRange, "integer does not fit in 64 bits");
  }
  return v.convert_to<std::int64_t>();
}

}  // namespace

Ratio::Ratio(std::int64_t numerator, std::int64_t denominator)
    : Ratio(BigInt(numerator), BigInt(denominator)) {}

Ratio::Ratio(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw Error(ErrorKind::InvalidArgs, "zero denominator");
  }
  value_ = denominator < 0 ? Value(-numerator, -denominator) : Value(numerator, denominator);
}

Ratio Ratio::parse(std::string_view text) {
  const std::string_view whole = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  BigInt num;
  BigInt den = 1;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = parse_integer(text.substr(0, slash), whole);
    den = parse_integer(text.substr(slash + 1), whole);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto int_part = text.substr(0, dot);
    auto frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(whole) + "'");
    }
    num = int_part.empty() ? BigInt(0) : parse_integer(int_part, whole);
    for (char c : frac_part) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(whole) + "'");
      }
      num = num * 10 + (c - '0');
      den *= 10;
    }
  } else {
    num = parse_integer(text, whole);
  }
  if (den == 0) {
    throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(whole) + "'");
  }
  return Ratio(negative ? BigInt(-num) : num, den);
}

BigInt Ratio::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Ratio::denominator() const { return boost::multiprecision::denominator(value_); }

bool Ratio::is_integer() const { return denominator() == 1; }

BigInt Ratio::floor() const {
  const BigInt num = numerator();
  const BigInt den = denominator();
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) {
    q -= 1;
  }
  return q;
}

BigInt Ratio::ceil() const { return -(-*this).floor(); }

std::int64_t Ratio::floor_i64() const { return narrow(floor()); }

std::int64_t Ratio::to_i64() const {
  if (!is_integer()) {
    throw Error(ErrorKind::OutOfRange, "not an integer: " + str());
  }
  return narrow(numerator());
}

double Ratio::to_double() const { return value_.convert_to<double>(); }

std::string Ratio::str() const {
  if (is_integer()) {
    return numerator().str();
  }
  return numerator().str() + "/" + denominator().str();
}

Ratio Ratio::operator-() const { return Ratio(Value(-value_)); }

Ratio& Ratio::operator+=(const Ratio& rhs) {
  value_ += rhs.value_;
  return *this;
}

Ratio& Ratio::operator-=(const Ratio& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Ratio& Ratio::operator*=(const Ratio& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Ratio& Ratio::operator/=(const Ratio& rhs) {
  if (rhs.value_ == 0) {
    throw Error(ErrorKind::InvalidArgs, "division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

std::strong_ordering operator<=>(const Ratio& lhs, const Ratio& rhs) {
  if (lhs.value_ < rhs.value_) return std::strong_ordering::less;
  if (lhs.value_ > rhs.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.str(); }

Ratio round_up_to(const Ratio& a, const Ratio& b) {
  if (b <= Ratio(0)) {
    throw Error(ErrorKind::InvalidArgs, "rounding step must be positive");
  }
  return b * Ratio((a / b).ceil(), BigInt(1));
}

Ratio round_down_to(const Ratio& a, const Ratio& b) {
  if (b <= Ratio(0)) {
    throw Error(ErrorKind::InvalidArgs, "rounding step must be positive");
  }
  return b * Ratio((a / b).floor(), BigInt(1));
}

}  // namespace cutchoose
