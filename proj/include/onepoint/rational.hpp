#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "onepoint/error.hpp"

namespace onepoint {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT: implicit by intent
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
    value_ = boost::multiprecision::cpp_rational(den < 0 ? BigInt(-num) : num, den < 0 ? BigInt(-den) : den);
  }

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.value_ + b.value_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.value_ - b.value_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.value_ * b.value_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.value_ == 0) throw Error(ErrorCode::ParseError, "division by zero");
    return Rational(a.value_ / b.value_);
  }
  Rational operator-() const { return Rational(-value_); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  int sign() const { return value_.sign(); }

  /// Largest integer not above the value.
  BigInt floor() const {
    BigInt n = numerator(), d = denominator();
    BigInt q = n / d;  // truncates toward zero
    if (n < 0 && q * d != n) --q;
    return q;
  }
  BigInt ceil() const {
    BigInt q = floor();
    return q * denominator() == numerator() ? q : q + 1;
  }

  /// this / 2^k
  Rational halved(std::uint64_t k) const {
    BigInt den = denominator() << static_cast<unsigned>(k);
    return Rational(numerator(), den);
  }

  static Rational midpoint(const Rational& a, const Rational& b) { return (a + b).halved(1); }

  std::string str() const {
    std::string s = numerator().str();
    if (denominator() != 1) s += "/" + denominator().str();
    return s;
  }

  /// Parses `INT` or `INT/POSINT`.
  static Rational parse(std::string_view text) {
    auto is_int = [](std::string_view s, bool allow_sign) {
      if (s.empty()) return false;
      std::size_t i = 0;
      if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
      if (i == s.size()) return false;
      for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
      return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!is_int(num, true)) throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
    std::string num_s(num.front() == '+' ? num.substr(1) : num);
    BigInt n(num_s);
    BigInt d = 1;
    if (slash != std::string_view::npos) {
      std::string_view den = text.substr(slash + 1);
      if (!is_int(den, false)) throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
      d = BigInt(std::string(den));
      if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    }
    return Rational(n, d);
  }

  std::size_t hash() const {
    return std::hash<std::string>{}(str());
  }

 private:
  explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}

  boost::multiprecision::cpp_rational value_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace onepoint
