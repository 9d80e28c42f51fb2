#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace revlab {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  ExactRational(const BigInt& num, const BigInt& den);

  /// Accepts "p/q", "p", or a decimal like "0.25".
  static ExactRational parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }
  bool is_integer() const { return denominator() == 1; }
  double to_double() const;
  std::string to_string() const;
  std::string to_decimal(int digits) const;

  ExactRational& operator+=(const ExactRational& o) { value_ += o.value_; return *this; }
  ExactRational& operator-=(const ExactRational& o) { value_ -= o.value_; return *this; }
  ExactRational& operator*=(const ExactRational& o) { value_ *= o.value_; return *this; }
  ExactRational& operator/=(const ExactRational& o);

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b);
  friend std::ostream& operator<<(std::ostream& os, const ExactRational& r) { return os << r.to_string(); }

 private:
  explicit ExactRational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}
  boost::multiprecision::cpp_rational value_;
};

}  // namespace revlab
