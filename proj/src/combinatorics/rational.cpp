#include "revlab/combinatorics/rational.hpp"

#include <stdexcept>

namespace revlab {

ExactRational::ExactRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("ExactRational: zero denominator");
  // Boost rejects a negative denominator, so the sign moves to the numerator.
  value_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
}

namespace {

BigInt parse_int(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw std::invalid_argument("not a rational: '" + std::string(whole) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("not a rational: '" + std::string(whole) + "'");
  }
  return BigInt(std::string(s));
}

}  // namespace

ExactRational ExactRational::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return ExactRational(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto int_part = text.substr(0, dot);
    const auto frac_part = text.substr(dot + 1);
    const bool negative = !int_part.empty() && int_part[0] == '-';
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac_part.size()));
    BigInt ip = (int_part.empty() || int_part == "-" || int_part == "+") ? BigInt(0) : parse_int(int_part, text);
    BigInt fp = frac_part.empty() ? BigInt(0) : parse_int(frac_part, text);
    if (frac_part.find_first_of("+-") != std::string_view::npos) {
      throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    }
    BigInt num = (ip < 0 ? -ip : ip) * scale + fp;
    return ExactRational(negative ? BigInt(-num) : num, scale);
  }
  return ExactRational(parse_int(text, text), BigInt(1));
}

double ExactRational::to_double() const { return value_.convert_to<double>(); }

std::string ExactRational::to_string() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

std::string ExactRational::to_decimal(int digits) const {
  BigInt num = numerator();
  const BigInt den = denominator();
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  const BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(digits));
  // round half up at the last digit
  BigInt scaled = (num * scale * 2 + den) / (den * 2);
  BigInt ip = scaled / scale;
  BigInt fp = scaled % scale;
  std::string frac = fp.str();
  if (digits > 0) frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  return sign + ip.str() + (digits > 0 ? "." + frac : "");
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
  if (o.value_ == 0) throw std::domain_error("ExactRational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace revlab
