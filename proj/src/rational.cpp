#include "surfsing/rational.hpp"
#include "surfsing/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace surfsing {

ParseError::ParseError(std::string source, std::size_t line, std::size_t column,
                       const std::string& message)
    : std::runtime_error([&] {
        std::string where = source.empty() ? std::string("<input>") : source;
        if (line > 0) {
          where += ":" + std::to_string(line);
          if (column > 0) where += ":" + std::to_string(column);
        }
        return where + ": " + message;
      }()),
      source_(std::move(source)),
      line_(line),
      column_(column) {}

std::string to_string(const BigInt& i) { return i.str(); }

std::string to_string(const Rational& r) {
  // cpp_rational is always normalized: gcd(p, q) = 1 and q > 0.
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

BigInt parse_integer(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw std::invalid_argument("expected digits");
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("unexpected character '" + std::string(1, c) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

} // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const BigInt num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    throw std::invalid_argument("sign not allowed in denominator");
  const BigInt den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(num, den);
}

} // namespace surfsing
