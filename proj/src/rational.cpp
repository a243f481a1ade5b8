#include "fairdiv/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace fairdiv {

namespace {

bool is_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Splits off an optional leading sign and validates the remainder is digits.
Integer parse_integer(const std::string& s) {
  std::string body = s;
  bool negative = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    negative = body[0] == '-';
    body = body.substr(1);
  }
  if (!is_digits(body)) {
    throw std::invalid_argument("not an integer: '" + s + "'");
  }
  Integer value(body);
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) {
    throw std::invalid_argument("empty rational literal");
  }

  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer num = parse_integer(s.substr(0, slash));
    Integer den = parse_integer(s.substr(slash + 1));
    if (den <= 0) {
      throw std::invalid_argument("non-positive denominator in '" + text + "'");
    }
    return Rational(num, den);
  }

  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string int_part = s.substr(0, dot);
    std::string frac_part = s.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part[0] == '+' || int_part[0] == '-')) {
      negative = int_part[0] == '-';
      int_part = int_part.substr(1);
    }
    if (int_part.empty()) int_part = "0";
    if (!is_digits(int_part) || !is_digits(frac_part)) {
      throw std::invalid_argument("malformed decimal literal '" + text + "'");
    }
    Integer scale = 1;
    for (size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    Integer num = Integer(int_part) * scale + Integer(frac_part);
    Rational r(num, scale);
    return negative ? Rational(-r) : r;
  }

  return Rational(parse_integer(s));
}

std::string to_pq_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Integer ceil_rational(const Rational& r) {
  Integer num = numerator(r);
  Integer den = denominator(r);
  Integer q = num / den;          // truncates toward zero
  if (q * den < num) q += 1;      // positive remainder -> round up
  return q;
}

}  // namespace fairdiv
