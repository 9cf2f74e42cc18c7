#include "cpt/rational.hpp"

#include <cctype>
#include <sstream>

namespace cpt {

std::string rational_to_string(const Rational& q) {
  std::ostringstream out;
  out << q.numerator();
  if (q.denominator() != 1) out << "/" << q.denominator();
  return out.str();
}

namespace {

std::int64_t parse_int(const std::string& text, const char* what) {
  if (text.empty()) throw std::invalid_argument(std::string(what) + ": empty number");
  std::size_t i = text[0] == '-' || text[0] == '+' ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument(std::string(what) + ": sign only");
  for (; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument(std::string(what) + ": bad digit in '" + text + "'");
  return std::stoll(text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text, "parse_rational"));
  std::int64_t num = parse_int(text.substr(0, slash), "parse_rational");
  std::int64_t den = parse_int(text.substr(slash + 1), "parse_rational");
  if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
  return {num, den};
}

Rational parse_decimal(const std::string& text) {
  std::size_t dot = text.find('.');
  if (dot == std::string::npos) return Rational(parse_int(text, "parse_decimal"));
  std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
  if (frac.empty()) throw std::invalid_argument("parse_decimal: trailing dot");
  bool negative = !whole.empty() && whole[0] == '-';
  std::int64_t w = whole.empty() || whole == "-" || whole == "+"
                       ? 0
                       : parse_int(whole, "parse_decimal");
  std::int64_t scale = 1;
  for (char c : frac) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("parse_decimal: bad digit in '" + text + "'");
    if (scale > 1000000000000000LL)
      throw std::invalid_argument("parse_decimal: too many digits");
    scale *= 10;
  }
  std::int64_t f = frac.empty() ? 0 : std::stoll(frac);
  Rational magnitude = Rational(std::llabs(w)) + Rational(f, scale);
  return negative ? -magnitude : magnitude;
}

}  // namespace cpt
