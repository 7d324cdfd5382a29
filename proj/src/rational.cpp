#include "cellres/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cellres {

namespace {

bool is_integer_text(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view text) {
  if (!is_integer_text(text)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  if (text[0] == '+') text.remove_prefix(1);
  return Integer(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  const Integer den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

Integer factorial(unsigned n) {
  Integer out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

}  // namespace cellres
