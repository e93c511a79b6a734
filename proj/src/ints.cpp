#include "mordell/ints.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace mordell {

Rational parse_rational(const std::string& text) {
  auto dot = text.find('.');
  std::string whole = text.substr(0, dot);
  std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
  auto digits = [](const std::string& s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
  };
  if (!digits(whole) || (dot != std::string::npos && !digits(frac)) ||
      frac.size() > 17) {
    throw std::invalid_argument("not a non-negative decimal: " + text);
  }
  i64 num = 0;
  try {
    num = std::stoll(whole + frac);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("decimal out of range: " + text);
  }
  i64 den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  i64 g = std::gcd(num, den);
  return Rational{num / g, den / g};
}

}  // namespace mordell
