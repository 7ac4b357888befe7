#include "cycleflow/rational.hpp"

#include "cycleflow/errors.hpp"

namespace cycleflow {
namespace {

// digits, optionally preceded by '-' when allow_sign is set
bool is_integer_token(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

std::string format_rational(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_token(num, /*allow_sign=*/true)) {
    throw DomainError("not a rational: '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) {
    return Rational(Integer(std::string(num)));
  }
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_token(den, /*allow_sign=*/false)) {
    throw DomainError("not a rational: '" + std::string(text) + "'");
  }
  const Integer d{std::string(den)};
  if (d == 0) {
    throw DomainError("zero denominator: '" + std::string(text) + "'");
  }
  const Integer p{std::string(num)};
  return Rational(p, d);
}

}  // namespace cycleflow
