#include "polycentre/rational.hpp"

#include <stdexcept>

namespace polycentre {

namespace {

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::optional<Rational> parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num_part = text.substr(0, slash);
  if (!is_integer_token(num_part)) return std::nullopt;
  mpz_class num(std::string(num_part), 10);
  mpz_class den(1);
  if (slash != std::string_view::npos) {
    const std::string_view den_part = text.substr(slash + 1);
    if (!is_integer_token(den_part)) return std::nullopt;
    den = mpz_class(std::string(den_part), 10);
    if (den == 0) return std::nullopt;
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace polycentre
