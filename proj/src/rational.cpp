#include "qsuper/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qsuper {

namespace {

bool is_integer_text(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    text.remove_prefix(1);
  }
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  const auto den_text = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_text(num_text) || !is_integer_text(den_text) || den_text.front() == '-' ||
      den_text.front() == '+') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  std::string num_str(num_text);
  if (num_str.front() == '+') num_str.erase(0, 1);
  mpz_class num(num_str, 10);
  mpz_class den(std::string(den_text), 10);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in rational: '" + std::string(text) + "'");
  }
  Rational value(num, den);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

bool is_canonical(const Rational& value) {
  if (value.get_den() <= 0) return false;
  if (value.get_den() == 1) return true;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return g == 1;
}

}  // namespace qsuper
