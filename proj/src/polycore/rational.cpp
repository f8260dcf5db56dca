#include "keller/rational.hpp"

#include <cctype>

#include "keller/error.hpp"

namespace keller {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw InputError("zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  auto is_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den) || den.front() == '-' || den.front() == '+')
    throw InputError("malformed rational '" + std::string(text) + "'");
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Integer dz{std::string(den)};
  if (dz == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational q(Integer(n), dz);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

std::optional<Integer> integer_root(const Integer& z, unsigned k) {
  if (z < 0 && k % 2 == 0) return std::nullopt;
  Integer r;
  if (mpz_root(r.get_mpz_t(), z.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

}  // namespace

std::optional<Rational> rational_root(const Rational& q, unsigned k) {
  if (k == 0) return std::nullopt;
  auto num = integer_root(q.get_num(), k);
  if (!num) return std::nullopt;
  auto den = integer_root(q.get_den(), k);
  if (!den) return std::nullopt;
  Rational r(*num, *den);
  r.canonicalize();
  return r;
}

}  // namespace keller
