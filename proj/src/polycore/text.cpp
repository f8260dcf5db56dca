#include <cctype>
#include <string>
#include <unordered_map>

#include "keller/error.hpp"
#include "keller/polynomial.hpp"

namespace keller {

std::vector<std::string> default_variable_names(std::size_t nvars, std::string_view prefix) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) names.push_back(std::string(prefix) + std::to_string(i + 1));
  return names;
}

std::string to_string(const Polynomial& p) { return to_string(p, default_variable_names(p.nvars())); }

std::string to_string(const Polynomial& p, std::span<const std::string> names) {
  if (names.size() < p.nvars()) throw StructuralError("not enough variable names");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool negative = sgn(t.coef) < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    Rational a = abs(t.coef);
    if (t.mono.is_one()) {
      out += a.get_str();
      continue;
    }
    bool need_star = false;
    if (a != 1) {
      out += a.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      auto e = t.mono[i];
      if (e == 0) continue;
      if (need_star) out += '*';
      out += names[i];
      if (e > 1) out += '^' + std::to_string(e);
      need_star = true;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> names) : text_(text), nvars_(names.size()) {
    for (std::size_t i = 0; i < names.size(); ++i) index_.emplace(names[i], i);
  }

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      Term t = term();
      if (negative) t.coef = -t.coef;
      terms.push_back(std::move(t));
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail(std::string("expected '+' or '-', found '") + c + "'");
      negative = c == '-';
      ++pos_;
    }
    return Polynomial::from_terms(nvars_, std::move(terms));
  }

 private:
  Term term() {
    Term t{Monomial(nvars_), Rational(1)};
    bool any = false;
    while (true) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coef *= number();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        auto [var, e] = power();
        t.mono.set(var, t.mono[var] + e);
      } else {
        break;
      }
      any = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || !(std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
          fail("dangling '*'");
      }
    }
    if (!any) fail("expected a term");
    return t;
  }

  Rational number() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!at_end() && peek() == '/') {
      ++pos_;
      std::size_t den = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (den == pos_) fail("missing denominator");
    }
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const InputError& e) {
      pos_ = start;
      fail(e.what());
    }
  }

  std::pair<std::size_t, Monomial::Exponent> power() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    auto it = index_.find(name);
    if (it == index_.end()) {
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    Monomial::Exponent e = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t digits = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (digits == pos_) fail("expected exponent after '^'");
      unsigned long v = std::stoul(std::string(text_.substr(digits, pos_ - digits)));
      e = static_cast<Monomial::Exponent>(v);
    }
    return {it->second, e};
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t nvars) {
  auto names = default_variable_names(nvars);
  return parse_polynomial(text, names);
}

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names) {
  return Parser(text, names).parse();
}

}  // namespace keller
