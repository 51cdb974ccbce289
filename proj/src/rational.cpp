#include "kptrop/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace kptrop {

int sign_of(const Rational& q) {
  if (q > 0) return 1;
  if (q < 0) return -1;
  return 0;
}

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  // trim
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;

  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    auto ns = text.substr(0, slash);
    auto ds = text.substr(slash + 1);
    if (!is_integer_token(ns) || !is_integer_token(ds)) return std::nullopt;
    Integer n{std::string(ns)};
    Integer d{std::string(ds)};
    if (d == 0) return std::nullopt;
    return Rational(n, d);
  }

  auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '+' || whole[0] == '-')) whole.remove_prefix(1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    for (char c : whole)
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    for (char c : frac)
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    Integer n = whole.empty() ? Integer(0) : Integer(std::string(whole));
    Integer scale = 1;
    for (char c : frac) {
      n = n * 10 + (c - '0');
      scale *= 10;
    }
    Rational q(n, scale);
    return neg ? Rational(-q) : q;
  }

  if (!is_integer_token(text)) return std::nullopt;
  return Rational(Integer(std::string(text)));
}

std::string to_string(const Rational& q) {
  std::string s = num(q).str();
  if (den(q) != 1) {
    s += '/';
    s += den(q).str();
  }
  return s;
}

Rational pow_rational(const Rational& q, long e) {
  if (e == 0) return Rational(1);
  bool inv = e < 0;
  unsigned long n = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  if (inv && q == 0) throw std::domain_error("pow_rational: 0 to negative power");
  Rational base = inv ? Rational(den(q), num(q)) : q;
  Rational acc(1);
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::vector<Rational> parse_rational_list(std::string_view csv) {
  std::vector<Rational> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    auto comma = csv.find(',', pos);
    auto piece = csv.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    auto q = parse_rational(piece);
    if (!q) throw std::invalid_argument("bad rational in list: '" + std::string(piece) + "'");
    out.push_back(*q);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace kptrop
