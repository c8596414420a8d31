#include "hjj/rational.hpp"

#include <cctype>
#include <ostream>

namespace hjj {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error("inverse of zero");
  return Rational(mpq_class(1) / v_);
}

namespace {

// digits := [0-9]+ ; integer := [+-]? digits
bool scan_integer(std::string_view s, std::size_t& pos) {
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  return pos > start;
}

// GMP itself refuses a leading '+', which the grammar above allows.
std::string strip_plus(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  if (!scan_integer(text, pos)) throw ParseError("bad rational: '" + std::string(text) + "'");
  std::string num = strip_plus(text.substr(0, pos));
  std::string den = "1";
  if (pos < text.size()) {
    if (text[pos] != '/') throw ParseError("bad rational: '" + std::string(text) + "'");
    std::size_t den_start = ++pos;
    if (!scan_integer(text, pos) || pos != text.size())
      throw ParseError("bad rational: '" + std::string(text) + "'");
    den = strip_plus(text.substr(den_start));
  }
  mpz_class d(den, 10);
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  mpq_class q(mpz_class(num, 10), d);
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hjj
