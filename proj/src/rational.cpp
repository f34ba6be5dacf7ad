#include "thom/rational.hpp"

#include <ostream>

#include "thom/errors.hpp"

namespace thom {

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw ParseError("empty number");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  bool seen_digit = false, seen_slash = false;
  for (std::size_t k = i; k < text.size(); ++k) {
    char ch = text[k];
    if (ch >= '0' && ch <= '9') {
      seen_digit = true;
    } else if (ch == '/' && seen_digit && !seen_slash && k + 1 < text.size()) {
      seen_slash = true;
      seen_digit = false;
    } else {
      throw ParseError("malformed number '" + text + "'");
    }
  }
  if (!seen_digit) throw ParseError("malformed number '" + text + "'");
  std::string body = text[0] == '+' ? text.substr(1) : text;
  mpq_class q;
  if (q.set_str(body, 10) != 0) throw ParseError("malformed number '" + text + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  q.canonicalize();
  return Rational(q);
}

bool Rational::fits_long() const { return is_integer() && v_.get_num().fits_slong_p(); }

long Rational::to_long() const {
  if (!fits_long()) throw DomainError("value " + str() + " is not a machine integer");
  return v_.get_num().get_si();
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const { return v_.get_str(10); }

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace thom
