#include "thom/poly_text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "thom/errors.hpp"

namespace thom {

namespace {

std::vector<std::pair<Exponents, Rational>> ordered_terms(const GradedPoly& p) {
  std::vector<std::pair<Exponents, Rational>> ts(p.terms().begin(), p.terms().end());
  std::stable_sort(ts.begin(), ts.end(), [&](const auto& x, const auto& y) {
    int dx = p.term_degree(x.first), dy = p.term_degree(y.first);
    if (dx != dy) return dx > dy;
    return basis_less(x.first, y.first);
  });
  return ts;
}

template <class Factor>
std::string join_terms(const GradedPoly& p, Factor factor, const char* mul, bool frac_latex) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ordered_terms(p)) {
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) parts.push_back(factor(p.vars()[i].name, e[i]));
    bool show_coeff = !mag.is_one() || parts.empty();
    if (show_coeff) {
      if (frac_latex && !mag.is_integer())
        os << "\\frac{" << mag.numerator().get_str() << "}{" << mag.denominator().get_str() << "}";
      else
        os << mag.str();
    }
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (show_coeff || k > 0) os << mul;
      os << parts[k];
    }
  }
  return os.str();
}

class Parser {
 public:
  Parser(std::string_view s, VarTablePtr vars) : s_(s), vars_(std::move(vars)) {}

  GradedPoly run() {
    GradedPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char ch) {
    skip();
    return pos_ < s_.size() && s_[pos_] == ch;
  }
  bool peek_pow() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') return true;
    return pos_ + 1 < s_.size() && s_[pos_] == '*' && s_[pos_ + 1] == '*';
  }

  GradedPoly expr() {
    GradedPoly acc(vars_);
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (peek('+') || peek('-')) {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      GradedPoly t = term();
      if (sign < 0) acc -= t; else acc += t;
      first = false;
    }
    return acc;
  }

  GradedPoly term() {
    GradedPoly acc = power();
    while (true) {
      if (peek('*') && !peek_pow()) {
        ++pos_;
        acc *= power();
      } else if (peek('/')) {
        ++pos_;
        GradedPoly d = power();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc *= d.constant_term().inverse();
      } else {
        return acc;
      }
    }
  }

  GradedPoly power() {
    GradedPoly base = atom();
    if (peek_pow()) {
      pos_ += s_[pos_] == '^' ? 1 : 2;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int k = std::stoi(std::string(s_.substr(start, pos_ - start)));
      base = base.pow(static_cast<unsigned>(k));
    }
    return base;
  }

  GradedPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      GradedPoly inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return GradedPoly::constant(vars_, Rational::parse(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      std::string name;
      while (pos_ < s_.size()) {
        char c = s_[pos_];
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
          name += c;
        } else if (c == '\'') {
          name += 'p';
        } else {
          break;
        }
        ++pos_;
      }
      if (!vars_->contains(name)) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return GradedPoly::variable(vars_, name);
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view s_;
  VarTablePtr vars_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string render(const GradedPoly& p) {
  return join_terms(
      p,
      [](const std::string& name, int e) { return e == 1 ? name : name + "^" + std::to_string(e); },
      "*", false);
}

GradedPoly parse_poly(std::string_view text, const VarTablePtr& vars) {
  if (!vars) throw UsageError("parse_poly needs a table");
  return Parser(text, vars).run();
}

std::string latex_variable(const std::string& name) {
  auto split = [&](std::size_t prefix_len) { return name.substr(prefix_len); };
  auto is_digits = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  auto sub = [](const std::string& s) { return "_{" + s + "}"; };
  if (name.rfind("cp", 0) == 0 && is_digits(split(2))) return "c'" + sub(split(2));
  if (name.rfind("cb", 0) == 0 && is_digits(split(2))) return "\\bar{c}" + sub(split(2));
  if (name.rfind("xi", 0) == 0 && is_digits(split(2))) return "\\xi" + sub(split(2));
  if (name.rfind("eps", 0) == 0 && is_digits(split(3))) return "\\epsilon" + sub(split(3));
  std::size_t k = name.size();
  while (k > 0 && std::isdigit(static_cast<unsigned char>(name[k - 1]))) --k;
  if (k > 0 && k < name.size()) return name.substr(0, k) + sub(name.substr(k));
  return name;
}

std::string render_latex(const GradedPoly& p) {
  return join_terms(
      p,
      [](const std::string& name, int e) {
        std::string v = latex_variable(name);
        if (e == 1) return v;
        if (v.find('_') != std::string::npos) v = "{" + v + "}";
        return v + "^{" + std::to_string(e) + "}";
      },
      " ", true);
}

}  // namespace thom
