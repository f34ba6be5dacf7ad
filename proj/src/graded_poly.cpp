#include "thom/graded_poly.hpp"

#include <algorithm>

#include "thom/errors.hpp"
#include "thom/poly_text.hpp"

namespace thom {

GradedPoly::GradedPoly(VarTablePtr vars) : vars_(std::move(vars)) {
  if (!vars_) throw UsageError("polynomial without variable table");
}

GradedPoly GradedPoly::constant(VarTablePtr vars, const Rational& c) {
  GradedPoly p(std::move(vars));
  p.add_term(Exponents(p.vars_->size(), 0), c);
  return p;
}

GradedPoly GradedPoly::variable(VarTablePtr vars, std::string_view name) {
  GradedPoly p(std::move(vars));
  Exponents e(p.vars_->size(), 0);
  e[p.vars_->index(name)] = 1;
  p.add_term(e, 1);
  return p;
}

GradedPoly GradedPoly::monomial(VarTablePtr vars, Exponents exps, const Rational& c) {
  GradedPoly p(std::move(vars));
  if (exps.size() != p.vars_->size()) throw UsageError("exponent vector length mismatch");
  for (int x : exps)
    if (x < 0) throw UsageError("negative exponent");
  p.add_term(exps, c);
  return p;
}

void GradedPoly::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool GradedPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

std::optional<int> GradedPoly::max_degree() const {
  std::optional<int> d;
  for (const auto& [e, c] : terms_) d = std::max(d.value_or(term_degree(e)), term_degree(e));
  return d;
}

std::optional<int> GradedPoly::min_degree() const {
  std::optional<int> d;
  for (const auto& [e, c] : terms_) d = std::min(d.value_or(term_degree(e)), term_degree(e));
  return d;
}

bool GradedPoly::is_homogeneous() const { return max_degree() == min_degree(); }

bool GradedPoly::is_homogeneous(int degree) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return term_degree(t.first) == degree; });
}

GradedPoly GradedPoly::part(int degree) const {
  GradedPoly out(vars_);
  for (const auto& [e, c] : terms_)
    if (term_degree(e) == degree) out.terms_.emplace(e, c);
  return out;
}

GradedPoly GradedPoly::truncate(int max_deg) const {
  GradedPoly out(vars_);
  for (const auto& [e, c] : terms_)
    if (term_degree(e) <= max_deg) out.terms_.emplace(e, c);
  return out;
}

Rational GradedPoly::coefficient_of(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational GradedPoly::constant_term() const {
  return vars_ ? coefficient_of(Exponents(vars_->size(), 0)) : Rational(0);
}

int GradedPoly::max_exponent(std::size_t var) const {
  int m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, e[var]);
  return m;
}

GradedPoly GradedPoly::coefficient_in(std::size_t var, int power) const {
  GradedPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != power) continue;
    Exponents f = e;
    f[var] = 0;
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

bool GradedPoly::integral_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_integer(); });
}

GradedPoly GradedPoly::pow(unsigned k) const {
  GradedPoly result = constant(vars_, 1);
  GradedPoly base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

void GradedPoly::require_same(const GradedPoly& o) const {
  if (!same_table(vars_, o.vars_)) throw UsageError("polynomials over different variable tables");
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  require_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
  require_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  a.require_same(b);
  GradedPoly out(a.vars_);
  Exponents e(a.vars_->size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

GradedPoly& GradedPoly::operator*=(const GradedPoly& o) { return *this = *this * o; }

GradedPoly& GradedPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

GradedPoly GradedPoly::operator+(const Rational& c) const { return *this + constant(vars_, c); }
GradedPoly GradedPoly::operator-(const Rational& c) const { return *this - constant(vars_, c); }

bool operator==(const GradedPoly& a, const GradedPoly& b) {
  return same_table(a.vars_, b.vars_) && a.terms_ == b.terms_;
}

std::string GradedPoly::str() const { return render(*this); }

GradedPoly truncated_inverse(const GradedPoly& p, int max_degree) {
  if (!p.part(0).is_constant() || p.part(0).constant_term() != Rational(1))
    throw DomainError("truncated_inverse needs constant term 1");
  // 1/(1+u) = sum (-u)^k; u has no degree-0 part so k <= max_degree suffices.
  GradedPoly u = p - Rational(1);
  GradedPoly neg_u = -u;
  GradedPoly term = GradedPoly::constant(p.table(), 1);
  GradedPoly sum = term;
  for (int k = 1; k <= max_degree; ++k) {
    term = (term * neg_u).truncate(max_degree);
    if (term.is_zero()) break;
    sum += term;
  }
  return sum.truncate(max_degree);
}

bool basis_less(const Exponents& a, const Exponents& b) {
  auto last = [](const Exponents& e) {
    int l = -1;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) l = static_cast<int>(i);
    return l;
  };
  int la = last(a), lb = last(b);
  if (la != lb) return la < lb;
  return b < a;
}

std::vector<Exponents> monomial_basis(const VarTable& vars, int degree) {
  std::vector<Exponents> out;
  if (degree < 0) return out;
  Exponents cur(vars.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, int rest) -> void {
    if (i == vars.size()) {
      if (rest == 0) out.push_back(cur);
      return;
    }
    int w = vars[i].weight;
    if (w == 0) {
      self(self, i + 1, rest);
      return;
    }
    for (int e = rest / w; e >= 0; --e) {
      cur[i] = e;
      self(self, i + 1, rest - e * w);
    }
    cur[i] = 0;
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), basis_less);
  return out;
}

GradedPoly substitute(const GradedPoly& p, const Bindings& bindings, const VarTablePtr& target) {
  if (!target) throw UsageError("substitute needs a target table");
  for (const auto& [name, image] : bindings)
    if (!same_table(image.table(), target))
      throw UsageError("binding for " + name + " is over a different table");

  const VarTable& src = p.vars();
  std::vector<std::vector<GradedPoly>> powers(src.size());
  std::vector<const GradedPoly*> image(src.size(), nullptr);
  std::vector<GradedPoly> identity(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (p.max_exponent(i) == 0) continue;
    auto it = bindings.find(src[i].name);
    if (it != bindings.end()) {
      image[i] = &it->second;
    } else if (target->contains(src[i].name)) {
      identity[i] = GradedPoly::variable(target, src[i].name);
      image[i] = &identity[i];
    } else {
      throw UsageError("unbound variable " + src[i].name);
    }
    powers[i].push_back(GradedPoly::constant(target, 1));
  }
  auto power = [&](std::size_t i, int k) -> const GradedPoly& {
    while (static_cast<int>(powers[i].size()) <= k) powers[i].push_back(powers[i].back() * *image[i]);
    return powers[i][k];
  };

  GradedPoly out(target);
  for (const auto& [e, c] : p.terms()) {
    GradedPoly term = GradedPoly::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) term *= power(i, e[i]);
    out += term;
  }
  return out;
}

GradedPoly substitute(const GradedPoly& p, const Bindings& bindings) {
  if (bindings.empty()) return p;
  return substitute(p, bindings, bindings.begin()->second.table());
}

GradedPoly embed(const GradedPoly& p, const VarTablePtr& target) { return substitute(p, {}, target); }

Rational coefficient_of(const GradedPoly& p, const Exponents& e) { return p.coefficient_of(e); }

}  // namespace thom
