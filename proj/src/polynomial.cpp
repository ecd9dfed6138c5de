#include "msk/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "msk/errors.hpp"

namespace msk {

namespace {

unsigned exponent_sum(const Polynomial::Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

}  // namespace

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw argument_error("polynomial arity must be nonnegative");
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int var) {
  if (var < 0 || var >= nvars) throw argument_error("variable index out of range");
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(var)] = 1;
  return monomial(nvars, std::move(e), 1);
}

Polynomial Polynomial::monomial(int nvars, Exponents exps, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(exps, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && exponent_sum(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_value() const {
  return coeff(Exponents(static_cast<std::size_t>(nvars_), 0));
}

Rational Polynomial::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_)
    deg = std::max(deg, static_cast<int>(exponent_sum(e)));
  return deg;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw argument_error("exponent vector length must equal the arity");
  if (msk::is_zero(c)) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (msk::is_zero(it->second)) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (nvars_ != rhs.nvars_) throw structural_error("polynomial arity mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (nvars_ != rhs.nvars_) throw structural_error("polynomial arity mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  Polynomial out = *this;
  out += rhs;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  Polynomial out = *this;
  out -= rhs;
  return out;
}

Polynomial Polynomial::operator-() const { return scaled(Rational(-1)); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (nvars_ != rhs.nvars_) throw structural_error("polynomial arity mismatch");
  Polynomial out(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : rhs.terms_) {
      Exponents e(ea);
      for (std::size_t v = 0; v < e.size(); ++v) e[v] += eb[v];
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial out(nvars_);
  if (msk::is_zero(c)) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, c * v);
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial out = constant(nvars_, 1);
  for (unsigned i = 0; i < e; ++i) out = out * (*this);
  return out;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= nvars_) throw argument_error("variable index out of range");
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    unsigned exp = e[static_cast<std::size_t>(var)];
    if (exp == 0) continue;
    Exponents d(e);
    --d[static_cast<std::size_t>(var)];
    out.add_term(d, c * Rational(static_cast<long>(exp)));
  }
  return out;
}

Rational Polynomial::eval(const QVector& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw argument_error("evaluation point dimension mismatch");
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t v = 0; v < e.size(); ++v)
      for (unsigned i = 0; i < e[v]; ++i) term *= point[v];
    total += term;
  }
  return total;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& subs) const {
  if (static_cast<int>(subs.size()) != nvars_)
    throw argument_error("compose: one substitution per variable required");
  int out_vars = subs.empty() ? 0 : subs[0].nvars();
  for (const Polynomial& s : subs)
    if (s.nvars() != out_vars) throw structural_error("compose: mixed arities");
  Polynomial out(out_vars);
  for (const auto& [e, c] : terms_) {
    Polynomial term = Polynomial::constant(out_vars, c);
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] > 0) term = term * subs[v].pow(e[v]);
    out += term;
  }
  return out;
}

std::optional<Polynomial> Polynomial::divided_exactly_by(const Polynomial& d) const {
  if (nvars_ != d.nvars_) throw structural_error("polynomial arity mismatch");
  if (d.is_zero()) return std::nullopt;
  // Single-divisor division in lex order; exact iff the remainder is zero,
  // and for exact quotients the leading term is always divisible.
  const auto& [lead_e, lead_c] = *d.terms_.rbegin();
  Polynomial rem = *this;
  Polynomial quot(nvars_);
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms_.rbegin();
    Exponents qe(re);
    bool divisible = true;
    for (std::size_t v = 0; v < qe.size(); ++v) {
      if (qe[v] < lead_e[v]) {
        divisible = false;
        break;
      }
      qe[v] -= lead_e[v];
    }
    if (!divisible) return std::nullopt;
    Polynomial t = monomial(nvars_, qe, rc / lead_c);
    quot += t;
    rem -= t * d;
  }
  return quot;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (static_cast<int>(names.size()) != nvars_)
    throw argument_error("to_string: one name per variable required");
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool negative = sgn(c) < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    Rational mag = abs(c);
    std::string vars;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += names[v];
      if (e[v] > 1) vars += "^" + std::to_string(e[v]);
    }
    if (vars.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += vars;
    } else {
      out += mag.get_str() + "*" + vars;
    }
  }
  return out;
}

std::vector<Polynomial::Exponents> monomials_up_to_degree(int nvars, int bound) {
  std::vector<Polynomial::Exponents> out;
  if (bound < 0) return out;
  Polynomial::Exponents cur(static_cast<std::size_t>(nvars), 0);
  for (int total = 0; total <= bound; ++total) {
    // Enumerate exponent vectors of exact total degree, lexicographically.
    std::vector<Polynomial::Exponents> level;
    cur.assign(static_cast<std::size_t>(nvars), 0);
    auto rec = [&](auto&& self, int var, int remaining) -> void {
      if (var == nvars - 1 || nvars == 0) {
        if (nvars > 0) cur[static_cast<std::size_t>(var)] = static_cast<unsigned>(remaining);
        if (nvars > 0 || remaining == 0) level.push_back(cur);
        return;
      }
      for (int take = remaining; take >= 0; --take) {
        cur[static_cast<std::size_t>(var)] = static_cast<unsigned>(take);
        self(self, var + 1, remaining - take);
      }
    };
    if (nvars == 0) {
      if (total == 0) level.push_back(cur);
    } else {
      rec(rec, 0, total);
    }
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace msk
