#ifndef MSK_POLYNOMIAL_HPP
#define MSK_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "msk/rational.hpp"

namespace msk {

// Sparse multivariate polynomial with exact rational coefficients. Terms are
// keyed by exponent vectors of fixed length (the chart dimension); no zero
// coefficients are stored.
class Polynomial {
 public:
  using Exponents = std::vector<unsigned>;
  using TermMap = std::map<Exponents, Rational>;

  explicit Polynomial(int nvars = 0);
  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int var);
  static Polynomial monomial(int nvars, Exponents exps, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // coefficient of the constant term
  const TermMap& terms() const { return terms_; }
  Rational coeff(const Exponents& e) const;
  int total_degree() const;  // -1 for the zero polynomial

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(unsigned e) const;

  Polynomial derivative(int var) const;
  Rational eval(const QVector& point) const;
  // Substitute subs[v] for variable v; all subs must share one arity.
  Polynomial compose(const std::vector<Polynomial>& subs) const;
  // Exact quotient this / d, or nullopt when d does not divide exactly.
  std::optional<Polynomial> divided_exactly_by(const Polynomial& d) const;

  void add_term(const Exponents& e, const Rational& c);

  // Canonical text in the scenario polynomial grammar; round-trips through
  // parse_polynomial. Terms are emitted in descending lexicographic
  // exponent order.
  std::string to_string(const std::vector<std::string>& names) const;

  bool operator==(const Polynomial&) const = default;

 private:
  int nvars_ = 0;
  TermMap terms_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

// All exponent vectors of arity nvars with total degree <= bound, graded
// lexicographic order (degree first, then lex).
std::vector<Polynomial::Exponents> monomials_up_to_degree(int nvars, int bound);

}  // namespace msk

#endif
