#ifndef MSK_FORMS_HPP
#define MSK_FORMS_HPP

#include <string>
#include <vector>

#include "msk/alternating.hpp"
#include "msk/chart.hpp"
#include "msk/multi_index.hpp"
#include "msk/polynomial.hpp"

namespace msk {

// Differential k-form with polynomial coefficients on a chart. The zero
// form may carry any degree (the exterior derivative of a top form has
// degree n+1 and no components).
class DifferentialForm {
 public:
  DifferentialForm() = default;
  DifferentialForm(Chart chart, int degree);

  const Chart& chart() const { return chart_; }
  int degree() const { return degree_; }
  const detail::ComponentMap<Polynomial>& components() const { return comps_; }
  Polynomial component(const MultiIndex& I) const;
  void add_term(const MultiIndex& I, const Polynomial& coeff);
  bool is_zero_form() const { return comps_.empty(); }

  DifferentialForm operator+(const DifferentialForm& rhs) const;
  DifferentialForm operator-(const DifferentialForm& rhs) const;
  DifferentialForm operator-() const;
  DifferentialForm scaled(const Rational& c) const;
  DifferentialForm multiplied(const Polynomial& f) const;

  AlternatingTensor at(const QVector& point) const;

  // Max total degree over all coefficient polynomials; -1 when zero.
  int coefficient_degree() const;
  bool has_constant_coefficients() const;

  bool operator==(const DifferentialForm&) const = default;

 private:
  Chart chart_;
  int degree_ = 0;
  detail::ComponentMap<Polynomial> comps_;
};

// Multivector field of degree m with polynomial coefficients on a chart.
class MultiVectorField {
 public:
  MultiVectorField() = default;
  MultiVectorField(Chart chart, int degree);

  const Chart& chart() const { return chart_; }
  int degree() const { return degree_; }
  const detail::ComponentMap<Polynomial>& components() const { return comps_; }
  Polynomial component(const MultiIndex& I) const;
  void add_term(const MultiIndex& I, const Polynomial& coeff);
  bool is_zero_field() const { return comps_.empty(); }

  MultiVectorField operator+(const MultiVectorField& rhs) const;
  MultiVectorField operator-(const MultiVectorField& rhs) const;
  MultiVectorField scaled(const Rational& c) const;
  MultiVectorField multiplied(const Polynomial& f) const;

  AlternatingTensor at(const QVector& point) const;

  bool operator==(const MultiVectorField&) const = default;

 private:
  Chart chart_;
  int degree_ = 0;
  detail::ComponentMap<Polynomial> comps_;
};

// Polynomial map between charts: one source-chart polynomial per target
// coordinate.
class PolyMap {
 public:
  PolyMap() = default;
  PolyMap(Chart source, Chart target, std::vector<Polynomial> components);
  static PolyMap identity(const Chart& chart);

  const Chart& source() const { return source_; }
  const Chart& target() const { return target_; }
  const std::vector<Polynomial>& components() const { return comps_; }

  // this(other(x)): other's target must match this->source().
  PolyMap after(const PolyMap& other) const;

  bool operator==(const PolyMap&) const = default;

 private:
  Chart source_, target_;
  std::vector<Polynomial> comps_;
};

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);
DifferentialForm interior(const MultiVectorField& X, const DifferentialForm& omega);

DifferentialForm exterior_derivative(const DifferentialForm& omega);

// Coordinate bracket of vector fields (degree-1 only).
MultiVectorField lie_bracket(const MultiVectorField& X, const MultiVectorField& Y);

// L(X) omega = d i(X) omega - (-1)^m i(X) d omega, for degree(X) <= k+1.
DifferentialForm lie_derivative(const MultiVectorField& X, const DifferentialForm& omega);

DifferentialForm pullback(const PolyMap& phi, const DifferentialForm& omega);

// Radial homotopy operator for the Poincare lemma, centered at the origin:
// returns eta with d(eta) = omega for closed omega of degree >= 1. The
// result is re-verified before returning. Non-closed input raises
// precondition_error listing the nonzero components of d(omega).
DifferentialForm homotopy_inverse_d(const DifferentialForm& omega);

bool is_closed(const DifferentialForm& omega);

}  // namespace msk

#endif
