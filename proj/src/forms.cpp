#include "msk/forms.hpp"

#include <numeric>

#include "msk/errors.hpp"

namespace msk {

namespace {

template <class T>
AlternatingTensor evaluate_components(const T& obj, const QVector& point, Variance v) {
  if (static_cast<int>(point.size()) != obj.chart().dimension())
    throw argument_error("evaluation point dimension mismatch");
  int degree = obj.degree();
  AlternatingTensor out(obj.chart().dimension(),
                        degree <= obj.chart().dimension() ? degree : 0, v);
  for (const auto& [I, f] : obj.components()) out.add_term(I, f.eval(point));
  return out;
}

void require_same_chart(const Chart& a, const Chart& b, const char* what) {
  if (!(a == b)) throw structural_error(std::string(what) + ": chart mismatch");
}

}  // namespace

DifferentialForm::DifferentialForm(Chart chart, int degree)
    : chart_(std::move(chart)), degree_(degree) {
  if (degree < 0) throw argument_error("form degree must be nonnegative");
}

Polynomial DifferentialForm::component(const MultiIndex& I) const {
  auto it = comps_.find(I);
  return it == comps_.end() ? Polynomial(chart_.dimension()) : it->second;
}

void DifferentialForm::add_term(const MultiIndex& I, const Polynomial& coeff) {
  if (I.degree() != degree_) throw argument_error("component degree mismatch");
  if (degree_ > chart_.dimension())
    throw argument_error("nonzero component on a form of degree above the dimension");
  if (I.max_index() > chart_.dimension())
    throw argument_error("component index exceeds chart dimension");
  if (coeff.nvars() != chart_.dimension())
    throw argument_error("coefficient arity must equal chart dimension");
  detail::add_component(comps_, I, coeff);
}

DifferentialForm DifferentialForm::operator+(const DifferentialForm& rhs) const {
  require_same_chart(chart_, rhs.chart_, "form sum");
  if (degree_ != rhs.degree_) throw structural_error("form sum degree mismatch");
  DifferentialForm out = *this;
  for (const auto& [I, f] : rhs.comps_) detail::add_component(out.comps_, I, f);
  return out;
}

DifferentialForm DifferentialForm::operator-(const DifferentialForm& rhs) const {
  return *this + rhs.scaled(Rational(-1));
}

DifferentialForm DifferentialForm::operator-() const { return scaled(Rational(-1)); }

DifferentialForm DifferentialForm::scaled(const Rational& c) const {
  DifferentialForm out(chart_, degree_);
  if (is_zero(c)) return out;
  for (const auto& [I, f] : comps_) out.comps_.emplace(I, f.scaled(c));
  return out;
}

DifferentialForm DifferentialForm::multiplied(const Polynomial& f) const {
  DifferentialForm out(chart_, degree_);
  for (const auto& [I, g] : comps_) detail::add_component(out.comps_, I, f * g);
  return out;
}

AlternatingTensor DifferentialForm::at(const QVector& point) const {
  return evaluate_components(*this, point, Variance::covariant);
}

int DifferentialForm::coefficient_degree() const {
  int deg = -1;
  for (const auto& [I, f] : comps_) deg = std::max(deg, f.total_degree());
  return deg;
}

bool DifferentialForm::has_constant_coefficients() const {
  return coefficient_degree() <= 0;
}

MultiVectorField::MultiVectorField(Chart chart, int degree)
    : chart_(std::move(chart)), degree_(degree) {
  if (degree < 0) throw argument_error("field degree must be nonnegative");
}

Polynomial MultiVectorField::component(const MultiIndex& I) const {
  auto it = comps_.find(I);
  return it == comps_.end() ? Polynomial(chart_.dimension()) : it->second;
}

void MultiVectorField::add_term(const MultiIndex& I, const Polynomial& coeff) {
  if (I.degree() != degree_) throw argument_error("component degree mismatch");
  if (degree_ > chart_.dimension())
    throw argument_error("nonzero component on a field of degree above the dimension");
  if (I.max_index() > chart_.dimension())
    throw argument_error("component index exceeds chart dimension");
  if (coeff.nvars() != chart_.dimension())
    throw argument_error("coefficient arity must equal chart dimension");
  detail::add_component(comps_, I, coeff);
}

MultiVectorField MultiVectorField::operator+(const MultiVectorField& rhs) const {
  require_same_chart(chart_, rhs.chart_, "field sum");
  if (degree_ != rhs.degree_) throw structural_error("field sum degree mismatch");
  MultiVectorField out = *this;
  for (const auto& [I, f] : rhs.comps_) detail::add_component(out.comps_, I, f);
  return out;
}

MultiVectorField MultiVectorField::operator-(const MultiVectorField& rhs) const {
  return *this + rhs.scaled(Rational(-1));
}

MultiVectorField MultiVectorField::scaled(const Rational& c) const {
  MultiVectorField out(chart_, degree_);
  if (is_zero(c)) return out;
  for (const auto& [I, f] : comps_) out.comps_.emplace(I, f.scaled(c));
  return out;
}

MultiVectorField MultiVectorField::multiplied(const Polynomial& f) const {
  MultiVectorField out(chart_, degree_);
  for (const auto& [I, g] : comps_) detail::add_component(out.comps_, I, f * g);
  return out;
}

AlternatingTensor MultiVectorField::at(const QVector& point) const {
  return evaluate_components(*this, point, Variance::contravariant);
}

PolyMap::PolyMap(Chart source, Chart target, std::vector<Polynomial> components)
    : source_(std::move(source)), target_(std::move(target)), comps_(std::move(components)) {
  if (static_cast<int>(comps_.size()) != target_.dimension())
    throw argument_error("map needs one component per target coordinate");
  for (const Polynomial& p : comps_)
    if (p.nvars() != source_.dimension())
      throw argument_error("map components must be polynomials in the source coordinates");
}

PolyMap PolyMap::identity(const Chart& chart) {
  std::vector<Polynomial> comps;
  for (int i = 0; i < chart.dimension(); ++i)
    comps.push_back(Polynomial::variable(chart.dimension(), i));
  return PolyMap(chart, chart, std::move(comps));
}

PolyMap PolyMap::after(const PolyMap& other) const {
  require_same_chart(source_, other.target_, "map composition");
  std::vector<Polynomial> comps;
  for (const Polynomial& p : comps_) comps.push_back(p.compose(other.components()));
  return PolyMap(other.source(), target_, std::move(comps));
}

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
  require_same_chart(a.chart(), b.chart(), "wedge");
  DifferentialForm out(a.chart(), a.degree() + b.degree());
  if (out.degree() > a.chart().dimension()) return out;
  auto comps = detail::wedge_components(a.components(), b.components());
  for (const auto& [I, f] : comps) out.add_term(I, f);
  return out;
}

DifferentialForm interior(const MultiVectorField& X, const DifferentialForm& omega) {
  require_same_chart(X.chart(), omega.chart(), "interior");
  int result_degree = omega.degree() - X.degree();
  if (result_degree < 0) return DifferentialForm(omega.chart(), 0);
  DifferentialForm out(omega.chart(), result_degree);
  auto comps = detail::interior_components(X.components(), omega.components());
  for (const auto& [I, f] : comps) out.add_term(I, f);
  return out;
}

DifferentialForm exterior_derivative(const DifferentialForm& omega) {
  const Chart& chart = omega.chart();
  DifferentialForm out(chart, omega.degree() + 1);
  if (out.degree() > chart.dimension()) return out;
  for (const auto& [I, f] : omega.components()) {
    for (int v = 0; v < chart.dimension(); ++v) {
      Polynomial df = f.derivative(v);
      if (df.is_zero()) continue;
      auto merged = wedge_sign(MultiIndex::single(v + 1), I);
      if (!merged) continue;
      if (merged->first < 0) df = -df;
      out.add_term(merged->second, df);
    }
  }
  return out;
}

MultiVectorField lie_bracket(const MultiVectorField& X, const MultiVectorField& Y) {
  require_same_chart(X.chart(), Y.chart(), "lie_bracket");
  if (X.degree() != 1 || Y.degree() != 1)
    throw argument_error("lie_bracket: defined for vector fields only");
  const Chart& chart = X.chart();
  int n = chart.dimension();
  MultiVectorField out(chart, 1);
  for (int i = 0; i < n; ++i) {
    Polynomial comp(n);
    Polynomial yi = Y.component(MultiIndex::single(i + 1));
    Polynomial xi = X.component(MultiIndex::single(i + 1));
    for (int j = 0; j < n; ++j) {
      Polynomial xj = X.component(MultiIndex::single(j + 1));
      Polynomial yj = Y.component(MultiIndex::single(j + 1));
      comp += xj * yi.derivative(j) - yj * xi.derivative(j);
    }
    if (!comp.is_zero()) out.add_term(MultiIndex::single(i + 1), comp);
  }
  return out;
}

DifferentialForm lie_derivative(const MultiVectorField& X, const DifferentialForm& omega) {
  require_same_chart(X.chart(), omega.chart(), "lie_derivative");
  int m = X.degree();
  if (m > omega.degree() + 1)
    throw argument_error("lie_derivative: field degree exceeds form degree + 1");
  DifferentialForm first = exterior_derivative(interior(X, omega));
  DifferentialForm second = interior(X, exterior_derivative(omega));
  return m % 2 == 0 ? first - second : first + second;
}

DifferentialForm pullback(const PolyMap& phi, const DifferentialForm& omega) {
  require_same_chart(phi.target(), omega.chart(), "pullback");
  const Chart& src = phi.source();
  int n_src = src.dimension();
  DifferentialForm out(src, omega.degree());
  if (omega.degree() > n_src) return out;
  // Differentials of the map components as source 1-forms.
  std::vector<DifferentialForm> dphi;
  for (const Polynomial& comp : phi.components()) {
    DifferentialForm d(src, 1);
    for (int v = 0; v < n_src; ++v) d.add_term(MultiIndex::single(v + 1), comp.derivative(v));
    dphi.push_back(std::move(d));
  }
  for (const auto& [I, f] : omega.components()) {
    DifferentialForm term(src, 0);
    term.add_term(MultiIndex(), f.compose(phi.components()));
    for (int t = 0; t < I.degree(); ++t)
      term = wedge(term, dphi[static_cast<std::size_t>(I[t] - 1)]);
    out = out + term;
  }
  return out;
}

bool is_closed(const DifferentialForm& omega) {
  return exterior_derivative(omega).is_zero_form();
}

DifferentialForm homotopy_inverse_d(const DifferentialForm& omega) {
  const Chart& chart = omega.chart();
  int k = omega.degree();
  if (k < 1) throw argument_error("homotopy_inverse_d: degree >= 1 required");
  DifferentialForm d_omega = exterior_derivative(omega);
  if (!d_omega.is_zero_form()) {
    std::string what = "homotopy_inverse_d: input is not closed; d(omega) has components:";
    for (const auto& [I, f] : d_omega.components())
      what += " dx^" + I.concat_digits() + ": " + f.to_string(chart.coords()) + ";";
    throw precondition_error(what);
  }
  // Radial contraction i(E)omega with E the dilation field, each monomial
  // scaled by 1/(k - 1 + monomial degree); exact on polynomials.
  MultiVectorField euler(chart, 1);
  for (int v = 0; v < chart.dimension(); ++v)
    euler.add_term(MultiIndex::single(v + 1),
                   Polynomial::variable(chart.dimension(), v));
  DifferentialForm contracted = interior(euler, omega);
  DifferentialForm eta(chart, k - 1);
  for (const auto& [I, f] : contracted.components()) {
    Polynomial scaled_f(chart.dimension());
    for (const auto& [e, c] : f.terms()) {
      long deg = std::accumulate(e.begin(), e.end(), 0L);
      scaled_f.add_term(e, c / Rational(k - 1 + deg));
    }
    eta.add_term(I, scaled_f);
  }
  if (!(exterior_derivative(eta) == omega))
    throw error("homotopy_inverse_d: internal verification d(eta) == omega failed");
  return eta;
}

}  // namespace msk
