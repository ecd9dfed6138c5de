#include "oracle.hpp"

#include <algorithm>

namespace msk::testing {

namespace {

// Iterate all k-tuples over 1..n in odometer order.
bool next_tuple(std::vector<int>& t, int n) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (t[i] < n) {
      ++t[i];
      for (std::size_t j = i + 1; j < t.size(); ++j) t[j] = 1;
      return true;
    }
  }
  return false;
}

int permutation_sign(const std::vector<int>& tuple) {
  int inversions = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      if (tuple[i] == tuple[j]) return 0;
      if (tuple[i] > tuple[j]) ++inversions;
    }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

DenseTensor::DenseTensor(int n, int k) : n_(n), k_(k) {
  std::size_t size = 1;
  for (int i = 0; i < k; ++i) size *= static_cast<std::size_t>(n);
  a_.assign(size, Rational(0));
}

std::size_t DenseTensor::offset(const std::vector<int>& tuple) const {
  std::size_t off = 0;
  for (int i : tuple) off = off * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i - 1);
  return off;
}

Rational& DenseTensor::at(const std::vector<int>& tuple) { return a_[offset(tuple)]; }
const Rational& DenseTensor::at(const std::vector<int>& tuple) const {
  return a_[offset(tuple)];
}

DenseTensor DenseTensor::from_sparse(const AlternatingTensor& t) {
  DenseTensor dense(t.ambient_dim(), t.degree());
  if (t.degree() == 0) {
    dense.a_[0] = t.component(MultiIndex());
    return dense;
  }
  std::vector<int> tuple(static_cast<std::size_t>(t.degree()), 1);
  do {
    int sign = permutation_sign(tuple);
    if (sign == 0) continue;
    std::vector<int> sorted = tuple;
    std::sort(sorted.begin(), sorted.end());
    Rational c = t.component(MultiIndex(sorted));
    if (!is_zero(c)) dense.at(tuple) = sign < 0 ? Rational(-c) : c;
  } while (next_tuple(tuple, t.ambient_dim()));
  return dense;
}

DenseTensor dense_interior(const AlternatingTensor& X, const DenseTensor& w) {
  int n = w.dim();
  int m = X.degree();
  int out_degree = w.degree() - m;
  DenseTensor out(n, std::max(out_degree, 0));
  if (out_degree < 0) return out;
  std::vector<int> u(static_cast<std::size_t>(out_degree), 1);
  bool more = true;
  while (more) {
    Rational total(0);
    for (const auto& [J, c] : X.components()) {
      std::vector<int> full;
      for (int t = J.degree() - 1; t >= 0; --t) full.push_back(J[t]);
      full.insert(full.end(), u.begin(), u.end());
      total += c * w.at(full);
    }
    if (!is_zero(total)) out.at(u) = total;
    more = out_degree > 0 && next_tuple(u, n);
    if (out_degree == 0) more = false;
  }
  return out;
}

DenseTensor dense_wedge(const DenseTensor& a, const DenseTensor& b) {
  int n = a.dim();
  int p = a.degree(), q = b.degree();
  DenseTensor out(n, p + q);
  std::vector<int> tuple(static_cast<std::size_t>(p + q), 1);
  bool more = p + q > 0;
  while (more) {
    // Sum over (p,q)-shuffles: pick the positions fed to `a`, keep relative
    // order, sign = parity of the crossing count.
    Rational total(0);
    std::vector<int> positions(static_cast<std::size_t>(p + q));
    for (std::size_t i = 0; i < positions.size(); ++i) positions[i] = static_cast<int>(i);
    std::vector<bool> choose(static_cast<std::size_t>(p + q), false);
    std::fill(choose.begin(), choose.begin() + p, true);
    do {
      std::vector<int> ta, tb;
      int crossings = 0;
      int seen_b = 0;
      for (int pos = 0; pos < p + q; ++pos) {
        if (choose[static_cast<std::size_t>(pos)]) {
          ta.push_back(tuple[static_cast<std::size_t>(pos)]);
          crossings += seen_b;
        } else {
          tb.push_back(tuple[static_cast<std::size_t>(pos)]);
          ++seen_b;
        }
      }
      Rational term = a.at(ta) * b.at(tb);
      if (crossings % 2 == 1) term = -term;
      total += term;
    } while (std::prev_permutation(choose.begin(), choose.end()));
    if (!is_zero(total)) out.at(tuple) = total;
    more = next_tuple(tuple, n);
  }
  return out;
}

AlternatingTensor Gen::tensor(int n, int k, Variance variance, int terms) {
  AlternatingTensor t(n, k, variance);
  auto basis = increasing_indices(n, k);
  if (basis.empty()) return t;
  for (int i = 0; i < terms; ++i) {
    const MultiIndex& I = basis[static_cast<std::size_t>(integer(0, static_cast<int>(basis.size()) - 1))];
    t.add_term(I, rational());
  }
  return t;
}

Polynomial Gen::polynomial(int nvars, int max_degree, int terms) {
  Polynomial p(nvars);
  for (int t = 0; t < terms; ++t) {
    Polynomial::Exponents e(static_cast<std::size_t>(nvars), 0);
    int budget = integer(0, max_degree);
    for (int d = 0; d < budget; ++d) {
      if (nvars == 0) break;
      ++e[static_cast<std::size_t>(integer(0, nvars - 1))];
    }
    p.add_term(e, rational());
  }
  return p;
}

DifferentialForm Gen::form(const Chart& chart, int degree, int max_coeff_degree,
                           int terms_per_component) {
  DifferentialForm w(chart, degree);
  for (const MultiIndex& I : increasing_indices(chart.dimension(), degree))
    w.add_term(I, polynomial(chart.dimension(), max_coeff_degree, terms_per_component));
  return w;
}

MultiVectorField Gen::field(const Chart& chart, int degree, int max_coeff_degree,
                            int terms_per_component) {
  MultiVectorField x(chart, degree);
  for (const MultiIndex& I : increasing_indices(chart.dimension(), degree))
    x.add_term(I, polynomial(chart.dimension(), max_coeff_degree, terms_per_component));
  return x;
}

PolyMap Gen::poly_map(const Chart& chart, int max_degree) {
  std::vector<Polynomial> comps;
  for (int i = 0; i < chart.dimension(); ++i)
    comps.push_back(polynomial(chart.dimension(), max_degree));
  return PolyMap(chart, chart, std::move(comps));
}

}  // namespace msk::testing
