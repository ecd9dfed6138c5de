#ifndef MSK_MULTI_INDEX_HPP
#define MSK_MULTI_INDEX_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace msk {

// Strictly increasing tuple of 1-based coordinate indices. Equal-degree
// tuples compare lexicographically; that order fixes the basis order of
// every matrix, report and serialized payload in the library.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> indices);
  static MultiIndex single(int i);

  int degree() const { return static_cast<int>(idx_.size()); }
  int operator[](int pos) const { return idx_[static_cast<std::size_t>(pos)]; }
  const std::vector<int>& indices() const { return idx_; }
  bool contains(int i) const;
  int max_index() const { return idx_.empty() ? 0 : idx_.back(); }
  std::uint64_t mask() const;

  // Concatenated digits, e.g. {1,3} -> "13". Used by momentum coordinate
  // names (p_13); only safe for ambient dimension <= 9, which the builders
  // enforce where it matters.
  std::string concat_digits() const;

  auto operator<=>(const MultiIndex&) const = default;

 private:
  std::vector<int> idx_;
};

// All increasing degree-k tuples in 1..n, lexicographic order.
std::vector<MultiIndex> increasing_indices(int n, int k);

// Position of `I` in increasing_indices(n, I.degree()).
int lex_position(int n, const MultiIndex& I);

long long binomial(int n, int k);

// dx^a wedge dx^b = sign * dx^{a union b}; nullopt when a and b intersect.
std::optional<std::pair<int, MultiIndex>> wedge_sign(const MultiIndex& a,
                                                     const MultiIndex& b);

// i(e_J) dx^I with the rightmost factor of e_J inserted first; nullopt
// unless J is a subset of I.
std::optional<std::pair<int, MultiIndex>> contraction_sign(const MultiIndex& J,
                                                           const MultiIndex& I);

namespace detail {

// Sparse component algebra shared by pointwise tensors (Rational
// coefficients) and fields/forms on a chart (Polynomial coefficients).
// Maps never hold zero coefficients.
template <class C>
using ComponentMap = std::map<MultiIndex, C>;

template <class C>
void add_component(ComponentMap<C>& m, const MultiIndex& I, const C& value) {
  if (is_zero(value)) return;
  auto it = m.find(I);
  if (it == m.end()) {
    m.emplace(I, value);
  } else {
    it->second += value;
    if (is_zero(it->second)) m.erase(it);
  }
}

template <class C>
ComponentMap<C> wedge_components(const ComponentMap<C>& a, const ComponentMap<C>& b) {
  ComponentMap<C> out;
  for (const auto& [ia, ca] : a)
    for (const auto& [ib, cb] : b) {
      auto merged = wedge_sign(ia, ib);
      if (!merged) continue;
      C term = ca * cb;
      if (merged->first < 0) term = -term;
      add_component(out, merged->second, term);
    }
  return out;
}

// i(X) omega extended bilinearly over components.
template <class C>
ComponentMap<C> interior_components(const ComponentMap<C>& x, const ComponentMap<C>& w) {
  ComponentMap<C> out;
  for (const auto& [J, cx] : x)
    for (const auto& [I, cw] : w) {
      auto contracted = contraction_sign(J, I);
      if (!contracted) continue;
      C term = cx * cw;
      if (contracted->first < 0) term = -term;
      add_component(out, contracted->second, term);
    }
  return out;
}

}  // namespace detail

}  // namespace msk

#endif
