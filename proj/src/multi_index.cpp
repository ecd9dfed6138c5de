#include "msk/multi_index.hpp"

#include <algorithm>

#include "msk/errors.hpp"

namespace msk {

MultiIndex::MultiIndex(std::vector<int> indices) : idx_(std::move(indices)) {
  for (std::size_t t = 0; t < idx_.size(); ++t) {
    if (idx_[t] < 1) throw argument_error("multi-index entries are 1-based");
    if (t > 0 && idx_[t] <= idx_[t - 1])
      throw argument_error("multi-index must be strictly increasing");
  }
}

MultiIndex MultiIndex::single(int i) { return MultiIndex(std::vector<int>{i}); }

bool MultiIndex::contains(int i) const {
  return std::binary_search(idx_.begin(), idx_.end(), i);
}

std::uint64_t MultiIndex::mask() const {
  std::uint64_t m = 0;
  for (int i : idx_) m |= std::uint64_t(1) << (i - 1);
  return m;
}

std::string MultiIndex::concat_digits() const {
  std::string s;
  for (int i : idx_) s += std::to_string(i);
  return s;
}

std::vector<MultiIndex> increasing_indices(int n, int k) {
  std::vector<MultiIndex> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) cur[t] = t + 1;
  while (true) {
    out.emplace_back(cur);
    int t = k - 1;
    while (t >= 0 && cur[t] == n - (k - 1 - t)) --t;
    if (t < 0) break;
    ++cur[t];
    for (int s = t + 1; s < k; ++s) cur[s] = cur[s - 1] + 1;
  }
  return out;
}

int lex_position(int n, const MultiIndex& I) {
  // Count of increasing tuples preceding I in lexicographic order.
  long long pos = 0;
  int k = I.degree();
  int prev = 0;
  for (int t = 0; t < k; ++t) {
    for (int c = prev + 1; c < I[t]; ++c) pos += binomial(n - c, k - 1 - t);
    prev = I[t];
  }
  return static_cast<int>(pos);
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::optional<std::pair<int, MultiIndex>> wedge_sign(const MultiIndex& a,
                                                     const MultiIndex& b) {
  if ((a.mask() & b.mask()) != 0) return std::nullopt;
  int inversions = 0;
  for (int i : a.indices())
    for (int j : b.indices())
      if (i > j) ++inversions;
  std::vector<int> merged;
  merged.reserve(static_cast<std::size_t>(a.degree() + b.degree()));
  std::merge(a.indices().begin(), a.indices().end(), b.indices().begin(),
             b.indices().end(), std::back_inserter(merged));
  return std::make_pair(inversions % 2 == 0 ? 1 : -1, MultiIndex(std::move(merged)));
}

std::optional<std::pair<int, MultiIndex>> contraction_sign(const MultiIndex& J,
                                                           const MultiIndex& I) {
  if ((J.mask() & I.mask()) != J.mask()) return std::nullopt;
  std::vector<int> rest = I.indices();
  int sign = 1;
  for (int t = J.degree() - 1; t >= 0; --t) {
    auto it = std::lower_bound(rest.begin(), rest.end(), J[t]);
    int pos = static_cast<int>(it - rest.begin());
    if (pos % 2 == 1) sign = -sign;
    rest.erase(it);
  }
  return std::make_pair(sign, MultiIndex(std::move(rest)));
}

}  // namespace msk
