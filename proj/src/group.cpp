#include "bcell/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bcell {

std::size_t BitRow::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

std::vector<SignedPermutation> enumerate(Rank rank) {
  const int n = rank.value();
  if (n > kMaxEnumerateRank) {
    throw ValidationError("enumeration of W_" + std::to_string(n) + " exceeds the cap " +
                          std::to_string(kMaxEnumerateRank));
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::pair<int, SignedPermutation>> keyed;
  std::vector<int> window(static_cast<std::size_t>(n));
  do {
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      for (int i = 0; i < n; ++i) window[i] = ((mask >> i) & 1U) ? -perm[i] : perm[i];
      auto w = SignedPermutation::from_window(rank, window);
      keyed.emplace_back(ell(w), w);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : a.second < b.second;
  });
  std::vector<SignedPermutation> out;
  out.reserve(keyed.size());
  for (auto& [l, w] : keyed) out.push_back(w);
  return out;
}

std::uint64_t Group::key(const SignedPermutation& w) {
  std::uint64_t k = 0;
  for (int i = 1; i <= w.rank(); ++i) k = k * 19 + static_cast<std::uint64_t>(w(i) + 9);
  return k;
}

Group::Group(Rank rank) : n_(rank.value()), elements_(enumerate(rank)) {
  const std::size_t size = elements_.size();
  index_.reserve(size);
  for (Index i = 0; i < size; ++i) index_.emplace(key(elements_[i]), i);

  inverse_.resize(size);
  length_.resize(size);
  ell_t_.resize(size);
  left_.resize(size * static_cast<std::size_t>(n_));
  right_.resize(size * static_cast<std::size_t>(n_));
  std::vector<SignedPermutation> gens;
  for (Generator g : generators(n_)) gens.push_back(generator_element(n_, g));
  for (Index i = 0; i < size; ++i) {
    const auto& w = elements_[i];
    inverse_[i] = index_of(w.inverse());
    const auto l = bcell::length(w);
    length_[i] = l.ell;
    ell_t_[i] = l.ell_t;
    for (int s = 0; s < n_; ++s) {
      left_[s * size + i] = index_of(gens[s] * w);
      right_[s * size + i] = index_of(w * gens[s]);
    }
  }
  stratum_begin_.assign(static_cast<std::size_t>(length_.back() + 2), static_cast<Index>(size));
  for (Index i = size; i-- > 0;) stratum_begin_[length_[i]] = i;

  std::set<SignedPermutation> refl;
  for (const auto& x : elements_) {
    for (const auto& g : gens) refl.insert(x * g * x.inverse());
  }
  reflections_.assign(refl.begin(), refl.end());

  if (n_ <= kBruhatMatrixMaxRank) build_bruhat();
}

Index Group::index_of(const SignedPermutation& w) const {
  if (w.rank() != n_) {
    throw RankMismatch("element of rank " + std::to_string(w.rank()) + " in W_" + std::to_string(n_));
  }
  return index_.at(key(w));
}

std::optional<Generator> Group::preferred_left_descent(Index w) const {
  for (int s = 0; s < n_; ++s) {
    const Generator g = s == 0 ? Generator::t() : Generator::s(s);
    if (is_left_descent(g, w)) return g;
  }
  return std::nullopt;
}

void Group::build_bruhat() {
  // Down-sets through cover relations x = r y with l(x) = l(y) - 1, in increasing length.
  const std::size_t size = elements_.size();
  bruhat_.assign(size, BitRow(size));
  for (Index y = 0; y < size; ++y) {
    BitRow& row = bruhat_[y];
    row.set(y);
    for (const auto& r : reflections_) {
      const Index x = index_of(r * elements_[y]);
      if (length_[x] + 1 == length_[y]) row.merge(bruhat_[x]);
    }
  }
}

bool Group::bruhat_leq(Index x, Index y) const {
  if (!bruhat_.empty()) return bruhat_[y].test(x);
  return bcell::bruhat_leq(elements_[x], elements_[y]);
}

const BitRow& Group::bruhat_down(Index y) const {
  if (bruhat_.empty()) throw Error("Bruhat matrix not materialized for rank " + std::to_string(n_));
  return bruhat_[y];
}

std::vector<Index> Group::bruhat_interval_below(Index y) const {
  std::vector<Index> out;
  if (!bruhat_.empty()) {
    bruhat_[y].for_each([&](std::size_t x) { out.push_back(static_cast<Index>(x)); });
  } else {
    for (Index x = 0; x <= y; ++x) {
      if (bruhat_leq(x, y)) out.push_back(x);
    }
  }
  return out;
}

}  // namespace bcell
