#include "bcell/coset.hpp"

#include <algorithm>
#include <cstdlib>

namespace bcell {

SignedPermutation r_element(int n, int i) {
  if (i < 1 || i > n) throw ValidationError("r_" + std::to_string(i) + " not defined in W_" + std::to_string(n));
  SignedPermutation r = generator_element(n, Generator::t());
  for (int k = 1; k < i; ++k) r = generator_element(n, Generator::s(k)) * r;
  return r;
}

SignedPermutation a_element(int n, int l) {
  if (l < 0 || l > n) throw ValidationError("a_" + std::to_string(l) + " not defined in W_" + std::to_string(n));
  SignedPermutation a = SignedPermutation::identity(n);
  for (int i = 1; i <= l; ++i) a = a * r_element(n, i);
  return a;
}

SignedPermutation sigma_longest(int n, int l) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[i] = i < l ? l - i : i + 1;
  return SignedPermutation::from_window(Rank(n), w);
}

namespace {

// All l-subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int l) {
  std::vector<std::vector<int>> out;
  std::vector<int> mask(static_cast<std::size_t>(n), 0);
  std::fill(mask.begin(), mask.begin() + l, 1);
  do {
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if (mask[i]) s.push_back(i + 1);
    }
    out.push_back(std::move(s));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

}  // namespace

std::vector<SignedPermutation> coset_reps_X(Rank rank, int l) {
  const int n = rank.value();
  if (l < 0 || l > n) throw ValidationError("X_n^(l) needs 0 <= l <= n, got l = " + std::to_string(l));
  std::vector<SignedPermutation> out;
  for (const auto& idx : subsets(n, l)) {
    SignedPermutation x = SignedPermutation::identity(n);
    for (int i : idx) x = x * r_element(n, i);
    out.push_back(x);
  }
  return out;
}

std::vector<SignedPermutation> coset_reps_Y(Rank rank, int l) {
  const int n = rank.value();
  if (l < 0 || l > n) throw ValidationError("Y_{l,n-l} needs 0 <= l <= n, got l = " + std::to_string(l));
  std::vector<SignedPermutation> out;
  for (const auto& first : subsets(n, l)) {
    std::vector<int> window = first;
    for (int v = 1; v <= n; ++v) {
      if (!std::binary_search(first.begin(), first.end(), v)) window.push_back(v);
    }
    out.push_back(SignedPermutation::from_window(rank, window));
  }
  return out;
}

bool in_symmetric_subgroup(const SignedPermutation& w) {
  for (int i = 1; i <= w.rank(); ++i) {
    if (w(i) < 0) return false;
  }
  return true;
}

bool in_young_subgroup(const SignedPermutation& w, int l) {
  for (int i = 1; i <= w.rank(); ++i) {
    if (w(i) < 0 || (i <= l) != (w(i) <= l)) return false;
  }
  return true;
}

Decomposition decompose(const SignedPermutation& w) {
  const int n = w.rank();
  const Rank rank(n);
  const int l = ell_t(w);
  const auto al = a_element(n, l);  // an involution
  const auto ys = coset_reps_Y(rank, l);
  const int target = ell(w);
  for (const auto& a : ys) {
    const auto left = al * a.inverse() * w;
    for (const auto& b : ys) {
      const auto sigma = left * b;
      if (!in_young_subgroup(sigma, l)) continue;
      if (ell(a) + ell(al) + ell(sigma) + ell(b) != target) continue;
      const auto prod = sigma_longest(n, l) * sigma;
      std::vector<int> first(static_cast<std::size_t>(n));
      std::vector<int> second(static_cast<std::size_t>(n));
      for (int i = 1; i <= n; ++i) {
        first[i - 1] = i <= l ? prod(i) : i;
        second[i - 1] = i <= l ? i : prod(i);
      }
      return Decomposition{a,
                           l,
                           sigma,
                           b,
                           SignedPermutation::from_window(rank, first),
                           SignedPermutation::from_window(rank, second)};
    }
  }
  throw Error("decompose: no factorization found for " + format_window(w));
}

}  // namespace bcell
