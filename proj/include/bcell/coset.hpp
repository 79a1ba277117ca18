#pragma once

// Distinguished coset representatives and the factorization
// w = a_w * a_l * sigma_w * b_w^{-1} of an element with t-length l.

#include <vector>

#include "bcell/signed_permutation.hpp"

namespace bcell {

/// r_1 = t, r_{i+1} = s_i r_i.
SignedPermutation r_element(int n, int i);

/// a_l = r_1 r_2 ... r_l, a_0 = 1.
SignedPermutation a_element(int n, int l);

/// Longest element sigma_l of the symmetric subgroup on {1..l}.
SignedPermutation sigma_longest(int n, int l);

/// X_n^(l): minimal length representatives of the cosets w S_n with t-length l,
/// listed as r_{i_1} ... r_{i_l} for increasing index tuples (lexicographic).
std::vector<SignedPermutation> coset_reps_X(Rank rank, int l);

/// Y_{l,n-l}: distinguished left coset representatives of S_{l,n-l} in S_n,
/// i.e. unsigned permutations increasing on positions 1..l and l+1..n.
std::vector<SignedPermutation> coset_reps_Y(Rank rank, int l);

/// Unsigned permutation stabilizing {1..l} and {l+1..n}.
bool in_young_subgroup(const SignedPermutation& w, int l);
/// Unsigned permutation (element of S_n).
bool in_symmetric_subgroup(const SignedPermutation& w);

struct Decomposition {
  SignedPermutation a;
  int l = 0;
  SignedPermutation sigma;
  SignedPermutation b;
  SignedPermutation sigma_prime;   // in S_l
  SignedPermutation sigma_second;  // in S_{[l+1,n]}
};

/// Unique factorization with a, b in Y_{l,n-l}, sigma in S_{l,n-l}, and
/// sigma_l * sigma = sigma_prime * sigma_second.
Decomposition decompose(const SignedPermutation& w);

}  // namespace bcell
