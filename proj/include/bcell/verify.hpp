#pragma once

// Exhaustive consistency checks over a completed KLStore.  Every suite returns
// a Report listing the number of checks made and the first counterexamples.

#include <string>
#include <vector>

#include "bcell/kl_store.hpp"

namespace bcell {

struct Report {
  Report() = default;
  explicit Report(std::string suite) : name(std::move(suite)) {}

  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;

  static constexpr std::size_t kMaxListed = 8;

  bool passed() const { return failures == 0; }
  template <typename Describe>
  void check(bool ok, Describe&& describe) {
    ++checks;
    if (ok) return;
    ++failures;
    if (counterexamples.size() < kMaxListed) counterexamples.push_back(describe());
  }
  void merge(const Report& other);
};

/// P*(w,w) = 1 and P*(y,w) in Z[Gamma_-] for y < w; P*(y^-1,w^-1) = P*(y,w).
Report verify_pstar_basic(const KLStore& store);

/// For every stored or implied M^s_{y,w}: bar invariance, the congruence
/// defining it, and v_s^{-1} M in Z[Gamma_-].
Report verify_m_conditions(const KLStore& store);

/// bar(C_w) = C_w in the T-basis, with bar(T_y) expanded through RTable.
Report verify_bar_invariance(const KLStore& store, const RTable& r);

/// Alternating sums against the longest element for P* and for P, and the
/// antisymmetry of M under right multiplication by w_0.
Report verify_longest_identities(const KLStore& store);

/// P in Z[q] with constant term 1; for equal t-length, deg_q P <= (l(w)-l(y)-1)/2
/// and M^{s_i} equals the coefficient of q^{(l(w)-l(y)-1)/2}; M^{s_i} vanishes
/// across t-length strata.
Report verify_q_polynomials(const KLStore& store);

/// M^t vanishes across t-length strata; t-length is constant on left cells and
/// does not decrease going down the left preorder.
Report verify_t_strata(const KLStore& store, const CellPartition& cells);

/// Both of the above.
Report verify_asymptotic_theorems(const KLStore& store, const CellPartition& cells);

/// For every left cell C of the parabolic subgroup W_J, X_J C is a union of
/// left cells of W_n.
Report verify_parabolic(const KLStore& store, const CellPartition& cells, GeneratorSet j);

/// For x <= y with equal t-length and equal right factor b: R, P*, P and M
/// agree for (x,y) and (xb,yb), and x <=_L y iff xb <=_L yb.
Report verify_transport(const KLStore& store, const CellPartition& cells, const RTable* r);

/// Left cells agree with the fibres of the RS recording bitableau.
Report verify_rs_cells(const KLStore& store, const CellPartition& cells);

/// w -> w a_l maps Y_{l,n-l} onto X_n^(l) and S_n onto X_n^(l) S_{l,n-l}
/// bijectively; every element factors as a_w a_l sigma_w b_w^{-1} with
/// additive lengths and b_w = a_{w^{-1}}.
Report verify_coset_structure(const Group& g);

/// For x <= y of equal t-length l: X_n^(l) S_{l,n-l} is closed downwards,
/// a_x <= a_y and b_x <= b_y, and when b_x = b_y = b, z -> z b^{-1} maps
/// [xb, yb] isomorphically onto [x, y].
Report verify_coset_intervals(const Group& g);

/// RS is a bijection from W_n onto pairs of n-standard bitableaux of equal
/// shape, rs_inverse undoes it, and A(w^{-1}) = B(w).
Report verify_rs_bijection(const Group& g);

/// Two cell partitions of the same group coincide.
Report compare_partitions(const std::string& name, const CellPartition& a, const CellPartition& b);

/// Elements of the parabolic subgroup generated by J, ascending.
std::vector<Index> parabolic_subgroup(const Group& g, GeneratorSet j);
/// Minimal length representatives of the left cosets x W_J, ascending.
std::vector<Index> distinguished_left_reps(const Group& g, GeneratorSet j);

}  // namespace bcell
