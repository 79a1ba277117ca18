#pragma once

// Young tableaux, bitableaux and the generalized Robinson-Schensted correspondence.

#include <compare>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bcell/group.hpp"
#include "bcell/signed_permutation.hpp"

namespace bcell {

/// Weakly decreasing positive parts, no trailing zeros.
using Partition = std::vector<int>;

int size(const Partition& p);
Partition conjugate(const Partition& p);
/// All partitions of m, in reverse lexicographic order ((m) first).
std::vector<Partition> partitions(int m);
std::string format_partition(const Partition& p);

struct Bipartition {
  Partition lambda;
  Partition mu;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

/// Bipartitions of n ordered by |mu| ascending, then each part in reverse lex order.
std::vector<Bipartition> bipartitions(int n);
std::string format_bipartition(const Bipartition& bp);

struct Tableau {
  std::vector<std::vector<int>> rows;

  bool empty() const { return rows.empty(); }
  int size() const;
  Partition shape() const;
  /// Rows strictly increasing, columns strictly increasing, shape a partition.
  bool is_standard() const;
  /// Position (row, column) of a value, or (-1, -1).
  std::pair<int, int> find(int value) const;

  /// Row insertion; returns the position of the new box.
  std::pair<int, int> insert(int value);
  /// Removes the corner box ending `row` and reverse-bumps; returns the expelled value.
  int remove_corner(int row);

  friend auto operator<=>(const Tableau&, const Tableau&) = default;
};

/// Rows joined by ";", entries by ","; the empty tableau is "-".
std::string format_tableau(const Tableau& t);
Tableau parse_tableau(std::string_view text);

struct Bitableau {
  Tableau plus;
  Tableau minus;

  Bipartition shape() const { return {plus.shape(), minus.shape()}; }
  int size() const { return plus.size() + minus.size(); }
  /// Both standard and jointly filled by exactly {1..n}.
  bool is_n_standard(int n) const;
  friend auto operator<=>(const Bitableau&, const Bitableau&) = default;
};

/// "plus|minus", e.g. "3,5,7;6|1,2;4".
std::string format_bitableau(const Bitableau& b);
Bitableau parse_bitableau(std::string_view text);

struct RSPair {
  Bitableau a;  // insertion
  Bitableau b;  // recording
  friend auto operator<=>(const RSPair&, const RSPair&) = default;
};

RSPair rs_insert(const SignedPermutation& w);
/// Inverse correspondence; throws ValidationError on unequal shapes or non-standard input.
SignedPermutation rs_inverse(const RSPair& pair);

/// A(w^{-1}) == B(w).
bool transpose_pair(const SignedPermutation& w);

/// Classical row insertion on a permutation of 1..m in one-line notation.
std::pair<Tableau, Tableau> classical_rs(std::span<const int> word);

/// All n-standard bitableaux, generated by adding 1..n at outer corners.
std::vector<Bitableau> standard_bitableaux(int n);

/// Elements reachable by one admissible interchange of adjacent window entries.
std::vector<SignedPermutation> admissible_moves(const SignedPermutation& w);

/// x <->_L y: connected through elementary left relations over s_1..s_{n-1}.
bool knuth_left_relation(const SignedPermutation& x, const SignedPermutation& y);

/// Class id per element (ids numbered by first appearance in index order).
std::vector<int> knuth_left_classes(const Group& group);

struct RSCellPartition {
  std::map<Bitableau, std::vector<SignedPermutation>> cells;
};

RSCellPartition rs_cells(Rank rank);

/// The relation defined through decompose(): equal t-length, equal b, and
/// classical Knuth equivalence of both symmetric-group factors.
bool equivalent_by_decomposition(const SignedPermutation& x, const SignedPermutation& y);

/// Comparison key for equivalent_by_decomposition.
struct DecompositionKey {
  int l = 0;
  SignedPermutation b;
  Tableau record_prime;
  Tableau record_second;
  friend bool operator==(const DecompositionKey&, const DecompositionKey&) = default;
};
DecompositionKey decomposition_key(const SignedPermutation& w);

}  // namespace bcell
