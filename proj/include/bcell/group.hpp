#pragma once

// Enumerated W_n with multiplication tables, length data and the Bruhat order.
// Elements are indexed in length-lexicographic order: index 0 is the identity and
// the elements of a given length occupy a contiguous range.

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "bcell/signed_permutation.hpp"

namespace bcell {

using Index = std::uint32_t;

/// Largest rank for which the Bruhat order is materialized as a bit matrix.
inline constexpr int kBruhatMatrixMaxRank = 5;

/// All 2^n n! elements, each once, in length-lexicographic order.
std::vector<SignedPermutation> enumerate(Rank rank);

/// Fixed-size bit set used for Bruhat rows and cell reachability.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t bits) : words_((bits + 63) / 64, 0) {}
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void merge(const BitRow& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
  }
  std::size_t count() const;
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w != 0) {
        const int bit = __builtin_ctzll(w);
        f(k * 64 + static_cast<std::size_t>(bit));
        w &= w - 1;
      }
    }
  }
  friend bool operator==(const BitRow&, const BitRow&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

class Group {
 public:
  explicit Group(Rank rank);

  int rank() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t generator_count() const { return static_cast<std::size_t>(n_); }

  const SignedPermutation& element(Index i) const { return elements_[i]; }
  const std::vector<SignedPermutation>& elements() const { return elements_; }
  Index index_of(const SignedPermutation& w) const;

  Index identity() const { return 0; }
  Index longest() const { return static_cast<Index>(elements_.size() - 1); }
  Index inverse(Index w) const { return inverse_[w]; }
  Index left_mul(Generator s, Index w) const { return left_[s.index() * size() + w]; }
  Index right_mul(Generator s, Index w) const { return right_[s.index() * size() + w]; }
  Index multiply(Index x, Index y) const { return index_of(elements_[x] * elements_[y]); }

  int length(Index w) const { return length_[w]; }
  int ell_t(Index w) const { return ell_t_[w]; }
  int ell_s(Index w) const { return length_[w] - ell_t_[w]; }
  int max_length() const { return length_.back(); }
  /// Index range [first, last) of the elements of length l.
  std::pair<Index, Index> stratum(int l) const { return {stratum_begin_[l], stratum_begin_[l + 1]}; }

  bool is_left_descent(Generator s, Index w) const { return length(left_mul(s, w)) < length(w); }
  bool is_right_descent(Generator s, Index w) const { return length(right_mul(s, w)) < length(w); }
  /// t if it is a left descent of w, otherwise the lowest s_i; nullopt for the identity.
  std::optional<Generator> preferred_left_descent(Index w) const;

  bool has_bruhat_matrix() const { return !bruhat_.empty(); }
  bool bruhat_leq(Index x, Index y) const;
  /// Down-set {x : x <= y}; requires the materialized matrix.
  const BitRow& bruhat_down(Index y) const;
  /// Elements x <= y in increasing index order.
  std::vector<Index> bruhat_interval_below(Index y) const;

  /// All reflections (conjugates of generators).
  const std::vector<SignedPermutation>& reflections() const { return reflections_; }

 private:
  static std::uint64_t key(const SignedPermutation& w);
  void build_bruhat();

  int n_;
  std::vector<SignedPermutation> elements_;
  std::unordered_map<std::uint64_t, Index> index_;
  std::vector<Index> inverse_;
  std::vector<Index> left_;
  std::vector<Index> right_;
  std::vector<int> length_;
  std::vector<int> ell_t_;
  std::vector<Index> stratum_begin_;
  std::vector<SignedPermutation> reflections_;
  std::vector<BitRow> bruhat_;
};

}  // namespace bcell
