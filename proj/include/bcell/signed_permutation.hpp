#pragma once

// Elements of the hyperoctahedral group W_n (Coxeter type B_n), stored as
// windows of signed images.  The generators are t = (1,-1) and
// s_i = (i,i+1)(-i,-i-1); products compose right to left, (xy)(i) = x(y(i)).

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bcell {

/// Largest rank accepted by element arithmetic and the RS correspondence.
inline constexpr int kMaxRank = 9;
/// Largest rank for which the whole group may be enumerated.
inline constexpr int kMaxEnumerateRank = 6;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input (bad window, bad word, bad tableau, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

/// Number of letters n, 1 <= n <= kMaxRank.
class Rank {
 public:
  explicit Rank(int n);
  int value() const { return n_; }
  friend bool operator==(Rank, Rank) = default;

 private:
  int n_;
};

/// t is index 0, s_i is index i.
class Generator {
 public:
  static constexpr Generator t() { return Generator(0); }
  static constexpr Generator s(int i) { return Generator(i); }
  constexpr int index() const { return index_; }
  constexpr bool is_t() const { return index_ == 0; }
  std::string name() const;
  friend constexpr auto operator<=>(Generator, Generator) = default;

 private:
  constexpr explicit Generator(int i) : index_(i) {}
  int index_;
};

/// All generators t, s_1, ..., s_{n-1} of W_n, in that order.
std::vector<Generator> generators(int n);

/// Bit i set means generator with index i is present.
using GeneratorSet = std::uint32_t;

inline bool contains(GeneratorSet set, Generator g) { return (set >> g.index()) & 1U; }

enum class Side { left, right };

struct LengthTriple {
  int ell = 0;
  int ell_t = 0;
  int ell_s = 0;
  friend bool operator==(const LengthTriple&, const LengthTriple&) = default;
};

class SignedPermutation {
 public:
  static SignedPermutation identity(int n);
  /// Validates entries; the error message names the offending position.
  static SignedPermutation from_window(Rank rank, std::span<const int> entries);
  static SignedPermutation from_window(Rank rank, std::initializer_list<int> entries) {
    return from_window(rank, std::span<const int>(entries.begin(), entries.size()));
  }

  int rank() const { return n_; }
  /// Image of i for i in {+-1, ..., +-n}.
  int operator()(int i) const { return i > 0 ? w_[i - 1] : -w_[-i - 1]; }
  std::vector<int> window() const { return {w_.begin(), w_.begin() + n_}; }

  SignedPermutation operator*(const SignedPermutation& rhs) const;
  SignedPermutation inverse() const;
  bool is_identity() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  /// Lexicographic on (rank, window).
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  SignedPermutation() = default;
  std::int8_t n_ = 0;
  std::array<std::int8_t, kMaxRank> w_{};
};

SignedPermutation generator_element(int n, Generator g);
/// The transposition t_i = (i,-i), 1 <= i <= n.
SignedPermutation t_element(int n, int i);
/// The longest element w_n : i -> -i.
SignedPermutation longest_element(int n);

SignedPermutation multiply(const SignedPermutation& x, const SignedPermutation& y);
SignedPermutation inverse(const SignedPermutation& x);
SignedPermutation apply_generator(Generator g, const SignedPermutation& x, Side side);

LengthTriple length(const SignedPermutation& w);
inline int ell(const SignedPermutation& w) { return length(w).ell; }
/// Number of negative window entries, which equals the t-count of any reduced word.
int ell_t(const SignedPermutation& w);

GeneratorSet descent_left(const SignedPermutation& w);
GeneratorSet descent_right(const SignedPermutation& w);

/// Descents over S'_n = S_n together with t_1, ..., t_n.
struct ExtendedDescents {
  GeneratorSet generators = 0;
  std::uint32_t transpositions = 0;  // bit i set: t_i is a descent
  bool subset_of(const ExtendedDescents& other) const {
    return (generators & ~other.generators) == 0 && (transpositions & ~other.transpositions) == 0;
  }
  friend bool operator==(const ExtendedDescents&, const ExtendedDescents&) = default;
};

/// {u in S'_n : l(u w) < l(w)}.
ExtendedDescents descent_extended_left(const SignedPermutation& w);
/// {u in S'_n : l(w u) < l(w)}, using the window tests on adjacent entries.
ExtendedDescents descent_extended_right(const SignedPermutation& w);

/// Left descent preferred by every recursion: t if present, else the lowest s_i.
/// Returns -1 for the identity.
int preferred_left_descent(const SignedPermutation& w);

/// Reduced word obtained by repeatedly stripping the preferred left descent.
std::vector<Generator> reduced_word(const SignedPermutation& w);
SignedPermutation from_word(int n, std::span<const Generator> word);

/// Bruhat order computed by the lifting recursion over left descents of y.
bool bruhat_leq(const SignedPermutation& x, const SignedPermutation& y);

/// "-4,3,6,-1,7,-2,5"
std::string format_window(const SignedPermutation& w);
SignedPermutation parse_window(Rank rank, std::string_view text);
/// Rank is the number of entries.
SignedPermutation parse_window(std::string_view text);

/// "t s1 s2"; an empty word (or the token "1") is the identity.
std::string format_word(std::span<const Generator> word);
std::vector<Generator> parse_word(int n, std::string_view text);

}  // namespace bcell
