#pragma once

// Exact arithmetic in Z[Gamma], Gamma a totally ordered free abelian group of
// rank 1 (a single exponent of v) or rank 2 (exponents of V and v, V dominant).

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "bcell/signed_permutation.hpp"

namespace bcell {

using Integer = boost::multiprecision::cpp_int;

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Exponent vector.  Rank-1 elements use slot 0 only; slot 1 stays zero.
/// Lexicographic comparison is the order of Gamma for both ranks.
struct Gamma {
  std::array<std::int32_t, 2> e{};

  static Gamma v(std::int32_t j) { return Gamma{{j, 0}}; }
  static Gamma Vv(std::int32_t i, std::int32_t j) { return Gamma{{i, j}}; }
  bool is_one() const { return e[0] == 0 && e[1] == 0; }
  Gamma inverse() const;
  Gamma operator*(const Gamma& o) const;
  friend auto operator<=>(const Gamma&, const Gamma&) = default;
};

enum class OrderClass { negative, one, positive };
enum class OrderKind { asymptotic, weighted };

/// Choice of Gamma and of the weight function on generators.
class OrderSpec {
 public:
  /// Gamma = <V, v> lexicographic with V dominant; t -> V, s_i -> v.
  static OrderSpec asymptotic();
  /// Gamma = <v>; t -> v^c, s_i -> v^d with c, d >= 1.
  static OrderSpec weighted(int c, int d);

  OrderKind kind() const { return kind_; }
  int dim() const { return kind_ == OrderKind::asymptotic ? 2 : 1; }
  int c() const { return c_; }
  int d() const { return d_; }
  Gamma weight(Generator g) const;
  /// v_w for an element with the given t-length and s-length.
  Gamma element_weight(int ell_t, int ell_s) const;
  OrderClass order_class(const Gamma& g) const;
  /// "asymptotic" or "weighted(c,d)".
  std::string name() const;
  nlohmann::json to_json() const;
  friend bool operator==(const OrderSpec&, const OrderSpec&) = default;

 private:
  OrderSpec(OrderKind kind, int c, int d) : kind_(kind), c_(c), d_(d) {}
  OrderKind kind_;
  int c_;
  int d_;
};

struct QPolynomial;

/// Finite Z-combination of elements of Gamma.  Terms are kept sorted in
/// increasing order with nonzero coefficients.  dim() == 0 marks an element
/// with no non-constant term, which combines with either rank.
class Laurent {
 public:
  using Term = std::pair<Gamma, Integer>;

  Laurent() = default;
  explicit Laurent(int dim) : dim_(dim) {}
  static Laurent constant(const Integer& c, int dim = 0);
  static Laurent monomial(int dim, const Gamma& g, const Integer& c = 1);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  Integer coefficient(const Gamma& g) const;
  /// Integer if the element is a constant.
  bool is_constant() const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend Laurent operator*(const Integer& k, const Laurent& a);
  Laurent times_monomial(const Gamma& g) const;
  /// a += b * c without materializing the product.
  void add_product(const Laurent& b, const Laurent& c, int sign = 1);

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

  /// Inverts every monomial.
  Laurent bar() const;
  /// Parts supported on Gamma_+, {1} and Gamma_-.
  struct Split;
  Split split(const OrderSpec& spec) const;
  bool in_negative_part(const OrderSpec& spec) const;

  /// V^i v^j -> v^(c i + d j); rank-1 input maps v^j -> v^(d j).
  Laurent specialize(int c, int d) const;
  /// Sum of coefficients.
  Integer value_at_one() const;
  /// Requires rank 2 input: succeeds iff every term is V^0 v^(2k), k >= 0.
  QPolynomial as_q_polynomial() const;

  /// Descending order, e.g. "V^2 v^-1 - 3 v + 1".
  std::string format() const;
  static Laurent parse(std::string_view text, int dim);
  nlohmann::json to_json() const;
  static Laurent from_json(const nlohmann::json& j, int dim);

 private:
  void adopt_dim(int other);
  void normalize();

  int dim_ = 0;
  std::vector<Term> terms_;
};

struct Laurent::Split {
  Laurent pos;
  Laurent one;
  Laurent neg;
};

struct QPolynomial {
  bool ok = false;
  std::vector<Integer> coefficients;  // index = degree in q = v^2
  std::vector<Gamma> offending;
  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

std::string format_gamma(const Gamma& g, int dim);

}  // namespace bcell
