#pragma once

// Dense elements of the Iwahori-Hecke algebra of W_n in the standard basis T_w,
// with T_s^2 = 1 + (v_s - v_s^{-1}) T_s.  Used as a direct reference for the
// KL tables; cost grows with |W_n|^2 so it is meant for small ranks.

#include <memory>
#include <vector>

#include "bcell/group.hpp"
#include "bcell/laurent.hpp"

namespace bcell {

class HeckeElement {
 public:
  HeckeElement(std::shared_ptr<const Group> group, OrderSpec spec);
  static HeckeElement basis(std::shared_ptr<const Group> group, OrderSpec spec, Index w);

  const Group& group() const { return *group_; }
  const OrderSpec& spec() const { return spec_; }
  const Laurent& operator[](Index w) const { return coeffs_[w]; }
  Laurent& operator[](Index w) { return coeffs_[w]; }
  bool is_zero() const;

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  HeckeElement scaled(const Laurent& a) const;

  /// T_s * this and this * T_s.
  HeckeElement left_mul_t(Generator s) const;
  HeckeElement right_mul_t(Generator s) const;
  /// this * T_s^{-1}, with T_s^{-1} = T_s + (v_s^{-1} - v_s).
  HeckeElement right_mul_t_inverse(Generator s) const;
  HeckeElement operator*(const HeckeElement& o) const;

  /// sum a_w T_w -> sum bar(a_w) T_{w^{-1}}^{-1}, by direct inversion.
  HeckeElement bar() const;

  friend bool operator==(const HeckeElement& a, const HeckeElement& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::shared_ptr<const Group> group_;
  OrderSpec spec_;
  std::vector<Laurent> coeffs_;
};

/// bar(T_w) = T_{w^{-1}}^{-1} expanded in the T-basis; its coordinates are R_{y,w}.
HeckeElement bar_of_basis(std::shared_ptr<const Group> group, const OrderSpec& spec, Index w);

}  // namespace bcell
