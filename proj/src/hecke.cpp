#include "bcell/hecke.hpp"

#include <algorithm>

namespace bcell {

HeckeElement::HeckeElement(std::shared_ptr<const Group> group, OrderSpec spec)
    : group_(std::move(group)), spec_(spec), coeffs_(group_->size(), Laurent(spec.dim())) {}

HeckeElement HeckeElement::basis(std::shared_ptr<const Group> group, OrderSpec spec, Index w) {
  HeckeElement h(std::move(group), spec);
  h.coeffs_[w] = Laurent::constant(1, spec.dim());
  return h;
}

bool HeckeElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Laurent& a) { return a.is_zero(); });
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!o.coeffs_[i].is_zero()) coeffs_[i] += o.coeffs_[i];
  }
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!o.coeffs_[i].is_zero()) coeffs_[i] -= o.coeffs_[i];
  }
  return *this;
}

HeckeElement HeckeElement::scaled(const Laurent& a) const {
  HeckeElement out(group_, spec_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) out.coeffs_[i] = coeffs_[i] * a;
  }
  return out;
}

namespace {

// v_s - v_s^{-1}
Laurent quadratic_term(const OrderSpec& spec, Generator s) {
  const Gamma g = spec.weight(s);
  return Laurent::monomial(spec.dim(), g) - Laurent::monomial(spec.dim(), g.inverse());
}

}  // namespace

HeckeElement HeckeElement::left_mul_t(Generator s) const {
  HeckeElement out(group_, spec_);
  const Laurent q = quadratic_term(spec_, s);
  for (Index w = 0; w < coeffs_.size(); ++w) {
    if (coeffs_[w].is_zero()) continue;
    const Index sw = group_->left_mul(s, w);
    out.coeffs_[sw] += coeffs_[w];
    if (group_->length(sw) < group_->length(w)) out.coeffs_[w] += coeffs_[w] * q;
  }
  return out;
}

HeckeElement HeckeElement::right_mul_t(Generator s) const {
  HeckeElement out(group_, spec_);
  const Laurent q = quadratic_term(spec_, s);
  for (Index w = 0; w < coeffs_.size(); ++w) {
    if (coeffs_[w].is_zero()) continue;
    const Index ws = group_->right_mul(s, w);
    out.coeffs_[ws] += coeffs_[w];
    if (group_->length(ws) < group_->length(w)) out.coeffs_[w] += coeffs_[w] * q;
  }
  return out;
}

HeckeElement HeckeElement::right_mul_t_inverse(Generator s) const {
  HeckeElement out = right_mul_t(s);
  out -= scaled(quadratic_term(spec_, s));
  return out;
}

HeckeElement HeckeElement::operator*(const HeckeElement& o) const {
  HeckeElement out(group_, spec_);
  for (Index w = 0; w < o.coeffs_.size(); ++w) {
    if (o.coeffs_[w].is_zero()) continue;
    HeckeElement partial = *this;
    for (Generator s : reduced_word(group_->element(w))) partial = partial.right_mul_t(s);
    out += partial.scaled(o.coeffs_[w]);
  }
  return out;
}

HeckeElement bar_of_basis(std::shared_ptr<const Group> group, const OrderSpec& spec, Index w) {
  const auto word = reduced_word(group->element(w));
  HeckeElement h = HeckeElement::basis(std::move(group), spec, 0);
  for (Generator s : word) h = h.right_mul_t_inverse(s);
  return h;
}

HeckeElement HeckeElement::bar() const {
  HeckeElement out(group_, spec_);
  for (Index w = 0; w < coeffs_.size(); ++w) {
    if (coeffs_[w].is_zero()) continue;
    out += bar_of_basis(group_, spec_, w).scaled(coeffs_[w].bar());
  }
  return out;
}

}  // namespace bcell
