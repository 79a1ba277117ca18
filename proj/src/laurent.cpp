#include "bcell/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace bcell {

namespace {

std::int32_t checked_add(std::int64_t a, std::int64_t b) {
  const std::int64_t r = a + b;
  if (r > std::numeric_limits<std::int32_t>::max() || r < std::numeric_limits<std::int32_t>::min()) {
    throw OverflowError("exponent overflow");
  }
  return static_cast<std::int32_t>(r);
}

std::int32_t checked_neg(std::int32_t a) {
  if (a == std::numeric_limits<std::int32_t>::min()) throw OverflowError("exponent overflow");
  return -a;
}

std::int32_t checked_mul(std::int64_t a, std::int64_t b) {
  const std::int64_t r = a * b;
  if (r > std::numeric_limits<std::int32_t>::max() || r < std::numeric_limits<std::int32_t>::min()) {
    throw OverflowError("exponent overflow");
  }
  return static_cast<std::int32_t>(r);
}

}  // namespace

Gamma Gamma::inverse() const { return Gamma{{checked_neg(e[0]), checked_neg(e[1])}}; }

Gamma Gamma::operator*(const Gamma& o) const {
  return Gamma{{checked_add(e[0], o.e[0]), checked_add(e[1], o.e[1])}};
}

OrderSpec OrderSpec::asymptotic() { return OrderSpec(OrderKind::asymptotic, 0, 0); }

OrderSpec OrderSpec::weighted(int c, int d) {
  if (c < 1 || d < 1) {
    throw ValidationError("weighted order needs c >= 1 and d >= 1, got (" + std::to_string(c) + "," +
                          std::to_string(d) + ")");
  }
  return OrderSpec(OrderKind::weighted, c, d);
}

Gamma OrderSpec::weight(Generator g) const {
  if (kind_ == OrderKind::asymptotic) return g.is_t() ? Gamma::Vv(1, 0) : Gamma::Vv(0, 1);
  return Gamma::v(g.is_t() ? c_ : d_);
}

Gamma OrderSpec::element_weight(int ell_t, int ell_s) const {
  if (kind_ == OrderKind::asymptotic) return Gamma::Vv(ell_t, ell_s);
  return Gamma::v(checked_add(std::int64_t{c_} * ell_t, std::int64_t{d_} * ell_s));
}

OrderClass OrderSpec::order_class(const Gamma& g) const {
  if (kind_ == OrderKind::weighted && g.e[1] != 0) {
    throw DimensionMismatch("rank-2 exponent under a weighted order");
  }
  if (g.is_one()) return OrderClass::one;
  return g > Gamma{} ? OrderClass::positive : OrderClass::negative;
}

std::string OrderSpec::name() const {
  if (kind_ == OrderKind::asymptotic) return "asymptotic";
  return "weighted(" + std::to_string(c_) + "," + std::to_string(d_) + ")";
}

nlohmann::json OrderSpec::to_json() const {
  if (kind_ == OrderKind::asymptotic) return {{"kind", "asymptotic"}};
  return {{"kind", "weighted"}, {"c", c_}, {"d", d_}};
}

Laurent Laurent::constant(const Integer& c, int dim) {
  Laurent out(dim);
  if (c != 0) out.terms_.emplace_back(Gamma{}, c);
  return out;
}

Laurent Laurent::monomial(int dim, const Gamma& g, const Integer& c) {
  if (dim == 1 && g.e[1] != 0) throw DimensionMismatch("rank-1 monomial with a V exponent");
  Laurent out(g.is_one() ? 0 : dim);
  if (c != 0) out.terms_.emplace_back(g, c);
  return out;
}

Integer Laurent::coefficient(const Gamma& g) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), g,
                             [](const Term& t, const Gamma& x) { return t.first < x; });
  if (it != terms_.end() && it->first == g) return it->second;
  return 0;
}

bool Laurent::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

void Laurent::adopt_dim(int other) {
  if (other == 0) return;
  if (dim_ == 0) {
    dim_ = other;
  } else if (dim_ != other) {
    throw DimensionMismatch("combining rank-" + std::to_string(dim_) + " and rank-" + std::to_string(other) +
                            " elements");
  }
}

void Laurent::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first) {
      merged.back().second += t.second;
    } else {
      if (!merged.empty() && merged.back().second == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().second == 0) merged.pop_back();
  terms_ = std::move(merged);
}

Laurent Laurent::operator-() const {
  Laurent out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  adopt_dim(o.dim_);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Integer c = a->second + b->second;
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent out(a.dim_);
  out.adopt_dim(b.dim_);
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ga, ca] : a.terms_) {
    for (const auto& [gb, cb] : b.terms_) out.terms_.emplace_back(ga * gb, ca * cb);
  }
  out.normalize();
  return out;
}

Laurent operator*(const Integer& k, const Laurent& a) {
  if (k == 0) return Laurent(a.dim_);
  Laurent out = a;
  for (auto& t : out.terms_) t.second *= k;
  return out;
}

Laurent Laurent::times_monomial(const Gamma& g) const {
  Laurent out = *this;
  if (g.e[1] != 0) out.adopt_dim(2);
  if (out.dim_ == 0 && !g.is_one() && !terms_.empty()) {
    throw DimensionMismatch("monomial shift of an element with unknown rank");
  }
  for (auto& t : out.terms_) t.first = t.first * g;
  return out;
}

void Laurent::add_product(const Laurent& b, const Laurent& c, int sign) {
  if (b.is_zero() || c.is_zero()) return;
  Laurent prod = b * c;
  if (sign < 0) {
    *this -= prod;
  } else {
    *this += prod;
  }
}

Laurent Laurent::bar() const {
  Laurent out(dim_);
  out.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) out.terms_.emplace_back(it->first.inverse(), it->second);
  return out;
}

Laurent::Split Laurent::split(const OrderSpec& spec) const {
  if (dim_ != 0 && dim_ != spec.dim()) throw DimensionMismatch("split under an order of another rank");
  Split s{Laurent(dim_), Laurent(dim_), Laurent(dim_)};
  for (const auto& t : terms_) {
    switch (spec.order_class(t.first)) {
      case OrderClass::positive:
        s.pos.terms_.push_back(t);
        break;
      case OrderClass::one:
        s.one.terms_.push_back(t);
        break;
      case OrderClass::negative:
        s.neg.terms_.push_back(t);
        break;
    }
  }
  return s;
}

bool Laurent::in_negative_part(const OrderSpec& spec) const {
  if (dim_ != 0 && dim_ != spec.dim()) throw DimensionMismatch("order test under an order of another rank");
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return spec.order_class(t.first) == OrderClass::negative; });
}

Laurent Laurent::specialize(int c, int d) const {
  Laurent out(terms_.empty() ? 0 : 1);
  for (const auto& [g, k] : terms_) {
    const std::int32_t e = dim_ == 2 ? checked_add(checked_mul(c, g.e[0]), checked_mul(d, g.e[1]))
                                     : checked_mul(d, g.e[0]);
    out.terms_.emplace_back(Gamma::v(e), k);
  }
  out.normalize();
  if (out.is_constant()) out.dim_ = 0;
  return out;
}

Integer Laurent::value_at_one() const {
  Integer s = 0;
  for (const auto& t : terms_) s += t.second;
  return s;
}

QPolynomial Laurent::as_q_polynomial() const {
  if (dim_ == 1) throw DimensionMismatch("q-form requires the rank-2 parameter group");
  QPolynomial q;
  for (const auto& [g, k] : terms_) {
    if (g.e[0] != 0 || g.e[1] < 0 || g.e[1] % 2 != 0) q.offending.push_back(g);
  }
  if (!q.offending.empty()) return q;
  q.ok = true;
  for (const auto& [g, k] : terms_) {
    const auto deg = static_cast<std::size_t>(g.e[1] / 2);
    if (q.coefficients.size() <= deg) q.coefficients.resize(deg + 1, 0);
    q.coefficients[deg] = k;
  }
  return q;
}

std::string format_gamma(const Gamma& g, int dim) {
  auto factor = [](const char* name, std::int32_t e) -> std::string {
    if (e == 0) return "";
    if (e == 1) return name;
    return std::string(name) + "^" + std::to_string(e);
  };
  std::string out;
  if (dim == 2) {
    out = factor("V", g.e[0]);
    const auto v = factor("v", g.e[1]);
    if (!out.empty() && !v.empty()) out += ' ';
    out += v;
  } else {
    out = factor("v", g.e[0]);
  }
  return out.empty() ? "1" : out;
}

std::string Laurent::format() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [g, k] = *it;
    const bool negative = k < 0;
    const Integer mag = negative ? Integer(-k) : k;
    if (it == terms_.rbegin()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (g.is_one()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + " ";
      out += format_gamma(g, dim_);
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, int dim) : s_(text), dim_(dim) {}

  Laurent run() {
    Laurent out(dim_);
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      out += term(sign);
      skip();
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ValidationError("polynomial position " + std::to_string(pos_ + 1) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '*')) ++pos_;
  }
  bool at_digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

  Integer integer() {
    const std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  std::int32_t exponent() {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != '^') return 1;
    ++pos_;
    bool braces = pos_ < s_.size() && s_[pos_] == '{';
    if (braces) ++pos_;
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    if (!at_digit()) fail("expected an exponent");
    std::int32_t value = 0;
    const char* begin = s_.data() + pos_;
    auto [ptr, ec] = std::from_chars(begin, s_.data() + s_.size(), value);
    if (ec != std::errc()) fail("exponent out of range");
    pos_ += static_cast<std::size_t>(ptr - begin);
    if (braces) {
      if (pos_ >= s_.size() || s_[pos_] != '}') fail("expected '}'");
      ++pos_;
    }
    return neg ? -value : value;
  }

  Laurent term(int sign) {
    Integer coeff = 1;
    bool have_any = false;
    if (at_digit()) {
      coeff = integer();
      have_any = true;
    }
    Gamma g{};
    for (;;) {
      skip();
      if (pos_ >= s_.size()) break;
      const char c = s_[pos_];
      if (c != 'V' && c != 'v' && c != 'q') break;
      ++pos_;
      const std::int32_t e = exponent();
      have_any = true;
      if (c == 'V') {
        if (dim_ != 2) fail("V is not available for a rank-1 parameter group");
        g = g * Gamma::Vv(e, 0);
      } else {
        const std::int32_t ve = c == 'q' ? checked_mul(2, e) : e;
        g = g * (dim_ == 2 ? Gamma::Vv(0, ve) : Gamma::v(ve));
      }
    }
    if (!have_any) fail("expected a coefficient or a monomial");
    return Laurent::monomial(dim_, g, sign * coeff);
  }

  std::string_view s_;
  int dim_;
  std::size_t pos_ = 0;
};

}  // namespace

Laurent Laurent::parse(std::string_view text, int dim) {
  if (dim != 1 && dim != 2) throw ValidationError("polynomial rank must be 1 or 2");
  Laurent out = PolyParser(text, dim).run();
  if (out.is_constant()) out.dim_ = 0;
  return out;
}

nlohmann::json Laurent::to_json() const {
  auto out = nlohmann::json::array();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    nlohmann::json term;
    if (dim_ == 2) {
      term["V"] = it->first.e[0];
      term["v"] = it->first.e[1];
    } else {
      term["v"] = it->first.e[0];
    }
    const auto& k = it->second;
    if (k >= std::numeric_limits<std::int64_t>::min() && k <= std::numeric_limits<std::int64_t>::max()) {
      term["c"] = static_cast<std::int64_t>(k);
    } else {
      term["c"] = k.str();
    }
    out.push_back(std::move(term));
  }
  return out;
}

Laurent Laurent::from_json(const nlohmann::json& j, int dim) {
  if (!j.is_array()) throw ValidationError("polynomial JSON must be an array");
  Laurent out(dim);
  for (const auto& term : j) {
    const std::int32_t big = term.value("V", 0);
    const std::int32_t small = term.value("v", 0);
    if (dim == 1 && big != 0) throw DimensionMismatch("V exponent in a rank-1 polynomial");
    const auto& c = term.at("c");
    const Integer k = c.is_string() ? Integer(c.get<std::string>()) : Integer(c.get<std::int64_t>());
    out += monomial(dim, dim == 2 ? Gamma::Vv(big, small) : Gamma::v(small), k);
  }
  if (out.is_constant()) out.dim_ = 0;
  return out;
}

}  // namespace bcell
