#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>

#include "bcell/laurent.hpp"

using namespace bcell;

namespace {

const OrderSpec kAsym = OrderSpec::asymptotic();

Laurent P(const char* text, int dim = 2) { return Laurent::parse(text, dim); }

Laurent random_laurent(std::mt19937& rng, int dim) {
  std::uniform_int_distribution<int> exp(-3, 3);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> terms(0, 4);
  Laurent out(dim);
  for (int k = terms(rng); k > 0; --k) {
    const Gamma g = dim == 2 ? Gamma::Vv(exp(rng), exp(rng)) : Gamma::v(exp(rng));
    out += Laurent::monomial(dim, g, coeff(rng));
  }
  return out;
}

}  // namespace

TEST_CASE("order classes") {
  CHECK(kAsym.order_class(Gamma::Vv(1, -5)) == OrderClass::positive);
  CHECK(kAsym.order_class(Gamma::Vv(0, 0)) == OrderClass::one);
  CHECK(kAsym.order_class(Gamma::Vv(-1, 9)) == OrderClass::negative);
  CHECK(kAsym.order_class(Gamma::Vv(0, 2)) == OrderClass::positive);
  const auto w = OrderSpec::weighted(1, 2);
  CHECK(w.order_class(Gamma::v(3)) == OrderClass::positive);
  CHECK(w.order_class(Gamma::v(-3)) == OrderClass::negative);
  CHECK(w.weight(Generator::t()) == Gamma::v(1));
  CHECK(w.weight(Generator::s(2)) == Gamma::v(2));
  CHECK(kAsym.weight(Generator::t()) == Gamma::Vv(1, 0));
  CHECK(kAsym.weight(Generator::s(1)) == Gamma::Vv(0, 1));
  CHECK(w.name() == "weighted(1,2)");
  CHECK_THROWS_AS(OrderSpec::weighted(0, 1), ValidationError);
}

TEST_CASE("Gamma is totally ordered and compatible with multiplication") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> exp(-6, 6);
  for (int i = 0; i < 2000; ++i) {
    const Gamma g = Gamma::Vv(exp(rng), exp(rng));
    const Gamma h = Gamma::Vv(exp(rng), exp(rng));
    const int positive = kAsym.order_class(g) == OrderClass::positive;
    const int one = kAsym.order_class(g) == OrderClass::one;
    const int inverse_positive = kAsym.order_class(g.inverse()) == OrderClass::positive;
    CHECK(positive + one + inverse_positive == 1);
    if (positive && kAsym.order_class(h) == OrderClass::positive) {
      CHECK(kAsym.order_class(g * h) == OrderClass::positive);
    }
    if (positive) CHECK(kAsym.order_class(g.inverse()) == OrderClass::negative);
  }
}

TEST_CASE("arithmetic") {
  const Laurent q = P("V + V^-1");
  CHECK(q * q == P("V^2 + 2 + V^-2"));
  CHECK(q * Laurent::constant(1) == q);
  CHECK(P("V") - P("V") == Laurent(2));
  CHECK((P("V").times_monomial(Gamma::Vv(-1, 2))) == P("v^2"));
  CHECK(Integer(3) * P("v^-1") == P("3 v^-1"));
  CHECK(P("2 V v^-1").coefficient(Gamma::Vv(1, -1)) == 2);
  CHECK_THROWS_AS(P("v", 1) + P("V v", 2), DimensionMismatch);
  CHECK(Laurent::constant(5) + P("v", 1) == P("v + 5", 1));
  CHECK(Laurent::constant(5) + P("v", 2) == P("v + 5", 2));
}

TEST_CASE("coefficients are exact beyond 64 bits") {
  Laurent x = Laurent::constant(Integer(1) << 62, 1);
  const Laurent y = x * x * x;
  CHECK(y.coefficient(Gamma::v(0)) == Integer(1) << 186);
}

TEST_CASE("exponent overflow is an error") {
  const auto big = std::numeric_limits<std::int32_t>::max();
  const Laurent x = Laurent::monomial(1, Gamma::v(big));
  CHECK_THROWS_AS(x * x, OverflowError);
  CHECK_THROWS_AS(x.times_monomial(Gamma::v(1)), OverflowError);
  CHECK_THROWS_AS(Laurent::monomial(1, Gamma::v(std::numeric_limits<std::int32_t>::min())).bar(), OverflowError);
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937 rng(11);
  for (int dim : {1, 2}) {
    for (int i = 0; i < 300; ++i) {
      const Laurent a = random_laurent(rng, dim);
      const Laurent b = random_laurent(rng, dim);
      const Laurent c = random_laurent(rng, dim);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == Laurent(dim));
      Laurent acc = a;
      acc.add_product(b, c, -1);
      CHECK(acc == a - b * c);
    }
  }
}

TEST_CASE("bar involution") {
  CHECK(Laurent::constant(4).bar() == Laurent::constant(4));
  CHECK(P("V + 3 v^-1").bar() == P("V^-1 + 3 v"));
  std::mt19937 rng(3);
  for (int i = 0; i < 300; ++i) {
    const Laurent a = random_laurent(rng, 2);
    const Laurent b = random_laurent(rng, 2);
    CHECK(a.bar().bar() == a);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK((a + b).bar() == a.bar() + b.bar());
    const auto s = a.split(kAsym);
    CHECK(s.pos.bar().in_negative_part(kAsym));
  }
}

TEST_CASE("split into positive, constant and negative parts") {
  const Laurent neg = P("V^-1 v^4 - v^-2");
  const auto s0 = neg.split(kAsym);
  CHECK(s0.pos.is_zero());
  CHECK(s0.one.is_zero());
  CHECK(s0.neg == neg);
  const auto s = P("V + 2 + v^-1").split(kAsym);
  CHECK(s.pos == P("V"));
  CHECK(s.one == Laurent::constant(2));
  CHECK(s.neg == P("v^-1"));
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    const Laurent a = random_laurent(rng, 2);
    const Laurent b = random_laurent(rng, 2);
    const auto sa = a.split(kAsym);
    const auto sb = b.split(kAsym);
    const auto sab = (a + b).split(kAsym);
    CHECK(sa.pos + sa.one + sa.neg == a);
    CHECK(sab.pos == sa.pos + sb.pos);
    CHECK(sab.one == sa.one + sb.one);
    CHECK(sab.neg == sa.neg + sb.neg);
  }
}

TEST_CASE("q-polynomial conversion") {
  const auto ok = P("1 + 3 v^2").as_q_polynomial();
  CHECK(ok.ok);
  CHECK(ok.coefficients == std::vector<Integer>{1, 3});
  const auto odd = P("v").as_q_polynomial();
  CHECK_FALSE(odd.ok);
  CHECK(odd.offending == std::vector<Gamma>{Gamma::Vv(0, 1)});
  CHECK_FALSE(P("V^-1").as_q_polynomial().ok);
  CHECK_FALSE(P("v^-2").as_q_polynomial().ok);
}

TEST_CASE("specialization") {
  CHECK(P("V^2 v^-1 - 3 v").specialize(3, 2) == P("v^4 - 3 v^2", 1));
  CHECK(P("V^2 v^-1 - 3 v + 1").value_at_one() == -1);
}

TEST_CASE("text and JSON round trips") {
  CHECK(P("V^-1 v^-2").format() == "V^-1 v^-2");
  CHECK(P("-2 v^-3", 1).format() == "-2 v^-3");
  CHECK(Laurent(2).format() == "0");
  CHECK(P("q^2", 1) == P("v^4", 1));
  CHECK(P("V^{2}*v", 2) == P("V^2 v", 2));
  CHECK_THROWS_AS(P("V^", 2), ValidationError);
  CHECK_THROWS_AS(P("V", 1), ValidationError);
  std::mt19937 rng(13);
  for (int dim : {1, 2}) {
    for (int i = 0; i < 300; ++i) {
      const Laurent a = random_laurent(rng, dim);
      CHECK(Laurent::parse(a.format(), dim) == a);
      CHECK(Laurent::from_json(a.to_json(), dim) == a);
    }
  }
}
