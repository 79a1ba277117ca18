#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bcell/coset.hpp"
#include "bcell/group.hpp"
#include "bcell/verify.hpp"
#include "oracle.hpp"

using namespace bcell;

namespace {

SignedPermutation W(int n, std::initializer_list<int> w) { return SignedPermutation::from_window(Rank(n), w); }
SignedPermutation word(int n, const char* text) {
  const auto gens = parse_word(n, text);
  return from_word(n, gens);
}

}  // namespace

TEST_CASE("window validation names the offending position") {
  CHECK(W(3, {1, 2, 3}).is_identity());
  CHECK(W(3, {-1, -2, -3}) == longest_element(3));
  CHECK_THROWS_AS(W(3, {1, 1, 3}), ValidationError);
  CHECK_THROWS_AS(W(3, {1, 0, 3}), ValidationError);
  CHECK_THROWS_AS(W(3, {1, 2, 4}), ValidationError);
  try {
    parse_window(Rank(3), "1,-1,3");
    FAIL("accepted a repeated absolute value");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_window(Rank(3), "1,x,3"), ValidationError);
  CHECK_THROWS_AS(parse_window(Rank(3), "1,2"), ValidationError);
  const auto pi = parse_window("-4,3,6,-1,7,-2,5");
  CHECK(pi.rank() == 7);
  CHECK(format_window(pi) == "-4,3,6,-1,7,-2,5");
}

TEST_CASE("composition acts right to left") {
  const auto t = generator_element(3, Generator::t());
  CHECK((t * t).is_identity());
  for (const auto& w : enumerate(Rank(3))) {
    CHECK(SignedPermutation::identity(3) * w == w);
    CHECK(inverse(w) * w == SignedPermutation::identity(3));
  }
  for (int i = 1; i < 4; ++i) {
    const auto s = generator_element(4, Generator::s(i));
    CHECK(s * t_element(4, i) * s == t_element(4, i + 1));
  }
  const auto x = W(3, {2, -3, 1});
  const auto y = W(3, {-1, 3, 2});
  const auto xy = x * y;
  for (int i = 1; i <= 3; ++i) CHECK(xy(i) == x(y(i)));
  CHECK(apply_generator(Generator::s(1), x, Side::left) == generator_element(3, Generator::s(1)) * x);
  CHECK(apply_generator(Generator::s(1), x, Side::right) == x * generator_element(3, Generator::s(1)));
  CHECK_THROWS_AS(multiply(SignedPermutation::identity(2), SignedPermutation::identity(3)), RankMismatch);
  CHECK_THROWS_AS(bruhat_leq(SignedPermutation::identity(2), SignedPermutation::identity(3)), RankMismatch);
}

TEST_CASE("lengths of distinguished elements") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(length(longest_element(n)) == LengthTriple{n * n, n, n * n - n});
    for (int i = 1; i <= n; ++i) CHECK(length(t_element(n, i)) == LengthTriple{2 * i - 1, 1, 2 * (i - 1)});
    CHECK(length(SignedPermutation::identity(n)) == LengthTriple{0, 0, 0});
  }
}

TEST_CASE("length agrees with Cayley graph distance") {
  for (int n = 1; n <= 4; ++n) {
    const auto dist = oracle::cayley_lengths(n);
    CHECK(dist.size() == static_cast<std::size_t>(oracle::factorial(n) << n));
    for (const auto& [w, d] : dist) {
      CHECK(ell(w) == d);
      CHECK(static_cast<int>(reduced_word(w).size()) == d);
    }
  }
}

TEST_CASE("length properties over W_4") {
  const auto elements = enumerate(Rank(4));
  for (const auto& w : elements) {
    CHECK(length(w) == length(w.inverse()));
    CHECK(ell_t(w) <= 4);
    const auto rw = reduced_word(w);
    CHECK(from_word(4, rw) == w);
    int ts = 0;
    for (auto g : rw) ts += g.is_t();
    CHECK(ts == ell_t(w));
  }
  for (std::size_t i = 0; i < elements.size(); i += 7) {
    for (std::size_t j = 0; j < elements.size(); j += 5) {
      const auto& x = elements[i];
      const auto& y = elements[j];
      if (ell(x * y) == ell(x) + ell(y)) CHECK(ell_t(x * y) == ell_t(x) + ell_t(y));
    }
  }
}

TEST_CASE("descent sets") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(descent_left(SignedPermutation::identity(n)) == 0);
    CHECK(descent_right(SignedPermutation::identity(n)) == 0);
    const GeneratorSet all = all_generators(n);
    CHECK(descent_left(longest_element(n)) == all);
    CHECK(descent_right(longest_element(n)) == all);
  }
  for (const auto& w : enumerate(Rank(3))) {
    for (auto s : generators(3)) {
      const auto sw = generator_element(3, s) * w;
      const auto ws = w * generator_element(3, s);
      CHECK(contains(descent_left(w), s) == (ell(sw) < ell(w)));
      CHECK(contains(descent_right(w), s) == (ell(ws) < ell(w)));
    }
    const auto ext = descent_extended_right(w);
    for (int i = 1; i <= 3; ++i) {
      CHECK(((ext.transpositions >> i & 1U) != 0) == (w(i) < 0));
      CHECK(((ext.transpositions >> i & 1U) != 0) == (ell(w * t_element(3, i)) < ell(w)));
      const auto left = descent_extended_left(w);
      CHECK(((left.transpositions >> i & 1U) != 0) == (ell(t_element(3, i) * w) < ell(w)));
    }
    const int p = preferred_left_descent(w);
    if (w.is_identity()) {
      CHECK(p == -1);
    } else {
      const GeneratorSet d = descent_left(w);
      CHECK(contains(d, Generator::s(p)));
      CHECK((d & ((GeneratorSet{1} << p) - 1)) == 0);
    }
  }
}

TEST_CASE("Bruhat order against the subword oracle") {
  CHECK(bruhat_leq(W(2, {-1, 2}), word(2, "s1 t s1")));
  CHECK_FALSE(bruhat_leq(W(2, {2, 1}), W(2, {-1, 2})));
  for (int n = 1; n <= 3; ++n) {
    const Group g{Rank(n)};
    const auto below = oracle::subword_bruhat(g);
    for (Index y = 0; y < g.size(); ++y) {
      CHECK(g.bruhat_leq(g.identity(), y));
      for (Index x = 0; x < g.size(); ++x) {
        const bool expected = below[y].count(x) != 0;
        CHECK(g.bruhat_leq(x, y) == expected);
        CHECK(bruhat_leq(g.element(x), g.element(y)) == expected);
      }
      const auto interval = g.bruhat_interval_below(y);
      CHECK(std::set<Index>(interval.begin(), interval.end()) == below[y]);
    }
  }
}

TEST_CASE("enumeration") {
  CHECK(enumerate(Rank(1)).size() == 2);
  CHECK(enumerate(Rank(2)).size() == 8);
  CHECK(enumerate(Rank(3)).size() == 48);
  CHECK(enumerate(Rank(4)).size() == 384);
  CHECK_THROWS_AS(enumerate(Rank(kMaxEnumerateRank + 1)), Error);
  const auto e = enumerate(Rank(3));
  CHECK(std::set<SignedPermutation>(e.begin(), e.end()).size() == e.size());
  for (std::size_t i = 1; i < e.size(); ++i) CHECK(ell(e[i - 1]) <= ell(e[i]));
  const Group g{Rank(3)};
  CHECK(g.elements() == e);
  for (Index x = 0; x < g.size(); ++x) {
    CHECK(g.index_of(g.element(x)) == x);
    CHECK(g.element(g.inverse(x)) == g.element(x).inverse());
    for (auto s : generators(3)) {
      CHECK(g.element(g.left_mul(s, x)) == generator_element(3, s) * g.element(x));
      CHECK(g.element(g.right_mul(s, x)) == g.element(x) * generator_element(3, s));
    }
  }
  CHECK(g.element(g.longest()) == longest_element(3));
}

TEST_CASE("coset representatives") {
  CHECK(r_element(2, 1) == generator_element(2, Generator::t()));
  CHECK(r_element(2, 2) == W(2, {-2, 1}));
  CHECK(r_element(2, 2).inverse() == W(2, {2, -1}));
  for (int n = 1; n <= 5; ++n) {
    for (int i = 1; i <= n; ++i) {
      const auto ri = r_element(n, i).inverse();
      for (int j = 1; j <= n; ++j) CHECK(ri(j) == (j < i ? j + 1 : j == i ? -1 : j));
    }
    for (int l = 0; l <= n; ++l) {
      const auto al = a_element(n, l);
      CHECK((al * al).is_identity());
      const auto xs = coset_reps_X(Rank(n), l);
      CHECK(static_cast<long long>(xs.size()) == oracle::factorial(n) / oracle::factorial(l) / oracle::factorial(n - l));
      for (const auto& x : xs) {
        CHECK(ell_t(x) == l);
        for (int i = 1; i < n; ++i) CHECK(ell(x * generator_element(n, Generator::s(i))) > ell(x));
      }
      CHECK(coset_reps_Y(Rank(n), l).size() == xs.size());
    }
    CHECK(coset_reps_X(Rank(n), 0) == std::vector{SignedPermutation::identity(n)});
  }
  // l(r_{i_1} ... r_{i_l}) = i_1 + ... + i_l
  CHECK(ell(r_element(4, 1) * r_element(4, 3) * r_element(4, 4)) == 8);
  CHECK_THROWS_AS(r_element(3, 4), ValidationError);
  CHECK_THROWS_AS(coset_reps_X(Rank(3), 4), ValidationError);
}

TEST_CASE("factorization through Young subgroups") {
  const auto sts = word(2, "s1 t s1");
  const auto d = decompose(sts);
  CHECK(d.l == 1);
  CHECK(d.a == generator_element(2, Generator::s(1)));
  CHECK(d.sigma.is_identity());
  CHECK(d.b == generator_element(2, Generator::s(1)));

  for (int n = 1; n <= 4; ++n) {
    const auto dn = decompose(longest_element(n));
    CHECK(dn.a.is_identity());
    CHECK(dn.l == n);
    CHECK(dn.sigma == sigma_longest(n, n));
    CHECK(dn.b.is_identity());
  }
  for (const auto& w : enumerate(Rank(3))) {
    if (!in_symmetric_subgroup(w)) continue;
    const auto dw = decompose(w);
    CHECK(dw.a.is_identity());
    CHECK(dw.l == 0);
    CHECK(dw.sigma == w);
    CHECK(dw.b.is_identity());
  }
}

TEST_CASE("coset structure and interval transport") {
  for (int n = 1; n <= 5; ++n) {
    const Group g{Rank(n)};
    const auto rep = verify_coset_structure(g);
    CHECK_MESSAGE(rep.passed(), n);
    CHECK(rep.checks > 0);
  }
  for (int n = 1; n <= 3; ++n) {
    const auto rep = verify_coset_intervals(Group{Rank(n)});
    CHECK_MESSAGE(rep.passed(), n);
  }
}
