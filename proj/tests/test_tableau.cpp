#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "bcell/coset.hpp"
#include "bcell/tableau.hpp"
#include "bcell/verify.hpp"
#include "oracle.hpp"

using namespace bcell;

namespace {

const SignedPermutation kPi = parse_window("-4,3,6,-1,7,-2,5");

// Class ids -> partition of element indices.
std::set<std::set<Index>> classes_of(const std::vector<int>& id) {
  std::map<int, std::set<Index>> by;
  for (Index x = 0; x < id.size(); ++x) by[id[x]].insert(x);
  std::set<std::set<Index>> out;
  for (auto& [k, v] : by) out.insert(std::move(v));
  return out;
}

std::set<std::set<Index>> rs_partition(const Group& g) {
  std::set<std::set<Index>> out;
  for (const auto& [record, members] : rs_cells(Rank(g.rank())).cells) {
    std::set<Index> s;
    for (const auto& w : members) s.insert(g.index_of(w));
    out.insert(std::move(s));
  }
  return out;
}

}  // namespace

TEST_CASE("tableau text form") {
  const auto t = parse_tableau("3,5,7;6");
  CHECK(t.shape() == Partition{3, 1});
  CHECK(t.is_standard());
  CHECK(format_tableau(t) == "3,5,7;6");
  CHECK(format_tableau(Tableau{}) == "-");
  CHECK(parse_tableau("-").empty());
  CHECK_FALSE(parse_tableau("2,1").is_standard());
  CHECK_FALSE(parse_tableau("1,2;3,4,5").is_standard());
  const auto b = parse_bitableau("3,5,7;6|1,2;4");
  CHECK(format_bitableau(b) == "3,5,7;6|1,2;4");
  CHECK(b.shape() == Bipartition{{3, 1}, {2, 1}});
  CHECK(format_bipartition(b.shape()) == "(3,1 | 2,1)");
}

TEST_CASE("partitions and conjugates") {
  CHECK(partitions(4) == std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate({}) == Partition{});
  CHECK(bipartitions(3).size() == 10);
  CHECK(bipartitions(2).size() == 5);
  for (const auto& p : partitions(6)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("RS of the seven-letter example") {
  const auto pair = rs_insert(kPi);
  CHECK(format_bitableau(pair.a) == "3,5,7;6|1,2;4");
  CHECK(format_bitableau(pair.b) == "2,3,5;7|1,6;4");
  CHECK(rs_inverse(pair) == kPi);
  CHECK(rs_insert(kPi.inverse()).a == pair.b);
  CHECK(transpose_pair(kPi));
}

TEST_CASE("RS of the identity and the longest element") {
  for (int n = 1; n <= 6; ++n) {
    Tableau row;
    for (int i = 1; i <= n; ++i) row.insert(i);
    const auto id = rs_insert(SignedPermutation::identity(n));
    CHECK(id.a == Bitableau{row, {}});
    CHECK(id.b == Bitableau{row, {}});
    CHECK(rs_inverse(id).is_identity());
    const auto w0 = rs_insert(longest_element(n));
    CHECK(w0.a == Bitableau{{}, row});
    CHECK(w0.b == Bitableau{{}, row});
  }
}

TEST_CASE("rs_inverse rejects bad input") {
  const auto pair = rs_insert(kPi);
  CHECK_THROWS_AS(rs_inverse(RSPair{pair.a, parse_bitableau("1,2,3,5;7|6;4")}), ValidationError);
  CHECK_THROWS_AS(rs_inverse(RSPair{parse_bitableau("3,5,7;6|1,2;1"), pair.b}), ValidationError);
  CHECK_THROWS_AS(rs_inverse(RSPair{parse_bitableau("5,3,7;6|1,2;4"), pair.b}), ValidationError);
}

TEST_CASE("RS is a shape-preserving bijection") {
  for (int n = 1; n <= 4; ++n) {
    const auto rep = verify_rs_bijection(Group{Rank(n)});
    CHECK_MESSAGE(rep.passed(), n);
  }
  for (const auto& w : enumerate(Rank(3))) {
    if (w * w == SignedPermutation::identity(3)) CHECK(rs_insert(w).a == rs_insert(w).b);
  }
}

TEST_CASE("standard bitableaux are counted by hook lengths") {
  for (int n = 1; n <= 5; ++n) {
    std::map<Bipartition, long long> count;
    for (const auto& b : standard_bitableaux(n)) {
      CHECK(b.is_n_standard(n));
      ++count[b.shape()];
    }
    CHECK(count.size() == bipartitions(n).size());
    for (const auto& [shape, k] : count) {
      const int m = size(shape.lambda);
      const long long binom = oracle::factorial(n) / oracle::factorial(m) / oracle::factorial(n - m);
      CHECK(k == binom * oracle::hook_count(shape.lambda) * oracle::hook_count(shape.mu));
    }
  }
}

TEST_CASE("RS cells: counts, sizes and t-length") {
  const long long expected[] = {0, 2, 6, 20, 76, 312};
  for (int n = 1; n <= 5; ++n) {
    const auto cells = rs_cells(Rank(n));
    CHECK(static_cast<long long>(cells.cells.size()) == oracle::involution_count(n));
    CHECK(static_cast<long long>(cells.cells.size()) == expected[n]);
    std::size_t total = 0;
    for (const auto& [record, members] : cells.cells) {
      total += members.size();
      const auto shape = record.shape();
      const int m = size(shape.lambda);
      const long long binom = oracle::factorial(n) / oracle::factorial(m) / oracle::factorial(n - m);
      CHECK(static_cast<long long>(members.size()) ==
            binom * oracle::hook_count(shape.lambda) * oracle::hook_count(shape.mu));
      for (const auto& w : members) CHECK(ell_t(w) == record.minus.size());
    }
    CHECK(total == static_cast<std::size_t>(oracle::factorial(n) << n));
  }
}

TEST_CASE("RS cells of W_3 match the golden table") {
  const Group g{Rank(3)};
  const auto golden = oracle::load_json("b3_rs_cells.json");
  const auto cells = rs_cells(Rank(3));
  CHECK(cells.cells.size() == 20);
  for (const auto& row : golden["cells"]) {
    const auto record = parse_bitableau(row["record"].get<std::string>());
    REQUIRE(cells.cells.count(record) == 1);
    std::set<SignedPermutation> want;
    for (const auto& w : row["words"]) want.insert(from_word(3, parse_word(3, w.get<std::string>())));
    const auto& got = cells.cells.at(record);
    CHECK(std::set<SignedPermutation>(got.begin(), got.end()) == want);
  }
  CHECK(cells.cells.at(parse_bitableau("1,2,3|-")).size() == 1);
  CHECK(cells.cells.at(parse_bitableau("-|1,2,3")).front() == longest_element(3));
}

TEST_CASE("admissible moves preserve the insertion bitableau") {
  for (int n = 1; n <= 4; ++n) {
    const Group g{Rank(n)};
    // union-find over moves
    std::vector<Index> parent(g.size());
    for (Index x = 0; x < g.size(); ++x) parent[x] = x;
    auto find = [&](Index x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (Index x = 0; x < g.size(); ++x) {
      const auto a = rs_insert(g.element(x)).a;
      for (const auto& y : admissible_moves(g.element(x))) {
        CHECK(rs_insert(y).a == a);
        parent[find(x)] = find(g.index_of(y));
      }
    }
    std::set<Index> roots;
    for (Index x = 0; x < g.size(); ++x) roots.insert(find(x));
    CHECK(static_cast<long long>(roots.size()) == oracle::involution_count(n));
  }
  // Case (c): adjacent entries of opposite sign may always be interchanged.
  const auto moves = admissible_moves(SignedPermutation::from_window(Rank(2), {-1, 2}));
  CHECK(std::find(moves.begin(), moves.end(), SignedPermutation::from_window(Rank(2), {2, -1})) != moves.end());
}

TEST_CASE("Knuth-type left classes are the RS cells") {
  const auto s2 = from_word(3, parse_word(3, "s2"));
  const auto s1s2 = from_word(3, parse_word(3, "s1 s2"));
  CHECK(knuth_left_relation(s2, s1s2));
  CHECK(knuth_left_relation(s2, s2));
  CHECK_FALSE(knuth_left_relation(s2, from_word(3, parse_word(3, "s1"))));
  for (int n = 1; n <= 3; ++n) {
    const Group g{Rank(n)};
    CHECK(classes_of(knuth_left_classes(g)) == rs_partition(g));
  }
}

TEST_CASE("classical RS") {
  const std::vector<int> id{1, 2, 3, 4};
  const auto [p, q] = classical_rs(id);
  CHECK(format_tableau(p) == "1,2,3,4");
  CHECK(format_tableau(q) == "1,2,3,4");
  CHECK_THROWS_AS(classical_rs(std::vector<int>{1, 1, 2}), ValidationError);
  for (const auto& w : enumerate(Rank(4))) {
    if (!in_symmetric_subgroup(w)) continue;
    const auto window = w.window();
    const auto [a, b] = classical_rs(window);
    const auto pair = rs_insert(w);
    CHECK(pair.a == Bitableau{a, {}});
    CHECK(pair.b == Bitableau{b, {}});
  }
}

TEST_CASE("decomposition classes are the RS cells") {
  auto check_rank = [](int n) {
    const Group g{Rank(n)};
    std::vector<DecompositionKey> keys;
    for (const auto& w : g.elements()) keys.push_back(decomposition_key(w));
    std::vector<int> id(g.size(), -1);
    int next = 0;
    for (Index x = 0; x < g.size(); ++x) {
      if (id[x] >= 0) continue;
      for (Index y = x; y < g.size(); ++y) {
        if (id[y] < 0 && keys[y] == keys[x]) id[y] = next;
      }
      ++next;
    }
    CHECK(classes_of(id) == rs_partition(g));
  };
  for (int n = 1; n <= 3; ++n) check_rank(n);
  const Group g{Rank(3)};
  for (Index x = 0; x < g.size(); ++x) {
    CHECK(equivalent_by_decomposition(g.element(x), g.element(x)));
    for (Index y = 0; y < g.size(); ++y) {
      const bool same = rs_insert(g.element(x)).b == rs_insert(g.element(y)).b;
      CHECK(equivalent_by_decomposition(g.element(x), g.element(y)) == same);
      if (g.ell_t(x) != g.ell_t(y)) CHECK_FALSE(equivalent_by_decomposition(g.element(x), g.element(y)));
    }
  }
}

TEST_CASE("decomposition classes are the RS cells at rank 4") {
  const Group g{Rank(4)};
  std::vector<DecompositionKey> keys;
  std::vector<Bitableau> records;
  for (const auto& w : g.elements()) {
    keys.push_back(decomposition_key(w));
    records.push_back(rs_insert(w).b);
  }
  std::size_t mismatches = 0;
  for (Index x = 0; x < g.size(); ++x) {
    for (Index y = x + 1; y < g.size(); ++y) mismatches += (keys[x] == keys[y]) != (records[x] == records[y]);
  }
  CHECK(mismatches == 0);
}
