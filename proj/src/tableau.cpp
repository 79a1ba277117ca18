#include "bcell/tableau.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>

#include "bcell/coset.hpp"

namespace bcell {

int size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition conjugate(const Partition& p) {
  Partition out;
  if (p.empty()) return out;
  for (int c = 0; c < p.front(); ++c) {
    int len = 0;
    for (int part : p) len += part > c ? 1 : 0;
    out.push_back(len);
  }
  return out;
}

namespace {

void partitions_into(int remaining, int max_part, Partition& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_into(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int m) {
  std::vector<Partition> out;
  Partition prefix;
  partitions_into(m, m, prefix, out);
  return out;
}

std::string format_partition(const Partition& p) {
  if (p.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

std::vector<Bipartition> bipartitions(int n) {
  std::vector<Bipartition> out;
  for (int k = 0; k <= n; ++k) {
    for (const auto& lambda : partitions(n - k)) {
      for (const auto& mu : partitions(k)) out.push_back({lambda, mu});
    }
  }
  return out;
}

std::string format_bipartition(const Bipartition& bp) {
  return "(" + format_partition(bp.lambda) + " | " + format_partition(bp.mu) + ")";
}

int Tableau::size() const {
  int s = 0;
  for (const auto& r : rows) s += static_cast<int>(r.size());
  return s;
}

Partition Tableau::shape() const {
  Partition p;
  for (const auto& r : rows) p.push_back(static_cast<int>(r.size()));
  return p;
}

bool Tableau::is_standard() const {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) return false;
    if (r > 0 && rows[r].size() > rows[r - 1].size()) return false;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0 && rows[r][c] <= rows[r][c - 1]) return false;
      if (r > 0 && rows[r][c] <= rows[r - 1][c]) return false;
    }
  }
  return true;
}

std::pair<int, int> Tableau::find(int value) const {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c] == value) return {static_cast<int>(r), static_cast<int>(c)};
    }
  }
  return {-1, -1};
}

std::pair<int, int> Tableau::insert(int value) {
  int x = value;
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.push_back({x});
      return {static_cast<int>(r), 0};
    }
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return {static_cast<int>(r), static_cast<int>(row.size() - 1)};
    }
    std::swap(x, *it);
  }
}

int Tableau::remove_corner(int row) {
  int x = rows[row].back();
  rows[row].pop_back();
  if (rows[row].empty()) rows.erase(rows.begin() + row);
  for (int r = row - 1; r >= 0; --r) {
    auto& cur = rows[r];
    auto it = std::lower_bound(cur.begin(), cur.end(), x);
    --it;  // largest entry smaller than x
    std::swap(x, *it);
  }
  return x;
}

std::string format_tableau(const Tableau& t) {
  if (t.empty()) return "-";
  std::string out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (r > 0) out += ';';
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      if (c > 0) out += ',';
      out += std::to_string(t.rows[r][c]);
    }
  }
  return out;
}

Tableau parse_tableau(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  Tableau t;
  if (text == "-" || text.empty()) return t;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    std::vector<int> row;
    std::string_view row_text = text.substr(pos, end - pos);
    std::size_t p = 0;
    while (p <= row_text.size()) {
      std::size_t e = row_text.find(',', p);
      if (e == std::string_view::npos) e = row_text.size();
      auto item = trim(row_text.substr(p, e - p));
      int v = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
        throw ValidationError("tableau: cannot parse entry '" + std::string(item) + "'");
      }
      row.push_back(v);
      p = e + 1;
    }
    t.rows.push_back(std::move(row));
    pos = end + 1;
  }
  return t;
}

bool Bitableau::is_n_standard(int n) const {
  if (!plus.is_standard() || !minus.is_standard() || size() != n) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const auto* t : {&plus, &minus}) {
    for (const auto& row : t->rows) {
      for (int v : row) {
        if (v < 1 || v > n || seen[v]) return false;
        seen[v] = true;
      }
    }
  }
  return true;
}

std::string format_bitableau(const Bitableau& b) {
  return format_tableau(b.plus) + "|" + format_tableau(b.minus);
}

Bitableau parse_bitableau(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw ValidationError("bitableau: missing '|'");
  return {parse_tableau(text.substr(0, bar)), parse_tableau(text.substr(bar + 1))};
}

namespace {

void place(Tableau& t, std::pair<int, int> box, int value) {
  if (box.first == static_cast<int>(t.rows.size())) t.rows.emplace_back();
  t.rows[box.first].push_back(value);
}

}  // namespace

RSPair rs_insert(const SignedPermutation& w) {
  RSPair out;
  for (int i = 1; i <= w.rank(); ++i) {
    const int v = w(i);
    if (v > 0) {
      place(out.b.plus, out.a.plus.insert(v), i);
    } else {
      place(out.b.minus, out.a.minus.insert(-v), i);
    }
  }
  return out;
}

SignedPermutation rs_inverse(const RSPair& pair) {
  const int n = pair.a.size();
  if (n < 1 || n > kMaxRank) throw ValidationError("rs_inverse: size " + std::to_string(n) + " out of range");
  if (pair.a.shape() != pair.b.shape()) throw ValidationError("rs_inverse: bitableaux have different shapes");
  if (!pair.a.is_n_standard(n)) throw ValidationError("rs_inverse: insertion bitableau is not n-standard");
  if (!pair.b.is_n_standard(n)) throw ValidationError("rs_inverse: recording bitableau is not n-standard");
  Bitableau a = pair.a;
  Bitableau b = pair.b;
  std::vector<int> window(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) {
    auto pos = b.plus.find(i);
    const bool positive = pos.first >= 0;
    if (!positive) pos = b.minus.find(i);
    Tableau& rec = positive ? b.plus : b.minus;
    Tableau& ins = positive ? a.plus : a.minus;
    // i is the largest remaining entry, hence sits at a corner
    rec.rows[pos.first].pop_back();
    if (rec.rows[pos.first].empty()) rec.rows.erase(rec.rows.begin() + pos.first);
    const int x = ins.remove_corner(pos.first);
    window[i - 1] = positive ? x : -x;
  }
  return SignedPermutation::from_window(Rank(n), window);
}

bool transpose_pair(const SignedPermutation& w) { return rs_insert(w.inverse()).a == rs_insert(w).b; }

std::pair<Tableau, Tableau> classical_rs(std::span<const int> word) {
  const int m = static_cast<int>(word.size());
  std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
  for (std::size_t i = 0; i < word.size(); ++i) {
    const int v = word[i];
    if (v < 1 || v > m || seen[v]) {
      throw ValidationError("classical_rs: position " + std::to_string(i + 1) + " breaks the permutation");
    }
    seen[v] = true;
  }
  Tableau p;
  Tableau q;
  for (int i = 0; i < m; ++i) place(q, p.insert(word[i]), i + 1);
  return {p, q};
}

std::vector<Bitableau> standard_bitableaux(int n) {
  std::vector<Bitableau> current{Bitableau{}};
  for (int k = 1; k <= n; ++k) {
    std::vector<Bitableau> next;
    for (const auto& bt : current) {
      for (int side = 0; side < 2; ++side) {
        const Tableau& t = side == 0 ? bt.plus : bt.minus;
        for (std::size_t r = 0; r <= t.rows.size(); ++r) {
          if (r > 0 && r < t.rows.size() && t.rows[r].size() >= t.rows[r - 1].size()) continue;
          if (r == t.rows.size() && r > 0 && t.rows[r - 1].empty()) continue;
          Bitableau copy = bt;
          Tableau& target = side == 0 ? copy.plus : copy.minus;
          if (r == target.rows.size()) target.rows.emplace_back();
          target.rows[r].push_back(k);
          next.push_back(std::move(copy));
        }
      }
    }
    current = std::move(next);
  }
  return current;
}

std::vector<SignedPermutation> admissible_moves(const SignedPermutation& w) {
  const int n = w.rank();
  auto sign = [&](int i) { return w(i) > 0 ? 1 : -1; };
  auto abs_at = [&](int i) { return w(i) > 0 ? w(i) : -w(i); };
  auto between = [](int m, int a, int b) { return (a < m && m < b) || (b < m && m < a); };
  std::set<SignedPermutation> out;
  for (int i = 1; i < n; ++i) {
    bool ok = sign(i) != sign(i + 1);
    if (!ok && i >= 2 && sign(i - 1) == sign(i) && sign(i) == sign(i + 1)) {
      ok = between(abs_at(i - 1), abs_at(i), abs_at(i + 1));
    }
    if (!ok && i + 2 <= n && sign(i) == sign(i + 1) && sign(i + 1) == sign(i + 2)) {
      ok = between(abs_at(i + 2), abs_at(i), abs_at(i + 1));
    }
    if (ok) out.insert(w * generator_element(n, Generator::s(i)));
  }
  return {out.begin(), out.end()};
}

namespace {

// x -s-> y with y = s x longer and L'(x) not contained in L'(y).
bool elementary_left(const SignedPermutation& x, const SignedPermutation& y) {
  return ell(y) > ell(x) && !descent_extended_left(x).subset_of(descent_extended_left(y));
}

}  // namespace

bool knuth_left_relation(const SignedPermutation& x, const SignedPermutation& y) {
  if (x.rank() != y.rank()) throw RankMismatch("knuth_left_relation: rank mismatch");
  const int n = x.rank();
  std::set<SignedPermutation> seen{x};
  std::deque<SignedPermutation> queue{x};
  while (!queue.empty()) {
    const auto cur = queue.front();
    queue.pop_front();
    if (cur == y) return true;
    for (int i = 1; i < n; ++i) {
      const auto next = generator_element(n, Generator::s(i)) * cur;
      if ((elementary_left(cur, next) || elementary_left(next, cur)) && seen.insert(next).second) {
        queue.push_back(next);
      }
    }
  }
  return false;
}

std::vector<int> knuth_left_classes(const Group& group) {
  const std::size_t size = group.size();
  std::vector<ExtendedDescents> desc(size);
  for (Index i = 0; i < size; ++i) desc[i] = descent_extended_left(group.element(i));
  std::vector<Index> parent(size);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Index v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (Index x = 0; x < size; ++x) {
    for (int i = 1; i < group.rank(); ++i) {
      const Index y = group.left_mul(Generator::s(i), x);
      if (group.length(y) > group.length(x) && !desc[x].subset_of(desc[y])) {
        const Index rx = find(x);
        const Index ry = find(y);
        if (rx != ry) parent[std::max(rx, ry)] = std::min(rx, ry);
      }
    }
  }
  std::vector<int> ids(size, -1);
  std::vector<int> root_id(size, -1);
  int next = 0;
  for (Index x = 0; x < size; ++x) {
    const Index r = find(x);
    if (root_id[r] < 0) root_id[r] = next++;
    ids[x] = root_id[r];
  }
  return ids;
}

RSCellPartition rs_cells(Rank rank) {
  RSCellPartition out;
  for (const auto& w : enumerate(rank)) out.cells[rs_insert(w).b].push_back(w);
  return out;
}

DecompositionKey decomposition_key(const SignedPermutation& w) {
  const auto d = decompose(w);
  const int n = w.rank();
  std::vector<int> first;
  std::vector<int> second;
  for (int i = 1; i <= d.l; ++i) first.push_back(d.sigma_prime(i));
  for (int i = d.l + 1; i <= n; ++i) second.push_back(d.sigma_second(i) - d.l);
  return DecompositionKey{d.l, d.b, classical_rs(first).second, classical_rs(second).second};
}

bool equivalent_by_decomposition(const SignedPermutation& x, const SignedPermutation& y) {
  if (x.rank() != y.rank()) throw RankMismatch("equivalent_by_decomposition: rank mismatch");
  if (ell_t(x) != ell_t(y)) return false;
  return decomposition_key(x) == decomposition_key(y);
}

}  // namespace bcell
