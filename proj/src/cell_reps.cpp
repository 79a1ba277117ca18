#include "bcell/cell_reps.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace bcell {

LaurentMatrix LaurentMatrix::identity(std::size_t size, int dim) {
  LaurentMatrix m(size, dim);
  for (std::size_t i = 0; i < size; ++i) m.at(i, i) = Laurent::constant(1, dim);
  return m;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
  LaurentMatrix out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Laurent& left = at(i, k);
      if (left.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) out.at(i, j).add_product(left, o.at(k, j));
    }
  }
  return out;
}

LaurentMatrix LaurentMatrix::operator+(const LaurentMatrix& o) const {
  LaurentMatrix out = *this;
  for (std::size_t i = 0; i < a.size(); ++i) out.a[i] += o.a[i];
  return out;
}

LaurentMatrix LaurentMatrix::scaled(const Laurent& k) const {
  LaurentMatrix out = *this;
  for (auto& x : out.a) x = x * k;
  return out;
}

CellModule cell_module(const KLStore& store, const CellPartition& cells, std::size_t cell) {
  if (cell >= cells.size()) throw ValidationError("cell index " + std::to_string(cell) + " out of range");
  const Group& g = store.group();
  CellModule m;
  m.basis = cells.cells[cell];
  const std::size_t d = m.basis.size();
  auto position = [&](Index x) -> std::optional<std::size_t> {
    auto it = std::lower_bound(m.basis.begin(), m.basis.end(), x);
    if (it == m.basis.end() || *it != x) return std::nullopt;
    return static_cast<std::size_t>(it - m.basis.begin());
  };
  for (Generator s : generators(g.rank())) {
    // T_s = C_s - v_s^{-1}
    LaurentMatrix t = LaurentMatrix::identity(d, store.dim()).scaled(-store.monomial(store.spec().weight(s).inverse()));
    for (std::size_t j = 0; j < d; ++j) {
      for (const auto& [y, coeff] : store.c_product_left(s, m.basis[j]).coefficients) {
        // Terms outside the cell lie strictly below it and vanish in the quotient.
        if (auto i = position(y)) t.at(*i, j) += coeff;
      }
    }
    m.action.push_back(std::move(t));
  }
  return m;
}

namespace {

int braid_order(int a, int b) {
  if (a > b) std::swap(a, b);
  if (a == 0) return b == 1 ? 4 : 2;
  return b == a + 1 ? 3 : 2;
}

LaurentMatrix alternating_product(const LaurentMatrix& x, const LaurentMatrix& y, int length) {
  LaurentMatrix out = x;
  for (int k = 1; k < length; ++k) out = out * (k % 2 == 1 ? y : x);
  return out;
}

}  // namespace

bool satisfies_hecke_relations(const KLStore& store, const CellModule& m) {
  const int n = store.group().rank();
  const int dim = store.dim();
  const auto id = LaurentMatrix::identity(m.dimension(), dim);
  for (int a = 0; a < n; ++a) {
    const Gamma vs = store.spec().weight(a == 0 ? Generator::t() : Generator::s(a));
    const Laurent q = store.monomial(vs) - store.monomial(vs.inverse());
    if (!(m.action[a] * m.action[a] == id + m.action[a].scaled(q))) return false;
    for (int b = a + 1; b < n; ++b) {
      const int k = braid_order(a, b);
      if (!(alternating_product(m.action[a], m.action[b], k) == alternating_product(m.action[b], m.action[a], k))) {
        return false;
      }
    }
  }
  return true;
}

std::vector<IntMatrix> specialize_at_one(const CellModule& m) {
  std::vector<IntMatrix> out;
  const std::size_t d = m.dimension();
  for (const auto& t : m.action) {
    IntMatrix x(d, std::vector<long long>(d, 0));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) x[i][j] = t.at(i, j).value_at_one().convert_to<long long>();
    }
    out.push_back(std::move(x));
  }
  return out;
}

Bipartition signed_cycle_type(const SignedPermutation& w) {
  const int n = w.rank();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  Bipartition bp;
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    int negatives = 0;
    for (int j = i; !seen[j]; j = std::abs(w(j))) {
      seen[j] = true;
      ++len;
      if (w(j) < 0) ++negatives;
    }
    (negatives % 2 == 0 ? bp.lambda : bp.mu).push_back(len);
  }
  std::sort(bp.lambda.rbegin(), bp.lambda.rend());
  std::sort(bp.mu.rbegin(), bp.mu.rend());
  return bp;
}

std::vector<ConjugacyClass> conjugacy_classes(const Group& g) {
  std::vector<ConjugacyClass> out;
  for (const auto& bp : bipartitions(g.rank())) out.push_back({bp, 0, 0});
  std::map<Bipartition, std::size_t> slot;
  for (std::size_t i = 0; i < out.size(); ++i) slot[out[i].label] = i;
  for (Index x = 0; x < g.size(); ++x) {
    auto& c = out[slot.at(signed_cycle_type(g.element(x)))];
    if (c.size++ == 0) c.representative = x;
  }
  return out;
}

namespace {

// Beta-set form of the Murnaghan-Nakayama recursion.
long long mn(std::vector<int> beta, const Partition& rho, std::size_t k) {
  if (k == rho.size()) return 1;
  const int r = rho[k];
  long long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    if (b - r < 0 || std::find(beta.begin(), beta.end(), b - r) != beta.end()) continue;
    const auto between = std::count_if(beta.begin(), beta.end(), [&](int c) { return c > b - r && c < b; });
    auto next = beta;
    next[i] = b - r;
    const long long sign = between % 2 == 0 ? 1 : -1;
    total += sign * mn(std::move(next), rho, k + 1);
  }
  return total;
}

Partition cycle_type_of(const std::vector<int>& perm) {
  // perm is a permutation of 0..m-1
  const std::size_t m = perm.size();
  std::vector<bool> seen(m, false);
  Partition out;
  for (std::size_t i = 0; i < m; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace

long long symmetric_character(const Partition& lambda, const Partition& rho) {
  if (size(lambda) != size(rho)) throw ValidationError("character and class of different sizes");
  std::vector<int> beta;
  const int len = static_cast<int>(lambda.size());
  for (int i = 0; i < len; ++i) beta.push_back(lambda[i] + len - 1 - i);
  return mn(beta, rho, 0);
}

CharacterVector irreducible_character(const Group& g, const std::vector<ConjugacyClass>& classes,
                                      const Bipartition& bp) {
  const int n = g.rank();
  const int k = size(bp.lambda);
  if (k + size(bp.mu) != n) throw ValidationError("bipartition " + format_bipartition(bp) + " has the wrong size");
  for (const auto* p : {&bp.lambda, &bp.mu}) {
    if (!std::is_sorted(p->rbegin(), p->rend()) || std::find(p->begin(), p->end(), 0) != p->end()) {
      throw ValidationError("bipartition " + format_bipartition(bp) + " is not a pair of partitions");
    }
  }
  auto inducing = [&](const SignedPermutation& h) -> long long {
    std::vector<int> first;
    std::vector<int> second;
    int negatives = 0;
    for (int i = 1; i <= n; ++i) {
      const int v = std::abs(h(i));
      if ((i <= k) != (v <= k)) return 0;
      if (i <= k) {
        first.push_back(v - 1);
      } else {
        second.push_back(v - k - 1);
        if (h(i) < 0) ++negatives;
      }
    }
    const long long a = k == 0 ? 1 : symmetric_character(bp.lambda, cycle_type_of(first));
    const long long b = k == n ? 1 : symmetric_character(bp.mu, cycle_type_of(second));
    return a * b * (negatives % 2 == 0 ? 1 : -1);
  };
  long long order_h = 1;
  for (int i = 1; i <= k; ++i) order_h *= 2 * i;
  for (int i = 1; i <= n - k; ++i) order_h *= 2 * i;
  CharacterVector out;
  for (const auto& c : classes) {
    const auto& rep = g.element(c.representative);
    long long sum = 0;
    for (const auto& x : g.elements()) sum += inducing(x * rep * x.inverse());
    if (sum % order_h != 0) throw Error("induced character value is not integral");
    out.push_back(sum / order_h);
  }
  return out;
}

std::map<Bipartition, CharacterVector> character_table(const Group& g, const std::vector<ConjugacyClass>& classes) {
  const auto bps = bipartitions(g.rank());
  std::vector<CharacterVector> rows(bps.size());
  const auto count = static_cast<std::int64_t>(bps.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) rows[i] = irreducible_character(g, classes, bps[i]);
  std::map<Bipartition, CharacterVector> out;
  for (std::size_t i = 0; i < bps.size(); ++i) out.emplace(bps[i], std::move(rows[i]));
  return out;
}

CharacterVector character_of_module(const Group& g, const std::vector<ConjugacyClass>& classes,
                                    const std::vector<IntMatrix>& specialized) {
  const std::size_t d = specialized.empty() ? 0 : specialized.front().size();
  CharacterVector out;
  for (const auto& c : classes) {
    IntMatrix m(d, std::vector<long long>(d, 0));
    for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
    for (Generator s : reduced_word(g.element(c.representative))) {
      const IntMatrix& t = specialized[s.index()];
      IntMatrix next(d, std::vector<long long>(d, 0));
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
          if (m[i][k] == 0) continue;
          for (std::size_t j = 0; j < d; ++j) next[i][j] += m[i][k] * t[k][j];
        }
      }
      m = std::move(next);
    }
    long long trace = 0;
    for (std::size_t i = 0; i < d; ++i) trace += m[i][i];
    out.push_back(trace);
  }
  return out;
}

long long inner_product(const std::vector<ConjugacyClass>& classes, const CharacterVector& a,
                        const CharacterVector& b, std::size_t group_order) {
  long long sum = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) sum += static_cast<long long>(classes[i].size) * a[i] * b[i];
  if (sum % static_cast<long long>(group_order) != 0) throw Error("character inner product is not integral");
  return sum / static_cast<long long>(group_order);
}

CellIdentification identify_cell(const KLStore& store, const CellPartition& cells, std::size_t cell,
                                 const std::vector<ConjugacyClass>& classes,
                                 const std::map<Bipartition, CharacterVector>& table) {
  const Group& g = store.group();
  CellIdentification out;
  out.shape = rs_insert(g.element(cells.cells[cell].front())).b.shape();
  out.expected = Bipartition{out.shape.mu, conjugate(out.shape.lambda)};
  const CellModule m = cell_module(store, cells, cell);
  out.dimension = m.dimension();
  out.values = character_of_module(g, classes, specialize_at_one(m));
  for (const auto& [bp, chi] : table) {
    if (chi == out.values) out.matches.push_back(bp);
  }
  return out;
}

}  // namespace bcell
