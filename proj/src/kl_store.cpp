#include "bcell/kl_store.hpp"

#include <algorithm>
#include <numeric>

namespace bcell {

const Laurent* SparseColumn::find(Index row) const {
  auto it = std::lower_bound(rows.begin(), rows.end(), row);
  if (it == rows.end() || *it != row) return nullptr;
  return &values[static_cast<std::size_t>(it - rows.begin())];
}

KLStore::KLStore(std::shared_ptr<const Group> group, OrderSpec spec)
    : group_(std::move(group)), spec_(spec) {
  if (group_->rank() > kKLMaxRank) {
    throw ValidationError("KL tables are limited to rank " + std::to_string(kKLMaxRank));
  }
  pstar_.resize(group_->size());
  m_.resize(group_->size() * group_->generator_count());
}

Laurent KLStore::pstar(Index y, Index w) const {
  const Laurent* v = pstar_[w].find(y);
  return v ? *v : Laurent(dim());
}

Laurent KLStore::p(Index y, Index w) const {
  return pstar(y, w).times_monomial(weight(y).inverse() * weight(w));
}

Laurent KLStore::m(Generator s, Index y, Index w) const {
  const Group& g = *group_;
  const bool ok = g.is_left_descent(s, y) && !g.is_left_descent(s, w) && g.length(y) < g.length(w) &&
                  g.bruhat_leq(y, w);
  if (!ok) {
    throw ContractError("M^" + s.name() + " needs s y < y < w < s w; got y = " + format_window(g.element(y)) +
                        ", w = " + format_window(g.element(w)));
  }
  const Laurent* v = m_column(s, w).find(y);
  return v ? *v : Laurent(dim());
}

Laurent KLStore::quantum_two(Generator s) const {
  const Gamma g = spec_.weight(s);
  return monomial(g) + monomial(g.inverse());
}

void KLStore::compute_pstar_column(Index w) {
  const Group& g = *group_;
  SparseColumn& col = pstar_[w];
  if (w == g.identity()) {
    col.rows = {w};
    col.values = {Laurent::constant(1, dim())};
    return;
  }
  const Generator s = *g.preferred_left_descent(w);
  const Index sw = g.left_mul(s, w);
  const Gamma vs = spec_.weight(s);
  const SparseColumn& mcol = m_column(s, sw);
  const std::vector<Index> ys = g.bruhat_interval_below(w);
  std::vector<Laurent> vals(ys.size(), Laurent(dim()));
  // Descending y: the branch s y > y reads P*(s y, w) from the same column.
  for (std::size_t k = ys.size(); k-- > 0;) {
    const Index y = ys[k];
    if (y == w) {
      vals[k] = Laurent::constant(1, dim());
      continue;
    }
    const Index sy = g.left_mul(s, y);
    if (g.length(sy) > g.length(y)) {
      const auto pos = static_cast<std::size_t>(std::lower_bound(ys.begin(), ys.end(), sy) - ys.begin());
      vals[k] = vals[pos].times_monomial(vs.inverse());
      continue;
    }
    Laurent v = pstar(y, sw).times_monomial(vs);
    v += pstar(sy, sw);
    for (std::size_t j = 0; j < mcol.size(); ++j) {
      const Index z = mcol.rows[j];
      if (z < y) continue;
      const Laurent* pyz = pstar_[z].find(y);
      if (pyz) v.add_product(*pyz, mcol.values[j], -1);
    }
    vals[k] = std::move(v);
  }
  col.rows.clear();
  col.values.clear();
  for (std::size_t k = 0; k < ys.size(); ++k) {
    if (vals[k].is_zero()) continue;
    col.rows.push_back(ys[k]);
    col.values.push_back(std::move(vals[k]));
  }
}

void KLStore::compute_m_columns(Index w) {
  const Group& g = *group_;
  const SparseColumn& pcol = pstar_[w];
  const std::vector<Index> ys = g.bruhat_interval_below(w);
  for (Generator s : generators(g.rank())) {
    if (g.is_left_descent(s, w)) continue;
    const Gamma vs = spec_.weight(s);
    std::vector<Index> rows;
    std::vector<Laurent> vals;
    // Descending y, so every z with y < z < w is already settled.
    for (std::size_t k = ys.size(); k-- > 0;) {
      const Index y = ys[k];
      if (y == w || !g.is_left_descent(s, y)) continue;
      const Laurent* pyw = pcol.find(y);
      Laurent f = pyw ? pyw->times_monomial(vs) : Laurent(dim());
      for (std::size_t j = 0; j < rows.size(); ++j) {
        const Laurent* pyz = pstar_[rows[j]].find(y);
        if (pyz) f.add_product(*pyz, vals[j], -1);
      }
      auto parts = f.split(spec_);
      Laurent mval = parts.pos + parts.one + parts.pos.bar();
      if (!mval.is_zero()) {
        rows.push_back(y);
        vals.push_back(std::move(mval));
      }
    }
    SparseColumn col;
    col.rows.assign(rows.rbegin(), rows.rend());
    col.values.assign(std::make_move_iterator(vals.rbegin()), std::make_move_iterator(vals.rend()));
    m_[s.index() * g.size() + w] = std::move(col);
  }
}

KLStore KLStore::build(std::shared_ptr<const Group> group, OrderSpec spec, BuildMode mode) {
  KLStore store(std::move(group), spec);
  const Group& g = *store.group_;
  for (int l = 0; l <= g.max_length(); ++l) {
    const auto [first, last] = g.stratum(l);
    const auto count = static_cast<std::int64_t>(last - first);
    if (mode == BuildMode::parallel) {
#pragma omp parallel for schedule(dynamic)
      for (std::int64_t k = 0; k < count; ++k) store.compute_pstar_column(first + static_cast<Index>(k));
#pragma omp parallel for schedule(dynamic)
      for (std::int64_t k = 0; k < count; ++k) store.compute_m_columns(first + static_cast<Index>(k));
    } else {
      for (std::int64_t k = 0; k < count; ++k) store.compute_pstar_column(first + static_cast<Index>(k));
      for (std::int64_t k = 0; k < count; ++k) store.compute_m_columns(first + static_cast<Index>(k));
    }
  }
  return store;
}

CExpansion KLStore::c_basis(Index w) const {
  CExpansion out{Basis::T, {}};
  const SparseColumn& col = pstar_[w];
  for (std::size_t k = 0; k < col.size(); ++k) out.coefficients.emplace(col.rows[k], col.values[k]);
  return out;
}

CExpansion KLStore::c_product_left(Generator s, Index w) const {
  CExpansion out{Basis::C, {}};
  const Index sw = group_->left_mul(s, w);
  if (group_->length(sw) < group_->length(w)) {
    out.coefficients.emplace(w, quantum_two(s));
    return out;
  }
  out.coefficients.emplace(sw, Laurent::constant(1, dim()));
  const SparseColumn& col = m_column(s, w);
  for (std::size_t k = 0; k < col.size(); ++k) out.coefficients.emplace(col.rows[k], col.values[k]);
  return out;
}

std::size_t KLStore::pstar_count() const {
  std::size_t c = 0;
  for (const auto& col : pstar_) c += col.size();
  return c;
}

std::size_t KLStore::m_count() const {
  std::size_t c = 0;
  for (const auto& col : m_) c += col.size();
  return c;
}

RTable::RTable(const KLStore& store) : size_(store.group().size()) {
  const Group& g = store.group();
  if (g.rank() > kRTableMaxRank) {
    throw ValidationError("R table is limited to rank " + std::to_string(kRTableMaxRank));
  }
  const int dim = store.dim();
  r_.assign(size_ * size_, Laurent(dim));
  r_[0] = Laurent::constant(1, dim);
  for (Index w = 1; w < size_; ++w) {
    const Generator s = *g.preferred_left_descent(w);
    const Index sw = g.left_mul(s, w);
    const Gamma vs = store.spec().weight(s);
    const Laurent shift = store.monomial(vs.inverse()) - store.monomial(vs);
    for (Index y = 0; y < size_; ++y) {
      const Index sy = g.left_mul(s, y);
      Laurent v = (*this)(sy, sw);
      if (g.length(sy) > g.length(y)) v.add_product(shift, (*this)(y, sw));
      r_[static_cast<std::size_t>(w) * size_ + y] = std::move(v);
    }
  }
}

GeneratorSet all_generators(int n) { return (GeneratorSet{1} << n) - 1; }

namespace {

// Strongly connected components of a graph on 0..n-1, emitted sinks first.
std::vector<std::vector<std::size_t>> tarjan(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> out;
  std::size_t counter = 0;
  std::vector<std::pair<std::size_t, std::size_t>> call;  // (node, next edge)
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, e] = call.back();
      if (e < adj[v].size()) {
        const std::size_t u = adj[v][e++];
        if (index[u] == unvisited) {
          index[u] = low[u] = counter++;
          stack.push_back(u);
          on_stack[u] = true;
          call.emplace_back(u, 0);
        } else if (on_stack[u]) {
          low[v] = std::min(low[v], index[u]);
        }
        continue;
      }
      const std::size_t done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        std::vector<std::size_t> comp;
        std::size_t x = 0;
        do {
          x = stack.back();
          stack.pop_back();
          on_stack[x] = false;
          comp.push_back(x);
        } while (x != done);
        out.push_back(std::move(comp));
      }
    }
  }
  return out;
}

}  // namespace

CellPartition left_cells_restricted(const KLStore& store, GeneratorSet gens, const std::vector<Index>& domain) {
  const Group& g = store.group();
  std::vector<Index> nodes = domain;
  if (nodes.empty()) {
    nodes.resize(g.size());
    std::iota(nodes.begin(), nodes.end(), 0);
  }
  std::sort(nodes.begin(), nodes.end());
  std::vector<std::size_t> local(g.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = i;

  std::vector<std::vector<std::size_t>> adj(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Index w = nodes[i];
    for (Generator s : generators(g.rank())) {
      if (!contains(gens, s)) continue;
      for (const auto& [y, coeff] : store.c_product_left(s, w).coefficients) {
        if (y != w && local[y] != static_cast<std::size_t>(-1)) adj[i].push_back(local[y]);
      }
    }
  }

  const auto comps = tarjan(adj);
  // Reachability over the condensation; tarjan emits successors first.
  std::vector<int> comp_of(nodes.size(), -1);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (auto v : comps[c]) comp_of[v] = static_cast<int>(c);
  }
  std::vector<BitRow> reach(comps.size(), BitRow(comps.size()));
  for (std::size_t c = 0; c < comps.size(); ++c) {
    reach[c].set(c);
    for (auto v : comps[c]) {
      for (auto u : adj[v]) {
        if (comp_of[u] != static_cast<int>(c)) reach[c].merge(reach[comp_of[u]]);
      }
    }
  }

  std::vector<std::vector<Index>> cells(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (auto v : comps[c]) cells[c].push_back(nodes[v]);
    std::sort(cells[c].begin(), cells[c].end());
  }
  std::vector<std::size_t> order(comps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return cells[a].front() < cells[b].front(); });
  std::vector<std::size_t> rank_of(comps.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank_of[order[r]] = r;

  CellPartition out;
  out.cell_of.assign(g.size(), -1);
  out.below.assign(comps.size(), BitRow(comps.size()));
  for (std::size_t r = 0; r < order.size(); ++r) {
    const std::size_t c = order[r];
    for (Index x : cells[c]) out.cell_of[x] = static_cast<int>(r);
    reach[c].for_each([&](std::size_t d) { out.below[r].set(rank_of[d]); });
    out.cells.push_back(std::move(cells[c]));
  }
  return out;
}

CellPartition left_cells(const KLStore& store) {
  return left_cells_restricted(store, all_generators(store.group().rank()), {});
}

}  // namespace bcell
