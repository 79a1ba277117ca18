#include "bcell/verify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "bcell/coset.hpp"
#include "bcell/tableau.hpp"

namespace bcell {

void Report::merge(const Report& other) {
  checks += other.checks;
  failures += other.failures;
  for (const auto& c : other.counterexamples) {
    if (counterexamples.size() < kMaxListed) counterexamples.push_back(c);
  }
}

namespace {

std::string win(const Group& g, Index x) { return format_window(g.element(x)); }

std::string pair_text(const Group& g, Index y, Index w) { return "(" + win(g, y) + " | " + win(g, w) + ")"; }

// Runs body(w, report) for every element, in parallel, merging in index order.
template <typename Body>
Report per_element(const std::string& name, const Group& g, Body&& body) {
  std::vector<Report> parts(g.size());
  const auto size = static_cast<std::int64_t>(g.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t w = 0; w < size; ++w) body(static_cast<Index>(w), parts[w]);
  Report out{name};
  for (const auto& p : parts) out.merge(p);
  return out;
}

Laurent sign_power(int dim, int exponent) { return Laurent::constant(exponent % 2 == 0 ? 1 : -1, dim); }

}  // namespace

Report verify_pstar_basic(const KLStore& store) {
  const Group& g = store.group();
  const OrderSpec& spec = store.spec();
  return per_element("pstar-basic", g, [&](Index w, Report& rep) {
    const Index wi = g.inverse(w);
    for (Index y : g.bruhat_interval_below(w)) {
      const Laurent p = store.pstar(y, w);
      if (y == w) {
        rep.check(p == Laurent::constant(1), [&] { return "P*(w,w) != 1 at " + win(g, w); });
      } else {
        rep.check(p.in_negative_part(spec),
                  [&] { return "P* not in Z[Gamma_-] at " + pair_text(g, y, w) + ": " + p.format(); });
      }
      rep.check(store.pstar(g.inverse(y), wi) == p,
                [&] { return "P*(y^-1,w^-1) != P*(y,w) at " + pair_text(g, y, w); });
    }
  });
}

Report verify_m_conditions(const KLStore& store) {
  const Group& g = store.group();
  const OrderSpec& spec = store.spec();
  return per_element("m-conditions", g, [&](Index w, Report& rep) {
    const auto ys = g.bruhat_interval_below(w);
    for (Generator s : generators(g.rank())) {
      if (g.is_left_descent(s, w)) continue;
      const Gamma vs = spec.weight(s);
      for (Index y : ys) {
        if (y == w || !g.is_left_descent(s, y)) continue;
        const Laurent m = store.m(s, y, w);
        rep.check(m.bar() == m, [&] { return "M^" + s.name() + " not bar-invariant at " + pair_text(g, y, w); });
        rep.check(m.times_monomial(vs.inverse()).in_negative_part(spec),
                  [&] { return "v_s^-1 M^" + s.name() + " not in Z[Gamma_-] at " + pair_text(g, y, w); });
        Laurent lhs = m - store.pstar(y, w).times_monomial(vs);
        for (Index z : ys) {
          if (z == w || z == y || !g.is_left_descent(s, z) || !g.bruhat_leq(y, z)) continue;
          lhs.add_product(store.pstar(y, z), store.m(s, z, w));
        }
        rep.check(lhs.in_negative_part(spec),
                  [&] { return "congruence for M^" + s.name() + " fails at " + pair_text(g, y, w); });
      }
    }
  });
}

Report verify_bar_invariance(const KLStore& store, const RTable& r) {
  const Group& g = store.group();
  return per_element("bar-invariance", g, [&](Index w, Report& rep) {
    // bar(C_w) = sum_y bar(P*(y,w)) sum_x R(x,y) T_x
    std::map<Index, Laurent> image;
    const auto& col = store.pstar_column(w);
    for (std::size_t k = 0; k < col.size(); ++k) {
      const Index y = col.rows[k];
      const Laurent coeff = col.values[k].bar();
      for (Index x : g.bruhat_interval_below(y)) {
        const Laurent& rxy = r(x, y);
        if (rxy.is_zero()) continue;
        auto [it, fresh] = image.try_emplace(x, Laurent(store.dim()));
        it->second.add_product(coeff, rxy);
      }
    }
    for (Index x = 0; x < g.size(); ++x) {
      auto it = image.find(x);
      const Laurent lhs = it == image.end() ? Laurent(store.dim()) : it->second;
      rep.check(lhs == store.pstar(x, w), [&] { return "bar(C_w) differs from C_w at " + pair_text(g, x, w); });
    }
  });
}

Report verify_longest_identities(const KLStore& store) {
  const Group& g = store.group();
  const int dim = store.dim();
  const auto w0 = longest_element(g.rank());
  std::vector<Index> times_w0(g.size());
  for (Index x = 0; x < g.size(); ++x) times_w0[x] = g.index_of(g.element(x) * w0);
  return per_element("longest-element", g, [&](Index w, Report& rep) {
    const auto below = g.bruhat_interval_below(w);
    const Index ww0 = times_w0[w];
    for (Index y : below) {
      Laurent sum_star(dim);
      Laurent sum_p(dim);
      for (Index z : below) {
        if (!g.bruhat_leq(y, z)) continue;
        const Laurent sign = sign_power(dim, g.length(w) - g.length(z));
        sum_star.add_product(sign * store.pstar(y, z), store.pstar(ww0, times_w0[z]));
        sum_p.add_product(sign * store.p(y, z), store.p(ww0, times_w0[z]));
      }
      const Laurent expected = Laurent::constant(y == w ? 1 : 0, dim);
      rep.check(sum_star == expected, [&] { return "P* alternating sum fails at " + pair_text(g, y, w); });
      rep.check(sum_p == expected, [&] { return "P alternating sum fails at " + pair_text(g, y, w); });
    }
    for (Generator s : generators(g.rank())) {
      if (g.is_left_descent(s, w)) continue;
      for (Index y : below) {
        if (y == w || !g.is_left_descent(s, y)) continue;
        const Laurent lhs = store.m(s, ww0, times_w0[y]);
        const Laurent rhs = -(sign_power(dim, g.length(w) - g.length(y)) * store.m(s, y, w));
        rep.check(lhs == rhs, [&] { return "M^" + s.name() + " w_0 antisymmetry fails at " + pair_text(g, y, w); });
      }
    }
  });
}

namespace {

void require_asymptotic(const KLStore& store) {
  if (store.spec().kind() != OrderKind::asymptotic) {
    throw ValidationError("asymptotic theorems need the asymptotic order");
  }
}

}  // namespace

Report verify_q_polynomials(const KLStore& store) {
  require_asymptotic(store);
  const Group& g = store.group();
  return per_element("q-polynomials", g, [&](Index w, Report& r) {
    const auto below = g.bruhat_interval_below(w);
    for (Index y : below) {
      const auto q = store.p(y, w).as_q_polynomial();
      r.check(q.ok && !q.coefficients.empty() && q.coefficients[0] == 1,
              [&] { return "P not in Z[q] with constant term 1 at " + pair_text(g, y, w); });
    }
    for (int i = 1; i < g.rank(); ++i) {
      const Generator s = Generator::s(i);
      if (g.is_left_descent(s, w)) continue;
      for (Index y : below) {
        if (y == w || !g.is_left_descent(s, y)) continue;
        const Laurent m = store.m(s, y, w);
        if (g.ell_t(y) != g.ell_t(w)) {
          r.check(m.is_zero(), [&] {
            return "M^" + s.name() + " nonzero across t-length strata at " + pair_text(g, y, w);
          });
          continue;
        }
        const int gap = g.length(w) - g.length(y) - 1;
        const auto q = store.p(y, w).as_q_polynomial();
        if (!q.ok) continue;  // already reported above
        r.check(2 * q.degree() <= gap, [&] { return "deg P exceeds the bound at " + pair_text(g, y, w); });
        const Integer top = (gap % 2 == 0 && gap / 2 <= q.degree()) ? q.coefficients[gap / 2] : Integer(0);
        r.check(m == Laurent::constant(top), [&] {
          return "M^" + s.name() + " differs from the top coefficient at " + pair_text(g, y, w);
        });
      }
    }
  });
}

Report verify_t_strata(const KLStore& store, const CellPartition& cells) {
  require_asymptotic(store);
  const Group& g = store.group();
  const Generator t = Generator::t();
  Report rep = per_element("t-strata", g, [&](Index w, Report& r) {
    if (g.is_left_descent(t, w)) return;
    for (Index y : g.bruhat_interval_below(w)) {
      if (y == w || !g.is_left_descent(t, y) || g.ell_t(y) == g.ell_t(w)) continue;
      r.check(store.m(t, y, w).is_zero(),
              [&] { return "M^t nonzero across t-length strata at " + pair_text(g, y, w); });
    }
  });
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const int lt = g.ell_t(cells.cells[c].front());
    for (Index x : cells.cells[c]) {
      rep.check(g.ell_t(x) == lt, [&] { return "t-length not constant on the cell of " + win(g, x); });
    }
    for (std::size_t d = 0; d < cells.size(); ++d) {
      if (!cells.leq(static_cast<int>(d), static_cast<int>(c))) continue;
      rep.check(g.ell_t(cells.cells[d].front()) >= lt, [&] {
        return "t-length drops from cell of " + win(g, cells.cells[c].front()) + " to cell of " +
               win(g, cells.cells[d].front());
      });
    }
  }
  return rep;
}

Report verify_asymptotic_theorems(const KLStore& store, const CellPartition& cells) {
  Report rep{"asymptotic-theorems"};
  rep.merge(verify_q_polynomials(store));
  rep.merge(verify_t_strata(store, cells));
  return rep;
}

std::vector<Index> parabolic_subgroup(const Group& g, GeneratorSet j) {
  std::vector<bool> seen(g.size(), false);
  std::deque<Index> queue{g.identity()};
  seen[g.identity()] = true;
  while (!queue.empty()) {
    const Index x = queue.front();
    queue.pop_front();
    for (Generator s : generators(g.rank())) {
      if (!contains(j, s)) continue;
      const Index y = g.left_mul(s, x);
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::vector<Index> out;
  for (Index x = 0; x < g.size(); ++x) {
    if (seen[x]) out.push_back(x);
  }
  return out;
}

std::vector<Index> distinguished_left_reps(const Group& g, GeneratorSet j) {
  std::vector<Index> out;
  for (Index x = 0; x < g.size(); ++x) {
    bool minimal = true;
    for (Generator s : generators(g.rank())) {
      if (contains(j, s) && g.is_right_descent(s, x)) minimal = false;
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

Report verify_parabolic(const KLStore& store, const CellPartition& cells, GeneratorSet j) {
  const Group& g = store.group();
  Report rep{"parabolic"};
  const auto sub = parabolic_subgroup(g, j);
  const auto reps = distinguished_left_reps(g, j);
  rep.check(reps.size() * sub.size() == g.size(), [&] { return std::string("coset representatives miscounted"); });
  const CellPartition sub_cells = left_cells_restricted(store, j, sub);
  for (const auto& cell : sub_cells.cells) {
    std::vector<bool> in_image(g.size(), false);
    for (Index x : reps) {
      for (Index c : cell) in_image[g.multiply(x, c)] = true;
    }
    for (const auto& big : cells.cells) {
      const auto hits = std::count_if(big.begin(), big.end(), [&](Index z) { return in_image[z]; });
      rep.check(hits == 0 || hits == static_cast<std::ptrdiff_t>(big.size()), [&] {
        return "X_J C cuts the cell of " + win(g, big.front()) + " (C contains " + win(g, cell.front()) + ")";
      });
    }
  }
  return rep;
}

Report verify_transport(const KLStore& store, const CellPartition& cells, const RTable* r) {
  const Group& g = store.group();
  std::vector<Index> right_factor(g.size());
  for (Index x = 0; x < g.size(); ++x) right_factor[x] = g.index_of(decompose(g.element(x)).b);
  std::vector<Index> xb(g.size());
  for (Index x = 0; x < g.size(); ++x) xb[x] = g.multiply(x, right_factor[x]);

  return per_element("transport", g, [&](Index y, Report& rep) {
    const Index b = right_factor[y];
    const Index yb = xb[y];
    for (Index x = 0; x < g.size(); ++x) {
      if (g.ell_t(x) != g.ell_t(y) || right_factor[x] != b) continue;
      const Index x2 = xb[x];
      const bool le = cells.leq(cells.cell_of[x], cells.cell_of[y]);
      const bool le2 = cells.leq(cells.cell_of[x2], cells.cell_of[yb]);
      rep.check(le == le2, [&] { return "left preorder not transported at " + pair_text(g, x, y); });
      rep.check((cells.cell_of[x] == cells.cell_of[y]) == (cells.cell_of[x2] == cells.cell_of[yb]),
                [&] { return "left cells not transported at " + pair_text(g, x, y); });
      if (!g.bruhat_leq(x, y)) continue;
      rep.check(g.bruhat_leq(x2, yb), [&] { return "Bruhat order not transported at " + pair_text(g, x, y); });
      if (r) rep.check((*r)(x, y) == (*r)(x2, yb), [&] { return "R differs at " + pair_text(g, x, y); });
      rep.check(store.pstar(x, y) == store.pstar(x2, yb), [&] { return "P* differs at " + pair_text(g, x, y); });
      rep.check(store.p(x, y) == store.p(x2, yb), [&] { return "P differs at " + pair_text(g, x, y); });
      if (x == y) continue;
      for (Generator s : generators(g.rank())) {
        if (!g.is_left_descent(s, x) || g.is_left_descent(s, y)) continue;
        const bool applicable = g.is_left_descent(s, x2) && !g.is_left_descent(s, yb);
        rep.check(applicable, [&] { return "descent condition not transported at " + pair_text(g, x, y); });
        if (!applicable) continue;
        rep.check(store.m(s, x, y) == store.m(s, x2, yb),
                  [&] { return "M^" + s.name() + " differs at " + pair_text(g, x, y); });
      }
    }
  });
}

Report verify_rs_cells(const KLStore& store, const CellPartition& cells) {
  const Group& g = store.group();
  Report rep{"rs-cells"};
  std::map<Bitableau, int> cell_of_record;
  for (Index x = 0; x < g.size(); ++x) {
    const auto record = rs_insert(g.element(x)).b;
    auto [it, fresh] = cell_of_record.emplace(record, cells.cell_of[x]);
    rep.check(it->second == cells.cell_of[x],
              [&] { return "RS cell of " + win(g, x) + " meets two left cells"; });
  }
  rep.check(cell_of_record.size() == cells.size(), [&] {
    return std::to_string(cells.size()) + " left cells vs " + std::to_string(cell_of_record.size()) + " RS cells";
  });
  return rep;
}

Report compare_partitions(const std::string& name, const CellPartition& a, const CellPartition& b) {
  Report rep{name};
  rep.check(a.cells == b.cells, [&] {
    return std::to_string(a.size()) + " cells vs " + std::to_string(b.size()) + " cells, or different members";
  });
  return rep;
}

Report verify_coset_structure(const Group& g) {
  const int n = g.rank();
  const Rank rank(n);
  Report rep{"cosets"};
  std::vector<SignedPermutation> symmetric;
  for (const auto& w : g.elements()) {
    if (in_symmetric_subgroup(w)) symmetric.push_back(w);
  }
  for (int l = 0; l <= n; ++l) {
    const auto al = a_element(n, l);
    const auto xs = coset_reps_X(rank, l);
    const auto ys = coset_reps_Y(rank, l);
    std::set<SignedPermutation> x_set(xs.begin(), xs.end());
    std::set<SignedPermutation> image;
    for (const auto& y : ys) image.insert(y * al);
    rep.check(image == x_set && ys.size() == xs.size(),
              [&] { return "w -> w a_" + std::to_string(l) + " is not a bijection Y -> X"; });
    std::set<SignedPermutation> product;
    for (const auto& x : xs) {
      for (const auto& s : symmetric) {
        if (in_young_subgroup(s, l)) product.insert(x * s);
      }
    }
    std::set<SignedPermutation> shifted;
    for (const auto& s : symmetric) shifted.insert(s * al);
    rep.check(shifted == product && shifted.size() == symmetric.size(),
              [&] { return "w -> w a_" + std::to_string(l) + " is not a bijection S_n -> X S_{l,n-l}"; });
  }
  rep.merge(per_element("cosets", g, [&](Index x, Report& r) {
    const auto& w = g.element(x);
    const auto d = decompose(w);
    const auto al = a_element(n, d.l);
    r.check(d.a * al * d.sigma * d.b.inverse() == w, [&] { return "factorization fails at " + win(g, x); });
    r.check(ell(d.a) + ell(al) + ell(d.sigma) + ell(d.b) == ell(w),
            [&] { return "lengths not additive at " + win(g, x); });
    r.check(d.b == decompose(w.inverse()).a, [&] { return "b_w != a_{w^-1} at " + win(g, x); });
    r.check(sigma_longest(n, d.l) * d.sigma == d.sigma_prime * d.sigma_second,
            [&] { return "sigma' sigma'' mismatch at " + win(g, x); });
  }));
  return rep;
}

Report verify_coset_intervals(const Group& g) {
  const int n = g.rank();
  const Rank rank(n);
  // Membership in X_n^(l) S_{l,n-l}, with l = t-length.
  std::vector<char> in_product(g.size(), 0);
  std::vector<Decomposition> dec;
  dec.reserve(g.size());
  for (Index x = 0; x < g.size(); ++x) dec.push_back(decompose(g.element(x)));
  for (const auto& w : g.elements()) {
    if (!in_symmetric_subgroup(w)) continue;
    for (int l = 0; l <= n; ++l) in_product[g.index_of(w * a_element(n, l))] = 1;
  }
  return per_element("coset-intervals", g, [&](Index y, Report& rep) {
    const int l = g.ell_t(y);
    for (Index x : g.bruhat_interval_below(y)) {
      if (g.ell_t(x) != l) continue;
      if (in_product[y]) {
        rep.check(in_product[x] != 0, [&] { return "X S not closed below at " + pair_text(g, x, y); });
      }
      rep.check(bruhat_leq(dec[x].a, dec[y].a) && bruhat_leq(dec[x].b, dec[y].b),
                [&] { return "a or b not monotone at " + pair_text(g, x, y); });
      if (dec[x].b != dec[y].b) continue;
      const Index b = g.index_of(dec[x].b);
      const Index xb = g.multiply(x, b);
      const Index yb = g.multiply(y, b);
      rep.check(g.bruhat_leq(xb, yb), [&] { return "xb <= yb fails at " + pair_text(g, x, y); });
      std::vector<Index> top;
      for (Index z : g.bruhat_interval_below(yb)) {
        if (g.bruhat_leq(xb, z)) top.push_back(z);
      }
      std::vector<Index> bottom;
      for (Index z : g.bruhat_interval_below(y)) {
        if (g.bruhat_leq(x, z)) bottom.push_back(z);
      }
      const Index bi = g.inverse(b);
      std::vector<Index> mapped;
      for (Index z : top) mapped.push_back(g.multiply(z, bi));
      std::sort(mapped.begin(), mapped.end());
      rep.check(mapped == bottom, [&] { return "z -> z b^-1 not onto [x,y] at " + pair_text(g, x, y); });
      bool order_kept = mapped.size() == bottom.size();
      for (std::size_t i = 0; order_kept && i < top.size(); ++i) {
        for (std::size_t j = 0; j < top.size(); ++j) {
          if (g.bruhat_leq(top[i], top[j]) != g.bruhat_leq(g.multiply(top[i], bi), g.multiply(top[j], bi))) {
            order_kept = false;
            break;
          }
        }
      }
      rep.check(order_kept, [&] { return "z -> z b^-1 not an order isomorphism at " + pair_text(g, x, y); });
    }
  });
}

Report verify_rs_bijection(const Group& g) {
  const int n = g.rank();
  Report rep{"rs-bijection"};
  std::set<RSPair> images;
  for (const auto& w : g.elements()) {
    const auto pair = rs_insert(w);
    rep.check(pair.a.is_n_standard(n) && pair.b.is_n_standard(n) && pair.a.shape() == pair.b.shape(),
              [&] { return "RS image of " + format_window(w) + " is not a standard pair"; });
    rep.check(rs_inverse(pair) == w, [&] { return "rs_inverse fails at " + format_window(w); });
    rep.check(transpose_pair(w), [&] { return "A(w^-1) != B(w) at " + format_window(w); });
    images.insert(pair);
  }
  rep.check(images.size() == g.size(), [&] { return "RS is not injective"; });
  std::size_t pairs = 0;
  std::map<Bipartition, std::size_t> per_shape;
  for (const auto& b : standard_bitableaux(n)) ++per_shape[b.shape()];
  for (const auto& [shape, k] : per_shape) pairs += k * k;
  rep.check(pairs == g.size(), [&] { return std::to_string(pairs) + " same-shape pairs vs |W_n|"; });
  return rep;
}

}  // namespace bcell
