#pragma once

// Kazhdan-Lusztig tables P*_{y,w} and M^s_{y,w} of W_n for a chosen order on
// the parameter group, together with C-basis products and left cells.

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "bcell/group.hpp"
#include "bcell/laurent.hpp"

namespace bcell {

/// Largest rank the KL tables are built for.
inline constexpr int kKLMaxRank = 5;

class ContractError : public Error {
 public:
  using Error::Error;
};

/// Sorted sparse column: rows ascending, values nonzero.
struct SparseColumn {
  std::vector<Index> rows;
  std::vector<Laurent> values;

  const Laurent* find(Index row) const;
  std::size_t size() const { return rows.size(); }
  friend bool operator==(const SparseColumn&, const SparseColumn&) = default;
};

enum class Basis { T, C };

struct CExpansion {
  Basis basis = Basis::C;
  std::map<Index, Laurent> coefficients;  // zero entries never stored
};

enum class BuildMode { serial, parallel };

class KLStore {
 public:
  /// Empty tables; fill with build() or through the cache loader.
  KLStore(std::shared_ptr<const Group> group, OrderSpec spec);

  static KLStore build(std::shared_ptr<const Group> group, OrderSpec spec, BuildMode mode = BuildMode::parallel);

  const Group& group() const { return *group_; }
  const std::shared_ptr<const Group>& group_ptr() const { return group_; }
  const OrderSpec& spec() const { return spec_; }
  int dim() const { return spec_.dim(); }

  /// Zero unless y <= w.
  Laurent pstar(Index y, Index w) const;
  const SparseColumn& pstar_column(Index w) const { return pstar_[w]; }
  /// v_y^{-1} v_w P*_{y,w}.
  Laurent p(Index y, Index w) const;

  /// Requires s y < y < w < s w; throws ContractError otherwise.
  Laurent m(Generator s, Index y, Index w) const;
  /// Nonzero M^s_{z,w} over z; empty when s w < w.
  const SparseColumn& m_column(Generator s, Index w) const { return m_[s.index() * group_->size() + w]; }

  Gamma weight(Index w) const { return spec_.element_weight(group_->ell_t(w), group_->ell_s(w)); }
  Laurent monomial(const Gamma& g) const { return Laurent::monomial(dim(), g); }
  /// v_s + v_s^{-1}.
  Laurent quantum_two(Generator s) const;

  /// T-basis coordinates of C_w.
  CExpansion c_basis(Index w) const;
  /// C-basis coordinates of C_s C_w.
  CExpansion c_product_left(Generator s, Index w) const;

  std::size_t pstar_count() const;
  std::size_t m_count() const;

  /// Raw column access used by the cache loader.
  void set_pstar_column(Index w, SparseColumn col) { pstar_[w] = std::move(col); }
  void set_m_column(Generator s, Index w, SparseColumn col) { m_[s.index() * group_->size() + w] = std::move(col); }

  friend bool operator==(const KLStore& a, const KLStore& b) {
    return a.spec_ == b.spec_ && a.group_->rank() == b.group_->rank() && a.pstar_ == b.pstar_ && a.m_ == b.m_;
  }

 private:
  void compute_pstar_column(Index w);
  void compute_m_columns(Index w);

  std::shared_ptr<const Group> group_;
  OrderSpec spec_;
  std::vector<SparseColumn> pstar_;
  std::vector<SparseColumn> m_;
};

/// R_{y,w} from the descent recursion, dense over all pairs.
class RTable {
 public:
  explicit RTable(const KLStore& store);
  const Laurent& operator()(Index y, Index w) const { return r_[static_cast<std::size_t>(w) * size_ + y]; }

 private:
  std::size_t size_;
  std::vector<Laurent> r_;
};

/// Largest rank for which RTable is built (dense |W_n|^2 storage).
inline constexpr int kRTableMaxRank = 4;

/// Partition into left cells with the induced order between cells.
struct CellPartition {
  /// Each cell sorted ascending; cells sorted by their first element.
  std::vector<std::vector<Index>> cells;
  std::vector<int> cell_of;
  /// below[i] has bit j iff cell j <=_L cell i (reflexive).
  std::vector<BitRow> below;

  bool leq(int lower, int upper) const { return below[upper].test(static_cast<std::size_t>(lower)); }
  std::size_t size() const { return cells.size(); }
};

/// Edges w -> y whenever C_y occurs in C_s C_w for a generator s in `gens`,
/// restricted to `domain` (all of W_n when empty).
CellPartition left_cells(const KLStore& store);
CellPartition left_cells_restricted(const KLStore& store, GeneratorSet gens, const std::vector<Index>& domain);

/// All generators of W_n as a set.
GeneratorSet all_generators(int n);

}  // namespace bcell
