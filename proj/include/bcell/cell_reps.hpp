#pragma once

// Left cell modules, their specialization at V = v = 1, and irreducible
// characters of W_n labelled by bipartitions.

#include <map>
#include <optional>
#include <vector>

#include "bcell/kl_store.hpp"
#include "bcell/tableau.hpp"

namespace bcell {

/// Square matrix over Z[Gamma], row-major.
struct LaurentMatrix {
  std::size_t n = 0;
  std::vector<Laurent> a;

  LaurentMatrix(std::size_t size, int dim) : n(size), a(size * size, Laurent(dim)) {}
  static LaurentMatrix identity(std::size_t size, int dim);
  Laurent& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const Laurent& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  LaurentMatrix operator*(const LaurentMatrix& o) const;
  LaurentMatrix operator+(const LaurentMatrix& o) const;
  LaurentMatrix scaled(const Laurent& k) const;
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;
};

using IntMatrix = std::vector<std::vector<long long>>;

struct CellModule {
  std::vector<Index> basis;            // the cell, ascending
  std::vector<LaurentMatrix> action;   // T_s per generator index; column j is the image of c_{basis[j]}
  std::size_t dimension() const { return basis.size(); }
};

/// Action of T_s on the residue classes of C_w, w in the cell, modulo the
/// strictly lower ideal.
CellModule cell_module(const KLStore& store, const CellPartition& cells, std::size_t cell);

/// Quadratic and braid relations of the Hecke algebra on the module.
bool satisfies_hecke_relations(const KLStore& store, const CellModule& m);

/// Entries evaluated at V = v = 1.
std::vector<IntMatrix> specialize_at_one(const CellModule& m);

/// Signed cycle type: lengths of cycles with an even and with an odd number of sign changes.
Bipartition signed_cycle_type(const SignedPermutation& w);

struct ConjugacyClass {
  Bipartition label;
  std::size_t size = 0;
  Index representative = 0;
};

/// One class per bipartition of n, in the order of bipartitions(n).
std::vector<ConjugacyClass> conjugacy_classes(const Group& g);

/// Values indexed like conjugacy_classes(g).
using CharacterVector = std::vector<long long>;

/// chi_lambda(rho) for the symmetric group, by the Murnaghan-Nakayama rule.
long long symmetric_character(const Partition& lambda, const Partition& rho);

/// Irreducible character of W_n attached to (lambda, mu): induced from
/// W_|lambda| x W_|mu| of chi_lambda(|h1|) chi_mu(|h2|) (-1)^{negatives of h2}.
CharacterVector irreducible_character(const Group& g, const std::vector<ConjugacyClass>& classes,
                                      const Bipartition& bp);

CharacterVector character_of_module(const Group& g, const std::vector<ConjugacyClass>& classes,
                                    const std::vector<IntMatrix>& specialized);

/// Class-size weighted inner product, divided by |W_n|; throws if not integral.
long long inner_product(const std::vector<ConjugacyClass>& classes, const CharacterVector& a,
                        const CharacterVector& b, std::size_t group_order);

struct CellIdentification {
  Bipartition shape;                    // RS shape of the cell
  Bipartition expected;                 // (mu, lambda*)
  std::vector<Bipartition> matches;     // irreducible characters equal to the cell character
  CharacterVector values;
  std::size_t dimension = 0;
  bool ok() const { return matches.size() == 1 && matches.front() == expected; }
};

CellIdentification identify_cell(const KLStore& store, const CellPartition& cells, std::size_t cell,
                                 const std::vector<ConjugacyClass>& classes,
                                 const std::map<Bipartition, CharacterVector>& table);

std::map<Bipartition, CharacterVector> character_table(const Group& g, const std::vector<ConjugacyClass>& classes);

}  // namespace bcell
