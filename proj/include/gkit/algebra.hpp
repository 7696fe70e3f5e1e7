#pragma once

#include "gkit/linmap.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gkit {

enum class ExecPolicy { Serial, Parallel };

// Finite-dimensional associative algebra presented by exact structure
// constants on a labeled basis. An absent (x,y) entry means x*y = 0.
// Universal carrier for every algebra in the toolkit: R, KG, KG*, skew rings,
// smash products, corners, matrix blocks.
class FiniteDimAlgebra {
 public:
  FiniteDimAlgebra() = default;
  FiniteDimAlgebra(std::vector<Label> basis_labels,
                   const std::map<std::pair<Label, Label>, SparseVec>& structconst,
                   std::optional<SparseVec> unit);
  // Index-level constructor for builders; prod is n*n flattened, row-major.
  FiniteDimAlgebra(Basis basis, std::vector<IVec> prod, std::optional<IVec> unit);

  int dim() const { return basis_.dim(); }
  const Basis& basis() const { return basis_; }
  const Label& label(int i) const { return basis_.label(i); }
  int index_of(const Label& l) const { return basis_.index_of(l); }

  const IVec& prod(int i, int j) const { return prod_[static_cast<std::size_t>(i) * dim() + j]; }

  IVec mul_iv(const IVec& a, const IVec& b) const;
  SparseVec mul(const SparseVec& a, const SparseVec& b) const;

  bool has_unit() const { return unit_.has_value(); }
  const IVec& unit_iv() const;
  SparseVec unit() const { return basis_.to_sparse(unit_iv()); }

  bool is_commutative() const;

 private:
  Basis basis_;
  std::vector<IVec> prod_;
  std::optional<IVec> unit_;
};

using AlgebraPtr = std::shared_ptr<const FiniteDimAlgebra>;

struct AlgCheckReport {
  bool associative = false;
  bool unital = false;  // true iff a unit is declared and verified
  bool unit_declared = false;
  // witnesses
  std::optional<std::array<Label, 3>> assoc_witness;  // (x,y,z) with (xy)z != x(yz)
  std::optional<Label> unit_witness;                  // x with 1*x != x or x*1 != x
};

// Exhaustive associativity over all basis triples plus unit verification.
AlgCheckReport alg_check(const FiniteDimAlgebra& a, ExecPolicy policy = ExecPolicy::Parallel);

// Algebra homomorphism candidate: a linear map between the basis spans of two
// algebras, checked (never assumed) to be multiplicative.
struct AlgebraHom {
  AlgebraPtr dom;
  AlgebraPtr cod;
  LinMap map;
};

struct HomCheckReport {
  bool multiplicative = false;
  bool unital = false;       // h(1_dom) == 1_cod; false when either unit is missing
  bool units_present = false;
  bool bijective = false;
  std::optional<std::array<Label, 2>> mult_witness;  // (x,y) with h(x)h(y) != h(xy)
};

HomCheckReport hom_check(const AlgebraHom& h, ExecPolicy policy = ExecPolicy::Parallel);

// Smallest multiplicatively closed subspace of `a` containing `gens`,
// materialized with induced structure constants on an echelon basis (labeled
// by pivot). `embedding` maps the span basis back into `a`.
struct SubAlgebra {
  FiniteDimAlgebra alg;
  LinMap embedding;
};
SubAlgebra subalg_span(const FiniteDimAlgebra& a, const std::vector<SparseVec>& gens);

// Two-sided unit of the span of an algebra, found by exact linear solve.
std::optional<IVec> find_unit_iv(const FiniteDimAlgebra& a);

// Quotient of the span of `space` by span(relations). The section is chosen
// from the original labels by leading-term elimination: quotient basis = the
// non-pivot labels, in their original order.
struct QuotientSpace {
  std::vector<Label> quotient_basis;
  LinMap projection;  // space -> quotient basis
};
QuotientSpace quotient_space(const Basis& space, const std::vector<SparseVec>& relations);

// Restriction of `a` to a subset of its basis labels; throws internal_error if
// the subset is not multiplicatively closed (that closure is always a theorem
// where this is used).
FiniteDimAlgebra restrict_to_labels(const FiniteDimAlgebra& a, const std::vector<Label>& subset,
                                    std::optional<SparseVec> unit);

// n x n matrix algebra over `coeff`, basis "E[i,j](c)"; requires a unital coeff.
FiniteDimAlgebra matrix_algebra(int n, const FiniteDimAlgebra& coeff);

// External direct sum; labels get "tag:" prefixes, unit = sum of block units
// when every block is unital.
FiniteDimAlgebra direct_sum(const std::vector<std::pair<std::string, const FiniteDimAlgebra*>>& blocks);

// True iff elem commutes with every basis element; otherwise returns the first
// non-commuting basis index.
std::optional<int> find_noncentral_witness(const FiniteDimAlgebra& a, const IVec& elem);

// u*x == x == x*u for every basis x.
bool is_unit_element(const FiniteDimAlgebra& a, const IVec& u);

}  // namespace gkit
