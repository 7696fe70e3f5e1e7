#pragma once

#include "gkit/rational.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace gkit {

// Index-coordinate sparse vector: (index, coeff) pairs sorted by index, no
// zeros. The workhorse representation for all exact linear algebra; label
// translation happens at module boundaries.
using IVec = std::vector<std::pair<int, Rational>>;

IVec ivec_scaled(const IVec& v, const Rational& c);
void ivec_add_scaled(IVec& dst, const IVec& src, const Rational& c);  // dst += c*src
bool ivec_equal(const IVec& a, const IVec& b);

// Row space in reduced echelon form over an n-dimensional coordinate space.
// Pivot = smallest nonzero index of a row; rows are normalized to pivot
// coefficient 1 and fully back-eliminated, so reduce() residues are canonical.
class EchelonSpace {
 public:
  explicit EchelonSpace(int n) : n_(n) {}

  // Residue of v after eliminating against the stored rows.
  IVec reduce(IVec v) const;
  // Inserts v's residue; returns true iff the dimension grew.
  bool insert(IVec v);
  bool contains(const IVec& v) const { return reduce(v).empty(); }

  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient_dim() const { return n_; }
  // pivot -> normalized row, ordered by pivot.
  const std::map<int, IVec>& rows() const { return rows_; }
  std::vector<IVec> basis() const;
  std::vector<int> pivots() const;

 private:
  int n_;
  std::map<int, IVec> rows_;
};

// Rank of a family of vectors in an n-dimensional space.
int rank_of(const std::vector<IVec>& vecs, int n);

// Kernel of the linear map with the given columns (images of the domain basis
// in an n-dimensional codomain). Returns a deterministic basis of
// { x : sum_j x_j col_j = 0 }, echelonized over the domain coordinates.
std::vector<IVec> kernel_of_columns(const std::vector<IVec>& columns, int codomain_dim);

// Solves sum_j x_j col_j = target exactly. Returns false if inconsistent.
bool solve_columns(const std::vector<IVec>& columns, int codomain_dim, const IVec& target,
                   IVec& solution);

}  // namespace gkit
