#pragma once

#include "gkit/basis.hpp"

#include <vector>

namespace gkit {

// Exact linear map between labeled bases, stored column-wise. Hosts the
// isomorphisms beta_g and every assembled decomposition map.
class LinMap {
 public:
  LinMap() = default;
  LinMap(Basis domain, Basis codomain);

  static LinMap identity(const Basis& b);
  static LinMap zero(Basis domain, Basis codomain) { return LinMap(std::move(domain), std::move(codomain)); }

  const Basis& domain() const { return dom_; }
  const Basis& codomain() const { return cod_; }

  void set_column(const Label& dom_label, const SparseVec& image);
  void set_column_iv(int j, IVec image);
  const IVec& column_iv(int j) const { return cols_.at(j); }
  SparseVec column(const Label& dom_label) const;

  SparseVec apply(const SparseVec& v) const;
  IVec apply_iv(const IVec& v) const;

  // this ∘ inner (inner first).
  LinMap compose(const LinMap& inner) const;

  int rank() const;
  int nullity() const { return dom_.dim() - rank(); }
  std::vector<SparseVec> kernel() const;
  std::vector<IVec> kernel_iv() const;
  bool is_bijective() const { return dom_.dim() == cod_.dim() && rank() == dom_.dim(); }
  LinMap inverse() const;  // throws validation_error if not bijective

  bool operator==(const LinMap& o) const;

 private:
  Basis dom_;
  Basis cod_;
  std::vector<IVec> cols_;
};

}  // namespace gkit
