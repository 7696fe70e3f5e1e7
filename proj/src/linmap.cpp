#include "gkit/linmap.hpp"

namespace gkit {

LinMap::LinMap(Basis domain, Basis codomain)
    : dom_(std::move(domain)), cod_(std::move(codomain)), cols_(dom_.dim()) {}

LinMap LinMap::identity(const Basis& b) {
  LinMap m(b, b);
  for (int j = 0; j < b.dim(); ++j) m.cols_[j] = {{j, Rational(1)}};
  return m;
}

void LinMap::set_column(const Label& dom_label, const SparseVec& image) {
  cols_.at(dom_.index_of(dom_label)) = cod_.to_ivec(image);
}

void LinMap::set_column_iv(int j, IVec image) { cols_.at(j) = std::move(image); }

SparseVec LinMap::column(const Label& dom_label) const {
  return cod_.to_sparse(cols_.at(dom_.index_of(dom_label)));
}

IVec LinMap::apply_iv(const IVec& v) const {
  IVec out;
  for (const auto& [j, c] : v) ivec_add_scaled(out, cols_.at(j), c);
  return out;
}

SparseVec LinMap::apply(const SparseVec& v) const {
  return cod_.to_sparse(apply_iv(dom_.to_ivec(v)));
}

LinMap LinMap::compose(const LinMap& inner) const {
  if (!(inner.cod_ == dom_))
    throw structural_error("LinMap composition: codomain/domain basis mismatch");
  LinMap out(inner.dom_, cod_);
  for (int j = 0; j < inner.dom_.dim(); ++j) out.cols_[j] = apply_iv(inner.cols_[j]);
  return out;
}

int LinMap::rank() const { return rank_of(cols_, cod_.dim()); }

std::vector<IVec> LinMap::kernel_iv() const { return kernel_of_columns(cols_, cod_.dim()); }

std::vector<SparseVec> LinMap::kernel() const {
  std::vector<SparseVec> out;
  for (const auto& v : kernel_iv()) out.push_back(dom_.to_sparse(v));
  return out;
}

LinMap LinMap::inverse() const {
  if (dom_.dim() != cod_.dim()) throw validation_error("LinMap::inverse: not square");
  LinMap out(cod_, dom_);
  for (int i = 0; i < cod_.dim(); ++i) {
    IVec target = {{i, Rational(1)}};
    IVec sol;
    if (!solve_columns(cols_, cod_.dim(), target, sol))
      throw validation_error("LinMap::inverse: map is not bijective");
    out.cols_[i] = std::move(sol);
  }
  return out;
}

bool LinMap::operator==(const LinMap& o) const {
  return dom_ == o.dom_ && cod_ == o.cod_ && cols_ == o.cols_;
}

}  // namespace gkit
