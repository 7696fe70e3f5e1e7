#include "gkit/basis.hpp"

namespace gkit {

Basis::Basis(std::vector<Label> labels) : labels_(std::move(labels)) {
  index_.reserve(labels_.size());
  for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
    auto [it, inserted] = index_.emplace(labels_[i], i);
    if (!inserted) throw structural_error("duplicate basis label: '" + labels_[i] + "'");
  }
}

int Basis::index_of(const Label& l) const {
  auto it = index_.find(l);
  if (it == index_.end()) throw structural_error("label outside basis: '" + l + "'");
  return it->second;
}

int Basis::try_index(const Label& l) const {
  auto it = index_.find(l);
  return it == index_.end() ? -1 : it->second;
}

IVec Basis::to_ivec(const SparseVec& v) const {
  IVec out;
  out.reserve(v.support_size());
  for (const auto& [l, c] : v.entries()) out.emplace_back(index_of(l), c);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

SparseVec Basis::to_sparse(const IVec& v) const {
  SparseVec out;
  for (const auto& [i, c] : v) out.add(labels_.at(i), c);
  return out;
}

}  // namespace gkit
