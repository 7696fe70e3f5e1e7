#pragma once

#include "gkit/linalg.hpp"
#include "gkit/sparse_vec.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace gkit {

// Ordered label basis with index translation. Order is construction order and
// fixes every deterministic choice downstream (pivots, representatives).
class Basis {
 public:
  Basis() = default;
  explicit Basis(std::vector<Label> labels);

  int dim() const { return static_cast<int>(labels_.size()); }
  const std::vector<Label>& labels() const { return labels_; }
  const Label& label(int i) const { return labels_.at(i); }

  int index_of(const Label& l) const;  // throws structural_error if absent
  int try_index(const Label& l) const; // -1 if absent
  bool contains(const Label& l) const { return try_index(l) >= 0; }

  IVec to_ivec(const SparseVec& v) const;  // throws on labels outside the basis
  SparseVec to_sparse(const IVec& v) const;

  bool operator==(const Basis& o) const { return labels_ == o.labels_; }

 private:
  std::vector<Label> labels_;
  std::unordered_map<Label, int> index_;
};

}  // namespace gkit
