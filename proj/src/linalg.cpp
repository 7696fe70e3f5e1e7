#include "gkit/linalg.hpp"

#include <algorithm>

namespace gkit {

IVec ivec_scaled(const IVec& v, const Rational& c) {
  if (c == 0) return {};
  IVec out = v;
  for (auto& [i, x] : out) x *= c;
  return out;
}

void ivec_add_scaled(IVec& dst, const IVec& src, const Rational& c) {
  if (c == 0 || src.empty()) return;
  IVec out;
  out.reserve(dst.size() + src.size());
  auto a = dst.begin();
  auto b = src.begin();
  while (a != dst.end() && b != src.end()) {
    if (a->first < b->first) {
      out.push_back(*a++);
    } else if (a->first > b->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Rational x = a->second + c * b->second;
      if (x != 0) out.emplace_back(a->first, std::move(x));
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), a, dst.end());
  for (; b != src.end(); ++b) out.emplace_back(b->first, c * b->second);
  // trailing scaled entries may be zero only if c was zero, handled above
  dst = std::move(out);
}

bool ivec_equal(const IVec& a, const IVec& b) { return a == b; }

IVec EchelonSpace::reduce(IVec v) const {
  // Rows are back-eliminated, so a single forward sweep suffices.
  for (std::size_t k = 0; k < v.size();) {
    auto it = rows_.find(v[k].first);
    if (it == rows_.end()) {
      ++k;
      continue;
    }
    Rational c = v[k].second;  // row pivot coeff is 1
    ivec_add_scaled(v, it->second, -c);
    // v[k] got annihilated; indices before k are untouched (row pivot is its
    // smallest index), so k still points at the first unexamined entry.
  }
  return v;
}

bool EchelonSpace::insert(IVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Rational inv = Rational(1) / v.front().second;
  for (auto& [i, x] : v) x *= inv;
  int pivot = v.front().first;
  // Back-eliminate the new pivot from existing rows to keep residues canonical.
  for (auto& [p, row] : rows_) {
    auto it = std::lower_bound(row.begin(), row.end(), pivot,
                               [](const auto& e, int idx) { return e.first < idx; });
    if (it != row.end() && it->first == pivot) {
      Rational c = it->second;
      ivec_add_scaled(row, v, -c);
    }
  }
  rows_.emplace(pivot, std::move(v));
  return true;
}

std::vector<IVec> EchelonSpace::basis() const {
  std::vector<IVec> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(row);
  return out;
}

std::vector<int> EchelonSpace::pivots() const {
  std::vector<int> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(p);
  return out;
}

int rank_of(const std::vector<IVec>& vecs, int n) {
  EchelonSpace sp(n);
  for (const auto& v : vecs) sp.insert(v);
  return sp.dim();
}

std::vector<IVec> kernel_of_columns(const std::vector<IVec>& columns, [[maybe_unused]] int codomain_dim) {
  const int d = static_cast<int>(columns.size());
  // Eliminate images while tracking preimages; a column reducing to zero yields
  // a kernel vector. Echelonize the kernel vectors for a canonical basis.
  struct Row {
    IVec image;    // normalized, pivot coeff 1
    IVec preimage; // combination producing it
  };
  std::map<int, Row> rows;  // pivot in codomain -> row
  EchelonSpace kernel(d);
  for (int j = 0; j < d; ++j) {
    IVec img = columns[j];
    IVec pre = {{j, Rational(1)}};
    for (std::size_t k = 0; k < img.size();) {
      auto it = rows.find(img[k].first);
      if (it == rows.end()) {
        ++k;
        continue;
      }
      Rational c = img[k].second;
      ivec_add_scaled(img, it->second.image, -c);
      ivec_add_scaled(pre, it->second.preimage, -c);
    }
    if (img.empty()) {
      kernel.insert(std::move(pre));
    } else {
      Rational inv = Rational(1) / img.front().second;
      for (auto& [i, x] : img) x *= inv;
      for (auto& [i, x] : pre) x *= inv;
      int pivot = img.front().first;
      rows.emplace(pivot, Row{std::move(img), std::move(pre)});
    }
  }
  return kernel.basis();
}

bool solve_columns(const std::vector<IVec>& columns, [[maybe_unused]] int codomain_dim,
                   const IVec& target, IVec& solution) {
  struct Row {
    IVec image;
    IVec preimage;
  };
  std::map<int, Row> rows;
  const int d = static_cast<int>(columns.size());
  for (int j = 0; j < d; ++j) {
    IVec img = columns[j];
    IVec pre = {{j, Rational(1)}};
    for (std::size_t k = 0; k < img.size();) {
      auto it = rows.find(img[k].first);
      if (it == rows.end()) {
        ++k;
        continue;
      }
      Rational c = img[k].second;
      ivec_add_scaled(img, it->second.image, -c);
      ivec_add_scaled(pre, it->second.preimage, -c);
    }
    if (!img.empty()) {
      Rational inv = Rational(1) / img.front().second;
      for (auto& [i, x] : img) x *= inv;
      for (auto& [i, x] : pre) x *= inv;
      int pivot = img.front().first;
      rows.emplace(pivot, Row{std::move(img), std::move(pre)});
    }
  }
  IVec residue = target;
  IVec combo;
  for (std::size_t k = 0; k < residue.size();) {
    auto it = rows.find(residue[k].first);
    if (it == rows.end()) {
      ++k;
      continue;
    }
    Rational c = residue[k].second;
    ivec_add_scaled(residue, it->second.image, -c);
    ivec_add_scaled(combo, it->second.preimage, c);
  }
  if (!residue.empty()) return false;
  solution = std::move(combo);
  return true;
}

}  // namespace gkit
