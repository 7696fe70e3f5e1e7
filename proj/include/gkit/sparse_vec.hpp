#pragma once

#include "gkit/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace gkit {

using Label = std::string;

// Sparse vector over an opaque label basis. Invariant: no stored zeros.
// std::map keeps iteration order deterministic (lexicographic by label),
// which the reports rely on.
class SparseVec {
 public:
  SparseVec() = default;

  static SparseVec basis(const Label& l, Rational c = 1) {
    SparseVec v;
    v.add(l, std::move(c));
    return v;
  }

  void add(const Label& l, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = entries_.try_emplace(l, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) entries_.erase(it);
    }
  }

  Rational coeff(const Label& l) const {
    auto it = entries_.find(l);
    return it == entries_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }

  SparseVec& operator+=(const SparseVec& o) {
    for (const auto& [l, c] : o.entries_) add(l, c);
    return *this;
  }
  SparseVec& operator-=(const SparseVec& o) {
    for (const auto& [l, c] : o.entries_) add(l, -c);
    return *this;
  }
  SparseVec& operator*=(const Rational& c) {
    if (c == 0) {
      entries_.clear();
      return *this;
    }
    for (auto& [l, v] : entries_) v *= c;
    return *this;
  }

  friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
  friend SparseVec operator*(const Rational& c, SparseVec v) { return v *= c; }

  bool operator==(const SparseVec& o) const { return entries_ == o.entries_; }

  const std::map<Label, Rational>& entries() const { return entries_; }

  std::string to_string() const {
    if (entries_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [l, c] : entries_) {
      if (!first) s += " + ";
      first = false;
      if (c != 1) s += rational_to_string(c) + "*";
      s += l;
    }
    return s;
  }

 private:
  std::map<Label, Rational> entries_;
};

}  // namespace gkit
