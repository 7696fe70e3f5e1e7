#pragma once

#include "gkit/basis.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gkit {

class Groupoid;
using GroupoidPtr = std::shared_ptr<const Groupoid>;

// Finite groupoid: arrow set with an explicit partial composition table,
// inverses, domain/range identities. Builders go through the same table
// representation so every groupoid takes the same validation path.
class Groupoid {
 public:
  Groupoid(std::vector<Label> arrows, std::map<std::pair<Label, Label>, Label> compose,
           std::map<Label, Label> inv, std::map<Label, Label> dmap, std::map<Label, Label> rmap,
           std::vector<Label> identities);

  // Derives d(g) = g^{-1}g, r(g) = g g^{-1} and the identity set from the
  // tables (the JSON loader path).
  static Groupoid from_tables(std::vector<Label> arrows,
                              std::map<std::pair<Label, Label>, Label> compose,
                              std::map<Label, Label> inv);

  int size() const { return arrows_.dim(); }
  const std::vector<Label>& arrows() const { return arrows_.labels(); }
  const Label& arrow(int i) const { return arrows_.label(i); }
  int index_of(const Label& l) const { return arrows_.index_of(l); }
  const Basis& arrow_basis() const { return arrows_; }

  bool composable(const Label& g, const Label& h) const { return comp_i(index_of(g), index_of(h)) >= 0; }
  Label compose(const Label& g, const Label& h) const;
  Label inv(const Label& g) const { return arrow(inv_i(index_of(g))); }
  Label d(const Label& g) const { return arrow(d_i(index_of(g))); }
  Label r(const Label& g) const { return arrow(r_i(index_of(g))); }

  int comp_i(int i, int j) const { return comp_[static_cast<std::size_t>(i) * size() + j]; }
  int inv_i(int i) const { return inv_[i]; }
  int d_i(int i) const { return d_[i]; }
  int r_i(int i) const { return r_[i]; }
  bool is_identity_i(int i) const { return is_id_[i]; }
  bool is_identity(const Label& l) const { return is_id_[index_of(l)]; }

  // Identity arrows in arrow order.
  const std::vector<Label>& identities() const { return identities_; }
  std::vector<int> identity_indices() const;

 private:
  Basis arrows_;
  std::vector<int> comp_;  // size*size, -1 where undefined
  std::vector<int> inv_;
  std::vector<int> d_;
  std::vector<int> r_;
  std::vector<char> is_id_;
  std::vector<Label> identities_;
};

struct GroupoidViolation {
  std::string rule;     // "axiom(i)".."axiom(iv)", "derived(i)".."derived(x)", "identities"
  std::string witness;  // concrete tuple rendered as text
};

struct GroupoidReport {
  bool ok = false;
  std::vector<GroupoidViolation> violations;
};

// Exhaustive check of the four groupoid axioms and the ten derived laws
// (inverse uniqueness through solvability). O(|G|^3); fine at desk scale.
GroupoidReport validate(const Groupoid& g);

// Derived arrow sets: isotropy G_e, sources S_e, ranges T_e, composable pairs.
struct ArrowSets {
  std::map<Label, std::vector<Label>> isotropy;  // e -> G_e
  std::map<Label, std::vector<Label>> sources;   // e -> S_e = {g : d(g)=e}
  std::map<Label, std::vector<Label>> ranges;    // e -> T_e = {g : r(g)=e}
  std::vector<std::pair<Label, Label>> composable;
};
ArrowSets arrow_sets(const Groupoid& g);

// Builders.
Groupoid from_group(const std::vector<Label>& elements,
                    const std::map<std::pair<Label, Label>, Label>& mult_table);
Groupoid pair_groupoid(int n);
Groupoid disjoint_union(const Groupoid& g1, const Groupoid& g2, const std::string& tag1 = "a",
                        const std::string& tag2 = "b");

}  // namespace gkit
