#pragma once

#include "gkit/action.hpp"
#include "gkit/weak_bialgebra.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gkit {

inline Label smash_label(const Label& a, const Label& h) { return "(" + a + ")#v(" + h + ")"; }

// G-graded algebra: a unital algebra whose basis is partitioned by groupoid
// elements; A_g is the span of the fiber over g.
struct GradedAlgebra {
  GroupoidPtr groupoid;
  AlgebraPtr algebra;               // A, unital
  std::map<Label, Label> grade;     // basis label -> arrow
  std::map<Label, std::vector<Label>> fibers;  // arrow -> fiber labels (A order)
  std::vector<Label> j0;            // identities e with A_e != 0, in arrow order
  std::map<Label, SparseVec> fiber_units;      // e in J0 -> 1_e, where one exists

  const std::vector<Label>& fiber(const Label& g) const;
  Label grade_of(const Label& basis_label) const;
};

GradedAlgebra make_graded(GroupoidPtr g, AlgebraPtr algebra, std::map<Label, Label> grade);

struct GradingReport {
  bool ok = false;
  std::vector<ActionCheckItem> items;  // same shape: name/ok/witness
};

// Grading law on all basis pairs plus the five unital-graded-algebra
// consequences (J0 finiteness, vanishing outside J0, unital A_e, 1_A = Σ 1_e,
// local unit law).
GradingReport validate_grading(const GradedAlgebra& a);

// KG*-module structure induced by the grading: v_h · x = x_h (projection onto
// the degree-h component).
SparseVec dual_action(const GradedAlgebra& a, const Label& h, const SparseVec& x);

// Weak smash product A # KG*: A ⊗ KG* with
// (a#v_g)(b#v_h) = a (v_{gh^{-1}}·b) # v_h when d(g)=d(h), else 0.
struct SmashProduct {
  GroupoidPtr groupoid;
  AlgebraPtr algebra;   // B; carries a unit only in the degenerate unital case
  AlgebraPtr source;    // A
  std::map<Label, Label> source_grade;
  std::vector<std::pair<int, int>> parts;  // B index -> (A index, arrow index)
  SparseVec preunit;    // 1_A # 1_{KG*}
  bool preunit_law_ok = false;   // ux = xu = xu² on all basis x
  bool unital = false;           // exact: a two-sided unit exists
  // First basis element b#v_h with b ∈ A_k, d(k) != r(h); annihilates B from
  // the right. Absent exactly in the degenerate unital cases.
  std::optional<Label> right_annihilator;
  bool annihilator_verified = false;
};

SmashProduct smash(const GradedAlgebra& a);

// Induced action of G on B = A#KG*: E_g = span{ a_l # v_k : d(k)=r(g) },
// beta_g(a_l # v_k) = a_l # v_{k g^{-1}}. Components are typically non-unital.
GroupoidAction smash_action(const SmashProduct& s);

struct SmashSkewResult {
  SkewGroupoidRing ring;  // C = B ⋆_beta G
  bool unital = false;
  std::optional<Label> left_annihilator;  // (a_j#v_k)δ_s with d(k)=r(s), r(k)!=d(j)
  bool annihilator_verified = false;
};

SmashSkewResult smash_skew_ring(const GroupoidAction& beta, const SmashProduct& b);

}  // namespace gkit
