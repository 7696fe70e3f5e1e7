#pragma once

#include "gkit/algebra.hpp"
#include "gkit/groupoid.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gkit {

inline Label delta_label(const Label& x, const Label& g) { return "(" + x + ")d(" + g + ")"; }

// Groupoid action beta on an algebra R: per-identity components E_e given as
// sub-bases of R (E_g := E_{r(g)}), and ring isomorphisms
// beta_g : E_{g^{-1}} -> E_g. Components may be non-unital (the smash-product
// action is); operations that need unital components say so.
struct GroupoidAction {
  GroupoidPtr groupoid;
  AlgebraPtr total;  // R
  std::map<Label, std::vector<Label>> components;  // e -> sub-basis of R, in R order
  std::map<Label, LinMap> beta;                    // g -> E_{d(g)} -> E_{r(g)}
  std::map<Label, SparseVec> component_units;      // e -> 1_e, where one exists

  const std::vector<Label>& component(const Label& e) const;
  const std::vector<Label>& component_of_arrow(const Label& g) const;  // E_g = E_{r(g)}
  bool components_unital() const;   // every E_e has a computed unit
  SparseVec unit_of(const Label& e) const;
};

// Structural assembly: checks the components partition R's basis and the beta
// maps carry the right bases (identity arrows may be omitted; they default to
// the identity map). Computes component units where they exist. Law checking
// is validate_action's job.
GroupoidAction make_action(GroupoidPtr g, AlgebraPtr total,
                           std::map<Label, std::vector<Label>> components,
                           std::map<Label, LinMap> beta);

struct ActionCheckItem {
  std::string name;
  bool ok = false;
  std::string witness;
};

struct ActionReport {
  bool ok = false;                  // all required checks hold
  bool components_unital = false;   // every E_e has a verified identity
  std::vector<ActionCheckItem> items;
};

// Checks the action axioms exhaustively: each E_e an ideal, R = ⊕ E_e, each
// beta_g a ring isomorphism, beta_e = id, beta_g beta_h = beta_{gh} on
// composable pairs. Component unitality is required only when asked for
// (the duality pipeline needs it); the smash action runs with it off.
ActionReport validate_action(const GroupoidAction& a, bool require_unital_components = true);

bool actions_equal(const GroupoidAction& a, const GroupoidAction& b);

// KG-module algebra structure on R: the maps r ↦ u_g · r.
struct ModuleAlgebra {
  GroupoidPtr groupoid;
  AlgebraPtr algebra;             // unital R
  std::map<Label, LinMap> action; // g -> R -> R
};

struct ModuleReport {
  bool ok = false;
  std::vector<ActionCheckItem> items;
};
ModuleReport check_module(const ModuleAlgebra& m);

// Action to module-algebra structure: u_g · r = beta_g(r 1_{g^{-1}}). Requires unital
// components; the result is re-checked exhaustively.
ModuleAlgebra action_to_module(const GroupoidAction& a);

// Module-algebra structure to action: 1_g = u_g · 1_R, E_g = R 1_g, beta_g = u_g · (-).
// Component bases are decided by exact column reduction of r ↦ r 1_e; if that
// span is not aligned with R's basis labels the action type cannot represent
// it and a validation_error is raised.
GroupoidAction module_to_action(const ModuleAlgebra& m);

// Skew groupoid ring R ⋆_beta G = ⊕_g E_g δ_g with
// (x δ_g)(y δ_h) = x beta_g(y) δ_{gh} when (g,h) composable, else 0.
struct SkewGroupoidRing {
  GroupoidPtr groupoid;
  AlgebraPtr algebra;
  AlgebraPtr total_R;
  std::vector<std::pair<int, int>> parts;  // basis index -> (R basis index, arrow index)
  std::map<Label, Label> grade;            // basis label -> g (the E_g δ_g fiber)
};

// Unital iff the action has unital components (then 1 = Σ 1_e δ_e); the smash
// action's skew ring is built without a unit.
SkewGroupoidRing skew_ring(const GroupoidAction& a);

}  // namespace gkit
