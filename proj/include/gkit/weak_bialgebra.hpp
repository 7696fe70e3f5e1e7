#pragma once

#include "gkit/algebra.hpp"
#include "gkit/groupoid.hpp"

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace gkit {

// Sparse elements of H⊗H and H⊗H⊗H over basis indices of H.
using Tensor2 = std::map<std::pair<int, int>, Rational>;
using Tensor3 = std::map<std::array<int, 3>, Rational>;

inline Label u_label(const Label& g) { return "u(" + g + ")"; }
inline Label v_label(const Label& g) { return "v(" + g + ")"; }

// Common carrier for the groupoid algebra KG and its dual KG*: algebra,
// comultiplication and counit on the basis, and the antipode map used in the
// final-remarks pipeline.
struct WeakBialgebra {
  GroupoidPtr groupoid;
  AlgebraPtr algebra;
  std::vector<Tensor2> comult;    // per basis index
  std::vector<Rational> counit;   // per basis index
  LinMap antipode;                // S(u_g)=u_{g^{-1}} resp. S(v_g)=v_{g^{-1}}
  std::string kind;               // "KG" or "KG*"

  Tensor2 comult_of(const IVec& x) const;
  Rational counit_of(const IVec& x) const;
  Tensor2 comult_unit() const { return comult_of(algebra->unit_iv()); }
};

struct GroupoidAlgebra : WeakBialgebra {};
struct DualGroupoidAlgebra : WeakBialgebra {};

GroupoidAlgebra build_kg(const GroupoidPtr& g);
DualGroupoidAlgebra build_kgdual(const GroupoidPtr& g);

struct WeakAxiomItem {
  std::string name;
  bool ok = false;
  std::string witness;  // empty when ok
};

struct WeakAxiomsReport {
  // axiom(i): Δ(xy)=Δ(x)Δ(y); axiom(ii): Δ²(1) compatibility;
  // axiom(iii): ε(xyz) expansions; plus coalgebra laws.
  std::vector<WeakAxiomItem> items;
  bool is_bialgebra = false;            // Δ(1) == 1⊗1
  bool checked_not_bialgebra = false;   // set when |G₀|>1: Δ(1) != 1⊗1 confirmed
  bool ok = false;                      // all items hold
};

WeakAxiomsReport weak_axioms(const WeakBialgebra& h, ExecPolicy policy = ExecPolicy::Parallel);

// ε_t(x) = Σ ε(1₁ x) 1₂, assembled from Δ(1).
LinMap epsilon_t_map(const WeakBialgebra& h);
SparseVec epsilon_t(const WeakBialgebra& h, const SparseVec& x);

// Target counital subalgebra H_t = { x : ε_t(x) = x }, computed as the exact
// kernel of (ε_t − id) and cross-checked against the closed forms
// KG_t = ⊕_e K u_e and KG*_t = Σ_e K (Σ_{h: r(h)=e} v_h).
struct TargetSubalgebra {
  std::string parent_kind;
  std::vector<SparseVec> basis;
  bool matches_closed_form = false;
  bool fixed_pointwise = false;  // every basis vector satisfies ε_t(x)=x
};
TargetSubalgebra target_subalgebra(const WeakBialgebra& h);

// Pairing v_g(u_h) = δ_{g,h}, extended bilinearly.
Rational dual_pairing(const DualGroupoidAlgebra& dual, const SparseVec& f, const SparseVec& x);

// Tensor utilities (shared with tests).
Tensor2 tensor2_mul(const FiniteDimAlgebra& a, const Tensor2& x, const Tensor2& y);
Tensor3 tensor3_mul(const FiniteDimAlgebra& a, const Tensor3& x, const Tensor3& y);

}  // namespace gkit
