#pragma once

#include "gkit/duality.hpp"

namespace gkit {

inline Label tensor_label(const Label& x, const Label& g, const Label& h) {
  return "(" + x + ")@u(" + g + ")@v(" + h + ")";
}

// Splitting B = C ⊕ D with C = ⊕_{d(g)=r(h)} E_g δ_g # v_h a unital subalgebra
// containing B0, and D an ideal with BD = DB = 0.
struct Splitting {
  std::vector<Label> c_basis;
  std::vector<Label> d_basis;
  AlgebraPtr C;       // restricted, unit w = Σ_e 1_e δ_e # Σ_{T_e} v_g
  SparseVec c_unit;
  std::vector<CheckItem> checks;
  bool ok = false;
};
Splitting split(const ActionDualityContext& ctx);

// (R ⊗_{KG_t} KG) ⊗_{KG*_t} KG*: both balanced quotients taken sequentially,
// multiplication (x⊗h)(y⊗l) = x(h_1·y) ⊗ h_2 l lifted through the quotient
// after an exact two-sided congruence check. The right H_t-action is
// x·z := S(z)·x (through the antipode).
struct DoubleSmash {
  Basis full;          // basis of R ⊗ KG ⊗ KG*
  LinMap projection;   // full -> quotient coordinates
  AlgebraPtr quotient; // induced algebra, unital
  SparseVec unit_closed_form;  // Σ_e 1_e ⊗ u_e ⊗ Σ_g v_g, in the full space
  bool unit_matches_closed_form = false;
  std::vector<CheckItem> checks;
  bool ok = false;
};
DoubleSmash double_smash(const ActionDualityContext& ctx);

// The comparison map φ: a_g δ_g # v_h ↦ a_g ⊗ u_g ⊗ v_h.
struct PhiData {
  LinMap phi;                      // B -> double smash quotient
  std::vector<SparseVec> kernel;   // exact kernel basis, over B labels
  bool multiplicative_on_B = false;
  bool preunit_to_unit = false;
  std::vector<CheckItem> checks;
};
PhiData phi(const ActionDualityContext& ctx, const DoubleSmash& ds);

// 0 -> D -> B -> φ(C) -> 0, all inclusions by exact rank.
struct ExactnessReport {
  int dim_B = 0, dim_C = 0, dim_D = 0, dim_ker = 0, dim_image = 0;
  bool kernel_equals_D = false;
  bool image_equals_phi_C = false;
  bool induced_iso_ok = false;  // C ≅ φ(C) (= B/D by the splitting) via hom_check
  bool b0_embeds = false;       // φ injective on B0
  std::vector<CheckItem> checks;
  bool ok = false;
};
ExactnessReport exactness(const ActionDualityContext& ctx, const DoubleSmash& ds,
                          const PhiData& p, const Splitting& s);

// Convenience: the whole exact-sequence pipeline for one action.
struct Theorem52Result {
  ActionDualityContext ctx;
  Splitting splitting;
  DoubleSmash ds;
  PhiData phi_data;
  ExactnessReport exact;
  bool ok = false;
};
Theorem52Result theorem52(const GroupoidAction& action);

}  // namespace gkit
