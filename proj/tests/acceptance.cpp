// Acceptance suite: one pass/fail line per criterion. All arithmetic is exact
// rational, so every comparison below is equality — no tolerances anywhere.
// Runtime bounds are wall-clock, checked where stated.

#include "gkit/fixtures.hpp"
#include "gkit/remarks.hpp"
#include "gkit/selftest.hpp"

#include <chrono>
#include <cstdio>
#include <string>

using namespace gkit;
using namespace gkit::fixtures;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
  std::printf("%s criterion %d: %s%s\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
              detail.empty() ? "" : ("  [" + detail + "]").c_str());
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. Groupoid law suite: every builder fixture with |G| <= 12 validates,
//    including all ten derived laws, under 1 s per fixture.
void criterion1() {
  bool ok = true;
  std::string detail;
  for (const auto& f : groupoid_fixtures(12)) {
    auto t0 = std::chrono::steady_clock::now();
    auto rep = validate(*f.groupoid);
    double dt = seconds_since(t0);
    if (!rep.ok || dt >= 1.0) {
      ok = false;
      detail = f.name + (rep.ok ? " too slow" : " violated");
    }
  }
  report(1, "groupoid axioms + derived laws, |G| <= 12, < 1 s each", ok, detail);
}

// 2. Weak bialgebra suite: KG and KG* pass the three axioms exactly; for
//    |G0| > 1 the non-bialgebra witness Δ(1) != 1⊗1 is confirmed. < 5 s each
//    at |G| <= 9.
void criterion2() {
  bool ok = true;
  std::string detail;
  for (const auto& f : groupoid_fixtures(9)) {
    auto t0 = std::chrono::steady_clock::now();
    auto r1 = weak_axioms(build_kg(f.groupoid));
    auto r2 = weak_axioms(build_kgdual(f.groupoid));
    double dt = seconds_since(t0);
    bool genuine = f.groupoid->identities().size() > 1;
    bool here = r1.ok && r2.ok && dt < 5.0;
    if (genuine) here = here && r1.checked_not_bialgebra && r2.checked_not_bialgebra;
    if (!here) {
      ok = false;
      detail = f.name;
    }
  }
  report(2, "weak bialgebra axioms for KG and KG*, Δ(1) != 1⊗1 when |G0| > 1", ok, detail);
}

// 3. Action/module round-trips are identities: exact equality of component bases
//    and beta matrices both ways.
void criterion3() {
  bool ok = true;
  std::string detail;
  for (const auto& f : action_fixtures(9)) {
    auto m = action_to_module(f.action);
    auto back = module_to_action(m);
    auto m2 = action_to_module(back);
    bool here = actions_equal(f.action, back);
    for (const auto& [g, act] : m.action) here = here && act == m2.action.at(g);
    if (!here) {
      ok = false;
      detail = f.name;
    }
  }
  report(3, "action/module round-trips are exact identities", ok, detail);
}

// 4. Skew ring and smash law suite: associativity on all triples, skew unit
//    Σ 1_e δ_e, preunit law, annihilator witnesses whenever |G0| > 1.
void criterion4() {
  bool ok = true;
  std::string detail;
  for (const auto& f : action_fixtures(8)) {
    auto sk = skew_ring(f.action);
    auto rep = alg_check(*sk.algebra);
    SparseVec u;
    for (const auto& e : f.action.groupoid->identities()) {
      SparseVec one_e = f.action.unit_of(e);
      for (const auto& [x, c] : one_e.entries()) u.add(delta_label(x, e), c);
    }
    if (!(rep.associative && rep.unital && sk.algebra->unit() == u)) {
      ok = false;
      detail = f.name + " skew";
    }
  }
  for (const auto& f : grading_fixtures(8)) {
    bool genuine = f.graded.groupoid->identities().size() > 1;
    auto s = smash(f.graded);
    bool here = alg_check(*s.algebra).associative && s.preunit_law_ok;
    if (genuine) here = here && s.right_annihilator.has_value() && s.annihilator_verified;
    auto act = smash_action(s);
    auto c = smash_skew_ring(act, s);
    here = here && alg_check(*c.ring.algebra).associative;
    if (genuine) here = here && c.left_annihilator.has_value() && c.annihilator_verified;
    if (!here) {
      ok = false;
      detail = f.name + " smash";
    }
  }
  report(4, "skew/smash laws: associativity, units, preunit, annihilator witnesses", ok, detail);
}

// 5. Theorem 3.7, group degeneration: Z/n (n = 2,3,4) on R, dim R <= 4, gives
//    one block M_n(R) with a verified isomorphism and dim B0 = n² dim R;
//    < 30 s at n = 4.
void criterion5() {
  bool ok = true;
  std::string detail;
  struct Case {
    GroupoidAction a;
    int n;
  };
  std::vector<Case> cases{{z2_swap_on_k2(), 2}, {zn_cycle_on_kn(3), 3}, {zn_cycle_on_kn(4), 4}};
  for (const auto& c : cases) {
    auto t0 = std::chrono::steady_clock::now();
    auto rep = theorem37(c.a);
    double dt = seconds_since(t0);
    int dimR = c.a.total->dim();
    bool here = rep.ok && rep.blocks.size() == 1 && rep.blocks[0].n == c.n &&
                rep.blocks[0].corner_dim == dimR && rep.global_iso_ok &&
                rep.dim_decomposed == static_cast<long>(c.n) * c.n * dimR && rep.ledger_balanced;
    if (c.n == 4) here = here && dt < 30.0;
    if (!here) {
      ok = false;
      detail = "n=" + std::to_string(c.n);
    }
  }
  report(5, "Thm 3.7 degeneration: Z/n on R gives one block M_n(R), ledger n² dim R", ok, detail);
}

// 6. Theorem 3.7, genuine groupoids: pair_groupoid(2) on K x K gives four 1x1
//    blocks over K; Z/2 ⊔ pair_groupoid(2) gives mixed sizes with orbit sizes
//    |G_e| and a balanced ledger; all matrix-unit relations exact.
void criterion6() {
  bool ok = true;
  std::string detail;
  {
    auto rep = theorem37(pair2_on_k2());
    bool here = rep.ok && rep.dim_decomposed == 4 && rep.blocks.size() == 4;
    for (const auto& b : rep.blocks) here = here && b.n == 1 && b.corner_dim == 1 && b.verified;
    here = here && rep.global_iso_ok && rep.ledger_balanced;
    if (!here) {
      ok = false;
      detail = "pair2_on_K2";
    }
  }
  {
    auto a = z2_u_pair2_on_k3();
    auto rep = theorem37(a);
    auto sets = arrow_sets(*a.groupoid);
    int twos = 0, ones = 0;
    for (const auto& b : rep.blocks) {
      if (b.n == 2) ++twos;
      if (b.n == 1) ++ones;
    }
    // orbit size equals the isotropy order at each identity
    bool orbit_sizes = true;
    auto ctx = action_duality_context(a);
    auto slice = b0(ctx, nullptr);
    auto blocks = blocks_actions(ctx, slice);
    for (const auto& layer : blocks.layers)
      for (const auto& blk : layer.blocks)
        orbit_sizes = orbit_sizes && blk.members.size() == sets.isotropy[layer.e].size();
    bool here = rep.ok && twos == 1 && ones == 4 && rep.ledger_balanced && rep.global_iso_ok &&
                orbit_sizes;
    if (!here) {
      ok = false;
      detail = "z2_u_pair2_on_K3";
    }
  }
  report(6, "Thm 3.7 genuine groupoids: K^4 blocks and mixed block sizes, exact matrix units", ok,
         detail);
}

// 7. Theorem 4.5: self-graded KG over pair_groupoid(2) gives C0 ≅ K^4; Z/n
//    gradings give M_n(A); n_{e,f} = |T_f ∩ S_e| for every block.
void criterion7() {
  bool ok = true;
  std::string detail;
  {
    auto rep = theorem45(kg_self_graded(pair_groupoid_ptr(2)));
    int nonzero = 0;
    bool here = rep.ok && rep.dim_decomposed == 4 && rep.global_iso_ok && rep.ledger_balanced;
    for (const auto& b : rep.blocks)
      if (b.n > 0) {
        here = here && b.n == 1 && b.corner_dim == 1;
        ++nonzero;
      }
    here = here && nonzero == 4;
    if (!here) {
      ok = false;
      detail = "kg_self_pair2";
    }
  }
  struct Case {
    GradedAlgebra g;
    int n;
  };
  std::vector<Case> zn{{kg_self_graded(cyclic_groupoid(2)), 2},
                       {kg_self_graded(cyclic_groupoid(3)), 3},
                       {kg_self_graded(cyclic_groupoid(4)), 4},
                       {dualnum_z2_graded(), 2}};
  for (const auto& c : zn) {
    auto rep = theorem45(c.g);
    int dimA = c.g.algebra->dim();
    bool here = rep.ok && rep.blocks.size() == 1 && rep.blocks[0].n == c.n &&
                rep.blocks[0].corner_dim == dimA && rep.global_iso_ok &&
                rep.dim_decomposed == static_cast<long>(c.n) * c.n * dimA;
    if (!here) {
      ok = false;
      detail = "Z/" + std::to_string(c.n) + " grading";
    }
  }
  // n_{e,f} = |T_f ∩ S_e| on every block of every grading fixture
  for (const auto& f : grading_fixtures(8)) {
    auto ctx = coaction_duality_context(f.graded);
    auto slice = c0(ctx, nullptr);
    auto blocks = blocks_coactions(ctx, slice);
    const Groupoid& G = *f.graded.groupoid;
    for (const auto& layer : blocks.layers)
      for (const auto& blk : layer.blocks) {
        int count = 0;
        for (const auto& arrow : G.arrows())
          if (G.r(arrow) == blk.f && G.d(arrow) == blk.e) ++count;
        if (blk.n_ef != count) {
          ok = false;
          detail = f.name + " n_ef";
        }
      }
    if (!blocks.ok) {
      ok = false;
      detail = f.name;
    }
  }
  report(7, "Thm 4.5: C0 ≅ K^4 (pair), M_n(A) (groups), n_{e,f} = |T_f ∩ S_e|", ok, detail);
}

// 8. Theorem 5.2 on every action fixture: ker φ = D by double inclusion,
//    φ(C) ≅ B/D by hom_check, φ(preunit) = unit, unit matches the closed
//    form; groups give D = 0.
void criterion8() {
  bool ok = true;
  std::string detail;
  for (const auto& f : action_fixtures(8)) {
    auto r = theorem52(f.action);
    bool here = r.ok && r.exact.kernel_equals_D && r.exact.induced_iso_ok &&
                r.exact.image_equals_phi_C && r.phi_data.preunit_to_unit &&
                r.ds.unit_matches_closed_form;
    if (f.action.groupoid->identities().size() == 1) here = here && r.exact.dim_D == 0;
    if (!here) {
      ok = false;
      detail = f.name;
    }
  }
  report(8, "Thm 5.2 exact sequence 0 → D → B → φ(C) → 0, exact ranks and units", ok, detail);
}

// 9. Full selftest at max-size 8 in under 2 minutes, status ok.
void criterion9() {
  auto t0 = std::chrono::steady_clock::now();
  auto res = run_selftest(8);
  double dt = seconds_since(t0);
  report(9, "selftest --max-size 8 ok in < 120 s", res.ok && dt < 120.0,
         "took " + std::to_string(dt) + " s, " + std::to_string(res.entries.size()) + " entries");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (failures == 0)
    std::printf("acceptance: all 9 criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return failures;
}
