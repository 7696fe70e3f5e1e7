#include "doctest.h"

#include "gkit/fixtures.hpp"
#include "gkit/remarks.hpp"

using namespace gkit;
using namespace gkit::fixtures;

TEST_CASE("split: group case has D = 0 and C = B") {
  auto ctx = action_duality_context(z2_swap_on_k2());
  auto s = split(ctx);
  CHECK(s.ok);
  CHECK(s.d_basis.empty());
  CHECK(static_cast<int>(s.c_basis.size()) == ctx.B.algebra->dim());
}

TEST_CASE("split: pair groupoid splits 16 = 8 + 8") {
  auto ctx = action_duality_context(pair2_on_k2());
  auto s = split(ctx);
  CHECK(s.ok);
  // d(g) = r(h): for each g (4 arrows), h ranges over T_{d(g)} (2 arrows)
  CHECK(s.c_basis.size() == 8);
  CHECK(s.d_basis.size() == 8);
  for (const auto& c : s.checks) {
    CAPTURE(c.name);
    CHECK(c.ok);
  }
}

TEST_CASE("double smash: trivial groupoid on K gives K") {
  auto fs = action_fixtures(1);
  auto ctx = action_duality_context(fs[0].action);
  auto ds = double_smash(ctx);
  CHECK(ds.ok);
  CHECK(ds.quotient->dim() == 1);
}

TEST_CASE("double smash: Z/2 on K has trivial balancing and dimension 4") {
  auto fs = action_fixtures(2);
  const GroupoidAction* a = nullptr;
  for (const auto& f : fs)
    if (f.name == "z2_trivial_on_K") a = &f.action;
  REQUIRE(a);
  auto ctx = action_duality_context(*a);
  auto ds = double_smash(ctx);
  CHECK(ds.ok);
  // H_t = K·1 acts unitally, so both relation spaces have rank 0
  CHECK(ds.quotient->dim() == 4);
  CHECK(ds.unit_matches_closed_form);
}

TEST_CASE("double smash: pair groupoid quotient dimensions by exact rank") {
  auto ctx = action_duality_context(pair2_on_k2());
  auto ds = double_smash(ctx);
  CHECK(ds.ok);
  // full tensor space 2·4·4 = 32; quotient Σ_{d(g)=r(h)} dim E_g = 8
  CHECK(ds.full.dim() == 32);
  CHECK(ds.quotient->dim() == 8);
  CHECK(ds.projection.rank() == 8);
  CHECK(ds.unit_matches_closed_form);
  for (const auto& c : ds.checks) {
    CAPTURE(c.name);
    CHECK(c.ok);
  }
}

TEST_CASE("stage-1 balanced quotient over KG_t has dimension Σ_g dim E_{r(g)}") {
  // R ⊗ KG balanced over KG_t for the pair groupoid action on K x K:
  // relations (x·u_e) ⊗ u_g − x ⊗ (u_e u_g), with x·z = S(z)·x = x 1_e.
  auto a = pair2_on_k2();
  const Groupoid& G = *a.groupoid;
  const FiniteDimAlgebra& R = *a.total;
  std::vector<Label> labels;
  for (int x = 0; x < R.dim(); ++x)
    for (const auto& g : G.arrows()) labels.push_back("(" + R.label(x) + ")@u(" + g + ")");
  Basis big{labels};
  std::vector<SparseVec> rels;
  for (const auto& e : G.identities()) {
    SparseVec one_e = a.unit_of(e);
    for (int x = 0; x < R.dim(); ++x) {
      SparseVec proj = R.mul(SparseVec::basis(R.label(x)), one_e);
      for (const auto& g : G.arrows()) {
        SparseVec rel;
        for (const auto& [t, c] : proj.entries()) rel.add("(" + t + ")@u(" + g + ")", c);
        if (G.r(g) == e) rel.add("(" + R.label(x) + ")@u(" + g + ")", Rational(-1));
        if (!rel.is_zero()) rels.push_back(std::move(rel));
      }
    }
  }
  auto q = quotient_space(big, rels);
  // independent count: Σ_g dim E_{r(g)} = 4 for this fixture
  int expected = 0;
  for (const auto& g : G.arrows()) expected += static_cast<int>(a.component_of_arrow(g).size());
  CHECK(expected == 4);
  CHECK(static_cast<int>(q.quotient_basis.size()) == expected);
  CHECK(q.projection.rank() == expected);
}

TEST_CASE("phi: preunit maps to the double smash unit, D dies") {
  auto ctx = action_duality_context(pair2_on_k2());
  auto ds = double_smash(ctx);
  auto p = phi(ctx, ds);
  CHECK(p.multiplicative_on_B);
  CHECK(p.preunit_to_unit);
  auto s = split(ctx);
  for (const auto& d : s.d_basis)
    CHECK(p.phi.apply(SparseVec::basis(d)).is_zero());
}

TEST_CASE("phi: injective on B in the group case") {
  auto ctx = action_duality_context(z2_swap_on_k2());
  auto ds = double_smash(ctx);
  auto p = phi(ctx, ds);
  CHECK(p.kernel.empty());
}

TEST_CASE("exactness: ker φ = D with matching bases (pair groupoid)") {
  auto r = theorem52(pair2_on_k2());
  CHECK(r.ok);
  CHECK(r.exact.kernel_equals_D);
  CHECK(r.exact.dim_ker == 8);
  CHECK(r.exact.induced_iso_ok);
  CHECK(r.exact.image_equals_phi_C);
  CHECK(r.exact.b0_embeds);
}

TEST_CASE("exactness: trivial groupoid, everything 1-dimensional") {
  auto fs = action_fixtures(1);
  auto r = theorem52(fs[0].action);
  CHECK(r.ok);
  CHECK(r.exact.dim_D == 0);
  CHECK(r.exact.dim_ker == 0);
}

TEST_CASE("theorem 5.2 holds on every action fixture; groups give D = 0") {
  for (const auto& f : action_fixtures(8)) {
    CAPTURE(f.name);
    auto r = theorem52(f.action);
    CHECK(r.ok);
    CHECK(r.exact.kernel_equals_D);
    CHECK(r.exact.image_equals_phi_C);
    CHECK(r.exact.induced_iso_ok);
    CHECK(r.phi_data.preunit_to_unit);
    CHECK(r.ds.unit_matches_closed_form);
    if (f.action.groupoid->identities().size() == 1) CHECK(r.exact.dim_D == 0);
    for (const auto& c : r.exact.checks) {
      CAPTURE(c.name);
      CHECK(c.ok);
    }
  }
}
