#include "doctest.h"

#include "gkit/duality.hpp"
#include "gkit/fixtures.hpp"

using namespace gkit;
using namespace gkit::fixtures;

namespace {

const GroupoidAction& named_action(const std::vector<ActionFixture>& fs, const std::string& name) {
  for (const auto& f : fs)
    if (f.name == name) return f.action;
  throw std::runtime_error("no fixture " + name);
}

}  // namespace

TEST_CASE("b0: group case has B0 = B with dim = n² dim R") {
  for (int n : {2, 3}) {
    auto action = zn_cycle_on_kn(n);
    auto ctx = action_duality_context(action);
    std::vector<CheckItem> checks;
    auto slice = b0(ctx, &checks);
    CHECK(slice.alg->dim() == n * n * n);  // dim R = n here
    CHECK(slice.alg->dim() == ctx.B.algebra->dim());
    for (const auto& c : checks) CHECK(c.ok);
  }
}

TEST_CASE("b0: pair groupoid on K x K has dim B0 = 4") {
  auto ctx = action_duality_context(pair2_on_k2());
  std::vector<CheckItem> checks;
  auto slice = b0(ctx, &checks);
  CHECK(slice.alg->dim() == 4);
  CHECK(ctx.B.algebra->dim() == 16);
  for (const auto& c : checks) CHECK(c.ok);
}

TEST_CASE("b0: trivial groupoid gives B0 = B = K") {
  auto fs = action_fixtures(1);
  auto ctx = action_duality_context(named_action(fs, "trivial_on_K"));
  auto slice = b0(ctx, nullptr);
  CHECK(slice.alg->dim() == 1);
}

TEST_CASE("subalg_span: the B0 spanning set closes to a 4-dim subalgebra of B") {
  auto ctx = action_duality_context(fixtures::pair2_on_k2());
  auto slice = b0(ctx, nullptr);
  std::vector<SparseVec> gens;
  for (const auto& l : slice.labels) gens.push_back(SparseVec::basis(l));
  auto sub = subalg_span(*ctx.B.algebra, gens);
  CHECK(sub.alg.dim() == 4);
  CHECK(sub.alg.has_unit());
}

TEST_CASE("blocks_actions: pair groupoid has two size-1 orbits per identity") {
  auto ctx = action_duality_context(pair2_on_k2());
  auto slice = b0(ctx, nullptr);
  auto blocks = blocks_actions(ctx, slice);
  CHECK(blocks.ok);
  REQUIRE(blocks.layers.size() == 2);
  for (const auto& layer : blocks.layers) {
    CHECK(layer.blocks.size() == 2);
    for (const auto& blk : layer.blocks) CHECK(blk.members.size() == 1);
  }
}

TEST_CASE("blocks_actions: Z/2 on K has a single orbit of size 2") {
  auto fs = action_fixtures(2);
  auto ctx = action_duality_context(named_action(fs, "z2_trivial_on_K"));
  auto slice = b0(ctx, nullptr);
  auto blocks = blocks_actions(ctx, slice);
  CHECK(blocks.ok);
  REQUIRE(blocks.layers.size() == 1);
  REQUIRE(blocks.layers[0].blocks.size() == 1);
  CHECK(blocks.layers[0].blocks[0].members.size() == 2);
}

TEST_CASE("blocks_actions: mixed union has orbit sizes |G_e|") {
  auto ctx = action_duality_context(z2_u_pair2_on_k3());
  auto slice = b0(ctx, nullptr);
  auto blocks = blocks_actions(ctx, slice);
  CHECK(blocks.ok);
  auto sets = arrow_sets(*ctx.action.groupoid);
  for (const auto& layer : blocks.layers)
    for (const auto& blk : layer.blocks)
      CHECK(blk.members.size() == sets.isotropy[layer.e].size());
}

TEST_CASE("passman: n = 1 gives the corner inclusion") {
  auto fs = action_fixtures(1);
  auto ctx = action_duality_context(named_action(fs, "trivial_on_K"));
  auto slice = b0(ctx, nullptr);
  auto blocks = blocks_actions(ctx, slice);
  const auto& blk = blocks.layers[0].blocks[0];
  auto mb = passman(blk.block.alg, blk.Omega, blk.U);
  CHECK(mb.ok);
  CHECK(mb.n == 1);
  CHECK(mb.corner->dim() == blk.block.alg->dim());
}

TEST_CASE("passman: Z/2 on K gives M_2(K) with exact matrix unit relations") {
  auto fs = action_fixtures(2);
  auto ctx = action_duality_context(named_action(fs, "z2_trivial_on_K"));
  auto slice = b0(ctx, nullptr);
  auto blocks = blocks_actions(ctx, slice);
  const auto& blk = blocks.layers[0].blocks[0];
  auto mb = passman(blk.block.alg, blk.Omega, blk.U);
  CHECK(mb.ok);
  CHECK(mb.n == 2);
  CHECK(mb.corner->dim() == 1);
  CHECK(mb.iso_report.multiplicative);
  CHECK(mb.iso_report.bijective);
  CHECK(mb.iso_report.unital);
}

TEST_CASE("passman: planted non-orthogonal idempotents raise a precondition error") {
  auto k2 = k_power({"p", "q"});
  std::vector<NamedElem> idems;
  idems.push_back({"p", {{0, Rational(1)}}});
  idems.push_back({"p+q", {{0, Rational(1)}, {1, Rational(1)}}});  // not orthogonal to p
  UnitFamily units;
  units.parent = k2;
  units.elems.push_back({"1", k2->unit_iv()});
  units.inverses.push_back(k2->unit_iv());
  CHECK_THROWS_AS(passman(k2, idems, units), validation_error);
}

TEST_CASE("theorem 3.7: Z/n acting on R gives a single block M_n(R)") {
  struct Case {
    GroupoidAction action;
    int n;
    int dimR;
  };
  std::vector<Case> cases;
  {
    auto fs = action_fixtures(4);
    cases.push_back({named_action(fs, "z2_trivial_on_K"), 2, 1});
    cases.push_back({named_action(fs, "z2_swap_on_K2"), 2, 2});
    cases.push_back({named_action(fs, "z3_cycle_on_K3"), 3, 3});
    cases.push_back({named_action(fs, "z4_cycle_on_K4"), 4, 4});
  }
  for (auto& c : cases) {
    auto rep = theorem37(c.action);
    CHECK(rep.ok);
    REQUIRE(rep.blocks.size() == 1);
    CHECK(rep.blocks[0].n == c.n);
    CHECK(rep.blocks[0].corner_dim == c.dimR);
    CHECK(rep.blocks[0].verified);
    CHECK(rep.global_iso_ok);
    CHECK(rep.dim_decomposed == static_cast<long>(c.n) * c.n * c.dimR);
    CHECK(rep.ledger_balanced);
  }
}

TEST_CASE("theorem 3.7: pair groupoid on K x K gives four 1x1 blocks over K") {
  auto rep = theorem37(pair2_on_k2());
  CHECK(rep.ok);
  CHECK(rep.dim_decomposed == 4);
  REQUIRE(rep.blocks.size() == 4);
  for (const auto& b : rep.blocks) {
    CHECK(b.n == 1);
    CHECK(b.corner_dim == 1);
    CHECK(b.verified);
  }
  CHECK(rep.global_iso_ok);
  CHECK(rep.ledger_balanced);
}

TEST_CASE("theorem 3.7: mixed union gives block sizes {2,1,1,1,1} and ledger 8") {
  auto rep = theorem37(z2_u_pair2_on_k3());
  CHECK(rep.ok);
  CHECK(rep.dim_decomposed == 8);
  REQUIRE(rep.blocks.size() == 5);
  int twos = 0, ones = 0;
  for (const auto& b : rep.blocks) {
    if (b.n == 2) ++twos;
    if (b.n == 1) ++ones;
    CHECK(b.verified);
  }
  CHECK(twos == 1);
  CHECK(ones == 4);
  CHECK(rep.ledger_balanced);
}

TEST_CASE("theorem 3.7: two-dimensional corners (pair groupoid on K² x K²)") {
  auto rep = theorem37(pair2_on_k2xk2());
  CHECK(rep.ok);
  CHECK(rep.dim_decomposed == 8);
  for (const auto& b : rep.blocks) {
    CHECK(b.n == 1);
    CHECK(b.corner_dim == 2);
  }
}

TEST_CASE("theorem 3.7 holds on every action fixture") {
  for (const auto& f : action_fixtures(8)) {
    CAPTURE(f.name);
    auto rep = theorem37(f.action);
    CHECK(rep.ok);
    CHECK(rep.ledger_balanced);
    CHECK(rep.global_iso_ok);
    for (const auto& c : rep.checks) {
      CAPTURE(c.name);
      CAPTURE(c.witness);
      CHECK(c.ok);
    }
  }
}

TEST_CASE("c0: group case has C0 = C") {
  auto graded = kg_self_graded(cyclic_groupoid(2));
  auto ctx = coaction_duality_context(graded);
  std::vector<CheckItem> checks;
  auto slice = c0(ctx, &checks);
  CHECK(slice.alg->dim() == ctx.C.ring.algebra->dim());
  CHECK(slice.alg->dim() == 8);
  for (const auto& c : checks) CHECK(c.ok);
}

TEST_CASE("c0: graded KG over the pair groupoid has dim C0 = 4") {
  auto graded = kg_self_graded(pair_groupoid_ptr(2));
  auto ctx = coaction_duality_context(graded);
  std::vector<CheckItem> checks;
  auto slice = c0(ctx, &checks);
  CHECK(slice.alg->dim() == 4);
  for (const auto& c : checks) CHECK(c.ok);
}

TEST_CASE("c0: trivial groupoid gives C0 = C = K") {
  auto graded = kg_self_graded(trivial_groupoid());
  auto ctx = coaction_duality_context(graded);
  auto slice = c0(ctx, nullptr);
  CHECK(slice.alg->dim() == 1);
}

TEST_CASE("blocks_coactions: pair groupoid has n_{e,f} = 1 for all four pairs") {
  auto graded = kg_self_graded(pair_groupoid_ptr(2));
  auto ctx = coaction_duality_context(graded);
  auto slice = c0(ctx, nullptr);
  auto blocks = blocks_coactions(ctx, slice);
  CHECK(blocks.ok);
  int count = 0;
  for (const auto& layer : blocks.layers)
    for (const auto& blk : layer.blocks) {
      CHECK(blk.n_ef == 1);
      ++count;
    }
  CHECK(count == 4);
}

TEST_CASE("blocks_coactions: group of order n has a single (e,e) block with n_{e,e} = n") {
  auto graded = kg_self_graded(cyclic_groupoid(3));
  auto ctx = coaction_duality_context(graded);
  auto slice = c0(ctx, nullptr);
  auto blocks = blocks_coactions(ctx, slice);
  CHECK(blocks.ok);
  REQUIRE(blocks.layers.size() == 1);
  REQUIRE(blocks.layers[0].blocks.size() == 1);
  CHECK(blocks.layers[0].blocks[0].n_ef == 3);
}

TEST_CASE("blocks_coactions: cross-component blocks are skipped as zero blocks") {
  auto graded = kg_self_graded(union_groupoid(cyclic_groupoid(2), pair_groupoid_ptr(2), "z2", "p2"));
  auto ctx = coaction_duality_context(graded);
  auto slice = c0(ctx, nullptr);
  auto blocks = blocks_coactions(ctx, slice);
  CHECK(blocks.ok);
  int zero = 0, nonzero = 0;
  for (const auto& layer : blocks.layers) {
    zero += static_cast<int>(layer.zero_blocks.size());
    nonzero += static_cast<int>(layer.blocks.size());
  }
  // 3 identities: 9 (e,f) pairs; within components: 1 (z2) + 4 (pair2) = 5
  CHECK(nonzero == 5);
  CHECK(zero == 4);
}

TEST_CASE("theorem 4.5: self-graded KG over pair groupoid decomposes as K^4") {
  auto rep = theorem45(kg_self_graded(pair_groupoid_ptr(2)));
  CHECK(rep.ok);
  CHECK(rep.dim_decomposed == 4);
  int nonzero = 0;
  for (const auto& b : rep.blocks)
    if (b.n > 0) {
      CHECK(b.n == 1);
      CHECK(b.corner_dim == 1);
      ++nonzero;
    }
  CHECK(nonzero == 4);
  CHECK(rep.global_iso_ok);
  CHECK(rep.ledger_balanced);
}

TEST_CASE("theorem 4.5: Z/n-graded A gives a single block M_n(A)") {
  struct Case {
    GradedAlgebra graded;
    int n;
    int dimA;
  };
  std::vector<Case> cases;
  cases.push_back({kg_self_graded(cyclic_groupoid(2)), 2, 2});
  cases.push_back({kg_self_graded(cyclic_groupoid(3)), 3, 3});
  cases.push_back({kg_self_graded(cyclic_groupoid(4)), 4, 4});
  cases.push_back({dualnum_z2_graded(), 2, 2});
  for (auto& c : cases) {
    auto rep = theorem45(c.graded);
    CHECK(rep.ok);
    REQUIRE(rep.blocks.size() == 1);
    CHECK(rep.blocks[0].n == c.n);
    CHECK(rep.blocks[0].corner_dim == c.dimA);
    CHECK(rep.global_iso_ok);
    CHECK(rep.dim_decomposed == static_cast<long>(c.n) * c.n * c.dimA);
    CHECK(rep.ledger_balanced);
  }
}

TEST_CASE("theorem 4.5: mixed union has block sizes per n_{e,f}") {
  auto rep = theorem45(
      kg_self_graded(union_groupoid(cyclic_groupoid(2), pair_groupoid_ptr(2), "z2", "p2")));
  CHECK(rep.ok);
  CHECK(rep.dim_decomposed == 12);
  int two_blocks = 0, one_blocks = 0;
  for (const auto& b : rep.blocks) {
    if (b.n == 2) {
      CHECK(b.corner_dim == 2);
      ++two_blocks;
    } else if (b.n == 1) {
      CHECK(b.corner_dim == 1);
      ++one_blocks;
    }
  }
  CHECK(two_blocks == 1);
  CHECK(one_blocks == 4);
  CHECK(rep.ledger_balanced);
}

TEST_CASE("theorem 4.5 holds on every grading fixture") {
  for (const auto& f : grading_fixtures(6)) {
    CAPTURE(f.name);
    auto rep = theorem45(f.graded);
    CHECK(rep.ok);
    CHECK(rep.ledger_balanced);
    CHECK(rep.global_iso_ok);
    for (const auto& c : rep.checks) {
      CAPTURE(c.name);
      CAPTURE(c.witness);
      CHECK(c.ok);
    }
  }
}

TEST_CASE("theta relabeling is verified on singleton-fiber gradings") {
  auto graded = kg_self_graded(cyclic_groupoid(3));
  auto ctx = coaction_duality_context(graded);
  auto slice = c0(ctx, nullptr);
  auto blocks = blocks_coactions(ctx, slice);
  const auto& blk = blocks.layers[0].blocks[0];
  auto mb = passman(blk.block.alg, blk.W, blk.U);
  auto ci = corner_iso_coactions(ctx, blk, mb);
  REQUIRE(ci.theta_report.has_value());
  CHECK(ci.theta_report->multiplicative);
  CHECK(ci.theta_report->bijective);
  CHECK(ci.theta_note == "theta verified");
}
