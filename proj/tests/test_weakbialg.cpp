#include "doctest.h"

#include "gkit/fixtures.hpp"
#include "gkit/weak_bialgebra.hpp"

#include "test_util.hpp"

#include <algorithm>

using namespace gkit;

namespace {

// Brute-force isomorphism search between two algebras of equal small dimension
// over basis bijections. Finding one multiplicative bijection certifies the
// isomorphism (used as an oracle; the library never assumes this).
bool basis_permutation_isomorphic(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b) {
  if (a.dim() != b.dim()) return false;
  const int n = a.dim();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        IVec lhs;
        for (const auto& [t, c] : a.prod(i, j)) lhs.emplace_back(perm[t], c);
        std::sort(lhs.begin(), lhs.end(),
                  [](const auto& l, const auto& r) { return l.first < r.first; });
        if (lhs != b.prod(perm[i], perm[j])) ok = false;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("build_kg: one-arrow groupoid gives K") {
  auto kg = build_kg(fixtures::trivial_groupoid());
  CHECK(kg.algebra->dim() == 1);
  CHECK(kg.algebra->has_unit());
}

TEST_CASE("build_kg: KG of pair_groupoid(2) is the 2x2 matrix algebra") {
  auto kg = build_kg(fixtures::pair_groupoid_ptr(2));
  auto k = fixtures::k_power({"1"});
  auto m2 = matrix_algebra(2, *k);
  CHECK(basis_permutation_isomorphic(*kg.algebra, m2));
}

TEST_CASE("build_kg: group algebra of Z/2 is commutative") {
  auto kg = build_kg(fixtures::cyclic_groupoid(2));
  CHECK(kg.algebra->is_commutative());
}

TEST_CASE("build_kgdual: orthogonal idempotents and the comultiplication") {
  auto g = fixtures::pair_groupoid_ptr(2);
  auto kd = build_kgdual(g);
  CHECK(kd.algebra->is_commutative());
  for (int i = 0; i < kd.algebra->dim(); ++i)
    for (int j = 0; j < kd.algebra->dim(); ++j) {
      IVec p = kd.algebra->prod(i, j);
      if (i == j)
        CHECK(p == IVec{{i, Rational(1)}});
      else
        CHECK(p.empty());
    }
  // Δ(v_{(2,1)}) = v_{(2,1)} ⊗ v_{(1,1)} + v_{(2,2)} ⊗ v_{(2,1)}
  int vg = kd.algebra->index_of(v_label("(2,1)"));
  Tensor2 expected;
  expected[{kd.algebra->index_of(v_label("(2,1)")), kd.algebra->index_of(v_label("(1,1)"))}] = 1;
  expected[{kd.algebra->index_of(v_label("(2,2)")), kd.algebra->index_of(v_label("(2,1)"))}] = 1;
  CHECK(kd.comult[vg] == expected);
  // ε(v_{(1,1)} + v_{(2,1)}) = 1: only the identity term counts
  SparseVec x = SparseVec::basis(v_label("(1,1)")) + SparseVec::basis(v_label("(2,1)"));
  CHECK(kd.counit_of(kd.algebra->basis().to_ivec(x)) == 1);
}

TEST_CASE("weak axioms hold for KG and KG* on every fixture") {
  for (const auto& f : fixtures::groupoid_fixtures(9)) {
    CAPTURE(f.name);
    auto kg = build_kg(f.groupoid);
    auto kd = build_kgdual(f.groupoid);
    auto rep1 = weak_axioms(kg);
    auto rep2 = weak_axioms(kd);
    CHECK(rep1.ok);
    CHECK(rep2.ok);
    bool group = f.groupoid->identities().size() == 1;
    CHECK(rep1.is_bialgebra == group);
    CHECK(rep2.is_bialgebra == group);
    if (!group) {
      CHECK(rep1.checked_not_bialgebra);
      CHECK(rep2.checked_not_bialgebra);
    }
  }
}

TEST_CASE("KG* multiplication is the convolution dual of Δ on KG") {
  for (const auto& f : fixtures::groupoid_fixtures(6)) {
    auto kg = build_kg(f.groupoid);
    auto kd = build_kgdual(f.groupoid);
    const int n = kg.algebra->dim();
    for (int gi = 0; gi < n; ++gi)
      for (int hi = 0; hi < n; ++hi) {
        // (v_g v_h)(u_k) must equal Σ v_g(u_{k1}) v_h(u_{k2}) over Δ(u_k)
        for (int ki = 0; ki < n; ++ki) {
          Rational lhs = 0;
          for (const auto& [t, c] : kd.algebra->prod(gi, hi))
            if (t == ki) lhs += c;
          Rational rhs = 0;
          for (const auto& [key, c] : kg.comult[ki])
            rhs += c * Rational(key.first == gi ? 1 : 0) * Rational(key.second == hi ? 1 : 0);
          CHECK(lhs == rhs);
        }
      }
  }
}

TEST_CASE("epsilon_t on KG: u_g ↦ u_{r(g)}") {
  auto g = fixtures::pair_groupoid_ptr(2);
  auto kg = build_kg(g);
  for (const auto& a : g->arrows()) {
    SparseVec img = epsilon_t(kg, SparseVec::basis(u_label(a)));
    CHECK(img == SparseVec::basis(u_label(g->r(a))));
  }
  // fixed points on identities
  for (const auto& e : g->identities())
    CHECK(epsilon_t(kg, SparseVec::basis(u_label(e))) == SparseVec::basis(u_label(e)));
}

TEST_CASE("epsilon_t on KG*: v_e ↦ Σ_{h∈T_e} v_h, non-identities die") {
  auto g = fixtures::pair_groupoid_ptr(2);
  auto kd = build_kgdual(g);
  auto sets = arrow_sets(*g);
  for (const auto& e : g->identities()) {
    SparseVec expected;
    for (const auto& h : sets.ranges[e]) expected.add(v_label(h), 1);
    CHECK(epsilon_t(kd, SparseVec::basis(v_label(e))) == expected);
  }
  CHECK(epsilon_t(kd, SparseVec::basis(v_label("(2,1)"))).is_zero());
}

TEST_CASE("epsilon_t is idempotent with image dimension |G0|") {
  for (const auto& f : fixtures::groupoid_fixtures(8)) {
    CAPTURE(f.name);
    for (int dual = 0; dual < 2; ++dual) {
      WeakBialgebra h;
      if (dual)
        h = build_kgdual(f.groupoid);
      else
        h = build_kg(f.groupoid);
      LinMap et = epsilon_t_map(h);
      CHECK(et.compose(et) == et);
      CHECK(et.rank() == static_cast<int>(f.groupoid->identities().size()));
    }
  }
}

TEST_CASE("target subalgebras match the closed forms") {
  for (const auto& f : fixtures::groupoid_fixtures(8)) {
    CAPTURE(f.name);
    auto kg = build_kg(f.groupoid);
    auto kd = build_kgdual(f.groupoid);
    auto t1 = target_subalgebra(kg);
    auto t2 = target_subalgebra(kd);
    CHECK(t1.basis.size() == f.groupoid->identities().size());
    CHECK(t2.basis.size() == f.groupoid->identities().size());
    CHECK(t1.matches_closed_form);
    CHECK(t2.matches_closed_form);
    CHECK(t1.fixed_pointwise);
    CHECK(t2.fixed_pointwise);
  }
}

TEST_CASE("group case: KG_t is one-dimensional") {
  auto kg = build_kg(fixtures::cyclic_groupoid(2));
  auto t = target_subalgebra(kg);
  CHECK(t.basis.size() == 1);
}

TEST_CASE("antipode maps u_g to u_{g^{-1}} and squares to the identity") {
  auto g = fixtures::pair_groupoid_ptr(2);
  auto kg = build_kg(g);
  CHECK(kg.antipode.apply(SparseVec::basis(u_label("(2,1)"))) ==
        SparseVec::basis(u_label("(1,2)")));
  CHECK(kg.antipode.compose(kg.antipode) == LinMap::identity(kg.algebra->basis()));
}

TEST_CASE("coassociativity and counit law on both algebras") {
  for (const auto& f : fixtures::groupoid_fixtures(6)) {
    auto rep1 = weak_axioms(build_kg(f.groupoid));
    auto rep2 = weak_axioms(build_kgdual(f.groupoid));
    for (const auto& item : rep1.items) {
      CAPTURE(item.name);
      CHECK(item.ok);
    }
    for (const auto& item : rep2.items) {
      CAPTURE(item.name);
      CHECK(item.ok);
    }
  }
}

TEST_CASE("dual pairing") {
  auto g = fixtures::pair_groupoid_ptr(2);
  auto kd = build_kgdual(g);
  CHECK(dual_pairing(kd, SparseVec::basis(v_label("(2,1)")), SparseVec::basis(u_label("(2,1)"))) == 1);
  CHECK(dual_pairing(kd, SparseVec::basis(v_label("(2,1)")), SparseVec::basis(u_label("(1,2)"))) == 0);
}
