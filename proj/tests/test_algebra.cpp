#include "doctest.h"

#include "gkit/algebra.hpp"
#include "gkit/check_kernels.hpp"
#include "gkit/fixtures.hpp"
#include "gkit/weak_bialgebra.hpp"

#include "test_util.hpp"

using namespace gkit;
using gkit_test::Rng;

namespace {

FiniteDimAlgebra one_dim_idempotent() {
  std::map<std::pair<Label, Label>, SparseVec> sc;
  sc[{"x", "x"}] = SparseVec::basis("x");
  return FiniteDimAlgebra({"x"}, sc, SparseVec::basis("x"));
}

}  // namespace

TEST_CASE("alg_check: 1-dim algebra with x*x = x") {
  auto a = one_dim_idempotent();
  auto rep = alg_check(a);
  CHECK(rep.associative);
  CHECK(rep.unital);
}

TEST_CASE("alg_check: KG of the pair groupoid is associative and unital") {
  auto kg = build_kg(fixtures::pair_groupoid_ptr(2));
  auto rep = alg_check(*kg.algebra);
  CHECK(rep.associative);
  CHECK(rep.unital);
  CHECK(kg.algebra->dim() == 4);
}

TEST_CASE("alg_check: planted non-associative product yields a witness") {
  // x*x = y, x*y = x, everything else zero: (xx)x = yx = 0, x(xx) = xy = x
  std::map<std::pair<Label, Label>, SparseVec> sc;
  sc[{"x", "x"}] = SparseVec::basis("y");
  sc[{"x", "y"}] = SparseVec::basis("x");
  FiniteDimAlgebra a({"x", "y"}, sc, std::nullopt);
  auto rep = alg_check(a);
  CHECK(!rep.associative);
  REQUIRE(rep.assoc_witness.has_value());
  CHECK((*rep.assoc_witness)[0] == "x");
  CHECK((*rep.assoc_witness)[1] == "x");
  CHECK((*rep.assoc_witness)[2] == "x");
}

TEST_CASE("alg_check: structconst label outside basis is a structural error") {
  std::map<std::pair<Label, Label>, SparseVec> sc;
  sc[{"x", "x"}] = SparseVec::basis("ghost");
  CHECK_THROWS_AS(FiniteDimAlgebra({"x"}, sc, std::nullopt), structural_error);
}

TEST_CASE("alg_check agrees with the dense oracle on small algebras") {
  // real fixtures
  for (const auto& f : fixtures::groupoid_fixtures(4)) {
    auto kg = build_kg(f.groupoid);
    if (kg.algebra->dim() > 16) continue;
    CHECK(alg_check(*kg.algebra).associative == gkit_test::dense_assoc_ok(*kg.algebra));
  }
  // randomized sparse tables, mostly non-associative
  Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng.next() % 3);
    std::vector<Label> labels;
    for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
    Basis basis{labels};
    std::vector<IVec> prod(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (rng.next() % 3 == 0)
          prod[static_cast<std::size_t>(i) * n + j] = {{static_cast<int>(rng.next() % n), Rational(1)}};
    FiniteDimAlgebra a(basis, prod, std::nullopt);
    CHECK(alg_check(a).associative == gkit_test::dense_assoc_ok(a));
  }
}

TEST_CASE("serial and parallel kernels return identical first witnesses") {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng.next() % 4);
    std::vector<Label> labels;
    for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
    Basis basis{labels};
    std::vector<IVec> prod(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (rng.next() % 2 == 0)
          prod[static_cast<std::size_t>(i) * n + j] = {{static_cast<int>(rng.next() % n), Rational(1)}};
    FiniteDimAlgebra a(basis, prod, std::nullopt);
    auto s = find_assoc_violation(a, ExecPolicy::Serial);
    auto p = find_assoc_violation(a, ExecPolicy::Parallel);
    CHECK(s == p);
  }
}

TEST_CASE("serial and parallel hom kernels agree, including planted failures") {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng.next() % 4);
    std::vector<Label> labels;
    for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
    Basis basis{labels};
    std::vector<IVec> prod(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (rng.next() % 2 == 0)
          prod[static_cast<std::size_t>(i) * n + j] = {{static_cast<int>(rng.next() % n), Rational(1)}};
    FiniteDimAlgebra a(basis, prod, std::nullopt);
    LinMap m(basis, basis);
    for (int j = 0; j < n; ++j) m.set_column_iv(j, {{static_cast<int>(rng.next() % n), Rational(1)}});
    auto s = find_hom_violation(a, a, m, ExecPolicy::Serial);
    auto p = find_hom_violation(a, a, m, ExecPolicy::Parallel);
    CHECK(s == p);
  }
}

TEST_CASE("hom_check: identity map on KG") {
  auto kg = build_kg(fixtures::pair_groupoid_ptr(2));
  AlgebraHom h{kg.algebra, kg.algebra, LinMap::identity(kg.algebra->basis())};
  auto rep = hom_check(h);
  CHECK(rep.multiplicative);
  CHECK(rep.unital);
  CHECK(rep.bijective);
}

TEST_CASE("hom_check: zero map is multiplicative but not unital") {
  auto kg = build_kg(fixtures::cyclic_groupoid(2));
  AlgebraHom h{kg.algebra, kg.algebra,
               LinMap::zero(kg.algebra->basis(), kg.algebra->basis())};
  auto rep = hom_check(h);
  CHECK(rep.multiplicative);
  CHECK(!rep.unital);
  CHECK(!rep.bijective);
}

TEST_CASE("hom_check: basis mismatch is a structural error") {
  auto kg = build_kg(fixtures::cyclic_groupoid(2));
  auto kg3 = build_kg(fixtures::cyclic_groupoid(3));
  AlgebraHom h{kg.algebra, kg.algebra,
               LinMap::zero(kg3.algebra->basis(), kg.algebra->basis())};
  CHECK_THROWS_AS(hom_check(h), structural_error);
}

TEST_CASE("subalg_span: full basis returns the whole algebra") {
  auto kg = build_kg(fixtures::pair_groupoid_ptr(2));
  std::vector<SparseVec> gens;
  for (const auto& l : kg.algebra->basis().labels()) gens.push_back(SparseVec::basis(l));
  auto sub = subalg_span(*kg.algebra, gens);
  CHECK(sub.alg.dim() == kg.algebra->dim());
  CHECK(sub.alg.has_unit());
}

TEST_CASE("subalg_span: unit alone spans a 1-dim algebra") {
  auto kg = build_kg(fixtures::pair_groupoid_ptr(2));
  auto sub = subalg_span(*kg.algebra, {kg.algebra->unit()});
  CHECK(sub.alg.dim() == 1);
}

TEST_CASE("subalg_span is idempotent") {
  auto kg = build_kg(fixtures::cyclic_groupoid(3));
  std::vector<SparseVec> gens = {SparseVec::basis("u(z1)")};
  auto sub = subalg_span(*kg.algebra, gens);  // z1 generates all of KZ3
  CHECK(sub.alg.dim() == 3);
  std::vector<SparseVec> again;
  for (const auto& l : sub.alg.basis().labels()) again.push_back(SparseVec::basis(l));
  auto sub2 = subalg_span(sub.alg, again);
  CHECK(sub2.alg.dim() == sub.alg.dim());
}

TEST_CASE("quotient_space: no relations / all relations") {
  Basis b{std::vector<Label>{"a", "b", "c"}};
  auto q0 = quotient_space(b, {});
  CHECK(q0.quotient_basis.size() == 3);
  CHECK(q0.projection == LinMap::identity(b));
  std::vector<SparseVec> all = {SparseVec::basis("a"), SparseVec::basis("b"), SparseVec::basis("c")};
  auto q1 = quotient_space(b, all);
  CHECK(q1.quotient_basis.empty());
}

TEST_CASE("quotient_space: projection kernel is exactly the relation span") {
  Basis b{std::vector<Label>{"a", "b", "c", "d"}};
  SparseVec r1 = SparseVec::basis("a") - SparseVec::basis("b");
  SparseVec r2 = SparseVec::basis("c", Rational(2)) - SparseVec::basis("d");
  auto q = quotient_space(b, {r1, r2});
  CHECK(q.quotient_basis.size() == 2);
  CHECK(q.projection.rank() == 2);
  CHECK(q.projection.apply(r1).is_zero());
  CHECK(q.projection.apply(r2).is_zero());
  // section labels come from the original basis
  for (const auto& l : q.quotient_basis) CHECK(b.contains(l));
}

TEST_CASE("matrix_algebra: M_2(K) satisfies the matrix unit relations") {
  auto k = fixtures::k_power({"1"});
  auto m2 = matrix_algebra(2, *k);
  CHECK(m2.dim() == 4);
  auto rep = alg_check(m2);
  CHECK(rep.associative);
  CHECK(rep.unital);
  auto E = [&](int i, int j) {
    return SparseVec::basis("E[" + std::to_string(i) + "," + std::to_string(j) + "](1)");
  };
  CHECK(m2.mul(E(1, 2), E(2, 1)) == E(1, 1));
  CHECK(m2.mul(E(1, 2), E(1, 2)).is_zero());
  CHECK(m2.mul(E(1, 1), E(1, 2)) == E(1, 2));
}

TEST_CASE("direct_sum keeps blocks orthogonal") {
  auto k = fixtures::k_power({"1"});
  auto m2 = matrix_algebra(2, *k);
  auto s = direct_sum({{"b0", &*k}, {"b1", &m2}});
  CHECK(s.dim() == 5);
  CHECK(alg_check(s).associative);
  CHECK(alg_check(s).unital);
  CHECK(s.mul(SparseVec::basis("b0:1"), SparseVec::basis("b1:E[1,1](1)")).is_zero());
}

TEST_CASE("find_unit_iv: recovers declared units and rejects non-unital algebras") {
  auto kg = build_kg(fixtures::pair_groupoid_ptr(2));
  auto u = find_unit_iv(*kg.algebra);
  REQUIRE(u.has_value());
  CHECK(*u == kg.algebra->unit_iv());
  // strictly upper-triangular 2x2 matrices: x*x = 0, no unit
  std::map<std::pair<Label, Label>, SparseVec> sc;
  FiniteDimAlgebra nil({"x"}, sc, std::nullopt);
  CHECK(!find_unit_iv(nil).has_value());
}
