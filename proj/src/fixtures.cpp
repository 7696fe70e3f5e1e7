#include "gkit/fixtures.hpp"

namespace gkit {
namespace fixtures {

GroupoidPtr trivial_groupoid() {
  return std::make_shared<Groupoid>(from_group({"e"}, {{{"e", "e"}, "e"}}));
}

GroupoidPtr cyclic_groupoid(int n) {
  if (n < 1) throw argument_error("cyclic_groupoid: n must be >= 1");
  std::vector<Label> elems;
  for (int i = 0; i < n; ++i) elems.push_back("z" + std::to_string(i));
  std::map<std::pair<Label, Label>, Label> table;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[{elems[i], elems[j]}] = elems[(i + j) % n];
  return std::make_shared<Groupoid>(from_group(elems, table));
}

GroupoidPtr pair_groupoid_ptr(int n) { return std::make_shared<Groupoid>(pair_groupoid(n)); }

GroupoidPtr union_groupoid(const GroupoidPtr& a, const GroupoidPtr& b, const std::string& ta,
                           const std::string& tb) {
  return std::make_shared<Groupoid>(disjoint_union(*a, *b, ta, tb));
}

AlgebraPtr k_power(const std::vector<Label>& names) {
  Basis basis{names};
  const int n = basis.dim();
  std::vector<IVec> prod(static_cast<std::size_t>(n) * n);
  IVec unit;
  for (int i = 0; i < n; ++i) {
    prod[static_cast<std::size_t>(i) * n + i] = {{i, Rational(1)}};
    unit.emplace_back(i, Rational(1));
  }
  return std::make_shared<FiniteDimAlgebra>(std::move(basis), std::move(prod), std::move(unit));
}

AlgebraPtr dual_numbers() {
  Basis basis{std::vector<Label>{"one", "t"}};
  std::vector<IVec> prod(4);
  prod[0] = {{0, Rational(1)}};  // one*one
  prod[1] = {{1, Rational(1)}};  // one*t
  prod[2] = {{1, Rational(1)}};  // t*one
  prod[3] = {};                  // t*t = 0
  IVec unit = {{0, Rational(1)}};
  return std::make_shared<FiniteDimAlgebra>(std::move(basis), std::move(prod), std::move(unit));
}

std::vector<GroupoidFixture> groupoid_fixtures(int max_size) {
  std::vector<GroupoidFixture> all;
  all.push_back({"trivial", trivial_groupoid()});
  all.push_back({"z2", cyclic_groupoid(2)});
  all.push_back({"z3", cyclic_groupoid(3)});
  all.push_back({"z4", cyclic_groupoid(4)});
  all.push_back({"pair2", pair_groupoid_ptr(2)});
  all.push_back({"pair3", pair_groupoid_ptr(3)});
  all.push_back({"trivial_u_trivial", union_groupoid(trivial_groupoid(), trivial_groupoid(), "a", "b")});
  all.push_back({"z2_u_z2", union_groupoid(cyclic_groupoid(2), cyclic_groupoid(2), "a", "b")});
  all.push_back({"z2_u_pair2", union_groupoid(cyclic_groupoid(2), pair_groupoid_ptr(2), "z2", "p2")});
  all.push_back({"pair2_u_pair2", union_groupoid(pair_groupoid_ptr(2), pair_groupoid_ptr(2), "a", "b")});
  all.push_back({"z3_u_pair3", union_groupoid(cyclic_groupoid(3), pair_groupoid_ptr(3), "z3", "p3")});
  std::vector<GroupoidFixture> out;
  for (auto& f : all)
    if (f.groupoid->size() <= max_size) out.push_back(std::move(f));
  return out;
}

GroupoidAction pair2_on_k2() {
  GroupoidPtr g = pair_groupoid_ptr(2);
  AlgebraPtr r = k_power({"r1", "r2"});
  std::map<Label, std::vector<Label>> comps{{"(1,1)", {"r1"}}, {"(2,2)", {"r2"}}};
  std::map<Label, LinMap> beta;
  {
    LinMap b{Basis{{"r1"}}, Basis{{"r2"}}};
    b.set_column_iv(0, {{0, Rational(1)}});
    beta.emplace("(2,1)", std::move(b));
  }
  {
    LinMap b{Basis{{"r2"}}, Basis{{"r1"}}};
    b.set_column_iv(0, {{0, Rational(1)}});
    beta.emplace("(1,2)", std::move(b));
  }
  return make_action(g, r, std::move(comps), std::move(beta));
}

GroupoidAction pair2_on_k2xk2() {
  GroupoidPtr g = pair_groupoid_ptr(2);
  AlgebraPtr r = k_power({"a1", "a2", "b1", "b2"});
  std::map<Label, std::vector<Label>> comps{{"(1,1)", {"a1", "a2"}}, {"(2,2)", {"b1", "b2"}}};
  std::map<Label, LinMap> beta;
  {
    LinMap b{Basis{{"a1", "a2"}}, Basis{{"b1", "b2"}}};
    b.set_column_iv(0, {{0, Rational(1)}});
    b.set_column_iv(1, {{1, Rational(1)}});
    beta.emplace("(2,1)", std::move(b));
  }
  {
    LinMap b{Basis{{"b1", "b2"}}, Basis{{"a1", "a2"}}};
    b.set_column_iv(0, {{0, Rational(1)}});
    b.set_column_iv(1, {{1, Rational(1)}});
    beta.emplace("(1,2)", std::move(b));
  }
  return make_action(g, r, std::move(comps), std::move(beta));
}

GroupoidAction z2_swap_on_k2() {
  GroupoidPtr g = cyclic_groupoid(2);
  AlgebraPtr r = k_power({"p", "q"});
  std::map<Label, std::vector<Label>> comps{{"z0", {"p", "q"}}};
  std::map<Label, LinMap> beta;
  LinMap b{Basis{{"p", "q"}}, Basis{{"p", "q"}}};
  b.set_column_iv(0, {{1, Rational(1)}});
  b.set_column_iv(1, {{0, Rational(1)}});
  beta.emplace("z1", std::move(b));
  return make_action(g, r, std::move(comps), std::move(beta));
}

GroupoidAction zn_cycle_on_kn(int n) {
  GroupoidPtr g = cyclic_groupoid(n);
  std::vector<Label> names;
  for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  AlgebraPtr r = k_power(names);
  std::map<Label, std::vector<Label>> comps{{"z0", names}};
  std::map<Label, LinMap> beta;
  for (int k = 1; k < n; ++k) {
    LinMap b{Basis{names}, Basis{names}};
    for (int i = 0; i < n; ++i) b.set_column_iv(i, {{(i + k) % n, Rational(1)}});
    beta.emplace("z" + std::to_string(k), std::move(b));
  }
  return make_action(g, r, std::move(comps), std::move(beta));
}

GroupoidAction z2_u_pair2_on_k3() {
  GroupoidPtr g = union_groupoid(cyclic_groupoid(2), pair_groupoid_ptr(2), "z2", "p2");
  AlgebraPtr r = k_power({"c", "r1", "r2"});
  // the 1-dim unital ideal E over the Z/2 identity forces the trivial action
  std::map<Label, std::vector<Label>> comps{
      {"z2:z0", {"c"}}, {"p2:(1,1)", {"r1"}}, {"p2:(2,2)", {"r2"}}};
  std::map<Label, LinMap> beta;
  {
    LinMap b{Basis{{"c"}}, Basis{{"c"}}};
    b.set_column_iv(0, {{0, Rational(1)}});
    beta.emplace("z2:z1", std::move(b));
  }
  {
    LinMap b{Basis{{"r1"}}, Basis{{"r2"}}};
    b.set_column_iv(0, {{0, Rational(1)}});
    beta.emplace("p2:(2,1)", std::move(b));
  }
  {
    LinMap b{Basis{{"r2"}}, Basis{{"r1"}}};
    b.set_column_iv(0, {{0, Rational(1)}});
    beta.emplace("p2:(1,2)", std::move(b));
  }
  return make_action(g, r, std::move(comps), std::move(beta));
}

namespace {

GroupoidAction pair2_u_pair2_on_k4() {
  GroupoidPtr g = union_groupoid(pair_groupoid_ptr(2), pair_groupoid_ptr(2), "a", "b");
  AlgebraPtr r = k_power({"s1", "s2", "t1", "t2"});
  std::map<Label, std::vector<Label>> comps{{"a:(1,1)", {"s1"}},
                                            {"a:(2,2)", {"s2"}},
                                            {"b:(1,1)", {"t1"}},
                                            {"b:(2,2)", {"t2"}}};
  auto one_dim = [](const Label& from, const Label& to) {
    LinMap b{Basis{{from}}, Basis{{to}}};
    b.set_column_iv(0, {{0, Rational(1)}});
    return b;
  };
  std::map<Label, LinMap> beta;
  beta.emplace("a:(2,1)", one_dim("s1", "s2"));
  beta.emplace("a:(1,2)", one_dim("s2", "s1"));
  beta.emplace("b:(2,1)", one_dim("t1", "t2"));
  beta.emplace("b:(1,2)", one_dim("t2", "t1"));
  return make_action(g, r, std::move(comps), std::move(beta));
}

GroupoidAction pair3_on_k3() {
  GroupoidPtr g = pair_groupoid_ptr(3);
  AlgebraPtr r = k_power({"r1", "r2", "r3"});
  std::map<Label, std::vector<Label>> comps;
  for (int i = 1; i <= 3; ++i)
    comps["(" + std::to_string(i) + "," + std::to_string(i) + ")"] = {"r" + std::to_string(i)};
  std::map<Label, LinMap> beta;
  for (int j = 1; j <= 3; ++j)
    for (int i = 1; i <= 3; ++i) {
      if (i == j) continue;
      LinMap b{Basis{{"r" + std::to_string(i)}}, Basis{{"r" + std::to_string(j)}}};
      b.set_column_iv(0, {{0, Rational(1)}});
      beta.emplace("(" + std::to_string(j) + "," + std::to_string(i) + ")", std::move(b));
    }
  return make_action(g, r, std::move(comps), std::move(beta));
}

GroupoidAction trivial_on_k() {
  GroupoidPtr g = trivial_groupoid();
  AlgebraPtr r = k_power({"x"});
  return make_action(g, r, {{"e", {"x"}}}, {});
}

GroupoidAction z2_trivial_on_k() {
  GroupoidPtr g = cyclic_groupoid(2);
  AlgebraPtr r = k_power({"x"});
  std::map<Label, LinMap> beta;
  LinMap b{Basis{{"x"}}, Basis{{"x"}}};
  b.set_column_iv(0, {{0, Rational(1)}});
  beta.emplace("z1", std::move(b));
  return make_action(g, r, {{"z0", {"x"}}}, std::move(beta));
}

}  // namespace

std::vector<ActionFixture> action_fixtures(int max_size) {
  std::vector<ActionFixture> all;
  all.push_back({"trivial_on_K", trivial_on_k()});
  all.push_back({"z2_trivial_on_K", z2_trivial_on_k()});
  all.push_back({"z2_swap_on_K2", z2_swap_on_k2()});
  all.push_back({"z3_cycle_on_K3", zn_cycle_on_kn(3)});
  all.push_back({"z4_cycle_on_K4", zn_cycle_on_kn(4)});
  all.push_back({"pair2_on_K2", pair2_on_k2()});
  all.push_back({"pair2_on_K2xK2", pair2_on_k2xk2()});
  all.push_back({"z2_u_pair2_on_K3", z2_u_pair2_on_k3()});
  all.push_back({"pair2_u_pair2_on_K4", pair2_u_pair2_on_k4()});
  all.push_back({"pair3_on_K3", pair3_on_k3()});
  std::vector<ActionFixture> out;
  for (auto& f : all)
    if (f.action.groupoid->size() <= max_size) out.push_back(std::move(f));
  return out;
}

GradedAlgebra kg_self_graded(const GroupoidPtr& g) {
  GroupoidAlgebra kg = build_kg(g);
  std::map<Label, Label> grade;
  for (const auto& a : g->arrows()) grade[u_label(a)] = a;
  return make_graded(g, kg.algebra, std::move(grade));
}

GradedAlgebra dualnum_z2_graded() {
  GroupoidPtr g = cyclic_groupoid(2);
  AlgebraPtr a = dual_numbers();
  return make_graded(g, a, {{"one", "z0"}, {"t", "z1"}});
}

GradedAlgebra skew_ring_graded(const GroupoidAction& a) {
  SkewGroupoidRing sk = skew_ring(a);
  return make_graded(sk.groupoid, sk.algebra, sk.grade);
}

std::vector<GradingFixture> grading_fixtures(int max_size) {
  std::vector<GradingFixture> all;
  all.push_back({"kg_self_trivial", kg_self_graded(trivial_groupoid())});
  all.push_back({"kz2_self", kg_self_graded(cyclic_groupoid(2))});
  all.push_back({"kz3_self", kg_self_graded(cyclic_groupoid(3))});
  all.push_back({"kz4_self", kg_self_graded(cyclic_groupoid(4))});
  all.push_back({"dualnum_z2", dualnum_z2_graded()});
  all.push_back({"kg_self_pair2", kg_self_graded(pair_groupoid_ptr(2))});
  all.push_back({"kg_self_z2_u_pair2",
                 kg_self_graded(union_groupoid(cyclic_groupoid(2), pair_groupoid_ptr(2), "z2", "p2"))});
  all.push_back({"kg_self_pair2_u_pair2",
                 kg_self_graded(union_groupoid(pair_groupoid_ptr(2), pair_groupoid_ptr(2), "a", "b"))});
  all.push_back({"skew_pair2_on_K2", skew_ring_graded(pair2_on_k2())});
  all.push_back({"skew_z2_swap_on_K2", skew_ring_graded(z2_swap_on_k2())});
  std::vector<GradingFixture> out;
  for (auto& f : all)
    if (f.graded.groupoid->size() <= max_size) out.push_back(std::move(f));
  return out;
}

}  // namespace fixtures
}  // namespace gkit
