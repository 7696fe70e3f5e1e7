#pragma once

#include "gkit/grading.hpp"

#include <string>
#include <vector>

namespace gkit {
namespace fixtures {

// Canonical desk-scale fixture family: cyclic groups Z/n (n <= 4), pair
// groupoids (n <= 3), disjoint unions, and the standard actions/gradings on
// them. Everything downstream (tests, selftest, acceptance) iterates these.

GroupoidPtr trivial_groupoid();
GroupoidPtr cyclic_groupoid(int n);        // Z/n as a one-object groupoid, arrows z0..z{n-1}
GroupoidPtr pair_groupoid_ptr(int n);
GroupoidPtr union_groupoid(const GroupoidPtr& a, const GroupoidPtr& b, const std::string& ta,
                           const std::string& tb);

// K^m with orthogonal idempotent basis named `names`.
AlgebraPtr k_power(const std::vector<Label>& names);
// Dual numbers K[t]/(t^2), basis {"one","t"}.
AlgebraPtr dual_numbers();

struct GroupoidFixture {
  std::string name;
  GroupoidPtr groupoid;
};
std::vector<GroupoidFixture> groupoid_fixtures(int max_size);

struct ActionFixture {
  std::string name;
  GroupoidAction action;
};
std::vector<ActionFixture> action_fixtures(int max_size);

struct GradingFixture {
  std::string name;
  GradedAlgebra graded;
};
std::vector<GradingFixture> grading_fixtures(int max_size);

// Named one-off builders used directly in tests.
GroupoidAction pair2_on_k2();          // E_{(1,1)} = K x 0, E_{(2,2)} = 0 x K
GroupoidAction pair2_on_k2xk2();       // two-dimensional components
GroupoidAction z2_swap_on_k2();
GroupoidAction zn_cycle_on_kn(int n);  // Z/n permuting K^n cyclically
GroupoidAction z2_u_pair2_on_k3();
GradedAlgebra kg_self_graded(const GroupoidPtr& g);
GradedAlgebra dualnum_z2_graded();
GradedAlgebra skew_ring_graded(const GroupoidAction& a);  // E_g δ_g fibers

}  // namespace fixtures
}  // namespace gkit
