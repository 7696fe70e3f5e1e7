// Benchmark comparing the serial reference law kernels against the OpenMP
// variants on growing groupoid algebras and smash products.

#include "gkit/check_kernels.hpp"
#include "gkit/fixtures.hpp"

#include <chrono>
#include <cstdio>

using namespace gkit;

namespace {

double time_assoc(const FiniteDimAlgebra& a, ExecPolicy policy, bool& ok) {
  auto t0 = std::chrono::steady_clock::now();
  ok = !find_assoc_violation(a, policy).has_value();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

double time_hom(const FiniteDimAlgebra& a, ExecPolicy policy, bool& ok) {
  LinMap id = LinMap::identity(a.basis());
  auto t0 = std::chrono::steady_clock::now();
  ok = !find_hom_violation(a, a, id, policy).has_value();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void run(const char* name, const FiniteDimAlgebra& a) {
  bool ok_s = false, ok_p = false;
  double assoc_s = time_assoc(a, ExecPolicy::Serial, ok_s);
  double assoc_p = time_assoc(a, ExecPolicy::Parallel, ok_p);
  if (ok_s != ok_p) {
    std::printf("MISMATCH on %s\n", name);
    return;
  }
  bool hs = false, hp = false;
  double hom_s = time_hom(a, ExecPolicy::Serial, hs);
  double hom_p = time_hom(a, ExecPolicy::Parallel, hp);
  std::printf("%-28s dim %4d  assoc %9.1f ms -> %9.1f ms (x%.1f)   hom %8.1f ms -> %8.1f ms (x%.1f)\n",
              name, a.dim(), assoc_s, assoc_p, assoc_p > 0 ? assoc_s / assoc_p : 0.0, hom_s, hom_p,
              hom_p > 0 ? hom_s / hom_p : 0.0);
}

}  // namespace

int main() {
  std::printf("law-check kernels: serial reference vs OpenMP\n\n");
  for (int n = 2; n <= 12; n += 2) {
    auto kg = build_kg(fixtures::pair_groupoid_ptr(n));
    std::string name = "KG(pair_" + std::to_string(n) + ")";
    run(name.c_str(), *kg.algebra);
  }
  {
    auto graded = fixtures::kg_self_graded(fixtures::pair_groupoid_ptr(3));
    auto s = smash(graded);
    run("KG(pair_3) # KG*", *s.algebra);
  }
  {
    auto graded = fixtures::kg_self_graded(
        fixtures::union_groupoid(fixtures::pair_groupoid_ptr(2), fixtures::pair_groupoid_ptr(2), "a", "b"));
    auto s = smash(graded);
    auto act = smash_action(s);
    auto c = smash_skew_ring(act, s);
    run("(KG # KG*) ⋆ G, |G|=8", *c.ring.algebra);
  }
  return 0;
}
