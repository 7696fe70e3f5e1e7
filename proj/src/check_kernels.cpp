#include "gkit/check_kernels.hpp"

#include <atomic>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gkit {

namespace {

// Dense accumulator with a touched list; clearing is O(|touched|).
struct Scratch {
  std::vector<Rational> acc;
  std::vector<int> touched;
  explicit Scratch(int n) : acc(n) { touched.reserve(64); }
  void add(int i, const Rational& c) {
    if (acc[i] == 0) touched.push_back(i);
    acc[i] += c;
  }
  // Checks the accumulated value is identically zero and resets.
  bool zero_and_clear() {
    bool ok = true;
    for (int i : touched) {
      if (acc[i] != 0) ok = false;
      acc[i] = 0;
    }
    touched.clear();
    return ok;
  }
};

bool triple_associates(const FiniteDimAlgebra& a, int i, int j, int k, Scratch& s) {
  for (const auto& [t, c] : a.prod(i, j))
    for (const auto& [u, d] : a.prod(t, k)) s.add(u, c * d);
  for (const auto& [t, c] : a.prod(j, k))
    for (const auto& [u, d] : a.prod(i, t)) s.add(u, -(c * d));
  return s.zero_and_clear();
}

std::optional<std::array<int, 3>> assoc_serial(const FiniteDimAlgebra& a) {
  const int n = a.dim();
  Scratch s(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!triple_associates(a, i, j, k, s)) return std::array<int, 3>{i, j, k};
  return std::nullopt;
}

bool hom_pair_ok(const FiniteDimAlgebra& dom, const FiniteDimAlgebra& cod, const LinMap& m,
                 int i, int j) {
  IVec lhs = cod.mul_iv(m.column_iv(i), m.column_iv(j));
  IVec rhs = m.apply_iv(dom.prod(i, j));
  return lhs == rhs;
}

std::optional<std::array<int, 2>> hom_serial(const FiniteDimAlgebra& dom,
                                             const FiniteDimAlgebra& cod, const LinMap& m) {
  const int n = dom.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!hom_pair_ok(dom, cod, m, i, j)) return std::array<int, 2>{i, j};
  return std::nullopt;
}

}  // namespace

std::optional<std::array<int, 3>> find_assoc_violation(const FiniteDimAlgebra& a,
                                                       ExecPolicy policy) {
  const int n = a.dim();
  if (n == 0) return std::nullopt;
#ifdef _OPENMP
  if (policy == ExecPolicy::Parallel) {
    const std::int64_t total = static_cast<std::int64_t>(n) * n * n;
    std::atomic<bool> found{false};
#pragma omp parallel
    {
      Scratch s(n);
#pragma omp for schedule(dynamic, 256)
      for (std::int64_t idx = 0; idx < total; ++idx) {
        if (found.load(std::memory_order_relaxed)) continue;
        int k = static_cast<int>(idx % n);
        int j = static_cast<int>((idx / n) % n);
        int i = static_cast<int>(idx / (static_cast<std::int64_t>(n) * n));
        if (!triple_associates(a, i, j, k, s)) found.store(true, std::memory_order_relaxed);
      }
    }
    // Violations are rare (planted or bugs); rescan serially for the first
    // witness so parallel and serial results coincide.
    if (found.load()) return assoc_serial(a);
    return std::nullopt;
  }
#endif
  (void)policy;
  return assoc_serial(a);
}

std::optional<std::array<int, 2>> find_hom_violation(const FiniteDimAlgebra& dom,
                                                     const FiniteDimAlgebra& cod,
                                                     const LinMap& m, ExecPolicy policy) {
  const int n = dom.dim();
  if (n == 0) return std::nullopt;
#ifdef _OPENMP
  if (policy == ExecPolicy::Parallel) {
    const std::int64_t total = static_cast<std::int64_t>(n) * n;
    std::atomic<bool> found{false};
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t idx = 0; idx < total; ++idx) {
      if (found.load(std::memory_order_relaxed)) continue;
      int j = static_cast<int>(idx % n);
      int i = static_cast<int>(idx / n);
      if (!hom_pair_ok(dom, cod, m, i, j)) found.store(true, std::memory_order_relaxed);
    }
    if (found.load()) return hom_serial(dom, cod, m);
    return std::nullopt;
  }
#endif
  (void)policy;
  return hom_serial(dom, cod, m);
}

}  // namespace gkit
