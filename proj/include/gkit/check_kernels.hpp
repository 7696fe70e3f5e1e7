#pragma once

#include "gkit/algebra.hpp"

#include <array>
#include <optional>

namespace gkit {

// Exhaustive law scans over immutable algebra data. Each kernel has a serial
// reference implementation and an OpenMP variant; both return the
// lexicographically first witness, so results are identical by construction
// and the pair is cross-checked in the test suite.

// First triple (i,j,k) with (x_i x_j) x_k != x_i (x_j x_k).
std::optional<std::array<int, 3>> find_assoc_violation(const FiniteDimAlgebra& a,
                                                       ExecPolicy policy);

// First pair (i,j) with h(x_i) h(x_j) != h(x_i x_j), images taken through m.
std::optional<std::array<int, 2>> find_hom_violation(const FiniteDimAlgebra& dom,
                                                     const FiniteDimAlgebra& cod,
                                                     const LinMap& m, ExecPolicy policy);

}  // namespace gkit
