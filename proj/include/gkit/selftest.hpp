#pragma once

#include <string>
#include <vector>

namespace gkit {

struct SelftestEntry {
  std::string fixture;
  std::string stage;
  bool ok = false;
  std::string detail;
};

struct SelftestResult {
  int max_size = 0;
  bool ok = false;
  std::vector<SelftestEntry> entries;  // sorted by (fixture, stage)
};

// Runs every checker over the built-in fixture family bounded by |G| <= max_size:
// groupoid axioms, weak bialgebra axioms, action/module round-trips, skew and
// smash laws, both matrix-block decompositions, and the exact sequence.
SelftestResult run_selftest(int max_size);

std::string selftest_to_json(const SelftestResult& r);

}  // namespace gkit
