#pragma once

#include <string>
#include <utility>
#include <vector>

#include "finalg/lattice.hpp"

namespace finalg {

/// n-element chain 0 < 1 < ... < n-1.
inline FiniteLattice chain(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i)
    covers.emplace_back(names[i], names[i + 1]);
  return build_lattice(std::move(names), covers);
}

/// The five-element diamond M3: three incomparable atoms between 0 and 1.
/// Not distributive, so it carries no semi-Heyting structure at all; it is
/// in the catalog as the canonical empty case.
inline FiniteLattice diamond() {
  return build_lattice({"0", "a", "b", "c", "1"},
                       {{"0", "a"},
                        {"0", "b"},
                        {"0", "c"},
                        {"a", "1"},
                        {"b", "1"},
                        {"c", "1"}});
}

/// 2x2 grid (the four-element Boolean lattice).
inline FiniteLattice grid2x2() {
  return build_lattice({"0", "a", "b", "1"},
                       {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

/// The small-lattice test bed used by the property and acceptance suites.
inline std::vector<std::pair<std::string, FiniteLattice>> lattice_catalog() {
  std::vector<std::pair<std::string, FiniteLattice>> out;
  for (int n = 1; n <= 4; ++n)
    out.emplace_back("chain" + std::to_string(n), chain(n));
  out.emplace_back("diamond", diamond());
  out.emplace_back("grid2x2", grid2x2());
  return out;
}

}  // namespace finalg
