#pragma once

#include <array>
#include <string>
#include <vector>

#include "finalg/algebra.hpp"
#include "finalg/error.hpp"
#include "finalg/lattice.hpp"

namespace finalg {

namespace detail {

// Backtracks over => tables in row-major cell order. SH4 forces the
// diagonal, the SH2 instance at a cell restricts its candidates to
// {c : x & c = x & y}, and every SH3 instance is re-checked as soon as the
// later of its two cells is assigned, so dead branches die early. Emission
// order is therefore lexicographic in the table cells.
struct ShEnumerator {
  const FiniteLattice& lat;
  int n;
  std::vector<std::vector<int>> table;
  std::vector<std::vector<std::vector<int>>> candidates;  // per cell
  // SH3 instances (x,y,z) indexed by the row-major rank of the last of the
  // cells (y,z) and (x&y, x&z) they read.
  std::vector<std::vector<std::array<int, 3>>> instances;
  std::vector<AlgebraTable> out;

  explicit ShEnumerator(const FiniteLattice& l) : lat(l), n(l.size()) {
    table.assign(n, std::vector<int>(n, -1));
    candidates.assign(n, std::vector<std::vector<int>>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (x == y) {
          candidates[x][y] = {lat.top()};
          continue;
        }
        for (int c = 0; c < n; ++c)
          if (lat.meet(x, c) == lat.meet(x, y)) candidates[x][y].push_back(c);
      }
    instances.assign(n * n, {});
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          int cell_a = y * n + z;
          int cell_b = lat.meet(x, y) * n + lat.meet(x, z);
          instances[std::max(cell_a, cell_b)].push_back({x, y, z});
        }
  }

  bool sh3_holds(int x, int y, int z) const {
    return lat.meet(x, table[y][z]) ==
           lat.meet(x, table[lat.meet(x, y)][lat.meet(x, z)]);
  }

  void fill(int rank) {
    if (rank == n * n) {
      emit();
      return;
    }
    int x = rank / n, y = rank % n;
    for (int c : candidates[x][y]) {
      table[x][y] = c;
      bool ok = true;
      for (const auto& inst : instances[rank])
        if (!sh3_holds(inst[0], inst[1], inst[2])) {
          ok = false;
          break;
        }
      if (ok) fill(rank + 1);
    }
    table[x][y] = -1;
  }

  void emit() {
    AlgebraTable a = make_algebra(
        "sh" + std::to_string(out.size()), lat, SignatureKind::SH);
    OpTable t;
    t.arity = 2;
    t.binary = table;
    a.ops[op::imp] = std::move(t);
    out.push_back(std::move(a));
  }
};

}  // namespace detail

/// All semi-Heyting implication tables on a lattice, in lexicographic
/// cell order. Exhaustive search; the bound exists because the search space
/// grows as n^(n^2).
inline std::vector<AlgebraTable> enumerate_semi_heyting(
    const FiniteLattice& lat, int max_size = 4) {
  if (lat.size() > max_size)
    throw Error(ErrorKind::SizeBound,
                "lattice has " + std::to_string(lat.size()) +
                    " elements, bound is " + std::to_string(max_size));
  detail::ShEnumerator e(lat);
  e.fill(0);
  return std::move(e.out);
}

}  // namespace finalg
