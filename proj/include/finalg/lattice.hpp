#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "finalg/error.hpp"

namespace finalg {

/// Finite bounded lattice over named elements indexed 0..n-1.
///
/// The order and both operation tables are stored densely and the object is
/// immutable after construction, so instances can be shared freely between
/// concurrent readers. Construction fails loudly: a missing meet/join, a
/// cycle in the declared order or missing global bounds each raise their own
/// ErrorKind.
class FiniteLattice {
 public:
  FiniteLattice() = default;

  // Builds from an arbitrary set of order pairs (lower, upper). The pairs
  // need not be covers; the reflexive-transitive closure is taken and the
  // covering relation is recovered on demand.
  static FiniteLattice from_covers(
      std::vector<std::string> names,
      const std::vector<std::pair<std::string, std::string>>& coverings) {
    const int n = static_cast<int>(names.size());
    if (n == 0)
      throw Error(ErrorKind::InvalidArgument, "element list is empty");
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (names[i] == names[j])
          throw Error(ErrorKind::InvalidArgument,
                      "duplicate element name '" + names[i] + "'");

    std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
    auto at = [&](int x, int y) -> uint8_t& {
      return leq[static_cast<size_t>(x) * n + y];
    };
    for (int i = 0; i < n; ++i) at(i, i) = 1;
    for (const auto& [lo, hi] : coverings) {
      int a = index_in(names, lo);
      int b = index_in(names, hi);
      if (a < 0)
        throw Error(ErrorKind::UnknownElement, "'" + lo + "' in covering");
      if (b < 0)
        throw Error(ErrorKind::UnknownElement, "'" + hi + "' in covering");
      at(a, b) = 1;
    }
    // Warshall closure.
    for (int k = 0; k < n; ++k)
      for (int x = 0; x < n; ++x)
        if (at(x, k))
          for (int y = 0; y < n; ++y)
            if (at(k, y)) at(x, y) = 1;
    return from_leq(std::move(names), std::move(leq));
  }

  // Builds from a complete order relation (row-major n*n, leq[x*n+y] != 0
  // meaning x <= y). The relation must already be reflexive and transitive.
  static FiniteLattice from_leq(std::vector<std::string> names,
                                std::vector<uint8_t> leq) {
    FiniteLattice lat;
    lat.names_ = std::move(names);
    lat.leq_ = std::move(leq);
    const int n = lat.size();
    if (n == 0)
      throw Error(ErrorKind::InvalidArgument, "element list is empty");
    if (lat.leq_.size() != static_cast<size_t>(n) * n)
      throw Error(ErrorKind::InvalidArgument, "order relation has wrong size");

    for (int x = 0; x < n; ++x)
      if (!lat.leq(x, x))
        throw Error(ErrorKind::InvalidArgument,
                    "order not reflexive at " + lat.names_[x]);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (x != y && lat.leq(x, y) && lat.leq(y, x))
          throw Error(ErrorKind::CycleInOrder,
                      lat.names_[x] + " and " + lat.names_[y] +
                          " are mutually below each other");
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (lat.leq(x, y))
          for (int z = 0; z < n; ++z)
            if (lat.leq(y, z) && !lat.leq(x, z))
              throw Error(ErrorKind::InvalidArgument,
                          "order not transitive via " + lat.names_[y]);

    // Global bounds first: once they exist every pair has a nonempty set of
    // lower and upper bounds, so the only remaining defect is a missing
    // greatest/least one.
    lat.bottom_ = lat.top_ = -1;
    for (int x = 0; x < n; ++x) {
      bool is_bot = true, is_top = true;
      for (int y = 0; y < n; ++y) {
        is_bot = is_bot && lat.leq(x, y);
        is_top = is_top && lat.leq(y, x);
      }
      if (is_bot) lat.bottom_ = x;
      if (is_top) lat.top_ = x;
    }
    if (lat.bottom_ < 0)
      throw Error(ErrorKind::NotBounded, "no least element");
    if (lat.top_ < 0)
      throw Error(ErrorKind::NotBounded, "no greatest element");

    lat.meet_.assign(static_cast<size_t>(n) * n, -1);
    lat.join_.assign(static_cast<size_t>(n) * n, -1);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int m = lat.extremum(x, y, /*lower=*/true);
        if (m < 0)
          throw Error(ErrorKind::NotALattice, "no meet for " + lat.names_[x] +
                                                  ", " + lat.names_[y]);
        int j = lat.extremum(x, y, /*lower=*/false);
        if (j < 0)
          throw Error(ErrorKind::NotALattice, "no join for " + lat.names_[x] +
                                                  ", " + lat.names_[y]);
        lat.meet_[static_cast<size_t>(x) * n + y] = m;
        lat.join_[static_cast<size_t>(x) * n + y] = j;
      }
    return lat;
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int x) const { return names_[x]; }

  int index_of(std::string_view name) const {
    for (int i = 0; i < size(); ++i)
      if (names_[i] == name) return i;
    return -1;
  }

  bool leq(int x, int y) const {
    return leq_[static_cast<size_t>(x) * size() + y] != 0;
  }
  int meet(int x, int y) const {
    return meet_[static_cast<size_t>(x) * size() + y];
  }
  int join(int x, int y) const {
    return join_[static_cast<size_t>(x) * size() + y];
  }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  // y covers x: x < y with nothing strictly between.
  bool covers(int x, int y) const {
    if (x == y || !leq(x, y)) return false;
    for (int z = 0; z < size(); ++z)
      if (z != x && z != y && leq(x, z) && leq(z, y)) return false;
    return true;
  }

  // All covering pairs (lower, upper), sorted by index pair.
  std::vector<std::pair<int, int>> cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < size(); ++x)
      for (int y = 0; y < size(); ++y)
        if (covers(x, y)) out.emplace_back(x, y);
    return out;
  }

  std::vector<int> upset(int x) const {
    std::vector<int> out;
    for (int y = 0; y < size(); ++y)
      if (leq(x, y)) out.push_back(y);
    return out;
  }
  std::vector<int> downset(int x) const {
    std::vector<int> out;
    for (int y = 0; y < size(); ++y)
      if (leq(y, x)) out.push_back(y);
    return out;
  }

  // Meet/join tables are derived from the order, so comparing names + order
  // is a full structural comparison.
  bool operator==(const FiniteLattice& o) const {
    return names_ == o.names_ && leq_ == o.leq_;
  }

 private:
  static int index_in(const std::vector<std::string>& names,
                      const std::string& s) {
    for (int i = 0; i < static_cast<int>(names.size()); ++i)
      if (names[i] == s) return i;
    return -1;
  }

  // Greatest lower / least upper bound of {x, y}, or -1 if there is none.
  int extremum(int x, int y, bool lower) const {
    for (int z = 0; z < size(); ++z) {
      bool zb = lower ? (leq(z, x) && leq(z, y)) : (leq(x, z) && leq(y, z));
      if (!zb) continue;
      bool dominates = true;
      for (int w = 0; w < size(); ++w) {
        bool wb = lower ? (leq(w, x) && leq(w, y)) : (leq(x, w) && leq(y, w));
        if (wb && !(lower ? leq(w, z) : leq(z, w))) {
          dominates = false;
          break;
        }
      }
      if (dominates) return z;
    }
    return -1;
  }

  std::vector<std::string> names_;
  std::vector<uint8_t> leq_;
  std::vector<int> meet_, join_;
  int bottom_ = -1, top_ = -1;
};

inline FiniteLattice build_lattice(
    std::vector<std::string> names,
    const std::vector<std::pair<std::string, std::string>>& coverings) {
  return FiniteLattice::from_covers(std::move(names), coverings);
}

namespace detail {
inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}
}  // namespace detail

/// Deterministic DOT rendering of the covering relation: nodes in index
/// order, edges lower -> upper sorted by index pair, LF line endings.
inline std::string hasse_dot(const FiniteLattice& lat) {
  std::string out = "digraph hasse {\n  rankdir=BT;\n";
  for (int i = 0; i < lat.size(); ++i)
    out += "  " + detail::dot_quote(lat.name(i)) + ";\n";
  for (const auto& [lo, hi] : lat.cover_pairs())
    out += "  " + detail::dot_quote(lat.name(lo)) + " -> " +
           detail::dot_quote(lat.name(hi)) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace finalg
