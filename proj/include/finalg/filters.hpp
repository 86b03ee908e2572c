#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finalg/algebra.hpp"
#include "finalg/checks.hpp"
#include "finalg/error.hpp"

namespace finalg {

/// A subset of a carrier, stored as a bitset, with the three i-filter
/// conditions recomputed from scratch (never trusted from input):
/// IF1 lattice filter, IF2 contains all dense elements, IF3 closure under
/// (x => z) | (x & t) for z | t in F.
struct FilterSet {
  uint64_t mask = 0;
  bool is_filter = false;
  bool contains_dense = false;
  bool closed_under_if3 = false;
  // z, t, x, value of (x => z) | (x & t); set when IF3 fails.
  std::optional<std::array<int, 4>> if3_witness;

  bool all() const { return is_filter && contains_dense && closed_under_if3; }
  bool contains(int x) const { return (mask >> x) & 1; }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int i = 0; i < 64; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }
};

inline uint64_t mask_of(const std::vector<int>& members) {
  uint64_t m = 0;
  for (int x : members) m |= uint64_t{1} << x;
  return m;
}

namespace detail {
inline void require_small(int n) {
  if (n > 64)
    throw Error(ErrorKind::SizeBound,
                "filter machinery is limited to 64 elements");
}
}  // namespace detail

/// Dense elements {x : x* = 0}, cross-checked against the characterization
/// {y | y* : y in carrier}; a mismatch means the input is not semi-Heyting.
inline std::vector<int> dense_elements(const AlgebraTable& a) {
  detail::require_ops(a, {{op::imp, 2}});
  std::vector<int> direct;
  for (int x = 0; x < a.n(); ++x)
    if (pseudocomplement(a, x) == a.bottom()) direct.push_back(x);
  std::vector<uint8_t> from_joins(a.n(), 0);
  for (int y = 0; y < a.n(); ++y)
    from_joins[a.join(y, pseudocomplement(a, y))] = 1;
  for (int x = 0; x < a.n(); ++x) {
    bool dense = pseudocomplement(a, x) == a.bottom();
    if (dense != (from_joins[x] != 0))
      throw Error(ErrorKind::DenseCharacterizationMismatch,
                  "element " + a.elem(x) +
                      (dense ? " is dense but not of the form y|y*"
                             : " is y|y* but not dense"));
  }
  return direct;
}

/// All lattice filters (nonempty meet-closed up-sets). In a finite lattice
/// every filter is the up-set of its least member, so there are exactly n,
/// returned sorted by their member lists.
inline std::vector<FilterSet> enumerate_filters(const FiniteLattice& lat,
                                                int max_size = 64) {
  detail::require_small(lat.size());
  if (lat.size() > max_size)
    throw Error(ErrorKind::SizeBound,
                "lattice has " + std::to_string(lat.size()) +
                    " elements, bound is " + std::to_string(max_size));
  std::vector<std::vector<int>> member_lists;
  for (int x = 0; x < lat.size(); ++x) member_lists.push_back(lat.upset(x));
  std::sort(member_lists.begin(), member_lists.end());
  std::vector<FilterSet> out;
  for (const auto& members : member_lists) {
    FilterSet f;
    f.mask = mask_of(members);
    f.is_filter = true;  // recomputed by is_ifilter when it matters
    out.push_back(f);
  }
  return out;
}

/// Decides IF1-IF3 for an arbitrary subset. Flags are independent; the IF3
/// witness is the first failing triple in the sweep order (x outer, then z,
/// then t), reported as (z, t, x).
inline FilterSet is_ifilter(const AlgebraTable& a, uint64_t mask) {
  detail::require_small(a.n());
  detail::require_ops(a, {{op::imp, 2}});
  const int n = a.n();
  FilterSet f;
  f.mask = mask;

  f.is_filter = mask != 0;
  for (int x = 0; x < n && f.is_filter; ++x) {
    if (!f.contains(x)) continue;
    for (int y = 0; y < n; ++y) {
      if (a.leq(x, y) && !f.contains(y)) {
        f.is_filter = false;
        break;
      }
      if (f.contains(y) && !f.contains(a.meet(x, y))) {
        f.is_filter = false;
        break;
      }
    }
  }

  f.contains_dense = true;
  for (int d : dense_elements(a))
    if (!f.contains(d)) f.contains_dense = false;

  f.closed_under_if3 = true;
  for (int x = 0; x < n && f.closed_under_if3; ++x)
    for (int z = 0; z < n && f.closed_under_if3; ++z)
      for (int t = 0; t < n; ++t) {
        if (!f.contains(a.join(z, t))) continue;
        int value = a.join(a.imp(x, z), a.meet(x, t));
        if (!f.contains(value)) {
          f.closed_under_if3 = false;
          f.if3_witness = {{z, t, x, value}};
          break;
        }
      }
  return f;
}

inline FilterSet is_ifilter(const AlgebraTable& a,
                            const std::vector<int>& members) {
  detail::require_small(a.n());
  return is_ifilter(a, mask_of(members));
}

/// Positive elements {x : ~x <= x}, cross-checked against {x | ~x}.
inline std::vector<int> positives(const AlgebraTable& a) {
  detail::require_ops(a, {{op::neg, 1}});
  std::vector<int> direct;
  for (int x = 0; x < a.n(); ++x)
    if (a.leq(a.neg(x), x)) direct.push_back(x);
  std::vector<uint8_t> from_joins(a.n(), 0);
  for (int x = 0; x < a.n(); ++x) from_joins[a.join(x, a.neg(x))] = 1;
  for (int x = 0; x < a.n(); ++x) {
    bool pos = a.leq(a.neg(x), x);
    if (pos != (from_joins[x] != 0))
      throw Error(ErrorKind::PositiveCharacterizationMismatch,
                  "element " + a.elem(x));
  }
  return direct;
}

/// Given a subset S of the full twist carrier closed under the pair
/// operations and projecting onto the base, recovers the i-filter
/// E = {a | b : (a, b) in S}.
inline FilterSet extract_ifilter(
    const AlgebraTable& base, const std::vector<std::pair<int, int>>& sub) {
  detail::require_small(base.n());
  detail::require_ops(base, {{op::imp, 2}});
  auto pair_name = [&](const std::pair<int, int>& p) {
    return "(" + base.elem(p.first) + "," + base.elem(p.second) + ")";
  };
  std::vector<std::pair<int, int>> pairs = sub;
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  auto member = [&](int x, int y) {
    return std::binary_search(pairs.begin(), pairs.end(),
                              std::make_pair(x, y));
  };
  for (const auto& p : pairs) {
    if (p.first < 0 || p.first >= base.n() || p.second < 0 ||
        p.second >= base.n())
      throw Error(ErrorKind::InvalidArgument, "pair index out of range");
    if (base.meet(p.first, p.second) != base.bottom())
      throw Error(ErrorKind::NotASubalgebra,
                  "pair " + pair_name(p) + " has nonzero meet");
  }
  if (!member(base.top(), base.bottom()))
    throw Error(ErrorKind::NotASubalgebra, "top pair (1,0) is missing");
  for (const auto& p : pairs) {
    if (!member(p.second, p.first))
      throw Error(ErrorKind::NotASubalgebra,
                  "not closed under ~ at " + pair_name(p));
    for (const auto& q : pairs) {
      std::pair<int, int> m{base.meet(p.first, q.first),
                            base.join(p.second, q.second)};
      std::pair<int, int> j{base.join(p.first, q.first),
                            base.meet(p.second, q.second)};
      std::pair<int, int> i{base.imp(p.first, q.first),
                            base.meet(p.first, q.second)};
      for (const auto& r : {m, j, i})
        if (!member(r.first, r.second))
          throw Error(ErrorKind::NotASubalgebra,
                      "not closed at " + pair_name(p) + ", " + pair_name(q) +
                          " -> " + pair_name(r));
    }
  }
  std::vector<uint8_t> seen(base.n(), 0);
  for (const auto& p : pairs) seen[p.first] = 1;
  for (int x = 0; x < base.n(); ++x)
    if (!seen[x])
      throw Error(ErrorKind::ProjectionNotOnto,
                  "element " + base.elem(x) + " is not a first component");

  uint64_t mask = 0;
  for (const auto& p : pairs)
    mask |= uint64_t{1} << base.join(p.first, p.second);
  return is_ifilter(base, mask);
}

}  // namespace finalg
