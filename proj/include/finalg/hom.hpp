#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finalg/algebra.hpp"
#include "finalg/error.hpp"

namespace finalg {

struct OpCheck {
  std::string op;
  bool passed = true;
  std::vector<std::string> witness;  // argument names in the source algebra
};

/// A map between two algebra carriers together with a per-operation
/// preservation certificate computed exhaustively. For sHF morphisms the
/// filters travel with the map so the functors can be applied to it.
struct HomMap {
  AlgebraTable source, target;
  std::vector<int> map;
  std::vector<OpCheck> certificate;
  bool certified = false;
  std::optional<uint64_t> source_filter, target_filter;
  bool filter_preserved = true;

  int operator()(int x) const { return map[x]; }

  bool bijective() const {
    if (source.n() != target.n()) return false;
    std::vector<uint8_t> hit(target.n(), 0);
    for (int v : map) {
      if (hit[v]) return false;
      hit[v] = 1;
    }
    return true;
  }

  // One line per source element: `x -> f(x)`.
  std::string to_text() const {
    std::string out;
    for (int x = 0; x < source.n(); ++x)
      out += source.elem(x) + " -> " + target.elem(map[x]) + "\n";
    return out;
  }
};

/// Exhaustively certifies that `f` preserves the lattice structure, every
/// operation required by the (shared) signature, and the constants.
inline HomMap is_homomorphism(const std::vector<int>& f,
                              const AlgebraTable& a, const AlgebraTable& b) {
  if (a.signature.kind != b.signature.kind)
    throw Error(ErrorKind::SignatureMismatch,
                std::string(to_string(a.signature.kind)) + " vs " +
                    to_string(b.signature.kind));
  if (static_cast<int>(f.size()) != a.n())
    throw Error(ErrorKind::InvalidArgument, "map is not total");
  for (int v : f)
    if (v < 0 || v >= b.n())
      throw Error(ErrorKind::InvalidArgument, "map value out of range");

  HomMap h;
  h.source = a;
  h.target = b;
  h.map = f;

  auto check_binary = [&](const std::string& name, auto src, auto tgt) {
    OpCheck c;
    c.op = name;
    for (int x = 0; x < a.n() && c.passed; ++x)
      for (int y = 0; y < a.n(); ++y)
        if (f[src(x, y)] != tgt(f[x], f[y])) {
          c.passed = false;
          c.witness = {a.elem(x), a.elem(y)};
          break;
        }
    h.certificate.push_back(std::move(c));
  };
  auto check_unary = [&](const std::string& name, auto src, auto tgt) {
    OpCheck c;
    c.op = name;
    for (int x = 0; x < a.n(); ++x)
      if (f[src(x)] != tgt(f[x])) {
        c.passed = false;
        c.witness = {a.elem(x)};
        break;
      }
    h.certificate.push_back(std::move(c));
  };
  auto check_const = [&](const std::string& name, int src, int tgt) {
    OpCheck c;
    c.op = name;
    if (f[src] != tgt) {
      c.passed = false;
      c.witness = {a.elem(src)};
    }
    h.certificate.push_back(std::move(c));
  };

  check_binary(op::meet, [&](int x, int y) { return a.meet(x, y); },
               [&](int x, int y) { return b.meet(x, y); });
  check_binary(op::join, [&](int x, int y) { return a.join(x, y); },
               [&](int x, int y) { return b.join(x, y); });
  for (const auto& spec : a.signature.required_ops()) {
    std::string name = spec.name;
    if (spec.arity == 2)
      check_binary(name, [&](int x, int y) { return a.op2(name, x, y); },
                   [&](int x, int y) { return b.op2(name, x, y); });
    else
      check_unary(name, [&](int x) { return a.op1(name, x); },
                  [&](int x) { return b.op1(name, x); });
  }
  if (a.signature.requires_one()) {
    check_const("one", a.one(), b.one());
  } else {
    check_const("zero", a.bottom(), b.bottom());
    check_const("one", a.top(), b.top());
  }

  h.certified = true;
  for (const auto& c : h.certificate) h.certified = h.certified && c.passed;
  return h;
}

inline HomMap identity_hom(const AlgebraTable& a) {
  std::vector<int> f(a.n());
  for (int x = 0; x < a.n(); ++x) f[x] = x;
  return is_homomorphism(f, a, a);
}

/// g after f, recertified from scratch.
inline HomMap compose(const HomMap& g, const HomMap& f) {
  if (f.target.n() != g.source.n() ||
      f.target.signature.kind != g.source.signature.kind)
    throw Error(ErrorKind::InvalidArgument, "maps do not compose");
  std::vector<int> h(f.source.n());
  for (int x = 0; x < f.source.n(); ++x) h[x] = g.map[f.map[x]];
  return is_homomorphism(h, f.source, g.target);
}

namespace detail {

// Cheap per-element invariants that any isomorphism must preserve.
struct ElemInvariant {
  int downset = 0, upset = 0, cover_down = 0, cover_up = 0;
  bool is_bottom = false, is_top = false;
  int neg_fixed = -1;  // -1 when no neg table

  bool operator==(const ElemInvariant&) const = default;
};

inline std::vector<ElemInvariant> invariants(const AlgebraTable& a) {
  std::vector<ElemInvariant> out(a.n());
  for (int x = 0; x < a.n(); ++x) {
    ElemInvariant& v = out[x];
    for (int y = 0; y < a.n(); ++y) {
      if (a.leq(y, x)) ++v.downset;
      if (a.leq(x, y)) ++v.upset;
      if (a.lattice.covers(y, x)) ++v.cover_down;
      if (a.lattice.covers(x, y)) ++v.cover_up;
    }
    v.is_bottom = x == a.bottom();
    v.is_top = x == a.top();
    if (a.has_op(op::neg, 1)) v.neg_fixed = a.neg(x) == x ? 1 : 0;
  }
  return out;
}

struct IsoSearch {
  const AlgebraTable& a;
  const AlgebraTable& b;
  std::vector<ElemInvariant> inv_a, inv_b;
  std::vector<int> map;       // -1 while unassigned; assigned 0..depth-1
  std::vector<uint8_t> used;
  std::vector<const OpTable*> ops_a, ops_b;

  IsoSearch(const AlgebraTable& a_, const AlgebraTable& b_)
      : a(a_), b(b_), inv_a(invariants(a_)), inv_b(invariants(b_)),
        map(a_.n(), -1), used(b_.n(), 0) {
    for (const auto& spec : a.signature.required_ops()) {
      ops_a.push_back(&a.ops.at(spec.name));
      ops_b.push_back(&b.ops.at(spec.name));
    }
  }

  // Checks every relation/operation instance whose arguments and result are
  // all within the assigned prefix 0..depth.
  bool consistent(int depth) const {
    int v = map[depth];
    for (int u = 0; u <= depth; ++u) {
      if (a.leq(u, depth) != b.leq(map[u], v)) return false;
      if (a.leq(depth, u) != b.leq(v, map[u])) return false;
    }
    for (int u = 0; u <= depth; ++u)
      for (int w = 0; w <= depth; ++w) {
        int m = a.meet(u, w);
        if (m <= depth && b.meet(map[u], map[w]) != map[m]) return false;
        int j = a.join(u, w);
        if (j <= depth && b.join(map[u], map[w]) != map[j]) return false;
      }
    for (size_t oi = 0; oi < ops_a.size(); ++oi) {
      const OpTable* ta = ops_a[oi];
      const OpTable* tb = ops_b[oi];
      if (ta->arity == 1) {
        for (int u = 0; u <= depth; ++u) {
          int r = ta->unary[u];
          if (r <= depth && tb->unary[map[u]] != map[r]) return false;
        }
      } else {
        for (int u = 0; u <= depth; ++u)
          for (int w = 0; w <= depth; ++w) {
            int r = ta->binary[u][w];
            if (r <= depth && tb->binary[map[u]][map[w]] != map[r])
              return false;
          }
      }
    }
    return true;
  }

  bool run(int depth) {
    if (depth == a.n()) return true;
    for (int v = 0; v < b.n(); ++v) {
      if (used[v] || !(inv_a[depth] == inv_b[v])) continue;
      map[depth] = v;
      used[v] = 1;
      if (consistent(depth) && run(depth + 1)) return true;
      used[v] = 0;
      map[depth] = -1;
    }
    return false;
  }
};

}  // namespace detail

/// Backtracking search for an isomorphism, pruned by order/negation
/// invariants; returns the lexicographically first certified bijection, or
/// nothing. The result is certified in both directions.
inline std::optional<HomMap> find_isomorphism(const AlgebraTable& a,
                                              const AlgebraTable& b) {
  if (a.signature.kind != b.signature.kind)
    throw Error(ErrorKind::SignatureMismatch,
                std::string(to_string(a.signature.kind)) + " vs " +
                    to_string(b.signature.kind));
  if (a.n() != b.n()) return std::nullopt;
  detail::IsoSearch search(a, b);
  if (!search.run(0)) return std::nullopt;

  HomMap fwd = is_homomorphism(search.map, a, b);
  std::vector<int> inverse(b.n());
  for (int x = 0; x < a.n(); ++x) inverse[search.map[x]] = x;
  HomMap bwd = is_homomorphism(inverse, b, a);
  if (!fwd.certified || !bwd.certified) return std::nullopt;
  return fwd;
}

}  // namespace finalg
