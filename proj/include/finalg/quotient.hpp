#pragma once

#include <string>
#include <vector>

#include "finalg/algebra.hpp"
#include "finalg/checks.hpp"
#include "finalg/error.hpp"

namespace finalg {

/// Quotient of a (dually hemimorphic) semi-Nelson algebra by the relation
/// x == y iff x -> y = 1 and y -> x = 1. Classes are ordered and named by
/// their least member, rendered "[name]".
struct QuotientResult {
  std::vector<std::vector<int>> classes;  // partition, each sorted
  std::vector<int> class_of;              // element -> class index
  AlgebraTable algebra;                   // SH (or DSH) structure on classes
};

namespace detail {

inline QuotientResult build_quotient(const AlgebraTable& a, bool with_prime) {
  require_ops(a, {{op::imp, 2}, {op::neg, 1}});
  if (with_prime) require_ops(a, {{op::prime, 1}});
  const int n = a.n();
  const int one = a.one();

  auto related = [&](int x, int y) {
    return a.imp(x, y) == one && a.imp(y, x) == one;
  };

  // The relation must be an equivalence; anything else means the input is
  // outside the claimed variety.
  for (int x = 0; x < n; ++x)
    if (!related(x, x))
      throw Error(ErrorKind::NotACongruence,
                  "relation not reflexive at " + a.elem(x));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (related(x, y) && related(y, z) && !related(x, z))
          throw Error(ErrorKind::NotACongruence,
                      "relation not transitive at " + a.elem(x) + ", " +
                          a.elem(y) + ", " + a.elem(z));

  QuotientResult q;
  q.class_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (q.class_of[x] >= 0) continue;
    int idx = static_cast<int>(q.classes.size());
    q.classes.push_back({});
    for (int y = x; y < n; ++y)
      if (related(x, y)) {
        q.class_of[y] = idx;
        q.classes[idx].push_back(y);
      }
  }
  const int k = static_cast<int>(q.classes.size());

  // Full well-definedness sweep: every operation must be independent of the
  // choice of representatives.
  auto congruent_binary = [&](const char* name, auto op) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int want = q.class_of[op(x, y)];
        for (int x2 : q.classes[q.class_of[x]])
          for (int y2 : q.classes[q.class_of[y]])
            if (q.class_of[op(x2, y2)] != want)
              throw Error(ErrorKind::NotACongruence,
                          std::string(name) + " not well defined: " +
                              a.elem(x) + "," + a.elem(y) + " vs " +
                              a.elem(x2) + "," + a.elem(y2));
      }
  };
  congruent_binary("meet", [&](int x, int y) { return a.meet(x, y); });
  congruent_binary("join", [&](int x, int y) { return a.join(x, y); });
  congruent_binary("->", [&](int x, int y) { return a.imp(x, y); });
  if (with_prime) {
    for (int x = 0; x < n; ++x)
      for (int x2 : q.classes[q.class_of[x]])
        if (q.class_of[a.prime(x)] != q.class_of[a.prime(x2)])
          throw Error(ErrorKind::NotACongruence,
                      "' not well defined: " + a.elem(x) + " vs " +
                          a.elem(x2));
  }

  std::vector<std::string> names;
  for (const auto& cls : q.classes)
    names.push_back("[" + a.elem(cls.front()) + "]");
  std::vector<uint8_t> leq(static_cast<size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int ri = q.classes[i].front(), rj = q.classes[j].front();
      leq[static_cast<size_t>(i) * k + j] =
          q.class_of[a.meet(ri, rj)] == i;
    }
  FiniteLattice lat = FiniteLattice::from_leq(std::move(names),
                                              std::move(leq));

  // Sanity: the induced lattice operations and bounds are the projected
  // ones -- bottom = [~1], top = [1].
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int ri = q.classes[i].front(), rj = q.classes[j].front();
      if (lat.meet(i, j) != q.class_of[a.meet(ri, rj)] ||
          lat.join(i, j) != q.class_of[a.join(ri, rj)])
        throw Error(ErrorKind::NotACongruence,
                    "quotient order disagrees with projected meet/join");
    }
  if (lat.top() != q.class_of[one] ||
      lat.bottom() != q.class_of[a.neg(one)])
    throw Error(ErrorKind::NotACongruence,
                "quotient bounds are not [1] and [~1]");

  AlgebraTable alg = make_algebra(
      a.name + (with_prime ? "_dsh" : "_sh"), std::move(lat),
      with_prime ? SignatureKind::DSH : SignatureKind::SH);
  OpTable imp_t;
  imp_t.arity = 2;
  imp_t.binary.assign(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      imp_t.binary[i][j] =
          q.class_of[a.imp(q.classes[i].front(), q.classes[j].front())];
  alg.ops[op::imp] = std::move(imp_t);
  if (with_prime) {
    OpTable tilde_t;
    tilde_t.arity = 1;
    tilde_t.unary.assign(k, 0);
    for (int i = 0; i < k; ++i)
      tilde_t.unary[i] = q.class_of[a.prime(q.classes[i].front())];
    alg.ops[op::tilde] = std::move(tilde_t);
  }
  alg.validate();
  q.algebra = std::move(alg);
  return q;
}

}  // namespace detail

/// sH(A): the semi-Heyting skeleton of a semi-Nelson algebra.
inline QuotientResult quotient_sh(const AlgebraTable& a) {
  return detail::build_quotient(a, false);
}

/// dsH(A): as quotient_sh, plus the hemimorphism [x]~ = [x'].
inline QuotientResult quotient_dsh(const AlgebraTable& a) {
  return detail::build_quotient(a, true);
}

}  // namespace finalg
