#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finalg/algebra.hpp"
#include "finalg/error.hpp"
#include "finalg/filters.hpp"

namespace finalg {

/// Algebra of admissible pairs (a, b) with a & b = 0 over a semi-Heyting
/// base, ordered lexicographically by index pair. Operations:
///   (a,b) n (c,d) = (a&c, b|d)        ~(a,b) = (b,a)
///   (a,b) u (c,d) = (a|c, b&d)        top   = (1,0)
///   (a,b) -> (c,d) = (a=>c, a&d)
/// and, over a dually hemimorphic base, (a,b)' = (a~, b & (a~ => a)).
struct TwistAlgebra {
  AlgebraTable base;
  std::vector<std::pair<int, int>> pairs;  // lexicographic
  AlgebraTable algebra;

  int pair_index(int a, int b) const {
    auto it = std::lower_bound(pairs.begin(), pairs.end(),
                               std::make_pair(a, b));
    if (it == pairs.end() || *it != std::make_pair(a, b)) return -1;
    return static_cast<int>(it - pairs.begin());
  }

  const std::pair<int, int>& pair_of(int idx) const { return pairs[idx]; }
};

namespace detail {

inline TwistAlgebra build_twist(const AlgebraTable& base,
                                std::optional<uint64_t> filter_mask,
                                bool with_prime, const std::string& suffix) {
  require_ops(base, {{op::imp, 2}});
  if (with_prime) require_ops(base, {{op::tilde, 1}});
  TwistAlgebra tw;
  tw.base = base;

  const int nb = base.n();
  for (int a = 0; a < nb; ++a)
    for (int b = 0; b < nb; ++b) {
      if (base.meet(a, b) != base.bottom()) continue;
      if (filter_mask && !((*filter_mask >> base.join(a, b)) & 1)) continue;
      tw.pairs.emplace_back(a, b);
    }

  const int n = static_cast<int>(tw.pairs.size());
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& [a, b] : tw.pairs)
    names.push_back("(" + base.elem(a) + "," + base.elem(b) + ")");

  // (a,b) <= (c,d) iff a <= c and d <= b.
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      leq[static_cast<size_t>(i) * n + j] =
          base.leq(tw.pairs[i].first, tw.pairs[j].first) &&
          base.leq(tw.pairs[j].second, tw.pairs[i].second);
  FiniteLattice lat = FiniteLattice::from_leq(std::move(names),
                                              std::move(leq));

  auto index_of = [&](int a, int b, const char* what) {
    int idx = tw.pair_index(a, b);
    if (idx < 0)
      throw Error(ErrorKind::NotASubalgebra,
                  std::string("pair set not closed under ") + what + " at (" +
                      base.elem(a) + "," + base.elem(b) + ")");
    return idx;
  };

  // The order-derived meet/join must agree with the pairwise formulas.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& [a, b] = tw.pairs[i];
      const auto& [c, d] = tw.pairs[j];
      int m = index_of(base.meet(a, c), base.join(b, d), "meet");
      int u = index_of(base.join(a, c), base.meet(b, d), "join");
      if (lat.meet(i, j) != m || lat.join(i, j) != u)
        throw Error(ErrorKind::InvalidArgument,
                    "pair order disagrees with the pair operations");
    }

  AlgebraTable alg = make_algebra(
      base.name + suffix, std::move(lat),
      with_prime ? SignatureKind::DSN : SignatureKind::SN);

  OpTable imp_t;
  imp_t.arity = 2;
  imp_t.binary.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& [a, b] = tw.pairs[i];
      const auto& [c, d] = tw.pairs[j];
      imp_t.binary[i][j] =
          index_of(base.imp(a, c), base.meet(a, d), "->");
    }
  alg.ops[op::imp] = std::move(imp_t);

  OpTable neg_t;
  neg_t.arity = 1;
  neg_t.unary.assign(n, 0);
  for (int i = 0; i < n; ++i)
    neg_t.unary[i] =
        index_of(tw.pairs[i].second, tw.pairs[i].first, "~");
  alg.ops[op::neg] = std::move(neg_t);

  if (with_prime) {
    OpTable prime_t;
    prime_t.arity = 1;
    prime_t.unary.assign(n, 0);
    for (int i = 0; i < n; ++i) {
      const auto& [a, b] = tw.pairs[i];
      int first = base.tilde(a);
      int second = base.meet(b, base.imp(first, a));
      if (base.meet(first, second) != base.bottom())
        throw Error(ErrorKind::InvalidArgument,
                    "' is not well defined at (" + base.elem(a) + "," +
                        base.elem(b) + ")");
      prime_t.unary[i] = index_of(first, second, "'");
    }
    alg.ops[op::prime] = std::move(prime_t);
  }

  alg.constants["one"] = index_of(base.top(), base.bottom(), "top");
  alg.validate();
  tw.algebra = std::move(alg);
  return tw;
}

}  // namespace detail

/// Full twist V_k(A) = {(a,b) : a & b = 0} over a semi-Heyting algebra.
inline TwistAlgebra vk(const AlgebraTable& a) {
  return detail::build_twist(a, std::nullopt, false, "_vk");
}

/// Restricted twist N(H,F) = {(a,b) : a & b = 0, a | b in F}; F must be an
/// i-filter or the pair set would not be closed under ->.
inline TwistAlgebra nhf(const AlgebraTable& a,
                        const std::vector<int>& filter_members) {
  FilterSet f = is_ifilter(a, filter_members);
  if (!f.all()) {
    std::string msg;
    if (!f.is_filter) {
      msg = "IF1 fails: not a lattice filter";
    } else if (!f.contains_dense) {
      msg = "IF2 fails: a dense element is missing";
    } else {
      const auto& w = *f.if3_witness;
      msg = "IF3 fails: z=" + a.elem(w[0]) + " t=" + a.elem(w[1]) +
            " x=" + a.elem(w[2]) + " gives (x=>z)|(x&t)=" + a.elem(w[3]) +
            " outside the filter";
    }
    throw Error(ErrorKind::NotAnIFilter, msg);
  }
  return detail::build_twist(a, f.mask, false, "_nhf");
}

/// Twist of a dually hemimorphic semi-Heyting algebra, with the pair
/// operation (a,b)' = (a~, b & (a~ => a)).
inline TwistAlgebra vk_dsh(const AlgebraTable& a) {
  return detail::build_twist(a, std::nullopt, true, "_vk");
}

/// The unique fixed point of ~, if any. Uniqueness is a theorem for the
/// varieties in scope, so two fixed points mean the input is corrupt; for
/// dually hemimorphic algebras the center must moreover equal 1'.
inline std::optional<int> center(const AlgebraTable& a) {
  detail::require_ops(a, {{op::neg, 1}});
  std::optional<int> found;
  for (int x = 0; x < a.n(); ++x) {
    if (a.neg(x) != x) continue;
    if (found)
      throw Error(ErrorKind::MultipleCenters,
                  a.elem(*found) + " and " + a.elem(x));
    found = x;
  }
  if (a.signature.kind == SignatureKind::DSN) {
    if (!found || *found != a.prime(a.one()))
      throw Error(ErrorKind::InvalidArgument,
                  "center of a dually hemimorphic algebra must be 1'");
  }
  return found;
}

}  // namespace finalg
