#pragma once

#include <string>
#include <vector>

#include "finalg/algebra.hpp"
#include "finalg/checks.hpp"
#include "finalg/error.hpp"
#include "finalg/filters.hpp"
#include "finalg/hom.hpp"
#include "finalg/quotient.hpp"
#include "finalg/twist.hpp"

namespace finalg {

/// Object of the pair category: a semi-Heyting algebra together with one of
/// its i-filters (all three conditions verified at construction).
struct SHFObject {
  AlgebraTable algebra;
  FilterSet ifilter;
};

inline SHFObject make_shf(const AlgebraTable& a,
                          const std::vector<int>& members) {
  FilterSet f = is_ifilter(a, members);
  if (!f.all()) {
    std::string listed;
    for (size_t i = 0; i < members.size(); ++i)
      listed += (i ? "," : "") + a.elem(members[i]);
    throw Error(ErrorKind::NotAnIFilter,
                "subset {" + listed + "} of " + a.name);
  }
  return SHFObject{a, f};
}

/// Certifies an sHF morphism: a homomorphism of the underlying algebras
/// that maps the source filter into the target filter.
inline HomMap shf_morphism(const std::vector<int>& f, const SHFObject& x,
                           const SHFObject& y) {
  HomMap h = is_homomorphism(f, x.algebra, y.algebra);
  h.source_filter = x.ifilter.mask;
  h.target_filter = y.ifilter.mask;
  for (int e : x.ifilter.members())
    if (!y.ifilter.contains(h.map[e])) {
      h.filter_preserved = false;
      break;
    }
  h.certified = h.certified && h.filter_preserved;
  return h;
}

/// Object part of the functor into semi-Nelson algebras: alpha(H,F) = N(H,F).
inline TwistAlgebra alpha(const SHFObject& x) {
  return nhf(x.algebra, x.ifilter.members());
}

namespace detail {

// The classes [A+] of the positive elements, deduplicated in class order.
inline std::vector<int> positive_classes(const AlgebraTable& a,
                                         const QuotientResult& q) {
  std::vector<uint8_t> seen(q.classes.size(), 0);
  for (int p : positives(a)) seen[q.class_of[p]] = 1;
  std::vector<int> out;
  for (size_t c = 0; c < seen.size(); ++c)
    if (seen[c]) out.push_back(static_cast<int>(c));
  return out;
}

}  // namespace detail

/// Morphism part: alpha(f)(a,b) = (f(a), f(b)).
inline HomMap alpha_mor(const HomMap& f) {
  if (!f.source_filter || !f.target_filter)
    throw Error(ErrorKind::InvalidArgument,
                "alpha needs an sHF morphism (filters missing)");
  if (!f.certified)
    throw Error(ErrorKind::InvalidArgument,
                "alpha needs a certified morphism");
  SHFObject x{f.source, is_ifilter(f.source, *f.source_filter)};
  SHFObject y{f.target, is_ifilter(f.target, *f.target_filter)};
  TwistAlgebra tx = alpha(x);
  TwistAlgebra ty = alpha(y);
  std::vector<int> g(tx.pairs.size());
  for (size_t i = 0; i < tx.pairs.size(); ++i) {
    auto [a, b] = tx.pairs[i];
    int j = ty.pair_index(f.map[a], f.map[b]);
    if (j < 0)
      throw Error(ErrorKind::InvalidArgument,
                  "image pair escapes the target twist");
    g[i] = j;
  }
  return is_homomorphism(g, tx.algebra, ty.algebra);
}

/// Object part of the functor back: beta(A) = (sH(A), [A+]).
inline SHFObject beta(const AlgebraTable& a) {
  QuotientResult q = quotient_sh(a);
  return make_shf(q.algebra, detail::positive_classes(a, q));
}

/// Morphism part: beta(f)([a]) = [f(a)], checked representative-independent.
inline HomMap beta_mor(const HomMap& f) {
  if (!f.certified)
    throw Error(ErrorKind::InvalidArgument, "beta needs a certified morphism");
  QuotientResult qs = quotient_sh(f.source);
  QuotientResult qt = quotient_sh(f.target);
  std::vector<int> g(qs.classes.size());
  for (size_t i = 0; i < qs.classes.size(); ++i)
    g[i] = qt.class_of[f.map[qs.classes[i].front()]];
  for (int x = 0; x < f.source.n(); ++x)
    if (qt.class_of[f.map[x]] != g[qs.class_of[x]])
      throw Error(ErrorKind::InvalidArgument,
                  "map does not respect the quotient classes at " +
                      f.source.elem(x));
  return shf_morphism(g, beta(f.source), beta(f.target));
}

/// eta_(H,F): x -> [(x, x*)], the natural isomorphism (H,F) =~ beta(alpha).
inline HomMap eta(const SHFObject& x) {
  TwistAlgebra t = alpha(x);
  QuotientResult q = quotient_sh(t.algebra);
  std::vector<int> g(x.algebra.n());
  for (int e = 0; e < x.algebra.n(); ++e) {
    int p = t.pair_index(e, pseudocomplement(x.algebra, e));
    if (p < 0)
      throw Error(ErrorKind::NotBijective,
                  "(x,x*) escapes the twist at " + x.algebra.elem(e));
    g[e] = q.class_of[p];
  }
  SHFObject target = make_shf(q.algebra, detail::positive_classes(t.algebra, q));
  HomMap h = shf_morphism(g, x, target);
  if (!h.bijective())
    throw Error(ErrorKind::NotBijective, "eta is not a bijection on " +
                                             x.algebra.name);
  return h;
}

/// delta_A: x -> ([x], [~x]), the natural isomorphism A =~ alpha(beta(A)).
inline HomMap delta(const AlgebraTable& a) {
  QuotientResult q = quotient_sh(a);
  SHFObject b = beta(a);
  TwistAlgebra t = alpha(b);
  std::vector<int> g(a.n());
  for (int x = 0; x < a.n(); ++x) {
    int p = t.pair_index(q.class_of[x], q.class_of[a.op1(op::neg, x)]);
    if (p < 0)
      throw Error(ErrorKind::NotBijective,
                  "([x],[~x]) escapes the twist at " + a.elem(x));
    g[x] = p;
  }
  HomMap h = is_homomorphism(g, a, t.algebra);
  if (!h.bijective())
    throw Error(ErrorKind::NotBijective,
                "delta is not a bijection on " + a.name);
  return h;
}

enum class NatSide { Eta, Delta };

struct NaturalityResult {
  bool commutes = true;
  int witness = -1;  // source element where the square breaks
};

/// Verifies the naturality square of eta (for sHF morphisms) or delta (for
/// semi-Nelson morphisms) pointwise.
inline NaturalityResult check_naturality(const HomMap& f, NatSide side) {
  if (!f.certified)
    throw Error(ErrorKind::InvalidArgument,
                "naturality needs a certified morphism");
  NaturalityResult res;
  if (side == NatSide::Eta) {
    if (!f.source_filter || !f.target_filter)
      throw Error(ErrorKind::InvalidArgument,
                  "eta naturality needs an sHF morphism");
    SHFObject x{f.source, is_ifilter(f.source, *f.source_filter)};
    SHFObject y{f.target, is_ifilter(f.target, *f.target_filter)};
    HomMap ex = eta(x);
    HomMap ey = eta(y);
    HomMap ba = beta_mor(alpha_mor(f));
    for (int e = 0; e < f.source.n(); ++e)
      if (ba.map[ex.map[e]] != ey.map[f.map[e]]) {
        res.commutes = false;
        res.witness = e;
        break;
      }
  } else {
    HomMap dx = delta(f.source);
    HomMap dy = delta(f.target);
    HomMap ab = alpha_mor(beta_mor(f));
    for (int e = 0; e < f.source.n(); ++e)
      if (ab.map[dx.map[e]] != dy.map[f.map[e]]) {
        res.commutes = false;
        res.witness = e;
        break;
      }
  }
  return res;
}

}  // namespace finalg
