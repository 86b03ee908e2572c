#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "finalg/finalg.hpp"

using namespace finalg;

namespace {

bool same_structure(const AlgebraTable& a, const AlgebraTable& b) {
  return a.lattice == b.lattice && a.ops == b.ops &&
         a.constants == b.constants && a.signature == b.signature;
}

}  // namespace

TEST_CASE("full twist of the diamond quotient", "[twist]") {
  auto h = corpus::load("grid9_quot.alg");
  TwistAlgebra t = vk(h);

  std::vector<std::pair<int, int>> expected = {
      {0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0},
      {1, 2}, {2, 0}, {2, 1}, {3, 0}};
  CHECK(t.pairs == expected);
  CHECK(t.algebra.n() == 9);
  CHECK(t.algebra.elem(1) == "(0,d)");
  CHECK(check_semi_nelson(t.algebra).passed());

  // ~ swaps components, top is (1,0).
  for (int i = 0; i < t.algebra.n(); ++i) {
    auto [a, b] = t.pair_of(i);
    CHECK(t.pair_of(t.algebra.neg(i)) == std::make_pair(b, a));
  }
  CHECK(t.pair_of(t.algebra.one()) == std::make_pair(h.top(), h.bottom()));
}

TEST_CASE("twist sizes on small bases", "[twist]") {
  auto trivial = corpus::load("trivial.alg");
  trivial.signature.kind = SignatureKind::SH;
  CHECK(vk(trivial).pairs.size() == 1);

  CHECK(vk(corpus::load("chain2_nonheyting.alg")).pairs.size() == 3);
  auto b = corpus::load("chain2_heyting.alg");
  b.signature.kind = SignatureKind::SH;
  CHECK(vk(b).pairs.size() == 3);
}

TEST_CASE("restricted twist N(H,F)", "[twist]") {
  auto h = corpus::load("grid9_quot.alg");

  SECTION("six pairs for the i-filter {e,1}") {
    TwistAlgebra t = nhf(h, parse_element_list(h, "e,1"));
    std::vector<std::pair<int, int>> expected = {
        {0, 2}, {0, 3}, {1, 2}, {2, 0}, {2, 1}, {3, 0}};
    CHECK(t.pairs == expected);
    CHECK(check_semi_nelson(t.algebra).passed());
  }
  SECTION("the full carrier reproduces the full twist") {
    TwistAlgebra full = nhf(h, parse_element_list(h, "0,d,e,1"));
    TwistAlgebra all = vk(h);
    CHECK(full.pairs == all.pairs);
    AlgebraTable renamed = full.algebra;
    renamed.name = all.algebra.name;
    CHECK(same_structure(renamed, all.algebra));
  }
  SECTION("a non-i-filter is rejected with its witness") {
    auto ex = corpus::load("chain2_nonheyting.alg");
    try {
      nhf(ex, std::vector<int>{1});
      FAIL("expected NotAnIFilter");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotAnIFilter);
      CHECK(std::string(e.what()).find("IF3") != std::string::npos);
      CHECK(std::string(e.what()).find("z=1 t=0 x=0") != std::string::npos);
    }
  }
}

TEST_CASE("quotient of the nine-element algebra", "[twist]") {
  auto a = corpus::load("grid9.alg");
  QuotientResult q = quotient_sh(a);
  REQUIRE(q.classes.size() == 4);

  auto names_of = [&](const std::vector<int>& cls) {
    std::vector<std::string> out;
    for (int x : cls) out.push_back(a.elem(x));
    return out;
  };
  CHECK(names_of(q.classes[0]) ==
        std::vector<std::string>{"0", "a", "b", "c"});
  CHECK(names_of(q.classes[1]) == std::vector<std::string>{"d", "f"});
  CHECK(names_of(q.classes[2]) == std::vector<std::string>{"e", "g"});
  CHECK(names_of(q.classes[3]) == std::vector<std::string>{"1"});
  CHECK(q.algebra.lattice.names() ==
        std::vector<std::string>{"[0]", "[d]", "[e]", "[1]"});

  // Cell for cell the printed table.
  auto h = corpus::load("grid9_quot.alg");
  CHECK(q.algebra.ops.at(op::imp).binary == h.ops.at(op::imp).binary);
  CHECK(check_semi_heyting(q.algebra).passed());
}

TEST_CASE("both subalgebra and algebra have the same quotient", "[twist]") {
  auto s = corpus::load("grid9_sub.alg");
  QuotientResult q = quotient_sh(s);
  REQUIRE(q.classes.size() == 4);
  auto names_of = [&](const std::vector<int>& cls) {
    std::vector<std::string> out;
    for (int x : cls) out.push_back(s.elem(x));
    return out;
  };
  CHECK(names_of(q.classes[0]) == std::vector<std::string>{"0", "a"});
  CHECK(names_of(q.classes[1]) == std::vector<std::string>{"d"});
  CHECK(names_of(q.classes[2]) == std::vector<std::string>{"e", "g"});
  CHECK(names_of(q.classes[3]) == std::vector<std::string>{"1"});
  auto h = corpus::load("grid9_quot.alg");
  CHECK(q.algebra.ops.at(op::imp).binary == h.ops.at(op::imp).binary);
}

TEST_CASE("quotient of the trivial algebra", "[twist]") {
  auto t = corpus::load("trivial.alg");
  CHECK(quotient_sh(t).classes.size() == 1);
}

TEST_CASE("corrupt tables are not congruences", "[twist]") {
  AlgebraTable bad = make_algebra("bad", chain(2), SignatureKind::SN);
  OpTable imp_t;
  imp_t.arity = 2;
  imp_t.binary = {{1, 1}, {1, 0}};  // 1 -> 1 = 0 breaks reflexivity
  bad.ops[op::imp] = std::move(imp_t);
  OpTable neg_t;
  neg_t.arity = 1;
  neg_t.unary = {1, 0};
  bad.ops[op::neg] = std::move(neg_t);
  try {
    quotient_sh(bad);
    FAIL("expected NotACongruence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotACongruence);
  }
}

TEST_CASE("dually hemimorphic twist of the two-element example", "[twist]") {
  auto base = corpus::load("chain2_nonheyting_dsh.alg");
  TwistAlgebra t = vk_dsh(base);
  REQUIRE(t.pairs.size() == 3);
  CHECK(t.algebra.signature.kind == SignatureKind::DSN);
  CHECK(check_dsn(t.algebra).passed());

  // (1,0)' = (1~, 0 & (1~ => 1)) = (0,0); both (0,*) pairs map to (1,0).
  int p10 = t.pair_index(1, 0), p00 = t.pair_index(0, 0),
      p01 = t.pair_index(0, 1);
  CHECK(t.algebra.prime(p10) == p00);
  CHECK(t.algebra.prime(p00) == p10);
  CHECK(t.algebra.prime(p01) == p10);

  SECTION("its quotient recovers the base") {
    QuotientResult q = quotient_dsh(t.algebra);
    CHECK(q.algebra.n() == 2);
    CHECK(check_dsh(q.algebra).passed());
    auto iso = find_isomorphism(q.algebra, base);
    REQUIRE(iso.has_value());
    CHECK(iso->certified);
  }
  SECTION("its center is (0,0) = 1'") {
    auto c = center(t.algebra);
    REQUIRE(c.has_value());
    CHECK(*c == p00);
    CHECK(*c == t.algebra.prime(t.algebra.one()));
  }
}

TEST_CASE("dually hemimorphic twist of the trivial algebra", "[twist]") {
  AlgebraTable t = make_algebra("t1", chain(1), SignatureKind::DSH);
  OpTable imp_t;
  imp_t.arity = 2;
  imp_t.binary = {{0}};
  t.ops[op::imp] = std::move(imp_t);
  OpTable tilde_t;
  tilde_t.arity = 1;
  tilde_t.unary = {0};
  t.ops[op::tilde] = std::move(tilde_t);
  REQUIRE(check_dsh(t).passed());
  TwistAlgebra tw = vk_dsh(t);
  REQUIRE(tw.pairs.size() == 1);
  CHECK(tw.algebra.prime(0) == 0);
  CHECK(check_dsn(tw.algebra).passed());
}

TEST_CASE("centers of the worked examples", "[twist]") {
  auto a = corpus::load("grid9.alg");
  auto c = center(a);
  REQUIRE(c.has_value());
  CHECK(a.elem(*c) == "c");

  CHECK_FALSE(center(corpus::load("grid9_sub.alg")).has_value());

  SECTION("two fixed points are an error") {
    AlgebraTable bad = make_algebra("bad", chain(2), SignatureKind::SN);
    OpTable imp_t;
    imp_t.arity = 2;
    imp_t.binary = {{1, 1}, {0, 1}};
    bad.ops[op::imp] = std::move(imp_t);
    OpTable neg_t;
    neg_t.arity = 1;
    neg_t.unary = {0, 1};  // identity: both elements fixed
    bad.ops[op::neg] = std::move(neg_t);
    try {
      center(bad);
      FAIL("expected MultipleCenters");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::MultipleCenters);
    }
  }
}

TEST_CASE("uniform properties of the twist over the corpus", "[twist]") {
  for (const auto& base : corpus::catalog_sh()) {
    INFO(base.name);
    TwistAlgebra t = vk(base);
    CHECK(check_semi_nelson(t.algebra).passed());

    // V6: the weak implication acts as (a ->H c, a & d).
    AlgebraTable weak = weak_implication(t.algebra);
    const auto& nimp = weak.ops.at("nimp").binary;
    for (size_t i = 0; i < t.pairs.size(); ++i)
      for (size_t j = 0; j < t.pairs.size(); ++j) {
        auto [a, b] = t.pairs[i];
        auto [c, d] = t.pairs[j];
        int want = t.pair_index(base.imp(a, base.meet(a, c)),
                                base.meet(a, d));
        CHECK(nimp[i][j] == want);
      }

    // g(a) = [(a, a*)] is an isomorphism onto the quotient of the twist.
    QuotientResult q = quotient_sh(t.algebra);
    std::vector<int> g(base.n());
    for (int x = 0; x < base.n(); ++x)
      g[x] = q.class_of[t.pair_index(x, pseudocomplement(base, x))];
    HomMap hom = is_homomorphism(g, base, q.algebra);
    CHECK(hom.certified);
    CHECK(hom.bijective());

    // Every restricted twist is a subalgebra of the full one.
    for (const auto& f : enumerate_filters(base.lattice)) {
      FilterSet checked = is_ifilter(base, f.mask);
      if (!checked.all()) continue;
      TwistAlgebra sub = nhf(base, checked.members());
      for (const auto& p : sub.pairs) CHECK(t.pair_index(p.first, p.second) >= 0);
    }
  }
}

TEST_CASE("embedding h into the twist of the quotient", "[twist]") {
  for (const auto& name : {"grid9.alg", "grid9_sub.alg"}) {
    auto a = corpus::load(name);
    INFO(name);
    QuotientResult q = quotient_sh(a);
    TwistAlgebra t = vk(q.algebra);
    std::vector<int> h(a.n());
    for (int x = 0; x < a.n(); ++x) {
      int p = t.pair_index(q.class_of[x], q.class_of[a.neg(x)]);
      REQUIRE(p >= 0);
      h[x] = p;
    }
    HomMap hom = is_homomorphism(h, a, t.algebra);
    CHECK(hom.certified);
    std::vector<uint8_t> seen(t.algebra.n(), 0);
    for (int v : h) {
      CHECK_FALSE(seen[v]);  // injective
      seen[v] = 1;
    }
  }
}
