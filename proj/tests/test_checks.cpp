#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "finalg/finalg.hpp"

using namespace finalg;

namespace {

AlgebraTable two_chain_sh(int imp01, int imp10, SignatureKind kind) {
  AlgebraTable a = make_algebra("c2", chain(2), kind);
  OpTable t;
  t.arity = 2;
  t.binary = {{1, imp01}, {imp10, 1}};
  a.ops[op::imp] = std::move(t);
  return a;
}

}  // namespace

TEST_CASE("semi-Heyting checker on the worked examples", "[checks]") {
  CHECK(check_semi_heyting(corpus::load("grid9_quot.alg")).passed());
  CHECK(check_semi_heyting(corpus::load("chain2_nonheyting.alg")).passed());

  AlgebraTable broken = two_chain_sh(0, 0, SignatureKind::SH);
  broken.ops[op::imp].binary[0][0] = 0;  // 0 => 0 = 0 violates SH4
  CheckReport rep = check_semi_heyting(broken);
  CHECK_FALSE(rep.passed());
  const AxiomResult* sh4 = rep.find("SH4");
  REQUIRE(sh4 != nullptr);
  CHECK_FALSE(sh4->passed);
  CHECK(sh4->witness == std::vector<std::string>{"0"});
}

TEST_CASE("Heyting checker", "[checks]") {
  CHECK(check_heyting(corpus::load("chain2_heyting.alg")).passed());

  CheckReport rep = check_heyting(corpus::load("chain2_nonheyting.alg"));
  CHECK_FALSE(rep.passed());
  const AxiomResult* h = rep.find("H");
  REQUIRE(h != nullptr);
  CHECK_FALSE(h->passed);
  CHECK(h->witness == std::vector<std::string>{"1", "0"});

  CheckReport quot = check_heyting(corpus::load("grid9_quot.alg"));
  CHECK_FALSE(quot.passed());
  CHECK_FALSE(quot.find("H")->passed);
}

TEST_CASE("semi-Nelson checker on the nine-element algebra", "[checks]") {
  auto a = corpus::load("grid9.alg");
  CheckReport rep = check_semi_nelson(a);
  CHECK(rep.passed());
  CHECK(rep.axioms_checked() == 11);
  for (const auto& ax : rep.axioms) {
    INFO(ax.label);
    if (ax.label == "SN2" || ax.label == "SN7" || ax.label == "SN8" ||
        ax.label == "SN9")
      CHECK(ax.tuples == 729);
  }

  CHECK(check_semi_nelson(corpus::load("grid9_sub.alg")).passed());

  SECTION("single-cell negation perturbation breaks involution") {
    AlgebraTable bad = a;
    bad.ops[op::neg].unary[a.lattice.index_of("a")] = a.lattice.index_of("f");
    CheckReport r = check_semi_nelson(bad);
    CHECK_FALSE(r.passed());
    const AxiomResult* sn3 = r.find("SN3");
    REQUIRE(sn3 != nullptr);
    CHECK_FALSE(sn3->passed);
    CHECK(sn3->witness == std::vector<std::string>{"a"});
  }

  SECTION("the strict join form of SN5 rejects it") {
    CheckReport strict = check_semi_nelson(a, {.strict_sn5 = true});
    CHECK_FALSE(strict.passed());
    CHECK_FALSE(strict.find("SN5")->passed);
    CHECK(check_semi_nelson(a, {.strict_sn5 = false}).passed());
  }
}

TEST_CASE("Nelson checker", "[checks]") {
  auto a = corpus::load("grid9.alg");

  SECTION("the derived weak implication is Nelson") {
    AlgebraTable weak = with_imp_from(weak_implication(a), "nimp",
                                      SignatureKind::N);
    CHECK(check_nelson(weak).passed());
  }
  SECTION("the strong implication itself is not") {
    AlgebraTable view = a;
    view.signature.kind = SignatureKind::N;
    CheckReport rep = check_nelson(view);
    CHECK_FALSE(rep.passed());
    const AxiomResult* n7 = rep.find("N7");
    REQUIRE(n7 != nullptr);
    CHECK_FALSE(n7->passed);
    CHECK(n7->witness == std::vector<std::string>{"0", "0", "0"});
  }
  SECTION("trivial algebra") {
    auto t = corpus::load("trivial.alg");
    t.signature.kind = SignatureKind::N;
    CHECK(check_nelson(t).passed());
  }
}

TEST_CASE("dually hemimorphic semi-Heyting checker", "[checks]") {
  CHECK(check_dsh(corpus::load("chain2_nonheyting_dsh.alg")).passed());

  SECTION("pseudocomplement as hemimorphism on the diamond quotient") {
    auto h = corpus::load("grid9_quot.alg");
    h.signature.kind = SignatureKind::DSH;
    OpTable t;
    t.arity = 1;
    t.unary = pseudocomplement_table(h);
    h.ops[op::tilde] = std::move(t);
    CHECK(check_dsh(h).passed());

    SECTION("1~ = 1 breaks DSM2") {
      h.ops[op::tilde].unary[h.top()] = h.top();
      CheckReport rep = check_dsh(h);
      CHECK_FALSE(rep.passed());
      CHECK_FALSE(rep.find("DSM2")->passed);
    }
  }
}

TEST_CASE("dually hemimorphic semi-Nelson checker", "[checks]") {
  auto d = vk_dsh(corpus::load("chain2_nonheyting_dsh.alg"));
  CHECK(check_dsn(d.algebra).passed());

  SECTION("identity as ' fails DSN1 whenever ~1 != 1") {
    AlgebraTable bad = d.algebra;
    for (int i = 0; i < bad.n(); ++i) bad.ops[op::prime].unary[i] = i;
    CheckReport rep = check_dsn(bad);
    CHECK_FALSE(rep.passed());
    CHECK_FALSE(rep.find("DSN1")->passed);
  }
  SECTION("trivial algebra with constant ops") {
    auto t = corpus::load("trivial.alg");
    t.signature.kind = SignatureKind::DSN;
    OpTable p;
    p.arity = 1;
    p.unary = {0};
    t.ops[op::prime] = std::move(p);
    CHECK(check_dsn(t).passed());
  }
}

TEST_CASE("explicit lattice tables must agree", "[checks]") {
  auto a = corpus::load("chain2_nonheyting.alg");
  OpTable t;
  t.arity = 2;
  t.binary = {{0, 0}, {0, 1}};
  t.binary[0][1] = 1;  // claims 0 & 1 = 1
  a.ops[op::meet] = std::move(t);
  CheckReport rep = check_semi_heyting(a);
  CHECK_FALSE(rep.passed());
  const AxiomResult* mismatch = rep.find("LatticeMismatch");
  REQUIRE(mismatch != nullptr);
  CHECK_FALSE(mismatch->passed);
}

TEST_CASE("derived Heyting arrow", "[checks]") {
  SECTION("on the two-element non-Heyting table it is classical") {
    AlgebraTable out = derived_heyting_arrow(corpus::load("chain2_nonheyting.alg"));
    const auto& himp = out.ops.at("himp").binary;
    CHECK(himp == std::vector<std::vector<int>>{{1, 1}, {0, 1}});
    CHECK(check_heyting(with_imp_from(out, "himp", SignatureKind::H))
              .passed());
  }
  SECTION("on a Heyting algebra it coincides with the implication") {
    auto h = corpus::load("chain2_heyting.alg");
    AlgebraTable out = derived_heyting_arrow(h);
    CHECK(out.ops.at("himp").binary == h.ops.at(op::imp).binary);
  }
  SECTION("spot value on the diamond quotient") {
    auto h = corpus::load("grid9_quot.alg");
    AlgebraTable out = derived_heyting_arrow(h);
    int d = h.lattice.index_of("d"), e = h.lattice.index_of("e");
    CHECK(out.ops.at("himp").binary[e][d] == d);
  }
  SECTION("always a Heyting algebra on the generated corpus") {
    for (const auto& a : corpus::catalog_sh()) {
      INFO(a.name);
      AlgebraTable out = derived_heyting_arrow(a);
      CHECK(check_heyting(with_imp_from(out, "himp", SignatureKind::H))
                .passed());
    }
  }
}

TEST_CASE("pseudocomplement", "[checks]") {
  auto h = corpus::load("grid9_quot.alg");
  CHECK(pseudocomplement(h, h.lattice.index_of("d")) ==
        h.lattice.index_of("e"));
  auto ex = corpus::load("chain2_nonheyting.alg");
  CHECK(pseudocomplement(ex, 1) == 0);
  CHECK(pseudocomplement(ex, 0) == 1);

  SECTION("properties over the generated corpus") {
    for (const auto& a : corpus::catalog_sh()) {
      INFO(a.name);
      CHECK(pseudocomplement(a, a.bottom()) == a.top());
      CHECK(pseudocomplement(a, a.top()) == a.bottom());
      AlgebraTable star = a;
      star.signature.kind = SignatureKind::PCL;
      OpTable t;
      t.arity = 1;
      t.unary = pseudocomplement_table(a);
      star.ops[op::star] = std::move(t);
      CHECK(check_pcl(star).passed());
      for (int x = 0; x < a.n(); ++x) {
        int xs = pseudocomplement(a, x);
        CHECK(a.meet(x, xs) == a.bottom());
        for (int y = 0; y < a.n(); ++y) {
          int ys = pseudocomplement(a, y);
          if (a.meet(x, y) == a.bottom()) CHECK(a.leq(x, ys));
          CHECK(pseudocomplement(a, a.join(x, y)) == a.meet(xs, ys));
        }
      }
    }
  }
}

TEST_CASE("weak implication", "[checks]") {
  auto a = corpus::load("grid9.alg");
  AlgebraTable out = weak_implication(a);
  int e = a.lattice.index_of("e"), d = a.lattice.index_of("d");
  CHECK(out.ops.at("nimp").binary[e][d] == d);
  for (int x = 0; x < a.n(); ++x)
    CHECK(out.ops.at("nimp").binary[x][x] == a.one());

  SECTION("result is Nelson for the twists of the corpus") {
    for (const auto& base : corpus::catalog_sh()) {
      INFO(base.name);
      TwistAlgebra t = vk(base);
      AlgebraTable weak = with_imp_from(weak_implication(t.algebra), "nimp",
                                        SignatureKind::N);
      CHECK(check_nelson(weak).passed());
    }
  }
  SECTION("trivial algebra has constant weak implication") {
    auto t = corpus::load("trivial.alg");
    CHECK(weak_implication(t).ops.at("nimp").binary[0][0] == t.one());
  }
}

TEST_CASE("SH2 re-assertion smoke test", "[checks]") {
  for (const auto& a : corpus::catalog_sh())
    for (int x = 0; x < a.n(); ++x)
      for (int y = 0; y < a.n(); ++y)
        CHECK(a.meet(x, a.imp(x, y)) == a.meet(x, y));
}

TEST_CASE("equivalence relation agrees between both implications",
          "[checks]") {
  // On a semi-Nelson algebra, x -> y = y -> x = 1 iff the same holds for
  // the weak implication, and reaching 1 weakly is transitive.
  std::vector<AlgebraTable> sn_corpus;
  sn_corpus.push_back(corpus::load("grid9.alg"));
  sn_corpus.push_back(corpus::load("grid9_sub.alg"));
  for (const auto& base : corpus::catalog_sh())
    sn_corpus.push_back(vk(base).algebra);
  for (const auto& a : sn_corpus) {
    INFO(a.name);
    AlgebraTable w = weak_implication(a);
    const auto& nimp = w.ops.at("nimp").binary;
    const int one = a.one();
    for (int x = 0; x < a.n(); ++x)
      for (int y = 0; y < a.n(); ++y) {
        bool strong = a.imp(x, y) == one && a.imp(y, x) == one;
        bool weak = nimp[x][y] == one && nimp[y][x] == one;
        CHECK(strong == weak);
        for (int z = 0; z < a.n(); ++z)
          if (nimp[x][y] == one && nimp[y][z] == one)
            CHECK(nimp[x][z] == one);
      }
  }
}

TEST_CASE("report serialization", "[checks]") {
  AlgebraTable broken = two_chain_sh(0, 0, SignatureKind::SH);
  broken.ops[op::imp].binary[0][0] = 0;
  std::string text = check_semi_heyting(broken).to_text();
  CHECK(text.find("PASS SH2") != std::string::npos);
  CHECK(text.find("FAIL SH4 x=0") != std::string::npos);
}

TEST_CASE("signature requirements", "[checks]") {
  auto h = corpus::load("grid9_quot.alg");
  CHECK_THROWS_AS(check_semi_nelson(h), Error);
  CHECK_THROWS_AS(check_dsh(h), Error);
}
