#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "corpus.hpp"
#include "finalg/finalg.hpp"

using namespace finalg;

TEST_CASE("parse the two-element table", "[io]") {
  auto a = corpus::load("chain2_nonheyting.alg");
  REQUIRE(a.n() == 2);
  CHECK(a.name == "chain2_nonheyting");
  CHECK(a.signature.kind == SignatureKind::SH);
  CHECK(a.imp(0, 0) == 1);
  CHECK(a.imp(0, 1) == 0);
  CHECK(a.imp(1, 0) == 0);
  CHECK(a.imp(1, 1) == 1);
}

TEST_CASE("parse the nine-element tables", "[io]") {
  auto a = corpus::load("grid9.alg");
  REQUIRE(a.n() == 9);
  CHECK(a.signature.kind == SignatureKind::SN);
  int d = a.lattice.index_of("d"), e = a.lattice.index_of("e");
  int g = a.lattice.index_of("g"), c = a.lattice.index_of("c");
  CHECK(a.imp(a.bottom(), d) == g);
  CHECK(a.imp(e, d) == a.lattice.index_of("a"));
  CHECK(a.imp(a.top(), c) == c);
  CHECK(a.neg(c) == c);
  CHECK(a.neg(d) == e);
  CHECK(a.one() == a.top());
}

TEST_CASE("canonical files round-trip byte for byte", "[io]") {
  for (const auto& file : corpus::data_files()) {
    INFO(file);
    std::string text = corpus::slurp(corpus::data_path(file));
    AlgebraTable a = parse_algebra(text);
    CHECK(serialize_algebra(a) == text);
  }
}

TEST_CASE("serialization of derived algebras is parse-stable", "[io]") {
  auto a = corpus::load("grid9.alg");
  auto q = quotient_sh(a);
  std::string text = serialize_algebra(q.algebra);
  AlgebraTable back = parse_algebra(text);
  CHECK(back == q.algebra);
  CHECK(serialize_algebra(back) == text);

  auto h = corpus::load("grid9_quot.alg");
  auto t = vk(h);
  std::string twist_text = serialize_algebra(t.algebra);
  CHECK(parse_algebra(twist_text) == t.algebra);
}

TEST_CASE("parse diagnostics carry positions", "[io]") {
  SECTION("short row") {
    std::string text =
        "algebra bad\nelements 0 1\ncover 0 1\nop imp 2\n1 0\n0\nsignature "
        "sh\nend\n";
    try {
      parse_algebra(text);
      FAIL("expected ArityMismatch");
    } catch (const ParseError& e) {
      CHECK(e.kind() == ErrorKind::ArityMismatch);
      CHECK(e.line() == 6);
    }
  }
  SECTION("unknown element") {
    try {
      parse_algebra("algebra bad\nelements 0 1\ncover 0 q\nsignature sh\nend\n");
      FAIL("expected UnknownElement");
    } catch (const ParseError& e) {
      CHECK(e.kind() == ErrorKind::UnknownElement);
      CHECK(e.line() == 3);
      CHECK(e.col() == 9);
    }
  }
  SECTION("duplicate op") {
    std::string text =
        "algebra bad\nelements 0\nop neg 1\n0\nop neg 1\n0\nsignature sh\n"
        "end\n";
    try {
      parse_algebra(text);
      FAIL("expected DuplicateOp");
    } catch (const ParseError& e) {
      CHECK(e.kind() == ErrorKind::DuplicateOp);
      CHECK(e.line() == 5);
    }
  }
  SECTION("missing end") {
    CHECK_THROWS_AS(parse_algebra("algebra x\nelements 0\nsignature sh\n"),
                    ParseError);
  }
  SECTION("unknown directive") {
    CHECK_THROWS_AS(
        parse_algebra("algebra x\nelements 0\nfrobnicate\nsignature sh\nend\n"),
        ParseError);
  }
  SECTION("content after end") {
    CHECK_THROWS_AS(
        parse_algebra("algebra x\nelements 0\nsignature sh\nend\nmore\n"),
        ParseError);
  }
  SECTION("missing signature") {
    CHECK_THROWS_AS(parse_algebra("algebra x\nelements 0\nend\n"), ParseError);
  }
  SECTION("signature not backed by ops") {
    CHECK_THROWS_AS(parse_algebra("algebra x\nelements 0\nsignature sn\nend\n"),
                    ParseError);
  }
  SECTION("order defects are positioned diagnostics") {
    try {
      parse_algebra(
          "algebra x\nelements 0 a b 1\ncover 0 a\ncover 0 b\nsignature "
          "sh\nend\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.kind() == ErrorKind::Parse);
      CHECK(e.line() == 6);
    }
  }
}

TEST_CASE("comments and blank lines are ignored", "[io]") {
  auto a = parse_algebra(
      "# header\nalgebra c  # name\n\nelements 0 1\ncover 0 1\n"
      "op imp 2\n1 1\n# interleaved\n0 1\nsignature h\nend\n# trailing\n");
  CHECK(a.n() == 2);
  CHECK(a.imp(1, 0) == 0);
}

TEST_CASE("mutated inputs never crash the parser", "[io]") {
  std::string canon = corpus::slurp(corpus::data_path("grid9.alg"));
  std::mt19937 rng(20240811);
  for (int i = 0; i < 1000; ++i) {
    std::string text = canon;
    int edits = 1 + static_cast<int>(rng() % 4);
    for (int e = 0; e < edits; ++e) {
      size_t pos = rng() % (text.size() + 1);
      switch (rng() % 3) {
        case 0:
          text.insert(pos, 1, static_cast<char>(rng() % 256));
          break;
        case 1:
          if (!text.empty()) text.erase(pos % text.size(), 1);
          break;
        default:
          if (!text.empty())
            text[pos % text.size()] = static_cast<char>(rng() % 256);
          break;
      }
    }
    try {
      parse_algebra(text);
    } catch (const ParseError& err) {
      CHECK(err.line() >= 1);
      CHECK(err.col() >= 1);
    }
    // Any other escape (non-ParseError exception, crash) fails the test.
  }
}

TEST_CASE("element list parsing", "[io]") {
  auto h = corpus::load("grid9_quot.alg");
  auto members = parse_element_list(h, "e,1");
  REQUIRE(members.size() == 2);
  CHECK(members[0] == h.lattice.index_of("e"));
  CHECK(members[1] == h.lattice.index_of("1"));
  CHECK(format_element_list(h, members) == "e,1");
  CHECK(parse_element_list(h, "").empty());
  CHECK_THROWS_AS(parse_element_list(h, "e,q"), Error);
}
