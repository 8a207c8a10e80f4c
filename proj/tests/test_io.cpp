#include "corpus.hpp"
#include "doctest.h"
#include "ssk/builders.hpp"
#include "ssk/io.hpp"

using namespace ssk;
using namespace ssk::testing;

TEST_CASE("sets round-trip through the text format byte for byte") {
  for (const CorpusMember& m : corpus()) {
    std::string text = emit_sset(*m.sset);
    SsetPtr back = parse_sset(text);
    CHECK(same_presentation(*back, *m.sset));
    // names and generator order survive as well
    for (int d = 0; d <= m.sset->dimension(); ++d)
      for (int i = 0; i < m.sset->count(d); ++i)
        CHECK(back->name(GeneratorId{d, i}) == m.sset->name(GeneratorId{d, i}));
    CHECK(emit_sset(*back) == text);
  }
}

TEST_CASE("parsing accepts comments, blank lines and loose whitespace") {
  SsetPtr X = parse_sset(
      "# a triangle with a collapsed edge would go here\n"
      "sset v1\n"
      "\n"
      "  gen p 0   # the only vertex\n"
      "gen loop 1\n"
      "   face loop 0 = p\n"
      "face loop 1 = p # closes up\n");
  CHECK(X->counts() == std::vector<int>{1, 1});
  CHECK(X->name(GeneratorId{1, 0}) == "loop");
  CHECK(X->face(GeneratorId{1, 0}, 0) == nondeg(GeneratorId{0, 0}));
}

TEST_CASE("degenerate faces carry their operator after a bar") {
  SsetPtr s2 = sphere(2);
  std::string text = emit_sset(*s2);
  CHECK(text.find('|') != std::string::npos);
  SsetPtr back = parse_sset(text);
  CHECK(same_presentation(*back, *s2));

  // names may contain the bar character; only a free-standing bar separates
  SsetBuilder b;
  b.add_generator(0, "odd|name");
  std::string odd = emit_sset(*b.build());
  CHECK(parse_sset(odd)->find("odd|name").has_value());
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_sset(""), ParseError);
  CHECK_THROWS_AS(parse_sset("sset v2\n"), ParseError);
  CHECK_THROWS_AS(parse_sset("sset v1\nfrob x\n"), ParseError);
  CHECK_THROWS_AS(parse_sset("sset v1\ngen a 0\ngen a 0\n"), ParseError);       // duplicate
  CHECK_THROWS_AS(parse_sset("sset v1\ngen e 1\nface e 0 = q\n"), ParseError);  // unknown
  CHECK_THROWS_AS(parse_sset("sset v1\ngen v 0\ngen e 1\nface e 7 = v\n"), ParseError);
  CHECK_THROWS_AS(parse_sset("sset v1\ngen v 0\ngen e 1\nface e 0 = v\n"), ParseError);  // missing face
  CHECK_THROWS_AS(parse_sset("sset v1\ngen v 0\ngen e 1\nface e 0 = v | 0 1\n"), ParseError);

  try {
    parse_sset("sset v1\ngen v 0\nbroken line\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("maps round-trip with their header") {
  SphereModel s2 = sphere_with_map(2);
  std::string text = emit_smap(s2.from_delta, "triangle", "ball");
  SmapHeader header = peek_smap_header(text);
  CHECK(header.source_id == "triangle");
  CHECK(header.target_id == "ball");
  SimplicialMap back = parse_smap(text, delta(2), s2.sset);
  CHECK(back == s2.from_delta);
  CHECK(emit_smap(back, "triangle", "ball") == text);
}

TEST_CASE("map parsing is validated") {
  SsetPtr d1 = delta(1);
  CHECK_THROWS_AS(parse_smap("smap v1\n", d1, d1), ParseError);  // missing header lines
  // missing a send
  CHECK_THROWS_AS(
      parse_smap("smap v1\nsource a\ntarget b\nsend 0 = 0\nsend 1 = 1\n", d1, d1), ParseError);
  // duplicate send
  CHECK_THROWS_AS(parse_smap("smap v1\nsource a\ntarget b\nsend 0 = 0\nsend 0 = 1\n"
                             "send 1 = 1\nsend 01 = 01\n",
                             d1, d1),
                  ParseError);
  // image of the wrong degree
  CHECK_THROWS_AS(parse_smap("smap v1\nsource a\ntarget b\nsend 0 = 01\nsend 1 = 1\n"
                             "send 01 = 01\n",
                             d1, d1),
                  ParseError);
  // not face-compatible: the edge flips but the vertices stay
  CHECK_THROWS_AS(parse_smap("smap v1\nsource a\ntarget b\nsend 0 = 1\nsend 1 = 0\n"
                             "send 01 = 01\n",
                             d1, d1),
                  ParseError);

  // a legitimate non-identity map: collapse the interval onto the vertex 1
  SimplicialMap fold = parse_smap(
      "smap v1\nsource a\ntarget b\nsend 0 = 1\nsend 1 = 1\nsend 01 = 1 | 0 0\n", d1, d1);
  CHECK(apply(fold, nondeg(*d1->find("01"))) ==
        Simplex(*d1->find("1"), DeltaOperator(0, {0, 0})));
}
