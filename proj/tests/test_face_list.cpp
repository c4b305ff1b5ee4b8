#include "doctest.h"

#include "golden.h"
#include "rank74/face_list.h"

using namespace rank74;

TEST_CASE("parse the V_0 listing") {
  FaceList f = parse_faces("[[1,2,6],[2,3,7],[3,4,8],[4,5,1],[5,6,2],[6,7,3],[7,8,4],[8,1,5]]");
  REQUIRE(f.size() == 8);
  CHECK(f[0] == make_face("1", "2", "6"));
  CHECK(f[7] == make_face("8", "1", "5"));
}

TEST_CASE("parse accepts bare letters, quotes, primes and comments") {
  CHECK(parse_faces("[[a,b,c]]") == FaceList{make_face("a", "b", "c")});
  CHECK(parse_faces(R"([["x'", "d''", "a"]])") == FaceList{make_face("x'", "d''", "a")});
  FaceList f = parse_faces("# header\n[\n  [1, 2, 3],\n  # between faces\n  [3, 2, 1]\n]\n");
  CHECK(f.size() == 2);
}

TEST_CASE("X00 listing has 14 faces with (1,1,2) fourth") {
  FaceList f = parse_faces(golden::kX00);
  REQUIRE(f.size() == 14);
  CHECK(f[3] == make_face("1", "1", "2"));
}

TEST_CASE("malformed triples report the face index") {
  try {
    parse_faces("[[1,2,3],[4,5],[6,7,8]]");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.face_index() == 1);
  }
  CHECK_THROWS_AS(parse_faces("[[1,2,3,4]]"), ParseError);
  CHECK_THROWS_AS(parse_faces("[[1,2,3]"), ParseError);
  CHECK_THROWS_AS(parse_faces("[[1,,3]]"), ParseError);
}

TEST_CASE("format and parse round-trip") {
  for (const auto& t : golden::kTables) {
    FaceList f = parse_faces(t.faces);
    CHECK(parse_faces(format_faces(f)) == f);
  }
  CHECK(format_face(make_face("1", "2", "6")) == "[1,2,6]");
}

TEST_CASE("labels") {
  CHECK(Label("12").is_numeral());
  CHECK_FALSE(Label("a'").is_numeral());
  CHECK_THROWS(Label(""));
  CHECK(same_oriented_face(make_face("1", "2", "3"), make_face("2", "3", "1")));
  CHECK_FALSE(same_oriented_face(make_face("1", "2", "3"), make_face("1", "3", "2")));
}
