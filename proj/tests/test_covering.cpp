#include "doctest.h"

#include "rank74/census.h"
#include "rank74/covering.h"
#include "rank74/parity.h"
#include "rank74/surgery.h"

using namespace rank74;

namespace {

TriangleComplex cat(const char* name) { return TriangleComplex(catalog(name).faces); }

void check_parity_preserved(const TriangleComplex& cover, const TriangleComplex& base, const CoveringMap& m) {
  auto pc = parity_map(LinkAtlas(cover)).bits;
  auto pb = parity_map(LinkAtlas(base)).bits;
  for (std::size_t f = 0; f < cover.num_faces(); ++f) CHECK(pc[f] == pb[m.face_map[f]]);
}

} // namespace

TEST_CASE("identity covering") {
  TriangleComplex base = cat("V_0^1");
  auto m = verify_covering(base, base);
  REQUIRE(m);
  CHECK(m->sheets == 1);
  CHECK(is_covering_map(base, base, *m));
}

TEST_CASE("closed Y00 Y00 covers V_0^1 and keeps parity") {
  TriangleComplex cover = close_up(compose(builtin_cobordism("Y00"), builtin_cobordism("Y00")));
  TriangleComplex base = cat("V_0^1");
  auto m = verify_covering(cover, base);
  REQUIRE(m);
  CHECK(m->sheets == 2);
  CHECK(is_covering_map(cover, base, *m));
  check_parity_preserved(cover, base, *m);
}

TEST_CASE("closed Y00 covers V_0^1 once") {
  TriangleComplex cover = close_up(builtin_cobordism("Y00"));
  auto m = verify_covering(cover, cat("V_0^1"));
  REQUIRE(m);
  CHECK(m->sheets == 1);
}

TEST_CASE("no covering between complexes of different parity") {
  CHECK_FALSE(verify_covering(cat("V_0"), cat("V_0^1")));
  CHECK_FALSE(verify_covering(cat("V_0^1"), cat("V_0")));
  CHECK_FALSE(verify_covering(v_n(1), cat("V_0^1")));
}

TEST_CASE("coverings found between catalog entries preserve parity") {
  const auto& entries = catalog_entries();
  for (const auto& a : entries) {
    for (const auto& b : entries) {
      TriangleComplex ca(a.faces), cb(b.faces);
      auto m = verify_covering(ca, cb);
      if (!m) continue;
      CAPTURE(a.name);
      CAPTURE(b.name);
      CHECK(is_covering_map(ca, cb, *m));
      check_parity_preserved(ca, cb, *m);
    }
  }
}

TEST_CASE("the independent checker rejects a corrupted map") {
  TriangleComplex base = cat("V_0");
  auto m = verify_covering(base, base);
  REQUIRE(m);
  CoveringMap bad = *m;
  std::swap(bad.label_map[0], bad.label_map[1]);
  CHECK_FALSE(is_covering_map(base, base, bad));
  bad = *m;
  bad.rotation[0] = (bad.rotation[0] + 1) % 3;
  CHECK_FALSE(is_covering_map(base, base, bad));
}
