// Built-in corpus bundles: loading, canonical-text round trips, and the
// golden tables (dimensions, Loewy series, permutations, cover shapes)
// frozen from the verified displays.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "qrep/corpus.hpp"
#include "qrep/periodicity.hpp"

using namespace qrep;

namespace {

const Corpus& example(const std::string& name) {
  static std::map<std::string, Corpus> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, load_example(name)).first;
  return it->second;
}

std::string proj_loewy(const Corpus& c, const std::string& alg, const std::string& vertex) {
  const Algebra& A = c.algebra(alg);
  Representation P = projective_module(A, A.quiver().vertex_index(vertex), true);
  return loewy_series(P).one_line();
}

std::string vertex_image(const Corpus& c, const std::string& aut, const std::string& v) {
  const Automorphism& s = c.automorphism(aut);
  const Quiver& q = s.A->quiver();
  return q.vertices[s.vimg(q.vertex_index(v))];
}

}  // namespace

TEST_CASE("builtin bundle names") {
  std::vector<std::string> names = builtin_corpus_names();
  REQUIRE(names == std::vector<std::string>{"toys", "s6", "s8"});
  CHECK_THROWS_AS((void)builtin_corpus_text("nope"), spec_error);
  CHECK_THROWS_AS((void)load_example("nope"), spec_error);
}

TEST_CASE("canonical texts round-trip byte-identically") {
  for (const std::string& name : builtin_corpus_names()) {
    const std::string& text = builtin_corpus_text(name);
    CAPTURE(name);
    CHECK(serialize_corpus(parse_corpus(text)) == text);
  }
}

TEST_CASE("corpus lookups throw with the missing name") {
  const Corpus& c = example("toys");
  CHECK_THROWS_WITH_AS((void)c.algebra("zzz"), doctest::Contains("zzz"), spec_error);
  CHECK_THROWS_WITH_AS((void)c.module("zzz"), doctest::Contains("zzz"), spec_error);
  CHECK_THROWS_WITH_AS((void)c.witness("zzz"), doctest::Contains("zzz"), spec_error);
}

TEST_CASE("golden:toys dimensions and witnesses") {
  const Corpus& c = example("toys");
  CHECK(c.algebra("kx3").dim() == 3);
  CHECK(c.algebra("A21").dim() == 6);
  CHECK(c.algebra("a2").dim() == 3);
  CHECK(proj_loewy(c, "kx3", "1") == "1/1/1");
  CHECK(proj_loewy(c, "A21", "1") == "1/2/1");
  CHECK(proj_loewy(c, "A21", "2") == "2/1/2");

  for (const char* wn : {"kx3w", "a21w"}) {
    CAPTURE(wn);
    StrongWitness w = c.witness(wn);
    CheckList left = check_strong_periodic_left(w);
    CheckList right = check_strong_periodic_right(w);
    for (const CheckResult& r : left.checks) {
      CAPTURE(r.name);
      CHECK(r.pass);
    }
    for (const CheckResult& r : right.checks) {
      CAPTURE(r.name);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("golden:s6 dimensions") {
  const Corpus& c = example("s6");
  CHECK(c.algebra("A").dim() == 51);
  CHECK(c.algebra("E").dim() == 36);
  CHECK(c.algebra("B").dim() == 12);
  CHECK(c.module("M").total == 6);
  CHECK(c.bimodule("EE").total == 36);
  CHECK(c.bimodule("sE").total == 36);
  CHECK(c.bimodule("Y0").total == 108);
  CHECK(c.bimodule("Y1").total == 108);
  for (const char* q : {"1", "2", "4", "5"}) {
    CAPTURE(q);
    const Algebra& E = c.algebra("E");
    CHECK(projective_module(E, E.quiver().vertex_index(q), true).total == 9);
    CHECK(c.module(std::string("Q") + q).total == 3);
    CHECK(c.module(std::string("U") + q).total == 3);
  }
}

TEST_CASE("golden:s6 Loewy series") {
  const Corpus& c = example("s6");
  // E projectives
  CHECK(proj_loewy(c, "E", "1") == "1/2 5/1 1 4/2 5/1");
  CHECK(proj_loewy(c, "E", "2") == "2/1 4/2 2 5/1 4/2");
  CHECK(proj_loewy(c, "E", "4") == "4/2 5/1 4 4/2 5/4");
  CHECK(proj_loewy(c, "E", "5") == "5/1 4/2 5 5/1 4/5");
  // B projectives and the literal Q modules they equal
  CHECK(proj_loewy(c, "B", "1") == "1/5/1");
  CHECK(proj_loewy(c, "B", "2") == "2/4/2");
  CHECK(proj_loewy(c, "B", "4") == "4/2/4");
  CHECK(proj_loewy(c, "B", "5") == "5/1/5");
  for (const char* q : {"1", "2", "4", "5"}) {
    CAPTURE(q);
    CHECK(loewy_series(c.module(std::string("Q") + q)).one_line() == proj_loewy(c, "B", q));
  }
  CHECK(loewy_series(c.module("M")).one_line() == "2 5/1 4/2 5");
  CHECK(loewy_series(c.module("U1")).one_line() == "1/2/1");
  CHECK(loewy_series(c.module("U2")).one_line() == "2/1/2");
  CHECK(loewy_series(c.module("U4")).one_line() == "4/5/4");
  CHECK(loewy_series(c.module("U5")).one_line() == "5/4/5");
}

TEST_CASE("golden:s6 permutation and corner module") {
  const Corpus& c = example("s6");
  // sigma acts as (1,2)(4,5)
  CHECK(vertex_image(c, "sigma", "1") == "2");
  CHECK(vertex_image(c, "sigma", "2") == "1");
  CHECK(vertex_image(c, "sigma", "4") == "5");
  CHECK(vertex_image(c, "sigma", "5") == "4");
  // M is the hom-functor image of the complement projective under the
  // corner realization.
  const Algebra& A = c.algebra("A");
  const Realization& R = c.realization("R");
  Representation P3 = projective_module(A, A.quiver().vertex_index("3"), true);
  Representation H = hom_module(R, P3);
  IsoResult iso = is_isomorphic(H, c.module("M"));
  CHECK(iso.status == IsoResult::Status::yes);
}

TEST_CASE("golden:s8 dimensions") {
  const Corpus& c = example("s8");
  CHECK(c.algebra("A").dim() == 46);
  CHECK(c.algebra("E").dim() == 30);
  CHECK(c.algebra("B").dim() == 6);
  CHECK(c.algebra("C").dim() == 8);
  CHECK(c.algebra("D").dim() == 4);
  CHECK(c.module("M").total == 6);
  CHECK(c.bimodule("EE").total == 30);
  CHECK(c.bimodule("sE").total == 30);
  CHECK(c.bimodule("Y0").total == 150);
  CHECK(c.bimodule("Y1").total == 216);
  CHECK(c.bimodule("Y2").total == 126);
  const Algebra& E = c.algebra("E");
  std::vector<unsigned> pd;
  for (const char* q : {"2", "3", "4", "5"})
    pd.push_back(projective_module(E, E.quiver().vertex_index(q), true).total);
  CHECK(pd == std::vector<unsigned>{6, 9, 9, 6});
  CHECK(c.module("U24").total == 5);
  CHECK(c.module("U35").total == 5);
  CHECK(c.module("V3").total == 3);
  CHECK(c.module("V4").total == 3);
}

TEST_CASE("golden:s8 Loewy series") {
  const Corpus& c = example("s8");
  CHECK(proj_loewy(c, "E", "2") == "2/3/2 4/3/2");
  CHECK(proj_loewy(c, "E", "3") == "3/2 4/3 3 5/2 4/3");
  CHECK(proj_loewy(c, "E", "4") == "4/3 5/2 4 4/3 5/4");
  CHECK(proj_loewy(c, "E", "5") == "5/4/3 5/4/5");
  CHECK(loewy_series(c.module("M")).one_line() == "3 5/2 4/3 5");
  CHECK(loewy_series(c.module("U24")).one_line() == "2 4/3/2 4");
  CHECK(loewy_series(c.module("U35")).one_line() == "3 5/4/3 5");
  CHECK(loewy_series(c.module("V3")).one_line() == "3/2/3");
  CHECK(loewy_series(c.module("V4")).one_line() == "4/5/4");
}

TEST_CASE("golden:s8 permutations, corner module, cover chain") {
  const Corpus& c = example("s8");
  // sigma = (2,5)(3,4) on E; tau = (2,4)(3,5) on D
  CHECK(vertex_image(c, "sigma", "2") == "5");
  CHECK(vertex_image(c, "sigma", "3") == "4");
  CHECK(vertex_image(c, "sigma", "4") == "3");
  CHECK(vertex_image(c, "sigma", "5") == "2");
  CHECK(vertex_image(c, "tau", "2") == "4");
  CHECK(vertex_image(c, "tau", "3") == "5");
  CHECK(vertex_image(c, "tau", "4") == "2");
  CHECK(vertex_image(c, "tau", "5") == "3");

  const Algebra& A = c.algebra("A");
  const Realization& R = c.realization("R");
  Representation P1 = projective_module(A, A.quiver().vertex_index("1"), true);
  Representation H = hom_module(R, P1);
  IsoResult iso = is_isomorphic(H, c.module("M"));
  CHECK(iso.status == IsoResult::Status::yes);

  // minimal cover chain of M: P3+P5, then P4+P3, then P2+P4 (per E vertex
  // order 2,3,4,5)
  std::vector<std::vector<unsigned>> want = {
      {0, 1, 0, 1}, {0, 1, 1, 0}, {1, 0, 1, 0}};
  Representation cur = c.module("M");
  for (unsigned step = 0; step < 3; ++step) {
    CAPTURE(step);
    Cover pc = projective_cover(cur);
    CHECK(pc.mults == want[step]);
    cur = omega(cur, 1);
  }
}

TEST_CASE("witness blocks assemble against their declared data") {
  for (const char* name : {"s6", "s8"}) {
    CAPTURE(name);
    const Corpus& c = example(name);
    StrongWitness w = c.witness("main");
    const WitnessBlock& wb = c.witness_block("main");
    REQUIRE(w.terms.size() == wb.terms.size());
    REQUIRE(w.maps.size() == wb.maps.size());
    CHECK(w.terms.size() == w.maps.size() + 1);
    CHECK(wb.period + 2 == wb.terms.size());
    CHECK(w.M == &c.module(wb.module));
    CHECK(w.sigma == &c.automorphism(wb.twist));
    // the declared chain really is a complex with zero homology
    std::vector<const BimoduleMap*> maps(w.maps.begin(), w.maps.end());
    CHECK(is_complex(maps));
    for (unsigned h : homology_dims(maps)) CHECK(h == 0);
  }
}
