// Module toolkit over small algebras with hand-checked structure.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qrep/rep.hpp"

using namespace qrep;

namespace {

// two vertices, arrows a: 1->2 and b: 2->1, relations aba = bab = 0 (dim 6)
AlgebraSpec a21_spec() {
  AlgebraSpec s;
  s.name = "A21";
  s.characteristic = 3;
  s.quiver.vertices = {"1", "2"};
  s.quiver.arrows = {{"a", 0, 1}, {"b", 1, 0}};
  s.quiver.validate();
  s.relations = {parse_element_expr(s.quiver, "a*b*a"), parse_element_expr(s.quiver, "b*a*b")};
  s.nilpotency = 3;
  return s;
}

AlgebraSpec kx3_spec() {
  AlgebraSpec s;
  s.name = "kx3";
  s.characteristic = 3;
  s.quiver.vertices = {"1"};
  s.quiver.arrows = {{"x", 0, 0}};
  s.quiver.validate();
  s.nilpotency = 3;
  return s;
}

} // namespace

TEST_CASE("projective and simple modules over A21") {
  Algebra A = Algebra::build(a21_spec());
  Representation P1 = projective_module(A, 0);
  CHECK(P1.dim() == 3);
  CHECK(P1.dims == std::vector<unsigned>{2, 1});
  CHECK(loewy_series(P1).one_line() == "1/2/1");
  CHECK(socle_series(P1).one_line() == "1/2/1");

  Representation P2 = projective_module(A, 1);
  CHECK(loewy_series(P2).one_line() == "2/1/2");
  CHECK(is_projective_module(P1));
  CHECK(is_projective_module(P2));

  Representation S1 = simple_module(A, 0);
  CHECK(S1.dim() == 1);
  CHECK(loewy_series(S1).one_line() == "1");
  CHECK_FALSE(is_projective_module(S1));

  // regular module = P1 + P2
  Representation R = regular_module(A);
  CHECK(R.dim() == 6);
  LoewyTable t = loewy_series(R);
  CHECK(t.layers.size() == 3);
  CHECK(t.layers[0] == std::vector<unsigned>{1, 1});
  CHECK(t.layers[1] == std::vector<unsigned>{1, 1});
  CHECK(t.layers[2] == std::vector<unsigned>{1, 1});

  // right-sided versions mirror the left ones
  Representation P1r = projective_module(A, 0, false);
  CHECK(P1r.dim() == 3);
  CHECK(loewy_series(P1r).one_line() == "1/2/1");
}

TEST_CASE("radical, socle, top") {
  Algebra A = Algebra::build(a21_spec());
  Representation P1 = projective_module(A, 0);
  Mat rad = radical_subspace(P1);
  CHECK(rad.cols() == 2);
  Mat soc = socle_subspace(P1);
  CHECK(soc.cols() == 1);
  SubQuot top = top_of(P1);
  CHECK(top.rep.dims == std::vector<unsigned>{1, 0});
  // socle of P1 sits at vertex 1
  SubQuot socm = sub_representation(P1, soc, "soc");
  CHECK(socm.rep.dims == std::vector<unsigned>{1, 0});
  // rad P1 has Loewy series 2/1
  SubQuot radm = sub_representation(P1, rad, "rad");
  CHECK(loewy_series(radm.rep).one_line() == "2/1");
}

TEST_CASE("validate_hom and projective covers") {
  Algebra A = Algebra::build(a21_spec());
  Representation P1 = projective_module(A, 0);
  Representation S1 = simple_module(A, 0);
  Cover c = projective_cover(S1);
  CHECK(c.mults == std::vector<unsigned>{1, 0});
  CHECK(c.P.dim() == 3);
  CHECK(rank(c.map) == 1);
  ModuleHom h{&c.P, &S1, c.map};
  CHECK_NOTHROW(validate_hom(h));

  Cover cp = projective_cover(P1);
  CHECK(cp.P.dim() == 3); // a projective is its own cover
}

TEST_CASE("syzygies over A21 have period four") {
  Algebra A = Algebra::build(a21_spec());
  Representation S1 = simple_module(A, 0);
  Representation W1 = omega(S1, 1);
  CHECK(loewy_series(W1).one_line() == "2/1");
  Representation W2 = omega(S1, 2);
  CHECK(loewy_series(W2).one_line() == "2");
  Representation W4 = omega(S1, 4);
  IsoResult iso = is_isomorphic(W4, S1);
  CHECK(iso.status == IsoResult::Status::yes);
  // omega of a projective vanishes
  Representation P1 = projective_module(A, 0);
  CHECK(omega(P1, 1).dim() == 0);
}

TEST_CASE("hom spaces and isomorphism testing") {
  Algebra A = Algebra::build(a21_spec());
  Representation P1 = projective_module(A, 0);
  Representation P2 = projective_module(A, 1);
  Representation S1 = simple_module(A, 0);
  Representation S2 = simple_module(A, 1);
  // Hom(P_v, M) has dimension dim M_v
  CHECK(hom_space(P1, P1).size() == 2); // e1 A e1 two-dimensional
  CHECK(hom_space(P1, S1).size() == 1);
  CHECK(hom_space(P1, S2).size() == 0);
  CHECK(hom_space(S1, P1).size() == 1); // socle inclusion
  for (const Mat& m : hom_space(P1, P2)) {
    ModuleHom h{&P1, &P2, m};
    CHECK_NOTHROW(validate_hom(h));
  }
  CHECK(is_isomorphic(P1, P2).status == IsoResult::Status::no);
  CHECK(is_isomorphic(S1, S2).status == IsoResult::Status::no);
  CHECK(is_isomorphic(P1, P1).status == IsoResult::Status::yes);
  IsoResult w = is_isomorphic(P1, P1);
  ModuleHom h{&P1, &P1, w.witness};
  CHECK_NOTHROW(validate_hom(h));
  CHECK(rank(w.witness) == 3);
}

TEST_CASE("direct sums and projective stripping") {
  Algebra A = Algebra::build(a21_spec());
  Representation P1 = projective_module(A, 0);
  Representation P2 = projective_module(A, 1);
  Representation S1 = simple_module(A, 0);

  Representation X = direct_sum({&P1, &S1}, "P1+S1");
  CHECK(X.dim() == 4);
  Representation core = strip_projective_summands(X);
  CHECK(core.dim() == 1);
  CHECK(is_isomorphic(core, S1).status == IsoResult::Status::yes);

  Representation Y = direct_sum({&P1, &P2}, "P1+P2");
  CHECK(strip_projective_summands(Y).dim() == 0);

  // a non-projective module with no projective summand is untouched
  Representation rad1 = sub_representation(P1, radical_subspace(P1), "radP1").rep;
  CHECK(strip_projective_summands(rad1).dim() == rad1.dim());
}

TEST_CASE("twists along the swap automorphism") {
  Algebra A = Algebra::build(a21_spec());
  AutomorphismSpec sw;
  sw.name = "s";
  sw.vertex_image = {1, 0};
  sw.arrow_image = {parse_element_expr(A.quiver(), "b"), parse_element_expr(A.quiver(), "a")};
  Automorphism s = build_automorphism(A, sw);

  Representation S1 = simple_module(A, 0);
  Representation S2 = simple_module(A, 1);
  CHECK(is_isomorphic(twist_module(S1, s), S2).status == IsoResult::Status::yes);
  Representation P1 = projective_module(A, 0);
  Representation P2 = projective_module(A, 1);
  CHECK(is_isomorphic(twist_module(P1, s), P2).status == IsoResult::Status::yes);
  // twisting twice along an involution is the identity
  CHECK(is_isomorphic(twist_module(twist_module(P1, s), s), P1).status == IsoResult::Status::yes);
}

TEST_CASE("duals swap sides and preserve projectives here") {
  Algebra A = Algebra::build(a21_spec());
  Representation P1 = projective_module(A, 0);
  Representation D = dual_module(P1);
  CHECK_FALSE(D.left);
  CHECK(D.dims == P1.dims);
  // A21 is symmetric, so the dual of a projective left module is the
  // projective right module at the same vertex
  Representation P1r = projective_module(A, 0, false);
  CHECK(is_isomorphic(D, P1r).status == IsoResult::Status::yes);
  // double dual is the identity
  CHECK(is_isomorphic(dual_module(D), P1).status == IsoResult::Status::yes);
}

TEST_CASE("restriction along a subalgebra embedding") {
  Algebra A = Algebra::build(a21_spec());
  // k[y]/(y^2) embeds with u -> e1 + e2, y -> a*b
  AlgebraSpec ks;
  ks.name = "ky2";
  ks.characteristic = 3;
  ks.quiver.vertices = {"u"};
  ks.quiver.arrows = {{"y", 0, 0}};
  ks.quiver.validate();
  ks.nilpotency = 2;
  SubalgebraSpec ss;
  ss.presented = ks;
  ss.vertex_image = {parse_element_expr(A.quiver(), "e1 + e2")};
  ss.arrow_image = {parse_element_expr(A.quiver(), "a*b")};
  Subalgebra S = build_subalgebra(A, ss);

  Representation P1 = projective_module(A, 0);
  Representation res = restrict_module(P1, S);
  CHECK(res.dim() == 3);
  CHECK(res.A->name() == "ky2");
  // y acts with rank one on P1: e1 -> ab, a -> 0, ab -> 0
  LoewyTable t = loewy_series(res);
  REQUIRE(t.layers.size() == 2);
  CHECK(t.layers[0][0] == 2);
  CHECK(t.layers[1][0] == 1);
}

TEST_CASE("realizations and the corner hom functor") {
  Algebra A = Algebra::build(a21_spec());
  // the full algebra is its own corner at all vertices
  Realization full = build_realization(
      A, A, {"1", "2"},
      {parse_element_expr(A.quiver(), "a"), parse_element_expr(A.quiver(), "b")});
  Representation P1 = projective_module(A, 0);
  Representation H = hom_module(full, P1);
  CHECK(is_isomorphic(H, P1).status == IsoResult::Status::yes);

  // corner at vertex 1 only: e1 A e1 = k[x]/(x^2) with x = ab
  AlgebraSpec cs;
  cs.name = "corner1";
  cs.characteristic = 3;
  cs.quiver.vertices = {"1"};
  cs.quiver.arrows = {{"x", 0, 0}};
  cs.quiver.validate();
  cs.nilpotency = 2;
  Algebra C = Algebra::build(cs);
  Realization r =
      build_realization(A, C, {"1"}, {parse_element_expr(A.quiver(), "a*b")});
  Representation HC = hom_module(r, P1);
  CHECK(HC.dim() == 2); // dim e1 P1 = 2
  CHECK(loewy_series(HC).layers.size() == 2);

  // a*b*a*b reduces to zero, so x would have a zero image: not faithful
  CHECK_THROWS_WITH_AS(
      build_realization(A, C, {"1"},
                        {parse_element_expr(A.quiver(), "a*b*a*b")}),
      doctest::Contains("faithful"), spec_error);
  // an idempotent image is rejected before anything else
  CHECK_THROWS_WITH_AS(build_realization(A, C, {"1"}, {parse_element_expr(A.quiver(), "e1")}),
                       doctest::Contains("radical"), spec_error);
  // image with wrong endpoints
  CHECK_THROWS_WITH_AS(build_realization(A, C, {"1"}, {parse_element_expr(A.quiver(), "a")}),
                       doctest::Contains("endpoint"), spec_error);
}

TEST_CASE("span closure and random submodules") {
  Algebra A = Algebra::build(a21_spec());
  Representation P1 = projective_module(A, 0);
  // the span of e1 is everything; the span of the socle is one-dimensional
  Mat seed(A.field(), P1.dim(), 1);
  seed.at(0, 0) = 1; // some vector in the vertex-1 block
  Mat closed = span_submodule(P1, seed);
  // check closure: applying arrows stays inside
  SubQuot sq = sub_representation(P1, closed, "span");
  CHECK(sq.rep.dim() == closed.cols());
  for (unsigned s = 0; s < 50; ++s) {
    Representation sub = random_submodule(P1, s);
    CHECK(sub.dim() <= P1.dim());
    // any submodule of P1 here contains the socle unless zero
    if (sub.dim() > 0) CHECK(sub.dims[0] >= 1);
  }
}

TEST_CASE("loewy table text forms") {
  Algebra A = Algebra::build(a21_spec());
  Representation P1 = projective_module(A, 0);
  LoewyTable t = loewy_series(P1);
  CHECK(t.one_line() == "1/2/1");
  CHECK(parse_loewy(A, "1/2/1") == t);
  CHECK(parse_loewy(A, "1/2 2/1").layers[1] == std::vector<unsigned>{0, 2});
  CHECK_THROWS_AS(parse_loewy(A, "1/3"), spec_error);
  std::string d = t.diagram("");
  CHECK(d == "1\n2\n1\n");
  Representation Z = omega(P1, 1);
  CHECK(loewy_series(Z).one_line() == "0");
}

TEST_CASE("module validation rejects relation violations") {
  Algebra A = Algebra::build(kx3_spec());
  Representation R;
  R.A = &A;
  R.left = true;
  R.name = "bad";
  R.dims = {2};
  Mat x(A.field(), 2, 2);
  x.at(0, 1) = 1;
  x.at(1, 0) = 1; // x^3 = x != 0 violates nilpotency 3
  R.act = {x};
  CHECK_THROWS_WITH_AS(R.finalize(), doctest::Contains("nilpotency"), spec_error);

  Mat ok(A.field(), 2, 2);
  ok.at(1, 0) = 1; // x^2 = 0
  R.act = {ok};
  CHECK_NOTHROW(R.finalize());
  CHECK(loewy_series(R).one_line() == "1/1");
}
