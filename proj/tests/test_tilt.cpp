// Combinatorial tilting layer over toy algebras where every hom dimension,
// approximation, and endomorphism ring is known by hand: the A21 double-arrow
// algebra and k[x]/(x^3), both over GF(3).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qrep/tilt.hpp"

using namespace qrep;

namespace {

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

void check_all(const CheckList& cl) {
  for (const CheckResult& c : cl.checks) {
    INFO(c.name, ": ", c.detail);
    CHECK(c.pass);
  }
}

std::vector<fel> unit(unsigned n, unsigned i) {
  std::vector<fel> v(n, 0);
  v[i] = 1;
  return v;
}

// Flattens a hom-space basis to columns and returns its rank.
unsigned flat_rank(const std::vector<Mat>& hs) {
  if (hs.empty()) return 0;
  const Field& f = hs[0].field();
  unsigned e = hs[0].rows() * hs[0].cols();
  Mat m(f, e, static_cast<unsigned>(hs.size()));
  for (unsigned k = 0; k < hs.size(); ++k)
    for (unsigned r = 0; r < hs[k].rows(); ++r)
      for (unsigned c = 0; c < hs[k].cols(); ++c)
        m.at(r * hs[k].cols() + c, k) = hs[k].at(r, c);
  return rank(m);
}

}  // namespace

TEST_CASE("projective terms carry generator bookkeeping") {
  Algebra A = Algebra::build(a21_spec());

  ProjTerm t = make_proj_term(A, {2, 1}, true, "P1+P1+P2");
  REQUIRE(t.copies() == 3);
  CHECK(t.gen_vertex == std::vector<unsigned>{0, 0, 1});
  REQUIRE(t.rep.total == 9);  // two copies of P1 (dim 3) and one P2 (dim 3)
  CHECK(t.mults == std::vector<unsigned>{2, 1});

  // locate each copy's generator coordinate (the idempotent path)
  std::vector<int> gen_coord(t.copies(), -1);
  for (unsigned c = 0; c < t.rep.total; ++c)
    if (A.basis_path(t.coord_path[c]).arrows.empty()) {
      REQUIRE(gen_coord[t.coord_gen[c]] == -1);
      gen_coord[t.coord_gen[c]] = static_cast<int>(c);
    }
  for (unsigned k = 0; k < t.copies(); ++k) REQUIRE(gen_coord[k] >= 0);

  // every coordinate is the stated path translate of its copy's generator
  for (unsigned c = 0; c < t.rep.total; ++c) {
    Mat act = t.rep.action_of_basis(t.coord_path[c]);
    std::vector<fel> img =
        act.apply(unit(t.rep.total, static_cast<unsigned>(gen_coord[t.coord_gen[c]])));
    CHECK(img == unit(t.rep.total, c));
  }

  ProjTerm z = make_proj_term(A, {0, 0}, true, "zero");
  CHECK(z.is_zero());
  CHECK(proj_hom_space(z, t.rep).empty());
}

TEST_CASE("hom spaces out of projective terms") {
  Algebra A = Algebra::build(a21_spec());
  Representation R = regular_module(A, true);
  ProjTerm t = make_proj_term(A, {1, 1}, true, "A");

  // Hom(P_g, M) has dimension dim M_g, one basis map per target vector
  std::vector<Mat> hs = proj_hom_space(t, R);
  REQUIRE(hs.size() == R.dims[0] + R.dims[1]);
  for (const Mat& h : hs) validate_hom(ModuleHom{&t.rep, &R, h});
  CHECK(flat_rank(hs) == hs.size());

  Representation S2 = simple_module(A, 1, true);
  std::vector<Mat> hs2 = proj_hom_space(t, S2);
  REQUIRE(hs2.size() == 1);
  for (const Mat& h : hs2) validate_hom(ModuleHom{&t.rep, &S2, h});
}

TEST_CASE("projective covers agree with the module-layer covers") {
  Algebra A = Algebra::build(a21_spec());
  Representation P1 = projective_module(A, 0, true);
  Representation S1 = simple_module(A, 0, true);
  SubQuot rad = sub_representation(P1, radical_subspace(P1), "rad P1");
  Representation SS = direct_sum({&S1, &S1}, "S1+S1");

  for (const Representation* M : {&P1, &S1, &rad.rep, &SS}) {
    ProjCover pc = proj_cover(*M);
    Cover ref = projective_cover(*M);
    INFO(M->name);
    CHECK(pc.P.mults == ref.mults);
    CHECK(rank(pc.map) == M->total);
  }
  CHECK(proj_cover(SS).P.mults == std::vector<unsigned>{2, 0});
  CHECK(proj_cover(rad.rep).P.mults == std::vector<unsigned>{0, 1});
}

TEST_CASE("ext^1 dimensions between simples") {
  Algebra A = Algebra::build(a21_spec());
  CHECK(ext1_dim(A, 0, 0) == 0);
  CHECK(ext1_dim(A, 0, 1) == 1);
  CHECK(ext1_dim(A, 1, 0) == 1);
  CHECK(ext1_dim(A, 1, 1) == 0);

  Algebra K = Algebra::build(kx3_spec());
  CHECK(ext1_dim(K, 0, 0) == 1);
}

TEST_CASE("Serre-quotient approximations of the A21 simple") {
  Algebra A = Algebra::build(a21_spec());
  Representation S1 = simple_module(A, 0, true);
  Mat cover_map = proj_cover(S1).map;

  // empty J: nothing may survive in the kernel, M_J = M
  SerreApprox a0 = serre_approx(S1, {});
  CHECK(a0.kernel_dim == 2);
  CHECK(a0.reject_dim == 2);
  CHECK(is_isomorphic(a0.MJ, S1).status == IsoResult::Status::yes);
  CHECK(a0.psi * a0.phi == cover_map);

  // J = {vertex 2}: the kernel may keep its vertex-2 part, M_J = P1/soc
  SerreApprox a1 = serre_approx(S1, {1});
  CHECK(a1.reject_dim == 1);
  CHECK(a1.MJ.total == 2);
  CHECK(loewy_series(a1.MJ).one_line() == "1/2");
  CHECK(a1.psi * a1.phi == cover_map);

  // full J: nothing is rejected, M_J = P(M)
  SerreApprox a2 = serre_approx(S1, {0, 1});
  CHECK(a2.reject_dim == 0);
  Representation P1 = projective_module(A, 0, true);
  CHECK(is_isomorphic(a2.MJ, P1).status == IsoResult::Status::yes);
  CHECK(a2.psi * a2.phi == cover_map);
}

TEST_CASE("the A21 tilting complex at J = {vertex 1}") {
  Algebra A = Algebra::build(a21_spec());
  TiltingComplex T = combinatorial_tilting_complex(A, {0});
  REQUIRE(T.summands.size() == 2);

  const ProjComplex& t1 = T.summands[0];
  REQUIRE(t1.terms.size() == 2);
  CHECK(t1.lo == 0);
  CHECK(t1.terms[0].mults == std::vector<unsigned>{1, 0});
  CHECK(t1.terms[1].mults == std::vector<unsigned>{0, 1});
  REQUIRE(t1.diff.size() == 1);
  CHECK(rank(t1.diff[0]) == 2);
  t1.validate();
  // the differential lands exactly on the radical of P1
  Mat rad = radical_subspace(t1.terms[0].rep);
  CHECK(rank(rad) == 2);
  CHECK(rank(Mat::hstack(rad, t1.diff[0])) == 2);

  const ProjComplex& p2 = T.summands[1];
  CHECK(p2.lo == 1);
  REQUIRE(p2.terms.size() == 1);
  CHECK(p2.terms[0].mults == std::vector<unsigned>{0, 1});

  // degenerate ends of the lattice
  TiltingComplex Te = combinatorial_tilting_complex(A, {});
  for (const ProjComplex& c : Te.summands) {
    CHECK(c.lo == 1);
    CHECK(c.terms.size() == 1);
  }
  TiltingComplex Tf = combinatorial_tilting_complex(A, {0, 1});
  for (const ProjComplex& c : Tf.summands) {
    CHECK(c.lo == 0);
    CHECK(c.terms.size() == 1);
  }
}

TEST_CASE("homotopy hom dimensions for stalks and two-term complexes") {
  Algebra A = Algebra::build(a21_spec());
  ProjComplex p1_0 = stalk_complex(A, {1, 0}, 0, "P1");
  ProjComplex p1_1 = stalk_complex(A, {1, 0}, 1, "P1[1]");
  ProjComplex p2_1 = stalk_complex(A, {0, 1}, 1, "P2[1]");
  ProjComplex a_0 = stalk_complex(A, {1, 1}, 0, "A");

  // disjoint degrees give zero; aligning the shift recovers the module homs
  CHECK(homotopy_hom(p1_0, p1_1, 0) == 0);
  CHECK(homotopy_hom(p1_0, p1_1, -1) == 2);  // End(P1) = span{1, ab}
  CHECK(homotopy_hom(p1_0, p2_1, -1) == 1);  // Hom(P1, P2) = span{b}
  CHECK(homotopy_hom(a_0, a_0, 0) == 6);     // End(A) = A

  TiltingComplex T = combinatorial_tilting_complex(A, {0});
  const ProjComplex& t1 = T.summands[0];
  const ProjComplex& s2 = T.summands[1];
  CHECK(homotopy_hom(t1, t1, 0) == 2);
  for (int s : {-2, -1, 1, 2}) CHECK(homotopy_hom(t1, t1, s) == 0);
  CHECK(homotopy_hom(t1, s2, 0) == 1);
  CHECK(homotopy_hom(s2, t1, 0) == 1);
  CHECK(homotopy_hom(s2, s2, 0) == 2);
  // 2 + 1 + 1 + 2 = 6: the tilted endomorphism algebra has the same dimension

  Algebra K = Algebra::build(kx3_spec());
  ProjComplex ka = stalk_complex(K, {1}, 0, "A");
  CHECK(homotopy_hom(ka, ka, 0) == 3);
}

TEST_CASE("tilting verification over A21 and kx3") {
  Algebra A = Algebra::build(a21_spec());

  TiltingReport r = verify_tilting(A, {0});
  check_all(r.checks);
  CHECK(r.end_dim == 6);
  CHECK(r.indecomposables == 2);
  CHECK(r.perversity == "∅ ⊂_0 {1} ⊂_{-1} {1,2}");
  REQUIRE(r.shift_homs.size() == 4);
  for (auto [s, d] : r.shift_homs) {
    INFO("shift ", s);
    CHECK(d == 0);
  }

  TiltingReport r0 = verify_tilting(A, {});
  check_all(r0.checks);
  CHECK(r0.end_dim == 6);
  CHECK(r0.perversity == "∅ ⊂_0 ∅ ⊂_{-1} {1,2}");

  TiltingReport rI = verify_tilting(A, {0, 1});
  check_all(rI.checks);
  CHECK(rI.end_dim == 6);

  Algebra K = Algebra::build(kx3_spec());
  TiltingReport rk = verify_tilting(K, {0});
  check_all(rk.checks);
  CHECK(rk.end_dim == 3);
  CHECK(rk.indecomposables == 1);
  CHECK(rk.perversity == "∅ ⊂_0 {1} ⊂_{-1} {1}");
}
