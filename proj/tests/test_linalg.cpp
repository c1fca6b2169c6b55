#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qrep/matrix.hpp"

using namespace qrep;

namespace {

Mat random_mat(const Field& f, unsigned rows, unsigned cols, std::mt19937& rng) {
  Mat m(f, rows, cols);
  std::uniform_int_distribution<unsigned> d(0, f.p() - 1);
  for (unsigned i = 0; i < rows; ++i)
    for (unsigned j = 0; j < cols; ++j) m.at(i, j) = static_cast<fel>(d(rng));
  return m;
}

} // namespace

TEST_CASE("field arithmetic over GF(3)") {
  Field f(3);
  CHECK(f.add(2, 2) == 1);
  CHECK(f.sub(0, 1) == 2);
  CHECK(f.mul(2, 2) == 1);
  CHECK(f.neg(1) == 2);
  CHECK(f.inv(2) == 2);
  CHECK(f.reduce(-4) == 2);
  CHECK_THROWS(f.inv(0));
  CHECK_THROWS(Field(4));
  CHECK_THROWS(Field(1));
  Field f5(5);
  for (fel a = 1; a < 5; ++a) CHECK(f5.mul(a, f5.inv(a)) == 1);
}

TEST_CASE("rank and nullspace of [[1,2],[2,1]] over GF(3)") {
  // Frozen oracle: this 2x2 matrix has rank 1 and kernel spanned by (1,1),
  // because row2 = 2*row1 and col1 + col2 = (.., 0) mod 3.
  Field f(3);
  Mat m(f, 2, 2);
  m.at(0, 0) = 1; m.at(0, 1) = 2;
  m.at(1, 0) = 2; m.at(1, 1) = 1;
  CHECK(rank(m) == 1);
  Mat k = nullspace(m);
  REQUIRE(k.cols() == 1);
  REQUIRE(k.rows() == 2);
  CHECK(k.at(0, 0) == 1);
  CHECK(k.at(1, 0) == 1);
  // The kernel column really is killed by m.
  std::vector<fel> v = {k.at(0, 0), k.at(1, 0)};
  std::vector<fel> mv = m.apply(v);
  CHECK(mv[0] == 0);
  CHECK(mv[1] == 0);
}

TEST_CASE("rref is idempotent and deterministic") {
  std::mt19937 rng(7);
  Field f(3);
  for (int t = 0; t < 30; ++t) {
    Mat m = random_mat(f, 6, 9, rng);
    RrefResult r1 = rref(m);
    RrefResult r2 = rref(r1.reduced);
    CHECK(r1.reduced == r2.reduced);
    CHECK(r1.rank == r2.rank);
    CHECK(r1.pivots == r2.pivots);
  }
}

TEST_CASE("rank(m) == rank(transpose(m)) and rank-nullity") {
  std::mt19937 rng(11);
  for (unsigned p : {2u, 3u, 5u}) {
    Field f(p);
    for (int t = 0; t < 20; ++t) {
      Mat m = random_mat(f, 5, 8, rng);
      unsigned r = rank(m);
      CHECK(r == rank(m.transpose()));
      Mat k = nullspace(m);
      CHECK(r + k.cols() == m.cols());
      // Every kernel column is actually annihilated.
      for (unsigned c = 0; c < k.cols(); ++c) {
        std::vector<fel> v = k.get_col(c);
        for (fel x : m.apply(v)) CHECK(x == 0);
      }
      // Kernel columns are independent.
      CHECK(rank(k) == k.cols());
    }
  }
}

TEST_CASE("solve finds a solution exactly when rank([m|b]) == rank(m)") {
  std::mt19937 rng(23);
  Field f(3);
  std::uniform_int_distribution<unsigned> d(0, 2);
  for (int t = 0; t < 40; ++t) {
    Mat m = random_mat(f, 6, 5, rng);
    std::vector<fel> b(6);
    for (auto& x : b) x = static_cast<fel>(d(rng));
    Mat aug(f, 6, 6);
    for (unsigned i = 0; i < 6; ++i) {
      for (unsigned j = 0; j < 5; ++j) aug.at(i, j) = m.at(i, j);
      aug.at(i, 5) = b[i];
    }
    auto x = solve(m, b);
    bool consistent = rank(aug) == rank(m);
    CHECK(x.has_value() == consistent);
    if (x) {
      std::vector<fel> mx = m.apply(*x);
      CHECK(mx == b);
    }
  }
  // A right-hand side built from a known solution is always solvable.
  for (int t = 0; t < 20; ++t) {
    Mat m = random_mat(f, 7, 4, rng);
    std::vector<fel> x0(4);
    for (auto& x : x0) x = static_cast<fel>(d(rng));
    auto x = solve(m, m.apply(x0));
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == m.apply(x0));
  }
}

TEST_CASE("matrix product and apply agree; transpose is an involution") {
  std::mt19937 rng(5);
  Field f(3);
  for (int t = 0; t < 20; ++t) {
    Mat a = random_mat(f, 4, 6, rng);
    Mat b = random_mat(f, 6, 3, rng);
    Mat ab = a * b;
    for (unsigned c = 0; c < 3; ++c)
      CHECK(ab.get_col(c) == a.apply(b.get_col(c)));
    CHECK(a.transpose().transpose() == a);
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
  }
}

TEST_CASE("row space membership and intersection") {
  Field f(3);
  Mat a(f, 2, 3);
  a.set_row(0, {1, 0, 1});
  a.set_row(1, {0, 1, 1});
  Mat ab = row_basis(a);
  CHECK(in_row_space(ab, {1, 1, 2}));
  CHECK(in_row_space(ab, {2, 0, 2}));
  CHECK(!in_row_space(ab, {1, 0, 0}));
  CHECK(in_row_space(ab, {0, 0, 0}));

  Mat b(f, 2, 3);
  b.set_row(0, {1, 1, 2});
  b.set_row(1, {1, 0, 0});
  Mat inter = row_space_intersection(a, b);
  // a has rank 2, b has rank 2, their sum spans all of k^3, so the
  // intersection is 2+2-3 = 1 dimensional; (1,1,2) lies in both.
  REQUIRE(inter.rows() == 1);
  CHECK(in_row_space(row_basis(a), inter.get_row(0)));
  CHECK(in_row_space(row_basis(b), inter.get_row(0)));

  // Random checks: dim(U cap W) = dim U + dim W - dim(U + W).
  std::mt19937 rng(31);
  for (int t = 0; t < 20; ++t) {
    Mat u = random_mat(f, 3, 6, rng);
    Mat w = random_mat(f, 4, 6, rng);
    Mat cap = row_space_intersection(u, w);
    unsigned sum_rank = rank(Mat::vstack(u, w));
    CHECK(cap.rows() == rank(u) + rank(w) - sum_rank);
    for (unsigned i = 0; i < cap.rows(); ++i) {
      CHECK(in_row_space(row_basis(u), cap.get_row(i)));
      CHECK(in_row_space(row_basis(w), cap.get_row(i)));
    }
  }
}

TEST_CASE("stacking and column selection") {
  Field f(3);
  Mat a(f, 2, 2);
  a.set_row(0, {1, 2});
  a.set_row(1, {0, 1});
  Mat b(f, 1, 2);
  b.set_row(0, {2, 2});
  Mat v = Mat::vstack(a, b);
  REQUIRE(v.rows() == 3);
  CHECK(v.get_row(2) == std::vector<fel>{2, 2});
  Mat h = Mat::hstack(a, a);
  REQUIRE(h.cols() == 4);
  CHECK(h.at(0, 2) == 1);
  Mat c = h.columns({3, 0});
  CHECK(c.get_col(0) == std::vector<fel>{2, 1});
  CHECK(c.get_col(1) == std::vector<fel>{1, 0});
}
