// Dense matrices over GF(p) with exact rank / nullspace / solve.
//
// Conventions used throughout the project:
//   * A Mat of shape (rows x cols) represents a linear map k^cols -> k^rows
//     acting on column vectors: y = M * x.
//   * rref() row-reduces with the deterministic leftmost-nonzero pivot rule,
//     so bases derived from pivots are reproducible across runs.
//   * nullspace() returns a (cols x k) matrix whose columns span ker(M).
//   * Row-space helpers (row_basis, in_row_space) treat rows as vectors; they
//     are the workhorses for span/submodule computations.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qrep/gf.hpp"

namespace qrep {

class Mat {
public:
  Mat() : rows_(0), cols_(0), f_(std::nullopt) {}
  Mat(const Field& f, unsigned rows, unsigned cols)
      : rows_(rows), cols_(cols), f_(f), a_(std::size_t(rows) * cols, 0) {}

  static Mat identity(const Field& f, unsigned n);

  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }
  const Field& field() const { return *f_; }

  fel at(unsigned r, unsigned c) const { return a_[std::size_t(r) * cols_ + c]; }
  fel& at(unsigned r, unsigned c) { return a_[std::size_t(r) * cols_ + c]; }
  const fel* row(unsigned r) const { return a_.data() + std::size_t(r) * cols_; }
  fel* row(unsigned r) { return a_.data() + std::size_t(r) * cols_; }

  bool is_zero() const;
  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(fel c) const;
  Mat transpose() const;

  // Apply to a column vector (vec.size() == cols).
  std::vector<fel> apply(const std::vector<fel>& vec) const;

  // Stacking helpers.
  static Mat vstack(const Mat& top, const Mat& bottom);
  static Mat hstack(const Mat& left, const Mat& right);
  Mat columns(const std::vector<unsigned>& idx) const;

  void set_row(unsigned r, const std::vector<fel>& v);
  std::vector<fel> get_row(unsigned r) const;
  std::vector<fel> get_col(unsigned c) const;
  void set_col(unsigned c, const std::vector<fel>& v);

private:
  unsigned rows_, cols_;
  std::optional<Field> f_;
  std::vector<fel> a_;
};

struct RrefResult {
  Mat reduced;                  // the reduced row echelon form
  unsigned rank = 0;            // number of pivots
  std::vector<unsigned> pivots; // pivot column per pivot row, ascending
};

RrefResult rref(const Mat& m);
unsigned rank(const Mat& m);

// Columns span ker(x -> M x); the count is cols - rank.
Mat nullspace(const Mat& m);

// One solution x of M x = b, if any.
std::optional<std::vector<fel>> solve(const Mat& m, const std::vector<fel>& b);

// One solution X of M X = B for every column of B at once, if all exist.
std::optional<Mat> solve_many(const Mat& m, const Mat& b);

// Basis of the column space, as columns (canonical via rref of the transpose).
Mat column_basis(const Mat& cols);

// Row-space utilities.
// Basis of the row space as the nonzero rows of the rref (canonical form).
Mat row_basis(const Mat& m);
// Does v lie in the row space of `basis` (basis assumed in rref form)?
bool in_row_space(const Mat& rref_basis, const std::vector<fel>& v);

// Intersection of two row spaces (each given by rows), as a canonical row basis.
Mat row_space_intersection(const Mat& a, const Mat& b);

// Inverse of a square matrix, if it exists.
std::optional<Mat> inverse(const Mat& m);

} // namespace qrep
