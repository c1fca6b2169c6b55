#include "qrep/matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace qrep {

Mat Mat::identity(const Field& f, unsigned n) {
  Mat m(f, n, n);
  for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Mat::is_zero() const {
  for (fel v : a_)
    if (v) return false;
  return true;
}

Mat Mat::operator*(const Mat& o) const {
  const Field& f = field();
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Mat r(f, rows_, o.cols_);
  for (unsigned i = 0; i < rows_; ++i) {
    for (unsigned k = 0; k < cols_; ++k) {
      fel aik = at(i, k);
      if (!aik) continue;
      const fel* orow = o.row(k);
      fel* rrow = r.row(i);
      for (unsigned j = 0; j < o.cols_; ++j)
        if (orow[j]) rrow[j] = f.add(rrow[j], f.mul(aik, orow[j]));
    }
  }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  const Field& f = field();
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Mat r(f, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f.add(a_[i], o.a_[i]);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  const Field& f = field();
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix diff shape mismatch");
  Mat r(f, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f.sub(a_[i], o.a_[i]);
  return r;
}

Mat Mat::scaled(fel c) const {
  const Field& f = field();
  Mat r(f, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f.mul(a_[i], c);
  return r;
}

Mat Mat::transpose() const {
  Mat r(field(), cols_, rows_);
  for (unsigned i = 0; i < rows_; ++i)
    for (unsigned j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<fel> Mat::apply(const std::vector<fel>& vec) const {
  const Field& f = field();
  if (vec.size() != cols_) throw std::invalid_argument("apply: vector length mismatch");
  std::vector<fel> out(rows_, 0);
  for (unsigned i = 0; i < rows_; ++i) {
    const fel* r = row(i);
    unsigned acc = 0;
    for (unsigned j = 0; j < cols_; ++j)
      if (r[j] && vec[j]) acc += unsigned(r[j]) * vec[j];
    out[i] = f.reduce(static_cast<long long>(acc));
  }
  return out;
}

Mat Mat::vstack(const Mat& top, const Mat& bottom) {
  if (top.rows_ == 0) return bottom;
  if (bottom.rows_ == 0) return top;
  if (top.cols_ != bottom.cols_) throw std::invalid_argument("vstack: column mismatch");
  Mat r(top.field(), top.rows_ + bottom.rows_, top.cols_);
  for (unsigned i = 0; i < top.rows_; ++i) r.set_row(i, top.get_row(i));
  for (unsigned i = 0; i < bottom.rows_; ++i) r.set_row(top.rows_ + i, bottom.get_row(i));
  return r;
}

Mat Mat::hstack(const Mat& left, const Mat& right) {
  if (left.rows_ != right.rows_) throw std::invalid_argument("hstack: row mismatch");
  Mat r(left.field(), left.rows_, left.cols_ + right.cols_);
  for (unsigned i = 0; i < left.rows_; ++i) {
    for (unsigned j = 0; j < left.cols_; ++j) r.at(i, j) = left.at(i, j);
    for (unsigned j = 0; j < right.cols_; ++j) r.at(i, left.cols_ + j) = right.at(i, j);
  }
  return r;
}

Mat Mat::columns(const std::vector<unsigned>& idx) const {
  Mat r(field(), rows_, static_cast<unsigned>(idx.size()));
  for (unsigned i = 0; i < rows_; ++i)
    for (unsigned j = 0; j < idx.size(); ++j) r.at(i, j) = at(i, idx[j]);
  return r;
}

void Mat::set_row(unsigned r, const std::vector<fel>& v) {
  assert(v.size() == cols_);
  for (unsigned j = 0; j < cols_; ++j) at(r, j) = v[j];
}

std::vector<fel> Mat::get_row(unsigned r) const {
  return std::vector<fel>(row(r), row(r) + cols_);
}

std::vector<fel> Mat::get_col(unsigned c) const {
  std::vector<fel> v(rows_);
  for (unsigned i = 0; i < rows_; ++i) v[i] = at(i, c);
  return v;
}

void Mat::set_col(unsigned c, const std::vector<fel>& v) {
  assert(v.size() == rows_);
  for (unsigned i = 0; i < rows_; ++i) at(i, c) = v[i];
}

RrefResult rref(const Mat& m) {
  const Field& f = m.field();
  RrefResult res;
  res.reduced = m;
  Mat& a = res.reduced;
  unsigned r = 0;
  for (unsigned c = 0; c < m.cols() && r < m.rows(); ++c) {
    // Leftmost-nonzero pivot rule: first row at or below r with a nonzero
    // entry in column c.
    unsigned pr = r;
    while (pr < m.rows() && a.at(pr, c) == 0) ++pr;
    if (pr == m.rows()) continue;
    if (pr != r)
      for (unsigned j = 0; j < m.cols(); ++j) std::swap(a.at(pr, j), a.at(r, j));
    fel piv = a.at(r, c);
    if (piv != 1) {
      fel iv = f.inv(piv);
      fel* rr = a.row(r);
      for (unsigned j = c; j < m.cols(); ++j) rr[j] = f.mul(rr[j], iv);
    }
    const fel* rr = a.row(r);
    for (unsigned i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      fel v = a.at(i, c);
      if (!v) continue;
      fel* ir = a.row(i);
      for (unsigned j = c; j < m.cols(); ++j)
        if (rr[j]) ir[j] = f.sub(ir[j], f.mul(v, rr[j]));
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

unsigned rank(const Mat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Row-reduce the smaller orientation.
  if (m.cols() > m.rows() * 2) return rref(m).rank; // wide: same cost either way
  return rref(m).rank;
}

Mat nullspace(const Mat& m) {
  const Field& f = m.field();
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (unsigned c : r.pivots) is_pivot[c] = true;
  std::vector<unsigned> free_cols;
  for (unsigned c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat ker(f, m.cols(), static_cast<unsigned>(free_cols.size()));
  for (unsigned k = 0; k < free_cols.size(); ++k) {
    unsigned fc = free_cols[k];
    ker.at(fc, k) = 1;
    for (unsigned pi = 0; pi < r.pivots.size(); ++pi)
      ker.at(r.pivots[pi], k) = f.neg(r.reduced.at(pi, fc));
  }
  return ker;
}

std::optional<std::vector<fel>> solve(const Mat& m, const std::vector<fel>& b) {
  const Field& f = m.field();
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  Mat aug(f, m.rows(), m.cols() + 1);
  for (unsigned i = 0; i < m.rows(); ++i) {
    for (unsigned j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  RrefResult r = rref(aug);
  // Inconsistent iff a pivot lands in the augmented column.
  for (unsigned c : r.pivots)
    if (c == m.cols()) return std::nullopt;
  std::vector<fel> x(m.cols(), 0);
  for (unsigned pi = 0; pi < r.pivots.size(); ++pi)
    x[r.pivots[pi]] = r.reduced.at(pi, m.cols());
  return x;
}

std::optional<Mat> solve_many(const Mat& m, const Mat& b) {
  const Field& f = m.field();
  if (b.rows() != m.rows()) throw std::invalid_argument("solve_many: rhs row count mismatch");
  Mat aug(f, m.rows(), m.cols() + b.cols());
  for (unsigned i = 0; i < m.rows(); ++i) {
    for (unsigned j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    for (unsigned j = 0; j < b.cols(); ++j) aug.at(i, m.cols() + j) = b.at(i, j);
  }
  RrefResult r = rref(aug);
  for (unsigned c : r.pivots)
    if (c >= m.cols()) return std::nullopt;
  Mat x(f, m.cols(), b.cols());
  for (unsigned pi = 0; pi < r.pivots.size(); ++pi)
    for (unsigned j = 0; j < b.cols(); ++j)
      x.at(r.pivots[pi], j) = r.reduced.at(pi, m.cols() + j);
  return x;
}

Mat column_basis(const Mat& cols) {
  return row_basis(cols.transpose()).transpose();
}

Mat row_basis(const Mat& m) {
  RrefResult r = rref(m);
  Mat b(m.field(), r.rank, m.cols());
  for (unsigned i = 0; i < r.rank; ++i) b.set_row(i, r.reduced.get_row(i));
  return b;
}

bool in_row_space(const Mat& rref_basis, const std::vector<fel>& v) {
  const Field& f = rref_basis.field();
  std::vector<fel> w = v;
  // Reduce against each rref row: pivot columns are strictly increasing and
  // each pivot column is zero in the other rows, so one pass suffices.
  for (unsigned i = 0; i < rref_basis.rows(); ++i) {
    unsigned pc = 0;
    while (pc < rref_basis.cols() && rref_basis.at(i, pc) == 0) ++pc;
    if (pc == rref_basis.cols()) continue;
    fel coef = w[pc]; // pivot entry is 1
    if (!coef) continue;
    for (unsigned j = pc; j < rref_basis.cols(); ++j)
      if (rref_basis.at(i, j)) w[j] = f.sub(w[j], f.mul(coef, rref_basis.at(i, j)));
  }
  for (fel x : w)
    if (x) return false;
  return true;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  unsigned n = m.rows();
  if (n == 0) return m;
  Mat aug = Mat::hstack(m, Mat::identity(m.field(), n));
  RrefResult r = rref(aug);
  if (r.rank != n || r.pivots.back() != n - 1) return std::nullopt;
  Mat inv(m.field(), n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) inv.at(i, j) = r.reduced.at(i, n + j);
  return inv;
}

Mat row_space_intersection(const Mat& a, const Mat& b) {
  // Zassenhaus: row-reduce [A|A; B|0]; rows with zero left half carry the
  // intersection in the right half.
  const Field& f = a.field();
  unsigned n = a.cols();
  if (b.cols() != n) throw std::invalid_argument("row space intersection: width mismatch");
  Mat big(f, a.rows() + b.rows(), 2 * n);
  for (unsigned i = 0; i < a.rows(); ++i)
    for (unsigned j = 0; j < n; ++j) {
      big.at(i, j) = a.at(i, j);
      big.at(i, n + j) = a.at(i, j);
    }
  for (unsigned i = 0; i < b.rows(); ++i)
    for (unsigned j = 0; j < n; ++j) big.at(a.rows() + i, j) = b.at(i, j);
  RrefResult r = rref(big);
  std::vector<std::vector<fel>> rows;
  for (unsigned i = 0; i < r.rank; ++i) {
    bool left_zero = true;
    for (unsigned j = 0; j < n && left_zero; ++j)
      if (r.reduced.at(i, j)) left_zero = false;
    if (left_zero) {
      std::vector<fel> v(n);
      for (unsigned j = 0; j < n; ++j) v[j] = r.reduced.at(i, n + j);
      rows.push_back(std::move(v));
    }
  }
  Mat out(f, static_cast<unsigned>(rows.size()), n);
  for (unsigned i = 0; i < rows.size(); ++i) out.set_row(i, rows[i]);
  return row_basis(out);
}

} // namespace qrep
