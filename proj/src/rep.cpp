#include "qrep/rep.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>

namespace qrep {

namespace {

// Basis of the column space, as columns (canonical via rref of the transpose).
Mat col_basis(const Mat& cols) { return row_basis(cols.transpose()).transpose(); }

Mat sub_block(const Mat& m, unsigned r0, unsigned nr, unsigned c0, unsigned nc) {
  Mat out(m.field(), nr, nc);
  for (unsigned r = 0; r < nr; ++r)
    for (unsigned c = 0; c < nc; ++c) out.at(r, c) = m.at(r0 + r, c0 + c);
  return out;
}

Mat gather(const Mat& m, const std::vector<unsigned>& rows, const std::vector<unsigned>& cols) {
  Mat out(m.field(), static_cast<unsigned>(rows.size()), static_cast<unsigned>(cols.size()));
  for (unsigned r = 0; r < rows.size(); ++r)
    for (unsigned c = 0; c < cols.size(); ++c) out.at(r, c) = m.at(rows[r], cols[c]);
  return out;
}

// Domain / codomain vertex of an arrow's action matrix.
unsigned dom_vertex(const Quiver& q, unsigned a, bool left) {
  return left ? q.arrows[a].src : q.arrows[a].tgt;
}
unsigned cod_vertex(const Quiver& q, unsigned a, bool left) {
  return left ? q.arrows[a].tgt : q.arrows[a].src;
}

// Product of arrow actions along a traversal-order path, as a small matrix
// comp_{dom} -> comp_{cod} (empty path not allowed here).
Mat path_action(const Representation& R, const std::vector<unsigned>& arrows) {
  if (R.left) {
    Mat m = R.act[arrows[0]];
    for (std::size_t i = 1; i < arrows.size(); ++i) m = R.act[arrows[i]] * m;
    return m;
  }
  Mat m = R.act[arrows.back()];
  for (std::size_t i = arrows.size() - 1; i-- > 0;) m = R.act[arrows[i]] * m;
  return m;
}

// Incremental row-span accumulator over homogeneous vectors.
struct SpanAcc {
  const Field* f;
  std::vector<std::vector<fel>> rows; // reduced, normalized
  std::vector<unsigned> pivots;

  explicit SpanAcc(const Field& field) : f(&field) {}

  // Reduces v against the stored rows; returns the reduced vector (empty
  // result vector means v was in the span already).
  bool add(std::vector<fel> v) {
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (v[pivots[i]] != 0) {
        fel c = v[pivots[i]];
        for (std::size_t j = 0; j < v.size(); ++j)
          v[j] = f->sub(v[j], f->mul(c, rows[i][j]));
      }
    unsigned p = 0;
    while (p < v.size() && v[p] == 0) ++p;
    if (p == v.size()) return false;
    fel inv = f->inv(v[p]);
    for (auto& x : v) x = f->mul(x, inv);
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }
};

} // namespace

// --- Representation -----------------------------------------------------------

void Representation::finalize() {
  if (!A) throw spec_error("representation has no algebra");
  const Quiver& q = A->quiver();
  if (dims.size() != q.vertex_count())
    throw spec_error("representation of " + A->name() + " needs one dimension per vertex");
  if (act.size() != q.arrows.size())
    throw spec_error("representation of " + A->name() + " needs one action per arrow");
  const Field& f = A->field();
  for (unsigned a = 0; a < act.size(); ++a) {
    unsigned r = dims[cod_vertex(q, a, left)], c = dims[dom_vertex(q, a, left)];
    if (act[a].rows() == 0 && act[a].cols() == 0 && (r || c)) act[a] = Mat(f, r, c);
    if (act[a].rows() != r || act[a].cols() != c)
      throw spec_error("action of arrow '" + q.arrows[a].name + "' has shape " +
                       std::to_string(act[a].rows()) + "x" + std::to_string(act[a].cols()) +
                       ", expected " + std::to_string(r) + "x" + std::to_string(c));
    if (act[a].rows() == 0 || act[a].cols() == 0) act[a] = Mat(f, r, c);
  }
  offs.assign(dims.size(), 0);
  total = 0;
  for (unsigned v = 0; v < dims.size(); ++v) {
    offs[v] = total;
    total += dims[v];
  }
  // The defining ideal must act by zero: the listed relations, the vanishing
  // distinct-endpoint paths, and every path at the nilpotency bound.
  auto path_is_zero = [&](const std::vector<unsigned>& arrows) {
    return path_action(*this, arrows).is_zero();
  };
  for (const ElementExpr& rel : A->spec().relations)
    if (!action_of_expr(rel).is_zero())
      throw spec_error("module action violates the relation " +
                       element_expr_to_string(q, rel));
  unsigned N = A->spec().nilpotency;
  unsigned zd = A->spec().zero_distinct_length;
  if (zd > 0)
    for (unsigned len = zd; len < N; ++len)
      for (const auto& p : A->paths_of_length(len)) {
        unsigned s = q.arrows[p.front()].src, e = q.arrows[p.back()].tgt;
        if (s != e && !path_is_zero(p))
          throw spec_error("module action violates distinct-endpoint vanishing at length " +
                           std::to_string(len));
      }
  for (const auto& p : A->paths_of_length(N))
    if (!path_is_zero(p))
      throw spec_error("module action violates the nilpotency bound " + std::to_string(N));
}

Mat Representation::idem_projection(unsigned v) const {
  Mat m(A->field(), total, total);
  for (unsigned i = 0; i < dims[v]; ++i) m.at(offs[v] + i, offs[v] + i) = 1;
  return m;
}

Mat Representation::action_of_basis(unsigned bi) const {
  const auto& bp = A->basis_path(bi);
  if (bp.arrows.empty()) return idem_projection(bp.start);
  Mat small = path_action(*this, bp.arrows);
  unsigned rv = left ? bp.end : bp.start;
  unsigned cv = left ? bp.start : bp.end;
  Mat out(A->field(), total, total);
  for (unsigned r = 0; r < small.rows(); ++r)
    for (unsigned c = 0; c < small.cols(); ++c) out.at(offs[rv] + r, offs[cv] + c) = small.at(r, c);
  return out;
}

Mat Representation::action_of(const El& x) const {
  const Field& f = A->field();
  Mat out(f, total, total);
  for (unsigned b = 0; b < A->dim(); ++b)
    if (x.c[b] != 0) out = out + action_of_basis(b).scaled(x.c[b]);
  return out;
}

Mat Representation::action_of_expr(const ElementExpr& e) const {
  const Field& f = A->field();
  Mat out(f, total, total);
  for (const PathTerm& t : e) {
    fel c = f.reduce(t.coeff);
    if (c == 0) continue;
    Mat m(f, total, total);
    if (t.identity) {
      m = Mat::identity(f, total);
    } else if (t.vertex >= 0) {
      m = idem_projection(static_cast<unsigned>(t.vertex));
    } else {
      const Quiver& q = A->quiver();
      Mat small = path_action(*this, t.arrows);
      unsigned s = q.arrows[t.arrows.front()].src, e2 = q.arrows[t.arrows.back()].tgt;
      unsigned rv = left ? e2 : s, cv = left ? s : e2;
      for (unsigned r = 0; r < small.rows(); ++r)
        for (unsigned cc = 0; cc < small.cols(); ++cc)
          m.at(offs[rv] + r, offs[cv] + cc) = small.at(r, cc);
    }
    out = out + m.scaled(c);
  }
  return out;
}

// --- ModuleHom ------------------------------------------------------------------

unsigned ModuleHom::rank() const { return qrep::rank(m); }

void validate_hom(const ModuleHom& h) {
  if (!h.src || !h.dst) throw spec_error("hom has missing endpoints");
  const Representation &X = *h.src, &Y = *h.dst;
  if (X.A != Y.A && X.A->name() != Y.A->name())
    throw spec_error("hom endpoints live over different algebras");
  if (X.left != Y.left) throw spec_error("hom endpoints have different sides");
  if (h.m.rows() != Y.total || h.m.cols() != X.total)
    throw spec_error("hom matrix has the wrong shape");
  for (unsigned v = 0; v < X.vertex_count(); ++v)
    if (!(h.m * X.idem_projection(v) == Y.idem_projection(v) * h.m))
      throw spec_error("hom does not respect the vertex decomposition");
  for (unsigned a = 0; a < X.A->quiver().arrows.size(); ++a) {
    El e = X.A->arrow_el(a);
    if (!(h.m * X.action_of(e) == Y.action_of(e) * h.m))
      throw spec_error("hom does not intertwine arrow '" + X.A->quiver().arrows[a].name + "'");
  }
}

ModuleHom compose(const ModuleHom& g, const ModuleHom& f) {
  if (g.src != f.dst) throw spec_error("hom composition endpoints do not match");
  return ModuleHom{f.src, g.dst, g.m * f.m};
}

// --- construction ---------------------------------------------------------------

Representation simple_module(const Algebra& A, unsigned v, bool left) {
  Representation R;
  R.A = &A;
  R.left = left;
  R.name = "S" + A.quiver().vertices[v];
  R.dims.assign(A.vertex_count(), 0);
  R.dims[v] = 1;
  R.act.assign(A.quiver().arrows.size(), Mat());
  R.finalize();
  return R;
}

namespace {

// Ordered algebra-basis indices for the projective at v (or the whole regular
// module when v is npos): grouped by grading vertex in vertex order.
std::vector<unsigned> path_module_basis(const Algebra& A, unsigned v, bool left) {
  std::vector<unsigned> out;
  for (unsigned w = 0; w < A.vertex_count(); ++w) {
    const auto& grp = left ? A.basis_with_end(w) : A.basis_with_start(w);
    for (unsigned b : grp) {
      unsigned home = left ? A.basis_path(b).start : A.basis_path(b).end;
      if (v == unsigned(-1) || home == v) out.push_back(b);
    }
  }
  return out;
}

Representation make_path_module(const Algebra& A, unsigned v, bool left, std::string name) {
  Representation R;
  R.A = &A;
  R.left = left;
  R.name = std::move(name);
  R.dims.assign(A.vertex_count(), 0);
  std::vector<unsigned> basis = path_module_basis(A, v, left);
  std::vector<int> pos(A.dim(), -1);
  {
    std::vector<unsigned> ctr(A.vertex_count(), 0);
    for (unsigned b : basis) {
      unsigned w = left ? A.basis_path(b).end : A.basis_path(b).start;
      pos[b] = static_cast<int>(ctr[w]++);
    }
    R.dims = ctr;
  }
  const Quiver& q = A.quiver();
  R.act.assign(q.arrows.size(), Mat());
  for (unsigned a = 0; a < q.arrows.size(); ++a) {
    unsigned D = dom_vertex(q, a, left), C = cod_vertex(q, a, left);
    Mat m(A.field(), R.dims[C], R.dims[D]);
    El ae = A.arrow_el(a);
    for (unsigned b : basis) {
      unsigned w = left ? A.basis_path(b).end : A.basis_path(b).start;
      if (w != D) continue;
      El img = left ? A.mul(ae, A.basis_el(b)) : A.mul(A.basis_el(b), ae);
      for (unsigned k = 0; k < A.dim(); ++k)
        if (img.c[k] != 0) m.at(static_cast<unsigned>(pos[k]), static_cast<unsigned>(pos[b])) =
            img.c[k];
    }
    R.act[a] = std::move(m);
  }
  R.finalize();
  return R;
}

} // namespace

Representation projective_module(const Algebra& A, unsigned v, bool left) {
  return make_path_module(A, v, left,
                          std::string("P") + A.quiver().vertices[v] + (left ? "" : "_r"));
}

Representation regular_module(const Algebra& A, bool left) {
  return make_path_module(A, unsigned(-1), left, A.name() + (left ? "" : "_r"));
}

Representation direct_sum(const std::vector<const Representation*>& parts,
                          const std::string& name) {
  if (parts.empty()) throw spec_error("direct sum needs at least one part");
  const Algebra& A = *parts[0]->A;
  bool left = parts[0]->left;
  for (const Representation* p : parts)
    if (p->A != parts[0]->A || p->left != left)
      throw spec_error("direct sum parts must share algebra and side");
  Representation R;
  R.A = &A;
  R.left = left;
  R.name = name;
  unsigned nv = A.vertex_count();
  R.dims.assign(nv, 0);
  // column offset of part i inside the block of vertex v
  std::vector<std::vector<unsigned>> poff(parts.size(), std::vector<unsigned>(nv, 0));
  for (unsigned v = 0; v < nv; ++v)
    for (unsigned i = 0; i < parts.size(); ++i) {
      poff[i][v] = R.dims[v];
      R.dims[v] += parts[i]->dims[v];
    }
  const Quiver& q = A.quiver();
  R.act.assign(q.arrows.size(), Mat());
  for (unsigned a = 0; a < q.arrows.size(); ++a) {
    unsigned D = dom_vertex(q, a, left), C = cod_vertex(q, a, left);
    Mat m(A.field(), R.dims[C], R.dims[D]);
    for (unsigned i = 0; i < parts.size(); ++i) {
      const Mat& s = parts[i]->act[a];
      for (unsigned r = 0; r < s.rows(); ++r)
        for (unsigned c = 0; c < s.cols(); ++c)
          m.at(poff[i][C] + r, poff[i][D] + c) = s.at(r, c);
    }
    R.act[a] = std::move(m);
  }
  R.finalize();
  return R;
}

// --- subspaces -------------------------------------------------------------------

Mat radical_subspace(const Representation& R) {
  const Quiver& q = R.A->quiver();
  const Field& f = R.A->field();
  std::vector<std::vector<fel>> cols;
  for (unsigned a = 0; a < q.arrows.size(); ++a) {
    unsigned D = dom_vertex(q, a, R.left), C = cod_vertex(q, a, R.left);
    for (unsigned j = 0; j < R.dims[D]; ++j) {
      std::vector<fel> col(R.total, 0);
      for (unsigned i = 0; i < R.dims[C]; ++i) col[R.offs[C] + i] = R.act[a].at(i, j);
      cols.push_back(std::move(col));
    }
  }
  Mat m(f, R.total, static_cast<unsigned>(cols.size()));
  for (unsigned c = 0; c < cols.size(); ++c) m.set_col(c, cols[c]);
  return col_basis(m);
}

Mat socle_subspace(const Representation& R) {
  const Quiver& q = R.A->quiver();
  const Field& f = R.A->field();
  unsigned nrows = 0;
  for (unsigned a = 0; a < q.arrows.size(); ++a) nrows += R.act[a].rows();
  Mat stacked(f, nrows, R.total);
  unsigned r0 = 0;
  for (unsigned a = 0; a < q.arrows.size(); ++a) {
    unsigned D = dom_vertex(q, a, R.left);
    for (unsigned r = 0; r < R.act[a].rows(); ++r)
      for (unsigned c = 0; c < R.act[a].cols(); ++c)
        stacked.at(r0 + r, R.offs[D] + c) = R.act[a].at(r, c);
    r0 += R.act[a].rows();
  }
  return nullspace(stacked);
}

Mat span_submodule(const Representation& R, const Mat& cols) {
  const Field& f = R.A->field();
  const Quiver& q = R.A->quiver();
  SpanAcc acc(f);
  std::deque<std::pair<std::vector<fel>, unsigned>> work; // homogeneous vector + its vertex
  auto push_pieces = [&](const std::vector<fel>& v) {
    for (unsigned w = 0; w < R.vertex_count(); ++w) {
      std::vector<fel> piece(R.total, 0);
      bool nz = false;
      for (unsigned i = 0; i < R.dims[w]; ++i) {
        piece[R.offs[w] + i] = v[R.offs[w] + i];
        nz |= piece[R.offs[w] + i] != 0;
      }
      if (nz && acc.add(piece)) work.emplace_back(std::move(piece), w);
    }
  };
  for (unsigned c = 0; c < cols.cols(); ++c) push_pieces(cols.get_col(c));
  while (!work.empty()) {
    auto [vec, w] = std::move(work.front());
    work.pop_front();
    for (unsigned a = 0; a < q.arrows.size(); ++a) {
      if (dom_vertex(q, a, R.left) != w) continue;
      unsigned C = cod_vertex(q, a, R.left);
      std::vector<fel> local(R.dims[w]);
      for (unsigned i = 0; i < R.dims[w]; ++i) local[i] = vec[R.offs[w] + i];
      std::vector<fel> img = R.act[a].apply(local);
      std::vector<fel> full(R.total, 0);
      bool nz = false;
      for (unsigned i = 0; i < R.dims[C]; ++i) {
        full[R.offs[C] + i] = img[i];
        nz |= img[i] != 0;
      }
      if (nz && acc.add(full)) work.emplace_back(std::move(full), C);
    }
  }
  Mat out(f, R.total, static_cast<unsigned>(acc.rows.size()));
  for (unsigned c = 0; c < acc.rows.size(); ++c) out.set_col(c, acc.rows[c]);
  return out;
}

namespace {

// Per-vertex local column bases of a homogeneous subspace; throws if the
// span is not homogeneous.
std::vector<Mat> split_blocks(const Representation& R, const Mat& cols) {
  const Field& f = R.A->field();
  std::vector<Mat> local;
  unsigned tot = 0;
  for (unsigned v = 0; v < R.vertex_count(); ++v) {
    Mat piece(f, R.dims[v], cols.cols());
    for (unsigned c = 0; c < cols.cols(); ++c)
      for (unsigned i = 0; i < R.dims[v]; ++i) piece.at(i, c) = cols.at(R.offs[v] + i, c);
    Mat b = col_basis(piece);
    tot += b.cols();
    local.push_back(std::move(b));
  }
  if (tot != rank(cols))
    throw spec_error("subspace is not vertex-homogeneous; close it with span_submodule first");
  return local;
}

} // namespace

SubQuot sub_representation(const Representation& R, const Mat& cols, const std::string& name) {
  const Field& f = R.A->field();
  const Quiver& q = R.A->quiver();
  std::vector<Mat> L = split_blocks(R, cols);
  SubQuot out;
  Representation& S = out.rep;
  S.A = R.A;
  S.left = R.left;
  S.name = name;
  S.dims.resize(R.vertex_count());
  for (unsigned v = 0; v < R.vertex_count(); ++v) S.dims[v] = L[v].cols();
  S.act.assign(q.arrows.size(), Mat());
  for (unsigned a = 0; a < q.arrows.size(); ++a) {
    unsigned D = dom_vertex(q, a, R.left), C = cod_vertex(q, a, R.left);
    Mat m(f, S.dims[C], S.dims[D]);
    for (unsigned j = 0; j < S.dims[D]; ++j) {
      std::vector<fel> w = R.act[a].apply(L[D].get_col(j));
      auto x = solve(L[C], w);
      if (!x)
        throw spec_error("subspace is not invariant under arrow '" + q.arrows[a].name + "'");
      m.set_col(j, *x);
    }
    S.act[a] = std::move(m);
  }
  S.finalize();
  out.map = Mat(f, R.total, S.total);
  for (unsigned v = 0; v < R.vertex_count(); ++v)
    for (unsigned i = 0; i < R.dims[v]; ++i)
      for (unsigned j = 0; j < S.dims[v]; ++j)
        out.map.at(R.offs[v] + i, S.offs[v] + j) = L[v].at(i, j);
  return out;
}

SubQuot quotient_representation(const Representation& R, const Mat& cols,
                                const std::string& name) {
  const Field& f = R.A->field();
  const Quiver& q = R.A->quiver();
  std::vector<Mat> L = split_blocks(R, cols); // local sub bases, columns
  // Per vertex: projection Q_v ((d-k) x d) and lift Lift_v (d x (d-k)).
  std::vector<Mat> proj(R.vertex_count()), lift(R.vertex_count());
  SubQuot out;
  Representation& Qr = out.rep;
  Qr.A = R.A;
  Qr.left = R.left;
  Qr.name = name;
  Qr.dims.resize(R.vertex_count());
  for (unsigned v = 0; v < R.vertex_count(); ++v) {
    unsigned d = R.dims[v];
    RrefResult rr = rref(L[v].transpose()); // rows span the sub, rref form
    unsigned k = rr.rank;
    std::vector<bool> is_pivot(d, false);
    for (unsigned i = 0; i < k; ++i) is_pivot[rr.pivots[i]] = true;
    std::vector<unsigned> nonpiv;
    for (unsigned c = 0; c < d; ++c)
      if (!is_pivot[c]) nonpiv.push_back(c);
    Mat P(f, static_cast<unsigned>(nonpiv.size()), d), Li(f, d, static_cast<unsigned>(nonpiv.size()));
    for (unsigned j = 0; j < nonpiv.size(); ++j) {
      P.at(j, nonpiv[j]) = 1;
      Li.at(nonpiv[j], j) = 1;
      for (unsigned i = 0; i < k; ++i)
        P.at(j, rr.pivots[i]) = f.neg(rr.reduced.at(i, nonpiv[j]));
    }
    proj[v] = std::move(P);
    lift[v] = std::move(Li);
    Qr.dims[v] = static_cast<unsigned>(nonpiv.size());
  }
  Qr.act.assign(q.arrows.size(), Mat());
  for (unsigned a = 0; a < q.arrows.size(); ++a) {
    unsigned D = dom_vertex(q, a, R.left), C = cod_vertex(q, a, R.left);
    // well-definedness: the subspace must be carried into itself
    if (!(proj[C] * (R.act[a] * L[D])).is_zero())
      throw spec_error("subspace is not invariant under arrow '" + q.arrows[a].name + "'");
    Qr.act[a] = proj[C] * (R.act[a] * lift[D]);
  }
  Qr.finalize();
  out.map = Mat(f, Qr.total, R.total);
  for (unsigned v = 0; v < R.vertex_count(); ++v)
    for (unsigned i = 0; i < Qr.dims[v]; ++i)
      for (unsigned j = 0; j < R.dims[v]; ++j)
        out.map.at(Qr.offs[v] + i, R.offs[v] + j) = proj[v].at(i, j);
  return out;
}

SubQuot top_of(const Representation& R) {
  return quotient_representation(R, radical_subspace(R), "top(" + R.name + ")");
}

// --- filtrations -------------------------------------------------------------------

LoewyTable loewy_series(const Representation& R) {
  LoewyTable t;
  t.vertices = R.A->quiver().vertices;
  Representation cur = R;
  while (cur.total > 0) {
    Mat rad = radical_subspace(cur);
    SubQuot q = quotient_representation(cur, rad, "");
    t.layers.push_back(q.rep.dims);
    if (rad.cols() == 0) break;
    cur = sub_representation(cur, rad, "").rep;
  }
  return t;
}

LoewyTable socle_series(const Representation& R) {
  LoewyTable t;
  t.vertices = R.A->quiver().vertices;
  std::vector<std::vector<unsigned>> bottom_up;
  Representation cur = R;
  while (cur.total > 0) {
    Mat s = socle_subspace(cur);
    std::vector<Mat> loc = split_blocks(cur, s);
    std::vector<unsigned> counts(cur.vertex_count());
    unsigned sum = 0;
    for (unsigned v = 0; v < cur.vertex_count(); ++v) {
      counts[v] = loc[v].cols();
      sum += counts[v];
    }
    bottom_up.push_back(std::move(counts));
    if (sum == cur.total) break;
    cur = quotient_representation(cur, s, "").rep;
  }
  t.layers.assign(bottom_up.rbegin(), bottom_up.rend());
  return t;
}

std::string LoewyTable::one_line() const {
  if (layers.empty()) return "0";
  std::string out;
  for (std::size_t l = 0; l < layers.size(); ++l) {
    if (l) out += "/";
    bool first = true;
    for (unsigned v = 0; v < vertices.size(); ++v)
      for (unsigned k = 0; k < layers[l][v]; ++k) {
        if (!first) out += " ";
        first = false;
        out += vertices[v];
      }
  }
  return out;
}

std::string LoewyTable::diagram(const std::string& indent) const {
  if (layers.empty()) return indent + "0\n";
  std::vector<std::string> lines;
  std::size_t width = 0;
  for (const auto& layer : layers) {
    std::string s;
    for (unsigned v = 0; v < vertices.size(); ++v)
      for (unsigned k = 0; k < layer[v]; ++k) {
        if (!s.empty()) s += " ";
        s += vertices[v];
      }
    width = std::max(width, s.size());
    lines.push_back(std::move(s));
  }
  std::string out;
  for (const auto& s : lines) {
    std::size_t pad = (width - s.size()) / 2;
    out += indent + std::string(pad, ' ') + s + "\n";
  }
  return out;
}

LoewyTable parse_loewy(const Algebra& A, const std::string& one_line) {
  LoewyTable t;
  t.vertices = A.quiver().vertices;
  if (one_line == "0") return t;
  std::size_t pos = 0;
  while (pos <= one_line.size()) {
    std::size_t slash = one_line.find('/', pos);
    std::string layer =
        one_line.substr(pos, slash == std::string::npos ? std::string::npos : slash - pos);
    pos = slash == std::string::npos ? one_line.size() + 1 : slash + 1;
    std::vector<unsigned> counts(A.vertex_count(), 0);
    std::istringstream is(layer);
    std::string lbl;
    bool any = false;
    while (is >> lbl) {
      int v = A.quiver().vertex_index(lbl);
      if (v < 0) throw spec_error("unknown vertex '" + lbl + "' in layer table");
      ++counts[static_cast<unsigned>(v)];
      any = true;
    }
    if (!any) throw spec_error("empty layer in layer table '" + one_line + "'");
    t.layers.push_back(std::move(counts));
  }
  return t;
}

// --- covers and syzygies ---------------------------------------------------------------

Cover projective_cover(const Representation& M) {
  const Algebra& A = *M.A;
  const Field& f = A.field();
  SubQuot T = top_of(M);
  Cover out;
  out.mults = T.rep.dims;
  // lift a basis of the top back into M, one vector per summand
  std::vector<std::pair<unsigned, std::vector<fel>>> summands; // vertex, lift
  for (unsigned v = 0; v < M.vertex_count(); ++v) {
    if (out.mults[v] == 0) continue;
    Mat Pv = sub_block(T.map, T.rep.offs[v], T.rep.dims[v], M.offs[v], M.dims[v]);
    for (unsigned t = 0; t < out.mults[v]; ++t) {
      std::vector<fel> e(T.rep.dims[v], 0);
      e[t] = 1;
      auto x = solve(Pv, e);
      if (!x) throw spec_error("internal: top projection is not surjective");
      std::vector<fel> m(M.total, 0);
      for (unsigned i = 0; i < M.dims[v]; ++i) m[M.offs[v] + i] = (*x)[i];
      summands.emplace_back(v, std::move(m));
    }
  }
  // assemble the cover as a direct sum of projectives in summand order
  std::vector<Representation> protos(A.vertex_count());
  std::vector<const Representation*> parts;
  for (auto& [v, lift] : summands) {
    if (protos[v].A == nullptr) protos[v] = projective_module(A, v, M.left);
    parts.push_back(&protos[v]);
  }
  if (parts.empty()) {
    Representation Z;
    Z.A = &A;
    Z.left = M.left;
    Z.name = "0";
    Z.dims.assign(A.vertex_count(), 0);
    Z.act.assign(A.quiver().arrows.size(), Mat());
    Z.finalize();
    out.P = std::move(Z);
    out.map = Mat(f, M.total, 0);
    return out;
  }
  out.P = direct_sum(parts, "P(" + M.name + ")");
  // P-total index of local coordinate l of summand s: recompute the layout
  std::vector<std::vector<unsigned>> poff(parts.size(),
                                          std::vector<unsigned>(A.vertex_count(), 0));
  {
    std::vector<unsigned> acc(A.vertex_count(), 0);
    for (unsigned s = 0; s < parts.size(); ++s)
      for (unsigned v = 0; v < A.vertex_count(); ++v) {
        poff[s][v] = acc[v];
        acc[v] += parts[s]->dims[v];
      }
  }
  out.map = Mat(f, M.total, out.P.total);
  for (unsigned s = 0; s < summands.size(); ++s) {
    unsigned v = summands[s].first;
    const std::vector<fel>& mlift = summands[s].second;
    std::vector<unsigned> basis = path_module_basis(A, v, M.left);
    std::vector<unsigned> ctr(A.vertex_count(), 0);
    for (unsigned b : basis) {
      unsigned w = M.left ? A.basis_path(b).end : A.basis_path(b).start;
      unsigned pcol = out.P.offs[w] + poff[s][w] + ctr[w]++;
      std::vector<fel> col = M.action_of_basis(b).apply(mlift);
      out.map.set_col(pcol, col);
    }
  }
  if (rank(out.map) != M.total)
    throw spec_error("internal: projective cover map is not surjective");
  return out;
}

Representation omega(const Representation& M, unsigned n) {
  Representation cur = M;
  for (unsigned k = 0; k < n; ++k) {
    Cover c = projective_cover(cur);
    Mat ker = nullspace(c.map);
    cur = sub_representation(c.P, ker, "").rep;
  }
  cur.name = "Ω^" + std::to_string(n) + "(" + M.name + ")";
  return cur;
}

bool is_projective_module(const Representation& M) {
  return projective_cover(M).P.total == M.total;
}

Representation strip_projective_summands(const Representation& M) {
  const Algebra& A = *M.A;
  Representation K = M;
  K.name = M.name + "_core";
  bool changed = true;
  while (changed && K.total > 0) {
    changed = false;
    for (unsigned v = 0; v < A.vertex_count() && !changed; ++v) {
      Representation Pv = projective_module(A, v, M.left);
      std::vector<Mat> F = hom_space(Pv, K);
      if (F.empty()) continue;
      std::vector<Mat> R = hom_space(K, Pv);
      for (const Mat& fm : F) {
        for (const Mat& rm : R) {
          Mat c = rm * fm; // endomorphism of Pv; invertible iff it is a unit
          if (rank(c) != Pv.total) continue;
          Mat g = *inverse(c) * rm;                  // K -> Pv, with g*f = id
          K = sub_representation(K, nullspace(g), K.name).rep;
          changed = true;
          break;
        }
        if (changed) break;
      }
    }
  }
  return K;
}

// --- hom spaces and isomorphism ----------------------------------------------------------

std::vector<Mat> hom_space(const Representation& X, const Representation& Y) {
  if ((X.A != Y.A && X.A->name() != Y.A->name()) || X.left != Y.left)
    throw spec_error("hom space needs modules over the same algebra and side");
  const Quiver& q = X.A->quiver();
  const Field& f = X.A->field();
  unsigned nv = X.vertex_count();
  std::vector<unsigned> base(nv, 0);
  unsigned nvars = 0;
  for (unsigned v = 0; v < nv; ++v) {
    base[v] = nvars;
    nvars += Y.dims[v] * X.dims[v];
  }
  unsigned nrows = 0;
  for (unsigned a = 0; a < q.arrows.size(); ++a)
    nrows += Y.dims[cod_vertex(q, a, X.left)] * X.dims[dom_vertex(q, a, X.left)];
  Mat sys(f, nrows, nvars);
  unsigned r0 = 0;
  for (unsigned a = 0; a < q.arrows.size(); ++a) {
    unsigned D = dom_vertex(q, a, X.left), C = cod_vertex(q, a, X.left);
    const Mat& Xa = X.act[a];
    const Mat& Ya = Y.act[a];
    for (unsigned i = 0; i < Y.dims[C]; ++i)
      for (unsigned j = 0; j < X.dims[D]; ++j) {
        unsigned row = r0 + i * X.dims[D] + j;
        // f_C * Xa  contributes +f_C(i,c) Xa(c,j)
        for (unsigned c = 0; c < X.dims[C]; ++c) {
          unsigned var = base[C] + i * X.dims[C] + c;
          sys.at(row, var) = f.add(sys.at(row, var), Xa.at(c, j));
        }
        // Ya * f_D contributes -Ya(i,r) f_D(r,j)
        for (unsigned r = 0; r < Y.dims[D]; ++r) {
          unsigned var = base[D] + r * X.dims[D] + j;
          sys.at(row, var) = f.sub(sys.at(row, var), Ya.at(i, r));
        }
      }
    r0 += Y.dims[C] * X.dims[D];
  }
  Mat ker = nullspace(sys);
  std::vector<Mat> out;
  for (unsigned k = 0; k < ker.cols(); ++k) {
    Mat h(f, Y.total, X.total);
    for (unsigned v = 0; v < nv; ++v)
      for (unsigned i = 0; i < Y.dims[v]; ++i)
        for (unsigned j = 0; j < X.dims[v]; ++j)
          h.at(Y.offs[v] + i, X.offs[v] + j) = ker.at(base[v] + i * X.dims[v] + j, k);
    out.push_back(std::move(h));
  }
  return out;
}

IsoResult is_isomorphic(const Representation& X, const Representation& Y, std::uint64_t seed,
                        unsigned random_trials) {
  IsoResult res;
  if (X.dims != Y.dims) {
    res.status = IsoResult::Status::no;
    res.detail = "dimension vectors differ";
    return res;
  }
  const Field& f = X.A->field();
  if (X.total == 0) {
    res.status = IsoResult::Status::yes;
    res.witness = Mat(f, 0, 0);
    res.detail = "both modules are zero";
    return res;
  }
  std::vector<Mat> homs = hom_space(X, Y);
  unsigned h = static_cast<unsigned>(homs.size());
  if (h == 0) {
    res.status = IsoResult::Status::no;
    res.detail = "hom space is zero";
    return res;
  }
  unsigned p = f.p();
  auto try_combo = [&](const std::vector<fel>& coef) -> bool {
    Mat cand(f, Y.total, X.total);
    for (unsigned i = 0; i < h; ++i)
      if (coef[i] != 0) cand = cand + homs[i].scaled(coef[i]);
    if (rank(cand) != X.total) return false;
    res.status = IsoResult::Status::yes;
    res.witness = std::move(cand);
    return true;
  };
  unsigned long long count = 1;
  bool small = true;
  for (unsigned i = 0; i < h; ++i) {
    count *= p;
    if (count > 531441ULL) {
      small = false;
      break;
    }
  }
  if (small &&
      count * static_cast<unsigned long long>(X.total) * X.total * X.total > 6000000000ULL)
    small = false;
  if (small) {
    std::vector<fel> coef(h, 0);
    for (unsigned long long n = 1; n < count; ++n) {
      unsigned long long m = n;
      for (unsigned k = 0; k < h; ++k) {
        coef[k] = static_cast<fel>(m % p);
        m /= p;
      }
      if (try_combo(coef)) {
        res.detail = "exhaustive search over the hom space (dim " + std::to_string(h) + ")";
        return res;
      }
    }
    res.status = IsoResult::Status::no;
    res.detail =
        "no invertible homomorphism exists (hom space dim " + std::to_string(h) + ", exhaustive)";
    return res;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> dist(0, p - 1);
  for (unsigned t = 0; t < random_trials; ++t) {
    std::vector<fel> coef(h);
    bool nz = false;
    for (unsigned i = 0; i < h; ++i) {
      coef[i] = static_cast<fel>(dist(rng));
      nz |= coef[i] != 0;
    }
    if (!nz) continue;
    if (try_combo(coef)) {
      res.detail = "random combination, trial " + std::to_string(t + 1);
      return res;
    }
  }
  res.status = IsoResult::Status::undecided;
  res.detail = "no invertible combination in " + std::to_string(random_trials) +
               " random trials (hom space dim " + std::to_string(h) + ")";
  return res;
}

// --- functors ----------------------------------------------------------------------------

Representation twist_module(const Representation& M, const Automorphism& sigma) {
  const Algebra& A = *M.A;
  if (sigma.A != &A && sigma.A->name() != A.name())
    throw spec_error("twist automorphism lives on a different algebra");
  const Quiver& q = A.quiver();
  Representation R;
  R.A = &A;
  R.left = M.left;
  R.name = sigma.name + "(" + M.name + ")";
  R.dims.resize(M.vertex_count());
  for (unsigned v = 0; v < M.vertex_count(); ++v) R.dims[v] = M.dims[sigma.vimg(v)];
  R.act.assign(q.arrows.size(), Mat());
  for (unsigned a = 0; a < q.arrows.size(); ++a) {
    Mat full = M.action_of(sigma.apply(A.arrow_el(a)));
    unsigned D = sigma.vimg(dom_vertex(q, a, M.left));
    unsigned C = sigma.vimg(cod_vertex(q, a, M.left));
    R.act[a] = sub_block(full, M.offs[C], M.dims[C], M.offs[D], M.dims[D]);
  }
  R.finalize();
  return R;
}

Representation dual_module(const Representation& M) {
  Representation R;
  R.A = M.A;
  R.left = !M.left;
  R.name = M.name + "^*";
  R.dims = M.dims;
  R.act.reserve(M.act.size());
  for (const Mat& m : M.act) R.act.push_back(m.transpose());
  R.finalize();
  return R;
}

Representation restrict_module(const Representation& M, const Subalgebra& S) {
  const Algebra& big = *S.big;
  if (M.A != &big && M.A->name() != big.name())
    throw spec_error("module and subalgebra live over different algebras");
  unsigned nv = S.small.vertex_count();
  // idempotent image of each presented vertex, as a set of big vertices
  std::vector<std::vector<unsigned>> parts(nv);
  std::vector<int> owner(big.vertex_count(), -1);
  for (unsigned w = 0; w < nv; ++w) {
    const El& e = S.vertex_idem[w];
    for (unsigned b = 0; b < big.dim(); ++b) {
      if (e.c[b] == 0) continue;
      const auto& bp = big.basis_path(b);
      if (!bp.arrows.empty() || e.c[b] != 1)
        throw spec_error("idempotent image of vertex '" + S.small.quiver().vertices[w] +
                         "' is not a sum of vertex idempotents");
      if (owner[bp.start] != -1)
        throw spec_error("idempotent images overlap at ambient vertex '" +
                         big.quiver().vertices[bp.start] + "'");
      owner[bp.start] = static_cast<int>(w);
      parts[w].push_back(bp.start);
    }
    std::sort(parts[w].begin(), parts[w].end());
  }
  for (unsigned v = 0; v < big.vertex_count(); ++v)
    if (owner[v] < 0 && M.dims[v] > 0)
      throw spec_error("restriction loses the component at ambient vertex '" +
                       big.quiver().vertices[v] + "' (idempotent images do not cover it)");
  std::vector<std::vector<unsigned>> idx(nv); // total-coordinate lists per presented vertex
  for (unsigned w = 0; w < nv; ++w)
    for (unsigned v : parts[w])
      for (unsigned i = 0; i < M.dims[v]; ++i) idx[w].push_back(M.offs[v] + i);
  const Quiver& sq = S.small.quiver();
  Representation R;
  R.A = &S.small;
  R.left = M.left;
  R.name = M.name + "|" + S.small.name();
  R.dims.resize(nv);
  for (unsigned w = 0; w < nv; ++w) R.dims[w] = static_cast<unsigned>(idx[w].size());
  R.act.assign(sq.arrows.size(), Mat());
  for (unsigned z = 0; z < sq.arrows.size(); ++z) {
    Mat full = M.action_of(S.arrow_img[z]);
    unsigned D = dom_vertex(sq, z, M.left), C = cod_vertex(sq, z, M.left);
    R.act[z] = gather(full, idx[C], idx[D]);
  }
  R.finalize();
  return R;
}

// --- realizations ---------------------------------------------------------------------------

El Realization::image_of_path(const std::vector<unsigned>& arrows, unsigned endo_vertex) const {
  if (arrows.empty()) return big->idem(summands[endo_vertex]);
  El r = arrow_img[arrows[0]];
  for (std::size_t i = 1; i < arrows.size(); ++i) r = big->mul(arrow_img[arrows[i]], r);
  return r;
}

Realization build_realization(const Algebra& big, const Algebra& endo,
                              const std::vector<std::string>& summand_labels,
                              const std::vector<ElementExpr>& arrow_exprs) {
  Realization R;
  R.big = &big;
  R.endo = &endo;
  if (summand_labels.size() != endo.vertex_count())
    throw spec_error("realization needs one summand vertex per corner vertex");
  std::vector<bool> used(big.vertex_count(), false);
  for (const std::string& lbl : summand_labels) {
    int v = big.quiver().vertex_index(lbl);
    if (v < 0) throw spec_error("unknown summand vertex '" + lbl + "'");
    if (used[v]) throw spec_error("duplicate summand vertex '" + lbl + "'");
    used[v] = true;
    R.summands.push_back(static_cast<unsigned>(v));
  }
  const Quiver& eq = endo.quiver();
  if (arrow_exprs.size() != eq.arrows.size())
    throw spec_error("realization needs one image per corner arrow");
  for (unsigned z = 0; z < eq.arrows.size(); ++z) {
    El img = big.eval(arrow_exprs[z]);
    unsigned vs = R.summands[eq.arrows[z].src], vt = R.summands[eq.arrows[z].tgt];
    for (unsigned b = 0; b < big.dim(); ++b) {
      if (img.c[b] == 0) continue;
      const auto& bp = big.basis_path(b);
      if (bp.arrows.empty())
        throw spec_error("arrow image of '" + eq.arrows[z].name + "' is not in the radical");
      if (bp.start != vs || bp.end != vt)
        throw spec_error("arrow image of '" + eq.arrows[z].name + "' has an endpoint mismatch");
    }
    R.arrow_img.push_back(std::move(img));
  }
  // relations of the corner presentation must vanish on the images
  El ebar = big.zero();
  for (unsigned v : R.summands) ebar = big.add(ebar, big.idem(v));
  auto eval_mapped = [&](const ElementExpr& e) {
    El acc = big.zero();
    for (const PathTerm& t : e) {
      El val;
      if (t.identity) val = ebar;
      else if (t.vertex >= 0) val = big.idem(R.summands[t.vertex]);
      else val = R.image_of_path(t.arrows, 0);
      acc = big.add(acc, big.scale(big.field().reduce(t.coeff), val));
    }
    return acc;
  };
  for (const ElementExpr& rel : endo.spec().relations)
    if (!eval_mapped(rel).is_zero())
      throw spec_error("realization violates the relation " +
                       element_expr_to_string(eq, rel));
  unsigned N = endo.spec().nilpotency, zd = endo.spec().zero_distinct_length;
  if (zd > 0)
    for (unsigned len = zd; len < N; ++len)
      for (const auto& p : endo.paths_of_length(len)) {
        if (eq.arrows[p.front()].src == eq.arrows[p.back()].tgt) continue;
        if (!R.image_of_path(p, 0).is_zero())
          throw spec_error("realization violates distinct-endpoint vanishing at length " +
                           std::to_string(len));
      }
  for (const auto& p : endo.paths_of_length(N))
    if (!R.image_of_path(p, 0).is_zero())
      throw spec_error("realization violates the nilpotency bound " + std::to_string(N));
  // the basis-path images must span the corner, and the corner must have the
  // same dimension as the presented algebra
  Mat images(big.field(), endo.dim(), big.dim());
  for (unsigned b = 0; b < endo.dim(); ++b) {
    const auto& bp = endo.basis_path(b);
    El img = R.image_of_path(bp.arrows, bp.start);
    images.set_row(b, img.c);
  }
  if (rank(images) != endo.dim())
    throw spec_error("realization is not faithful: basis-path images are dependent");
  unsigned corner = 0;
  for (unsigned b = 0; b < big.dim(); ++b) {
    const auto& bp = big.basis_path(b);
    if (used[bp.start] && used[bp.end]) ++corner;
  }
  if (corner != endo.dim())
    throw spec_error("corner dimension mismatch: " + std::to_string(corner) + " vs " +
                     std::to_string(endo.dim()));
  return R;
}

Representation hom_module(const Realization& r, const Representation& X) {
  const Algebra& big = *r.big;
  if (X.A != &big && X.A->name() != big.name())
    throw spec_error("hom module input lives over a different algebra");
  const Quiver& eq = r.endo->quiver();
  Representation R;
  R.A = r.endo;
  R.left = X.left;
  R.name = "Hom(P," + X.name + ")";
  R.dims.resize(eq.vertex_count());
  for (unsigned i = 0; i < eq.vertex_count(); ++i) R.dims[i] = X.dims[r.summands[i]];
  R.act.assign(eq.arrows.size(), Mat());
  for (unsigned z = 0; z < eq.arrows.size(); ++z) {
    Mat full = X.action_of(r.arrow_img[z]);
    unsigned D = r.summands[dom_vertex(eq, z, X.left)];
    unsigned C = r.summands[cod_vertex(eq, z, X.left)];
    R.act[z] = sub_block(full, X.offs[C], X.dims[C], X.offs[D], X.dims[D]);
  }
  R.finalize();
  return R;
}

// --- utilities --------------------------------------------------------------------------------

Representation random_submodule(const Representation& R, std::uint64_t seed) {
  const Field& f = R.A->field();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> dist(0, f.p() - 1);
  unsigned nvec = 1 + static_cast<unsigned>(rng() % 2);
  Mat cols(f, R.total, nvec);
  for (unsigned c = 0; c < nvec; ++c)
    for (unsigned i = 0; i < R.total; ++i) cols.at(i, c) = static_cast<fel>(dist(rng));
  Mat span = span_submodule(R, cols);
  if (span.cols() == 0 && R.total > 0) {
    Mat one(f, R.total, 1);
    one.at(static_cast<unsigned>(rng() % R.total), 0) = 1;
    span = span_submodule(R, one);
  }
  return sub_representation(R, span, "sub_" + std::to_string(seed) + "(" + R.name + ")").rep;
}

} // namespace qrep
