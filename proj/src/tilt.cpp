#include "qrep/tilt.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qrep {

namespace {

std::string mults_name(const Algebra& A, const std::vector<unsigned>& mults) {
  std::ostringstream os;
  bool first = true;
  for (unsigned v = 0; v < mults.size(); ++v)
    for (unsigned m = 0; m < mults[v]; ++m) {
      os << (first ? "" : "+") << "P" << A.quiver().vertices[v];
      first = false;
    }
  if (first) os << "0";
  return os.str();
}

// Row-echelon accumulator for membership tests against a fixed subspace.
struct RowReducer {
  const Field* f = nullptr;
  std::vector<std::vector<fel>> rows;  // echelon, leading coefficient 1
  std::vector<unsigned> lead;

  explicit RowReducer(const Field& fld) : f(&fld) {}

  // Reduces v in place; returns true if it was already in the span.
  bool reduce(std::vector<fel>& v) const {
    for (size_t r = 0; r < rows.size(); ++r) {
      fel c = v[lead[r]];
      if (c == 0) continue;
      for (size_t j = lead[r]; j < v.size(); ++j) v[j] = f->sub(v[j], f->mul(c, rows[r][j]));
    }
    for (fel x : v)
      if (x != 0) return false;
    return true;
  }

  void add(std::vector<fel> v) {
    for (size_t r = 0; r < rows.size(); ++r) {
      fel c = v[lead[r]];
      if (c == 0) continue;
      for (size_t j = lead[r]; j < v.size(); ++j) v[j] = f->sub(v[j], f->mul(c, rows[r][j]));
    }
    unsigned l = 0;
    while (l < v.size() && v[l] == 0) ++l;
    if (l == v.size()) return;
    fel inv = f->inv(v[l]);
    for (size_t j = l; j < v.size(); ++j) v[j] = f->mul(inv, v[j]);
    rows.push_back(std::move(v));
    lead.push_back(l);
  }

  unsigned dim() const { return static_cast<unsigned>(rows.size()); }
};

}  // namespace

ProjTerm make_proj_term(const Algebra& A, const std::vector<unsigned>& mults, bool left,
                        const std::string& name) {
  if (mults.size() != A.vertex_count())
    throw spec_error("projective term needs one multiplicity per vertex");
  ProjTerm t;
  t.mults = mults;
  for (unsigned v = 0; v < mults.size(); ++v)
    for (unsigned m = 0; m < mults[v]; ++m) t.gen_vertex.push_back(v);

  if (t.gen_vertex.empty()) {
    Representation z;
    z.A = &A;
    z.left = left;
    z.name = name;
    z.dims.assign(A.vertex_count(), 0);
    z.act.assign(A.quiver().arrows.size(), Mat(A.field(), 0, 0));
    // arrow blocks are all 0 x 0 only when every vertex block is empty
    for (unsigned a = 0; a < z.act.size(); ++a) {
      const Arrow& ar = A.quiver().arrows[a];
      unsigned d = left ? ar.src : ar.tgt, c = left ? ar.tgt : ar.src;
      z.act[a] = Mat(A.field(), z.dims[c], z.dims[d]);
    }
    z.finalize();
    t.rep = std::move(z);
    return t;
  }

  std::vector<Representation> parts;
  parts.reserve(t.gen_vertex.size());
  for (unsigned g : t.gen_vertex) parts.push_back(projective_module(A, g, left));
  std::vector<const Representation*> ptrs;
  for (const Representation& p : parts) ptrs.push_back(&p);
  t.rep = direct_sum(ptrs, name);

  // Recover the coordinate layout of direct_sum: block v concatenates the
  // parts' v-blocks in part order, and each part's v-block lists the algebra
  // basis paths of its generator vertex in group order.
  t.coord_gen.assign(t.rep.total, 0);
  t.coord_path.assign(t.rep.total, 0);
  for (unsigned v = 0; v < A.vertex_count(); ++v) {
    unsigned cursor = t.rep.offs[v];
    for (unsigned k = 0; k < t.gen_vertex.size(); ++k) {
      const auto& grp = left ? A.basis_with_end(v) : A.basis_with_start(v);
      for (unsigned b : grp) {
        unsigned home = left ? A.basis_path(b).start : A.basis_path(b).end;
        if (home != t.gen_vertex[k]) continue;
        t.coord_gen[cursor] = k;
        t.coord_path[cursor] = b;
        ++cursor;
      }
    }
    if (cursor != t.rep.offs[v] + t.rep.dims[v])
      throw std::logic_error("projective term layout mismatch");
  }
  return t;
}

std::vector<Mat> proj_hom_space(const ProjTerm& X, const Representation& M) {
  const Algebra& A = *M.A;
  const Field& f = A.field();
  std::vector<Mat> out;
  if (X.is_zero() || M.total == 0) return out;
  std::map<unsigned, Mat> acts;  // path basis index -> action on M
  auto act_of = [&](unsigned b) -> const Mat& {
    auto it = acts.find(b);
    if (it == acts.end()) it = acts.emplace(b, M.action_of_basis(b)).first;
    return it->second;
  };
  for (unsigned k = 0; k < X.copies(); ++k) {
    unsigned g = X.gen_vertex[k];
    for (unsigned w = 0; w < M.dims[g]; ++w) {
      Mat F(f, M.total, X.rep.total);
      for (unsigned c = 0; c < X.rep.total; ++c) {
        if (X.coord_gen[c] != k) continue;
        const Mat& am = act_of(X.coord_path[c]);
        for (unsigned r = 0; r < M.total; ++r) F.at(r, c) = am.at(r, M.offs[g] + w);
      }
      out.push_back(std::move(F));
    }
  }
  return out;
}

ProjCover proj_cover(const Representation& M) {
  const Algebra& A = *M.A;
  const Field& f = A.field();
  SubQuot top = top_of(M);
  ProjCover out;
  out.P = make_proj_term(A, top.rep.dims, M.left, mults_name(A, top.rep.dims));
  if (out.P.is_zero()) {
    out.map = Mat(f, M.total, 0);
    if (M.total != 0) throw std::logic_error("cover of a nonzero module came out empty");
    return out;
  }
  // lift a basis of the top through the projection
  Mat lifts;
  {
    Mat id = Mat::identity(f, top.rep.total);
    auto sol = solve_many(top.map, id);
    if (!sol) throw std::logic_error("top projection is not surjective");
    lifts = *sol;  // M.total x top.total
  }
  std::map<unsigned, Mat> acts;
  auto act_of = [&](unsigned b) -> const Mat& {
    auto it = acts.find(b);
    if (it == acts.end()) it = acts.emplace(b, M.action_of_basis(b)).first;
    return it->second;
  };
  // copy k corresponds to the k-th coordinate of the top in vertex order,
  // which is exactly the column order of `lifts`
  out.map = Mat(f, M.total, out.P.rep.total);
  for (unsigned c = 0; c < out.P.rep.total; ++c) {
    unsigned k = out.P.coord_gen[c];
    const Mat& am = act_of(out.P.coord_path[c]);
    for (unsigned r = 0; r < M.total; ++r) {
      fel s = 0;
      for (unsigned m = 0; m < M.total; ++m) s = f.add(s, f.mul(am.at(r, m), lifts.at(m, k)));
      out.map.at(r, c) = s;
    }
  }
  if (rank(out.map) != M.total) throw std::logic_error("projective cover map is not surjective");
  validate_hom(ModuleHom{&out.P.rep, &M, out.map});
  return out;
}

const ProjTerm* ProjComplex::term_at(int n) const {
  if (n < lo || n > hi()) return nullptr;
  const ProjTerm& t = terms[static_cast<size_t>(n - lo)];
  return t.is_zero() ? nullptr : &t;
}

const Mat* ProjComplex::diff_into(int n) const {
  if (n < lo || n + 1 > hi()) return nullptr;
  return &diff[static_cast<size_t>(n - lo)];
}

void ProjComplex::validate() const {
  if (terms.empty()) throw spec_error("complex '" + name + "' has no terms");
  if (diff.size() + 1 != terms.size())
    throw spec_error("complex '" + name + "' needs one differential between consecutive terms");
  for (size_t k = 0; k < diff.size(); ++k) {
    if (diff[k].rows() != terms[k].rep.total || diff[k].cols() != terms[k + 1].rep.total)
      throw spec_error("complex '" + name + "' differential " + std::to_string(k) +
                       " has the wrong shape");
    if (terms[k].rep.total && terms[k + 1].rep.total)
      validate_hom(ModuleHom{&terms[k + 1].rep, &terms[k].rep, diff[k]});
  }
  for (size_t k = 0; k + 1 < diff.size(); ++k)
    if (!(diff[k] * diff[k + 1]).is_zero())
      throw spec_error("complex '" + name + "' differentials do not square to zero");
  for (const ProjTerm& t : terms)
    if (!t.is_zero() && !is_projective_module(t.rep))
      throw spec_error("complex '" + name + "' has a non-projective term");
}

ProjComplex stalk_complex(const Algebra& A, const std::vector<unsigned>& mults, int degree,
                          const std::string& name) {
  ProjComplex c;
  c.name = name;
  c.lo = degree;
  c.terms.push_back(make_proj_term(A, mults, true, name));
  return c;
}

SerreApprox serre_approx(const Representation& M, const std::vector<unsigned>& J) {
  const Algebra& A = *M.A;
  const Field& f = A.field();
  std::vector<bool> in_J(A.vertex_count(), false);
  for (unsigned j : J) {
    if (j >= A.vertex_count()) throw spec_error("approximation subset names a missing vertex");
    in_J[j] = true;
  }

  SerreApprox out;
  ProjCover cover = proj_cover(M);
  const Representation& P = cover.P.rep;
  Mat K = nullspace(cover.map);
  out.kernel_dim = K.cols();

  // K_{m+1} = rad K_m + sum of e_v K_m over v outside J; decreasing, so it
  // stabilizes once the rank repeats.
  while (K.cols() > 0) {
    Mat next(f, P.total, 0);
    for (unsigned a = 0; a < A.quiver().arrows.size(); ++a)
      next = Mat::hstack(next, P.action_of(A.arrow_el(a)) * K);
    for (unsigned v = 0; v < A.vertex_count(); ++v)
      if (!in_J[v]) next = Mat::hstack(next, P.idem_projection(v) * K);
    next = column_basis(next);
    if (next.cols() == K.cols()) break;
    K = std::move(next);
  }
  out.reject_dim = K.cols();

  SubQuot q = quotient_representation(P, K, M.name + "_J");
  out.MJ = std::move(q.rep);
  out.phi = std::move(q.map);
  auto psi_t = solve_many(out.phi.transpose(), cover.map.transpose());
  if (!psi_t) throw std::logic_error("approximation does not dominate the module");
  out.psi = psi_t->transpose();
  out.P = std::move(cover.P);
  return out;
}

unsigned ext1_dim(const Algebra& A, unsigned i, unsigned j) {
  Representation S = simple_module(A, i, true);
  Representation O = omega(S, 1);
  Representation T = simple_module(A, j, true);
  return static_cast<unsigned>(hom_space(O, T).size());
}

TiltingComplex combinatorial_tilting_complex(const Algebra& A, const std::vector<unsigned>& J) {
  TiltingComplex T;
  T.A = &A;
  T.J = J;
  std::sort(T.J.begin(), T.J.end());
  T.J.erase(std::unique(T.J.begin(), T.J.end()), T.J.end());
  std::vector<bool> in_J(A.vertex_count(), false);
  for (unsigned j : T.J) {
    if (j >= A.vertex_count()) throw spec_error("tilting subset names a missing vertex");
    in_J[j] = true;
  }

  bool ext_free = true;
  for (unsigned i : T.J)
    for (unsigned j : T.J) ext_free = ext_free && ext1_dim(A, i, j) == 0;

  for (unsigned v = 0; v < A.vertex_count(); ++v) {
    std::vector<unsigned> unit(A.vertex_count(), 0);
    unit[v] = 1;
    std::string pv = "P" + A.quiver().vertices[v];
    if (!in_J[v]) {
      T.summands.push_back(stalk_complex(A, unit, 1, pv + "[1]"));
      continue;
    }
    Representation Sj = simple_module(A, v, true);
    SerreApprox sa = serre_approx(Sj, T.J);
    Mat ker = nullspace(sa.phi);
    if (ker.cols() == 0) {
      T.summands.push_back(stalk_complex(A, unit, 0, pv));
      continue;
    }
    SubQuot sub = sub_representation(sa.P.rep, ker, "K(" + pv + ")");
    ProjCover qc = proj_cover(sub.rep);
    ProjComplex c;
    c.name = "T" + A.quiver().vertices[v];
    c.lo = 0;
    c.terms.push_back(std::move(sa.P));
    c.terms.push_back(std::move(qc.P));
    c.diff.push_back(sub.map * qc.map);
    if (ext_free) {
      // with no extensions inside J the kernel is provably the whole radical,
      // covered minimally; a mismatch would be a construction bug
      Mat rad = radical_subspace(c.terms[0].rep);
      unsigned rr = rank(rad), rd = rank(c.diff[0]);
      if (rr != rd || rank(Mat::hstack(rad, c.diff[0])) != rr)
        throw std::logic_error("tilting summand differs from its extension-free form");
      SubQuot rsub = sub_representation(c.terms[0].rep, rad, "rad");
      if (proj_cover(rsub.rep).P.mults != c.terms[1].mults)
        throw std::logic_error("tilting summand cover differs from its extension-free form");
    }
    c.validate();
    T.summands.push_back(std::move(c));
  }
  return T;
}

namespace {

// Hom(X, Y[shift]) data: a basis of chain maps and the null-homotopic
// subspace, both as vectors of concatenated per-degree matrix entries.
struct HomData {
  int lo = 0, hi = -1;              // overlap degrees
  std::vector<unsigned> esize;      // entries per overlap degree
  std::vector<unsigned> eoff;       // running offsets into entry vectors
  unsigned entries = 0;
  std::vector<std::vector<fel>> chain_maps;  // basis
  std::vector<std::vector<fel>> boundaries;  // spanning set
};

HomData hom_data(const ProjComplex& X, const ProjComplex& Y, int shift) {
  const Algebra& A = *X.terms[0].rep.A;
  const Field& f = A.field();
  HomData out;
  auto zterm = [&](int n) { return Y.term_at(n - shift); };
  // differential of Y[shift] into degree n, with the shift sign
  fel dsign = (shift % 2 == 0) ? fel(1) : f.neg(1);
  auto zdiff = [&](int n) { return Y.diff_into(n - shift); };

  out.lo = std::max(X.lo, Y.lo + shift);
  out.hi = std::min(X.hi(), Y.hi() + shift);

  // hom bases per overlap degree
  std::vector<std::vector<Mat>> hb;
  std::vector<unsigned> hoff;
  unsigned nh = 0;
  for (int n = out.lo; n <= out.hi; ++n) {
    const ProjTerm* xt = X.term_at(n);
    const ProjTerm* zt = zterm(n);
    std::vector<Mat> basis;
    if (xt && zt) basis = proj_hom_space(*xt, zt->rep);
    hoff.push_back(nh);
    nh += static_cast<unsigned>(basis.size());
    unsigned es = (xt && zt) ? xt->rep.total * zt->rep.total : 0;
    out.eoff.push_back(out.entries);
    out.esize.push_back(es);
    out.entries += es;
    hb.push_back(std::move(basis));
  }
  if (out.lo > out.hi || nh == 0) return out;

  auto flat = [&](int n, const Mat& m, std::vector<fel>& into) {
    unsigned off = out.eoff[static_cast<size_t>(n - out.lo)];
    for (unsigned r = 0; r < m.rows(); ++r)
      for (unsigned c = 0; c < m.cols(); ++c) into[off + r * m.cols() + c] = m.at(r, c);
  };

  // commuting constraints: d^Z f_n = f_{n-1} d^X at every degree n
  unsigned rows = 0;
  std::vector<std::pair<int, unsigned>> squares;  // (degree n, row block size)
  for (int n = out.lo; n <= out.hi + 1; ++n) {
    const ProjTerm* xn = X.term_at(n);
    const ProjTerm* zp = zterm(n - 1);
    if (!xn || !zp) continue;
    squares.push_back({n, zp->rep.total * xn->rep.total});
    rows += zp->rep.total * xn->rep.total;
  }
  Mat C(f, rows, nh);
  unsigned r0 = 0;
  for (auto [n, blk] : squares) {
    const ProjTerm* xn = X.term_at(n);
    const ProjTerm* zp = zterm(n - 1);
    unsigned cols_x = xn->rep.total;
    // f_n contribution: d^Z . f_n
    if (n <= out.hi && zterm(n)) {
      const Mat* dz = zdiff(n - 1);
      size_t idx = static_cast<size_t>(n - out.lo);
      for (unsigned k = 0; k < hb[idx].size(); ++k) {
        Mat t = (*dz) * hb[idx][k];
        for (unsigned r = 0; r < t.rows(); ++r)
          for (unsigned c = 0; c < t.cols(); ++c)
            C.at(r0 + r * cols_x + c, hoff[idx] + k) = f.mul(dsign, t.at(r, c));
      }
    }
    // f_{n-1} contribution: - f_{n-1} . d^X
    if (n - 1 >= out.lo && X.term_at(n - 1) && zp) {
      const Mat* dx = X.diff_into(n - 1);
      size_t idx = static_cast<size_t>(n - 1 - out.lo);
      for (unsigned k = 0; k < hb[idx].size(); ++k) {
        Mat t = hb[idx][k] * (*dx);
        for (unsigned r = 0; r < t.rows(); ++r)
          for (unsigned c = 0; c < t.cols(); ++c)
            C.at(r0 + r * cols_x + c, hoff[idx] + k) = f.neg(t.at(r, c));
      }
    }
    r0 += blk;
  }

  Mat sols = nullspace(C);
  for (unsigned s = 0; s < sols.cols(); ++s) {
    std::vector<fel> v(out.entries, 0);
    for (int n = out.lo; n <= out.hi; ++n) {
      size_t idx = static_cast<size_t>(n - out.lo);
      if (hb[idx].empty()) continue;
      const ProjTerm* xt = X.term_at(n);
      const ProjTerm* zt = zterm(n);
      Mat m(f, zt->rep.total, xt->rep.total);
      for (unsigned k = 0; k < hb[idx].size(); ++k) {
        fel c = sols.at(hoff[idx] + k, s);
        if (c == 0) continue;
        m = m + hb[idx][k].scaled(c);
      }
      flat(n, m, v);
    }
    out.chain_maps.push_back(std::move(v));
  }

  // null-homotopies: h_n : X_n -> Z_{n+1} contributes d^Z h_n at degree n and
  // h_n d^X at degree n+1
  for (int n = X.lo; n <= X.hi(); ++n) {
    const ProjTerm* xn = X.term_at(n);
    const ProjTerm* zn1 = zterm(n + 1);
    if (!xn || !zn1) continue;
    std::vector<Mat> hs = proj_hom_space(*xn, zn1->rep);
    for (const Mat& h : hs) {
      std::vector<fel> v(out.entries, 0);
      bool nonzero = false;
      if (n >= out.lo && n <= out.hi && zterm(n)) {
        Mat t = ((*zdiff(n)) * h).scaled(dsign);
        flat(n, t, v);
        nonzero = true;
      }
      if (n + 1 >= out.lo && n + 1 <= out.hi && X.term_at(n + 1) && zterm(n + 1)) {
        Mat t = h * (*X.diff_into(n));
        flat(n + 1, t, v);
        nonzero = true;
      }
      if (nonzero) out.boundaries.push_back(std::move(v));
    }
  }
  return out;
}

unsigned quotient_dim(const Field& f, const HomData& hd) {
  if (hd.chain_maps.empty()) return 0;
  // every null-homotopic map is a chain map; anything else is a bug upstream
  RowReducer cms(f);
  for (const auto& cm : hd.chain_maps) cms.add(cm);
  for (const auto& b : hd.boundaries) {
    std::vector<fel> v = b;
    if (!cms.reduce(v)) throw std::logic_error("null-homotopy fell outside the chain maps");
  }
  RowReducer red(f);
  for (const auto& b : hd.boundaries) red.add(b);
  unsigned indep = 0;
  for (const auto& cm : hd.chain_maps) {
    std::vector<fel> v = cm;
    if (!red.reduce(v)) {
      ++indep;
      red.add(cm);
    }
  }
  return indep;
}

// Entry-space composition of two chain endomorphisms of C.
std::vector<fel> compose_entries(const Field& f, const ProjComplex& C, const HomData& hd,
                                 const std::vector<fel>& a, const std::vector<fel>& b) {
  std::vector<fel> out(hd.entries, 0);
  for (int n = hd.lo; n <= hd.hi; ++n) {
    size_t idx = static_cast<size_t>(n - hd.lo);
    if (hd.esize[idx] == 0) continue;
    unsigned d = C.term_at(n)->rep.total;
    unsigned off = hd.eoff[idx];
    for (unsigned r = 0; r < d; ++r)
      for (unsigned c = 0; c < d; ++c) {
        fel s = 0;
        for (unsigned m = 0; m < d; ++m)
          s = f.add(s, f.mul(a[off + r * d + m], b[off + m * d + c]));
        out[off + r * d + c] = s;
      }
  }
  return out;
}

// Indecomposability of C in the homotopy category: End(C) modulo homotopy
// has no idempotent besides 0 and 1.  Returns (decided, indecomposable).
std::pair<bool, bool> indecomposable_summand(const ProjComplex& C) {
  const Field& f = C.terms[0].rep.A->field();
  HomData hd = hom_data(C, C, 0);

  RowReducer bnd(f);
  for (const auto& b : hd.boundaries) bnd.add(b);
  // representatives of End(C)/homotopy
  std::vector<std::vector<fel>> reps;
  {
    RowReducer acc(f);
    for (const auto& b : hd.boundaries) acc.add(b);
    for (const auto& cm : hd.chain_maps) {
      std::vector<fel> v = cm;
      if (!acc.reduce(v)) {
        reps.push_back(cm);
        acc.add(cm);
      }
    }
  }
  unsigned e = static_cast<unsigned>(reps.size());
  if (e == 0) return {true, false};  // zero object counts as decomposable here
  if (e > 10) return {false, false};

  // identity entries
  std::vector<fel> id(hd.entries, 0);
  for (int n = hd.lo; n <= hd.hi; ++n) {
    size_t idx = static_cast<size_t>(n - hd.lo);
    if (hd.esize[idx] == 0) continue;
    unsigned d = C.term_at(n)->rep.total;
    for (unsigned r = 0; r < d; ++r) id[hd.eoff[idx] + r * d + r] = 1;
  }

  std::vector<unsigned> digits(e, 0);
  unsigned p = f.p();
  while (true) {
    // advance odometer
    unsigned i = 0;
    while (i < e && digits[i] + 1 == p) digits[i++] = 0;
    if (i == e) break;
    ++digits[i];

    std::vector<fel> cand(hd.entries, 0);
    for (unsigned k = 0; k < e; ++k) {
      if (digits[k] == 0) continue;
      for (unsigned t = 0; t < hd.entries; ++t)
        cand[t] = f.add(cand[t], f.mul(static_cast<fel>(digits[k]), reps[k][t]));
    }
    std::vector<fel> sq = compose_entries(f, C, hd, cand, cand);
    std::vector<fel> dif(hd.entries);
    for (unsigned t = 0; t < hd.entries; ++t) dif[t] = f.sub(sq[t], cand[t]);
    if (!bnd.reduce(dif)) continue;  // not idempotent
    // idempotent; trivial ones are 0 (excluded by the odometer) and 1
    std::vector<fel> d1(hd.entries);
    for (unsigned t = 0; t < hd.entries; ++t) d1[t] = f.sub(cand[t], id[t]);
    if (!bnd.reduce(d1)) return {true, false};
  }
  return {true, true};
}

std::string vertex_set(const Algebra& A, const std::vector<unsigned>& vs) {
  if (vs.empty()) return "∅";
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << A.quiver().vertices[vs[i]];
  os << "}";
  return os.str();
}

}  // namespace

unsigned homotopy_hom(const ProjComplex& X, const ProjComplex& Y, int shift) {
  const Field& f = X.terms[0].rep.A->field();
  HomData hd = hom_data(X, Y, shift);
  return quotient_dim(f, hd);
}

TiltingReport verify_tilting(const Algebra& A, const std::vector<unsigned>& J) {
  TiltingComplex T = combinatorial_tilting_complex(A, J);
  TiltingReport rep;
  rep.J = T.J;

  int len = 0;
  for (const ProjComplex& c : T.summands)
    len = std::max(len, static_cast<int>(c.terms.size()) - 1);
  int window = len + 1;

  for (int s = -window; s <= window; ++s) {
    unsigned total = 0;
    for (const ProjComplex& x : T.summands)
      for (const ProjComplex& y : T.summands) total += homotopy_hom(x, y, s);
    if (s == 0) {
      rep.end_dim = total;
    } else {
      rep.shift_homs.push_back({s, total});
      rep.checks.add("Hom(T, T[" + std::to_string(s) + "]) = 0", total == 0,
                     "dimension " + std::to_string(total));
    }
  }

  bool all_dec = true;
  std::string undec;
  for (const ProjComplex& c : T.summands) {
    auto [decided, indec] = indecomposable_summand(c);
    if (decided && indec) {
      ++rep.indecomposables;
    } else {
      all_dec = false;
      undec += (undec.empty() ? "" : ", ") + c.name +
               (decided ? " decomposes" : " undecided (endomorphism ring too large)");
    }
  }
  rep.checks.add("T has " + std::to_string(A.vertex_count()) + " indecomposable summands",
                 all_dec && rep.indecomposables == A.vertex_count(),
                 all_dec ? std::to_string(rep.indecomposables) + " summands verified" : undec);

  std::vector<unsigned> I;
  for (unsigned v = 0; v < A.vertex_count(); ++v) I.push_back(v);
  rep.perversity = "∅ ⊂_0 " + vertex_set(A, rep.J) + " ⊂_{-1} " + vertex_set(A, I);

  if (rep.J.empty()) {
    bool shape = true;
    for (const ProjComplex& c : T.summands)
      shape = shape && c.terms.size() == 1 && c.lo == 1;
    rep.checks.add("degenerate form: every summand is a shifted projective", shape, "");
  }
  if (rep.J.size() == A.vertex_count()) {
    bool shape = true;
    for (const ProjComplex& c : T.summands)
      shape = shape && c.terms.size() == 1 && c.lo == 0;
    rep.checks.add("degenerate form: T is the algebra in degree zero", shape,
                   "End dimension " + std::to_string(rep.end_dim));
  }
  return rep;
}

}  // namespace qrep
