#include "qrep/bimod.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace qrep {

namespace {

// Past this total dimension validate() skips the quadratic commuting/ideal
// battery; tensor products enforce those properties through construction
// invariants checked below (relation-space preservation by every outer
// operator), and the factors have been validated in full themselves.
constexpr unsigned kDeepCheckLimit = 120;

// Operator of a raw traversal-order path, no reduction through the basis.
// Left action composes as L(p) = lact[a_k] ... lact[a_1]; the right action is
// contravariant, R(p) = ract[a_1] ... ract[a_k].
Mat raw_path_op(const Bimodule& B, const std::vector<unsigned>& arrows, bool on_left) {
  Mat out = Mat::identity(B.field(), B.total);
  if (on_left) {
    for (unsigned a : arrows) out = B.lact[a] * out;
  } else {
    for (auto it = arrows.rbegin(); it != arrows.rend(); ++it) out = B.ract[*it] * out;
  }
  return out;
}

Mat expr_op(const Bimodule& B, const ElementExpr& e, bool on_left) {
  const Field& f = B.field();
  Mat out(f, B.total, B.total);
  for (const PathTerm& t : e) {
    fel c = f.reduce(t.coeff);
    if (!c) continue;
    Mat m(f, 0, 0);
    if (t.identity)
      m = Mat::identity(f, B.total);
    else if (t.vertex >= 0)
      m = on_left ? B.lproj[static_cast<unsigned>(t.vertex)]
                  : B.rproj[static_cast<unsigned>(t.vertex)];
    else
      m = raw_path_op(B, t.arrows, on_left);
    out = out + m.scaled(c);
  }
  return out;
}

// The defining ideal must annihilate the space from the given side: the
// listed relations, distinct-endpoint vanishing, and the nilpotency bound.
// Path operators are grown level by level (one product per extension) and
// pruned once zero.
void check_ideal_side(const Bimodule& B, bool on_left) {
  const Algebra& A = *B.A;
  const Quiver& q = A.quiver();
  const char* side = on_left ? "left" : "right";
  for (const ElementExpr& rel : A.spec().relations)
    if (!expr_op(B, rel, on_left).is_zero())
      throw spec_error("bimodule '" + B.name + "' violates the relation " +
                       element_expr_to_string(q, rel) + " on the " + side);
  unsigned N = A.spec().nilpotency;
  unsigned zd = A.spec().zero_distinct_length;
  struct Node {
    unsigned s, e;
    Mat op;
  };
  std::vector<Node> cur;
  for (unsigned a = 0; a < q.arrows.size(); ++a)
    cur.push_back({q.arrows[a].src, q.arrows[a].tgt,
                   on_left ? B.lact[a] : B.ract[a]});
  for (unsigned len = 1; len <= N; ++len) {
    if (len > 1) {
      std::vector<Node> next;
      for (const Node& nd : cur)
        for (unsigned a = 0; a < q.arrows.size(); ++a) {
          if (on_left) {
            if (q.arrows[a].src != nd.e) continue;
            next.push_back({nd.s, q.arrows[a].tgt, B.lact[a] * nd.op});
          } else {
            if (q.arrows[a].tgt != nd.s) continue;
            next.push_back({q.arrows[a].src, nd.e, B.ract[a] * nd.op});
          }
        }
      cur = std::move(next);
    }
    std::vector<Node> alive;
    for (Node& nd : cur) {
      if (nd.op.is_zero()) continue;  // extensions stay zero
      if (len == N)
        throw spec_error("bimodule '" + B.name + "' violates the nilpotency bound " +
                         std::to_string(N) + " on the " + side);
      if (zd > 0 && len >= zd && nd.s != nd.e)
        throw spec_error("bimodule '" + B.name +
                         "' violates distinct-endpoint vanishing at length " +
                         std::to_string(len) + " on the " + side);
      alive.push_back(std::move(nd));
    }
    cur = std::move(alive);
    if (cur.empty()) break;
  }
}

// Incremental row span for locating the first offending dependency when a
// generator assignment is inconsistent.
struct VecSpan {
  const Field* f = nullptr;
  std::vector<std::vector<fel>> rows;  // reduced, leading entry 1
  std::vector<unsigned> lead;

  // Reduces v against the span; returns false (and leaves the span unchanged)
  // when v was already in it.
  bool add(std::vector<fel> v) {
    for (unsigned i = 0; i < rows.size(); ++i) {
      fel c = v[lead[i]];
      if (!c) continue;
      for (unsigned j = 0; j < v.size(); ++j)
        if (rows[i][j]) v[j] = f->sub(v[j], f->mul(c, rows[i][j]));
    }
    unsigned l = 0;
    while (l < v.size() && v[l] == 0) ++l;
    if (l == v.size()) return false;
    fel inv = f->inv(v[l]);
    for (fel& x : v) x = f->mul(x, inv);
    rows.push_back(std::move(v));
    lead.push_back(l);
    return true;
  }
};

// Quotient of k^grid by the row space: projection (q x grid) and a section
// (grid x q) built from the rref pivot structure.
void quotient_of_rows(const Field& f, unsigned grid, const Mat& rows, Mat& proj, Mat& lift,
                      unsigned& qdim) {
  RrefResult rr = rref(rows);
  std::vector<bool> is_pivot(grid, false);
  for (unsigned i = 0; i < rr.rank; ++i) is_pivot[rr.pivots[i]] = true;
  std::vector<unsigned> nonpiv;
  for (unsigned c = 0; c < grid; ++c)
    if (!is_pivot[c]) nonpiv.push_back(c);
  qdim = static_cast<unsigned>(nonpiv.size());
  proj = Mat(f, qdim, grid);
  lift = Mat(f, grid, qdim);
  for (unsigned j = 0; j < qdim; ++j) {
    proj.at(j, nonpiv[j]) = 1;
    lift.at(nonpiv[j], j) = 1;
    for (unsigned i = 0; i < rr.rank; ++i)
      proj.at(j, rr.pivots[i]) = f.neg(rr.reduced.at(i, nonpiv[j]));
  }
}

}  // namespace

Mat Bimodule::act_left(const El& x) const {
  const Field& f = field();
  Mat out(f, total, total);
  for (unsigned i = 0; i < x.c.size(); ++i) {
    if (!x.c[i]) continue;
    const Algebra::BPath& bp = A->basis_path(i);
    Mat m = bp.arrows.empty() ? lproj[bp.start] : raw_path_op(*this, bp.arrows, true);
    out = out + m.scaled(x.c[i]);
  }
  return out;
}

Mat Bimodule::act_right(const El& x) const {
  const Field& f = field();
  Mat out(f, total, total);
  for (unsigned i = 0; i < x.c.size(); ++i) {
    if (!x.c[i]) continue;
    const Algebra::BPath& bp = A->basis_path(i);
    Mat m = bp.arrows.empty() ? rproj[bp.start] : raw_path_op(*this, bp.arrows, false);
    out = out + m.scaled(x.c[i]);
  }
  return out;
}

const std::vector<Mat>& Bimodule::basis_left_ops() const {
  if (!lops_.empty()) return lops_;
  unsigned d = A->dim();
  std::vector<unsigned> order(d);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](unsigned i, unsigned j) {
    return A->basis_path(i).arrows.size() < A->basis_path(j).arrows.size();
  });
  std::map<std::vector<unsigned>, unsigned> by_arrows;
  lops_.assign(d, Mat());
  for (unsigned i : order) {
    const Algebra::BPath& bp = A->basis_path(i);
    if (bp.arrows.empty()) {
      lops_[i] = lproj[bp.start];
      continue;
    }
    std::vector<unsigned> prefix(bp.arrows.begin(), bp.arrows.end() - 1);
    auto it = by_arrows.find(prefix);
    lops_[i] = it != by_arrows.end() ? lact[bp.arrows.back()] * lops_[it->second]
                                     : raw_path_op(*this, bp.arrows, true);
    by_arrows.emplace(bp.arrows, i);
  }
  return lops_;
}

const std::vector<Mat>& Bimodule::basis_right_ops() const {
  if (!rops_.empty()) return rops_;
  unsigned d = A->dim();
  std::vector<unsigned> order(d);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](unsigned i, unsigned j) {
    return A->basis_path(i).arrows.size() < A->basis_path(j).arrows.size();
  });
  std::map<std::vector<unsigned>, unsigned> by_arrows;
  rops_.assign(d, Mat());
  for (unsigned i : order) {
    const Algebra::BPath& bp = A->basis_path(i);
    if (bp.arrows.empty()) {
      rops_[i] = rproj[bp.start];
      continue;
    }
    std::vector<unsigned> suffix(bp.arrows.begin() + 1, bp.arrows.end());
    auto it = by_arrows.find(suffix);
    rops_[i] = it != by_arrows.end() ? ract[bp.arrows.front()] * rops_[it->second]
                                     : raw_path_op(*this, bp.arrows, false);
    by_arrows.emplace(bp.arrows, i);
  }
  return rops_;
}

void Bimodule::validate() const {
  const Field& f = field();
  const Quiver& q = A->quiver();
  unsigned nv = q.vertex_count();
  unsigned na = static_cast<unsigned>(q.arrows.size());
  auto bad = [&](const std::string& msg) { throw spec_error("bimodule '" + name + "': " + msg); };
  if (lact.size() != na || ract.size() != na) bad("arrow action count does not match the quiver");
  if (lproj.size() != nv || rproj.size() != nv)
    bad("vertex projection count does not match the quiver");
  auto square = [&](const Mat& m) { return m.rows() == total && m.cols() == total; };
  for (unsigned a = 0; a < na; ++a)
    if (!square(lact[a]) || !square(ract[a]))
      bad("arrow actions must be square of the total dimension");
  for (unsigned v = 0; v < nv; ++v)
    if (!square(lproj[v]) || !square(rproj[v]))
      bad("vertex projections must be square of the total dimension");

  Mat I = Mat::identity(f, total);
  Mat sl(f, total, total), sr(f, total, total);
  for (unsigned v = 0; v < nv; ++v) {
    sl = sl + lproj[v];
    sr = sr + rproj[v];
  }
  if (!(sl == I)) bad("left idempotent operators do not sum to the identity");
  if (!(sr == I)) bad("right idempotent operators do not sum to the identity");
  for (unsigned v = 0; v < nv; ++v) {
    if (!(lproj[v] * lproj[v] == lproj[v]))
      bad("left idempotent operator at '" + q.vertices[v] + "' is not idempotent");
    if (!(rproj[v] * rproj[v] == rproj[v]))
      bad("right idempotent operator at '" + q.vertices[v] + "' is not idempotent");
  }
  for (unsigned v = 0; v < nv; ++v)
    for (unsigned w = v + 1; w < nv; ++w) {
      if (!(lproj[v] * lproj[w]).is_zero() || !(lproj[w] * lproj[v]).is_zero())
        bad("left idempotent operators are not orthogonal");
      if (!(rproj[v] * rproj[w]).is_zero() || !(rproj[w] * rproj[v]).is_zero())
        bad("right idempotent operators are not orthogonal");
    }
  for (unsigned a = 0; a < na; ++a) {
    unsigned s = q.arrows[a].src, t = q.arrows[a].tgt;
    if (!(lproj[t] * lact[a] == lact[a]) || !(lact[a] * lproj[s] == lact[a]))
      bad("left action of '" + q.arrows[a].name + "' is not supported on its blocks");
    if (!(rproj[s] * ract[a] == ract[a]) || !(ract[a] * rproj[t] == ract[a]))
      bad("right action of '" + q.arrows[a].name + "' is not supported on its blocks");
  }
  for (unsigned v = 0; v < nv; ++v)
    for (unsigned w = 0; w < nv; ++w)
      if (!(lproj[v] * rproj[w] == rproj[w] * lproj[v]))
        bad("left and right idempotent operators do not commute");

  if (total > kDeepCheckLimit) return;
  for (unsigned a = 0; a < na; ++a) {
    for (unsigned b = 0; b < na; ++b)
      if (!(lact[a] * ract[b] == ract[b] * lact[a]))
        bad("left action of '" + q.arrows[a].name + "' does not commute with the right action of '" +
            q.arrows[b].name + "'");
    for (unsigned v = 0; v < nv; ++v) {
      if (!(lact[a] * rproj[v] == rproj[v] * lact[a]))
        bad("left action of '" + q.arrows[a].name + "' does not commute with the right grading");
      if (!(ract[a] * lproj[v] == lproj[v] * ract[a]))
        bad("right action of '" + q.arrows[a].name + "' does not commute with the left grading");
    }
  }
  check_ideal_side(*this, true);
  check_ideal_side(*this, false);
}

std::vector<fel> Bimodule::pure_tensor(const std::vector<fel>& x, const std::vector<fel>& y) const {
  if (!tdata) throw std::logic_error("pure_tensor: not a tensor-product bimodule");
  const TensorData& td = *tdata;
  const Field& f = field();
  if (x.size() != td.xdim || y.size() != td.ydim)
    throw std::invalid_argument("pure_tensor: factor coordinate lengths do not match");
  std::vector<fel> g(td.grid, 0);
  for (unsigned w = 0; w < td.goff.size(); ++w) {
    unsigned xc = td.xbasis[w].cols(), yc = td.ybasis[w].cols();
    if (xc == 0 || yc == 0) continue;
    auto alpha = solve(td.xbasis[w], td.xproj[w].apply(x));
    auto beta = solve(td.ybasis[w], td.yproj[w].apply(y));
    if (!alpha || !beta) throw std::logic_error("pure_tensor: piece coordinates failed");
    for (unsigned i = 0; i < xc; ++i) {
      if (!(*alpha)[i]) continue;
      for (unsigned j = 0; j < yc; ++j)
        g[td.goff[w] + i * yc + j] =
            f.add(g[td.goff[w] + i * yc + j], f.mul((*alpha)[i], (*beta)[j]));
    }
  }
  return td.proj.apply(g);
}

Bimodule regular_bimodule(const Algebra& A) {
  Bimodule B;
  B.A = &A;
  B.name = A.name();
  B.total = A.dim();
  const Quiver& q = A.quiver();
  for (unsigned a = 0; a < q.arrows.size(); ++a) {
    B.lact.push_back(A.left_mult(A.arrow_el(a)));
    B.ract.push_back(A.right_mult(A.arrow_el(a)));
  }
  for (unsigned v = 0; v < q.vertex_count(); ++v) {
    B.lproj.push_back(A.left_mult(A.idem(v)));
    B.rproj.push_back(A.right_mult(A.idem(v)));
  }
  B.validate();
  return B;
}

Bimodule twisted_bimodule(const Algebra& A, const Automorphism& sigma) {
  if (sigma.A != &A) throw std::invalid_argument("twisted_bimodule: automorphism on a different algebra");
  Bimodule B;
  B.A = &A;
  B.name = sigma.name + "(" + A.name() + ")";
  B.total = A.dim();
  const Quiver& q = A.quiver();
  for (unsigned a = 0; a < q.arrows.size(); ++a) {
    B.lact.push_back(A.left_mult(sigma.apply(A.arrow_el(a))));
    B.ract.push_back(A.right_mult(A.arrow_el(a)));
  }
  for (unsigned v = 0; v < q.vertex_count(); ++v) {
    B.lproj.push_back(A.left_mult(sigma.apply(A.idem(v))));
    B.rproj.push_back(A.right_mult(A.idem(v)));
  }
  B.validate();
  return B;
}

Bimodule tensor_bimodule(const Bimodule& X, const Bimodule& Y, const Subalgebra& S,
                         const Automorphism* tau, const std::string& name) {
  if (X.A != Y.A) throw std::invalid_argument("tensor_bimodule: factors over different algebras");
  const Algebra& A = *X.A;
  if (S.big != &A) throw std::invalid_argument("tensor_bimodule: subalgebra of a different algebra");
  if (tau && tau->A != &S.small)
    throw std::invalid_argument("tensor_bimodule: twist must live on the presented subalgebra");
  const Field& f = A.field();
  const Algebra& SA = S.small;
  const Quiver& sq = SA.quiver();
  unsigned nw = SA.vertex_count();

  El unit = A.zero();
  for (unsigned w = 0; w < nw; ++w) unit = A.add(unit, S.vertex_idem[w]);
  if (!(unit == A.one()))
    throw spec_error("tensor over '" + SA.name() +
                     "': subalgebra idempotents do not sum to the identity");

  Bimodule T;
  T.A = &A;
  T.name = name;
  Bimodule::TensorData td;
  td.xdim = X.total;
  td.ydim = Y.total;
  td.pair_v.resize(nw);
  td.xproj.resize(nw);
  td.yproj.resize(nw);
  td.xbasis.resize(nw);
  td.ybasis.resize(nw);
  td.goff.resize(nw);
  unsigned grid = 0;
  for (unsigned w = 0; w < nw; ++w) {
    unsigned tw = tau ? tau->vimg(w) : w;
    td.pair_v[w] = tw;
    td.xproj[w] = X.act_right(S.vertex_idem[w]);
    td.yproj[w] = Y.act_left(S.vertex_idem[tw]);
    td.xbasis[w] = column_basis(td.xproj[w]);
    td.ybasis[w] = column_basis(td.yproj[w]);
    td.goff[w] = grid;
    grid += td.xbasis[w].cols() * td.ybasis[w].cols();
  }
  td.grid = grid;

  // Balancing rows: (x . i(z)) (x) y  -  x (x) (i(tau z)) . y per subalgebra
  // arrow z, across the slot bases it connects.
  std::vector<std::vector<fel>> rowv;
  for (unsigned z = 0; z < sq.arrows.size(); ++z) {
    unsigned w = sq.arrows[z].src, wp = sq.arrows[z].tgt;
    El zeta = S.arrow_img[z];
    El tzeta = tau ? S.image(tau->apply(SA.arrow_el(z))) : zeta;
    unsigned xw = td.xbasis[w].cols(), yw = td.ybasis[w].cols();
    unsigned xp = td.xbasis[wp].cols(), yp = td.ybasis[wp].cols();
    if (xp == 0 || yw == 0) continue;
    auto xs = solve_many(td.xbasis[w], X.act_right(zeta) * td.xbasis[wp]);
    auto ys = solve_many(td.ybasis[wp], Y.act_left(tzeta) * td.ybasis[w]);
    if (!xs || !ys)
      throw std::logic_error("tensor_bimodule: balancing images left their pieces");
    for (unsigned i = 0; i < xp; ++i)
      for (unsigned j = 0; j < yw; ++j) {
        std::vector<fel> row(grid, 0);
        for (unsigned k = 0; k < xw; ++k)
          row[td.goff[w] + k * yw + j] = xs->at(k, i);
        for (unsigned l = 0; l < yp; ++l) {
          unsigned c = td.goff[wp] + i * yp + l;
          row[c] = f.sub(row[c], ys->at(l, j));
        }
        rowv.push_back(std::move(row));
      }
  }
  Mat rows(f, static_cast<unsigned>(rowv.size()), grid);
  for (unsigned r = 0; r < rowv.size(); ++r) rows.set_row(r, rowv[r]);

  quotient_of_rows(f, grid, rows, td.proj, td.lift, T.total);
  Mat relcols = rows.transpose();

  // Outer operators on the grid: the left structure acts slotwise on the X
  // legs, the right structure on the Y legs.
  auto x_grid_op = [&](const Mat& big) {
    Mat G(f, grid, grid);
    for (unsigned w = 0; w < nw; ++w) {
      unsigned xc = td.xbasis[w].cols(), yc = td.ybasis[w].cols();
      if (xc == 0 || yc == 0) continue;
      auto s = solve_many(td.xbasis[w], big * td.xbasis[w]);
      if (!s) throw std::logic_error("tensor_bimodule: outer action left an X piece");
      for (unsigned i2 = 0; i2 < xc; ++i2)
        for (unsigned i = 0; i < xc; ++i) {
          fel c = s->at(i2, i);
          if (!c) continue;
          for (unsigned j = 0; j < yc; ++j)
            G.at(td.goff[w] + i2 * yc + j, td.goff[w] + i * yc + j) = c;
        }
    }
    return G;
  };
  auto y_grid_op = [&](const Mat& big) {
    Mat G(f, grid, grid);
    for (unsigned w = 0; w < nw; ++w) {
      unsigned xc = td.xbasis[w].cols(), yc = td.ybasis[w].cols();
      if (xc == 0 || yc == 0) continue;
      auto s = solve_many(td.ybasis[w], big * td.ybasis[w]);
      if (!s) throw std::logic_error("tensor_bimodule: outer action left a Y piece");
      for (unsigned i = 0; i < xc; ++i)
        for (unsigned j2 = 0; j2 < yc; ++j2)
          for (unsigned j = 0; j < yc; ++j)
            G.at(td.goff[w] + i * yc + j2, td.goff[w] + i * yc + j) = s->at(j2, j);
    }
    return G;
  };
  auto push_op = [&](const Mat& G) {
    Mat QG = td.proj * G;
    if (relcols.cols() > 0 && !(QG * relcols).is_zero())
      throw std::logic_error("tensor_bimodule: an outer action does not preserve the balancing relations");
    return QG * td.lift;
  };

  const Quiver& q = A.quiver();
  for (unsigned a = 0; a < q.arrows.size(); ++a) {
    T.lact.push_back(push_op(x_grid_op(X.lact[a])));
    T.ract.push_back(push_op(y_grid_op(Y.ract[a])));
  }
  for (unsigned v = 0; v < q.vertex_count(); ++v) {
    T.lproj.push_back(push_op(x_grid_op(X.lproj[v])));
    T.rproj.push_back(push_op(y_grid_op(Y.rproj[v])));
  }
  T.tdata = std::move(td);
  T.validate();
  return T;
}

BimoduleMap make_bimodule_map(const Bimodule& src, const Bimodule& dst, const std::string& name,
                              const std::vector<std::pair<std::vector<fel>, std::vector<fel>>>& gens) {
  if (src.A != dst.A)
    throw std::invalid_argument("make_bimodule_map: source and target over different algebras");
  const Algebra& A = *src.A;
  const Field& f = A.field();
  unsigned d = A.dim();
  for (const auto& g : gens)
    if (g.first.size() != src.total || g.second.size() != dst.total)
      throw std::invalid_argument("make_bimodule_map: generator coordinate lengths do not match");
  if (gens.empty()) throw std::invalid_argument("make_bimodule_map: no generators");

  const std::vector<Mat>& Ls = src.basis_left_ops();
  const std::vector<Mat>& Rs = src.basis_right_ops();
  const std::vector<Mat>& Ld = dst.basis_left_ops();
  const std::vector<Mat>& Rd = dst.basis_right_ops();

  struct Col {
    unsigned gen, i, j;
  };
  std::vector<Col> provenance;
  std::vector<std::vector<fel>> phicols, psicols;
  for (unsigned g = 0; g < gens.size(); ++g)
    for (unsigned i = 0; i < d; ++i)
      for (unsigned j = 0; j < d; ++j) {
        std::vector<fel> pc = Ls[i].apply(Rs[j].apply(gens[g].first));
        std::vector<fel> qc = Ld[i].apply(Rd[j].apply(gens[g].second));
        bool pz = std::all_of(pc.begin(), pc.end(), [](fel x) { return x == 0; });
        bool qz = std::all_of(qc.begin(), qc.end(), [](fel x) { return x == 0; });
        if (pz && qz) continue;
        provenance.push_back({g, i, j});
        phicols.push_back(std::move(pc));
        psicols.push_back(std::move(qc));
      }

  unsigned nc = static_cast<unsigned>(phicols.size());
  Mat phi(f, src.total, nc), psi(f, dst.total, nc);
  for (unsigned c = 0; c < nc; ++c) {
    phi.set_col(c, phicols[c]);
    psi.set_col(c, psicols[c]);
  }
  unsigned rphi = rank(phi);
  if (rphi != src.total)
    throw spec_error("bimodule map '" + name + "': generators span only " +
                     std::to_string(rphi) + " of " + std::to_string(src.total) +
                     " source dimensions");
  if (rank(Mat::vstack(phi, psi)) != rphi) {
    // Locate the first translate whose image breaks a dependency.
    VecSpan sp_phi{&f, {}, {}}, sp_joint{&f, {}, {}};
    for (unsigned c = 0; c < nc; ++c) {
      std::vector<fel> joint = phicols[c];
      joint.insert(joint.end(), psicols[c].begin(), psicols[c].end());
      bool new_phi = sp_phi.add(phicols[c]);
      bool new_joint = sp_joint.add(joint);
      if (!new_phi && new_joint) {
        const Col& p = provenance[c];
        throw spec_error("bimodule map '" + name + "' is not well-defined: the translate of generator " +
                         std::to_string(p.gen + 1) + " by (" + A.basis_name(p.i) + ", " +
                         A.basis_name(p.j) + ") breaks a relation that holds in the source");
      }
    }
    throw spec_error("bimodule map '" + name + "' is not well-defined");
  }
  auto mt = solve_many(phi.transpose(), psi.transpose());
  if (!mt) throw std::logic_error("make_bimodule_map: solve failed after rank checks");
  BimoduleMap out{&src, &dst, name, mt->transpose()};

  // Paranoia: the solved matrix must intertwine both structures exactly.
  const Quiver& q = A.quiver();
  for (unsigned a = 0; a < q.arrows.size(); ++a)
    if (!(out.m * src.lact[a] == dst.lact[a] * out.m) ||
        !(out.m * src.ract[a] == dst.ract[a] * out.m))
      throw std::logic_error("make_bimodule_map: solved map fails to intertwine an arrow action");
  for (unsigned v = 0; v < q.vertex_count(); ++v)
    if (!(out.m * src.lproj[v] == dst.lproj[v] * out.m) ||
        !(out.m * src.rproj[v] == dst.rproj[v] * out.m))
      throw std::logic_error("make_bimodule_map: solved map fails to intertwine a grading");
  return out;
}

BimoduleMap compose(const BimoduleMap& g, const BimoduleMap& f) {
  if (f.dst != g.src) throw std::invalid_argument("compose: bimodule maps do not chain");
  return {f.src, g.dst, g.name + "*" + f.name, g.m * f.m};
}

bool is_zero(const BimoduleMap& f) { return f.m.is_zero(); }

bool chain_is_complex(const std::vector<Mat>& maps) {
  for (unsigned i = 0; i + 1 < maps.size(); ++i) {
    if (maps[i + 1].cols() != maps[i].rows())
      throw std::invalid_argument("chain_is_complex: map shapes do not chain");
    if (!(maps[i + 1] * maps[i]).is_zero()) return false;
  }
  return true;
}

std::vector<unsigned> chain_homology(const std::vector<unsigned>& dims, const std::vector<Mat>& maps) {
  if (dims.size() != maps.size() + 1)
    throw std::invalid_argument("chain_homology: need one dimension per term");
  for (unsigned i = 0; i < maps.size(); ++i)
    if (maps[i].cols() != dims[i] || maps[i].rows() != dims[i + 1])
      throw std::invalid_argument("chain_homology: map shapes do not match the terms");
  if (!chain_is_complex(maps)) throw std::invalid_argument("chain_homology: not a complex");
  std::vector<unsigned> H(dims.size(), 0);
  if (maps.empty()) {
    H[0] = dims[0];
    return H;
  }
  std::vector<unsigned> r(maps.size());
  for (unsigned i = 0; i < maps.size(); ++i) r[i] = rank(maps[i]);
  H[0] = dims[0] - r[0];
  for (unsigned i = 1; i < maps.size(); ++i) H[i] = dims[i] - r[i] - r[i - 1];
  H[dims.size() - 1] = dims.back() - r.back();
  return H;
}

bool is_complex(const std::vector<const BimoduleMap*>& maps) {
  for (unsigned i = 0; i + 1 < maps.size(); ++i)
    if (maps[i]->dst != maps[i + 1]->src)
      throw std::invalid_argument("is_complex: maps do not chain");
  std::vector<Mat> ms;
  for (const BimoduleMap* m : maps) ms.push_back(m->m);
  return chain_is_complex(ms);
}

std::vector<unsigned> homology_dims(const std::vector<const BimoduleMap*>& maps) {
  if (maps.empty()) throw std::invalid_argument("homology_dims: empty chain");
  std::vector<unsigned> dims{maps.front()->src->total};
  std::vector<Mat> ms;
  for (unsigned i = 0; i < maps.size(); ++i) {
    if (i + 1 < maps.size() && maps[i]->dst != maps[i + 1]->src)
      throw std::invalid_argument("homology_dims: maps do not chain");
    dims.push_back(maps[i]->dst->total);
    ms.push_back(maps[i]->m);
  }
  if (!chain_is_complex(ms)) throw spec_error("homology_dims: maps do not form a complex");
  return chain_homology(dims, ms);
}

namespace {

// Shared core of the two one-sided collapses.  `left` selects Y (x)_A M for a
// left module M (result graded by Y's left grading); otherwise N (x)_A Y for
// a right module N (result graded by Y's right grading).  Pieces are indexed
// [result grade w][inner grade v], and a grid slot (w, v) orders its
// coordinates as (piece basis index) * dims[v] + (module coordinate).
ModuleTensor collapse(const Bimodule& Y, const Representation& M, bool left,
                      const std::string& name) {
  if (M.A != Y.A) throw std::invalid_argument("module tensor: different algebras");
  if (M.left != left) throw std::invalid_argument("module tensor: module is on the wrong side");
  const Algebra& A = *Y.A;
  const Field& f = A.field();
  const Quiver& q = A.quiver();
  unsigned nv = q.vertex_count();

  ModuleTensor out;
  out.bimod = &Y;
  out.left = left;
  out.other_dims = M.dims;
  out.piece.assign(nv, std::vector<Mat>(nv, Mat()));
  out.goff.assign(nv, std::vector<unsigned>(nv, 0));
  out.griddim.assign(nv, 0);
  out.proj.resize(nv);
  out.lift.resize(nv);
  for (unsigned w = 0; w < nv; ++w) {
    unsigned g = 0;
    for (unsigned v = 0; v < nv; ++v) {
      out.piece[w][v] =
          column_basis(left ? Y.lproj[w] * Y.rproj[v] : Y.lproj[v] * Y.rproj[w]);
      out.goff[w][v] = g;
      g += out.piece[w][v].cols() * M.dims[v];
    }
    out.griddim[w] = g;
  }

  // Balancing rows per result grade; the relation span is kept to certify
  // that each outer action descends.
  std::vector<Mat> relcols(nv);
  Representation& R = out.rep;
  R.A = &A;
  R.left = left;
  R.name = name;
  R.dims.assign(nv, 0);
  for (unsigned w = 0; w < nv; ++w) {
    std::vector<std::vector<fel>> rowv;
    for (unsigned a = 0; a < q.arrows.size(); ++a) {
      unsigned s = q.arrows[a].src, t = q.arrows[a].tgt;
      if (left) {
        // (y.a) (x) m - y (x) (a.m): y in e_w Y e_t, m in M_s.
        unsigned yt = out.piece[w][t].cols(), ys = out.piece[w][s].cols();
        if (yt == 0 || M.dims[s] == 0) continue;
        auto alpha = solve_many(out.piece[w][s], Y.ract[a] * out.piece[w][t]);
        if (!alpha) throw std::logic_error("module tensor: right action left its piece");
        for (unsigned i = 0; i < yt; ++i)
          for (unsigned j = 0; j < M.dims[s]; ++j) {
            std::vector<fel> row(out.griddim[w], 0);
            for (unsigned k = 0; k < ys; ++k)
              row[out.goff[w][s] + k * M.dims[s] + j] = alpha->at(k, i);
            for (unsigned l = 0; l < M.dims[t]; ++l) {
              unsigned c = out.goff[w][t] + i * M.dims[t] + l;
              row[c] = f.sub(row[c], M.act[a].at(l, j));
            }
            rowv.push_back(std::move(row));
          }
      } else {
        // (n.a) (x) y - n (x) (a.y): n in N_t, y in e_s Y e_w.
        unsigned ys = out.piece[w][s].cols(), yt = out.piece[w][t].cols();
        if (ys == 0 || M.dims[t] == 0) continue;
        auto beta = solve_many(out.piece[w][t], Y.lact[a] * out.piece[w][s]);
        if (!beta) throw std::logic_error("module tensor: left action left its piece");
        for (unsigned i = 0; i < ys; ++i)
          for (unsigned j = 0; j < M.dims[t]; ++j) {
            std::vector<fel> row(out.griddim[w], 0);
            for (unsigned k = 0; k < M.dims[s]; ++k)
              row[out.goff[w][s] + i * M.dims[s] + k] = M.act[a].at(k, j);
            for (unsigned i2 = 0; i2 < yt; ++i2) {
              unsigned c = out.goff[w][t] + i2 * M.dims[t] + j;
              row[c] = f.sub(row[c], beta->at(i2, i));
            }
            rowv.push_back(std::move(row));
          }
      }
    }
    Mat rows(f, static_cast<unsigned>(rowv.size()), out.griddim[w]);
    for (unsigned r = 0; r < rowv.size(); ++r) rows.set_row(r, rowv[r]);
    quotient_of_rows(f, out.griddim[w], rows, out.proj[w], out.lift[w], R.dims[w]);
    relcols[w] = rows.transpose();
  }

  R.act.assign(q.arrows.size(), Mat());
  for (unsigned a = 0; a < q.arrows.size(); ++a) {
    unsigned s = q.arrows[a].src, t = q.arrows[a].tgt;
    unsigned from = left ? s : t, to = left ? t : s;  // result grades
    Mat G(f, out.griddim[to], out.griddim[from]);
    for (unsigned v = 0; v < nv; ++v) {
      unsigned fc = out.piece[from][v].cols(), tc = out.piece[to][v].cols();
      if (fc == 0 || M.dims[v] == 0) continue;
      Mat moved = (left ? Y.lact[a] : Y.ract[a]) * out.piece[from][v];
      auto sm = solve_many(out.piece[to][v], moved);
      if (!sm) throw std::logic_error("module tensor: outer action left its piece");
      for (unsigned i2 = 0; i2 < tc; ++i2)
        for (unsigned i = 0; i < fc; ++i) {
          fel c = sm->at(i2, i);
          if (!c) continue;
          for (unsigned j = 0; j < M.dims[v]; ++j)
            G.at(out.goff[to][v] + i2 * M.dims[v] + j, out.goff[from][v] + i * M.dims[v] + j) = c;
        }
    }
    Mat QG = out.proj[to] * G;
    if (relcols[from].cols() > 0 && !(QG * relcols[from]).is_zero())
      throw std::logic_error("module tensor: outer action does not preserve the balancing relations");
    R.act[a] = QG * out.lift[from];
  }
  R.finalize();
  return out;
}

}  // namespace

ModuleTensor tensor_with_left_module(const Bimodule& Y, const Representation& M,
                                     const std::string& name) {
  return collapse(Y, M, true, name);
}

ModuleTensor tensor_with_right_module(const Representation& N, const Bimodule& Y,
                                      const std::string& name) {
  return collapse(Y, N, false, name);
}

Mat induced_map(const ModuleTensor& src, const ModuleTensor& dst, const BimoduleMap& d) {
  if (src.bimod != d.src || dst.bimod != d.dst)
    throw std::invalid_argument("induced_map: collapse ends do not match the bimodule map");
  if (src.left != dst.left || src.other_dims != dst.other_dims)
    throw std::invalid_argument("induced_map: collapses of different one-sided modules");
  const Field& f = d.src->field();
  unsigned nv = static_cast<unsigned>(src.other_dims.size());
  Mat out(f, dst.rep.total, src.rep.total);
  for (unsigned w = 0; w < nv; ++w) {
    Mat G(f, dst.griddim[w], src.griddim[w]);
    for (unsigned v = 0; v < nv; ++v) {
      unsigned md = src.other_dims[v];
      unsigned fc = src.piece[w][v].cols(), tc = dst.piece[w][v].cols();
      if (fc == 0 || md == 0) continue;
      auto sm = solve_many(dst.piece[w][v], d.m * src.piece[w][v]);
      if (!sm) throw std::logic_error("induced_map: image left the target piece");
      for (unsigned i2 = 0; i2 < tc; ++i2)
        for (unsigned i = 0; i < fc; ++i) {
          fel c = sm->at(i2, i);
          if (!c) continue;
          for (unsigned j = 0; j < md; ++j)
            G.at(dst.goff[w][v] + i2 * md + j, src.goff[w][v] + i * md + j) = c;
        }
    }
    Mat QG = dst.proj[w] * G;
    Mat block = QG * src.lift[w];
    // Well-definedness on the quotient: the square with the two projections
    // must commute, i.e. G carries the source balancing span into the
    // target's.
    if (!(block * src.proj[w] == QG))
      throw std::logic_error("induced_map: bimodule map does not descend to the collapse");
    for (unsigned r = 0; r < block.rows(); ++r)
      for (unsigned c = 0; c < block.cols(); ++c)
        out.at(dst.rep.offs[w] + r, src.rep.offs[w] + c) = block.at(r, c);
  }
  ModuleHom h{&src.rep, &dst.rep, out};
  validate_hom(h);
  return out;
}

}  // namespace qrep
