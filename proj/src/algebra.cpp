#include "qrep/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <random>
#include <sstream>

namespace qrep {

// ---------------------------------------------------------------------------
// Quiver

int Quiver::vertex_index(const std::string& label) const {
  for (unsigned i = 0; i < vertices.size(); ++i)
    if (vertices[i] == label) return static_cast<int>(i);
  return -1;
}

int Quiver::arrow_index(const std::string& name) const {
  for (unsigned i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return static_cast<int>(i);
  return -1;
}

void Quiver::validate() const {
  for (unsigned i = 0; i < vertices.size(); ++i)
    for (unsigned j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j])
        throw spec_error("duplicate vertex label '" + vertices[i] + "'");
  for (unsigned i = 0; i < arrows.size(); ++i) {
    const Arrow& a = arrows[i];
    if (a.src >= vertices.size() || a.tgt >= vertices.size())
      throw spec_error("arrow '" + a.name + "' has an endpoint outside the declared vertices");
    for (unsigned j = i + 1; j < arrows.size(); ++j)
      if (arrows[j].name == a.name)
        throw spec_error("duplicate arrow name '" + a.name + "'");
    if (vertex_index(a.name) >= 0)
      throw spec_error("arrow name '" + a.name + "' collides with a vertex label");
  }
}

// ---------------------------------------------------------------------------
// Element expression parsing

namespace {

struct ExprToken {
  enum Kind { Name, Number, Star, Plus, Minus, End } kind;
  std::string text;
  std::size_t pos;
};

std::vector<ExprToken> lex_expr(const std::string& s) {
  std::vector<ExprToken> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) { ++i; continue; }
    if (ch == '*') { out.push_back({ExprToken::Star, "*", i}); ++i; continue; }
    if (ch == '+') { out.push_back({ExprToken::Plus, "+", i}); ++i; continue; }
    if (ch == '-') { out.push_back({ExprToken::Minus, "-", i}); ++i; continue; }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({ExprToken::Number, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({ExprToken::Name, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    throw spec_error("unexpected character '" + std::string(1, ch) + "' at offset " +
                     std::to_string(i) + " in element expression");
  }
  out.push_back({ExprToken::End, "", s.size()});
  return out;
}

} // namespace

ElementExpr parse_element_expr(const Quiver& q, const std::string& text) {
  std::vector<ExprToken> toks = lex_expr(text);
  ElementExpr expr;
  std::size_t i = 0;
  bool first = true;
  while (toks[i].kind != ExprToken::End) {
    long long sign = 1;
    if (toks[i].kind == ExprToken::Plus || toks[i].kind == ExprToken::Minus) {
      sign = toks[i].kind == ExprToken::Minus ? -1 : 1;
      ++i;
    } else if (!first) {
      throw spec_error("expected '+' or '-' at offset " + std::to_string(toks[i].pos) +
                       " in element expression");
    }
    first = false;

    PathTerm term;
    term.coeff = sign;
    bool saw_factor = false;
    bool want_factor = true;
    unsigned factor_count = 0;
    while (want_factor) {
      const ExprToken& t = toks[i];
      if (t.kind == ExprToken::Number) {
        if (t.text == "1") {
          // the identity element as a factor: a no-op inside a product
          if (factor_count == 0 && toks[i + 1].kind != ExprToken::Star) term.identity = true;
        } else if (factor_count == 0) {
          term.coeff *= std::stoll(t.text);
        } else {
          throw spec_error("numeric factor inside a path product at offset " +
                           std::to_string(t.pos));
        }
        ++i;
      } else if (t.kind == ExprToken::Name) {
        int a = q.arrow_index(t.text);
        if (a >= 0) {
          if (term.vertex >= 0)
            throw spec_error("idempotent mixed into a path product at offset " +
                             std::to_string(t.pos));
          if (!term.arrows.empty() &&
              q.arrows[term.arrows.back()].tgt != q.arrows[a].src)
            throw spec_error("non-composable path at offset " + std::to_string(t.pos) +
                             ": '" + t.text + "' does not start where the previous arrow ends");
          term.arrows.push_back(static_cast<unsigned>(a));
        } else if (t.text.size() > 1 && t.text[0] == 'e' &&
                   q.vertex_index(t.text.substr(1)) >= 0) {
          if (!term.arrows.empty() || term.vertex >= 0)
            throw spec_error("idempotent mixed into a path product at offset " +
                             std::to_string(t.pos));
          term.vertex = q.vertex_index(t.text.substr(1));
        } else {
          throw spec_error("unknown name '" + t.text + "' at offset " + std::to_string(t.pos));
        }
        ++i;
      } else {
        throw spec_error("expected a factor at offset " + std::to_string(t.pos));
      }
      saw_factor = true;
      ++factor_count;
      if (toks[i].kind == ExprToken::Star) {
        ++i;
        want_factor = true;
      } else {
        want_factor = false;
      }
    }
    if (!saw_factor)
      throw spec_error("empty term in element expression");
    if (term.arrows.empty() && term.vertex < 0 && !term.identity) {
      // bare number other than 1: a scalar multiple of the identity
      term.identity = true;
    }
    expr.push_back(std::move(term));
  }
  if (expr.empty()) throw spec_error("empty element expression");
  return expr;
}

std::string element_expr_to_string(const Quiver& q, const ElementExpr& e) {
  std::ostringstream os;
  bool first = true;
  for (const PathTerm& t : e) {
    long long c = t.coeff;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    long long mag = c < 0 ? -c : c;
    if (mag != 1) os << mag << "*";
    if (t.identity) {
      os << "1";
    } else if (t.vertex >= 0) {
      os << "e" << q.vertices[t.vertex];
    } else {
      for (unsigned k = 0; k < t.arrows.size(); ++k) {
        if (k) os << "*";
        os << q.arrows[t.arrows[k]].name;
      }
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Incremental row reduction used by the ideal saturation

namespace {

// Maintains a fully reduced row basis with deterministic leftmost pivots.
class RrefAccum {
public:
  explicit RrefAccum(const Field& f, unsigned cols) : f_(f), cols_(cols) {}

  // Reduces v against the current rows.  If a nonzero remainder is left, it
  // is normalized, existing rows are cleared at its pivot, the row is stored,
  // and a copy is returned; otherwise nullopt.
  std::optional<std::vector<fel>> insert(std::vector<fel> v) {
    reduce(v);
    unsigned pc = cols_;
    for (unsigned j = 0; j < cols_; ++j)
      if (v[j]) { pc = j; break; }
    if (pc == cols_) return std::nullopt;
    fel iv = f_.inv(v[pc]);
    if (iv != 1)
      for (unsigned j = pc; j < cols_; ++j) v[j] = f_.mul(v[j], iv);
    for (auto& [rpc, row] : rows_) {
      fel c = row[pc];
      if (!c) continue;
      for (unsigned j = pc; j < cols_; ++j)
        if (v[j]) row[j] = f_.sub(row[j], f_.mul(c, v[j]));
    }
    rows_.emplace(pc, v);
    return v;
  }

  bool reduces_to_zero(std::vector<fel> v) const {
    reduce(v);
    for (fel x : v)
      if (x) return false;
    return true;
  }

  const std::map<unsigned, std::vector<fel>>& rows() const { return rows_; }
  unsigned rank() const { return static_cast<unsigned>(rows_.size()); }

private:
  void reduce(std::vector<fel>& v) const {
    for (const auto& [pc, row] : rows_) {
      fel c = v[pc];
      if (!c) continue;
      for (unsigned j = pc; j < cols_; ++j)
        if (row[j]) v[j] = f_.sub(v[j], f_.mul(c, row[j]));
    }
  }

  const Field& f_;
  unsigned cols_;
  std::map<unsigned, std::vector<fel>> rows_; // keyed by pivot column
};

} // namespace

// ---------------------------------------------------------------------------
// Algebra build

Algebra Algebra::build(const AlgebraSpec& spec) {
  Algebra A;
  A.spec_ = spec;
  A.f_ = Field(spec.characteristic);
  const Quiver& q = spec.quiver;
  q.validate();
  if (q.vertices.empty()) throw spec_error("algebra needs at least one vertex");
  if (spec.nilpotency < 2) throw spec_error("nilpotency bound must be at least 2");
  const unsigned N = spec.nilpotency;
  const Field& f = A.f_;

  // Enumerate all composable paths of length < N, shortest first, then
  // lexicographic by arrow indices (deterministic basis order).
  struct PInfo {
    unsigned start, end;
    std::vector<unsigned> arrows;
  };
  std::vector<PInfo> paths;
  std::map<std::vector<unsigned>, unsigned> path_id; // nonempty arrow seqs
  for (unsigned v = 0; v < q.vertex_count(); ++v)
    paths.push_back({v, v, {}});
  {
    std::vector<std::vector<unsigned>> frontier; // arrow sequences
    for (unsigned a = 0; a < q.arrows.size(); ++a) frontier.push_back({a});
    for (unsigned len = 1; len < N && !frontier.empty(); ++len) {
      std::sort(frontier.begin(), frontier.end());
      std::vector<std::vector<unsigned>> next;
      for (auto& p : frontier) {
        unsigned end = q.arrows[p.back()].tgt;
        path_id[p] = static_cast<unsigned>(paths.size());
        paths.push_back({q.arrows[p.front()].src, end, p});
        if (len + 1 < N) {
          for (unsigned a = 0; a < q.arrows.size(); ++a)
            if (q.arrows[a].src == end) {
              auto np = p;
              np.push_back(a);
              next.push_back(std::move(np));
            }
        }
      }
      frontier = std::move(next);
    }
  }
  const unsigned npaths = static_cast<unsigned>(paths.size());
  auto lookup = [&](const std::vector<unsigned>& arrows) -> int {
    if (arrows.empty()) throw spec_error("internal: empty path lookup");
    if (arrows.size() >= N) return -1;
    auto it = path_id.find(arrows);
    return it == path_id.end() ? -1 : static_cast<int>(it->second);
  };

  // Ideal generators as vectors over the path space.
  std::vector<std::vector<fel>> gens;
  auto term_vec = [&](const ElementExpr& rel, const char* what) {
    std::vector<fel> v(npaths, 0);
    int rs = -1, re = -1;
    for (const PathTerm& t : rel) {
      if (t.identity || t.vertex >= 0 || t.arrows.size() < 2)
        throw spec_error(std::string(what) +
                         " must be a combination of paths of length >= 2 (admissibility)");
      unsigned s = q.arrows[t.arrows.front()].src;
      unsigned e = q.arrows[t.arrows.back()].tgt;
      if (rs < 0) { rs = static_cast<int>(s); re = static_cast<int>(e); }
      else if (rs != static_cast<int>(s) || re != static_cast<int>(e))
        throw spec_error(std::string(what) + " mixes non-parallel paths ('" +
                         element_expr_to_string(q, rel) + "')");
      int id = lookup(t.arrows);
      if (id < 0) continue; // beyond the nilpotency bound: already zero
      v[id] = f.add(v[id], f.reduce(t.coeff));
    }
    return v;
  };
  for (const ElementExpr& rel : spec.relations) gens.push_back(term_vec(rel, "relation"));
  if (spec.zero_distinct_length > 0 && spec.zero_distinct_length < N) {
    for (unsigned pid = 0; pid < npaths; ++pid) {
      const PInfo& p = paths[pid];
      if (p.arrows.size() == spec.zero_distinct_length && p.start != p.end) {
        std::vector<fel> v(npaths, 0);
        v[pid] = 1;
        gens.push_back(std::move(v));
      }
    }
  }

  // Saturate to the two-sided ideal: close under one-arrow extensions.
  RrefAccum ideal(f, npaths);
  std::deque<std::vector<fel>> work;
  for (auto& g : gens)
    if (auto r = ideal.insert(std::move(g))) work.push_back(std::move(*r));
  while (!work.empty()) {
    std::vector<fel> row = std::move(work.front());
    work.pop_front();
    for (unsigned a = 0; a < q.arrows.size(); ++a) {
      std::vector<fel> pre(npaths, 0), post(npaths, 0);
      bool any_pre = false, any_post = false;
      for (unsigned pid = 0; pid < npaths; ++pid) {
        if (!row[pid]) continue;
        const PInfo& p = paths[pid];
        if (q.arrows[a].tgt == p.start) { // arrow, then path
          std::vector<unsigned> np;
          np.reserve(p.arrows.size() + 1);
          np.push_back(a);
          np.insert(np.end(), p.arrows.begin(), p.arrows.end());
          int id = lookup(np);
          if (id >= 0) { pre[id] = f.add(pre[id], row[pid]); any_pre = true; }
        }
        if (p.end == q.arrows[a].src) { // path, then arrow
          std::vector<unsigned> np = p.arrows;
          np.push_back(a);
          int id = lookup(np);
          if (id >= 0) { post[id] = f.add(post[id], row[pid]); any_post = true; }
        }
      }
      if (any_pre)
        if (auto r = ideal.insert(std::move(pre))) work.push_back(std::move(*r));
      if (any_post)
        if (auto r = ideal.insert(std::move(post))) work.push_back(std::move(*r));
    }
  }

  // Basis = non-pivot paths; pivots must all be honest radical-square paths.
  std::vector<int> basis_of_path(npaths, -1);
  {
    std::vector<bool> is_pivot(npaths, false);
    for (const auto& [pc, row] : ideal.rows()) {
      (void)row;
      if (paths[pc].arrows.size() < 2)
        throw spec_error("ideal touches a path of length < 2; relations are not admissible");
      is_pivot[pc] = true;
    }
    for (unsigned pid = 0; pid < npaths; ++pid)
      if (!is_pivot[pid]) {
        basis_of_path[pid] = static_cast<int>(A.basis_.size());
        A.basis_.push_back({paths[pid].start, paths[pid].end, paths[pid].arrows});
      }
  }
  const unsigned dim = A.dim();

  // Reduction of every enumerated path to a combination of basis residues.
  std::vector<Sparse> reduce_of_path(npaths);
  for (unsigned pid = 0; pid < npaths; ++pid) {
    if (basis_of_path[pid] >= 0) {
      reduce_of_path[pid] = {{static_cast<unsigned>(basis_of_path[pid]), fel(1)}};
    } else {
      const auto& row = ideal.rows().at(pid);
      Sparse s;
      for (unsigned j = pid + 1; j < npaths; ++j)
        if (row[j] && basis_of_path[j] >= 0)
          s.emplace_back(static_cast<unsigned>(basis_of_path[j]), f.neg(row[j]));
      reduce_of_path[pid] = std::move(s);
    }
  }

  // Vertex gradings and idempotent positions.
  A.by_start_.assign(q.vertex_count(), {});
  A.by_end_.assign(q.vertex_count(), {});
  A.idem_index_.assign(q.vertex_count(), 0);
  for (unsigned i = 0; i < dim; ++i) {
    A.by_start_[A.basis_[i].start].push_back(i);
    A.by_end_[A.basis_[i].end].push_back(i);
    if (A.basis_[i].arrows.empty()) A.idem_index_[A.basis_[i].start] = i;
  }

  // Structure constants in function order: tab[i][j] = b_i * b_j, the residue
  // of (traverse b_j, then b_i).
  A.tab_.assign(dim, std::vector<Sparse>(dim));
  for (unsigned i = 0; i < dim; ++i) {
    for (unsigned j = 0; j < dim; ++j) {
      const BPath& x = A.basis_[i];
      const BPath& y = A.basis_[j];
      if (y.end != x.start) continue;
      std::vector<unsigned> cat = y.arrows;
      cat.insert(cat.end(), x.arrows.begin(), x.arrows.end());
      if (cat.empty()) { // idempotent * idempotent at the same vertex
        A.tab_[i][j] = {{i, fel(1)}};
        continue;
      }
      int id = lookup(cat);
      if (id >= 0) A.tab_[i][j] = reduce_of_path[id];
    }
  }
  return A;
}

// ---------------------------------------------------------------------------
// Elements

bool El::is_zero() const {
  for (fel x : c)
    if (x) return false;
  return true;
}

El Algebra::zero() const { return El{this, std::vector<fel>(dim(), 0)}; }

El Algebra::one() const {
  El r = zero();
  for (unsigned v = 0; v < vertex_count(); ++v) r.c[idem_index_[v]] = 1;
  return r;
}

El Algebra::idem(unsigned v) const {
  El r = zero();
  r.c[idem_index_[v]] = 1;
  return r;
}

El Algebra::arrow_el(unsigned a) const {
  // Arrows survive in the basis for admissible ideals.
  for (unsigned i = 0; i < dim(); ++i)
    if (basis_[i].arrows.size() == 1 && basis_[i].arrows[0] == a) return basis_el(i);
  throw spec_error("arrow '" + spec_.quiver.arrows[a].name + "' is not a basis residue");
}

El Algebra::basis_el(unsigned i) const {
  El r = zero();
  r.c[i] = 1;
  return r;
}

El Algebra::mul(const El& x, const El& y) const {
  El r = zero();
  for (unsigned i = 0; i < dim(); ++i) {
    if (!x.c[i]) continue;
    for (unsigned j = 0; j < dim(); ++j) {
      if (!y.c[j]) continue;
      fel cij = f_.mul(x.c[i], y.c[j]);
      for (const auto& [k, v] : tab_[i][j]) r.c[k] = f_.add(r.c[k], f_.mul(cij, v));
    }
  }
  return r;
}

El Algebra::add(const El& x, const El& y) const {
  El r = x;
  for (unsigned i = 0; i < dim(); ++i) r.c[i] = f_.add(r.c[i], y.c[i]);
  return r;
}

El Algebra::sub(const El& x, const El& y) const {
  El r = x;
  for (unsigned i = 0; i < dim(); ++i) r.c[i] = f_.sub(r.c[i], y.c[i]);
  return r;
}

El Algebra::scale(fel k, const El& x) const {
  El r = x;
  for (unsigned i = 0; i < dim(); ++i) r.c[i] = f_.mul(r.c[i], k);
  return r;
}

El operator+(const El& x, const El& y) { return x.A->add(x, y); }
El operator-(const El& x, const El& y) { return x.A->sub(x, y); }
El operator*(const El& x, const El& y) { return x.A->mul(x, y); }

El Algebra::eval(const ElementExpr& e) const {
  El r = zero();
  for (const PathTerm& t : e) {
    El term = zero();
    if (t.identity) {
      term = one();
    } else if (t.vertex >= 0) {
      term = idem(static_cast<unsigned>(t.vertex));
    } else {
      term = arrow_el(t.arrows[0]);
      for (std::size_t k = 1; k < t.arrows.size(); ++k)
        term = mul(arrow_el(t.arrows[k]), term); // traverse earlier arrows first
    }
    r = add(r, scale(f_.reduce(t.coeff), term));
  }
  return r;
}

El Algebra::reduce_path(const std::vector<unsigned>& arrows) const {
  if (arrows.empty()) throw spec_error("reduce_path needs a nonempty path");
  El r = arrow_el(arrows[0]);
  for (std::size_t k = 1; k < arrows.size(); ++k) r = mul(arrow_el(arrows[k]), r);
  return r;
}

Mat Algebra::left_mult(const El& x) const {
  Mat m(f_, dim(), dim());
  for (unsigned j = 0; j < dim(); ++j) {
    for (unsigned i = 0; i < dim(); ++i) {
      if (!x.c[i]) continue;
      for (const auto& [k, v] : tab_[i][j]) m.at(k, j) = f_.add(m.at(k, j), f_.mul(x.c[i], v));
    }
  }
  return m;
}

Mat Algebra::right_mult(const El& x) const {
  Mat m(f_, dim(), dim());
  for (unsigned i = 0; i < dim(); ++i) { // basis element being acted on
    for (unsigned j = 0; j < dim(); ++j) {
      if (!x.c[j]) continue;
      for (const auto& [k, v] : tab_[i][j]) m.at(k, i) = f_.add(m.at(k, i), f_.mul(x.c[j], v));
    }
  }
  return m;
}

std::vector<std::vector<unsigned>> Algebra::cartan() const {
  unsigned n = vertex_count();
  std::vector<std::vector<unsigned>> c(n, std::vector<unsigned>(n, 0));
  for (const BPath& p : basis_) ++c[p.start][p.end];
  return c;
}

std::string Algebra::basis_name(unsigned i) const {
  const BPath& p = basis_[i];
  if (p.arrows.empty()) return "e" + spec_.quiver.vertices[p.start];
  std::string s;
  for (unsigned k = 0; k < p.arrows.size(); ++k) {
    if (k) s += "*";
    s += spec_.quiver.arrows[p.arrows[k]].name;
  }
  return s;
}

std::string Algebra::el_to_string(const El& x) const {
  std::ostringstream os;
  bool first = true;
  for (unsigned i = 0; i < dim(); ++i) {
    if (!x.c[i]) continue;
    if (!first) os << " + ";
    first = false;
    if (x.c[i] != 1) os << unsigned(x.c[i]) << "*";
    os << basis_name(i);
  }
  if (first) return "0";
  return os.str();
}

std::vector<std::vector<unsigned>> Algebra::paths_of_length(unsigned len) const {
  const Quiver& q = spec_.quiver;
  std::vector<std::vector<unsigned>> cur;
  if (len == 0) return cur;
  for (unsigned a = 0; a < q.arrows.size(); ++a) cur.push_back({a});
  for (unsigned l = 1; l < len; ++l) {
    std::vector<std::vector<unsigned>> next;
    for (const auto& p : cur)
      for (unsigned a = 0; a < q.arrows.size(); ++a)
        if (q.arrows[a].src == q.arrows[p.back()].tgt) {
          auto np = p;
          np.push_back(a);
          next.push_back(std::move(np));
        }
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end());
  return cur;
}

// ---------------------------------------------------------------------------
// Automorphisms

namespace {

// Evaluate an expression with arrows/vertices replaced by supplied elements.
El eval_mapped(const Algebra& A, const ElementExpr& e,
               const std::vector<El>& vertex_el, const std::vector<El>& arrow_el,
               const El& one_el) {
  El r = A.zero();
  for (const PathTerm& t : e) {
    El term = A.zero();
    if (t.identity) {
      term = one_el;
    } else if (t.vertex >= 0) {
      term = vertex_el[t.vertex];
    } else {
      term = arrow_el[t.arrows[0]];
      for (std::size_t k = 1; k < t.arrows.size(); ++k)
        term = A.mul(arrow_el[t.arrows[k]], term);
    }
    r = A.add(r, A.scale(A.field().reduce(t.coeff), term));
  }
  return r;
}

bool in_radical(const Algebra& A, const El& x) {
  for (unsigned i = 0; i < A.dim(); ++i)
    if (x.c[i] && A.basis_path(i).arrows.empty()) return false;
  return true;
}

} // namespace

Automorphism build_automorphism(const Algebra& a, const AutomorphismSpec& spec) {
  const Quiver& q = a.quiver();
  unsigned nv = q.vertex_count(), na = static_cast<unsigned>(q.arrows.size());
  if (spec.vertex_image.size() != nv || spec.arrow_image.size() != na)
    throw spec_error("automorphism '" + spec.name + "': image lists have the wrong length");
  std::vector<bool> hit(nv, false);
  for (unsigned v = 0; v < nv; ++v) {
    if (spec.vertex_image[v] >= nv || hit[spec.vertex_image[v]])
      throw spec_error("automorphism '" + spec.name + "': vertex images are not a permutation");
    hit[spec.vertex_image[v]] = true;
  }

  Automorphism s;
  s.A = &a;
  s.name = spec.name;
  s.vertex_image = spec.vertex_image;
  s.vertex_preimage.assign(nv, 0);
  for (unsigned v = 0; v < nv; ++v) s.vertex_preimage[spec.vertex_image[v]] = v;

  std::vector<El> vimg, aimg;
  for (unsigned v = 0; v < nv; ++v) vimg.push_back(a.idem(spec.vertex_image[v]));
  for (unsigned ar = 0; ar < na; ++ar) {
    El img = a.eval(spec.arrow_image[ar]);
    if (!in_radical(a, img))
      throw spec_error("automorphism '" + spec.name + "': image of arrow '" +
                       q.arrows[ar].name + "' has an idempotent component");
    // arrow ar: src -> tgt must land in e_{pi(tgt)} A e_{pi(src)}
    El boxed = a.mul(vimg[q.arrows[ar].tgt], a.mul(img, vimg[q.arrows[ar].src]));
    if (!(boxed == img))
      throw spec_error("automorphism '" + spec.name + "': endpoint mismatch for arrow '" +
                       q.arrows[ar].name + "'");
    aimg.push_back(std::move(img));
  }

  // Relations and the distinct-endpoint truncation directive must die.
  for (const ElementExpr& rel : a.spec().relations) {
    El r = eval_mapped(a, rel, vimg, aimg, a.one());
    if (!r.is_zero())
      throw spec_error("automorphism '" + spec.name + "': image of relation '" +
                       element_expr_to_string(q, rel) + "' is nonzero: " + a.el_to_string(r));
  }
  if (a.spec().zero_distinct_length > 0) {
    for (const auto& p : a.paths_of_length(a.spec().zero_distinct_length)) {
      if (q.arrows[p.front()].src == q.arrows[p.back()].tgt) continue;
      El r = aimg[p[0]];
      for (std::size_t k = 1; k < p.size(); ++k) r = a.mul(aimg[p[k]], r);
      if (!r.is_zero())
        throw spec_error("automorphism '" + spec.name +
                         "': a vanishing distinct-endpoint path has nonzero image");
    }
  }

  // Matrix on the residue basis.
  Mat S(a.field(), a.dim(), a.dim());
  for (unsigned i = 0; i < a.dim(); ++i) {
    const Algebra::BPath& p = a.basis_path(i);
    El img = a.zero();
    if (p.arrows.empty()) {
      img = vimg[p.start];
    } else {
      img = aimg[p.arrows[0]];
      for (std::size_t k = 1; k < p.arrows.size(); ++k) img = a.mul(aimg[p.arrows[k]], img);
    }
    S.set_col(i, img.c);
  }
  auto inv = inverse(S);
  if (!inv)
    throw spec_error("automorphism '" + spec.name + "': induced linear map is not bijective");
  s.matrix = S;
  s.inverse_matrix = *inv;

  // Multiplicativity on all basis pairs (certifies well-definedness).
  for (unsigned i = 0; i < a.dim(); ++i) {
    El si{&a, S.get_col(i)};
    for (unsigned j = 0; j < a.dim(); ++j) {
      El sj{&a, S.get_col(j)};
      El lhs{&a, S.apply(a.mul(a.basis_el(i), a.basis_el(j)).c)};
      if (!(lhs == a.mul(si, sj)))
        throw spec_error("automorphism '" + spec.name + "': not multiplicative on basis pair (" +
                         a.basis_name(i) + ", " + a.basis_name(j) + ")");
    }
  }
  return s;
}

El Automorphism::apply(const El& x) const { return El{A, matrix.apply(x.c)}; }
El Automorphism::apply_inv(const El& x) const { return El{A, inverse_matrix.apply(x.c)}; }

bool Automorphism::is_identity() const {
  return matrix == Mat::identity(A->field(), A->dim());
}

Automorphism identity_automorphism(const Algebra& a) {
  AutomorphismSpec sp;
  sp.name = "id";
  for (unsigned v = 0; v < a.vertex_count(); ++v) sp.vertex_image.push_back(v);
  for (const Arrow& ar : a.quiver().arrows) {
    PathTerm t;
    t.arrows = {static_cast<unsigned>(a.quiver().arrow_index(ar.name))};
    sp.arrow_image.push_back({t});
  }
  return build_automorphism(a, sp);
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  if (f.A != g.A) throw spec_error("composing automorphisms of different algebras");
  Automorphism r;
  r.A = f.A;
  r.name = f.name + "∘" + g.name;
  r.vertex_image.resize(f.vertex_image.size());
  r.vertex_preimage.resize(f.vertex_image.size());
  for (unsigned v = 0; v < f.vertex_image.size(); ++v)
    r.vertex_image[v] = f.vertex_image[g.vertex_image[v]];
  for (unsigned v = 0; v < f.vertex_image.size(); ++v) r.vertex_preimage[r.vertex_image[v]] = v;
  r.matrix = f.matrix * g.matrix;
  r.inverse_matrix = g.inverse_matrix * f.inverse_matrix;
  return r;
}

// ---------------------------------------------------------------------------
// Subalgebras

El Subalgebra::image(const El& x) const { return El{big, embed.apply(x.c)}; }

Subalgebra build_subalgebra(const Algebra& big, const SubalgebraSpec& spec) {
  Subalgebra S;
  S.big = &big;
  S.small = Algebra::build(spec.presented);
  const Algebra& B = S.small;
  const Quiver& bq = B.quiver();
  const std::string& nm = spec.presented.name;
  if (spec.presented.characteristic != big.field().p())
    throw spec_error("subalgebra '" + nm + "': characteristic differs from the ambient algebra");
  if (spec.vertex_image.size() != bq.vertex_count() ||
      spec.arrow_image.size() != bq.arrows.size())
    throw spec_error("subalgebra '" + nm + "': image lists have the wrong length");

  for (const ElementExpr& e : spec.vertex_image) S.vertex_idem.push_back(big.eval(e));
  for (const ElementExpr& e : spec.arrow_image) S.arrow_img.push_back(big.eval(e));

  // Orthogonal idempotents.
  for (unsigned u = 0; u < S.vertex_idem.size(); ++u)
    for (unsigned v = 0; v < S.vertex_idem.size(); ++v) {
      El prod = big.mul(S.vertex_idem[u], S.vertex_idem[v]);
      El expect = u == v ? S.vertex_idem[u] : big.zero();
      if (!(prod == expect))
        throw spec_error("subalgebra '" + nm + "': vertex images are not orthogonal idempotents");
    }

  // Arrow endpoint compatibility and radical membership.
  for (unsigned ar = 0; ar < S.arrow_img.size(); ++ar) {
    const El& img = S.arrow_img[ar];
    if (!in_radical(big, img))
      throw spec_error("subalgebra '" + nm + "': image of arrow '" + bq.arrows[ar].name +
                       "' has an idempotent component");
    El boxed = big.mul(S.vertex_idem[bq.arrows[ar].tgt],
                       big.mul(img, S.vertex_idem[bq.arrows[ar].src]));
    if (!(boxed == img))
      throw spec_error("subalgebra '" + nm + "': endpoint mismatch for arrow '" +
                       bq.arrows[ar].name + "'");
  }

  El sub_one = big.zero();
  for (const El& e : S.vertex_idem) sub_one = big.add(sub_one, e);

  // The presented ideal must die in the ambient algebra: relations, the
  // nilpotency bound, and any distinct-endpoint directive.
  for (const ElementExpr& rel : spec.presented.relations) {
    El r = eval_mapped(big, rel, S.vertex_idem, S.arrow_img, sub_one);
    if (!r.is_zero())
      throw spec_error("subalgebra '" + nm + "': image of relation '" +
                       element_expr_to_string(bq, rel) + "' is nonzero: " + big.el_to_string(r));
  }
  auto path_image = [&](const std::vector<unsigned>& p) {
    El r = S.arrow_img[p[0]];
    for (std::size_t k = 1; k < p.size(); ++k) r = big.mul(S.arrow_img[p[k]], r);
    return r;
  };
  for (const auto& p : B.paths_of_length(spec.presented.nilpotency))
    if (!path_image(p).is_zero())
      throw spec_error("subalgebra '" + nm + "': a path at the nilpotency bound has nonzero image");
  if (spec.presented.zero_distinct_length > 0) {
    for (const auto& p : B.paths_of_length(spec.presented.zero_distinct_length)) {
      if (bq.arrows[p.front()].src == bq.arrows[p.back()].tgt) continue;
      if (!path_image(p).is_zero())
        throw spec_error("subalgebra '" + nm +
                         "': a vanishing distinct-endpoint path has nonzero image");
    }
  }

  // Embedding matrix on the presented basis; injectivity certifies that the
  // images span a subalgebra isomorphic to the presented one.
  Mat emb(big.field(), big.dim(), B.dim());
  for (unsigned i = 0; i < B.dim(); ++i) {
    const Algebra::BPath& p = B.basis_path(i);
    El img = p.arrows.empty() ? S.vertex_idem[p.start] : path_image(p.arrows);
    emb.set_col(i, img.c);
  }
  if (rank(emb) != B.dim())
    throw spec_error("subalgebra '" + nm + "': embedding is not injective");
  S.embed = std::move(emb);
  return S;
}

// ---------------------------------------------------------------------------
// Symmetry

SymmetricReport verify_symmetric(const Algebra& a, std::uint64_t seed, unsigned budget_trials) {
  const Field& f = a.field();
  const unsigned d = a.dim();
  SymmetricReport rep;

  // Products of basis pairs, as coordinate vectors.
  std::vector<std::vector<El>> prod(d);
  for (unsigned i = 0; i < d; ++i) {
    prod[i].reserve(d);
    for (unsigned j = 0; j < d; ++j) prod[i].push_back(a.mul(a.basis_el(i), a.basis_el(j)));
  }

  // Central forms: lambda with lambda(b_i b_j - b_j b_i) = 0.
  std::vector<std::vector<fel>> crows;
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = i + 1; j < d; ++j) {
      std::vector<fel> r(d, 0);
      bool nz = false;
      for (unsigned k = 0; k < d; ++k) {
        r[k] = f.sub(prod[i][j].c[k], prod[j][i].c[k]);
        nz = nz || r[k];
      }
      if (nz) crows.push_back(std::move(r));
    }
  Mat K(f, static_cast<unsigned>(crows.size()), d);
  for (unsigned i = 0; i < crows.size(); ++i) K.set_row(i, crows[i]);
  Mat central = nullspace(K); // d x c, columns span the central forms
  const unsigned c = central.cols();
  rep.central_dim = c;

  auto gram_nondegenerate = [&](const std::vector<fel>& lam) {
    Mat g(f, d, d);
    for (unsigned i = 0; i < d; ++i)
      for (unsigned j = 0; j < d; ++j) {
        unsigned acc = 0;
        for (unsigned k = 0; k < d; ++k)
          if (prod[i][j].c[k] && lam[k]) acc += unsigned(prod[i][j].c[k]) * lam[k];
        g.at(i, j) = f.reduce(static_cast<long long>(acc));
      }
    return rank(g) == d;
  };
  auto combo = [&](const std::vector<fel>& coef) {
    std::vector<fel> lam(d, 0);
    for (unsigned k = 0; k < c; ++k) {
      if (!coef[k]) continue;
      for (unsigned i = 0; i < d; ++i)
        lam[i] = f.add(lam[i], f.mul(coef[k], central.at(i, k)));
    }
    return lam;
  };

  // Exhaustive over the central space when feasible: definitive either way.
  double total = 1;
  for (unsigned k = 0; k < c; ++k) total *= f.p();
  if (total <= 6561.0) {
    std::vector<fel> coef(c, 0);
    for (unsigned long long n = 1; n < static_cast<unsigned long long>(total); ++n) {
      unsigned long long m = n;
      for (unsigned k = 0; k < c; ++k) { coef[k] = static_cast<fel>(m % f.p()); m /= f.p(); }
      std::vector<fel> lam = combo(coef);
      if (gram_nondegenerate(lam)) {
        rep.status = SymmetricReport::Status::witness_found;
        rep.form = lam;
        rep.detail = "exhaustive search over the central-form space (dim " +
                     std::to_string(c) + ")";
        return rep;
      }
    }
    rep.status = SymmetricReport::Status::not_symmetric_exhaustive;
    rep.detail = "all " + std::to_string(static_cast<unsigned long long>(total) - 1) +
                 " nonzero central forms have degenerate Gram matrices";
    return rep;
  }

  // Deterministic candidate: the form supported on dead-end basis paths (the
  // socle coordinates of the left projectives).
  {
    std::vector<fel> lam(d, 0);
    for (unsigned i = 0; i < d; ++i) {
      bool dead = true;
      for (unsigned ar = 0; ar < a.quiver().arrows.size() && dead; ++ar) {
        if (a.quiver().arrows[ar].src != a.basis_path(i).end) continue;
        if (!a.mul(a.arrow_el(ar), a.basis_el(i)).is_zero()) dead = false;
      }
      if (dead) lam[i] = 1;
    }
    bool central_ok = true;
    for (const auto& r : crows) {
      unsigned acc = 0;
      for (unsigned k = 0; k < d; ++k)
        if (r[k] && lam[k]) acc += unsigned(r[k]) * lam[k];
      if (f.reduce(static_cast<long long>(acc)) != 0) { central_ok = false; break; }
    }
    if (central_ok && gram_nondegenerate(lam)) {
      rep.status = SymmetricReport::Status::witness_found;
      rep.form = lam;
      rep.detail = "socle-supported form";
      return rep;
    }
  }

  // Seeded random combinations of the central basis.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> dist(0, f.p() - 1);
  for (unsigned t = 0; t < budget_trials; ++t) {
    std::vector<fel> coef(c);
    bool nz = false;
    for (unsigned k = 0; k < c; ++k) { coef[k] = static_cast<fel>(dist(rng)); nz = nz || coef[k]; }
    if (!nz) continue;
    std::vector<fel> lam = combo(coef);
    if (gram_nondegenerate(lam)) {
      rep.status = SymmetricReport::Status::witness_found;
      rep.form = lam;
      rep.detail = "random central form, trial " + std::to_string(t + 1);
      return rep;
    }
  }
  rep.status = SymmetricReport::Status::undecided_budget;
  rep.detail = "no witness in " + std::to_string(budget_trials) +
               " random trials over a central space of dim " + std::to_string(c);
  return rep;
}

} // namespace qrep
