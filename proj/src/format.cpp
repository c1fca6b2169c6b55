#include "qrep/format.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qrep {

namespace {

struct Tok {
  std::string t;
  unsigned col; // 1-based
};

struct Line {
  unsigned no = 0; // 1-based
  std::string raw; // comment-stripped
  std::vector<Tok> toks;

  // Raw text from the start of token k to the end of the line, trimmed.
  std::string rest(unsigned k) const {
    if (k >= toks.size()) return "";
    std::string s = raw.substr(toks[k].col - 1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    return s;
  }
};

[[noreturn]] void fail(unsigned line, const std::string& msg) {
  throw spec_error("line " + std::to_string(line) + ": " + msg);
}
[[noreturn]] void fail(unsigned line, unsigned col, const std::string& msg) {
  throw spec_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg);
}

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> out;
  unsigned no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string raw = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    ++no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    Line ln;
    ln.no = no;
    ln.raw = raw;
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == ' ' || raw[i] == '\t') { ++i; continue; }
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
      ln.toks.push_back({raw.substr(i, j - i), static_cast<unsigned>(i + 1)});
      i = j;
    }
    if (!ln.toks.empty()) out.push_back(std::move(ln));
  }
  return out;
}

ElementExpr parse_expr_at(const Quiver& q, const std::string& s, unsigned line) {
  try {
    return parse_element_expr(q, s);
  } catch (const spec_error& e) {
    fail(line, std::string(e.what()));
  }
}

// A single monomial (one term, unit coefficient extracted).
PathTerm parse_mono(const Quiver& q, const std::string& s, unsigned line, long long& coeff) {
  ElementExpr e = parse_expr_at(q, s, line);
  if (e.size() != 1) fail(line, "expected a single monomial, got '" + s + "'");
  PathTerm t = e[0];
  coeff = t.coeff;
  t.coeff = 1;
  return t;
}

class Parser {
public:
  explicit Parser(const std::string& text) : lines_(split_lines(text)) {}

  CorpusFile run() {
    while (li_ < lines_.size()) parse_block();
    return std::move(cf_);
  }

private:
  std::vector<Line> lines_;
  std::size_t li_ = 0;
  CorpusFile cf_;
  std::map<std::string, unsigned> alg_, sub_, aut_, rea_, mod_, bim_, map_, wit_;

  // --- helpers ------------------------------------------------------------

  const Line& header() const { return lines_[li_]; }

  std::vector<const Line*> body(const Line& hdr) {
    if (hdr.toks.back().t != "{")
      fail(hdr.no, "block header must end with '{'");
    ++li_;
    std::vector<const Line*> out;
    while (true) {
      if (li_ >= lines_.size()) fail(hdr.no, "unterminated block (missing '}')");
      const Line& ln = lines_[li_];
      if (ln.toks[0].t == "}") {
        if (ln.toks.size() != 1) fail(ln.no, "'}' must stand alone");
        ++li_;
        return out;
      }
      out.push_back(&ln);
      ++li_;
    }
  }

  void check_fresh_algebra_name(const std::string& n, unsigned line) {
    if (alg_.count(n) || sub_.count(n))
      fail(line, "duplicate algebra name '" + n + "'");
  }

  const AlgebraSpec* algebra_like(const std::string& n) const {
    auto a = alg_.find(n);
    if (a != alg_.end()) return &cf_.algebras[a->second];
    auto s = sub_.find(n);
    if (s != sub_.end()) return &cf_.subalgebras[s->second].spec.presented;
    return nullptr;
  }

  const AlgebraSpec& need_algebra_like(const std::string& n, unsigned line) {
    const AlgebraSpec* a = algebra_like(n);
    if (!a) fail(line, "unknown algebra '" + n + "'");
    return *a;
  }

  unsigned need_vertex(const Quiver& q, const std::string& label, unsigned line, unsigned col) {
    int v = q.vertex_index(label);
    if (v < 0) fail(line, col, "unknown vertex '" + label + "'");
    return static_cast<unsigned>(v);
  }

  unsigned need_arrow(const Quiver& q, const std::string& name, unsigned line, unsigned col) {
    int a = q.arrow_index(name);
    if (a < 0) fail(line, col, "unknown arrow '" + name + "'");
    return static_cast<unsigned>(a);
  }

  static unsigned parse_uint(const Tok& tk, unsigned line) {
    for (char c : tk.t)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        fail(line, tk.col, "expected a number, got '" + tk.t + "'");
    return static_cast<unsigned>(std::stoul(tk.t));
  }

  // --- block dispatch -----------------------------------------------------

  void parse_block() {
    const Line& h = header();
    const std::string& kind = h.toks[0].t;
    if (kind == "algebra") parse_algebra();
    else if (kind == "automorphism") parse_automorphism();
    else if (kind == "subalgebra") parse_subalgebra();
    else if (kind == "realization") parse_realization();
    else if (kind == "module") parse_module();
    else if (kind == "bimodule") parse_bimodule();
    else if (kind == "map") parse_map();
    else if (kind == "witness") parse_witness();
    else fail(h.no, h.toks[0].col, "unknown block kind '" + kind + "'");
  }

  // --- algebra-shaped bodies ----------------------------------------------

  // Parses the presentation keywords shared by algebra and subalgebra
  // blocks; returns unconsumed lines (for the caller's extra keywords).
  std::vector<const Line*> algebra_body(AlgebraSpec& s, const std::vector<const Line*>& lines,
                                        unsigned hline) {
    std::vector<const Line*> leftover;
    std::vector<std::pair<const Line*, std::string>> rel_texts;
    bool saw_field = false, saw_nilp = false;
    for (const Line* lp : lines) {
      const Line& ln = *lp;
      const std::string& key = ln.toks[0].t;
      if (key == "field") {
        if (ln.toks.size() != 2) fail(ln.no, "usage: field <p>");
        s.characteristic = parse_uint(ln.toks[1], ln.no);
        saw_field = true;
      } else if (key == "vertices") {
        if (ln.toks.size() < 2) fail(ln.no, "usage: vertices <label>...");
        for (unsigned k = 1; k < ln.toks.size(); ++k)
          s.quiver.vertices.push_back(ln.toks[k].t);
      } else if (key == "arrow") {
        // arrow name: src -> tgt
        if (ln.toks.size() < 4) fail(ln.no, "usage: arrow <name>: <src> -> <tgt>");
        std::string name = ln.toks[1].t;
        unsigned k = 2;
        if (!name.empty() && name.back() == ':') name.pop_back();
        else if (ln.toks[k].t == ":") ++k;
        else fail(ln.no, ln.toks[1].col, "expected ':' after the arrow name");
        if (k + 2 >= ln.toks.size() || ln.toks[k + 1].t != "->")
          fail(ln.no, "usage: arrow <name>: <src> -> <tgt>");
        unsigned src = need_vertex(s.quiver, ln.toks[k].t, ln.no, ln.toks[k].col);
        unsigned tgt = need_vertex(s.quiver, ln.toks[k + 2].t, ln.no, ln.toks[k + 2].col);
        s.quiver.arrows.push_back({name, src, tgt});
      } else if (key == "relation") {
        if (ln.toks.size() < 2) fail(ln.no, "usage: relation <expression>");
        rel_texts.emplace_back(lp, ln.rest(1));
      } else if (key == "nilpotency") {
        if (ln.toks.size() != 2) fail(ln.no, "usage: nilpotency <N>");
        s.nilpotency = parse_uint(ln.toks[1], ln.no);
        saw_nilp = true;
      } else if (key == "zero_distinct_length") {
        if (ln.toks.size() != 2) fail(ln.no, "usage: zero_distinct_length <L>");
        s.zero_distinct_length = parse_uint(ln.toks[1], ln.no);
      } else {
        leftover.push_back(lp);
        continue;
      }
    }
    if (!saw_field) fail(hline, "algebra block needs a 'field' line");
    if (!saw_nilp) fail(hline, "algebra block needs a 'nilpotency' line");
    try {
      s.quiver.validate();
    } catch (const spec_error& e) {
      fail(hline, std::string(e.what()));
    }
    for (auto& [lp, text] : rel_texts)
      s.relations.push_back(parse_expr_at(s.quiver, text, lp->no));
    return leftover;
  }

  void parse_algebra() {
    const Line& h = header();
    if (h.toks.size() != 3) fail(h.no, "usage: algebra <name> {");
    AlgebraSpec s;
    s.name = h.toks[1].t;
    check_fresh_algebra_name(s.name, h.no);
    auto leftover = algebra_body(s, body(h), h.no);
    if (!leftover.empty())
      fail(leftover[0]->no, leftover[0]->toks[0].col,
           "unknown keyword '" + leftover[0]->toks[0].t + "' in algebra block");
    alg_[s.name] = static_cast<unsigned>(cf_.algebras.size());
    cf_.algebras.push_back(std::move(s));
  }

  void parse_automorphism() {
    const Line& h = header();
    if (h.toks.size() != 5 || h.toks[2].t != "on")
      fail(h.no, "usage: automorphism <name> on <algebra> {");
    AutomorphismBlock b;
    b.name = h.toks[1].t;
    b.algebra = h.toks[3].t;
    if (aut_.count(b.name)) fail(h.no, "duplicate automorphism name '" + b.name + "'");
    const AlgebraSpec& A = need_algebra_like(b.algebra, h.no);
    const Quiver& q = A.quiver;
    b.spec.name = b.name;
    std::vector<int> vimg(q.vertex_count(), -1);
    std::vector<ElementExpr> aimg(q.arrows.size());
    std::vector<bool> aset(q.arrows.size(), false);
    for (const Line* lp : body(h)) {
      const Line& ln = *lp;
      if (ln.toks[0].t == "vertex") {
        if (ln.toks.size() != 4 || ln.toks[2].t != "->")
          fail(ln.no, "usage: vertex <label> -> <label>");
        unsigned v = need_vertex(q, ln.toks[1].t, ln.no, ln.toks[1].col);
        unsigned w = need_vertex(q, ln.toks[3].t, ln.no, ln.toks[3].col);
        if (vimg[v] >= 0) fail(ln.no, "vertex '" + ln.toks[1].t + "' mapped twice");
        vimg[v] = static_cast<int>(w);
      } else if (ln.toks[0].t == "arrow") {
        if (ln.toks.size() < 4 || ln.toks[2].t != "->")
          fail(ln.no, "usage: arrow <name> -> <expression>");
        unsigned a = need_arrow(q, ln.toks[1].t, ln.no, ln.toks[1].col);
        if (aset[a]) fail(ln.no, "arrow '" + ln.toks[1].t + "' mapped twice");
        aset[a] = true;
        aimg[a] = parse_expr_at(q, ln.rest(3), ln.no);
      } else {
        fail(ln.no, ln.toks[0].col, "unknown keyword '" + ln.toks[0].t + "' in automorphism block");
      }
    }
    for (unsigned v = 0; v < q.vertex_count(); ++v)
      if (vimg[v] < 0) fail(h.no, "automorphism is missing vertex '" + q.vertices[v] + "'");
    for (unsigned a = 0; a < q.arrows.size(); ++a)
      if (!aset[a]) fail(h.no, "automorphism is missing arrow '" + q.arrows[a].name + "'");
    for (int v : vimg) b.spec.vertex_image.push_back(static_cast<unsigned>(v));
    b.spec.arrow_image = std::move(aimg);
    aut_[b.name] = static_cast<unsigned>(cf_.automorphisms.size());
    cf_.automorphisms.push_back(std::move(b));
  }

  void parse_subalgebra() {
    const Line& h = header();
    if (h.toks.size() != 5 || h.toks[2].t != "of")
      fail(h.no, "usage: subalgebra <name> of <algebra> {");
    SubalgebraBlock b;
    b.name = h.toks[1].t;
    b.algebra = h.toks[3].t;
    check_fresh_algebra_name(b.name, h.no);
    const AlgebraSpec& big = need_algebra_like(b.algebra, h.no);
    b.spec.presented.name = b.name;
    auto leftover = algebra_body(b.spec.presented, body(h), h.no);
    const Quiver& pq = b.spec.presented.quiver;
    std::vector<ElementExpr> vimg(pq.vertex_count()), aimg(pq.arrows.size());
    std::vector<bool> vset(pq.vertex_count(), false), aset(pq.arrows.size(), false);
    for (const Line* lp : leftover) {
      const Line& ln = *lp;
      if (ln.toks[0].t == "vertex_image") {
        if (ln.toks.size() < 4 || ln.toks[2].t != "=")
          fail(ln.no, "usage: vertex_image <label> = <expression>");
        unsigned v = need_vertex(pq, ln.toks[1].t, ln.no, ln.toks[1].col);
        if (vset[v]) fail(ln.no, "vertex '" + ln.toks[1].t + "' embedded twice");
        vset[v] = true;
        vimg[v] = parse_expr_at(big.quiver, ln.rest(3), ln.no);
      } else if (ln.toks[0].t == "arrow_image") {
        if (ln.toks.size() < 4 || ln.toks[2].t != "=")
          fail(ln.no, "usage: arrow_image <name> = <expression>");
        unsigned a = need_arrow(pq, ln.toks[1].t, ln.no, ln.toks[1].col);
        if (aset[a]) fail(ln.no, "arrow '" + ln.toks[1].t + "' embedded twice");
        aset[a] = true;
        aimg[a] = parse_expr_at(big.quiver, ln.rest(3), ln.no);
      } else {
        fail(ln.no, ln.toks[0].col, "unknown keyword '" + ln.toks[0].t + "' in subalgebra block");
      }
    }
    for (unsigned v = 0; v < pq.vertex_count(); ++v)
      if (!vset[v]) fail(h.no, "subalgebra is missing vertex_image for '" + pq.vertices[v] + "'");
    for (unsigned a = 0; a < pq.arrows.size(); ++a)
      if (!aset[a]) fail(h.no, "subalgebra is missing arrow_image for '" + pq.arrows[a].name + "'");
    b.spec.vertex_image = std::move(vimg);
    b.spec.arrow_image = std::move(aimg);
    sub_[b.name] = static_cast<unsigned>(cf_.subalgebras.size());
    cf_.subalgebras.push_back(std::move(b));
  }

  void parse_realization() {
    const Line& h = header();
    if (h.toks.size() != 7 || h.toks[2].t != "of" || h.toks[4].t != "as")
      fail(h.no, "usage: realization <name> of <algebra> as <algebra> {");
    RealizationBlock b;
    b.name = h.toks[1].t;
    b.algebra = h.toks[3].t;
    b.endo = h.toks[5].t;
    if (rea_.count(b.name)) fail(h.no, "duplicate realization name '" + b.name + "'");
    const AlgebraSpec& big = need_algebra_like(b.algebra, h.no);
    const AlgebraSpec& endo = need_algebra_like(b.endo, h.no);
    b.arrow_image.resize(endo.quiver.arrows.size());
    std::vector<bool> aset(endo.quiver.arrows.size(), false);
    for (const Line* lp : body(h)) {
      const Line& ln = *lp;
      if (ln.toks[0].t == "summands") {
        if (ln.toks.size() < 2) fail(ln.no, "usage: summands <vertex>...");
        for (unsigned k = 1; k < ln.toks.size(); ++k) {
          need_vertex(big.quiver, ln.toks[k].t, ln.no, ln.toks[k].col);
          b.summands.push_back(ln.toks[k].t);
        }
      } else if (ln.toks[0].t == "arrow") {
        if (ln.toks.size() < 4 || ln.toks[2].t != "=")
          fail(ln.no, "usage: arrow <name> = <expression>");
        unsigned a = need_arrow(endo.quiver, ln.toks[1].t, ln.no, ln.toks[1].col);
        if (aset[a]) fail(ln.no, "arrow '" + ln.toks[1].t + "' realized twice");
        aset[a] = true;
        b.arrow_image[a] = parse_expr_at(big.quiver, ln.rest(3), ln.no);
      } else {
        fail(ln.no, ln.toks[0].col, "unknown keyword '" + ln.toks[0].t + "' in realization block");
      }
    }
    if (b.summands.empty()) fail(h.no, "realization needs a 'summands' line");
    for (unsigned a = 0; a < endo.quiver.arrows.size(); ++a)
      if (!aset[a]) fail(h.no, "realization is missing arrow '" + endo.quiver.arrows[a].name + "'");
    rea_[b.name] = static_cast<unsigned>(cf_.realizations.size());
    cf_.realizations.push_back(std::move(b));
  }

  Mat parse_matrix(const std::string& text, const Field& f, unsigned rows, unsigned cols,
                   unsigned line) {
    std::size_t lb = text.find('['), rb = text.rfind(']');
    if (lb == std::string::npos || rb == std::string::npos || rb < lb)
      fail(line, "matrix literal must be enclosed in [ ]");
    std::string inner = text.substr(lb + 1, rb - lb - 1);
    std::vector<std::vector<long long>> entries;
    std::size_t pos = 0;
    while (pos <= inner.size()) {
      std::size_t semi = inner.find(';', pos);
      std::string rowtext = inner.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
      pos = semi == std::string::npos ? inner.size() + 1 : semi + 1;
      std::istringstream is(rowtext);
      std::vector<long long> row;
      long long v;
      while (is >> v) row.push_back(v);
      std::string junk;
      if (is.clear(), is >> junk)
        fail(line, "bad matrix entry '" + junk + "'");
      entries.push_back(std::move(row));
    }
    // trim trailing empty rows produced by "[]"
    while (!entries.empty() && entries.back().empty()) entries.pop_back();
    if (entries.empty()) {
      if (rows * cols != 0 && rows != 0)
        fail(line, "empty matrix literal for a " + std::to_string(rows) + "x" +
                        std::to_string(cols) + " action");
      return Mat(f, rows, cols);
    }
    if (entries.size() != rows)
      fail(line, "matrix has " + std::to_string(entries.size()) + " rows, expected " +
                     std::to_string(rows));
    Mat m(f, rows, cols);
    for (unsigned r = 0; r < rows; ++r) {
      if (entries[r].size() != cols)
        fail(line, "matrix row " + std::to_string(r + 1) + " has " +
                       std::to_string(entries[r].size()) + " entries, expected " +
                       std::to_string(cols));
      for (unsigned c = 0; c < cols; ++c) m.at(r, c) = f.reduce(entries[r][c]);
    }
    return m;
  }

  void parse_module() {
    const Line& h = header();
    if (h.toks.size() != 5 || h.toks[2].t != "over")
      fail(h.no, "usage: module <name> over <algebra> {");
    ModuleBlock b;
    b.name = h.toks[1].t;
    b.algebra = h.toks[3].t;
    if (mod_.count(b.name)) fail(h.no, "duplicate module name '" + b.name + "'");
    const AlgebraSpec& A = need_algebra_like(b.algebra, h.no);
    const Quiver& q = A.quiver;
    Field f(A.characteristic);
    bool saw_dims = false;
    std::vector<std::tuple<unsigned, std::string, unsigned>> pending_actions; // arrow, text, line
    for (const Line* lp : body(h)) {
      const Line& ln = *lp;
      const std::string& key = ln.toks[0].t;
      if (key == "side") {
        if (ln.toks.size() != 2 || (ln.toks[1].t != "left" && ln.toks[1].t != "right"))
          fail(ln.no, "usage: side left|right");
        b.left = ln.toks[1].t == "left";
      } else if (key == "simple" || key == "projective") {
        if (ln.toks.size() != 2) fail(ln.no, "usage: " + key + " <vertex>");
        need_vertex(q, ln.toks[1].t, ln.no, ln.toks[1].col);
        b.kind = key == "simple" ? ModuleBlock::Kind::simple : ModuleBlock::Kind::projective;
        b.vertex = ln.toks[1].t;
      } else if (key == "dims") {
        if (ln.toks.size() != 1 + q.vertex_count())
          fail(ln.no, "dims needs one entry per vertex (" + std::to_string(q.vertex_count()) + ")");
        for (unsigned k = 1; k < ln.toks.size(); ++k)
          b.dims.push_back(parse_uint(ln.toks[k], ln.no));
        saw_dims = true;
      } else if (key == "action") {
        if (ln.toks.size() < 4 || ln.toks[2].t != "=")
          fail(ln.no, "usage: action <arrow> = [matrix]");
        unsigned a = need_arrow(q, ln.toks[1].t, ln.no, ln.toks[1].col);
        pending_actions.emplace_back(a, ln.rest(3), ln.no);
      } else {
        fail(ln.no, ln.toks[0].col, "unknown keyword '" + key + "' in module block");
      }
    }
    if (b.kind != ModuleBlock::Kind::literal) {
      if (saw_dims || !pending_actions.empty())
        fail(h.no, "constructed modules cannot carry dims/action lines");
      mod_[b.name] = static_cast<unsigned>(cf_.modules.size());
      cf_.modules.push_back(std::move(b));
      return;
    }
    if (!saw_dims) fail(h.no, "literal module needs a 'dims' line");
    b.action.assign(q.arrows.size(), Mat());
    for (unsigned a = 0; a < q.arrows.size(); ++a) {
      unsigned rows = b.left ? b.dims[q.arrows[a].tgt] : b.dims[q.arrows[a].src];
      unsigned cols = b.left ? b.dims[q.arrows[a].src] : b.dims[q.arrows[a].tgt];
      b.action[a] = Mat(f, rows, cols);
    }
    for (auto& [a, text, lno] : pending_actions) {
      unsigned rows = b.action[a].rows(), cols = b.action[a].cols();
      b.action[a] = parse_matrix(text, f, rows, cols, lno);
    }
    mod_[b.name] = static_cast<unsigned>(cf_.modules.size());
    cf_.modules.push_back(std::move(b));
  }

  void parse_bimodule() {
    const Line& h = header();
    if (h.toks.size() != 5 || h.toks[2].t != "over")
      fail(h.no, "usage: bimodule <name> over <algebra> {");
    BimoduleBlock b;
    b.name = h.toks[1].t;
    b.algebra = h.toks[3].t;
    if (bim_.count(b.name)) fail(h.no, "duplicate bimodule name '" + b.name + "'");
    need_algebra_like(b.algebra, h.no);
    auto lines = body(h);
    if (lines.size() != 1) fail(h.no, "bimodule block must contain exactly one line");
    const Line& ln = *lines[0];
    const std::string& key = ln.toks[0].t;
    if (key == "regular") {
      if (ln.toks.size() != 1) fail(ln.no, "usage: regular");
      b.kind = BimoduleBlock::Kind::regular;
    } else if (key == "twisted") {
      if (ln.toks.size() != 2) fail(ln.no, "usage: twisted <automorphism>");
      b.kind = BimoduleBlock::Kind::twisted;
      b.twist = ln.toks[1].t;
      auto it = aut_.find(b.twist);
      if (it == aut_.end()) fail(ln.no, "unknown automorphism '" + b.twist + "'");
      if (cf_.automorphisms[it->second].algebra != b.algebra)
        fail(ln.no, "automorphism '" + b.twist + "' is not on algebra '" + b.algebra + "'");
    } else if (key == "tensor") {
      // tensor <L> over <sub> [twist <tau>] <R>
      b.kind = BimoduleBlock::Kind::tensor;
      if (ln.toks.size() != 5 && ln.toks.size() != 7)
        fail(ln.no, "usage: tensor <left> over <subalgebra> [twist <tau>] <right>");
      if (ln.toks[2].t != "over") fail(ln.no, ln.toks[2].col, "expected 'over'");
      b.left_op = ln.toks[1].t;
      b.over = ln.toks[3].t;
      unsigned k = 4;
      if (ln.toks.size() == 7) {
        if (ln.toks[4].t != "twist") fail(ln.no, ln.toks[4].col, "expected 'twist'");
        b.middle_twist = ln.toks[5].t;
        k = 6;
      }
      b.right_op = ln.toks[k].t;
      for (const std::string* op : {&b.left_op, &b.right_op}) {
        auto it = bim_.find(*op);
        if (it == bim_.end()) fail(ln.no, "unknown bimodule '" + *op + "'");
        if (cf_.bimodules[it->second].algebra != b.algebra)
          fail(ln.no, "bimodule '" + *op + "' is not over algebra '" + b.algebra + "'");
      }
      auto st = sub_.find(b.over);
      if (st == sub_.end()) fail(ln.no, "unknown subalgebra '" + b.over + "'");
      if (cf_.subalgebras[st->second].algebra != b.algebra)
        fail(ln.no, "subalgebra '" + b.over + "' is not inside algebra '" + b.algebra + "'");
      if (!b.middle_twist.empty()) {
        auto it = aut_.find(b.middle_twist);
        if (it == aut_.end()) fail(ln.no, "unknown automorphism '" + b.middle_twist + "'");
        if (cf_.automorphisms[it->second].algebra != b.over)
          fail(ln.no, "automorphism '" + b.middle_twist + "' is not on subalgebra '" + b.over + "'");
      }
    } else {
      fail(ln.no, ln.toks[0].col, "unknown bimodule kind '" + key + "'");
    }
    bim_[b.name] = static_cast<unsigned>(cf_.bimodules.size());
    cf_.bimodules.push_back(std::move(b));
  }

  std::vector<TensorTerm> parse_tensor_terms(const Quiver& q, const std::vector<Tok>& toks,
                                             unsigned line) {
    // Terms are separated by standalone '+' / '-' tokens; each term is
    // "<mono> (x) <mono>" with optional leading coefficient folded in.
    std::vector<TensorTerm> out;
    std::size_t i = 0;
    long long sign = 1;
    if (i < toks.size() && (toks[i].t == "+" || toks[i].t == "-")) {
      sign = toks[i].t == "-" ? -1 : 1;
      ++i;
    }
    while (i < toks.size()) {
      std::string lhs, rhs;
      bool seen_x = false;
      std::size_t start = i;
      while (i < toks.size() && toks[i].t != "+" && toks[i].t != "-") {
        if (toks[i].t == "(x)") {
          if (seen_x) fail(line, toks[i].col, "more than one (x) in a tensor term");
          seen_x = true;
        } else {
          std::string& side = seen_x ? rhs : lhs;
          if (!side.empty()) side += " ";
          side += toks[i].t;
        }
        ++i;
      }
      if (!seen_x) fail(line, toks[start].col, "tensor term is missing '(x)'");
      if (lhs.empty() || rhs.empty())
        fail(line, toks[start].col, "tensor term is missing a side");
      TensorTerm t;
      long long cl = 1, cr = 1;
      t.x = parse_mono(q, lhs, line, cl);
      t.y = parse_mono(q, rhs, line, cr);
      t.coeff = sign * cl * cr;
      out.push_back(std::move(t));
      if (i < toks.size()) {
        sign = toks[i].t == "-" ? -1 : 1;
        ++i;
        if (i >= toks.size()) fail(line, "dangling sign in tensor term list");
      }
    }
    if (out.empty()) fail(line, "empty tensor term list");
    return out;
  }

  void parse_map() {
    const Line& h = header();
    if (h.toks.size() != 7 || h.toks[2].t != "from" || h.toks[4].t != "to")
      fail(h.no, "usage: map <name> from <bimodule> to <bimodule> {");
    MapBlock b;
    b.name = h.toks[1].t;
    b.src = h.toks[3].t;
    b.dst = h.toks[5].t;
    if (map_.count(b.name)) fail(h.no, "duplicate map name '" + b.name + "'");
    auto si = bim_.find(b.src), di = bim_.find(b.dst);
    if (si == bim_.end()) fail(h.no, "unknown bimodule '" + b.src + "'");
    if (di == bim_.end()) fail(h.no, "unknown bimodule '" + b.dst + "'");
    const BimoduleBlock& sb = cf_.bimodules[si->second];
    const BimoduleBlock& db = cf_.bimodules[di->second];
    if (sb.algebra != db.algebra)
      fail(h.no, "map endpoints live over different algebras");
    b.algebra = sb.algebra;
    const Quiver& q = need_algebra_like(b.algebra, h.no).quiver;
    bool src_tensor = sb.kind == BimoduleBlock::Kind::tensor;
    bool dst_tensor = db.kind == BimoduleBlock::Kind::tensor;
    for (const Line* lp : body(h)) {
      const Line& ln = *lp;
      if (ln.toks[0].t != "gen")
        fail(ln.no, ln.toks[0].col, "unknown keyword '" + ln.toks[0].t + "' in map block");
      // split at '->'
      std::size_t arrow = 0;
      for (std::size_t k = 1; k < ln.toks.size(); ++k)
        if (ln.toks[k].t == "->") { arrow = k; break; }
      if (arrow == 0 || arrow + 1 > ln.toks.size())
        fail(ln.no, "usage: gen <source> -> <value>");
      MapGen g;
      g.src_is_tensor = src_tensor;
      std::vector<Tok> lhs_toks(ln.toks.begin() + 1, ln.toks.begin() + arrow);
      if (lhs_toks.empty()) fail(ln.no, "generator source is empty");
      if (src_tensor) {
        std::string lhs, rhs;
        bool seen_x = false;
        for (const Tok& tk : lhs_toks) {
          if (tk.t == "(x)") {
            if (seen_x) fail(ln.no, tk.col, "more than one (x) in a generator");
            seen_x = true;
          } else {
            std::string& side = seen_x ? rhs : lhs;
            if (!side.empty()) side += " ";
            side += tk.t;
          }
        }
        if (!seen_x) fail(ln.no, "generator of a tensor bimodule needs '(x)'");
        g.lhs = parse_expr_at(q, lhs, ln.no);
        g.rhs = parse_expr_at(q, rhs, ln.no);
      } else {
        std::string lhs;
        for (const Tok& tk : lhs_toks) {
          if (!lhs.empty()) lhs += " ";
          lhs += tk.t;
        }
        g.lhs = parse_expr_at(q, lhs, ln.no);
      }
      std::vector<Tok> val_toks(ln.toks.begin() + arrow + 1, ln.toks.end());
      if (val_toks.empty()) fail(ln.no, "generator value is empty");
      if (val_toks.size() == 1 && val_toks[0].t == "0") {
        g.val_zero = true;
      } else if (dst_tensor) {
        g.val_is_tensor = true;
        g.tval = parse_tensor_terms(q, val_toks, ln.no);
      } else {
        std::string v;
        for (const Tok& tk : val_toks) {
          if (!v.empty()) v += " ";
          v += tk.t;
        }
        g.aval = parse_expr_at(q, v, ln.no);
      }
      b.gens.push_back(std::move(g));
    }
    if (b.gens.empty()) fail(h.no, "map block needs at least one generator");
    map_[b.name] = static_cast<unsigned>(cf_.maps.size());
    cf_.maps.push_back(std::move(b));
  }

  void parse_witness() {
    const Line& h = header();
    if (h.toks.size() != 3) fail(h.no, "usage: witness <name> {");
    WitnessBlock b;
    b.name = h.toks[1].t;
    if (wit_.count(b.name)) fail(h.no, "duplicate witness name '" + b.name + "'");
    bool saw_period = false;
    for (const Line* lp : body(h)) {
      const Line& ln = *lp;
      const std::string& key = ln.toks[0].t;
      auto one = [&](std::string& dst) {
        if (ln.toks.size() != 2) fail(ln.no, "usage: " + key + " <name>");
        dst = ln.toks[1].t;
      };
      if (key == "algebra") one(b.algebra);
      else if (key == "module") one(b.module);
      else if (key == "twist") one(b.twist);
      else if (key == "period") {
        if (ln.toks.size() != 2) fail(ln.no, "usage: period <n>");
        b.period = parse_uint(ln.toks[1], ln.no);
        saw_period = true;
      } else if (key == "terms") {
        for (unsigned k = 1; k < ln.toks.size(); ++k) b.terms.push_back(ln.toks[k].t);
      } else if (key == "maps") {
        for (unsigned k = 1; k < ln.toks.size(); ++k) b.maps.push_back(ln.toks[k].t);
      } else {
        fail(ln.no, ln.toks[0].col, "unknown keyword '" + key + "' in witness block");
      }
    }
    if (b.algebra.empty() || !algebra_like(b.algebra))
      fail(h.no, "witness needs a valid 'algebra' line");
    if (b.module.empty() || !mod_.count(b.module))
      fail(h.no, "witness needs a valid 'module' line");
    if (b.twist.empty() || !aut_.count(b.twist))
      fail(h.no, "witness needs a valid 'twist' line");
    if (b.terms.size() < 3) fail(h.no, "witness needs at least three terms");
    if (!saw_period) fail(h.no, "witness needs a 'period' line");
    if (b.period != b.terms.size() - 2)
      fail(h.no, "period " + std::to_string(b.period) + " does not match " +
                     std::to_string(b.terms.size()) + " terms");
    if (b.maps.size() != b.terms.size() - 1)
      fail(h.no, "witness needs one map per adjacent term pair");
    for (const std::string& t : b.terms)
      if (!bim_.count(t)) fail(h.no, "unknown bimodule '" + t + "' in terms");
    for (unsigned i = 0; i < b.maps.size(); ++i) {
      auto it = map_.find(b.maps[i]);
      if (it == map_.end()) fail(h.no, "unknown map '" + b.maps[i] + "'");
      const MapBlock& m = cf_.maps[it->second];
      if (m.src != b.terms[i] || m.dst != b.terms[i + 1])
        fail(h.no, "map '" + b.maps[i] + "' does not connect terms " + b.terms[i] + " -> " +
                       b.terms[i + 1]);
    }
    wit_[b.name] = static_cast<unsigned>(cf_.witnesses.size());
    cf_.witnesses.push_back(std::move(b));
  }
};

// --- serialization ---------------------------------------------------------

void emit_algebra_body(std::ostream& os, const AlgebraSpec& s, const std::string& indent) {
  os << indent << "field " << s.characteristic << "\n";
  os << indent << "vertices";
  for (const auto& v : s.quiver.vertices) os << " " << v;
  os << "\n";
  for (const Arrow& a : s.quiver.arrows)
    os << indent << "arrow " << a.name << ": " << s.quiver.vertices[a.src] << " -> "
       << s.quiver.vertices[a.tgt] << "\n";
  for (const ElementExpr& r : s.relations)
    os << indent << "relation " << element_expr_to_string(s.quiver, r) << "\n";
  os << indent << "nilpotency " << s.nilpotency << "\n";
  if (s.zero_distinct_length > 0)
    os << indent << "zero_distinct_length " << s.zero_distinct_length << "\n";
}

std::string mono_to_string(const Quiver& q, long long coeff, const PathTerm& t) {
  PathTerm c = t;
  c.coeff = coeff;
  return element_expr_to_string(q, {c});
}

} // namespace

const AlgebraSpec* CorpusFile::find_algebra(const std::string& name) const {
  for (const auto& a : algebras)
    if (a.name == name) return &a;
  for (const auto& s : subalgebras)
    if (s.name == name) return &s.spec.presented;
  return nullptr;
}
const AutomorphismBlock* CorpusFile::find_automorphism(const std::string& name) const {
  for (const auto& b : automorphisms)
    if (b.name == name) return &b;
  return nullptr;
}
const SubalgebraBlock* CorpusFile::find_subalgebra(const std::string& name) const {
  for (const auto& b : subalgebras)
    if (b.name == name) return &b;
  return nullptr;
}
const RealizationBlock* CorpusFile::find_realization(const std::string& name) const {
  for (const auto& b : realizations)
    if (b.name == name) return &b;
  return nullptr;
}
const ModuleBlock* CorpusFile::find_module(const std::string& name) const {
  for (const auto& b : modules)
    if (b.name == name) return &b;
  return nullptr;
}
const BimoduleBlock* CorpusFile::find_bimodule(const std::string& name) const {
  for (const auto& b : bimodules)
    if (b.name == name) return &b;
  return nullptr;
}
const MapBlock* CorpusFile::find_map(const std::string& name) const {
  for (const auto& b : maps)
    if (b.name == name) return &b;
  return nullptr;
}
const WitnessBlock* CorpusFile::find_witness(const std::string& name) const {
  for (const auto& b : witnesses)
    if (b.name == name) return &b;
  return nullptr;
}

CorpusFile parse_corpus(const std::string& text) { return Parser(text).run(); }

std::string serialize_corpus(const CorpusFile& c) {
  std::ostringstream os;
  auto quiver_of = [&](const std::string& name) -> const Quiver& {
    const AlgebraSpec* a = c.find_algebra(name);
    if (!a) throw spec_error("serialize: unknown algebra '" + name + "'");
    return a->quiver;
  };
  bool first = true;
  auto gap = [&]() {
    if (!first) os << "\n";
    first = false;
  };

  for (const AlgebraSpec& a : c.algebras) {
    gap();
    os << "algebra " << a.name << " {\n";
    emit_algebra_body(os, a, "  ");
    os << "}\n";
  }
  // subalgebras precede automorphisms: an automorphism may act on a
  // subalgebra's presented algebra, and blocks only reference earlier names
  for (const SubalgebraBlock& b : c.subalgebras) {
    gap();
    const Quiver& big = quiver_of(b.algebra);
    const Quiver& pq = b.spec.presented.quiver;
    os << "subalgebra " << b.name << " of " << b.algebra << " {\n";
    emit_algebra_body(os, b.spec.presented, "  ");
    for (unsigned v = 0; v < pq.vertex_count(); ++v)
      os << "  vertex_image " << pq.vertices[v] << " = "
         << element_expr_to_string(big, b.spec.vertex_image[v]) << "\n";
    for (unsigned a = 0; a < pq.arrows.size(); ++a)
      os << "  arrow_image " << pq.arrows[a].name << " = "
         << element_expr_to_string(big, b.spec.arrow_image[a]) << "\n";
    os << "}\n";
  }
  for (const AutomorphismBlock& b : c.automorphisms) {
    gap();
    const Quiver& q = quiver_of(b.algebra);
    os << "automorphism " << b.name << " on " << b.algebra << " {\n";
    for (unsigned v = 0; v < q.vertex_count(); ++v)
      os << "  vertex " << q.vertices[v] << " -> " << q.vertices[b.spec.vertex_image[v]] << "\n";
    for (unsigned a = 0; a < q.arrows.size(); ++a)
      os << "  arrow " << q.arrows[a].name << " -> "
         << element_expr_to_string(q, b.spec.arrow_image[a]) << "\n";
    os << "}\n";
  }
  for (const RealizationBlock& b : c.realizations) {
    gap();
    const Quiver& big = quiver_of(b.algebra);
    const Quiver& eq = quiver_of(b.endo);
    os << "realization " << b.name << " of " << b.algebra << " as " << b.endo << " {\n";
    os << "  summands";
    for (const auto& s : b.summands) os << " " << s;
    os << "\n";
    for (unsigned a = 0; a < eq.arrows.size(); ++a)
      os << "  arrow " << eq.arrows[a].name << " = "
         << element_expr_to_string(big, b.arrow_image[a]) << "\n";
    os << "}\n";
  }
  for (const ModuleBlock& b : c.modules) {
    gap();
    const Quiver& q = quiver_of(b.algebra);
    os << "module " << b.name << " over " << b.algebra << " {\n";
    if (b.kind == ModuleBlock::Kind::simple) {
      os << "  simple " << b.vertex << "\n";
    } else if (b.kind == ModuleBlock::Kind::projective) {
      os << "  projective " << b.vertex << "\n";
    } else {
      os << "  side " << (b.left ? "left" : "right") << "\n";
      os << "  dims";
      for (unsigned d : b.dims) os << " " << d;
      os << "\n";
      for (unsigned a = 0; a < q.arrows.size(); ++a) {
        const Mat& m = b.action[a];
        if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) continue;
        os << "  action " << q.arrows[a].name << " = [";
        for (unsigned r = 0; r < m.rows(); ++r) {
          if (r) os << "; ";
          for (unsigned cc = 0; cc < m.cols(); ++cc) {
            if (cc) os << " ";
            os << unsigned(m.at(r, cc));
          }
        }
        os << "]\n";
      }
    }
    os << "}\n";
  }
  for (const BimoduleBlock& b : c.bimodules) {
    gap();
    os << "bimodule " << b.name << " over " << b.algebra << " {\n  ";
    switch (b.kind) {
      case BimoduleBlock::Kind::regular: os << "regular"; break;
      case BimoduleBlock::Kind::twisted: os << "twisted " << b.twist; break;
      case BimoduleBlock::Kind::tensor:
        os << "tensor " << b.left_op << " over " << b.over;
        if (!b.middle_twist.empty()) os << " twist " << b.middle_twist;
        os << " " << b.right_op;
        break;
    }
    os << "\n}\n";
  }
  for (const MapBlock& b : c.maps) {
    gap();
    const Quiver& q = quiver_of(b.algebra);
    os << "map " << b.name << " from " << b.src << " to " << b.dst << " {\n";
    for (const MapGen& g : b.gens) {
      os << "  gen ";
      if (g.src_is_tensor)
        os << element_expr_to_string(q, g.lhs) << " (x) " << element_expr_to_string(q, g.rhs);
      else
        os << element_expr_to_string(q, g.lhs);
      os << " -> ";
      if (g.val_zero) {
        os << "0";
      } else if (g.val_is_tensor) {
        bool f2 = true;
        for (const TensorTerm& t : g.tval) {
          long long mag = t.coeff < 0 ? -t.coeff : t.coeff;
          if (f2) {
            if (t.coeff < 0) os << "- ";
          } else {
            os << (t.coeff < 0 ? " - " : " + ");
          }
          f2 = false;
          os << mono_to_string(q, mag, t.x) << " (x) " << mono_to_string(q, 1, t.y);
        }
      } else {
        os << element_expr_to_string(q, g.aval);
      }
      os << "\n";
    }
    os << "}\n";
  }
  for (const WitnessBlock& b : c.witnesses) {
    gap();
    os << "witness " << b.name << " {\n";
    os << "  algebra " << b.algebra << "\n";
    os << "  module " << b.module << "\n";
    os << "  twist " << b.twist << "\n";
    os << "  period " << b.period << "\n";
    os << "  terms";
    for (const auto& t : b.terms) os << " " << t;
    os << "\n  maps";
    for (const auto& m : b.maps) os << " " << m;
    os << "\n}\n";
  }
  return os.str();
}

} // namespace qrep
