// Bound quiver algebras over GF(p): finite quiver, admissible relations, and a
// nilpotency bound N (every path of length >= N vanishes).  The algebra basis
// is the set of path residues that survive reduction modulo the two-sided
// ideal generated by the relations (plus optional "all paths of a given
// length with distinct endpoints vanish" generators).
//
// Conventions (fixed project-wide, validated empirically by the golden corpus
// tests):
//   * A path is stored as its arrows in traversal order: {a, b} means
//     "traverse a first, then b", and requires target(a) = source(b).
//     In element text syntax this is written "a*b".
//   * Multiplication mul(x, y) composes as functions: it is nonzero only when
//     traversal-end(y) = traversal-start(x), and equals "traverse y, then x".
//     Hence e_i * x picks out the part of x ending at i, and x * e_j the part
//     starting at j.
//   * Ae_j (left projective) = paths starting at j; e_iA = paths ending at i;
//     e_i A e_j = paths from j to i in traversal order.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qrep/matrix.hpp"

namespace qrep {

// Thrown for malformed specifications (bad quivers, relations, images, text).
struct spec_error : std::runtime_error {
  explicit spec_error(const std::string& what) : std::runtime_error(what) {}
};

struct Arrow {
  std::string name;
  unsigned src = 0, tgt = 0; // vertex indices
};

struct Quiver {
  std::vector<std::string> vertices; // unique labels, order fixed
  std::vector<Arrow> arrows;         // unique names

  unsigned vertex_count() const { return static_cast<unsigned>(vertices.size()); }
  int vertex_index(const std::string& label) const;
  int arrow_index(const std::string& name) const;
  void validate() const; // uniqueness + endpoint sanity
};

// One term of an element expression: coeff * (path | e_vertex | 1).
struct PathTerm {
  long long coeff = 1;
  std::vector<unsigned> arrows; // traversal order; empty unless path term
  int vertex = -1;              // >= 0: the idempotent e_<vertex>
  bool identity = false;        // the element 1 = sum of all idempotents
};
using ElementExpr = std::vector<PathTerm>;

// Parse "2*a*b - eps + e1" against a quiver.  Factors are arrow names,
// idempotents e<label>, or the literal 1; '*'-chains denote traversal-order
// paths.  Offsets in error messages are 0-based character positions.
ElementExpr parse_element_expr(const Quiver& q, const std::string& text);
std::string element_expr_to_string(const Quiver& q, const ElementExpr& e);

struct AlgebraSpec {
  std::string name;
  unsigned characteristic = 3;
  Quiver quiver;
  std::vector<ElementExpr> relations;
  unsigned nilpotency = 2;           // paths of this length vanish
  unsigned zero_distinct_length = 0; // 0 = off; else all paths of exactly this
                                     // length with distinct endpoints vanish
};

class Algebra;

// A dense element in the basis of path residues.
struct El {
  const Algebra* A = nullptr;
  std::vector<fel> c;

  bool is_zero() const;
  bool operator==(const El& o) const { return c == o.c; }
  bool operator!=(const El& o) const { return c != o.c; }
};

El operator+(const El& x, const El& y);
El operator-(const El& x, const El& y);
El operator*(const El& x, const El& y); // function-order product

class Algebra {
public:
  struct BPath {
    unsigned start = 0, end = 0;  // traversal endpoints
    std::vector<unsigned> arrows; // traversal order
  };

  // Empty until assigned from build(); only build() produces a usable algebra.
  Algebra() = default;

  static Algebra build(const AlgebraSpec& spec);

  const AlgebraSpec& spec() const { return spec_; }
  const std::string& name() const { return spec_.name; }
  const Quiver& quiver() const { return spec_.quiver; }
  const Field& field() const { return f_; }
  unsigned dim() const { return static_cast<unsigned>(basis_.size()); }
  unsigned vertex_count() const { return spec_.quiver.vertex_count(); }

  const BPath& basis_path(unsigned i) const { return basis_[i]; }
  // Pretty traversal-order name of basis element i ("e1", "a*b").
  std::string basis_name(unsigned i) const;

  El zero() const;
  El one() const;
  El idem(unsigned v) const;
  El arrow_el(unsigned a) const;
  El basis_el(unsigned i) const;

  El mul(const El& x, const El& y) const;
  El add(const El& x, const El& y) const;
  El sub(const El& x, const El& y) const;
  El scale(fel k, const El& x) const;

  // Evaluate an expression (paths composed in traversal order).
  El eval(const ElementExpr& e) const;

  // Matrices of the regular actions in the residue basis (column j = image of
  // basis element j).
  Mat left_mult(const El& x) const;  // y -> x*y
  Mat right_mult(const El& x) const; // y -> y*x

  // Basis indices of A·e_v (traversal start v) and e_v·A (traversal end v).
  const std::vector<unsigned>& basis_with_start(unsigned v) const { return by_start_[v]; }
  const std::vector<unsigned>& basis_with_end(unsigned v) const { return by_end_[v]; }

  // Entry (i,j) = multiplicity of S_j in the left projective at i
  //             = dim e_j·(A·e_i) = number of basis paths i -> j.
  std::vector<std::vector<unsigned>> cartan() const;

  // Residue of an arbitrary traversal-order path (zero when it leaves the
  // enumerated range or reduces away).
  El reduce_path(const std::vector<unsigned>& arrows) const;

  std::string el_to_string(const El& x) const;

  // All composable traversal-order paths of exactly the given length.
  std::vector<std::vector<unsigned>> paths_of_length(unsigned len) const;

private:
  friend struct El;
  AlgebraSpec spec_;
  Field f_{3};
  std::vector<BPath> basis_;
  using Sparse = std::vector<std::pair<unsigned, fel>>;
  std::vector<std::vector<unsigned>> by_start_, by_end_;
  std::vector<unsigned> idem_index_; // basis index of e_v per vertex
  // mul table in function order: tab_[i][j] = b_i * b_j.
  std::vector<std::vector<Sparse>> tab_;
};

// ---------------------------------------------------------------------------
// Automorphisms

struct AutomorphismSpec {
  std::string name;
  std::vector<unsigned> vertex_image;     // permutation, by vertex index
  std::vector<ElementExpr> arrow_image;   // per arrow
};

struct Automorphism {
  const Algebra* A = nullptr;
  std::string name;
  std::vector<unsigned> vertex_image, vertex_preimage;
  Mat matrix, inverse_matrix; // on the residue basis

  El apply(const El& x) const;
  El apply_inv(const El& x) const;
  unsigned vimg(unsigned v) const { return vertex_image[v]; }
  unsigned vinv(unsigned v) const { return vertex_preimage[v]; }
  bool is_identity() const;
};

// Validates endpoint compatibility, relation preservation, radical images,
// bijectivity, and multiplicativity on all basis pairs.  Throws spec_error.
Automorphism build_automorphism(const Algebra& a, const AutomorphismSpec& spec);
Automorphism identity_automorphism(const Algebra& a);
Automorphism compose(const Automorphism& f, const Automorphism& g); // f after g

// ---------------------------------------------------------------------------
// Subalgebras: presented by their own quiver + relations, embedded by
// explicit images of vertices (sums of idempotents) and arrows.

struct SubalgebraSpec {
  AlgebraSpec presented;
  std::vector<ElementExpr> vertex_image; // per presented vertex, in the big algebra
  std::vector<ElementExpr> arrow_image;  // per presented arrow
};

struct Subalgebra {
  const Algebra* big = nullptr;
  Algebra small;
  Mat embed;                  // dim(big) x dim(small): column = image of basis
  std::vector<El> vertex_idem; // images of the presented idempotents
  std::vector<El> arrow_img;   // images of the presented arrows

  El image(const El& x) const; // apply the embedding to a small-algebra element
};

// Validates orthogonal idempotent images, endpoint compatibility, vanishing
// of the presented ideal's generators in the big algebra, and injectivity.
Subalgebra build_subalgebra(const Algebra& big, const SubalgebraSpec& spec);

// ---------------------------------------------------------------------------
// Symmetry

struct SymmetricReport {
  enum class Status { witness_found, not_symmetric_exhaustive, undecided_budget };
  Status status = Status::undecided_budget;
  std::vector<fel> form; // the symmetrizing lambda over the basis, if found
  unsigned central_dim = 0;
  std::string detail;
};

// Searches for a linear form lambda with lambda(xy) = lambda(yx) and
// nondegenerate Gram matrix lambda(b_i b_j).  Exhausts the central-form space
// when small enough (definitive either way); otherwise tries a deterministic
// socle-supported candidate and then seeded random central forms.
SymmetricReport verify_symmetric(const Algebra& a, std::uint64_t seed = 0,
                                 unsigned budget_trials = 64);

} // namespace qrep
