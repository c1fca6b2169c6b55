// Finite-dimensional representations of bound quiver algebras: one GF(p)
// space per vertex, one matrix per arrow, and the module-theoretic toolkit
// built on top (radical/socle filtrations, projective covers, syzygies,
// hom spaces, isomorphism testing, twists, duals, restriction, and the
// hom functor to an idempotent-summand endomorphism algebra).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qrep/algebra.hpp"

namespace qrep {

// A representation of A: comp_v = k^{dims[v]}, plus a matrix per arrow.
//   left module:  act[a] maps comp_{src(a)} -> comp_{tgt(a)}  (tgt x src)
//   right module: act[a] maps comp_{tgt(a)} -> comp_{src(a)}  (src x tgt)
// The total space concatenates the vertex components in vertex order.
struct Representation {
  const Algebra* A = nullptr;
  bool left = true;
  std::string name;
  std::vector<unsigned> dims; // one per vertex
  std::vector<Mat> act;       // one per arrow

  // Computed by finalize(): block offsets and the total dimension.
  std::vector<unsigned> offs;
  unsigned total = 0;

  // Validates shapes and that the defining relations of A (including the
  // nilpotency bound and distinct-endpoint vanishing) act by zero, then
  // fills in offsets.  Throws spec_error on a violation.
  void finalize();

  unsigned dim() const { return total; }
  unsigned vertex_count() const { return static_cast<unsigned>(dims.size()); }
  unsigned offset(unsigned v) const { return offs[v]; }

  // Action of an algebra element on the total space (dim x dim).
  Mat action_of(const El& x) const;
  // Action of one basis element of A (a path) on the total space.
  Mat action_of_basis(unsigned bi) const;
  // Raw action of a path expression (no reduction through A's basis).
  Mat action_of_expr(const ElementExpr& e) const;
  // Identity on the block of vertex v, zero elsewhere (dim x dim).
  Mat idem_projection(unsigned v) const;
};

// A homomorphism of representations, stored on total coordinates
// (dst.dim() x src.dim(), block structure respected).
struct ModuleHom {
  const Representation* src = nullptr;
  const Representation* dst = nullptr;
  Mat m;

  bool is_zero() const { return m.is_zero(); }
  unsigned rank() const;
};

// Checks block structure and intertwining; throws spec_error if violated.
void validate_hom(const ModuleHom& h);
ModuleHom compose(const ModuleHom& g, const ModuleHom& f); // g after f

// --- construction -----------------------------------------------------------

Representation simple_module(const Algebra& A, unsigned v, bool left = true);
// Indecomposable projective at v: Ae_v (left) or e_v A (right).
Representation projective_module(const Algebra& A, unsigned v, bool left = true);
// The algebra as a module over itself.
Representation regular_module(const Algebra& A, bool left = true);
Representation direct_sum(const std::vector<const Representation*>& parts,
                          const std::string& name);

// --- subspaces and subquotients ---------------------------------------------

// Columns spanning rad M = sum of arrow-action images, in total coordinates.
Mat radical_subspace(const Representation& R);
// Columns spanning soc M = joint kernel of all arrow actions.
Mat socle_subspace(const Representation& R);

// Closes the span of the given columns under vertex projections and arrow
// actions; the result is the smallest submodule containing them.
Mat span_submodule(const Representation& R, const Mat& cols);

struct SubQuot {
  Representation rep;
  // sub: inclusion (big.dim() x rep.dim()); quotient: projection
  // (rep.dim() x big.dim()).
  Mat map;
};

// cols must span a homogeneous invariant subspace (use span_submodule for
// arbitrary spans); throws spec_error otherwise.
SubQuot sub_representation(const Representation& R, const Mat& cols, const std::string& name);
SubQuot quotient_representation(const Representation& R, const Mat& cols, const std::string& name);

SubQuot top_of(const Representation& R); // R / rad R, with the projection

// --- filtrations --------------------------------------------------------------

// Layers listed top first; each layer counts simple multiplicities per vertex.
struct LoewyTable {
  std::vector<std::string> vertices; // labels, algebra order
  std::vector<std::vector<unsigned>> layers;

  bool operator==(const LoewyTable& o) const { return layers == o.layers; }
  bool operator!=(const LoewyTable& o) const { return !(*this == o); }
  // "1/2 5/1 1 4/2 5/1": layers top to socle, labels repeated by multiplicity.
  std::string one_line() const;
  // One layer per line, centered like a diagram.
  std::string diagram(const std::string& indent = "  ") const;
};

LoewyTable loewy_series(const Representation& R);
// Socle series in the same orientation (first layer = top slice), so equal
// tables mean "coinciding Loewy and socle series".
LoewyTable socle_series(const Representation& R);
LoewyTable parse_loewy(const Algebra& A, const std::string& one_line);

// --- covers and syzygies -------------------------------------------------------

struct Cover {
  Representation P;
  Mat map;                     // P -> M on total coordinates, surjective
  std::vector<unsigned> mults; // multiplicity of P_v per vertex
};

Cover projective_cover(const Representation& M);
// n-th syzygy via iterated minimal projective covers (n >= 1).
Representation omega(const Representation& M, unsigned n);
bool is_projective_module(const Representation& M);
// Maximal summand with no projective direct summand (trace pairing with each
// indecomposable projective, split off, repeat).
Representation strip_projective_summands(const Representation& M);

// --- hom spaces and isomorphism ------------------------------------------------

// Basis of the intertwiner space Hom(X, Y), total coordinates.
std::vector<Mat> hom_space(const Representation& X, const Representation& Y);

struct IsoResult {
  enum class Status { yes, no, undecided };
  Status status = Status::undecided;
  Mat witness; // invertible intertwiner when status == yes
  std::string detail;
};

// Exhaustive over the hom space when small enough (definitive yes/no),
// otherwise seeded random sampling (yes or undecided, never a false no).
IsoResult is_isomorphic(const Representation& X, const Representation& Y,
                        std::uint64_t seed = 0, unsigned random_trials = 64);

// --- functors -------------------------------------------------------------------

// sigma-twist: same space, action through sigma.  Component at v is M at
// sigma(v); works for either side.
Representation twist_module(const Representation& M, const Automorphism& sigma);
// k-linear dual: left modules become right ones and vice versa.
Representation dual_module(const Representation& M);
// Restriction along a subalgebra embedding; component at w concatenates the
// ambient components named by the idempotent image of w.  The result points
// at S.small, so S must outlive it.
Representation restrict_module(const Representation& M, const Subalgebra& S);

// A realization of `endo` as the idempotent corner of `big` spanned by the
// chosen summand vertices: arrows map to corner elements, relations vanish,
// and basis-path images span the full corner.
struct Realization {
  const Algebra* big = nullptr;
  const Algebra* endo = nullptr;
  std::vector<unsigned> summands; // big vertex indices, distinct
  std::vector<El> arrow_img;      // per endo arrow
  // Image in big of one basis path of endo.
  El image_of_path(const std::vector<unsigned>& arrows, unsigned endo_vertex) const;
};

Realization build_realization(const Algebra& big, const Algebra& endo,
                              const std::vector<std::string>& summand_labels,
                              const std::vector<ElementExpr>& arrow_exprs);

// Hom(P, X) for P the summand projective, as a module over endo: component
// at endo vertex i is X's component at summands[i].
Representation hom_module(const Realization& r, const Representation& X);

// --- utilities -------------------------------------------------------------------

// Random submodule: closure of a few random vectors (seeded, deterministic).
Representation random_submodule(const Representation& R, std::uint64_t seed);

} // namespace qrep
