#pragma once

// Bimodules over a bound quiver algebra: a single space carrying commuting
// left and right actions.  The key constructions are the (twisted) regular
// bimodule, balanced tensor products over a subalgebra, bimodule maps fixed
// by generator images, and the collapse of a bimodule against a one-sided
// module (which is how exactness of a bimodule complex gets probed on
// simples and how syzygy comparisons are formed).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qrep/rep.hpp"

namespace qrep {

struct Bimodule {
  const Algebra* A = nullptr;
  std::string name;
  unsigned total = 0;
  std::vector<Mat> lact, ract;    // per arrow, total x total
  std::vector<Mat> lproj, rproj;  // per vertex, total x total

  const Field& field() const { return A->field(); }

  // Operator of the left action of x (m -> x.m) and of the right action
  // (m -> m.x).  Defined for any element, via its basis-path expansion.
  Mat act_left(const El& x) const;
  Mat act_right(const El& x) const;

  // Operators of the left/right action of every algebra basis element, in
  // basis order.  One matrix product per basis path (prefix/suffix reuse);
  // computed on first use and cached, since translate tables are needed every
  // time a map in or out of this bimodule is assembled.
  const std::vector<Mat>& basis_left_ops() const;
  const std::vector<Mat>& basis_right_ops() const;

  // Structural checks: the vertex projections partition the identity on each
  // side, actions live in the correct blocks, and (for small spaces, where
  // the quadratic battery is cheap) the two actions commute and the defining
  // ideal acts by zero on either side.  Tensor products enforce the latter
  // through construction invariants instead; see tensor_bimodule.
  void validate() const;

  // Present only on tensor products: enough construction data to express a
  // pure tensor x (x) y in the quotient coordinates.
  struct TensorData {
    unsigned xdim = 0, ydim = 0;    // factor total dimensions
    std::vector<unsigned> pair_v;   // per grid slot: Y-side subalgebra vertex paired with it
    std::vector<Mat> xproj, yproj;  // per grid slot: projector onto the factor piece
    std::vector<Mat> xbasis, ybasis;  // per grid slot: column bases of the pieces
    std::vector<unsigned> goff;     // grid offset per slot
    unsigned grid = 0;
    Mat proj, lift;                 // grid -> quotient and a section back
  };
  std::optional<TensorData> tdata;

  // Quotient coordinates of x (x) y; only on tensor products.
  std::vector<fel> pure_tensor(const std::vector<fel>& x, const std::vector<fel>& y) const;

 private:
  mutable std::vector<Mat> lops_, rops_;  // basis-operator caches
};

// The regular bimodule A, both actions by multiplication.
Bimodule regular_bimodule(const Algebra& A);

// The regular space with the left action twisted: z * x = sigma(z) x.
Bimodule twisted_bimodule(const Algebra& A, const Automorphism& sigma);

// X (x)_S Y for bimodules over the same algebra, balanced over the image of
// the subalgebra S: x i(z) (x) y = x (x) i(tau(z)) y for z in S (tau an
// automorphism of the presented subalgebra; identity when null).  Requires
// the subalgebra's vertex idempotents to sum to the identity.
Bimodule tensor_bimodule(const Bimodule& X, const Bimodule& Y, const Subalgebra& S,
                         const Automorphism* tau, const std::string& name);

struct BimoduleMap {
  const Bimodule* src = nullptr;
  const Bimodule* dst = nullptr;
  std::string name;
  Mat m;  // dst.total x src.total
};

// The unique bimodule morphism sending each generator to its image, with
// generators and images given in total coordinates.  Throws spec_error if
// the generators do not generate the source, or if the assignment violates
// a relation that holds among the generators' translates (reported with the
// offending generator and translating basis pair).
BimoduleMap make_bimodule_map(const Bimodule& src, const Bimodule& dst, const std::string& name,
                              const std::vector<std::pair<std::vector<fel>, std::vector<fel>>>& gens);

BimoduleMap compose(const BimoduleMap& g, const BimoduleMap& f);  // g after f
bool is_zero(const BimoduleMap& f);

// Homology of 0 -> T0 -> T1 -> ... -> Tn -> 0 read off a chain of matrices
// (maps[i]: dims[i] -> dims[i+1]); entry i is the homology dimension at Ti.
// chain_homology requires consecutive composites to vanish.
bool chain_is_complex(const std::vector<Mat>& maps);
std::vector<unsigned> chain_homology(const std::vector<unsigned>& dims, const std::vector<Mat>& maps);

bool is_complex(const std::vector<const BimoduleMap*>& maps);
std::vector<unsigned> homology_dims(const std::vector<const BimoduleMap*>& maps);

// --- collapsing against one-sided modules ---------------------------------

// Y (x)_A M for a left module M (result a left module), or N (x)_A Y for a
// right module N (result a right module), together with the construction
// data needed to transport bimodule maps to maps of the collapsed modules.
struct ModuleTensor {
  Representation rep;
  const Bimodule* bimod = nullptr;
  bool left = true;                     // side of the one-sided factor's result
  std::vector<unsigned> other_dims;     // the one-sided module's dimension vector
  std::vector<std::vector<Mat>> piece;  // [result grade w][inner grade v]: basis of the Y piece
  std::vector<Mat> proj, lift;          // per result grade w: grid_w <-> block w
  std::vector<std::vector<unsigned>> goff;  // [w][v]: grid offset
  std::vector<unsigned> griddim;        // per w
};

ModuleTensor tensor_with_left_module(const Bimodule& Y, const Representation& M, const std::string& name);
ModuleTensor tensor_with_right_module(const Representation& N, const Bimodule& Y, const std::string& name);

// Total matrix of d (x) id (resp. id (x) d) between two collapses of the
// same one-sided module along the two ends of d.
Mat induced_map(const ModuleTensor& src, const ModuleTensor& dst, const BimoduleMap& d);

}  // namespace qrep
