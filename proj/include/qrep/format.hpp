// Text format for algebra/module/bimodule corpus files.
//
// A corpus file is a sequence of blocks.  Declaration order matters: a block
// may only reference names declared earlier in the same file.
//
//   algebra E {
//     field 3
//     vertices 1 2 4 5
//     arrow eps: 1 -> 5
//     relation eps*eta*eps
//     nilpotency 5
//     zero_distinct_length 4      # optional
//   }
//   automorphism sigma on E { vertex 1 -> 2 ... arrow eps -> etap ... }
//   subalgebra B of E { <algebra body> vertex_image 1 = e1 ... arrow_image eps = eps ... }
//   realization R of A as E { summands 1 2 4 5  arrow eps = eps ... }
//   module M over E { side left  dims 1 2 1 2  action eps = [0 1; 1 0] ... }
//   module S2 over E { simple 2 }            (or: projective 2)
//   bimodule EE over E { regular }
//   bimodule sE over E { twisted sigma }
//   bimodule Y0 over E { tensor EE over B EE }          (optional: twist tau)
//   map d0 from Y0 to EE { gen e1 (x) e1 -> e1 ... }
//   witness w { algebra E  module M  twist sigma  period 2
//               terms sE Y1 Y0 EE  maps d2 d1 d0 }
//
// '#' starts a comment.  Parse errors carry 1-based line (and column where
// meaningful).  serialize_corpus() emits the canonical form: parsing its
// output reproduces the same data byte for byte.
#pragma once

#include <string>
#include <vector>

#include "qrep/algebra.hpp"
#include "qrep/matrix.hpp"

namespace qrep {

struct AutomorphismBlock {
  std::string name;
  std::string algebra;
  AutomorphismSpec spec; // vertex_image as indices into the algebra's vertices
};

struct SubalgebraBlock {
  std::string name;    // == spec.presented.name
  std::string algebra; // the ambient algebra
  SubalgebraSpec spec; // image expressions over the ambient quiver
};

struct RealizationBlock {
  std::string name;
  std::string algebra;                   // the ambient algebra A
  std::string endo;                      // the presented endomorphism algebra E
  std::vector<std::string> summands;     // ambient vertex labels
  std::vector<ElementExpr> arrow_image;  // per E-arrow, over the ambient quiver
};

struct ModuleBlock {
  enum class Kind { literal, simple, projective };
  std::string name;
  std::string algebra;
  bool left = true;
  Kind kind = Kind::literal;
  std::string vertex;          // simple/projective: the vertex label
  std::vector<unsigned> dims;  // literal: one per vertex, algebra order
  std::vector<Mat> action;     // literal: one per arrow; zero matrices omitted
                               // in text.  left: dim(tgt) x dim(src); right:
                               // dim(src) x dim(tgt).
};

struct BimoduleBlock {
  enum class Kind { regular, twisted, tensor };
  std::string name;
  std::string algebra;
  Kind kind = Kind::regular;
  std::string twist;        // twisted: automorphism acting through the left
  std::string left_op, right_op; // tensor operand bimodule names
  std::string over;         // tensor: subalgebra name
  std::string middle_twist; // tensor: optional automorphism of the subalgebra
};

// One summand of a map value: coeff * (x tensor y).
struct TensorTerm {
  long long coeff = 1;
  PathTerm x, y; // each a single monomial with coeff 1
};

struct MapGen {
  // Source reference: a pure tensor for tensor sources, otherwise a single
  // element expression (lhs only, rhs unused).
  bool src_is_tensor = false;
  ElementExpr lhs, rhs;
  // Value: zero, a tensor-term list, or an element expression.
  bool val_zero = false;
  bool val_is_tensor = false;
  std::vector<TensorTerm> tval;
  ElementExpr aval;
};

struct MapBlock {
  std::string name;
  std::string algebra;
  std::string src, dst; // bimodule names
  std::vector<MapGen> gens;
};

struct WitnessBlock {
  std::string name;
  std::string algebra;
  std::string module;
  std::string twist;
  unsigned period = 0;
  std::vector<std::string> terms; // bimodule names, leftmost first
  std::vector<std::string> maps;  // map names, leftmost first
};

struct CorpusFile {
  std::vector<AlgebraSpec> algebras;
  std::vector<AutomorphismBlock> automorphisms;
  std::vector<SubalgebraBlock> subalgebras;
  std::vector<RealizationBlock> realizations;
  std::vector<ModuleBlock> modules;
  std::vector<BimoduleBlock> bimodules;
  std::vector<MapBlock> maps;
  std::vector<WitnessBlock> witnesses;

  const AlgebraSpec* find_algebra(const std::string& name) const;
  const AutomorphismBlock* find_automorphism(const std::string& name) const;
  const SubalgebraBlock* find_subalgebra(const std::string& name) const;
  const RealizationBlock* find_realization(const std::string& name) const;
  const ModuleBlock* find_module(const std::string& name) const;
  const BimoduleBlock* find_bimodule(const std::string& name) const;
  const MapBlock* find_map(const std::string& name) const;
  const WitnessBlock* find_witness(const std::string& name) const;
};

// Throws spec_error with "line N[, col C]: ..." on malformed input.
CorpusFile parse_corpus(const std::string& text);

// Canonical text form; parse_corpus(serialize_corpus(c)) reproduces c.
std::string serialize_corpus(const CorpusFile& c);

} // namespace qrep
