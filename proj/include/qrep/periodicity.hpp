#pragma once

// Periodicity of modules under the syzygy functor, in two strengths:
//   * plain sigma-periodicity: omega^n(M) is isomorphic to the sigma-twist
//     of M, established by computing iterated minimal covers; and
//   * strong sigma-periodicity: an explicit exact bimodule complex
//     0 -> twisted A -> Y_{n-1} -> ... -> Y_0 -> A -> 0 that stays exact and
//     projective after collapsing against the module (and its dual), which
//     yields the plain statement for every module at once.
// Plus the corner-splitting facts a relative-projectivity argument rests on.

#include <string>
#include <vector>

#include "qrep/bimod.hpp"

namespace qrep {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckList {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  void add(std::string name, bool pass, std::string detail = "");
  void add(CheckResult r) { checks.push_back(std::move(r)); }
};

// omega^n(M) compared with the sigma-twist of M (either side).
CheckResult check_periodic(const Representation& M, const Automorphism& sigma, unsigned n);

// An automorphism with the arrows of apply/apply_inv exchanged.
Automorphism inverse_of(const Automorphism& s);

// The witness data for strong periodicity of period n: terms are
// [twisted regular, Y_{n-1}, ..., Y_0, regular] and maps[i] connects
// terms[i] -> terms[i+1].
struct StrongWitness {
  const Representation* M = nullptr;  // left module over the same algebra
  const Automorphism* sigma = nullptr;
  std::vector<const Bimodule*> terms;
  std::vector<const BimoduleMap*> maps;
};

// Collapse the witness against M (left) or against dual(M) (right) and check:
// the collapsed chain is a complex, it is exact, its ends are the twist of
// the module and the module itself, and every middle term is projective.
CheckList check_strong_periodic_left(const StrongWitness& w);
CheckList check_strong_periodic_right(const StrongWitness& w);

// --- corner splittings ------------------------------------------------------

struct RestrictionCheck {
  std::string label;
  const Representation* module = nullptr;
  const Subalgebra* S = nullptr;  // subalgebra of the module's algebra
};

struct CornerSplitInput {
  const Realization* real = nullptr;   // corner realization of E inside A
  const Representation* M = nullptr;   // left E-module, the non-projective heart
  std::vector<RestrictionCheck> restrictions;
};

// Checks that the corner has a single complement vertex q; that M is the
// hom-functor image of the projective at q; that Hom(P, A) splits, by
// right-support, into the regular module plus M (the regular part matched by
// the corner embedding itself); that the corner right module splits, by
// left-support, into the right regular module plus dual(M); and that the
// requested restrictions are projective.
CheckList corner_split_prereqs(const CornerSplitInput& in);

}  // namespace qrep
