#include "qrep/corpus.hpp"

#include <stdexcept>

namespace qrep {

namespace {

template <class M>
const typename M::mapped_type& lookup(const M& m, const std::string& name, const char* kind) {
  auto it = m.find(name);
  if (it == m.end()) throw spec_error(std::string("unknown ") + kind + " '" + name + "'");
  return it->second;
}

}  // namespace

const Algebra& Corpus::algebra(const std::string& name) const {
  auto it = algebras.find(name);
  if (it != algebras.end()) return it->second;
  auto st = subalgebras.find(name);
  if (st != subalgebras.end()) return st->second.small;
  throw spec_error("unknown algebra '" + name + "'");
}

const Subalgebra& Corpus::subalgebra(const std::string& name) const {
  return lookup(subalgebras, name, "subalgebra");
}
const Automorphism& Corpus::automorphism(const std::string& name) const {
  return lookup(automorphisms, name, "automorphism");
}
const Realization& Corpus::realization(const std::string& name) const {
  return lookup(realizations, name, "realization");
}
const Representation& Corpus::module(const std::string& name) const {
  return lookup(modules, name, "module");
}
const Bimodule& Corpus::bimodule(const std::string& name) const {
  return lookup(bimodules, name, "bimodule");
}
const BimoduleMap& Corpus::bimap(const std::string& name) const {
  return lookup(bimaps, name, "map");
}

const WitnessBlock& Corpus::witness_block(const std::string& name) const {
  const WitnessBlock* w = file.find_witness(name);
  if (!w) throw spec_error("unknown witness '" + name + "'");
  return *w;
}

StrongWitness Corpus::witness(const std::string& name) const {
  const WitnessBlock& wb = witness_block(name);
  StrongWitness w;
  w.M = &module(wb.module);
  w.sigma = &automorphism(wb.twist);
  for (const std::string& t : wb.terms) w.terms.push_back(&bimodule(t));
  for (const std::string& m : wb.maps) w.maps.push_back(&bimap(m));
  return w;
}

Corpus build_corpus(CorpusFile f) {
  Corpus c;
  c.file = std::move(f);

  for (const AlgebraSpec& s : c.file.algebras) c.algebras.emplace(s.name, Algebra::build(s));

  for (const SubalgebraBlock& b : c.file.subalgebras)
    c.subalgebras.emplace(b.name, build_subalgebra(c.algebra(b.algebra), b.spec));

  for (const AutomorphismBlock& b : c.file.automorphisms)
    c.automorphisms.emplace(b.name, build_automorphism(c.algebra(b.algebra), b.spec));

  for (const RealizationBlock& b : c.file.realizations)
    c.realizations.emplace(
        b.name, build_realization(c.algebra(b.algebra), c.algebra(b.endo), b.summands,
                                  b.arrow_image));

  for (const ModuleBlock& b : c.file.modules) {
    const Algebra& A = c.algebra(b.algebra);
    if (b.kind == ModuleBlock::Kind::literal) {
      Representation r;
      r.A = &A;
      r.left = b.left;
      r.name = b.name;
      r.dims = b.dims;
      r.act = b.action;
      r.finalize();
      c.modules.emplace(b.name, std::move(r));
    } else {
      int v = A.quiver().vertex_index(b.vertex);
      if (v < 0) throw spec_error("module '" + b.name + "' names a missing vertex");
      Representation r = b.kind == ModuleBlock::Kind::simple
                             ? simple_module(A, static_cast<unsigned>(v), b.left)
                             : projective_module(A, static_cast<unsigned>(v), b.left);
      r.name = b.name;
      c.modules.emplace(b.name, std::move(r));
    }
  }

  for (const BimoduleBlock& b : c.file.bimodules) {
    const Algebra& A = c.algebra(b.algebra);
    Bimodule bm;
    switch (b.kind) {
      case BimoduleBlock::Kind::regular:
        bm = regular_bimodule(A);
        break;
      case BimoduleBlock::Kind::twisted:
        bm = twisted_bimodule(A, c.automorphism(b.twist));
        break;
      case BimoduleBlock::Kind::tensor: {
        const Automorphism* tau =
            b.middle_twist.empty() ? nullptr : &c.automorphism(b.middle_twist);
        bm = tensor_bimodule(c.bimodule(b.left_op), c.bimodule(b.right_op),
                             c.subalgebra(b.over), tau, b.name);
        break;
      }
    }
    bm.name = b.name;
    c.bimodules.emplace(b.name, std::move(bm));
  }

  for (const MapBlock& b : c.file.maps) {
    const Algebra& A = c.algebra(b.algebra);
    const Field& fld = A.field();
    const Bimodule& src = c.bimodule(b.src);
    const Bimodule& dst = c.bimodule(b.dst);
    std::vector<std::pair<std::vector<fel>, std::vector<fel>>> gens;
    for (const MapGen& g : b.gens) {
      std::vector<fel> sv = g.src_is_tensor
                                ? src.pure_tensor(A.eval(g.lhs).c, A.eval(g.rhs).c)
                                : A.eval(g.lhs).c;
      std::vector<fel> dv(dst.total, 0);
      if (g.val_zero) {
        // stays zero
      } else if (g.val_is_tensor) {
        for (const TensorTerm& t : g.tval) {
          El x = A.eval({t.x});
          El y = A.eval({t.y});
          std::vector<fel> piece = dst.pure_tensor(x.c, y.c);
          fel co = fld.reduce(t.coeff);
          for (unsigned i = 0; i < dst.total; ++i)
            dv[i] = fld.add(dv[i], fld.mul(co, piece[i]));
        }
      } else {
        dv = A.eval(g.aval).c;
      }
      gens.push_back({std::move(sv), std::move(dv)});
    }
    c.bimaps.emplace(b.name, make_bimodule_map(src, dst, b.name, gens));
  }

  return c;
}

Corpus load_corpus(const std::string& text) { return build_corpus(parse_corpus(text)); }

Corpus load_example(const std::string& name) { return load_corpus(builtin_corpus_text(name)); }

}  // namespace qrep
