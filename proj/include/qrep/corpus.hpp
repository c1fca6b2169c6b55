// Builds a parsed corpus file into live, cross-linked objects, and ships the
// built-in example bundles.  A built corpus owns everything by name; objects
// hold pointers into the maps, so the corpus must outlive anything derived
// from it.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "qrep/bimod.hpp"
#include "qrep/format.hpp"
#include "qrep/periodicity.hpp"
#include "qrep/rep.hpp"

namespace qrep {

struct Corpus {
  CorpusFile file;
  std::map<std::string, Algebra> algebras;
  std::map<std::string, Subalgebra> subalgebras;
  std::map<std::string, Automorphism> automorphisms;
  std::map<std::string, Realization> realizations;
  std::map<std::string, Representation> modules;
  std::map<std::string, Bimodule> bimodules;
  std::map<std::string, BimoduleMap> bimaps;

  Corpus() = default;
  Corpus(Corpus&&) = default;
  Corpus& operator=(Corpus&&) = default;
  Corpus(const Corpus&) = delete;
  Corpus& operator=(const Corpus&) = delete;

  // Lookups throw spec_error with the name when missing.  algebra() also
  // resolves a subalgebra name to its presented algebra.
  const Algebra& algebra(const std::string& name) const;
  const Subalgebra& subalgebra(const std::string& name) const;
  const Automorphism& automorphism(const std::string& name) const;
  const Realization& realization(const std::string& name) const;
  const Representation& module(const std::string& name) const;
  const Bimodule& bimodule(const std::string& name) const;
  const BimoduleMap& bimap(const std::string& name) const;
  const WitnessBlock& witness_block(const std::string& name) const;

  // Assembles the named witness's strong-periodicity data (pointers into
  // this corpus).
  StrongWitness witness(const std::string& name) const;
};

// Constructs every block, in dependency order, running each object's
// construction-time validation.  Throws spec_error on any failure.
Corpus build_corpus(CorpusFile f);
Corpus load_corpus(const std::string& text);

// Built-in bundles ("s6", "s8", "toys"), in canonical text form.
const std::string& builtin_corpus_text(const std::string& name);
std::vector<std::string> builtin_corpus_names();
Corpus load_example(const std::string& name);

}  // namespace qrep
