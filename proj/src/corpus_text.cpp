#include "qrep/corpus.hpp"

namespace qrep {

namespace {
struct Entry {
  const char* name;
  const char* text;
};

const char* k_toys = R"qq(algebra kx3 {
  field 3
  vertices 1
  arrow x: 1 -> 1
  nilpotency 3
}

algebra A21 {
  field 3
  vertices 1 2
  arrow a: 1 -> 2
  arrow b: 2 -> 1
  relation a*b*a
  relation b*a*b
  nilpotency 3
}

algebra a2 {
  field 3
  vertices 1 2
  arrow a: 1 -> 2
  nilpotency 2
}

subalgebra k1 of kx3 {
  field 3
  vertices 1
  nilpotency 2
  vertex_image 1 = e1
}

subalgebra verts of A21 {
  field 3
  vertices 1 2
  nilpotency 2
  vertex_image 1 = e1
  vertex_image 2 = e2
}

automorphism id on kx3 {
  vertex 1 -> 1
  arrow x -> x
}

automorphism swap on A21 {
  vertex 1 -> 2
  vertex 2 -> 1
  arrow a -> b
  arrow b -> a
}

automorphism tau on verts {
  vertex 1 -> 2
  vertex 2 -> 1
}

module kS1 over kx3 {
  simple 1
}

module aS1 over A21 {
  simple 1
}

bimodule kR over kx3 {
  regular
}

bimodule kY0 over kx3 {
  tensor kR over k1 kR
}

bimodule kY1 over kx3 {
  tensor kR over k1 kR
}

bimodule aR over A21 {
  regular
}

bimodule asE over A21 {
  twisted swap
}

bimodule aY0 over A21 {
  tensor aR over verts aR
}

bimodule aY1 over A21 {
  tensor aR over verts twist tau aR
}

map kd0 from kY0 to kR {
  gen e1 (x) e1 -> e1
}

map kd1 from kY1 to kY0 {
  gen e1 (x) e1 -> x (x) e1 - e1 (x) x
}

map kd2 from kR to kY1 {
  gen e1 -> x*x (x) e1 + x (x) x + e1 (x) x*x
}

map ad0 from aY0 to aR {
  gen e1 (x) e1 -> e1
  gen e2 (x) e2 -> e2
}

map ad1 from aY1 to aY0 {
  gen e2 (x) e1 -> a (x) e1 - e2 (x) a
  gen e1 (x) e2 -> b (x) e2 - e1 (x) b
}

map ad2 from asE to aY1 {
  gen 1 -> e1 (x) b*a + a (x) a + a*b (x) e2 + e2 (x) a*b + b (x) b + b*a (x) e1
}

witness kx3w {
  algebra kx3
  module kS1
  twist id
  period 2
  terms kR kY1 kY0 kR
  maps kd2 kd1 kd0
}

witness a21w {
  algebra A21
  module aS1
  twist swap
  period 2
  terms asE aY1 aY0 aR
  maps ad2 ad1 ad0
}
)qq";

const char* k_s6 = R"qq(algebra A {
  field 3
  vertices 1 2 3 4 5
  arrow alphap: 1 -> 2
  arrow eps: 1 -> 5
  arrow gammap: 2 -> 3
  arrow betap: 2 -> 1
  arrow etap: 2 -> 4
  arrow deltap: 3 -> 2
  arrow delta: 3 -> 5
  arrow alpha: 4 -> 5
  arrow epsp: 4 -> 2
  arrow gamma: 5 -> 3
  arrow beta: 5 -> 4
  arrow eta: 5 -> 1
  relation etap*alpha - betap*eps
  relation betap*eps - gammap*delta
  relation eta*alphap - beta*epsp
  relation beta*epsp - gamma*deltap
  relation eps*beta - alphap*etap
  relation epsp*betap - alpha*eta
  relation delta*gamma + deltap*gammap
  relation alphap*gammap - eps*gamma
  relation alpha*gamma - epsp*gammap
  relation deltap*betap - delta*eta
  relation delta*beta - deltap*etap
  relation gammap*deltap - betap*alphap - etap*epsp
  relation gamma*delta - beta*alpha - eta*eps
  nilpotency 5
  zero_distinct_length 4
}

algebra E {
  field 3
  vertices 1 2 4 5
  arrow eps: 1 -> 5
  arrow eta: 5 -> 1
  arrow alphap: 1 -> 2
  arrow betap: 2 -> 1
  arrow etap: 2 -> 4
  arrow epsp: 4 -> 2
  arrow alpha: 4 -> 5
  arrow beta: 5 -> 4
  relation eps*eta*eps
  relation eta*eps*eta
  relation epsp*etap*epsp
  relation etap*epsp*etap
  relation alphap*betap*alphap
  relation betap*alphap*betap
  relation alpha*beta*alpha
  relation beta*alpha*beta
  relation etap*alpha - betap*eps
  relation eta*alphap - beta*epsp
  relation eps*beta - alphap*etap
  relation epsp*betap - alpha*eta
  nilpotency 5
}

subalgebra B of E {
  field 3
  vertices 1 2 4 5
  arrow eps: 1 -> 5
  arrow eta: 5 -> 1
  arrow etap: 2 -> 4
  arrow epsp: 4 -> 2
  relation eps*eta*eps
  relation eta*eps*eta
  relation epsp*etap*epsp
  relation etap*epsp*etap
  nilpotency 3
  vertex_image 1 = e1
  vertex_image 2 = e2
  vertex_image 4 = e4
  vertex_image 5 = e5
  arrow_image eps = eps
  arrow_image eta = eta
  arrow_image etap = etap
  arrow_image epsp = epsp
}

automorphism sigma on E {
  vertex 1 -> 2
  vertex 2 -> 1
  vertex 4 -> 5
  vertex 5 -> 4
  arrow eps -> etap
  arrow eta -> epsp
  arrow alphap -> betap
  arrow betap -> alphap
  arrow etap -> eps
  arrow epsp -> eta
  arrow alpha -> beta
  arrow beta -> alpha
}

realization R of A as E {
  summands 1 2 4 5
  arrow eps = eps
  arrow eta = eta
  arrow alphap = alphap
  arrow betap = betap
  arrow etap = etap
  arrow epsp = epsp
  arrow alpha = alpha
  arrow beta = beta
}

module S1 over E {
  simple 1
}

module S2 over E {
  simple 2
}

module S4 over E {
  simple 4
}

module S5 over E {
  simple 5
}

module Q1 over B {
  projective 1
}

module Q2 over B {
  projective 2
}

module Q4 over B {
  projective 4
}

module Q5 over B {
  projective 5
}

module M over E {
  side left
  dims 1 2 1 2
  action eps = [0; 1]
  action eta = [1 0]
  action alphap = [0; 1]
  action betap = [1 0]
  action etap = [1 0]
  action epsp = [0; 1]
  action alpha = [0; 1]
  action beta = [1 0]
}

module U1 over E {
  side left
  dims 2 1 0 0
  action alphap = [1 0]
  action betap = [0; 1]
}

module U2 over E {
  side left
  dims 1 2 0 0
  action alphap = [0; 1]
  action betap = [1 0]
}

module U4 over E {
  side left
  dims 0 0 2 1
  action alpha = [1 0]
  action beta = [0; 1]
}

module U5 over E {
  side left
  dims 0 0 1 2
  action alpha = [0; 1]
  action beta = [1 0]
}

bimodule EE over E {
  regular
}

bimodule sE over E {
  twisted sigma
}

bimodule Y1 over E {
  tensor sE over B EE
}

bimodule Y0 over E {
  tensor EE over B EE
}

map d0 from Y0 to EE {
  gen e1 (x) e1 -> e1
  gen e2 (x) e2 -> e2
  gen e4 (x) e4 -> e4
  gen e5 (x) e5 -> e5
}

map d1 from Y1 to Y0 {
  gen e1 (x) e1 -> alphap (x) e1 - e2 (x) alphap
  gen e2 (x) e2 -> betap (x) e2 - e1 (x) betap
  gen e4 (x) e4 -> alpha (x) e4 - e5 (x) alpha
  gen e5 (x) e5 -> beta (x) e5 - e4 (x) beta
}

map d2 from sE to Y1 {
  gen 1 -> e1 (x) alphap*betap + e2 (x) betap*alphap + e4 (x) alpha*beta + e5 (x) beta*alpha + alphap (x) betap + betap (x) alphap + alpha (x) beta + beta (x) alpha + alphap*betap (x) e1 + betap*alphap (x) e2 + alpha*beta (x) e4 + beta*alpha (x) e5
}

witness main {
  algebra E
  module M
  twist sigma
  period 2
  terms sE Y1 Y0 EE
  maps d2 d1 d0
}
)qq";

const char* k_s8 = R"qq(algebra A {
  field 3
  vertices 1 2 3 4 5
  arrow gamma1: 1 -> 3
  arrow eps: 1 -> 5
  arrow gamma2: 2 -> 3
  arrow delta2: 3 -> 2
  arrow delta1: 3 -> 1
  arrow delta4: 3 -> 4
  arrow gamma4: 4 -> 3
  arrow alpha: 4 -> 5
  arrow beta: 5 -> 4
  arrow eta: 5 -> 1
  relation eps*beta - gamma1*delta4
  relation alpha*eta - gamma4*delta1
  relation delta1*eps - delta4*alpha
  relation eta*gamma1 - beta*gamma4
  relation beta*alpha - eta*eps
  relation delta1*gamma1 + delta4*gamma4 - delta2*gamma2
  relation gamma2*delta4*alpha
  relation beta*gamma4*delta2
  relation gamma1*delta1*gamma1
  relation delta1*gamma1*delta1
  relation gamma4*delta4*gamma4
  relation delta4*gamma4*delta4
  relation delta1*gamma1*delta2 - delta4*gamma4*delta2
  relation gamma2*delta1*gamma1 - gamma2*delta4*gamma4
  nilpotency 5
  zero_distinct_length 4
}

algebra E {
  field 3
  vertices 2 3 4 5
  arrow gamma2: 2 -> 3
  arrow delta2: 3 -> 2
  arrow delta4: 3 -> 4
  arrow gamma4: 4 -> 3
  arrow alpha: 4 -> 5
  arrow beta: 5 -> 4
  relation gamma2*delta4*alpha
  relation beta*gamma4*delta2
  relation delta4*gamma4*delta4
  relation gamma4*delta4*gamma4
  relation gamma2*delta2*gamma2 + gamma2*delta4*gamma4
  relation delta2*gamma2*delta2 + delta4*gamma4*delta2
  relation delta2*gamma2*delta4 + delta4*alpha*beta
  relation gamma4*delta2*gamma2 + alpha*beta*gamma4
  relation gamma4*delta4*alpha + alpha*beta*alpha
  relation beta*gamma4*delta4 + beta*alpha*beta
  nilpotency 5
  zero_distinct_length 4
}

subalgebra B of E {
  field 3
  vertices u v
  arrow zeta: u -> v
  arrow xi: v -> u
  relation zeta*xi*zeta
  relation xi*zeta*xi
  nilpotency 3
  vertex_image u = e2 + e4
  vertex_image v = e3 + e5
  arrow_image zeta = gamma2 + gamma4 + alpha
  arrow_image xi = delta2 + delta4 + beta
}

subalgebra C of E {
  field 3
  vertices 2 3 4 5
  arrow delta4: 3 -> 4
  arrow gamma4: 4 -> 3
  relation gamma4*delta4*gamma4
  relation delta4*gamma4*delta4
  nilpotency 3
  vertex_image 2 = e2
  vertex_image 3 = e3
  vertex_image 4 = e4
  vertex_image 5 = e5
  arrow_image delta4 = delta4
  arrow_image gamma4 = gamma4
}

subalgebra D of E {
  field 3
  vertices 2 3 4 5
  nilpotency 2
  vertex_image 2 = e2
  vertex_image 3 = e3
  vertex_image 4 = e4
  vertex_image 5 = e5
}

automorphism sigma on E {
  vertex 2 -> 5
  vertex 3 -> 4
  vertex 4 -> 3
  vertex 5 -> 2
  arrow gamma2 -> beta
  arrow delta2 -> alpha
  arrow delta4 -> gamma4
  arrow gamma4 -> delta4
  arrow alpha -> delta2
  arrow beta -> gamma2
}

automorphism tau on D {
  vertex 2 -> 4
  vertex 3 -> 5
  vertex 4 -> 2
  vertex 5 -> 3
}

realization R of A as E {
  summands 2 3 4 5
  arrow gamma2 = gamma2
  arrow delta2 = delta2
  arrow delta4 = delta4
  arrow gamma4 = gamma4
  arrow alpha = alpha
  arrow beta = -beta
}

module S2 over E {
  simple 2
}

module S3 over E {
  simple 3
}

module S4 over E {
  simple 4
}

module S5 over E {
  simple 5
}

module M over E {
  side left
  dims 1 2 1 2
  action gamma2 = [0; 1]
  action delta2 = [1 0]
  action delta4 = [1 0]
  action gamma4 = [0; 1]
  action alpha = [0; 1]
  action beta = [2 0]
}

module U24 over E {
  side left
  dims 2 1 2 0
  action gamma2 = [2 0]
  action delta2 = [0; 1]
  action delta4 = [0; 1]
  action gamma4 = [1 0]
}

module U35 over E {
  side left
  dims 0 2 1 2
  action delta4 = [2 0]
  action gamma4 = [0; 1]
  action alpha = [0; 1]
  action beta = [1 0]
}

module V3 over E {
  side left
  dims 1 2 0 0
  action gamma2 = [0; 1]
  action delta2 = [1 0]
}

module V4 over E {
  side left
  dims 0 0 2 1
  action alpha = [1 0]
  action beta = [0; 1]
}

bimodule EE over E {
  regular
}

bimodule sE over E {
  twisted sigma
}

bimodule Y2 over E {
  tensor sE over C EE
}

bimodule Y1 over E {
  tensor EE over D twist tau EE
}

bimodule Y0 over E {
  tensor EE over B EE
}

map d0 from Y0 to EE {
  gen e2 (x) e2 -> e2
  gen e3 (x) e3 -> e3
  gen e4 (x) e4 -> e4
  gen e5 (x) e5 -> e5
  gen e2 (x) e4 -> 0
  gen e4 (x) e2 -> 0
  gen e3 (x) e5 -> 0
  gen e5 (x) e3 -> 0
}

map d1 from Y1 to Y0 {
  gen e2 (x) e4 -> e2 (x) e4
  gen e3 (x) e5 -> e3 (x) e5
  gen e4 (x) e2 -> e4 (x) e2
  gen e5 (x) e3 -> e5 (x) e3
}

map d2 from Y2 to Y1 {
  gen e2 (x) e2 -> alpha (x) e2 - e5 (x) gamma2
  gen e3 (x) e3 -> gamma4*delta4 (x) delta2 - beta (x) delta4*gamma4 + delta4 (x) delta4*alpha - gamma2*delta4 (x) delta4 + beta*alpha*beta (x) e3 - e4 (x) delta2*gamma2*delta2
  gen e4 (x) e4 -> delta4*gamma4 (x) alpha - gamma2 (x) gamma4*delta4 + gamma4 (x) gamma4*delta2 - beta*gamma4 (x) gamma4 + gamma2*delta2*gamma2 (x) e4 - e3 (x) alpha*beta*alpha
  gen e5 (x) e5 -> e2 (x) beta - delta2 (x) e5
}

map d3 from sE to Y2 {
  gen 1 -> e2 (x) gamma2*delta2*gamma2*delta2 + gamma2*delta2 (x) gamma2*delta2 + gamma2*delta2*gamma2*delta2 (x) e2 + gamma2*delta2*gamma2 (x) delta2 + gamma2 (x) delta2*gamma2*delta2 - gamma2*delta4 (x) gamma4*delta2 + delta2 (x) gamma2 - alpha (x) beta + delta2*gamma2 (x) e3 - alpha*beta (x) e4 + e3 (x) delta2*gamma2 - e4 (x) alpha*beta + gamma4 (x) delta4 - delta4 (x) gamma4 + e5 (x) beta*alpha*beta*alpha + beta*alpha (x) beta*alpha + beta*alpha*beta*alpha (x) e5 + beta*alpha*beta (x) alpha + beta (x) alpha*beta*alpha - beta*gamma4 (x) delta4*alpha
}

witness main {
  algebra E
  module M
  twist sigma
  period 3
  terms sE Y2 Y1 Y0 EE
  maps d3 d2 d1 d0
}
)qq";

const Entry kBuiltins[] = {
    {"toys", k_toys},
    {"s6", k_s6},
    {"s8", k_s8},
};
}  // namespace

const std::string& builtin_corpus_text(const std::string& name) {
  static std::map<std::string, std::string> table = [] {
    std::map<std::string, std::string> t;
    for (const Entry& e : kBuiltins) t.emplace(e.name, e.text);
    return t;
  }();
  auto it = table.find(name);
  if (it == table.end()) throw spec_error("unknown builtin corpus '" + name + "'");
  return it->second;
}

std::vector<std::string> builtin_corpus_names() {
  std::vector<std::string> out;
  for (const Entry& e : kBuiltins) out.push_back(e.name);
  return out;
}

}  // namespace qrep
