#pragma once

#include <vector>

#include "core/ring.hpp"

namespace exgl {

struct NicholsonWitness {
  elem e;  // idempotent, e = x*s
  elem s;
  elem t;  // 1 - e = (1 - x)*t
};

// For x in a finite ring, finds an idempotent e in xR with 1-e in (1-x)R,
// returning the witnesses. Scans (s, t) in canonical element order, so the
// result is deterministic. A finite ring always has such a witness; if the
// exhaustive search fails the input table does not describe a ring and an
// errc::invariant error reports it as not an exchange ring.
NicholsonWitness nicholson_idempotent(const Ring& ring, elem x);

struct IdempotentDecomposition {
  std::vector<elem> inputs;       // x_1..x_m, sum 1
  std::vector<elem> idempotents;  // e_1..e_m, orthogonal, sum 1
  std::vector<elem> witnesses;    // r_1..r_m with e_i = x_i * r_i
};

// Refines x_1 + ... + x_m = 1 into orthogonal idempotents e_i in x_i R with
// sum 1, by peeling a Nicholson idempotent off x_1 and recursing on the
// corner ring fRf, f = 1 - e_1. Requires sum(xs) == 1 (errc::argument).
IdempotentDecomposition orthogonal_decomposition(const RingPtr& ring, std::vector<elem> xs);

// Checks all four contract conditions; throws errc::invariant on violation.
void validate_decomposition(const Ring& ring, const IdempotentDecomposition& d);

}  // namespace exgl
