#pragma once

#include "core/exchange.hpp"
#include "core/words.hpp"

namespace exgl {

// Factorization of e + u v where v u = 0, v[j] = 0 and every other entry of
// v lies in I: the product of the row-j transvections t_{ji}(v_i) conjugated
// by the column-j word prod t_{ij}(-u_i), followed by the trailing
// correction prod t_{ji}((u_j - 1) v_i). At most 2(n-1) relative factors;
// evaluation equals e + u v exactly (asserted).
RelativeWord factor_rank_one(RingPtr ring, std::uint32_t n,
                             std::shared_ptr<const Ideal> ideal, const std::vector<elem>& u,
                             const std::vector<elem>& v, std::uint32_t j);

// Factorization of e + u x v for a unimodular row v (v w = 1) with v u = 0
// and x in I, via the orthogonal idempotents e_p = v_p w_p r_p: each piece
// e + u x e_p v is conjugated into rank-one shape and factored.
RelativeWord factor_unimodular(RingPtr ring, std::uint32_t n,
                               std::shared_ptr<const Ideal> ideal, const std::vector<elem>& u,
                               const std::vector<elem>& v, const std::vector<elem>& w, elem x);

// Factorization of the conjugate t_{ij}(x)^sigma = e + inv_col_i * x * row_j
// through the unimodular machinery. The fully expanded word has at most
// 4n^2 - 3n elementary letters.
RelativeWord factor_conjugated_transvection(const InvertibleMatrix& sigma, std::uint32_t i,
                                            std::uint32_t j, elem x,
                                            std::shared_ptr<const Ideal> ideal);

// Factorization of [t_{ij}(x), sigma] for sigma in the full congruence
// subgroup of level I: the entry x is split along the idempotents
// e_k = inv_{jk} sigma_{kj} r_k and each commutator piece is reduced to
// rank-one factorizations (one case for k != j, a four-piece assembly for
// k = j). Every base letter is checked to lie in I.
RelativeWord factor_congruence_commutator(const InvertibleMatrix& sigma, std::uint32_t i,
                                          std::uint32_t j, elem x,
                                          std::shared_ptr<const Ideal> ideal);

}  // namespace exgl
