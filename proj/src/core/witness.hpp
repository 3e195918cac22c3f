#pragma once

#include <optional>

#include "core/subgroups.hpp"
#include "core/words.hpp"

namespace exgl {

// A product of conjugates sigma^{+-1} with conjugators stored as elementary
// words, so the certificate can be re-checked without trusting any matrix
// arithmetic done here.
struct ConjugateFactor {
  GroupWord conj;
  int exp = 1;
};

class ConjugateProduct {
public:
  ConjugateProduct(InvertibleMatrix sigma, std::vector<ConjugateFactor> factors)
      : sigma_(std::move(sigma)), factors_(std::move(factors)) {}

  const InvertibleMatrix& sigma() const { return sigma_; }
  const std::vector<ConjugateFactor>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }

  Mat eval() const;

  std::string to_json() const;
  static ConjugateProduct from_json(RingPtr ring, const std::string& json_text);

private:
  InvertibleMatrix sigma_;
  std::vector<ConjugateFactor> factors_;
};

// One simultaneous-reduction step (a, b) -> ([a^{-1}, g], [g, b]).
struct ReductionPair {
  InvertibleMatrix a;
  InvertibleMatrix b;
};
ReductionPair reduce_step(const ReductionPair& pair, const InvertibleMatrix& g);

// Expands a reduction chain of length k into exactly 2^k conjugates of
// (a1 b1)^{+-1}. The first component and the reducing elements are given as
// words so the conjugators stay words; b1 only ever appears as a matrix.
struct ReductionExpansion {
  ConjugateProduct product;
  std::vector<ReductionPair> chain;  // (a_1,b_1) .. (a_{k+1},b_{k+1})
};
ReductionExpansion expand_reduction(const GroupWord& a1, const InvertibleMatrix& b1,
                                    const std::vector<GroupWord>& gs);

// t_{kl}(a y x_i b) as a product of exactly 8 conjugates of sigma^{+-1},
// given y * sum_p sigma_{ip} x_p = 0 and x_{j_decl} = 1. Needs n >= 3.
ConjugateProduct extract_transvection_8(const InvertibleMatrix& sigma, std::uint32_t i,
                                        const std::vector<elem>& xs, std::uint32_t j_decl,
                                        elem y, std::uint32_t k, std::uint32_t l, elem a, elem b);

// t_{kl}(a sigma_{ij} b) as a product of 16n - 8 conjugates of sigma^{+-1}.
ConjugateProduct extract_entry(const InvertibleMatrix& sigma, std::uint32_t i, std::uint32_t j,
                               std::uint32_t k, std::uint32_t l, elem a, elem b);

// t_{kl}(a (c sigma_{ii} - sigma_{jj} c) b) as a product of 48n - 24
// conjugates of sigma^{+-1}.
ConjugateProduct extract_diagonal(const InvertibleMatrix& sigma, std::uint32_t i, std::uint32_t j,
                                  std::uint32_t k, std::uint32_t l, elem a, elem b, elem c);

// Where a witness value comes from: an off-diagonal entry of generator
// `gen`, or a diagonal commutator a*s_ii - s_jj*a.
struct WitnessSource {
  std::size_t gen = 0;
  bool diagonal = false;
  std::uint32_t i = 0, j = 0;
  elem a = 0;  // only for diagonal sources
};

struct LowerWitness {
  elem y;
  WitnessSource source;
  std::uint32_t k, l;
  ConjugateProduct product;  // evaluates to t_{kl}(y)
};

struct IdealComparison {
  std::vector<elem> generators;   // of the compared ideal J
  bool equal = false;
  bool upper_fails = false;       // some t_{12}(x), x in I \ J, escapes C_n(R,J)
  elem upper_witness = 0;
  bool lower_fails = false;       // some t_{12}(x), x in J \ I, escapes H
  elem lower_witness = 0;
};

struct ClassificationCertificate {
  std::vector<InvertibleMatrix> generators;
  Ideal ideal;  // level ideal of the generator set
  std::vector<bool> upper_check;
  std::vector<LowerWitness> lower_witnesses;
  std::vector<IdealComparison> comparisons;
  // When the normal closure of the generators was small enough to
  // enumerate, whether its level ideal equals the generator-based one;
  // absent means the generator ideal is only a lower bound.
  std::optional<bool> enumerated_level_ideal_equal;

  std::string to_json() const;
};

// Certifies the sandwich position of the subgroup generated by `generators`
// (and its conjugates): computes the level ideal I, checks every generator
// against the entrywise congruence test, and produces a conjugate product
// evaluating to t_{kl}(y) for every ideal generator value y and every
// position (k,l). `compare` ideals are reported as equal or separated by an
// explicit witness element. Needs n >= 3.
ClassificationCertificate classify(const std::vector<InvertibleMatrix>& generators,
                                   const std::vector<Ideal>& compare = {},
                                   std::uint64_t ideal_cap = 4096,
                                   std::uint64_t enumeration_cap = 0);

}  // namespace exgl
