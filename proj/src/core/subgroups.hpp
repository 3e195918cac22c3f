#pragma once

#include <unordered_set>
#include <vector>

#include "core/ideal.hpp"
#include "core/matrix.hpp"

namespace exgl {

// An explicitly enumerated subgroup of GL_n(R): a brute-force oracle. The
// element list is sorted by packed key, so equal subgroups enumerate equal
// lists regardless of generator order.
struct Subgroup {
  RingPtr ring;
  std::uint32_t n = 0;
  std::vector<Mat> elements;
  std::unordered_set<std::uint64_t> keys;

  std::size_t order() const { return elements.size(); }
  bool contains(const Mat& m) const;
};

// Breadth-first closure of the generators (and their inverses) under
// multiplication. Throws errc::capacity when the group exceeds `cap`.
Subgroup enumerate_closure(RingPtr ring, std::uint32_t n, const std::vector<Mat>& generators,
                           std::uint64_t cap = (1ull << 20));

// Smallest subgroup containing `base` that is closed under conjugation by
// the given conjugators: the normal closure of <base> inside <base, conj>.
Subgroup conjugate_closure(RingPtr ring, std::uint32_t n, const std::vector<Mat>& base,
                           const std::vector<Mat>& conjugators, std::uint64_t cap = (1ull << 20));

// Generator sets used by the oracles.
std::vector<Mat> elementary_generators(const RingPtr& ring, std::uint32_t n);
std::vector<Mat> ideal_elementary_generators(const RingPtr& ring, std::uint32_t n, const Ideal& I);

// E_n(R,I) enumerated as the normal closure of the I-elementary
// transvections inside the elementary subgroup.
Subgroup enumerate_relative_elementary(const RingPtr& ring, std::uint32_t n, const Ideal& I,
                                       std::uint64_t cap = (1ull << 20));

// Entry-wise congruence test: off-diagonal entries in I and
// a*s_ii - s_jj*a in I for all a and all i, j (exhaustive over a).
bool congruence_member(const Mat& sigma, const Ideal& I);

// Definitional test through the quotient: the image of sigma commutes with a
// generating set of GL_n(R/I). Finite rings have stable rank one, so the
// transvections together with diag(u,1,...,1) for units u generate the whole
// general linear group; commuting with them is exactly centrality.
bool congruence_member_definitional(const Mat& sigma, const Ideal& I);

// The ideal generated by all off-diagonal entries of sigma and all
// a*s_ii - s_jj*a; and the join over a set of matrices.
Ideal level_ideal(const Mat& sigma, std::uint64_t cap = 4096);
Ideal level_ideal_of_set(const RingPtr& ring, const std::vector<Mat>& sigmas,
                         std::uint64_t cap = 4096);

// Generators of GL_n(R) for oracle use: all transvections plus diag(u,1,..,1)
// over the units of R.
std::vector<Mat> gl_generators(const RingPtr& ring, std::uint32_t n);

}  // namespace exgl
