#include "core/sample.hpp"

namespace exgl {

std::vector<InvertibleMatrix> sample_gl(const RingPtr& ring, std::uint32_t n, std::uint64_t seed,
                                        std::uint32_t count,
                                        std::uint32_t max_attempts_per_sample) {
  SplitMix64 rng(seed);
  std::vector<InvertibleMatrix> out;
  std::uint64_t attempts = 0;
  const std::uint64_t budget = static_cast<std::uint64_t>(max_attempts_per_sample) *
                               std::max<std::uint32_t>(count, 1);
  while (out.size() < count) {
    require(attempts++ < budget, errc::sampling,
            "invertible-matrix sampling exhausted its attempt budget");
    Mat m = zero_matrix(ring, n);
    for (elem& v : m.a) v = static_cast<elem>(rng.below(ring->order()));
    try {
      out.push_back(invert(m));
    } catch (const error& e) {
      if (e.kind() != errc::not_invertible) throw;
    }
  }
  return out;
}

std::vector<InvertibleMatrix> sample_congruence(const RingPtr& ring, std::uint32_t n,
                                                const Ideal& I, std::uint64_t seed,
                                                std::uint32_t count,
                                                std::uint32_t max_attempts_per_sample) {
  SplitMix64 rng(seed);
  const std::vector<elem>& pool = I.elements();
  std::vector<InvertibleMatrix> out;
  std::uint64_t attempts = 0;
  const std::uint64_t budget = static_cast<std::uint64_t>(max_attempts_per_sample) *
                               std::max<std::uint32_t>(count, 1);
  while (out.size() < count) {
    require(attempts++ < budget, errc::sampling,
            "congruence-subgroup sampling exhausted its attempt budget");
    Mat m = identity(ring, n);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        m.at(i, j) = ring->add(m.at(i, j), pool[rng.below(pool.size())]);
    try {
      out.push_back(invert(m));
    } catch (const error& e) {
      if (e.kind() != errc::not_invertible) throw;
    }
  }
  return out;
}

GroupWord sample_elementary_word(const RingPtr& ring, std::uint32_t n, SplitMix64& rng,
                                 std::uint32_t length) {
  GroupWord w(ring, n);
  for (std::uint32_t step = 0; step < length; ++step) {
    const std::uint32_t i = static_cast<std::uint32_t>(rng.below(n));
    std::uint32_t j = static_cast<std::uint32_t>(rng.below(n - 1));
    if (j >= i) ++j;
    elem x = static_cast<elem>(rng.below(ring->order() - 1));
    if (x >= ring->zero()) ++x;  // skip the zero element's index
    w.push(Letter{i, j, x, 1});
  }
  return w;
}

}  // namespace exgl
