#include "core/subgroups.hpp"

#include <algorithm>
#include <deque>

namespace exgl {

namespace {

std::uint64_t key_of(const Mat& m) {
  auto key = m.pack_key();
  require(key.has_value(), errc::capacity, "matrix does not fit a 64-bit enumeration key");
  return *key;
}

void sort_elements(Subgroup& g) {
  std::sort(g.elements.begin(), g.elements.end(),
            [](const Mat& a, const Mat& b) { return a.a < b.a; });
}

}  // namespace

bool Subgroup::contains(const Mat& m) const {
  return keys.count(key_of(m)) != 0;
}

Subgroup enumerate_closure(RingPtr ring, std::uint32_t n, const std::vector<Mat>& generators,
                           std::uint64_t cap) {
  Subgroup g{std::move(ring), n, {}, {}};
  std::vector<Mat> step;
  for (const Mat& gen : generators) {
    require(gen.n == n && gen.ring->same_ring(*g.ring), errc::argument,
            "generator from a different context");
    InvertibleMatrix inv = invert(gen);
    step.push_back(inv.mat);
    step.push_back(inv.inv);
  }

  std::deque<std::size_t> work;
  auto push = [&](Mat m) {
    const std::uint64_t key = key_of(m);
    if (!g.keys.insert(key).second) return;
    require(g.elements.size() < cap, errc::capacity,
            "subgroup closure exceeds cap of " + std::to_string(cap) + " (partial count " +
                std::to_string(g.elements.size()) + ")");
    g.elements.push_back(std::move(m));
    work.push_back(g.elements.size() - 1);
  };
  push(identity(g.ring, n));
  while (!work.empty()) {
    const std::size_t idx = work.front();
    work.pop_front();
    for (const Mat& s : step) push(mul(g.elements[idx], s));
  }
  sort_elements(g);
  return g;
}

Subgroup conjugate_closure(RingPtr ring, std::uint32_t n, const std::vector<Mat>& base,
                           const std::vector<Mat>& conjugators, std::uint64_t cap) {
  std::vector<Mat> gens = base;
  std::vector<std::pair<Mat, Mat>> conj;  // (c, c^{-1})
  for (const Mat& c : conjugators) {
    InvertibleMatrix inv = invert(c);
    conj.emplace_back(inv.mat, inv.inv);
  }
  Subgroup g = enumerate_closure(ring, n, gens, cap);
  while (true) {
    std::vector<Mat> fresh;
    for (const Mat& m : g.elements)
      for (const auto& [c, ci] : conj) {
        Mat conjugated = mul(mul(ci, m), c);
        if (!g.contains(conjugated)) fresh.push_back(std::move(conjugated));
      }
    if (fresh.empty()) break;
    gens.insert(gens.end(), fresh.begin(), fresh.end());
    g = enumerate_closure(ring, n, gens, cap);
  }
  return g;
}

std::vector<Mat> elementary_generators(const RingPtr& ring, std::uint32_t n) {
  std::vector<Mat> gens;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (elem x = 0; x < ring->order(); ++x)
        if (x != ring->zero()) gens.push_back(transvection(ring, n, i, j, x));
    }
  return gens;
}

std::vector<Mat> ideal_elementary_generators(const RingPtr& ring, std::uint32_t n,
                                             const Ideal& I) {
  std::vector<Mat> gens;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (elem x : I.elements())
        if (x != ring->zero()) gens.push_back(transvection(ring, n, i, j, x));
    }
  return gens;
}

Subgroup enumerate_relative_elementary(const RingPtr& ring, std::uint32_t n, const Ideal& I,
                                       std::uint64_t cap) {
  return conjugate_closure(ring, n, ideal_elementary_generators(ring, n, I),
                           elementary_generators(ring, n), cap);
}

bool congruence_member(const Mat& sigma, const Ideal& I) {
  const Ring& R = *sigma.ring;
  require(I.ring().same_ring(R), errc::argument, "ideal from a different ring");
  const std::uint32_t n = sigma.n;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      if (i != j && !I.contains(sigma.at(i, j))) return false;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      for (elem a = 0; a < R.order(); ++a)
        if (!I.contains(R.sub(R.mul(a, sigma.at(i, i)), R.mul(sigma.at(j, j), a)))) return false;
  return true;
}

bool congruence_member_definitional(const Mat& sigma, const Ideal& I) {
  const Ring& R = *sigma.ring;
  require(I.ring().same_ring(R), errc::argument, "ideal from a different ring");
  if (I.is_full()) return true;  // quotient is the zero ring; everything is central

  const QuotientRing q = make_quotient(sigma.ring, I);
  Mat image = zero_matrix(q.ring, sigma.n);
  for (std::uint32_t i = 0; i < sigma.n; ++i)
    for (std::uint32_t j = 0; j < sigma.n; ++j) image.at(i, j) = q.project[sigma.at(i, j)];

  for (const Mat& g : gl_generators(q.ring, sigma.n))
    if (!(mul(image, g) == mul(g, image))) return false;
  return true;
}

Ideal level_ideal(const Mat& sigma, std::uint64_t cap) {
  return level_ideal_of_set(sigma.ring, {sigma}, cap);
}

Ideal level_ideal_of_set(const RingPtr& ring, const std::vector<Mat>& sigmas, std::uint64_t cap) {
  const Ring& R = *ring;
  std::vector<elem> gens;
  for (const Mat& sigma : sigmas) {
    require(sigma.ring->same_ring(R), errc::argument, "matrix from a different ring");
    for (std::uint32_t i = 0; i < sigma.n; ++i)
      for (std::uint32_t j = 0; j < sigma.n; ++j) {
        if (i != j) gens.push_back(sigma.at(i, j));
        for (elem a = 0; a < R.order(); ++a)
          gens.push_back(R.sub(R.mul(a, sigma.at(i, i)), R.mul(sigma.at(j, j), a)));
      }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::erase(gens, R.zero());
  return Ideal::generated(ring, std::move(gens), cap);
}

std::vector<Mat> gl_generators(const RingPtr& ring, std::uint32_t n) {
  std::vector<Mat> gens = elementary_generators(ring, n);
  const Ring& R = *ring;
  for (elem u = 0; u < R.order(); ++u) {
    if (u == R.one()) continue;
    bool unit = false;
    for (elem v = 0; v < R.order() && !unit; ++v)
      unit = R.mul(u, v) == R.one() && R.mul(v, u) == R.one();
    if (!unit) continue;
    Mat d = identity(ring, n);
    d.at(0, 0) = u;
    gens.push_back(std::move(d));
  }
  return gens;
}

}  // namespace exgl
