#include "core/ideal.hpp"

#include <algorithm>
#include <deque>

namespace exgl {

Ideal Ideal::generated(RingPtr ring, std::vector<elem> gens, std::uint64_t cap) {
  require(ring != nullptr, errc::argument, "null ring");
  for (elem g : gens) ring->check(g);

  Ideal ideal;
  ideal.ring_ = std::move(ring);
  const Ring& R = *ideal.ring_;
  ideal.generators_ = gens;
  std::sort(ideal.generators_.begin(), ideal.generators_.end());
  ideal.generators_.erase(std::unique(ideal.generators_.begin(), ideal.generators_.end()),
                          ideal.generators_.end());

  ideal.member_.assign(R.order(), 0);
  std::deque<elem> work;
  std::size_t count = 0;
  auto push = [&](elem v) {
    if (ideal.member_[v]) return;
    require(++count <= cap, errc::capacity,
            "ideal closure exceeds cap of " + std::to_string(cap) + " elements");
    ideal.member_[v] = 1;
    work.push_back(v);
  };
  push(R.zero());
  for (elem g : ideal.generators_) push(g);

  // Closure under negation, pairwise sums with known members, and two-sided
  // multiplication by every ring element.
  while (!work.empty()) {
    const elem v = work.front();
    work.pop_front();
    push(R.neg(v));
    for (elem a = 0; a < R.order(); ++a) {
      push(R.mul(a, v));
      push(R.mul(v, a));
      if (ideal.member_[a]) push(R.add(a, v));
    }
  }
  for (elem a = 0; a < R.order(); ++a)
    if (ideal.member_[a]) ideal.elements_.push_back(a);
  return ideal;
}

}  // namespace exgl
