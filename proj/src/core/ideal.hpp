#pragma once

#include <vector>

#include "core/ring.hpp"

namespace exgl {

// A two-sided ideal of a finite ring, stored as its full element set (sorted
// by canonical index) plus the generating set it was built from.
class Ideal {
public:
  // Worklist closure of `gens` under +, -, and left/right multiplication by
  // every ring element. Throws errc::capacity if the closure would exceed
  // `cap` elements.
  static Ideal generated(RingPtr ring, std::vector<elem> gens, std::uint64_t cap = 4096);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const std::vector<elem>& generators() const { return generators_; }
  const std::vector<elem>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  bool contains(elem a) const { return member_[a]; }
  bool is_zero() const { return elements_.size() == 1; }
  bool is_full() const { return elements_.size() == ring_->order(); }

  bool same_set(const Ideal& other) const { return elements_ == other.elements_; }

private:
  Ideal() = default;
  RingPtr ring_;
  std::vector<elem> generators_;
  std::vector<elem> elements_;
  std::vector<char> member_;  // indexed by element
};

}  // namespace exgl
