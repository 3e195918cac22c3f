#pragma once

#include <memory>
#include <string>
#include <vector>

#include "core/ideal.hpp"
#include "core/matrix.hpp"

namespace exgl {

// One elementary-transvection letter t_{ij}(x)^{exp}, exp in {+1,-1}.
struct Letter {
  std::uint32_t i = 0, j = 0;  // 0-based, i != j
  elem x = 0;
  int exp = 1;
};

// A word in elementary transvections; evaluation is the left-to-right
// product. Words are kept as written: evaluation is the only semantics.
class GroupWord {
public:
  GroupWord(RingPtr ring, std::uint32_t n) : ring_(std::move(ring)), n_(n) {}

  const RingPtr& ring_ptr() const { return ring_; }
  const Ring& ring() const { return *ring_; }
  std::uint32_t degree() const { return n_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  void push(Letter l);           // appends (drops x == 0)
  void push_reduced(Letter l);   // appends, merging adjacent same-position letters
  void append(const GroupWord& other);
  void append_inverse(const GroupWord& other);
  GroupWord inverse() const;     // reversed letters with flipped exponents

  Mat eval() const;

  std::string to_json() const;
  static GroupWord from_json(RingPtr ring, std::uint32_t n, const std::string& json_text);

private:
  RingPtr ring_;
  std::uint32_t n_;
  std::vector<Letter> letters_;
};

// One factor (base^{eval(conj)})^{exp} of a relative word; the base letter's
// entry lies in the declared ideal, which is what makes the product a
// membership witness for the relative elementary subgroup.
struct RelFactor {
  GroupWord conj;
  Letter base;
  int exp = 1;
};

class RelativeWord {
public:
  RelativeWord(RingPtr ring, std::uint32_t n, std::shared_ptr<const Ideal> ideal)
      : ring_(std::move(ring)), n_(n), ideal_(std::move(ideal)) {}

  const RingPtr& ring_ptr() const { return ring_; }
  const Ring& ring() const { return *ring_; }
  std::uint32_t degree() const { return n_; }
  const Ideal& ideal() const { return *ideal_; }
  const std::shared_ptr<const Ideal>& ideal_ptr() const { return ideal_; }
  const std::vector<RelFactor>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }

  // Appends a factor; drops it when the base entry is zero. Throws
  // errc::invariant if the base entry is outside the ideal.
  void push(GroupWord conj, Letter base, int exp = 1);

  // Conjugates the whole word by eval(w): every factor's conjugator gets the
  // letters of w appended.
  void conjugate_by(const GroupWord& w);

  void append(const RelativeWord& other);

  Mat eval() const;

  // Flattens into one elementary word: conj^{-1} base conj per factor, with
  // adjacent same-position letters merged and zero letters dropped. The
  // result evaluates to the same matrix.
  GroupWord expand() const;
  std::size_t expanded_letter_count() const { return expand().size(); }

  std::string to_json() const;
  static RelativeWord from_json(RingPtr ring, std::uint32_t n,
                                std::shared_ptr<const Ideal> ideal,
                                const std::string& json_text);

private:
  RingPtr ring_;
  std::uint32_t n_;
  std::shared_ptr<const Ideal> ideal_;
  std::vector<RelFactor> factors_;
};

// Word spelling p_{ij} = t_{ij}(1) t_{ji}(-1) t_{ij}(1).
GroupWord perm_word(RingPtr ring, std::uint32_t n, std::uint32_t i, std::uint32_t j);

// A word tau in generalised permutation letters with t_{ij}(x)^tau =
// t_{i2,j2}(x) for every x; verified by evaluation over the whole ring.
// Needs n >= 3 (errc::unsupported otherwise).
GroupWord perm_conjugator(RingPtr ring, std::uint32_t n, std::uint32_t i, std::uint32_t j,
                          std::uint32_t i2, std::uint32_t j2);

// The commutator word [t_{ij}(x), t_{jk}(1)] evaluating to t_{ik}(x), with j
// the smallest index outside {i,k}; n >= 3.
GroupWord transvection_as_commutator(RingPtr ring, std::uint32_t n, std::uint32_t i,
                                     std::uint32_t k, elem x);

struct RelationsReport {
  bool pass = true;
  std::string message;
  std::string to_json() const;
};

// Exhaustively verifies the additivity, commutation and chain relations of
// elementary transvections over the whole ring at degree n.
RelationsReport check_relations(const RingPtr& ring, std::uint32_t n);

}  // namespace exgl
