#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "core/error.hpp"

namespace exgl {

// Elements of a finite ring are canonical indices 0..order-1. All arithmetic
// goes through the owning Ring. The canonical order of indices is the order
// every exhaustive search in this project scans, so results are reproducible.
using elem = std::uint32_t;

enum class RingKind { modular, product, matrix, upper_triangular, table };

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// A finite associative ring with 1 != 0, given structurally (Z/m, products,
// full matrix rings, upper triangular rings) or by explicit tables.
//
// Canonical element indexing:
//   modular   : index == residue
//   product   : mixed radix over the factors, first factor most significant
//   matrix    : k*k base-ring digits, row-major, entry (0,0) most significant
//   UT        : on/above-diagonal digits, row-major, (0,0) most significant
//   table     : the table's own indexing
class Ring : public std::enable_shared_from_this<Ring> {
public:
  static RingPtr modular(std::uint64_t m);
  static RingPtr product(std::vector<RingPtr> factors);
  static RingPtr matrix_ring(std::uint32_t k, RingPtr base);
  static RingPtr upper_triangular(std::uint32_t k, RingPtr base);
  static RingPtr from_table(std::vector<std::vector<elem>> add,
                            std::vector<std::vector<elem>> mul, elem zero, elem one);

  RingKind kind() const { return kind_; }
  std::uint64_t order() const { return order_; }
  elem zero() const { return zero_; }
  elem one() const { return one_; }

  elem add(elem a, elem b) const;
  elem mul(elem a, elem b) const;
  elem neg(elem a) const;
  elem sub(elem a, elem b) const { return add(a, neg(b)); }

  // Rings compare by identity: values from two separately constructed rings
  // never mix, even for equal specs.
  bool same_ring(const Ring& other) const { return this == &other; }

  // Human-readable forms; element indices stay the interchange format.
  std::string spec_string() const;
  std::string display(elem a) const;

  // Component packing for the structured kinds (product/matrix/UT). For
  // matrix rings the component vector is row-major over all k*k entries; for
  // UT rings it covers the on/above-diagonal positions row-major.
  std::size_t component_count() const;
  std::vector<elem> unpack(elem a) const;
  elem pack(const std::vector<elem>& components) const;

  elem check(elem a) const {
    require(a < order_, errc::argument, "element index out of range");
    return a;
  }

private:
  Ring() = default;
  void finalize();  // caches tables for small orders

  elem add_raw(elem a, elem b) const;
  elem mul_raw(elem a, elem b) const;

  RingKind kind_ = RingKind::modular;
  std::uint64_t order_ = 0;
  elem zero_ = 0, one_ = 0;

  // modular
  std::uint64_t modulus_ = 0;
  // product
  std::vector<RingPtr> factors_;
  // matrix / upper_triangular
  std::uint32_t degree_ = 0;
  RingPtr base_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> positions_;  // UT layout
  // table
  std::vector<std::vector<elem>> add_table_, mul_table_;

  // dense caches (order <= kTableCacheMax)
  std::vector<elem> cached_add_, cached_mul_, cached_neg_;
  bool cached_ = false;
};

// Ring-spec grammar (exact): Z/<m>, Prod(<spec>,...), Mat(<k>,<spec>),
// UT(<k>,<spec>), Table(<path>). Table files are JSON with fields
// order, add, mul, zero, one.
RingPtr parse_ring_spec(const std::string& spec);
RingPtr ring_from_table_json(const std::string& json_text);

struct AxiomReport {
  bool pass = true;
  std::string message;                   // first violated axiom, or a note
  std::vector<elem> counterexample;      // offending element triple/pair
  std::string to_json() const;
};

// Exhaustively checks the ring axioms on table rings (associativity,
// distributivity, identities, inverses); structural kinds pass vacuously.
// The check walks order^3 triples, so `max_order` caps what it will attempt.
AxiomReport verify_ring_axioms(const Ring& ring, std::uint64_t max_order = 256);

// Quotient R/I as a table ring over canonical (least-index) coset
// representatives, plus the projection R -> R/I as an index map.
struct QuotientRing {
  RingPtr ring;                 // the quotient, a table ring
  std::vector<elem> project;    // size |R|: index in quotient
  std::vector<elem> lift;       // size |R/I|: canonical representative in R
};
class Ideal;
QuotientRing make_quotient(const RingPtr& ring, const Ideal& ideal);

}  // namespace exgl
