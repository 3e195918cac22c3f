#include "core/ring.hpp"

#include <fstream>
#include <sstream>

#include "core/ideal.hpp"
#include "json.hpp"

namespace exgl {

namespace {
constexpr std::uint64_t kMaxOrder = 0xffffffffULL;  // elem is 32-bit
constexpr std::uint64_t kTableCacheMax = 256;       // dense-table threshold
}  // namespace

RingPtr Ring::modular(std::uint64_t m) {
  require(m >= 2, errc::argument, "Z/m needs m >= 2");
  require(m <= kMaxOrder, errc::capacity, "ring order exceeds element range");
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = RingKind::modular;
  r->order_ = m;
  r->modulus_ = m;
  r->zero_ = 0;
  r->one_ = 1;
  r->finalize();
  return r;
}

RingPtr Ring::product(std::vector<RingPtr> factors) {
  require(!factors.empty(), errc::argument, "Prod needs at least one factor");
  std::uint64_t order = 1;
  for (const auto& f : factors) {
    require(f != nullptr, errc::argument, "null factor ring");
    require(order <= kMaxOrder / f->order(), errc::capacity, "ring order exceeds element range");
    order *= f->order();
  }
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = RingKind::product;
  r->factors_ = std::move(factors);
  r->order_ = order;
  std::vector<elem> zero, one;
  for (const auto& f : r->factors_) {
    zero.push_back(f->zero());
    one.push_back(f->one());
  }
  r->zero_ = r->pack(zero);
  r->one_ = r->pack(one);
  r->finalize();
  return r;
}

RingPtr Ring::matrix_ring(std::uint32_t k, RingPtr base) {
  require(k >= 1, errc::argument, "Mat needs k >= 1");
  require(base != nullptr, errc::argument, "null base ring");
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = RingKind::matrix;
  r->degree_ = k;
  r->base_ = std::move(base);
  std::uint64_t order = 1;
  for (std::uint32_t idx = 0; idx < k * k; ++idx) {
    require(order <= kMaxOrder / r->base_->order(), errc::capacity,
            "ring order exceeds element range");
    order *= r->base_->order();
  }
  r->order_ = order;
  std::vector<elem> zero(k * k, r->base_->zero()), one(k * k, r->base_->zero());
  for (std::uint32_t i = 0; i < k; ++i) one[i * k + i] = r->base_->one();
  r->zero_ = r->pack(zero);
  r->one_ = r->pack(one);
  r->finalize();
  return r;
}

RingPtr Ring::upper_triangular(std::uint32_t k, RingPtr base) {
  require(k >= 1, errc::argument, "UT needs k >= 1");
  require(base != nullptr, errc::argument, "null base ring");
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = RingKind::upper_triangular;
  r->degree_ = k;
  r->base_ = std::move(base);
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = i; j < k; ++j) r->positions_.emplace_back(i, j);
  std::uint64_t order = 1;
  for (std::size_t idx = 0; idx < r->positions_.size(); ++idx) {
    require(order <= kMaxOrder / r->base_->order(), errc::capacity,
            "ring order exceeds element range");
    order *= r->base_->order();
  }
  r->order_ = order;
  std::vector<elem> zero(r->positions_.size(), r->base_->zero());
  std::vector<elem> one = zero;
  for (std::size_t idx = 0; idx < r->positions_.size(); ++idx)
    if (r->positions_[idx].first == r->positions_[idx].second) one[idx] = r->base_->one();
  r->zero_ = r->pack(zero);
  r->one_ = r->pack(one);
  r->finalize();
  return r;
}

RingPtr Ring::from_table(std::vector<std::vector<elem>> add, std::vector<std::vector<elem>> mul,
                         elem zero, elem one) {
  const std::size_t order = add.size();
  require(order >= 2, errc::argument, "table ring needs order >= 2");
  require(order <= kTableCacheMax, errc::capacity, "table ring too large");
  require(mul.size() == order, errc::argument, "mul table size mismatch");
  for (const auto& row : add)
    require(row.size() == order, errc::argument, "add table is not square");
  for (const auto& row : mul)
    require(row.size() == order, errc::argument, "mul table is not square");
  for (const auto& table : {add, mul})
    for (const auto& row : table)
      for (elem v : row) require(v < order, errc::argument, "table entry out of range");
  require(zero < order && one < order, errc::argument, "zero/one index out of range");
  require(zero != one, errc::argument, "ring needs 1 != 0");

  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = RingKind::table;
  r->order_ = order;
  r->zero_ = zero;
  r->one_ = one;
  r->add_table_ = std::move(add);
  r->mul_table_ = std::move(mul);
  r->finalize();
  return r;
}

void Ring::finalize() {
  if (order_ > kTableCacheMax) return;
  const std::size_t n = static_cast<std::size_t>(order_);
  cached_add_.resize(n * n);
  cached_mul_.resize(n * n);
  cached_neg_.assign(n, static_cast<elem>(-1));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const elem s = add_raw(static_cast<elem>(a), static_cast<elem>(b));
      cached_add_[a * n + b] = s;
      cached_mul_[a * n + b] = mul_raw(static_cast<elem>(a), static_cast<elem>(b));
      if (s == zero_ && cached_neg_[a] == static_cast<elem>(-1))
        cached_neg_[a] = static_cast<elem>(b);
    }
  cached_ = true;
}

elem Ring::add(elem a, elem b) const {
  if (cached_) return cached_add_[static_cast<std::size_t>(a) * order_ + b];
  return add_raw(a, b);
}

elem Ring::mul(elem a, elem b) const {
  if (cached_) return cached_mul_[static_cast<std::size_t>(a) * order_ + b];
  return mul_raw(a, b);
}

elem Ring::neg(elem a) const {
  if (cached_) {
    const elem v = cached_neg_[a];
    require(v != static_cast<elem>(-1), errc::invariant,
            "table ring: element has no additive inverse");
    return v;
  }
  switch (kind_) {
    case RingKind::modular:
      return static_cast<elem>((modulus_ - a) % modulus_);
    case RingKind::product:
    case RingKind::matrix:
    case RingKind::upper_triangular: {
      auto comps = unpack(a);
      for (std::size_t idx = 0; idx < comps.size(); ++idx) {
        const RingPtr& f = (kind_ == RingKind::product) ? factors_[idx] : base_;
        comps[idx] = f->neg(comps[idx]);
      }
      return pack(comps);
    }
    case RingKind::table: {
      for (elem b = 0; b < order_; ++b)
        if (add_table_[a][b] == zero_) return b;
      fail(errc::invariant, "table ring: element has no additive inverse");
    }
  }
  fail(errc::invariant, "unreachable ring kind");
}

elem Ring::add_raw(elem a, elem b) const {
  switch (kind_) {
    case RingKind::modular:
      return static_cast<elem>((static_cast<std::uint64_t>(a) + b) % modulus_);
    case RingKind::product: {
      auto ca = unpack(a), cb = unpack(b);
      for (std::size_t idx = 0; idx < ca.size(); ++idx)
        ca[idx] = factors_[idx]->add(ca[idx], cb[idx]);
      return pack(ca);
    }
    case RingKind::matrix:
    case RingKind::upper_triangular: {
      auto ca = unpack(a), cb = unpack(b);
      for (std::size_t idx = 0; idx < ca.size(); ++idx) ca[idx] = base_->add(ca[idx], cb[idx]);
      return pack(ca);
    }
    case RingKind::table:
      return add_table_[a][b];
  }
  fail(errc::invariant, "unreachable ring kind");
}

elem Ring::mul_raw(elem a, elem b) const {
  switch (kind_) {
    case RingKind::modular:
      return static_cast<elem>((static_cast<std::uint64_t>(a) * b) % modulus_);
    case RingKind::product: {
      auto ca = unpack(a), cb = unpack(b);
      for (std::size_t idx = 0; idx < ca.size(); ++idx)
        ca[idx] = factors_[idx]->mul(ca[idx], cb[idx]);
      return pack(ca);
    }
    case RingKind::matrix: {
      auto ca = unpack(a), cb = unpack(b);
      const std::uint32_t k = degree_;
      std::vector<elem> out(k * k, base_->zero());
      for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j) {
          elem acc = base_->zero();
          for (std::uint32_t p = 0; p < k; ++p)
            acc = base_->add(acc, base_->mul(ca[i * k + p], cb[p * k + j]));
          out[i * k + j] = acc;
        }
      return pack(out);
    }
    case RingKind::upper_triangular: {
      auto ca = unpack(a), cb = unpack(b);
      std::vector<elem> out(positions_.size(), base_->zero());
      auto slot = [&](std::uint32_t i, std::uint32_t j) -> std::size_t {
        // row-major over on/above-diagonal positions
        std::size_t idx = 0;
        for (std::uint32_t r = 0; r < i; ++r) idx += degree_ - r;
        return idx + (j - i);
      };
      for (std::size_t s = 0; s < positions_.size(); ++s) {
        const auto [i, j] = positions_[s];
        elem acc = base_->zero();
        for (std::uint32_t p = i; p <= j; ++p)
          acc = base_->add(acc, base_->mul(ca[slot(i, p)], cb[slot(p, j)]));
        out[s] = acc;
      }
      return pack(out);
    }
    case RingKind::table:
      return mul_table_[a][b];
  }
  fail(errc::invariant, "unreachable ring kind");
}

std::size_t Ring::component_count() const {
  switch (kind_) {
    case RingKind::product:
      return factors_.size();
    case RingKind::matrix:
      return static_cast<std::size_t>(degree_) * degree_;
    case RingKind::upper_triangular:
      return positions_.size();
    default:
      return 1;
  }
}

std::vector<elem> Ring::unpack(elem a) const {
  check(a);
  switch (kind_) {
    case RingKind::product: {
      std::vector<elem> out(factors_.size());
      std::uint64_t rest = a;
      for (std::size_t idx = factors_.size(); idx-- > 0;) {
        out[idx] = static_cast<elem>(rest % factors_[idx]->order());
        rest /= factors_[idx]->order();
      }
      return out;
    }
    case RingKind::matrix:
    case RingKind::upper_triangular: {
      std::vector<elem> out(component_count());
      std::uint64_t rest = a;
      for (std::size_t idx = out.size(); idx-- > 0;) {
        out[idx] = static_cast<elem>(rest % base_->order());
        rest /= base_->order();
      }
      return out;
    }
    default:
      return {a};
  }
}

elem Ring::pack(const std::vector<elem>& components) const {
  require(components.size() == component_count(), errc::argument, "component count mismatch");
  switch (kind_) {
    case RingKind::product: {
      std::uint64_t value = 0;
      for (std::size_t idx = 0; idx < components.size(); ++idx) {
        require(components[idx] < factors_[idx]->order(), errc::argument,
                "component out of range");
        value = value * factors_[idx]->order() + components[idx];
      }
      return static_cast<elem>(value);
    }
    case RingKind::matrix:
    case RingKind::upper_triangular: {
      std::uint64_t value = 0;
      for (elem c : components) {
        require(c < base_->order(), errc::argument, "component out of range");
        value = value * base_->order() + c;
      }
      return static_cast<elem>(value);
    }
    default:
      return check(components[0]);
  }
}

std::string Ring::spec_string() const {
  switch (kind_) {
    case RingKind::modular:
      return "Z/" + std::to_string(modulus_);
    case RingKind::product: {
      std::string out = "Prod(";
      for (std::size_t idx = 0; idx < factors_.size(); ++idx) {
        if (idx) out += ",";
        out += factors_[idx]->spec_string();
      }
      return out + ")";
    }
    case RingKind::matrix:
      return "Mat(" + std::to_string(degree_) + "," + base_->spec_string() + ")";
    case RingKind::upper_triangular:
      return "UT(" + std::to_string(degree_) + "," + base_->spec_string() + ")";
    case RingKind::table:
      return "Table(order=" + std::to_string(order_) + ")";
  }
  return "?";
}

std::string Ring::display(elem a) const {
  check(a);
  switch (kind_) {
    case RingKind::modular:
      return std::to_string(a);
    case RingKind::product: {
      auto comps = unpack(a);
      std::string out = "(";
      for (std::size_t idx = 0; idx < comps.size(); ++idx) {
        if (idx) out += ",";
        out += factors_[idx]->display(comps[idx]);
      }
      return out + ")";
    }
    case RingKind::matrix:
    case RingKind::upper_triangular: {
      auto comps = unpack(a);
      auto entry = [&](std::uint32_t i, std::uint32_t j) -> std::string {
        if (kind_ == RingKind::matrix) return base_->display(comps[i * degree_ + j]);
        if (i > j) return base_->display(base_->zero());
        std::size_t idx = 0;
        for (std::uint32_t r = 0; r < i; ++r) idx += degree_ - r;
        return base_->display(comps[idx + (j - i)]);
      };
      std::string out = "[";
      for (std::uint32_t i = 0; i < degree_; ++i) {
        if (i) out += ",";
        out += "[";
        for (std::uint32_t j = 0; j < degree_; ++j) {
          if (j) out += ",";
          out += entry(i, j);
        }
        out += "]";
      }
      return out + "]";
    }
    case RingKind::table:
      return "#" + std::to_string(a);
  }
  return "?";
}

namespace {

struct SpecParser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(const std::string& token) {
    skip_ws();
    if (text.compare(pos, token.size(), token) == 0) {
      pos += token.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    require(pos < text.size() && text[pos] == c, errc::parse,
            std::string("ring spec: expected '") + c + "' at offset " + std::to_string(pos));
    ++pos;
  }

  std::uint64_t integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    require(pos > start, errc::parse, "ring spec: expected an integer");
    return std::stoull(text.substr(start, pos - start));
  }

  RingPtr spec() {
    skip_ws();
    if (eat("Z/")) return Ring::modular(integer());
    if (eat("Prod(")) {
      std::vector<RingPtr> factors;
      factors.push_back(spec());
      skip_ws();
      while (pos < text.size() && text[pos] == ',') {
        ++pos;
        factors.push_back(spec());
        skip_ws();
      }
      expect(')');
      return Ring::product(std::move(factors));
    }
    if (eat("Mat(")) {
      std::uint64_t k = integer();
      expect(',');
      RingPtr base = spec();
      expect(')');
      return Ring::matrix_ring(static_cast<std::uint32_t>(k), base);
    }
    if (eat("UT(")) {
      std::uint64_t k = integer();
      expect(',');
      RingPtr base = spec();
      expect(')');
      return Ring::upper_triangular(static_cast<std::uint32_t>(k), base);
    }
    if (eat("Table(")) {
      std::size_t close = text.find(')', pos);
      require(close != std::string::npos, errc::parse, "ring spec: unterminated Table(");
      std::string path = text.substr(pos, close - pos);
      pos = close + 1;
      std::ifstream in(path);
      require(in.good(), errc::io, "cannot open table file: " + path);
      std::stringstream buf;
      buf << in.rdbuf();
      return ring_from_table_json(buf.str());
    }
    fail(errc::parse, "ring spec: expected Z/<m>, Prod(...), Mat(...), UT(...) or Table(...)");
  }
};

}  // namespace

RingPtr parse_ring_spec(const std::string& spec) {
  SpecParser parser{spec};
  RingPtr r = parser.spec();
  parser.skip_ws();
  require(parser.pos == spec.size(), errc::parse, "ring spec: trailing characters");
  return r;
}

RingPtr ring_from_table_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    fail(errc::parse, std::string("table JSON: ") + e.what());
  }
  require(j.contains("order") && j.contains("add") && j.contains("mul") && j.contains("zero") &&
              j.contains("one"),
          errc::parse, "table JSON needs fields order, add, mul, zero, one");
  const std::uint64_t order = j["order"].get<std::uint64_t>();
  auto read_table = [&](const char* key) {
    std::vector<std::vector<elem>> table;
    for (const auto& row : j[key]) {
      std::vector<elem> r;
      for (const auto& v : row) r.push_back(v.get<elem>());
      table.push_back(std::move(r));
    }
    return table;
  };
  auto add = read_table("add");
  auto mul = read_table("mul");
  require(add.size() == order && mul.size() == order, errc::parse,
          "table JSON: order does not match table size");
  return Ring::from_table(std::move(add), std::move(mul), j["zero"].get<elem>(),
                          j["one"].get<elem>());
}

std::string AxiomReport::to_json() const {
  nlohmann::ordered_json j;
  j["pass"] = pass;
  j["message"] = message;
  j["counterexample"] = counterexample;
  return j.dump();
}

AxiomReport verify_ring_axioms(const Ring& ring, std::uint64_t max_order) {
  AxiomReport report;
  if (ring.kind() != RingKind::table) {
    report.message = "structural ring kind: axioms hold by construction";
    return report;
  }
  require(ring.order() <= max_order, errc::capacity,
          "ring order " + std::to_string(ring.order()) + " exceeds axiom-check cap " +
              std::to_string(max_order));
  const elem n = static_cast<elem>(ring.order());
  auto fail_with = [&](const std::string& msg, std::vector<elem> witness) {
    report.pass = false;
    report.message = msg;
    report.counterexample = std::move(witness);
    return report;
  };

  for (elem a = 0; a < n; ++a) {
    if (ring.add(a, ring.zero()) != a) return fail_with("zero is not a right additive identity", {a});
    if (ring.add(ring.zero(), a) != a) return fail_with("zero is not a left additive identity", {a});
    if (ring.mul(a, ring.one()) != a) return fail_with("one is not a right identity", {a});
    if (ring.mul(ring.one(), a) != a) return fail_with("one is not a left identity", {a});
    bool has_neg = false;
    for (elem b = 0; b < n && !has_neg; ++b) has_neg = ring.add(a, b) == ring.zero();
    if (!has_neg) return fail_with("element has no additive inverse", {a});
  }
  for (elem a = 0; a < n; ++a)
    for (elem b = 0; b < n; ++b)
      if (ring.add(a, b) != ring.add(b, a)) return fail_with("addition is not commutative", {a, b});
  for (elem a = 0; a < n; ++a)
    for (elem b = 0; b < n; ++b)
      for (elem c = 0; c < n; ++c) {
        if (ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c)))
          return fail_with("addition is not associative", {a, b, c});
        if (ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c)))
          return fail_with("multiplication is not associative", {a, b, c});
        if (ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c)))
          return fail_with("left distributivity fails", {a, b, c});
        if (ring.mul(ring.add(a, b), c) != ring.add(ring.mul(a, c), ring.mul(b, c)))
          return fail_with("right distributivity fails", {a, b, c});
      }
  report.message = "all ring axioms hold";
  return report;
}

QuotientRing make_quotient(const RingPtr& ring, const Ideal& ideal) {
  require(ideal.ring().same_ring(*ring), errc::argument, "ideal belongs to a different ring");
  require(!ideal.contains(ring->one()), errc::argument,
          "quotient by the full ring is not a ring with 1 != 0");
  const elem n = static_cast<elem>(ring->order());

  std::vector<elem> coset(n, static_cast<elem>(-1));  // element -> canonical rep
  std::vector<elem> reps;
  for (elem a = 0; a < n; ++a) {
    if (coset[a] != static_cast<elem>(-1)) continue;
    reps.push_back(a);
    for (elem h : ideal.elements()) coset[ring->add(a, h)] = a;
    require(coset[a] == a, errc::invariant, "coset enumeration failed");
  }
  std::vector<elem> rep_index(n, 0);
  for (std::size_t idx = 0; idx < reps.size(); ++idx) rep_index[reps[idx]] = static_cast<elem>(idx);

  const std::size_t q = reps.size();
  std::vector<std::vector<elem>> add(q, std::vector<elem>(q)), mul(q, std::vector<elem>(q));
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      add[a][b] = rep_index[coset[ring->add(reps[a], reps[b])]];
      mul[a][b] = rep_index[coset[ring->mul(reps[a], reps[b])]];
    }
  QuotientRing out;
  out.ring = Ring::from_table(std::move(add), std::move(mul), rep_index[coset[ring->zero()]],
                              rep_index[coset[ring->one()]]);
  out.project.resize(n);
  for (elem a = 0; a < n; ++a) out.project[a] = rep_index[coset[a]];
  out.lift = reps;
  return out;
}

}  // namespace exgl
