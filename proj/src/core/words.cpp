#include "core/words.hpp"

#include "json.hpp"

namespace exgl {

namespace {

void check_letter(const Ring& ring, std::uint32_t n, const Letter& l) {
  require(l.i < n && l.j < n, errc::argument, "letter index out of range");
  require(l.i != l.j, errc::argument, "letter needs i != j");
  require(l.exp == 1 || l.exp == -1, errc::argument, "letter exponent must be +1 or -1");
  ring.check(l.x);
}

// Signed value of a letter: t_{ij}(x)^{-1} = t_{ij}(-x).
elem letter_value(const Ring& ring, const Letter& l) {
  return l.exp == 1 ? l.x : ring.neg(l.x);
}

nlohmann::ordered_json letter_to_json(const Letter& l) {
  nlohmann::ordered_json j;
  j["i"] = l.i + 1;  // 1-based on the wire
  j["j"] = l.j + 1;
  j["x"] = l.x;
  j["exp"] = l.exp;
  return j;
}

Letter letter_from_json(const Ring& ring, std::uint32_t n, const nlohmann::json& j) {
  require(j.contains("i") && j.contains("j") && j.contains("x") && j.contains("exp"), errc::parse,
          "letter JSON needs fields i, j, x, exp");
  const std::uint64_t i = j["i"].get<std::uint64_t>();
  const std::uint64_t jj = j["j"].get<std::uint64_t>();
  require(i >= 1 && i <= n && jj >= 1 && jj <= n, errc::parse, "letter JSON: index out of range");
  Letter l{static_cast<std::uint32_t>(i - 1), static_cast<std::uint32_t>(jj - 1),
           j["x"].get<elem>(), j["exp"].get<int>()};
  check_letter(ring, n, l);
  return l;
}

}  // namespace

void GroupWord::push(Letter l) {
  check_letter(*ring_, n_, l);
  if (l.x == ring_->zero()) return;
  letters_.push_back(l);
}

void GroupWord::push_reduced(Letter l) {
  check_letter(*ring_, n_, l);
  elem value = letter_value(*ring_, l);
  if (value == ring_->zero()) return;
  while (!letters_.empty()) {
    Letter& last = letters_.back();
    if (last.i != l.i || last.j != l.j) break;
    value = ring_->add(letter_value(*ring_, last), value);
    letters_.pop_back();
    if (value == ring_->zero()) return;
  }
  letters_.push_back(Letter{l.i, l.j, value, 1});
}

void GroupWord::append(const GroupWord& other) {
  require(other.ring().same_ring(*ring_) && other.n_ == n_, errc::argument,
          "word append across different contexts");
  for (const Letter& l : other.letters_) push(l);
}

void GroupWord::append_inverse(const GroupWord& other) {
  require(other.ring().same_ring(*ring_) && other.n_ == n_, errc::argument,
          "word append across different contexts");
  for (auto it = other.letters_.rbegin(); it != other.letters_.rend(); ++it)
    push(Letter{it->i, it->j, it->x, -it->exp});
}

GroupWord GroupWord::inverse() const {
  GroupWord out(ring_, n_);
  out.append_inverse(*this);
  return out;
}

Mat GroupWord::eval() const {
  Mat acc = identity(ring_, n_);
  for (const Letter& l : letters_)
    right_mul_transvection(acc, l.i, l.j, letter_value(*ring_, l));
  return acc;
}

std::string GroupWord::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Letter& l : letters_) arr.push_back(letter_to_json(l));
  return arr.dump();
}

GroupWord GroupWord::from_json(RingPtr ring, std::uint32_t n, const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    fail(errc::parse, std::string("word JSON: ") + e.what());
  }
  require(j.is_array(), errc::parse, "word JSON: expected an array of letters");
  GroupWord w(std::move(ring), n);
  for (const auto& entry : j) w.letters_.push_back(letter_from_json(w.ring(), n, entry));
  return w;
}

void RelativeWord::push(GroupWord conj, Letter base, int exp) {
  check_letter(*ring_, n_, base);
  require(conj.degree() == n_ && conj.ring().same_ring(*ring_), errc::argument,
          "conjugator from a different context");
  require(ideal_->contains(base.x), errc::invariant,
          "relative word: base letter entry " + ring_->display(base.x) +
              " lies outside the ideal");
  require(exp == 1 || exp == -1, errc::argument, "factor exponent must be +1 or -1");
  if (base.x == ring_->zero()) return;
  factors_.push_back(RelFactor{std::move(conj), base, exp});
}

void RelativeWord::conjugate_by(const GroupWord& w) {
  for (RelFactor& f : factors_) f.conj.append(w);
}

void RelativeWord::append(const RelativeWord& other) {
  require(other.ring().same_ring(*ring_) && other.degree() == n_, errc::argument,
          "relative word append across contexts");
  for (const RelFactor& f : other.factors_) factors_.push_back(f);
}

Mat RelativeWord::eval() const {
  Mat acc = identity(ring_, n_);
  for (const RelFactor& f : factors_) {
    // acc *= conj^{-1} * base^{exp} * conj, all as column operations
    for (auto it = f.conj.letters().rbegin(); it != f.conj.letters().rend(); ++it)
      right_mul_transvection(acc, it->i, it->j, ring_->neg(letter_value(*ring_, *it)));
    const bool positive = f.base.exp * f.exp == 1;
    right_mul_transvection(acc, f.base.i, f.base.j,
                           positive ? f.base.x : ring_->neg(f.base.x));
    for (const Letter& l : f.conj.letters())
      right_mul_transvection(acc, l.i, l.j, letter_value(*ring_, l));
  }
  return acc;
}

GroupWord RelativeWord::expand() const {
  GroupWord out(ring_, n_);
  for (const RelFactor& f : factors_) {
    for (auto it = f.conj.letters().rbegin(); it != f.conj.letters().rend(); ++it)
      out.push_reduced(Letter{it->i, it->j, it->x, -it->exp});
    out.push_reduced(Letter{f.base.i, f.base.j, f.base.x, f.base.exp * f.exp});
    for (const Letter& l : f.conj.letters()) out.push_reduced(l);
  }
  return out;
}

std::string RelativeWord::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const RelFactor& f : factors_) {
    nlohmann::ordered_json entry;
    entry["conj"] = nlohmann::ordered_json::parse(f.conj.to_json());
    entry["base"] = letter_to_json(f.base);
    entry["exp"] = f.exp;
    arr.push_back(std::move(entry));
  }
  return arr.dump();
}

RelativeWord RelativeWord::from_json(RingPtr ring, std::uint32_t n,
                                     std::shared_ptr<const Ideal> ideal,
                                     const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    fail(errc::parse, std::string("relative word JSON: ") + e.what());
  }
  require(j.is_array(), errc::parse, "relative word JSON: expected an array of factors");
  RelativeWord w(ring, n, std::move(ideal));
  for (const auto& entry : j) {
    require(entry.contains("conj") && entry.contains("base") && entry.contains("exp"), errc::parse,
            "relative word JSON: factor needs conj, base, exp");
    GroupWord conj(ring, n);
    for (const auto& lj : entry["conj"]) conj.push(letter_from_json(*ring, n, lj));
    w.push(std::move(conj), letter_from_json(*ring, n, entry["base"]), entry["exp"].get<int>());
  }
  return w;
}

GroupWord perm_word(RingPtr ring, std::uint32_t n, std::uint32_t i, std::uint32_t j) {
  require(i < n && j < n && i != j, errc::argument, "perm word needs distinct indices");
  GroupWord w(ring, n);
  const elem one = w.ring().one();
  w.push(Letter{i, j, one, 1});
  w.push(Letter{j, i, w.ring().neg(one), 1});
  w.push(Letter{i, j, one, 1});
  return w;
}

namespace {

// Conjugation action of p_{ab} on a transvection position with sign:
// (c,d) -> (swap(c), swap(d)), the entry picking up -1 for each index equal
// to b.
struct PermAction {
  std::uint32_t i, j;
  int sign;  // +1 or -1

  void apply(std::uint32_t a, std::uint32_t b) {
    auto swap_one = [&](std::uint32_t v) { return v == a ? b : (v == b ? a : v); };
    if (i == b) sign = -sign;
    if (j == b) sign = -sign;
    i = swap_one(i);
    j = swap_one(j);
  }
};

}  // namespace

GroupWord perm_conjugator(RingPtr ring, std::uint32_t n, std::uint32_t i, std::uint32_t j,
                          std::uint32_t i2, std::uint32_t j2) {
  require(n >= 3, errc::unsupported, "perm conjugator needs degree >= 3");
  require(i < n && j < n && i2 < n && j2 < n, errc::argument, "index out of range");
  require(i != j && i2 != j2, errc::argument, "positions need distinct indices");

  auto plan_sign = [&](const std::vector<std::pair<std::uint32_t, std::uint32_t>>& moves) {
    PermAction act{i, j, 1};
    for (const auto& [a, b] : moves) act.apply(a, b);
    require(act.i == i2 && act.j == j2, errc::invariant, "perm conjugator: position plan failed");
    return act.sign;
  };

  std::vector<std::pair<std::uint32_t, std::uint32_t>> moves;
  {
    PermAction act{i, j, 1};
    if (act.i != i2) {
      moves.emplace_back(act.i, i2);
      act.apply(act.i, i2);
    }
    if (act.j != j2) {
      moves.emplace_back(act.j, j2);
      act.apply(act.j, j2);
    }
  }
  if (plan_sign(moves) < 0 && !moves.empty()) {
    // Reversing the orientation of the last swap flips the sign unless that
    // swap touched both indices.
    auto flipped = moves;
    std::swap(flipped.back().first, flipped.back().second);
    if (plan_sign(flipped) > 0) moves = flipped;
  }
  if (plan_sign(moves) < 0) {
    // Both indices moved in one swap; conjugating twice more by p_{j2,m}
    // returns to the position with the sign corrected.
    std::uint32_t m = 0;
    while (m == i2 || m == j2) ++m;
    moves.emplace_back(j2, m);
    moves.emplace_back(j2, m);
    require(plan_sign(moves) > 0, errc::invariant, "perm conjugator: sign fix failed");
  }

  GroupWord tau(ring, n);
  for (const auto& [a, b] : moves) tau.append(perm_word(ring, n, a, b));

  // Evaluation check over the whole ring: conjugation must send t_{ij}(x) to
  // t_{i2,j2}(x) for every x.
  const Mat tau_mat = tau.eval();
  const Mat tau_inv = tau.inverse().eval();
  for (elem x = 0; x < ring->order(); ++x) {
    const Mat got = mul(mul(tau_inv, transvection(ring, n, i, j, x)), tau_mat);
    require(got == transvection(ring, n, i2, j2, x), errc::invariant,
            "perm conjugator: evaluation check failed");
  }
  return tau;
}

GroupWord transvection_as_commutator(RingPtr ring, std::uint32_t n, std::uint32_t i,
                                     std::uint32_t k, elem x) {
  require(n >= 3, errc::unsupported, "commutator expression needs degree >= 3");
  require(i < n && k < n && i != k, errc::argument, "need distinct indices");
  ring->check(x);
  GroupWord w(ring, n);
  if (x == ring->zero()) return w;
  std::uint32_t j = 0;
  while (j == i || j == k) ++j;
  const elem one = ring->one();
  w.push(Letter{i, j, x, 1});
  w.push(Letter{j, k, one, 1});
  w.push(Letter{i, j, x, -1});
  w.push(Letter{j, k, one, -1});
  require(w.eval() == transvection(ring, n, i, k, x), errc::invariant,
          "commutator word evaluation failed");
  return w;
}

std::string RelationsReport::to_json() const {
  nlohmann::ordered_json j;
  j["pass"] = pass;
  j["message"] = message;
  return j.dump();
}

RelationsReport check_relations(const RingPtr& ring, std::uint32_t n) {
  const Ring& R = *ring;
  RelationsReport report;
  auto fail_with = [&](const std::string& msg) {
    report.pass = false;
    report.message = msg;
    return report;
  };
  auto commutator = [&](const Mat& g, const Mat& h, const Mat& gi, const Mat& hi) {
    return mul(mul(g, h), mul(gi, hi));
  };

  const Mat e = identity(ring, n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j) continue;
      // additivity in the entry
      for (elem x = 0; x < R.order(); ++x)
        for (elem y = 0; y < R.order(); ++y) {
          const Mat lhs = mul(transvection(ring, n, i, j, x), transvection(ring, n, i, j, y));
          if (!(lhs == transvection(ring, n, i, j, R.add(x, y))))
            return fail_with("additivity fails at (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + "), x=" + R.display(x) + ", y=" + R.display(y));
        }
      for (std::uint32_t h = 0; h < n; ++h)
        for (std::uint32_t k = 0; k < n; ++k) {
          if (h == k) continue;
          const bool disjoint = (j != h) && (i != k);
          const bool chain = (j == h) && (i != k);
          if (!disjoint && !chain) continue;
          for (elem x = 0; x < R.order(); ++x)
            for (elem y = 0; y < R.order(); ++y) {
              const Mat g = transvection(ring, n, i, j, x);
              const Mat hmat = transvection(ring, n, h, k, y);
              const Mat gi = transvection(ring, n, i, j, R.neg(x));
              const Mat hi = transvection(ring, n, h, k, R.neg(y));
              const Mat c = commutator(g, hmat, gi, hi);
              const Mat want =
                  disjoint ? e : transvection(ring, n, i, k, R.mul(x, y));
              if (!(c == want))
                return fail_with(std::string(disjoint ? "commutation" : "chain relation") +
                                 " fails at (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + "),(" + std::to_string(h + 1) + "," +
                                 std::to_string(k + 1) + "), x=" + R.display(x) +
                                 ", y=" + R.display(y));
            }
        }
    }
  report.message = "relations hold over " + R.spec_string() + " at degree " + std::to_string(n);
  return report;
}

}  // namespace exgl
