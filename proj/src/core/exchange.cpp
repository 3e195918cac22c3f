#include "core/exchange.hpp"

#include <algorithm>

namespace exgl {

namespace {

// A corner ring qRq inside the ambient ring, with identity q. The top-level
// call uses q = 1, where the element list is all of R. Corner elements are
// represented as ambient elements v with qvq = v, listed in canonical order.
struct Corner {
  const Ring& R;
  elem q;
  std::vector<elem> elements;

  static Corner full(const Ring& ring) {
    Corner c{ring, ring.one(), {}};
    c.elements.resize(ring.order());
    for (elem a = 0; a < ring.order(); ++a) c.elements[a] = a;
    return c;
  }

  static Corner of(const Ring& ring, elem q) {
    Corner c{ring, q, {}};
    std::vector<char> seen(ring.order(), 0);
    for (elem a = 0; a < ring.order(); ++a) {
      const elem v = ring.mul(ring.mul(q, a), q);
      if (!seen[v]) {
        seen[v] = 1;
        c.elements.push_back(v);
      }
    }
    std::sort(c.elements.begin(), c.elements.end());
    return c;
  }
};

// Nicholson search relative to the corner identity: e in x*S idempotent with
// q - e in (q - x)*S, scanning (s, t) over the corner elements in order.
NicholsonWitness corner_nicholson(const Corner& c, elem x) {
  const Ring& R = c.R;
  const elem qmx = R.sub(c.q, x);
  for (elem s : c.elements) {
    const elem e = R.mul(x, s);
    if (R.mul(e, e) != e) continue;
    const elem f = R.sub(c.q, e);
    for (elem t : c.elements)
      if (R.mul(qmx, t) == f) return {e, s, t};
  }
  fail(errc::invariant, "not an exchange ring: Nicholson search failed for " + R.display(x) +
                            " (defective ring table?)");
}

// Orthogonal refinement of x_1 + ... + x_m = q inside the corner ring.
// Returns (e_i, r_i) with e_i = x_i * r_i, e_i orthogonal idempotents in the
// corner, sum q. Each r_i stays inside the corner.
std::vector<std::pair<elem, elem>> corner_decompose(const Corner& c, const std::vector<elem>& xs) {
  const Ring& R = c.R;
  if (xs.size() == 1) return {{c.q, c.q}};  // x_1 = q, witness q

  const auto [e1, s, t] = corner_nicholson(c, xs[0]);
  const elem f = R.sub(c.q, e1);  // f = (x_2 + ... + x_m) * t
  if (xs.size() == 2) return {{e1, s}, {f, t}};

  const Corner inner = Corner::of(R, f);
  // Images y_i = f x_i t f sum to f inside the corner fRf.
  std::vector<elem> ys;
  for (std::size_t i = 1; i < xs.size(); ++i)
    ys.push_back(R.mul(R.mul(f, R.mul(xs[i], t)), f));
  const auto sub = corner_decompose(inner, ys);

  // Lift: with c_i = x_i * (t f s_i) we have f c_i = y_i s_i = f_i, hence
  // c_i f_i is an idempotent in x_i R and the family stays orthogonal.
  std::vector<std::pair<elem, elem>> out(xs.size());
  elem total = R.zero();
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const auto [fi, si] = sub[i - 1];
    const elem ri = R.mul(R.mul(t, R.mul(f, si)), fi);
    const elem ei = R.mul(xs[i], ri);
    out[i] = {ei, ri};
    total = R.add(total, ei);
  }
  // The peeled idempotent is adjusted to q - sum so the family sums to q;
  // it stays in x_1 R because q - total = e1 * (q - total).
  const elem rest = R.sub(c.q, total);
  out[0] = {rest, R.mul(s, rest)};
  return out;
}

}  // namespace

NicholsonWitness nicholson_idempotent(const Ring& ring, elem x) {
  ring.check(x);
  return corner_nicholson(Corner::full(ring), x);
}

IdempotentDecomposition orthogonal_decomposition(const RingPtr& ring, std::vector<elem> xs) {
  require(!xs.empty(), errc::argument, "orthogonal_decomposition: empty input");
  const Ring& R = *ring;
  elem sum = R.zero();
  for (elem x : xs) sum = R.add(sum, R.check(x));
  require(sum == R.one(), errc::argument, "orthogonal_decomposition: inputs must sum to 1");

  const auto pairs = corner_decompose(Corner::full(R), xs);
  IdempotentDecomposition d;
  d.inputs = std::move(xs);
  for (const auto& [e, r] : pairs) {
    d.idempotents.push_back(e);
    d.witnesses.push_back(r);
  }
  validate_decomposition(R, d);
  return d;
}

void validate_decomposition(const Ring& R, const IdempotentDecomposition& d) {
  const std::size_t m = d.inputs.size();
  require(d.idempotents.size() == m && d.witnesses.size() == m, errc::invariant,
          "decomposition: size mismatch");
  elem sum = R.zero();
  for (std::size_t i = 0; i < m; ++i) {
    const elem e = d.idempotents[i];
    require(R.mul(e, e) == e, errc::invariant, "decomposition: e_i is not idempotent");
    require(R.mul(d.inputs[i], d.witnesses[i]) == e, errc::invariant,
            "decomposition: e_i != x_i * r_i");
    sum = R.add(sum, e);
    for (std::size_t j = 0; j < m; ++j)
      if (i != j)
        require(R.mul(e, d.idempotents[j]) == R.zero(), errc::invariant,
                "decomposition: idempotents are not orthogonal");
  }
  require(sum == R.one(), errc::invariant, "decomposition: idempotents do not sum to 1");
}

}  // namespace exgl
