#include "core/factor.hpp"

#include <algorithm>

#include "core/subgroups.hpp"

namespace exgl {

namespace {

elem dot(const Ring& R, const std::vector<elem>& row, const std::vector<elem>& col) {
  elem acc = R.zero();
  for (std::size_t k = 0; k < row.size(); ++k) acc = R.add(acc, R.mul(row[k], col[k]));
  return acc;
}

Mat rank_one_matrix(const RingPtr& ring, std::uint32_t n, const std::vector<elem>& u,
                    const std::vector<elem>& v) {
  Mat m = identity(ring, n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) m.at(i, j) = ring->add(m.at(i, j), ring->mul(u[i], v[j]));
  return m;
}

// Core of the rank-one factorization. `hoist` (if not -1) moves that index's
// conjugator letter to the end of the column word, so a following conjugation
// at the same position merges with it when the word is expanded.
RelativeWord rank_one_factors(const RingPtr& ring, std::uint32_t n,
                              const std::shared_ptr<const Ideal>& ideal,
                              const std::vector<elem>& u, const std::vector<elem>& v,
                              std::uint32_t j, std::int64_t hoist) {
  const Ring& R = *ring;
  require(u.size() == n && v.size() == n, errc::argument, "rank-one: vector length mismatch");
  require(j < n, errc::argument, "rank-one: zero index out of range");
  for (elem e : u) R.check(e);
  for (elem e : v) R.check(e);
  require(v[j] == R.zero(), errc::argument, "rank-one: v[j] must be zero");
  for (std::uint32_t k = 0; k < n; ++k)
    require(k == j || ideal->contains(v[k]), errc::argument,
            "rank-one: row entry " + R.display(v[k]) + " lies outside the ideal");
  require(dot(R, v, u) == R.zero(), errc::argument, "rank-one: v*u must vanish");

  std::vector<std::uint32_t> order;
  for (std::uint32_t k = 0; k < n; ++k)
    if (k != j) order.push_back(k);
  if (hoist >= 0 && static_cast<std::uint32_t>(hoist) != j)
    std::stable_partition(order.begin(), order.end(),
                          [&](std::uint32_t k) { return k != static_cast<std::uint32_t>(hoist); });

  GroupWord conj(ring, n);
  for (std::uint32_t k : order) conj.push(Letter{k, j, R.neg(u[k]), 1});

  RelativeWord out(ring, n, ideal);
  for (std::uint32_t k = 0; k < n; ++k)
    if (k != j) out.push(conj, Letter{j, k, v[k], 1});
  const elem uj1 = R.sub(u[j], R.one());
  GroupWord empty(ring, n);
  for (std::uint32_t k = 0; k < n; ++k)
    if (k != j) out.push(empty, Letter{j, k, R.mul(uj1, v[k]), 1});

  require(out.eval() == rank_one_matrix(ring, n, u, v), errc::invariant,
          "rank-one factorization does not evaluate to e + u v");
  return out;
}

}  // namespace

RelativeWord factor_rank_one(RingPtr ring, std::uint32_t n, std::shared_ptr<const Ideal> ideal,
                             const std::vector<elem>& u, const std::vector<elem>& v,
                             std::uint32_t j) {
  require(ideal && ideal->ring().same_ring(*ring), errc::argument, "ideal/ring mismatch");
  return rank_one_factors(ring, n, ideal, u, v, j, -1);
}

RelativeWord factor_unimodular(RingPtr ring, std::uint32_t n, std::shared_ptr<const Ideal> ideal,
                               const std::vector<elem>& u, const std::vector<elem>& v,
                               const std::vector<elem>& w, elem x) {
  const Ring& R = *ring;
  require(n >= 2, errc::unsupported, "unimodular factorization needs degree >= 2");
  require(ideal && ideal->ring().same_ring(R), errc::argument, "ideal/ring mismatch");
  require(u.size() == n && v.size() == n && w.size() == n, errc::argument,
          "unimodular: vector length mismatch");
  require(dot(R, v, u) == R.zero(), errc::argument, "unimodular: v*u must vanish");
  require(dot(R, v, w) == R.one(), errc::argument, "unimodular: v*w must be 1");
  require(ideal->contains(R.check(x)), errc::argument, "unimodular: x lies outside the ideal");

  std::vector<elem> vw(n);
  for (std::uint32_t k = 0; k < n; ++k) vw[k] = R.mul(v[k], w[k]);
  const IdempotentDecomposition d = orthogonal_decomposition(ring, vw);

  RelativeWord out(ring, n, ideal);
  for (std::uint32_t p = 0; p < n; ++p) {
    const elem xe = R.mul(x, d.idempotents[p]);
    if (xe == R.zero()) continue;
    const std::uint32_t q = (p == 0) ? 1 : 0;  // smallest index != p
    const elem c = R.mul(R.mul(w[p], d.witnesses[p]), v[q]);

    // tau(p)^{t_{pq}(-c)} = e + u' v' with v'_q = 0
    std::vector<elem> u2 = u;
    u2[p] = R.add(u2[p], R.mul(c, u[q]));
    std::vector<elem> v2(n);
    for (std::uint32_t m = 0; m < n; ++m) v2[m] = R.mul(xe, v[m]);
    v2[q] = R.sub(v2[q], R.mul(R.mul(xe, v[p]), c));
    require(v2[q] == R.zero(), errc::invariant, "unimodular: conjugated row entry must vanish");

    RelativeWord piece = rank_one_factors(ring, n, ideal, u2, v2, q, p);
    GroupWord back(ring, n);
    back.push(Letter{p, q, c, 1});  // undoes the conjugation
    piece.conjugate_by(back);

    std::vector<elem> xev(n);
    for (std::uint32_t m = 0; m < n; ++m) xev[m] = R.mul(xe, v[m]);
    require(piece.eval() == rank_one_matrix(ring, n, u, xev), errc::invariant,
            "unimodular: piece does not evaluate to e + u x e_p v");
    out.append(piece);
  }

  std::vector<elem> xv(n);
  for (std::uint32_t m = 0; m < n; ++m) xv[m] = R.mul(x, v[m]);
  require(out.eval() == rank_one_matrix(ring, n, u, xv), errc::invariant,
          "unimodular factorization does not evaluate to e + u x v");
  return out;
}

RelativeWord factor_conjugated_transvection(const InvertibleMatrix& sigma, std::uint32_t i,
                                            std::uint32_t j, elem x,
                                            std::shared_ptr<const Ideal> ideal) {
  const RingPtr ring = sigma.mat.ring;
  const Ring& R = *ring;
  const std::uint32_t n = sigma.n();
  require(n >= 2, errc::unsupported, "conjugated transvection needs degree >= 2");
  require(i < n && j < n && i != j, errc::argument, "need distinct indices");
  require(ideal && ideal->contains(R.check(x)), errc::argument, "x lies outside the ideal");

  std::vector<elem> u(n), v(n), w(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    u[k] = sigma.inv.at(k, i);  // column i of the inverse
    v[k] = sigma.mat.at(j, k);  // row j
    w[k] = sigma.inv.at(k, j);  // column j of the inverse
  }
  RelativeWord out = factor_unimodular(ring, n, std::move(ideal), u, v, w, x);

  const Mat target = mul(mul(sigma.inv, transvection(ring, n, i, j, x)), sigma.mat);
  require(out.eval() == target, errc::invariant,
          "conjugated transvection does not evaluate to t_{ij}(x)^sigma");
  return out;
}

RelativeWord factor_congruence_commutator(const InvertibleMatrix& sigma, std::uint32_t i,
                                          std::uint32_t j, elem x,
                                          std::shared_ptr<const Ideal> ideal) {
  const RingPtr ring = sigma.mat.ring;
  const Ring& R = *ring;
  const std::uint32_t n = sigma.n();
  require(n >= 2, errc::unsupported, "congruence commutator needs degree >= 2");
  require(i < n && j < n && i != j, errc::argument, "need distinct indices");
  require(ideal != nullptr, errc::argument, "missing ideal");
  R.check(x);
  const Ideal& I = *ideal;
  require(congruence_member(sigma.mat, I), errc::precondition,
          "sigma is not in the full congruence subgroup of the ideal");

  const Mat& s = sigma.mat;
  const Mat& si = sigma.inv;

  std::vector<elem> xs(n);
  for (std::uint32_t k = 0; k < n; ++k) xs[k] = R.mul(si.at(j, k), s.at(k, j));
  const IdempotentDecomposition d = orthogonal_decomposition(ring, xs);

  auto commutator_with_sigma = [&](const Mat& t, const Mat& ti) {
    return mul(mul(t, s), mul(ti, si));
  };

  // tau(k) = [t_{ij}(x e_k), sigma] for k != j: conjugating by
  // xi = t_{kl}(-s_kj r_k si_jl) turns the second factor into rank-one shape.
  auto tau_offdiag = [&](std::uint32_t k) {
    RelativeWord out(ring, n, ideal);
    const elem xe = R.mul(x, d.idempotents[k]);
    if (xe == R.zero()) return out;
    const std::uint32_t l = (k == 0) ? 1 : 0;
    const elem c = R.mul(R.mul(s.at(k, j), d.witnesses[k]), si.at(j, l));

    std::vector<elem> u2(n), v2(n);
    for (std::uint32_t m = 0; m < n; ++m) {
      u2[m] = s.at(m, i);
      v2[m] = R.mul(xe, si.at(j, m));
    }
    u2[k] = R.add(u2[k], R.mul(c, s.at(l, i)));  // xi^{-1} * sigma_{*i}
    v2[l] = R.sub(v2[l], R.mul(R.mul(xe, si.at(j, k)), c));
    for (std::uint32_t m = 0; m < n; ++m) u2[m] = R.neg(u2[m]);
    require(v2[l] == R.zero(), errc::invariant, "commutator case 1: row entry must vanish");

    GroupWord empty(ring, n);
    out.push(empty, Letter{i, j, xe, 1});
    RelativeWord piece = rank_one_factors(ring, n, ideal, u2, v2, l, -1);
    GroupWord back(ring, n);
    back.push(Letter{k, l, c, 1});
    piece.conjugate_by(back);
    out.append(piece);

    const Mat t = transvection(ring, n, i, j, xe);
    const Mat ti = transvection(ring, n, i, j, R.neg(xe));
    require(out.eval() == commutator_with_sigma(t, ti), errc::invariant,
            "commutator case 1: evaluation mismatch");
    return out;
  };

  // tau(j): the four-piece assembly around xi = prod t_{jl}(-s_jj r_j si_jl).
  auto tau_diag = [&]() {
    RelativeWord out(ring, n, ideal);
    const elem xe = R.mul(x, d.idempotents[j]);
    if (xe == R.zero()) return out;
    const elem rj = d.witnesses[j];

    GroupWord xi(ring, n), xi_inv(ring, n);
    std::vector<elem> cs(n, R.zero());
    for (std::uint32_t l = 0; l < n; ++l) {
      if (l == j) continue;
      cs[l] = R.mul(R.mul(s.at(j, j), rj), si.at(j, l));
      xi.push(Letter{j, l, R.neg(cs[l]), 1});
    }
    xi_inv.append_inverse(xi);

    // u' = -xi^{-1} sigma_{*i}, v' = x e_j si_{j*} xi; v' vanishes off j.
    std::vector<elem> u2(n), v2(n);
    for (std::uint32_t m = 0; m < n; ++m) {
      u2[m] = s.at(m, i);
      v2[m] = R.mul(xe, si.at(j, m));
    }
    for (std::uint32_t l = 0; l < n; ++l)
      if (l != j) u2[j] = R.add(u2[j], R.mul(cs[l], s.at(l, i)));
    for (std::uint32_t m = 0; m < n; ++m) u2[m] = R.neg(u2[m]);
    for (std::uint32_t l = 0; l < n; ++l)
      if (l != j) v2[l] = R.sub(v2[l], R.mul(v2[j], cs[l]));
    for (std::uint32_t l = 0; l < n; ++l)
      require(l == j || v2[l] == R.zero(), errc::invariant,
              "commutator case 2: row entries off j must vanish");

    const elem z = R.mul(u2[j], v2[j]);
    const elem a = R.sub(R.mul(R.mul(s.at(j, j), rj), si.at(j, j)), R.one());
    const elem b = R.mul(R.mul(s.at(j, i), xe), si.at(j, j));
    require(z == R.mul(a, b), errc::invariant, "commutator case 2: z != a*b");
    require(I.contains(b), errc::invariant, "commutator case 2: b lies outside the ideal");
    require(R.mul(b, a) == R.zero(), errc::invariant, "commutator case 2: b*a != 0");

    const elem w_entry =
        R.sub(R.mul(xe, R.add(R.one(), z)), R.mul(s.at(i, i), R.mul(xe, si.at(j, j))));
    require(I.contains(w_entry), errc::invariant,
            "commutator case 2: diagonal correction entry lies outside the ideal");

    GroupWord empty(ring, n);
    // (a) [xi^{-1}, t_{ij}(x e_j)] = xi^{-1} * (xi conjugated by t^{-1})
    for (auto it = xi.letters().rbegin(); it != xi.letters().rend(); ++it)
      out.push(empty, Letter{it->i, it->j, R.neg(it->x), 1});
    GroupWord tinv(ring, n);
    tinv.push(Letter{i, j, R.neg(xe), 1});
    for (const Letter& l : xi.letters()) out.push(tinv, l);
    // (b) e + z e^{jj} as a rank-one word with column a, row b at position j
    std::vector<elem> ucol(n, R.zero()), vrow(n, R.zero());
    ucol[j] = a;
    vrow[j] = b;
    const std::uint32_t j0 = (j == 0) ? 1 : 0;
    out.append(rank_one_factors(ring, n, ideal, ucol, vrow, j0, -1));
    // (c) the corrected diagonal transvection
    out.push(empty, Letter{i, j, w_entry, 1});
    // (d) the remaining column-j letters
    for (std::uint32_t l = 0; l < n; ++l)
      if (l != i && l != j)
        out.push(empty, Letter{l, j, R.neg(R.mul(s.at(l, i), R.mul(xe, si.at(j, j)))), 1});

    out.conjugate_by(xi_inv);

    const Mat t = transvection(ring, n, i, j, xe);
    const Mat ti = transvection(ring, n, i, j, R.neg(xe));
    require(out.eval() == commutator_with_sigma(t, ti), errc::invariant,
            "commutator case 2: evaluation mismatch");
    return out;
  };

  // [t_{ij}(x), sigma] = prod_{k = n-1..0} tau(k)^{(T_0...T_{k-1})^{-1}}
  // where T_k = t_{ij}(x e_k); the prefix is a single letter.
  RelativeWord out(ring, n, ideal);
  std::vector<elem> prefix(n, R.zero());
  for (std::uint32_t k = 1; k < n; ++k)
    prefix[k] = R.add(prefix[k - 1], d.idempotents[k - 1]);
  for (std::uint32_t k = n; k-- > 0;) {
    RelativeWord tau = (k == j) ? tau_diag() : tau_offdiag(k);
    const elem shift = R.mul(x, prefix[k]);
    if (shift != R.zero()) {
      GroupWord ext(ring, n);
      ext.push(Letter{i, j, R.neg(shift), 1});
      tau.conjugate_by(ext);
    }
    out.append(tau);
  }

  const Mat t = transvection(ring, n, i, j, x);
  const Mat ti = transvection(ring, n, i, j, R.neg(x));
  require(out.eval() == commutator_with_sigma(t, ti), errc::invariant,
          "congruence commutator does not evaluate to [t_{ij}(x), sigma]");
  return out;
}

}  // namespace exgl
