#include "core/witness.hpp"

#include <algorithm>

#include "core/exchange.hpp"
#include "json.hpp"

namespace exgl {

Mat ConjugateProduct::eval() const {
  const RingPtr& ring = sigma_.mat.ring;
  Mat acc = identity(ring, sigma_.n());
  for (const ConjugateFactor& f : factors_) {
    const Mat c = f.conj.eval();
    const Mat ci = f.conj.inverse().eval();
    acc = mul(acc, mul(mul(ci, f.exp == 1 ? sigma_.mat : sigma_.inv), c));
  }
  return acc;
}

std::string ConjugateProduct::to_json() const {
  nlohmann::ordered_json j;
  j["sigma"] = nlohmann::ordered_json::parse(sigma_.mat.to_json());
  j["sigma_inverse"] = nlohmann::ordered_json::parse(sigma_.inv.to_json());
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ConjugateFactor& f : factors_) {
    nlohmann::ordered_json entry;
    entry["conj"] = nlohmann::ordered_json::parse(f.conj.to_json());
    entry["exp"] = f.exp;
    arr.push_back(std::move(entry));
  }
  j["factors"] = std::move(arr);
  return j.dump();
}

ConjugateProduct ConjugateProduct::from_json(RingPtr ring, const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    fail(errc::parse, std::string("conjugate product JSON: ") + e.what());
  }
  require(j.contains("sigma") && j.contains("sigma_inverse") && j.contains("factors"), errc::parse,
          "conjugate product JSON needs sigma, sigma_inverse, factors");
  Mat sigma = mat_from_json(ring, j["sigma"].dump());
  Mat sigma_inv = mat_from_json(ring, j["sigma_inverse"].dump());
  InvertibleMatrix inv = as_invertible(std::move(sigma), std::move(sigma_inv));
  std::vector<ConjugateFactor> factors;
  for (const auto& entry : j["factors"]) {
    require(entry.contains("conj") && entry.contains("exp"), errc::parse,
            "conjugate product JSON: factor needs conj and exp");
    GroupWord conj = GroupWord::from_json(ring, inv.n(), entry["conj"].dump());
    const int exp = entry["exp"].get<int>();
    require(exp == 1 || exp == -1, errc::parse, "conjugate product JSON: exp must be +1 or -1");
    factors.push_back(ConjugateFactor{std::move(conj), exp});
  }
  return ConjugateProduct(std::move(inv), std::move(factors));
}

ReductionPair reduce_step(const ReductionPair& pair, const InvertibleMatrix& g) {
  // ([a^{-1}, g], [g, b]) with the inverses assembled from known pieces.
  Mat a2 = mul(mul(pair.a.inv, g.mat), mul(pair.a.mat, g.inv));
  Mat a2i = mul(mul(g.mat, pair.a.inv), mul(g.inv, pair.a.mat));
  Mat b2 = mul(mul(g.mat, pair.b.mat), mul(g.inv, pair.b.inv));
  Mat b2i = mul(mul(pair.b.mat, g.mat), mul(pair.b.inv, g.inv));
  return {as_invertible(std::move(a2), std::move(a2i)),
          as_invertible(std::move(b2), std::move(b2i))};
}

ReductionExpansion expand_reduction(const GroupWord& a1, const InvertibleMatrix& b1,
                                    const std::vector<GroupWord>& gs) {
  const RingPtr ring = b1.mat.ring;
  const std::uint32_t n = b1.n();
  require(a1.degree() == n && a1.ring().same_ring(*ring), errc::argument,
          "expansion: component from a different context");

  auto word_to_inv = [&](const GroupWord& w) {
    return as_invertible(w.eval(), w.inverse().eval());
  };

  std::vector<ReductionPair> chain;
  chain.push_back({word_to_inv(a1), b1});
  const InvertibleMatrix beta = as_invertible(mul(chain[0].a.mat, b1.mat),
                                              mul(b1.inv, chain[0].a.inv));

  GroupWord a_word = a1;
  std::vector<ConjugateFactor> factors;
  factors.push_back(ConjugateFactor{GroupWord(ring, n), 1});

  for (const GroupWord& g : gs) {
    require(g.degree() == n && g.ring().same_ring(*ring), errc::argument,
            "expansion: reducing word from a different context");
    // a_{k+1} b_{k+1} = (a_k b_k)^{g^{-1} a_k} * ((a_k b_k)^{-1})^{a_k}
    std::vector<ConjugateFactor> next;
    next.reserve(factors.size() * 2);
    for (const ConjugateFactor& f : factors) {
      GroupWord c = f.conj;
      c.append_inverse(g);
      c.append(a_word);
      next.push_back(ConjugateFactor{std::move(c), f.exp});
    }
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
      GroupWord c = it->conj;
      c.append(a_word);
      next.push_back(ConjugateFactor{std::move(c), -it->exp});
    }
    factors = std::move(next);

    chain.push_back(reduce_step(chain.back(), word_to_inv(g)));
    GroupWord a_next = a_word.inverse();
    a_next.append(g);
    a_next.append(a_word);
    a_next.append_inverse(g);
    a_word = std::move(a_next);
    require(a_word.eval() == chain.back().a.mat, errc::invariant,
            "expansion: word for the reduced first component drifted");

    ConjugateProduct check(beta, factors);
    require(check.eval() == mul(chain.back().a.mat, chain.back().b.mat), errc::invariant,
            "expansion: re-evaluation mismatch after a reduction step");
  }

  return ReductionExpansion{ConjugateProduct(beta, std::move(factors)), std::move(chain)};
}

ConjugateProduct extract_transvection_8(const InvertibleMatrix& sigma, std::uint32_t i,
                                        const std::vector<elem>& xs, std::uint32_t j_decl,
                                        elem y, std::uint32_t k, std::uint32_t l, elem a,
                                        elem b) {
  const RingPtr ring = sigma.mat.ring;
  const Ring& R = *ring;
  const std::uint32_t n = sigma.n();
  require(n >= 3, errc::unsupported, "transvection extraction needs degree >= 3");
  require(i < n && j_decl < n && k < n && l < n && k != l, errc::argument, "bad indices");
  require(xs.size() == n, errc::argument, "coefficient vector length mismatch");
  for (elem e : xs) R.check(e);
  R.check(y);
  R.check(a);
  R.check(b);
  require(xs[j_decl] == R.one(), errc::argument, "declared coefficient must be 1");
  {
    elem acc = R.zero();
    for (std::uint32_t p = 0; p < n; ++p) acc = R.add(acc, R.mul(sigma.mat.at(i, p), xs[p]));
    require(R.mul(y, acc) == R.zero(), errc::precondition,
            "hypothesis y * sum_p sigma_{ip} x_p = 0 fails");
  }

  const bool same = (i == j_decl);

  // tau: the column word collecting the coefficients.
  GroupWord tau(ring, n);
  const std::uint32_t col = same ? i : j_decl;
  for (std::uint32_t p = 0; p < n; ++p)
    if (p != col) tau.push(Letter{p, col, xs[p], 1});

  // auxiliary indices, smallest admissible
  std::uint32_t r = 0;
  while (r == i || (!same && r == j_decl)) ++r;
  std::uint32_t s = 0;
  if (same)
    while (s == i || s == r) ++s;

  // xi = [t_{ri}(-y), sigma^{-1}]^tau, a product of two conjugates of
  // sigma^{+-1}: (sigma^{-1})^{t_{ri}(y) tau} * sigma^{tau}.
  GroupWord w_first(ring, n);  // t_{ri}(y) tau
  w_first.push(Letter{r, i, y, 1});
  w_first.append(tau);
  const GroupWord& w_second = tau;

  const Mat tau_mat = tau.eval();
  const Mat tau_inv = tau.inverse().eval();
  const Mat st = mul(sigma.mat, tau_mat);
  const Mat st_inv = mul(tau_inv, sigma.inv);
  const InvertibleMatrix big_b = as_invertible(
      mul(mul(st_inv, transvection(ring, n, r, i, y)), st),
      mul(mul(st_inv, transvection(ring, n, r, i, R.neg(y))), st));

  // first reduction component: t_{ri}(-y) conjugated by tau
  GroupWord a1(ring, n);
  if (same) {
    a1.push(Letter{r, i, R.neg(y), 1});
  } else {
    a1.push(Letter{r, j_decl, R.neg(R.mul(y, xs[i])), 1});
    a1.push(Letter{r, i, R.neg(y), 1});
  }
  {
    const Mat expect = mul(mul(tau_inv, transvection(ring, n, r, i, R.neg(y))), tau_mat);
    require(a1.eval() == expect, errc::invariant,
            "extraction: first reduction component word mismatch");
  }

  std::vector<GroupWord> gs;
  {
    GroupWord g1(ring, n), g2(ring, n);
    if (same) {
      g1.push(Letter{i, s, b, 1});
      g2.push(Letter{i, r, a, 1});
    } else {
      g1.push(Letter{j_decl, i, b, 1});
      g2.push(Letter{j_decl, r, a, 1});
    }
    gs.push_back(std::move(g1));
    gs.push_back(std::move(g2));
  }

  ReductionExpansion expansion = expand_reduction(a1, big_b, gs);
  const std::uint32_t src_i = same ? i : j_decl;
  const std::uint32_t src_j = same ? s : i;
  const elem value = same ? R.mul(R.mul(a, y), b) : R.mul(R.mul(a, R.mul(y, xs[i])), b);
  require(expansion.chain.back().b.mat == identity(ring, n), errc::invariant,
          "extraction: reduction chain did not end at the identity");
  require(expansion.chain.back().a.mat == transvection(ring, n, src_i, src_j, value),
          errc::invariant, "extraction: reduction chain missed the target transvection");

  // Substitute xi's two sigma-conjugates into the four xi-factors, then move
  // the resulting transvection into position (k, l).
  const GroupWord reposition = perm_conjugator(ring, n, src_i, src_j, k, l);
  std::vector<ConjugateFactor> factors;
  factors.reserve(8);
  for (const ConjugateFactor& f : expansion.product.factors()) {
    auto compose = [&](const GroupWord& head, int exp) {
      GroupWord c = head;
      c.append(f.conj);
      c.append(reposition);
      factors.push_back(ConjugateFactor{std::move(c), exp});
    };
    if (f.exp == 1) {
      compose(w_first, -1);
      compose(w_second, 1);
    } else {
      compose(w_second, -1);
      compose(w_first, 1);
    }
  }

  ConjugateProduct out(sigma, std::move(factors));
  require(out.size() == 8, errc::invariant, "extraction must emit exactly 8 factors");
  require(out.eval() == transvection(ring, n, k, l, value), errc::invariant,
          "extraction does not evaluate to the target transvection");
  return out;
}

namespace {

ConjugateProduct concat_products(const InvertibleMatrix& sigma,
                                 const std::vector<ConjugateProduct>& parts) {
  std::vector<ConjugateFactor> factors;
  for (const ConjugateProduct& p : parts)
    for (const ConjugateFactor& f : p.factors()) factors.push_back(f);
  return ConjugateProduct(sigma, std::move(factors));
}

}  // namespace

ConjugateProduct extract_entry(const InvertibleMatrix& sigma, std::uint32_t i, std::uint32_t j,
                               std::uint32_t k, std::uint32_t l, elem a, elem b) {
  const RingPtr ring = sigma.mat.ring;
  const Ring& R = *ring;
  const std::uint32_t n = sigma.n();
  require(n >= 3, errc::unsupported, "entry extraction needs degree >= 3");
  require(i < n && j < n && i != j && k < n && l < n && k != l, errc::argument, "bad indices");
  R.check(a);
  R.check(b);

  std::vector<elem> xs(n);
  for (std::uint32_t p = 0; p < n; ++p) xs[p] = R.mul(sigma.mat.at(i, p), sigma.inv.at(p, i));
  const IdempotentDecomposition d = orthogonal_decomposition(ring, xs);

  const elem sii = sigma.mat.at(i, i);
  const elem sij = sigma.mat.at(i, j);
  const elem sii_inv = sigma.inv.at(i, i);
  const elem ri = d.witnesses[i];

  std::vector<ConjugateProduct> parts;
  // sum_p a s_ii e_p (s'_ii r_i s_ij) b, then sum_{p != i} a e_p s_ij b
  for (std::uint32_t p = 0; p < n; ++p) {
    if (p != i) {
      std::vector<elem> coeff(n, R.zero());
      coeff[i] = R.one();
      coeff[p] = R.neg(R.mul(R.mul(sigma.inv.at(p, i), d.witnesses[p]), sii));
      parts.push_back(extract_transvection_8(sigma, i, coeff, i, d.idempotents[p], k, l,
                                             R.mul(a, sii),
                                             R.mul(R.mul(sii_inv, ri), R.mul(sij, b))));
    } else {
      std::vector<elem> coeff(n, R.zero());
      coeff[j] = R.one();
      coeff[i] = R.neg(R.mul(R.mul(sii_inv, ri), sij));
      parts.push_back(extract_transvection_8(sigma, i, coeff, j, d.idempotents[i], k, l,
                                             R.neg(R.mul(a, sii)), b));
    }
  }
  for (std::uint32_t p = 0; p < n; ++p) {
    if (p == i) continue;
    std::vector<elem> coeff(n, R.zero());
    coeff[i] = R.one();
    coeff[p] = R.neg(R.mul(R.mul(sigma.inv.at(p, i), d.witnesses[p]), sii));
    parts.push_back(
        extract_transvection_8(sigma, i, coeff, i, d.idempotents[p], k, l, a, R.mul(sij, b)));
  }

  ConjugateProduct out = concat_products(sigma, parts);
  require(out.size() == 16u * n - 8u, errc::invariant, "entry extraction factor count is off");
  require(out.eval() == transvection(ring, n, k, l, R.mul(R.mul(a, sij), b)), errc::invariant,
          "entry extraction does not evaluate to t_{kl}(a sigma_{ij} b)");
  return out;
}

ConjugateProduct extract_diagonal(const InvertibleMatrix& sigma, std::uint32_t i, std::uint32_t j,
                                  std::uint32_t k, std::uint32_t l, elem a, elem b, elem c) {
  const RingPtr ring = sigma.mat.ring;
  const Ring& R = *ring;
  const std::uint32_t n = sigma.n();
  require(n >= 3, errc::unsupported, "diagonal extraction needs degree >= 3");
  require(i < n && j < n && i != j && k < n && l < n && k != l, errc::argument, "bad indices");
  R.check(a);
  R.check(b);
  R.check(c);

  // Twist sigma by t_{ji}(-c): the (j,i) entry of the twist collects
  // c s_ii - s_jj c + s_ji - c s_ij c.
  const Mat tw = transvection(ring, n, j, i, R.neg(c));
  const Mat tw_inv = transvection(ring, n, j, i, c);
  const InvertibleMatrix twisted =
      as_invertible(mul(mul(tw_inv, sigma.mat), tw), mul(mul(tw_inv, sigma.inv), tw));

  ConjugateProduct p1 = extract_entry(twisted, j, i, k, l, a, b);
  // Rebase the twisted conjugates onto sigma itself.
  std::vector<ConjugateFactor> rebased;
  for (const ConjugateFactor& f : p1.factors()) {
    GroupWord cw(ring, n);
    cw.push(Letter{j, i, R.neg(c), 1});
    cw.append(f.conj);
    rebased.push_back(ConjugateFactor{std::move(cw), f.exp});
  }
  ConjugateProduct part1(sigma, std::move(rebased));

  ConjugateProduct part2 = extract_entry(sigma, i, j, k, l, R.mul(a, c), R.mul(c, b));
  ConjugateProduct part3 = extract_entry(sigma, j, i, k, l, R.neg(a), b);

  ConjugateProduct out = concat_products(sigma, {part1, part2, part3});
  const elem target =
      R.mul(R.mul(a, R.sub(R.mul(c, sigma.mat.at(i, i)), R.mul(sigma.mat.at(j, j), c))), b);
  require(out.size() == 48u * n - 24u, errc::invariant,
          "diagonal extraction factor count is off");
  require(out.eval() == transvection(ring, n, k, l, target), errc::invariant,
          "diagonal extraction does not evaluate to its target");
  return out;
}

std::string ClassificationCertificate::to_json() const {
  nlohmann::ordered_json j;
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const InvertibleMatrix& g : generators)
    gens.push_back(nlohmann::ordered_json::parse(g.mat.to_json()));
  j["generators"] = std::move(gens);
  j["ideal"] = {{"generators", ideal.generators()}, {"elements", ideal.elements()}};
  j["upper_check"] = upper_check;
  nlohmann::ordered_json lower = nlohmann::ordered_json::array();
  for (const LowerWitness& w : lower_witnesses) {
    nlohmann::ordered_json entry;
    entry["y"] = w.y;
    entry["source"] = {{"generator", w.source.gen},
                       {"kind", w.source.diagonal ? "diagonal" : "entry"},
                       {"i", w.source.i + 1},
                       {"j", w.source.j + 1}};
    if (w.source.diagonal) entry["source"]["a"] = w.source.a;
    entry["target"] = {{"k", w.k + 1}, {"l", w.l + 1}};
    entry["product"] = nlohmann::ordered_json::parse(w.product.to_json());
    lower.push_back(std::move(entry));
  }
  j["lower_witnesses"] = std::move(lower);
  nlohmann::ordered_json comps = nlohmann::ordered_json::array();
  for (const IdealComparison& c : comparisons) {
    nlohmann::ordered_json entry;
    entry["ideal_generators"] = c.generators;
    entry["equal"] = c.equal;
    if (c.upper_fails) entry["upper_fails_witness"] = c.upper_witness;
    if (c.lower_fails) entry["lower_fails_witness"] = c.lower_witness;
    comps.push_back(std::move(entry));
  }
  j["comparisons"] = std::move(comps);
  if (enumerated_level_ideal_equal.has_value())
    j["enumerated_level_ideal_equal"] = *enumerated_level_ideal_equal;
  else
    j["level_ideal_scope"] = "generators (lower bound for non-enumerated subgroups)";
  return j.dump();
}

ClassificationCertificate classify(const std::vector<InvertibleMatrix>& generators,
                                   const std::vector<Ideal>& compare, std::uint64_t ideal_cap,
                                   std::uint64_t enumeration_cap) {
  require(!generators.empty(), errc::argument, "classify needs at least one generator");
  const RingPtr ring = generators[0].mat.ring;
  const Ring& R = *ring;
  const std::uint32_t n = generators[0].n();
  require(n >= 3, errc::unsupported, "classification needs degree >= 3");

  std::vector<Mat> mats;
  for (const InvertibleMatrix& g : generators) {
    require(g.n() == n && g.mat.ring->same_ring(R), errc::argument,
            "generators from different contexts");
    mats.push_back(g.mat);
  }

  ClassificationCertificate cert{generators,
                                 level_ideal_of_set(ring, mats, ideal_cap),
                                 {},
                                 {},
                                 {},
                                 std::nullopt};

  for (const InvertibleMatrix& g : generators) {
    const bool member = congruence_member(g.mat, cert.ideal);
    require(member, errc::invariant,
            "generator escapes the congruence subgroup of its own level ideal");
    cert.upper_check.push_back(member);
  }

  // Deduplicated nonzero generator values with one recorded source each.
  std::vector<std::pair<elem, WitnessSource>> values;
  auto record = [&](elem y, WitnessSource src) {
    if (y == R.zero()) return;
    for (const auto& [seen, unused] : values)
      if (seen == y) return;
    values.emplace_back(y, src);
  };
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const Mat& m = generators[g].mat;
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) {
        if (i != j) record(m.at(i, j), WitnessSource{g, false, i, j, 0});
        for (elem a = 0; a < R.order(); ++a)
          record(R.sub(R.mul(a, m.at(i, i)), R.mul(m.at(j, j), a)),
                 WitnessSource{g, true, i, j, a});
      }
  }
  std::sort(values.begin(), values.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });

  for (const auto& [y, src] : values) {
    const InvertibleMatrix& g = generators[src.gen];
    for (std::uint32_t k = 0; k < n; ++k)
      for (std::uint32_t l = 0; l < n; ++l) {
        if (k == l) continue;
        ConjugateProduct product =
            src.diagonal
                ? extract_diagonal(g, src.i, src.j, k, l, R.one(), R.one(), src.a)
                : extract_entry(g, src.i, src.j, k, l, R.one(), R.one());
        require(product.eval() == transvection(ring, n, k, l, y), errc::invariant,
                "lower witness does not evaluate to its transvection");
        cert.lower_witnesses.push_back(LowerWitness{y, src, k, l, std::move(product)});
      }
  }

  for (const Ideal& J : compare) {
    IdealComparison comp;
    comp.generators = J.generators();
    comp.equal = J.same_set(cert.ideal);
    if (!comp.equal) {
      for (elem x : cert.ideal.elements())
        if (!J.contains(x)) {
          // t_{12}(x) lies in H but violates the entry test modulo J.
          comp.upper_fails = true;
          comp.upper_witness = x;
          break;
        }
      for (elem x : J.elements())
        if (!cert.ideal.contains(x)) {
          // t_{12}(x) is J-elementary yet escapes C_n(R, I), hence H.
          comp.lower_fails = true;
          comp.lower_witness = x;
          break;
        }
    }
    cert.comparisons.push_back(std::move(comp));
  }

  if (enumeration_cap > 0) {
    Subgroup h = conjugate_closure(ring, n, mats, elementary_generators(ring, n),
                                   enumeration_cap);
    Ideal full = level_ideal_of_set(ring, h.elements, ideal_cap);
    cert.enumerated_level_ideal_equal = full.same_set(cert.ideal);
  }
  return cert;
}

}  // namespace exgl
