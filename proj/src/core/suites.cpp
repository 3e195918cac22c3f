#include "core/suites.hpp"

#include <algorithm>
#include <functional>

#include "core/exchange.hpp"
#include "core/factor.hpp"
#include "core/rng.hpp"
#include "core/sample.hpp"
#include "core/subgroups.hpp"
#include "core/witness.hpp"
#include "json.hpp"

namespace exgl {

namespace {

nlohmann::ordered_json config_json(const SuiteConfig& c) {
  nlohmann::ordered_json j;
  j["ring"] = c.ring_spec;
  j["n"] = c.n;
  j["ideal"] = c.ideal_gens;
  j["seed"] = c.seed;
  j["samples"] = c.samples;
  j["element_cap"] = c.element_cap;
  j["group_cap"] = c.group_cap;
  return j;
}

struct Ctx {
  SuiteConfig cfg;
  RingPtr ring;
  std::shared_ptr<const Ideal> ideal;
};

Ctx make_ctx(const SuiteConfig& cfg) {
  Ctx ctx{cfg, parse_ring_spec(cfg.ring_spec), nullptr};
  ctx.ideal = std::make_shared<Ideal>(
      Ideal::generated(ctx.ring, cfg.ideal_gens, cfg.element_cap));
  return ctx;
}

void run_check(Report& report, const std::string& name,
               const std::function<std::string()>& body) {
  CheckResult result;
  result.name = name;
  try {
    result.detail = body();
  } catch (const std::exception& e) {
    result.pass = false;
    result.detail = e.what();
  }
  report.checks.push_back(std::move(result));
}

[[noreturn]] void check_fail(const std::string& msg) { fail(errc::invariant, msg); }

// All proper ideals generated by a single element (the comparison list for
// classification certificates), deduplicated, smallest first.
std::vector<Ideal> proper_principal_ideals(const RingPtr& ring, std::uint64_t cap) {
  std::vector<Ideal> out;
  for (elem x = 0; x < ring->order(); ++x) {
    Ideal i = Ideal::generated(ring, {x}, cap);
    if (i.is_full()) continue;
    bool seen = false;
    for (const Ideal& known : out) seen = seen || known.same_set(i);
    if (!seen) out.push_back(std::move(i));
  }
  std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
    return a.elements() < b.elements();
  });
  return out;
}

Report suite_relations(const Ctx& ctx) {
  Report report{"relations", ctx.cfg, {}};
  run_check(report, "transvection-relations", [&] {
    RelationsReport r = check_relations(ctx.ring, ctx.cfg.n);
    if (!r.pass) check_fail(r.message);
    return r.message;
  });
  return report;
}

Report suite_idempotents(const Ctx& ctx) {
  Report report{"idempotents", ctx.cfg, {}};
  const Ring& R = *ctx.ring;
  run_check(report, "nicholson-exhaustive", [&] {
    for (elem x = 0; x < R.order(); ++x) {
      const auto [e, s, t] = nicholson_idempotent(R, x);
      if (R.mul(e, e) != e || R.mul(x, s) != e ||
          R.mul(R.sub(R.one(), x), t) != R.sub(R.one(), e))
        check_fail("witness contract fails at x=" + R.display(x));
    }
    return "all " + std::to_string(R.order()) + " elements";
  });
  run_check(report, "orthogonal-pairs-exhaustive", [&] {
    for (elem x = 0; x < R.order(); ++x) {
      const auto d = orthogonal_decomposition(ctx.ring, {x, R.sub(R.one(), x)});
      validate_decomposition(R, d);
    }
    return "all " + std::to_string(R.order()) + " pairs (x, 1-x)";
  });
  run_check(report, "orthogonal-triples-seeded", [&] {
    SplitMix64 rng(ctx.cfg.seed ^ 0x1d3a5b79ULL);
    for (std::uint32_t trial = 0; trial < ctx.cfg.samples; ++trial) {
      const elem x1 = static_cast<elem>(rng.below(R.order()));
      const elem x2 = static_cast<elem>(rng.below(R.order()));
      const elem x3 = R.sub(R.one(), R.add(x1, x2));
      const auto d = orthogonal_decomposition(ctx.ring, {x1, x2, x3});
      validate_decomposition(R, d);
    }
    return std::to_string(ctx.cfg.samples) + " seeded compositions of length 3";
  });
  return report;
}

Report suite_normality(const Ctx& ctx) {
  Report report{"normality", ctx.cfg, {}};
  const Ring& R = *ctx.ring;
  const std::uint32_t n = ctx.cfg.n;
  run_check(report, "conjugated-transvection-words", [&] {
    const auto sigmas = sample_gl(ctx.ring, n, ctx.cfg.seed ^ 0x9a1fc2e4ULL, ctx.cfg.samples);
    const std::size_t bound = 4u * n * n - 3u * n;
    std::size_t max_letters = 0;
    std::size_t words = 0;
    for (const InvertibleMatrix& sigma : sigmas)
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
          if (i == j) continue;
          for (elem x : ctx.ideal->elements()) {
            RelativeWord w = factor_conjugated_transvection(sigma, i, j, x, ctx.ideal);
            const Mat target =
                mul(mul(sigma.inv, transvection(ctx.ring, n, i, j, x)), sigma.mat);
            const std::string instance = "sigma=" + sigma.mat.to_json() + " i=" +
                                         std::to_string(i + 1) + " j=" + std::to_string(j + 1) +
                                         " x=" + std::to_string(x);
            if (!(w.eval() == target)) check_fail("re-evaluation mismatch at " + instance);
            for (const RelFactor& f : w.factors())
              if (!ctx.ideal->contains(f.base.x))
                check_fail("base letter escapes the ideal at " + instance);
            const std::size_t letters = w.expanded_letter_count();
            max_letters = std::max(max_letters, letters);
            ++words;
            if (letters > bound)
              check_fail("expanded word has " + std::to_string(letters) + " letters, bound " +
                         std::to_string(bound) + " at x=" + R.display(x));
          }
        }
    return std::to_string(words) + " words, max " + std::to_string(max_letters) +
           " expanded letters (bound " + std::to_string(bound) + ")";
  });
  return report;
}

Report suite_commutator(const Ctx& ctx) {
  Report report{"commutator-formula", ctx.cfg, {}};
  const Ring& R = *ctx.ring;
  const std::uint32_t n = ctx.cfg.n;

  run_check(report, "relative-subgroup-from-commutators", [&] {
    const Subgroup relative =
        enumerate_relative_elementary(ctx.ring, n, *ctx.ideal, ctx.cfg.group_cap);

    // Generators of the relative subgroup: ideal-elementary letters
    // conjugated by at most one elementary letter.
    std::vector<Mat> rel_gens;
    const auto base = ideal_elementary_generators(ctx.ring, n, *ctx.ideal);
    const auto letters = elementary_generators(ctx.ring, n);
    rel_gens.insert(rel_gens.end(), base.begin(), base.end());
    for (const Mat& b : base)
      for (const Mat& c : letters) {
        const InvertibleMatrix ci = invert(c);
        rel_gens.push_back(mul(mul(ci.inv, b), ci.mat));
      }
    const Subgroup from_single_conj = enumerate_closure(ctx.ring, n, rel_gens, ctx.cfg.group_cap);
    if (!(from_single_conj.elements.size() == relative.elements.size()))
      check_fail("single-letter conjugates generate a different subgroup");

    std::vector<Mat> commutators;
    for (const Mat& g : letters) {
      const InvertibleMatrix gi = invert(g);
      for (const Mat& h : rel_gens) {
        const InvertibleMatrix hi = invert(h);
        commutators.push_back(mul(mul(gi.mat, hi.mat), mul(gi.inv, hi.inv)));
      }
    }
    const Subgroup from_commutators =
        enumerate_closure(ctx.ring, n, commutators, ctx.cfg.group_cap);
    bool equal = from_commutators.elements.size() == relative.elements.size();
    for (std::size_t idx = 0; equal && idx < relative.elements.size(); ++idx)
      equal = relative.elements[idx] == from_commutators.elements[idx];
    if (!equal)
      check_fail("commutator closure has order " +
                 std::to_string(from_commutators.elements.size()) + ", relative subgroup " +
                 std::to_string(relative.elements.size()));
    return "both enumerations agree, order " + std::to_string(relative.elements.size());
  });

  run_check(report, "congruence-commutator-words", [&] {
    const auto sigmas =
        sample_congruence(ctx.ring, n, *ctx.ideal, ctx.cfg.seed ^ 0x77aa11ULL, ctx.cfg.samples);
    SplitMix64 rng(ctx.cfg.seed ^ 0x44c3b2ULL);
    for (const InvertibleMatrix& sigma : sigmas) {
      const std::uint32_t i = static_cast<std::uint32_t>(rng.below(n));
      std::uint32_t j = static_cast<std::uint32_t>(rng.below(n - 1));
      if (j >= i) ++j;
      const elem x = static_cast<elem>(rng.below(R.order()));
      RelativeWord w = factor_congruence_commutator(sigma, i, j, x, ctx.ideal);
      const Mat t = transvection(ctx.ring, n, i, j, x);
      const Mat ti = transvection(ctx.ring, n, i, j, R.neg(x));
      const Mat target = mul(mul(t, sigma.mat), mul(ti, sigma.inv));
      const std::string instance = "sigma=" + sigma.mat.to_json() + " i=" +
                                   std::to_string(i + 1) + " j=" + std::to_string(j + 1) +
                                   " x=" + std::to_string(x);
      if (!(w.eval() == target)) check_fail("re-evaluation mismatch at " + instance);
      for (const RelFactor& f : w.factors())
        if (!ctx.ideal->contains(f.base.x))
          check_fail("base letter escapes the ideal at " + instance);
    }
    return std::to_string(ctx.cfg.samples) + " sampled commutator factorizations";
  });
  return report;
}

Report suite_reduction(const Ctx& ctx) {
  Report report{"reduction", ctx.cfg, {}};
  const std::uint32_t n = ctx.cfg.n;
  for (std::uint32_t k = 1; k <= 3; ++k) {
    run_check(report, "chain-length-" + std::to_string(k), [&] {
      SplitMix64 rng(ctx.cfg.seed ^ (0xbeefULL + k));
      for (std::uint32_t trial = 0; trial < ctx.cfg.samples; ++trial) {
        const GroupWord a1 = sample_elementary_word(ctx.ring, n, rng, 3);
        const GroupWord b1w = sample_elementary_word(ctx.ring, n, rng, 3);
        const InvertibleMatrix b1 = as_invertible(b1w.eval(), b1w.inverse().eval());
        std::vector<GroupWord> gs;
        for (std::uint32_t step = 0; step < k; ++step)
          gs.push_back(sample_elementary_word(ctx.ring, n, rng, 3));

        const ReductionExpansion expansion = expand_reduction(a1, b1, gs);
        if (expansion.product.size() != (1ull << k))
          check_fail("expected 2^" + std::to_string(k) + " factors, got " +
                     std::to_string(expansion.product.size()));
        // independent chain recomputation
        ReductionPair pair{as_invertible(a1.eval(), a1.inverse().eval()), b1};
        for (const GroupWord& g : gs)
          pair = reduce_step(pair, as_invertible(g.eval(), g.inverse().eval()));
        if (!(expansion.product.eval() == mul(pair.a.mat, pair.b.mat)))
          check_fail("expansion does not match the directly computed chain product");
      }
      return std::to_string(ctx.cfg.samples) + " chains, " + std::to_string(1u << k) +
             " factors each";
    });
  }
  return report;
}

Report suite_sandwich(const Ctx& ctx) {
  Report report{"sandwich", ctx.cfg, {}};
  const Ring& R = *ctx.ring;
  const std::uint32_t n = ctx.cfg.n;

  run_check(report, "extraction-counts", [&] {
    const auto sigmas = sample_gl(ctx.ring, n, ctx.cfg.seed ^ 0x5151ULL, ctx.cfg.samples);
    SplitMix64 rng(ctx.cfg.seed ^ 0x6262ULL);
    auto pick_pair = [&](std::uint32_t& a, std::uint32_t& b) {
      a = static_cast<std::uint32_t>(rng.below(n));
      b = static_cast<std::uint32_t>(rng.below(n - 1));
      if (b >= a) ++b;
    };
    std::size_t eights = 0;
    for (const InvertibleMatrix& sigma : sigmas) {
      std::uint32_t i, j, k, l;
      pick_pair(i, j);
      pick_pair(k, l);
      const elem a = static_cast<elem>(rng.below(R.order()));
      const elem b = static_cast<elem>(rng.below(R.order()));
      const elem c = static_cast<elem>(rng.below(R.order()));

      const ConjugateProduct entry = extract_entry(sigma, i, j, k, l, a, b);
      if (entry.size() != 16u * n - 8u) check_fail("entry extraction count is off");
      const ConjugateProduct diag = extract_diagonal(sigma, i, j, k, l, a, b, c);
      if (diag.size() != 48u * n - 24u) check_fail("diagonal extraction count is off");

      // an admissible instance of the 8-conjugate extraction
      const std::uint32_t j_decl = static_cast<std::uint32_t>(rng.below(n));
      std::vector<elem> xs(n);
      for (elem& v : xs) v = static_cast<elem>(rng.below(R.order()));
      xs[j_decl] = R.one();
      elem s = R.zero();
      for (std::uint32_t p = 0; p < n; ++p) s = R.add(s, R.mul(sigma.mat.at(i, p), xs[p]));
      std::vector<elem> annihilator;
      for (elem y = 0; y < R.order(); ++y)
        if (R.mul(y, s) == R.zero()) annihilator.push_back(y);
      const elem y = annihilator[rng.below(annihilator.size())];
      const ConjugateProduct eight = extract_transvection_8(sigma, i, xs, j_decl, y, k, l, a, b);
      if (eight.size() != 8) check_fail("8-conjugate extraction count is off");
      ++eights;
    }
    return std::to_string(sigmas.size()) + " matrices; counts 8, " +
           std::to_string(16 * n - 8) + ", " + std::to_string(48 * n - 24) + "; " +
           std::to_string(eights) + " hypothesis instances";
  });

  run_check(report, "classification-certificates", [&] {
    const auto compare = proper_principal_ideals(ctx.ring, ctx.cfg.element_cap);
    const std::uint32_t count = std::min<std::uint32_t>(ctx.cfg.samples, 25);
    const auto sigmas = sample_gl(ctx.ring, n, ctx.cfg.seed ^ 0x7373ULL, count);
    for (const InvertibleMatrix& sigma : sigmas) {
      const ClassificationCertificate cert = classify({sigma}, compare, ctx.cfg.element_cap);
      if (!congruence_member(sigma.mat, cert.ideal))
        check_fail("generator escapes its own congruence subgroup");
      for (const LowerWitness& w : cert.lower_witnesses)
        if (!(w.product.eval() == transvection(ctx.ring, n, w.k, w.l, w.y)))
          check_fail("lower witness re-evaluation mismatch");
      for (const IdealComparison& comp : cert.comparisons)
        if (!comp.equal && !comp.upper_fails && !comp.lower_fails)
          check_fail("comparison ideal neither equals nor separates");
    }
    return std::to_string(count) + " certificates against " + std::to_string(compare.size()) +
           " comparison ideals";
  });

  run_check(report, "congruence-oracle-agreement", [&] {
    std::vector<Ideal> ideals = proper_principal_ideals(ctx.ring, ctx.cfg.element_cap);
    std::vector<InvertibleMatrix> sigmas;
    std::uint64_t space = 1;
    bool exhaustive = true;
    for (std::uint32_t idx = 0; idx < n * n && exhaustive; ++idx) {
      space *= R.order();
      exhaustive = space <= 4096;
    }
    if (exhaustive) {
      Mat m = zero_matrix(ctx.ring, n);
      while (true) {
        try {
          sigmas.push_back(invert(m));
        } catch (const error& e) {
          if (e.kind() != errc::not_invertible) throw;
        }
        std::size_t pos = m.a.size();
        bool wrapped = false;
        while (true) {
          if (pos == 0) {
            wrapped = true;
            break;
          }
          --pos;
          if (++m.a[pos] < R.order()) break;
          m.a[pos] = 0;
        }
        if (wrapped) break;
      }
    } else {
      sigmas = sample_gl(ctx.ring, n, ctx.cfg.seed ^ 0x8484ULL, ctx.cfg.samples);
    }
    for (const InvertibleMatrix& sigma : sigmas)
      for (const Ideal& I : ideals)
        if (congruence_member(sigma.mat, I) != congruence_member_definitional(sigma.mat, I))
          check_fail("entrywise and definitional congruence tests disagree on " +
                     sigma.mat.to_json());
    return (exhaustive ? "exhaustive over " : "sampled ") + std::to_string(sigmas.size()) +
           " invertible matrices, " + std::to_string(ideals.size()) + " ideals";
  });
  return report;
}

}  // namespace

std::string SuiteConfig::to_json() const { return config_json(*this).dump(); }

SuiteConfig SuiteConfig::from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    fail(errc::parse, std::string("suite config JSON: ") + e.what());
  }
  SuiteConfig c;
  if (j.contains("ring")) c.ring_spec = j["ring"].get<std::string>();
  if (j.contains("n")) c.n = j["n"].get<std::uint32_t>();
  if (j.contains("ideal")) c.ideal_gens = j["ideal"].get<std::vector<elem>>();
  if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("samples")) c.samples = j["samples"].get<std::uint32_t>();
  if (j.contains("element_cap")) c.element_cap = j["element_cap"].get<std::uint64_t>();
  if (j.contains("group_cap")) c.group_cap = j["group_cap"].get<std::uint64_t>();
  return c;
}

bool Report::pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["config"] = config_json(config);
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CheckResult& c : checks) {
    nlohmann::ordered_json entry;
    entry["name"] = c.name;
    entry["pass"] = c.pass;
    entry["detail"] = c.detail;
    arr.push_back(std::move(entry));
  }
  j["checks"] = std::move(arr);
  j["pass"] = pass();
  return j.dump(2);
}

std::string Report::summary() const {
  std::string out;
  for (const CheckResult& c : checks) {
    out += suite + "/" + c.name + ": " + (c.pass ? "PASS" : "FAIL") + " — " + c.detail + "\n";
  }
  return out;
}

Report run_suite(const std::string& name, const SuiteConfig& config) {
  const Ctx ctx = make_ctx(config);
  if (name == "relations") return suite_relations(ctx);
  if (name == "idempotents") return suite_idempotents(ctx);
  if (name == "normality") return suite_normality(ctx);
  if (name == "commutator-formula") return suite_commutator(ctx);
  if (name == "sandwich") return suite_sandwich(ctx);
  if (name == "reduction") return suite_reduction(ctx);
  fail(errc::argument, "unknown suite '" + name +
                           "' (expected relations, idempotents, normality, commutator-formula, "
                           "sandwich or reduction)");
}

}  // namespace exgl
