#include "exgl/exgl.h"

#include <cstring>
#include <string>

#include "core/exchange.hpp"
#include "core/factor.hpp"
#include "core/sample.hpp"
#include "core/subgroups.hpp"
#include "core/suites.hpp"
#include "core/witness.hpp"
#include "json.hpp"

struct exgl_ring {
  exgl::RingPtr p;
};
struct exgl_ideal {
  std::shared_ptr<const exgl::Ideal> p;
};
struct exgl_matrix {
  exgl::InvertibleMatrix m;
};
struct exgl_word {
  exgl::GroupWord w;
};
struct exgl_relword {
  exgl::RelativeWord w;
};
struct exgl_product {
  exgl::ConjugateProduct p;
};
struct exgl_group {
  exgl::Subgroup g;
};

namespace {

thread_local std::string tls_error;

int map_error(const exgl::error& e) {
  switch (e.kind()) {
    case exgl::errc::argument:
      return EXGL_ERR_ARGUMENT;
    case exgl::errc::parse:
      return EXGL_ERR_PARSE;
    case exgl::errc::capacity:
      return EXGL_ERR_CAPACITY;
    case exgl::errc::not_invertible:
      return EXGL_ERR_NOT_INVERTIBLE;
    case exgl::errc::precondition:
      return EXGL_ERR_PRECONDITION;
    case exgl::errc::invariant:
      return EXGL_ERR_INVARIANT;
    case exgl::errc::unsupported:
      return EXGL_ERR_UNSUPPORTED;
    case exgl::errc::sampling:
      return EXGL_ERR_SAMPLING;
    case exgl::errc::io:
      return EXGL_ERR_IO;
  }
  return EXGL_ERR_UNKNOWN;
}

int handle_exception() {
  try {
    throw;
  } catch (const exgl::error& e) {
    tls_error = e.what();
    return map_error(e);
  } catch (const std::exception& e) {
    tls_error = e.what();
    return EXGL_ERR_UNKNOWN;
  } catch (...) {
    tls_error = "unknown error";
    return EXGL_ERR_UNKNOWN;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(bool cond, const char* what) {
  exgl::require(cond, exgl::errc::argument, what);
}

// 1-based (API/JSON) to 0-based (core)
std::uint32_t idx0(uint32_t i, uint32_t n) {
  need(i >= 1 && i <= n, "index out of range (indices are 1-based)");
  return i - 1;
}

}  // namespace

extern "C" {

const char* exgl_status_name(int status) {
  switch (status) {
    case EXGL_OK:
      return "ok";
    case EXGL_ERR_ARGUMENT:
      return "argument";
    case EXGL_ERR_PARSE:
      return "parse";
    case EXGL_ERR_CAPACITY:
      return "capacity";
    case EXGL_ERR_NOT_INVERTIBLE:
      return "not-invertible";
    case EXGL_ERR_PRECONDITION:
      return "precondition";
    case EXGL_ERR_INVARIANT:
      return "invariant";
    case EXGL_ERR_UNSUPPORTED:
      return "unsupported";
    case EXGL_ERR_SAMPLING:
      return "sampling";
    case EXGL_ERR_IO:
      return "io";
    default:
      return "unknown";
  }
}

const char* exgl_last_error(void) { return tls_error.c_str(); }

void exgl_string_free(char* s) { delete[] s; }

int exgl_ring_create(const char* spec, exgl_ring** out) {
  try {
    need(spec && out, "null argument");
    *out = new exgl_ring{exgl::parse_ring_spec(spec)};
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_ring_from_table_json(const char* json, exgl_ring** out) {
  try {
    need(json && out, "null argument");
    *out = new exgl_ring{exgl::ring_from_table_json(json)};
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

void exgl_ring_free(exgl_ring* ring) { delete ring; }

uint32_t exgl_ring_order(const exgl_ring* ring) {
  return ring ? static_cast<uint32_t>(ring->p->order()) : 0;
}
uint32_t exgl_ring_zero(const exgl_ring* ring) { return ring ? ring->p->zero() : 0; }
uint32_t exgl_ring_one(const exgl_ring* ring) { return ring ? ring->p->one() : 0; }

int exgl_ring_add(const exgl_ring* ring, uint32_t a, uint32_t b, uint32_t* out) {
  try {
    need(ring && out, "null argument");
    *out = ring->p->add(ring->p->check(a), ring->p->check(b));
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_ring_mul(const exgl_ring* ring, uint32_t a, uint32_t b, uint32_t* out) {
  try {
    need(ring && out, "null argument");
    *out = ring->p->mul(ring->p->check(a), ring->p->check(b));
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_ring_neg(const exgl_ring* ring, uint32_t a, uint32_t* out) {
  try {
    need(ring && out, "null argument");
    *out = ring->p->neg(ring->p->check(a));
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_ring_element_str(const exgl_ring* ring, uint32_t a, char** out) {
  try {
    need(ring && out, "null argument");
    *out = dup_string(ring->p->display(ring->p->check(a)));
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_ring_verify(const exgl_ring* ring, int* pass, char** report_json) {
  try {
    need(ring && pass, "null argument");
    const exgl::AxiomReport report = exgl::verify_ring_axioms(*ring->p);
    *pass = report.pass ? 1 : 0;
    if (report_json) *report_json = dup_string(report.to_json());
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_ideal_create(const exgl_ring* ring, const uint32_t* gens, size_t ngens, uint64_t cap,
                      exgl_ideal** out) {
  try {
    need(ring && out && (gens || ngens == 0), "null argument");
    std::vector<exgl::elem> g(gens, gens + ngens);
    *out = new exgl_ideal{std::make_shared<exgl::Ideal>(
        exgl::Ideal::generated(ring->p, std::move(g), cap ? cap : 4096))};
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

void exgl_ideal_free(exgl_ideal* ideal) { delete ideal; }

size_t exgl_ideal_size(const exgl_ideal* ideal) { return ideal ? ideal->p->size() : 0; }

int exgl_ideal_contains(const exgl_ideal* ideal, uint32_t a) {
  if (!ideal || a >= ideal->p->ring().order()) return 0;
  return ideal->p->contains(a) ? 1 : 0;
}

int exgl_ideal_elements(const exgl_ideal* ideal, uint32_t* buf, size_t buflen, size_t* written) {
  try {
    need(ideal && written, "null argument");
    const auto& elems = ideal->p->elements();
    *written = elems.size();
    if (buf) {
      need(buflen >= elems.size(), "buffer too small");
      std::memcpy(buf, elems.data(), elems.size() * sizeof(uint32_t));
    }
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_nicholson(const exgl_ring* ring, uint32_t x, uint32_t* e, uint32_t* s, uint32_t* t) {
  try {
    need(ring && e && s && t, "null argument");
    const auto w = exgl::nicholson_idempotent(*ring->p, x);
    *e = w.e;
    *s = w.s;
    *t = w.t;
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_orthogonal_decomposition(const exgl_ring* ring, const uint32_t* xs, size_t m,
                                  uint32_t* es, uint32_t* rs) {
  try {
    need(ring && xs && es && rs && m > 0, "null argument");
    const auto d = exgl::orthogonal_decomposition(ring->p, std::vector<exgl::elem>(xs, xs + m));
    std::memcpy(es, d.idempotents.data(), m * sizeof(uint32_t));
    std::memcpy(rs, d.witnesses.data(), m * sizeof(uint32_t));
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_matrix_identity(const exgl_ring* ring, uint32_t n, exgl_matrix** out) {
  try {
    need(ring && out && n >= 1, "null argument");
    exgl::Mat e = exgl::identity(ring->p, n);
    *out = new exgl_matrix{exgl::as_invertible(e, e)};
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_matrix_from_json(const exgl_ring* ring, const char* json, exgl_matrix** out) {
  try {
    need(ring && json && out, "null argument");
    *out = new exgl_matrix{exgl::invert(exgl::mat_from_json(ring->p, json))};
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_matrix_transvection(const exgl_ring* ring, uint32_t n, uint32_t i, uint32_t j,
                             uint32_t x, exgl_matrix** out) {
  try {
    need(ring && out, "null argument");
    const std::uint32_t i0 = idx0(i, n), j0 = idx0(j, n);
    *out = new exgl_matrix{exgl::as_invertible(
        exgl::transvection(ring->p, n, i0, j0, x),
        exgl::transvection(ring->p, n, i0, j0, ring->p->neg(ring->p->check(x))))};
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_matrix_perm(const exgl_ring* ring, uint32_t n, uint32_t i, uint32_t j,
                     exgl_matrix** out) {
  try {
    need(ring && out, "null argument");
    const std::uint32_t i0 = idx0(i, n), j0 = idx0(j, n);
    *out = new exgl_matrix{exgl::as_invertible(exgl::perm_matrix(ring->p, n, i0, j0),
                                               exgl::perm_matrix(ring->p, n, j0, i0))};
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_matrix_mul(const exgl_matrix* a, const exgl_matrix* b, exgl_matrix** out) {
  try {
    need(a && b && out, "null argument");
    *out = new exgl_matrix{exgl::as_invertible(exgl::mul(a->m.mat, b->m.mat),
                                               exgl::mul(b->m.inv, a->m.inv))};
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

void exgl_matrix_free(exgl_matrix* m) { delete m; }

int exgl_matrix_to_json(const exgl_matrix* m, char** out) {
  try {
    need(m && out, "null argument");
    *out = dup_string(m->m.mat.to_json());
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_matrix_inverse_json(const exgl_matrix* m, char** out) {
  try {
    need(m && out, "null argument");
    *out = dup_string(m->m.inv.to_json());
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_matrix_equal(const exgl_matrix* a, const exgl_matrix* b) {
  if (!a || !b) return 0;
  return a->m.mat == b->m.mat ? 1 : 0;
}

uint32_t exgl_matrix_degree(const exgl_matrix* m) { return m ? m->m.n() : 0; }

int exgl_matrix_entry(const exgl_matrix* m, uint32_t i, uint32_t j, uint32_t* out) {
  try {
    need(m && out, "null argument");
    *out = m->m.mat.at(idx0(i, m->m.n()), idx0(j, m->m.n()));
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_congruence_member(const exgl_matrix* m, const exgl_ideal* ideal, int* out) {
  try {
    need(m && ideal && out, "null argument");
    *out = exgl::congruence_member(m->m.mat, *ideal->p) ? 1 : 0;
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_level_ideal(const exgl_matrix* m, uint64_t cap, exgl_ideal** out) {
  try {
    need(m && out, "null argument");
    *out = new exgl_ideal{
        std::make_shared<exgl::Ideal>(exgl::level_ideal(m->m.mat, cap ? cap : 4096))};
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_word_from_json(const exgl_ring* ring, uint32_t n, const char* json, exgl_word** out) {
  try {
    need(ring && json && out, "null argument");
    *out = new exgl_word{exgl::GroupWord::from_json(ring->p, n, json)};
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

void exgl_word_free(exgl_word* w) { delete w; }

int exgl_word_to_json(const exgl_word* w, char** out) {
  try {
    need(w && out, "null argument");
    *out = dup_string(w->w.to_json());
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

size_t exgl_word_length(const exgl_word* w) { return w ? w->w.size() : 0; }

int exgl_word_eval(const exgl_word* w, exgl_matrix** out) {
  try {
    need(w && out, "null argument");
    *out = new exgl_matrix{exgl::as_invertible(w->w.eval(), w->w.inverse().eval())};
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_word_sample(const exgl_ring* ring, uint32_t n, uint64_t seed, uint32_t index,
                     uint32_t length, exgl_word** out) {
  try {
    need(ring && out && n >= 2, "null argument");
    exgl::SplitMix64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    *out = new exgl_word{exgl::sample_elementary_word(ring->p, n, rng, length)};
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

void exgl_relword_free(exgl_relword* w) { delete w; }

int exgl_relword_from_json(const exgl_ring* ring, uint32_t n, const exgl_ideal* ideal,
                           const char* json, exgl_relword** out) {
  try {
    need(ring && ideal && json && out, "null argument");
    *out = new exgl_relword{exgl::RelativeWord::from_json(ring->p, n, ideal->p, json)};
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_relword_to_json(const exgl_relword* w, char** out) {
  try {
    need(w && out, "null argument");
    *out = dup_string(w->w.to_json());
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

size_t exgl_relword_factors(const exgl_relword* w) { return w ? w->w.size() : 0; }

int exgl_relword_eval(const exgl_relword* w, exgl_matrix** out) {
  try {
    need(w && out, "null argument");
    const exgl::GroupWord flat = w->w.expand();
    *out = new exgl_matrix{exgl::as_invertible(w->w.eval(), flat.inverse().eval())};
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_relword_expand(const exgl_relword* w, exgl_word** out) {
  try {
    need(w && out, "null argument");
    *out = new exgl_word{w->w.expand()};
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_factor_rank_one(const exgl_ring* ring, uint32_t n, const exgl_ideal* ideal,
                         const uint32_t* u, const uint32_t* v, uint32_t j, exgl_relword** out) {
  try {
    need(ring && ideal && u && v && out, "null argument");
    *out = new exgl_relword{exgl::factor_rank_one(
        ring->p, n, ideal->p, std::vector<exgl::elem>(u, u + n),
        std::vector<exgl::elem>(v, v + n), idx0(j, n))};
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_factor_unimodular(const exgl_ring* ring, uint32_t n, const exgl_ideal* ideal,
                           const uint32_t* u, const uint32_t* v, const uint32_t* w, uint32_t x,
                           exgl_relword** out) {
  try {
    need(ring && ideal && u && v && w && out, "null argument");
    *out = new exgl_relword{exgl::factor_unimodular(
        ring->p, n, ideal->p, std::vector<exgl::elem>(u, u + n),
        std::vector<exgl::elem>(v, v + n), std::vector<exgl::elem>(w, w + n), x)};
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_factor_conj_transvection(const exgl_matrix* sigma, uint32_t i, uint32_t j, uint32_t x,
                                  const exgl_ideal* ideal, exgl_relword** out) {
  try {
    need(sigma && ideal && out, "null argument");
    const uint32_t n = sigma->m.n();
    *out = new exgl_relword{
        exgl::factor_conjugated_transvection(sigma->m, idx0(i, n), idx0(j, n), x, ideal->p)};
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_factor_commutator(const exgl_matrix* sigma, uint32_t i, uint32_t j, uint32_t x,
                           const exgl_ideal* ideal, exgl_relword** out) {
  try {
    need(sigma && ideal && out, "null argument");
    const uint32_t n = sigma->m.n();
    *out = new exgl_relword{
        exgl::factor_congruence_commutator(sigma->m, idx0(i, n), idx0(j, n), x, ideal->p)};
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

void exgl_product_free(exgl_product* p) { delete p; }

int exgl_product_to_json(const exgl_product* p, char** out) {
  try {
    need(p && out, "null argument");
    *out = dup_string(p->p.to_json());
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

size_t exgl_product_factors(const exgl_product* p) { return p ? p->p.size() : 0; }

int exgl_product_eval(const exgl_product* p, exgl_matrix** out) {
  try {
    need(p && out, "null argument");
    // inverse by reversing the factor list and flipping exponents
    const exgl::InvertibleMatrix& sigma = p->p.sigma();
    exgl::Mat inv = exgl::identity(sigma.mat.ring, sigma.n());
    const auto& factors = p->p.factors();
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
      const exgl::Mat c = it->conj.eval();
      const exgl::Mat ci = it->conj.inverse().eval();
      inv = exgl::mul(inv, exgl::mul(exgl::mul(ci, it->exp == 1 ? sigma.inv : sigma.mat), c));
    }
    *out = new exgl_matrix{exgl::as_invertible(p->p.eval(), std::move(inv))};
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_product_from_json(const exgl_ring* ring, const char* json, exgl_product** out) {
  try {
    need(ring && json && out, "null argument");
    *out = new exgl_product{exgl::ConjugateProduct::from_json(ring->p, json)};
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_reduce_step(const exgl_matrix* a, const exgl_matrix* b, const exgl_matrix* g,
                     exgl_matrix** a2, exgl_matrix** b2) {
  try {
    need(a && b && g && a2 && b2, "null argument");
    const exgl::ReductionPair next = exgl::reduce_step({a->m, b->m}, g->m);
    *a2 = new exgl_matrix{next.a};
    *b2 = new exgl_matrix{next.b};
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_expand_reduction(const exgl_word* a1, const exgl_matrix* b1, const exgl_word* const* gs,
                          size_t k, exgl_product** out) {
  try {
    need(a1 && b1 && out && (gs || k == 0), "null argument");
    std::vector<exgl::GroupWord> words;
    for (size_t idx = 0; idx < k; ++idx) {
      need(gs[idx] != nullptr, "null reducing word");
      words.push_back(gs[idx]->w);
    }
    *out = new exgl_product{exgl::expand_reduction(a1->w, b1->m, words).product};
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_extract_eight(const exgl_matrix* sigma, uint32_t i, const uint32_t* xs, uint32_t j_decl,
                       uint32_t y, uint32_t k, uint32_t l, uint32_t a, uint32_t b,
                       exgl_product** out) {
  try {
    need(sigma && xs && out, "null argument");
    const uint32_t n = sigma->m.n();
    *out = new exgl_product{exgl::extract_transvection_8(
        sigma->m, idx0(i, n), std::vector<exgl::elem>(xs, xs + n), idx0(j_decl, n), y,
        idx0(k, n), idx0(l, n), a, b)};
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_extract_entry(const exgl_matrix* sigma, uint32_t i, uint32_t j, uint32_t k, uint32_t l,
                       uint32_t a, uint32_t b, exgl_product** out) {
  try {
    need(sigma && out, "null argument");
    const uint32_t n = sigma->m.n();
    *out = new exgl_product{
        exgl::extract_entry(sigma->m, idx0(i, n), idx0(j, n), idx0(k, n), idx0(l, n), a, b)};
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_extract_diagonal(const exgl_matrix* sigma, uint32_t i, uint32_t j, uint32_t k,
                          uint32_t l, uint32_t a, uint32_t b, uint32_t c, exgl_product** out) {
  try {
    need(sigma && out, "null argument");
    const uint32_t n = sigma->m.n();
    *out = new exgl_product{exgl::extract_diagonal(sigma->m, idx0(i, n), idx0(j, n), idx0(k, n),
                                                   idx0(l, n), a, b, c)};
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_classify(const exgl_matrix* const* gens, size_t ngens, const char* compare_json,
                  uint64_t ideal_cap, char** cert_json) {
  try {
    need(gens && ngens > 0 && cert_json, "null argument");
    std::vector<exgl::InvertibleMatrix> generators;
    for (size_t idx = 0; idx < ngens; ++idx) {
      need(gens[idx] != nullptr, "null generator");
      generators.push_back(gens[idx]->m);
    }
    std::vector<exgl::Ideal> compare;
    if (compare_json && *compare_json) {
      nlohmann::json j = nlohmann::json::parse(compare_json);
      exgl::require(j.is_array(), exgl::errc::parse,
                    "compare list must be an array of generator arrays");
      for (const auto& entry : j)
        compare.push_back(exgl::Ideal::generated(generators[0].mat.ring,
                                                 entry.get<std::vector<exgl::elem>>(),
                                                 ideal_cap ? ideal_cap : 4096));
    }
    const exgl::ClassificationCertificate cert =
        exgl::classify(generators, compare, ideal_cap ? ideal_cap : 4096);
    *cert_json = dup_string(cert.to_json());
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_group_closure(const exgl_matrix* const* gens, size_t ngens, uint64_t cap,
                       exgl_group** out) {
  try {
    need(out && (gens || ngens == 0), "null argument");
    need(ngens > 0, "closure needs at least one generator (or use identity)");
    std::vector<exgl::Mat> mats;
    for (size_t idx = 0; idx < ngens; ++idx) {
      need(gens[idx] != nullptr, "null generator");
      mats.push_back(gens[idx]->m.mat);
    }
    *out = new exgl_group{exgl::enumerate_closure(mats[0].ring, mats[0].n, mats,
                                                  cap ? cap : (1ull << 20))};
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

int exgl_group_relative_elementary(const exgl_ring* ring, uint32_t n, const exgl_ideal* ideal,
                                   uint64_t cap, exgl_group** out) {
  try {
    need(ring && ideal && out, "null argument");
    *out = new exgl_group{exgl::enumerate_relative_elementary(ring->p, n, *ideal->p,
                                                              cap ? cap : (1ull << 20))};
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

void exgl_group_free(exgl_group* g) { delete g; }

size_t exgl_group_order(const exgl_group* g) { return g ? g->g.order() : 0; }

int exgl_group_contains(const exgl_group* g, const exgl_matrix* m) {
  if (!g || !m) return 0;
  return g->g.contains(m->m.mat) ? 1 : 0;
}

int exgl_sample_gl(const exgl_ring* ring, uint32_t n, uint64_t seed, uint32_t count,
                   exgl_matrix*** out_array) {
  try {
    need(ring && out_array, "null argument");
    const auto samples = exgl::sample_gl(ring->p, n, seed, count);
    exgl_matrix** arr = new exgl_matrix*[count ? count : 1];
    for (uint32_t idx = 0; idx < count; ++idx) arr[idx] = new exgl_matrix{samples[idx]};
    *out_array = arr;
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

void exgl_matrix_array_free(exgl_matrix** array, size_t count) {
  if (!array) return;
  for (size_t idx = 0; idx < count; ++idx) delete array[idx];
  delete[] array;
}

int exgl_run_suite(const char* name, const char* config_json, char** report_json,
                   int* all_pass) {
  try {
    need(name && all_pass, "null argument");
    exgl::SuiteConfig config;
    if (config_json && *config_json) config = exgl::SuiteConfig::from_json(config_json);
    const exgl::Report report = exgl::run_suite(name, config);
    *all_pass = report.pass() ? 1 : 0;
    if (report_json) *report_json = dup_string(report.to_json());
    return EXGL_OK;
  } catch (...) {
    return handle_exception();
  }
}

}  // extern "C"
