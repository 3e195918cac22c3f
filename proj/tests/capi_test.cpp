// Exercises the shared-library surface exactly the way an external client
// would: through exgl/exgl.h only, no core headers.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "doctest.h"
#include "exgl/exgl.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  exgl_string_free(s);
  return out;
}

struct Ring {
  exgl_ring* p = nullptr;
  explicit Ring(const char* spec) { REQUIRE(exgl_ring_create(spec, &p) == EXGL_OK); }
  ~Ring() { exgl_ring_free(p); }
};

}  // namespace

TEST_CASE("ring handles: arithmetic, display, verification") {
  Ring z6("Z/6");
  CHECK(exgl_ring_order(z6.p) == 6);
  CHECK(exgl_ring_zero(z6.p) == 0);
  CHECK(exgl_ring_one(z6.p) == 1);
  uint32_t out = 0;
  CHECK(exgl_ring_add(z6.p, 4, 5, &out) == EXGL_OK);
  CHECK(out == 3);
  CHECK(exgl_ring_mul(z6.p, 4, 5, &out) == EXGL_OK);
  CHECK(out == 2);
  CHECK(exgl_ring_neg(z6.p, 2, &out) == EXGL_OK);
  CHECK(out == 4);
  char* str = nullptr;
  CHECK(exgl_ring_element_str(z6.p, 5, &str) == EXGL_OK);
  CHECK(take(str) == "5");
  int pass = 0;
  CHECK(exgl_ring_verify(z6.p, &pass, nullptr) == EXGL_OK);
  CHECK(pass == 1);

  exgl_ring* bad = nullptr;
  CHECK(exgl_ring_create("Z/1", &bad) == EXGL_ERR_ARGUMENT);
  CHECK(std::string(exgl_last_error()).find("m >= 2") != std::string::npos);
}

TEST_CASE("table rings load from JSON") {
  const char* json =
      "{\"order\":2,\"add\":[[0,1],[1,0]],\"mul\":[[0,0],[0,1]],\"zero\":0,\"one\":1}";
  exgl_ring* ring = nullptr;
  REQUIRE(exgl_ring_from_table_json(json, &ring) == EXGL_OK);
  CHECK(exgl_ring_order(ring) == 2);
  int pass = 0;
  CHECK(exgl_ring_verify(ring, &pass, nullptr) == EXGL_OK);
  CHECK(pass == 1);
  exgl_ring_free(ring);
}

TEST_CASE("error taxonomy surfaces through status codes") {
  Ring z4("Z/4");
  // capacity
  exgl_ring* big = nullptr;
  REQUIRE(exgl_ring_create("Z/4096", &big) == EXGL_OK);
  const uint32_t one = 1;
  exgl_ideal* ideal = nullptr;
  CHECK(exgl_ideal_create(big, &one, 1, 16, &ideal) == EXGL_ERR_CAPACITY);
  exgl_ring_free(big);
  // not invertible
  exgl_matrix* m = nullptr;
  CHECK(exgl_matrix_from_json(z4.p, "[[2,0],[0,1]]", &m) == EXGL_ERR_NOT_INVERTIBLE);
  // parse
  CHECK(exgl_matrix_from_json(z4.p, "{bad", &m) == EXGL_ERR_PARSE);
  // unsupported degree
  exgl_matrix* e2 = nullptr;
  REQUIRE(exgl_matrix_identity(z4.p, 2, &e2) == EXGL_OK);
  exgl_product* p = nullptr;
  CHECK(exgl_extract_entry(e2, 1, 2, 1, 2, 1, 1, &p) == EXGL_ERR_UNSUPPORTED);
  exgl_matrix_free(e2);
  CHECK(std::string(exgl_status_name(EXGL_ERR_PRECONDITION)) == "precondition");
}

TEST_CASE("ideals, nicholson, decomposition through the C API") {
  Ring z6("Z/6");
  const uint32_t gens[] = {2};
  exgl_ideal* ideal = nullptr;
  REQUIRE(exgl_ideal_create(z6.p, gens, 1, 0, &ideal) == EXGL_OK);
  CHECK(exgl_ideal_size(ideal) == 3);  // {0, 2, 4}
  CHECK(exgl_ideal_contains(ideal, 4) == 1);
  CHECK(exgl_ideal_contains(ideal, 3) == 0);
  uint32_t buf[8];
  size_t written = 0;
  CHECK(exgl_ideal_elements(ideal, buf, 8, &written) == EXGL_OK);
  CHECK(written == 3);
  CHECK(buf[0] == 0);
  CHECK(buf[2] == 4);

  uint32_t e = 0, s = 0, t = 0;
  CHECK(exgl_nicholson(z6.p, 3, &e, &s, &t) == EXGL_OK);
  CHECK(e == 3);

  uint32_t xs[] = {3, 4};
  uint32_t es[2], rs[2];
  CHECK(exgl_orthogonal_decomposition(z6.p, xs, 2, es, rs) == EXGL_OK);
  CHECK(es[0] == 3);
  CHECK(es[1] == 4);
  exgl_ideal_free(ideal);
}

TEST_CASE("matrices and factorizations through the C API") {
  Ring z4("Z/4");
  const uint32_t gens[] = {2};
  exgl_ideal* ideal = nullptr;
  REQUIRE(exgl_ideal_create(z4.p, gens, 1, 0, &ideal) == EXGL_OK);

  exgl_matrix* sigma = nullptr;
  REQUIRE(exgl_matrix_from_json(z4.p, "[[1,2,0],[0,1,0],[0,0,1]]", &sigma) == EXGL_OK);
  CHECK(exgl_matrix_degree(sigma) == 3);
  uint32_t entry = 0;
  CHECK(exgl_matrix_entry(sigma, 1, 2, &entry) == EXGL_OK);
  CHECK(entry == 2);

  int member = 0;
  CHECK(exgl_congruence_member(sigma, ideal, &member) == EXGL_OK);
  CHECK(member == 1);

  exgl_ideal* level = nullptr;
  CHECK(exgl_level_ideal(sigma, 0, &level) == EXGL_OK);
  CHECK(exgl_ideal_size(level) == 2);

  // factor t_{13}(2)^sigma and re-check through JSON
  exgl_relword* word = nullptr;
  REQUIRE(exgl_factor_conj_transvection(sigma, 1, 3, 2, ideal, &word) == EXGL_OK);
  char* wjson = nullptr;
  CHECK(exgl_relword_to_json(word, &wjson) == EXGL_OK);
  const std::string payload = take(wjson);
  exgl_relword* reloaded = nullptr;
  REQUIRE(exgl_relword_from_json(z4.p, 3, ideal, payload.c_str(), &reloaded) == EXGL_OK);
  exgl_matrix *lhs = nullptr, *rhs = nullptr;
  CHECK(exgl_relword_eval(word, &lhs) == EXGL_OK);
  CHECK(exgl_relword_eval(reloaded, &rhs) == EXGL_OK);
  CHECK(exgl_matrix_equal(lhs, rhs) == 1);

  exgl_word* expanded = nullptr;
  CHECK(exgl_relword_expand(word, &expanded) == EXGL_OK);
  CHECK(exgl_word_length(expanded) <= 27);

  // rejection path: x outside the ideal
  exgl_relword* bad = nullptr;
  CHECK(exgl_factor_conj_transvection(sigma, 1, 3, 1, ideal, &bad) == EXGL_ERR_ARGUMENT);

  exgl_word_free(expanded);
  exgl_matrix_free(lhs);
  exgl_matrix_free(rhs);
  exgl_relword_free(word);
  exgl_relword_free(reloaded);
  exgl_matrix_free(sigma);
  exgl_ideal_free(level);
  exgl_ideal_free(ideal);
}

TEST_CASE("rank-one factorization matches the frozen example") {
  Ring z4("Z/4");
  const uint32_t gens[] = {2};
  exgl_ideal* ideal = nullptr;
  REQUIRE(exgl_ideal_create(z4.p, gens, 1, 0, &ideal) == EXGL_OK);
  const uint32_t u[] = {0, 1, 0};
  const uint32_t v[] = {2, 0, 2};
  exgl_relword* word = nullptr;
  REQUIRE(exgl_factor_rank_one(z4.p, 3, ideal, u, v, 2, &word) == EXGL_OK);
  CHECK(exgl_relword_factors(word) == 2);
  exgl_matrix* value = nullptr;
  CHECK(exgl_relword_eval(word, &value) == EXGL_OK);
  char* json = nullptr;
  CHECK(exgl_matrix_to_json(value, &json) == EXGL_OK);
  CHECK(take(json) == "[[1,0,0],[2,1,2],[0,0,1]]");
  exgl_matrix_free(value);
  exgl_relword_free(word);
  exgl_ideal_free(ideal);
}

TEST_CASE("words, products and reduction through the C API") {
  Ring z2("Z/2");
  exgl_word* a1 = nullptr;
  REQUIRE(exgl_word_from_json(z2.p, 3, R"([{"i":1,"j":2,"x":1,"exp":1}])", &a1) == EXGL_OK);
  exgl_word* g1 = nullptr;
  REQUIRE(exgl_word_sample(z2.p, 3, 99, 0, 3, &g1) == EXGL_OK);
  exgl_matrix* b1 = nullptr;
  {
    exgl_word* b1w = nullptr;
    REQUIRE(exgl_word_sample(z2.p, 3, 99, 1, 3, &b1w) == EXGL_OK);
    REQUIRE(exgl_word_eval(b1w, &b1) == EXGL_OK);
    exgl_word_free(b1w);
  }
  const exgl_word* gs[] = {g1};
  exgl_product* product = nullptr;
  REQUIRE(exgl_expand_reduction(a1, b1, gs, 1, &product) == EXGL_OK);
  CHECK(exgl_product_factors(product) == 2);

  // independent re-check: reduce_step on the evaluated pieces
  exgl_matrix *a = nullptr, *g = nullptr, *a2 = nullptr, *b2 = nullptr;
  REQUIRE(exgl_word_eval(a1, &a) == EXGL_OK);
  REQUIRE(exgl_word_eval(g1, &g) == EXGL_OK);
  REQUIRE(exgl_reduce_step(a, b1, g, &a2, &b2) == EXGL_OK);
  exgl_matrix *chain = nullptr, *value = nullptr;
  REQUIRE(exgl_matrix_mul(a2, b2, &chain) == EXGL_OK);
  REQUIRE(exgl_product_eval(product, &value) == EXGL_OK);
  CHECK(exgl_matrix_equal(chain, value) == 1);

  char* pjson = nullptr;
  CHECK(exgl_product_to_json(product, &pjson) == EXGL_OK);
  exgl_product* reloaded = nullptr;
  REQUIRE(exgl_product_from_json(z2.p, take(pjson).c_str(), &reloaded) == EXGL_OK);
  CHECK(exgl_product_factors(reloaded) == 2);

  for (exgl_matrix* m : {a, g, a2, b2, chain, value, b1}) exgl_matrix_free(m);
  exgl_product_free(product);
  exgl_product_free(reloaded);
  exgl_word_free(g1);
  exgl_word_free(a1);
}

TEST_CASE("extraction and classification through the C API") {
  Ring z4("Z/4");
  exgl_matrix* sigma = nullptr;
  REQUIRE(exgl_matrix_from_json(z4.p, "[[1,2,0],[0,1,0],[0,0,1]]", &sigma) == EXGL_OK);

  exgl_product* entry = nullptr;
  REQUIRE(exgl_extract_entry(sigma, 1, 2, 2, 3, 1, 1, &entry) == EXGL_OK);
  CHECK(exgl_product_factors(entry) == 40);
  exgl_matrix *value = nullptr, *target = nullptr;
  REQUIRE(exgl_product_eval(entry, &value) == EXGL_OK);
  REQUIRE(exgl_matrix_transvection(z4.p, 3, 2, 3, 2, &target) == EXGL_OK);
  CHECK(exgl_matrix_equal(value, target) == 1);

  exgl_product* diag = nullptr;
  REQUIRE(exgl_extract_diagonal(sigma, 1, 2, 1, 2, 1, 1, 1, &diag) == EXGL_OK);
  CHECK(exgl_product_factors(diag) == 120);

  const exgl_matrix* gens[] = {sigma};
  char* cert = nullptr;
  REQUIRE(exgl_classify(gens, 1, "[[],[2]]", 0, &cert) == EXGL_OK);
  const std::string cert_text = take(cert);
  CHECK(cert_text.find("\"lower_witnesses\"") != std::string::npos);
  CHECK(cert_text.find("\"comparisons\"") != std::string::npos);

  exgl_matrix_free(value);
  exgl_matrix_free(target);
  exgl_product_free(entry);
  exgl_product_free(diag);
  exgl_matrix_free(sigma);
}

TEST_CASE("groups and suites through the C API") {
  Ring z2("Z/2");
  const uint32_t no_gens[] = {0};
  exgl_ideal* zero = nullptr;
  REQUIRE(exgl_ideal_create(z2.p, no_gens, 1, 0, &zero) == EXGL_OK);

  exgl_group* relative = nullptr;
  REQUIRE(exgl_group_relative_elementary(z2.p, 3, zero, 0, &relative) == EXGL_OK);
  CHECK(exgl_group_order(relative) == 1);
  exgl_group_free(relative);
  exgl_ideal_free(zero);

  exgl_matrix** samples = nullptr;
  REQUIRE(exgl_sample_gl(z2.p, 3, 5, 4, &samples) == EXGL_OK);
  exgl_group* closure = nullptr;
  const exgl_matrix* gens[] = {samples[0], samples[1], samples[2], samples[3]};
  REQUIRE(exgl_group_closure(gens, 4, 0, &closure) == EXGL_OK);
  CHECK(exgl_group_order(closure) >= 1);
  CHECK(exgl_group_contains(closure, samples[0]) == 1);
  exgl_group_free(closure);
  exgl_matrix_array_free(samples, 4);

  char* report = nullptr;
  int pass = 0;
  REQUIRE(exgl_run_suite("relations", "{\"ring\":\"Z/2\",\"n\":3}", &report, &pass) == EXGL_OK);
  CHECK(pass == 1);
  CHECK(take(report).find("\"pass\": true") != std::string::npos);

  CHECK(exgl_run_suite("bogus", "{}", nullptr, &pass) == EXGL_ERR_ARGUMENT);
}
