#include <doctest.h>

#include <string>

#include "colhur/colhur.h"

namespace {

struct Ctx {
  colhur_context* ptr = nullptr;
  ~Ctx() { colhur_context_destroy(ptr); }
};

std::string take(colhur_buffer* b) {
  std::string out(colhur_buffer_data(b), colhur_buffer_size(b));
  colhur_buffer_destroy(b);
  return out;
}

}  // namespace

TEST_CASE("context creation and validation errors") {
  Ctx ctx;
  const uint32_t m[] = {2, 1};
  REQUIRE(colhur_context_create_blocks(m, 2, nullptr, &ctx.ptr) == COLHUR_OK);
  CHECK(colhur_degree(ctx.ptr) == 3);
  CHECK(colhur_young_order(ctx.ptr) == 2);
  size_t count = 0;
  REQUIRE(colhur_class_count(ctx.ptr, &count) == COLHUR_OK);
  CHECK(count == 4);
  colhur_buffer* label = nullptr;
  REQUIRE(colhur_class_label(ctx.ptr, 3, &label) == COLHUR_OK);
  CHECK(take(label) == "aab");
  CHECK(colhur_class_label(ctx.ptr, 4, &label) == COLHUR_ERR_VALIDATION);

  colhur_context* bad = nullptr;
  const uint32_t zero[] = {2, 0};
  CHECK(colhur_context_create_blocks(zero, 2, nullptr, &bad) == COLHUR_ERR_VALIDATION);
  CHECK(std::string(colhur_last_error()).find("positive") != std::string::npos);
  CHECK(colhur_context_create_letters("aXb", nullptr, &bad) == COLHUR_ERR_VALIDATION);
  CHECK(colhur_context_create_letters(nullptr, nullptr, &bad) == COLHUR_ERR_VALIDATION);
  CHECK(bad == nullptr);
}

TEST_CASE("caps map to COLHUR_ERR_CAP") {
  colhur_limits limits;
  colhur_limits_default(&limits);
  CHECK(limits.max_degree == 8);
  CHECK(limits.max_verify_degree == 6);
  colhur_context* ctx = nullptr;
  CHECK(colhur_context_create_letters("aaaaaaaaa", &limits, &ctx) == COLHUR_ERR_CAP);
  limits.max_degree = 0;
  CHECK(colhur_context_create_letters("aa", &limits, &ctx) == COLHUR_ERR_VALIDATION);

  colhur_limits_default(&limits);
  limits.max_verify_degree = 3;
  Ctx small;
  REQUIRE(colhur_context_create_letters("aabb", &limits, &small.ptr) == COLHUR_OK);
  colhur_buffer* text = nullptr;
  CHECK(colhur_verify(small.ptr, 1, &text, nullptr) == COLHUR_ERR_CAP);
  colhur_buffer* json = nullptr;
  CHECK(colhur_table(small.ptr, 1, &json, nullptr) == COLHUR_ERR_CAP);
  REQUIRE(colhur_table(small.ptr, 0, &json, nullptr) == COLHUR_OK);
  colhur_buffer_destroy(json);
}

TEST_CASE("constant through the C interface") {
  Ctx ctx;
  REQUIRE(colhur_context_create_letters("aab", nullptr, &ctx.ptr) == COLHUR_OK);
  colhur_constant_result r{};
  REQUIRE(colhur_constant(ctx.ptr, "ab|a", "ab|a", "aab", COLHUR_METHOD_BOTH, &r) == COLHUR_OK);
  CHECK(r.has_oracle == 1);
  CHECK(r.oracle == 1);
  CHECK(r.hurwitz_numerator == 1);
  CHECK(r.hurwitz_denominator == 1);
  CHECK(r.match == 1);
  REQUIRE(colhur_constant(ctx.ptr, "ab|a", "ba|a", "a|a|b", COLHUR_METHOD_ORACLE, &r) == COLHUR_OK);
  CHECK(r.oracle == 2);
  CHECK(r.has_hurwitz == 0);
  CHECK(r.match == 0);
  CHECK(colhur_constant(ctx.ptr, "ab|a", "ab|a", "aaa", COLHUR_METHOD_BOTH, &r) == COLHUR_ERR_VALIDATION);
  CHECK(colhur_constant(ctx.ptr, "ab|a", "ab|a", "a||b", COLHUR_METHOD_BOTH, &r) == COLHUR_ERR_VALIDATION);

  colhur_buffer* json = nullptr;
  REQUIRE(colhur_constant_json(ctx.ptr, "ab|a", "ab|a", "a|a|b", COLHUR_METHOD_BOTH, &json) == COLHUR_OK);
  const std::string text = take(json);
  CHECK(text.find("\"oracle\": 2") != std::string::npos);
  CHECK(text.find("\"hurwitz\": 2") != std::string::npos);
  CHECK(text.find("\"match\": true") != std::string::npos);
}

TEST_CASE("table, classes and surfaces JSON") {
  Ctx ctx;
  REQUIRE(colhur_context_create_letters("aab", nullptr, &ctx.ptr) == COLHUR_OK);
  colhur_buffer* json = nullptr;
  colhur_buffer* csv = nullptr;
  REQUIRE(colhur_table(ctx.ptr, 1, &json, &csv) == COLHUR_OK);
  const std::string table = take(json);
  CHECK(table.find("\"classes\"") != std::string::npos);
  const std::string rows = take(csv);
  CHECK(rows.rfind("mu,lambda,nu,c\n", 0) == 0);
  CHECK(rows.find("a|ab,a|ab,aab,1\n") != std::string::npos);
  CHECK(rows.find("a|ab,a|ab,a|a|b,2\n") != std::string::npos);

  REQUIRE(colhur_classes_json(ctx.ptr, &json) == COLHUR_OK);
  CHECK(take(json).find("\"representative\": \"(0 1 2)\"") != std::string::npos);

  REQUIRE(colhur_surfaces_json(ctx.ptr, "ab|a", "ab|a", "aab", &json) == COLHUR_OK);
  const std::string census = take(json);
  CHECK(census.find("\"autOrder\": 1") != std::string::npos);
  REQUIRE(colhur_surfaces_json(ctx.ptr, "ab|a", "ab|a", "aa|b", &json) == COLHUR_OK);
  CHECK(take(json) == "[]\n");
}

TEST_CASE("verify through the C interface") {
  Ctx ctx;
  REQUIRE(colhur_context_create_letters("ab", nullptr, &ctx.ptr) == COLHUR_OK);
  colhur_buffer* text = nullptr;
  colhur_buffer* json = nullptr;
  REQUIRE(colhur_verify(ctx.ptr, 1, &text, &json) == COLHUR_OK);
  const std::string report = take(text);
  CHECK(report.find("result: PASS") != std::string::npos);
  CHECK(report.find("singleton") != std::string::npos);
  CHECK(take(json).find("\"passed\": true") != std::string::npos);
}
