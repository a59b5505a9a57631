#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <w123/w123.h>

#include <cstdlib>
#include <cstring>
#include <string>

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  w123_string_free(s);
  return out;
}

struct Ctx {
  w123_context* ctx = nullptr;
  Ctx() { REQUIRE(w123_context_new(nullptr, 0, &ctx) == W123_OK); }
  ~Ctx() { w123_context_free(ctx); }
};

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::strlen(w123_version()) > 0);
  CHECK(std::string(w123_status_name(W123_OK)) == "ok");
  CHECK(std::string(w123_status_name(W123_ERR_CAP_EXCEEDED)) != std::string(w123_status_name(W123_ERR_TIMEOUT)));
}

TEST_CASE("counting") {
  Ctx c;
  w123_sequence* seq = nullptr;
  REQUIRE(w123_count(c.ctx, 1, 5, W123_METHOD_SCHEME, &seq) == W123_OK);
  CHECK(w123_sequence_length(seq) == 6);
  char* term = nullptr;
  REQUIRE(w123_sequence_term(seq, 5, &term) == W123_OK);
  CHECK(take(term) == "42");
  CHECK(w123_sequence_term(seq, 6, &term) == W123_ERR_INVALID_ARGUMENT);
  char* text = nullptr;
  REQUIRE(w123_sequence_render(seq, W123_FORMAT_TEXT, &text) == W123_OK);
  CHECK(take(text) == "1 1 2 5 14 42\n");
  w123_sequence_free(seq);

  unsigned counts[] = {2, 2, 2};
  char* out = nullptr;
  REQUIRE(w123_count_avoiders(c.ctx, counts, 3, "231", W123_METHOD_BRUTE, &out) == W123_OK);
  CHECK(take(out) == "43");
  REQUIRE(w123_count_avoiders(c.ctx, counts, 3, "123", W123_METHOD_RECURRENCE, &out) == W123_OK);
  CHECK(take(out) == "43");
  CHECK(w123_count_avoiders(c.ctx, counts, 3, "12", W123_METHOD_BRUTE, &out) == W123_ERR_INVALID_ARGUMENT);
}

TEST_CASE("errors carry a message") {
  Ctx c;
  w123_sequence* seq = nullptr;
  CHECK(w123_count(c.ctx, 3, 5, W123_METHOD_BRUTE, &seq) == W123_ERR_CAP_EXCEEDED);
  CHECK(seq == nullptr);
  CHECK(std::strlen(w123_last_error()) > 0);
  REQUIRE(w123_context_set_brute_cap(c.ctx, 15) == W123_OK);
  CHECK(w123_count(c.ctx, 3, 5, W123_METHOD_BRUTE, &seq) == W123_OK);
  w123_sequence_free(seq);
  CHECK(w123_count(c.ctx, 5, 5, W123_METHOD_LINEAR_REC, &seq) == W123_ERR_NOT_AVAILABLE);
  CHECK(w123_count(nullptr, 1, 5, W123_METHOD_SCHEME, &seq) == W123_ERR_INVALID_ARGUMENT);
  CHECK(w123_count(c.ctx, 1, 5, W123_METHOD_SCHEME, nullptr) == W123_ERR_INVALID_ARGUMENT);
}

TEST_CASE("scheme") {
  w123_scheme* s = nullptr;
  REQUIRE(w123_scheme_build(3, &s) == W123_OK);
  CHECK(w123_scheme_equation_count(s) == 6);
  char* text = nullptr;
  REQUIRE(w123_scheme_render(s, W123_FORMAT_JSON, &text) == W123_OK);
  CHECK(take(text).find("\"r\": 3") != std::string::npos);
  w123_scheme_free(s);
  CHECK(w123_scheme_build(0, &s) == W123_ERR_INVALID_ARGUMENT);
}

TEST_CASE("elimination") {
  Ctx c;
  w123_equation* eq = nullptr;
  REQUIRE(w123_eliminate(c.ctx, 2, W123_BACKEND_RESULTANTS, 30, &eq) == W123_OK);
  CHECK(w123_equation_verdict(eq) == W123_VERDICT_EQUAL);
  CHECK(w123_equation_passed(eq) == 1);
  char* text = nullptr;
  REQUIRE(w123_equation_render(eq, W123_FORMAT_TEXT, &text) == W123_OK);
  CHECK(!take(text).empty());
  w123_equation_free(eq);
}

TEST_CASE("guessing") {
  Ctx c;
  w123_recurrence* rec = nullptr;
  REQUIRE(w123_guess(c.ctx, 2, 3, 4, &rec) == W123_OK);
  CHECK(w123_recurrence_found(rec) == 1);
  CHECK(w123_recurrence_order(rec) == 2);
  CHECK(w123_recurrence_degree(rec) == 3);
  CHECK(w123_recurrence_matches_published(rec) == 1);
  w123_recurrence_free(rec);

  REQUIRE(w123_guess(c.ctx, 3, 1, 1, &rec) == W123_OK);
  CHECK(w123_recurrence_found(rec) == 0);
  CHECK(w123_recurrence_matches_published(rec) == -1);
  w123_recurrence_free(rec);
}

TEST_CASE("asymptotics") {
  Ctx c;
  w123_report* rep = nullptr;
  REQUIRE(w123_asymptotics(c.ctx, 1, 400, 0.01, &rep) == W123_OK);
  CHECK(w123_report_passed(rep) == 1);
  char* json = nullptr;
  REQUIRE(w123_report_render(rep, W123_FORMAT_JSON, &json) == W123_OK);
  CHECK(take(json).find("w123.asymptotics/1") != std::string::npos);
  w123_report_free(rep);
}

TEST_CASE("free functions accept null") {
  w123_context_free(nullptr);
  w123_sequence_free(nullptr);
  w123_scheme_free(nullptr);
  w123_equation_free(nullptr);
  w123_recurrence_free(nullptr);
  w123_report_free(nullptr);
  w123_string_free(nullptr);
}
