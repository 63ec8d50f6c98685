// Exercises the shared library strictly through the C header: no engine
// internals are visible here.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "../vendor/doctest.h"

#include <fstream>
#include <sstream>
#include <string>

#include "../vendor/json.hpp"
#include "cdgl.h"

namespace {

using Json = nlohmann::ordered_json;

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string r = s;
  cdgl_string_free(s);
  return r;
}

std::string model_json(int n, int truncation, int modified = 0) {
  cdgl_model* m = nullptr;
  REQUIRE(cdgl_model_build(n, truncation, modified, &m) == CDGL_OK);
  char* text = nullptr;
  REQUIRE(cdgl_model_to_json(m, &text) == CDGL_OK);
  cdgl_model_free(m);
  return take(text);
}

std::string data_file(const char* name) {
  std::ifstream in(std::string(CDGL_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("model build serializes deterministically") {
  std::string a = model_json(2, 3);
  std::string b = model_json(2, 3);
  CHECK(a == b);

  Json j = Json::parse(a);
  CHECK(j["truncation"] == 3);
  CHECK(j.contains("generators"));
  CHECK(j.contains("differential"));
  CHECK(j.contains("trace"));

  // Level 0 is a single Maurer-Cartan generator.
  Json j0 = Json::parse(model_json(0, 4));
  REQUIRE(j0["generators"].size() == 1);
  CHECK(j0["generators"][0]["degree"] == -1);
}

TEST_CASE("level 4 caps the truncation") {
  std::string capped = model_json(4, 4);
  CHECK(capped == model_json(4, 3));
  CHECK(Json::parse(capped)["truncation"] == 3);
}

TEST_CASE("model input errors set last_error") {
  cdgl_model* m = nullptr;
  CHECK(cdgl_model_build(-1, 4, 0, &m) == CDGL_ERR_INVALID_ARGUMENT);
  CHECK(std::string(cdgl_last_error()).find("level") != std::string::npos);
  CHECK(cdgl_model_build(5, 4, 0, &m) == CDGL_ERR_INVALID_ARGUMENT);
  CHECK(cdgl_model_build(2, 0, 0, &m) == CDGL_ERR_INVALID_ARGUMENT);
  CHECK(m == nullptr);

  char* text = nullptr;
  CHECK(cdgl_model_to_json(nullptr, &text) == CDGL_ERR_INVALID_ARGUMENT);
  CHECK(text == nullptr);
}

TEST_CASE("suite reports expose ordered checks") {
  cdgl_report* r = nullptr;
  REQUIRE(cdgl_suite_run("bch", 4, 3, 0, nullptr, &r) == CDGL_OK);
  CHECK(cdgl_report_passed(r) == 1);
  size_t count = cdgl_report_check_count(r);
  REQUIRE(count == 3);
  std::string prev;
  for (size_t i = 0; i < count; ++i) {
    std::string id = cdgl_report_check_id(r, i);
    CHECK(prev < id);
    prev = id;
    CHECK(cdgl_report_check_passed(r, i) == 1);
    CHECK(std::string(cdgl_report_check_detail(r, i)) != "");
    CHECK(cdgl_report_check_seconds(r, i) >= 0.0);
  }
  CHECK(cdgl_report_check_id(r, count) == nullptr);
  CHECK(cdgl_report_check_passed(r, count) == -1);
  CHECK(cdgl_report_check_detail(r, count) == nullptr);
  CHECK(cdgl_report_check_seconds(r, count) < 0.0);

  char* text = nullptr;
  REQUIRE(cdgl_report_render(r, 0, 0, &text) == CDGL_OK);
  std::string plain = take(text);
  CHECK(plain.find("suite: bch") == 0);
  CHECK(plain.find("overall: pass (3/3)") != std::string::npos);

  REQUIRE(cdgl_report_render(r, 1, 0, &text) == CDGL_OK);
  Json j = Json::parse(take(text));
  CHECK(j["suite"] == "bch");
  CHECK(j["overall"] == "pass");
  REQUIRE(j["checks"].size() == 3);
  CHECK(!j["checks"][0].contains("seconds"));

  REQUIRE(cdgl_report_render(r, 1, 1, &text) == CDGL_OK);
  CHECK(Json::parse(take(text))["checks"][0].contains("seconds"));
  cdgl_report_free(r);

  CHECK(cdgl_report_passed(nullptr) == 0);
  CHECK(cdgl_report_check_count(nullptr) == 0);
}

TEST_CASE("unknown suites and models are input errors") {
  cdgl_report* r = nullptr;
  CHECK(cdgl_suite_run("nope", 4, 3, 0, nullptr, &r) ==
        CDGL_ERR_INVALID_ARGUMENT);
  CHECK(std::string(cdgl_last_error()).find("unknown suite") !=
        std::string::npos);
  CHECK(cdgl_suite_run("homotopy", 4, 3, 0, "torus", &r) ==
        CDGL_ERR_INVALID_ARGUMENT);
  CHECK(std::string(cdgl_last_error()).find("unknown model") !=
        std::string::npos);
  CHECK(cdgl_suite_run(nullptr, 4, 3, 0, nullptr, &r) ==
        CDGL_ERR_INVALID_ARGUMENT);
  CHECK(r == nullptr);
}

TEST_CASE("loop homology of the sphere model") {
  std::string text = data_file("s2.json");
  char* out = nullptr;
  REQUIRE(cdgl_lambda_homology(text.c_str(), 4, 3, &out) == CDGL_OK);
  CHECK(take(out) == "[1,1,0]");
  REQUIRE(cdgl_lambda_homology(text.c_str(), 4, 2, &out) == CDGL_OK);
  CHECK(take(out) == "[1,1]");

  out = nullptr;
  CHECK(cdgl_lambda_homology("{", 4, 3, &out) == CDGL_ERR_INVALID_ARGUMENT);
  CHECK(std::string(cdgl_last_error()).find("simplicial set") !=
        std::string::npos);
  CHECK(cdgl_lambda_homology(text.c_str(), 4, 0, &out) ==
        CDGL_ERR_INVALID_ARGUMENT);
  CHECK(cdgl_lambda_homology(text.c_str(), 0, 3, &out) ==
        CDGL_ERR_INVALID_ARGUMENT);
  CHECK(out == nullptr);
}
