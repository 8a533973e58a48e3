#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "crsym/crsym.h"

extern "C" int capi_header_c_status_count(void);

namespace {

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("header compiles as C") { CHECK(capi_header_c_status_count() == 3); }

TEST_CASE("run, inspect and free a report") {
  crsym_params p;
  crsym_params_init(&p);
  p.set = CRSYM_HAS_K;
  p.k = 3;
  crsym_report* r = nullptr;
  REQUIRE(crsym_run_suite("classalg", &p, &r) == CRSYM_OK);
  crsym_status st = CRSYM_FAIL;
  CHECK(crsym_report_status(r, &st) == CRSYM_OK);
  CHECK(st == CRSYM_PASS);
  char* json = nullptr;
  REQUIRE(crsym_report_json(r, 0, &json) == CRSYM_OK);
  std::string text(json);
  crsym_string_free(json);
  CHECK(text.find("\"schema_version\": 1") != std::string::npos);
  CHECK(text.find("timing_seconds") == std::string::npos);
  char* csv = nullptr;
  REQUIRE(crsym_report_csv(r, &csv) == CRSYM_OK);
  CHECK(std::string(csv).find("overall") != std::string::npos);
  crsym_string_free(csv);
  crsym_report_free(r);
}

TEST_CASE("written reports are byte-identical across runs") {
  auto dir = std::filesystem::temp_directory_path() / "crsym_capi_test";
  std::filesystem::remove_all(dir);
  crsym_params p;
  crsym_params_init(&p);
  p.set = CRSYM_HAS_K | CRSYM_HAS_DIM;
  p.k = 2;
  p.dim = 4;
  p.seed = 5;
  std::string paths[2] = {(dir / "a" / "r.json").string(), (dir / "b" / "r.json").string()};
  for (const auto& path : paths) {
    crsym_report* r = nullptr;
    REQUIRE(crsym_run_suite("decompose", &p, &r) == CRSYM_OK);
    CHECK(crsym_report_write(r, path.c_str(), "json") == CRSYM_OK);
    crsym_report_free(r);
  }
  CHECK(slurp(paths[0]) == slurp(paths[1]));
  CHECK_FALSE(slurp(paths[0]).empty());
  std::filesystem::remove_all(dir);
}

TEST_CASE("error codes") {
  crsym_report* r = nullptr;
  CHECK(crsym_run_suite("nosuch", nullptr, &r) == CRSYM_ERR_UNKNOWN_SUITE);
  CHECK(r == nullptr);
  CHECK(std::string(crsym_last_error()).find("nosuch") != std::string::npos);
  crsym_params p;
  crsym_params_init(&p);
  p.set = CRSYM_HAS_D | CRSYM_HAS_S;
  p.d = 2;
  p.s = 3;
  CHECK(crsym_run_suite("prop1", &p, &r) == CRSYM_ERR_INVALID_PARAMS);
  CHECK(std::string(crsym_last_error()).find("2s <= d") != std::string::npos);
  CHECK(crsym_run_suite(nullptr, nullptr, &r) == CRSYM_ERR_NULL_ARGUMENT);
  CHECK(crsym_report_status(nullptr, nullptr) == CRSYM_ERR_NULL_ARGUMENT);
  char* out = nullptr;
  CHECK(crsym_table_classalg(2, "xml", &out) == CRSYM_ERR_BAD_FORMAT);
  CHECK(crsym_table_isotypic(5, 4, &out) == CRSYM_ERR_INVALID_PARAMS);
  p.set = CRSYM_HAS_K;
  p.k = 2;
  REQUIRE(crsym_run_suite("classalg", &p, &r) == CRSYM_OK);
  CHECK(std::string(crsym_last_error()).empty());
  CHECK(crsym_report_write(r, "/proc/no/such/dir/r.json", "json") == CRSYM_ERR_IO);
  crsym_report_free(r);
}

TEST_CASE("a finding is distinguished from a failure") {
  crsym_params p;
  crsym_params_init(&p);
  p.set = CRSYM_HAS_N | CRSYM_HAS_DEG;
  p.n = 1;
  p.deg = 2;
  crsym_report* r = nullptr;
  REQUIRE(crsym_run_suite("composition", &p, &r) == CRSYM_OK);
  crsym_status st = CRSYM_PASS;
  crsym_report_status(r, &st);
  CHECK(st == CRSYM_FINDING);
  crsym_report_free(r);
}

TEST_CASE("tables and metadata") {
  char* out = nullptr;
  REQUIRE(crsym_table_classalg(2, "csv", &out) == CRSYM_OK);
  CHECK(std::string(out).find("(1,1):1") != std::string::npos);
  crsym_string_free(out);
  REQUIRE(crsym_table_isotypic(2, 4, &out) == CRSYM_OK);
  CHECK(std::string(out).find("104") != std::string::npos);
  crsym_string_free(out);
  CHECK(std::string(crsym_version()) == "0.1.0");
  CHECK(std::string(crsym_suite_names()).find("hwvectors") != std::string::npos);
}
