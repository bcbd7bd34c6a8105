#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rspace.h>

#include <json.hpp>

#include <cstring>
#include <string>

using nlohmann::json;

namespace {

struct Case {
  rsp_case_t* h = nullptr;
  explicit Case(const char* text) { REQUIRE(rsp_case_parse(text, &h) == RSP_OK); }
  ~Case() { rsp_case_free(h); }
};

// Both arguments of take() must be insensitive to evaluation order, so the
// payload travels by address: the API call fills *s before take reads it.
json take(rsp_status st, char** s) {
  REQUIRE(st == RSP_OK);
  REQUIRE(*s != nullptr);
  json j = json::parse(*s);
  rsp_string_free(*s);
  *s = nullptr;
  return j;
}

} // namespace

TEST_CASE("version and error strings have static storage") {
  REQUIRE(rsp_version() != nullptr);
  CHECK(std::strlen(rsp_version()) > 0);
  REQUIRE(rsp_last_error() != nullptr);
}

TEST_CASE("case parse status codes") {
  rsp_case_t* h = nullptr;
  CHECK(rsp_case_parse("so(r=2,C)", &h) == RSP_OK);
  rsp_case_free(h);

  h = nullptr;
  CHECK(rsp_case_parse("sp(r=2)", &h) == RSP_ERR_USAGE);
  CHECK(h == nullptr);
  CHECK(std::strlen(rsp_last_error()) > 0);

  // Well-formed but mathematically excluded: s = r is the unital wall.
  CHECK(rsp_case_parse("sl(r=2,s=2,R)", &h) == RSP_ERR_DOMAIN);
  CHECK(h == nullptr);

  CHECK(rsp_case_parse(nullptr, &h) == RSP_ERR_USAGE);
  CHECK(rsp_case_parse("e6(6)", nullptr) == RSP_ERR_USAGE);
}

TEST_CASE("case json carries the structure constants") {
  Case c("sl(r=2,s=5,R)");
  char* s = nullptr;
  json j = take(rsp_case_json(c.h, &s), &s);
  CHECK(j["name"] == "sl(r=2,s=5,R)");
  CHECK(j["n"] == 10);
  CHECK(j["p"] == "7/2");
  CHECK(j["r"] == 2);
  CHECK(j["d"] == 1);
  CHECK(j["e"] == 0);
  CHECK(j["b"] == 3);

  char* t = nullptr;
  json table = take(rsp_family_table_json(&t), &t);
  CHECK(table["families"].size() == 8);
}

TEST_CASE("coefficient json") {
  Case c("so(r=2,C)");
  char* s = nullptr;
  json j = take(rsp_coeffs_json(c.h, "1,1", &s), &s);
  CHECK(j["C"] == "3/25");
  CHECK(j["C_closed"] == "3/25");
  CHECK(j["C_zero"] == false);
  CHECK(j["A"][0] == "144/175");
  CHECK(j["B"][1] == "2/35");
  CHECK(j["casimir"] == "30/1");
  CHECK(j["x"][0] == "9/1");
  CHECK(j["x"][1] == "5/1");

  // Non-dominant weight: well-formed text, excluded domain.
  CHECK(rsp_coeffs_json(c.h, "1,2", &s) == RSP_ERR_DOMAIN);
  // Malformed weight text.
  CHECK(rsp_coeffs_json(c.h, "1,zebra", &s) == RSP_ERR_USAGE);
}

TEST_CASE("reduce json") {
  Case c("e6(6)");
  char* s = nullptr;
  json j = take(rsp_reduce_json(c.h, "-3/2", &s), &s);
  CHECK(j["reducible"] == true);
  CHECK(j["side"] == -1);
  REQUIRE(j["witnesses"].size() == 1);
  CHECK(j["witnesses"][0]["j"] == 2);
  CHECK(j["witnesses"][0]["offset"] == 0);

  j = take(rsp_reduce_json(c.h, "i", &s), &s);
  CHECK(j["reducible"] == false);

  CHECK(rsp_reduce_json(c.h, "3/0", &s) == RSP_ERR_USAGE);
}

TEST_CASE("compose json with graph cross-check") {
  Case c("so(r=2,split)");
  char* s = nullptr;
  json j = take(rsp_compose_json(c.h, "2", 6, 1, &s), &s);
  CHECK(j["side"] == 1);
  CHECK(j["length"] == 3);
  REQUIRE(j["members"].size() == 2);
  CHECK(j["members"][0]["critical_index"] == 2);
  CHECK(j["members"][0]["bound"] == 2);
  CHECK(j["members"][1]["critical_index"] == 1);
  CHECK(j["members"][1]["bound"] == 1);
  CHECK(j["constituents"].size() == 3);
  CHECK(j["agreement"] == true);
  CHECK(j["graph"]["box"] == 6);
  CHECK(j["graph"]["layer_sizes"].size() == 3);

  // Irreducible parameter: reported as such, graph must be one component.
  j = take(rsp_compose_json(c.h, "1/3", 6, 1, &s), &s);
  CHECK(j["reducible"] == false);
  CHECK(j["agreement"] == true);
  CHECK(j["graph"]["strongly_connected"] == true);
  // Box too small for the vanishing thresholds.
  CHECK(rsp_compose_json(c.h, "2", 2, 1, &s) == RSP_ERR_DOMAIN);

  char* dot = nullptr;
  REQUIRE(rsp_compose_dot(c.h, "2", 6, &dot) == RSP_OK);
  CHECK(std::string(dot).rfind("digraph", 0) == 0);
  rsp_string_free(dot);
}

TEST_CASE("unitary json in both modes") {
  Case c("e6(6)");
  char* s = nullptr;

  // Classification mode (nu == NULL).
  json j = take(rsp_unitary_json(c.h, nullptr, 6, &s), &s);
  REQUIRE(j["classification"].size() == 4);
  CHECK(j["classification"][0]["nu"] == "-3/1");
  CHECK(j["classification"][0]["trivial"] == true);
  CHECK(j["classification"][1]["nu"] == "-3/2");
  CHECK(j["classification"][1]["norm"] == "Gamma(m+9/2)/Gamma(m+3/2)");
  auto spectrum = j["classification"][1]["spectrum"];
  REQUIRE(spectrum.size() >= 3);
  CHECK(spectrum[0]["t"] == "1/1");
  CHECK(spectrum[1]["t"] == "3/1");
  CHECK(spectrum[2]["t"] == "33/5");

  // Per-parameter mode.
  j = take(rsp_unitary_json(c.h, "-3/2", 8, &s), &s);
  CHECK(j["irreducible"] == false);
  REQUIRE(j["constituents"].size() == 2);
  CHECK(j["constituents"][0]["unitary"] == true);
  CHECK(j["constituents"][1]["unitary"] == false);
  CHECK(j["constituents"][1]["obstruction"]["obstructed"] == true);

  j = take(rsp_unitary_json(c.h, "i", 8, &s), &s);
  CHECK(j["irreducible"] == true);
  CHECK(j["note"] == "unitary principal series");
}

TEST_CASE("gkdim json") {
  Case c("e6(6)");
  char* s = nullptr;
  json j = take(rsp_gkdim_json(c.h, "small", &s), &s);
  CHECK(j["gk_dim"] == 11);
  CHECK(j["min_orbit_dim"] == 11);
  CHECK(j["verdict"] == "minimal nilpotent K_C-orbit closure");
  CHECK(j["in_scope"] == true);

  j = take(rsp_gkdim_json(c.h, "principal", &s), &s);
  CHECK(j["gk_dim"] == 16);

  CHECK(rsp_gkdim_json(c.h, "huge", &s) == RSP_ERR_USAGE);
  Case sl("sl(r=2,s=5,R)");
  CHECK(rsp_gkdim_json(sl.h, "small", &s) == RSP_ERR_DOMAIN);
}

TEST_CASE("verify json is deterministic for a fixed seed") {
  char* s1 = nullptr;
  REQUIRE(rsp_verify_json(25, 99, &s1) == RSP_OK);
  char* s2 = nullptr;
  REQUIRE(rsp_verify_json(25, 99, &s2) == RSP_OK);
  CHECK(std::string(s1) == std::string(s2));
  json j = json::parse(s1);
  rsp_string_free(s1);
  rsp_string_free(s2);
  CHECK(j["ok"] == true);
  CHECK(j["identity_ok"] == true);
  CHECK(j["lagrange_ok"] == true);
  CHECK(j["coeff_consistency_ok"] == true);
  CHECK(j["trials_per_branch"] == 25);
  CHECK(j["seed"] == 99);
  CHECK(j["instances_checked"] >= 50);

  CHECK(rsp_verify_json(0, 99, &s1) == RSP_ERR_USAGE);
}

TEST_CASE("null-handle and null-argument safety") {
  rsp_case_free(nullptr);   // no-op
  rsp_string_free(nullptr); // no-op
  char* s = nullptr;
  CHECK(rsp_case_json(nullptr, &s) == RSP_ERR_USAGE);
  Case c("e6(C)");
  CHECK(rsp_case_json(c.h, nullptr) == RSP_ERR_USAGE);
  CHECK(rsp_coeffs_json(c.h, nullptr, &s) == RSP_ERR_USAGE);
  CHECK(rsp_reduce_json(c.h, nullptr, &s) == RSP_ERR_USAGE);
}
