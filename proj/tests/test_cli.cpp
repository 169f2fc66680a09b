#include "doctest.h"

#include "json.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

TEST_SUITE_BEGIN("cli");

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(ACN_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(ACN_DATA_DIR) + "/" + name; }

nlohmann::json machine_block(const std::string& out) {
  // --format human appends a fenced machine block
  auto start = out.find("```json\n");
  REQUIRE(start != std::string::npos);
  auto end = out.find("\n```", start);
  REQUIRE(end != std::string::npos);
  return nlohmann::json::parse(out.substr(start + 8, end - start - 8));
}

} // namespace

TEST_CASE("check passes on the ambient document") {
  RunResult r = run("check " + data("g_ambient.json") + " --format json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["ok"] == true);
}

TEST_CASE("check fails on a Jacobi-violating document and names a triple") {
  RunResult r = run("check " + data("bad_jacobi.json"));
  CHECK(r.code == 1);
  CHECK(r.out.find("jacobi(") != std::string::npos);
  CHECK(r.out.find("CHECKS FAILED") != std::string::npos);
}

TEST_CASE("check passes on the abelian document with a valid phi") {
  RunResult r = run("check " + data("abelian3.json"));
  CHECK(r.code == 0);
}

TEST_CASE("parse and validation failures exit 2") {
  CHECK(run("check " + data("does_not_exist.json")).code == 2);
  RunResult r = run("tensors " + data("truncated.json") + " --which f");
  CHECK(r.code == 2);
}

TEST_CASE("singular metric exits 3") {
  CHECK(run("check " + data("singular_metric.json")).code == 3);
}

TEST_CASE("tensors on the abelian document reports all-zero components") {
  RunResult r = run("tensors " + data("abelian3.json") + " --which connection");
  CHECK(r.code == 0);
  CHECK(r.out.find("all components zero") != std::string::npos);
  for (const char* which : {"f", "curvature"}) {
    RunResult rr = run("tensors " + data("abelian3.json") + " --which " + which);
    CHECK(rr.code == 0);
    CHECK(rr.out.find("all components zero") != std::string::npos);
  }
}

TEST_CASE("tensors --which f on the ambient agrees across both routes") {
  RunResult r = run("tensors " + data("g_ambient.json") + " --which f --format json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["routes_agree"] == true);
  CHECK_FALSE(j["nonzero"].empty());
}

TEST_CASE("tensors --which f on the induced orthogonal geometry is zero") {
  RunResult r = run("tensors " + data("h3_induced.json") + " --which f --format json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["nonzero"].empty());
}

TEST_CASE("sub runs the orthogonal pipeline end to end") {
  RunResult r = run("sub " + data("h3.json") + " --format json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["class_F0"] == true);
  CHECK(j["classification"]["totally_real"] == true);
  CHECK(j["classification"]["xi_orthogonal"] == true);
  CHECK(j["decomposition"]["case"] == "orthogonal");
  CHECK(j["identities"]["ok"] == true);
  CHECK(j["induced"]["axioms"]["ok"] == true);
}

TEST_CASE("sub runs the non-orthogonal pipeline end to end") {
  RunResult r = run("sub " + data("h.json"));
  CHECK(r.code == 0);
  auto j = machine_block(r.out);
  CHECK(j["class_F0"] == false);
  CHECK(j["decomposition"]["a"] == "1/2*s");
  CHECK(j["induced"]["lambda"] == "-4 + 8/3*s");
  CHECK(j["induced_f"].size() == 2);
  // human block present too
  CHECK(r.out.find("induced structure") != std::string::npos);
}

TEST_CASE("sub refuses induction on a xi-section with exit 4") {
  RunResult r = run("sub " + data("alpha1_section.json"));
  CHECK(r.code == 4);
  CHECK(r.out.find("xi-section") != std::string::npos);
}

TEST_CASE("sub without an induce block classifies only") {
  RunResult r = run("sub " + data("alpha1_classify.json") + " --format json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["classification"]["xi_section"] == true);
  CHECK_FALSE(j.contains("decomposition"));
}

TEST_CASE("sub without a section block is a validation error") {
  CHECK(run("sub " + data("g_ambient.json")).code == 2);
}

TEST_CASE("verify-examples passes for all flag combinations") {
  RunResult r = run("verify-examples --format json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(run("verify-examples --epsilon -1").code == 0);
  CHECK(run("verify-examples --branch lambda2").code == 0);
  CHECK(run("verify-examples --epsilon -1 --branch lambda2 --format json").code == 0);
}

TEST_SUITE_END();
