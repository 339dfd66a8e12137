#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ricci/canonical.hpp"
#include "ricci/graph6.hpp"
#include "ricci/named.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs a full shell command, capturing stdout only.
RunResult run_sh(const std::string& cmd) {
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buffer[4096];
  size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

RunResult run(const std::string& args) {
  return run_sh(std::string(RICCI_BIN_PATH) + " " + args);
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("named emits fixture graph6") {
  auto r = run("named petersen");
  CHECK(r.exit_code == 0);
  CHECK(r.out == ricci::emit_graph6(ricci::petersen_graph()) + "\n");

  CHECK(run("named cycle:3").out == "Bw\n");
  CHECK(run("named nosuch").exit_code == 2);
  CHECK(run("named cycle:2").exit_code == 2);
}

TEST_CASE("curvature table for petersen: 15 flat rows") {
  auto r = run("curvature --named petersen");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.out);
  int rows = 0;
  for (auto& line : lines) {
    if (line.empty() || line[0] == '#' || line.rfind("u", 0) == 0) continue;
    ++rows;
    CHECK(line.find("0/1") != std::string::npos);
  }
  CHECK(rows == 15);
  CHECK(r.out.find("all_flat=true") != std::string::npos);
}

TEST_CASE("curvature rows for C5") {
  auto r = run("curvature --named cycle:5 --format json");
  CHECK(r.exit_code == 0);
  int rows = 0;
  for (auto& line : lines_of(r.out)) {
    auto parsed = nlohmann::json::parse(line);
    if (parsed.contains("u")) {
      ++rows;
      CHECK(parsed["kappa"] == "1/2");
    }
  }
  CHECK(rows == 5);
}

TEST_CASE("curvature with idleness one is zero everywhere") {
  auto r = run("curvature --named cycle:5 --idleness 1");
  CHECK(r.exit_code == 0);
  int rows = 0;
  for (auto& line : lines_of(r.out)) {
    if (line.empty() || line[0] == '#' || line.rfind("u", 0) == 0) continue;
    ++rows;
    CHECK(line.find("0/1") != std::string::npos);
  }
  CHECK(rows == 5);
}

TEST_CASE("curvature exit codes") {
  CHECK(run("curvature --named cycle:5 --idleness 5/4").exit_code == 2);
  CHECK(run("curvature --named nosuch").exit_code == 2);
  CHECK(run("curvature").exit_code == 2);
  CHECK(run("curvature --format yaml --named cycle:5").exit_code == 2);
  // non-regular without --idleness is a domain error
  std::string path_g6 = ricci::emit_graph6(
      ricci::from_edge_list(3, {{0, 1}, {1, 2}}));
  CHECK(run_sh("printf '%s\\n' '" + path_g6 + "' | " + RICCI_BIN_PATH + " curvature -")
            .exit_code == 3);
  // disconnected input
  std::string split_g6 = ricci::emit_graph6(ricci::from_edge_list(4, {{0, 1}, {2, 3}}));
  CHECK(run_sh("printf '%s\\n' '" + split_g6 + "' | " + RICCI_BIN_PATH + " curvature -")
            .exit_code == 3);
}

TEST_CASE("generate counts") {
  CHECK(run("generate -n 10 --girth 5 --count-only").out == "1\n");
  CHECK(run("generate -n 12 --girth 5 --count-only").out == "2\n");
  CHECK(run("generate -n 8 --girth 5 --count-only").out == "0\n");
  CHECK(run("generate -n 9 --girth 5").exit_code == 2);
  CHECK(run("generate -n 40 --girth 5").exit_code == 2);
}

TEST_CASE("generate emits parseable graph6 lines, byte-identical across runs") {
  auto a = run("generate -n 12 --girth 5");
  auto b = run("generate -n 12 --girth 5");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  auto lines = lines_of(a.out);
  CHECK(lines.size() == 2);
  for (auto& line : lines) CHECK(ricci::parse_graph6(line).n == 12);
}

TEST_CASE("generate ingests and filters a stream") {
  std::string file = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                     "/ricci_cli_ingest.g6";
  {
    std::ofstream f(file);
    f << ricci::emit_graph6(ricci::petersen_graph()) << "\n";
    f << "A_\n";  // not cubic
    f << ricci::emit_graph6(ricci::cycle_graph(6)) << "\n";
  }
  auto r = run("generate --graph6 " + file + " --girth 5");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0] == ricci::emit_graph6(ricci::petersen_graph()));

  auto counted = run("generate --graph6 " + file + " --girth 5 --count-only");
  CHECK(counted.out == "1\n");
  std::remove(file.c_str());
}

TEST_CASE("classify over the generated range 10..12") {
  auto r = run("classify --generate 10..12 --format json");
  CHECK(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["inspected"] == 3);
  REQUIRE(doc["flat"].size() == 2);
  CHECK(doc["flat"][0]["name"] == "petersen");
  CHECK(doc["flat"][1]["name"] == "triplex");
  CHECK(doc["lemma_violations"].empty());
}

TEST_CASE("classify a graph6 file containing the dodecahedron") {
  std::string file = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                     "/ricci_cli_classify.g6";
  {
    std::ofstream f(file);
    f << ricci::emit_graph6(ricci::dodecahedral_graph()) << "\n";
    f << ricci::emit_graph6(ricci::cycle_graph(5)) << "\n";
  }
  auto r = run("classify --graph6 " + file + " --format json");
  CHECK(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["inspected"] == 2);
  REQUIRE(doc["flat"].size() == 1);
  CHECK(doc["flat"][0]["name"] == "dodecahedron");
  std::remove(file.c_str());
}

TEST_CASE("classify --search small tier") {
  auto r = run("classify --search --max-n 12 --format graph6");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == ricci::canonical_form(ricci::petersen_graph()).bytes);
  CHECK(lines[1] == ricci::canonical_form(ricci::triplex_graph()).bytes);
}

TEST_CASE("classify reads graph6 from stdin") {
  std::string pet = ricci::emit_graph6(ricci::petersen_graph());
  auto r = run_sh("printf '%s\\n' '" + pet + "' | " + RICCI_BIN_PATH +
                  " classify - --format json");
  CHECK(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["inspected"] == 1);
  REQUIRE(doc["flat"].size() == 1);
  CHECK(doc["flat"][0]["name"] == "petersen");
  CHECK(doc["flat"][0]["graph6"] == pet);
}

TEST_CASE("classify honors --jobs deterministically") {
  auto one = run("classify --generate 10..12 --jobs 1 --format json");
  auto four = run("classify --generate 10..12 --jobs 4 --format json");
  CHECK(one.out == four.out);
}

TEST_CASE("classify usage errors") {
  CHECK(run("classify").exit_code == 2);
  CHECK(run("classify --generate 9..11").exit_code == 2);
  CHECK(run("classify --generate banana").exit_code == 2);
  CHECK(run("classify --graph6 /does/not/exist.g6").exit_code == 2);
}

TEST_CASE("classify strict vs non-strict on malformed lines") {
  std::string file = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                     "/ricci_cli_strict.g6";
  {
    std::ofstream f(file);
    f << ricci::emit_graph6(ricci::petersen_graph()) << "\n";
    f << "#junk\n";
  }
  auto lax = run("classify --graph6 " + file + " --format json");
  CHECK(lax.exit_code == 0);
  auto doc = nlohmann::json::parse(lax.out);
  CHECK(doc["inspected"] == 1);
  REQUIRE(doc["skipped"].size() == 1);
  CHECK(doc["skipped"][0]["index"] == 1);

  CHECK(run("classify --graph6 " + file + " --strict").exit_code == 2);
  std::remove(file.c_str());
}

TEST_CASE("RICCI_SEED_JOBS env is the --jobs fallback") {
  auto plain = run("classify --generate 10..12 --format json");
  auto env = run_sh("RICCI_SEED_JOBS=3 " + std::string(RICCI_BIN_PATH) +
                    " classify --generate 10..12 --format json");
  CHECK(env.exit_code == 0);
  CHECK(env.out == plain.out);
}
