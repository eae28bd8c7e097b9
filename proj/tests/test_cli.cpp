#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
};

Outcome run(const std::string& args) {
  const std::string cmd = std::string(IHG_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const char* name) { return std::string(IHG_FIXTURES) + "/" + name; }

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / (std::string("ihg_test_") + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("surface info") {
    auto r = run("surface info --genus 2 --format text");
    CHECK(r.code == 0);
    CHECK(r.out.find("9 edges, 6 triangles") != std::string::npos);
    r = run("surface info --genus 3");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["surface"]["edges"] == 15);
    CHECK(j["surface"]["triangles"] == 10);
    CHECK(j["surface"]["euler_characteristic"] == -4);
    CHECK(j["config"]["genus"] == 3);
    CHECK(j["tool"].is_string());
    CHECK(run("surface info --genus 1").code == 2);
    CHECK(run("surface info --genus 9").code == 2);
    CHECK(run("surface info --genus 6 --allow-large-genus").code == 0);
  }

  TEST_CASE("curve commands") {
    auto r = run("curve classify b_1 --format text");
    CHECK(r.code == 0);
    CHECK(r.out == "disk (meridian)\n");
    r = run("curve intersect c_1 c_2 --format text");
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");
    const auto same = nlohmann::json::parse(run("curve twist --about c_2 --power 0 c_1").out);
    const auto c1 = nlohmann::json::parse(run("curve classify c_1").out);
    CHECK(same["image"]["coords"] == c1["curve"]["coords"]);
    CHECK(same["unchanged"] == true);
    r = run("curve word 'a1^2@b1'");
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["curve"]["handlebody_word"].size() == 2);
    CHECK(run("curve classify '[0,0,0,0,0,0,0,0,0]'").code == 2);
    CHECK(run("curve classify nonsense").code == 2);
    CHECK(run("curve classify '[1,2,0,0,1,2,0,0,0]' --format text").code == 0);
  }

  TEST_CASE("verify exit codes") {
    CHECK(run("verify dims --genus 3").code == 0);
    CHECK(run("verify involution --genus 3").code == 2);
    CHECK(run("verify links --genus 2").code == 2);
    CHECK(run("verify unknown").code == 2);
    const auto r = run("verify r5 --genus 2");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "pass");
    CHECK(j["checks"][0]["details"]["alpha"]["handlebody_word"].size() == 2);
  }

  TEST_CASE("reports are deterministic") {
    const std::string path = temp_path("pool_repeat.json");
    REQUIRE(run("pool gen --genus 2 --max-word-len 2 --out " + path).code == 0);
    const std::string first = slurp(path);
    REQUIRE(run("pool gen --genus 2 --max-word-len 2 --out " + path).code == 0);
    CHECK(first == slurp(path));
    CHECK(run("verify dims --genus 2").out == run("verify dims --genus 2").out);
  }

  TEST_CASE("pool, complex and metric files") {
    const std::string pool = temp_path("pool.json"), graph = temp_path("graph.json");
    REQUIRE(run("pool gen --genus 2 --max-word-len 1 --out " + pool).code == 0);
    REQUIRE(run("complex build --pool " + pool + " --out " + graph).code == 0);
    const auto g = nlohmann::json::parse(slurp(graph));
    const auto edge = g["graph"]["edges"][0];
    auto r = run("metric dist --graph " + graph + " " + std::to_string(edge[0].get<int>()) + " " +
                 std::to_string(edge[1].get<int>()) + " --format text");
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");
    r = run("metric dist --graph " + graph + " 0 0 --format text");
    CHECK(r.out == "0\n");
    CHECK(run("metric ball --graph " + graph + " 0 --radius 1").code == 0);
    CHECK(run("complex build --pool " + pool + " --format dot").out.find("graph complex") == 0);
    CHECK(run("complex build --pool /nonexistent.json").code == 2);
    CHECK(run("metric dist --graph " + graph + " 0 99999").code == 2);
  }

  TEST_CASE("delta fixtures") {
    auto r = run("metric delta --graph " + fixture("cycle6.json") + " --format text");
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");
    r = run("metric delta --graph " + fixture("tree.json") + " --format text");
    CHECK(r.code == 0);
    CHECK(r.out == "0\n");
  }
}
