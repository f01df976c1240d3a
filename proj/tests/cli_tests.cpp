#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct CmdResult {
  int status;
  std::string out;
};

CmdResult run_cli(const std::string& args) {
  std::string cmd = std::string(AFFMULT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int rc = pclose(pipe);
  return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("mult text output") {
  auto r = run_cli("mult --k 2 --a 1 --b 1 --ell 1 --no-timing");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "k=2 a=1 b=1 ell=1 n=2"));
  CHECK(contains(r.out, "formula = 1"));
}

TEST_CASE("mult csv output is deterministic without timing") {
  auto r = run_cli("mult --k 5 --a 3 --b 1 --ell 6 --format csv --no-timing");
  CHECK(r.status == 0);
  CHECK(r.out == "k,a,b,ell,n,method,value,ms\n5,3,1,6,10,formula,119,\n");
  auto again = run_cli("mult --k 5 --a 3 --b 1 --ell 6 --format csv --no-timing");
  CHECK(again.out == r.out);
}

TEST_CASE("mult json with all methods agrees") {
  auto r = run_cli("mult --k 2 --a 1 --b 1 --ell 2 --method all --format json --no-timing");
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["agree"] == true);
  CHECK(j["values"]["formula"] == j["values"]["crystal"]);
  CHECK(j["values"]["paths"] == j["values"]["permutations"]);
  CHECK(j["n"] == 4);
}

TEST_CASE("mult rejects out-of-range parameters with exit 2") {
  CHECK(run_cli("mult --k 2 --a 1 --b 2 --ell 2").status == 2);
  CHECK(run_cli("mult --k 2 --a 3 --b 1 --ell 2").status == 2);
  CHECK(run_cli("mult --k 5 --a 3 --b 2 --ell 2 --n 4").status == 2);
}

TEST_CASE("unparseable flags exit 1") {
  CHECK(run_cli("mult --k 2 --a 1 --b 1 --ell 1 --bogus").status == 1);
  CHECK(run_cli("mult --k 2 --a 1 --b 1 --ell 1 --method nope").status == 1);
  CHECK(run_cli("mult --k 2 --a 1 --b 1").status == 1);
  CHECK(run_cli("").status == 1);
}

TEST_CASE("table sweeps ell and emits csv rows") {
  auto r = run_cli("table --k 2 --a 1 --b 1 --ell-max 5 --format csv --no-timing");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "k,a,b,ell,n,method,value,ms\n"
        "2,1,1,1,2,formula,1,\n"
        "2,1,1,2,4,formula,2,\n"
        "2,1,1,3,6,formula,5,\n"
        "2,1,1,4,8,formula,14,\n"
        "2,1,1,5,10,formula,42,\n");
}

TEST_CASE("table json matches csv values") {
  auto r = run_cli("table --k 2 --a 1 --b 1 --ell-max 4 --format json --no-timing");
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 4);
  const std::vector<long long> expect = {1, 2, 5, 14};
  for (std::size_t i = 0; i < j.size(); ++i) {
    CHECK(j[i]["ell"] == static_cast<int>(i) + 1);
    CHECK(j[i]["values"]["formula"] == expect[i]);
    CHECK(!j[i].contains("agree"));
  }
}

TEST_CASE("table below the smallest valid ell is empty") {
  auto r = run_cli("table --k 5 --a 3 --b 2 --ell-max 2 --format csv --no-timing");
  CHECK(r.status == 0);
  CHECK(r.out == "k,a,b,ell,n,method,value,ms\n");
}

TEST_CASE("verify passes on a clean build") {
  auto r = run_cli("verify --max-ell 2 --max-k 3");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "VERIFICATION PASSED"));
}

TEST_CASE("verify detects a perturbed method") {
  auto r = run_cli("verify --max-ell 2 --max-k 3 --perturb-method formula");
  CHECK(r.status == 3);
  CHECK(contains(r.out, "FAIL"));
}

TEST_CASE("rsk forward and inverse") {
  auto fwd = run_cli("rsk --perm 3,2,9,8,6,1,7,5,4");
  CHECK(fwd.status == 0);
  auto j = nlohmann::json::parse(fwd.out);
  CHECK(j["m"] == nlohmann::json::parse("[[1,4,7],[2,5],[3,6],[8],[9]]"));
  CHECK(j["n"] == nlohmann::json::parse("[[1,3,7],[2,4],[5,8],[6],[9]]"));

  auto inv = run_cli(
      "rsk --inverse --m '[[1,4,7],[2,5],[3,6],[8],[9]]' --n '[[1,3,7],[2,4],[5,8],[6],[9]]'");
  CHECK(inv.status == 0);
  CHECK(contains(inv.out, "3,2,9,8,6,1,7,5,4"));
}

TEST_CASE("rsk rejects malformed input with exit 1") {
  CHECK(run_cli("rsk --perm 1,1").status == 1);
  CHECK(run_cli("rsk --perm not-a-word").status == 1);
  CHECK(run_cli("rsk").status == 1);
  CHECK(run_cli("rsk --inverse --m '[[1,2]]' --n '[[1],[2]]'").status == 1);
}

TEST_CASE("rectify slides a skew filling to a straight shape") {
  auto r = run_cli("rectify --outer '[[3,6,9],[4,8],[5,7,10]]' --inner '[1,1]'");
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j == nlohmann::json::parse("[[3,6,8,9],[4,7],[5,10]]"));
}

TEST_CASE("rectify rejects malformed input with exit 1") {
  CHECK(run_cli("rectify --outer '[[1,2]' --inner '[1]'").status == 1);
  CHECK(run_cli("rectify --outer '[[3,6],[4]]' --inner '[1,1,1]'").status == 1);
}
