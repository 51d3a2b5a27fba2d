#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "pqalg/commands.hpp"

using namespace pqalg;

namespace {

struct Run {
  std::string out;
  int code;
};

Run cli(const std::string& args) {
  std::string cmd = std::string(PQALG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

Json cli_json(const std::string& args, int expect_code = 0) {
  Run r = cli("--json " + args);
  CAPTURE(args);
  CAPTURE(r.out);
  CHECK(r.code == expect_code);
  return Json::parse(r.out);
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("classify examples") {
  auto j = cli_json("classify --family Zn --n 3 --x 1 --y 1");
  CHECK(j["results"]["verdict"]["kind"] == "ProperlyGroupInvertible");
  CHECK(cli_json("classify --family F1 --m 2 --zero")["results"]["verdict"]["kind"] == "Zero");
  auto frac = cli_json("classify --family Zn --n 6 --x 2,0,1/2 --y 3");
  CHECK(frac["results"]["profile"]["x"][2] == "1/2");
  Run text = cli("classify --family Zn --n 3 --x 1 --y 1");
  CHECK(text.code == 0);
  CHECK(text.out.find("ProperlyGroupInvertible") != std::string::npos);
}

TEST_CASE("seed 42 classify matches the library and the golden file") {
  const std::string args = "classify --family Zn --n 9 --random --seed 42";
  auto j = cli_json(args);
  Json request = j["inputs"];
  CHECK(request == Json({{"family", "Zn"}, {"n", 9}, {"random", true}, {"seed", 42}}));
  RunReport lib = run_command("classify", request);
  CHECK(j["results"].dump() == lib.results.dump());
  CHECK(j["checks"].dump() == lib.checks.dump());
  CHECK(j["exit_code"] == lib.exit_code);

  Json golden = Json::parse(read_file(std::filesystem::path(PQALG_GOLDEN_DIR) / "classify_zn9_seed42.json"));
  CHECK(j["results"].dump() == golden["results"].dump());
  CHECK(j["checks"].dump() == golden["checks"].dump());
}

TEST_CASE("byte-identical reruns") {
  for (const std::string args : {"classify --family F2 --m 3 --random --seed 42", "verify --suite lambda --seed 7",
                                 "models --lambda 1/2 --m 3", "drazin --family F4 --m 3 --alpha -1"}) {
    Run a = cli("--json " + args), b = cli("--json " + args);
    CAPTURE(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    Run ta = cli(args), tb = cli(args);
    CHECK(ta.out == tb.out);
  }
}

TEST_CASE("drazin examples") {
  auto j = cli_json("drazin --family F3 --m 2 --alpha 1 --method both");
  CHECK(j["results"]["closed_form"]["inverse"] == j["results"]["oracle"]["inverse"]);
  CHECK(j["results"]["oracle"]["index"].get<int>() <= 2);
  auto neg = cli_json("drazin --family F1 --m 3 --alpha -1");
  CHECK(neg["results"]["closed_form"]["index"].get<int>() <= 3);
  auto lam = cli_json("drazin --lambda 2 --m 2 --alpha 1");
  CHECK(lam["results"]["oracle"]["index"] == 1);
  cli_json("drazin --family Zn --n 5 --alpha 1 --hyp-m 2", 3);
  cli_json("drazin --family F1 --m 2 --alpha 0", 2);
}

TEST_CASE("table, models, verify") {
  auto t = cli_json("table --family F1 --m 2");
  CHECK(t["results"]["table"].size() == 5);
  auto e = cli_json("models --family Zn --n 3 --example");
  CHECK(e["results"]["P"] == Json::parse(R"([["1","1","0"],["0","0","0"],["0","0","0"]])"));
  CHECK(e["results"]["Q"] == Json::parse(R"([["0","0","0"],["0","1","0"],["0","0","0"]])"));
  auto l = cli_json("models --lambda 1/2 --m 3");
  for (const auto& c : l["checks"]) CHECK(c["pass"] == true);
  Run v = cli("verify --suite dims");
  CHECK(v.code == 0);
  CHECK(v.out.find("dims") != std::string::npos);
  Run idx = cli("verify --suite index --profiles 50");
  CHECK(idx.code == 0);
}

TEST_CASE("pretty output and report directory") {
  Run p = cli("--pretty table --family Zn --n 2");
  CHECK(p.code == 0);
  CHECK(Json::parse(p.out)["results"]["dimension"] == 2);
  CHECK(std::count(p.out.begin(), p.out.end(), '\n') > 5);

  auto dir = std::filesystem::temp_directory_path() / "pqalg_cli_test_reports";
  std::filesystem::create_directories(dir);
  std::filesystem::remove(dir / "table.json");
  std::string cmd = "PQALG_REPORT_DIR=" + dir.string() + " " + PQALG_CLI_PATH + " table --family Zn --n 2 >/dev/null";
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(Json::parse(read_file(dir / "table.json"))["results"]["dimension"] == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("input errors exit 2") {
  CHECK(cli("classify --family Zn --n 3 --x 1.5").code == 2);
  CHECK(cli("classify --family Zn --n 3 --x 1 --y 0,1").code == 2);
  CHECK(cli("classify --family Zn").code == 2);
  CHECK(cli("classify --family Zn --n 3 --random").code == 2);
  CHECK(cli("classify --family Zn --n 3 --profile /nonexistent.json").code == 2);
  CHECK(cli("drazin --family F1 --m 2 --alpha 1 --method magic").code == 2);
  CHECK(cli("verify --suite nope").code == 2);
  CHECK(cli("bogus").code == 2);
  CHECK(cli("").code == 2);
  Json err = cli_json("table --family F1 --m 1", 2);
  CHECK(err["error"]["code"] == "InvalidInput");
}
