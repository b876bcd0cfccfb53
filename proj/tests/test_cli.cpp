#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(GRASSMETRIC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("gmcli-" + std::to_string(rand()))) {
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  std::string file(const std::string& name, const std::string& content) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << content;
    return p.string();
  }

 private:
  fs::path path_;
};

}  // namespace

TEST_CASE("inner on the identity pair") {
  TempDir dir;
  const std::string a = dir.file("a.csv", "1,0,0\n0,1,0\n");
  const auto r = run_cli("inner --form gram:standard --left " + a + " --right " + a);
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out).at("value").get<double>() == 1.0);
}

TEST_CASE("norm and decompose") {
  TempDir dir;
  const std::string b = dir.file("b.csv", "2,0,0\n0,1,0\n");
  const auto n = run_cli("norm --input " + b);
  CHECK(n.exit_code == 0);
  CHECK(json::parse(n.out).at("value").get<double>() == doctest::Approx(2.0));

  const std::string basis = dir.file("basis.csv", "1,0,0\n0,1,0\n");
  const std::string x = dir.file("x.csv", "1,2,3\n");
  const auto d = run_cli("decompose --basis " + basis + " --vector " + x);
  CHECK(d.exit_code == 0);
  const json j = json::parse(d.out);
  CHECK(j.at("lambdas")[0].get<double>() == doctest::Approx(1.0));
  CHECK(j.at("lambdas")[1].get<double>() == doctest::Approx(2.0));
  CHECK(j.at("residual")[2].get<double>() == doctest::Approx(3.0));
  CHECK(j.at("residual_orthogonal").get<bool>());
}

TEST_CASE("angle reproduces the pi/4 example") {
  TempDir dir;
  const std::string s1 = dir.file("s1.csv", "1,0,0\n0,1,0\n");
  const std::string s2 = dir.file("s2.csv",
                                  "1,0,0\n0,0.70710678118654752,0.70710678118654752\n");
  const auto r = run_cli("angle --left " + s1 + " --right " + s2);
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("cosine").get<double>() == doctest::Approx(0.70710678118654752).epsilon(1e-12));
  CHECK(j.at("angle_unoriented").get<double>() ==
        doctest::Approx(0.78539816339744831).epsilon(1e-12));
}

TEST_CASE("distmat, complement and dual-check") {
  TempDir dir;
  const std::string s1 = dir.file("s1.csv", "1,0,0,0\n0,1,0,0\n");
  const std::string s2 = dir.file("s2.csv", "0,0,1,0\n0,0,0,1\n");
  const auto dm = run_cli("distmat --inputs " + s1 + " " + s2);
  CHECK(dm.exit_code == 0);
  const json m = json::parse(dm.out).at("matrix");
  CHECK(m[0][0].get<double>() == 0.0);
  CHECK(m[0][1].get<double>() == doctest::Approx(1.5707963267948966));

  const auto c = run_cli("complement --basis " + s1);
  CHECK(c.exit_code == 0);
  const json cb = json::parse(c.out).at("basis");
  CHECK(cb.size() == 2);
  CHECK(std::abs(cb[0][0].get<double>()) <= 1e-12);
  CHECK(std::abs(cb[0][1].get<double>()) <= 1e-12);

  const auto dc = run_cli("dual-check --left " + s1 + " --right " + s1);
  CHECK(dc.exit_code == 0);
  CHECK(json::parse(dc.out).at("gap").get<double>() <= 1e-9);
}

TEST_CASE("check-axioms passes on a conforming form") {
  const auto r = run_cli("check-axioms --form gram:standard --m 4 --n 2 --seed 7 --trials 200");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("all_pass").get<bool>());
  for (const auto& rep : j.at("reports")) CHECK(rep.at("verdict") != "fail");
}

TEST_CASE("biased form exits 1 with a witness in the report") {
  const auto r = run_cli("check-axioms --form gram:standard --m 3 --n 2 --bias 0.25");
  CHECK(r.exit_code == 1);
  const json j = json::parse(r.out);
  CHECK_FALSE(j.at("all_pass").get<bool>());
  bool found_witness = false;
  for (const auto& rep : j.at("reports"))
    if (rep.contains("witness") && !rep.at("witness").is_null()) found_witness = true;
  CHECK(found_witness);
}

TEST_CASE("minor-check on an orthogonal matrix") {
  TempDir dir;
  const std::string q = dir.file("q.csv", "0,1,0\n1,0,0\n0,0,1\n");
  const auto r = run_cli("minor-check --matrix " + q + " --n 1");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out).at("pass").get<bool>());
}

TEST_CASE("deterministic output, byte identical across runs") {
  TempDir dir;
  const std::string a = dir.file("a.csv", "1,0,0\n0,1,0\n");
  const std::string s2 = dir.file("s2.csv",
                                  "1,0,0\n0,0.70710678118654752,0.70710678118654752\n");
  const std::string cmds[] = {
      "inner --form gram:standard --left " + a + " --right " + a,
      "check-axioms --form gram:standard --m 4 --n 2 --seed 7 --trials 200",
      "angle --left " + a + " --right " + s2,
  };
  for (const std::string& cmd : cmds) {
    const auto r1 = run_cli(cmd);
    const auto r2 = run_cli(cmd);
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
  }
}

TEST_CASE("output file matches stdout output") {
  TempDir dir;
  const std::string a = dir.file("a.csv", "1,0,0\n0,1,0\n");
  const std::string out = dir.file("out.json", "");
  const auto direct = run_cli("inner --left " + a + " --right " + a);
  const auto filed = run_cli("inner --left " + a + " --right " + a + " --out " + out);
  CHECK(filed.exit_code == 0);
  CHECK(filed.out.empty());
  std::ifstream in(out);
  const std::string written((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
  CHECK(written == direct.out);
}

TEST_CASE("input errors exit 2") {
  TempDir dir;
  SUBCASE("ragged rows") {
    const std::string bad = dir.file("bad.csv", "1,2\n3\n");
    CHECK(run_cli("norm --input " + bad).exit_code == 2);
  }
  SUBCASE("non-numeric token") {
    const std::string bad = dir.file("bad.csv", "1,two\n");
    CHECK(run_cli("norm --input " + bad).exit_code == 2);
  }
  SUBCASE("empty file") {
    const std::string bad = dir.file("bad.csv", "# only a comment\n");
    CHECK(run_cli("norm --input " + bad).exit_code == 2);
  }
  SUBCASE("missing file") {
    CHECK(run_cli("norm --input /nonexistent/no.csv").exit_code == 2);
  }
  SUBCASE("dimension mismatch") {
    const std::string a = dir.file("a.csv", "1,0,0\n0,1,0\n");
    const std::string b = dir.file("b.csv", "1,0\n0,1\n");
    CHECK(run_cli("inner --left " + a + " --right " + b).exit_code == 2);
  }
  SUBCASE("unknown form spec") {
    const std::string a = dir.file("a.csv", "1,0\n");
    CHECK(run_cli("norm --form banana --input " + a).exit_code == 2);
  }
}

TEST_CASE("diagonal form file") {
  TempDir dir;
  const std::string coeffs = dir.file(
      "c.json", R"({"m":3,"n":2,"C":[{"idx":[1,2],"value":2.0}]})");
  const std::string a = dir.file("a.csv", "1,0,0\n0,1,0\n");
  const auto r = run_cli("inner --form diagonal:" + coeffs + " --left " + a + " --right " + a);
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out).at("value").get<double>() == doctest::Approx(2.0));
}

TEST_CASE("negative square exits 1") {
  TempDir dir;
  // ambient with a negative eigenvalue is rejected as input, so use the
  // check-axioms bias hook instead for math-failure exercising; norm keeps
  // exit 2 for the malformed ambient
  const std::string g = dir.file("g.csv", "1,0\n0,-1\n");
  const std::string a = dir.file("a.csv", "1,0\n");
  CHECK(run_cli("norm --form gram:" + g + " --input " + a).exit_code == 2);
}
