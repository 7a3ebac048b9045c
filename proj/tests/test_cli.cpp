#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(NEFGL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  char buf[4096];
  while (std::size_t k = fread(buf, 1, sizeof buf, pipe)) out.append(buf, k);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("nefgl_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return (path / name).string();
  }
  std::string read(const std::string& name) const {
    std::ifstream in(path / name);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("transform") {
  TempDir tmp;
  std::string v = tmp.write("v.json", R"({"n": 1, "entries": [["1"]], "domain": "R"})");
  std::string g = tmp.write("g.json", R"({"n": 1, "rows": [["0", "-1"], ["1", "0"]]})");
  std::string id = tmp.write("id.json", R"({"n": 1, "rows": [["1", "0"], ["0", "1"]]})");
  std::string g2 = tmp.write("g2.json", R"({"n": 2, "rows": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]})");

  Run r = run("transform --variance " + v + " --group " + g + " --check-degree --out " + (tmp.path / "o.json").string());
  CHECK(r.code == 0);
  CHECK(tmp.read("o.json").find("m1^3") != std::string::npos);

  std::string v3 = tmp.write("v3.json", R"({"n": 1, "entries": [["-3/2*m1^2 + m1 + 7"]], "domain": "R"})");
  Run same = run("transform --variance " + v3 + " --group " + id);
  CHECK(same.code == 0);
  auto j = nlohmann::json::parse(same.out);
  CHECK(j["entries"][0][0] == "-3/2*m1^2 + m1 + 7");

  CHECK(run("transform --variance " + v + " --group " + g2).code == 2);
  CHECK(run("transform --variance " + v).code == 2);
  std::string bad = tmp.write("bad.json", R"({"n": 1, "entries": [["m1 +"]]})");
  CHECK(run("transform --variance " + bad + " --group " + g).code == 2);
}

TEST_CASE("compose") {
  TempDir tmp;
  std::string v = tmp.write("v.json", R"j({"n": 1, "entries": [["m1 + m1^2"]], "domain": "(0,inf)"})j");
  std::string a = tmp.write("a.json", R"({"n": 1, "rows": [["1", "2"], ["3", "1"]]})");
  std::string b = tmp.write("b.json", R"({"n": 1, "rows": [["0", "1"], ["-1", "5"]]})");
  Run r = run("compose --left " + a + " --right " + b + " --variance " + v);
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["rows"][0][0] == "-2");
  CHECK(j["rows"][1][1] == "8");
}

TEST_CASE("classify-cubic") {
  CHECK(run("classify-cubic \"m1 - m1^2\"").out == "X(X+1)\n");
  CHECK(run("classify-cubic 1").out == "X^3\n");
  CHECK(run("classify-cubic \"m1^2 + 1\"").out == "X^2+1\n");
  CHECK(run("classify-cubic m1").out == "X^2\n");
  CHECK(run("classify-cubic \"m1^4\"").code == 2);
  CHECK(run("classify-cubic \"m1 +\"").code == 2);
}

TEST_CASE("catalog and recover") {
  TempDir tmp;
  Run c = run("catalog --family III --n 2 --out " + (tmp.path / "v.json").string());
  CHECK(c.code == 0);
  Run r = run("recover --variance " + (tmp.path / "v.json").string() + " --max-degree 3");
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string header, first, second;
  std::getline(lines, header);
  std::getline(lines, first);
  CHECK(header == "k_1\tk_2\tmu_numerator\tmu_denominator");
  CHECK(first == "0\t0\t1\t1");
  CHECK(r.out.find("1\t1\t2\t1") != std::string::npos);

  std::string gauss = tmp.write("g.json", R"({"n": 1, "entries": [["1"]]})");
  CHECK(run("recover --variance " + gauss + " --max-degree 3").code == 1);
  CHECK(run("catalog --family IV --n 2 --k 0").code == 2);
}

TEST_CASE("lagrange") {
  Run r = run("lagrange --g \"exp(z1)\" --g0 z1 --max-degree 4");
  CHECK(r.code == 0);
  CHECK(r.out == "k_1\tnumerator\tdenominator\n0\t0\t1\n1\t1\t1\n2\t1\t1\n3\t3\t2\n4\t8\t3\n");
  CHECK(run("lagrange --g \"z1\" --max-degree 3").code != 0);
}

TEST_CASE("rouques") {
  Run r = run("rouques --semigroup poisson --lambda 1 --c 1 --kmax 3");
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string header, line;
  std::getline(lines, header);
  CHECK(header == "k\tmass");
  std::getline(lines, line);
  std::getline(lines, line);
  std::getline(lines, line);
  CHECK(std::stod(line.substr(line.find('\t') + 1)) == doctest::Approx(1.5 * std::exp(-3.0)));

  Run chk = run("rouques-check --suite cumulant");
  CHECK(chk.code == 0);
  CHECK(nlohmann::json::parse(chk.out)["status"] == "pass");
  CHECK(run("rouques-check --suite nope").code == 2);
}

TEST_CASE("verify") {
  Run a = run("verify --suite theorem54 --seed 7 --cases 10");
  Run b = run("verify --suite theorem54 --seed 7 --cases 10");
  CHECK(a.code == 0);
  auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
  ja.erase("wall_time_s");
  jb.erase("wall_time_s");
  CHECK(ja == jb);
  CHECK(run("verify --suite nonexistent").code == 2);
  CHECK(run("").code == 2);
}

}
