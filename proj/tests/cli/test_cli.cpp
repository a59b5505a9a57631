#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <random>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(W123_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("w123-cli-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string flag() const { return "--cache-dir " + path.string(); }
};

}  // namespace

TEST_CASE("count examples") {
  auto a = run("--no-cache count --r 1 --nmax 5");
  CHECK(a.code == 0);
  CHECK(a.out == "1 1 2 5 14 42\n");
  auto brute = run("--no-cache count --r 2 --nmax 3 --method brute");
  auto sch = run("--no-cache count --r 2 --nmax 3 --method scheme");
  CHECK(brute.code == 0);
  CHECK(brute.out == "1 1 6 43\n");
  CHECK(brute.out == sch.out);
  CHECK(run("--no-cache count --r 2 --nmax 0").out == "1\n");
  auto bfile = run("--no-cache count --r 1 --nmax 3 --format bfile");
  CHECK(bfile.out.find("\n0 1\n1 1\n2 2\n3 5\n") != std::string::npos);
}

TEST_CASE("scheme output") {
  auto s = run("--no-cache scheme --r 2");
  CHECK(s.code == 0);
  CHECK(s.out.find("G00 = 1 + x*G00*G01 + x*G01*G11") != std::string::npos);
  CHECK(s.out.find("G01 = x*G00^2 + x*G01^2") != std::string::npos);
  CHECK(s.out.find("G11 = x*G00*G01 + x*G01*G11 + x*G01") != std::string::npos);
}

TEST_CASE("json output is deterministic") {
  TempDir d;
  for (const char* args : {"count --r 3 --nmax 12 --format json", "eliminate --r 2 --format json",
                           "guess --r 2 --format json", "asympt --r 1 --nmax 300 --format json"}) {
    auto a = run("--no-cache " + std::string(args));
    auto b = run("--no-cache " + std::string(args));
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out).is_object());
    auto cold = run(d.flag() + " " + args);
    auto warm = run(d.flag() + " " + args);
    CHECK(cold.out == a.out);
    CHECK(warm.out == a.out);
  }
  CHECK(!fs::is_empty(d.path));
}

TEST_CASE("cached linear-rec after a guess") {
  TempDir d;
  CHECK(run(d.flag() + " count --r 4 --nmax 8 --method linear-rec").code == 6);
  CHECK(run(d.flag() + " guess --r 4").code == 0);
  auto lin = run(d.flag() + " count --r 4 --nmax 8 --method linear-rec");
  auto sch = run("--no-cache count --r 4 --nmax 8 --method scheme");
  CHECK(lin.code == 0);
  CHECK(lin.out == sch.out);
}

TEST_CASE("exit codes") {
  CHECK(run("--no-cache eliminate --r 2").code == 0);
  CHECK(run("--no-cache asympt --r 1 --nmax 300 --tol 0.01").code == 0);
  // A tolerance nobody can meet at 60 terms fails the verification.
  CHECK(run("--no-cache asympt --r 2 --nmax 60 --tol 1e-30").code == 1);
  CHECK(run("--no-cache count --r 0 --nmax 3").code == 2);
  CHECK(run("--no-cache count --r 1 --nmax 3 --method nope").code == 2);
  CHECK(run("--no-cache frobnicate").code == 2);
  CHECK(run("--no-cache eliminate --r 3 --backend buchberger --timeout 0.01").code == 3);
  CHECK(run("--no-cache count --r 3 --nmax 5 --method brute").code == 4);
  CHECK(run("--no-cache asympt --r 1 --nmax 20").code == 5);
  CHECK(run("--no-cache count --r 5 --nmax 5 --method linear-rec").code == 6);
}
