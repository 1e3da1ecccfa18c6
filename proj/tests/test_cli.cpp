#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

std::string cli() {
  const char* path = std::getenv("TALPHA_CLI");
  REQUIRE_MESSAGE(path != nullptr, "TALPHA_CLI is not set");
  return path;
}

// Runs the CLI with stderr discarded; env is a prefix such as "TALPHA_SEED=4".
Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = (env.empty() ? "" : env + " ") + "'" + cli() + "' " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  for (std::size_t k; (k = fread(buf, 1, sizeof buf, p)) > 0;) r.out.append(buf, k);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("talpha-cli-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::string read(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

bool all_ok(const Json& report) {
  for (const auto& a : report["assertions"])
    if (!a["ok"].get<bool>()) return false;
  return report["ok"].get<bool>();
}

}  // namespace

TEST_CASE("decompose then validate a hole") {
  TempDir dir;
  REQUIRE(run("gen hole 9 -o " + (dir / "c9.gr")).code == 0);

  const Run d = run("decompose " + (dir / "c9.gr") + " --td-out " + (dir / "c9.td"));
  REQUIRE(d.code == 0);
  const Json dj = Json::parse(d.out);
  CHECK(dj["command"] == "decompose");
  CHECK(all_ok(dj));
  CHECK(dj["outputs"]["td"] == dir / "c9.td");
  CHECK(dj["result"]["stats"]["independence"] == 2);

  const Run v = run("validate " + (dir / "c9.gr") + " " + (dir / "c9.td"));
  REQUIRE(v.code == 0);
  const Json vj = Json::parse(v.out);
  CHECK(vj["result"]["valid"] == true);
  CHECK(vj["result"]["stats"]["independence"] == 2);
  CHECK(vj["result"]["stats"]["cover"] == 2);
  CHECK(vj["result"]["stats"]["width"] == 2);

  // A decomposition that misses an edge is reported, not rejected.
  write(dir / "bad.td", "s td 2 2 9\nb 1 1 2 3\nb 2 4 5 6 7 8 9\n1 2\n");
  const Run bad = run("validate " + (dir / "c9.gr") + " " + (dir / "bad.td"));
  CHECK(bad.code == 1);
  CHECK(Json::parse(bad.out)["result"]["valid"] == false);
}

TEST_CASE("structure search and class check") {
  TempDir dir;
  REQUIRE(run("gen theta 2 2 2 -o " + (dir / "k23.gr")).code == 0);
  const Run s = run("structure theta " + (dir / "k23.gr"));
  REQUIRE(s.code == 0);
  const Json sj = Json::parse(s.out);
  CHECK(sj["result"]["status"] == "found");
  CHECK(sj["result"]["witness"]["verified"] == true);

  const Run c = run("check " + (dir / "k23.gr"));
  REQUIRE(c.code == 0);
  CHECK(Json::parse(c.out)["result"]["c"] == "out");

  CHECK(run("structure nonsense " + (dir / "k23.gr")).code == 2);
}

TEST_CASE("mwis against the oracle") {
  TempDir dir;
  REQUIRE(run("gen hole 7 -o " + (dir / "c7.gr")).code == 0);
  std::string w;
  for (int v = 1; v <= 7; ++v) w += "w " + std::to_string(v) + " 1 1\n";
  write(dir / "unit.w", w);
  const Run m = run("mwis " + (dir / "c7.gr") + " " + (dir / "unit.w") + " --oracle");
  REQUIRE(m.code == 0);
  const Json mj = Json::parse(m.out);
  CHECK(all_ok(mj));
  CHECK(mj["result"]["td_dp"]["value"] == "3");
  CHECK(mj["result"]["brute_force"]["value"] == "3");

  write(dir / "short.w", "w 1 1 1\n");
  CHECK(run("mwis " + (dir / "c7.gr") + " " + (dir / "short.w")).code == 2);
}

TEST_CASE("separator oracle") {
  TempDir dir;
  REQUIRE(run("gen hole 9 -o " + (dir / "c9.gr")).code == 0);
  write(dir / "w", "default 0\nw 1 2 1\nw 5 1 1\nw 8 1 1\n");
  const Run o = run("oracle " + (dir / "c9.gr") + " " + (dir / "w"));
  REQUIRE(o.code == 0);
  const Json oj = Json::parse(o.out);
  CHECK(all_ok(oj));
  CHECK(oj["result"]["normalized_by"] == "4");
  CHECK(oj["result"]["findings"].empty());
  CHECK_FALSE(oj["result"]["vertices"].empty());
}

TEST_CASE("usage and input errors") {
  TempDir dir;
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("check " + (dir / "missing.gr")).code == 2);
  CHECK(run("gen wheel 6 1 2").code == 2);
  write(dir / "junk.gr", "p edge 2 1\ne 1 5\n");
  CHECK(run("check " + (dir / "junk.gr")).code == 2);
  CHECK(run("gen hole 5", "TALPHA_SEED=abc").code == 2);
}

TEST_CASE("seeded output is reproducible") {
  const Run a = run("--seed 7 gen mixed --n 10");
  const Run b = run("--seed 7 gen mixed --n 10");
  const Run env = run("gen mixed --n 10", "TALPHA_SEED=7");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == env.out);

  TempDir dir;
  write(dir / "g.gr", a.out);
  const Run d1 = run("decompose " + (dir / "g.gr"));
  const Run d2 = run("decompose " + (dir / "g.gr"));
  CHECK(d1.code == 0);
  CHECK(d1.out == d2.out);
  CHECK(Json::parse(d1.out)["seed"] == 0);
  CHECK(Json::parse(run("decompose " + (dir / "g.gr"), "TALPHA_SEED=7").out)["seed"] == 7);
}

TEST_CASE("corpus manifest") {
  TempDir dir;
  const std::string out = dir / "corpus";
  REQUIRE(run("--seed 3 gen corpus --count 6 --n-min 6 --n-max 9 --kind wheel-free --out-dir " + out).code == 0);
  std::ifstream manifest(out + "/manifest.jsonl");
  int lines = 0;
  for (std::string line; std::getline(manifest, line); ++lines) {
    const Json j = Json::parse(line);
    CHECK(j["seed"] == 3 + lines);
    if (j["path"].is_null()) continue;
    CHECK(j["verdict"] == "in");
    CHECK(fs::exists(out + "/" + j["path"].get<std::string>()));
  }
  CHECK(lines == 6);

  const std::string first = read(out + "/manifest.jsonl");
  REQUIRE(run("--seed 3 gen corpus --count 6 --n-min 6 --n-max 9 --kind wheel-free --out-dir " + out).code == 0);
  CHECK(read(out + "/manifest.jsonl") == first);
}

TEST_CASE("bench csv") {
  const Run b = run("--seed 1 bench --count 3 --n-min 6 --n-max 8 --threads 2");
  REQUIRE(b.code == 0);
  std::istringstream in(b.out);
  std::string header;
  std::getline(in, header);
  CHECK(header.rfind("seed,n,m,", 0) == 0);
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == 3);
}
