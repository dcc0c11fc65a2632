#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

using json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(APMONO_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json run_json(const std::string& args, int expect_code = 0) {
  Run r = run(args + " --json");
  CHECK(r.code == expect_code);
  return json::parse(r.out);
}

bool has_line(const std::string& out, const std::string& line) {
  return ("\n" + out).find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST_CASE("count") {
  Run b22 = run("count --group zn --n 22 --k 4 --coloring B22");
  CHECK(b22.code == 0);
  CHECK(has_line(b22.out, "count: 42"));
  Run b74 = run("count --group zn --n 74 --k 5 --coloring B74");
  CHECK(has_line(b74.out, "count: 146"));
  Run zeros = run("count --group interval --n 74 --k 5 --coloring all-zeros");
  CHECK(has_line(zeros.out, "count: 648"));

  Run split = run("count --group zn --n 22 --k 4 --coloring B22 --filter by-d");
  CHECK(has_line(split.out, "d=0: 22"));
  CHECK(has_line(split.out, "d=11: 20"));
  Run nondeg = run("count --group zn --n 74 --k 5 --coloring B74 --filter nondeg");
  CHECK(has_line(nondeg.out, "count: 0"));
  Run bits = run("count --group zn --n 4 --k 3 --coloring 0101");
  CHECK(has_line(bits.out, "count: 8"));
}

TEST_CASE("count from a file") {
  auto path = std::filesystem::temp_directory_path() / ("apmono_cli_" + std::to_string(::getpid()) + ".txt");
  {
    std::ofstream f(path);
    f << "(1,1,1,0,1,1,0,1,1,1,0,0,0,1,0,0,1,0,0,0)\n";
  }
  Run r = run("count --group zn --n 20 --k 4 --file " + path.string());
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "count: 36"));
  std::filesystem::remove(path);
}

TEST_CASE("count json agrees with text") {
  json j = run_json("count --group zn --n 22 --k 4 --coloring B22 --filter by-d");
  CHECK(j["command"] == "count");
  CHECK(j["results"]["count"] == 42);
  CHECK(j["results"]["by_difference"]["11"] == 20);
  CHECK(j["exact"]["num"] == 42);
  CHECK(j["exact"]["den"] == 1);
  CHECK(j["exhaustive"] == true);
  CHECK(j["inputs"]["n"] == 22);
  // Round trip through text.
  CHECK(json::parse(j.dump()) == j);
}

TEST_CASE("density") {
  Run r = run("density --block B20 --k 4 --r 1");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "density: 17/150"));
  CHECK(has_line(r.out, "decimal: 0.1133333333"));
  CHECK(has_line(run("density --block B74 --k 5 --r 37").out, "density: 289/10952"));
  CHECK(has_line(run("density --block B22 --k 4 --r 0").out, "density: 21/242"));
  json j = run_json("density --block b74 --k 5 --r 2");
  CHECK(j["results"]["density"] == "3647/65712");
  CHECK(j["exact"]["num"] == 3647);
  CHECK(j["exact"]["den"] == 65712);
  CHECK(j["results"]["class_counts"]["0000"] == 146);
  // Arbitrary blocks as bit strings.
  CHECK(has_line(run("density --block 11101101110001001000 --k 4 --r 3").out, "density: 17/150"));
  // Products of a template with an inner block.
  CHECK(has_line(run("density --block B11xB20 --k 4 --r 2").out, "density: 8543/72600"));
  CHECK(has_line(run("density --block B11x10 --k 4 --r 2").out, "density: 175/1452"));
  CHECK(has_line(run("density --block B37x10 --k 5 --r 2").out, "density: 3647/65712"));
}

TEST_CASE("verify") {
  Run t = run("verify --suite tables");
  CHECK(t.code == 0);
  CHECK(t.out.find("FAIL") == std::string::npos);
  Run rec = run("verify --suite recursion --seed 5");
  CHECK(rec.code == 0);
  CHECK(rec.out.find("200 random inner colorings") != std::string::npos);
  json j = run_json("verify --suite pick");
  CHECK(j["results"]["failed"] == 0);
  CHECK(j["results"]["checks"][0]["detail"] == "500 polygons");
}

TEST_CASE("search") {
  Run m = run("search --min-zn 20 4");
  CHECK(m.code == 0);
  CHECK(has_line(m.out, "minimum: 36"));
  Run z = run("search --zero-mono 11 4");
  CHECK(has_line(z.out, "orbits (affine+conj): 1"));
  Run pf = run("search --pattern-free 46");
  CHECK(pf.code == 0);
  CHECK(has_line(pf.out, "no F-free coloring of [46]"));
  json j = run_json("search --min-zn 12 4 --workers 2");
  json j1 = run_json("search --min-zn 12 4 --workers 1");
  CHECK(j["results"] == j1["results"]);
  CHECK(j["exhaustive"] == true);
  json mp = run_json("search --min-pattern 48");
  CHECK(mp["results"]["minimum"] == 3);
  CHECK(mp["results"]["minima"]["46"] == 1);
}

TEST_CASE("unproved searches exit 1") {
  json j = run_json("search --min-pattern 60 --budget 1000", 1);
  CHECK(j["exhaustive"] == false);
  CHECK(j["results"]["minimum"].is_null());
  CHECK(j["results"]["lower_bound"].is_number());
  REQUIRE(j["results"]["best_found"].is_number());
  CHECK(j["results"]["best_found"] >= j["results"]["lower_bound"]);
  CHECK(j["results"]["best_witness"].get<std::string>().size() == j["results"]["stopped_at"].get<std::size_t>());
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("count --group zn --n 22 --k 4").code == 2);
  CHECK(run("count --group zn --n 21 --k 4 --coloring B22").code == 2);
  CHECK(run("count --group torus --n 2 --k 4 --coloring 01").code == 2);
  CHECK(run("count --group zn --n 2 --k 4 --coloring 02").code == 2);
  CHECK(run("count --group zn --n 2 --k 4 --coloring 01 --filter odd").code == 2);
  CHECK(run("density --block B20 --k 4 --r 20").code == 2);
  CHECK(run("density --block B20 --k 3 --r 1").code == 2);
  CHECK(run("density --block B11 --k 4 --r 1").code == 2);
  CHECK(run("density --block B20xB20 --k 4 --r 1").code == 2);
  CHECK(run("verify --suite everything").code == 2);
  CHECK(run("search").code == 2);
  CHECK(run("search --min-zn 40 4").code == 2);
  CHECK(run("search --min-zn 10 4 --zero-mono 11 4").code == 2);
  CHECK(run("search --min-pattern 10 --budget 5x").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("count --help").code == 0);
}
