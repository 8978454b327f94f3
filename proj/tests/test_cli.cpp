#include "jordanlab/cli.hpp"
#include "jordanlab/counterexamples.hpp"
#include "jordanlab/error.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using jordanlab::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "jordanlab_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("counterexample demonstrations") {
  for (const auto& name : jordanlab::counterexample_names()) {
    CAPTURE(name);
    CHECK(jordanlab::counterexample(name).matches());
    CHECK(call({"counterexample", name}).code == 0);
  }
  CHECK(call({"counterexample", "nope"}).code == 2);
}

TEST_CASE("exit codes") {
  const std::string sx = write_file("sx.txt", "algebra: herm_c:2\ncoords: 0 0 1 0\n");
  const std::string sz = write_file("sz.txt", "algebra: herm_c:2\ncoords: 1 -1 0 0\n");
  const std::string p0 = write_file("p0.txt", "algebra: herm_c:2\ncoords: 1 0 0 0\n");
  const std::string sp = write_file("sp.txt", "algebra: spin:3\ncoords: 1 0 0\n");
  const std::string bad = write_file("bad.txt", "algebra: herm_c:2\ncoords: 1 0\n");

  CHECK(call({"describe", "albert"}).code == 0);
  CHECK(call({"describe", "herm_x:2"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"mul", sx, sz}).code == 0);
  CHECK(call({"mul", sx, sp}).code == 2);
  CHECK(call({"mul", sx, bad}).code == 2);
  CHECK(call({"mul", sx, "/nonexistent/file"}).code == 2);
  CHECK(call({"spectrum", sz}).code == 0);
  CHECK(call({"commute", sx, sz}).code == 0);
  CHECK(call({"report", sx, sz}).code == 0);
  CHECK(call({"report", p0, sz}).code == 0);
  CHECK(call({"seq", p0, p0}).code == 0);
  CHECK(call({"seq", sz, p0}).code == 3);
  CHECK(call({"suite", "spin:3", "--trials", "0"}).code == 2);
  CHECK(call({"--tol", "-1", "commute", sx, sz}).code == 2);
  CHECK(call({"--format", "xml", "commute", sx, sz}).code == 2);
}

TEST_CASE("record output") {
  const std::string sx = write_file("sx.txt", "algebra: herm_c:2\ncoords: 0 0 1 0\n");
  const std::string p0 = write_file("p0.txt", "algebra: herm_c:2\ncoords: 1 0 0 0\n");
  const Result mul = call({"--format", "records", "mul", sx, p0});
  CHECK(mul.out == "record=mul algebra=herm_c:2 coords=0,0,0.5,0\n");
  const Result commute = call({"commute", sx, p0, "--format", "records"});
  CHECK(commute.out.find("operator_commute=false") != std::string::npos);
}

TEST_CASE("suite output is reproducible") {
  const Result a = call({"suite", "herm_c:2", "--trials", "5", "--seed", "9"});
  const Result b = call({"suite", "herm_c:2", "--trials", "5", "--seed", "9"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("suite family=herm_c:2 seed=9 trials=5\n", 0) == 0);
  const Result c = call({"suite", "herm_c:2", "--trials", "5", "--seed", "10"});
  CHECK(c.out != a.out);
}

}
