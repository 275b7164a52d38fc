#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "liepic/cli.hpp"

using namespace liepic;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

struct CaptureOut {
  std::stringstream buffer;
  std::streambuf* old;
  CaptureOut() : old(std::cout.rdbuf(buffer.rdbuf())) {}
  ~CaptureOut() { std::cout.rdbuf(old); }
};

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / name; }

}  // namespace

TEST_CASE("info prints the root data") {
  CaptureOut cap;
  CHECK(run_cli({"info", "--group", "C2"}) == 0);
  std::string out = cap.buffer.str();
  CHECK(out.find("highest root coefficients: 2 1") != std::string::npos);
  CHECK(out.find("weyl group order: 8") != std::string::npos);
  CHECK(out.find("flavor self_dual") != std::string::npos);
}

TEST_CASE("sample writes a header-only file for count 0") {
  auto out = temp_file("liepic_test_empty.csv");
  CHECK(run_cli({"sample", "--group", "A2", "--count", "0", "--seed", "1", "--out",
                 out.string()}) == 0);
  CHECK(slurp(out) == "x,y\n");
  fs::remove(out);
}

TEST_CASE("identical sample invocations are byte identical") {
  auto f1 = temp_file("liepic_test_s1.csv");
  auto f2 = temp_file("liepic_test_s2.csv");
  for (const auto& f : {f1, f2})
    CHECK(run_cli({"sample", "--group", "G2", "--count", "200", "--seed", "9", "--out",
                   f.string()}) == 0);
  std::string a = slurp(f1), b = slurp(f2);
  CHECK(!a.empty());
  CHECK(a == b);
  fs::remove(f1);
  fs::remove(f2);
}

TEST_CASE("A1 sampling uses the x-only layout") {
  auto out = temp_file("liepic_test_a1.csv");
  CHECK(run_cli({"sample", "--group", "A1", "--count", "3", "--seed", "4", "--out",
                 out.string()}) == 0);
  std::string text = slurp(out);
  CHECK(text.rfind("x\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);
  fs::remove(out);
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run_cli({"sample", "--group", "E8", "--count", "1", "--seed", "1", "--out",
                 "/tmp/x.csv"}) == 1);
  CHECK(run_cli({"density", "--group", "A2", "--out", "/tmp/x.csv"}) == 1);
  CHECK(run_cli({"density", "--group", "A1", "--out", "/tmp/x.csv"}) == 1);
  CHECK(run_cli({"boundary", "--group", "C2", "--segments", "1", "--out", "/tmp/x.csv"}) == 1);
  CHECK(run_cli({"sample", "--group", "C2"}) == 1);     // missing --out
  CHECK(run_cli({"nonsense"}) == 1);
  CHECK(run_cli({"sample", "--group", "C2", "--count", "1", "--seed", "1", "--out",
                 "/nonexistent-dir/x.csv"}) == 1);
}

TEST_CASE("boundary CSV covers the three walls") {
  auto out = temp_file("liepic_test_b.csv");
  CHECK(run_cli({"boundary", "--group", "C2", "--segments", "8", "--out", out.string()}) == 0);
  std::string text = slurp(out);
  CHECK(text.rfind("wall,t,x,y\n", 0) == 0);
  CHECK(text.find("\n1,") != std::string::npos);
  CHECK(text.find("\n2,") != std::string::npos);
  CHECK(text.find("\n3,") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 3 * 9);
  fs::remove(out);
}

TEST_CASE("density grid CSV and SVG outputs") {
  auto csv = temp_file("liepic_test_d.csv");
  CHECK(run_cli({"density", "--group", "C2", "--grid", "24,30", "--out", csv.string()}) == 0);
  std::string text = slurp(csv);
  CHECK(text.rfind("x,y,phi\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 24 * 30);
  fs::remove(csv);

  auto svg = temp_file("liepic_test_d.svg");
  CHECK(run_cli({"density", "--group", "G2", "--grid", "32", "--format", "svg", "--out",
                 svg.string()}) == 0);
  std::string doc = slurp(svg);
  CHECK(doc.find("<svg") != std::string::npos);
  CHECK(doc.find("data-bbox") != std::string::npos);
  fs::remove(svg);
}

TEST_CASE("boundary SVG output") {
  auto svg = temp_file("liepic_test_b.svg");
  CHECK(run_cli({"boundary", "--group", "A2", "--segments", "32", "--format", "svg", "--out",
                 svg.string()}) == 0);
  std::string doc = slurp(svg);
  CHECK(std::count(doc.begin(), doc.end(), '\n') > 3);
  CHECK(doc.find("polyline") != std::string::npos);
  fs::remove(svg);
}

TEST_CASE("check subcommand runs the A1 subset") {
  CaptureOut cap;
  CHECK(run_cli({"check", "--group", "A1"}) == 0);
  std::string out = cap.buffer.str();
  CHECK(out.find("PASS 6. rank-1 base case [A1]") != std::string::npos);
  CHECK(out.find("FAIL") == std::string::npos);
}
