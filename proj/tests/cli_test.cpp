#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "ideal_ops.hpp"

using namespace gca;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream ss(text);
  std::string l;
  while (std::getline(ss, l))
    if (l == line) return true;
  return false;
}

}  // namespace

TEST_CASE("construction pipeline via stdin/stdout") {
  CliRun s = run({"scroll", "2,5"});
  REQUIRE(s.code == 0);
  CliRun x = run({"project", "--drop", "x5,x6"}, s.out);
  REQUIRE(x.code == 0);
  CliRun b = run({"betti"}, x.out);
  REQUIRE(b.code == 0);
  CHECK(has_line(b.out, "pd 6"));
  CHECK(has_line(b.out, "reg 3"));
  CHECK(has_line(b.out, "beta 1 1 6"));
  CHECK(has_line(b.out, "beta 3 3 32"));
  CHECK(has_line(b.out, "beta 6 3 2"));
}

TEST_CASE("betti of the zero ideal") {
  CliRun b = run({"betti"}, "ring p 32003 vars x0,x1 order degrevlex\n");
  REQUIRE(b.code == 0);
  CHECK(has_line(b.out, "beta 0 0 1"));
  CHECK(b.out.find("beta 1") == std::string::npos);
}

TEST_CASE("emitted ideal files round-trip") {
  CliRun s = run({"scroll", "2,5"});
  CliRun g1 = run({"ideal", "--gb"}, s.out);
  REQUIRE(g1.code == 0);
  CliRun g2 = run({"ideal", "--gb"}, g1.out);
  CHECK(g1.out == g2.out);

  // the re-parsed ideal is the same ideal
  std::istringstream a(s.out), b(g1.out);
  std::string header;
  std::getline(a, header);
  RingPtr R = parse_ring_header(header);
  auto read_rest = [&](std::istream& in) {
    std::vector<std::string> polys;
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) polys.push_back(line);
    return ideal_from_strings(R, polys);
  };
  std::getline(b, header);
  CHECK(ideal_equal(read_rest(a), read_rest(b)));
}

TEST_CASE("seeded commands are reproducible") {
  CliRun a = run({"maxreg-curve", "-r", "5", "-d", "7", "--seed", "1"});
  CliRun b = run({"maxreg-curve", "-r", "5", "-d", "7", "--seed", "1"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CliRun c = run({"maxreg-curve", "-r", "5", "-d", "7", "--seed", "2"});
  CHECK(a.out != c.out);
}

TEST_CASE("curve check pipeline passes") {
  CliRun c = run({"maxreg-curve", "-r", "6", "-d", "8", "--seed", "1"});
  REQUIRE(c.code == 0);
  CliRun t = run({"thm32-check"}, c.out);
  CHECK(t.code == 0);
  CHECK(t.out.find("FAIL") == std::string::npos);
  CHECK(t.out.find("PASS v_5: 3 vs d-r+1 = 3") != std::string::npos);
}

TEST_CASE("split section points are in linearly general position") {
  CliRun p = run({"maxreg-curve", "-r", "5", "-d", "7", "--seed", "3",
                  "--emit", "points"});
  REQUIRE(p.code == 0);
  CliRun l = run({"lgp"}, p.out);
  CHECK(l.code == 0);
  CHECK(has_line(l.out, "points 8 ambient 4"));
  CHECK(has_line(l.out, "PASS linearly general position"));
}

TEST_CASE("exit codes") {
  // usage / parse errors
  CHECK(run({"betti", "/nonexistent/ideal.txt"}).code == 2);
  CHECK(run({"scroll", "2;5"}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"colon"}, "ring p 32003 vars x0,x1 order degrevlex\n1*x0^1\n")
            .code == 2);
  CHECK(run({"cohomology", "--window", "0:x"},
            "ring p 32003 vars x0,x1 order degrevlex\n")
            .code == 2);
  // computation error: section by a zerodivisor
  CliRun z = run({"section", "-f", "x0"},
                 "ring p 32003 vars x0,x1,x2 order degrevlex\n1*x0^1\n");
  CHECK(z.code == 3);
  // violation: three collinear points
  CliRun l = run({"lgp"}, "1 0 0\n0 1 0\n1 1 0\n0 0 1\n");
  CHECK(l.code == 4);
  CHECK(has_line(l.out, "FAIL degenerate subset 0 1 2"));
}

TEST_CASE("reproduce accepts published and internal ids") {
  CliRun a = run({"reproduce", "7.1"});
  CHECK(a.code == 0);
  CHECK(a.out.find("FAIL") == std::string::npos);
  CliRun b = run({"reproduce", "sreg-gap"});
  CHECK(b.out == a.out);
  CHECK(run({"reproduce", "9.9"}).code == 2);
}
