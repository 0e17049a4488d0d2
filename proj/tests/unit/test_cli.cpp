#include <cstdlib>

#include "../cli_runner.hpp"
#include "doctest.h"
#include "ucycle/golden.hpp"
#include "ucycle/ucy_io.hpp"
#include "ucycle/verify.hpp"

using namespace ucycle;
using cli_runner::run;
using cli_runner::scratch;
using cli_runner::write_file;

TEST_CASE("gen then verify round trip") {
  struct Case {
    const char* args;
    std::size_t length;
  };
  for (auto c : {Case{"--n 10 --t 3 --method inductive", 220}, Case{"--n 8 --t 3 --method doubling", 120},
                 Case{"--n 7 --t 3 --method search", 84}, Case{"--n 11 --t 3 --method auto", 286},
                 Case{"--n 8 --t 3 --kind subset", 56}, Case{"--n 5 --t 2", 15}}) {
    CAPTURE(c.args);
    auto g = run(std::string("gen ") + c.args);
    REQUIRE(g.code == 0);
    auto f = parse_ucy(g.out);
    CHECK(f.word.size() == c.length);
    auto path = write_file("rt.ucy", g.out);
    const bool subset = std::string(c.args).find("subset") != std::string::npos;
    CHECK(run("verify --input " + path + (subset ? " --kind subset" : "")).code == 0);
  }
}

TEST_CASE("gen output is byte-identical across runs") {
  CHECK(run("gen --n 14 --t 3").out == run("gen --n 14 --t 3").out);
  CHECK(run("gen --n 10 --t 3 --kind subset").out == run("gen --n 10 --t 3 --kind subset").out);
}

TEST_CASE("gen writes files and provenance") {
  auto out = scratch("g13.ucy");
  auto prov = scratch("g13.prov");
  REQUIRE(run("gen --n 13 --t 3 --method inductive --out " + out + " --provenance " + prov).code == 0);
  CHECK(read_ucy(out).word.size() == 455);
  std::ifstream in(prov);
  std::string text((std::istreambuf_iterator<char>(in)), {});
  CHECK(text == "n=10 path=pattern\nn=13 path=repaired\n");
}

TEST_CASE("gen exit codes") {
  CHECK(run("gen --n 9 --t 3 --method auto").code == 2);
  CHECK(run("gen --n 6 --t 3 --kind subset").code == 2);
  CHECK(run("gen --n 11 --t 3 --method inductive").code == 2);
  CHECK(run("gen --n 10 --t 3 --method bogus").code == 2);
  CHECK(run("gen --t 3").code == 2);
  CHECK(run("gen --n 8 --t 3 --method inductive --kind subset").code == 2);
  CHECK(run("gen --n 16 --t 3 --kind subset --budget 5").code == 3);
  // odd n asked of doubling is rerouted, with a warning
  auto r = run("gen --n 11 --t 3 --method doubling", true);
  CHECK(r.code == 0);
  CHECK(r.out.find("warning") != std::string::npos);
}

TEST_CASE("budget from the environment") {
  CHECK(run("gen --n 16 --t 3 --kind subset").code == 0);
  auto r = cli_runner::Run{};
  {
    std::string cmd = "env UCYCLE_BUDGET=5 '" + std::string(UCYCLE_CLI_PATH) + "' gen --n 16 --t 3 --kind subset >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    r.code = WEXITSTATUS(status);
  }
  CHECK(r.code == 3);
  {
    std::string cmd = "env UCYCLE_BUDGET=zero '" + std::string(UCYCLE_CLI_PATH) + "' gen --n 8 --t 3 >/dev/null 2>&1";
    CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 2);
  }
}

TEST_CASE("gen with a supplied subset cycle") {
  auto x = write_file("x8.ucy", format_ucy(parse_compact(8, golden::kX), 3));
  auto g = run("gen --n 8 --t 3 --method doubling --subset-input " + x);
  REQUIRE(g.code == 0);
  CHECK(verify_multiset_ucycle(parse_ucy(g.out).word, 3).ok);
  auto bad = write_file("xbad.ucy", format_ucy(parse_compact(8, golden::kXPrimeGiven), 3));
  CHECK(run("gen --n 8 --t 3 --method doubling --subset-input " + bad).code == 1);
  CHECK(run("gen --n 10 --t 3 --method doubling --subset-input " + x).code == 2);
  CHECK(run("gen --n 8 --t 3 --method doubling --subset-input " + scratch("missing.ucy")).code == 2);
}

TEST_CASE("verify") {
  auto s = write_file("s.ucy", format_ucy(parse_compact(4, golden::kS), 3));
  auto r = run("verify --input " + s);
  CHECK(r.code == 0);
  CHECK(r.out.find("ok: true") != std::string::npos);
  auto x = write_file("x.ucy", format_ucy(parse_compact(8, golden::kX), 3));
  CHECK(run("verify --input " + x + " --kind subset").code == 0);
  CHECK(run("verify --input " + x).code == 1);

  auto cut = write_file("cut.ucy", "4 3\n1 1 1 4 4 4 2 2 2 3 3 3 1 2 1 2 4 3 4\n");
  auto rc = run("verify --input " + cut);
  CHECK(rc.code == 1);
  CHECK(rc.out.find("missing_count: 0") == std::string::npos);

  CHECK(run("verify --input " + write_file("junk.ucy", "4 3\n1 2 x\n")).code == 2);
  CHECK(run("verify --input " + scratch("nope.ucy")).code == 2);
  CHECK(run("verify").code == 2);
}

TEST_CASE("pairs") {
  auto x = write_file("xp.ucy", format_ucy(parse_compact(8, golden::kX), 3));
  auto r = run("pairs --input " + x);
  CHECK(r.code == 0);
  CHECK(r.out.find("missing: {1,5} {2,6} {3,7} {4,8}") != std::string::npos);
  CHECK(r.out.find("matching: true") != std::string::npos);

  auto g = run("gen --n 10 --t 3 --kind subset");
  auto y = write_file("y.ucy", g.out);
  auto ry = run("pairs --input " + y);
  CHECK(ry.code == 0);
  CHECK(ry.out.find("missing_count: 0") != std::string::npos);

  auto s = write_file("sp.ucy", format_ucy(parse_compact(4, golden::kS), 3));
  CHECK(run("pairs --input " + s).code == 1);
}

TEST_CASE("count") {
  auto r = run("count --n 4 --t 3");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("4 3 2 2 true ", 0) == 0);
  CHECK(run("count --n 4 --t 3 --threads 3").out == r.out);
  CHECK(run("count --n 3 --t 3").code == 2);
  auto s = run("count --n 5 --t 3 --budget 1000");
  CHECK(s.code == 3);
  CHECK(s.out.find(" false ") != std::string::npos);
  auto f = run("count --n 3 --t 2 --reflect", true);
  CHECK(f.code == 0);
  CHECK(f.out.find("reflection: 1") != std::string::npos);
}
