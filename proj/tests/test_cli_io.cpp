#include "doctest.h"

#include <random>
#include <sstream>

#include "cli.hpp"
#include "rankmap/io.hpp"

using namespace rankmap;
using nlohmann::json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kCoker2 = R"({"ring":{"kind":"zloc","primes":[2,3]},"module":{"generators":1,"relations":[[2]]}})";

}  // namespace

TEST_CASE("parse: zmod module") {
  const auto f = parse_instance(R"({"ring":{"kind":"zmod","n":12},"module":{"generators":1,"relations":[[2]]}})");
  REQUIRE(f.ring);
  CHECK(*f.ring == RingInstance::zmod(12));
  REQUIRE(f.module);
  CHECK(*f.module == Presentation(RingInstance::zmod(12), 1, {{2}}));
  CHECK_FALSE(f.ordinal);
}

TEST_CASE("parse: ordinal token") {
  const auto f = parse_instance(R"({"ordinal":"w+1"})");
  REQUIRE(f.ordinal);
  CHECK(*f.ordinal == Ordinal::omega(1));
  CHECK_FALSE(f.ring);
}

TEST_CASE("parse: errors") {
  CHECK_THROWS_WITH_AS(parse_instance(R"({"ring":{"kind":"zloc","primes":[2,2]}})"), doctest::Contains("duplicate"),
                       ValidationError);
  const std::string trailing_comma = R"({"ring": {"kind": "zmod", "n": 12,}})";
  try {
    parse_instance(trailing_comma);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    // 1-based offset of the stray brace
    CHECK(e.position() == trailing_comma.find(",}") + 2);
  }
  CHECK_THROWS_WITH_AS(parse_instance(R"({"ring":{"kind":"zmod","n":6},"module":{"generators":2,"relations":[[1]]}})"),
                       doctest::Contains("relation row 0"), ValidationError);
  CHECK_THROWS_AS(parse_instance(R"({"module":{"generators":1}})"), ValidationError);
  CHECK_THROWS_AS(parse_instance(R"({"ring":{"kind":"zmod","n":0}})"), ValidationError);
  CHECK_THROWS_AS(parse_instance(R"({"ring":{"kind":"zloc","primes":[4]}})"), ValidationError);
  CHECK_THROWS_AS(parse_instance(R"({"ring":{"kind":"poly"}})"), ValidationError);
  CHECK_THROWS_AS(parse_instance(R"({"ordinal":"w*2"})"), ValidationError);
  CHECK_THROWS_AS(parse_instance(R"({"ring":{"kind":"zmod","n":6},"extra":1})"), ValidationError);
  CHECK_THROWS_AS(parse_instance("[]"), ValidationError);
  CHECK_THROWS_AS(parse_instance("{}"), ValidationError);
}

TEST_CASE("parse: table ring validation names the axiom") {
  // Z/2 with a non-distributive multiplication: 1*1 = 0.
  const auto bad = R"({"ring":{"kind":"table","elements":["0","1"],"add":[[0,1],[1,0]],"mul":[[0,0],[0,0]]}})";
  CHECK_THROWS_WITH_AS(parse_instance(bad), doctest::Contains("ring axiom violated"), ValidationError);
  const auto noncomm = R"({"ring":{"kind":"table","elements":["0","1"],"add":[[0,1],[1,0]],"mul":[[0,0],[1,1]]}})";
  CHECK_THROWS_WITH_AS(parse_instance(noncomm), doctest::Contains("ring axiom violated"), ValidationError);
  const auto ragged = R"({"ring":{"kind":"table","elements":["0","1"],"add":[[0,1],[1]],"mul":[[0,0],[0,1]]}})";
  CHECK_THROWS_AS(parse_instance(ragged), ValidationError);
  const auto wrong_one =
      R"({"ring":{"kind":"table","elements":["0","1"],"add":[[0,1],[1,0]],"mul":[[0,0],[0,1]],"one":0}})";
  CHECK_THROWS_AS(parse_instance(wrong_one), ValidationError);
  const auto good = R"({"ring":{"kind":"table","elements":["0","1"],"add":[[0,1],[1,0]],"mul":[[0,0],[0,1]]}})";
  CHECK(parse_instance(good).ring->cardinality() == 2);
}

TEST_CASE("round trip: parse, serialize, parse") {
  std::vector<InstanceFile> files;
  files.push_back(parse_instance(kCoker2));
  files.push_back(parse_instance(R"({"ordinal":"w+5"})"));
  files.push_back(parse_instance(R"({"ordinal":7})"));
  files.push_back(parse_instance(R"({"ring":{"kind":"zloc","primes":[]}})"));
  files.push_back(parse_instance(R"({"ring":{"kind":"zmod","n":12},"module":{"generators":2,"relations":[[-1,14]]}})"));
  for (auto tr : {TableRing::f2_quotient(0b111), TableRing::product(TableRing::zmod(2), TableRing::zmod(4))}) {
    InstanceFile f;
    f.ring = RingInstance::table(tr);
    f.module = Presentation(*f.ring, 2, {{1, 2}, {3, 0}});
    f.ordinal = Ordinal::finite(3);
    files.push_back(f);
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto n = static_cast<std::int64_t>(1 + rng() % 40);
    const auto g = rng() % 4;
    const auto nrows = rng() % 4;
    json rows = json::array();
    for (std::size_t r = 0; r < nrows; ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < g; ++c) row.push_back(static_cast<std::int64_t>(rng() % 100) - 50);
      rows.push_back(row);
    }
    files.push_back(instance_from_json({{"ring", {{"kind", "zmod"}, {"n", n}}},
                                        {"module", {{"generators", g}, {"relations", rows}}}}));
  }
  for (const auto& f : files) {
    const auto text = to_json(f).dump();
    const auto again = parse_instance(text);
    CHECK(again == f);
    CHECK(to_json(again).dump() == text);
  }
}

TEST_CASE("cli: exit codes") {
  CHECK(run_cli({}).code == cli::kExitUsage);
  CHECK(run_cli({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run_cli({"verify", "--seed", "x"}).code == cli::kExitUsage);
  CHECK(run_cli({"verify", "--suite", "nope"}).code == cli::kExitUsage);
  CHECK(run_cli({"spec"}, "{\"ring\":").code == cli::kExitUsage);
  CHECK(run_cli({"spec", "/nonexistent/instance.json"}).code == cli::kExitUsage);
  CHECK(run_cli({"rank-map"}, R"({"ordinal":"w"})").code == cli::kExitUsage);
  CHECK(run_cli({"--help"}).code == cli::kExitOk);
}

TEST_CASE("cli: verify --seed 0 --budget 50 --json") {
  const auto r = run_cli({"verify", "--seed", "0", "--budget", "50", "--json"});
  CHECK(r.code == cli::kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["success"] == true);
  CHECK(j["failures"] == 0);
  for (const auto& [suite, counts] : j["suites"].items()) CHECK(counts["fail"] == 0);
  CHECK(j["suites"].size() == 12);
}

TEST_CASE("cli: verify on a single instance and a suite subset") {
  const auto r = run_cli({"verify", "--input", "-", "--suite", "lemma566,th22", "--json"}, kCoker2);
  CHECK(r.code == cli::kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["suites"].size() == 2);
  CHECK(j["hypothesis_necessity_witnesses"].size() == 1);
}

TEST_CASE("cli: ordinal w") {
  const auto r = run_cli({"ordinal", "w"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("spectral=false") != std::string::npos);
  CHECK(r.out.find("no generic point") != std::string::npos);
  const auto j = json::parse(run_cli({"ordinal", "5", "--json"}).out);
  CHECK(j["spectral"] == true);
  CHECK(j["direct_check"] == true);
}

TEST_CASE("cli: rank-map on coker([2]) over Z_(2,3)") {
  const auto r = run_cli({"rank-map", "--json"}, kCoker2);
  CHECK(r.code == cli::kExitOk);
  const auto j = json::parse(r.out);
  auto verdict = [&](const std::string& source, const std::string& target) {
    for (const auto& c : j["continuity"]) {
      if (c["source"] == source && c["target"] == target) return c["continuous"].get<bool>();
    }
    FAIL("missing continuity row");
    return false;
  };
  CHECK(verdict("patch", "discrete"));
  CHECK_FALSE(verdict("zariski", "discrete"));
  CHECK(j["classification"]["projective"] == false);
  CHECK(run_cli({"rank-map"}, kCoker2).out.find("patch    -> discrete         true") != std::string::npos);
}

TEST_CASE("cli: spec and extpow") {
  const auto spec = json::parse(run_cli({"spec", "--json"}, R"({"ring":{"kind":"zloc","primes":[2,3]}})").out);
  CHECK(spec["order"]["points"].size() == 3);
  CHECK(spec["order"]["covers"].size() == 2);
  CHECK(spec["closed_sets"]["patch"].size() == 8);
  CHECK(spec["closed_sets"]["zariski"].size() == 5);

  const auto r = run_cli({"extpow", "--n", "2", "--json"}, R"({"ring":{"kind":"zmod","n":12},"module":{"generators":3}})");
  CHECK(r.code == cli::kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["generators"] == 3);
  for (const auto& c : j["base_change"]) CHECK(c["equal"] == true);
  CHECK(run_cli({"extpow"}, R"({"ring":{"kind":"zmod","n":12},"module":{"generators":3}})").code == cli::kExitUsage);
}
