#include "doctest.h"
#include "support.hpp"
#include "tha/cli.hpp"
#include "tha/error.hpp"
#include "tha/io.hpp"

using testing::data_path;

namespace {

tha::CommandResult cli(std::vector<std::string> args) { return tha::run(args); }

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

TEST_CASE("classify") {
  const auto r = cli({"classify", data_path("chain4.json")});
  CHECK(r.exit_code == 0);
  CHECK(starts_with(r.out, "simple: no, SI: yes, opremum: element 2\n"));
  const auto j = cli({"--format", "json", "classify", data_path("chain3.json")});
  CHECK(j.exit_code == 0);
  const auto doc = tha::Json::parse(j.out);
  CHECK(doc.at("simple") == true);
  CHECK(doc.at("si") == true);
  CHECK(doc.at("agree") == true);
}

TEST_CASE("check-frame") {
  CHECK(cli({"check-frame", data_path("frame3.json")}).exit_code == 0);
  const auto r = cli({"check-frame", data_path("two_cycle.json")});
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("leq.antisymmetric (0,1)") != std::string::npos);
  CHECK(cli({"check-frame", data_path("missing.json")}).exit_code == 2);
  CHECK(cli({"check-frame", data_path("chain3.json")}).exit_code == 2);
}

TEST_CASE("countermodel") {
  const auto r = cli({"countermodel", "--formula", "box p -> p", "--max-size", "3"});
  CHECK(r.exit_code == 0);
  CHECK(starts_with(r.out, "countermodel: "));
  const auto model = r.out.substr(r.out.find("model: {") + 7);
  const auto m = tha::relational_model_from_json(tha::Json::parse(model));
  CHECK(m.frame.size() <= 2);
  const auto none = cli({"countermodel", "--formula", "dia p -> p", "--max-size", "3"});
  CHECK(none.exit_code == 1);
  CHECK(starts_with(none.out, "no countermodel up to 3 points"));
  const auto a = cli({"countermodel", "--formula", "p | (p -> bot)", "--max-size", "4", "--jobs", "1"});
  const auto b = cli({"countermodel", "--formula", "p | (p -> bot)", "--max-size", "4", "--jobs", "4"});
  CHECK(a.out == b.out);
  const auto bad = cli({"countermodel", "--formula", "dia (p & q", "--max-size", "3"});
  CHECK(bad.exit_code == 2);
  CHECK(bad.err.find("position 11") != std::string::npos);
  CHECK(cli({"countermodel", "--formula", "p", "--max-size", "9"}).exit_code == 2);
}

TEST_CASE("eval, spec, clop, filtrate") {
  const auto e = cli({"eval", "--model", data_path("chain2_model.json"), "--formula", "p | (p -> bot)"});
  CHECK(e.exit_code == 1);
  CHECK(e.out.find("valid: no") != std::string::npos);
  CHECK(cli({"eval", "--model", data_path("chain2_model.json"), "--formula", "dia p -> p"}).exit_code == 0);
  const auto s = cli({"spec", data_path("chain4.json")});
  CHECK(s.exit_code == 0);
  const auto f = tha::frame_from_json(tha::Json::parse(s.out));
  CHECK(f == testing::load_frame("frame3.json"));
  const auto c = cli({"clop", data_path("frame3.json")});
  CHECK(tha::Json::parse(c.out) == tha::read_json_file(data_path("chain4.json")));
  CHECK(cli({"filtrate", "--model", data_path("chain2_model.json"), "--formula", "box p"}).exit_code == 0);
  CHECK(cli({"congruences", data_path("chain4.json")}).exit_code == 0);
}

TEST_CASE("enum-frames and roundtrip") {
  const auto r = cli({"enum-frames", "2"});
  CHECK(r.exit_code == 0);
  CHECK(starts_with(r.out, "count: 12\n"));
  CHECK(cli({"roundtrip", data_path("frame10.json")}).exit_code == 0);
  CHECK(cli({"roundtrip", data_path("chain3.json")}).exit_code == 0);
}

TEST_CASE("usage") {
  CHECK(cli({"--help"}).exit_code == 0);
  CHECK(cli({}).exit_code == 2);
  CHECK(cli({"bogus"}).exit_code == 2);
}

TEST_CASE("json round trips") {
  for (const char* name : {"frame3.json", "frame10.json"}) {
    const auto j = tha::read_json_file(data_path(name));
    CHECK(tha::frame_to_json(tha::frame_from_json(j)) == j);
  }
  for (const char* name : {"chain3.json", "chain4.json"}) {
    const auto j = tha::read_json_file(data_path(name));
    CHECK(tha::algebra_to_json(tha::algebra_from_json(j)) == j);
  }
  CHECK_THROWS_AS(tha::frame_from_json(tha::Json::parse(R"({"points":2,"r":[[0,2]]})")), tha::FormatError);
  CHECK_THROWS_AS(tha::algebra_from_json(tha::Json::parse(R"({"n":2,"leq":[],"box":[1,1],"dia":[0,0]})")),
                  tha::FormatError);
}
