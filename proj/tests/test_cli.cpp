#include <doctest.h>

#include <nielsen/cli.hpp>

#include <json.hpp>

#include <sstream>

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = nielsen::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(NIELSEN_FIXTURES) + "/" + name; }

bool has(const std::string& s, const std::string& what) { return s.find(what) != std::string::npos; }

const std::string psu2_neg1 = R"({"matrix":[[-1]],"group":[2],"dimension":3})";

}  // namespace

TEST_CASE("lefschetz and dold") {
  const auto r = run({"lefschetz", "--input", fixture("rotation.json"), "--n", "4"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "L(1) = 2"));
  CHECK(has(r.out, "L(2) = 4"));
  CHECK(has(r.out, "L(4) = 0"));

  const auto d = run({"dold", "--n", "4", "--format", "json"}, R"({"matrix":[[0,-1],[1,0]],"group":[],"dimension":6})");
  REQUIRE(d.code == 0);
  const auto j = nlohmann::json::parse(d.out);
  CHECK(j["expansion"]["values"]["4"] == "-1");
  CHECK(j["dold"] == true);
}

TEST_CASE("spectrum") {
  const auto r = run({"spectrum", "-i", fixture("rotation.json")});
  CHECK(r.code == 0);
  CHECK(has(r.out, "characteristic polynomial: x^2 + 1"));
  CHECK(has(r.out, "all moduli <= 1: yes"));
  CHECK(has(r.out, "d = 4"));
}

TEST_CASE("realizable") {
  auto r = run({"realizable", "--input", fixture("seq_1_3.json"), "--dimension", "3"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "realizable: yes"));
  CHECK(has(r.out, "d_set = {3}"));
  r = run({"realizable", "-m", "3"}, R"({"horizon":3,"kind":"coefficients","values":{"1":2,"3":1}})");
  CHECK(r.code == 0);
  CHECK(has(r.out, "realizable: no"));
  r = run({"realizable"}, R"({"horizon":3,"kind":"coefficients","values":{"1":2,"3":1}})");
  CHECK(r.code == 2);
  // values failing the congruences: rejected as input
  r = run({"realizable", "-m", "3"}, R"({"horizon":2,"kind":"values","values":{"1":1,"2":2}})");
  CHECK(r.code == 2);
}

TEST_CASE("graph") {
  const auto dot = run({"graph", "--n", "2", "--format", "dot"}, psu2_neg1);
  CHECK(dot.code == 0);
  CHECK(has(dot.out, "digraph"));
  const auto j = run({"graph", "--n", "2", "--format", "json"}, psu2_neg1);
  CHECK(nlohmann::json::parse(j.out)["vertices"].size() == 4);
  CHECK(run({"graph", "--n", "1"}, R"({"matrix":[[2]],"group":[2],"dimension":3})").code == 3);
}

TEST_CASE("nf, decide, validate") {
  auto r = run({"nf", "--n", "12"}, psu2_neg1);
  CHECK(r.code == 0);
  CHECK(has(r.out, "NF_12 = 2"));

  r = run({"decide", "--input", fixture("psu2_neg1.json"), "--n", "6"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "status: equal"));
  CHECK(has(r.out, "nf = 2"));
  CHECK(has(r.out, "njd = 2"));

  r = run({"decide", "--input", fixture("psu2_3.json"), "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "unequal");
  CHECK(j["inequality_certificate"]["witness_horizon"] == "315");

  r = run({"decide", "--input", fixture("psu2_3.json"), "--max-exponent", "2"});
  CHECK(r.code == 4);

  r = run({"validate", "--input", fixture("z3_neg1.json")});
  CHECK(r.code == 0);
  CHECK(has(r.out, "V1 fail"));
}

TEST_CASE("errors") {
  CHECK(run({"decide", "--input", fixture("bad_non_square.json")}).code == 2);
  CHECK(run({"decide", "--input", fixture("bad_group.json")}).code == 2);
  CHECK(run({"decide", "--input", "/nonexistent/model.json"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"lefschetz", "--format", "dot"}, psu2_neg1).code == 2);
  CHECK(run({"lefschetz", "--n", "0"}, psu2_neg1).code == 2);
  CHECK(run({"graph", "--input", fixture("jiang_violation.json"), "--n", "1"}).code == 3);
  const auto e = run({"decide"}, "{");
  CHECK(e.code == 2);
  CHECK_FALSE(e.err.empty());
}
