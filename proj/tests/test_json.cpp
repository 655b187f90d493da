#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vexp/json_io.hpp"
#include "vexp/report.hpp"
#include "vexp/rng.hpp"

#include <sstream>

using namespace vexp;

TEST_CASE("variable exponent descriptor round trip") {
  const json j = json::parse(R"({
    "atoms": [{"p": 2.0, "w": 1.0}, {"p": "inf", "w": 0.5}],
    "tail": {"kind": "convergent", "p": 1.5}
  })");
  const VarExponent P = var_exponent_from_json(j);
  REQUIRE(P.size() == 2);
  CHECK(P.atom(0).p == Exponent(2.0));
  CHECK(P.atom(1).p.is_infinite());
  CHECK(P.tail().kind() == TailSpec::Kind::convergent);
  const VarExponent back = var_exponent_from_json(var_exponent_to_json(P));
  CHECK(back.size() == P.size());
  CHECK(back.atom(1).p.is_infinite());
  CHECK(back.tail().kind() == TailSpec::Kind::convergent);
}

TEST_CASE("unknown keys are rejected at every level") {
  CHECK_THROWS_AS(var_exponent_from_json(json::parse(
                      R"({"atoms": [{"p": 2.0, "w": 1.0}], "extra": 1})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(var_exponent_from_json(json::parse(
                      R"({"atoms": [{"p": 2.0, "w": 1.0, "x": 0}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(var_exponent_from_json(json::parse(
                      R"({"atoms": [{"p": 2.0, "w": 1.0}],
                          "tail": {"kind": "constant", "p": 2, "q": 3}})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(weighted_vector_from_json(json::parse(
                      R"({"entries": [{"i": 0, "v": 1.0, "w": 2.0}]})")),
                  std::invalid_argument);
}

TEST_CASE("weighted vector descriptor") {
  const WeightedVector f = weighted_vector_from_json(
      json::parse(R"({"entries": [{"i": 0, "v": 3.0}, {"i": 2, "v": -1.0}]})"));
  REQUIRE(f.entries().size() == 2);
  CHECK(f.entries()[0].v == 3.0);
  CHECK(f.entries()[1].i == 2);
  const WeightedVector back =
      weighted_vector_from_json(weighted_vector_to_json(f));
  CHECK(back.entries().size() == 2);
}

TEST_CASE("orlicz descriptors") {
  CHECK(orlicz_from_json(json::parse(R"({"kind":"psi","p":2})"))
            .eval(1.0)
            .value() == 0.5);
  CHECK(orlicz_from_json(json::parse(R"({"kind":"phi","p":"inf"})"))
            .eval(1.0)
            .value() == 0.0);
  CHECK(orlicz_from_json(json::parse(R"({"kind":"log","r":2,"a":1})"))
            .eval(std::exp(-1.0))
            .value() == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
  const OrliczFn mix = orlicz_from_json(json::parse(
      R"({"kind":"mixture","atoms":[{"p":1,"w":0.5},{"p":2,"w":0.5}]})"));
  CHECK(mix.eval(1.0).value() == doctest::Approx(0.75).epsilon(1e-14));
  const OrliczFn lac = orlicz_from_json(json::parse(
      R"({"kind":"lacunary","r":[2.0,1.5],"b":[0.5,0.5],"limit":1.0})"));
  CHECK(lac.eval(1.0).value() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(orlicz_from_json(json::parse(R"({"kind":"psi","p":2,"x":1})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(orlicz_from_json(json::parse(R"({"kind":"nope"})")),
                  std::invalid_argument);
}

TEST_CASE("random descriptor round trips") {
  SplitMix64 root(606);
  for (int k = 0; k < 100; ++k) {
    SplitMix64 rng = case_rng(root.next(), k);
    const std::size_t n = 1 + rng.uniform_int(0, 5);
    std::vector<ExponentAtom> atoms;
    std::vector<WeightedVector::Entry> es;
    for (std::size_t i = 0; i < n; ++i) {
      atoms.push_back({rng.uniform01() < 0.2 ? Exponent::infinity()
                                             : Exponent(rng.log_uniform(0.5, 9.0)),
                       rng.uniform(0.1, 2.0)});
      es.push_back({i, rng.uniform(-3.0, 3.0)});
    }
    const VarExponent P(atoms);
    const WeightedVector f(es);
    const VarExponent P2 = var_exponent_from_json(var_exponent_to_json(P));
    const WeightedVector f2 =
        weighted_vector_from_json(weighted_vector_to_json(f));
    REQUIRE(P2.size() == P.size());
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(P2.atom(i).p == P.atom(i).p);
      CHECK(P2.atom(i).w == P.atom(i).w);
      CHECK(f2.entries()[i].v == f.entries()[i].v);
    }
  }
}

TEST_CASE("report formatting") {
  CHECK(fmt12(1.6180339887498949) == "1.61803398875");
  CHECK(fmt12(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(fmt12(0.5) == "0.5");
  Report rep({"a", "b"});
  rep.add_row({"1", "2"});
  rep.add_row({"3", "4"});
  std::ostringstream csv;
  rep.write_csv(csv);
  CHECK(csv.str() == "a,b\n1,2\n3,4\n");
  CHECK_THROWS_AS(rep.add_row({"only-one"}), std::invalid_argument);
}
