#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wordchar/report.hpp"

using namespace wordchar;

TEST_CASE("partition text round trips bit-exactly") {
  for (const char* text : {"{{1}}", "{{1,3},{2}}", "{{1,2,3}}", "{{1,4},{2,6},{3,5}}"}) {
    auto p = SetPartition::parse(text);
    CHECK(p.to_string() == text);
    CHECK(SetPartition::parse(p.to_string()) == p);
  }
}

TEST_CASE("diagram serialization") {
  CHECK(YoungDiagram::parse("2,1").to_string() == "2,1");
  CHECK(YoungDiagram::parse("5").to_string() == "5");
  CHECK_THROWS_AS(YoungDiagram::parse("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(YoungDiagram::parse(""), std::invalid_argument);
}

TEST_CASE("polynomial json uses p/q strings lowest degree first") {
  Polynomial p({Rat(1, 2), Rat(0), Rat(-3)});
  Json j = to_json(p);
  CHECK(j.dump() == R"(["1/2","0","-3"])");
  CHECK(polynomial_from_json(j) == p);

  RationalFunction f(Polynomial({Rat(-1), Rat(1)}), Polynomial({Rat(0), Rat(1)}));
  Json jf = to_json(f);
  CHECK(rational_function_from_json(jf) == f);
  CHECK(jf.dump() == R"({"den":["0","1"],"num":["-1","1"]})");
}

TEST_CASE("reports serialize deterministically") {
  McReport r;
  r.mean = 0.02040812;
  r.stderr_ = 0.0003;
  r.samples = 200000;
  r.seed = 424242;
  std::string a = dump_report(to_json(r));
  std::string b = dump_report(to_json(r));
  CHECK(a == b);
  // keys are sorted in the output
  CHECK(a.find("\"mean\"") < a.find("\"samples\""));
  CHECK(a.find("\"samples\"") < a.find("\"seed\""));
}

TEST_CASE("float rendering round trips") {
  for (double v : {1.0, 0.1, 2.0 * 1.7320508075688772, 1e-8, 0.02040816326530612}) {
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("rational string forms") {
  CHECK(rat_to_string(Rat(1, 3)) == "1/3");
  CHECK(rat_to_string(Rat(-7)) == "-7");
  CHECK(rat_from_string("22/7") == Rat(22, 7));
  CHECK(rat_from_string("-4/6") == Rat(-2, 3));
  CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
}
