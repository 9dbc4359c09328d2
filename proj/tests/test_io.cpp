#include "feasreg/errors.hpp"
#include "feasreg/io.hpp"
#include "feasreg/overlap.hpp"
#include "feasreg/reproduce.hpp"

#include <doctest.h>

using namespace feasreg;

namespace {
Permutation P(const char* s) { return Permutation::from_digits(s); }
}  // namespace

TEST_CASE("conventional coordinate order") {
  const auto o3 = conventional_order(3);
  std::vector<std::string> got;
  for (auto& p : o3) got.push_back(p.compact());
  CHECK(got == std::vector<std::string>{"123", "231", "312", "213", "132", "321"});
  CHECK(conventional_order(4) == all_permutations(4));
}

TEST_CASE("json") {
  CHECK(to_json(P("2413")).dump() == "[2,4,1,3]");
  CHECK(to_json(parse_coloured("1:2 2:1")).dump() == R"({"values":[1,2],"colours":[2,1]})");
  CHECK(to_json(Rational(-3, 6)).dump() == R"("-1/2")");
  CHECK(to_json(Rational(4)).dump() == R"("4")");
  const auto g = to_json(build_overlap_graph(3, {P("312")}).graph);
  CHECK(g["vertices"].size() == 2);
  CHECK(g["edges"].size() == 5);
  DimensionReport r{"Av(312)", 4, 9, 9, true, "cycle-polytope", {{"edges", "14"}}};
  const auto j = to_json(r);
  CHECK(j["lower_bound"] == 9);
  CHECK(j["certificates"]["edges"] == "14");
}

TEST_CASE("dot, csv and text") {
  const auto dot = to_dot(build_overlap_graph(2, {}).graph);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("label=\"12\"") != std::string::npos);
  const auto cdot = to_dot(build_coloured_overlap(3, 3).graph);
  CHECK(cdot.find("color=\"red\"") != std::string::npos);

  RatMatrix v(1, 2);
  v << Rational(1, 2), 0;
  LabelledMatrix<Rational> m{{"r"}, {"a", "b,c"}, v};
  CHECK(to_csv(m) == ",a,\"b,c\"\nr,1/2,0\n");
  CHECK(to_text(m).find("1/2") != std::string::npos);
  CHECK(pretty_label("1:1 3:1 2:2") == "red13blue2");
  CHECK(pretty_label("231") == "231");
}

TEST_CASE("fact registry") {
  const auto ids = fact_ids();
  CHECK(ids == std::vector<std::string>{"fig-1", "fig-4", "fig-6", "table-1", "matrix-a-3-3", "matrix-a-4-3", "fact-1-10"});
  for (const auto& r : reproduce_all()) {
    std::string details = r.id + "\n";
    for (auto& d : r.details) details += d + "\n";
    INFO(details);
    CHECK(r.passed);
  }
  CHECK_THROWS_AS(reproduce_fact("nope"), InvalidArgument);
}
