#include "oracles.hpp"

#include "feasreg/errors.hpp"
#include "feasreg/linalg.hpp"
#include "feasreg/overlap.hpp"

#include <doctest.h>

#include <random>

using namespace feasreg;

namespace {
Permutation P(const char* s) { return Permutation::from_digits(s); }

Walk walk_from(const OverlapGraph& og, std::initializer_list<const char*> labels) {
  Walk w;
  for (auto l : labels) w.edges.push_back(og.graph.find_edge(P(l)).value());
  return w;
}

std::vector<std::string> labels_of(const OverlapGraph& og, const Walk& w) {
  std::vector<std::string> out;
  for (auto e : w.edges) out.push_back(og.graph.edge_label(e).compact());
  return out;
}
}  // namespace

TEST_CASE("overlap graph shapes") {
  const auto ov3 = build_overlap_graph(3, {});
  CHECK(ov3.graph.vertex_count() == 2);
  CHECK(ov3.graph.edge_count() == 6);
  const auto ov312 = build_overlap_graph(3, {P("312")});
  CHECK(ov312.graph.vertex_count() == 2);
  CHECK(ov312.graph.edge_count() == 5);
  const auto ov2 = build_overlap_graph(2, {});
  CHECK(ov2.graph.vertex_count() == 1);
  CHECK(ov2.graph.edge_count() == 2);
  CHECK(ov2.graph.edge(0).is_loop());
  CHECK(ov2.graph.edge(1).is_loop());
  CHECK_THROWS_AS(build_overlap_graph(1, {}), InvalidArgument);

  for (std::size_t k = 2; k <= 5; ++k) {
    const auto og = build_overlap_graph(k, {P("312")});
    for (std::size_t e = 0; e < og.graph.edge_count(); ++e) {
      const auto& pi = og.graph.edge_label(e);
      CHECK(og.graph.vertex_label(og.graph.edge(e).source) == begin_pattern(pi, k - 1));
      CHECK(og.graph.vertex_label(og.graph.edge(e).target) == end_pattern(pi, k - 1));
      CHECK(og.graph.edge(e).ordinal == 0);
    }
  }
}

TEST_CASE("walk_of") {
  const auto ov3 = build_overlap_graph(3, {});
  CHECK(labels_of(ov3, walk_of(ov3, P("123456"))) == std::vector<std::string>{"123", "123", "123", "123"});
  CHECK(labels_of(ov3, walk_of(ov3, P("1243756"))) == std::vector<std::string>{"123", "132", "213", "132", "312"});
  const auto ov312 = build_overlap_graph(3, {P("312")});
  CHECK_THROWS_AS(walk_of(ov312, P("3124")), InvalidArgument);
  CHECK_THROWS_AS(walk_of(ov3, P("12")), InvalidArgument);

  std::mt19937 rng(5);
  const auto ov4 = build_overlap_graph(4, {});
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> v(4 + rng() % 12);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    const Permutation s(v);
    const auto w = walk_of(ov4, s);
    CHECK(w.size() == s.size() - 3);
    CHECK(is_walk(ov4.graph, std::span<const std::size_t>(w.edges)));
  }
}

TEST_CASE("walks of class members are walks of the restricted graph") {
  for (std::size_t k = 2; k <= 4; ++k) {
    const auto og = build_overlap_graph(k, {P("312")});
    for (std::size_t m = k; m <= 8; ++m)
      for (const auto& s : enumerate_avoiders(m, {P("312")})) {
        const auto w = walk_of(og, s);
        REQUIRE(is_walk(og.graph, std::span<const std::size_t>(w.edges)));
      }
  }
}

TEST_CASE("incidence matrix") {
  DirectedMultigraph<int> tri;
  for (int v = 1; v <= 3; ++v) tri.add_vertex(v);
  tri.add_edge(1, 1, 2);
  tri.add_edge(2, 2, 0);
  tri.add_edge(3, 0, 1);
  IntMatrix expected(3, 3);
  expected << 0, -1, 1, 1, 0, -1, -1, 1, 0;
  CHECK(incidence_matrix<Integer>(tri) == expected);

  const auto ov3 = build_overlap_graph(3, {});
  const auto l = incidence_matrix<Rational>(ov3.graph);
  for (Eigen::Index j = 0; j < l.cols(); ++j) {
    CHECK(l.col(j).sum() == 0);
    if (ov3.graph.edge(static_cast<std::size_t>(j)).is_loop()) CHECK(l.col(j).isZero());
  }
  for (std::size_t k = 2; k <= 5; ++k) {
    const auto og = build_overlap_graph(k, {});
    CHECK(rank_exact(incidence_matrix<Rational>(og.graph)) == og.graph.vertex_count() - 1);
  }
}

TEST_CASE("strong connectivity") {
  CHECK(is_strongly_connected(build_overlap_graph(3, {P("312")}).graph));
  CHECK(is_strongly_connected(build_overlap_graph(4, {P("312")}).graph));
  DirectedMultigraph<int> g;
  g.add_vertex(0);
  g.add_vertex(1);
  g.add_edge(0, 0, 1);
  CHECK_FALSE(is_strongly_connected(g));
}

TEST_CASE("simple cycles against exhaustive search") {
  const auto ov3 = build_overlap_graph(3, {});
  const auto cycles = simple_cycles(ov3.graph);
  CHECK(cycles.size() == 6);
  CHECK(std::count_if(cycles.begin(), cycles.end(), [](const Walk& w) { return w.size() == 1; }) == 2);

  DirectedMultigraph<int> single;
  single.add_vertex(0);
  single.add_edge(0, 0, 0);
  CHECK(simple_cycles(single).size() == 1);

  for (std::size_t k = 2; k <= 4; ++k)
    for (const auto& b : {PatternSet{}, PatternSet{P("312")}, PatternSet{P("321")}, PatternSet{P("1342")}}) {
      if (k == 4 && b.empty()) continue;  // oracle too slow
      const auto og = build_overlap_graph(k, b);
      const auto fast = simple_cycles(og.graph);
      CHECK(std::is_sorted(fast.begin(), fast.end()));
      CHECK(std::set<Walk>(fast.begin(), fast.end()) == oracle::simple_cycles(og.graph));
      CHECK(std::set<Walk>(fast.begin(), fast.end()).size() == fast.size());
    }
  CHECK_THROWS_AS(simple_cycles(ov3.graph, 3), CapExceeded);
}

TEST_CASE("decompose_walk") {
  const auto ov3 = build_overlap_graph(3, {});
  const auto loops = decompose_walk(ov3.graph, std::span<const std::size_t>(walk_of(ov3, P("123456")).edges));
  CHECK(loops.cycles.size() == 4);
  CHECK(loops.residual.empty());
  for (auto& c : loops.cycles) CHECK(ov3.graph.edge_label(c.edges.at(0)) == P("123"));

  const auto two = walk_from(ov3, {"231", "312"});
  const auto d = decompose_walk(ov3.graph, std::span<const std::size_t>(two.edges));
  REQUIRE(d.cycles.size() == 1);
  CHECK(d.cycles[0] == two);
  CHECK(d.residual.empty());

  std::mt19937 rng(17);
  const auto og = build_overlap_graph(4, {});
  for (int trial = 0; trial < 1000; ++trial) {
    Walk w;
    std::size_t e = rng() % og.graph.edge_count();
    const std::size_t len = 1 + rng() % 40;
    for (std::size_t i = 0; i < len; ++i) {
      w.edges.push_back(e);
      auto outs = og.graph.out_edges(og.graph.edge(e).target);
      e = outs[rng() % outs.size()];
    }
    const auto dec = decompose_walk(og.graph, std::span<const std::size_t>(w.edges));
    CHECK(dec.residual.size() < og.graph.vertex_count());
    std::vector<std::size_t> counts(og.graph.edge_count(), 0);
    for (auto& c : dec.cycles) {
      CHECK(is_cycle(og.graph, std::span<const std::size_t>(c.edges)));
      for (auto x : c.edges) ++counts[x];
    }
    for (auto x : dec.residual.edges) ++counts[x];
    CHECK(counts == edge_multiplicities(og.graph, std::span<const std::size_t>(w.edges)));
  }
  Walk broken{{og.graph.find_edge(P("1234")).value(), og.graph.find_edge(P("4321")).value()}};
  CHECK_THROWS_AS(decompose_walk(og.graph, std::span<const std::size_t>(broken.edges)), InvalidArgument);
}

TEST_CASE("extend_312 examples") {
  CHECK(extend_312(P("213"), P("231")) == P("3241"));
  CHECK(extend_312(P("213"), P("123")) == P("2134"));
  CHECK(extend_312(P("213"), P("132")) == P("2143"));
  CHECK_THROWS_AS(extend_312(P("213"), P("312")), InvalidArgument);
  CHECK_THROWS_AS(extend_312(P("213"), P("213")), InvalidArgument);
}

TEST_CASE("extend_312 against a search oracle") {
  // The oracle tries every appended level and keeps those that stay in the
  // class and produce the requested end pattern.
  for (std::size_t k = 2; k <= 5; ++k) {
    const auto edges = enumerate_avoiders(k, {P("312")});
    for (std::size_t m = k - 1; m <= 7; ++m)
      for (const auto& s : enumerate_avoiders(m, {P("312")}))
        for (const auto& next : edges) {
          if (begin_pattern(next, k - 1) != end_pattern(s, k - 1)) continue;
          std::vector<Permutation> valid;
          for (int level = 1; level <= static_cast<int>(m) + 1; ++level) {
            auto t = append(s, level);
            if (avoids(t, P("312")) && end_pattern(t, k) == next) valid.push_back(t);
          }
          REQUIRE_FALSE(valid.empty());
          const auto got = extend_312(s, next);
          REQUIRE(std::find(valid.begin(), valid.end(), got) != valid.end());
          REQUIRE(begin_pattern(got, m) == s);
        }
  }
}

TEST_CASE("realize_walk_312") {
  const auto og = build_overlap_graph(3, {P("312")});
  CHECK(realize_walk_312(og, walk_from(og, {"231"})) == P("231"));
  CHECK(realize_walk_312(og, walk_from(og, {"213", "132"})) == P("2143"));
  CHECK(realize_walk_312(og, walk_from(og, {"123", "123"})) == P("1234"));
  Walk bad{{og.graph.find_edge(P("123")).value(), og.graph.find_edge(P("213")).value()}};
  CHECK_THROWS_AS(realize_walk_312(og, bad), InvalidArgument);
  CHECK_THROWS_AS(realize_walk_312(og, Walk{}), InvalidArgument);

  for (std::size_t k = 3; k <= 4; ++k) {
    const auto g = build_overlap_graph(k, {P("312")});
    for (std::size_t len = 1; len <= 5; ++len)
      for (const auto& w : oracle::walks(g.graph, len)) {
        const auto s = realize_walk_312(g, w);
        REQUIRE(s.size() == len + k - 1);
        REQUIRE(avoids(s, P("312")));
        REQUIRE(walk_of(g, s) == w);
      }
  }
}

TEST_CASE("realize_walk by search") {
  const auto ov3 = build_overlap_graph(3, {});
  for (std::size_t len = 1; len <= 6; ++len)
    for (const auto& w : oracle::walks(ov3.graph, len)) REQUIRE(walk_of(ov3, realize_walk(ov3, w)) == w);
  const auto og = build_overlap_graph(3, {P("312")});
  for (std::size_t len = 1; len <= 5; ++len)
    for (const auto& w : oracle::walks(og.graph, len)) {
      const auto s = realize_walk(og, w);
      REQUIRE(avoids(s, P("312")));
      REQUIRE(walk_of(og, s) == w);
    }
  // Av(321) is not surjective onto its overlap graph walks.
  const auto og321 = build_overlap_graph(3, {P("321")});
  CHECK(walk_of(og321, realize_walk(og321, walk_from(og321, {"231", "312"}))) == walk_from(og321, {"231", "312"}));
  CHECK_THROWS_AS(realize_walk(og321, walk_from(og321, {"231", "312", "231"})), InvalidArgument);
}
