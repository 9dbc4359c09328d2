#include "oracles.hpp"

#include "feasreg/enumeration.hpp"
#include "feasreg/errors.hpp"
#include "feasreg/permutation.hpp"

#include <doctest.h>

#include <random>

using namespace feasreg;

namespace {
Permutation P(const char* s) { return Permutation::from_digits(s); }
}  // namespace

TEST_CASE("construction validates bijections") {
  CHECK_THROWS_AS(Permutation({1, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS(Permutation({0, 1}), InvalidArgument);
  CHECK_THROWS_AS(Permutation({1, 3}), InvalidArgument);
  CHECK(Permutation{2, 3, 1}.to_string() == "2 3 1");
  CHECK(P("2413").compact() == "2413");
  CHECK(P("2413").inverse() == P("3142"));
  CHECK(P("2413").reverse() == P("3142"));
  CHECK(P("2413").complement() == P("3142"));
  CHECK(P("132").complement() == P("312"));
}

TEST_CASE("standardize") {
  std::vector<long long> a{4, 3, 8}, b{1, 2, 3}, c{5, 1, 9, 6};
  CHECK(standardize(a) == P("213"));
  CHECK(standardize(b) == P("123"));
  CHECK(standardize(c) == P("2143"));
  std::vector<long long> dup{3, 1, 3};
  CHECK_THROWS_AS(standardize(dup), InvalidArgument);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<long long> v;
    std::uniform_int_distribution<long long> d(-1000, 1000);
    while (v.size() < 9) {
      long long x = d(rng);
      if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
    }
    CHECK(standardize(v) == Permutation(oracle::standardize(v)));
  }
}

TEST_CASE("standardize is idempotent on permutations") {
  for (const auto& s : oracle::all_of_size(6)) {
    auto vals = s.values();
    CHECK(standardize(vals) == s);
  }
}

TEST_CASE("pattern_at and begin/end patterns") {
  const std::vector<std::size_t> i1{1, 3, 6}, i2{0, 1, 2, 4};
  CHECK(pattern_at(P("24637185"), i1) == P("213"));
  CHECK(pattern_at(P("1532467"), i2) == P("1423"));
  const std::vector<std::size_t> all{0, 1, 2, 3, 4};
  CHECK(pattern_at(P("24351"), all) == P("24351"));
  CHECK(end_pattern(P("24351"), 3) == P("231"));
  CHECK(begin_pattern(P("1243756"), 3) == P("123"));
  CHECK(begin_pattern(P("1243756"), 7) == P("1243756"));
  CHECK_THROWS_AS(end_pattern(P("123"), 4), InvalidArgument);
  const std::vector<std::size_t> bad{0, 5};
  CHECK_THROWS_AS(pattern_at(P("123"), bad), InvalidArgument);
}

TEST_CASE("pattern_at composes") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> v(10);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    const Permutation s(v);
    std::vector<std::size_t> outer;
    for (std::size_t i = 0; i < 10; ++i)
      if (rng() % 3) outer.push_back(i);
    if (outer.size() < 2) continue;
    std::vector<std::size_t> inner, composed;
    for (std::size_t j = 0; j < outer.size(); ++j)
      if (rng() % 2) {
        inner.push_back(j);
        composed.push_back(outer[j]);
      }
    if (inner.empty()) continue;
    CHECK(pattern_at(pattern_at(s, outer), inner) == pattern_at(s, composed));
  }
}

TEST_CASE("containment examples") {
  CHECK(contains(P("1532467"), P("1423")));
  CHECK(avoids(P("1243756"), P("321")));
  CHECK(contains(P("321"), P("21")));
  CHECK(contains_through_last(P("2431"), P("321")));
  CHECK_FALSE(contains_through_last(P("3214"), P("321")));
}

TEST_CASE("containment agrees with the subset oracle") {
  std::vector<Permutation> patterns;
  for (std::size_t k = 1; k <= 4; ++k)
    for (auto& t : oracle::all_of_size(k)) patterns.push_back(t);
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& s : oracle::all_of_size(n))
      for (const auto& t : patterns) REQUIRE(contains(s, t) == oracle::contains(s, t));
  for (const auto& s : oracle::all_of_size(8))
    for (const auto& t : oracle::all_of_size(3)) REQUIRE(contains(s, t) == oracle::contains(s, t));
}

TEST_CASE("enumerate_avoiders") {
  CHECK(enumerate_avoiders(3, {P("312")}).size() == 5);
  const auto mono = enumerate_avoiders(3, parse_pattern_set("132,213,231,312"));
  CHECK(mono == std::vector<Permutation>{P("123"), P("321")});
  CHECK(enumerate_avoiders(4, {P("321")}).size() == 14);
  CHECK(enumerate_avoiders(4, {}).size() == 24);
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& b : {PatternSet{P("312")}, PatternSet{P("321")}, PatternSet{P("2413"), P("3142")}, PatternSet{P("1342")}}) {
      auto got = enumerate_avoiders(n, b);
      CHECK(std::is_sorted(got.begin(), got.end()));
      CHECK(got == oracle::avoiders(n, b));
    }
  EnumerationLimits tiny{10};
  CHECK_THROWS_AS(enumerate_avoiders(5, {P("321")}, tiny), CapExceeded);
}

TEST_CASE("RSK count agrees with enumeration") {
  CHECK(count_avoiders_rsk(3, 4) == 14);
  for (int k = 1; k <= 6; ++k) CHECK(count_avoiders_rsk(2, k) == 1);
  CHECK(count_avoiders_rsk(4, 3) == 6);
  for (int k = 1; k <= 8; ++k) {
    const auto c312 = enumerate_avoiders(k, {P("312")}).size();
    const auto c321 = enumerate_avoiders(k, {P("321")}).size();
    CHECK(c312 == c321);
    CHECK(count_avoiders_rsk(3, k) == c321);
    CHECK(count_avoiders_rsk(4, k) == enumerate_avoiders(k, {P("4321")}).size());
  }
}

TEST_CASE("sums") {
  CHECK(direct_sum(P("21"), P("1")) == P("213"));
  CHECK(skew_sum(P("21"), P("1")) == P("321"));
  CHECK(repeat_sum(3, P("1")) == P("123"));
  CHECK(repeat_skew_sum(2, P("12")) == P("3412"));
  CHECK_THROWS_AS(repeat_sum(0, P("1")), InvalidArgument);
  CHECK(is_sum_decomposable(P("213")));
  CHECK_FALSE(is_sum_decomposable(P("312")));
  CHECK(is_skew_decomposable(P("312")));
  CHECK_FALSE(is_skew_decomposable(P("2413")));
}

TEST_CASE("append") {
  CHECK(append(P("132"), 2) == P("1432"));
  CHECK(append(P("2413"), 5) == direct_sum(P("2413"), P("1")));
  CHECK(append(P("12"), 1) == P("231"));
  CHECK_THROWS_AS(append(P("12"), 0), InvalidArgument);
  CHECK_THROWS_AS(append(P("12"), 4), InvalidArgument);
}

TEST_CASE("consecutive occurrences and densities") {
  CHECK(consecutive_occurrences(P("321"), P("1532467")) == 1);
  CHECK(consecutive_occurrences(P("1423"), P("1532467")) == 0);
  CHECK(occurrences(P("1423"), P("1532467")) > 0);
  CHECK(occurrences(P("12"), P("123")) == 3);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> v(3 + rng() % 10);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    const Permutation s(v);
    for (std::size_t k = 1; k <= std::min<std::size_t>(4, s.size()); ++k) {
      const auto d = density_vector(s, k);
      for (Eigen::Index i = 0; i < d.entries.size(); ++i) CHECK(d.entries(i) >= 0);
      CHECK(d.sum() == Rational(static_cast<long>(s.size() - k + 1), static_cast<long>(s.size())));
    }
  }
  const auto d = density_vector(P("1243756"), 3);
  CHECK(d[P("132")] == Rational(2, 7));
}

TEST_CASE("direct-sum mixing stays close to the convex combination") {
  // tau = (s|b| copies of a) + (t|a| copies of b) mixes the two density
  // vectors in proportion s:t up to boundary windows.
  const auto k = 3u;
  const std::vector<std::pair<Permutation, Permutation>> pairs{
      {P("2134"), P("1432")}, {P("213"), P("12534")}, {P("2314"), P("4321")}};
  for (const auto& [a, b] : pairs) {
    for (std::size_t s = 1; s <= 2; ++s)
      for (std::size_t t = 1; t <= 2; ++t) {
        const Permutation tau = direct_sum(repeat_sum(s * b.size(), a), repeat_sum(t * a.size(), b));
        const auto da = density_vector(a, k), db = density_vector(b, k), dt = density_vector(tau, k);
        const Rational ws(static_cast<long>(s), static_cast<long>(s + t)), wt(static_cast<long>(t), static_cast<long>(s + t));
        const RatVector mix = ws * da.entries + wt * db.entries;
        Rational l1 = 0;
        for (Eigen::Index i = 0; i < mix.size(); ++i) l1 += abs(dt.entries(i) - mix(i));
        const Rational bound = Rational(2 * static_cast<long>(k)) *
                               (Rational(1, static_cast<long>(a.size())) + Rational(1, static_cast<long>(b.size())));
        CHECK(l1 <= bound);
      }
  }
}

TEST_CASE("parsing") {
  CHECK(parse_permutation("2 4 1 3") == P("2413"));
  CHECK(parse_permutation("[2,4,1,3]") == P("2413"));
  CHECK(parse_permutation("2413") == P("2413"));
  CHECK(parse_permutation("10 1 2 3 4 5 6 7 8 9").size() == 10);
  CHECK_THROWS_AS(parse_permutation("2 2 1"), InvalidArgument);
  CHECK_THROWS_AS(parse_permutation("abc"), InvalidArgument);
  CHECK(parse_pattern_set("4321,312") == PatternSet{P("312"), P("4321")});
}
