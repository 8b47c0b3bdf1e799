#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fibstat/permutation.hpp"
#include "oracles.hpp"

using namespace fibstat;

TEST_CASE("parse and render") {
  CHECK(to_string(Permutation::parse("6753421")) == "6753421");
  auto big = Permutation::parse("10 9 8 7 6 5 4 3 2 1");
  CHECK(big.size() == 10);
  CHECK(to_string(big) == "10 9 8 7 6 5 4 3 2 1");
  CHECK(Permutation::parse("").empty());
  CHECK_THROWS_AS(Permutation::parse("1223"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("130"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
}

TEST_CASE("pattern containment examples") {
  auto sigma = Permutation::parse("564312");
  CHECK(contains_pattern(sigma, Permutation::parse("321")));
  CHECK_FALSE(contains_pattern(sigma, Permutation::parse("123")));
  CHECK(contains_pattern(sigma, Permutation()));
  CHECK_FALSE(contains_pattern(Permutation::parse("12"), Permutation::parse("123")));
}

TEST_CASE("containment agrees with subset search") {
  std::mt19937 rng(3);
  auto pats = parse_patterns("132,2143,3412,231");
  for (int trial = 0; trial < 1000; ++trial) {
    std::uniform_int_distribution<int> size(0, 9);
    oracle::Perm p(static_cast<std::size_t>(size(rng)));
    std::iota(p.begin(), p.end(), 1);
    std::shuffle(p.begin(), p.end(), rng);
    for (const auto& pat : pats) {
      REQUIRE(contains_pattern(Permutation(p), pat) == oracle::contains(p, oracle::to_vec(pat)));
    }
  }
}

TEST_CASE("statistics on the running example") {
  auto p = Permutation::parse("6753421");
  CHECK(inv(p) == 19);
  CHECK(maj(p) == 16);
  CHECK(descent_set(p) == std::vector<std::size_t>{2, 3, 5, 6});
  CHECK(to_string(reversal(Permutation::parse("321549876"))) == "678945123");
}

TEST_CASE("inv of a permutation and its reversal sum to C(n,2)") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> size(0, 10);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = size(rng);
    oracle::Perm v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    Permutation p(v);
    REQUIRE(inv(p) + inv(reversal(p)) == static_cast<std::size_t>(n * (n - 1) / 2));
    REQUIRE(inv(p) == static_cast<std::size_t>(oracle::inv(v)));
    REQUIRE(maj(p) == static_cast<std::size_t>(oracle::maj(v)));
  }
}

TEST_CASE("cycle decomposition") {
  auto c = cycle_decomposition(Permutation::parse("978645312"));
  CHECK(to_string(c) == "(192738)(465)");
  CHECK(c.count() == 2);
  CHECK(c.count_of_length(6) == 1);
  CHECK(c.lengths() == std::vector<std::size_t>{6, 3});
  CHECK(to_string(c.compose()) == "978645312");
  CHECK(cycle_decomposition(Permutation()).count() == 0);
}

TEST_CASE("cycle decomposition round trips on random permutations") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    oracle::Perm v(12);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    Permutation p(v);
    auto c = cycle_decomposition(p);
    REQUIRE(c.compose() == p);
    REQUIRE(c.lengths() == oracle::cycle_lengths(v));
  }
}

TEST_CASE("layered matchings") {
  auto p = Permutation::parse("6753421");
  CHECK(is_reverse_layered_matching(p));
  CHECK_FALSE(is_layered_matching(p));
  CHECK(to_string(block_structure(p)) == "DSDSS");
  CHECK(to_string(perm_from_word(BlockWord::parse("DSDSS"), Orientation::ReverseLayered)) == "6753421");
  CHECK(to_string(perm_from_word(BlockWord::parse("DSDSS"), Orientation::Layered)) == "2135467");
  CHECK(layered_classify(Permutation::parse("21")) == LayeredKind::Both);
  CHECK(layered_classify(Permutation::parse("1")) == LayeredKind::Both);
  CHECK(layered_classify(Permutation::parse("132")) == LayeredKind::LayeredMatching);
  CHECK(layered_classify(Permutation::parse("2413")) == LayeredKind::Neither);
  CHECK(to_string(block_structure(Permutation::parse("21"))) == "SS");
  CHECK(to_string(block_structure(Permutation::parse("21"), Orientation::Layered)) == "D");
  CHECK(to_string(block_structure(Permutation::parse("132"))) == "SD");
  CHECK_THROWS_AS(block_structure(Permutation::parse("2413")), std::invalid_argument);
  CHECK(layered_kind_name(LayeredKind::Neither) == "neither");
}

TEST_CASE("structural generators equal the pattern filters") {
  auto rl = parse_patterns("123,132,213");
  auto l = parse_patterns("231,312,321");
  for (int n = 0; n <= 8; ++n) {
    CAPTURE(n);
    auto rl_struct = reverse_layered_matchings(static_cast<std::size_t>(n));
    auto l_struct = layered_matchings(static_cast<std::size_t>(n));
    CHECK(rl_struct == enumerate_avoiders(static_cast<std::size_t>(n), rl));
    CHECK(l_struct == enumerate_avoiders(static_cast<std::size_t>(n), l));
    CHECK(static_cast<long long>(rl_struct.size()) == oracle::fib(n));

    auto brute = oracle::avoiders(n, {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}});
    REQUIRE(brute.size() == rl_struct.size());
    for (std::size_t i = 0; i < brute.size(); ++i) CHECK(oracle::to_vec(rl_struct[i]) == brute[i]);
  }
}

TEST_CASE("filter enumeration is bounded") {
  CHECK_THROWS_AS(enumerate_avoiders(10, parse_patterns("123")), BoundExceeded);
  try {
    enumerate_avoiders(12, parse_patterns("123"));
  } catch (const BoundExceeded& e) {
    CHECK(e.requested() == 12);
    CHECK(e.bound() == kFilterBound);
  }
}

TEST_CASE("gap insertion generates the West classes") {
  for (WestClass c : {WestClass::W1, WestClass::W2, WestClass::W3}) {
    auto pats = west_patterns(c);
    std::vector<oracle::Perm> opats;
    for (const auto& p : pats) opats.push_back(oracle::to_vec(p));
    for (int n = 1; n <= 8; ++n) {
      CAPTURE(west_class_name(c));
      CAPTURE(n);
      auto grown = west_class(static_cast<std::size_t>(n), c);
      CHECK(static_cast<long long>(grown.size()) == oracle::fib(2 * n - 2));
      CHECK(grown == enumerate_avoiders(static_cast<std::size_t>(n), pats));
      if (n <= 7) {
        auto brute = oracle::avoiders(n, opats);
        REQUIRE(brute.size() == grown.size());
        for (std::size_t i = 0; i < brute.size(); ++i) CHECK(oracle::to_vec(grown[i]) == brute[i]);
      }
    }
  }
}

TEST_CASE("W1 admits 3142, which needs a later entry below the second-to-last prefix value") {
  auto kids = west_children(Permutation::parse("312"), WestClass::W1);
  std::set<std::string> names;
  for (const auto& k : kids) names.insert(to_string(k));
  CHECK(names == std::set<std::string>{"4312", "3412", "3142"});
  CHECK_FALSE(contains_pattern(Permutation::parse("3142"), Permutation::parse("123")));
  CHECK_FALSE(contains_pattern(Permutation::parse("3142"), Permutation::parse("2143")));
}
