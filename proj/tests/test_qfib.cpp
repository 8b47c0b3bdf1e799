#include <doctest.h>

#include <thread>

#include "fibstat/qfib.hpp"
#include "oracles.hpp"

using namespace fibstat;

namespace {

// Distribution of q^{stat} x^{#S} y^{#D} over a class of permutations given
// as vectors; layers() or reverse_layers() supplies the S/D split.
template <typename Stat, typename Split>
oracle::Dist dist_of(const std::vector<oracle::Perm>& perms, Stat stat, Split split) {
  oracle::Dist d;
  for (const auto& p : perms) {
    auto [s, dd] = oracle::count_sd(split(p));
    d[{s, dd, stat(p)}] += 1;
  }
  return d;
}

std::vector<oracle::Perm> rl_class(int n) { return oracle::avoiders(n, {{1, 3, 2}, {2, 1, 3}, {1, 2, 3}}); }
std::vector<oracle::Perm> l_class(int n) { return oracle::avoiders(n, {{2, 3, 1}, {3, 1, 2}, {3, 2, 1}}); }

Integer value_at_one(const MultiPoly& p) {
  Rational r = evaluate(p, EvalPoint{});
  return numerator(r);
}

}  // namespace

TEST_CASE("family names") {
  CHECK(all_families().size() == 11);
  for (Family f : all_families()) CHECK(parse_family(family_name(f)) == f);
  CHECK(parse_family("Mp") == Family::MPrime);
  CHECK_FALSE(parse_family("Q").has_value());
  CHECK_FALSE(has_recursion(Family::RB));
  CHECK(is_west(Family::W2));
}

TEST_CASE("small values") {
  CHECK(qfib_oracle(Family::I, 0) == MultiPoly(1));
  CHECK(qfib_oracle(Family::C, 1) == X());
  CHECK(qfib_oracle(Family::I, 2) == term(2, 0, 1) + Y());
  CHECK(qfib_oracle(Family::D, 3) == term(3, 0, 2) + term(1, 1, 1, 2));
  CHECK(canonical_text(qfib_oracle(Family::I, 4)) == "x^4*q^6 + 3*x^2*y*q^5 + y^2*q^4");
  CHECK(canonical_text(qfib_oracle(Family::M, 3)) == "x^3*q^3 + x*y*q^2 + x*y*q");
  CHECK(qfib_oracle(Family::RB, 2) == term(2, 0, 1) + Y());
}

TEST_CASE("the four inv/maj families match brute force over S_n") {
  for (int n = 0; n <= 7; ++n) {
    CAPTURE(n);
    auto rl = rl_class(n);
    auto l = l_class(n);
    REQUIRE(static_cast<long long>(rl.size()) == oracle::fib(n));
    CHECK(qfib_oracle(Family::I, static_cast<std::size_t>(n)) == oracle::to_poly(dist_of(rl, oracle::inv, oracle::reverse_layers)));
    CHECK(qfib_oracle(Family::M, static_cast<std::size_t>(n)) == oracle::to_poly(dist_of(rl, oracle::maj, oracle::reverse_layers)));
    CHECK(qfib_oracle(Family::IPrime, static_cast<std::size_t>(n)) == oracle::to_poly(dist_of(l, oracle::inv, oracle::layers)));
    CHECK(qfib_oracle(Family::MPrime, static_cast<std::size_t>(n)) == oracle::to_poly(dist_of(l, oracle::maj, oracle::layers)));
    auto cycles = [](const oracle::Perm& p) { return static_cast<int>(oracle::cycle_lengths(p).size()); };
    CHECK(qfib_oracle(Family::D, static_cast<std::size_t>(n)) == oracle::to_poly(dist_of(rl, cycles, oracle::reverse_layers)));
  }
}

TEST_CASE("recursions agree with the oracle where they are exact") {
  for (Family f : {Family::I, Family::M, Family::C, Family::IPrime, Family::MPrime}) {
    for (std::size_t n = 0; n <= 14; ++n) {
      CAPTURE(family_name(f));
      CAPTURE(n);
      CHECK(qfib_recursive(f, n) == qfib_oracle(f, n));
    }
  }
  for (std::size_t n = 0; n <= 14; ++n) CHECK(closed_form_I(n) == qfib_oracle(Family::I, n));
  CHECK_THROWS_AS(qfib_recursive(Family::RB, 3), std::invalid_argument);
  CHECK_THROWS_AS(qfib_recursive(Family::I, kRecursionBound + 1), BoundExceeded);
  CHECK_NOTHROW(qfib_recursive(Family::I, kRecursionBound));
}

TEST_CASE("rb oracle equals the filtered distribution") {
  for (std::size_t n = 0; n <= 9; ++n) CHECK(qfib_oracle(Family::RB, n) == rb_distribution_filtered(n));
  CHECK_THROWS_AS(rb_distribution_filtered(10), BoundExceeded);
}

TEST_CASE("evaluation at one gives Fibonacci numbers") {
  for (Family f : all_families()) {
    CAPTURE(family_name(f));
    if (is_west(f)) {
      for (std::size_t s = 1; s <= 9; ++s) CHECK(value_at_one(qfib_oracle(f, s)) == fibonacci(2 * s - 2));
    } else {
      for (std::size_t n = 0; n <= 16; ++n) CHECK(value_at_one(qfib_oracle(f, n)) == fibonacci(n));
    }
  }
  CHECK(fibonacci(0) == 1);
  CHECK(fibonacci(10) == 89);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("cycle-length markers specialize to the cycle count") {
  for (std::size_t n = 0; n <= 14; ++n) {
    Substitution s;
    for (std::uint32_t i = 1; i <= n; ++i) s.set(Var::z(i), Q());
    CHECK(s.apply(qfib_oracle(Family::DPrime, n)) == qfib_oracle(Family::D, n));
  }
  CHECK(qfib_oracle(Family::DPrime, 2) == X(2) * Z(2) + Y() * Z(1, 2));
}

TEST_CASE("West classes against brute-force avoiders") {
  const std::vector<std::vector<oracle::Perm>> pats = {
      {{1, 2, 3}, {2, 1, 4, 3}}, {{1, 3, 2}, {3, 2, 4, 1}}, {{1, 3, 2}, {3, 4, 1, 2}}};
  const Family fams[] = {Family::W1, Family::W2, Family::W3};
  for (int k = 0; k < 3; ++k) {
    for (int n = 1; n <= 7; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      MultiPoly expect;
      for (const auto& p : oracle::avoiders(n, pats[static_cast<std::size_t>(k)])) expect += Q(oracle::inv(p));
      CHECK(qfib_oracle(fams[k], static_cast<std::size_t>(n)) == expect);
    }
  }
  CHECK_THROWS_AS(qfib_oracle(Family::W1, kWestBound + 1), BoundExceeded);
  CHECK_THROWS_AS(qfib_oracle(Family::I, kStructuralBound + 1), BoundExceeded);
}

TEST_CASE("frozen West distributions") {
  CHECK(canonical_text(qfib_oracle(Family::W1, 4)) == "q^6 + 3*q^5 + 5*q^4 + 4*q^3");
  CHECK(canonical_text(qfib_oracle(Family::W2, 4)) == "q^6 + 3*q^5 + 2*q^4 + 3*q^3 + 2*q^2 + q + 1");
  CHECK(canonical_text(qfib_oracle(Family::W3, 3)) == "q^3 + 2*q^2 + q + 1");
}

TEST_CASE("concurrent recursive calls return the sequential values") {
  std::vector<MultiPoly> expect;
  for (std::size_t n = 0; n <= 40; ++n) expect.push_back(qfib_recursive(Family::C, n));
  std::vector<std::vector<MultiPoly>> got(8);
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < got.size(); ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t n = 60; n > 0; --n) {
          qfib_recursive(t % 2 ? Family::M : Family::MPrime, n);
        }
        for (std::size_t n = 0; n <= 40; ++n) got[t].push_back(qfib_recursive(Family::C, n));
      });
    }
  }
  for (const auto& g : got) CHECK(g == expect);
  for (std::size_t n = 0; n <= 12; ++n) CHECK(qfib_recursive(Family::MPrime, n) == qfib_oracle(Family::MPrime, n));
}
