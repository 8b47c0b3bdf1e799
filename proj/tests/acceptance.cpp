// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero on
// any unexpected FAIL or unexpected PASS; --strict makes every FAIL fatal.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fibstat/block_word.hpp"
#include "fibstat/identities.hpp"
#include "fibstat/permutation.hpp"
#include "fibstat/poly.hpp"
#include "fibstat/qfib.hpp"
#include "fibstat/set_partition.hpp"

using namespace fibstat;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<std::size_t> true_cycles(const Permutation& p) {
  std::vector<std::size_t> out = cycle_decomposition(p).lengths();
  std::sort(out.rbegin(), out.rend());
  return out;
}

Outcome counting() {
  Outcome o;
  auto t0 = Clock::now();
  auto rl = parse_patterns("123,132,213");
  auto l = parse_patterns("231,312,321");
  for (std::size_t n = 0; n <= 9; ++n) {
    auto a = enumerate_avoiders(n, rl);
    auto b = enumerate_avoiders(n, l);
    if (Integer(a.size()) != fibonacci(n) || Integer(b.size()) != fibonacci(n)) o.fail("count at n=" + std::to_string(n));
    if (reverse_layered_matchings(n) != a) o.fail("reverse layered generator differs at n=" + std::to_string(n));
    if (layered_matchings(n) != b) o.fail("layered generator differs at n=" + std::to_string(n));
  }
  double s = seconds_since(t0);
  if (s >= 30) o.fail("took " + std::to_string(s) + " s");
  if (o.pass) o.detail = "n = 0..9 in " + std::to_string(s) + " s";
  return o;
}

Outcome worked_examples() {
  Outcome o;
  auto w = BlockWord::parse("DSDSS");
  if (weight_inv(w) != term(3, 2, 19)) o.fail("weight_inv(DSDSS)");
  if (weight_maj(w) != term(3, 2, 16)) o.fail("weight_maj(DSDSS)");
  if (weight_rb(BlockWord::parse("DSSDD")) != term(2, 3, 15)) o.fail("weight_rb(DSSDD)");
  if (morse_weight(BlockWord::parse_morse("••−−•−")) != 16) o.fail("morse_weight");
  if (to_string(cycle_decomposition(Permutation::parse("978645312"))) != "(192738)(465)") o.fail("cycles of 978645312");
  if (to_string(interleave(BlockWord::parse("SDSDSD"))) != "SDDSSD") o.fail("interleave(SDSDSD)");
  if (to_string(reversal(Permutation::parse("321549876"))) != "678945123") o.fail("reversal");
  return o;
}

Outcome recursions() {
  Outcome o;
  auto t0 = Clock::now();
  for (Family f : {Family::I, Family::M, Family::C, Family::IPrime, Family::MPrime}) {
    for (std::size_t n = 0; n <= 12; ++n) {
      if (qfib_recursive(f, n) != qfib_oracle(f, n)) {
        o.fail(std::string(family_name(f)) + " at n=" + std::to_string(n));
      }
    }
  }
  double s = seconds_since(t0);
  if (s >= 10) o.fail("took " + std::to_string(s) + " s");
  if (o.pass) o.detail = "I, M, C, I', M' for n = 0..12 in " + std::to_string(s) + " s";
  return o;
}

Outcome closed_form() {
  Outcome o;
  for (std::size_t n = 0; n <= 12; ++n) {
    if (closed_form_I(n) != qfib_oracle(Family::I, n)) o.fail("n=" + std::to_string(n));
  }
  return o;
}

Outcome equidistribution() {
  Outcome o;
  for (std::size_t n = 0; n <= 9; ++n) {
    if (qfib_oracle(Family::M, n) != rb_distribution_filtered(n)) o.fail("M vs RB at n=" + std::to_string(n));
  }
  for (std::size_t n = 0; n <= 12; ++n) {
    if (qfib_oracle(Family::MPrime, n) != qfib_oracle(Family::C, n)) o.fail("M' vs C at n=" + std::to_string(n));
  }
  // Pointwise maj = rb under eta, including the n = 2 members 21 -> 1/2 and 12 -> 12.
  for (std::size_t n = 0; n <= 12; ++n) {
    for (const auto& p : reverse_layered_matchings(n)) {
      if (maj(p) != rb(eta(p))) o.fail("maj != rb(eta) at " + to_string(p));
    }
  }
  if (to_string(eta(Permutation::parse("21"))) != "1/2" || rb(eta(Permutation::parse("21"))) != 1) o.fail("eta(21)");
  if (o.pass) o.detail = "pointwise maj = rb(eta) for n <= 12; eta(21) = 1/2, eta(12) = 12";
  return o;
}

Outcome identity_suite() {
  Outcome o;
  std::vector<std::string> notes;
  for (const char* id : {"T4.1", "T4.3a", "T4.3b", "T4.4", "T4.5", "T4.6", "T4.7"}) {
    VerifyOptions opt;
    if (std::strcmp(id, "T4.1") != 0) opt.max_n = 12;
    opt.jobs = 4;
    auto rep = verify_identity(id, opt);
    // The statement as written is the first reading.
    const auto& printed = rep.readings.front();
    if (!printed.holds_on_range) {
      std::string first;
      for (const auto& inst : rep.instances) {
        if (!inst.reading_holds.front()) {
          first = std::to_string(inst.indices.back());
          break;
        }
      }
      std::string msg = std::string(id) + " as written fails on " + std::to_string(printed.failing) + " of " +
                        std::to_string(rep.instances.size()) + " instances (first n=" + first + ")";
      if (rep.verdict) msg += "; reading " + rep.holding_reading + " holds on every instance";
      o.fail(msg);
    }
  }
  return o;
}

Outcome cassini() {
  Outcome o;
  VerifyOptions opt;
  opt.max_n = 12;
  auto rep = verify_identity("CASSINI", opt);
  if (!rep.verdict || rep.holding_reading != "q*F_n^2") o.fail("holding reading is '" + rep.holding_reading + "'");
  if (rep.range != "n = 1..12") o.fail("range " + rep.range);
  if (to_text(rep).find("reading q*F_n^2") == std::string::npos) o.fail("report does not name the reading");
  if (o.pass) o.detail = "report names reading q*F_n^2";
  return o;
}

Outcome prefixes() {
  Outcome o;
  std::map<std::string, std::set<std::size_t>> seen;
  std::size_t pure = 0;
  for (std::size_t n = 1; n <= 14; ++n) {
    for_each_word(n, [&](const BlockWord& w) {
      auto v = interleave(w);
      auto pc = classify_prefix(v);
      auto truth = true_cycles(perm_from_word(w, Orientation::ReverseLayered));
      if (predicted_cycle_type(w) != truth) o.fail("cycle type of " + to_string(w));
      std::size_t covered = pc.consumed_letters() + (pc.star ? 1 : 0);
      if (pc.kind == PrefixKind::Residual || covered != v.size()) return;
      ++pure;
      // The skipped '*' letter forms its own cycle(s), so compare as a sub-multiset.
      auto rest = truth;
      for (std::size_t c : pc.predicted_cycles) {
        auto it = std::find(rest.begin(), rest.end(), c);
        if (it == rest.end()) {
          o.fail("pure prefix " + to_string(v));
          return;
        }
        rest.erase(it);
      }
      if (!pc.star && !rest.empty()) o.fail("pure prefix " + to_string(v));
      seen[std::string(prefix_kind_name(pc.kind))].insert(pc.ell);
    });
  }
  for (const char* k : {"SS", "DD", "DS*S", "DSSD"}) {
    if (!seen.count(k)) o.fail(std::string("no pure instance of ") + k);
  }
  // Length of S D^l S is 2l + 2; DS D^l S (and its odd realization) is 2l + 4.
  for (std::size_t l = 1; 2 * l + 2 <= 14; ++l) {
    if (!seen["SDlS"].count(l)) o.fail("SDlS missing l=" + std::to_string(l));
  }
  for (std::size_t l = 2; 2 * l + 4 <= 14; ++l) {
    if (!seen["DSDlS"].count(l)) o.fail("DSDlS missing l=" + std::to_string(l));
  }
  if (o.pass) o.detail = std::to_string(pure) + " pure instances; every word up to length 14 also matches";
  return o;
}

Outcome adjudication() {
  Outcome o;
  auto t0 = Clock::now();
  std::vector<std::string> summary;
  for (const char* id : {"T5.3", "T5.4", "T6.1", "T6.2", "T6.3"}) {
    const auto* info = find_identity(id);
    VerifyOptions opt;
    opt.max_n = 10;
    opt.jobs = 4;
    auto a = verify_identity(id, opt);
    opt.jobs = 1;
    auto b = verify_identity(id, opt);
    if (to_json(a).dump() != to_json(b).dump()) o.fail(std::string(id) + " not deterministic");
    if (a.verdict) {
      summary.push_back(std::string(id) + " holds (" + a.holding_reading + ")");
      continue;
    }
    if (!a.counterexample) {
      o.fail(std::string(id) + " fails without a counterexample");
      continue;
    }
    const auto& cx = *a.counterexample;
    std::size_t r = 0;
    while (r < info->readings.size() && info->readings[r].name != cx.reading) ++r;
    auto [lhs, rhs] = info->sides(cx.indices, r);
    if (lhs == rhs || canonical_text(lhs) != cx.lhs || canonical_text(rhs) != cx.rhs) {
      o.fail(std::string(id) + " counterexample does not re-check");
    }
    // Minimal: no earlier instance fails for that reading.
    for (const auto& inst : a.instances) {
      if (inst.indices == cx.indices) break;
      if (!inst.reading_holds[r]) o.fail(std::string(id) + " counterexample is not the first");
    }
    summary.push_back(std::string(id) + " counterexample at n=" + std::to_string(cx.indices.back()));
  }
  double s = seconds_since(t0);
  if (s >= 120) o.fail("took " + std::to_string(s) + " s");
  if (o.pass) {
    std::ostringstream d;
    for (const auto& x : summary) d << x << "; ";
    d << std::to_string(s) << " s";
    o.detail = d.str();
  }
  return o;
}

Outcome west() {
  Outcome o;
  for (auto c : {WestClass::W1, WestClass::W2, WestClass::W3}) {
    auto pats = west_patterns(c);
    for (std::size_t n = 1; n <= 8; ++n) {
      auto gen = west_class(n, c);
      if (Integer(gen.size()) != fibonacci(2 * n - 2)) o.fail(std::string(west_class_name(c)) + " count at n=" + std::to_string(n));
      if (gen != enumerate_avoiders(n, pats)) o.fail(std::string(west_class_name(c)) + " set at n=" + std::to_string(n));
    }
  }
  return o;
}

MultiPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> terms(0, 4);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> e(0, 3);
  std::uniform_int_distribution<int> qe(-3, 3);
  MultiPoly p;
  for (int t = terms(rng); t > 0; --t) {
    Monomial::ZExponents z;
    if (e(rng) == 0) z.emplace_back(static_cast<std::uint32_t>(1 + e(rng)), static_cast<std::uint32_t>(1 + e(rng)));
    p.add_term(Monomial(static_cast<std::uint32_t>(e(rng)), static_cast<std::uint32_t>(e(rng)), qe(rng), z), coeff(rng));
  }
  return p;
}

Outcome properties() {
  Outcome o;
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> qe(-2, 2);
  for (int t = 0; t < 1000; ++t) {
    auto a = random_poly(rng);
    auto b = random_poly(rng);
    auto c = random_poly(rng);
    if (a + b != b + a || a * b != b * a) o.fail("commutativity");
    if ((a + b) + c != a + (b + c) || (a * b) * c != a * (b * c)) o.fail("associativity");
    if (a * (b + c) != a * b + a * c) o.fail("distributivity");
    if (a - a != MultiPoly() || a * MultiPoly(1) != a) o.fail("identities");
    Substitution s;
    s.set(Var::x(), X() * Q(qe(rng))).set(Var::y(), Y() * Q(qe(rng))).set(Var::q(), Q(qe(rng) | 1));
    s.set(Var::z(1), Q(qe(rng)));
    if (s.apply(a * b) != s.apply(a) * s.apply(b) || s.apply(a + b) != s.apply(a) + s.apply(b)) o.fail("substitution");
  }
  std::uniform_int_distribution<int> size(0, 10);
  for (int t = 0; t < 1000; ++t) {
    std::vector<int> v(static_cast<std::size_t>(size(rng)));
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    Permutation p(v);
    std::size_t n = v.size();
    if (inv(p) + inv(reversal(p)) != n * (n - 1) / 2) o.fail("inv complement at " + to_string(p));
  }
  std::size_t words = 0;
  for (std::size_t n = 0; n <= 14; ++n) {
    for_each_word(n, [&](const BlockWord& w) {
      ++words;
      if (deinterleave(interleave(w)) != w || interleave(deinterleave(w)) != w) o.fail("interleave at " + to_string(w));
    });
  }
  if (o.pass) o.detail = "1000 + 1000 + 1000 random instances, " + std::to_string(words) + " words";
  return o;
}

struct Criterion {
  int number;
  const char* title;
  std::function<Outcome()> check;
  /// Set when the criterion cannot pass; the reason is printed with the FAIL line.
  const char* known_failure = nullptr;
};

}  // namespace

int main(int argc, char** argv) {
  bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  const std::vector<Criterion> criteria = {
      {1, "counting", counting},
      {2, "worked examples", worked_examples},
      {3, "recursion = oracle", recursions},
      {4, "closed form", closed_form},
      {5, "equidistribution", equidistribution},
      {6, "identity suite", identity_suite,
       "the all-doubleton term of T4.6 is written q^{n(n-1)}; the oracle gives q^{2n(n-1)} (inv(3412) = 4)"},
      {7, "cassini", cassini},
      {8, "prefix cycle shapes", prefixes},
      {9, "adjudication reports", adjudication},
      {10, "West counts", west},
      {11, "property suites", properties},
  };
  int passed = 0;
  int unexpected = 0;
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome out;
    try {
      out = c.check();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    if (out.pass) {
      ++passed;
      std::printf("criterion %2d %-22s PASS", c.number, c.title);
      if (c.known_failure != nullptr) {
        ++unexpected;
        std::printf(" (unexpected; listed as a known failure)");
      }
    } else {
      ++failed;
      std::printf("criterion %2d %-22s FAIL", c.number, c.title);
      if (c.known_failure != nullptr) {
        std::printf(" (expected: %s)", c.known_failure);
      } else {
        ++unexpected;
      }
    }
    if (!out.detail.empty()) std::printf(" -- %s", out.detail.c_str());
    std::printf("\n");
  }
  std::printf("%d/%zu criteria pass\n", passed, criteria.size());
  if (unexpected > 0) return 1;
  return strict && failed > 0 ? 1 : 0;
}
