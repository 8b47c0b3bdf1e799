#include "fibstat/qfib.hpp"

#include <array>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <tuple>

#include "fibstat/block_word.hpp"
#include "fibstat/permutation.hpp"
#include "fibstat/set_partition.hpp"

namespace fibstat {

namespace {

constexpr std::array kFamilies{Family::I,  Family::IPrime, Family::M,      Family::MPrime,
                               Family::RB, Family::C,      Family::D,      Family::DPrime,
                               Family::W1, Family::W2,     Family::W3};

// Values are immutable once stored; a racing second insert carries the same value.
class Memo {
 public:
  template <typename Compute>
  MultiPoly get(Family f, std::size_t n, bool recursive, Compute&& compute) {
    Key key{static_cast<int>(f), n, recursive};
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    MultiPoly value = compute();
    std::unique_lock lock(mutex_);
    return table_.emplace(key, std::move(value)).first->second;
  }

 private:
  using Key = std::tuple<int, std::size_t, bool>;
  std::shared_mutex mutex_;
  std::map<Key, MultiPoly> table_;
};

Memo& memo() {
  static Memo m;
  return m;
}

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

MultiPoly xy_marker(const BlockWord& w, std::int64_t qexp) {
  return term(static_cast<std::int64_t>(w.singletons()), static_cast<std::int64_t>(w.doubletons()), qexp);
}

MultiPoly cycle_markers(const BlockWord& w, const Permutation& p) {
  std::map<std::uint32_t, std::uint32_t> counts;
  for (const auto& c : cycle_decomposition(p).cycles) counts[static_cast<std::uint32_t>(c.size())] += 1;
  Monomial::ZExponents z(counts.begin(), counts.end());
  return MultiPoly(Monomial(static_cast<std::uint32_t>(w.singletons()),
                            static_cast<std::uint32_t>(w.doubletons()), 0, std::move(z)));
}

MultiPoly structural_oracle(Family f, std::size_t n) {
  MultiPoly total;
  for_each_word(n, [&](const BlockWord& w) {
    switch (f) {
      case Family::I:
        total += xy_marker(w, static_cast<std::int64_t>(inv(perm_from_word(w, Orientation::ReverseLayered))));
        break;
      case Family::IPrime:
        total += xy_marker(w, static_cast<std::int64_t>(inv(perm_from_word(w, Orientation::Layered))));
        break;
      case Family::M:
        total += xy_marker(w, static_cast<std::int64_t>(maj(perm_from_word(w, Orientation::ReverseLayered))));
        break;
      case Family::MPrime:
        total += xy_marker(w, static_cast<std::int64_t>(maj(perm_from_word(w, Orientation::Layered))));
        break;
      case Family::RB:
        total += xy_marker(w, static_cast<std::int64_t>(rb(SetPartition::from_word(w))));
        break;
      case Family::C: total += xy_marker(w, static_cast<std::int64_t>(morse_weight(w))); break;
      case Family::D:
        total += xy_marker(
            w, static_cast<std::int64_t>(cycle_decomposition(perm_from_word(w, Orientation::ReverseLayered)).count()));
        break;
      case Family::DPrime: total += cycle_markers(w, perm_from_word(w, Orientation::ReverseLayered)); break;
      default: throw std::logic_error("not a structural family");
    }
  });
  return total;
}

MultiPoly west_oracle(Family f, std::size_t n) {
  WestClass c = f == Family::W1 ? WestClass::W1 : f == Family::W2 ? WestClass::W2 : WestClass::W3;
  MultiPoly total;
  for (const auto& p : west_class(n, c)) total += Q(static_cast<std::int32_t>(inv(p)));
  return total;
}

// Polynomial index 2s-2 <-> size s; sizes below 1 are the zero polynomial.
MultiPoly west_rec(Family f, std::int64_t size) {
  if (size < 1) return MultiPoly();
  return qfib_recursive(f, static_cast<std::size_t>(size));
}

MultiPoly recursion_step(Family f, std::size_t n_size) {
  const auto n = static_cast<std::int64_t>(n_size);
  auto prev = [&](Family g, std::int64_t k) { return k < 0 ? MultiPoly() : qfib_recursive(g, static_cast<std::size_t>(k)); };
  switch (f) {
    case Family::I:
      if (n == 0) return 1;
      if (n == 1) return X();
      return term(1, 0, n - 1) * prev(f, n - 1) + term(0, 1, 2 * (n - 2)) * prev(f, n - 2);
    case Family::M:
      if (n == 0) return 1;
      if (n == 1) return X();
      return term(1, 0, n - 1) * prev(f, n - 1) + term(0, 1, n - 2) * prev(f, n - 2);
    case Family::C:
      if (n == 0) return 1;
      if (n == 1) return X();
      return X() * prev(f, n - 1) + term(0, 1, n - 1) * prev(f, n - 2);
    case Family::IPrime:
    case Family::MPrime: {
      Family base = f == Family::IPrime ? Family::I : Family::M;
      return Q(static_cast<std::int32_t>(choose2(n))) * Substitution::invert_q().apply(qfib_recursive(base, n_size));
    }
    case Family::D: {
      if (n == 0) return 1;
      if (n == 1) return term(1, 0, 1);
      const std::int64_t m = n - 2;
      MultiPoly out = term(2, 0, 1) * prev(f, m) + (term(0, 2, 2) + term(2, 1, 1, 2)) * prev(f, m - 2);
      for (std::int64_t k = 3; k <= m / 2; ++k) out += term(2, k - 1, 1, 2) * prev(f, m - 2 * k);
      return out;
    }
    case Family::DPrime: {
      if (n == 0) return 1;
      if (n == 1) return X() * Z(1);
      const std::int64_t m = n - 2;
      MultiPoly out = X(2) * Z(2) * prev(f, m) + (Y(2) * Z(2, 2) + MultiPoly(2) * X(2) * Y() * Z(4)) * prev(f, m - 2);
      for (std::int64_t k = 3; k <= m / 2; ++k) {
        out += MultiPoly(2) * X(2) * Y(static_cast<std::int32_t>(k - 1)) * Z(static_cast<std::uint32_t>(2 * k)) *
               prev(f, m - 2 * k);
      }
      return out;
    }
    case Family::W1: {
      if (n == 1) return 1;
      // F_{2p} with p = n - 1 is the size-n value.
      const std::int64_t p = n - 1;
      MultiPoly out = Q(static_cast<std::int32_t>(p - 1)) * west_rec(f, p);
      for (std::int64_t k = 2; k <= p; ++k) {
        out += Q(static_cast<std::int32_t>((p - 1) * (k - 1) + choose2(k))) * west_rec(f, p - k + 1);
      }
      return out;
    }
    case Family::W2: {
      if (n == 1) return 1;
      MultiPoly out = (Q(static_cast<std::int32_t>(n - 1)) + 1) * west_rec(f, n - 1);
      for (std::int64_t k = 1; k <= n - 2; ++k) {
        out += Q(static_cast<std::int32_t>(k * (n - k))) * west_rec(f, n - k - 1);
      }
      return out;
    }
    case Family::W3: {
      if (n == 1) return 1;
      MultiPoly out = (Q(static_cast<std::int32_t>(n - 1)) + 1) * west_rec(Family::W2, n - 1);
      for (std::int64_t k = 1; k <= n - 2; ++k) {
        out += Q(static_cast<std::int32_t>(k * (n - k) + choose2(n - k))) * west_rec(f, k - 1);
      }
      return out;
    }
    case Family::RB: break;
  }
  throw std::invalid_argument("family RB has no recursion");
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::I: return "I";
    case Family::IPrime: return "I'";
    case Family::M: return "M";
    case Family::MPrime: return "M'";
    case Family::RB: return "RB";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::DPrime: return "D'";
    case Family::W1: return "W1";
    case Family::W2: return "W2";
    case Family::W3: return "W3";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view text) {
  for (Family f : kFamilies) {
    if (family_name(f) == text) return f;
  }
  if (text == "Ip") return Family::IPrime;
  if (text == "Mp") return Family::MPrime;
  if (text == "Dp") return Family::DPrime;
  return std::nullopt;
}

std::span<const Family> all_families() { return kFamilies; }

bool is_west(Family f) { return f == Family::W1 || f == Family::W2 || f == Family::W3; }

bool has_recursion(Family f) { return f != Family::RB; }

MultiPoly term(std::int64_t a, std::int64_t b, std::int64_t e, const Integer& c) {
  return MultiPoly(Monomial(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b), static_cast<std::int32_t>(e)), c);
}

MultiPoly qfib_oracle(Family f, std::size_t n) {
  if (is_west(f)) {
    if (n == 0) throw std::invalid_argument("West families are indexed by permutation size n >= 1");
    if (n > kWestBound) throw BoundExceeded(std::string(family_name(f)) + " oracle", n, kWestBound);
    return memo().get(f, n, false, [&] { return west_oracle(f, n); });
  }
  if (n > kStructuralBound) throw BoundExceeded(std::string(family_name(f)) + " oracle", n, kStructuralBound);
  return memo().get(f, n, false, [&] { return structural_oracle(f, n); });
}

MultiPoly qfib_recursive(Family f, std::size_t n) {
  if (!has_recursion(f)) throw std::invalid_argument("family RB has no recursion");
  if (is_west(f)) {
    if (n == 0) throw std::invalid_argument("West families are indexed by permutation size n >= 1");
    if (n > kWestBound) throw BoundExceeded(std::string(family_name(f)) + " recursion", n, kWestBound);
  } else if (n > kRecursionBound) {
    throw BoundExceeded(std::string(family_name(f)) + " recursion", n, kRecursionBound);
  }
  return memo().get(f, n, true, [&] { return recursion_step(f, n); });
}

MultiPoly closed_form_I(std::size_t n) {
  if (n > kRecursionBound) throw BoundExceeded("closed form", n, kRecursionBound);
  const auto nn = static_cast<std::int64_t>(n);
  MultiPoly out;
  for (std::int64_t k = 0; 2 * k <= nn; ++k) {
    out += term(nn - 2 * k, k, choose2(nn) - k, binomial(n - static_cast<std::size_t>(k), static_cast<std::size_t>(k)));
  }
  return out;
}

MultiPoly rb_distribution_filtered(std::size_t n) {
  static const std::vector<SetPartition> patterns = parse_partition_patterns("13/2,123");
  MultiPoly out;
  for (const auto& p : enumerate_partitions_avoiding(n, patterns)) {
    out += term(static_cast<std::int64_t>(p.singletons()), static_cast<std::int64_t>(p.doubletons()),
                static_cast<std::int64_t>(rb(p)));
  }
  return out;
}

Integer fibonacci(std::size_t n) {
  Integer a = 1;
  Integer b = 1;
  for (std::size_t i = 1; i < n; ++i) {
    Integer c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

Integer binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Integer r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace fibstat
