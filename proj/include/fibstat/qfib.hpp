#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "fibstat/errors.hpp"
#include "fibstat/poly.hpp"

namespace fibstat {

/// q-Fibonacci families.
///  I, I'   inv over reverse layered / layered matchings
///  M, M'   maj over the same two classes
///  RB      rb over layered matching partitions
///  C       Morse-sequence weight
///  D, D'   cycle count / cycle-length markers over reverse layered matchings
///  W1..W3  inv over S_n(123,2143), S_n(132,3241), S_n(132,3412)
enum class Family { I, IPrime, M, MPrime, RB, C, D, DPrime, W1, W2, W3 };

std::string_view family_name(Family f);
/// Accepts the display names ("I'", "M'", "D'") and the ASCII aliases "Ip", "Mp", "Dp".
std::optional<Family> parse_family(std::string_view text);
std::span<const Family> all_families();

bool is_west(Family f);
/// RB is the only family without a recursion.
bool has_recursion(Family f);

/// Largest n for oracles over structurally generated classes.
inline constexpr std::size_t kStructuralBound = 26;
/// Largest permutation size for West-class oracles (gap insertion).
inline constexpr std::size_t kWestBound = 12;
/// Largest n accepted by recursions and the closed form.
inline constexpr std::size_t kRecursionBound = 100;

/// Distribution polynomial computed from the objects themselves. For W
/// families n is the permutation size (n >= 1); the polynomial is the one
/// indexed 2n-2. Throws BoundExceeded.
MultiPoly qfib_oracle(Family f, std::size_t n);

/// Value produced by the family's recursion with memoization. I' and M' are
/// obtained from I and M by q^{C(n,2)} (q -> 1/q). Throws std::invalid_argument
/// for RB and BoundExceeded past kRecursionBound (kWestBound for W families).
MultiPoly qfib_recursive(Family f, std::size_t n);

/// Sum over 2k <= n of C(n-k, k) x^{n-2k} y^k q^{C(n,2)-k}.
MultiPoly closed_form_I(std::size_t n);

/// rb distribution (with x, y markers) over Pi_n(13/2, 123) found by filtering
/// every set partition of [n]. Throws BoundExceeded for n > kFilterBound.
MultiPoly rb_distribution_filtered(std::size_t n);

/// F_0 = F_1 = 1.
Integer fibonacci(std::size_t n);
Integer binomial(std::size_t n, std::size_t k);

/// Shorthand for the single term c * x^a y^b q^e.
MultiPoly term(std::int64_t a, std::int64_t b, std::int64_t e, const Integer& c = 1);

}  // namespace fibstat
