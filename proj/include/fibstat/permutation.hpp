#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fibstat/block_word.hpp"
#include "fibstat/errors.hpp"

namespace fibstat {

/// One-line notation of a permutation of 1..n. Positions are 1-based in every
/// statistic (descent sets, maj, gaps); storage is 0-based.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless entries are exactly 1..n.
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(std::size_t n);
  /// Digit string ("6753421") or whitespace/comma separated values ("10 9 8 ...").
  static Permutation parse(std::string_view text);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  std::span<const int> entries() const { return entries_; }

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> entries_;
};

/// Digit string for n <= 9, space separated otherwise.
std::string to_string(const Permutation& p);
nlohmann::json to_json(const Permutation& p);

bool contains_pattern(const Permutation& sigma, const Permutation& pattern);
bool avoids_all(const Permutation& sigma, std::span<const Permutation> patterns);
/// Comma separated patterns, e.g. "123,132,213".
std::vector<Permutation> parse_patterns(std::string_view text);

/// S_n(R) by scanning all n! permutations, in lexicographic order.
/// Throws BoundExceeded when n > bound.
std::vector<Permutation> enumerate_avoiders(std::size_t n, std::span<const Permutation> patterns,
                                            std::size_t bound = kFilterBound);

std::size_t inv(const Permutation& p);
/// 1-based positions i with p_i > p_{i+1}.
std::vector<std::size_t> descent_set(const Permutation& p);
std::size_t maj(const Permutation& p);
Permutation reversal(const Permutation& p);

struct CycleDecomposition {
  /// Each cycle starts at its minimum; cycles ordered by minimum.
  std::vector<std::vector<int>> cycles;

  std::size_t count() const { return cycles.size(); }
  std::size_t count_of_length(std::size_t len) const;
  /// Cycle lengths, descending.
  std::vector<std::size_t> lengths() const;
  /// Rebuilds the permutation from the cycles.
  Permutation compose() const;
};

CycleDecomposition cycle_decomposition(const Permutation& p);
/// "(192738)(465)" for n <= 9, "(1 9 2)(...)" otherwise.
std::string to_string(const CycleDecomposition& c);

// ---------------------------------------------------------------------------
// Layered and reverse layered matchings.

enum class LayeredKind { LayeredMatching, ReverseLayeredMatching, Both, Neither };
enum class Orientation { ReverseLayered, Layered };

std::string_view layered_kind_name(LayeredKind k);

bool is_layered_matching(const Permutation& p);
bool is_reverse_layered_matching(const Permutation& p);
LayeredKind layered_classify(const Permutation& p);

/// Block word of a (reverse) layered matching; reverse layered reading is
/// preferred when the permutation is both. Throws std::invalid_argument for
/// permutations of neither kind.
BlockWord block_structure(const Permutation& p);
BlockWord block_structure(const Permutation& p, Orientation o);
Permutation perm_from_word(const BlockWord& w, Orientation o);

/// Structural generators, lexicographic order.
std::vector<Permutation> reverse_layered_matchings(std::size_t n);
std::vector<Permutation> layered_matchings(std::size_t n);

// ---------------------------------------------------------------------------
// Even-Fibonacci classes grown by inserting the maximum into gaps.

enum class WestClass { W1, W2, W3 };

std::string_view west_class_name(WestClass c);
/// W1 = {123, 2143}, W2 = {132, 3241}, W3 = {132, 3412}.
std::vector<Permutation> west_patterns(WestClass c);
/// Members of size n+1 obtained by inserting n+1 into a gap of sigma (size n).
/// Gap k places the new maximum immediately before p_k (k = n+1 appends).
std::vector<Permutation> west_children(const Permutation& sigma, WestClass c);
/// Members of size n >= 1, lexicographic order.
std::vector<Permutation> west_class(std::size_t n, WestClass c);

}  // namespace fibstat
