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

class Permutation;

/// Partition of [n] in standard order: blocks by increasing minimum, each
/// block ascending. Every constructed value is normalized.
class SetPartition {
 public:
  using Block = std::vector<int>;

  SetPartition() = default;
  /// Throws std::invalid_argument unless the blocks are nonempty, disjoint and cover 1..n.
  explicit SetPartition(std::vector<Block> blocks);

  /// Slash notation "12/3/45/6/7"; blocks use commas ("1,10/2") once n > 9.
  /// The empty string is the empty partition.
  static SetPartition parse(std::string_view text);
  /// Like parse, but standardizes arbitrary positive labels: "26/4" -> 13/2.
  static SetPartition pattern(std::string_view text);
  /// Layered matching partition with the given block structure.
  static SetPartition from_word(const BlockWord& w);

  std::size_t n() const { return n_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t singletons() const;
  std::size_t doubletons() const;

  auto operator<=>(const SetPartition&) const = default;
  bool operator==(const SetPartition&) const = default;

 private:
  std::vector<Block> blocks_;
  std::size_t n_ = 0;
};

/// Relabels the values of `blocks` by rank and normalizes.
SetPartition standardize(std::vector<SetPartition::Block> blocks);

std::string to_string(const SetPartition& p);
nlohmann::json to_json(const SetPartition& p);

/// Literal containment: each block of alpha lies inside its own distinct block of beta.
bool partition_subset(const SetPartition& beta, const std::vector<SetPartition::Block>& alpha);
/// Pattern containment: some literal sub-partition of beta is order isomorphic to alpha.
bool partition_contains(const SetPartition& beta, const SetPartition& alpha);
bool avoids_all(const SetPartition& beta, std::span<const SetPartition> patterns);
/// Comma separated patterns in slash notation, e.g. "13/2,123".
std::vector<SetPartition> parse_partition_patterns(std::string_view text);

/// All partitions of [n] (restricted growth order). Throws BoundExceeded when n > bound.
std::vector<SetPartition> enumerate_partitions(std::size_t n, std::size_t bound = kFilterBound);
/// Pi_n(R) by filtering all partitions; sorted.
std::vector<SetPartition> enumerate_partitions_avoiding(std::size_t n,
                                                        std::span<const SetPartition> patterns,
                                                        std::size_t bound = kFilterBound);
/// Structural generator over block words; sorted.
std::vector<SetPartition> enumerate_layered_matchings(std::size_t n);

/// Blocks are consecutive intervals of size at most 2.
bool is_layered_matching(const SetPartition& p);
/// Throws std::invalid_argument unless p is a layered matching.
BlockWord block_structure(const SetPartition& p);

/// Pairs (b, B_j) with b in B_i, j > i and max B_j > b.
std::size_t rb(const SetPartition& p);

/// Reverse layered matching -> layered matching partition with the same block
/// word. Throws std::invalid_argument for other permutations.
SetPartition eta(const Permutation& sigma);

}  // namespace fibstat
