#pragma once

// Words over {S, D}: block structures of (reverse) layered matchings and of
// layered matching partitions, and Morse sequences (dot = S, dash = D).

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fibstat/poly.hpp"

namespace fibstat {

class Permutation;

enum class Letter : char { S = 'S', D = 'D' };

inline constexpr std::size_t letter_length(Letter a) { return a == Letter::S ? 1 : 2; }

class BlockWord {
 public:
  BlockWord() = default;
  explicit BlockWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// "DSDSS" (case insensitive). Throws std::invalid_argument.
  static BlockWord parse(std::string_view text);
  /// ".", "-" (also accepts the bullet and minus glyphs).
  static BlockWord parse_morse(std::string_view text);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }

  std::size_t singletons() const;
  std::size_t doubletons() const;

  auto operator<=>(const BlockWord&) const = default;
  bool operator==(const BlockWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// #S + 2 #D.
std::size_t word_length(const BlockWord& w);

std::string to_string(const BlockWord& w);
std::string to_morse(const BlockWord& w);

/// Visits every word of length n in lexicographic order (D < S).
void for_each_word(std::size_t n, const std::function<void(const BlockWord&)>& visit);
std::vector<BlockWord> enumerate_words(std::size_t n);

/// Inversion weight: S -> x q^{len(right)}, D -> y q^{2 len(right)}.
MultiPoly weight_inv(const BlockWord& w);
/// Major-index weight: S -> x q^{len(left)}, D -> y q^{len(left)}.
MultiPoly weight_maj(const BlockWord& w);
/// Right-bigger weight on layered matching partitions; same letter weights as weight_maj.
MultiPoly weight_rb(const BlockWord& w);

/// Sum over dashes of (length before the dash) + 1.
std::size_t morse_weight(const BlockWord& w);
/// Layered matching whose k-th layer is a singleton iff letter k is a dot.
Permutation morse_to_perm(const BlockWord& w);

/// a_1 a_k a_2 a_{k-1} ...
BlockWord interleave(const BlockWord& w);
BlockWord deinterleave(const BlockWord& interleaved);
/// Original (0-based) letter index sitting at each position of interleave(w) for a word of k letters.
std::vector<std::size_t> interleave_order(std::size_t k);

// ---------------------------------------------------------------------------
// Prefix classification of interleaved words.

enum class PrefixKind { SS, DD, DSStarS, DSSD, SDlS, DSDlS, Residual };

std::string_view prefix_kind_name(PrefixKind k);

struct PrefixClass {
  PrefixKind kind = PrefixKind::Residual;
  /// Run length of the D block for SDlS / DSDlS; number of D letters for Residual.
  std::size_t ell = 0;
  /// 0-based positions in the interleaved word whose letters make up the leading cycle(s).
  std::vector<std::size_t> consumed;
  /// Position skipped by the leading cycle (the '*' of DS*S and its extensions).
  std::optional<std::size_t> star;
  /// Cycle lengths produced by the consumed letters, descending.
  std::vector<std::size_t> predicted_cycles;

  std::size_t consumed_letters() const { return consumed.size(); }
};

/// Classifies the leading shape of an interleaved word. Precondition: nonempty.
PrefixClass classify_prefix(const BlockWord& interleaved);

/// Cycle type of the reverse layered matching with block word w, predicted by
/// repeatedly classifying and peeling the outer letters. Sorted descending.
std::vector<std::size_t> predicted_cycle_type(const BlockWord& w);

}  // namespace fibstat
