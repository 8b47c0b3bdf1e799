#include "fibstat/permutation.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace fibstat {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  std::vector<bool> seen(entries_.size() + 1, false);
  for (int v : entries_) {
    if (v < 1 || static_cast<std::size_t>(v) > entries_.size() || seen[v])
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(entries_.size()));
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
  bool separated = text.find_first_of(" ,\t") != std::string_view::npos;
  std::vector<int> e;
  if (!separated) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
        throw std::invalid_argument("bad permutation digit string: " + std::string(text));
      e.push_back(c - '0');
    }
  } else {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) ++i;
      if (i == text.size()) break;
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw std::invalid_argument("bad permutation: " + std::string(text));
      e.push_back(std::stoi(std::string(text.substr(i, j - i))));
      i = j;
    }
  }
  return Permutation(std::move(e));
}

std::string to_string(const Permutation& p) {
  std::string out;
  bool digits = p.size() <= 9;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!digits && i > 0) out += ' ';
    out += std::to_string(p[i]);
  }
  return out;
}

nlohmann::json to_json(const Permutation& p) {
  return nlohmann::json(std::vector<int>(p.entries().begin(), p.entries().end()));
}

// ---------------------------------------------------------------------------
// Patterns

namespace {

bool embed(std::span<const int> sigma, std::span<const int> pattern, std::size_t start,
           std::vector<int>& chosen) {
  std::size_t depth = chosen.size();
  if (depth == pattern.size()) return true;
  std::size_t remaining = pattern.size() - depth;
  for (std::size_t i = start; i + remaining <= sigma.size(); ++i) {
    int v = sigma[i];
    bool consistent = true;
    for (std::size_t j = 0; j < depth; ++j) {
      if ((chosen[j] < v) != (pattern[j] < pattern[depth])) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;
    chosen.push_back(v);
    if (embed(sigma, pattern, i + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool contains_pattern(const Permutation& sigma, const Permutation& pattern) {
  if (pattern.size() > sigma.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(pattern.size());
  return embed(sigma.entries(), pattern.entries(), 0, chosen);
}

bool avoids_all(const Permutation& sigma, std::span<const Permutation> patterns) {
  return std::none_of(patterns.begin(), patterns.end(),
                      [&](const Permutation& p) { return contains_pattern(sigma, p); });
}

std::vector<Permutation> parse_patterns(std::string_view text) {
  std::vector<Permutation> out;
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t j = text.find(',', i);
    if (j == std::string_view::npos) j = text.size();
    auto piece = text.substr(i, j - i);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    if (piece.empty()) throw std::invalid_argument("empty pattern in list: " + std::string(text));
    out.push_back(Permutation::parse(piece));
    i = j + 1;
  }
  return out;
}

std::vector<Permutation> enumerate_avoiders(std::size_t n, std::span<const Permutation> patterns,
                                            std::size_t bound) {
  if (n > bound) {
    throw BoundExceeded("filter enumeration of S_n(R) is limited; use a structural generator", n,
                        bound);
  }
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  std::vector<Permutation> out;
  do {
    Permutation p(e);
    if (avoids_all(p, patterns)) out.push_back(std::move(p));
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Statistics

std::size_t inv(const Permutation& p) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) count += p[i] > p[j] ? 1 : 0;
  }
  return count;
}

std::vector<std::size_t> descent_set(const Permutation& p) {
  std::vector<std::size_t> d;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] > p[i + 1]) d.push_back(i + 1);
  }
  return d;
}

std::size_t maj(const Permutation& p) {
  auto d = descent_set(p);
  return std::accumulate(d.begin(), d.end(), std::size_t{0});
}

Permutation reversal(const Permutation& p) {
  std::vector<int> e(p.entries().rbegin(), p.entries().rend());
  return Permutation(std::move(e));
}

std::size_t CycleDecomposition::count_of_length(std::size_t len) const {
  return static_cast<std::size_t>(std::count_if(
      cycles.begin(), cycles.end(), [len](const auto& c) { return c.size() == len; }));
}

std::vector<std::size_t> CycleDecomposition::lengths() const {
  std::vector<std::size_t> out;
  out.reserve(cycles.size());
  for (const auto& c : cycles) out.push_back(c.size());
  std::sort(out.rbegin(), out.rend());
  return out;
}

Permutation CycleDecomposition::compose() const {
  std::size_t n = 0;
  for (const auto& c : cycles) n += c.size();
  std::vector<int> e(n, 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) e[c[i] - 1] = c[(i + 1) % c.size()];
  }
  return Permutation(std::move(e));
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
  CycleDecomposition out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(p[i] - 1)) {
      seen[i] = true;
      cycle.push_back(static_cast<int>(i + 1));
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

std::string to_string(const CycleDecomposition& c) {
  std::size_t n = 0;
  for (const auto& cyc : c.cycles) n += cyc.size();
  std::string out;
  for (const auto& cyc : c.cycles) {
    out += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (n > 9 && i > 0) out += ' ';
      out += std::to_string(cyc[i]);
    }
    out += ')';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Layered matchings

std::string_view layered_kind_name(LayeredKind k) {
  switch (k) {
    case LayeredKind::LayeredMatching: return "layered-matching";
    case LayeredKind::ReverseLayeredMatching: return "reverse-layered-matching";
    case LayeredKind::Both: return "both";
    case LayeredKind::Neither: return "neither";
  }
  return "neither";
}

namespace {

// Reads the block word, or returns nullopt if p is not a matching of the given orientation.
std::optional<BlockWord> read_word(const Permutation& p, Orientation o) {
  std::vector<Letter> letters;
  const int n = static_cast<int>(p.size());
  std::size_t i = 0;
  if (o == Orientation::Layered) {
    // Layers hold the smallest unused values, each decreasing.
    int low = 1;
    while (i < p.size()) {
      if (p[i] == low) {
        letters.push_back(Letter::S);
        low += 1;
        i += 1;
      } else if (p[i] == low + 1 && i + 1 < p.size() && p[i + 1] == low) {
        letters.push_back(Letter::D);
        low += 2;
        i += 2;
      } else {
        return std::nullopt;
      }
    }
  } else {
    // Layers hold the largest unused values, each increasing.
    int top = n;
    while (i < p.size()) {
      if (p[i] == top) {
        letters.push_back(Letter::S);
        top -= 1;
        i += 1;
      } else if (p[i] == top - 1 && i + 1 < p.size() && p[i + 1] == top) {
        letters.push_back(Letter::D);
        top -= 2;
        i += 2;
      } else {
        return std::nullopt;
      }
    }
  }
  return BlockWord(std::move(letters));
}

}  // namespace

bool is_layered_matching(const Permutation& p) { return read_word(p, Orientation::Layered).has_value(); }

bool is_reverse_layered_matching(const Permutation& p) {
  return read_word(p, Orientation::ReverseLayered).has_value();
}

LayeredKind layered_classify(const Permutation& p) {
  bool layered = is_layered_matching(p);
  bool reverse = is_reverse_layered_matching(p);
  if (layered && reverse) return LayeredKind::Both;
  if (layered) return LayeredKind::LayeredMatching;
  if (reverse) return LayeredKind::ReverseLayeredMatching;
  return LayeredKind::Neither;
}

BlockWord block_structure(const Permutation& p) {
  if (auto w = read_word(p, Orientation::ReverseLayered)) return *w;
  if (auto w = read_word(p, Orientation::Layered)) return *w;
  throw std::invalid_argument(to_string(p) + " is neither a layered nor a reverse layered matching");
}

BlockWord block_structure(const Permutation& p, Orientation o) {
  if (auto w = read_word(p, o)) return *w;
  throw std::invalid_argument(to_string(p) + (o == Orientation::Layered
                                                  ? " is not a layered matching"
                                                  : " is not a reverse layered matching"));
}

Permutation perm_from_word(const BlockWord& w, Orientation o) {
  const int n = static_cast<int>(word_length(w));
  std::vector<int> e;
  e.reserve(n);
  if (o == Orientation::Layered) {
    int low = 1;
    for (Letter a : w.letters()) {
      if (a == Letter::S) {
        e.push_back(low++);
      } else {
        e.push_back(low + 1);
        e.push_back(low);
        low += 2;
      }
    }
  } else {
    int top = n;
    for (Letter a : w.letters()) {
      if (a == Letter::S) {
        e.push_back(top--);
      } else {
        e.push_back(top - 1);
        e.push_back(top);
        top -= 2;
      }
    }
  }
  return Permutation(std::move(e));
}

namespace {

std::vector<Permutation> matchings(std::size_t n, Orientation o) {
  std::vector<Permutation> out;
  for_each_word(n, [&](const BlockWord& w) { out.push_back(perm_from_word(w, o)); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Permutation> reverse_layered_matchings(std::size_t n) {
  return matchings(n, Orientation::ReverseLayered);
}

std::vector<Permutation> layered_matchings(std::size_t n) { return matchings(n, Orientation::Layered); }

// ---------------------------------------------------------------------------
// West classes

std::string_view west_class_name(WestClass c) {
  switch (c) {
    case WestClass::W1: return "W1";
    case WestClass::W2: return "W2";
    case WestClass::W3: return "W3";
  }
  return "W1";
}

std::vector<Permutation> west_patterns(WestClass c) {
  switch (c) {
    case WestClass::W1: return {Permutation({1, 2, 3}), Permutation({2, 1, 4, 3})};
    case WestClass::W2: return {Permutation({1, 3, 2}), Permutation({3, 2, 4, 1})};
    case WestClass::W3: return {Permutation({1, 3, 2}), Permutation({3, 4, 1, 2})};
  }
  return {};
}

namespace {

// Whether inserting the new maximum before p_k (1-based gap k) keeps sigma in the class.
bool gap_is_legal(std::span<const int> sigma, std::size_t k, WestClass c) {
  const std::size_t m = sigma.size();  // new size is m + 1
  auto prefix = sigma.first(k - 1);
  auto suffix = sigma.subspan(k - 1);
  switch (c) {
    case WestClass::W1: {
      // With two or more entries before the maximum: they must descend (no 123),
      // and nothing after may exceed the second-to-last of them (no 2143).
      if (k <= 2) return true;
      if (!std::is_sorted(prefix.begin(), prefix.end(), std::greater<>())) return false;
      int guard = prefix[prefix.size() - 2];
      return std::all_of(suffix.begin(), suffix.end(), [guard](int v) { return v < guard; });
    }
    case WestClass::W2:
    case WestClass::W3: {
      if (k == 1 || k == m + 1) return true;
      // Interior: everything after must lie below everything before (no 132) ...
      int low = *std::min_element(prefix.begin(), prefix.end());
      int high = *std::max_element(suffix.begin(), suffix.end());
      if (high > low) return false;
      // ... with an ascending prefix (no 3241) or a descending suffix (no 3412).
      if (c == WestClass::W2) return std::is_sorted(prefix.begin(), prefix.end());
      return std::is_sorted(suffix.begin(), suffix.end(), std::greater<>());
    }
  }
  return false;
}

}  // namespace

std::vector<Permutation> west_children(const Permutation& sigma, WestClass c) {
  const std::size_t m = sigma.size();
  std::vector<Permutation> out;
  for (std::size_t k = 1; k <= m + 1; ++k) {
    if (!gap_is_legal(sigma.entries(), k, c)) continue;
    std::vector<int> e(sigma.entries().begin(), sigma.entries().end());
    e.insert(e.begin() + static_cast<std::ptrdiff_t>(k - 1), static_cast<int>(m + 1));
    out.emplace_back(std::move(e));
#ifndef NDEBUG
    {
      auto patterns = west_patterns(c);
      assert(avoids_all(out.back(), patterns) && "illegal gap insertion");
    }
#endif
  }
  return out;
}

std::vector<Permutation> west_class(std::size_t n, WestClass c) {
  if (n == 0) throw std::invalid_argument("west_class requires n >= 1");
  std::vector<Permutation> level{Permutation({1})};
  for (std::size_t size = 1; size < n; ++size) {
    std::vector<Permutation> next;
    for (const auto& p : level) {
      auto kids = west_children(p, c);
      next.insert(next.end(), std::make_move_iterator(kids.begin()), std::make_move_iterator(kids.end()));
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  return level;
}

}  // namespace fibstat
