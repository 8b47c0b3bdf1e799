#include "fibstat/block_word.hpp"

#include <algorithm>
#include <stdexcept>

#include "fibstat/permutation.hpp"

namespace fibstat {

BlockWord BlockWord::parse(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'S':
      case 's': letters.push_back(Letter::S); break;
      case 'D':
      case 'd': letters.push_back(Letter::D); break;
      default: throw std::invalid_argument("block word letters are S and D: " + std::string(text));
    }
  }
  return BlockWord(std::move(letters));
}

BlockWord BlockWord::parse_morse(std::string_view text) {
  // UTF-8 glyphs: bullet U+2022, middle dot U+00B7, minus sign U+2212, en dash U+2013.
  static constexpr std::string_view kDots[] = {"\xE2\x80\xA2", "\xC2\xB7"};
  static constexpr std::string_view kDashes[] = {"\xE2\x88\x92", "\xE2\x80\x93"};
  std::vector<Letter> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '.') {
      letters.push_back(Letter::S);
      ++i;
      continue;
    }
    if (text[i] == '-') {
      letters.push_back(Letter::D);
      ++i;
      continue;
    }
    bool matched = false;
    for (auto g : kDots) {
      if (text.substr(i).starts_with(g)) {
        letters.push_back(Letter::S);
        i += g.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      for (auto g : kDashes) {
        if (text.substr(i).starts_with(g)) {
          letters.push_back(Letter::D);
          i += g.size();
          matched = true;
          break;
        }
      }
    }
    if (!matched) throw std::invalid_argument("bad Morse sequence: " + std::string(text));
  }
  return BlockWord(std::move(letters));
}

std::size_t BlockWord::singletons() const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), Letter::S));
}

std::size_t BlockWord::doubletons() const { return letters_.size() - singletons(); }

std::size_t word_length(const BlockWord& w) { return w.singletons() + 2 * w.doubletons(); }

std::string to_string(const BlockWord& w) {
  std::string out;
  out.reserve(w.size());
  for (Letter a : w.letters()) out += static_cast<char>(a);
  return out;
}

std::string to_morse(const BlockWord& w) {
  std::string out;
  out.reserve(w.size());
  for (Letter a : w.letters()) out += a == Letter::S ? '.' : '-';
  return out;
}

namespace {

void extend(std::vector<Letter>& prefix, std::size_t remaining,
            const std::function<void(const BlockWord&)>& visit) {
  if (remaining == 0) {
    visit(BlockWord(prefix));
    return;
  }
  if (remaining >= 2) {
    prefix.push_back(Letter::D);
    extend(prefix, remaining - 2, visit);
    prefix.pop_back();
  }
  prefix.push_back(Letter::S);
  extend(prefix, remaining - 1, visit);
  prefix.pop_back();
}

}  // namespace

void for_each_word(std::size_t n, const std::function<void(const BlockWord&)>& visit) {
  std::vector<Letter> prefix;
  prefix.reserve(n);
  extend(prefix, n, visit);
}

std::vector<BlockWord> enumerate_words(std::size_t n) {
  std::vector<BlockWord> out;
  for_each_word(n, [&](const BlockWord& w) { out.push_back(w); });
  return out;
}

MultiPoly weight_inv(const BlockWord& w) {
  std::int64_t qexp = 0;
  std::size_t right = word_length(w);
  for (Letter a : w.letters()) {
    right -= letter_length(a);
    qexp += static_cast<std::int64_t>(a == Letter::S ? right : 2 * right);
  }
  return MultiPoly(Monomial(static_cast<std::uint32_t>(w.singletons()),
                            static_cast<std::uint32_t>(w.doubletons()), static_cast<std::int32_t>(qexp)));
}

MultiPoly weight_maj(const BlockWord& w) {
  std::int64_t qexp = 0;
  std::size_t left = 0;
  for (Letter a : w.letters()) {
    qexp += static_cast<std::int64_t>(left);
    left += letter_length(a);
  }
  return MultiPoly(Monomial(static_cast<std::uint32_t>(w.singletons()),
                            static_cast<std::uint32_t>(w.doubletons()), static_cast<std::int32_t>(qexp)));
}

MultiPoly weight_rb(const BlockWord& w) { return weight_maj(w); }

std::size_t morse_weight(const BlockWord& w) {
  std::size_t total = 0;
  std::size_t left = 0;
  for (Letter a : w.letters()) {
    if (a == Letter::D) total += left + 1;
    left += letter_length(a);
  }
  return total;
}

Permutation morse_to_perm(const BlockWord& w) { return perm_from_word(w, Orientation::Layered); }

std::vector<std::size_t> interleave_order(std::size_t k) {
  std::vector<std::size_t> order;
  order.reserve(k);
  std::size_t lo = 0;
  std::size_t hi = k;
  while (lo < hi) {
    order.push_back(lo++);
    if (lo < hi) order.push_back(--hi);
  }
  return order;
}

BlockWord interleave(const BlockWord& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (std::size_t i : interleave_order(w.size())) out.push_back(w[i]);
  return BlockWord(std::move(out));
}

BlockWord deinterleave(const BlockWord& interleaved) {
  std::vector<Letter> out(interleaved.size());
  auto order = interleave_order(interleaved.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) out[order[pos]] = interleaved[pos];
  return BlockWord(std::move(out));
}

// ---------------------------------------------------------------------------

std::string_view prefix_kind_name(PrefixKind k) {
  switch (k) {
    case PrefixKind::SS: return "SS";
    case PrefixKind::DD: return "DD";
    case PrefixKind::DSStarS: return "DS*S";
    case PrefixKind::DSSD: return "DSSD";
    case PrefixKind::SDlS: return "SDlS";
    case PrefixKind::DSDlS: return "DSDlS";
    case PrefixKind::Residual: return "RESIDUAL";
  }
  return "RESIDUAL";
}

namespace {

PrefixClass make(PrefixKind kind, std::size_t ell, std::size_t first, std::size_t last_exclusive,
                 std::vector<std::size_t> cycles) {
  PrefixClass pc;
  pc.kind = kind;
  pc.ell = ell;
  for (std::size_t i = first; i < last_exclusive; ++i) pc.consumed.push_back(i);
  std::sort(cycles.rbegin(), cycles.rend());
  pc.predicted_cycles = std::move(cycles);
  return pc;
}

std::size_t count_d(const BlockWord& v) { return v.doubletons(); }

}  // namespace

PrefixClass classify_prefix(const BlockWord& v) {
  if (v.empty()) throw std::invalid_argument("classify_prefix needs a nonempty word");
  const std::size_t len = v.size();
  const Letter b0 = v[0];

  if (len == 1) {
    return b0 == Letter::S ? make(PrefixKind::Residual, 0, 0, 1, {1})
                           : make(PrefixKind::Residual, 1, 0, 1, {1, 1});
  }

  if (b0 == Letter::S) {
    std::size_t i = 1;
    while (i < len && v[i] == Letter::D) ++i;
    std::size_t run = i - 1;
    if (i == len) return make(PrefixKind::Residual, run, 0, len, {2 * run + 1});
    if (run == 0) return make(PrefixKind::SS, 0, 0, 2, {2});
    return make(PrefixKind::SDlS, run, 0, i + 1, {2 * run + 2});
  }

  if (v[1] == Letter::D) return make(PrefixKind::DD, 0, 0, 2, {2, 2});

  // D S, then pairs read two at a time.
  std::size_t m = 0;
  std::size_t i = 2;
  while (true) {
    if (i == len) return make(PrefixKind::Residual, count_d(v), 0, len, {4 * m + 3});
    if (i + 1 == len) {
      if (v[i] == Letter::S) return make(PrefixKind::DSDlS, 2 * m, 0, len, {4 * m + 4});
      return make(PrefixKind::Residual, count_d(v), 0, len, {4 * m + 5});
    }
    Letter a = v[i];
    Letter b = v[i + 1];
    if (a == Letter::D && b == Letter::D) {
      ++m;
      i += 2;
      continue;
    }
    if (b == Letter::S) {
      PrefixClass pc = make(m == 0 ? PrefixKind::DSStarS : PrefixKind::DSDlS, 2 * m, 0, i, {4 * m + 4});
      pc.consumed.push_back(i + 1);
      pc.star = i;
      return pc;
    }
    // (S, D)
    return make(m == 0 ? PrefixKind::DSSD : PrefixKind::DSDlS, 2 * m + 1, 0, i + 2, {4 * m + 6});
  }
}

std::vector<std::size_t> predicted_cycle_type(const BlockWord& w) {
  std::vector<std::size_t> cycles;
  std::vector<Letter> rest(w.letters().begin(), w.letters().end());
  while (!rest.empty()) {
    BlockWord current(rest);
    PrefixClass pc = classify_prefix(interleave(current));
    cycles.insert(cycles.end(), pc.predicted_cycles.begin(), pc.predicted_cycles.end());
    std::size_t front = 0;
    std::size_t back = 0;
    if (pc.star) {
      front = *pc.star / 2;
      back = *pc.star / 2 + 1;
    } else {
      std::size_t p = pc.consumed.size();
      front = (p + 1) / 2;
      back = p / 2;
    }
    rest = std::vector<Letter>(rest.begin() + static_cast<std::ptrdiff_t>(front),
                               rest.end() - static_cast<std::ptrdiff_t>(back));
  }
  std::sort(cycles.rbegin(), cycles.rend());
  return cycles;
}

}  // namespace fibstat
