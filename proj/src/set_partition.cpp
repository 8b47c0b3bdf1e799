#include "fibstat/set_partition.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "fibstat/permutation.hpp"

namespace fibstat {

namespace {

void normalize(std::vector<SetPartition::Block>& blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const SetPartition::Block& a, const SetPartition::Block& b) { return a.front() < b.front(); });
}

std::vector<SetPartition::Block> parse_blocks(std::string_view text) {
  std::vector<SetPartition::Block> blocks;
  if (text.empty()) return blocks;
  bool commas = text.find(',') != std::string_view::npos;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t slash = text.find('/', start);
    if (slash == std::string_view::npos) slash = text.size();
    auto piece = text.substr(start, slash - start);
    SetPartition::Block block;
    if (commas) {
      std::size_t i = 0;
      while (i <= piece.size()) {
        std::size_t c = piece.find(',', i);
        if (c == std::string_view::npos) c = piece.size();
        auto num = piece.substr(i, c - i);
        if (num.empty() || !std::all_of(num.begin(), num.end(),
                                        [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
          throw std::invalid_argument("bad partition: " + std::string(text));
        block.push_back(std::stoi(std::string(num)));
        i = c + 1;
      }
    } else {
      for (char ch : piece) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          throw std::invalid_argument("bad partition: " + std::string(text));
        block.push_back(ch - '0');
      }
    }
    if (block.empty()) throw std::invalid_argument("empty block in partition: " + std::string(text));
    blocks.push_back(std::move(block));
    start = slash + 1;
  }
  return blocks;
}

}  // namespace

SetPartition::SetPartition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  std::size_t total = 0;
  for (const auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("set partition blocks must be nonempty");
    total += b.size();
  }
  std::vector<bool> seen(total + 1, false);
  for (const auto& b : blocks_) {
    for (int v : b) {
      if (v < 1 || static_cast<std::size_t>(v) > total || seen[v])
        throw std::invalid_argument("blocks must partition 1.." + std::to_string(total));
      seen[v] = true;
    }
  }
  n_ = total;
  normalize(blocks_);
}

SetPartition SetPartition::parse(std::string_view text) { return SetPartition(parse_blocks(text)); }

SetPartition SetPartition::pattern(std::string_view text) { return standardize(parse_blocks(text)); }

SetPartition SetPartition::from_word(const BlockWord& w) {
  std::vector<Block> blocks;
  int next = 1;
  for (Letter a : w.letters()) {
    if (a == Letter::S) {
      blocks.push_back({next});
      next += 1;
    } else {
      blocks.push_back({next, next + 1});
      next += 2;
    }
  }
  return SetPartition(std::move(blocks));
}

std::size_t SetPartition::singletons() const {
  return static_cast<std::size_t>(
      std::count_if(blocks_.begin(), blocks_.end(), [](const Block& b) { return b.size() == 1; }));
}

std::size_t SetPartition::doubletons() const {
  return static_cast<std::size_t>(
      std::count_if(blocks_.begin(), blocks_.end(), [](const Block& b) { return b.size() == 2; }));
}

SetPartition standardize(std::vector<SetPartition::Block> blocks) {
  std::vector<int> values;
  for (const auto& b : blocks) values.insert(values.end(), b.begin(), b.end());
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end())
    throw std::invalid_argument("repeated value in partition");
  for (auto& b : blocks) {
    for (int& v : b) v = static_cast<int>(std::lower_bound(values.begin(), values.end(), v) - values.begin()) + 1;
  }
  return SetPartition(std::move(blocks));
}

std::string to_string(const SetPartition& p) {
  std::string out;
  bool commas = p.n() > 9;
  for (std::size_t i = 0; i < p.blocks().size(); ++i) {
    if (i > 0) out += '/';
    const auto& b = p.blocks()[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (commas && j > 0) out += ',';
      out += std::to_string(b[j]);
    }
  }
  return out;
}

nlohmann::json to_json(const SetPartition& p) { return nlohmann::json(p.blocks()); }

bool partition_subset(const SetPartition& beta, const std::vector<SetPartition::Block>& alpha) {
  std::vector<std::size_t> owner(beta.n() + 1);
  for (std::size_t b = 0; b < beta.blocks().size(); ++b) {
    for (int v : beta.blocks()[b]) owner[static_cast<std::size_t>(v)] = b;
  }
  std::vector<bool> used(beta.blocks().size(), false);
  for (const auto& a : alpha) {
    if (a.empty()) return false;
    for (int v : a) {
      if (v < 1 || static_cast<std::size_t>(v) > beta.n()) return false;
    }
    std::size_t b = owner[static_cast<std::size_t>(a.front())];
    if (used[b]) return false;
    for (int v : a) {
      if (owner[static_cast<std::size_t>(v)] != b) return false;
    }
    used[b] = true;
  }
  return true;
}

bool partition_contains(const SetPartition& beta, const SetPartition& alpha) {
  const std::size_t n = beta.n();
  const std::size_t m = alpha.n();
  if (m == 0) return true;
  if (m > n || alpha.block_count() > beta.block_count()) return false;

  std::vector<int> block_of(n + 1, 0);
  for (std::size_t i = 0; i < beta.blocks().size(); ++i) {
    for (int v : beta.blocks()[i]) block_of[v] = static_cast<int>(i);
  }
  std::vector<int> alpha_block(m + 1, 0);
  for (std::size_t i = 0; i < alpha.blocks().size(); ++i) {
    for (int v : alpha.blocks()[i]) alpha_block[v] = static_cast<int>(i);
  }

  // Choose values v_1 < ... < v_m of [n]; v_k plays the role of k in alpha.
  // Same-block relations must match pairwise, which is checked incrementally.
  std::vector<int> chosen;
  chosen.reserve(m);
  auto search = [&](auto&& self, int from) -> bool {
    std::size_t k = chosen.size();
    if (k == m) return true;
    for (int v = from; static_cast<std::size_t>(v) + (m - k - 1) <= n; ++v) {
      bool ok = true;
      for (std::size_t j = 0; j < k; ++j) {
        bool same_beta = block_of[chosen[j]] == block_of[v];
        bool same_alpha = alpha_block[j + 1] == alpha_block[k + 1];
        if (same_beta != same_alpha) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(v);
      if (self(self, v + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return search(search, 1);
}

bool avoids_all(const SetPartition& beta, std::span<const SetPartition> patterns) {
  return std::none_of(patterns.begin(), patterns.end(),
                      [&](const SetPartition& a) { return partition_contains(beta, a); });
}

std::vector<SetPartition> parse_partition_patterns(std::string_view text) {
  std::vector<SetPartition> out;
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t j = text.find(',', i);
    if (j == std::string_view::npos) j = text.size();
    auto piece = text.substr(i, j - i);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    if (piece.empty()) throw std::invalid_argument("empty pattern in list: " + std::string(text));
    out.push_back(SetPartition::pattern(piece));
    i = j + 1;
  }
  return out;
}

std::vector<SetPartition> enumerate_partitions(std::size_t n, std::size_t bound) {
  if (n > bound) throw BoundExceeded("filter enumeration of set partitions is limited", n, bound);
  std::vector<SetPartition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Restricted growth strings a_1 = 0, a_i <= 1 + max(a_1..a_{i-1}).
  std::vector<int> rgs(n, 0);
  auto emit = [&] {
    int k = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<SetPartition::Block> blocks(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < n; ++i) blocks[rgs[i]].push_back(static_cast<int>(i + 1));
    out.emplace_back(std::move(blocks));
  };
  auto fill = [&](auto&& self, std::size_t i, int max_so_far) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (int v = 0; v <= max_so_far + 1; ++v) {
      rgs[i] = v;
      self(self, i + 1, std::max(max_so_far, v));
    }
  };
  fill(fill, 1, 0);
  return out;
}

std::vector<SetPartition> enumerate_partitions_avoiding(std::size_t n,
                                                        std::span<const SetPartition> patterns,
                                                        std::size_t bound) {
  std::vector<SetPartition> out;
  for (auto& p : enumerate_partitions(n, bound)) {
    if (avoids_all(p, patterns)) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SetPartition> enumerate_layered_matchings(std::size_t n) {
  std::vector<SetPartition> out;
  for_each_word(n, [&](const BlockWord& w) { out.push_back(SetPartition::from_word(w)); });
  std::sort(out.begin(), out.end());
  return out;
}

bool is_layered_matching(const SetPartition& p) {
  int next = 1;
  for (const auto& b : p.blocks()) {
    if (b.size() > 2 || b.front() != next) return false;
    if (b.size() == 2 && b[1] != next + 1) return false;
    next += static_cast<int>(b.size());
  }
  return true;
}

BlockWord block_structure(const SetPartition& p) {
  if (!is_layered_matching(p)) throw std::invalid_argument(to_string(p) + " is not a layered matching");
  std::vector<Letter> letters;
  for (const auto& b : p.blocks()) letters.push_back(b.size() == 1 ? Letter::S : Letter::D);
  return BlockWord(std::move(letters));
}

std::size_t rb(const SetPartition& p) {
  const auto& blocks = p.blocks();
  std::size_t count = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (int b : blocks[i]) {
      for (std::size_t j = i + 1; j < blocks.size(); ++j) {
        if (blocks[j].back() > b) ++count;
      }
    }
  }
  return count;
}

SetPartition eta(const Permutation& sigma) {
  return SetPartition::from_word(block_structure(sigma, Orientation::ReverseLayered));
}

}  // namespace fibstat
