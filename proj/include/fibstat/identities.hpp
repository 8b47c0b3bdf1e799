#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fibstat/poly.hpp"

namespace fibstat {

/// Where a reading comes from. Stated and variant readings decide verdicts;
/// derived readings are reported for information only.
enum class ReadingOrigin { Stated, Variant, Derived };

std::string_view origin_name(ReadingOrigin o);

struct Reading {
  std::string name;
  ReadingOrigin origin = ReadingOrigin::Stated;
  std::string description;
};

using Indices = std::vector<int>;
using Sides = std::pair<MultiPoly, MultiPoly>;

struct IdentityInfo {
  std::string id;
  std::string statement;
  /// Index names, e.g. {"n"} or {"m", "n"}.
  std::vector<std::string> arity;
  int min_n = 0;
  int default_max_n = 12;
  /// Only for two-index identities: default bound on m.
  std::optional<int> default_max_m;
  std::vector<Reading> readings;
  std::string notes;
  /// Both sides of reading r at the given indices.
  std::function<Sides(const Indices&, std::size_t r)> sides;
};

/// The 19 cataloged identities, in catalog order.
const std::vector<IdentityInfo>& identity_catalog();
const IdentityInfo* find_identity(std::string_view id);
std::vector<std::string> identity_ids();

struct ReadingSummary {
  Reading reading;
  bool holds_on_range = false;
  std::size_t failing = 0;
};

struct InstanceVerdict {
  Indices indices;
  bool holds = false;
  /// Stated or variant reading credited for this instance; empty if none holds.
  std::string reading;
  std::vector<bool> reading_holds;
};

struct Counterexample {
  Indices indices;
  std::string reading;
  std::string lhs;
  std::string rhs;
};

struct IdentityReport {
  std::string id;
  std::string statement;
  std::string range;
  std::vector<ReadingSummary> readings;
  std::vector<InstanceVerdict> instances;
  bool verdict = false;
  /// Name of the first stated or variant reading holding on the whole range.
  std::string holding_reading;
  std::optional<Counterexample> counterexample;
  std::string notes;
};

struct VerifyOptions {
  std::optional<int> max_n;
  std::optional<int> max_m;
  unsigned jobs = 1;
};

/// Index tuples checked for `info` under `opt`.
std::vector<Indices> instance_range(const IdentityInfo& info, const VerifyOptions& opt);

/// Evaluates every reading on every instance. Deterministic for any job count.
/// Throws std::invalid_argument for unknown ids and BoundExceeded when a
/// required oracle is out of range.
IdentityReport verify_identity(std::string_view id, const VerifyOptions& opt = {});

nlohmann::json to_json(const IdentityReport& r);
std::string to_text(const IdentityReport& r);

}  // namespace fibstat
