#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibstat/qfib.hpp"

namespace fibstat::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kBoundExceeded = 3 };

enum class Verb { Enumerate, Distribution, Qfib, Verify, Table };
enum class Format { Text, Json, Csv, Latex };
enum class Objects { Permutations, Partitions, Words };
enum class Method { Oracle, Recursion, ClosedForm };
enum class Stat { Inv, Maj, Cycles, Rb };

/// How enumerate/distribution produce their class.
enum class ClassKind { Patterns, ReverseLayered, Layered, West, LayeredPartitions, AllWords };

struct Command {
  Verb verb = Verb::Qfib;
  Format format = Format::Text;

  // enumerate, distribution
  Objects objects = Objects::Permutations;
  ClassKind class_kind = ClassKind::Patterns;
  std::string class_spec;
  Stat stat = Stat::Inv;
  std::size_t n = 0;

  // qfib, table
  Family family = Family::I;
  Method method = Method::Oracle;

  // verify
  std::vector<std::string> identities;
  std::optional<int> max_n;
  std::optional<int> max_m;
  unsigned jobs = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by parse_args for --help; carries the help text.
struct HelpRequested {
  std::string text;
};

/// args excludes the program name. Throws UsageError or HelpRequested.
Command parse_args(const std::vector<std::string>& args);

struct Result {
  std::string out;
  std::string err;
  int exit_code = kOk;
};

Result execute(const Command& c);

/// parse_args + execute with exit-code mapping; used by the fibstat tool.
Result run(const std::vector<std::string>& args);

}  // namespace fibstat::cli
