#include "fibstat/cli.hpp"

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fibstat/block_word.hpp"
#include "fibstat/identities.hpp"
#include "fibstat/permutation.hpp"
#include "fibstat/set_partition.hpp"

namespace fibstat::cli {

namespace {

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (Family f : all_families()) out.emplace_back(family_name(f));
  return out;
}

Format parse_format(const std::string& s, bool table) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (table && s == "csv") return Format::Csv;
  if (table && s == "latex") return Format::Latex;
  throw UsageError("--format: unsupported value '" + s + "' (expected " +
                   (table ? "text, csv, latex or json" : "text or json") + ")");
}

void resolve_class(Command& c, const std::string& cls) {
  c.class_spec = cls;
  try {
    switch (c.objects) {
      case Objects::Words: c.class_kind = ClassKind::AllWords; return;
      case Objects::Permutations:
        if (cls == "RL") {
          c.class_kind = ClassKind::ReverseLayered;
        } else if (cls == "L") {
          c.class_kind = ClassKind::Layered;
        } else if (cls == "W1" || cls == "W2" || cls == "W3") {
          c.class_kind = ClassKind::West;
          if (c.n == 0) throw UsageError("--n: West classes start at n = 1");
        } else {
          c.class_kind = ClassKind::Patterns;
          if (!cls.empty()) parse_patterns(cls);
        }
        return;
      case Objects::Partitions:
        if (cls == "LM") {
          c.class_kind = ClassKind::LayeredPartitions;
        } else {
          c.class_kind = ClassKind::Patterns;
          if (!cls.empty()) parse_partition_patterns(cls);
        }
        return;
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--class: ") + e.what());
  }
}

Stat parse_stat(const std::string& s, Objects objects) {
  Stat st;
  if (s == "inv") {
    st = Stat::Inv;
  } else if (s == "maj") {
    st = Stat::Maj;
  } else if (s == "cycles") {
    st = Stat::Cycles;
  } else if (s == "rb") {
    st = Stat::Rb;
  } else {
    throw UsageError("--stat: unknown statistic '" + s + "' (expected inv, maj, cycles or rb)");
  }
  bool ok = objects == Objects::Permutations   ? st != Stat::Rb
            : objects == Objects::Partitions ? st == Stat::Rb
                                             : st != Stat::Cycles;
  if (!ok) throw UsageError("--stat: '" + s + "' is not defined for these objects");
  return st;
}

}  // namespace

Command parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Pattern-restricted permutations, set partitions and their q-Fibonacci distributions", "fibstat"};
  app.require_subcommand(1, 1);

  std::string format = "text";
  std::string cls;
  std::string objects = "permutations";
  std::string stat = "inv";
  std::string family;
  std::string method = "oracle";
  std::vector<std::string> identities;
  bool all = false;
  int n = -1;
  int max_n = -1;
  int max_m = -1;
  unsigned jobs = 1;

  auto add_format = [&](CLI::App* sub, std::string_view choices) {
    sub->add_option("--format", format, "Output format: " + std::string(choices))->capture_default_str();
  };

  auto* en = app.add_subcommand("enumerate", "List the members of a class");
  en->add_option("--class", cls,
                 "Comma separated patterns, or RL / L (reverse layered / layered matchings), W1 / W2 / W3; "
                 "for partitions, slash-notation patterns or LM");
  en->add_option("--objects", objects, "permutations, partitions or words")->capture_default_str();
  en->add_option("--n", n, "Size")->required();
  add_format(en, "text or json");

  auto* dist = app.add_subcommand("distribution", "Distribution of a statistic over a class, as a polynomial in q");
  dist->add_option("--class", cls, "As for enumerate");
  dist->add_option("--objects", objects, "permutations, partitions or words")->capture_default_str();
  dist->add_option("--stat", stat, "inv, maj, cycles (permutations) or rb (partitions, words)")
      ->capture_default_str();
  dist->add_option("--n", n, "Size")->required();
  add_format(dist, "text or json");

  auto* qf = app.add_subcommand("qfib", "Compute a q-Fibonacci polynomial");
  qf->add_option("--family", family, "One of " + join(family_names(), ", "))->required();
  qf->add_option("--n", n, "Index (permutation size for W1-W3)")->required();
  qf->add_option("--method", method, "oracle, recursion or closed-form")->capture_default_str();
  add_format(qf, "text or json");

  auto* ver = app.add_subcommand("verify", "Check cataloged identities against oracle values");
  auto* id_opt = ver->add_option("--identity", identities, "Identity id (repeatable)");
  auto* all_opt = ver->add_flag("--all", all, "Every cataloged identity");
  id_opt->excludes(all_opt);
  ver->add_option("--max-n", max_n, "Upper bound on n (on m+n for T4.1)");
  ver->add_option("--max-m", max_m, "Upper bound on m (T4.1)");
  ver->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  add_format(ver, "text or json");

  auto* tab = app.add_subcommand("table", "Tabulate a family for n = 0..max-n");
  tab->add_option("--family", family, "One of " + join(family_names(), ", "))->required();
  tab->add_option("--max-n", max_n, "Largest index")->required();
  tab->add_option("--method", method, "oracle, recursion or closed-form")->capture_default_str();
  add_format(tab, "text, csv, latex or json");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    std::string text = app.help();
    for (auto* sub : app.get_subcommands()) text = sub->help();
    throw HelpRequested{text};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  Command c;
  CLI::App* sub = app.get_subcommands().front();
  const std::string verb = sub->get_name();

  auto need_n = [&](const char* flag, int value) -> std::size_t {
    if (value < 0) throw UsageError(std::string(flag) + ": must be a nonnegative integer");
    return static_cast<std::size_t>(value);
  };
  auto need_family = [&]() {
    auto f = parse_family(family);
    if (!f) throw UsageError("--family: unknown family '" + family + "'; valid: " + join(family_names(), ", "));
    return *f;
  };
  auto need_method = [&](Family f) {
    Method m;
    if (method == "oracle") {
      m = Method::Oracle;
    } else if (method == "recursion") {
      m = Method::Recursion;
    } else if (method == "closed-form") {
      m = Method::ClosedForm;
    } else {
      throw UsageError("--method: unknown method '" + method + "' (expected oracle, recursion or closed-form)");
    }
    if (m == Method::ClosedForm && f != Family::I) throw UsageError("--method closed-form is only defined for family I");
    if (m == Method::Recursion && !has_recursion(f)) {
      throw UsageError("--method recursion is not defined for family " + std::string(family_name(f)));
    }
    return m;
  };
  auto need_objects = [&]() {
    if (objects == "permutations") return Objects::Permutations;
    if (objects == "partitions") return Objects::Partitions;
    if (objects == "words") return Objects::Words;
    throw UsageError("--objects: unknown value '" + objects + "' (expected permutations, partitions or words)");
  };

  if (verb == "enumerate" || verb == "distribution") {
    c.verb = verb == "enumerate" ? Verb::Enumerate : Verb::Distribution;
    c.format = parse_format(format, false);
    c.objects = need_objects();
    c.n = need_n("--n", n);
    resolve_class(c, cls);
    if (c.verb == Verb::Distribution) {
      c.stat = parse_stat(stat, c.objects);
    }
  } else if (verb == "qfib") {
    c.verb = Verb::Qfib;
    c.format = parse_format(format, false);
    c.family = need_family();
    c.n = need_n("--n", n);
    c.method = need_method(c.family);
    if (is_west(c.family) && c.n == 0) throw UsageError("--n: W families are indexed by permutation size n >= 1");
  } else if (verb == "verify") {
    c.verb = Verb::Verify;
    c.format = parse_format(format, false);
    if (all) {
      c.identities = identity_ids();
    } else if (identities.empty()) {
      throw UsageError("verify: give --identity ID or --all; valid ids: " + join(identity_ids(), ", "));
    } else {
      for (const auto& id : identities) {
        if (find_identity(id) == nullptr) {
          throw UsageError("--identity: unknown id '" + id + "'; valid ids: " + join(identity_ids(), ", "));
        }
      }
      c.identities = identities;
    }
    if (max_n >= 0) c.max_n = max_n;
    else if (max_n != -1) throw UsageError("--max-n: must be a nonnegative integer");
    if (max_m >= 0) c.max_m = max_m;
    else if (max_m != -1) throw UsageError("--max-m: must be a nonnegative integer");
    if (jobs == 0) throw UsageError("--jobs: must be at least 1");
    c.jobs = jobs;
    for (const auto& id : c.identities) {
      const IdentityInfo* info = find_identity(id);
      if (instance_range(*info, VerifyOptions{c.max_n, c.max_m, 1}).empty()) {
        throw UsageError("--max-n: range is empty for " + id + " (its smallest index is " +
                         std::to_string(info->min_n) + ")");
      }
    }
  } else {
    c.verb = Verb::Table;
    c.format = parse_format(format, true);
    c.family = need_family();
    c.max_n = static_cast<int>(need_n("--max-n", max_n));
    c.method = need_method(c.family);
    if (is_west(c.family) && *c.max_n < 1) throw UsageError("--max-n: W families start at n = 1");
  }
  return c;
}

namespace {

MultiPoly compute(Family f, std::size_t n, Method m) {
  switch (m) {
    case Method::Oracle: return qfib_oracle(f, n);
    case Method::Recursion: return qfib_recursive(f, n);
    case Method::ClosedForm: return closed_form_I(n);
  }
  return {};
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Oracle: return "oracle";
    case Method::Recursion: return "recursion";
    case Method::ClosedForm: return "closed-form";
  }
  return "oracle";
}

std::string_view objects_name(Objects o) {
  switch (o) {
    case Objects::Permutations: return "permutations";
    case Objects::Partitions: return "partitions";
    case Objects::Words: return "words";
  }
  return "permutations";
}

WestClass west_of(const std::string& spec) {
  return spec == "W1" ? WestClass::W1 : spec == "W2" ? WestClass::W2 : WestClass::W3;
}

std::vector<Permutation> permutation_class(const Command& c) {
  switch (c.class_kind) {
    case ClassKind::ReverseLayered:
    case ClassKind::Layered:
      if (c.n > kStructuralBound) throw BoundExceeded("structural generator", c.n, kStructuralBound);
      return c.class_kind == ClassKind::Layered ? layered_matchings(c.n) : reverse_layered_matchings(c.n);
    case ClassKind::West:
      if (c.n > kWestBound) throw BoundExceeded("gap insertion", c.n, kWestBound);
      return west_class(c.n, west_of(c.class_spec));
    default: {
      auto patterns = c.class_spec.empty() ? std::vector<Permutation>{} : parse_patterns(c.class_spec);
      return enumerate_avoiders(c.n, patterns);
    }
  }
}

std::vector<SetPartition> partition_class(const Command& c) {
  if (c.class_kind == ClassKind::LayeredPartitions) {
    if (c.n > kStructuralBound) throw BoundExceeded("structural generator", c.n, kStructuralBound);
    return enumerate_layered_matchings(c.n);
  }
  auto patterns = c.class_spec.empty() ? std::vector<SetPartition>{} : parse_partition_patterns(c.class_spec);
  return enumerate_partitions_avoiding(c.n, patterns);
}

std::vector<BlockWord> word_class(const Command& c) {
  if (c.n > kStructuralBound) throw BoundExceeded("word generator", c.n, kStructuralBound);
  return enumerate_words(c.n);
}

Result run_enumerate(const Command& c) {
  std::vector<std::string> text;
  nlohmann::json members = nlohmann::json::array();
  switch (c.objects) {
    case Objects::Permutations:
      for (const auto& p : permutation_class(c)) {
        text.push_back(to_string(p));
        members.push_back(to_json(p));
      }
      break;
    case Objects::Partitions:
      for (const auto& p : partition_class(c)) {
        text.push_back(to_string(p));
        members.push_back(to_json(p));
      }
      break;
    case Objects::Words:
      for (const auto& w : word_class(c)) {
        text.push_back(to_string(w));
        members.push_back(to_string(w));
      }
      break;
  }
  Result r;
  if (c.format == Format::Json) {
    nlohmann::json j{{"objects", objects_name(c.objects)},
                     {"class", c.class_spec},
                     {"n", c.n},
                     {"count", text.size()},
                     {"members", std::move(members)}};
    r.out = j.dump(2) + "\n";
  } else {
    for (const auto& line : text) r.out += (line.empty() ? std::string("(empty)") : line) + "\n";
  }
  return r;
}

Result run_distribution(const Command& c) {
  MultiPoly total;
  auto add = [&](std::size_t e) { total += Q(static_cast<std::int32_t>(e)); };
  switch (c.objects) {
    case Objects::Permutations:
      for (const auto& p : permutation_class(c)) {
        add(c.stat == Stat::Inv ? inv(p) : c.stat == Stat::Maj ? maj(p) : cycle_decomposition(p).count());
      }
      break;
    case Objects::Partitions:
      for (const auto& p : partition_class(c)) add(rb(p));
      break;
    case Objects::Words:
      for (const auto& w : word_class(c)) {
        total += c.stat == Stat::Inv ? weight_inv(w) : c.stat == Stat::Maj ? weight_maj(w) : weight_rb(w);
      }
      break;
  }
  Result r;
  if (c.format == Format::Json) {
    nlohmann::json j{{"objects", objects_name(c.objects)}, {"class", c.class_spec},     {"n", c.n},
                     {"polynomial", canonical_text(total)}, {"terms", to_json(total)}};
    r.out = j.dump(2) + "\n";
  } else {
    r.out = canonical_text(total) + "\n";
  }
  return r;
}

Result run_qfib(const Command& c) {
  MultiPoly p = compute(c.family, c.n, c.method);
  Result r;
  if (c.format == Format::Json) {
    nlohmann::json j{{"family", family_name(c.family)}, {"n", c.n},       {"method", method_name(c.method)},
                     {"polynomial", canonical_text(p)},  {"terms", to_json(p)}};
    r.out = j.dump(2) + "\n";
  } else {
    r.out = canonical_text(p) + "\n";
  }
  return r;
}

Result run_verify(const Command& c) {
  Result r;
  nlohmann::json reports = nlohmann::json::array();
  bool all_hold = true;
  for (const auto& id : c.identities) {
    IdentityReport rep = verify_identity(id, VerifyOptions{c.max_n, c.max_m, c.jobs});
    all_hold = all_hold && rep.verdict;
    if (c.format == Format::Json) {
      reports.push_back(to_json(rep));
    } else {
      r.out += to_text(rep);
    }
  }
  if (c.format == Format::Json) r.out = (reports.size() == 1 ? reports[0] : reports).dump(2) + "\n";
  r.exit_code = all_hold ? kOk : kVerificationFailed;
  return r;
}

Result run_table(const Command& c) {
  const std::size_t first = is_west(c.family) ? 1 : 0;
  const auto last = static_cast<std::size_t>(*c.max_n);
  std::vector<std::pair<std::size_t, MultiPoly>> rows;
  for (std::size_t n = first; n <= last; ++n) rows.emplace_back(n, compute(c.family, n, c.method));

  std::ostringstream out;
  const std::string name(family_name(c.family));
  switch (c.format) {
    case Format::Text:
      for (const auto& [n, p] : rows) out << n << ": " << canonical_text(p) << "\n";
      break;
    case Format::Csv:
      out << "n,polynomial\n";
      for (const auto& [n, p] : rows) out << n << ",\"" << canonical_text(p) << "\"\n";
      break;
    case Format::Latex: {
      std::string sym = name;
      if (sym.back() == '\'') sym = sym.substr(0, sym.size() - 1) + "'";
      out << "\\begin{tabular}{rl}\n";
      out << "$n$ & $F^{" << sym << "}_n$ \\\\\n\\hline\n";
      for (const auto& [n, p] : rows) out << n << " & $" << latex_text(p) << "$ \\\\\n";
      out << "\\end{tabular}\n";
      break;
    }
    case Format::Json: {
      nlohmann::json j{{"family", name}, {"method", method_name(c.method)}, {"rows", nlohmann::json::array()}};
      for (const auto& [n, p] : rows) j["rows"].push_back({{"n", n}, {"polynomial", canonical_text(p)}});
      out << j.dump(2) << "\n";
      break;
    }
  }
  Result r;
  r.out = out.str();
  return r;
}

}  // namespace

Result execute(const Command& c) {
  try {
    switch (c.verb) {
      case Verb::Enumerate: return run_enumerate(c);
      case Verb::Distribution: return run_distribution(c);
      case Verb::Qfib: return run_qfib(c);
      case Verb::Verify: return run_verify(c);
      case Verb::Table: return run_table(c);
    }
  } catch (const BoundExceeded& e) {
    return Result{"", std::string("error: ") + e.what() + "\n", kBoundExceeded};
  } catch (const std::invalid_argument& e) {
    return Result{"", std::string("error: ") + e.what() + "\n", kUsage};
  }
  return Result{"", "error: unknown verb\n", kUsage};
}

Result run(const std::vector<std::string>& args) {
  try {
    return execute(parse_args(args));
  } catch (const HelpRequested& h) {
    return Result{h.text, "", kOk};
  } catch (const UsageError& e) {
    return Result{"", std::string("error: ") + e.what() + "\nRun with --help for more information.\n", kUsage};
  }
}

}  // namespace fibstat::cli
