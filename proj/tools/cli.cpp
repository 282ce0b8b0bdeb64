#include "cli.hpp"

#include "hooklab/errors.hpp"
#include "hooklab/filtration.hpp"
#include "hooklab/json_io.hpp"
#include "hooklab/verification.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace hooklab::cli {

namespace {

enum class Format { kText, kJson, kCsv };

struct RunConfig {
  int n = 0;
  int k = 2;
  std::string formula = "all";
  std::string direction = "forward";
  Format format = Format::kText;
  std::uint64_t guard = kDefaultGuardCap;
  bool guard_set = false;
  bool accept_large_guard = false;
  unsigned jobs = 1;
  std::string in_path;
  std::string out_path;
};

class BadInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SweepOptions sweep_options(const RunConfig& config) { return SweepOptions{config.guard, config.jobs}; }

std::string read_input(const RunConfig& config, std::istream& in) {
  if (config.in_path.empty()) return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream file(config.in_path);
  if (!file) throw BadInput("cannot open input file " + config.in_path);
  return std::string(std::istreambuf_iterator<char>(file), {});
}

std::string join(const std::vector<int>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

const char* ok(bool value) { return value ? "ok" : "FAILED"; }

// ---------------------------------------------------------------------------
// Commands. Each writes to `out` and returns an exit code.

std::vector<Formula> selected_formulas(const std::string& selector) {
  if (selector == "yang") return {Formula::kYang};
  if (selector == "yang-int") return {Formula::kYangInteger};
  if (selector == "han1") return {Formula::kHan1};
  if (selector == "han2") return {Formula::kHan2};
  if (selector == "complete") return {Formula::kComplete, Formula::kCompleteInteger};
  if (selector == "all")
    return {Formula::kYang, Formula::kYangInteger, Formula::kHan1, Formula::kHan2, Formula::kComplete,
            Formula::kCompleteInteger};
  throw BadInput("unknown formula '" + selector + "'");
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  std::vector<VerificationReport> reports;
  for (Formula f : selected_formulas(config.formula)) reports.push_back(verify(f, config.n, config.k, sweep_options(config)));
  const bool all_true = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.verdict; });

  switch (config.format) {
    case Format::kJson: {
      Json array = Json::array();
      for (const auto& r : reports) array.push_back(to_json(r));
      out << array.dump(2) << "\n";
      break;
    }
    case Format::kCsv:
      out << csv_header(reports.front()) << "\n";
      for (const auto& r : reports) out << csv_row(r) << "\n";
      break;
    case Format::kText:
      for (const auto& r : reports)
        out << r.formula << " n=" << r.n << " k=" << r.k << " terms=" << r.terms << " computed=" << to_string(r.computed)
            << " expected=" << to_string(r.expected) << " verdict=" << (r.verdict ? "true" : "false") << "\n";
      break;
  }
  return all_true ? kOk : kVerifiedFalse;
}

int cmd_bijection(const RunConfig& config, std::istream& in, std::ostream& out) {
  if (config.format == Format::kCsv) throw BadInput("bijection reads and writes JSON only");
  const Json input = parse_json(read_input(config, in));
  Json result;
  if (config.direction == "forward") {
    result = to_json(phi(array_from_json(input)));
  } else if (config.direction == "inverse") {
    const auto labeled = labeled_tree_from_json(input);
    if (auto violation = find_labeling_violation(labeled)) throw BadInput(violation->message);
    result = to_json(varphi(labeled));
  } else {
    throw BadInput("direction must be forward or inverse");
  }
  out << (config.format == Format::kJson ? result.dump() : result.dump(2)) << "\n";
  return kOk;
}

int cmd_filtration(const RunConfig& config, std::ostream& out) {
  const auto report = compute_filtration(config.n, sweep_options(config));
  const bool good = report.halving_ok && report.terminal_matches_complete && report.terminal_exact && report.parity_agrees;
  switch (config.format) {
    case Format::kJson:
      out << to_json(report).dump(2) << "\n";
      break;
    case Format::kCsv:
      out << "level,size\n";
      for (std::size_t j = 0; j < report.level_sizes.size(); ++j) out << j << "," << report.level_sizes[j] << "\n";
      break;
    case Format::kText:
      out << "level  size\n";
      for (std::size_t j = 0; j < report.level_sizes.size(); ++j) {
        const std::string level = std::to_string(j);
        out << level << std::string(7 - std::min<std::size_t>(level.size(), 6), ' ') << report.level_sizes[j] << "\n";
      }
      out << "terminal complete arrays: " << report.terminal_complete_count << "\n"
          << "halving: " << ok(report.halving_ok) << "\n"
          << "terminal level size = complete count: " << ok(report.terminal_matches_complete) << "\n"
          << "terminal level <=> complete image: " << ok(report.terminal_exact) << "\n"
          << "level 1 <=> odd number of 1's: " << ok(report.parity_agrees) << "\n";
      break;
  }
  return good ? kOk : kVerifiedFalse;
}

int cmd_census(const RunConfig& config, std::ostream& out) {
  const auto census = census_I(config.n, config.k, sweep_options(config));
  switch (config.format) {
    case Format::kJson:
      out << to_json(census).dump(2) << "\n";
      break;
    case Format::kCsv:
      out << "code,count,predicted\n";
      for (const auto& [code, predicted] : census.predicted) {
        const auto it = census.observed.find(code);
        out << code << "," << (it == census.observed.end() ? BigInt(0) : it->second) << "," << predicted << "\n";
      }
      break;
    case Format::kText:
      for (const auto& [code, predicted] : census.predicted) {
        const auto it = census.observed.find(code);
        out << code << " " << (it == census.observed.end() ? BigInt(0) : it->second) << " (predicted " << predicted
            << ")\n";
      }
      out << "shapes: " << census.predicted.size() << "  total: " << census.total
          << "  |S(n,k)|: " << staircase_count(census.n, census.k) << "\n"
          << "per-shape counts: " << ok(census.shapes_match()) << "\n"
          << "total: " << ok(census.total_matches()) << "\n";
      break;
  }
  return census.shapes_match() && census.total_matches() ? kOk : kVerifiedFalse;
}

int cmd_enumerate(const RunConfig& config, std::ostream& out) {
  std::vector<std::pair<std::string, std::vector<int>>> rows;
  for_each_tree(config.n, config.k,
                [&](const KAryTree& t) { rows.emplace_back(encode(t), hook_lengths(t).values()); },
                sweep_options(config));
  std::sort(rows.begin(), rows.end());

  switch (config.format) {
    case Format::kJson: {
      Json trees = Json::array();
      for (const auto& [code, hooks] : rows) trees.push_back(Json{{"code", code}, {"hooks", hooks}});
      out << Json{{"n", config.n}, {"k", config.k}, {"count", std::to_string(rows.size())}, {"trees", std::move(trees)}}
                 .dump(2)
          << "\n";
      break;
    }
    case Format::kCsv:
      out << "code,hooks\n";
      for (const auto& [code, hooks] : rows) out << code << "," << join(hooks, ' ') << "\n";
      break;
    case Format::kText:
      for (const auto& [code, hooks] : rows) out << code << "  {" << join(hooks, ',') << "}\n";
      out << rows.size() << " trees\n";
      break;
  }
  return kOk;
}

std::uint64_t parse_guard(const std::string& text, const std::string& source) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0)
    throw BadInput(source + " must be a positive integer, got '" + text + "'");
  return value;
}

}  // namespace

int run(const std::vector<std::string>& args, Streams streams) {
  RunConfig config;

  CLI::App app{"hooklab: exhaustive checks of hook length formulas for k-ary trees"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  const std::map<std::string, Format> formats{{"text", Format::kText}, {"json", Format::kJson}, {"csv", Format::kCsv}};
  std::string guard_text;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "Output format: text, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--guard", guard_text, "Maximum number of enumerated objects");
    sub->add_flag("--accept-large-guard", config.accept_large_guard,
                  "Acknowledge a --guard above the default cap of 10^7");
    sub->add_option("--jobs", config.jobs, "Worker threads for sweeps")->check(CLI::Range(1U, 256U));
    sub->add_option("--out", config.out_path, "Output file (default stdout)");
  };
  auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n", config.n, "Number of vertices (filtration: trees have 2n+1)")
        ->required()
        ->check(CLI::Range(1, 1000));
  };
  auto add_k = [&](CLI::App* sub) { sub->add_option("--k", config.k, "Arity (default 2)")->check(CLI::Range(1, 64)); };

  auto* verify = app.add_subcommand("verify", "Check a hook length identity by exhaustive exact summation");
  add_n(verify);
  add_k(verify);
  verify->add_option("--formula", config.formula, "yang, yang-int, han1, han2, complete or all")
      ->check(CLI::IsMember({"yang", "yang-int", "han1", "han2", "complete", "all"}));
  add_common(verify);

  auto* bijection = app.add_subcommand("bijection", "Map a staircase array to its labeled tree or back");
  bijection->add_option("--direction", config.direction, "forward (array -> tree) or inverse")
      ->check(CLI::IsMember({"forward", "inverse"}));
  bijection->add_option("--in", config.in_path, "Input JSON file (default stdin)");
  add_common(bijection);

  auto* filtration = app.add_subcommand("filtration", "Level sizes of the halving chain over S(2n+1,2)");
  add_n(filtration);
  add_common(filtration);

  auto* census = app.add_subcommand("census", "Group phi-images of S(n,k) by tree shape");
  add_n(census);
  add_k(census);
  add_common(census);

  auto* enumerate = app.add_subcommand("enumerate", "List every k-ary tree with n vertices");
  add_n(enumerate);
  add_k(enumerate);
  add_common(enumerate);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    streams.out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    streams.out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    streams.err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (streams.guard_env != nullptr) config.guard = parse_guard(streams.guard_env, "HOOKLAB_GUARD");
    if (!guard_text.empty()) {
      config.guard = parse_guard(guard_text, "--guard");
      if (config.guard > kDefaultGuardCap && !config.accept_large_guard)
        throw BadInput("--guard above " + std::to_string(kDefaultGuardCap) + " requires --accept-large-guard");
    }

    std::ostringstream buffer;
    int code = kOk;
    if (*verify) code = cmd_verify(config, buffer);
    else if (*bijection) code = cmd_bijection(config, streams.in, buffer);
    else if (*filtration) code = cmd_filtration(config, buffer);
    else if (*census) code = cmd_census(config, buffer);
    else if (*enumerate) code = cmd_enumerate(config, buffer);

    if (config.out_path.empty()) {
      streams.out << buffer.str();
    } else {
      std::ofstream file(config.out_path);
      if (!file) throw BadInput("cannot open output file " + config.out_path);
      file << buffer.str();
    }
    return code;
  } catch (const GuardExceeded& e) {
    streams.err << "refused: " << e.what() << "\n";
    return kGuardRefusal;
  } catch (const BadInput& e) {
    streams.err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const ParseError& e) {
    streams.err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const DomainError& e) {
    streams.err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const InvariantViolation& e) {
    streams.err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace hooklab::cli
