#include "cvdfusion/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cvdfusion/fusion.hpp"
#include "cvdfusion/io.hpp"
#include "cvdfusion/measures.hpp"

namespace cvdfusion::cli {

using Json = io::Json;

namespace {

struct Options {
  std::string input;
  double tolerance = kDefaultTolerance;
  bool pretty = false;
  std::optional<std::string> weights;
  std::string strategy = "greedy";
  std::size_t min_size = 1;
};

class IoFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_record(std::ostream& err, std::string_view kind, const std::string& message,
                  const std::optional<std::string>& source = std::nullopt,
                  std::optional<std::size_t> line = std::nullopt) {
  Json record;
  record["error"] = std::string(kind);
  if (source) record["source"] = *source;
  if (line) record["line"] = *line;
  record["message"] = message;
  err << record.dump() << '\n';
}

void write_record(std::ostream& err, const Error& e) {
  write_record(err, to_string(e.kind()), e.what(), e.source(), e.line());
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoFailure("failed to read standard input");
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoFailure("cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
  if (file.bad()) throw IoFailure("failed to read '" + path + "'");
  return text;
}

std::vector<double> parse_weight_list(const std::string& text) {
  std::vector<double> weights;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) {
    const auto first = field.find_first_not_of(" \t");
    const auto last = field.find_last_not_of(" \t");
    if (first == std::string::npos) throw UsageFailure("--weights contains an empty field");
    const auto token = field.substr(first, last - first + 1);
    std::size_t used = 0;
    double w = 0.0;
    try {
      w = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw UsageFailure("--weights: '" + token + "' is not a number");
    weights.push_back(w);
  }
  if (weights.empty() || text.ends_with(',')) throw UsageFailure("--weights is malformed");
  return weights;
}

void emit(std::ostream& out, const Json& report, bool pretty) {
  out << report.dump(pretty ? 2 : -1) << '\n';
}

int run_validate(const Options& opt, const std::string& text, std::ostream& out,
                 std::ostream& err) {
  const auto doc = io::parse_document(text);
  const OutcomeSpace space(doc.space);

  Json verdicts = Json::array();
  bool all_valid = true;
  std::vector<NamedSource> accepted;
  for (const auto& [name, raw] : doc.sources) {
    Json v;
    v["name"] = name;
    try {
      accepted.push_back({name, make_cvd(space, raw, opt.tolerance)});
      v["valid"] = true;
    } catch (Error& e) {
      e.with_source(name);
      all_valid = false;
      v["valid"] = false;
      v["error"] = std::string(to_string(e.kind()));
      v["message"] = e.what();
      write_record(err, e);
    }
    verdicts.push_back(std::move(v));
  }
  // Set-level checks: empty set, repeated names.
  if (all_valid) make_source_set(space, std::move(accepted));

  Json report;
  report["space"] = space.labels();
  report["sources"] = std::move(verdicts);
  report["valid"] = all_valid;
  emit(out, report, opt.pretty);
  return all_valid ? kSuccess : kDomainError;
}

SelectionStrategy parse_strategy(const std::string& name) {
  return name == "exhaustive" ? SelectionStrategy::Exhaustive : SelectionStrategy::Greedy;
}

}  // namespace

int run_command(std::span<const std::string> args, std::istream& in, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Complex-valued distribution quality measures and fusion", "cvdfuse"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("--input,-i", opt.input, "Source file (JSON or CSV), '-' for stdin")
        ->required();
    sub->add_option("--tol", opt.tolerance, "Validation tolerance")
        ->check(CLI::NonNegativeNumber);
    sub->add_flag("--pretty", opt.pretty, "Indent JSON output");
  };

  auto* validate = app.add_subcommand("validate", "Check every source against the constraints");
  auto* measure = app.add_subcommand("measure", "Per-source IQ, pairwise matrices, aggregate IQ");
  auto* fuse_cmd = app.add_subcommand("fuse", "Credibility-weighted fusion");
  auto* select = app.add_subcommand("select", "Choose the quality-maximizing subset of sources");
  for (auto* sub : {validate, measure, fuse_cmd, select}) add_common(sub);
  fuse_cmd->add_option("--weights", opt.weights, "Comma-separated weights, one per source");
  select->add_option("--strategy", opt.strategy, "exhaustive or greedy")
      ->check(CLI::IsMember({"exhaustive", "greedy"}));
  select->add_option("--min-size", opt.min_size, "Smallest admissible subset");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    write_record(err, "Usage", e.what());
    return kUsageError;
  }

  try {
    std::optional<std::vector<double>> weights;
    if (opt.weights) weights = parse_weight_list(*opt.weights);
    if (!std::isfinite(opt.tolerance)) throw UsageFailure("--tol must be finite");

    const auto text = read_input(opt.input, in);
    if (validate->parsed()) return run_validate(opt, text, out, err);

    const auto sources = io::parse_source_file(text, opt.tolerance);
    if (measure->parsed()) {
      emit(out, io::measure_report(sources), opt.pretty);
    } else if (fuse_cmd->parsed()) {
      const auto w = weights ? CredibilityWeights(*weights) : credibility_weights(sources);
      emit(out, io::fuse_report(sources, w), opt.pretty);
    } else {
      const auto result = select_sources(sources, parse_strategy(opt.strategy), opt.min_size);
      Json report;
      report["selection"] = io::selection_report(sources, result);
      emit(out, report, opt.pretty);
    }
    return kSuccess;
  } catch (const UsageFailure& e) {
    write_record(err, "Usage", e.what());
    return kUsageError;
  } catch (const IoFailure& e) {
    write_record(err, to_string(ErrorKind::Io), e.what());
    return kIoError;
  } catch (const Error& e) {
    write_record(err, e);
    return kDomainError;
  } catch (const std::exception& e) {
    write_record(err, "Internal", e.what());
    return kDomainError;
  }
}

}  // namespace cvdfusion::cli
