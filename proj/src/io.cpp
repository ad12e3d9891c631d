#include "cvdfusion/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string>

#include "cvdfusion/measures.hpp"

namespace cvdfusion::io {

namespace {

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

std::string_view strip_bom(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  return text;
}

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::SchemaViolation, where + ": " + what);
}

double json_real(const nlohmann::json& v, const std::string& where) {
  if (!v.is_number()) schema_error(where, "expected a number");
  return v.get<double>();
}

}  // namespace

SourceDocument parse_json_document(std::string_view text) {
  text = strip_bom(text);
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::MalformedSyntax, e.what()).with_line(line_of_offset(text, e.byte));
  }

  if (!root.is_object()) schema_error("document", "expected an object");
  if (!root.contains("space")) schema_error("document", "missing 'space'");
  if (!root.contains("sources")) schema_error("document", "missing 'sources'");

  SourceDocument doc;
  const auto& space = root["space"];
  if (!space.is_array()) schema_error("space", "expected an array of labels");
  for (std::size_t j = 0; j < space.size(); ++j) {
    if (!space[j].is_string()) schema_error("space[" + std::to_string(j) + "]", "expected a string");
    doc.space.push_back(space[j].get<std::string>());
  }

  const auto& sources = root["sources"];
  if (!sources.is_array()) schema_error("sources", "expected an array");
  for (std::size_t k = 0; k < sources.size(); ++k) {
    const std::string where = "sources[" + std::to_string(k) + "]";
    const auto& src = sources[k];
    if (!src.is_object()) schema_error(where, "expected an object");
    if (!src.contains("name") || !src["name"].is_string())
      schema_error(where + ".name", "expected a string");
    if (!src.contains("values") || !src["values"].is_array())
      schema_error(where + ".values", "expected an array");

    RawSource raw{src["name"].get<std::string>(), {}};
    const auto& values = src["values"];
    for (std::size_t j = 0; j < values.size(); ++j) {
      const std::string at = where + ".values[" + std::to_string(j) + "]";
      if (!values[j].is_array() || values[j].size() != 2)
        schema_error(at, "expected a [re, im] pair");
      raw.second.emplace_back(json_real(values[j][0], at), json_real(values[j][1], at));
    }
    doc.sources.push_back(std::move(raw));
  }
  return doc;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

double parse_real(std::string_view field, std::size_t line, std::size_t column) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc{} || end != field.data() + field.size()) {
    throw Error(ErrorKind::MalformedSyntax, "column " + std::to_string(column) + ": '" +
                                                std::string(field) + "' is not a number")
        .with_line(line);
  }
  return value;
}

}  // namespace

SourceDocument parse_csv_document(std::string_view text) {
  text = strip_bom(text);
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    const auto line = text.substr(0, nl);
    if (!trim(line).empty()) lines.emplace_back(line_no, line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  if (lines.empty()) throw Error(ErrorKind::SchemaViolation, "empty CSV document").with_line(1);

  const auto [header_line, header_text] = lines.front();
  if (header_text.find('"') != std::string_view::npos)
    throw Error(ErrorKind::MalformedSyntax, "quoted CSV fields are not supported").with_line(header_line);
  const auto header = split_fields(header_text);
  if (header.front() != "name")
    throw Error(ErrorKind::SchemaViolation, "first header column must be 'name'").with_line(header_line);
  if (header.size() < 3 || header.size() % 2 == 0) {
    throw Error(ErrorKind::SchemaViolation, "header must be name followed by <label>_re,<label>_im pairs")
        .with_line(header_line);
  }

  SourceDocument doc;
  for (std::size_t c = 1; c < header.size(); c += 2) {
    const auto re = header[c];
    const auto im = header[c + 1];
    if (!re.ends_with("_re") || !im.ends_with("_im") ||
        re.substr(0, re.size() - 3) != im.substr(0, im.size() - 3)) {
      throw Error(ErrorKind::SchemaViolation, "columns " + std::to_string(c + 1) + "-" +
                                                  std::to_string(c + 2) +
                                                  " must be <label>_re,<label>_im")
          .with_line(header_line);
    }
    doc.space.emplace_back(re.substr(0, re.size() - 3));
  }

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [ln, row_text] = lines[i];
    if (row_text.find('"') != std::string_view::npos)
      throw Error(ErrorKind::MalformedSyntax, "quoted CSV fields are not supported").with_line(ln);
    const auto row = split_fields(row_text);
    if (row.size() != header.size()) {
      throw Error(ErrorKind::SchemaViolation, "expected " + std::to_string(header.size()) +
                                                  " columns, got " + std::to_string(row.size()))
          .with_line(ln);
    }
    RawSource raw{std::string(row[0]), {}};
    for (std::size_t c = 1; c < row.size(); c += 2)
      raw.second.emplace_back(parse_real(row[c], ln, c + 1), parse_real(row[c + 1], ln, c + 2));
    doc.sources.push_back(std::move(raw));
  }
  return doc;
}

SourceDocument parse_document(std::string_view text) {
  const auto body = strip_bom(text);
  const auto first = body.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && (body[first] == '{' || body[first] == '['))
    return parse_json_document(body);
  return parse_csv_document(body);
}

SourceSet to_source_set(const SourceDocument& doc, double tolerance) {
  return make_source_set(OutcomeSpace(doc.space), doc.sources, tolerance);
}

SourceSet parse_source_file(std::string_view text, double tolerance) {
  return to_source_set(parse_document(text), tolerance);
}

std::string format_number(double value, int digits) {
  char buf[64];
  const auto [end, ec] =
      std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, digits);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, end);
}

double report_number(double value) {
  if (value == 0.0) return 0.0;  // no "-0" in reports
  const auto text = format_number(value, 12);
  return std::strtod(text.c_str(), nullptr);
}

std::string emit_json(const SourceSet& s) {
  std::string out = "{\n  \"space\": [";
  const auto& labels = s.space().labels();
  for (std::size_t j = 0; j < labels.size(); ++j) {
    if (j) out += ", ";
    out += nlohmann::json(labels[j]).dump();
  }
  out += "],\n  \"sources\": [";
  for (std::size_t k = 0; k < s.size(); ++k) {
    out += k ? ",\n    " : "\n    ";
    out += "{\"name\": " + nlohmann::json(s.name(k)).dump() + ", \"values\": [";
    const auto entries = s.dist(k).entries();
    for (std::size_t j = 0; j < entries.size(); ++j) {
      if (j) out += ", ";
      out += "[" + format_number(entries[j].real(), 17) + ", " +
             format_number(entries[j].imag(), 17) + "]";
    }
    out += "]}";
  }
  out += "\n  ]\n}\n";
  return out;
}

namespace {

void require_csv_safe(std::string_view text) {
  if (text.find_first_of(",\"\r\n") != std::string_view::npos || trim(text) != text)
    throw std::invalid_argument("'" + std::string(text) + "' cannot be written as a CSV field");
}

}  // namespace

std::string emit_csv(const SourceSet& s) {
  std::string out = "name";
  for (const auto& label : s.space().labels()) {
    require_csv_safe(label);
    out += "," + label + "_re," + label + "_im";
  }
  out += "\n";
  for (const auto& src : s.sources()) {
    require_csv_safe(src.name);
    out += src.name;
    for (const auto& c : src.dist.entries())
      out += "," + format_number(c.real(), 17) + "," + format_number(c.imag(), 17);
    out += "\n";
  }
  return out;
}

namespace {

Json matrix_json(const PairwiseMatrix& m) {
  Json rows = Json::array();
  for (std::size_t k = 0; k < m.size(); ++k) {
    Json row = Json::array();
    for (std::size_t h = 0; h < m.size(); ++h) row.push_back(report_number(m(k, h)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json measure_report(const SourceSet& s) {
  Json report;
  report["space"] = s.space().labels();
  Json names = Json::array();
  Json iq = Json::object();
  for (const auto& src : s.sources()) {
    names.push_back(src.name);
    iq[src.name] = report_number(information_quality(src.dist));
  }
  report["sources"] = std::move(names);
  report["per_source_iq"] = std::move(iq);
  report["compatibility"] = matrix_json(pairwise_matrix(s, PairwiseKind::Compatibility));
  report["conflict"] = matrix_json(pairwise_matrix(s, PairwiseKind::Conflict));
  report["aggregate_iq"] = report_number(aggregate_quality(s));
  return report;
}

Json fuse_report(const SourceSet& s, const CredibilityWeights& weights) {
  Json report = measure_report(s);
  const auto fused = fuse(s, weights);
  Json credibility = Json::object();
  for (std::size_t k = 0; k < s.size(); ++k) credibility[s.name(k)] = report_number(weights[k]);
  report["credibility"] = std::move(credibility);
  Json values = Json::array();
  for (const auto& c : fused.entries())
    values.push_back(Json::array({report_number(c.real()), report_number(c.imag())}));
  report["fused"] = std::move(values);
  report["fused_iq"] = report_number(information_quality(fused));
  return report;
}

Json selection_report(const SourceSet& s, const SelectionResult& selection) {
  Json chosen = Json::array();
  for (auto k : selection.chosen) chosen.push_back(s.name(k));
  Json out;
  out["chosen"] = std::move(chosen);
  out["quality"] = report_number(selection.achieved_quality);
  out["strategy"] = std::string(to_string(selection.strategy));
  return out;
}

}  // namespace cvdfusion::io
