#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cvdfusion/cvd.hpp"
#include "cvdfusion/fusion.hpp"

#include <json.hpp>

namespace cvdfusion::io {

/// A source file as read, before any distribution constraint is checked.
struct SourceDocument {
  std::vector<std::string> space;
  std::vector<RawSource> sources;
};

/// {"space": [labels...], "sources": [{"name": s, "values": [[re, im], ...]}, ...]}
/// Throws MalformedSyntax (with line) or SchemaViolation.
SourceDocument parse_json_document(std::string_view text);

/// Header `name,<label>_re,<label>_im,...`, then one row per source.
/// Throws MalformedSyntax or SchemaViolation, both with line numbers.
SourceDocument parse_csv_document(std::string_view text);

/// JSON if the first non-blank character is '{' or '[', CSV otherwise.
SourceDocument parse_document(std::string_view text);

/// Builds and validates the SourceSet described by `doc`.
SourceSet to_source_set(const SourceDocument& doc, double tolerance = kDefaultTolerance);

/// parse_document followed by to_source_set.
SourceSet parse_source_file(std::string_view text, double tolerance = kDefaultTolerance);

/// Serializers; numbers carry 17 significant digits so parsing the output
/// reproduces every double exactly. CSV output rejects labels or names
/// containing ',', '"' or line breaks.
std::string emit_json(const SourceSet& s);
std::string emit_csv(const SourceSet& s);

/// Shortest decimal form of `value` rounded to `digits` significant digits.
std::string format_number(double value, int digits);

/// `value` rounded to 12 significant digits, for report output.
double report_number(double value);

using Json = nlohmann::ordered_json;

/// space, sources, per_source_iq, compatibility, conflict, aggregate_iq.
Json measure_report(const SourceSet& s);

/// measure_report plus credibility, fused and fused_iq.
Json fuse_report(const SourceSet& s, const CredibilityWeights& weights);

/// {"chosen": [names], "quality": q, "strategy": "..."}
Json selection_report(const SourceSet& s, const SelectionResult& selection);

}  // namespace cvdfusion::io
