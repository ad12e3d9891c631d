#include "cvdfusion/cvd.hpp"

#include <cmath>
#include <sstream>
#include <unordered_set>

namespace cvdfusion {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NegativeRealPart: return "NegativeRealPart";
    case ErrorKind::ModulusExceedsOne: return "ModulusExceedsOne";
    case ErrorKind::SumNotUnity: return "SumNotUnity";
    case ErrorKind::EmptySpace: return "EmptySpace";
    case ErrorKind::EmptyLabel: return "EmptyLabel";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::EmptySourceSet: return "EmptySourceSet";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::WeightLengthMismatch: return "WeightLengthMismatch";
    case ErrorKind::InvalidWeights: return "InvalidWeights";
    case ErrorKind::TooManySourcesForExhaustive: return "TooManySourcesForExhaustive";
    case ErrorKind::BadMinSize: return "BadMinSize";
    case ErrorKind::MalformedSyntax: return "MalformedSyntax";
    case ErrorKind::SchemaViolation: return "SchemaViolation";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

OutcomeSpace::OutcomeSpace(std::vector<std::string> labels) {
  if (labels.empty()) throw Error(ErrorKind::EmptySpace, "outcome space has no labels");
  std::unordered_set<std::string_view> seen;
  for (std::size_t j = 0; j < labels.size(); ++j) {
    if (labels[j].empty())
      throw Error(ErrorKind::EmptyLabel, "outcome label " + std::to_string(j) + " is empty");
    if (!seen.insert(labels[j]).second)
      throw Error(ErrorKind::DuplicateLabel, "outcome label '" + labels[j] + "' is repeated");
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

namespace {

std::string describe(std::size_t j, const OutcomeSpace& space, const ComplexScalar& c) {
  std::ostringstream os;
  os.precision(17);
  os << "entry " << j << " ('" << space.label(j) << "') = (" << c.real() << ", " << c.imag()
     << ")";
  return os.str();
}

}  // namespace

CvdVector make_cvd(const OutcomeSpace& space, std::span<const ComplexScalar> raw,
                   double tolerance) {
  if (!std::isfinite(tolerance) || tolerance < 0.0)
    throw std::invalid_argument("tolerance must be finite and non-negative");
  if (raw.size() != space.size()) {
    throw Error(ErrorKind::LengthMismatch, "expected " + std::to_string(space.size()) +
                                               " entries, got " + std::to_string(raw.size()));
  }

  std::vector<ComplexScalar> entries(raw.begin(), raw.end());
  double sum_re = 0.0;
  double sum_im = 0.0;
  for (std::size_t j = 0; j < entries.size(); ++j) {
    auto& c = entries[j];
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw Error(ErrorKind::NonFinite, describe(j, space, c) + " is not finite");
    if (c.real() < -tolerance)
      throw Error(ErrorKind::NegativeRealPart, describe(j, space, c) + " has a negative real part");
    if (c.real() < 0.0) c.real(0.0);
    if (std::hypot(c.real(), c.imag()) > 1.0 + tolerance)
      throw Error(ErrorKind::ModulusExceedsOne, describe(j, space, c) + " has modulus above 1");
    sum_re += c.real();
    sum_im += c.imag();
  }
  if (std::abs(sum_re - 1.0) > tolerance || std::abs(sum_im) > tolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "entries sum to (" << sum_re << ", " << sum_im << "), expected (1, 0)";
    throw Error(ErrorKind::SumNotUnity, os.str());
  }
  return CvdVector(space, std::move(entries));
}

SourceSet SourceSet::permuted(std::span<const std::size_t> order) const {
  if (order.size() != sources_.size())
    throw std::invalid_argument("permutation length does not match source count");
  std::vector<NamedSource> out;
  out.reserve(order.size());
  for (auto k : order) out.push_back(sources_.at(k));
  return make_source_set(space_, std::move(out));
}

SourceSet make_source_set(const OutcomeSpace& space, std::span<const RawSource> named_raws,
                          double tolerance) {
  std::vector<NamedSource> sources;
  sources.reserve(named_raws.size());
  for (const auto& [name, raw] : named_raws) {
    try {
      sources.push_back({name, make_cvd(space, raw, tolerance)});
    } catch (Error& e) {
      e.with_source(name);
      throw;
    }
  }
  return make_source_set(space, std::move(sources));
}

SourceSet make_source_set(const OutcomeSpace& space, std::vector<NamedSource> sources) {
  if (sources.empty()) throw Error(ErrorKind::EmptySourceSet, "at least one source is required");
  std::unordered_set<std::string_view> seen;
  for (const auto& s : sources) {
    if (!seen.insert(s.name).second) {
      throw Error(ErrorKind::DuplicateName, "source name '" + s.name + "' is repeated")
          .with_source(s.name);
    }
    if (!(s.dist.space() == space)) {
      throw Error(ErrorKind::SpaceMismatch, "source uses a different outcome space")
          .with_source(s.name);
    }
  }
  return SourceSet(space, std::move(sources));
}

}  // namespace cvdfusion
