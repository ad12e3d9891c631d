#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cvdfusion/error.hpp"

namespace cvdfusion {

/// x + yi. Stored as std::complex<double>; finiteness is checked by make_cvd.
using ComplexScalar = std::complex<double>;

/// Default validation tolerance for the unit-sum, modulus and sign constraints.
inline constexpr double kDefaultTolerance = 1e-9;

/// Ordered, non-empty set of distinct outcome labels. Copies share storage,
/// so vectors built on the same space compare equal in O(1).
class OutcomeSpace {
 public:
  /// Throws EmptySpace, EmptyLabel or DuplicateLabel.
  explicit OutcomeSpace(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_->size(); }
  const std::vector<std::string>& labels() const noexcept { return *labels_; }
  const std::string& label(std::size_t j) const { return labels_->at(j); }

  friend bool operator==(const OutcomeSpace& a, const OutcomeSpace& b) {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// A validated complex-valued distribution over an OutcomeSpace:
/// non-negative real parts, moduli at most one, entries summing to 1 + 0i.
/// Only make_cvd (and the fusion operators, through it) create these.
class CvdVector {
 public:
  const OutcomeSpace& space() const noexcept { return space_; }
  std::span<const ComplexScalar> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const ComplexScalar& operator[](std::size_t j) const { return entries_[j]; }

  friend bool operator==(const CvdVector& a, const CvdVector& b) {
    return a.space_ == b.space_ && a.entries_ == b.entries_;
  }

 private:
  friend CvdVector make_cvd(const OutcomeSpace&, std::span<const ComplexScalar>, double);

  CvdVector(OutcomeSpace space, std::vector<ComplexScalar> entries)
      : space_(std::move(space)), entries_(std::move(entries)) {}

  OutcomeSpace space_;
  std::vector<ComplexScalar> entries_;
};

/// Validates `raw` against `space`. Real parts in [-tolerance, 0) are clamped
/// to 0; nothing else is altered.
/// Throws NonFinite, LengthMismatch, NegativeRealPart, ModulusExceedsOne or
/// SumNotUnity.
CvdVector make_cvd(const OutcomeSpace& space, std::span<const ComplexScalar> raw,
                   double tolerance = kDefaultTolerance);

inline CvdVector make_cvd(const OutcomeSpace& space,
                          std::initializer_list<ComplexScalar> raw,
                          double tolerance = kDefaultTolerance) {
  return make_cvd(space, std::span<const ComplexScalar>(raw.begin(), raw.size()),
                  tolerance);
}

struct NamedSource {
  std::string name;
  CvdVector dist;
};

/// r >= 1 uniquely named distributions over one shared OutcomeSpace.
class SourceSet {
 public:
  const OutcomeSpace& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return sources_.size(); }
  std::span<const NamedSource> sources() const noexcept { return sources_; }
  const NamedSource& operator[](std::size_t k) const { return sources_[k]; }
  const CvdVector& dist(std::size_t k) const { return sources_[k].dist; }
  const std::string& name(std::size_t k) const { return sources_[k].name; }

  /// Same sources, reordered so that result[i] = this[order[i]].
  SourceSet permuted(std::span<const std::size_t> order) const;

  friend bool operator==(const SourceSet& a, const SourceSet& b) {
    if (!(a.space_ == b.space_) || a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a.sources_[k].name != b.sources_[k].name ||
          !(a.sources_[k].dist == b.sources_[k].dist))
        return false;
    }
    return true;
  }

 private:
  friend SourceSet make_source_set(const OutcomeSpace&,
                                   std::span<const std::pair<std::string, std::vector<ComplexScalar>>>,
                                   double);
  friend SourceSet make_source_set(const OutcomeSpace&, std::vector<NamedSource>);

  SourceSet(OutcomeSpace space, std::vector<NamedSource> sources)
      : space_(std::move(space)), sources_(std::move(sources)) {}

  OutcomeSpace space_;
  std::vector<NamedSource> sources_;
};

using RawSource = std::pair<std::string, std::vector<ComplexScalar>>;

/// Validates every raw vector; errors carry the offending source name.
/// Throws EmptySourceSet, DuplicateName or any make_cvd error.
SourceSet make_source_set(const OutcomeSpace& space, std::span<const RawSource> named_raws,
                          double tolerance = kDefaultTolerance);

/// Assembles already-validated vectors. Throws EmptySourceSet, DuplicateName
/// or SpaceMismatch.
SourceSet make_source_set(const OutcomeSpace& space, std::vector<NamedSource> sources);

}  // namespace cvdfusion
