#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cvdfusion/cvd.hpp"

namespace cvdfusion {

/// <a, b> = sum_j a_j * conj(b_j). Throws SpaceMismatch.
ComplexScalar inner_product(const CvdVector& a, const CvdVector& b);

/// sqrt(<a, a>). Always >= 1/sqrt(n) for a valid vector.
double norm(const CvdVector& a);

/// (<a,b> + <b,a>) / (2 |a| |b|), i.e. Re<a,b> / (|a| |b|). In [-1, 1].
double cosine_angle(const CvdVector& a, const CvdVector& b);

/// |<a,b> + <b,a>| / (2 |a| |b|). In [0, 1]; symmetric bit-for-bit.
double compatibility(const CvdVector& a, const CvdVector& b);

/// 1 - compatibility(a, b).
double conflict(const CvdVector& a, const CvdVector& b);

/// Squared norm. Equals 1 - Gini(p) when every imaginary part is zero.
double information_quality(const CvdVector& a);

/// Quality of the unweighted combination of all sources:
///
///   (1/r^2) [ sum_k |C_k|^2 + 2 sum_{k<h} (C_k.C_h + C_h.C_k) / 2 ]
///
/// evaluated term by term in ascending (k, h) order.
double aggregate_quality(const SourceSet& s);

/// Same, restricted to the sources at `subset` (in the given order).
double aggregate_quality(const SourceSet& s, std::span<const std::size_t> subset);

enum class PairwiseKind { Compatibility, Conflict, Cosine };

/// Symmetric r x r table of one pairwise measure. Each unordered pair is
/// evaluated once and mirrored.
class PairwiseMatrix {
 public:
  PairwiseMatrix(PairwiseKind kind, std::size_t size)
      : kind_(kind), size_(size), values_(size * size, 0.0) {}

  PairwiseKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return size_; }
  double operator()(std::size_t k, std::size_t h) const { return values_[k * size_ + h]; }
  double& operator()(std::size_t k, std::size_t h) { return values_[k * size_ + h]; }

 private:
  PairwiseKind kind_;
  std::size_t size_;
  std::vector<double> values_;
};

PairwiseMatrix pairwise_matrix(const SourceSet& s, PairwiseKind kind);

}  // namespace cvdfusion
