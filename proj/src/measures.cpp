#include "cvdfusion/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cvdfusion {

namespace {

void require_same_space(const CvdVector& a, const CvdVector& b) {
  if (!(a.space() == b.space()))
    throw Error(ErrorKind::SpaceMismatch, "distributions are defined on different outcome spaces");
}

// Written out rather than via std::complex multiplication so that the real
// part is symmetric in (a, b) bit-for-bit and <a, a> has an exactly zero
// imaginary part.
ComplexScalar raw_inner_product(const CvdVector& a, const CvdVector& b) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double ar = a[j].real(), ai = a[j].imag();
    const double br = b[j].real(), bi = b[j].imag();
    re += ar * br + ai * bi;
    im += ai * br - ar * bi;
  }
  return {re, im};
}

double checked_norm(const CvdVector& a) {
  const auto self = raw_inner_product(a, a);
  if (std::abs(self.imag()) > 1e-12)
    throw std::logic_error("<a, a> has a non-zero imaginary part");
  const double n = std::sqrt(self.real());
  // Valid vectors are bounded below by 1/sqrt(n); anything this small escaped
  // validation.
  if (!(n > 1e-15)) throw std::logic_error("norm underflow on a supposedly valid distribution");
  return n;
}

}  // namespace

ComplexScalar inner_product(const CvdVector& a, const CvdVector& b) {
  require_same_space(a, b);
  return raw_inner_product(a, b);
}

double norm(const CvdVector& a) { return checked_norm(a); }

double cosine_angle(const CvdVector& a, const CvdVector& b) {
  require_same_space(a, b);
  // <a,b> + <b,a> = 2 Re<a,b>
  const double c = raw_inner_product(a, b).real() / (checked_norm(a) * checked_norm(b));
  return std::clamp(c, -1.0, 1.0);
}

double compatibility(const CvdVector& a, const CvdVector& b) {
  return std::abs(cosine_angle(a, b));
}

double conflict(const CvdVector& a, const CvdVector& b) { return 1.0 - compatibility(a, b); }

double information_quality(const CvdVector& a) {
  const double n = checked_norm(a);
  return n * n;
}

double aggregate_quality(const SourceSet& s, std::span<const std::size_t> subset) {
  if (subset.empty()) throw std::invalid_argument("aggregate_quality of an empty subset");
  const std::size_t r = subset.size();

  ComplexScalar total{0.0, 0.0};
  for (auto k : subset) total += information_quality(s.dist(k));
  ComplexScalar cross{0.0, 0.0};
  for (std::size_t i = 0; i + 1 < r; ++i) {
    for (std::size_t l = i + 1; l < r; ++l) {
      const auto& ck = s.dist(subset[i]);
      const auto& ch = s.dist(subset[l]);
      cross += (inner_product(ck, ch) + inner_product(ch, ck)) / 2.0;
    }
  }
  total += 2.0 * cross;
  const double rr = static_cast<double>(r);
  return total.real() / (rr * rr);
}

double aggregate_quality(const SourceSet& s) {
  std::vector<std::size_t> all(s.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return aggregate_quality(s, all);
}

PairwiseMatrix pairwise_matrix(const SourceSet& s, PairwiseKind kind) {
  const std::size_t r = s.size();
  PairwiseMatrix m(kind, r);
  for (std::size_t k = 0; k < r; ++k) {
    m(k, k) = kind == PairwiseKind::Conflict ? 0.0 : 1.0;
    for (std::size_t h = k + 1; h < r; ++h) {
      double v = 0.0;
      switch (kind) {
        case PairwiseKind::Compatibility: v = compatibility(s.dist(k), s.dist(h)); break;
        case PairwiseKind::Conflict: v = conflict(s.dist(k), s.dist(h)); break;
        case PairwiseKind::Cosine: v = cosine_angle(s.dist(k), s.dist(h)); break;
      }
      m(k, h) = v;
      m(h, k) = v;
    }
  }
  return m;
}

}  // namespace cvdfusion
