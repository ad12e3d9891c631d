#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "cvdfusion/cvd.hpp"

namespace cvdfusion {

/// Non-negative per-source weights summing to one (within 1e-9).
class CredibilityWeights {
 public:
  /// Throws InvalidWeights.
  explicit CredibilityWeights(std::vector<double> weights);

  static CredibilityWeights uniform(std::size_t r);

  std::span<const double> values() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t k) const { return weights_[k]; }

 private:
  std::vector<double> weights_;
};

/// Entrywise mean of the sources; its information quality equals
/// aggregate_quality(s). Bit-identical to fuse(s, uniform weights).
CvdVector mean_aggregate(const SourceSet& s);

/// Weight of each source is its average compatibility with the others,
/// normalized to sum to one. r == 1 gives {1}; if every source is orthogonal
/// to every other one the weights fall back to uniform.
CredibilityWeights credibility_weights(const SourceSet& s);

/// Convex combination sum_k w_k C_k. Throws WeightLengthMismatch.
CvdVector fuse(const SourceSet& s, const CredibilityWeights& w);

enum class SelectionStrategy { Exhaustive, Greedy };

std::string_view to_string(SelectionStrategy strategy);

/// Largest source count accepted by the exhaustive search.
inline constexpr std::size_t kMaxExhaustiveSources = 15;

/// Two subset qualities closer than this are treated as tied.
inline constexpr double kQualityTieTolerance = 1e-12;

struct SelectionResult {
  std::vector<std::size_t> chosen;  // ascending source indices
  double achieved_quality = 0.0;    // aggregate_quality over `chosen`
  SelectionStrategy strategy = SelectionStrategy::Greedy;
};

/// Picks the subset of at least `min_size` sources maximizing
/// aggregate_quality.
///
/// Exhaustive: every subset is scored; among those within
/// kQualityTieTolerance of the best, the smallest subset wins, then the
/// lexicographically smallest index list.
///
/// Greedy: seeds with the source of highest information quality, then keeps
/// adding whichever source gives the highest aggregate quality while that
/// improves on the current value (or the subset is still below min_size).
/// The best prefix of size >= min_size is returned. Ties go to the lowest
/// index.
///
/// Throws BadMinSize, TooManySourcesForExhaustive.
SelectionResult select_sources(const SourceSet& s, SelectionStrategy strategy,
                               std::size_t min_size = 1);

}  // namespace cvdfusion
