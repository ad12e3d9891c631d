#include "cvdfusion/fusion.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cmath>
#include <limits>
#include <string>

#include "cvdfusion/measures.hpp"

namespace cvdfusion {

CredibilityWeights::CredibilityWeights(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw Error(ErrorKind::InvalidWeights, "weights are empty");
  double sum = 0.0;
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    const double w = weights_[k];
    if (!std::isfinite(w) || w < 0.0) {
      throw Error(ErrorKind::InvalidWeights,
                  "weight " + std::to_string(k) + " is negative or not finite");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw Error(ErrorKind::InvalidWeights, "weights sum to " + std::to_string(sum) + ", not 1");
}

CredibilityWeights CredibilityWeights::uniform(std::size_t r) {
  return CredibilityWeights(std::vector<double>(r, 1.0 / static_cast<double>(r)));
}

namespace {

// How far the inputs already sit from the exact constraints; a convex
// combination can be no further off than its worst input.
double constraint_slack(const SourceSet& s) {
  double slack = 0.0;
  for (const auto& src : s.sources()) {
    double re = 0.0, im = 0.0;
    for (const auto& c : src.dist.entries()) {
      re += c.real();
      im += c.imag();
      slack = std::max(slack, std::abs(c) - 1.0);
    }
    slack = std::max({slack, std::abs(re - 1.0), std::abs(im)});
  }
  return slack;
}

}  // namespace

CvdVector fuse(const SourceSet& s, const CredibilityWeights& w) {
  if (w.size() != s.size()) {
    throw Error(ErrorKind::WeightLengthMismatch, "got " + std::to_string(w.size()) +
                                                     " weights for " + std::to_string(s.size()) +
                                                     " sources");
  }
  const std::size_t n = s.space().size();
  std::vector<ComplexScalar> fused(n, ComplexScalar{0.0, 0.0});
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < s.size(); ++k) fused[j] += w[k] * s.dist(k)[j];
  }
  return make_cvd(s.space(), fused, kDefaultTolerance + constraint_slack(s));
}

CvdVector mean_aggregate(const SourceSet& s) { return fuse(s, CredibilityWeights::uniform(s.size())); }

CredibilityWeights credibility_weights(const SourceSet& s) {
  const std::size_t r = s.size();
  if (r == 1) return CredibilityWeights({1.0});

  const auto com = pairwise_matrix(s, PairwiseKind::Compatibility);
  std::vector<double> support(r, 0.0);
  double total = 0.0;
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t h = 0; h < r; ++h) {
      if (h != k) support[k] += com(k, h);
    }
    support[k] /= static_cast<double>(r - 1);
    total += support[k];
  }
  if (!(total > 0.0)) return CredibilityWeights::uniform(r);
  for (auto& v : support) v /= total;
  return CredibilityWeights(std::move(support));
}

std::string_view to_string(SelectionStrategy strategy) {
  return strategy == SelectionStrategy::Exhaustive ? "exhaustive" : "greedy";
}

namespace {

SelectionResult select_exhaustive(const SourceSet& s, std::size_t min_size) {
  const std::size_t r = s.size();
  const std::uint32_t full = (std::uint32_t{1} << r) - 1;

  std::vector<double> score(full + 1, -std::numeric_limits<double>::infinity());
  std::vector<std::size_t> subset;
  double best = -std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) < min_size) continue;
    subset.clear();
    for (std::size_t k = 0; k < r; ++k)
      if (mask & (std::uint32_t{1} << k)) subset.push_back(k);
    score[mask] = aggregate_quality(s, subset);
    best = std::max(best, score[mask]);
  }

  // Among near-ties: fewest sources, then lexicographically smallest indices.
  auto indices_of = [r](std::uint32_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < r; ++k)
      if (mask & (std::uint32_t{1} << k)) out.push_back(k);
    return out;
  };
  std::vector<std::size_t> winner;
  double winner_score = 0.0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (!(score[mask] >= best - kQualityTieTolerance)) continue;
    auto candidate = indices_of(mask);
    if (winner.empty() || candidate.size() < winner.size() ||
        (candidate.size() == winner.size() && candidate < winner)) {
      winner = std::move(candidate);
      winner_score = score[mask];
    }
  }
  return {std::move(winner), winner_score, SelectionStrategy::Exhaustive};
}

SelectionResult select_greedy(const SourceSet& s, std::size_t min_size) {
  const std::size_t r = s.size();
  auto sorted_with = [](std::vector<std::size_t> v, std::size_t extra) {
    v.insert(std::upper_bound(v.begin(), v.end(), extra), extra);
    return v;
  };

  // Seed: highest individual quality, lowest index on ties.
  std::vector<double> iq(r);
  for (std::size_t k = 0; k < r; ++k) iq[k] = information_quality(s.dist(k));
  const double top = *std::max_element(iq.begin(), iq.end());
  std::size_t seed = 0;
  while (!(iq[seed] >= top - kQualityTieTolerance)) ++seed;

  std::vector<std::size_t> chosen{seed};
  std::vector<bool> used(r, false);
  used[seed] = true;
  double current = aggregate_quality(s, chosen);

  SelectionResult best{{}, -std::numeric_limits<double>::infinity(), SelectionStrategy::Greedy};
  auto record = [&] {
    if (chosen.size() >= min_size && current > best.achieved_quality + kQualityTieTolerance) {
      best.chosen = chosen;
      best.achieved_quality = current;
    }
  };
  record();

  while (chosen.size() < r) {
    std::size_t pick = r;
    double pick_quality = -std::numeric_limits<double>::infinity();
    for (std::size_t h = 0; h < r; ++h) {
      if (used[h]) continue;
      const double q = aggregate_quality(s, sorted_with(chosen, h));
      if (q > pick_quality + kQualityTieTolerance) {
        pick = h;
        pick_quality = q;
      }
    }
    if (chosen.size() >= min_size && !(pick_quality > current + kQualityTieTolerance)) break;
    chosen = sorted_with(std::move(chosen), pick);
    used[pick] = true;
    current = pick_quality;
    record();
  }
  return best;
}

}  // namespace

SelectionResult select_sources(const SourceSet& s, SelectionStrategy strategy,
                               std::size_t min_size) {
  if (min_size < 1 || min_size > s.size()) {
    throw Error(ErrorKind::BadMinSize, "min_size must lie in [1, " + std::to_string(s.size()) +
                                           "], got " + std::to_string(min_size));
  }
  if (strategy == SelectionStrategy::Exhaustive) {
    if (s.size() > kMaxExhaustiveSources) {
      throw Error(ErrorKind::TooManySourcesForExhaustive,
                  std::to_string(s.size()) + " sources exceed the exhaustive limit of " +
                      std::to_string(kMaxExhaustiveSources));
    }
    return select_exhaustive(s, min_size);
  }
  return select_greedy(s, min_size);
}

}  // namespace cvdfusion
