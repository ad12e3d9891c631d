#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cvdfusion/measures.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace cvdfusion;

namespace {

const OutcomeSpace kTwo({"a", "b"});

// Frozen from exact rational arithmetic:
//   <a,b> = 19/50 + 3/50 i,  |a|^2 = 17/25,  |b|^2 = 3/5.
struct Fixture {
  CvdVector a = make_cvd(kTwo, {{0.5, 0.3}, {0.5, -0.3}});
  CvdVector b = make_cvd(kTwo, {{0.6, -0.2}, {0.4, 0.2}});
};
constexpr double kFixtureCompatibility = 0.594913076530892;  // 0.38 / sqrt(0.408)

CvdVector real2(double p) { return make_cvd(kTwo, {{p, 0.0}, {1.0 - p, 0.0}}); }

}  // namespace

TEST(InnerProduct, DisjointRealSupports) {
  const auto ip = inner_product(real2(1.0), real2(0.0));
  EXPECT_EQ(ip, ComplexScalar(0.0, 0.0));
}

TEST(InnerProduct, HandDerivedValues) {
  Fixture f;
  const auto self = inner_product(f.a, f.a);
  EXPECT_NEAR(self.real(), 0.68, 1e-12);
  EXPECT_EQ(self.imag(), 0.0);
  const auto ab = inner_product(f.a, f.b);
  EXPECT_NEAR(ab.real(), 0.38, 1e-12);
  EXPECT_NEAR(ab.imag(), 0.06, 1e-12);

  const auto o = oracle::inner(oracle::from(f.a), oracle::from(f.b));
  EXPECT_NEAR(o.re, 0.38, 1e-12);
  EXPECT_NEAR(o.im, 0.06, 1e-12);
}

TEST(InnerProduct, SpaceMismatch) {
  const OutcomeSpace other({"x", "y"});
  const auto b = make_cvd(other, {{0.5, 0.0}, {0.5, 0.0}});
  try {
    inner_product(real2(0.5), b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SpaceMismatch);
  }
  EXPECT_THROW(compatibility(real2(0.5), b), Error);
}

TEST(Norm, Examples) {
  EXPECT_NEAR(norm(real2(0.5)), std::sqrt(0.5), 1e-15);
  EXPECT_EQ(norm(real2(1.0)), 1.0);
  const auto c = make_cvd(kTwo, {{0.5, 0.6}, {0.5, -0.6}});
  EXPECT_NEAR(norm(c), std::sqrt(1.22), 1e-12);
}

TEST(CosineAngle, Examples) {
  Fixture f;
  EXPECT_NEAR(cosine_angle(f.a, f.a), 1.0, 1e-12);
  EXPECT_EQ(cosine_angle(real2(1.0), real2(0.0)), 0.0);
  const auto a = make_cvd(kTwo, {{0.5, 0.6}, {0.5, -0.6}});
  const auto b = make_cvd(kTwo, {{0.5, -0.6}, {0.5, 0.6}});
  // Re<a,b> = 2(0.25 - 0.36)
  EXPECT_NEAR(cosine_angle(a, b), -0.22 / 1.22, 1e-12);
  EXPECT_NEAR(compatibility(a, b), 0.22 / 1.22, 1e-12);
}

TEST(Compatibility, Examples) {
  Fixture f;
  EXPECT_NEAR(compatibility(f.a, f.a), 1.0, 1e-12);
  EXPECT_EQ(compatibility(real2(1.0), real2(0.0)), 0.0);
  EXPECT_NEAR(compatibility(f.a, f.b), kFixtureCompatibility, 1e-9);
  EXPECT_NEAR(oracle::compatibility(oracle::from(f.a), oracle::from(f.b)), kFixtureCompatibility, 1e-12);
}

TEST(Conflict, Examples) {
  Fixture f;
  EXPECT_NEAR(conflict(f.a, f.a), 0.0, 1e-12);
  EXPECT_EQ(conflict(real2(1.0), real2(0.0)), 1.0);
  EXPECT_NEAR(conflict(f.a, f.b), 1.0 - kFixtureCompatibility, 1e-9);
}

// Overlapping supports can still be orthogonal when entries are complex, so
// only the "disjoint => 0" direction of the orthogonality property holds.
TEST(Compatibility, OrthogonalDespiteFullOverlap) {
  const auto a = make_cvd(kTwo, {{0.5, 0.5}, {0.5, -0.5}});
  const auto b = make_cvd(kTwo, {{0.5, -0.5}, {0.5, 0.5}});
  EXPECT_EQ(compatibility(a, b), 0.0);
}

TEST(InformationQuality, Examples) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto sp = gen::space(n);
    std::vector<ComplexScalar> uniform(n, {1.0 / static_cast<double>(n), 0.0});
    EXPECT_NEAR(information_quality(make_cvd(sp, uniform)), 1.0 / static_cast<double>(n), 1e-15);
    std::vector<ComplexScalar> sharp(n, {0.0, 0.0});
    sharp[0] = 1.0;
    EXPECT_EQ(information_quality(make_cvd(sp, sharp)), 1.0);
  }
  EXPECT_NEAR(information_quality(make_cvd(kTwo, {{0.5, 0.6}, {0.5, -0.6}})), 1.22, 1e-12);
}

TEST(AggregateQuality, Examples) {
  Fixture f;
  const auto one = make_source_set(kTwo, {{"a", f.a}});
  EXPECT_NEAR(aggregate_quality(one), information_quality(f.a), 1e-15);

  const auto orth = make_source_set(kTwo, {{"x", real2(1.0)}, {"y", real2(0.0)}});
  EXPECT_EQ(aggregate_quality(orth), 0.5);

  const auto pair = make_source_set(kTwo, {{"a", f.a}, {"b", f.b}});
  EXPECT_NEAR(aggregate_quality(pair), 0.51, 1e-12);
  EXPECT_NEAR(oracle::aggregate({oracle::from(f.a), oracle::from(f.b)}), 0.51, 1e-12);
}

TEST(AggregateQuality, SubsetOverload) {
  gen::Rng rng(11);
  const auto s = gen::source_set(rng, 5, 4);
  const std::vector<std::size_t> pick{1, 3};
  const auto sub = make_source_set(s.space(), {s[1], s[3]});
  EXPECT_EQ(aggregate_quality(s, pick), aggregate_quality(sub));
  EXPECT_THROW(aggregate_quality(s, std::span<const std::size_t>{}), std::invalid_argument);
}

TEST(PairwiseMatrix, Examples) {
  Fixture f;
  const auto one = make_source_set(kTwo, {{"a", f.a}});
  const auto m1 = pairwise_matrix(one, PairwiseKind::Compatibility);
  ASSERT_EQ(m1.size(), 1u);
  EXPECT_EQ(m1(0, 0), 1.0);

  const auto orth = make_source_set(kTwo, {{"x", real2(1.0)}, {"y", real2(0.0)}});
  const auto con = pairwise_matrix(orth, PairwiseKind::Conflict);
  EXPECT_EQ(con(0, 0), 0.0);
  EXPECT_EQ(con(0, 1), 1.0);
  EXPECT_EQ(con(1, 0), 1.0);
  EXPECT_EQ(con(1, 1), 0.0);
}

TEST(PairwiseMatrix, RandomSetsMatchScalarOperations) {
  gen::Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = gen::source_set(rng, 3, 1 + trial % 8);
    for (auto kind : {PairwiseKind::Compatibility, PairwiseKind::Conflict, PairwiseKind::Cosine}) {
      const auto m = pairwise_matrix(s, kind);
      for (std::size_t k = 0; k < 3; ++k) {
        EXPECT_EQ(m(k, k), kind == PairwiseKind::Conflict ? 0.0 : 1.0);
        for (std::size_t h = 0; h < 3; ++h) {
          EXPECT_EQ(m(k, h), m(h, k));
          const auto& a = s.dist(k);
          const auto& b = s.dist(h);
          const double expect = kind == PairwiseKind::Compatibility ? compatibility(a, b)
                                : kind == PairwiseKind::Conflict    ? conflict(a, b)
                                                                    : cosine_angle(a, b);
          EXPECT_NEAR(m(k, h), expect, 1e-12);
          const double lo = kind == PairwiseKind::Cosine ? -1.0 : 0.0;
          EXPECT_GE(m(k, h), lo);
          EXPECT_LE(m(k, h), 1.0);
        }
      }
    }
  }
}

// Property suite over random pairs on random spaces.
TEST(MeasureProperties, RandomPairs) {
  gen::Rng rng(2024);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const auto sp = gen::space(n);
    const auto a = gen::cvd(rng, sp);
    const auto b = trial % 5 == 0 ? gen::cvd(rng, sp, true) : gen::cvd(rng, sp);

    const auto ab = inner_product(a, b);
    const auto ba = inner_product(b, a);
    EXPECT_NEAR(ab.real(), ba.real(), 1e-12);
    EXPECT_NEAR(ab.imag(), -ba.imag(), 1e-12);

    const auto aa = inner_product(a, a);
    EXPECT_LE(std::abs(aa.imag()), 1e-12);
    EXPECT_GE(aa.real(), 0.0);
    EXPECT_NEAR(norm(a) * norm(a), information_quality(a), 1e-12);
    EXPECT_LE(std::abs(ab), norm(a) * norm(b) + 1e-9);

    const double com = compatibility(a, b);
    EXPECT_EQ(com, compatibility(b, a));
    EXPECT_GE(com, 0.0);
    EXPECT_LE(com, 1.0);
    EXPECT_GE(cosine_angle(a, b), -1.0);
    EXPECT_LE(cosine_angle(a, b), 1.0);
    EXPECT_NEAR(com, std::abs(cosine_angle(a, b)), 1e-12);
    EXPECT_EQ(conflict(a, b) + com, 1.0);
    EXPECT_NEAR(compatibility(a, a), 1.0, 1e-12);

    const auto oa = oracle::from(a), ob = oracle::from(b);
    EXPECT_NEAR(com, oracle::compatibility(oa, ob), 1e-12);
    EXPECT_NEAR(cosine_angle(a, b), oracle::cosine(oa, ob), 1e-12);

    double dist = 0.0;
    for (std::size_t j = 0; j < n; ++j) dist = std::max(dist, std::abs(a[j] - b[j]));
    if (dist > 0.01) {
      EXPECT_LT(com, 1.0);
    }

    EXPECT_GE(information_quality(a), 1.0 / static_cast<double>(n) - 1e-9);
    EXPECT_LE(information_quality(a), static_cast<double>(n) + 1e-9);
  }
}

TEST(MeasureProperties, DisjointSupportsAreOrthogonal) {
  gen::Rng rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto sp = gen::space(2 + trial % 11);
    const auto [a, b] = gen::disjoint_pair(rng, sp);
    EXPECT_NEAR(compatibility(a, b), 0.0, 1e-12);
    EXPECT_NEAR(conflict(a, b), 1.0, 1e-12);
  }
}

TEST(MeasureProperties, RealCaseIsOneMinusGini) {
  gen::Rng rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const auto sp = gen::space(1 + trial % 10);
    const auto a = gen::cvd(rng, sp, true);
    std::vector<double> p;
    for (const auto& c : a.entries()) p.push_back(c.real());
    EXPECT_NEAR(information_quality(a), 1.0 - oracle::gini(p), 1e-12);
    EXPECT_LE(information_quality(a), 1.0 + 1e-12);
  }
}

TEST(MeasureProperties, AggregateIsPermutationInvariant) {
  gen::Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = 1 + trial % 8;
    const auto s = gen::source_set(rng, r, 1 + trial % 10);
    std::vector<std::size_t> order(r);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    EXPECT_NEAR(aggregate_quality(s), aggregate_quality(s.permuted(order)), 1e-12);

    std::vector<oracle::Vec> srcs;
    for (const auto& src : s.sources()) srcs.push_back(oracle::from(src.dist));
    EXPECT_NEAR(aggregate_quality(s), oracle::aggregate(srcs), 1e-12);
  }
}
