#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "aradon/errors.hpp"
#include "aradon/exact_reference.hpp"
#include "test_support.hpp"

namespace aradon {
namespace {

double row_sum(const std::vector<double>& row) { return std::accumulate(row.begin(), row.end(), 0.0); }

TEST(RhoAxis, Sizes) {
  EXPECT_EQ(rho_axis(2), (std::vector<double>{-3, -2, -1, 0, 1, 2, 3}));
  EXPECT_EQ(rho_axis(4).size(), 9u);
  for (std::size_t n = 2; n < 100; ++n) {
    const auto axis = rho_axis(n);
    EXPECT_EQ(axis.size() % 2, 1u);
    EXPECT_EQ(row_sum(axis), 0.0);
    EXPECT_EQ(axis.size(), 2 * static_cast<std::size_t>(std::ceil(n * std::sqrt(2.0) / 2.0)) + 3);
  }
  EXPECT_THROW(rho_axis(1), ArgumentError);
}

TEST(ExactRadon, ZeroImage) {
  const std::vector<double> angles = {0.0, 33.0, 90.0, 179.5};
  const auto sino = exact_radon(Image(5), angles);
  ASSERT_EQ(sino.values.size(), 4u);
  for (const auto& row : sino.values)
    for (double v : row) EXPECT_EQ(v, 0.0);
}

TEST(ExactRadon, SinglePixelMass) {
  Image img(9);
  img(2, 6) = 100;
  const auto sino = exact_radon(img, angle_range(0.0, 7.5, 180.0));
  for (const auto& row : sino.values) EXPECT_NEAR(row_sum(row), 100.0, 1e-7);
}

TEST(ExactRadon, TwoByTwoOnesAtZeroDegrees) {
  const Image img = Image::from_rows({{1, 1}, {1, 1}});
  const std::vector<double> angles = {0.0};
  const auto sino = exact_radon(img, angles);
  // Subpixels sit at x = -0.75, -0.25, 0.25, 0.75 with unit mass each; the
  // bins at rho = -1, 0, 1 collect 1, 2, 1.
  const std::vector<double> expected = {0, 0, 1, 2, 1, 0, 0};
  ASSERT_EQ(sino.values[0].size(), expected.size());
  const auto oracle = testing::exact_oracle_row(img, 0.0, rho_axis(2));
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_NEAR(sino.values[0][i], expected[i], 1e-12);
    EXPECT_NEAR(oracle[i], expected[i], 1e-12);
  }
}

TEST(ExactRadon, MatchesBruteForceOracle) {
  std::mt19937 rng(5);
  for (std::size_t n : {3u, 8u, 13u}) {
    const Image img = testing::random_image(n, rng);
    const auto angles = angle_range(0.0, 11.0, 180.0);
    const auto sino = exact_radon(img, angles);
    for (std::size_t a = 0; a < angles.size(); ++a) {
      const auto oracle = testing::exact_oracle_row(img, angles[a], sino.rho_centers);
      for (std::size_t i = 0; i < oracle.size(); ++i) ASSERT_NEAR(sino.values[a][i], oracle[i], 1e-9);
    }
  }
}

TEST(ExactRadon, MassConservation) {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> angle(0.0, 180.0);
  for (int trial = 0; trial < 30; ++trial) {
    const Image img = testing::random_image(2 + static_cast<std::size_t>(trial), rng);
    std::vector<double> angles(12);
    for (auto& a : angles) a = angle(rng);
    const auto sino = exact_radon(img, angles);
    const double mass = static_cast<double>(img.mass());
    for (const auto& row : sino.values) EXPECT_NEAR(row_sum(row), mass, 1e-9 * std::max(mass, 1.0));
  }
}

TEST(ExactRadon, MirrorSymmetricImageGivesPalindromicProjection) {
  std::mt19937 rng(3);
  for (std::size_t n : {4u, 7u, 12u}) {
    Image img = testing::random_image(n, rng);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n / 2; ++c) img(r, n - 1 - c) = img(r, c);
    ASSERT_EQ(mirror_h(img), img);
    // Left-right symmetry is symmetry in x, so the rho = x projection is
    // palindromic; the transposed image has the same property at 90 degrees.
    const std::vector<double> angles = {0.0, 90.0};
    const auto sino = exact_radon(img, angles);
    const auto sino_t = exact_radon(transpose(img), angles);
    const auto& row = sino.values[0];
    const auto& row_t = sino_t.values[1];
    for (std::size_t i = 0; i < row.size(); ++i) {
      EXPECT_NEAR(row[i], row[row.size() - 1 - i], 1e-9);
      EXPECT_NEAR(row_t[i], row_t[row.size() - 1 - i], 1e-9);
    }
  }
}

TEST(ExactRadon, TranslationShiftsZeroDegreeProjection) {
  std::mt19937 rng(11);
  const std::size_t n = 10;
  Image img = testing::random_image(n, rng);
  for (std::size_t r = 0; r < n; ++r) img(r, n - 1) = 0;
  Image moved(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c + 1 < n; ++c) moved(r, c + 1) = img(r, c);
  const std::vector<double> angles = {0.0};
  const auto a = exact_radon(img, angles).values[0];
  const auto b = exact_radon(moved, angles).values[0];
  for (std::size_t i = 0; i + 1 < a.size(); ++i) EXPECT_NEAR(b[i + 1], a[i], 1e-9);
}

TEST(ExactRadon, OperationCount) {
  EXPECT_EQ(op_count_estimate(2, 1), 16u);
  EXPECT_EQ(op_count_estimate(10, 180), 72000u);
  std::mt19937 rng(1);
  const Image img = testing::random_image(10, rng);
  const auto angles = angle_range(0.0, 1.0, 180.0);
  ExactStats stats;
  exact_radon(img, angles, &stats);
  EXPECT_EQ(stats.subpixel_ops, op_count_estimate(10, 180));
}

TEST(ExactRadon, PerAngleRowsIndependentOfBatch) {
  std::mt19937 rng(21);
  const Image img = testing::random_image(9, rng);
  const auto angles = angle_range(0.0, 13.0, 180.0);
  const auto all = exact_radon(img, angles);
  for (std::size_t a = 0; a < angles.size(); ++a) {
    const std::vector<double> single = {angles[a]};
    EXPECT_EQ(exact_radon(img, single).values[0], all.values[a]);
  }
}

TEST(ExactRadon, RejectsBadAngles) {
  const Image img(4);
  EXPECT_THROW(exact_radon(img, std::vector<double>{180.0}), ArgumentError);
  EXPECT_THROW(exact_radon(img, std::vector<double>{-0.1}), ArgumentError);
  EXPECT_THROW(exact_radon(img, std::vector<double>{std::nan("")}), ArgumentError);
}

TEST(AngleRange, HalfOpen) {
  EXPECT_EQ(angle_range(0.0, 45.0, 180.0), (std::vector<double>{0, 45, 90, 135}));
  EXPECT_EQ(angle_range(0.0, 1.0, 180.0).size(), 180u);
  EXPECT_THROW(angle_range(0.0, 0.0, 10.0), ArgumentError);
}

}  // namespace
}  // namespace aradon
