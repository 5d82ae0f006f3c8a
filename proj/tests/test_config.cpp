#include <gtest/gtest.h>

#include <set>

#include "qram/config.hpp"
#include "qram/errors.hpp"

using qram::ConfigSpace;
using qram::Configuration;
using qram::GridIndex;

TEST(ConfigSpace, DefaultGridHas90Configurations) {
  const ConfigSpace s = ConfigSpace::default_grid();
  EXPECT_EQ(s.size(), 90u);
  EXPECT_EQ(s.dwell_grid(), (std::vector<double>{100, 300, 500, 700, 900, 1100}));
  EXPECT_EQ(s.tx_duration_grid(), (std::vector<double>{2, 4, 6, 8, 10}));
  EXPECT_EQ(s.tx_power_grid(), (std::vector<double>{1, 2, 4}));
}

TEST(ConfigSpace, RowMajorNumbering) {
  const ConfigSpace s = ConfigSpace::default_grid();
  EXPECT_EQ(s.at(0), (Configuration{100, 2, 1}));
  EXPECT_EQ(s.at(1), (Configuration{100, 2, 2}));
  EXPECT_EQ(s.at(3), (Configuration{100, 4, 1}));
  EXPECT_EQ(s.at(15), (Configuration{300, 2, 1}));
  EXPECT_EQ(s.at(89), (Configuration{1100, 10, 4}));
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(s.flat_index(s.grid_index(i)), i);
    EXPECT_EQ(s.index_of(s.at(i)), i);
  }
}

TEST(ConfigSpace, AllIsSortedAndUnique) {
  const auto all = ConfigSpace::default_grid().all();
  ASSERT_EQ(all.size(), 90u);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(std::set<Configuration>(all.begin(), all.end()).size(), 90u);
  for (const auto& c : all) EXPECT_LT(c.transmit_duration_ms, c.dwell_length_ms);
}

TEST(ConfigSpace, RejectsBadGrids) {
  EXPECT_THROW(ConfigSpace({}, {2}, {1}), qram::ArgumentError);
  EXPECT_THROW(ConfigSpace({100, 100}, {2}, {1}), qram::ArgumentError);
  EXPECT_THROW(ConfigSpace({300, 100}, {2}, {1}), qram::ArgumentError);
  EXPECT_THROW(ConfigSpace({100}, {2}, {0}), qram::ArgumentError);
  EXPECT_THROW(ConfigSpace({100}, {-2, 2}, {1}), qram::ArgumentError);
  // a transmission as long as the dwell is not allowed
  EXPECT_THROW(ConfigSpace({100, 300}, {2, 100}, {1}), qram::ArgumentError);
  EXPECT_NO_THROW(ConfigSpace({100}, {99}, {1}));
}

TEST(ConfigSpace, MembershipAndRangeChecks) {
  const ConfigSpace s = ConfigSpace::default_grid();
  EXPECT_TRUE(s.contains({500, 6, 2}));
  EXPECT_FALSE(s.contains({500, 6, 3}));
  EXPECT_THROW(s.index_of({500, 6, 3}), qram::ContractViolation);
  EXPECT_THROW(s.at(90), qram::ContractViolation);
  EXPECT_THROW(s.flat_index(GridIndex{6, 0, 0}), qram::ContractViolation);
}

TEST(ConfigSpace, NormalizedCoordinates) {
  const ConfigSpace s = ConfigSpace::default_grid();
  const auto n = s.normalized(GridIndex{2, 4, 1});
  EXPECT_DOUBLE_EQ(n[0], 2.0 / 5.0);
  EXPECT_DOUBLE_EQ(n[1], 1.0);
  EXPECT_DOUBLE_EQ(n[2], 0.5);
  const ConfigSpace single({100}, {2}, {4});
  const auto z = single.normalized(GridIndex{0, 0, 0});
  EXPECT_EQ(z, (std::array<double, 3>{0, 0, 0}));
}

TEST(ConfigSpace, NearestInvertsNormalized) {
  const ConfigSpace s = ConfigSpace::refined(12, 5, 3);
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(s.nearest(s.normalized(s.grid_index(i))), s.grid_index(i));
  // halfway between two points goes to the lower one; out of range clamps
  const ConfigSpace t({100, 200, 300}, {2}, {1});
  EXPECT_EQ(t.nearest({0.25, 0, 0}).dwell, 0u);
  EXPECT_EQ(t.nearest({0.26, 0, 0}).dwell, 1u);
  EXPECT_EQ(t.nearest({7.0, 0, 0}).dwell, 2u);
  EXPECT_EQ(t.nearest({-1.0, 0, 0}).dwell, 0u);
}

TEST(ConfigSpace, RefinedSpansDefaultRanges) {
  const ConfigSpace s = ConfigSpace::refined(50, 30, 3);
  EXPECT_EQ(s.size(), 4500u);
  EXPECT_EQ(s.dwell_grid().front(), 100.0);
  EXPECT_EQ(s.dwell_grid().back(), 1100.0);
  EXPECT_EQ(s.tx_duration_grid().front(), 2.0);
  EXPECT_EQ(s.tx_duration_grid().back(), 10.0);
  EXPECT_EQ(s.tx_power_grid(), (std::vector<double>{1, 2, 4}));
  EXPECT_EQ(ConfigSpace::refined(6, 5, 3), ConfigSpace::default_grid());
  EXPECT_EQ(ConfigSpace::refined(2, 2, 4).tx_power_grid(), (std::vector<double>{1, 2, 3, 4}));
  EXPECT_THROW(ConfigSpace::refined(0, 5, 3), qram::ArgumentError);
}

TEST(Configuration, LexicographicOrder) {
  EXPECT_LT((Configuration{100, 10, 4}), (Configuration{300, 2, 1}));
  EXPECT_LT((Configuration{100, 2, 4}), (Configuration{100, 4, 1}));
  EXPECT_LT((Configuration{100, 2, 1}), (Configuration{100, 2, 2}));
}
