#include "senvr/weak_order.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "senvr/enumerate.h"
#include "senvr/errors.h"
#include "senvr/preference_map.h"
#include "test_support.h"

namespace senvr {
namespace {

using testing::MakeTriple;
using testing::Order;

const std::vector<std::string> kXyz = {"x", "y", "z"};
const std::vector<std::string> kWxyz = {"w", "x", "y", "z"};

std::vector<AlternativeId> Ids(std::initializer_list<std::size_t> indices) {
  std::vector<AlternativeId> ids;
  for (std::size_t i : indices) ids.push_back(AlternativeId(i));
  return ids;
}

std::vector<PositionInterval> Rows(
    std::initializer_list<std::pair<std::size_t, std::size_t>> spans) {
  std::vector<PositionInterval> rows;
  for (auto [first, last] : spans) rows.push_back({first, last});
  return rows;
}

MembershipMatrix Matrix(std::initializer_list<std::initializer_list<int>> rows) {
  MembershipMatrix m(rows.size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (int bit : row) m.set(i, j++, static_cast<std::uint8_t>(bit));
    ++i;
  }
  return m;
}

TEST(WeakOrderTest, StrictChainFromClasses) {
  const WeakOrder order = WeakOrder::FromClasses(
      {{AlternativeId(0)}, {AlternativeId(1)}, {AlternativeId(2)}}, 3);
  EXPECT_EQ(order.class_count(), 3u);
  EXPECT_TRUE(order.Prefers(AlternativeId(0), AlternativeId(1)));
  EXPECT_TRUE(order.Prefers(AlternativeId(1), AlternativeId(2)));
}

TEST(WeakOrderTest, TotalIndifferenceFromClasses) {
  const WeakOrder order = WeakOrder::FromClasses(
      {{AlternativeId(2), AlternativeId(0), AlternativeId(1)}}, 3);
  EXPECT_EQ(order.class_count(), 1u);
  EXPECT_EQ(order.classes()[0], Ids({0, 1, 2}));
  EXPECT_TRUE(order.Indifferent(AlternativeId(0), AlternativeId(2)));
}

TEST(WeakOrderTest, RejectsMalformedPartitions) {
  EXPECT_THROW(WeakOrder::FromClasses(
                   {{AlternativeId(0)}, {AlternativeId(0), AlternativeId(1)}}, 2),
               PartitionError);
  EXPECT_THROW(WeakOrder::FromClasses({{AlternativeId(0)}, {AlternativeId(2)}}, 2),
               PartitionError);
  EXPECT_THROW(WeakOrder::FromClasses({{AlternativeId(0)}}, 2), PartitionError);
  EXPECT_THROW(
      WeakOrder::FromClasses({{AlternativeId(0)}, {}, {AlternativeId(1)}}, 2),
      PartitionError);
  const std::vector<std::size_t> gap = {0, 2};
  EXPECT_THROW(WeakOrder::FromClassLabels(gap), PartitionError);
}

TEST(WeakOrderTest, PredominanceSet) {
  EXPECT_EQ(PredominanceSet(Order("x > y > z", kXyz), AlternativeId(2)),
            Ids({0, 1}));
  EXPECT_TRUE(PredominanceSet(Order("x ~ y > z", kXyz), AlternativeId(0)).empty());
  EXPECT_EQ(PredominanceSet(Order("x ~ y > z", kXyz), AlternativeId(2)),
            Ids({0, 1}));
}

TEST(WeakOrderTest, IndifferenceSetIncludesItself) {
  EXPECT_EQ(IndifferenceSet(Order("x > y > z", kXyz), AlternativeId(0)), Ids({0}));
  EXPECT_EQ(IndifferenceSet(Order("x ~ y > z", kXyz), AlternativeId(1)),
            Ids({0, 1}));
  EXPECT_EQ(IndifferenceSet(Order("x ~ y ~ z", kXyz), AlternativeId(2)),
            Ids({0, 1, 2}));
}

TEST(PreferenceMapTest, ThreeVoterExample) {
  EXPECT_EQ(BuildPreferenceMap(Order("x > y > z", kXyz)).rows,
            Rows({{1, 1}, {2, 2}, {3, 3}}));
  EXPECT_EQ(BuildPreferenceMap(Order("x ~ y > z", kXyz)).rows,
            Rows({{1, 2}, {1, 2}, {3, 3}}));
  EXPECT_EQ(BuildPreferenceMap(Order("x ~ y ~ z", kXyz)).rows,
            Rows({{1, 3}, {1, 3}, {1, 3}}));
}

TEST(PreferenceMapTest, MembershipMatricesOfThreeVoterExample) {
  EXPECT_EQ(BuildMembershipMatrix(BuildPreferenceMap(Order("x > y > z", kXyz))),
            Matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(BuildMembershipMatrix(BuildPreferenceMap(Order("x ~ y > z", kXyz))),
            Matrix({{1, 1, 0}, {1, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(BuildMembershipMatrix(BuildPreferenceMap(Order("x ~ y ~ z", kXyz))),
            Matrix({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
}

TEST(PreferenceMapTest, TwoAlternativesAccepted) {
  const std::vector<std::size_t> tied = {0, 0};
  EXPECT_EQ(BuildPreferenceMap(WeakOrder::FromClassLabels(tied)).rows,
            Rows({{1, 2}, {1, 2}}));
}

TEST(RestrictTest, FourAlternativeVoters) {
  const Triple wxy = MakeTriple(0, 1, 2);
  const WeakOrder voter4 = Restrict(Order("z > y ~ x > w", kWxyz), wxy);
  EXPECT_EQ(voter4, Order("x ~ y > w", {"w", "x", "y"}));
  EXPECT_EQ(BuildPreferenceMap(voter4).rows, Rows({{3, 3}, {1, 2}, {1, 2}}));

  const WeakOrder voter2 = Restrict(Order("x ~ w > z > y", kWxyz), wxy);
  EXPECT_EQ(BuildPreferenceMap(voter2).rows, Rows({{1, 2}, {1, 2}, {3, 3}}));
}

TEST(RestrictTest, TripleInsideOneClassIsTotallyIndifferent) {
  const WeakOrder order = Order("z > w ~ x ~ y", kWxyz);
  const WeakOrder restricted = Restrict(order, MakeTriple(0, 1, 2));
  EXPECT_EQ(restricted.class_count(), 1u);
  EXPECT_TRUE(IsUnconcerned(order, MakeTriple(0, 1, 2)));
  EXPECT_FALSE(IsUnconcerned(order, MakeTriple(0, 1, 3)));
}

TEST(RestrictTest, Unconcerned) {
  EXPECT_TRUE(IsUnconcerned(Order("x ~ y ~ z", kXyz), MakeTriple(0, 1, 2)));
  EXPECT_FALSE(IsUnconcerned(Order("x > y > z", kXyz), MakeTriple(0, 1, 2)));
  const WeakOrder order = Order("w ~ x > y ~ z", kWxyz);
  EXPECT_EQ(Restrict(order, MakeTriple(0, 1, 2)).class_count(), 2u);
  EXPECT_FALSE(IsUnconcerned(order, MakeTriple(0, 1, 2)));
}

TEST(TripleTest, CanonicalOrderEnforced) {
  EXPECT_THROW(MakeTriple(1, 0, 2), std::invalid_argument);
  EXPECT_THROW(MakeTriple(0, 0, 2), std::invalid_argument);
  const std::vector<Triple> triples = AllTriples(4);
  ASSERT_EQ(triples.size(), 4u);
  EXPECT_EQ(triples[0], MakeTriple(0, 1, 2));
  EXPECT_EQ(triples[1], MakeTriple(0, 1, 3));
  EXPECT_EQ(triples[2], MakeTriple(0, 2, 3));
  EXPECT_EQ(triples[3], MakeTriple(1, 2, 3));
  EXPECT_EQ(AllTriples(6).size(), 20u);
  EXPECT_TRUE(AllTriples(2).empty());
}

// Properties over every weak order on up to five alternatives.
class PreferenceMapPropertyTest : public ::testing::TestWithParam<std::size_t> {};

TEST_P(PreferenceMapPropertyTest, TilingPositionsAndTies) {
  const std::size_t m = GetParam();
  for (const WeakOrder& order : EnumerateWeakOrders(m)) {
    const PreferenceMap pm = BuildPreferenceMap(order);
    ASSERT_EQ(pm.size(), m);

    // Distinct rows tile {1..m} with consecutive disjoint intervals.
    std::map<std::size_t, PositionInterval> distinct;
    for (const auto& row : pm.rows) distinct[row.first] = row;
    std::size_t next = 1;
    for (const auto& [first, row] : distinct) {
      EXPECT_EQ(first, next);
      next = row.last + 1;
    }
    EXPECT_EQ(next, m + 1);

    for (std::size_t i = 0; i < m; ++i) {
      const AlternativeId a(i);
      EXPECT_EQ(pm.rows[i].first, PredominanceSet(order, a).size() + 1);
      EXPECT_EQ(pm.rows[i].last, PredominanceSet(order, a).size() +
                                     IndifferenceSet(order, a).size());
      EXPECT_EQ(pm.rows[i].size(), IndifferenceSet(order, a).size());
      for (std::size_t k = 0; k < m; ++k) {
        EXPECT_EQ(pm.rows[i] == pm.rows[k],
                  order.Indifferent(a, AlternativeId(k)));
      }
    }

    // Reading 1-positions back out of the membership matrix recovers the map.
    const MembershipMatrix mpm = BuildMembershipMatrix(pm);
    for (std::size_t j = 0; j < m; ++j) {
      std::size_t column_sum = 0;
      for (std::size_t i = 0; i < m; ++i) column_sum += mpm.at(i, j);
      EXPECT_GE(column_sum, 1u);
    }
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<std::size_t> ones;
      for (std::size_t j = 0; j < m; ++j) {
        if (mpm.at(i, j)) ones.push_back(j + 1);
      }
      ASSERT_FALSE(ones.empty());
      EXPECT_EQ(ones.front(), pm.rows[i].first);
      EXPECT_EQ(ones.back(), pm.rows[i].last);
      EXPECT_EQ(ones.size(), pm.rows[i].size());
    }
  }
}

TEST_P(PreferenceMapPropertyTest, RestrictionMatchesDirectTriplePositions) {
  const std::size_t m = GetParam();
  if (m < 3) GTEST_SKIP();
  for (const WeakOrder& order : EnumerateWeakOrders(m)) {
    for (const Triple& triple : AllTriples(m)) {
      const WeakOrder restricted = Restrict(order, triple);
      ASSERT_EQ(restricted.size(), 3u);
      const PreferenceMap pm = BuildPreferenceMap(restricted);
      const auto direct = testing::DirectTriplePositions(order, triple);
      for (std::size_t i = 0; i < 3; ++i) {
        std::set<std::size_t> from_map;
        for (std::size_t p = pm.rows[i].first; p <= pm.rows[i].last; ++p) {
          from_map.insert(p);
        }
        EXPECT_EQ(from_map, direct[i]);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllSmallSizes, PreferenceMapPropertyTest,
                         ::testing::Values(1, 2, 3, 4, 5));

}  // namespace
}  // namespace senvr
