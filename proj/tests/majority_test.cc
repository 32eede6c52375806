#include "senvr/majority.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "senvr/enumerate.h"
#include "test_support.h"

namespace senvr {
namespace {

using testing::LoadFixture;

constexpr AlternativeId kW(0), kX(1), kY(2), kZ(3);

TEST(PairwiseTallyTest, FourAlternativeExample) {
  const PairwiseTally tally = PairwiseTallies(LoadFixture("example2.profile"));
  EXPECT_EQ(tally.prefer(kX, kW), 3u);
  EXPECT_EQ(tally.prefer(kW, kX), 0u);
  EXPECT_EQ(tally.prefer(kX, kZ), 2u);
  EXPECT_EQ(tally.prefer(kZ, kX), 2u);
  EXPECT_EQ(tally.prefer(kY, kW), 3u);
  EXPECT_EQ(tally.prefer(kW, kY), 2u);
  EXPECT_EQ(tally.prefer(kZ, kY), 4u);
  EXPECT_EQ(tally.prefer(kY, kZ), 1u);
}

TEST(PairwiseTallyTest, SingleVoter) {
  const PairwiseTally tally =
      PairwiseTallies(ParseProfile("alternatives: x y\nvoter: x > y\n"));
  EXPECT_EQ(tally.prefer(AlternativeId(0), AlternativeId(1)), 1u);
  EXPECT_EQ(tally.prefer(AlternativeId(1), AlternativeId(0)), 0u);
}

TEST(MajorityRelationTest, FourAlternativeExample) {
  const SocialRelation r =
      MajorityRelation(PairwiseTallies(LoadFixture("example2.profile")));
  EXPECT_TRUE(r.StrictlyPrefers(kX, kW));
  EXPECT_TRUE(r.StrictlyPrefers(kX, kY));
  EXPECT_TRUE(r.StrictlyPrefers(kZ, kY));
  EXPECT_TRUE(r.StrictlyPrefers(kZ, kW));
  EXPECT_TRUE(r.StrictlyPrefers(kY, kW));
  EXPECT_TRUE(r.Indifferent(kX, kZ));
  EXPECT_FALSE(r.WeaklyPrefers(kW, kY));
}

TEST(MajorityRelationTest, CondorcetCycle) {
  const SocialRelation r =
      MajorityRelation(PairwiseTallies(LoadFixture("condorcet.profile")));
  const AlternativeId x(0), y(1), z(2);
  EXPECT_TRUE(r.StrictlyPrefers(x, y));
  EXPECT_TRUE(r.StrictlyPrefers(y, z));
  EXPECT_TRUE(r.StrictlyPrefers(z, x));
}

TEST(MajorityRelationTest, AllIndifferentIsAllTies) {
  const SocialRelation r = MajorityRelation(
      PairwiseTallies(ParseProfile("alternatives: a b c\nvoter: a ~ b ~ c\n")));
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      EXPECT_TRUE(r.WeaklyPrefers(AlternativeId(a), AlternativeId(b)));
    }
  }
}

TEST(TransitivityTest, Examples) {
  const auto relation_of = [](const Profile& p) {
    return MajorityRelation(PairwiseTallies(p));
  };
  EXPECT_TRUE(CheckTransitivity(relation_of(LoadFixture("example2.profile")))
                  .transitive);

  const TransitivityCheck cycle =
      CheckTransitivity(relation_of(LoadFixture("condorcet.profile")));
  EXPECT_FALSE(cycle.transitive);
  ASSERT_TRUE(cycle.counterexample);
  EXPECT_EQ(*cycle.counterexample,
            (std::array{AlternativeId(0), AlternativeId(1), AlternativeId(2)}));
}

TEST(TransitivityTest, TwoAlternativesAlwaysTransitive) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const ProfileSpace space(2, n);
    for (std::uint64_t i = 0; i < space.size(); ++i) {
      EXPECT_TRUE(
          CheckTransitivity(MajorityRelation(PairwiseTallies(space.at(i))))
              .transitive);
    }
  }
}

TEST(SocialOrderingTest, FourAlternativeExample) {
  const SocialOutcome outcome = SocialOrdering(
      MajorityRelation(PairwiseTallies(LoadFixture("example2.profile"))));
  ASSERT_TRUE(std::holds_alternative<WeakOrder>(outcome));
  const auto& classes = std::get<WeakOrder>(outcome).classes();
  ASSERT_EQ(classes.size(), 3u);
  EXPECT_EQ(classes[0], (WeakOrder::Class{kX, kZ}));
  EXPECT_EQ(classes[1], (WeakOrder::Class{kY}));
  EXPECT_EQ(classes[2], (WeakOrder::Class{kW}));
}

TEST(SocialOrderingTest, CondorcetYieldsCycleReport) {
  const SocialOutcome outcome = SocialOrdering(
      MajorityRelation(PairwiseTallies(LoadFixture("condorcet.profile"))));
  ASSERT_TRUE(std::holds_alternative<CycleReport>(outcome));
  EXPECT_EQ(std::get<CycleReport>(outcome).witness,
            (std::array{AlternativeId(0), AlternativeId(1), AlternativeId(2)}));
}

TEST(SocialOrderingTest, SingleVoterIsReproduced) {
  for (const WeakOrder& order : EnumerateWeakOrders(4)) {
    const Profile profile(DefaultNames(4), {order});
    const SocialOutcome outcome =
        SocialOrdering(MajorityRelation(PairwiseTallies(profile)));
    ASSERT_TRUE(std::holds_alternative<WeakOrder>(outcome));
    EXPECT_EQ(std::get<WeakOrder>(outcome), order);
  }
}

Profile Relabel(const Profile& profile, const std::vector<std::size_t>& perm) {
  // Alternative i becomes perm[i].
  std::vector<std::string> names(profile.alternative_count());
  for (std::size_t i = 0; i < perm.size(); ++i) names[perm[i]] = profile.names()[i];
  std::vector<WeakOrder> voters;
  for (const WeakOrder& order : profile.voters()) {
    std::vector<std::size_t> labels(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
      labels[perm[i]] = order.rank(AlternativeId(i));
    }
    voters.push_back(WeakOrder::FromClassLabels(labels));
  }
  return Profile(names, voters);
}

TEST(MajorityPropertyTest, RandomProfiles) {
  std::mt19937_64 rng(5);
  for (std::uint64_t trial = 0; trial < 400; ++trial) {
    const std::size_t m = 2 + trial % 5;
    const std::size_t n = 1 + trial % 9;
    const Profile profile = RandomProfile(m, n, 17, trial);
    const PairwiseTally tally = PairwiseTallies(profile);
    const SocialRelation relation = MajorityRelation(tally);

    for (std::size_t a = 0; a < m; ++a) {
      const AlternativeId x(a);
      EXPECT_EQ(tally.prefer(x, x), 0u);
      EXPECT_TRUE(relation.WeaklyPrefers(x, x));
      for (std::size_t b = 0; b < m; ++b) {
        const AlternativeId y(b);
        EXPECT_TRUE(relation.WeaklyPrefers(x, y) || relation.WeaklyPrefers(y, x));
        EXPECT_LE(tally.prefer(x, y) + tally.prefer(y, x), n);
        const bool unanimous =
            std::all_of(profile.voters().begin(), profile.voters().end(),
                        [&](const WeakOrder& o) { return o.Prefers(x, y); });
        if (unanimous) EXPECT_TRUE(relation.StrictlyPrefers(x, y));
      }
    }

    const SocialOutcome outcome = SocialOrdering(relation);
    if (CheckTransitivity(relation).transitive) {
      ASSERT_TRUE(std::holds_alternative<WeakOrder>(outcome));
      EXPECT_EQ(InducedRelation(std::get<WeakOrder>(outcome)), relation);
    } else {
      ASSERT_TRUE(std::holds_alternative<CycleReport>(outcome));
      const auto& w = std::get<CycleReport>(outcome).witness;
      EXPECT_TRUE(relation.WeaklyPrefers(w[0], w[1]));
      EXPECT_TRUE(relation.WeaklyPrefers(w[1], w[2]));
      EXPECT_TRUE(relation.StrictlyPrefers(w[2], w[0]));
    }

    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Profile relabelled = Relabel(profile, perm);
    const PairwiseTally tally2 = PairwiseTallies(relabelled);
    const SocialRelation relation2 = MajorityRelation(tally2);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        const AlternativeId x(a), y(b), px(perm[a]), py(perm[b]);
        EXPECT_EQ(tally.prefer(x, y), tally2.prefer(px, py));
        EXPECT_EQ(relation.WeaklyPrefers(x, y), relation2.WeaklyPrefers(px, py));
      }
    }
    EXPECT_EQ(CheckTransitivity(relation).transitive,
              CheckTransitivity(relation2).transitive);
    if (const auto* order = std::get_if<WeakOrder>(&outcome)) {
      const WeakOrder order2 = std::get<WeakOrder>(SocialOrdering(relation2));
      for (std::size_t a = 0; a < m; ++a) {
        EXPECT_EQ(order->rank(AlternativeId(a)),
                  order2.rank(AlternativeId(perm[a])));
      }
    }
  }
}

}  // namespace
}  // namespace senvr
