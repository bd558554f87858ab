#include <gtest/gtest.h>

#include <boost/rational.hpp>

#include "brute_force.hpp"
#include "dbal/balance.hpp"
#include "dbal/gp.hpp"
#include "dbal/oracle.hpp"

using namespace dbal;

namespace {

BalancePartition canonical(std::int64_t n, std::int64_t k, VertexId first) {
  return partition(gp_construct(n, k), first, VertexId::outer(0, static_cast<std::uint32_t>(n)));
}

std::vector<std::pair<std::int64_t, std::int64_t>> twodb_grid(std::int64_t k_lo, std::int64_t k_hi, int per_k) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t k = k_lo; k <= k_hi; ++k) {
    std::int64_t n = 1;
    while (!in_twodb_domain(n, k)) ++n;
    for (int j = 0; j < per_k; ++j) out.emplace_back(n + 3 * j, k);
  }
  return out;
}

}  // namespace

TEST(Delta, ClosedFormValues) {
  EXPECT_EQ(delta_u0v0(15, 3), 0);
  EXPECT_EQ(delta_u0v0(24, 4), 0);
  EXPECT_EQ(delta_u0v0(30, 3), 10);
}

TEST(Delta, ThirtyThreeAgreesWithReference) {
  auto c = bf::counts(bf::build(30, 3), 30, 0);
  EXPECT_EQ(delta_u0v0(30, 3), c.closer_x - c.closer_y);
}

TEST(Delta, DomainErrors) {
  EXPECT_THROW(delta_u0v0(14, 2), DomainError);   // k < 3
  EXPECT_THROW(delta_u0v0(12, 3), DomainError);   // n < k(k+2)
  EXPECT_THROW(delta_u0v0(16, 3), DomainError);   // k does not divide n
}

TEST(Delta, MatchesBfsOnGrid) {
  for (std::int64_t k = 3; k <= 8; ++k) {
    for (std::int64_t j = 0; j <= 10; ++j) {
      const std::int64_t n = k * (k + 2) + j * k;
      auto p = canonical(n, k, VertexId::inner(0, n));
      EXPECT_EQ(delta_u0v0(n, k), p.delta() * -1) << n << "," << k;
    }
  }
}

TEST(OneDbSum, ClosedFormValues) {
  EXPECT_EQ(onedb_sum_bound(17, 3), Rational(38));
  EXPECT_EQ(onedb_sum_bound(25, 4), Rational(52));
  EXPECT_THROW(onedb_sum_bound(15, 3), DomainError);
  EXPECT_THROW(onedb_sum_bound(18, 3), DomainError);
}

TEST(OneDbSum, SeventeenThreeObserved) {
  // Floyd-Warshall reference: 2|W_{v0u0}| + |tie| = 2*19 + 2 = 40 on GP(17,3).
  auto c = bf::counts(bf::build(17, 3), 17, 0);
  ASSERT_EQ(2 * c.closer_x + c.tie, 40);
  auto p = canonical(17, 3, VertexId::inner(0, 17));
  EXPECT_EQ(2 * p.closer_x + p.tie, 40u);
  EXPECT_GE(Rational(static_cast<std::int64_t>(2 * p.closer_x + p.tie)), onedb_sum_bound(17, 3));
}

TEST(TwoDbBounds, ClosedFormValues) {
  EXPECT_EQ(twodb_w_lower(58, 6), Rational(109, 3));
  EXPECT_EQ(twodb_w_lower(48, 5), Rational(293, 10));
  EXPECT_EQ(twodb_sum_lower(58, 6), Rational(697, 6));
  EXPECT_EQ(twodb_sum_lower(48, 5), Rational(961, 10));
  EXPECT_EQ(twodb_rest_lower(58, 6), Rational(87, 2));
  EXPECT_EQ(twodb_rest_lower(48, 5), Rational(75, 2));
}

TEST(TwoDbBounds, DomainErrors) {
  EXPECT_THROW(twodb_w_lower(57, 6), DomainError);  // 4*57 = 228 is not > 228
  EXPECT_THROW(twodb_sum_lower(47, 5), DomainError);
  EXPECT_THROW(twodb_rest_lower(100, 4), DomainError);
  EXPECT_THROW(twodb_rest_lower(100, 3), DomainError);
  EXPECT_NO_THROW(twodb_w_lower(58, 6));
  EXPECT_NO_THROW(twodb_w_lower(48, 5));
}

TEST(TwoDbBounds, SumIsTwiceWPlusRestAndExceedsTwoN) {
  for (std::int64_t k = 5; k <= 40; ++k) {
    for (std::int64_t n = 2 * k + 1; n <= 3000; n += 7) {
      if (!in_twodb_domain(n, k)) continue;
      const Rational sum = twodb_sum_lower(n, k);
      ASSERT_EQ(sum, 2 * twodb_w_lower(n, k) + twodb_rest_lower(n, k)) << n << "," << k;
      ASSERT_GT(sum, Rational(2 * n));
    }
  }
}

TEST(TwoDbBounds, SumAndRestHoldOnGrid) {
  for (auto [n, k] : twodb_grid(5, 10, 10)) {
    auto p = canonical(n, k, VertexId::inner(-k, n));
    const auto w = static_cast<std::int64_t>(p.closer_x);
    const auto tie = static_cast<std::int64_t>(p.tie);
    EXPECT_GE(Rational(2 * w + tie), twodb_sum_lower(n, k)) << n << "," << k;
    EXPECT_GE(Rational(w + tie), twodb_w_lower(n, k) + twodb_rest_lower(n, k)) << n << "," << k;
    EXPECT_GT(2 * w + tie, 2 * n);
  }
}

// The |W_{v_{-k}u0}| bound alone does not hold everywhere; GP(58,6) is the
// first even-k point: Floyd-Warshall gives |W| = 36 < 109/3.
TEST(TwoDbBounds, WBoundCounterexampleIsReported) {
  auto c = bf::counts(bf::build(58, 6), 58 + 52, 0);
  ASSERT_EQ(c.closer_x, 36);
  ASSERT_EQ(c.tie, 48);
  auto g = gp_construct(58, 6);
  auto reports = check_bounds(RotationalDistances(g), 2);
  ASSERT_EQ(reports.size(), 3u);
  EXPECT_EQ(reports[0].bound, BoundName::TwoDbW);
  EXPECT_EQ(reports[0].observed, 36);
  EXPECT_FALSE(reports[0].holds);
  EXPECT_EQ(reports[1].bound, BoundName::TwoDbRest);
  EXPECT_EQ(reports[1].observed, 36 + 48);
  EXPECT_TRUE(reports[1].holds);
  EXPECT_EQ(reports[2].bound, BoundName::TwoDbSum);
  EXPECT_EQ(reports[2].observed, 120);
  EXPECT_TRUE(reports[2].holds);
}

TEST(CheckBounds, OneDistanceReports) {
  auto g = gp_construct(30, 3);
  auto r = check_bounds(RotationalDistances(g), 1);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].bound, BoundName::DeltaU0V0);
  EXPECT_TRUE(r[0].equality);
  EXPECT_EQ(r[0].observed, 10);
  EXPECT_TRUE(r[0].holds);

  auto g2 = gp_construct(17, 3);
  auto r2 = check_bounds(RotationalDistances(g2), 1);
  ASSERT_EQ(r2.size(), 1u);
  EXPECT_EQ(r2[0].bound, BoundName::OneDbSum);
  EXPECT_EQ(r2[0].observed, 40);
  EXPECT_TRUE(r2[0].holds);

  auto g3 = gp_construct(12, 2);
  EXPECT_TRUE(check_bounds(RotationalDistances(g3), 1).empty());
  EXPECT_TRUE(check_bounds(RotationalDistances(g3), 2).empty());
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_near_ring(58, 6, NearRingPair::TwoDB, VertexId::outer(-3, 58)), Membership::CloserFirst);
  EXPECT_EQ(classify_near_ring(48, 5, NearRingPair::TwoDB, VertexId::outer(-3, 48)), Membership::Tie);
  EXPECT_EQ(classify_near_ring(17, 3, NearRingPair::OneDB, VertexId::outer(2, 17)), Membership::CloserFirst);
  EXPECT_EQ(classify_near_ring(17, 3, NearRingPair::OneDB, VertexId::outer(-2, 17)), Membership::CloserFirst);
  EXPECT_EQ(classify_near_ring(17, 3, NearRingPair::OneDB, VertexId::outer(3, 17)), Membership::CloserSecond);
  EXPECT_EQ(classify_near_ring(24, 4, NearRingPair::OneDB, VertexId::outer(3, 24)), Membership::Tie);
  EXPECT_EQ(classify_near_ring(24, 4, NearRingPair::OneDB, VertexId::inner(8, 24)), Membership::CloserSecond);
  EXPECT_EQ(classify_near_ring(24, 4, NearRingPair::OneDB, VertexId::inner(9, 24)), Membership::CloserFirst);
  EXPECT_EQ(classify_near_ring(25, 4, NearRingPair::OneDB, VertexId::inner(8, 25)), Membership::Unclassified);
  EXPECT_EQ(classify_near_ring(58, 6, NearRingPair::TwoDB, VertexId::inner(-6, 58)), Membership::CloserSecond);
  EXPECT_EQ(classify_near_ring(58, 6, NearRingPair::TwoDB, VertexId::inner(20, 58)), Membership::Unclassified);
}

TEST(Classify, DomainErrors) {
  EXPECT_THROW(classify_near_ring(14, 3, NearRingPair::OneDB, VertexId::outer(0, 14)), DomainError);
  EXPECT_THROW(classify_near_ring(20, 2, NearRingPair::OneDB, VertexId::outer(0, 20)), DomainError);
  EXPECT_THROW(classify_near_ring(57, 6, NearRingPair::TwoDB, VertexId::outer(0, 57)), DomainError);
  EXPECT_THROW(classify_near_ring(47, 5, NearRingPair::TwoDB, VertexId::outer(0, 47)), DomainError);
}

TEST(Classify, AgreesWithReferenceMembership) {
  std::vector<std::tuple<int, int, NearRingPair>> cases;
  for (int k = 3; k <= 8; ++k)
    for (int n = k * (k + 2); n <= k * (k + 2) + 4 * k; n += 1) cases.emplace_back(n, k, NearRingPair::OneDB);
  for (auto [n, k] : twodb_grid(5, 9, 6)) cases.emplace_back(int(n), int(k), NearRingPair::TwoDB);

  std::size_t classified = 0;
  for (auto [n, k, pair] : cases) {
    auto ref = bf::build(n, k);
    const int second = pair == NearRingPair::OneDB ? ref.inner(0) : ref.inner(-k);
    for (int w = 0; w < 2 * n; ++w) {
      auto claim = classify_near_ring(n, k, pair, VertexId::from_flat(w, n));
      if (claim == Membership::Unclassified) continue;
      ++classified;
      const int du = ref.dist[w][0], ds = ref.dist[w][second];
      const Membership actual = du < ds ? Membership::CloserFirst
                                : ds < du ? Membership::CloserSecond
                                          : Membership::Tie;
      ASSERT_EQ(claim, actual) << "GP(" << n << "," << k << ") vertex "
                               << to_string(VertexId::from_flat(w, n));
    }
  }
  EXPECT_GT(classified, 5000u);
}

// For odd k and n = 1 (mod 2k) the inner-rim run v_{+-jk} closer to v0 stops
// one step short of floor(n/2k) + 1: the outermost pair is tied.
TEST(Classify, OddKInnerRimRunEndsInTieWhenNIsOneMod2k) {
  for (auto [n, k] : {std::pair{19, 3}, {25, 3}, {41, 5}, {71, 7}}) {
    auto ref = bf::build(n, k);
    const int far = (n / (2 * k) + 1) * k;
    EXPECT_EQ(ref.dist[ref.inner(far)][ref.inner(0)], ref.dist[ref.inner(far)][0]) << n << "," << k;
    EXPECT_EQ(ref.dist[ref.inner(-far)][ref.inner(0)], ref.dist[ref.inner(-far)][0]) << n << "," << k;
  }
}

TEST(Predict, Examples) {
  auto p = predict(16, 3, 1);
  EXPECT_EQ(p.status, Status::Unbalanced);
  EXPECT_EQ(predict(15, 3, 1).status, Status::Balanced);
  EXPECT_EQ(predict(21, 4, 2).status, Status::Balanced);
  EXPECT_EQ(predict(45, 5, 2).status, Status::Unknown);
  EXPECT_EQ(predict(48, 6, 1).status, Status::Balanced);
  EXPECT_EQ(predict(10, 2, 1).status, Status::Balanced);
  EXPECT_EQ(predict(11, 2, 1).status, Status::Unbalanced);
  EXPECT_EQ(predict(10, 3, 2).status, Status::Balanced);
  EXPECT_EQ(predict(11, 3, 2).status, Status::Unbalanced);
  EXPECT_EQ(predict(22, 4, 2).status, Status::Unbalanced);
  EXPECT_EQ(predict(58, 6, 2).status, Status::Unbalanced);
  EXPECT_EQ(predict(57, 6, 2).status, Status::Unknown);
  EXPECT_EQ(predict(48, 5, 2).status, Status::Unbalanced);
  EXPECT_EQ(predict(14, 3, 1).status, Status::Unknown);
  EXPECT_EQ(predict(30, 1, 1).status, Status::Unknown);
}

TEST(Predict, SourceTagsNameTheClause) {
  EXPECT_EQ(predict(16, 3, 1).source, "l1:k>=3:n>k(k+2)");
  EXPECT_EQ(predict(48, 6, 1).source, "l1:k>=3:n=k(k+2)");
  EXPECT_EQ(predict(45, 5, 2).source, "none");
  EXPECT_NE(predict(58, 6, 2).source, predict(48, 5, 2).source);
}

TEST(Predict, Errors) {
  EXPECT_THROW(predict(20, 3, 3), EllUnsupported);
  EXPECT_THROW(predict(20, 3, 0), EllUnsupported);
  EXPECT_THROW(predict(8, 4, 1), DomainError);
}

// Threshold predicates over integers agree with direct rational evaluation.
TEST(Predict, IntegerThresholdsMatchRationalEvaluation) {
  using Q = boost::rational<long long>;
  for (long long k = 1; k <= 20; ++k) {
    for (long long n = 2 * k + 1; n <= 500; ++n) {
      const Q nq(n);
      Status one = Status::Unknown;
      if (k >= 3 && nq > Q(k * (k + 2))) one = Status::Unbalanced;
      else if (k >= 3 && nq == Q(k * (k + 2))) one = Status::Balanced;
      else if (k == 2 && nq > Q(10)) one = Status::Unbalanced;
      else if (k == 2 && n == 10) one = Status::Balanced;
      ASSERT_EQ(predict(n, k, 1).status, one) << n << "," << k;

      Status two = Status::Unknown;
      if (k >= 6 && k % 2 == 0 && nq > Q(5, 4) * k * k + 2 * k) two = Status::Unbalanced;
      else if (k >= 5 && k % 2 == 1 && nq > Q(7, 4) * k * k + Q(3, 4) * k) two = Status::Unbalanced;
      else if ((k == 2 || k == 3) && n > 10) two = Status::Unbalanced;
      else if (k == 4 && n > 21) two = Status::Unbalanced;
      else if ((n == 10 && (k == 2 || k == 3)) || (n == 21 && k == 4)) two = Status::Balanced;
      ASSERT_EQ(predict(n, k, 2).status, two) << n << "," << k;
      ASSERT_EQ(in_twodb_domain(n, k),
                (k % 2 == 0 && k >= 6 && nq > Q(5, 4) * k * k + 2 * k) ||
                    (k % 2 == 1 && k >= 5 && nq > Q(7, 4) * k * k + Q(3, 4) * k));
    }
  }
}

TEST(Predict, SoundOnSmallGraphs) {
  for (int n = 3; n <= 70; ++n) {
    for (int k = 1; 2 * k < n; ++k) {
      auto g = gp_construct(n, k);
      for (int ell : {1, 2}) {
        auto p = predict(n, k, ell);
        if (p.status == Status::Unknown) continue;
        auto v = is_l_distance_balanced(g, ell, true);
        ASSERT_EQ(v.balanced, p.status == Status::Balanced) << n << "," << k << " ell=" << ell;
      }
    }
  }
}

TEST(ConjecturedNk, Values) {
  EXPECT_EQ(conjectured_nk(2), 11);
  EXPECT_EQ(conjectured_nk(3), 16);
  EXPECT_EQ(conjectured_nk(5), 36);
  EXPECT_EQ(conjectured_nk(4), 24);
  EXPECT_EQ(conjectured_nk(6), 48);
  EXPECT_THROW(conjectured_nk(1), DomainError);
}

TEST(RationalFormat, Strings) {
  EXPECT_EQ(to_string(Rational(697, 6)), "697/6");
  EXPECT_EQ(to_string(Rational(38)), "38");
}
