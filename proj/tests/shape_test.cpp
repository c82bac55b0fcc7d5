#include "relpoly/shape.hpp"

#include <gtest/gtest.h>

#include <set>
#include <tuple>

namespace relpoly {
namespace {

CoefficientVector from_ints(std::vector<long> values) {
  CoefficientVector cv;
  cv.n = static_cast<int>(values.size()) - 1;
  for (long v : values) cv.counts.emplace_back(v);
  return cv;
}

const CoefficientVector kHammock35 = from_ints(
    {0, 0, 0, 16, 178, 889, 2562, 4663, 5653, 4811, 2982, 1365, 455, 105, 15, 1});
const CoefficientVector kHammock35Dual = from_ints(
    {0, 0, 0, 0, 0, 21, 194, 782, 1772, 2443, 2114, 1187, 439, 105, 15, 1});

TEST(ArgmaxIntervals, PublishedRows) {
  // (l=5, w=3): max 2443 at k = 9, I1 = [8.5, 10.75]
  auto m = argmax_intervals(kHammock35Dual, 5, 3);
  EXPECT_EQ(m.argmax, 9);
  EXPECT_EQ(m.i1_lo, Rational(17, 2));
  EXPECT_EQ(m.i1_hi, Rational(43, 4));
  EXPECT_EQ(m.i2_hi, Rational(25, 2));
  EXPECT_TRUE(m.in_i1);
  EXPECT_TRUE(m.in_i2);

  // (l=3, w=5): max 5653 at k = 8, I1 = [6.5, 8.75]
  auto m2 = argmax_intervals(kHammock35, 3, 5);
  EXPECT_EQ(m2.argmax, 8);
  EXPECT_EQ(m2.i1_lo, Rational(13, 2));
  EXPECT_EQ(m2.i1_hi, Rational(35, 4));
  EXPECT_TRUE(m2.in_i1);

  // (l=4, w=2): the two brick walls give max 20 at 6 and max 24 at 5, both in
  // I2 = [5, 6.5]
  std::set<std::pair<long, int>> got;
  for (auto variant : {HammockVariant::H, HammockVariant::HPlus}) {
    auto cv = brute_force_coefficients(make_hammock(4, 2, variant));
    auto mm = argmax_intervals(cv, 4, 2);
    got.emplace(cv.at(mm.argmax).convert_to<long>(), mm.argmax);
    EXPECT_TRUE(mm.in_i2);
    EXPECT_EQ(mm.i2_lo, Rational(5));
    EXPECT_EQ(mm.i2_hi, Rational(13, 2));
  }
  EXPECT_EQ(got, (std::set<std::pair<long, int>>{{20, 6}, {24, 5}}));
}

TEST(ECondition, PublishedTables) {
  // (l,w) = (4,5), n = 20; the s = 6 entry is the formula value (the printed
  // table carries a one-digit misprint there, see the acceptance suite)
  EXPECT_EQ(compute_e(4, 5, 5, BigInt(438)), -265128);
  EXPECT_EQ(compute_e(4, 5, 6, BigInt(3072)), 39513);
  EXPECT_EQ(compute_e(4, 5, 7, BigInt(13178)), 1626302);
  EXPECT_EQ(compute_e(4, 5, 15, BigInt(15468)), 1741992);
  EXPECT_EQ(compute_e(4, 5, 16, binomial(20, 4)), 0);

  // (l,w) = (5,4); the s = 5 entry is likewise the formula value
  EXPECT_EQ(compute_e(5, 4, 5, BigInt(36)), -36096);
  EXPECT_EQ(compute_e(5, 4, 6, BigInt(510)), 6390);
  EXPECT_EQ(compute_e(5, 4, 7, BigInt(3334)), 450586);
  EXPECT_EQ(compute_e(5, 4, 16, BigInt(4816)), 608704);
  EXPECT_EQ(compute_e(5, 4, 17, binomial(20, 3)), 0);

  // (l,w) = (5,5), n = 25
  EXPECT_EQ(compute_e(5, 5, 6, BigInt(994)), -901834);
  EXPECT_EQ(compute_e(5, 5, 7, BigInt(8983)), 888337);
  EXPECT_EQ(compute_e(5, 5, 8, BigInt(50796)), 12504244);
  EXPECT_EQ(compute_e(5, 5, 20, BigInt(53078)), 11493942);
  EXPECT_EQ(compute_e(5, 5, 21, binomial(25, 4)), 0);

  EXPECT_THROW(compute_e(4, 5, 3, BigInt(1)), std::invalid_argument);
  EXPECT_THROW(compute_e(4, 5, 17, BigInt(1)), std::invalid_argument);
}

TEST(ECondition, AnchorsComeFromTheActualHammocks) {
  // the N_s inputs used above are the brute-forced coefficients
  auto h45 = brute_force_coefficients(make_hammock(4, 5));
  EXPECT_EQ(h45.at(5), 438);
  EXPECT_EQ(h45.at(6), 3072);
  EXPECT_EQ(h45.at(7), 13178);
  EXPECT_EQ(h45.at(15), 15468);
  auto h54 = brute_force_coefficients(make_hammock(5, 4));
  EXPECT_EQ(h54.at(5), 36);
  EXPECT_EQ(h54.at(6), 510);
  EXPECT_EQ(h54.at(7), 3334);
  EXPECT_EQ(h54.at(16), 4816);
}

TEST(ECondition, PositiveWithoutHypothesis) {
  // s = 6 satisfies the E condition although N_6 is below the binomial
  // threshold, so the condition alone is not sufficient
  EXPECT_GT(compute_e(4, 5, 6, BigInt(3072)), 0);
  EXPECT_LT(BigInt(3072), binomial(20, 4));
  EXPECT_LT(BigInt(3072), binomial(20, 6));
}

QuadraticPiece interpolikon(int x1, long y1, int x2, long y2, int x3, long y3) {
  return solve_parabola({Rational(x1), Rational(y1)}, {Rational(x2), Rational(y2)},
                        {Rational(x3), Rational(y3)});
}

TEST(VertexAnalysis, CounterexamplesWithoutHypothesis) {
  // the five published misuse cases, recomputed from the interpolation systems
  {
    auto v = vertex_analysis(3, 3, 3, BigInt(8), interpolikon(2, 0, 3, 8, 7, 36));
    EXPECT_FALSE(v.hypothesis_ok);
    EXPECT_TRUE(v.concave);
    EXPECT_EQ(v.x_vertex, Rational(45, 2));  // 22.5, far beyond upper_i1 = 5.75
    EXPECT_EQ(v.upper_i1, Rational(23, 4));
    EXPECT_FALSE(v.upper_i1_ok);
  }
  {
    auto v = vertex_analysis(4, 4, 4, BigInt(18), interpolikon(3, 0, 4, 18, 13, 560));
    EXPECT_FALSE(v.concave);  // convex: a = 38/9 > 0
    EXPECT_EQ(v.x_vertex, Rational(26, 19));
    EXPECT_FALSE(v.lower_ok);
  }
  {
    auto v = vertex_analysis(4, 4, 5, BigInt(204), interpolikon(3, 0, 5, 204, 13, 560));
    EXPECT_TRUE(v.concave);
    EXPECT_EQ(v.x_vertex, Rational(296, 23));  // > 8, lower holds; > 10.5, upper fails
    EXPECT_TRUE(v.lower_ok);
    EXPECT_FALSE(v.upper_i1_ok);
    EXPECT_GT(v.x_vertex, Rational(21, 2));
  }
  {
    auto v = vertex_analysis(4, 4, 4, BigInt(24), interpolikon(3, 0, 4, 24, 13, 560));
    EXPECT_FALSE(v.concave);  // a = 32/9 > 0
    EXPECT_EQ(v.x_vertex, Rational(1, 8));
    EXPECT_FALSE(v.lower_ok);
  }
  {
    auto v = vertex_analysis(4, 4, 5, BigInt(264), interpolikon(3, 0, 5, 264, 13, 560));
    EXPECT_TRUE(v.concave);
    EXPECT_EQ(v.x_vertex, Rational(208, 19));
    EXPECT_TRUE(v.lower_ok);
    EXPECT_FALSE(v.upper_i1_ok);
  }
}

TEST(VertexAnalysis, FrozenParabolaCoefficients) {
  // consistent interpolation values for the five cases above
  EXPECT_EQ(interpolikon(2, 0, 3, 8, 7, 36).a, Rational(-1, 5));
  EXPECT_EQ(interpolikon(3, 0, 4, 18, 13, 560).a, Rational(38, 9));
  EXPECT_EQ(interpolikon(3, 0, 5, 204, 13, 560).a, Rational(-23, 4));
  EXPECT_EQ(interpolikon(3, 0, 4, 24, 13, 560).a, Rational(32, 9));
  EXPECT_EQ(interpolikon(3, 0, 5, 264, 13, 560).a, Rational(-19, 2));
}

TEST(VertexAnalysis, FlagshipBoundsHold) {
  auto piece = step2_closed_form(3, 5, 10, BigInt(2982));
  auto v = vertex_analysis(3, 5, 10, BigInt(2982), piece);
  EXPECT_TRUE(v.hypothesis_ok);
  EXPECT_TRUE(v.concave);
  EXPECT_EQ(v.x_vertex, Rational(36309, 5306));
  EXPECT_EQ(v.lower_bound, Rational(13, 2));
  EXPECT_TRUE(v.lower_ok);
  EXPECT_TRUE(v.upper_i1_claimed);  // E(3,5;10) = 121422 >= 0
  EXPECT_EQ(v.e_value, 121422);
  EXPECT_TRUE(v.upper_i1_ok);
  EXPECT_TRUE(v.upper_special_claimed);
  EXPECT_TRUE(v.upper_special_ok);

  auto dual_piece = step2_closed_form(5, 3, 12, BigInt(439));
  auto vd = vertex_analysis(5, 3, 12, BigInt(439), dual_piece);
  EXPECT_EQ(vd.x_vertex, Rational(17909, 2074));
  EXPECT_TRUE(vd.lower_ok && vd.upper_i1_ok && vd.upper_special_ok);
}

TEST(VertexAnalysis, HypothesisImpliesBounds) {
  // every brick wall with 2 <= l,w <= 5 whose default anchor clears the
  // threshold satisfies the claimed vertex bounds
  for (int l = 2; l <= 5; ++l)
    for (int w = 2; w <= 5; ++w) {
      std::vector<HammockVariant> variants{HammockVariant::H};
      if (l % 2 == 0 && w % 2 == 0) variants.push_back(HammockVariant::HPlus);
      for (auto variant : variants) {
        auto net = make_hammock(l, w, variant);
        auto cv = brute_force_coefficients(net);
        auto cvd = brute_force_coefficients(dual(net));
        auto pair = approximate_pair(
            l, w, default_inputs(l, w, cv, cvd, AlgorithmVariant::LMinus1));
        auto v = vertex_analysis(l, w, l * w - w, cv.at(l * w - w), pair.piece);
        if (!v.hypothesis_ok || v.degenerate) continue;
        EXPECT_TRUE(v.concave) << "l=" << l << " w=" << w;
        // none of the spline values dips below zero on the parabola branch
        for (int k = l - 1; k <= l * w - w + 1; ++k)
          EXPECT_GE(pair.spline(Rational(k)), 0) << "l=" << l << " w=" << w;
        if (l > 2) {
          EXPECT_TRUE(v.lower_ok) << "l=" << l << " w=" << w;
          EXPECT_TRUE(v.upper_special_ok) << "l=" << l << " w=" << w;
          if (v.e_value >= 0)
            EXPECT_TRUE(v.upper_i1_ok) << "l=" << l << " w=" << w;
        }
      }
    }
}

TEST(VerifyAll, FlagshipAllPass) {
  auto report = verify_all(make_hammock(3, 5));
  EXPECT_TRUE(report.all_pass);
  EXPECT_TRUE(report.complementarity_ok);
  EXPECT_TRUE(report.log_concave_ok);
  EXPECT_TRUE(report.inflection_pairing_ok);
  for (auto [k, ok] : report.derivative_identities_ok) EXPECT_TRUE(ok) << k;
  for (auto [k, ok] : report.approx_derivative_identities_ok) EXPECT_TRUE(ok) << k;
}

TEST(VerifyAll, PosAndRandomNetworks) {
  EXPECT_TRUE(verify_all(make_pos(3, 3)).all_pass);
  EXPECT_TRUE(verify_all(make_pos(4, 4)).all_pass);
  EXPECT_TRUE(verify_all(from_matrix(3, 4, {1, 0, 1, 0, 1, 1}, "random")).all_pass);
  // degenerate dims run the approximation-free subset
  auto degenerate = verify_all(make_pos(1, 4));
  EXPECT_TRUE(degenerate.all_pass);
  EXPECT_TRUE(degenerate.complementarity_ok);
}

TEST(VerifyAll, ObservationalWindowsDoNotGate) {
  // the (2,5) brick wall sits outside I1; that entry is reported but must not
  // flip the aggregate
  auto report = verify_all(make_hammock(2, 5));
  EXPECT_TRUE(report.all_pass);
  EXPECT_FALSE(report.argmax.in_i1);
  EXPECT_TRUE(report.argmax.in_i2);
  bool found = false;
  for (const auto& c : report.checks)
    if (c.name == "argmax_in_i1") {
      found = true;
      EXPECT_TRUE(c.informational);
      EXPECT_FALSE(c.pass);
    }
  EXPECT_TRUE(found);
}

TEST(VerifyAll, SelfDualEvenDerivativeVanishesAtHalf) {
  auto cv = brute_force_coefficients(make_hammock(3, 3));
  auto p = to_power_basis(NFormPolynomial::from_counts(cv));
  EXPECT_EQ(derivative(p, 2)(Rational(1, 2)), 0);
  EXPECT_EQ(derivative(p, 4)(Rational(1, 2)), 0);
}

TEST(PosArgmaxWindow, EmpiricalSweep) {
  // claimed window [n/2, n-w+1/2]; small lengths l = 2 violate it, everything
  // else in the 2..6 box lands inside
  std::set<std::pair<int, int>> violations;
  for (int l = 2; l <= 6; ++l)
    for (int w = 2; w <= 6; ++w) {
      auto cv = pos_coefficients(l, w);
      const int n = l * w;
      auto m = argmax_intervals(cv, l, w);
      Rational lo(n, 2), hi(2 * (n - w) + 1, 2);
      if (!(lo <= m.argmax && Rational(m.argmax) <= hi)) violations.emplace(l, w);
    }
  EXPECT_EQ(violations,
            (std::set<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}}));
}

}  // namespace
}  // namespace relpoly
