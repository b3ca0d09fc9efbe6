#include <gtest/gtest.h>

#include <cmath>

#include "qsorep/coeffs.hpp"
#include "qsorep/suite.hpp"

using namespace qsorep;

namespace {

const QParam<double> q2(2.0);

GTPattern find_pattern(const std::vector<GTPattern>& basis,
                       const std::vector<std::vector<int>>& rows) {
  for (const auto& pat : basis)
    if (pat.rows() == rows) return pat;
  throw std::runtime_error("pattern not found");
}

}  // namespace

TEST(CoeffA, So3Examples) {
  const auto basis = enumerate_patterns({3, Flavor::classical, {2}});
  // m_{1,2} = 1: the factor [l_{1,3} - l_{1,2} - 1] = [0] kills the raise.
  EXPECT_DOUBLE_EQ(coeff_A(basis[2], 1, 1, q2), 0.0);
  // m_{1,2} = 0: A = sqrt([2][1]) with an empty denominator product.
  EXPECT_NEAR(coeff_A(basis[1], 1, 1, q2), 1.5811388300841897, 1e-15);
}

TEST(CoeffA, ZeroWheneverShiftInvalid) {
  // Exhaustive cross-module scan: an invalid raise target always comes with
  // a vanishing numerator.
  for (int n = 3; n <= 5; ++n)
    for (Flavor flavor : {Flavor::classical, Flavor::nonclassical})
      for (const auto& wv : suite::grid_weights(n, flavor))
        for (const auto& pat : enumerate_patterns({n, flavor, wv}))
          for (int p = 1; 2 * p + 1 <= n; ++p)
            for (int j = 1; j <= p; ++j)
              if (!shift(pat, 2 * p, j, +1).has_value())
                EXPECT_EQ(coeff_A(pat, p, j, q2), 0.0)
                    << "n=" << n << " p=" << p << " j=" << j;
}

TEST(CoeffB, BoundaryZeroAndInteriorValue) {
  // n=4, weight (2,0): raising m_{1,3} at its upper bound gives B = 0.
  const auto b4 = enumerate_patterns({4, Flavor::classical, {4, 0}});
  for (const auto& pat : b4)
    if (!shift(pat, 3, 1, +1).has_value())
      EXPECT_EQ(coeff_B(pat, 2, 1, q2), 0.0);

  // n=5, weight (1,0), pattern m4=(1,0), m3=(0), m2=(0): B = sqrt([3]).
  const auto b5 = enumerate_patterns({5, Flavor::classical, {2, 0}});
  const auto pat = find_pattern(b5, {{2, 0}, {2, 0}, {0}, {0}});
  EXPECT_NEAR(coeff_B(pat, 2, 1, q2), 2.2912878474779199, 1e-14);
  // The same value in extended precision.
  const QParam<long double> q2l(2.0L);
  EXPECT_NEAR(static_cast<double>(coeff_B<long double>(pat, 2, 1, q2l)),
              2.2912878474779199, 1e-16);
}

TEST(CoeffB, AgreesThroughLCoordinateBijection) {
  // Computing from l-coordinates directly must agree with computing from
  // the m entries, since l = m + offset is exact on doubled integers.
  const auto b5 = enumerate_patterns({5, Flavor::classical, {4, 2}});
  for (const auto& pat : b5) {
    const auto lc = lcoords(pat);
    const int lj = lc.twice[2][0];  // row 3
    EXPECT_EQ(lj, lcoord(pat, 1, 3));
  }
}

TEST(CoeffC, So3DiagonalIsQNumberOfM) {
  const auto basis = enumerate_patterns({3, Flavor::classical, {2}});
  for (const auto& pat : basis)
    EXPECT_DOUBLE_EQ(coeff_C(pat, 1, q2),
                     qnumber_d(pat.entry(1, 2), q2));
  // Vanishing at m = 0 is exact.
  EXPECT_EQ(coeff_C(basis[1], 1, q2), 0.0);
}

TEST(CoeffC, VanishesExactlyAcrossGrid) {
  for (int n = 3; n <= 6; ++n)
    for (const auto& wv : suite::grid_weights(n, Flavor::classical))
      for (const auto& pat : enumerate_patterns({n, Flavor::classical, wv}))
        for (int p = 1; 2 * p <= n; ++p)
          if (lcoord(pat, p, 2 * p) == 0)
            EXPECT_EQ(coeff_C(pat, p, q2), 0.0);
}

TEST(CoeffChat, So3Nonclassical) {
  const auto basis = enumerate_patterns({3, Flavor::nonclassical, {3}});
  // C-hat_1 = [l_{1,2}]_+ = [m_{1,2}]_+.
  EXPECT_NEAR(coeff_Chat(basis[0], 1, q2), 1.4142135623730951, 1e-15);  // [1/2]_+
  EXPECT_NEAR(coeff_Chat(basis[1], 1, q2), 2.1213203435596426, 1e-15);  // [3/2]_+
}

TEST(CoeffD, So3Value) {
  const auto basis = enumerate_patterns({3, Flavor::nonclassical, {3}});
  // Weight (3/2): l_{1,3} = 5/2, so D_2 = [l_{1,3} - 1/2] = [2] = 2.5 at q=2.
  EXPECT_NEAR(coeff_D(basis[0], 1, q2), 2.5, 1e-15);
}

TEST(Coeffs, NonnegativeOnValidPatterns) {
  for (int n = 3; n <= 5; ++n)
    for (const auto& wv : suite::grid_weights(n, Flavor::classical))
      for (const auto& pat : enumerate_patterns({n, Flavor::classical, wv})) {
        for (int p = 1; 2 * p + 1 <= n; ++p)
          for (int j = 1; j <= p; ++j) EXPECT_GE(coeff_A(pat, p, j, q2), 0.0);
        for (int p = 2; 2 * p <= n; ++p)
          for (int j = 1; j <= p - 1; ++j) EXPECT_GE(coeff_B(pat, p, j, q2), 0.0);
      }
}
