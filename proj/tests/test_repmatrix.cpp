#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "qsorep/repmatrix.hpp"
#include "qsorep/suite.hpp"

using namespace qsorep;
using Complex = std::complex<double>;

namespace {

RepSpec<double> classical_spec(int n, std::vector<int> twice, double q = 2.0) {
  return {HighestWeight{n, Flavor::classical, std::move(twice)}, std::nullopt,
          QParam<double>(q), RepKind::classical};
}

RepSpec<double> nonclassical_spec(int n, std::vector<int> twice,
                                  std::vector<int> eps, double q = 2.0) {
  return {HighestWeight{n, Flavor::nonclassical, std::move(twice)},
          SignVector{std::move(eps)}, QParam<double>(q), RepKind::nonclassical};
}

}  // namespace

TEST(BuildClassical, So3VectorWeightMatrices) {
  const auto rep = build_classical(classical_spec(3, {2}));
  ASSERT_EQ(rep.dim(), 3);

  // T(I_21) = i diag([-1], [0], [1]) = diag(-i, 0, i).
  const auto& I21 = rep.generators.at(2);
  EXPECT_EQ(I21(0, 0), Complex(0, -1));
  EXPECT_EQ(I21(1, 1), Complex(0, 0));
  EXPECT_EQ(I21(2, 2), Complex(0, 1));
  EXPECT_NEAR((I21 - I21.diagonal().asDiagonal().toDenseMatrix()).norm(), 0.0, 0.0);

  // T(I_32): real tridiagonal, zero diagonal; entries are
  // +-sqrt([2][1]) / (q^l + q^{-l}) over the neighbour columns.
  const auto& I32 = rep.generators.at(3);
  EXPECT_NEAR(I32(1, 0).real(), 0.6324555320336759, 1e-15);   // from m=-1
  EXPECT_NEAR(I32(2, 1).real(), 0.7905694150420949, 1e-15);   // from m=0
  EXPECT_NEAR(I32(0, 1).real(), -0.7905694150420949, 1e-15);
  EXPECT_NEAR(I32(1, 2).real(), -0.6324555320336759, 1e-15);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(I32(i, i), Complex(0, 0));
    for (int j = 0; j < 3; ++j) EXPECT_EQ(I32(i, j).imag(), 0.0);
  }
}

TEST(BuildClassical, StructureAcrossGrid) {
  for (int n = 3; n <= 5; ++n)
    for (const auto& wv : suite::grid_weights(n, Flavor::classical)) {
      const auto rep = build_classical(classical_spec(n, wv));
      for (const auto& [k, M] : rep.generators) {
        if (k % 2 == 1) {
          // Odd generators: real with zero diagonal.
          EXPECT_NEAR(M.imag().norm(), 0.0, 0.0);
          EXPECT_NEAR(M.diagonal().norm(), 0.0, 0.0);
        } else {
          // Even generators: real off-diagonal plus imaginary diagonal.
          CMatrix offdiag = M;
          offdiag.diagonal().setZero();
          EXPECT_NEAR(offdiag.imag().norm(), 0.0, 0.0);
          EXPECT_NEAR(M.diagonal().real().norm(), 0.0, 0.0);
        }
      }
    }
}

TEST(BuildClassical, ColumnSparsityBound) {
  const auto rep = build_classical(classical_spec(6, {4, 2, 0}));
  for (const auto& [k, M] : rep.generators) {
    const int bound = 2 * ((k - 1) / 2) + 1;
    for (Eigen::Index c = 0; c < rep.dim(); ++c) {
      int nnz = 0;
      for (Eigen::Index r = 0; r < rep.dim(); ++r)
        if (M(r, c) != Complex(0, 0)) ++nnz;
      EXPECT_LE(nnz, bound);
    }
  }
}

TEST(BuildNonclassical, OneDimWeight) {
  // Weight (1/2): both generators are scalars eps_k / (q^{1/2} - q^{-1/2}).
  const auto rep = build_nonclassical(nonclassical_spec(3, {1}, {1, -1}, 4.0));
  ASSERT_EQ(rep.dim(), 1);
  EXPECT_NEAR(rep.generators.at(2)(0, 0).real(), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(rep.generators.at(3)(0, 0).real(), -2.0 / 3.0, 1e-15);
}

TEST(BuildNonclassical, So3ThreeHalvesMatrices) {
  const auto rep = build_nonclassical(nonclassical_spec(3, {3}, {1, 1}));
  ASSERT_EQ(rep.dim(), 2);
  const auto& I21 = rep.generators.at(2);
  EXPECT_NEAR(I21(0, 0).real(), 1.4142135623730951, 1e-15);  // [1/2]_+
  EXPECT_NEAR(I21(1, 1).real(), 2.1213203435596426, 1e-15);  // [3/2]_+
  EXPECT_EQ(I21(0, 1), Complex(0, 0));

  const auto& I32 = rep.generators.at(3);
  // delta term only in the m_{1,2} = 1/2 column.
  EXPECT_NEAR(I32(0, 0).real(), 3.5355339059327378, 1e-14);
  EXPECT_EQ(I32(1, 1), Complex(0, 0));
  EXPECT_NEAR(I32(1, 0).real(), 3.2403703492039301, 1e-14);
  EXPECT_NEAR(I32(0, 1).real(), -0.9258200997725515, 1e-14);
  EXPECT_NEAR(rep.generators.at(2).imag().norm() + I32.imag().norm(), 0.0, 0.0);
}

TEST(BuildNonclassical, LoweringTruncationMatchesShiftValidity) {
  // The explicit truncation of the last lowering sum at m_{p,2p} = 1/2
  // coincides with the shift-validity rule.
  for (int n = 3; n <= 5; ++n)
    for (const auto& wv : suite::grid_weights(n, Flavor::nonclassical))
      for (const auto& pat :
           enumerate_patterns({n, Flavor::nonclassical, wv}))
        for (int p = 1; 2 * p + 1 <= n; ++p)
          if (pat.entry(p, 2 * p) == 1)
            EXPECT_FALSE(shift(pat, 2 * p, p, -1).has_value());
}

TEST(BuildOnedim, FormulaAndSignFlips) {
  SignVector all_plus{{1, 1, 1}};
  RepSpec<double> spec{HighestWeight{4, Flavor::nonclassical, {1, 1}},
                       all_plus, QParam<double>(4.0), RepKind::onedim};
  const auto rep = build_onedim(spec);
  for (int k = 2; k <= 4; ++k)
    EXPECT_NEAR(rep.generators.at(k)(0, 0).real(), 2.0 / 3.0, 1e-15);

  RepSpec<double> flipped = spec;
  flipped.signs = SignVector{{-1, 1, 1}};
  const auto rep2 = build_onedim(flipped);
  EXPECT_NEAR(rep2.generators.at(2)(0, 0).real(), -2.0 / 3.0, 1e-15);
  EXPECT_NEAR(rep2.generators.at(3)(0, 0).real(), 2.0 / 3.0, 1e-15);
}

TEST(BuildOnedim, ScalarRelationIdentity) {
  // c^2 (2 - q - q^{-1}) = -1 for c = 1/(q^{1/2} - q^{-1/2}).
  for (double q : {1.3, 2.0, 4.0, 7.5}) {
    const double c = 1.0 / (std::sqrt(q) - 1.0 / std::sqrt(q));
    EXPECT_NEAR(c * c * (2.0 - q - 1.0 / q), -1.0, 1e-12);
  }
}

TEST(BuildOnedim, MatchesNonclassicalAtHalfWeight) {
  for (int n : {3, 4, 5}) {
    std::vector<int> halves(static_cast<std::size_t>(n / 2), 1);
    SignVector sv{std::vector<int>(static_cast<std::size_t>(n - 1), 1)};
    sv.eps[1] = -1;
    RepSpec<double> od{HighestWeight{n, Flavor::nonclassical, halves}, sv,
                       QParam<double>(2.0), RepKind::onedim};
    RepSpec<double> nc{HighestWeight{n, Flavor::nonclassical, halves}, sv,
                       QParam<double>(2.0), RepKind::nonclassical};
    const auto a = build_onedim(od);
    const auto b = build_nonclassical(nc);
    ASSERT_EQ(b.dim(), 1);
    for (int k = 2; k <= n; ++k)
      EXPECT_NEAR(std::abs(a.generators.at(k)(0, 0) - b.generators.at(k)(0, 0)),
                  0.0, 1e-14);
  }
}

TEST(BuildPrime, BasisAndDimensions) {
  SignVector sv{{1, 1}};
  RepSpec<double> spec{HighestWeight{3, Flavor::classical, {3}}, sv,
                       QParam<double>(2.0), RepKind::prime};
  const auto rep = build_prime(spec);
  // Basis m_{1,2} in {-3/2, -1/2, 1/2, 3/2}; dim 4 = 2 + 2.
  ASSERT_EQ(rep.dim(), 4);
  EXPECT_EQ(rep.basis[0].entry(1, 2), -3);
  EXPECT_EQ(rep.basis[3].entry(1, 2), 3);
  // Entirely real.
  for (const auto& [k, M] : rep.generators) EXPECT_EQ(M.imag().norm(), 0.0);
}

TEST(Builders, RejectInvalidSpecs) {
  auto bad = classical_spec(3, {2});
  bad.signs = SignVector{{1, 1}};
  EXPECT_THROW(build_classical(bad), std::invalid_argument);

  auto nc = nonclassical_spec(3, {3}, {1});  // short sign vector
  EXPECT_THROW(build_nonclassical(nc), std::invalid_argument);

  RepSpec<double> od{HighestWeight{3, Flavor::nonclassical, {3}},
                     SignVector{{1, 1}}, QParam<double>(2.0), RepKind::onedim};
  EXPECT_THROW(build_onedim(od), std::invalid_argument);  // weight not (1/2)

  RepSpec<double> prime{HighestWeight{3, Flavor::classical, {2}},
                        SignVector{{1, 1}}, QParam<double>(2.0), RepKind::prime};
  EXPECT_THROW(build_prime(prime), std::invalid_argument);  // integral weight
}

TEST(Builders, ExtendedPrecisionAgreesWithDouble) {
  RepSpec<long double> spec{HighestWeight{4, Flavor::classical, {4, 2}},
                            std::nullopt, QParam<long double>(2.0L),
                            RepKind::classical};
  const auto repl = build_classical(spec);
  const auto repd = build_classical(classical_spec(4, {4, 2}));
  for (const auto& [k, M] : repd.generators) {
    const auto& L = repl.generators.at(k);
    for (Eigen::Index r = 0; r < repd.dim(); ++r)
      for (Eigen::Index c = 0; c < repd.dim(); ++c)
        EXPECT_NEAR(std::abs(M(r, c) - std::complex<double>(
                                           static_cast<double>(L(r, c).real()),
                                           static_cast<double>(L(r, c).imag()))),
                    0.0, 1e-13);
  }
}
