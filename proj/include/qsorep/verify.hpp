#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "qsorep/repmatrix.hpp"

namespace qsorep {

using CMatrix = Eigen::MatrixXcd;

/// Residuals of the defining relations, one entry per relation instance.
struct RelationReport {
  std::map<std::string, double> residuals;
  double max_residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// Evaluates the three defining relation families as matrix identities.
/// Residuals are relative: ||LHS - RHS||_F / (1 + ||RHS||_F), so they stay
/// meaningful for nonclassical operators that blow up near q = 1.
template <typename Real = double>
RelationReport check_relations(const RepMatrices<Real>& rep, double tol = 1e-9) {
  const int n = rep.n();
  RelationReport report;
  report.tol = tol;
  const Real qplus = rep.spec.q.q + Real(1) / rep.spec.q.q;
  for (const auto& [k, M] : rep.generators)
    if (M.rows() != rep.dim() || M.cols() != rep.dim())
      throw std::invalid_argument("check_relations: generator dimension mismatch");

  auto record = [&](const std::string& id, const auto& lhs, const auto& rhs) {
    const double r =
        static_cast<double>((lhs - rhs).norm() / (Real(1) + rhs.norm()));
    report.residuals[id] = r;
    report.max_residual = std::max(report.max_residual, r);
  };

  for (int i = 2; i <= n - 1; ++i) {
    const auto& Y = rep.generators.at(i);      // I_{i,i-1}
    const auto& X = rep.generators.at(i + 1);  // I_{i+1,i}
    record("rel1_i" + std::to_string(i),
           X * Y * Y - qplus * (Y * X * Y) + Y * Y * X, (-X).eval());
    record("rel2_i" + std::to_string(i),
           X * X * Y - qplus * (X * Y * X) + Y * X * X, (-Y).eval());
  }
  for (int i = 2; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j) {
      const auto& A = rep.generators.at(i);
      const auto& B = rep.generators.at(j);
      record("rel3_i" + std::to_string(i) + "_j" + std::to_string(j),
             (A * B - B * A).eval(),
             RepMatrices<Real>::Matrix::Zero(rep.dim(), rep.dim()).eval());
    }
  report.pass = report.max_residual < tol;
  return report;
}

namespace detail {

// Eigenvalue clusters of a generic element of the generated algebra.
// Any X commuting with all generators commutes with the combination, so
// it is block-diagonal across the clusters; the clustering tolerance only
// ever merges too much, never losing commutant elements.
inline std::vector<std::vector<Eigen::Index>> eigen_clusters(
    const Eigen::VectorXcd& lam) {
  const Eigen::Index d = lam.size();
  const double scale = std::max(1e-300, lam.cwiseAbs().maxCoeff());
  std::vector<Eigen::Index> parent(static_cast<std::size_t>(d));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Eigen::Index x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = a + 1; b < d; ++b)
      if (std::abs(lam(a) - lam(b)) < 1e-6 * scale)
        parent[static_cast<std::size_t>(find(a))] = find(b);
  std::map<Eigen::Index, std::vector<Eigen::Index>> groups;
  for (Eigen::Index a = 0; a < d; ++a) groups[find(a)].push_back(a);
  std::vector<std::vector<Eigen::Index>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

}  // namespace detail

/// Dimension of {X : X M_k = M_k X for all k}, equal to 1 iff the
/// representation is irreducible (Schur).  The dim^2-sized unknown space is
/// first cut down exactly to the matrices preserving the eigenspaces of a
/// generic element of the algebra; the stacked commutator operator is then
/// restricted to that space and its nullity read off an SVD, counting
/// singular values below tol * sigma_max.
inline int commutant_dimension(const RepMatrices<double>& rep,
                               double tol = 1e-8, Eigen::Index cap = 200) {
  const Eigen::Index d = rep.dim();
  if (d > cap)
    throw std::invalid_argument("commutant_dimension: dimension exceeds cap");
  for (const auto& [k, M] : rep.generators)
    if (M.rows() != d || M.cols() != d)
      throw std::invalid_argument("commutant_dimension: dimension mismatch");

  std::mt19937 rng(0x9e3779b9u);  // fixed seed: deterministic reduction
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix A = CMatrix::Zero(d, d);
  for (const auto& [k, M] : rep.generators) A += gauss(rng) * M;

  Eigen::ComplexEigenSolver<CMatrix> eig(A);
  const CMatrix& W = eig.eigenvectors();
  const CMatrix Winv = W.lu().solve(CMatrix::Identity(d, d));
  const auto clusters = detail::eigen_clusters(eig.eigenvalues());

  Eigen::Index ncols = 0;
  for (const auto& c : clusters)
    ncols += static_cast<Eigen::Index>(c.size() * c.size());

  const Eigen::Index ngen = static_cast<Eigen::Index>(rep.generators.size());
  CMatrix C(ngen * d * d, ncols);
  Eigen::Index col = 0;
  for (const auto& cluster : clusters)
    for (Eigen::Index a : cluster)
      for (Eigen::Index b : cluster) {
        // X = w_a v_b^T is rank one, so [M, X] = (M w_a) v_b^T - w_a (v_b^T M).
        Eigen::Index off = 0;
        for (const auto& [k, M] : rep.generators) {
          const CMatrix comm =
              (M * W.col(a)) * Winv.row(b) - W.col(a) * (Winv.row(b) * M);
          C.block(off, col, d * d, 1) =
              Eigen::Map<const Eigen::VectorXcd>(comm.data(), d * d);
          off += d * d;
        }
        ++col;
      }

  Eigen::BDCSVD<CMatrix> svd(C);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return static_cast<int>(ncols);
  int nullity = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) < tol * sv(0)) ++nullity;
  return nullity;
}

/// One-sided nonequivalence probe: dimension, per-generator eigenvalue
/// multisets, and traces of all words of length <= 3, everything rounded
/// to 1e-8.  Distinct fingerprints prove nonequivalence.
struct Fingerprint {
  Eigen::Index dim = 0;
  std::map<int, std::vector<std::pair<double, double>>> eigenvalues;
  std::map<std::vector<int>, std::pair<double, double>> word_traces;

  bool operator==(const Fingerprint& other) const = default;
};

inline Fingerprint spectral_fingerprint(const RepMatrices<double>& rep) {
  constexpr double kRound = 1e8;
  auto round8 = [](std::complex<double> z) {
    return std::pair<double, double>{std::round(z.real() * kRound) / kRound,
                                     std::round(z.imag() * kRound) / kRound};
  };
  Fingerprint fp;
  fp.dim = rep.dim();
  for (const auto& [k, M] : rep.generators) {
    Eigen::ComplexEigenSolver<CMatrix> eig(M, /*computeEigenvectors=*/false);
    std::vector<std::pair<double, double>> vals;
    for (Eigen::Index i = 0; i < fp.dim; ++i) vals.push_back(round8(eig.eigenvalues()(i)));
    std::sort(vals.begin(), vals.end());
    fp.eigenvalues[k] = std::move(vals);
  }
  std::vector<int> ks;
  for (const auto& [k, M] : rep.generators) ks.push_back(k);
  std::map<std::pair<int, int>, CMatrix> pair_products;
  for (int k1 : ks) {
    fp.word_traces[{k1}] = round8(rep.generators.at(k1).trace());
    for (int k2 : ks) {
      CMatrix P = rep.generators.at(k1) * rep.generators.at(k2);
      fp.word_traces[{k1, k2}] = round8(P.trace());
      pair_products[{k1, k2}] = std::move(P);
    }
  }
  for (int k1 : ks)
    for (int k2 : ks)
      for (int k3 : ks) {
        const CMatrix& P = pair_products.at({k1, k2});
        const CMatrix& M3 = rep.generators.at(k3);
        // tr(P * M3) without forming the product.
        std::complex<double> tr = (P.transpose().cwiseProduct(M3)).sum();
        fp.word_traces[{k1, k2, k3}] = round8(tr);
      }
  return fp;
}

/// One invariant subspace of T' together with the restricted operators.
struct PrimeBlock {
  std::map<int, int> odd_signs;          // (2p+1) -> eps_{2p+1}
  std::vector<GTPattern> representatives;  // nonclassical-flavor labels
  RepMatrices<double> rep;
};

struct DecompositionReport {
  std::vector<PrimeBlock> blocks;
  double invariance_residual = 0.0;
};

/// Splits T' along the sign flips of m_{p,2p}, p = 1..floor((n-1)/2): the
/// vectors |xi> - eps |xi'> with all flipped entries restored positive span
/// 2^{floor((n-1)/2)} invariant subspaces, one per odd-sign assignment.
inline DecompositionReport decompose_prime(const RepMatrices<double>& rep,
                                           double tol = 1e-9) {
  if (rep.spec.kind != RepKind::prime)
    throw std::invalid_argument("decompose_prime: expected a T' representation");
  const int n = rep.n();
  const int nflip = (n - 1) / 2;  // rows 2p with 2p <= n-1
  const Eigen::Index d = rep.dim();

  // Representatives: patterns with m_{p,2p} > 0 for all flipped rows.
  std::vector<const GTPattern*> reps;
  for (const auto& pat : rep.basis) {
    bool positive = true;
    for (int p = 1; p <= nflip; ++p)
      if (pat.entry(p, 2 * p) < 0) positive = false;
    if (positive) reps.push_back(&pat);
  }
  const auto bdim = static_cast<Eigen::Index>(reps.size());

  DecompositionReport report;
  for (int mask = 0; mask < (1 << nflip); ++mask) {
    PrimeBlock block{{}, {}, RepMatrices<double>{rep.spec, {}, {}}};
    for (int p = 1; p <= nflip; ++p)
      block.odd_signs[2 * p + 1] = (mask >> (p - 1)) & 1 ? -1 : 1;

    // Orthonormal split basis: one column per representative, its 2^nflip
    // sign-flipped images weighted by prod_p (-eps_{2p+1}) over flips.
    Eigen::MatrixXd V = Eigen::MatrixXd::Zero(d, bdim);
    const double norm = std::pow(2.0, -0.5 * nflip);
    for (Eigen::Index c = 0; c < bdim; ++c) {
      for (int fm = 0; fm < (1 << nflip); ++fm) {
        GTPattern flipped = *reps[static_cast<std::size_t>(c)];
        double coef = norm;
        for (int p = 1; p <= nflip; ++p)
          if ((fm >> (p - 1)) & 1) {
            auto& row = flipped.row(2 * p);
            row[static_cast<std::size_t>(p - 1)] =
                -row[static_cast<std::size_t>(p - 1)];
            coef *= -block.odd_signs.at(2 * p + 1);
          }
        V(static_cast<Eigen::Index>(index_of(flipped, rep.basis)), c) = coef;
      }
    }

    // Restrict and measure leakage out of the subspace per generator.
    RepSpec<double> bspec = rep.spec;
    bspec.kind = RepKind::nonclassical;
    SignVector full{std::vector<int>(static_cast<std::size_t>(n - 1), 1)};
    for (int k = 2; k <= n; ++k) {
      if (k % 2 == 0)
        full.eps[static_cast<std::size_t>(k - 2)] = rep.spec.signs->at(k);
      else
        full.eps[static_cast<std::size_t>(k - 2)] = block.odd_signs.at(k);
    }
    bspec.signs = full;
    block.rep.spec = bspec;
    for (const auto* pat : reps) {
      GTPattern label(pat->n(), Flavor::nonclassical, pat->rows());
      block.rep.basis.push_back(std::move(label));
    }
    const CMatrix Vc = V.cast<std::complex<double>>();
    for (const auto& [k, M] : rep.generators) {
      CMatrix Mb = Vc.adjoint() * M * Vc;
      const double leak = (M * Vc - Vc * Mb).norm() / M.norm();
      report.invariance_residual = std::max(report.invariance_residual, leak);
      block.rep.generators.emplace(k, std::move(Mb));
    }
    report.blocks.push_back(std::move(block));
  }
  if (report.invariance_residual >= tol)
    throw std::runtime_error("decompose_prime: subspace leakage above tolerance");
  return report;
}

/// True iff an invertible diagonal S with S M_k S^{-1} = N_k (within tol,
/// relative) exists.  S is found by propagating entry ratios along the
/// shared nonzero pattern, one connected component at a time (components
/// carry a free scale each, which a diagonal S absorbs).
inline bool match_block_to_nonclassical(const RepMatrices<double>& block,
                                        const RepMatrices<double>& candidate,
                                        double tol = 1e-8) {
  const Eigen::Index d = block.dim();
  if (candidate.dim() != d) return false;
  constexpr double kPatternTol = 1e-10;

  double scale = 0.0;
  for (const auto& [k, M] : block.generators) scale = std::max(scale, M.norm());
  for (const auto& [k, M] : candidate.generators)
    scale = std::max(scale, M.norm());
  const double thresh = kPatternTol * std::max(scale, 1.0);

  std::vector<std::complex<double>> s(static_cast<std::size_t>(d), 0.0);
  std::vector<bool> assigned(static_cast<std::size_t>(d), false);
  for (Eigen::Index root = 0; root < d; ++root) {
    if (assigned[static_cast<std::size_t>(root)]) continue;
    s[static_cast<std::size_t>(root)] = 1.0;
    assigned[static_cast<std::size_t>(root)] = true;
    std::vector<Eigen::Index> stack{root};
    while (!stack.empty()) {
      const Eigen::Index a = stack.back();
      stack.pop_back();
      for (Eigen::Index b = 0; b < d; ++b) {
        if (assigned[static_cast<std::size_t>(b)] || b == a) continue;
        for (const auto& [k, M] : block.generators) {
          const auto& N = candidate.generators.at(k);
          const bool mAB = std::abs(M(a, b)) > thresh;
          const bool nAB = std::abs(N(a, b)) > thresh;
          if (mAB != nAB) return false;  // nonzero patterns disagree
          if (!mAB) continue;
          // N = S M S^{-1}: N_ab = s_a M_ab / s_b.
          s[static_cast<std::size_t>(b)] =
              s[static_cast<std::size_t>(a)] * M(a, b) / N(a, b);
          assigned[static_cast<std::size_t>(b)] = true;
          stack.push_back(b);
          break;
        }
        // Also walk edges seen only in column direction (a <- b).
        if (!assigned[static_cast<std::size_t>(b)]) {
          for (const auto& [k, M] : block.generators) {
            const auto& N = candidate.generators.at(k);
            const bool mBA = std::abs(M(b, a)) > thresh;
            const bool nBA = std::abs(N(b, a)) > thresh;
            if (mBA != nBA) return false;
            if (!mBA) continue;
            s[static_cast<std::size_t>(b)] =
                s[static_cast<std::size_t>(a)] * N(b, a) / M(b, a);
            assigned[static_cast<std::size_t>(b)] = true;
            stack.push_back(b);
            break;
          }
        }
      }
    }
  }

  Eigen::VectorXcd diag(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (s[static_cast<std::size_t>(i)] == 0.0) return false;
    diag(i) = s[static_cast<std::size_t>(i)];
  }
  for (const auto& [k, M] : block.generators) {
    const auto& N = candidate.generators.at(k);
    const CMatrix transformed =
        diag.asDiagonal() * M * diag.cwiseInverse().asDiagonal();
    if ((transformed - N).norm() > tol * N.norm()) return false;
  }
  return true;
}

}  // namespace qsorep
