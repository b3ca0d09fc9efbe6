#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qsorep/coeffs.hpp"
#include "qsorep/patterns.hpp"
#include "qsorep/qnum.hpp"

namespace qsorep {

enum class RepKind { classical, nonclassical, onedim, prime };

template <typename Real = double>
struct RepSpec {
  HighestWeight weight;
  std::optional<SignVector> signs;  // required iff the kind reads signs
  QParam<Real> q;
  RepKind kind;
};

template <typename Real = double>
struct RepMatrices {
  using Complex = std::complex<Real>;
  using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

  RepSpec<Real> spec;
  std::vector<GTPattern> basis;
  std::map<int, Matrix> generators;  // k -> T(I_{k,k-1}), k = 2..n

  Eigen::Index dim() const { return static_cast<Eigen::Index>(basis.size()); }
  int n() const { return spec.weight.n; }
};

namespace detail {

// Shared skeleton of all four builders.  T(I_{k,k-1}) with odd k = 2p+1
// shifts row 2p with coefficient A over a q^l -/+ q^{-l} denominator;
// even k = 2p shifts row 2p-1 with coefficient B over [2l-1]-bracket
// denominators and adds a diagonal term.  A raising/lowering term is
// emitted only when the shifted tableau is flavor-valid; that rule also
// subsumes the truncation of the lowering sum at m_{p,2p} = 1/2.
template <typename Real>
RepMatrices<Real> build_common(const RepSpec<Real>& spec, Flavor basis_flavor,
                               bool plus_brackets, bool delta_term) {
  HighestWeight w = spec.weight;
  w.flavor = basis_flavor;
  RepMatrices<Real> rep{spec, enumerate_patterns(w), {}};
  using Complex = typename RepMatrices<Real>::Complex;
  using Matrix = typename RepMatrices<Real>::Matrix;
  const auto& qp = spec.q;
  const Eigen::Index d = rep.dim();
  const Flavor even_denom =
      plus_brackets ? Flavor::nonclassical : Flavor::classical;

  for (int k = 2; k <= w.n; ++k) {
    Matrix M = Matrix::Zero(d, d);
    const int p = k / 2;
    for (Eigen::Index c = 0; c < d; ++c) {
      const GTPattern& pat = rep.basis[static_cast<std::size_t>(c)];
      if (k % 2 == 1) {
        for (int j = 1; j <= p; ++j) {
          const Real den = denom_even_d(lcoord(pat, j, 2 * p), qp, even_denom);
          if (auto up = shift(pat, 2 * p, j, +1)) {
            const auto r = static_cast<Eigen::Index>(index_of(*up, rep.basis));
            M(r, c) += Complex(coeff_A(pat, p, j, qp) / den);
          }
          if (auto dn = shift(pat, 2 * p, j, -1)) {
            const auto r = static_cast<Eigen::Index>(index_of(*dn, rep.basis));
            M(r, c) -= Complex(coeff_A(*dn, p, j, qp) / den);
          }
        }
        if (delta_term && pat.entry(p, 2 * p) == 1) {  // m_{p,2p} = 1/2
          const Real eps = Real(spec.signs->at(2 * p + 1));
          M(c, c) += Complex(eps / denom_even_d(1, qp, Flavor::nonclassical) *
                             coeff_D(pat, p, qp));
        }
      } else {
        for (int j = 1; j <= p - 1; ++j) {
          const int l = lcoord(pat, j, 2 * p - 1);
          const Real two_l_minus_1 = qnumber_d(2 * l - 2, qp);
          const Real up_den =
              plus_brackets ? qnumber_plus_d(l, qp) : qnumber_d(l, qp);
          const Real dn_den = plus_brackets ? qnumber_plus_d(l - 2, qp)
                                            : qnumber_d(l - 2, qp);
          if (auto up = shift(pat, 2 * p - 1, j, +1)) {
            const auto r = static_cast<Eigen::Index>(index_of(*up, rep.basis));
            M(r, c) += Complex(coeff_B(pat, p, j, qp) / (two_l_minus_1 * up_den));
          }
          if (auto dn = shift(pat, 2 * p - 1, j, -1)) {
            const auto r = static_cast<Eigen::Index>(index_of(*dn, rep.basis));
            M(r, c) -= Complex(coeff_B(*dn, p, j, qp) / (two_l_minus_1 * dn_den));
          }
        }
        if (plus_brackets) {
          const Real eps = Real(spec.signs->at(2 * p));
          M(c, c) += Complex(eps * coeff_Chat(pat, p, qp));
        } else {
          M(c, c) += Complex(Real(0), coeff_C(pat, p, qp));
        }
      }
    }
    rep.generators.emplace(k, std::move(M));
  }
  return rep;
}

inline bool is_all_halves(const std::vector<int>& twice) {
  for (int v : twice)
    if (v != 1) return false;
  return true;
}

}  // namespace detail

/// Classical-type representation T_{m_n}.
template <typename Real = double>
RepMatrices<Real> build_classical(const RepSpec<Real>& spec) {
  if (spec.kind != RepKind::classical)
    throw std::invalid_argument("build_classical: kind must be classical");
  if (spec.signs)
    throw std::invalid_argument("build_classical: signs must be absent");
  HighestWeight w = spec.weight;
  w.flavor = Flavor::classical;
  if (!validate_weight(w))
    throw std::invalid_argument("build_classical: invalid weight");
  return detail::build_common(spec, Flavor::classical, false, false);
}

/// Nonclassical-type representation T_{eps,m_n}.
template <typename Real = double>
RepMatrices<Real> build_nonclassical(const RepSpec<Real>& spec) {
  if (spec.kind != RepKind::nonclassical)
    throw std::invalid_argument("build_nonclassical: kind must be nonclassical");
  if (!spec.signs || !spec.signs->valid_for(spec.weight.n))
    throw std::invalid_argument("build_nonclassical: full sign vector required");
  HighestWeight w = spec.weight;
  w.flavor = Flavor::nonclassical;
  if (!validate_weight(w))
    throw std::invalid_argument("build_nonclassical: invalid weight");
  return detail::build_common(spec, Flavor::nonclassical, true, true);
}

/// One-dimensional representation: every generator acts by
/// eps_{k} / (q^{1/2} - q^{-1/2}) on the single basis vector.
template <typename Real = double>
RepMatrices<Real> build_onedim(const RepSpec<Real>& spec) {
  if (spec.kind != RepKind::onedim)
    throw std::invalid_argument("build_onedim: kind must be onedim");
  if (!spec.signs || !spec.signs->valid_for(spec.weight.n))
    throw std::invalid_argument("build_onedim: full sign vector required");
  if (!detail::is_all_halves(spec.weight.twice) ||
      static_cast<int>(spec.weight.twice.size()) != spec.weight.n / 2)
    throw std::invalid_argument("build_onedim: weight must be (1/2, ..., 1/2)");
  HighestWeight w = spec.weight;
  w.flavor = Flavor::nonclassical;
  RepMatrices<Real> rep{spec, enumerate_patterns(w), {}};
  if (rep.dim() != 1)
    throw std::logic_error("build_onedim: basis is not one-dimensional");
  using Matrix = typename RepMatrices<Real>::Matrix;
  const Real scale = Real(1) / denom_even_d(1, spec.q, Flavor::nonclassical);
  for (int k = 2; k <= spec.weight.n; ++k) {
    Matrix M(1, 1);
    M(0, 0) = Real(spec.signs->at(k)) * scale;
    rep.generators.emplace(k, std::move(M));
  }
  return rep;
}

/// Auxiliary representation T'_{m_n}: nonclassical-style operators over
/// the classical-flavor pattern basis with a half-integral weight.  Only
/// even-indexed signs are read; odd entries of the supplied vector are
/// ignored.
template <typename Real = double>
RepMatrices<Real> build_prime(const RepSpec<Real>& spec) {
  if (spec.kind != RepKind::prime)
    throw std::invalid_argument("build_prime: kind must be prime");
  if (!spec.signs || !spec.signs->valid_for(spec.weight.n))
    throw std::invalid_argument("build_prime: sign vector required");
  HighestWeight w = spec.weight;
  w.flavor = Flavor::nonclassical;  // half-integral entries, tail >= 1/2
  if (!validate_weight(w))
    throw std::invalid_argument(
        "build_prime: weight must be half-integral with tail >= 1/2");
  return detail::build_common(spec, Flavor::classical, true, false);
}

/// Dispatch on spec.kind.
template <typename Real = double>
RepMatrices<Real> build(const RepSpec<Real>& spec) {
  switch (spec.kind) {
    case RepKind::classical:
      return build_classical(spec);
    case RepKind::nonclassical:
      return build_nonclassical(spec);
    case RepKind::onedim:
      return build_onedim(spec);
    case RepKind::prime:
      return build_prime(spec);
  }
  throw std::invalid_argument("build: unknown representation kind");
}

}  // namespace qsorep
