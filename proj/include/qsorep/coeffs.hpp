#pragma once

#include <cmath>
#include <stdexcept>

#include "qsorep/patterns.hpp"
#include "qsorep/qnum.hpp"

namespace qsorep {

// Coefficients entering the generator action.  All arguments are read off
// the tableau through its doubled l-coordinates; every product runs over
// existing rows only (empty products are 1).

namespace detail {

/// Principal square root of num/den.  Valid patterns at real q > 1 give
/// nonnegative radicands; tiny negatives are rounding artifacts and are
/// clamped, anything worse means an invalid pattern slipped through.
template <typename Real>
Real checked_sqrt_ratio(Real num, Real den) {
  using std::abs;
  using std::sqrt;
  Real ratio = num / den;
  if (ratio < Real(0)) {
    if (ratio >= Real(-1e-12) * (Real(1) + abs(ratio)))
      return Real(0);
    throw std::domain_error("coefficient radicand is negative");
  }
  return sqrt(ratio);
}

}  // namespace detail

/// A^j_{2p}: square-root coefficient of shifts in row 2p.
template <typename Real = double>
Real coeff_A(const GTPattern& pat, int p, int j, const QParam<Real>& qp) {
  const int lj = lcoord(pat, j, 2 * p);
  Real num(1), den(1);
  for (int i = 1; i <= p; ++i) {
    const int li = lcoord(pat, i, 2 * p + 1);
    num *= qnumber_d(li + lj, qp) * qnumber_d(li - lj - 2, qp);
  }
  for (int i = 1; i <= p - 1; ++i) {
    const int li = lcoord(pat, i, 2 * p - 1);
    num *= qnumber_d(li + lj, qp) * qnumber_d(li - lj - 2, qp);
  }
  for (int i = 1; i <= p; ++i) {
    if (i == j) continue;
    const int li = lcoord(pat, i, 2 * p);
    den *= qnumber_d(li + lj, qp) * qnumber_d(li - lj, qp) *
           qnumber_d(li + lj + 2, qp) * qnumber_d(li - lj - 2, qp);
  }
  return detail::checked_sqrt_ratio(num, den);
}

/// B^j_{2p-1}: square-root coefficient of shifts in row 2p-1, j <= p-1.
template <typename Real = double>
Real coeff_B(const GTPattern& pat, int p, int j, const QParam<Real>& qp) {
  const int lj = lcoord(pat, j, 2 * p - 1);
  Real num(1), den(1);
  for (int i = 1; i <= p; ++i) {
    const int li = lcoord(pat, i, 2 * p);
    num *= qnumber_d(li + lj, qp) * qnumber_d(li - lj, qp);
  }
  for (int i = 1; i <= p - 1; ++i) {
    const int li = lcoord(pat, i, 2 * p - 2);
    num *= qnumber_d(li + lj, qp) * qnumber_d(li - lj, qp);
  }
  for (int i = 1; i <= p - 1; ++i) {
    if (i == j) continue;
    const int li = lcoord(pat, i, 2 * p - 1);
    den *= qnumber_d(li + lj, qp) * qnumber_d(li - lj, qp) *
           qnumber_d(li + lj - 2, qp) * qnumber_d(li - lj - 2, qp);
  }
  return detail::checked_sqrt_ratio(num, den);
}

/// C_{2p-1}: diagonal coefficient of the classical-type even generators.
/// Identically zero when l_{p,2p} = 0 (that zero must be taken before the
/// literal quotient: the denominator can vanish in exactly that case).
template <typename Real = double>
Real coeff_C(const GTPattern& pat, int p, const QParam<Real>& qp) {
  if (lcoord(pat, p, 2 * p) == 0) return Real(0);
  Real num(1), den(1);
  for (int s = 1; s <= p; ++s) num *= qnumber_d(lcoord(pat, s, 2 * p), qp);
  for (int s = 1; s <= p - 1; ++s) num *= qnumber_d(lcoord(pat, s, 2 * p - 2), qp);
  for (int s = 1; s <= p - 1; ++s) {
    const int ls = lcoord(pat, s, 2 * p - 1);
    den *= qnumber_d(ls, qp) * qnumber_d(ls - 2, qp);
  }
  if (den == Real(0))
    throw std::domain_error("coeff_C: zero denominator on invalid pattern");
  return num / den;
}

/// \hat C_{2p-1}: same shape as C with the [.]_+ bracket; never singular
/// for real q > 0, q != 1.
template <typename Real = double>
Real coeff_Chat(const GTPattern& pat, int p, const QParam<Real>& qp) {
  Real num(1), den(1);
  for (int s = 1; s <= p; ++s) num *= qnumber_plus_d(lcoord(pat, s, 2 * p), qp);
  for (int s = 1; s <= p - 1; ++s)
    num *= qnumber_plus_d(lcoord(pat, s, 2 * p - 2), qp);
  for (int s = 1; s <= p - 1; ++s) {
    const int ls = lcoord(pat, s, 2 * p - 1);
    den *= qnumber_plus_d(ls, qp) * qnumber_plus_d(ls - 2, qp);
  }
  return num / den;
}

/// D_{2p}: coefficient of the Kronecker term of nonclassical odd
/// generators, active only on patterns with m_{p,2p} = 1/2.
template <typename Real = double>
Real coeff_D(const GTPattern& pat, int p, const QParam<Real>& qp) {
  Real num(1), den(1);
  for (int i = 1; i <= p; ++i)
    num *= qnumber_d(lcoord(pat, i, 2 * p + 1) - 1, qp);
  for (int i = 1; i <= p - 1; ++i)
    num *= qnumber_d(lcoord(pat, i, 2 * p - 1) - 1, qp);
  for (int i = 1; i <= p - 1; ++i) {
    const int li = lcoord(pat, i, 2 * p);
    den *= qnumber_d(li + 1, qp) * qnumber_d(li - 1, qp);
  }
  if (den == Real(0))
    throw std::domain_error("coeff_D: zero denominator on invalid pattern");
  return num / den;
}

}  // namespace qsorep
