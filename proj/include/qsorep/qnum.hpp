#pragma once

#include <cmath>
#include <stdexcept>

namespace qsorep {

/// Representation flavor: classical-type (q-deformation of an ordinary
/// so_n irrep) or nonclassical-type (singular at q -> 1).
enum class Flavor { classical, nonclassical };

/// Deformation parameter. Restricted to real q > 0, q != 1, so q is never
/// a root of unity and the brackets below are finite.
template <typename Real = double>
struct QParam {
  Real q;

  explicit QParam(Real value) : q(value) {
    if (!(q > Real(0)))
      throw std::invalid_argument("QParam: q must be positive");
    if (q == Real(1))
      throw std::invalid_argument("QParam: q must differ from 1");
  }
};

/// q-number [a] = (q^a - q^{-a}) / (q - q^{-1}).
template <typename Real>
Real qnumber(Real a, const QParam<Real>& qp) {
  using std::pow;
  return (pow(qp.q, a) - pow(qp.q, -a)) / (qp.q - Real(1) / qp.q);
}

/// Bracket [a]_+ = (q^a + q^{-a}) / (q - q^{-1}).  Symmetric in a and
/// strictly nonzero for real q > 0, q != 1.
template <typename Real>
Real qnumber_plus(Real a, const QParam<Real>& qp) {
  using std::pow;
  return (pow(qp.q, a) + pow(qp.q, -a)) / (qp.q - Real(1) / qp.q);
}

/// Denominator attached to shifts of even-row entries: q^l + q^{-l} for
/// classical-type operators, q^l - q^{-l} for nonclassical-type ones.
/// The nonclassical variant vanishes at l = 0, which valid nonclassical
/// patterns (l >= 1/2) never produce.
template <typename Real>
Real denom_even(Real l, const QParam<Real>& qp, Flavor flavor) {
  using std::pow;
  if (flavor == Flavor::classical) return pow(qp.q, l) + pow(qp.q, -l);
  if (l == Real(0))
    throw std::domain_error("denom_even: q^l - q^{-l} vanishes at l = 0");
  return pow(qp.q, l) - pow(qp.q, -l);
}

// Doubled-integer entry points: the combinatorial layer stores
// half-integers as 2*value, converted to Real only here.
template <typename Real = double>
Real qnumber_d(int twice_a, const QParam<Real>& qp) {
  return qnumber(Real(twice_a) / Real(2), qp);
}

template <typename Real = double>
Real qnumber_plus_d(int twice_a, const QParam<Real>& qp) {
  return qnumber_plus(Real(twice_a) / Real(2), qp);
}

template <typename Real = double>
Real denom_even_d(int twice_l, const QParam<Real>& qp, Flavor flavor) {
  return denom_even(Real(twice_l) / Real(2), qp, flavor);
}

}  // namespace qsorep
