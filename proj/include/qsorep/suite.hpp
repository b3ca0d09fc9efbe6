#pragma once

#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qsorep/repmatrix.hpp"
#include "qsorep/verify.hpp"

namespace qsorep::suite {

// Desk-scale verification grid and the acceptance criteria over it.

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Highest weights with doubled entries drawn from {0..5} (classical,
/// parity-uniform) or {1,3,5} (nonclassical), nonincreasing.
inline std::vector<std::vector<int>> grid_weights(int n, Flavor flavor) {
  const int p = n / 2;
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(p));
  auto rec = [&](auto&& self, int j, int hi) -> void {
    if (j == p) {
      HighestWeight w{n, flavor, cur};
      if (validate_weight(w)) out.push_back(cur);
      return;
    }
    const int lo = flavor == Flavor::nonclassical ? 1 : 0;
    const int step = flavor == Flavor::nonclassical ? 2 : 1;
    for (int v = hi; v >= lo; v -= step) {
      cur[static_cast<std::size_t>(j)] = v;
      self(self, j + 1, v);
    }
    if (flavor == Flavor::classical && cur[0] % 2 == 1 && hi % 2 == 0) {
      // parity handled by validate_weight; nothing extra here
    }
  };
  rec(rec, 0, 5);
  return out;
}

/// Sign vectors for the grid: all 2^{n-1} at n <= 4, eight spread-out
/// samples (including all-plus and all-minus) at n in {5, 6}.
inline std::vector<SignVector> grid_signs(int n) {
  const int total = 1 << (n - 1);
  std::vector<int> masks;
  if (n <= 4) {
    for (int m = 0; m < total; ++m) masks.push_back(m);
  } else {
    for (int i = 0; i < 8; ++i) masks.push_back(i * (total - 1) / 7);
  }
  std::vector<SignVector> out;
  for (int m : masks) {
    SignVector sv;
    for (int b = 0; b < n - 1; ++b) sv.eps.push_back((m >> b) & 1 ? -1 : 1);
    out.push_back(std::move(sv));
  }
  return out;
}

/// Every representation of the relation-suite grid at one q.
inline std::vector<RepSpec<double>> grid_specs(double q) {
  std::vector<RepSpec<double>> specs;
  for (int n = 3; n <= 6; ++n) {
    for (const auto& w : grid_weights(n, Flavor::classical))
      specs.push_back({HighestWeight{n, Flavor::classical, w}, std::nullopt,
                       QParam<double>(q), RepKind::classical});
    for (const auto& w : grid_weights(n, Flavor::nonclassical))
      for (const auto& sv : grid_signs(n))
        specs.push_back({HighestWeight{n, Flavor::nonclassical, w}, sv,
                         QParam<double>(q), RepKind::nonclassical});
  }
  return specs;
}

// ---- criteria ---------------------------------------------------------------

inline CriterionResult criterion1_relations() {
  CriterionResult r{1, "defining relations over the desk-scale grid"};
  double worst = 0.0;
  std::string worst_id;
  int count = 0;
  for (double q : {1.2, 2.0})
    for (const auto& spec : grid_specs(q)) {
      const auto rep = build(spec);
      const auto report = check_relations(rep, 1e-9);
      ++count;
      if (report.max_residual > worst) {
        worst = report.max_residual;
        std::ostringstream os;
        os << "n=" << spec.weight.n << " q=" << q
           << " kind=" << (spec.kind == RepKind::classical ? "classical" : "nonclassical");
        worst_id = os.str();
      }
    }
  std::ostringstream os;
  os << count << " representations, max residual " << worst << " (" << worst_id
     << ")";
  r.detail = os.str();
  r.pass = worst < 1e-9;
  return r;
}

inline CriterionResult criterion2_onedim() {
  CriterionResult r{2, "one-dimensional representations"};
  double worst_entry = 0.0, worst_rel = 0.0;
  for (int n = 3; n <= 7; ++n)
    for (double q : {1.2, 2.0, 4.0}) {
      const double expected_scale = 1.0 / (std::sqrt(q) - 1.0 / std::sqrt(q));
      for (const auto& sv : [&] {
        std::vector<SignVector> all;
        for (int m = 0; m < (1 << (n - 1)); ++m) {
          SignVector s;
          for (int b = 0; b < n - 1; ++b) s.eps.push_back((m >> b) & 1 ? -1 : 1);
          all.push_back(std::move(s));
        }
        return all;
      }()) {
        HighestWeight w{n, Flavor::nonclassical,
                        std::vector<int>(static_cast<std::size_t>(n / 2), 1)};
        RepSpec<double> spec{w, sv, QParam<double>(q), RepKind::onedim};
        const auto rep = build_onedim(spec);
        for (int k = 2; k <= n; ++k) {
          const double expected = sv.at(k) * expected_scale;
          worst_entry = std::max(
              worst_entry, std::abs(rep.generators.at(k)(0, 0).real() - expected) /
                               std::abs(expected));
          worst_entry = std::max(worst_entry,
                                 std::abs(rep.generators.at(k)(0, 0).imag()));
        }
        worst_rel = std::max(worst_rel, check_relations(rep, 1e-13).max_residual);
      }
    }
  std::ostringstream os;
  os << "max entry deviation " << worst_entry << ", max relation residual "
     << worst_rel;
  r.detail = os.str();
  r.pass = worst_entry < 1e-14 && worst_rel < 1e-13;
  return r;
}

inline CriterionResult criterion3_irreducibility() {
  CriterionResult r{3, "commutant dimension (Schur irreducibility)"};
  int checked = 0;
  bool ok = true;
  std::string bad;
  for (double q : {1.2, 2.0})
    for (const auto& spec : grid_specs(q)) {
      const auto rep = build(spec);
      if (rep.dim() > 200) continue;
      const int cdim = commutant_dimension(rep);
      ++checked;
      if (cdim != 1) {
        ok = false;
        std::ostringstream os;
        os << "n=" << spec.weight.n << " q=" << q << " dim=" << rep.dim()
           << " commutant=" << cdim;
        bad = os.str();
      }
    }
  // Negative control: a direct sum of two distinct one-dimensional
  // representations must have a two-dimensional commutant.
  const int n = 4;
  HighestWeight w{n, Flavor::nonclassical, {1, 1}};
  SignVector plus{{1, 1, 1}}, mixed{{-1, 1, 1}};
  const auto a = build_onedim(RepSpec<double>{w, plus, QParam<double>(2.0), RepKind::onedim});
  const auto b = build_onedim(RepSpec<double>{w, mixed, QParam<double>(2.0), RepKind::onedim});
  RepMatrices<double> sum = a;
  sum.basis.push_back(b.basis.front());
  for (int k = 2; k <= n; ++k) {
    CMatrix M = CMatrix::Zero(2, 2);
    M(0, 0) = a.generators.at(k)(0, 0);
    M(1, 1) = b.generators.at(k)(0, 0);
    sum.generators[k] = M;
  }
  const int control = commutant_dimension(sum);
  std::ostringstream os;
  os << checked << " representations checked";
  if (!ok) os << "; first failure: " << bad;
  os << "; direct-sum control commutant = " << control;
  r.detail = os.str();
  r.pass = ok && control == 2;
  return r;
}

inline CriterionResult criterion4_decomposition() {
  CriterionResult r{4, "T' block decomposition and matching"};
  bool ok = true;
  std::string bad;
  int blocks_checked = 0;
  const double q = 2.0;
  for (int n = 3; n <= 5; ++n) {
    const auto weights = grid_weights(n, Flavor::nonclassical);
    // Iterate over even-sign assignments (odd entries unused by T').
    std::vector<int> even_rows;
    for (int k = 4; k <= n; k += 2) even_rows.push_back(k);
    for (const auto& wv : weights)
      for (int em = 0; em < (1 << even_rows.size()); ++em) {
        SignVector sv{std::vector<int>(static_cast<std::size_t>(n - 1), 1)};
        for (std::size_t i = 0; i < even_rows.size(); ++i)
          if ((em >> i) & 1) sv.eps[static_cast<std::size_t>(even_rows[i] - 2)] = -1;
        HighestWeight w{n, Flavor::classical, wv};
        RepSpec<double> spec{w, sv, QParam<double>(q), RepKind::prime};
        const auto prime = build_prime(spec);
        const auto report = decompose_prime(prime, 1e-9);
        const int expected_blocks = 1 << ((n - 1) / 2);
        Eigen::Index dim_sum = 0;
        for (const auto& blk : report.blocks) dim_sum += blk.rep.dim();
        if (static_cast<int>(report.blocks.size()) != expected_blocks ||
            dim_sum != prime.dim() || report.invariance_residual >= 1e-9) {
          ok = false;
          bad = "block count/dimension/leakage failure at n=" + std::to_string(n);
          continue;
        }
        // Each block must match exactly one nonclassical representation,
        // and distinct blocks must match distinct sign vectors.
        std::vector<std::vector<int>> matched;
        for (const auto& blk : report.blocks) {
          int matches = 0;
          std::vector<int> match_eps;
          for (int m = 0; m < (1 << (n - 1)); ++m) {
            SignVector cand;
            for (int bBit = 0; bBit < n - 1; ++bBit)
              cand.eps.push_back((m >> bBit) & 1 ? -1 : 1);
            HighestWeight nw{n, Flavor::nonclassical, wv};
            const auto candidate = build_nonclassical(
                RepSpec<double>{nw, cand, QParam<double>(q), RepKind::nonclassical});
            if (candidate.dim() != blk.rep.dim()) continue;
            if (match_block_to_nonclassical(blk.rep, candidate, 1e-8)) {
              ++matches;
              match_eps = cand.eps;
            }
          }
          ++blocks_checked;
          if (matches != 1) {
            ok = false;
            bad = "block matched " + std::to_string(matches) +
                  " candidates at n=" + std::to_string(n);
            continue;
          }
          if (std::find(matched.begin(), matched.end(), match_eps) != matched.end()) {
            ok = false;
            bad = "two blocks matched the same sign vector";
          }
          matched.push_back(match_eps);
          if (check_relations(blk.rep, 1e-9).max_residual >= 1e-9) {
            ok = false;
            bad = "block relations failed at n=" + std::to_string(n);
          }
        }
      }
  }
  std::ostringstream os;
  os << blocks_checked << " blocks checked";
  if (!ok) os << "; " << bad;
  r.detail = os.str();
  r.pass = ok;
  return r;
}

inline CriterionResult criterion5_nonequivalence() {
  CriterionResult r{5, "pairwise distinct spectral fingerprints (n <= 4)"};
  std::vector<Fingerprint> fps;
  for (const auto& spec : grid_specs(2.0)) {
    if (spec.weight.n > 4) continue;
    fps.push_back(spectral_fingerprint(build(spec)));
  }
  int collisions = 0;
  for (std::size_t i = 0; i < fps.size(); ++i)
    for (std::size_t j = i + 1; j < fps.size(); ++j)
      if (fps[i] == fps[j]) ++collisions;
  std::ostringstream os;
  os << fps.size() << " fingerprints, " << collisions << " collisions";
  r.detail = os.str();
  r.pass = collisions == 0;
  return r;
}

/// Independent enumeration oracle: filter the full candidate box through a
/// direct transcription of the interlacing inequality chains.
inline long brute_force_dimension(const HighestWeight& w) {
  std::vector<std::vector<int>> rows{w.twice};
  long count = 0;
  int lo_box = 0, hi_box = 0;
  for (int v : w.twice) {
    hi_box = std::max(hi_box, std::abs(v));
    lo_box = -hi_box;
  }
  auto chain = [&](int k, const std::vector<int>& up, const std::vector<int>& dn) {
    std::vector<int> seq;
    const int p = k / 2;
    const int m = (k - 1) / 2;
    for (int j = 0; j < m; ++j) {
      seq.push_back(up[static_cast<std::size_t>(j)]);
      seq.push_back(dn[static_cast<std::size_t>(j)]);
    }
    if (k % 2 == 1)
      seq.push_back(w.flavor == Flavor::classical
                        ? -up[static_cast<std::size_t>(p - 1)]
                        : 1);
    else
      seq.push_back(w.flavor == Flavor::classical
                        ? std::abs(up[static_cast<std::size_t>(p - 1)])
                        : up[static_cast<std::size_t>(p - 1)]);
    for (std::size_t i = 1; i < seq.size(); ++i)
      if (seq[i - 1] < seq[i]) return false;
    return true;
  };
  auto rec = [&](auto&& self, int k) -> void {
    if (k == 2) {
      ++count;
      return;
    }
    const int m = (k - 1) / 2;
    const int parity = w.twice[0] & 1;
    std::vector<int> cand(static_cast<std::size_t>(m));
    auto fill = [&](auto&& fs, int j) -> void {
      if (j == m) {
        if (chain(k, rows.back(), cand)) {
          rows.push_back(cand);
          self(self, k - 1);
          rows.pop_back();
        }
        return;
      }
      for (int v = lo_box; v <= hi_box; ++v) {
        if ((v & 1) != parity) continue;
        cand[static_cast<std::size_t>(j)] = v;
        fs(fs, j + 1);
      }
    };
    fill(fill, 0);
  };
  rec(rec, w.n);
  return count;
}

inline CriterionResult criterion6_dimension_oracle() {
  CriterionResult r{6, "enumeration matches brute-force dimension oracle"};
  bool ok = true;
  std::string bad;
  int checked = 0;
  for (int n = 3; n <= 6; ++n)
    for (Flavor flavor : {Flavor::classical, Flavor::nonclassical})
      for (const auto& wv : grid_weights(n, flavor)) {
        HighestWeight w{n, flavor, wv};
        const auto basis = enumerate_patterns(w);
        const long brute = brute_force_dimension(w);
        ++checked;
        if (static_cast<long>(basis.size()) != brute) {
          ok = false;
          bad = "mismatch at n=" + std::to_string(n);
        }
      }
  // Named closed-form checks: so_3 weight (j) has dimension 2j+1 and the
  // so_5 vector representation (1,0) has dimension 5.
  for (int twj = 0; twj <= 5; ++twj) {
    HighestWeight w{3, Flavor::classical, {twj}};
    if (static_cast<int>(enumerate_patterns(w).size()) != twj + 1) ok = false;
  }
  HighestWeight so5{5, Flavor::classical, {2, 0}};
  if (enumerate_patterns(so5).size() != 5) ok = false;
  std::ostringstream os;
  os << checked << " weights cross-checked";
  if (!ok) os << "; " << bad;
  r.detail = os.str();
  r.pass = ok;
  return r;
}

inline CriterionResult criterion7_classical_limit() {
  CriterionResult r{7, "classical limit q -> 1"};
  const double q = 1.0 + 1e-4;
  HighestWeight w{3, Flavor::classical, {2}};
  const auto rep = build_classical(
      RepSpec<double>{w, std::nullopt, QParam<double>(q), RepKind::classical});
  // Analytic q -> 1 limits: [a] -> a and q^l + q^{-l} -> 2, so over the
  // basis m12 = -1, 0, 1 we get I21 = i diag(-1, 0, 1) and I32 tridiagonal
  // with +-sqrt(2)/2.
  CMatrix L21 = CMatrix::Zero(3, 3);
  L21(0, 0) = std::complex<double>(0, -1);
  L21(2, 2) = std::complex<double>(0, 1);
  CMatrix L32 = CMatrix::Zero(3, 3);
  const double e = std::sqrt(2.0) / 2.0;
  L32(1, 0) = e;
  L32(2, 1) = e;
  L32(0, 1) = -e;
  L32(1, 2) = -e;
  const double dev = std::max((rep.generators.at(2) - L21).cwiseAbs().maxCoeff(),
                              (rep.generators.at(3) - L32).cwiseAbs().maxCoeff());
  // Nonclassical scale: 1/(q^{1/2} - q^{-1/2}) = (2/h)(1 + O(h)) at q = e^h.
  const double h = 1e-4;
  const double qe = std::exp(h);
  const double c = 1.0 / (std::sqrt(qe) - 1.0 / std::sqrt(qe));
  const double scale_dev = std::abs(c * h / 2.0 - 1.0);
  std::ostringstream os;
  os << "max entry deviation " << dev << ", scale deviation " << scale_dev;
  r.detail = os.str();
  r.pass = dev < 1e-3 && scale_dev < 0.01;
  return r;
}

inline CriterionResult criterion8_vanishing_rule() {
  CriterionResult r{8, "C_{2p-1} vanishes exactly at l_{p,2p} = 0"};
  bool ok = true;
  long checked = 0;
  for (double q : {1.2, 2.0})
    for (int n = 3; n <= 6; ++n)
      for (const auto& wv : grid_weights(n, Flavor::classical)) {
        HighestWeight w{n, Flavor::classical, wv};
        const QParam<double> qp(q);
        for (const auto& pat : enumerate_patterns(w))
          for (int p = 1; 2 * p <= n; ++p) {
            if (lcoord(pat, p, 2 * p) != 0) continue;
            ++checked;
            if (coeff_C(pat, p, qp) != 0.0) ok = false;
          }
      }
  std::ostringstream os;
  os << checked << " vanishing patterns checked";
  r.detail = os.str();
  r.pass = ok;
  return r;
}

inline std::vector<CriterionResult> run_all() {
  return {criterion1_relations(),     criterion2_onedim(),
          criterion3_irreducibility(), criterion4_decomposition(),
          criterion5_nonequivalence(), criterion6_dimension_oracle(),
          criterion7_classical_limit(), criterion8_vanishing_rule()};
}

}  // namespace qsorep::suite
