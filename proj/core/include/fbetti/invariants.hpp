#pragma once

// Asymptotic invariants of R: F-signature s(R), Hilbert-Kunz multiplicity
// e_HK(R) and Frobenius Betti numbers beta_i^F(R), as exact closed forms and
// as finite-q estimates from decompositions of R^{1/q}.
//
//                 s(R)     e_HK(R)      beta_i^F(R), i >= 1
//   scroll:d      1/d      (d+1)/2      d (d-1)^i / 2
//   scroll21      5/12     7/4          9/4 * 2^{i-1}
//   veronese2     1/2      2            4 * 3^{i-1}
//
// All normalizations divide by q^d with d = dim R.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fbetti/arith.hpp"
#include "fbetti/mcm.hpp"
#include "fbetti/pushforward.hpp"
#include "fbetti/rings.hpp"

namespace fbetti {

Rational closed_form_s(const RingFamily& family);
Rational closed_form_ehk(const RingFamily& family);
/// beta_i^F; i = 0 gives e_HK.
Rational closed_form_fbetti(const RingFamily& family, int i);
/// Human-readable formula for beta_i^F, i >= 1, e.g. "3*2^i/2".
std::string fbetti_formula(const RingFamily& family);

/// Limit of multiplicity / q^d for every summand class of R^{1/q}.
std::vector<std::pair<SummandClass, Rational>> asymptotic_densities(const RingFamily& family);

/// sum over classes of density * beta_i(class).
Rational density_betti(const RingFamily& family, int i);

struct FiniteQEstimate {
  std::int64_t q;
  Route route;
  Rational s_est;
  Rational ehk_est;
  /// Index i - 1 holds beta_i / q^d.
  std::vector<Rational> fbetti_est;
  /// mult(A) / q^d for families with a canonical-module summand.
  std::optional<Rational> canonical_est;

  Rational fbetti(int i) const;
};

struct InvariantReport {
  RingFamily family;
  Rational s;
  Rational ehk;
  std::vector<FiniteQEstimate> finite_q_samples;

  /// beta_i^F; i = 0 gives ehk.
  Rational fbetti(int i) const { return closed_form_fbetti(family, i); }
};

/// Closed forms, cross-checked against density * Betti for i <= 12.
/// Throws internal_error on any disagreement.
InvariantReport limits(const RingFamily& family);

/// sum over summands of multiplicity * beta_i(summand) = beta_i(R^{1/q}).
Integer fbetti_pushforward(const Decomposition& decomposition, int i);
Integer fbetti_pushforward(const RingFamily& family, const FrobeniusContext& ctx, int i);

FiniteQEstimate finite_q_estimates(const Decomposition& decomposition, int max_i = 4);
FiniteQEstimate finite_q_estimates(const RingFamily& family, const FrobeniusContext& ctx, int max_i = 4);

struct ConvergenceCheck {
  std::int64_t q;
  std::string quantity;
  Rational estimate;
  Rational limit;
  Rational error;
  Rational bound;
  bool passed;
};

struct ConvergenceReport {
  RingFamily family;
  std::vector<ConvergenceCheck> checks;
  /// Problems that prevented a check (illegal q and the like).
  std::vector<std::string> failures;

  bool passed() const;
  std::string describe_failures() const;
};

/// For each q: |s_est - s| <= 4/q, |ehk_est - ehk| <= 4/q,
/// |fbetti_est(i) - beta_i^F| <= (4 beta_i^F / beta_1^F)/q for 1 <= i <= 4, and for
/// scroll21 and veronese2 |mult(R) - mult(A)|/q^d <= 4/q.
ConvergenceReport convergence_check(const RingFamily& family, std::span<const std::int64_t> q_list);

}  // namespace fbetti
