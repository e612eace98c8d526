#pragma once

// Brute-force verifiers that share no code with the decomposition pipeline:
// they use only the membership predicates of rings.hpp and plain enumeration.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fbetti/arith.hpp"
#include "fbetti/rings.hpp"

namespace fbetti::oracle {

struct ColengthResult {
  RingFamily family;
  FrobeniusContext ctx;
  Integer lambda;
  Rational normalized;
};

/// lambda(R / m^{[q]}) = #{a in the semigroup : x^a not in m^{[q]}}, counted in
/// [0, 2q * max generator coordinate)^n. Throws internal_error if an element of
/// the box's outer shell lies outside m^{[q]}.
ColengthResult lambda_frobenius_quotient(const RingFamily& family, const FrobeniusContext& ctx);

/// Number of minimal generators of R^{1/q}: per residue class, the antichain of
/// the class under b <= a iff (a - b)/q is in the semigroup, each element then
/// re-checked against the direct criterion (no a - q g in the semigroup).
/// Requires gcd(p, torsion_index) = 1.
Integer min_gens_pushforward(const RingFamily& family, const FrobeniusContext& ctx);

/// Ranks of the span of { monomial * syzygy } in degrees (k+1) delta + l,
/// k < steps, computed by exact elimination over the rationals.
std::vector<Integer> scroll_syzygy_span_dimensions(int delta, int l, int steps);

/// Checks the listed generators of Syz^1(M(l)): each maps to zero under
/// e_m -> x^{l-m+1} y^{m-1}; there are delta*l of them; and their span has
/// the Hilbert function l t^{l+1} H(M(delta-1), t) through degree l+1+4 delta,
/// which is also the dimension of the full kernel. Throws
/// std::invalid_argument unless 1 <= l < delta.
bool verify_scroll_syzygy(int delta, int l);

/// Degree shifts (s, s') with t^s H(R) + H(B) = 3 t^{s'} H(A) for veronese2,
/// searched in [0, 4]^2.
std::optional<std::pair<int, int>> veronese_sequence_shifts();

/// Hilbert-series shadows of 0 -> B -> R(-2)^3 -> A -> 0 and 0 -> R -> A^3 -> B -> 0.
bool verify_veronese_sequences();

}  // namespace fbetti::oracle
