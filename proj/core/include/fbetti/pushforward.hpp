#pragma once

// Decomposition of the Frobenius pushforward R^{1/q} into indecomposable MCM
// summands.
//
// Monomials x^{a/q} of R^{1/q} split by the residue of a mod q. Each residue
// class spans an R-submodule, R^{1/q} is their direct sum, and when
// gcd(p, torsion_index) = 1 every class is a rank-one MCM module. Rank-one
// indecomposables of each family are told apart by their number of
// generators, so counting minimal generators per class decomposes R^{1/q}.
// That is the residue-class route.
//
// The index-set route counts the explicit sets P(l) (scrolls), P(1), P(2),
// P(3) (scroll21) and the parity classes (veronese2) in closed form.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fbetti/arith.hpp"
#include "fbetti/mcm.hpp"
#include "fbetti/rings.hpp"

namespace fbetti {

enum class Route { PaperIndexSets, ResidueClasses };

/// "paper" or "classes".
std::string route_name(Route route);
/// Inverse of route_name; throws std::invalid_argument.
Route parse_route(const std::string& name);

/// Residue-class submodule of R^{1/q}, generated by x^{a/q} for the listed a.
struct ClassModule {
  RingFamily family;
  FrobeniusContext ctx;
  ExponentVector residue;
  std::vector<ExponentVector> min_generators;

  std::size_t mu() const { return min_generators.size(); }
};

struct Decomposition {
  RingFamily family;
  FrobeniusContext ctx;
  Route route;
  std::map<SummandClass, Integer> multiplicities;

  /// Zero for classes absent from the map.
  Integer multiplicity(const SummandClass& cls) const;
  /// sum multiplicity * rank.
  Integer total_rank() const;
  /// sum multiplicity * mu.
  Integer total_generators() const;
};

/// a_l = #P(l), P(l) = {(i, j) : lq <= i < (l+1)q, 0 <= j < q, i + j = 0 mod delta}.
/// Requires q > delta; exact for every p.
std::vector<Integer> scroll_index_counts(int delta, const FrobeniusContext& ctx);

struct Scroll21IndexCounts {
  Integer p1;
  Integer p2;
  Integer p3;
  friend bool operator==(const Scroll21IndexCounts&, const Scroll21IndexCounts&) = default;
};

/// Which of P(1), P(2), P(3) contains (i, j, k), if any. Requires q > 2.
std::optional<int> scroll21_index_set(const FrobeniusContext& ctx, const ExponentVector& ijk);

/// Cardinalities of the sets P(1), P(2), P(3) exactly as written:
///   P(1): 0 <= i,j,k < q, i+j+k even, i+j >= k
///   P(2): q <= i < 2q, 0 <= j,k < q, i+j+k even, 0 <= i+j-k < 2q
///   P(3): q <= i < 2q, 0 <= j,k < q, i+j+k even, i+j-k >= 2q
/// Note #P(1) + #P(2) + #P(3) < q^3: some residue classes have generators
/// outside the index box (see the residue-class route).
Scroll21IndexCounts scroll21_index_counts(const FrobeniusContext& ctx);

struct VeroneseClassCounts {
  Integer free;
  Integer canonical;
};

/// R^{1/q} = R^{a} (+) A^{b} with a = (q^3+1)/2, b = (q^3-1)/2. Requires p odd.
VeroneseClassCounts veronese_class_counts(const FrobeniusContext& ctx);

/// Multiplier F such that every minimal generator of a residue class lies in
/// [0, F q)^n.
std::int64_t class_search_factor(const RingFamily& family);

/// Minimal generators of the class of `residue` (coordinates in [0, q)).
/// Requires gcd(p, torsion_index) = 1. Throws internal_error if a minimal
/// generator is found just outside the search box.
ClassModule class_minimal_generators(const RingFamily& family, const FrobeniusContext& ctx,
                                     const ExponentVector& residue);

/// Upper bound on q^d accepted by the residue-class route.
inline constexpr std::int64_t kMaxResidueClasses = std::int64_t{1} << 22;

/// Route availability; the reason is filled in when unavailable.
bool route_available(const RingFamily& family, const FrobeniusContext& ctx, Route route,
                     std::string* reason = nullptr);

/// Throws std::invalid_argument when the route is not available.
Decomposition decompose(const RingFamily& family, const FrobeniusContext& ctx, Route route);

/// Residue-class route when available, otherwise the index-set route.
Route preferred_route(const RingFamily& family, const FrobeniusContext& ctx);

/// Elements of P(l) for scroll:delta.
std::vector<std::pair<std::int64_t, std::int64_t>> scroll_index_set(int delta, const FrobeniusContext& ctx, int l);

/// Builds N^l_{i,j} = R<x^{(i-mq)/q} y^{(j+mq)/q} : 0 <= m <= l> and checks that
/// its graded pieces in degrees (i+j)/q + k delta have dimension k delta + l + 1
/// for k < steps, the Hilbert function of M(l). Throws std::invalid_argument if
/// (i, j) is not in P(l).
bool verify_summand_iso_scroll(int delta, const FrobeniusContext& ctx, int l,
                               std::pair<std::int64_t, std::int64_t> ij, int steps = 8);

/// Graded dimensions dim [N^l_{i,j}]_{(i+j)/q + k delta} for k < steps.
std::vector<std::int64_t> scroll_summand_dimensions(int delta, const FrobeniusContext& ctx, int l,
                                                    std::pair<std::int64_t, std::int64_t> ij, int steps);

/// Checks the relations xy*g_0 = x^2*g_1 (and xz*g_0 = x^2*g_2 on P(3)) among
/// the generators g_0 = (i,j,k), g_1 = (i-q, j+q, k), g_2 = (i-q, j, k+q) of
/// N_{i,j,k}, and that each generator is a monomial of R. Throws
/// std::invalid_argument unless (i,j,k) lies in P(2) or P(3).
bool verify_relations_scroll21(const FrobeniusContext& ctx, const ExponentVector& ijk);

}  // namespace fbetti
