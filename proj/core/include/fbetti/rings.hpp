#pragma once

// The three graded Cohen-Macaulay rings of finite CM type, presented as
// affine semigroup rings inside k[x, y] or k[x, y, z]:
//
//   scroll:d   k[x^d, x^{d-1}y, ..., y^d]      (rational normal curve, d >= 2)
//   scroll21   k[x^2, xy, y^2, xz, yz]         (scroll of type (2,1))
//   veronese2  k[x^2, y^2, z^2, xy, xz, yz]    (second Veronese of P^2)
//
// A monomial x^a lies in the ring iff `semigroup_member(family, a)`.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fbetti/arith.hpp"

namespace fbetti {

enum class FamilyKind { ScrollDelta, Scroll21, Veronese2 };

class RingFamily {
 public:
  /// Throws std::invalid_argument for delta < 2.
  static RingFamily scroll(int delta);
  static RingFamily scroll21();
  static RingFamily veronese2();

  /// Parses "scroll:<delta>", "scroll21" or "veronese2".
  static RingFamily parse(std::string_view designator);

  FamilyKind kind() const { return kind_; }
  /// Degree of the scroll; 0 for the other families.
  int delta() const { return delta_; }
  int ambient_vars() const { return kind_ == FamilyKind::ScrollDelta ? 2 : 3; }
  int krull_dim() const { return ambient_vars(); }
  /// Order of the grading torsion: the class group of the residue lattice.
  int torsion_index() const { return kind_ == FamilyKind::ScrollDelta ? delta_ : 2; }

  std::string designator() const;

  friend auto operator<=>(const RingFamily&, const RingFamily&) = default;

 private:
  RingFamily(FamilyKind kind, int delta) : kind_(kind), delta_(delta) {}
  FamilyKind kind_;
  int delta_;
};

/// Nonnegative exponent vector of length 2 or 3.
class ExponentVector {
 public:
  static constexpr std::size_t kMaxArity = 3;

  ExponentVector() = default;
  /// Throws std::invalid_argument on negative entries or arity > 3.
  ExponentVector(std::initializer_list<std::int64_t> coords);
  ExponentVector(const std::int64_t* coords, std::size_t size);

  std::size_t size() const { return size_; }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t total_degree() const;

  /// this + scale * other.
  ExponentVector plus(const ExponentVector& other, std::int64_t scale = 1) const;
  /// this - scale * other, or empty when a coordinate would go negative.
  std::optional<ExponentVector> minus(const ExponentVector& other, std::int64_t scale = 1) const;

  friend bool operator==(const ExponentVector& a, const ExponentVector& b);
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b);

  std::string to_string() const;

 private:
  std::array<std::int64_t, kMaxArity> coords_{};
  std::size_t size_ = 0;
};

/// Characteristic p, Frobenius iterate e and q = p^e.
///
/// Every normalized invariant divides by q^d where d is the Krull dimension,
/// i.e. the residue-field degree term in the exponent is taken to be zero.
class FrobeniusContext {
 public:
  /// Throws std::invalid_argument if p is not prime, e < 0, or p^e overflows.
  FrobeniusContext(std::int64_t p, int e);

  /// Decomposes a prime power q >= 2.
  static FrobeniusContext from_q(std::int64_t q);

  /// Also enforces family-specific characteristic restrictions.
  static FrobeniusContext for_family(const RingFamily& family, std::int64_t p, int e);

  std::int64_t p() const { return p_; }
  int e() const { return e_; }
  std::int64_t q() const { return q_; }
  static constexpr int alpha_convention() { return 0; }

  /// q^{krull_dim}.
  Integer normalizer(const RingFamily& family) const;

  friend bool operator==(const FrobeniusContext&, const FrobeniusContext&) = default;

 private:
  std::int64_t p_;
  int e_;
  std::int64_t q_;
};

bool is_prime(std::int64_t n);

/// Throws std::invalid_argument when the characteristic is not allowed for the
/// family (veronese2 needs p != 2).
void require_legal_characteristic(const RingFamily& family, const FrobeniusContext& ctx);

/// gcd(p, torsion_index) == 1: every residue class of R^{1/q} is a rank-one module.
bool coprime_to_torsion(const RingFamily& family, const FrobeniusContext& ctx);

/// Throws std::invalid_argument on arity mismatch.
bool semigroup_member(const RingFamily& family, const ExponentVector& a);

std::vector<ExponentVector> algebra_generators(const RingFamily& family);

/// Largest coordinate appearing among the algebra generators.
std::int64_t max_generator_coordinate(const RingFamily& family);

/// Whether x^a lies in m^{[q]}, i.e. a = q*g + s with g a generator and s in the
/// semigroup. Requires semigroup_member(family, a); throws std::invalid_argument otherwise.
bool frobenius_power_member(const RingFamily& family, const FrobeniusContext& ctx, const ExponentVector& a);

}  // namespace fbetti
