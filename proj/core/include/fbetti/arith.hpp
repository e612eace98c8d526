#pragma once

// Exact integer, rational and polynomial arithmetic, and Hilbert series of
// the form N(t) / (1 - t^s)^d with integer numerator N.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace fbetti {

using Integer = mpz_class;

std::string to_string(const Integer& value);

/// `base^exponent` for exponent >= 0.
Integer power(const Integer& base, unsigned long exponent);

/// Rational number kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when `den` is zero.
  Rational(const Integer& num, const Integer& den);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }

  bool is_integer() const { return value_.get_den() == 1; }
  double approx() const { return value_.get_d(); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Throws std::domain_error on division by zero.
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  Rational& operator+=(const Rational& other) { return *this = *this + other; }
  Rational& operator-=(const Rational& other) { return *this = *this - other; }
  Rational& operator*=(const Rational& other) { return *this = *this * other; }
  Rational& operator/=(const Rational& other) { return *this = *this / other; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const;

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}
  mpq_class value_;
};

Rational abs(const Rational& value);
std::ostream& operator<<(std::ostream& os, const Rational& value);

/// Dense univariate polynomial with integer coefficients, indexed by degree.
class Polynomial {
 public:
  static constexpr long kZeroDegree = -1;

  Polynomial() = default;
  Polynomial(std::initializer_list<long> coefficients);
  explicit Polynomial(std::vector<Integer> coefficients);

  /// c * t^degree.
  static Polynomial monomial(const Integer& c, long degree);

  /// kZeroDegree for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Zero outside [0, degree()].
  Integer coefficient(long degree) const;
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  /// Smallest degree with a nonzero coefficient; kZeroDegree for zero.
  long order() const;

  Integer evaluate(const Integer& t) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Integer& c, const Polynomial& p);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Multiplies by t^shift; negative shifts require the dropped coefficients to vanish.
  Polynomial shifted(long shift) const;

  /// t^total * p(1/t). Requires degree() <= total.
  Polynomial reversed(long total) const;

  /// Quotient by (1 - t^step) when the division is exact, empty otherwise.
  std::optional<Polynomial> divide_by_one_minus_tpow(long step) const;

  std::string to_string(char var = 't') const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// (1 - t^step)^exponent.
Polynomial one_minus_tpow(long step, long exponent);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Power series numerator(t) / (1 - t^step)^pole_order.
///
/// Canonical form: when pole_order > 0 the numerator is not divisible by
/// (1 - t^step); the zero series has pole order 0 and step 1. Series whose
/// coefficients are supported on one residue class mod step (the scroll
/// modules) use step > 1; everything else uses step 1.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  HilbertSeries(Polynomial numerator, long pole_order, long step = 1);

  const Polynomial& numerator() const { return numerator_; }
  long pole_order() const { return pole_order_; }
  long step() const { return step_; }
  bool is_zero() const { return numerator_.is_zero(); }

  /// Same series over (1 - t^step)^pole_order; both must be multiples of the current ones.
  HilbertSeries rewritten(long pole_order, long step) const;

  friend HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b);
  friend HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b);
  friend HilbertSeries operator*(const Polynomial& p, const HilbertSeries& h);
  friend HilbertSeries operator*(const Integer& c, const HilbertSeries& h);

  /// Equality of the underlying power series.
  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b);

  std::string to_string() const;

 private:
  void canonicalize();

  Polynomial numerator_;
  long pole_order_ = 0;
  long step_ = 1;
};

std::ostream& operator<<(std::ostream& os, const HilbertSeries& h);

/// Coefficients of h at degrees 0..upto.
std::vector<Integer> series_coefficients(const HilbertSeries& h, long upto);

/// t^shift * h. Negative shifts throw std::domain_error if they would leave
/// nonzero coefficients in negative degrees.
HilbertSeries series_shift(const HilbertSeries& h, long shift);

/// (-1)^d h(1/t) over the same denominator, the Hilbert series of the
/// canonical module when h is that of a d-dimensional Cohen-Macaulay ring.
/// For d = 3 this is -h(1/t). Requires pole order >= 1 and
/// deg(numerator) <= step * pole_order; throws std::domain_error otherwise.
HilbertSeries series_dualize(const HilbertSeries& h);

}  // namespace fbetti
