#include "fbetti/arith.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fbetti {

std::string to_string(const Integer& value) { return value.get_str(); }

Integer power(const Integer& base, unsigned long exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }

Rational operator/(const Rational& a, const Rational& b) {
  if (b.value_ == 0) throw std::domain_error("Rational: division by zero");
  return Rational(mpq_class(a.value_ / b.value_));
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational abs(const Rational& value) { return value < Rational(0) ? -value : value; }

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

Polynomial::Polynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::monomial(const Integer& c, long degree) {
  if (degree < 0) throw std::domain_error("Polynomial::monomial: negative degree");
  std::vector<Integer> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer Polynomial::coefficient(long degree) const {
  if (degree < 0 || degree > this->degree()) return 0;
  return coeffs_[static_cast<std::size_t>(degree)];
}

long Polynomial::order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return static_cast<long>(i);
  }
  return kZeroDegree;
}

Integer Polynomial::evaluate(const Integer& t) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Integer& c, const Polynomial& p) {
  std::vector<Integer> out = p.coeffs_;
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<Integer> out = coeffs_;
  for (auto& x : out) x = -x;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::shifted(long shift) const {
  if (is_zero() || shift == 0) return *this;
  if (shift > 0) {
    std::vector<Integer> out(static_cast<std::size_t>(shift));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(out));
  }
  const long drop = -shift;
  if (order() < drop) throw std::domain_error("Polynomial::shifted: nonzero coefficient in negative degree");
  return Polynomial(std::vector<Integer>(coeffs_.begin() + drop, coeffs_.end()));
}

Polynomial Polynomial::reversed(long total) const {
  if (is_zero()) return {};
  if (degree() > total) throw std::domain_error("Polynomial::reversed: degree exceeds reversal length");
  std::vector<Integer> out(static_cast<std::size_t>(total) + 1);
  for (long i = 0; i <= degree(); ++i) out[static_cast<std::size_t>(total - i)] = coeffs_[static_cast<std::size_t>(i)];
  return Polynomial(std::move(out));
}

std::optional<Polynomial> Polynomial::divide_by_one_minus_tpow(long step) const {
  if (step < 1) throw std::domain_error("divide_by_one_minus_tpow: step must be positive");
  if (is_zero()) return Polynomial{};
  // N = (1 - t^s) Q  <=>  Q_n = N_n + Q_{n-s}, with Q_n = 0 above deg N - s.
  const long n = degree();
  std::vector<Integer> q(static_cast<std::size_t>(n) + 1);
  for (long i = 0; i <= n; ++i) {
    q[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)];
    if (i >= step) q[static_cast<std::size_t>(i)] += q[static_cast<std::size_t>(i - step)];
  }
  for (long i = std::max(0L, n - step + 1); i <= n; ++i) {
    if (q[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  }
  q.resize(static_cast<std::size_t>(std::max(0L, n - step + 1)));
  return Polynomial(std::move(q));
}

std::string Polynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = 0; i <= degree(); ++i) {
    Integer c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Integer mag = c < 0 ? Integer(-c) : c;
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

Polynomial one_minus_tpow(long step, long exponent) {
  Polynomial base = Polynomial{1} - Polynomial::monomial(1, step);
  Polynomial out{1};
  for (long i = 0; i < exponent; ++i) out = out * base;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// HilbertSeries

HilbertSeries::HilbertSeries(Polynomial numerator, long pole_order, long step)
    : numerator_(std::move(numerator)), pole_order_(pole_order), step_(step) {
  if (pole_order_ < 0) throw std::domain_error("HilbertSeries: negative pole order");
  if (step_ < 1) throw std::domain_error("HilbertSeries: step must be positive");
  canonicalize();
}

void HilbertSeries::canonicalize() {
  if (numerator_.is_zero()) {
    pole_order_ = 0;
    step_ = 1;
    return;
  }
  while (pole_order_ > 0) {
    auto q = numerator_.divide_by_one_minus_tpow(step_);
    if (!q) break;
    numerator_ = std::move(*q);
    --pole_order_;
  }
  if (pole_order_ == 0) step_ = 1;
}

HilbertSeries HilbertSeries::rewritten(long pole_order, long step) const {
  if (pole_order < pole_order_ || step % step_ != 0) {
    throw std::domain_error("HilbertSeries::rewritten: target denominator is not a multiple");
  }
  // 1 - t^L = (1 - t^s)(1 + t^s + ... + t^{L-s}).
  std::vector<Integer> geometric(static_cast<std::size_t>(step - step_) + 1);
  for (long k = 0; k <= step - step_; k += step_) geometric[static_cast<std::size_t>(k)] = 1;
  const Polynomial ratio(std::move(geometric));

  Polynomial num = numerator_;
  for (long i = 0; i < pole_order_; ++i) num = num * ratio;
  num = num * one_minus_tpow(step, pole_order - pole_order_);
  HilbertSeries out;
  out.numerator_ = std::move(num);
  out.pole_order_ = pole_order;
  out.step_ = step;
  return out;
}

namespace {

std::pair<HilbertSeries, HilbertSeries> common_denominator(const HilbertSeries& a, const HilbertSeries& b) {
  const long step = std::lcm(a.step(), b.step());
  const long pole = std::max(a.pole_order(), b.pole_order());
  return {a.rewritten(pole, step), b.rewritten(pole, step)};
}

}  // namespace

HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b) {
  auto [x, y] = common_denominator(a, b);
  return HilbertSeries(x.numerator() + y.numerator(), x.pole_order(), x.step());
}

HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b) {
  auto [x, y] = common_denominator(a, b);
  return HilbertSeries(x.numerator() - y.numerator(), x.pole_order(), x.step());
}

HilbertSeries operator*(const Polynomial& p, const HilbertSeries& h) {
  return HilbertSeries(p * h.numerator_, h.pole_order_, h.step_);
}

HilbertSeries operator*(const Integer& c, const HilbertSeries& h) {
  return HilbertSeries(c * h.numerator_, h.pole_order_, h.step_);
}

bool operator==(const HilbertSeries& a, const HilbertSeries& b) { return (a - b).is_zero(); }

std::string HilbertSeries::to_string() const {
  std::string num = "(" + numerator_.to_string() + ")";
  if (pole_order_ == 0) return num;
  std::string den = step_ == 1 ? "(1 - t)" : "(1 - t^" + std::to_string(step_) + ")";
  if (pole_order_ > 1) den += "^" + std::to_string(pole_order_);
  return num + "/" + den;
}

std::ostream& operator<<(std::ostream& os, const HilbertSeries& h) { return os << h.to_string(); }

std::vector<Integer> series_coefficients(const HilbertSeries& h, long upto) {
  if (upto < 0) throw std::domain_error("series_coefficients: upto must be nonnegative");
  std::vector<Integer> c(static_cast<std::size_t>(upto) + 1);
  for (long i = 0; i <= std::min(upto, h.numerator().degree()); ++i) c[static_cast<std::size_t>(i)] = h.numerator().coefficient(i);
  // Each factor 1/(1 - t^s) is a stride-s prefix sum.
  const long s = h.step();
  for (long pass = 0; pass < h.pole_order(); ++pass) {
    for (long n = s; n <= upto; ++n) c[static_cast<std::size_t>(n)] += c[static_cast<std::size_t>(n - s)];
  }
  return c;
}

HilbertSeries series_shift(const HilbertSeries& h, long shift) {
  return HilbertSeries(h.numerator().shifted(shift), h.pole_order(), h.step());
}

HilbertSeries series_dualize(const HilbertSeries& h) {
  if (h.pole_order() < 1) throw std::domain_error("series_dualize: pole order must be at least 1");
  // (-1)^d N(1/t) / (1 - t^{-s})^d = t^{sd} N(1/t) / (1 - t^s)^d.
  const long total = h.step() * h.pole_order();
  if (h.numerator().degree() > total) {
    throw std::domain_error("series_dualize: dual has terms in negative degree");
  }
  return HilbertSeries(h.numerator().reversed(total), h.pole_order(), h.step());
}

}  // namespace fbetti
