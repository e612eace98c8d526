#include "fbetti/rings.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace fbetti {

RingFamily RingFamily::scroll(int delta) {
  if (delta < 2) throw std::invalid_argument("scroll: delta must be at least 2, got " + std::to_string(delta));
  return RingFamily(FamilyKind::ScrollDelta, delta);
}

RingFamily RingFamily::scroll21() { return RingFamily(FamilyKind::Scroll21, 0); }
RingFamily RingFamily::veronese2() { return RingFamily(FamilyKind::Veronese2, 0); }

RingFamily RingFamily::parse(std::string_view designator) {
  if (designator == "scroll21") return scroll21();
  if (designator == "veronese2") return veronese2();
  constexpr std::string_view prefix = "scroll:";
  if (designator.substr(0, prefix.size()) == prefix) {
    std::string_view digits = designator.substr(prefix.size());
    int delta = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), delta);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) return scroll(delta);
  }
  throw std::invalid_argument("unknown ring family '" + std::string(designator) +
                              "' (expected scroll:<delta>, scroll21 or veronese2)");
}

std::string RingFamily::designator() const {
  switch (kind_) {
    case FamilyKind::ScrollDelta: return "scroll:" + std::to_string(delta_);
    case FamilyKind::Scroll21: return "scroll21";
    case FamilyKind::Veronese2: return "veronese2";
  }
  return {};
}

// ---------------------------------------------------------------------------

ExponentVector::ExponentVector(std::initializer_list<std::int64_t> coords)
    : ExponentVector(coords.begin(), coords.size()) {}

ExponentVector::ExponentVector(const std::int64_t* coords, std::size_t size) : size_(size) {
  if (size > kMaxArity) throw std::invalid_argument("ExponentVector: arity above 3");
  for (std::size_t i = 0; i < size; ++i) {
    if (coords[i] < 0) throw std::invalid_argument("ExponentVector: negative coordinate");
    coords_[i] = coords[i];
  }
}

std::int64_t ExponentVector::total_degree() const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < size_; ++i) s += coords_[i];
  return s;
}

ExponentVector ExponentVector::plus(const ExponentVector& other, std::int64_t scale) const {
  if (other.size_ != size_) throw std::invalid_argument("ExponentVector: arity mismatch");
  ExponentVector out = *this;
  for (std::size_t i = 0; i < size_; ++i) {
    out.coords_[i] += scale * other.coords_[i];
    if (out.coords_[i] < 0) throw std::invalid_argument("ExponentVector: negative coordinate");
  }
  return out;
}

std::optional<ExponentVector> ExponentVector::minus(const ExponentVector& other, std::int64_t scale) const {
  if (other.size_ != size_) throw std::invalid_argument("ExponentVector: arity mismatch");
  ExponentVector out = *this;
  for (std::size_t i = 0; i < size_; ++i) {
    out.coords_[i] -= scale * other.coords_[i];
    if (out.coords_[i] < 0) return std::nullopt;
  }
  return out;
}

bool operator==(const ExponentVector& a, const ExponentVector& b) {
  if (a.size_ != b.size_) return false;
  for (std::size_t i = 0; i < a.size_; ++i) {
    if (a.coords_[i] != b.coords_[i]) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  for (std::size_t i = 0; i < a.size_; ++i) {
    if (auto c = a.coords_[i] <=> b.coords_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string ExponentVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < size_; ++i) {
    if (i) out += ",";
    out += std::to_string(coords_[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FrobeniusContext::FrobeniusContext(std::int64_t p, int e) : p_(p), e_(e), q_(1) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (e < 0) throw std::invalid_argument("Frobenius exponent e must be nonnegative");
  for (int i = 0; i < e; ++i) {
    if (q_ > std::numeric_limits<std::int64_t>::max() / p) throw std::invalid_argument("q = p^e overflows");
    q_ *= p;
  }
}

FrobeniusContext FrobeniusContext::from_q(std::int64_t q) {
  if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
  std::int64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  int e = 0;
  std::int64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return FrobeniusContext(p, e);
}

FrobeniusContext FrobeniusContext::for_family(const RingFamily& family, std::int64_t p, int e) {
  FrobeniusContext ctx(p, e);
  require_legal_characteristic(family, ctx);
  return ctx;
}

Integer FrobeniusContext::normalizer(const RingFamily& family) const {
  return power(Integer(static_cast<long>(q_)), static_cast<unsigned long>(family.krull_dim()));
}

void require_legal_characteristic(const RingFamily& family, const FrobeniusContext& ctx) {
  if (family.kind() == FamilyKind::Veronese2 && ctx.p() == 2) {
    throw std::invalid_argument(
        "veronese2 requires characteristic p != 2: it is the Z/2 invariant ring of k[x,y,z], "
        "which needs char k > 2");
  }
}

bool coprime_to_torsion(const RingFamily& family, const FrobeniusContext& ctx) {
  return std::gcd(ctx.p(), static_cast<std::int64_t>(family.torsion_index())) == 1;
}

// ---------------------------------------------------------------------------

bool semigroup_member(const RingFamily& family, const ExponentVector& a) {
  if (a.size() != static_cast<std::size_t>(family.ambient_vars())) {
    throw std::invalid_argument("semigroup_member: expected " + std::to_string(family.ambient_vars()) +
                                " coordinates, got " + std::to_string(a.size()));
  }
  switch (family.kind()) {
    case FamilyKind::ScrollDelta:
      return (a[0] + a[1]) % family.delta() == 0;
    case FamilyKind::Scroll21:
      return a[0] + a[1] >= a[2] && (a[0] + a[1] + a[2]) % 2 == 0;
    case FamilyKind::Veronese2:
      return (a[0] + a[1] + a[2]) % 2 == 0;
  }
  return false;
}

std::vector<ExponentVector> algebra_generators(const RingFamily& family) {
  switch (family.kind()) {
    case FamilyKind::ScrollDelta: {
      std::vector<ExponentVector> gens;
      const std::int64_t d = family.delta();
      for (std::int64_t k = 0; k <= d; ++k) gens.push_back({d - k, k});
      return gens;
    }
    case FamilyKind::Scroll21:
      return {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}};
    case FamilyKind::Veronese2:
      return {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  }
  return {};
}

std::int64_t max_generator_coordinate(const RingFamily& family) {
  return family.kind() == FamilyKind::ScrollDelta ? family.delta() : 2;
}

bool frobenius_power_member(const RingFamily& family, const FrobeniusContext& ctx, const ExponentVector& a) {
  if (!semigroup_member(family, a)) {
    throw std::invalid_argument("frobenius_power_member: " + a.to_string() + " is not in the ring");
  }
  for (const auto& g : algebra_generators(family)) {
    auto rest = a.minus(g, ctx.q());
    if (rest && semigroup_member(family, *rest)) return true;
  }
  return false;
}

}  // namespace fbetti
