#include "fbetti/pushforward.hpp"

#include <algorithm>
#include <stdexcept>

#include "fbetti/errors.hpp"
#include "fbetti/lattice.hpp"

namespace fbetti {

namespace {

Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

// Residue-class scanning state for one (family, q).
class ClassScanner {
 public:
  ClassScanner(const RingFamily& family, const FrobeniusContext& ctx)
      : family_(family),
        gens_(algebra_generators(family)),
        q_(ctx.q()),
        n_(static_cast<std::size_t>(family.ambient_vars())),
        factor_(class_search_factor(family)) {}

  // a = residue + q*s is a minimal generator iff no a - q*g lies in the semigroup.
  bool is_minimal(const ExponentVector& a) const {
    for (const auto& g : gens_) {
      auto rest = a.minus(g, q_);
      if (rest && semigroup_member(family_, *rest)) return false;
    }
    return true;
  }

  // Calls fn(a) for every semigroup element a = residue + q*s with s in
  // [0, hi)^n and, when `shell_only`, max(s) == hi - 1.
  template <typename Fn>
  void for_each_member(const ExponentVector& residue, std::int64_t hi, bool shell_only, Fn&& fn) const {
    std::int64_t s[ExponentVector::kMaxArity] = {0, 0, 0};
    std::int64_t a[ExponentVector::kMaxArity] = {0, 0, 0};
    while (true) {
      bool on_shell = false;
      for (std::size_t i = 0; i < n_; ++i) {
        a[i] = residue[i] + q_ * s[i];
        on_shell = on_shell || s[i] == hi - 1;
      }
      if (!shell_only || on_shell) {
        ExponentVector v(a, n_);
        if (semigroup_member(family_, v)) fn(v);
      }
      std::size_t i = 0;
      while (i < n_ && ++s[i] == hi) s[i++] = 0;
      if (i == n_) break;
    }
  }

  // Minimal generators inside [0, F q)^n, audited against the next layer.
  std::vector<ExponentVector> minimal_generators(const ExponentVector& residue) const {
    std::vector<ExponentVector> found;
    for_each_member(residue, factor_, false, [&](const ExponentVector& a) {
      if (is_minimal(a)) found.push_back(a);
    });
    for_each_member(residue, factor_ + 1, true, [&](const ExponentVector& a) {
      if (is_minimal(a)) {
        throw internal_error("minimal generator " + a.to_string() + " of class " + residue.to_string() +
                             " lies outside the search box");
      }
    });
    return found;
  }

  std::size_t n() const { return n_; }

 private:
  RingFamily family_;
  std::vector<ExponentVector> gens_;
  std::int64_t q_;
  std::size_t n_;
  std::int64_t factor_;
};

SummandClass classify_by_mu(const RingFamily& family, std::size_t mu, const ExponentVector& residue) {
  switch (family.kind()) {
    case FamilyKind::ScrollDelta:
      if (mu >= 1 && mu <= static_cast<std::size_t>(family.delta())) {
        return SummandClass::scroll_m(family, static_cast<int>(mu) - 1);
      }
      break;
    case FamilyKind::Scroll21:
      if (mu == 1) return SummandClass::free(family);
      if (mu == 2) return SummandClass::of(family, SummandTag::A);
      if (mu == 3) return SummandClass::of(family, SummandTag::BorC);
      break;
    case FamilyKind::Veronese2:
      if (mu == 1) return SummandClass::free(family);
      if (mu == 3) return SummandClass::of(family, SummandTag::A);
      break;
  }
  throw internal_error("residue class " + residue.to_string() + " of " + family.designator() + " has " +
                       std::to_string(mu) + " generators, matching no rank-one indecomposable");
}

void require_q_above(const RingFamily& family, const FrobeniusContext& ctx, std::int64_t bound) {
  if (ctx.q() <= bound) {
    throw std::invalid_argument("index sets for " + family.designator() + " require q > " + std::to_string(bound) +
                                ", got q=" + std::to_string(ctx.q()));
  }
}

std::map<SummandClass, Integer> zero_table(const RingFamily& family) {
  std::map<SummandClass, Integer> out;
  for (const auto& cls : pushforward_summands(family)) out.emplace(cls, 0);
  return out;
}

}  // namespace

std::string route_name(Route route) { return route == Route::PaperIndexSets ? "paper" : "classes"; }

Route parse_route(const std::string& name) {
  if (name == "paper") return Route::PaperIndexSets;
  if (name == "classes") return Route::ResidueClasses;
  throw std::invalid_argument("unknown route '" + name + "' (expected paper or classes)");
}

Integer Decomposition::multiplicity(const SummandClass& cls) const {
  auto it = multiplicities.find(cls);
  return it == multiplicities.end() ? Integer(0) : it->second;
}

Integer Decomposition::total_rank() const {
  Integer total = 0;
  for (const auto& [cls, m] : multiplicities) total += m * cls.rank();
  return total;
}

Integer Decomposition::total_generators() const {
  Integer total = 0;
  for (const auto& [cls, m] : multiplicities) total += m * cls.mu();
  return total;
}

std::vector<Integer> scroll_index_counts(int delta, const FrobeniusContext& ctx) {
  const RingFamily family = RingFamily::scroll(delta);
  require_q_above(family, ctx, delta);
  const std::int64_t q = ctx.q();
  std::vector<Integer> counts;
  for (std::int64_t l = 0; l < delta; ++l) {
    counts.push_back(count_congruence_box({l * q, (l + 1) * q}, {0, q}, delta, 0));
  }
  return counts;
}

std::optional<int> scroll21_index_set(const FrobeniusContext& ctx, const ExponentVector& ijk) {
  if (ijk.size() != 3) throw std::invalid_argument("scroll21_index_set: expected (i, j, k)");
  const std::int64_t q = ctx.q();
  const std::int64_t i = ijk[0], j = ijk[1], k = ijk[2];
  if ((i + j + k) % 2 != 0 || j >= q || k >= q) return std::nullopt;
  if (i < q) {
    if (i + j >= k) return 1;
    return std::nullopt;
  }
  if (i >= 2 * q) return std::nullopt;
  const std::int64_t spread = i + j - k;
  if (spread >= 0 && spread < 2 * q) return 2;
  if (spread >= 2 * q) return 3;
  return std::nullopt;
}

Scroll21IndexCounts scroll21_index_counts(const FrobeniusContext& ctx) {
  require_q_above(RingFamily::scroll21(), ctx, 2);
  const std::int64_t q = ctx.q();
  Scroll21IndexCounts out{0, 0, 0};
  // Layer by (i, k); j ranges over an interval with fixed parity.
  for (std::int64_t k = 0; k < q; ++k) {
    for (std::int64_t i = 0; i < q; ++i) {
      out.p1 += count_residue_in_range(std::max<std::int64_t>(0, k - i), q, 2, i + k);
    }
    for (std::int64_t i = q; i < 2 * q; ++i) {
      const std::int64_t split = std::clamp<std::int64_t>(2 * q - i + k, 0, q);
      out.p2 += count_residue_in_range(0, split, 2, i + k);
      out.p3 += count_residue_in_range(split, q, 2, i + k);
    }
  }
  return out;
}

VeroneseClassCounts veronese_class_counts(const FrobeniusContext& ctx) {
  require_legal_characteristic(RingFamily::veronese2(), ctx);
  return {count_parity_box3(ctx.q(), 0), count_parity_box3(ctx.q(), 1)};
}

std::int64_t class_search_factor(const RingFamily& family) {
  // Past F q in any coordinate some a - q g stays in the semigroup:
  // scroll:d subtracts q(d,0) or q(0,d); scroll21 needs F = 3; veronese2 F = 2.
  return std::max<std::int64_t>(3, max_generator_coordinate(family));
}

ClassModule class_minimal_generators(const RingFamily& family, const FrobeniusContext& ctx,
                                     const ExponentVector& residue) {
  require_legal_characteristic(family, ctx);
  if (!coprime_to_torsion(family, ctx)) {
    throw std::invalid_argument("residue classes of " + family.designator() + " need gcd(p, " +
                                std::to_string(family.torsion_index()) + ") = 1, got p=" + std::to_string(ctx.p()));
  }
  if (residue.size() != static_cast<std::size_t>(family.ambient_vars())) {
    throw std::invalid_argument("class_minimal_generators: residue has wrong arity");
  }
  for (std::size_t i = 0; i < residue.size(); ++i) {
    if (residue[i] >= ctx.q()) throw std::invalid_argument("class_minimal_generators: residue outside [0, q)");
  }
  ClassScanner scanner(family, ctx);
  auto gens = scanner.minimal_generators(residue);
  std::sort(gens.begin(), gens.end());
  return ClassModule{family, ctx, residue, std::move(gens)};
}

bool route_available(const RingFamily& family, const FrobeniusContext& ctx, Route route, std::string* reason) {
  auto fail = [&](std::string why) {
    if (reason) *reason = std::move(why);
    return false;
  };
  if (family.kind() == FamilyKind::Veronese2 && ctx.p() == 2) return fail("veronese2 requires p != 2");
  if (route == Route::ResidueClasses) {
    if (!coprime_to_torsion(family, ctx)) {
      return fail("residue classes need gcd(p, " + std::to_string(family.torsion_index()) + ") = 1");
    }
    if (ctx.normalizer(family) > kMaxResidueClasses) {
      return fail("q^d = " + to_string(ctx.normalizer(family)) + " residue classes exceeds the enumeration limit");
    }
    return true;
  }
  switch (family.kind()) {
    case FamilyKind::ScrollDelta:
      if (ctx.q() <= family.delta()) return fail("index sets P(l) require q > delta");
      return true;
    case FamilyKind::Scroll21:
      if (ctx.p() == 2) return fail("scroll21 index sets require p odd");
      if (ctx.q() <= 2) return fail("scroll21 index sets require q > 2");
      return true;
    case FamilyKind::Veronese2:
      return true;
  }
  return false;
}

Route preferred_route(const RingFamily& family, const FrobeniusContext& ctx) {
  if (route_available(family, ctx, Route::ResidueClasses)) return Route::ResidueClasses;
  if (route_available(family, ctx, Route::PaperIndexSets)) return Route::PaperIndexSets;
  throw std::invalid_argument("no decomposition route available for " + family.designator() +
                              " at q=" + std::to_string(ctx.q()));
}

Decomposition decompose(const RingFamily& family, const FrobeniusContext& ctx, Route route) {
  std::string reason;
  if (!route_available(family, ctx, route, &reason)) {
    throw std::invalid_argument("route '" + route_name(route) + "' unavailable for " + family.designator() +
                                " at p=" + std::to_string(ctx.p()) + ", q=" + std::to_string(ctx.q()) + ": " +
                                reason);
  }
  Decomposition out{family, ctx, route, zero_table(family)};

  if (route == Route::PaperIndexSets) {
    switch (family.kind()) {
      case FamilyKind::ScrollDelta: {
        const auto counts = scroll_index_counts(family.delta(), ctx);
        for (int l = 0; l < family.delta(); ++l) out.multiplicities[SummandClass::scroll_m(family, l)] = counts[l];
        break;
      }
      case FamilyKind::Scroll21: {
        const auto counts = scroll21_index_counts(ctx);
        out.multiplicities[SummandClass::free(family)] = counts.p1;
        out.multiplicities[SummandClass::of(family, SummandTag::A)] = counts.p2;
        out.multiplicities[SummandClass::of(family, SummandTag::BorC)] = counts.p3;
        break;
      }
      case FamilyKind::Veronese2: {
        const auto counts = veronese_class_counts(ctx);
        out.multiplicities[SummandClass::free(family)] = counts.free;
        out.multiplicities[SummandClass::of(family, SummandTag::A)] = counts.canonical;
        break;
      }
    }
    return out;
  }

  const ClassScanner scanner(family, ctx);
  const std::size_t n = scanner.n();
  const std::int64_t q = ctx.q();
  // Tally by mu first; classification happens once per distinct mu.
  std::map<std::size_t, std::pair<std::int64_t, ExponentVector>> by_mu;
  std::int64_t r[ExponentVector::kMaxArity] = {0, 0, 0};
  while (true) {
    const ExponentVector residue(r, n);
    const std::size_t mu = scanner.minimal_generators(residue).size();
    auto [it, inserted] = by_mu.try_emplace(mu, 0, residue);
    ++it->second.first;
    std::size_t i = 0;
    while (i < n && ++r[i] == q) r[i++] = 0;
    if (i == n) break;
  }
  for (const auto& [mu, tally] : by_mu) {
    out.multiplicities[classify_by_mu(family, mu, tally.second)] += to_integer(tally.first);
  }
  return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> scroll_index_set(int delta, const FrobeniusContext& ctx, int l) {
  if (l < 0 || l >= delta) throw std::invalid_argument("scroll_index_set: need 0 <= l < delta");
  const std::int64_t q = ctx.q();
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t i = l * q; i < (l + 1) * q; ++i) {
    for (std::int64_t j = 0; j < q; ++j) {
      if ((i + j) % delta == 0) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<std::int64_t> scroll_summand_dimensions(int delta, const FrobeniusContext& ctx, int l,
                                                    std::pair<std::int64_t, std::int64_t> ij, int steps) {
  const std::int64_t q = ctx.q();
  const auto [i, j] = ij;
  if (q <= delta) throw std::invalid_argument("verify_summand_iso_scroll: requires q > delta");
  if (l < 0 || l >= delta || i < l * q || i >= (l + 1) * q || j < 0 || j >= q || (i + j) % delta != 0) {
    throw std::invalid_argument("(" + std::to_string(i) + "," + std::to_string(j) + ") is not in P(" +
                                std::to_string(l) + ")");
  }
  std::vector<std::int64_t> dims;
  for (std::int64_t k = 0; k < steps; ++k) {
    // Exponents of x^{(i - mq)/q} y^{(j + mq)/q} * x^{kd - t} y^t, scaled by q.
    std::vector<std::pair<std::int64_t, std::int64_t>> monomials;
    for (std::int64_t m = 0; m <= l; ++m) {
      for (std::int64_t t = 0; t <= k * delta; ++t) {
        monomials.emplace_back(i - m * q + (k * delta - t) * q, j + m * q + t * q);
      }
    }
    std::sort(monomials.begin(), monomials.end());
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
    dims.push_back(static_cast<std::int64_t>(monomials.size()));
  }
  return dims;
}

bool verify_summand_iso_scroll(int delta, const FrobeniusContext& ctx, int l,
                               std::pair<std::int64_t, std::int64_t> ij, int steps) {
  const auto dims = scroll_summand_dimensions(delta, ctx, l, ij, steps);
  for (std::int64_t k = 0; k < steps; ++k) {
    if (dims[static_cast<std::size_t>(k)] != k * delta + l + 1) return false;
  }
  return true;
}

bool verify_relations_scroll21(const FrobeniusContext& ctx, const ExponentVector& ijk) {
  const auto set = scroll21_index_set(ctx, ijk);
  if (!set || *set == 1) {
    throw std::invalid_argument(ijk.to_string() + " is not in P(2) or P(3) for q=" + std::to_string(ctx.q()));
  }
  const RingFamily family = RingFamily::scroll21();
  const std::int64_t q = ctx.q();
  const ExponentVector xy{1, 1, 0}, xz{1, 0, 1}, xx{2, 0, 0};

  const ExponentVector& g0 = ijk;
  const auto g1 = ijk.minus(ExponentVector{1, 0, 0}, q);
  if (!g1 || !semigroup_member(family, g0)) return false;
  const ExponentVector g1v = g1->plus(ExponentVector{0, 1, 0}, q);
  if (!semigroup_member(family, g1v)) return false;
  if (g0.plus(xy, q) != g1v.plus(xx, q)) return false;

  if (*set == 3) {
    const ExponentVector g2 = g1->plus(ExponentVector{0, 0, 1}, q);
    if (!semigroup_member(family, g2)) return false;
    if (g0.plus(xz, q) != g2.plus(xx, q)) return false;
  }
  return true;
}

}  // namespace fbetti
