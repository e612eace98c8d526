#include "fbetti/invariants.hpp"

#include <sstream>
#include <stdexcept>

#include "fbetti/errors.hpp"

namespace fbetti {

namespace {

Rational pow_rational(long base, int exponent) { return Rational(power(Integer(base), static_cast<unsigned long>(exponent))); }

Rational q_rational(std::int64_t q) { return Rational(Integer(static_cast<long>(q))); }

constexpr int kFbettiBoundMaxI = 4;

}  // namespace

Rational closed_form_s(const RingFamily& family) {
  switch (family.kind()) {
    case FamilyKind::ScrollDelta: return Rational(1, family.delta());
    case FamilyKind::Scroll21: return Rational(5, 12);
    case FamilyKind::Veronese2: return Rational(1, 2);
  }
  return {};
}

Rational closed_form_ehk(const RingFamily& family) {
  switch (family.kind()) {
    case FamilyKind::ScrollDelta: return Rational(family.delta() + 1, 2);
    case FamilyKind::Scroll21: return Rational(7, 4);
    case FamilyKind::Veronese2: return Rational(2);
  }
  return {};
}

Rational closed_form_fbetti(const RingFamily& family, int i) {
  if (i < 0) throw std::invalid_argument("closed_form_fbetti: negative index");
  if (i == 0) return closed_form_ehk(family);
  switch (family.kind()) {
    case FamilyKind::ScrollDelta: {
      const long d = family.delta();
      return Rational(d) * pow_rational(d - 1, i) / Rational(2);
    }
    case FamilyKind::Scroll21: return Rational(9, 4) * pow_rational(2, i - 1);
    case FamilyKind::Veronese2: return Rational(4) * pow_rational(3, i - 1);
  }
  return {};
}

std::string fbetti_formula(const RingFamily& family) {
  switch (family.kind()) {
    case FamilyKind::ScrollDelta: {
      const int d = family.delta();
      return std::to_string(d) + "*" + std::to_string(d - 1) + "^i/2";
    }
    case FamilyKind::Scroll21: return "9/4*2^(i-1)";
    case FamilyKind::Veronese2: return "4*3^(i-1)";
  }
  return {};
}

std::vector<std::pair<SummandClass, Rational>> asymptotic_densities(const RingFamily& family) {
  std::vector<std::pair<SummandClass, Rational>> out;
  switch (family.kind()) {
    case FamilyKind::ScrollDelta:
      for (int l = 0; l < family.delta(); ++l) out.emplace_back(SummandClass::scroll_m(family, l), Rational(1, family.delta()));
      break;
    case FamilyKind::Scroll21:
      out.emplace_back(SummandClass::free(family), Rational(5, 12));
      out.emplace_back(SummandClass::of(family, SummandTag::A), Rational(5, 12));
      out.emplace_back(SummandClass::of(family, SummandTag::BorC), Rational(2, 12));
      break;
    case FamilyKind::Veronese2:
      out.emplace_back(SummandClass::free(family), Rational(1, 2));
      out.emplace_back(SummandClass::of(family, SummandTag::A), Rational(1, 2));
      break;
  }
  return out;
}

Rational density_betti(const RingFamily& family, int i) {
  Rational total;
  for (const auto& [cls, density] : asymptotic_densities(family)) total += density * Rational(betti(cls, i));
  return total;
}

Rational FiniteQEstimate::fbetti(int i) const {
  if (i == 0) return ehk_est;
  if (i < 1 || static_cast<std::size_t>(i) > fbetti_est.size()) {
    throw std::out_of_range("FiniteQEstimate::fbetti: index not sampled");
  }
  return fbetti_est[static_cast<std::size_t>(i - 1)];
}

InvariantReport limits(const RingFamily& family) {
  InvariantReport report{family, closed_form_s(family), closed_form_ehk(family), {}};
  const auto densities = asymptotic_densities(family);
  if (densities.front().second != report.s) {
    throw internal_error("free-summand density disagrees with s(R) for " + family.designator());
  }
  for (int i = 0; i <= 12; ++i) {
    if (density_betti(family, i) != report.fbetti(i)) {
      throw internal_error("density * Betti recomputation of beta_" + std::to_string(i) + "^F disagrees for " +
                           family.designator());
    }
  }
  return report;
}

Integer fbetti_pushforward(const Decomposition& decomposition, int i) {
  Integer total = 0;
  for (const auto& [cls, m] : decomposition.multiplicities) total += m * betti(cls, i);
  return total;
}

Integer fbetti_pushforward(const RingFamily& family, const FrobeniusContext& ctx, int i) {
  return fbetti_pushforward(decompose(family, ctx, preferred_route(family, ctx)), i);
}

FiniteQEstimate finite_q_estimates(const Decomposition& decomposition, int max_i) {
  const RingFamily& family = decomposition.family;
  const Rational norm(decomposition.ctx.normalizer(family));
  FiniteQEstimate est{decomposition.ctx.q(), decomposition.route, Rational(0), Rational(0), {}, std::nullopt};
  est.s_est = Rational(decomposition.multiplicity(SummandClass::free(family))) / norm;
  est.ehk_est = Rational(fbetti_pushforward(decomposition, 0)) / norm;
  for (int i = 1; i <= max_i; ++i) est.fbetti_est.push_back(Rational(fbetti_pushforward(decomposition, i)) / norm);
  if (family.kind() != FamilyKind::ScrollDelta) {
    est.canonical_est = Rational(decomposition.multiplicity(SummandClass::of(family, SummandTag::A))) / norm;
  }
  return est;
}

FiniteQEstimate finite_q_estimates(const RingFamily& family, const FrobeniusContext& ctx, int max_i) {
  return finite_q_estimates(decompose(family, ctx, preferred_route(family, ctx)), max_i);
}

bool ConvergenceReport::passed() const {
  if (!failures.empty()) return false;
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::string ConvergenceReport::describe_failures() const {
  std::ostringstream os;
  for (const auto& f : failures) os << family.designator() << ": " << f << "\n";
  for (const auto& c : checks) {
    if (c.passed) continue;
    os << family.designator() << " q=" << c.q << " " << c.quantity << ": |" << c.estimate << " - " << c.limit
       << "| = " << c.error << " > " << c.bound << "\n";
  }
  return os.str();
}

ConvergenceReport convergence_check(const RingFamily& family, std::span<const std::int64_t> q_list) {
  ConvergenceReport report{family, {}, {}};
  const InvariantReport lim = limits(family);
  const Rational beta1 = lim.fbetti(1);

  for (std::int64_t q : q_list) {
    FiniteQEstimate est;
    try {
      const auto ctx = FrobeniusContext::from_q(q);
      require_legal_characteristic(family, ctx);
      est = finite_q_estimates(family, ctx, kFbettiBoundMaxI);
    } catch (const std::invalid_argument& e) {
      report.failures.push_back("q=" + std::to_string(q) + ": " + e.what());
      continue;
    }
    const Rational envelope = Rational(4) / q_rational(q);
    auto add = [&](std::string name, const Rational& estimate, const Rational& limit, const Rational& bound) {
      const Rational error = abs(estimate - limit);
      report.checks.push_back({q, std::move(name), estimate, limit, error, bound, error <= bound});
    };
    add("s", est.s_est, lim.s, envelope);
    add("ehk", est.ehk_est, lim.ehk, envelope);
    for (int i = 1; i <= kFbettiBoundMaxI; ++i) {
      const Rational limit = lim.fbetti(i);
      add("beta_" + std::to_string(i), est.fbetti(i), limit, Rational(4) * limit / beta1 / q_rational(q));
    }
    if (est.canonical_est) add("canonical-vs-free", *est.canonical_est, est.s_est, envelope);
  }
  return report;
}

}  // namespace fbetti
