#include "fbetti/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "fbetti/errors.hpp"
#include "fbetti/mcm.hpp"

namespace fbetti::oracle {

namespace {

Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

// Visits every point of [0, hi)^n.
template <typename Fn>
void for_each_point(std::size_t n, std::int64_t hi, Fn&& fn) {
  std::int64_t a[ExponentVector::kMaxArity] = {0, 0, 0};
  while (true) {
    fn(ExponentVector(a, n));
    std::size_t i = 0;
    while (i < n && ++a[i] == hi) a[i++] = 0;
    if (i == n) break;
  }
}

bool dominated(const RingFamily& family, std::int64_t q, const ExponentVector& b, const ExponentVector& a) {
  // b <= a iff a - b = q s with s in the semigroup.
  std::int64_t s[ExponentVector::kMaxArity] = {0, 0, 0};
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t d = a[i] - b[i];
    if (d < 0 || d % q != 0) return false;
    s[i] = d / q;
  }
  return semigroup_member(family, ExponentVector(s, a.size()));
}

bool direct_minimal(const RingFamily& family, std::int64_t q, const std::vector<ExponentVector>& gens,
                    const ExponentVector& a) {
  for (const auto& g : gens) {
    auto rest = a.minus(g, q);
    if (rest && semigroup_member(family, *rest)) return false;
  }
  return true;
}

using SparseRow = std::map<std::pair<int, std::int64_t>, Rational>;

// Incremental row echelon form over Q; returns the rank.
std::size_t rank_over_rationals(const std::vector<SparseRow>& rows) {
  std::map<std::pair<int, std::int64_t>, SparseRow> pivots;
  for (SparseRow row : rows) {
    while (!row.empty()) {
      const auto [col, lead] = *row.begin();
      auto it = pivots.find(col);
      if (it == pivots.end()) {
        for (auto& [c, v] : row) v /= lead;
        pivots.emplace(col, std::move(row));
        break;
      }
      for (const auto& [c, v] : it->second) {
        Rational& entry = row[c];
        entry -= lead * v;
        if (entry == Rational(0)) row.erase(c);
      }
    }
  }
  return pivots.size();
}

}  // namespace

ColengthResult lambda_frobenius_quotient(const RingFamily& family, const FrobeniusContext& ctx) {
  const std::int64_t q = ctx.q();
  const std::int64_t hi = 2 * q * max_generator_coordinate(family);
  const std::size_t n = static_cast<std::size_t>(family.ambient_vars());
  std::int64_t lambda = 0;
  for_each_point(n, hi, [&](const ExponentVector& a) {
    if (!semigroup_member(family, a)) return;
    const bool in_frobenius_power = frobenius_power_member(family, ctx, a);
    if (!in_frobenius_power) ++lambda;
    bool on_shell = false;
    for (std::size_t i = 0; i < n; ++i) on_shell = on_shell || a[i] == hi - 1;
    if (on_shell && !in_frobenius_power) {
      throw internal_error("colength audit: " + a.to_string() + " on the outer shell is not in m^[q]");
    }
  });
  const Integer lam = to_integer(lambda);
  return {family, ctx, lam, Rational(lam) / Rational(ctx.normalizer(family))};
}

Integer min_gens_pushforward(const RingFamily& family, const FrobeniusContext& ctx) {
  if (!coprime_to_torsion(family, ctx)) {
    throw std::invalid_argument("min_gens_pushforward: gcd(p, torsion_index) must be 1");
  }
  const std::int64_t q = ctx.q();
  const std::int64_t span = 2 * max_generator_coordinate(family);
  const std::size_t n = static_cast<std::size_t>(family.ambient_vars());
  const auto gens = algebra_generators(family);

  Integer total = 0;
  for_each_point(n, q, [&](const ExponentVector& residue) {
    std::vector<ExponentVector> members;
    for_each_point(n, span, [&](const ExponentVector& s) {
      const ExponentVector a = residue.plus(s, q);
      if (semigroup_member(family, a)) members.push_back(a);
    });
    std::stable_sort(members.begin(), members.end(), [](const ExponentVector& x, const ExponentVector& y) {
      return x.total_degree() < y.total_degree();
    });
    std::vector<ExponentVector> antichain;
    for (const auto& a : members) {
      const bool covered = std::any_of(antichain.begin(), antichain.end(),
                                       [&](const ExponentVector& b) { return dominated(family, q, b, a); });
      if (!covered) antichain.push_back(a);
    }
    for (const auto& a : antichain) {
      if (!direct_minimal(family, q, gens, a)) {
        throw internal_error("min_gens_pushforward: antichain element " + a.to_string() + " is not minimal");
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] >= (span - 1) * q) {
          throw internal_error("min_gens_pushforward: generator " + a.to_string() + " touches the box boundary");
        }
      }
    }
    total += static_cast<unsigned long>(antichain.size());
  });
  return total;
}

std::vector<Integer> scroll_syzygy_span_dimensions(int delta, int l, int steps) {
  const auto syzygies = syzygy_generating_set_scroll(delta, l);
  std::vector<Integer> dims;
  for (int k = 0; k < steps; ++k) {
    const std::int64_t r_degree = static_cast<std::int64_t>(k) * delta;
    std::vector<SparseRow> rows;
    for (std::int64_t t = 0; t <= r_degree; ++t) {
      // R_{k delta} is spanned by x^{k delta - t} y^t.
      for (const auto& sz : syzygies) {
        SparseRow row;
        for (const auto* term : {&sz.positive, &sz.negative}) {
          // Column: (basis index, x-exponent); the y-exponent is fixed by the degree.
          row[{term->basis, term->monomial[0] + (r_degree - t)}] += Rational(term->coefficient);
        }
        rows.push_back(std::move(row));
      }
    }
    dims.push_back(static_cast<unsigned long>(rank_over_rationals(rows)));
  }
  return dims;
}

bool verify_scroll_syzygy(int delta, int l) {
  const auto syzygies = syzygy_generating_set_scroll(delta, l);
  if (syzygies.size() != static_cast<std::size_t>(delta) * static_cast<std::size_t>(l)) return false;

  // (a) image in M(l) vanishes: e_m -> x^{l-m+1} y^{m-1}.
  for (const auto& sz : syzygies) {
    auto image = [&](const SyzygyTerm& term) {
      return term.monomial.plus(ExponentVector{l - term.basis + 1, term.basis - 1});
    };
    if (image(sz.positive) != image(sz.negative) || sz.positive.coefficient + sz.negative.coefficient != 0) {
      return false;
    }
  }

  // (b)/(c) graded dimensions against l t^{l+1} H(M(delta-1), t).
  const RingFamily family = RingFamily::scroll(delta);
  const HilbertSeries expected =
      Polynomial::monomial(l, l + 1) * module_hilbert_series(SummandClass::scroll_m(family, delta - 1));
  const HilbertSeries module = module_hilbert_series(SummandClass::scroll_m(family, l));
  const long top = l + 1 + 4L * delta;
  const auto coeffs = series_coefficients(expected, top);
  const auto module_coeffs = series_coefficients(module, top);

  const int steps = static_cast<int>((top - l) / delta);
  const auto spans = scroll_syzygy_span_dimensions(delta, l, steps);
  for (long degree = 0; degree <= top; ++degree) {
    const bool generator_degree = degree >= delta + l && (degree - l) % delta == 0;
    if (!generator_degree) {
      if (coeffs[static_cast<std::size_t>(degree)] != 0) return false;
      continue;
    }
    const std::size_t k = static_cast<std::size_t>((degree - l) / delta - 1);
    if (k >= spans.size()) continue;
    if (spans[k] != coeffs[static_cast<std::size_t>(degree)]) return false;
    // Kernel of R(-l)^{l+1} -> M(l) in this degree.
    const Integer free_dim = Integer(l + 1) * Integer(degree - l + 1);
    if (free_dim - module_coeffs[static_cast<std::size_t>(degree)] != spans[k]) return false;
  }
  return true;
}

std::optional<std::pair<int, int>> veronese_sequence_shifts() {
  const HilbertSeries ring(Polynomial{1, 3}, 3);
  const HilbertSeries canonical = series_dualize(ring);
  const HilbertSeries syzygy = Polynomial::monomial(3, 2) * ring - canonical;
  for (int s = 0; s <= 4; ++s) {
    for (int s_prime = 0; s_prime <= 4; ++s_prime) {
      if (series_shift(ring, s) + syzygy == Polynomial::monomial(3, s_prime) * canonical) {
        return std::make_pair(s, s_prime);
      }
    }
  }
  return std::nullopt;
}

bool verify_veronese_sequences() {
  const RingFamily family = RingFamily::veronese2();
  const HilbertSeries ring(Polynomial{1, 3}, 3);
  const HilbertSeries canonical = series_dualize(ring);
  const HilbertSeries syzygy = Polynomial::monomial(3, 2) * ring - canonical;

  if (canonical != HilbertSeries(Polynomial{0, 0, 3, 1}, 3)) return false;
  if (syzygy != HilbertSeries(Polynomial::monomial(8, 3), 3)) return false;
  if (module_hilbert_series(SummandClass::free(family)) != ring) return false;
  if (module_hilbert_series(SummandClass::of(family, SummandTag::A)) != canonical) return false;
  if (module_hilbert_series(SummandClass::of(family, SummandTag::B)) != syzygy) return false;

  const auto a = series_coefficients(canonical, 40);
  const auto b = series_coefficients(syzygy, 40);
  if (a[2] != 3 || b[2] != 0 || b[3] != 8) return false;

  // 3 H(A) - H(B) is the series of a rank-one module: nonnegative, multiplicity e(R).
  const HilbertSeries cokernel = Integer(3) * canonical - syzygy;
  for (const auto& c : series_coefficients(cokernel, 40)) {
    if (c < 0) return false;
  }
  auto multiplicity = [](const HilbertSeries& h) {
    return h.pole_order() == 3 ? h.numerator().evaluate(1) : Integer(0);
  };
  if (multiplicity(cokernel) != multiplicity(ring)) return false;

  return veronese_sequence_shifts() == std::make_pair(3, 1);
}

}  // namespace fbetti::oracle
