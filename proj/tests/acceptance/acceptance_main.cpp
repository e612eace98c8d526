// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <array>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "fbetti/invariants.hpp"
#include "fbetti/lattice.hpp"
#include "fbetti/mcm.hpp"
#include "fbetti/oracle.hpp"
#include "fbetti/pushforward.hpp"

using namespace fbetti;

namespace {

class Criterion {
 public:
  explicit Criterion(std::ostringstream& log) : log_(log) {}

  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (failures_ <= 10) log_ << "    failed: " << what << "\n";
    }
  }

  std::size_t checks() const { return checks_; }
  std::size_t failures() const { return failures_; }

 private:
  std::ostringstream& log_;
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
};

std::vector<RingFamily> scrolls(int lo, int hi) {
  std::vector<RingFamily> out;
  for (int d = lo; d <= hi; ++d) out.push_back(RingFamily::scroll(d));
  return out;
}

std::string q_tag(const RingFamily& f, std::int64_t q) { return f.designator() + " q=" + std::to_string(q); }

Rational q_inv4(std::int64_t q) { return Rational(4) / Rational(Integer(q)); }

// 1. Asymptotic invariant table, exact, i = 1..12, under one second.
void table_reproduction(Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  struct Row {
    RingFamily family;
    Rational s;
    Rational ehk;
    std::function<Rational(int)> beta;
  };
  std::vector<Row> rows;
  for (int d = 2; d <= 10; ++d) {
    rows.push_back({RingFamily::scroll(d), Rational(1, d), Rational(d + 1, 2),
                    [d](int i) { return Rational(Integer(d) * power(d - 1, i), 2); }});
  }
  rows.push_back({RingFamily::scroll21(), Rational(5, 12), Rational(7, 4),
                  [](int i) { return Rational(9, 4) * Rational(power(2, i - 1)); }});
  rows.push_back({RingFamily::veronese2(), Rational(1, 2), Rational(2),
                  [](int i) { return Rational(4) * Rational(power(3, i - 1)); }});
  for (const auto& row : rows) {
    try {
      const InvariantReport lim = limits(row.family);
      c.expect(lim.s == row.s, row.family.designator() + " s");
      c.expect(lim.ehk == row.ehk, row.family.designator() + " e_HK");
      c.expect(density_betti(row.family, 0) == row.ehk, row.family.designator() + " density e_HK");
      for (int i = 1; i <= 12; ++i) {
        c.expect(lim.fbetti(i) == row.beta(i), row.family.designator() + " beta_" + std::to_string(i));
        c.expect(density_betti(row.family, i) == row.beta(i), row.family.designator() + " density beta");
      }
    } catch (const std::exception& e) {
      c.expect(false, row.family.designator() + ": " + e.what());
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < 1.0, "runtime under one second");
}

// 2. Residue classes vs index sets for scrolls, p not dividing delta.
void route_agreement(Criterion& c) {
  for (const auto& f : scrolls(2, 5)) {
    for (std::int64_t q : {5, 7, 9, 25}) {
      const auto ctx = FrobeniusContext::from_q(q);
      if (f.delta() % ctx.p() == 0) continue;
      const auto classes = decompose(f, ctx, Route::ResidueClasses);
      const auto paper = decompose(f, ctx, Route::PaperIndexSets);
      c.expect(classes.multiplicities == paper.multiplicities, q_tag(f, q) + " multiplicities");
      Integer sum = 0;
      for (const auto& a : scroll_index_counts(f.delta(), ctx)) sum += a;
      c.expect(sum == Integer(q) * q, q_tag(f, q) + " sum a_l = q^2");
    }
  }
}

// 3. Counting formulas against enumeration.
void count_formulas(Criterion& c) {
  for (std::int64_t q = 1; q <= 27; ++q) {
    const Integer expected = (5 * Integer(q) * q * q + q) / 6;
    c.expect(count_halfbox3(q) == expected, "halfbox closed form q=" + std::to_string(q));
    c.expect(Integer(bf::halfbox3(q)) == expected, "halfbox enumeration q=" + std::to_string(q));
  }
  for (std::int64_t q = 1; q <= 31; ++q) {
    for (std::int64_t k = 0; k < q; ++k) {
      // area + boundary/2 + 1 of the region {i + j >= k} in [0, q-1]^2.
      const Rational pick = Rational((q - 1) * (q - 1)) - Rational(k * k, 2) + Rational(4 * q - k - 4, 2) + Rational(1);
      c.expect(count_pairs_sum_ge(q, k) == pick.num() && pick.is_integer(),
               "pairs q=" + std::to_string(q) + " k=" + std::to_string(k));
      c.expect(Integer(bf::pairs_sum_ge(q, k)) == pick.num(), "pairs enumeration");
    }
  }
  std::mt19937_64 rng(2718281828);
  std::uniform_int_distribution<std::int64_t> coord(0, 12);
  int polygons = 0;
  while (polygons < 100) {
    std::vector<bf::P2> pts(3 + rng() % 8);
    for (auto& p : pts) p = {coord(rng), coord(rng)};
    const auto hull = bf::convex_hull(pts);
    if (hull.size() < 3) continue;
    std::vector<LatticePoint> vertices;
    for (const auto& v : hull) vertices.push_back({v.x, v.y});
    c.expect(pick_count(LatticePolygon(vertices)) == bf::lattice_points_in_convex(hull), "random polygon");
    ++polygons;
  }
}

// 4. Betti recurrences for i <= 30.
void betti_recurrences(Criterion& c) {
  auto families = scrolls(2, 10);
  families.push_back(RingFamily::scroll21());
  families.push_back(RingFamily::veronese2());
  for (const auto& f : families) {
    for (int i = 0; i <= 30; ++i) {
      for (const auto& r : betti_recurrence_residual(f, i)) {
        c.expect(r.value == 0, f.designator() + " " + r.name + " i=" + std::to_string(i));
      }
    }
  }
}

// 5. Generator accounting.
void generator_accounting(Criterion& c) {
  auto families = scrolls(2, 5);
  families.push_back(RingFamily::scroll21());
  families.push_back(RingFamily::veronese2());
  for (const auto& f : families) {
    for (std::int64_t q : {3, 5, 9}) {
      const auto ctx = FrobeniusContext::from_q(q);
      if (!coprime_to_torsion(f, ctx)) continue;
      const Integer oracle_count = oracle::min_gens_pushforward(f, ctx);
      const auto dec = decompose(f, ctx, Route::ResidueClasses);
      c.expect(oracle_count == dec.total_generators(), q_tag(f, q) + " oracle = sum mult*mu");
      c.expect(oracle_count == fbetti_pushforward(f, ctx, 0), q_tag(f, q) + " oracle = beta_0");
    }
  }
  const FrobeniusContext q3(3, 1);
  c.expect(oracle::min_gens_pushforward(RingFamily::scroll(2), q3) == 13, "scroll:2 q=3 -> 13");
  c.expect(oracle::min_gens_pushforward(RingFamily::veronese2(), q3) == 53, "veronese2 q=3 -> 53");
  c.expect(oracle::min_gens_pushforward(RingFamily::scroll21(), q3) == 45, "scroll21 q=3 -> 45");
}

// 6. Colength within 4/q of e_HK.
void colength(Criterion& c) {
  auto families = scrolls(2, 5);
  families.push_back(RingFamily::scroll21());
  families.push_back(RingFamily::veronese2());
  for (const auto& f : families) {
    for (std::int64_t q : {3, 5, 9, 27}) {
      const auto ctx = FrobeniusContext::from_q(q);
      const auto lam = oracle::lambda_frobenius_quotient(f, ctx);
      c.expect(abs(lam.normalized - closed_form_ehk(f)) <= q_inv4(q), q_tag(f, q));
    }
  }
  c.expect(oracle::lambda_frobenius_quotient(RingFamily::scroll(2), FrobeniusContext(3, 1)).lambda == 13,
           "scroll:2 q=3 lambda = 13");
}

// 7. Finite-q estimates within their envelopes.
void finite_q_convergence(Criterion& c) {
  const std::vector<std::int64_t> base = {3, 5, 9, 27, 81};
  for (const auto& f : scrolls(2, 10)) {
    std::vector<std::int64_t> qs;
    for (std::int64_t q : base) {
      if (q > f.delta()) qs.push_back(q);
    }
    const auto report = convergence_check(f, qs);
    c.expect(report.passed() && !report.checks.empty(), f.designator() + "\n" + report.describe_failures());
  }
  const auto s21 = convergence_check(RingFamily::scroll21(), base);
  c.expect(s21.passed(), "scroll21\n" + s21.describe_failures());
  std::vector<std::int64_t> v_qs = base;
  for (std::int64_t q : {243, 729, 2187}) v_qs.push_back(q);
  const auto v2 = convergence_check(RingFamily::veronese2(), v_qs);
  c.expect(v2.passed(), "veronese2\n" + v2.describe_failures());
  std::size_t witnesses = 0;
  for (const auto* report : {&s21, &v2}) {
    for (const auto& chk : report->checks) witnesses += chk.quantity == "canonical-vs-free" ? 1 : 0;
  }
  c.expect(witnesses == base.size() + v_qs.size(), "canonical-vs-free witness at every q");
}

// 8. Hilbert-series identities and graded dimensions.
void hilbert_identities(Criterion& c) {
  const HilbertSeries ring(Polynomial{1, 3}, 3);
  const HilbertSeries canonical = series_dualize(ring);
  c.expect(canonical == HilbertSeries(Polynomial{0, 0, 3, 1}, 3), "H(A) = t^2(3+t)/(1-t)^3");
  const HilbertSeries syz = Polynomial{0, 0, 3} * ring - canonical;
  c.expect(syz == HilbertSeries(Polynomial{0, 0, 0, 8}, 3), "H(B) = 8t^3/(1-t)^3");
  c.expect(oracle::verify_veronese_sequences(), "veronese2 sequences");

  const FrobeniusContext q5(5, 1);
  for (int d = 2; d <= 4; ++d) {
    for (int l = 0; l < d; ++l) {
      for (const auto& ij : scroll_index_set(d, q5, l)) {
        const auto dims = scroll_summand_dimensions(d, q5, l, ij, 8);
        bool ok = dims.size() == 8;
        for (int k = 0; k < 8 && ok; ++k) ok = dims[k] == static_cast<std::int64_t>(k) * d + l + 1;
        c.expect(ok, "N^l dimensions d=" + std::to_string(d) + " l=" + std::to_string(l));
      }
    }
  }
  for (int d = 2; d <= 6; ++d) {
    for (int l = 1; l < d; ++l) {
      c.expect(oracle::verify_scroll_syzygy(d, l), "syzygy d=" + std::to_string(d) + " l=" + std::to_string(l));
      const auto dims = oracle::scroll_syzygy_span_dimensions(d, l, 4);
      for (int k = 0; k < 4; ++k) c.expect(dims[k] == l * (k + 1) * d, "syzygy span dimension");
    }
  }
}

// 9. Boundary gap of the scroll21 index sets at q = 3.
void boundary_gap(Criterion& c) {
  const auto s21 = RingFamily::scroll21();
  const FrobeniusContext q3(3, 1);
  const auto p = scroll21_index_counts(q3);
  c.expect(p.p1 + p.p2 + p.p3 == 26, "#P(1)+#P(2)+#P(3) = 26");
  const auto dec = decompose(s21, q3, Route::ResidueClasses);
  Integer classes = 0;
  for (const auto& [cls, m] : dec.multiplicities) {
    classes += m;
    c.expect(cls.rank() == 1, "rank-one summand " + cls.key());
  }
  c.expect(classes == 27 && dec.total_rank() == 27, "27 rank-one classes");
  const auto gap = class_minimal_generators(s21, q3, {0, 0, 2});
  c.expect(gap.mu() == 3, "class (0,0,2) has mu = 3");
  c.expect(gap.min_generators == std::vector<ExponentVector>{{0, 6, 2}, {3, 3, 2}, {6, 0, 2}},
           "class (0,0,2) generators");
  for (std::int64_t q : {3, 5, 9, 27, 81}) {
    const auto ctx = FrobeniusContext::from_q(q);
    const auto d = decompose(s21, ctx, Route::ResidueClasses);
    const Rational norm(ctx.normalizer(s21));
    for (const auto& [cls, limit] : asymptotic_densities(s21)) {
      c.expect(abs(Rational(d.multiplicity(cls)) / norm - limit) <= q_inv4(q), q_tag(s21, q) + " " + cls.key());
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
      {"asymptotic invariant table (exact)", table_reproduction},
      {"route agreement for scrolls (exact)", route_agreement},
      {"count formulas vs enumeration (exact)", count_formulas},
      {"Betti recurrences, i <= 30 (exact)", betti_recurrences},
      {"generator accounting (exact)", generator_accounting},
      {"colength within 4/q of e_HK", colength},
      {"finite-q estimates within 4/q envelopes", finite_q_convergence},
      {"Hilbert-series identities (exact)", hilbert_identities},
      {"scroll21 boundary gap at q = 3", boundary_gap},
  };
  int failed = 0;
  const auto suite_start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::ostringstream log;
    Criterion c(log);
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = c.failures() == 0 && c.checks() > 0;
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ["
              << c.checks() - c.failures() << "/" << c.checks() << " checks, " << secs << " s]\n"
              << log.str();
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start).count();
  std::cout << (failed ? "FAIL" : "PASS") << " acceptance: " << criteria.size() - failed << "/" << criteria.size()
            << " criteria in " << total << " s\n";
  return failed ? 1 : 0;
}
