#include "cli/commands.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "fbetti/errors.hpp"
#include "fbetti/invariants.hpp"
#include "fbetti/lattice.hpp"
#include "fbetti/mcm.hpp"
#include "fbetti/oracle.hpp"
#include "fbetti/pushforward.hpp"
#include "fbetti/rings.hpp"

namespace fbetti::cli {

namespace {

const std::vector<std::string> kSuiteOrder = {"counts", "iso", "relations", "syzygy", "colength", "convergence", "betti"};

// Colength enumeration is skipped above this many lattice points.
constexpr std::int64_t kMaxColengthBox = std::int64_t{1} << 27;

RingFamily parse_family(const std::string& ring) {
  try {
    return RingFamily::parse(ring);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
}

FrobeniusContext legal_context(const RingFamily& family, const std::function<FrobeniusContext()>& make) {
  try {
    FrobeniusContext ctx = make();
    require_legal_characteristic(family, ctx);
    return ctx;
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
}

RouteTable route_table(const Decomposition& d) {
  RouteTable t{route_name(d.route), {}};
  for (const auto& [cls, m] : d.multiplicities) t.multiplicities[cls.key()] = m;
  return t;
}

std::vector<RouteDiff> diff_routes(const Decomposition& paper, const Decomposition& classes) {
  std::vector<RouteDiff> out;
  for (const auto& cls : pushforward_summands(paper.family)) {
    const Integer a = paper.multiplicity(cls);
    const Integer b = classes.multiplicity(cls);
    if (a != b) out.push_back({cls.key(), a, b});
  }
  return out;
}

std::string q_suffix(std::int64_t q) { return " at q=" + std::to_string(q); }

class Verifier {
 public:
  Verifier(RingFamily family, ReportRecord& record) : family_(family), record_(record) {}

  void run(const std::string& suite, const std::vector<FrobeniusContext>& contexts) {
    if (suite == "counts") {
      for (const auto& ctx : contexts) guarded(suite, ctx.q(), [&] { counts(ctx); });
    } else if (suite == "iso") {
      for (const auto& ctx : contexts) guarded(suite, ctx.q(), [&] { iso(ctx); });
    } else if (suite == "relations") {
      for (const auto& ctx : contexts) guarded(suite, ctx.q(), [&] { relations(ctx); });
    } else if (suite == "syzygy") {
      guarded(suite, 0, [&] { syzygy(); });
    } else if (suite == "colength") {
      for (const auto& ctx : contexts) guarded(suite, ctx.q(), [&] { colength(ctx); });
    } else if (suite == "convergence") {
      guarded(suite, 0, [&] { convergence(contexts); });
    } else if (suite == "betti") {
      guarded(suite, 0, [&] { betti_suite(); });
    }
  }

 private:
  void check(const std::string& suite, const std::string& name, std::int64_t q, bool passed,
             std::string detail = {}) {
    record_.checks.push_back({suite, name, q, passed, std::move(detail)});
  }

  void note(const std::string& text) {
    if (std::find(record_.notes.begin(), record_.notes.end(), text) == record_.notes.end()) {
      record_.notes.push_back(text);
    }
  }

  // Any exception inside a suite becomes a failed check.
  void guarded(const std::string& suite, std::int64_t q, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(suite, "exception", q, false, e.what());
    }
  }

  void counts(const FrobeniusContext& ctx) {
    const std::int64_t q = ctx.q();
    switch (family_.kind()) {
      case FamilyKind::ScrollDelta: {
        const int delta = family_.delta();
        if (q <= delta) {
          note("counts: index sets P(l) need q > delta; skipped" + q_suffix(q));
          break;
        }
        const auto a = scroll_index_counts(delta, ctx);
        Integer total = 0;
        for (int l = 0; l < delta; ++l) {
          const Integer brute = enumerate_congruence_box({l * q, (l + 1) * q}, {0, q}, delta, 0);
          check("counts", "#P(" + std::to_string(l) + ")", q, a[l] == brute,
                to_string(a[l]) + " vs enumeration " + to_string(brute));
          total += a[l];
        }
        check("counts", "sum a_l = q^2", q, total == Integer(q) * Integer(q), to_string(total));
        break;
      }
      case FamilyKind::Scroll21: {
        check("counts", "halfbox3", q, count_halfbox3(q) == enumerate_halfbox3(q), to_string(count_halfbox3(q)));
        std::string reason;
        if (!route_available(family_, ctx, Route::PaperIndexSets, &reason)) {
          note("counts: " + reason + "; P-set counts skipped" + q_suffix(q));
          break;
        }
        const auto c = scroll21_index_counts(ctx);
        Integer brute[4] = {0, 0, 0, 0};
        for (std::int64_t i = 0; i < 2 * q; ++i) {
          for (std::int64_t j = 0; j < q; ++j) {
            for (std::int64_t k = 0; k < q; ++k) {
              if (auto set = scroll21_index_set(ctx, ExponentVector{i, j, k})) brute[*set] += 1;
            }
          }
        }
        check("counts", "#P(1)", q, c.p1 == brute[1], to_string(c.p1) + " vs enumeration " + to_string(brute[1]));
        check("counts", "#P(2)", q, c.p2 == brute[2], to_string(c.p2) + " vs enumeration " + to_string(brute[2]));
        check("counts", "#P(3)", q, c.p3 == brute[3], to_string(c.p3) + " vs enumeration " + to_string(brute[3]));
        break;
      }
      case FamilyKind::Veronese2: {
        const auto c = veronese_class_counts(ctx);
        check("counts", "free = parity-0 classes", q, c.free == enumerate_parity_box3(q, 0), to_string(c.free));
        check("counts", "canonical = parity-1 classes", q, c.canonical == enumerate_parity_box3(q, 1),
              to_string(c.canonical));
        break;
      }
    }
    if (route_available(family_, ctx, Route::PaperIndexSets) && route_available(family_, ctx, Route::ResidueClasses)) {
      const auto diff = diff_routes(decompose(family_, ctx, Route::PaperIndexSets),
                                    decompose(family_, ctx, Route::ResidueClasses));
      if (family_.kind() == FamilyKind::Scroll21) {
        for (const auto& d : diff) {
          note("counts: q=" + std::to_string(q) + " " + d.key + " index sets " + to_string(d.paper) +
               ", residue classes " + to_string(d.classes));
        }
      } else {
        check("counts", "routes agree", q, diff.empty(), diff.empty() ? "" : diff.front().key + " differs");
      }
    }
  }

  void iso(const FrobeniusContext& ctx) {
    const std::int64_t q = ctx.q();
    switch (family_.kind()) {
      case FamilyKind::ScrollDelta: {
        const int delta = family_.delta();
        if (q <= delta) {
          note("iso: index sets P(l) need q > delta; skipped" + q_suffix(q));
          return;
        }
        for (int l = 0; l < delta; ++l) {
          std::size_t good = 0;
          const auto set = scroll_index_set(delta, ctx, l);
          for (const auto& ij : set) good += verify_summand_iso_scroll(delta, ctx, l, ij, 8) ? 1 : 0;
          check("iso", "N^" + std::to_string(l) + " ~ M(" + std::to_string(l) + ")", q, good == set.size(),
                std::to_string(good) + "/" + std::to_string(set.size()) + " index pairs");
        }
        return;
      }
      case FamilyKind::Veronese2:
        check("iso", "Hilbert series of R, A, B", q, oracle::verify_veronese_sequences());
        return;
      case FamilyKind::Scroll21:
        note("iso: scroll21 summands are checked by the relations suite");
        return;
    }
  }

  void relations(const FrobeniusContext& ctx) {
    const std::int64_t q = ctx.q();
    if (family_.kind() != FamilyKind::Scroll21) {
      note("relations: applies to scroll21 only");
      return;
    }
    if (!route_available(family_, ctx, Route::PaperIndexSets)) {
      note("relations: index sets need p odd and q > 2; skipped" + q_suffix(q));
      return;
    }
    std::size_t total[4] = {0, 0, 0, 0};
    std::size_t good[4] = {0, 0, 0, 0};
    for (std::int64_t i = q; i < 2 * q; ++i) {
      for (std::int64_t j = 0; j < q; ++j) {
        for (std::int64_t k = 0; k < q; ++k) {
          const ExponentVector ijk{i, j, k};
          const auto set = scroll21_index_set(ctx, ijk);
          if (!set || *set == 1) continue;
          ++total[*set];
          good[*set] += verify_relations_scroll21(ctx, ijk) ? 1 : 0;
        }
      }
    }
    for (int s : {2, 3}) {
      check("relations", "P(" + std::to_string(s) + ") relations", q, good[s] == total[s],
            std::to_string(good[s]) + "/" + std::to_string(total[s]) + " triples");
    }
  }

  void syzygy() {
    switch (family_.kind()) {
      case FamilyKind::ScrollDelta: {
        const int delta = family_.delta();
        for (int l = 1; l < delta; ++l) {
          check("syzygy", "Syz^1(M(" + std::to_string(l) + "))", 0, oracle::verify_scroll_syzygy(delta, l),
                std::to_string(delta * l) + " generators");
        }
        record_.counts["syzygy_sets"] = delta - 1;
        return;
      }
      case FamilyKind::Veronese2:
        check("syzygy", "exact sequences for A and B", 0, oracle::verify_veronese_sequences());
        record_.counts["syzygy_sets"] = 2;
        return;
      case FamilyKind::Scroll21:
        note("syzygy: scroll21 syzygies are covered by the betti suite");
        return;
    }
  }

  void colength(const FrobeniusContext& ctx) {
    const std::int64_t q = ctx.q();
    Integer box = power(Integer(2 * q * max_generator_coordinate(family_)), family_.ambient_vars());
    if (box > kMaxColengthBox) {
      note("colength: enumeration box too large; skipped" + q_suffix(q));
      return;
    }
    const auto lam = oracle::lambda_frobenius_quotient(family_, ctx);
    const Rational ehk = closed_form_ehk(family_);
    const Rational error = abs(lam.normalized - ehk);
    const Rational bound = Rational(4) / Rational(Integer(q));
    check("colength", "|lambda/q^d - e_HK| <= 4/q", q, error <= bound,
          "lambda=" + to_string(lam.lambda) + " error=" + error.to_string());
    if (route_available(family_, ctx, Route::ResidueClasses)) {
      const Integer gens = oracle::min_gens_pushforward(family_, ctx);
      const auto d = decompose(family_, ctx, Route::ResidueClasses);
      check("colength", "lambda = min generators of R^{1/q}", q, gens == lam.lambda,
            to_string(gens) + " generators");
      check("colength", "sum mult*mu = beta_0", q,
            d.total_generators() == gens && fbetti_pushforward(d, 0) == gens, to_string(d.total_generators()));
    }
  }

  void convergence(const std::vector<FrobeniusContext>& contexts) {
    std::vector<std::int64_t> qs;
    for (const auto& ctx : contexts) qs.push_back(ctx.q());
    const auto report = convergence_check(family_, qs);
    for (const auto& f : report.failures) check("convergence", "unavailable", 0, false, f);
    for (const auto& c : report.checks) {
      check("convergence", c.quantity, c.q, c.passed,
            "error " + c.error.to_string() + " bound " + c.bound.to_string());
    }
  }

  void betti_suite() {
    bool ok = true;
    std::string first_bad;
    for (int i = 0; i <= 30; ++i) {
      for (const auto& r : betti_recurrence_residual(family_, i)) {
        if (r.value != 0 && ok) {
          ok = false;
          first_bad = r.name + " at i=" + std::to_string(i);
        }
      }
    }
    check("betti", "recurrences hold for i <= 30", 0, ok, first_bad);
    limits(family_);
    check("betti", "density * Betti = closed forms for i <= 12", 0, true);
  }

  RingFamily family_;
  ReportRecord& record_;
};

}  // namespace

std::string version_string() { return FBETTI_VERSION; }

ReportRecord cmd_table1(int max_delta, int max_i) {
  if (max_delta < 2) throw usage_error("--max-delta must be at least 2");
  if (max_i < 1) throw usage_error("--max-i must be at least 1");
  ReportRecord r;
  r.version = version_string();
  r.command = "table1";
  std::vector<RingFamily> families;
  for (int d = 2; d <= max_delta; ++d) families.push_back(RingFamily::scroll(d));
  families.push_back(RingFamily::scroll21());
  families.push_back(RingFamily::veronese2());
  for (const auto& family : families) {
    const InvariantReport lim = limits(family);
    TableRow row{family.designator(), lim.s, lim.ehk, fbetti_formula(family), {}};
    for (int i = 1; i <= max_i; ++i) row.fbetti.push_back(lim.fbetti(i));
    r.table.push_back(std::move(row));
  }
  return r;
}

ReportRecord cmd_decompose(const std::string& ring, std::int64_t p, int e, const std::string& route, int max_i) {
  if (max_i < 0) throw usage_error("--max-i must be nonnegative");
  const RingFamily family = parse_family(ring);
  const FrobeniusContext ctx = legal_context(family, [&] { return FrobeniusContext(p, e); });

  std::vector<Route> routes;
  if (route == "both") {
    std::string paper_reason;
    std::string class_reason;
    if (route_available(family, ctx, Route::PaperIndexSets, &paper_reason)) routes.push_back(Route::PaperIndexSets);
    if (route_available(family, ctx, Route::ResidueClasses, &class_reason)) routes.push_back(Route::ResidueClasses);
    if (routes.empty()) {
      throw usage_error("no decomposition route for " + ring + " at q=" + std::to_string(ctx.q()) + ": " +
                        paper_reason + "; " + class_reason);
    }
  } else {
    Route chosen;
    try {
      chosen = parse_route(route);
    } catch (const std::invalid_argument& ex) {
      throw usage_error(ex.what());
    }
    std::string reason;
    if (!route_available(family, ctx, chosen, &reason)) {
      throw usage_error("route '" + route + "' unavailable for " + ring + " at q=" + std::to_string(ctx.q()) + ": " +
                        reason);
    }
    routes.push_back(chosen);
  }

  ReportRecord r;
  r.version = version_string();
  r.command = "decompose";
  r.ring = family.designator();
  r.p = ctx.p();
  r.e = ctx.e();
  r.q = ctx.q();

  std::vector<Decomposition> decompositions;
  for (Route rt : routes) decompositions.push_back(decompose(family, ctx, rt));
  for (const auto& d : decompositions) r.decompositions.push_back(route_table(d));
  if (decompositions.size() == 2) r.route_diff = diff_routes(decompositions[0], decompositions[1]);
  for (Route rt : {Route::PaperIndexSets, Route::ResidueClasses}) {
    std::string reason;
    if (std::find(routes.begin(), routes.end(), rt) == routes.end() && route == "both" &&
        !route_available(family, ctx, rt, &reason)) {
      r.notes.push_back("route '" + route_name(rt) + "' unavailable: " + reason);
    }
  }

  // Estimates come from the residue-class route when it ran.
  const Decomposition& primary = decompositions.back();
  const FiniteQEstimate est = finite_q_estimates(primary, max_i);
  const InvariantReport lim = limits(family);
  r.invariants["s_est"] = est.s_est;
  r.invariants["ehk_est"] = est.ehk_est;
  r.invariants["s"] = lim.s;
  r.invariants["ehk"] = lim.ehk;
  for (int i = 1; i <= max_i; ++i) {
    r.invariants["fbetti_" + std::to_string(i) + "_est"] = est.fbetti(i);
    r.invariants["fbetti_" + std::to_string(i)] = lim.fbetti(i);
  }
  if (est.canonical_est) r.invariants["canonical_est"] = *est.canonical_est;

  r.counts["classes"] = ctx.normalizer(family);
  r.counts["total_rank"] = primary.total_rank();
  r.counts["total_generators"] = primary.total_generators();
  for (int i = 0; i <= max_i; ++i) r.counts["betti_" + std::to_string(i)] = fbetti_pushforward(primary, i);
  r.notes.push_back("estimates use route '" + route_name(primary.route) + "'");
  return r;
}

std::vector<std::string> canonical_suites(const std::vector<std::string>& names) {
  std::vector<std::string> wanted;
  for (const auto& raw : names) {
    const std::string name = raw == "syzygies" ? "syzygy" : raw;
    if (name == "all") return kSuiteOrder;
    if (std::find(kSuiteOrder.begin(), kSuiteOrder.end(), name) == kSuiteOrder.end()) {
      throw usage_error("unknown suite '" + raw +
                        "' (expected counts, iso, relations, syzygy, colength, convergence, betti or all)");
    }
    wanted.push_back(name);
  }
  if (wanted.empty()) return kSuiteOrder;
  std::vector<std::string> out;
  for (const auto& s : kSuiteOrder) {
    if (std::find(wanted.begin(), wanted.end(), s) != wanted.end()) out.push_back(s);
  }
  return out;
}

ReportRecord cmd_verify(const std::string& ring, const std::vector<std::int64_t>& q_list,
                        const std::vector<std::string>& suites) {
  const RingFamily family = parse_family(ring);
  const auto chosen = canonical_suites(suites);
  if (q_list.empty()) throw usage_error("--q needs at least one prime power");
  std::vector<FrobeniusContext> contexts;
  for (std::int64_t q : q_list) contexts.push_back(legal_context(family, [&] { return FrobeniusContext::from_q(q); }));

  ReportRecord r;
  r.version = version_string();
  r.command = "verify";
  r.ring = family.designator();
  r.q_list = q_list;
  r.suites = chosen;
  Verifier verifier(family, r);
  for (const auto& suite : chosen) verifier.run(suite, contexts);
  if (r.checks.empty()) r.notes.push_back("no checks apply to the selected suites");
  return r;
}

}  // namespace fbetti::cli
