#include "fbetti/mcm.hpp"

#include <stdexcept>

#include "fbetti/errors.hpp"

namespace fbetti {

namespace {

bool tag_exists(const RingFamily& family, SummandTag tag) {
  switch (family.kind()) {
    case FamilyKind::ScrollDelta:
      return tag == SummandTag::ScrollM;
    case FamilyKind::Scroll21:
      return tag != SummandTag::ScrollM;
    case FamilyKind::Veronese2:
      return tag == SummandTag::Free || tag == SummandTag::A || tag == SummandTag::B;
  }
  return false;
}

Integer pow_int(long base, int exponent) { return power(Integer(base), static_cast<unsigned long>(exponent)); }

}  // namespace

SummandClass SummandClass::scroll_m(const RingFamily& family, int l) {
  if (family.kind() != FamilyKind::ScrollDelta) throw std::invalid_argument("M(l) exists only for scroll:delta");
  if (l < 0 || l >= family.delta()) throw std::invalid_argument("M(l) requires 0 <= l < delta");
  return SummandClass(family, SummandTag::ScrollM, l);
}

SummandClass SummandClass::free(const RingFamily& family) {
  if (family.kind() == FamilyKind::ScrollDelta) return scroll_m(family, 0);
  return SummandClass(family, SummandTag::Free, 0);
}

SummandClass SummandClass::of(const RingFamily& family, SummandTag tag) {
  if (tag == SummandTag::ScrollM) throw std::invalid_argument("use SummandClass::scroll_m for M(l)");
  if (!tag_exists(family, tag)) throw std::invalid_argument("summand class not defined for " + family.designator());
  return SummandClass(family, tag, 0);
}

SummandClass SummandClass::parse(const RingFamily& family, const std::string& key) {
  if (key.size() > 3 && key.rfind("M(", 0) == 0 && key.back() == ')') {
    return scroll_m(family, std::stoi(key.substr(2, key.size() - 3)));
  }
  if (key == "R") return free(family);
  if (key == "A") return of(family, SummandTag::A);
  if (key == "B") return of(family, SummandTag::B);
  if (key == "C") return of(family, SummandTag::C);
  if (key == "D") return of(family, SummandTag::D);
  if (key == "BorC") return of(family, SummandTag::BorC);
  throw std::invalid_argument("unknown summand class key '" + key + "'");
}

bool SummandClass::is_free() const {
  return tag_ == SummandTag::Free || (tag_ == SummandTag::ScrollM && index_ == 0);
}

int SummandClass::mu() const {
  switch (tag_) {
    case SummandTag::ScrollM: return index_ + 1;
    case SummandTag::Free: return 1;
    case SummandTag::A: return family_.kind() == FamilyKind::Scroll21 ? 2 : 3;
    case SummandTag::B: return family_.kind() == FamilyKind::Scroll21 ? 3 : 8;
    case SummandTag::C: return 3;
    case SummandTag::BorC: return 3;
    case SummandTag::D: return 6;
  }
  return 0;
}

int SummandClass::rank() const {
  // rank D = 2 from 0 -> R -> A^2 + B -> D -> 0; rank B = 2 for veronese2
  // from 0 -> B -> R^3 -> A -> 0.
  if (tag_ == SummandTag::D) return 2;
  if (tag_ == SummandTag::B && family_.kind() == FamilyKind::Veronese2) return 2;
  return 1;
}

std::string SummandClass::key() const {
  switch (tag_) {
    case SummandTag::ScrollM: return "M(" + std::to_string(index_) + ")";
    case SummandTag::Free: return "R";
    case SummandTag::A: return "A";
    case SummandTag::B: return "B";
    case SummandTag::C: return "C";
    case SummandTag::BorC: return "BorC";
    case SummandTag::D: return "D";
  }
  return {};
}

std::vector<SummandClass> catalog(const RingFamily& family) {
  std::vector<SummandClass> out;
  switch (family.kind()) {
    case FamilyKind::ScrollDelta:
      for (int l = 0; l < family.delta(); ++l) out.push_back(SummandClass::scroll_m(family, l));
      break;
    case FamilyKind::Scroll21:
      for (auto t : {SummandTag::Free, SummandTag::A, SummandTag::B, SummandTag::C, SummandTag::D, SummandTag::BorC}) {
        out.push_back(SummandClass::of(family, t));
      }
      break;
    case FamilyKind::Veronese2:
      for (auto t : {SummandTag::Free, SummandTag::A, SummandTag::B}) out.push_back(SummandClass::of(family, t));
      break;
  }
  return out;
}

std::vector<SummandClass> pushforward_summands(const RingFamily& family) {
  switch (family.kind()) {
    case FamilyKind::ScrollDelta:
      return catalog(family);
    case FamilyKind::Scroll21:
      return {SummandClass::free(family), SummandClass::of(family, SummandTag::A),
              SummandClass::of(family, SummandTag::BorC)};
    case FamilyKind::Veronese2:
      return {SummandClass::free(family), SummandClass::of(family, SummandTag::A)};
  }
  return {};
}

Integer betti(const SummandClass& cls, int i) {
  if (i < 0) throw std::invalid_argument("betti: negative homological degree");
  if (cls.is_free()) return i == 0 ? 1 : 0;
  const bool scroll21 = cls.family().kind() == FamilyKind::Scroll21;
  switch (cls.tag()) {
    case SummandTag::ScrollM: {
      const long d = cls.family().delta();
      const long l = cls.index();
      if (i == 0) return l + 1;
      return Integer(d) * pow_int(d - 1, i - 1) * l;
    }
    case SummandTag::A:
      if (scroll21) return i == 0 ? Integer(2) : Integer(3) * pow_int(2, i - 1);
      return i == 0 ? Integer(3) : Integer(8) * pow_int(3, i - 1);
    case SummandTag::B:
      return scroll21 ? Integer(3) * pow_int(2, i) : Integer(8) * pow_int(3, i);
    case SummandTag::C:
    case SummandTag::BorC:
      return Integer(3) * pow_int(2, i);
    case SummandTag::D:
      return Integer(3) * pow_int(2, i + 1);
    case SummandTag::Free:
      break;
  }
  return 0;
}

std::vector<RecurrenceResidual> betti_recurrence_residual(const RingFamily& family, int i) {
  if (i < 0) throw std::invalid_argument("betti_recurrence_residual: negative index");
  std::vector<RecurrenceResidual> out;
  switch (family.kind()) {
    case FamilyKind::ScrollDelta: {
      // beta_{i+1}(M(l)) = l * beta_i(M(d-1)) from 0 -> M(d-1)^l -> R^{l+1} -> M(l) -> 0.
      const int d = family.delta();
      const auto top = SummandClass::scroll_m(family, d - 1);
      for (int l = 1; l < d; ++l) {
        const auto m = SummandClass::scroll_m(family, l);
        out.push_back({"beta_{i+1}(M(" + std::to_string(l) + ")) - " + std::to_string(l) + " beta_i(M(d-1))",
                       betti(m, i + 1) - l * betti(top, i)});
      }
      break;
    }
    case FamilyKind::Scroll21: {
      const auto a = SummandClass::of(family, SummandTag::A);
      const auto b = SummandClass::of(family, SummandTag::B);
      const auto c = SummandClass::of(family, SummandTag::C);
      const auto d = SummandClass::of(family, SummandTag::D);
      out.push_back({"beta_{i+1}(B) - beta_i(D)", betti(b, i + 1) - betti(d, i)});
      out.push_back({"beta_{i+1}(A) - beta_i(B)", betti(a, i + 1) - betti(b, i)});
      if (i >= 1) {
        out.push_back({"2 beta_i(A) - beta_i(C)", 2 * betti(a, i) - betti(c, i)});
        out.push_back({"2 beta_i(A) + beta_i(B) - beta_i(D)", 2 * betti(a, i) + betti(b, i) - betti(d, i)});
      }
      if (i >= 2) {
        out.push_back({"beta_i(D) - 2 beta_{i-2}(D) - beta_{i-1}(D)",
                       betti(d, i) - 2 * betti(d, i - 2) - betti(d, i - 1)});
      }
      out.push_back({"beta_i(D) - 2 beta_i(B)", betti(d, i) - 2 * betti(b, i)});
      break;
    }
    case FamilyKind::Veronese2: {
      const auto a = SummandClass::of(family, SummandTag::A);
      const auto b = SummandClass::of(family, SummandTag::B);
      out.push_back({"beta_{i+1}(A) - beta_i(B)", betti(a, i + 1) - betti(b, i)});
      if (i == 1) {
        out.push_back({"3 beta_1(A) - beta_1(B) + 1 - 3 beta_0(A) + beta_0(B)",
                       3 * betti(a, 1) - betti(b, 1) + 1 - 3 * betti(a, 0) + betti(b, 0)});
      }
      if (i >= 2) out.push_back({"3 beta_i(A) - beta_i(B)", 3 * betti(a, i) - betti(b, i)});
      break;
    }
  }
  return out;
}

HilbertSeries module_hilbert_series(const SummandClass& cls) {
  const RingFamily& family = cls.family();
  switch (family.kind()) {
    case FamilyKind::ScrollDelta: {
      // sum_k (k d + l + 1) t^{k d + l} = t^l ((l+1) + (d-l-1) t^d) / (1 - t^d)^2.
      const long d = family.delta();
      const long l = cls.index();
      Polynomial num = Polynomial::monomial(l + 1, l) + Polynomial::monomial(d - l - 1, l + d);
      return HilbertSeries(std::move(num), 2, d);
    }
    case FamilyKind::Veronese2: {
      const HilbertSeries ring(Polynomial{1, 3}, 3);
      if (cls.tag() == SummandTag::Free) return ring;
      const HilbertSeries canonical = series_dualize(ring);
      if (cls.tag() == SummandTag::A) return canonical;
      // 0 -> B -> R(-2)^3 -> A -> 0.
      return Polynomial::monomial(3, 2) * ring - canonical;
    }
    case FamilyKind::Scroll21:
      break;
  }
  throw unsupported_error("Hilbert series of " + cls.key() + " over " + family.designator() + " is not provided");
}

std::vector<SyzygyElement> syzygy_generating_set_scroll(int delta, int l) {
  if (delta < 2) throw std::invalid_argument("syzygy_generating_set_scroll: delta must be at least 2");
  if (l < 1 || l >= delta) {
    throw std::invalid_argument("syzygy_generating_set_scroll: need 1 <= l <= delta-1 (M(0) is free)");
  }
  std::vector<SyzygyElement> out;
  out.reserve(static_cast<std::size_t>(delta) * static_cast<std::size_t>(l));
  for (int m = 1; m <= l; ++m) {
    for (int k = 1; k <= delta; ++k) {
      out.push_back({{1, ExponentVector{delta - k, k}, m}, {-1, ExponentVector{delta - k + 1, k - 1}, m + 1}});
    }
  }
  return out;
}

}  // namespace fbetti
