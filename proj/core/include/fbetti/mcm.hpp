#pragma once

// Indecomposable maximal Cohen-Macaulay modules of the three ring families:
// generator counts, ranks, total Betti numbers and graded Hilbert series.
//
//   scroll:d   M(l) = (+)_n S_{nd+l},  0 <= l < d   (M(0) = R)
//   scroll21   R, A = (x^2,xy), B = (x^2,xy,xz), C = (x^2,xy,y^2), D = Syz^1(B)
//   veronese2  R, A = canonical module, B = Syz^1(A)
//
// B and C of scroll21 share every numerical invariant; decompositions report
// them jointly under the tag BorC.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "fbetti/arith.hpp"
#include "fbetti/rings.hpp"

namespace fbetti {

enum class SummandTag { ScrollM, Free, A, B, C, D, BorC };

class SummandClass {
 public:
  /// M(l) of scroll:delta; throws std::invalid_argument unless 0 <= l < delta.
  static SummandClass scroll_m(const RingFamily& family, int l);
  /// The free module R (M(0) for scrolls).
  static SummandClass free(const RingFamily& family);
  /// Throws std::invalid_argument if the tag does not exist for the family.
  static SummandClass of(const RingFamily& family, SummandTag tag);
  /// Parses a report key ("M(2)", "R", "A", "B", "C", "BorC", "D").
  static SummandClass parse(const RingFamily& family, const std::string& key);

  const RingFamily& family() const { return family_; }
  SummandTag tag() const { return tag_; }
  /// l for ScrollM, 0 otherwise.
  int index() const { return index_; }
  bool is_free() const;

  int mu() const;
  int rank() const;

  /// Report key: "M(l)", "R", "A", "B", "C", "BorC", "D".
  std::string key() const;

  friend auto operator<=>(const SummandClass&, const SummandClass&) = default;

 private:
  SummandClass(RingFamily family, SummandTag tag, int index) : family_(family), tag_(tag), index_(index) {}
  RingFamily family_;
  SummandTag tag_;
  int index_;
};

/// All indecomposable classes of the family (for scroll21 B, C, D and the merged BorC).
std::vector<SummandClass> catalog(const RingFamily& family);

/// Classes that can occur as summands of R^{1/q} when gcd(p, torsion) = 1,
/// in report order. Every residue class module is isomorphic to exactly one.
std::vector<SummandClass> pushforward_summands(const RingFamily& family);

/// Total Betti number beta_i(class).
Integer betti(const SummandClass& cls, int i);

struct RecurrenceResidual {
  std::string name;
  Integer value;
};

/// Every Betti recurrence of the family that is valid at index i, evaluated
/// on the closed forms. A correct catalog returns all zeros.
std::vector<RecurrenceResidual> betti_recurrence_residual(const RingFamily& family, int i);

/// Graded Hilbert series. Scroll modules are graded by total (x, y)-degree;
/// veronese2 modules use the standard grading of R. Throws unsupported_error
/// for the scroll21 modules.
HilbertSeries module_hilbert_series(const SummandClass& cls);

/// One term c * x^a y^b e_m of an element of R^{l+1}; basis is 1-based.
struct SyzygyTerm {
  int coefficient;
  ExponentVector monomial;
  int basis;
};

struct SyzygyElement {
  SyzygyTerm positive;
  SyzygyTerm negative;
};

/// The d*l elements x^{d-k}y^k e_m - x^{d-k+1}y^{k-1} e_{m+1}
/// (1 <= k <= d, 1 <= m <= l) generating Syz^1(M(l)), where e_m maps to
/// x^{l-m+1} y^{m-1}. Throws std::invalid_argument unless 1 <= l < d.
std::vector<SyzygyElement> syzygy_generating_set_scroll(int delta, int l);

}  // namespace fbetti
